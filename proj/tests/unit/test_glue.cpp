#include "doctest.h"
#include "support/support.hpp"

using namespace annet;
using namespace annet::testing;

TEST_CASE("glueing over an empty dowel is a disjoint union") {
  const Network a = Network::identity(2, 1), b = csan_to_network(build_rule90_ring(3));
  const GlueResult g = glue_networks(a, b, Dowel{});
  CHECK(g.net.size() == 4);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const Configuration z = nth_config(i, 2, 4);
    Configuration za(1), zb(3);
    za[0] = z[g.map1[0]];
    for (std::size_t v = 0; v < 3; ++v) zb[v] = z[g.map2[v]];
    const Configuration fz = step(g.net, z);
    CHECK(fz[g.map1[0]] == step(a, za)[0]);
    for (std::size_t v = 0; v < 3; ++v) CHECK(fz[g.map2[v]] == step(b, zb)[v]);
  }
}

TEST_CASE("glued local maps follow the side that owns each node") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const Network f1 = random_network(rng, 2, 3, 3), f2 = random_network(rng, 2, 3, 3);
    const Dowel d = random_dowel(rng, 3, 3, 1 + k % 3);
    const GlueResult g = glue_networks(f1, f2, d);
    CHECK(g.net.size() == 6 - d.size());
    // Nodes are numbered C1, C2, then the rest of V1, then the rest of V2.
    std::size_t next = 0;
    for (DowelSide s : {DowelSide::C1, DowelSide::C2})
      for (std::size_t c = 0; c < d.size(); ++c)
        if (d.side[c] == s) CHECK(g.map1[d.phi1[c]] == next++);
    for (std::uint64_t i = 0; i < power(2, g.net.size()); ++i) {
      const Configuration z = nth_config(i, 2, g.net.size());
      Configuration x1(3), x2(3);
      for (std::size_t v = 0; v < 3; ++v) {
        x1[v] = z[g.map1[v]];
        x2[v] = z[g.map2[v]];
      }
      const Configuration fz = naive_iterate(g.net, z, 1), f1x = naive_iterate(f1, x1, 1), f2x = naive_iterate(f2, x2, 1);
      std::vector<int> owner(g.net.size(), 0);
      for (std::size_t v = 0; v < 3; ++v) owner[g.map1[v]] = 1;
      for (std::size_t v = 0; v < 3; ++v)
        if (owner[g.map2[v]] == 0) owner[g.map2[v]] = 2;
      for (std::size_t c = 0; c < d.size(); ++c) owner[g.map1[d.phi1[c]]] = d.side[c] == DowelSide::C1 ? 1 : 2;
      for (std::size_t v = 0; v < 3; ++v) {
        if (owner[g.map1[v]] == 1) CHECK(fz[g.map1[v]] == f1x[v]);
        if (owner[g.map2[v]] == 2) CHECK(fz[g.map2[v]] == f2x[v]);
      }
    }
  }
}

TEST_CASE("dowel invariants are enforced") {
  const Network a = Network::identity(2, 2);
  Dowel d;
  d.side = {DowelSide::C1, DowelSide::C2};
  d.phi1 = {0, 0};
  d.phi2 = {0, 1};
  CHECK_THROWS_AS(glue_networks(a, a, d), Error);
  d.phi1 = {0, 5};
  CHECK_THROWS_AS(glue_networks(a, a, d), Error);
  CHECK_THROWS_AS(glue_networks(a, Network::identity(3, 2), Dowel{}), Error);
}

TEST_CASE("pseudo-orbit checks") {
  const Network f = csan_to_network(build_rule90_ring(4));
  PseudoOrbit p;
  Configuration x{1, 0, 0, 0};
  for (int t = 0; t < 5; ++t) {
    p.configs.push_back(x);
    x = step(f, x);
  }
  CHECK(check_pseudo_orbit(f, p).pass);
  p.configs[2][3] ^= 1;
  const auto r = check_pseudo_orbit(f, p);
  CHECK_FALSE(r.pass);
  CHECK(r.v == 3);
  CHECK(r.t == 1);
  p.exempt = {3};
  CHECK_FALSE(check_pseudo_orbit(f, p).pass);  // node 3 at t=2 also feeds nodes 0 and 2
  p.exempt = {0, 2, 3};
  CHECK(check_pseudo_orbit(f, p).pass);
}

TEST_CASE("glueing compatible pseudo-orbits yields a pseudo-orbit") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const Network f1 = random_network(rng, 2, 4, 3), f2 = random_network(rng, 2, 4, 3);
    const Dowel d = random_dowel(rng, 4, 4, 1 + k % 4);
    const auto pair = compatible_pseudo_orbits(rng, f1, f2, d, 5);
    REQUIRE(check_pseudo_orbit(f1, pair.p1).pass);
    REQUIRE(check_pseudo_orbit(f2, pair.p2).pass);
    const GlueResult g = glue_networks(f1, f2, d);
    const PseudoOrbit p = glue_pseudo_orbits(g, d, pair.p1, pair.p2);
    CHECK(check_pseudo_orbit(g.net, p).pass);
  }
}

TEST_CASE("glueing empty exempt sets over an empty dowel gives true orbits") {
  const Network f1 = csan_to_network(build_rule90_ring(3)), f2 = Network::identity(2, 2);
  PseudoOrbit p1, p2;
  Configuration a{1, 0, 0}, b{0, 1};
  for (int t = 0; t < 4; ++t) {
    p1.configs.push_back(a);
    p2.configs.push_back(b);
    a = step(f1, a);
  }
  const GlueResult g = glue_networks(f1, f2, Dowel{});
  const PseudoOrbit p = glue_pseudo_orbits(g, Dowel{}, p1, p2);
  CHECK(p.exempt.empty());
  CHECK(check_pseudo_orbit(g.net, p).pass);
}

TEST_CASE("disagreeing dowel traces are rejected") {
  const Network f = Network::identity(2, 2);
  Dowel d;
  d.side = {DowelSide::C1};
  d.phi1 = {0};
  d.phi2 = {0};
  PseudoOrbit p1{{{0, 0}, {0, 0}}, {}}, p2{{{0, 0}, {1, 0}}, {0}};
  try {
    glue_pseudo_orbits(glue_networks(f, f, d), d, p1, p2);
    FAIL("expected trace-mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TraceMismatch);
  }
}

TEST_CASE("wire signals persist after glueing two wires") {
  const Gadget wire = build_wire_gadget();
  const Interface iface = gol_interface();
  GadgetWiring w;
  w.a_out_b_in = {{0, 0}};
  const auto glued = gadget_glue(wire, wire, iface, w, game_of_life_family());
  REQUIRE(glued.gadget.csan.has_value());
  CHECK_FALSE(family_violation(*glued.gadget.csan, game_of_life_family()));
  CHECK(csan_to_network(*glued.gadget.csan).canonical() == glued.gadget.net.canonical());
  CHECK(glued.gadget.in_copies.size() == 1);
  CHECK(glued.gadget.out_copies.size() == 1);
}

TEST_CASE("csan glueing") {
  const Csan a = build_game_of_life(path_graph(3)), b = build_game_of_life(path_graph(3));
  const auto empty = csan_glue(a, b, Dowel{});
  CHECK(empty.csan.size() == 6);
  CHECK(empty.csan.edges().size() == 4);

  // Overlap the edge 1-2 of a with the edge 0-1 of b: a's end node 2 and b's
  // end node 0 have their whole neighbourhood inside the dowel.
  Dowel d;
  d.side = {DowelSide::C1, DowelSide::C2};
  d.phi1 = {1, 2};
  d.phi2 = {0, 1};
  const auto glued = csan_glue(a, b, d, game_of_life_family());
  CHECK_FALSE(family_violation(glued.csan, game_of_life_family()));
  const GlueResult plain = glue_networks(csan_to_network(a), csan_to_network(b), d);
  const Network via_csan = csan_to_network(glued.csan);
  for (std::uint64_t i = 0; i < power(2, plain.net.size()); ++i)
    CHECK(step(via_csan, nth_config(i, 2, plain.net.size())) == step(plain.net, nth_config(i, 2, plain.net.size())));

  // A C2 element whose neighbourhood in the first network leaves the dowel.
  Dowel bad;
  bad.side = {DowelSide::C2};
  bad.phi1 = {1};
  bad.phi2 = {0};
  try {
    csan_glue(a, b, bad);
    FAIL("expected condition-violated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConditionViolated);
  }
}
