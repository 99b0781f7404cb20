#include "doctest.h"
#include "support/support.hpp"

using namespace annet;
using namespace annet::testing;

TEST_CASE("clock has period 6") {
  const Network clock = csan_to_network(build_clock());
  const auto o = analyze_orbit(clock, clock_initial(), 100);
  CHECK(o.transient == 0);
  CHECK(o.period == 6);
  CHECK(clock_names().size() == clock.size());
  CHECK_FALSE(family_violation(build_clock(), game_of_life_family()));
}

TEST_CASE("wire rests at zero") {
  const Csan wire = build_wire();
  const Configuration zero(wire.size(), 0);
  CHECK(csan_step(wire, zero) == zero);
  CHECK_FALSE(family_violation(wire, game_of_life_family()));
}

TEST_CASE("wire signals are pseudo-orbits") {
  const auto& cert = build_certificate();
  bool found = false;
  for (const auto& g : cert.gates) {
    if (g.gate.in != 1 || g.gate.out != 1) continue;
    found = true;
    for (const auto& [key, p] : g.pseudo_orbits) {
      CHECK(check_pseudo_orbit(g.gadget.net, p).pass);
      CHECK(p.exempt == g.gadget.exempt_nodes(cert.iface));
    }
  }
  CHECK(found);
}

TEST_CASE("NOR gadget rows") {
  const CertifiedGate* nor = build_certificate().find("NOR");
  REQUIRE(nor != nullptr);
  const auto cols = nor_table_columns();
  auto row = [&](State x, State y, std::size_t t) {
    const PseudoOrbit& p = nor->pseudo_orbits.at({x, y, 0, 0, 0, 0});
    std::vector<State> r;
    for (std::size_t c : cols) r.push_back(p.configs[t][c]);
    return r;
  };
  CHECK(row(0, 0, 3)[10] == 1);  // v = NOR(0, 0)
  CHECK(row(1, 0, 3)[10] == 0);
  for (std::size_t t : {4, 5})
    for (std::size_t c = 11; c < 17; ++c) CHECK(row(1, 1, t)[c] == 0);
  for (std::size_t t : {4, 5})
    for (std::size_t c = 11; c < 17; ++c) CHECK(row(0, 0, t)[c] == 1);
  for (State x = 0; x < 2; ++x)
    for (State y = 0; y < 2; ++y) {
      const auto r0 = row(x, y, 0);
      CHECK(std::all_of(r0.begin(), r0.end(), [](State s) { return s == 0; }));
    }
}

TEST_CASE("certificate endpoints and contexts") {
  const auto& cert = build_certificate();
  CHECK(cert.time == 6);
  CHECK(cert.state_configs[0] != cert.state_configs[1]);
  CHECK(cert.traces[1][0].front() == cert.state_configs[1]);
  CHECK(cert.traces[1][0].back() == cert.state_configs[0]);
  CHECK(cert.traces[1][0].size() == 7);
  for (const auto& g : cert.gates) {
    const auto interior = g.gadget.interior();
    REQUIRE(g.context.size() == interior.size());
    for (const auto& [key, p] : g.pseudo_orbits)
      for (std::size_t i = 0; i < interior.size(); ++i) {
        CHECK(p.configs.front()[interior[i]] == g.context[i]);
        CHECK(p.configs.back()[interior[i]] == g.context[i]);
      }
  }
  CHECK(verify_certificate(cert, 2).pass);
}

TEST_CASE("a NOR flip-flop compiled into Game of Life") {
  const GNetwork gn = nor_pair_network();
  const auto comp = compile_to_gol(gn);
  CHECK_FALSE(family_violation(comp.csan, game_of_life_family()));
  CHECK(csan_to_network(comp.csan).canonical() == comp.net.canonical());
  const Network f = gnetwork_to_network(gn);
  CHECK(analyze_orbit(f, {0, 0, 0, 0}, 100).period == 2);
  CHECK(analyze_orbit(comp.net, embed(comp.embedding, {0, 0, 0, 0}), 1000).period == 12);
  CHECK(analyze_orbit(comp.net, embed(comp.embedding, {0, 0, 1, 1}), 1000).period == 6);
  CHECK(verify_simulation(f, comp.net, comp.embedding).pass);
}

TEST_CASE("a single NOR gate cannot close on itself") {
  GNetBuilder b(2);
  const auto w = b.new_nodes(2);
  b.add(catalog_gate("Gnor", "NOR"), {w[0], w[1]}, {w[0], w[1]});
  CHECK_THROWS_AS(b.build(), Error);
}

TEST_CASE("compile_to_gol accepts only NOR gates") {
  GNetBuilder c(2);
  const auto v = c.new_nodes(4);
  c.add(catalog_gate("Gnand", "NAND"), {v[0], v[1]}, {v[2], v[3]});
  c.add(catalog_gate("Gnand", "NAND"), {v[2], v[3]}, {v[0], v[1]});
  CHECK_THROWS_AS(compile_to_gol(c.build()), Error);
}
