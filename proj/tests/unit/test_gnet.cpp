#include "doctest.h"
#include "support/support.hpp"

using namespace annet;
using namespace annet::testing;

TEST_CASE("catalog gates") {
  CHECK(catalog_gate("Gnor", "NOR").apply({0, 0}) == std::vector<State>{1, 1});
  CHECK(catalog_gate("Gnor", "NOR").apply({1, 0}) == std::vector<State>{0, 0});
  CHECK(catalog_gate("Gnand", "NAND").apply({1, 1}) == std::vector<State>{0, 0});
  CHECK(catalog_gate("Gt", "AND2").apply({1, 1}) == std::vector<State>{2});
  CHECK(catalog_gate("Gt", "AND2").apply({1, 0}) == std::vector<State>{0});
  CHECK(catalog_gate("Gt", "AND01").apply({1, 1}) == std::vector<State>{1});
  CHECK(catalog_gate("Gt", "LOOP").apply({0, 2}) == std::vector<State>{2});
  CHECK(catalog_gate("Gt", "LOOP").apply({1, 0}) == std::vector<State>{1});
  CHECK(catalog_gate("Gmon", "AND21").apply({1, 1}) == std::vector<State>{1});
  for (const auto& [name, gates] : gate_sets())
    for (const Gate& g : gates) {
      CHECK_NOTHROW(g.validate());
      CHECK(g.irreducible());
    }
  for (const Gate& g : gate_sets().at("Gmon2")) {
    CHECK(g.in == 2);
    CHECK(g.out == 2);
  }
  CHECK_THROWS_AS(catalog_gate("Gnor", "AND"), Error);
}

TEST_CASE("an AND and COPY loop") {
  GNetBuilder b(2);
  const auto w = b.new_nodes(3);
  b.add(catalog_gate("Gconj", "AND"), {w[1], w[2]}, {w[0]});
  b.add(catalog_gate("Gconj", "COPY"), {w[0]}, {w[1], w[2]});
  const GNetwork gn = b.build();
  const Network net = gnetwork_to_network(gn);
  CHECK(net.size() == 3);
  CHECK(step(net, {0, 0, 0}) == Configuration{0, 0, 0});
  CHECK(step(net, {1, 1, 0}) == Configuration{0, 1, 1});
  CHECK(step(net, {0, 1, 1}) == Configuration{1, 0, 0});
}

TEST_CASE("a rotation is a cyclic shift") {
  GNetBuilder b(2);
  const auto w = b.new_nodes(3);
  for (std::size_t i = 0; i < 3; ++i) b.add(catalog_gate("Gwire", "ID"), {w[i]}, {w[(i + 1) % 3]});
  const Network net = gnetwork_to_network(b.build());
  CHECK(step(net, {1, 0, 0}) == Configuration{0, 1, 0});
  CHECK(analyze_orbit(net, {1, 0, 0}, 10).period == 3);
}

TEST_CASE("self-loops and broken bijections are rejected") {
  GNetBuilder b(2);
  const auto w = b.new_nodes(1);
  b.add(catalog_gate("Gwire", "ID"), {w[0]}, {w[0]});
  CHECK_THROWS_AS(b.build(), Error);
  GNetwork gn;
  gn.gates = {catalog_gate("Gwire", "ID"), catalog_gate("Gwire", "ID")};
  gn.alpha = {1, 1};
  gn.beta = {0, 1};
  CHECK_THROWS_AS(gn.validate(), Error);
}

TEST_CASE("the closed NOR pair") {
  const GNetwork gn = nor_pair_network();
  CHECK(gn.size() == 4);
  const Network net = gnetwork_to_network(gn);
  CHECK(step(net, {0, 0, 1, 1}) == Configuration{0, 0, 1, 1});
  CHECK(step(net, {0, 0, 0, 0}) == Configuration{1, 1, 1, 1});
}

TEST_CASE("network_to_gnetwork recovers the gates") {
  const Network swap = tabulate(2, {{1}, {0}}, [](std::size_t, const std::vector<State>& x) { return x[0]; });
  const GNetwork gn = network_to_gnetwork(swap, gate_sets().at("Gwire"));
  CHECK(gn.gates.size() == 2);
  CHECK(gnetwork_to_network(gn) == swap);

  std::mt19937_64 rng(6);
  for (int k = 0; k < 30; ++k) {
    const GNetwork orig = random_gnetwork(rng, gate_sets().at("Gmon"), 6);
    const Network net = gnetwork_to_network(orig);
    const GNetwork back = network_to_gnetwork(net, gate_sets().at("Gmon"));
    CHECK(gnetwork_to_network(back).canonical() == net.canonical());
  }
  const Network xor2 = tabulate(2, {{1, 2}, {0}, {0}}, [](std::size_t v, const std::vector<State>& x) {
    return static_cast<State>(v == 0 ? x[0] ^ x[1] : x[0]);
  });
  try {
    network_to_gnetwork(xor2, gate_sets().at("Gmon"));
    FAIL("expected not-decomposable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDecomposable);
  }
}

TEST_CASE("prime rotations") {
  const auto p4 = prime_rotations(4);
  CHECK(p4.primes == std::vector<std::size_t>{2, 3});
  CHECK(p4.gn.size() == 5);
  CHECK(analyze_orbit(gnetwork_to_network(p4.gn), p4.marked, 100).period == 6);
  const auto p3 = prime_rotations(3);
  CHECK(analyze_orbit(gnetwork_to_network(p3.gn), p3.marked, 100).period == 2);
  const auto p8 = prime_rotations(8);
  CHECK(analyze_orbit(gnetwork_to_network(p8.gn), p8.marked, 1000).period == 210);
  CHECK(primes_below(12) == std::vector<std::size_t>{2, 3, 5, 7, 11});
  for (const Gate& g : p8.gn.gates) CHECK(g.name == "ID");
}

TEST_CASE("conjunctive networks and negation") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 1 + k % 4;
    Digraph g{n, {}};
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 2) g.edges.emplace_back(u, v);
    const Network conj = conjunctive_from_graph(g), dis = disjunctive_from_graph(g);
    const Network conjugate = conjugate_by_negation(conj);
    for (std::uint64_t i = 0; i < power(2, n); ++i) {
      const Configuration x = nth_config(i, 2, n);
      Configuration nx(n);
      for (std::size_t v = 0; v < n; ++v) nx[v] = 1 - x[v];
      Configuration nfx = step(conj, nx);
      for (auto& s : nfx) s = 1 - s;
      CHECK(step(dis, x) == nfx);
      CHECK(step(conjugate, x) == step(dis, x));
      // The conjunctive map by definition.
      const Configuration fx = step(conj, x);
      for (std::size_t v = 0; v < n; ++v) {
        State want = 1;
        for (auto [a, b] : g.edges)
          if (b == v) want &= x[a];
        CHECK(fx[v] == want);
      }
    }
  }
}

TEST_CASE("conjunctive networks compile to AND and COPY gates") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 2 + k % 3;
    Digraph g{n, {}};
    for (std::size_t v = 0; v < n; ++v) {
      g.edges.emplace_back((v + 1) % n, v);
      for (std::size_t u = 0; u < n; ++u)
        if (u != (v + 1) % n && rng() % 3 == 0) g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    const Network f = conjunctive_from_graph(g);
    const auto comp = conj_to_gconj(f);
    for (const Gate& gate : comp.gn.gates) CHECK((gate.name == "AND" || gate.name == "COPY"));
    CHECK(verify_simulation(f, gnetwork_to_network(comp.gn), comp.embedding).pass);
  }
}

TEST_CASE("fanin gadget computes a three-way conjunction in three steps") {
  const auto fg = fanin_gadget3();
  CHECK(fg.inputs.size() == 3);
  for (std::uint64_t i = 0; i < (1u << fg.net.size()); i += 37) {
    const Configuration x = nth_config(i, 2, fg.net.size());
    CHECK(iterate(fg.net, x, 3)[fg.output] == (x[fg.inputs[0]] & x[fg.inputs[1]] & x[fg.inputs[2]]));
  }
}

TEST_CASE("test module freezes a positive test") {
  const GtModule m = gt_test_module();
  Configuration x(m.net.size(), 0);
  const auto idle = trace(m.net, x, m.output, 10);
  CHECK(std::all_of(idle.begin(), idle.end(), [](State s) { return s == 0; }));
  x[m.inputs[0]] = 1;
  const auto fired = trace(m.net, x, m.output, 20);
  for (std::size_t s = m.delay; s + 1 < fired.size(); ++s) CHECK((fired[s] == 2 || fired[s + 1] == 2));
  for (std::size_t s = 0; s < m.delay; ++s) CHECK(fired[s] != 2);
}

TEST_CASE("AND tree reports a held conjunction after its delay") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const GtModule m = gt_and_tree(k);
    if (k == 1) CHECK(m.delay == 1);
    CHECK(m.delay <= 1 + static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(k)))));
    for (std::uint64_t i = 0; i < power(2, k); ++i) {
      Configuration x(m.net.size(), 0);
      State all = 1;
      for (std::size_t j = 0; j < k; ++j) {
        x[m.inputs[j]] = (i >> j) & 1;
        all &= x[m.inputs[j]];
      }
      CHECK(iterate(m.net, x, m.delay)[m.output] == all);
    }
  }
}

TEST_CASE("transient machine") {
  const auto gt = gt_transient_network(5);
  const Network net = gnetwork_to_network(gt.gn);
  const auto o = analyze_orbit(net, gt.initial, 1u << 20);
  CHECK(o.transient >= 6);
  for (const Gate& g : gt.gn.gates) CHECK_NOTHROW(catalog_gate("Gt", g.name));
  CHECK_THROWS_AS(gt_transient_network(2), Error);
}

TEST_CASE("associated conjunctive network") {
  // COPY into AND01: no 2 ever appears from binary configurations.
  GNetBuilder b(3);
  const auto w = b.new_nodes(3);
  b.add(catalog_gate("Gt", "COPY"), {w[0]}, {w[1], w[2]});
  b.add(catalog_gate("Gt", "AND01"), {w[1], w[2]}, {w[0]});
  const GNetwork gn = b.build();
  const Network f = gnetwork_to_network(gn), fs = associated_conjunctive(gn);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Configuration x = nth_config(i, 2, 3);
    for (std::size_t v = 0; v < 3; ++v) CHECK(trace(f, x, v, 6) == trace(fs, x, v, 6));
  }
  // A seeded 2 spreads along dependencies only.
  CHECK(step(f, {2, 0, 0}) == Configuration{0, 2, 2});
  CHECK(step(f, {0, 2, 0})[0] == 2);

  // The LOOP node keeps only its first input.
  const auto gt = gt_transient_network(4);
  const Network star = associated_conjunctive(gt.gn);
  CHECK(star.rule(gt.loop_node).deps.size() == 1);
  CHECK_THROWS_AS(associated_conjunctive(prime_rotations(4).gn), Error);
}
