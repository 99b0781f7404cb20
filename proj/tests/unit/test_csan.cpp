#include "doctest.h"
#include "support/support.hpp"

using namespace annet;
using namespace annet::testing;

namespace {

// Four nodes: 0-1, 0-2, 0-3, 3-2, 3-1.
Graph kite() { return Graph{4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 3}}}; }

Graph star(std::size_t leaves) {
  Graph g{leaves + 1, {}};
  for (std::size_t i = 1; i <= leaves; ++i) g.edges.emplace_back(0, i);
  return g;
}

void check_semantics(const Csan& c) {
  const Network net = csan_to_network(c);
  const std::uint64_t count = power(c.alphabet(), c.size());
  for (std::uint64_t i = 0; i < count; ++i) {
    const Configuration x = nth_config(i, c.alphabet(), c.size());
    REQUIRE(csan_step(c, x) == step(net, x));
  }
}

}  // namespace

TEST_CASE("game of life birth and survival") {
  const Csan gol = build_game_of_life(star(3));
  CHECK(csan_step(gol, {0, 1, 1, 1})[0] == 1);  // dead centre, three live neighbours
  CHECK(csan_step(gol, {1, 1, 1, 0})[0] == 1);  // live centre, two live neighbours
  CHECK(csan_step(gol, {1, 1, 0, 0})[0] == 0);  // live centre, one live neighbour
  CHECK(csan_step(gol, {0, 1, 1, 0})[0] == 0);  // dead centre, two live neighbours
  const Csan lifelike = build_lifelike(star(3), {3}, {2, 3});
  for (std::uint64_t i = 0; i < 16; ++i)
    CHECK(csan_step(gol, nth_config(i, 2, 4)) == csan_step(lifelike, nth_config(i, 2, 4)));
}

TEST_CASE("csan_step agrees with the derived network for every family") {
  std::vector<Polarity> pol{Polarity::Max, Polarity::Min, Polarity::Max, Polarity::Min};
  check_semantics(build_threshold(kite(), {3, 2, 2, 3}));
  check_semantics(build_linear_gf2(kite()));
  check_semantics(build_rule90_ring(6));
  check_semantics(build_minmax(kite(), pol));
  check_semantics(build_minmax(kite(), pol, 3));
  check_semantics(build_lifelike(complete_graph(5), {1, 4}, {0, 2}));
  check_semantics(build_game_of_life(cycle_graph(6)));
  check_semantics(build_interval(kite(), 1, 2));
  check_semantics(build_reaction_diffusion(kite(), 1, 3));
}

TEST_CASE("threshold networks") {
  CHECK(csan_step(build_threshold(kite(), {3, 2, 2, 3}), {1, 1, 1, 1}) == Configuration{1, 1, 1, 1});
  CHECK(csan_step(build_threshold(kite(), {0, 0, 0, 0}), {0, 0, 0, 0}) == Configuration{1, 1, 1, 1});
  // Majority (at least 1 of 2) on a triangle.
  CHECK(csan_step(build_threshold(complete_graph(3), {1, 1, 1}), {1, 1, 0}) == Configuration{1, 1, 1});
  CHECK_THROWS_AS(build_threshold(kite(), {1, 2}), Error);
}

TEST_CASE("rule 90 ring matches its circulant matrix") {
  CHECK(step(csan_to_network(build_rule90_ring(4)), {1, 0, 0, 0}) == Configuration{0, 1, 0, 1});
  CHECK(csan_step(build_rule90_ring(5), {0, 0, 0, 0, 0}) == Configuration{0, 0, 0, 0, 0});
  const auto m = circulant_rule90(7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(m[i][j] == ((j + 1) % 7 == i || (i + 1) % 7 == j ? 1 : 0));
  const Network from_matrix = matrix_to_network(MatrixKind::Gf2, m);
  const Network ring = csan_to_network(build_rule90_ring(7));
  for (std::uint64_t i = 0; i < 128; ++i) CHECK(step(from_matrix, nth_config(i, 2, 7)) == step(ring, nth_config(i, 2, 7)));
  CHECK_THROWS_AS(build_rule90_ring(2), Error);
}

TEST_CASE("min-max networks") {
  const Graph g = kite();
  const Csan all_max = build_minmax(g, {Polarity::Max, Polarity::Max, Polarity::Max, Polarity::Max});
  const Network dis = disjunctive_from_graph(Digraph{4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 3}, {2, 0}, {2, 3},
                                                         {3, 0}, {3, 1}, {3, 2}}});
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(csan_step(all_max, nth_config(i, 2, 4)) == step(dis, nth_config(i, 2, 4)));
  CHECK(csan_step(all_max, {0, 0, 0, 0}) == Configuration{0, 0, 0, 0});
  const Csan path = build_minmax(path_graph(3), {Polarity::Max, Polarity::Min, Polarity::Max}, 3);
  CHECK(csan_step(path, {1, 0, 2})[1] == 1);
  // An isolated node keeps its state.
  CHECK(csan_step(build_minmax(Graph{1, {}}, {Polarity::Min}, 3), {2}) == Configuration{2});
}

TEST_CASE("interval and reaction-diffusion rules") {
  const Csan all = build_interval(kite(), 0, 3);
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(csan_step(all, nth_config(i, 2, 4)) == Configuration{1, 1, 1, 1});
  // Node 0 has neighbours 1, 2, 3.
  CHECK(csan_step(build_interval(kite(), 1, 2), {0, 1, 1, 1})[0] == 0);
  CHECK(csan_step(build_interval(kite(), 1, 2), {0, 1, 0, 1})[0] == 1);

  const Csan rd = build_reaction_diffusion(path_graph(3), 1, 3);
  CHECK(rd.alphabet() == 4);
  CHECK(csan_step(rd, {1, 0, 0})[0] == 2);
  CHECK(csan_step(rd, {3, 0, 0})[0] == 0);  // saturates back to rest
  CHECK(csan_step(rd, {0, 0, 0}) == Configuration{0, 0, 0});
  CHECK(csan_step(build_reaction_diffusion(path_graph(3), 0, 3), {0, 1, 0})[0] == 1);
  CHECK(csan_step(rd, {0, 2, 0})[0] == 0);  // refractory neighbours are not active
}

TEST_CASE("builders satisfy their own family predicates") {
  CHECK_FALSE(family_violation(build_threshold(kite(), {3, 2, 2, 3}), threshold_family()));
  CHECK_FALSE(family_violation(build_linear_gf2(kite()), linear_family()));
  CHECK_FALSE(family_violation(build_minmax(kite(), {Polarity::Max, Polarity::Min, Polarity::Max, Polarity::Min}),
                               minmax_family()));
  CHECK_FALSE(family_violation(build_lifelike(kite(), {1}, {2}), lifelike_family({1}, {2})));
  CHECK_FALSE(family_violation(build_game_of_life(kite()), game_of_life_family()));
  CHECK_FALSE(family_violation(build_interval(kite(), 1, 2), interval_family()));
  CHECK_FALSE(family_violation(build_reaction_diffusion(kite(), 1, 2), reaction_family()));
  CHECK(family_violation(build_linear_gf2(kite()), game_of_life_family()).has_value());
}

TEST_CASE("edges are symmetric and labels cover bounded multisets") {
  const Csan c = build_game_of_life(complete_graph(4));
  for (std::size_t v = 0; v < c.size(); ++v) {
    CHECK(c.degree(v) == 3);
    CHECK(c.label(v).bound >= c.degree(v));
    CHECK(c.label(v).table.size() == c.alphabet() * MultisetIndexer(c.alphabet(), c.label(v).bound).size());
  }
  const Graph g = c.graph();
  CHECK(g.edges.size() == 6);
  for (auto [u, v] : g.edges) CHECK(u < v);
}

TEST_CASE("multiset indexer ranks every bounded multiset once") {
  const MultisetIndexer idx(3, 4);
  std::set<std::size_t> ranks;
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; a + b <= 4; ++b)
      for (std::size_t c = 0; a + b + c <= 4; ++c) {
        const std::size_t r = idx.rank({a, b, c});
        CHECK(r < idx.size());
        CHECK(idx.unrank(r) == std::vector<std::size_t>{a, b, c});
        ranks.insert(r);
      }
  CHECK(ranks.size() == idx.size());
  CHECK(idx.size() == 35);
}

TEST_CASE("csan_to_network tables") {
  const Network net = csan_to_network(build_game_of_life(path_graph(3)));
  CHECK(net.rule(1).deps.size() == 3);
  CHECK(net.rule(1).table.size() == 8);
  const Csan id = make_csan(3, path_graph(3), "id", [](std::size_t, std::size_t deg) {
    return make_label(3, deg, {"table", {}}, [](State own, const std::vector<std::size_t>&) { return own; });
  });
  for (std::uint64_t i = 0; i < 27; ++i) CHECK(step(csan_to_network(id), nth_config(i, 3, 3)) == nth_config(i, 3, 3));
}

TEST_CASE("interaction graphs") {
  const Csan ring = build_rule90_ring(5);
  const Digraph g = interaction_graph_csan(ring);
  CHECK(g.edges.size() == 10);
  for (auto [u, v] : g.edges) CHECK(u != v);
  CHECK(g == interaction_graph_bruteforce(csan_to_network(ring)));

  const Csan constant = make_csan(2, kite(), "id", [](std::size_t, std::size_t deg) {
    return make_label(2, deg, {"table", {}}, [](State, const std::vector<std::size_t>&) { return State{1}; });
  });
  CHECK(interaction_graph_csan(constant).edges.empty());

  // AND at node 0 of a path whose edge to node 1 maps every state to 0.
  std::vector<CsanEdge> edges{{0, 1, {0, 0}, "custom"}, {0, 2, rho_identity(2), "id"}};
  auto andl = make_label(2, 2, {"table", {}}, [](State, const std::vector<std::size_t>& m) {
    return static_cast<State>(m[0] == 0 ? 1 : 0);
  });
  auto idl = make_label(2, 1, {"table", {}}, [](State own, const std::vector<std::size_t>&) { return own; });
  const Csan c(2, 3, edges, {andl, idl, idl});
  const Digraph ig = interaction_graph_csan(c);
  CHECK(std::find(ig.edges.begin(), ig.edges.end(), std::make_pair(std::size_t{1}, std::size_t{0})) == ig.edges.end());
  CHECK(ig == interaction_graph_bruteforce(csan_to_network(c)));
  CHECK(ig == interaction_by_definition(csan_to_network(c)));
}

TEST_CASE("matrix conversions") {
  const Network id = matrix_to_network(MatrixKind::Gf2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(step(id, nth_config(i, 2, 3)) == nth_config(i, 2, 3));
  const Network swap = matrix_to_network(MatrixKind::BooleanOr, {{0, 1}, {1, 0}});
  CHECK(step(swap, {1, 0}) == Configuration{0, 1});
  CHECK(step(swap, {0, 1}) == Configuration{1, 0});
  CHECK(step(swap, {1, 1}) == Configuration{1, 1});
  CHECK(step(swap, {0, 0}) == Configuration{0, 0});
  const Network conj = matrix_to_network(MatrixKind::BooleanAnd, {{0, 1, 1}, {1, 0, 0}, {1, 1, 0}});
  CHECK(step(conj, {0, 1, 1}) == Configuration{1, 0, 0});
  CHECK_THROWS_AS(matrix_to_network(MatrixKind::Gf2, {{1, 0}, {0}}), Error);
}

TEST_CASE("circuit encoding commutes with the global map") {
  std::mt19937_64 rng(5);
  for (std::size_t q : {2, 3}) {
    const Network net = q == 2 ? csan_to_network(build_rule90_ring(4)) : random_network(rng, 3, 3, 2);
    const Circuit c = circuit_encode(net);
    for (std::uint64_t i = 0; i < power(q, net.size()); ++i) {
      const Configuration x = nth_config(i, q, net.size());
      CHECK(eval(c, encode_configuration(x, q)) == encode_configuration(step(net, x), q));
    }
  }
  CHECK(encoding_bits(3) == 2);
  CHECK(encoding_bits(2) == 1);
}
