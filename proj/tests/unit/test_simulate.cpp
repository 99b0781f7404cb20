#include "doctest.h"
#include "support/support.hpp"

using namespace annet;
using namespace annet::testing;

TEST_CASE("identity embedding is the identity") {
  const BlockEmbedding phi = identity_embedding(3, 4);
  CHECK(embed(phi, {2, 0, 1, 1}) == Configuration{2, 0, 1, 1});
  CHECK(decode(phi, {2, 0, 1, 1}) == Configuration{2, 0, 1, 1});
  const Network id = Network::identity(3, 4);
  const auto report = verify_simulation(id, id, phi);
  CHECK(report.pass);
  CHECK(report.checked == 81);
}

TEST_CASE("double-rail embedding writes x and not x") {
  BlockEmbedding phi;
  phi.g_size = 4;
  phi.blocks = {{0, 1}, {2, 3}};
  phi.patterns = {{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}};
  phi.validate();
  CHECK(embed(phi, {1, 0}) == Configuration{1, 0, 0, 1});
  CHECK(decode(phi, {1, 1, 0, 1}) == std::nullopt);
}

TEST_CASE("embedding validation") {
  BlockEmbedding phi;
  phi.g_size = 2;
  phi.blocks = {{0}, {0}};
  phi.patterns = {{{0}, {1}}, {{0}, {1}}};
  CHECK_THROWS_AS(phi.validate(), Error);  // blocks overlap
  phi.blocks = {{0}, {1}};
  phi.patterns = {{{0}, {0}}, {{0}, {1}}};
  CHECK_THROWS_AS(phi.validate(), Error);  // patterns not injective
}

TEST_CASE("embed is injective") {
  const SlowedNetwork s = slow_down(csan_to_network(build_rule90_ring(4)), 3);
  std::set<Configuration> images;
  for (std::uint64_t i = 0; i < 16; ++i) images.insert(embed(s.embedding, nth_config(i, 2, 4)));
  CHECK(images.size() == 16);
}

TEST_CASE("slowed networks simulate the original") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 5; ++k) {
    const Network f = random_network(rng, 2, 4, 3);
    const SlowedNetwork s = slow_down(f, 1 + k);
    CHECK(verify_simulation(f, s.net, s.embedding).pass);
    for (std::uint64_t i = 0; i < 16; ++i) {
      const Configuration x = nth_config(i, 2, 4);
      CHECK(naive_iterate(s.net, embed(s.embedding, x), s.embedding.time) == embed(s.embedding, naive_iterate(f, x, 1)));
    }
    CHECK(verify_orbit_embedding(f, s.net, s.embedding).pass);
  }
}

TEST_CASE("a corrupted pattern is caught with a counterexample") {
  const Network f = csan_to_network(build_rule90_ring(4));
  SlowedNetwork s = slow_down(f, 2);
  std::swap(s.embedding.patterns[1][0], s.embedding.patterns[1][1]);
  const auto report = verify_simulation(f, s.net, s.embedding);
  CHECK_FALSE(report.pass);
  REQUIRE(report.counterexample.has_value());
  const Configuration x = *report.counterexample;
  CHECK(naive_iterate(s.net, embed(s.embedding, x), 2) != embed(s.embedding, naive_iterate(f, x, 1)));
}

TEST_CASE("sampled verification records its seed") {
  const Network f = csan_to_network(build_rule90_ring(5));
  const SlowedNetwork s = slow_down(f, 2);
  SimulationOptions opt;
  opt.mode = SimulationMode::Sample;
  opt.samples = 10;
  opt.seed = 99;
  const auto report = verify_simulation(f, s.net, s.embedding, opt);
  CHECK(report.pass);
  CHECK(report.seed == 99);
  CHECK(report.checked == 10);
  CHECK(report.mode == SimulationMode::Sample);
}

TEST_CASE("exhaustive verification respects the cap") {
  const Network f = Network::identity(2, 12);
  SimulationOptions opt;
  opt.cap = 1000;
  CHECK_THROWS_AS(verify_simulation(f, f, identity_embedding(2, 12), opt), Error);
}

TEST_CASE("shape mismatches are input errors") {
  const Network f = Network::identity(2, 3);
  CHECK_THROWS_AS(verify_simulation(f, Network::identity(2, 2), identity_embedding(2, 3)), Error);
}

TEST_CASE("simulation scales transients and periods by T") {
  const auto pr = prime_rotations(5);
  const Network f = gnetwork_to_network(pr.gn);
  const SlowedNetwork s = slow_down(f, 3);
  Configuration x = pr.marked;
  const auto of = analyze_orbit(f, x, 1000);
  const auto og = analyze_orbit(s.net, embed(s.embedding, x), 1000);
  CHECK(og.period == 3 * of.period);
  CHECK(verify_orbit_embedding(f, s.net, s.embedding).pass);
}
