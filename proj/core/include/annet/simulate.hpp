// Block embeddings of one network into another and exhaustive or sampled
// verification of the simulation equation  embed(F(x)) = G^T(embed(x)).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annet/network.hpp"

namespace annet {

struct BlockEmbedding {
  std::uint64_t time = 1;
  std::size_t f_alphabet = 2;
  std::size_t g_alphabet = 2;
  std::size_t g_size = 0;
  std::vector<std::vector<std::size_t>> blocks;             // blocks[i]: nodes of G for node i of F
  std::vector<std::vector<Configuration>> patterns;         // patterns[i][q]: states over blocks[i]

  // Throws Error(InvalidInput) unless the blocks partition V_G, patterns have
  // the right shapes and q -> patterns[i][q] is injective for every block.
  void validate() const;
};

Configuration embed(const BlockEmbedding& phi, const Configuration& x);
// Inverse of embed on its image; nullopt when y is not an embedded configuration.
std::optional<Configuration> decode(const BlockEmbedding& phi, const Configuration& y);

// One single-node block per node with the identity pattern.
BlockEmbedding identity_embedding(std::size_t q, std::size_t n, std::uint64_t time = 1);

// Slows F down by a factor T: node v becomes a delay line (v,0..T-1) whose head
// applies f_v to the line tails.  The returned embedding fills each line with x_v.
struct SlowedNetwork {
  Network net;
  BlockEmbedding embedding;
};
SlowedNetwork slow_down(const Network& f, std::uint64_t time);

enum class SimulationMode { Exhaustive, Sample };

struct SimulationOptions {
  SimulationMode mode = SimulationMode::Exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::uint64_t cap = default_state_cap();
  unsigned jobs = 1;
};

struct SimulationReport {
  bool pass = false;
  std::uint64_t checked = 0;
  SimulationMode mode = SimulationMode::Exhaustive;
  std::uint64_t seed = 0;
  std::optional<Configuration> counterexample;  // an F-configuration
  std::string detail;
};

// Never throws for a failed equation; shape errors raise Error(InvalidInput),
// an oversized exhaustive sweep raises Error(CapExceeded).
SimulationReport verify_simulation(const Network& f, const Network& g, const BlockEmbedding& phi,
                                   const SimulationOptions& options = {});

// Checks that every orbit edge x -> F(x) maps to a T-step path of G and that
// x lies on a cycle of F exactly when embed(x) lies on a cycle of G.
SimulationReport verify_orbit_embedding(const Network& f, const Network& g, const BlockEmbedding& phi,
                                        const SimulationOptions& options = {});

}  // namespace annet
