// Finite automata networks in bounded-degree form and their exact dynamics.
//
// A network over the alphabet {0..q-1} stores, for every node, the list of
// nodes it reads and a transition table.  Tables are indexed in row-major
// tuple order with the first dependency varying fastest:
//   index = x[deps[0]] + q * x[deps[1]] + q^2 * x[deps[2]] + ...
// Configurations are enumerated with the same convention (node 0 fastest).
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "annet/error.hpp"

namespace annet {

using State = std::uint32_t;
using Configuration = std::vector<State>;

struct ConfigurationHash {
  std::size_t operator()(const Configuration& x) const noexcept;
};

struct Rule {
  std::vector<std::size_t> deps;
  std::vector<State> table;

  bool operator==(const Rule&) const = default;
};

class Network {
 public:
  Network() = default;
  // Validates every rule; throws Error(InvalidInput) on a malformed rule.
  Network(std::size_t alphabet, std::vector<Rule> rules);

  static Network identity(std::size_t alphabet, std::size_t nodes);

  std::size_t alphabet() const noexcept { return q_; }
  std::size_t size() const noexcept { return rules_.size(); }
  const Rule& rule(std::size_t v) const { return rules_.at(v); }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  // Local map of node v applied to the full configuration x.
  State eval(std::size_t v, const Configuration& x) const;

  // Throws Error(InvalidInput) unless x has one in-range state per node.
  void check_configuration(const Configuration& x) const;

  // Same map with every dependency list sorted ascending (tables permuted).
  Network canonical() const;

  bool operator==(const Network&) const = default;

 private:
  std::size_t q_ = 1;
  std::vector<Rule> rules_;
};

// Index of a dependency tuple into a rule table.
std::size_t table_index(const Rule& rule, const Configuration& x, std::size_t q);

Configuration step(const Network& net, const Configuration& x);
// Allocation-free variant; `out` is resized to the node count.
void step_into(const Network& net, const Configuration& x, Configuration& out);
Configuration iterate(const Network& net, Configuration x, std::uint64_t t);
// The sequence F^s(x)_v for s = 0..t.
std::vector<State> trace(const Network& net, Configuration x, std::size_t v, std::uint64_t t);

struct OrbitAnalysis {
  std::uint64_t transient = 0;
  std::uint64_t period = 1;
  std::vector<Configuration> cycle;  // cycle[0] = F^transient(x)
};

// Exact transient and period through a visited-configuration map.  Throws
// Error(BudgetExceeded) when transient + period exceeds `budget`.
OrbitAnalysis analyze_orbit(const Network& net, const Configuration& x, std::uint64_t budget);

// Enumeration cap: ANNET_MAX_STATES from the environment, else 2^22.
std::uint64_t default_state_cap();
// q^n, throwing Error(CapExceeded) when it exceeds `cap`.
std::uint64_t state_count(std::size_t q, std::size_t n, std::uint64_t cap);
Configuration config_at(std::uint64_t index, std::size_t q, std::size_t n);
std::uint64_t index_of(const Configuration& x, std::size_t q);

struct OrbitGraph {
  std::size_t alphabet = 1;
  std::size_t nodes = 0;
  std::vector<std::uint64_t> succ;  // succ[i] = index_of(F(config_at(i)))
};

OrbitGraph orbit_graph(const Network& net, std::uint64_t cap = default_state_cap(),
                       unsigned jobs = 1);

struct Attractor {
  std::vector<std::uint64_t> cycle;  // configuration indices in orbit order
  std::uint64_t basin = 0;           // configurations whose orbit ends here
};

std::vector<Attractor> attractors(const OrbitGraph& graph);
std::vector<Attractor> attractors(const Network& net, std::uint64_t cap = default_state_cap(),
                                  unsigned jobs = 1);

}  // namespace annet
