// Concrete symmetric automata networks: undirected labeled graphs whose
// vertices update from their own state and the multiset of (edge-modified)
// neighbour states.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "annet/network.hpp"

namespace annet {

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // undirected, u < v

  std::vector<std::vector<std::size_t>> adjacency() const;
  std::size_t max_degree() const;
};

// Directed graph with sorted, duplicate-free edge list.
struct Digraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool operator==(const Digraph&) const = default;
};

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Ranks bounded multisets over {0..q-1}.  A multiset is a count vector c with
// sum(c) <= k; ranks follow lexicographic order of count vectors.
class MultisetIndexer {
 public:
  MultisetIndexer(std::size_t q, std::size_t k);

  std::size_t size() const noexcept { return size_; }
  std::size_t rank(const std::vector<std::size_t>& counts) const;
  std::vector<std::size_t> unrank(std::size_t r) const;
  std::size_t alphabet() const noexcept { return q_; }
  std::size_t bound() const noexcept { return k_; }

 private:
  // Number of count vectors over m letters with total <= r.
  std::size_t count(std::size_t m, std::size_t r) const;

  std::size_t q_, k_, size_;
  std::vector<std::vector<std::size_t>> binom_;
};

// Identifies which builder produced a label, so family predicates can test it.
struct LabelSpec {
  std::string family;  // "threshold", "linear", "max", "min", "lifelike", "interval", "reaction", "table"
  std::vector<long> params;
};

struct VertexLabel {
  std::size_t bound = 0;      // largest multiset total covered by the table
  std::vector<State> table;   // table[own * M + rank(multiset)]
  LabelSpec spec;

  State apply(State own, const std::vector<std::size_t>& counts, std::size_t q) const;
  // Faster form for callers that reuse an indexer built for (q, bound).
  State apply(State own, const std::vector<std::size_t>& counts, const MultisetIndexer& idx) const;
};

struct CsanEdge {
  std::size_t u = 0, v = 0;
  std::vector<State> rho;     // state modifier, total on Q
  std::string rho_id;         // "id", "neg", "act" or "custom"
};

class Csan {
 public:
  Csan() = default;
  // Validates symmetry, simplicity and λ table coverage; throws
  // Error(IllFormedCsan) on a missing table entry, Error(InvalidInput) otherwise.
  Csan(std::size_t alphabet, std::size_t nodes, std::vector<CsanEdge> edges,
       std::vector<VertexLabel> labels);

  std::size_t alphabet() const noexcept { return q_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<CsanEdge>& edges() const noexcept { return edges_; }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  const VertexLabel& label(std::size_t v) const { return labels_.at(v); }
  // Incident edges of v, as (neighbour, edge index).
  const std::vector<std::pair<std::size_t, std::size_t>>& incident(std::size_t v) const {
    return incident_.at(v);
  }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
  Graph graph() const;

 private:
  std::size_t q_ = 1;
  std::vector<CsanEdge> edges_;
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident_;
};

std::vector<State> rho_identity(std::size_t q);
std::vector<State> rho_negation();                 // binary only
std::vector<State> rho_activity(std::size_t q);    // 1 -> 1, everything else -> 0
std::vector<State> rho_by_id(const std::string& id, std::size_t q);

// Tabulates an arbitrary local rule f(own, counts) for multisets of total <= bound.
VertexLabel make_label(std::size_t q, std::size_t bound, LabelSpec spec,
                       const std::function<State(State, const std::vector<std::size_t>&)>& f);

// Builds a CSAN with a uniform ρ over the graph edges and per-vertex labels.
Csan make_csan(std::size_t q, const Graph& g, const std::string& rho_id,
               const std::function<VertexLabel(std::size_t v, std::size_t degree)>& label);

Configuration csan_step(const Csan& c, const Configuration& x);

enum class Polarity { Min, Max };

Csan build_threshold(const Graph& g, const std::vector<long>& theta);
Csan build_linear_gf2(const Graph& g);
Csan build_rule90_ring(std::size_t n);
Csan build_minmax(const Graph& g, const std::vector<Polarity>& polarity, std::size_t q = 2);
Csan build_lifelike(const Graph& g, const std::set<std::size_t>& birth,
                    const std::set<std::size_t>& survive);
Csan build_game_of_life(const Graph& g);
Csan build_interval(const Graph& g, std::size_t alpha, std::size_t beta);
// Alphabet {0..q'}; state 1 is active, states 2..q' are refractory.
Csan build_reaction_diffusion(const Graph& g, std::size_t theta, std::size_t q_prime);

// Local labeling constraint of a family: a predicate on a vertex label and
// the labels of its incident edges.
struct FamilySpec {
  std::string name;
  std::function<bool(const Csan&, std::size_t v)> accepts;
};

FamilySpec threshold_family();
FamilySpec linear_family();
FamilySpec minmax_family();
FamilySpec lifelike_family(std::set<std::size_t> birth, std::set<std::size_t> survive);
FamilySpec game_of_life_family();
FamilySpec interval_family();
FamilySpec reaction_family();

// The label a family builder gives a vertex of the given degree.  `spec.family`
// is one of threshold, linear, max, min, lifelike, interval, reaction.
VertexLabel family_label(const LabelSpec& spec, std::size_t q, std::size_t degree);

// First vertex rejected by the family, if any.
std::optional<std::size_t> family_violation(const Csan& c, const FamilySpec& family);

Network csan_to_network(const Csan& c);

// Effective dependencies derived from labels, without enumerating Q^V.
Digraph interaction_graph_csan(const Csan& c);
// Effective dependencies of a network by brute force over its local tables.
Digraph interaction_graph_bruteforce(const Network& net);

enum class MatrixKind { Gf2, BooleanOr, BooleanAnd };

// Row i of M lists the nodes node i reads.  Empty rows give constant 0 (GF2, OR)
// or constant 1 (AND).
Network matrix_to_network(MatrixKind kind, const std::vector<std::vector<int>>& m);
std::vector<std::vector<int>> circulant_rule90(std::size_t n);

}  // namespace annet
