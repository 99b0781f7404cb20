// G-networks: closed networks of gates whose output ports are wired
// bijectively to input ports, their catalogs, and the special constructions
// built from them (prime rotations, conjunctive trees, 3-state Gt machine).
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "annet/csan.hpp"
#include "annet/network.hpp"
#include "annet/simulate.hpp"

namespace annet {

struct Gate {
  std::string name;
  std::size_t q = 2;
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<State> table;  // table[idx * out + k], idx = sum x_j q^j

  std::vector<State> apply(const std::vector<State>& inputs) const;
  // The bipartite input/output dependency graph is weakly connected.
  bool irreducible() const;
  void validate() const;
};

Gate make_gate(std::string name, std::size_t q, std::size_t in, std::size_t out,
               const std::function<std::vector<State>(const std::vector<State>&)>& f);

// Node v is read by input port alpha^-1(v) and written by output port beta(v).
// Ports are flattened in gate order: gate j's ports follow those of gate j-1.
struct GNetwork {
  std::size_t q = 2;
  std::vector<Gate> gates;
  std::vector<std::size_t> alpha;  // flattened input port -> node
  std::vector<std::size_t> beta;   // node -> flattened output port

  std::size_t size() const noexcept { return beta.size(); }
  // Throws Error(InvalidInput) on broken bijections or a gate reading its own output.
  void validate() const;
  std::size_t input_offset(std::size_t gate) const;
  std::size_t output_offset(std::size_t gate) const;
  // (gate, port) of a flattened output port.
  std::pair<std::size_t, std::size_t> output_port(std::size_t flat) const;
  std::pair<std::size_t, std::size_t> input_port(std::size_t flat) const;
};

// Incremental construction: allocate wires (nodes) and attach gates to them.
class GNetBuilder {
 public:
  explicit GNetBuilder(std::size_t q) : q_(q) {}
  std::size_t new_node();
  std::vector<std::size_t> new_nodes(std::size_t count);
  std::size_t add(const Gate& gate, const std::vector<std::size_t>& inputs,
                  const std::vector<std::size_t>& outputs);
  std::size_t node_count() const noexcept { return nodes_; }
  GNetwork build() const;

 private:
  std::size_t q_;
  std::size_t nodes_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::vector<std::size_t>> ins_, outs_;
};

Network gnetwork_to_network(const GNetwork& gn);

// Same dynamics with every dependency that cannot change the output removed.
Network effective_network(const Network& net);

// Groups nodes sharing an effective dependency set into gates matched against
// the catalog up to port permutations.  Throws Error(NotDecomposable).
GNetwork network_to_gnetwork(const Network& net, const std::vector<Gate>& catalog);

// Catalog names: Gmon, Gmon2, Gnor, Gnand, Gconj, Gwire, Gt.
const std::map<std::string, std::vector<Gate>>& gate_sets();
const Gate& catalog_gate(const std::string& set, const std::string& name);

struct PrimeRotations {
  GNetwork gn;
  Configuration marked;            // one 1 per circuit
  std::vector<std::size_t> primes; // circuit lengths
};

std::vector<std::size_t> primes_below(std::size_t n);
PrimeRotations prime_rotations(std::size_t n);

// F(x)_i = AND of x_j over edges j -> i; an empty conjunction is 1.
Network conjunctive_from_graph(const Digraph& g);
// The disjunctive counterpart: empty disjunction is 0.
Network disjunctive_from_graph(const Digraph& g);
// Conjugates a binary network by bitwise negation: x -> not F(not x).
Network conjugate_by_negation(const Network& net);

// The degree-3 fanin gadget: v1..v3 feed a 3-step AND whose result lands on vo.
struct FaninGadget {
  Network net;
  std::vector<std::size_t> inputs;
  std::size_t output = 0;
  std::vector<std::string> names;
};
FaninGadget fanin_gadget3();

struct GconjCompilation {
  GNetwork gn;
  BlockEmbedding embedding;
  std::size_t fanin_depth = 1;
  std::size_t fanout_depth = 1;
};

// Rewrites a conjunctive network as a network of AND and COPY gates that
// simulates it with T = fanin depth + fanout depth.
GconjCompilation conj_to_gconj(const Network& net);

// Modules over the 3-state Gt gates.  Input nodes hold their state forever.
struct GtModule {
  Network net;
  std::vector<std::size_t> inputs;
  std::size_t output = 0;
  std::size_t delay = 0;
  std::map<std::string, std::size_t> names;
};

GtModule gt_test_module();
GtModule gt_and_tree(std::size_t k);

struct GtTransient {
  GNetwork gn;
  Configuration initial;
  std::vector<std::size_t> primes;
  std::size_t loop_node = 0;  // the Λ output of the test module
};
GtTransient gt_transient_network(std::size_t n);

// The Boolean conjunctive network obtained by reading 2 as impossible:
// AND gates become AND, Λ(a, b) becomes a copy of a.
Network associated_conjunctive(const GNetwork& gn);

}  // namespace annet
