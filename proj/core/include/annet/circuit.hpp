// Boolean circuits and the compilers from circuits and monotone gate networks
// to networks over smaller gate sets.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "annet/gnet.hpp"
#include "annet/network.hpp"
#include "annet/simulate.hpp"

namespace annet {

enum class Op { And, Or, Not, Id };

const char* to_string(Op op) noexcept;
Op op_from_string(const std::string& s);

// Signal ids: inputs are 0..inputs-1, gate g drives signal inputs + g.
// NOT and ID read in[0] only.
struct CGate {
  Op op = Op::Id;
  std::array<std::size_t, 2> in{0, 0};
};

struct Circuit {
  std::size_t inputs = 0;
  std::vector<CGate> gates;              // topological order
  std::vector<std::size_t> outputs;      // signal ids
  std::vector<std::string> input_names;  // optional
  std::vector<std::string> output_names; // optional

  std::size_t signals() const noexcept { return inputs + gates.size(); }
  // Throws Error(InvalidInput) on forward references or out-of-range outputs.
  void validate() const;
};

std::size_t fanin(Op op) noexcept;
std::vector<State> eval(const Circuit& c, const std::vector<State>& bits);

// Longest and shortest input-to-signal path lengths (inputs have depth 0).
std::vector<std::size_t> max_depths(const Circuit& c);
std::vector<std::size_t> min_depths(const Circuit& c);
// Every input-to-output path has the same length.
bool is_synchronous(const Circuit& c);
std::size_t depth(const Circuit& c);
// Number of consumers of each signal, counting circuit outputs.
std::vector<std::size_t> fanouts(const Circuit& c);

// Pads short paths with ID gates so that every gate reads signals of depth
// exactly one less and every output sits at the maximum output depth.
Circuit synchronize(const Circuit& c);

// A layered circuit with as many outputs as inputs, every signal used once or
// twice, all paths of length `depth`.
Circuit random_closed_circuit(std::size_t inputs, std::size_t depth, std::uint64_t seed);

// The network whose node j computes output j of a closed circuit.
Network circuit_network(const Circuit& c);

// Bits per node in the binary encoding of an alphabet of size q.
std::size_t encoding_bits(std::size_t q);
std::vector<State> encode_configuration(const Configuration& x, std::size_t q);
// A circuit C with C(encode(x)) = encode(F(x)) for every configuration x.
Circuit circuit_encode(const Network& net);

struct GateCompilation {
  GNetwork gn;
  BlockEmbedding embedding;
};

// Monotone double-rail network for a closed synchronous circuit whose signals
// all have fanout 1 or 2.  Node j is encoded by its two rails (x_j, not x_j);
// time constant depth + 1.
GateCompilation double_rail(const Circuit& c);

// Fanin/fanout-2 network simulating a Gmon network with blocks (x, x, 0) and T = 6.
GateCompilation gmon_to_gmon2(const GNetwork& gn);

// A small network of gates read as a function of its input signals.
struct GateCircuit {
  struct Use {
    Gate gate;
    std::vector<std::size_t> in;  // signal ids
  };
  std::size_t inputs = 0;
  std::vector<Use> gates;          // gate k's outputs get the next signal ids
  std::vector<std::size_t> outputs;

  std::vector<State> eval(const std::vector<State>& bits) const;
};

struct NorRealizers {
  GateCircuit alpha;  // (a or b) and (c or d), four copies
  GateCircuit omega;  // (a or c) and (b or d), four copies
};
NorRealizers nor_realizers();

// Gnor network simulating a Gmon2 network by node doubling with T = 2.
GateCompilation gmon2_to_gnor(const GNetwork& gn);

}  // namespace annet
