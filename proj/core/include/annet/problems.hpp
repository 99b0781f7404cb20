// Desk-scale oracles for the prediction and reachability problems, the
// reductions between them, and the networks used to separate their
// complexities (SAT counter, H_n counter, products, odometer).
//
// All oracles are exact: they enumerate the orbit of the initial
// configuration and read the answer off its transient and cycle.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "annet/network.hpp"
#include "annet/simulate.hpp"

namespace annet {

// Unary times are stepped one by one and are limited to the step budget;
// binary times may be arbitrarily large and are answered by cycle arithmetic.
enum class TimeEncoding { Unary, Binary };

// Question: F^t(x)_v = q ?
struct PredInstance {
  Network net;
  std::size_t v = 0;
  Configuration x;
  State q = 0;
  std::uint64_t t = 0;
  TimeEncoding encoding = TimeEncoding::Binary;

  void validate() const;
};

// Question: is there t >= 1 with F^{kt}(x)_v != x_v ?  (t = 0 never counts.)
struct PredChgInstance {
  Network net;
  std::size_t v = 0;
  Configuration x;
  std::uint64_t k = 1;

  void validate() const;
};

// Question: is there t >= 0 with F^t(x) = y ?
struct ReachInstance {
  Network net;
  Configuration x;
  Configuration y;

  void validate() const;
};

// `budget` bounds the number of steps; exceeding it raises
// Error(BudgetExceeded).  u_pred rejects unary times above the budget.
bool u_pred(const PredInstance& inst, std::uint64_t budget = default_state_cap());
bool b_pred(const PredInstance& inst, std::uint64_t budget = default_state_cap());
// Dispatches on inst.encoding.
bool pred(const PredInstance& inst, std::uint64_t budget = default_state_cap());
// Checks t = 1 .. ceil(transient / k) + period, which covers every residue of
// kt on the cycle once kt has passed the transient.
bool pred_chg(const PredChgInstance& inst, std::uint64_t budget = default_state_cap());
bool reach(const ReachInstance& inst, std::uint64_t budget = default_state_cap());

// Oracle calls over a simulating network G and the rule combining their answers.
enum class Decoder { All, Any };

struct PredReduction {
  std::vector<PredInstance> calls;
  Decoder decoder = Decoder::All;
  bool decode(const std::vector<bool>& answers) const;
};

struct PredChgReduction {
  std::vector<PredChgInstance> calls;
  Decoder decoder = Decoder::Any;
  bool decode(const std::vector<bool>& answers) const;
};

// G simulates F through phi in time T = phi.time.  F^t(x)_v = q holds iff the
// block of v carries the pattern of q at time tT, which is tested on one
// distinguishing node per competing state (at most |Q|-1 calls, all must hold).
PredReduction reduce_pred_via_simulation(const Network& g, const BlockEmbedding& phi,
                                         const PredInstance& inst);
// F^{kt}(x)_v != x_v iff some node of the block of v leaves its pattern at a
// time multiple of kT; one PRED-CHG call with gap kT per such node, any may hold.
PredChgReduction reduce_pred_chg_via_simulation(const Network& g, const BlockEmbedding& phi,
                                                const PredChgInstance& inst);

// B-PRED to REACH.  The network runs on A = Q x Q x {0,1} plus a sink letter
// alpha over m = max(n, bits(t)) nodes: node i holds (x_i, y_i, bit i of t).
// While the counter is positive it steps F on the y component and decrements;
// at zero it jumps to alpha^m when y_v = q and freezes otherwise.  Every other
// configuration is fixed.  The answer is REACH(x' = (x, x, t), alpha^m).
struct PredToReach {
  ReachInstance instance;
  std::size_t m = 0;
  State alpha = 0;
};
PredToReach pred_to_reach(const PredInstance& inst);
// Letter of A for (x, y, bit).
State pred_to_reach_letter(std::size_t q, State x, State y, State bit);

// REACH to B-PRED.  The network runs on A = Q x Q x Q over n+1 nodes: node i
// holds (x_i, y_i, t_i) with t a base-|Q| counter, and the last node is a
// marker that becomes a1 = 1 as soon as x = y.  The PRED question asks for a1
// at the marker after |Q|^n steps.  Throws Error(CapExceeded) when |Q|^n or
// the network tables exceed `cap`, and Error(InvalidInput) when |Q| < 2.
PredInstance reach_to_pred(const ReachInstance& inst, std::uint64_t cap = default_state_cap());
State reach_to_pred_letter(std::size_t q, State x, State y, State t);

// CNF formulas over variables 1..vars; literal -j is the negation of j.
struct Cnf {
  std::size_t vars = 0;
  std::vector<std::vector<int>> clauses;

  void validate() const;
  // Bit j-1 of `valuation` is the value of variable j.
  bool eval(std::uint64_t valuation) const;
};

// Throws Error(Parse) on malformed DIMACS text.
Cnf parse_dimacs(const std::string& text);
std::string to_dimacs(const Cnf& cnf);
// Smallest satisfying valuation, by enumeration (at most 30 variables).
std::optional<std::uint64_t> brute_force_sat(const Cnf& cnf);

// Node 0 is b, nodes 1..n hold the counter i (node 1 least significant):
// F(b, i) = (phi(i), i + 1 mod 2^n).
Network sat_pred_network(const Cnf& cnf);
// F(b, v) = (0, v + 1 mod 2^n) if b = 1 or not phi(v), else (1, v).
Network reach_easy_network(const Cnf& cnf);

// H_n over {0,1}^3 per node, letter c + 2 i_bit + 4 k_bit, with n + 2 nodes so
// that the counters i <= 2k and k <= 2^n fit.  Every node writes the sequence
// 0^k 1^k on its c component for every k = 0 .. 2^n in turn.
Network h_counter_network(std::size_t n);
struct HCounterState {
  State c = 0;
  std::uint64_t i = 0;
  std::uint64_t k = 0;
};
HCounterState h_counter_decode(const Configuration& x);
Configuration h_counter_encode(const HCounterState& s, std::size_t n);

// F x H with letter a + |Q_F| b.  The smaller network is padded with fixed
// nodes in state 0; both components evolve independently.
Network product_network(const Network& f, const Network& h);

// Odometer network on n nodes over ten letters:
//   0, 1, 2       counter digits (cycle of length 3 * 2^(n-1))
//   a, b          tree states flushed to 0 from the left
//   c0, c1, c2    second odometer, flushed to 0 when node 0 reads c2
//   idle0, idle1  fixed
struct OdometerLetters {
  static constexpr State a = 3;
  static constexpr State b = 4;
  static constexpr State c0 = 5;
  static constexpr State idle0 = 8;
  static constexpr State idle1 = 9;
  static constexpr std::size_t alphabet = 10;
};
Network odometer(std::size_t n);

}  // namespace annet
