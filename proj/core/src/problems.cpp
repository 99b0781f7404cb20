#include "annet/problems.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>

namespace annet {

namespace {

// The full orbit x, F(x), ..., F^{transient + period - 1}(x).
struct Orbit {
  std::vector<Configuration> configs;
  std::uint64_t transient = 0;
  std::uint64_t period = 1;

  const Configuration& at(std::uint64_t t) const {
    if (t < configs.size()) return configs[t];
    return configs[transient + (t - transient) % period];
  }
};

Orbit full_orbit(const Network& net, const Configuration& x, std::uint64_t budget) {
  net.check_configuration(x);
  Orbit o;
  std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> seen;
  o.configs.push_back(x);
  seen.emplace(x, 0);
  Configuration next;
  for (std::uint64_t t = 1;; ++t) {
    if (t > budget)
      throw Error(ErrorKind::BudgetExceeded, "orbit did not close within " + std::to_string(budget) + " steps");
    step_into(net, o.configs.back(), next);
    auto it = seen.find(next);
    if (it != seen.end()) {
      o.transient = it->second;
      o.period = t - it->second;
      return o;
    }
    seen.emplace(next, t);
    o.configs.push_back(next);
  }
}

// A network whose every node reads every node, built from its global map.
Network global_network(std::size_t q, std::size_t n, std::uint64_t cap,
                       const std::function<void(const Configuration&, Configuration&)>& f) {
  const std::uint64_t count = state_count(q, n, cap);
  std::vector<Rule> rules(n);
  for (std::size_t v = 0; v < n; ++v) {
    rules[v].deps.resize(n);
    for (std::size_t u = 0; u < n; ++u) rules[v].deps[u] = u;
    rules[v].table.resize(count);
  }
  Configuration x(n, 0), y(n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    f(x, y);
    for (std::size_t v = 0; v < n; ++v) rules[v].table[idx] = y[v];
    for (std::size_t v = 0; v < n; ++v) {
      if (++x[v] < q) break;
      x[v] = 0;
    }
  }
  return Network(q, std::move(rules));
}

std::size_t bit_length(std::uint64_t t) {
  std::size_t b = 1;
  while (b < 64 && (t >> b) != 0) ++b;
  return b;
}

bool decode_answers(Decoder d, const std::vector<bool>& answers) {
  if (d == Decoder::All) return std::all_of(answers.begin(), answers.end(), [](bool a) { return a; });
  return std::any_of(answers.begin(), answers.end(), [](bool a) { return a; });
}

void check_embedding(const Network& g, const BlockEmbedding& phi, std::size_t v, const Configuration& x) {
  phi.validate();
  if (g.alphabet() != phi.g_alphabet || g.size() != phi.g_size)
    throw Error(ErrorKind::InvalidInput, "embedding does not match the simulating network");
  if (v >= phi.blocks.size()) throw Error(ErrorKind::InvalidInput, "node outside the embedding");
  if (x.size() != phi.blocks.size()) throw Error(ErrorKind::InvalidInput, "configuration size mismatch");
  for (State s : x)
    if (s >= phi.f_alphabet) throw Error(ErrorKind::InvalidInput, "configuration state out of range");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw Error(ErrorKind::InvalidInput, "time overflows 64 bits");
  return a * b;
}

}  // namespace

void PredInstance::validate() const {
  if (v >= net.size()) throw Error(ErrorKind::InvalidInput, "node " + std::to_string(v) + " out of range");
  if (q >= net.alphabet()) throw Error(ErrorKind::InvalidInput, "target state out of range");
  net.check_configuration(x);
}

void PredChgInstance::validate() const {
  if (v >= net.size()) throw Error(ErrorKind::InvalidInput, "node " + std::to_string(v) + " out of range");
  if (k == 0) throw Error(ErrorKind::InvalidInput, "gap k must be at least 1");
  net.check_configuration(x);
}

void ReachInstance::validate() const {
  net.check_configuration(x);
  net.check_configuration(y);
}

bool u_pred(const PredInstance& inst, std::uint64_t budget) {
  inst.validate();
  if (inst.t > budget)
    throw Error(ErrorKind::BudgetExceeded,
                "unary time " + std::to_string(inst.t) + " exceeds the step budget " + std::to_string(budget));
  Configuration x = inst.x, next;
  for (std::uint64_t s = 0; s < inst.t; ++s) {
    step_into(inst.net, x, next);
    x.swap(next);
  }
  return x[inst.v] == inst.q;
}

bool b_pred(const PredInstance& inst, std::uint64_t budget) {
  inst.validate();
  const Orbit o = full_orbit(inst.net, inst.x, budget);
  return o.at(inst.t)[inst.v] == inst.q;
}

bool pred(const PredInstance& inst, std::uint64_t budget) {
  return inst.encoding == TimeEncoding::Unary ? u_pred(inst, budget) : b_pred(inst, budget);
}

bool pred_chg(const PredChgInstance& inst, std::uint64_t budget) {
  inst.validate();
  const Orbit o = full_orbit(inst.net, inst.x, budget);
  const std::uint64_t last = (o.transient + inst.k - 1) / inst.k + o.period;
  const State x_v = inst.x[inst.v];
  for (std::uint64_t t = 1; t <= last; ++t) {
    const unsigned __int128 kt = static_cast<unsigned __int128>(inst.k) * t;
    std::uint64_t s = o.transient;
    if (kt < o.configs.size())
      s = static_cast<std::uint64_t>(kt);
    else
      s += static_cast<std::uint64_t>((kt - o.transient) % o.period);
    if (o.at(s)[inst.v] != x_v) return true;
  }
  return false;
}

bool reach(const ReachInstance& inst, std::uint64_t budget) {
  inst.validate();
  const Orbit o = full_orbit(inst.net, inst.x, budget);
  return std::find(o.configs.begin(), o.configs.end(), inst.y) != o.configs.end();
}

bool PredReduction::decode(const std::vector<bool>& answers) const {
  if (answers.size() != calls.size()) throw Error(ErrorKind::InvalidInput, "one answer per call is required");
  return decode_answers(decoder, answers);
}

bool PredChgReduction::decode(const std::vector<bool>& answers) const {
  if (answers.size() != calls.size()) throw Error(ErrorKind::InvalidInput, "one answer per call is required");
  return decode_answers(decoder, answers);
}

PredReduction reduce_pred_via_simulation(const Network& g, const BlockEmbedding& phi, const PredInstance& inst) {
  check_embedding(g, phi, inst.v, inst.x);
  if (inst.q >= phi.f_alphabet) throw Error(ErrorKind::InvalidInput, "target state out of range");
  const Configuration y = embed(phi, inst.x);
  const auto& block = phi.blocks[inst.v];
  const auto& patterns = phi.patterns[inst.v];
  const Configuration& target = patterns[inst.q];
  std::vector<std::size_t> positions;
  for (State other = 0; other < phi.f_alphabet; ++other) {
    if (other == inst.q) continue;
    std::size_t j = 0;
    while (patterns[other][j] == target[j]) ++j;  // patterns are pairwise distinct
    if (std::find(positions.begin(), positions.end(), j) == positions.end()) positions.push_back(j);
  }
  std::sort(positions.begin(), positions.end());
  PredReduction r;
  r.decoder = Decoder::All;
  for (std::size_t j : positions) {
    PredInstance call{g, block[j], y, target[j], checked_mul(inst.t, phi.time), inst.encoding};
    r.calls.push_back(std::move(call));
  }
  return r;
}

PredChgReduction reduce_pred_chg_via_simulation(const Network& g, const BlockEmbedding& phi,
                                                const PredChgInstance& inst) {
  check_embedding(g, phi, inst.v, inst.x);
  if (inst.k == 0) throw Error(ErrorKind::InvalidInput, "gap k must be at least 1");
  const Configuration y = embed(phi, inst.x);
  const auto& block = phi.blocks[inst.v];
  const auto& patterns = phi.patterns[inst.v];
  const Configuration& start = patterns[inst.x[inst.v]];
  PredChgReduction r;
  r.decoder = Decoder::Any;
  for (std::size_t j = 0; j < block.size(); ++j) {
    const bool varies = std::any_of(patterns.begin(), patterns.end(),
                                    [&](const Configuration& p) { return p[j] != start[j]; });
    if (varies) r.calls.push_back({g, block[j], y, checked_mul(inst.k, phi.time)});
  }
  return r;
}

State pred_to_reach_letter(std::size_t q, State x, State y, State bit) {
  return static_cast<State>(x + q * y + q * q * bit);
}

PredToReach pred_to_reach(const PredInstance& inst) {
  inst.validate();
  const std::size_t q = inst.net.alphabet(), n = inst.net.size();
  const std::size_t m = std::max(n, bit_length(inst.t));
  const State alpha = static_cast<State>(2 * q * q);
  const Network& f = inst.net;
  const std::size_t v = inst.v;
  const State target = inst.q;

  auto map = [&](const Configuration& z, Configuration& out) {
    out = z;
    if (std::any_of(z.begin(), z.end(), [&](State s) { return s == alpha; })) return;
    Configuration y(n);
    bool positive = false;
    for (std::size_t i = 0; i < m; ++i) positive = positive || z[i] / (q * q) != 0;
    for (std::size_t i = 0; i < n; ++i) y[i] = (z[i] / q) % q;
    if (!positive) {
      if (y[v] == target) std::fill(out.begin(), out.end(), alpha);
      return;
    }
    Configuration fy(n);
    step_into(f, y, fy);
    bool borrow = true;
    for (std::size_t i = 0; i < m; ++i) {
      State bit = z[i] / (q * q);
      if (borrow) {
        borrow = bit == 0;
        bit ^= 1;
      }
      const State xi = z[i] % q;
      const State yi = i < n ? fy[i] : (z[i] / q) % q;
      out[i] = pred_to_reach_letter(q, xi, yi, bit);
    }
  };

  PredToReach r;
  r.m = m;
  r.alpha = alpha;
  Network g = global_network(2 * q * q + 1, m, UINT64_MAX, map);
  Configuration start(m);
  for (std::size_t i = 0; i < m; ++i) {
    const State xi = i < n ? inst.x[i] : 0;
    start[i] = pred_to_reach_letter(q, xi, xi, static_cast<State>((inst.t >> i) & 1));
  }
  r.instance = {std::move(g), std::move(start), Configuration(m, alpha)};
  return r;
}

State reach_to_pred_letter(std::size_t q, State x, State y, State t) {
  return static_cast<State>(x + q * y + q * q * t);
}

PredInstance reach_to_pred(const ReachInstance& inst, std::uint64_t cap) {
  inst.validate();
  const std::size_t q = inst.net.alphabet(), n = inst.net.size();
  if (q < 2) throw Error(ErrorKind::InvalidInput, "the marker needs two distinct letters, alphabet has one");
  const std::uint64_t horizon = state_count(q, n, cap);
  const std::size_t a = q * q * q;
  state_count(a, n + 1, cap);  // table size of every node
  const Network& f = inst.net;
  const State a1 = 1;

  auto map = [&](const Configuration& z, Configuration& out) {
    Configuration x(n), y(n), fx(n);
    bool zero = true, equal = true;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = z[i] % q;
      y[i] = (z[i] / q) % q;
      zero = zero && z[i] / (q * q) == 0;
      equal = equal && x[i] == y[i];
    }
    out[n] = equal ? a1 : z[n];
    if (zero) {
      for (std::size_t i = 0; i < n; ++i) out[i] = reach_to_pred_letter(q, y[i], y[i], 0);
      return;
    }
    step_into(f, x, fx);
    bool borrow = true;
    for (std::size_t i = 0; i < n; ++i) {
      State digit = z[i] / (q * q);
      if (borrow) {
        borrow = digit == 0;
        digit = digit == 0 ? static_cast<State>(q - 1) : digit - 1;
      }
      out[i] = reach_to_pred_letter(q, fx[i], y[i], digit);
    }
  };

  Network g = global_network(a, n + 1, cap, map);
  Configuration start(n + 1, 0);
  std::uint64_t t = horizon - 1;
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = reach_to_pred_letter(q, inst.x[i], inst.y[i], static_cast<State>(t % q));
    t /= q;
  }
  return PredInstance{std::move(g), n, std::move(start), a1, horizon, TimeEncoding::Binary};
}

void Cnf::validate() const {
  for (const auto& clause : clauses)
    for (int lit : clause)
      if (lit == 0 || static_cast<std::size_t>(lit < 0 ? -static_cast<long>(lit) : lit) > vars)
        throw Error(ErrorKind::InvalidInput, "literal " + std::to_string(lit) + " out of range");
}

bool Cnf::eval(std::uint64_t valuation) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
      const bool value = (valuation >> var) & 1;
      if (value == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> clause;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long vars = -1, count = -1;
      if (header || !(ls >> fmt >> vars >> count) || fmt != "cnf" || vars < 0 || count < 0)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad problem line");
      header = true;
      cnf.vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(count);
      continue;
    }
    if (!header) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": clause before problem line");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > cnf.vars)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": literal " + tok + " out of range");
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw Error(ErrorKind::Parse, "missing problem line");
  if (!clause.empty()) cnf.clauses.push_back(clause);
  if (cnf.clauses.size() != declared)
    throw Error(ErrorKind::Parse, "problem line declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::optional<std::uint64_t> brute_force_sat(const Cnf& cnf) {
  cnf.validate();
  if (cnf.vars > 30) throw Error(ErrorKind::CapExceeded, "brute-force SAT is limited to 30 variables");
  const std::uint64_t count = std::uint64_t{1} << cnf.vars;
  for (std::uint64_t v = 0; v < count; ++v)
    if (cnf.eval(v)) return v;
  return std::nullopt;
}

namespace {

// Binary network over (b, v): node 0 is b, nodes 1..n the bits of v.
Network counter_network(const Cnf& cnf, const std::function<std::pair<State, std::uint64_t>(State, std::uint64_t)>& f) {
  cnf.validate();
  const std::size_t n = cnf.vars;
  if (n > 20) throw Error(ErrorKind::CapExceeded, "SAT networks are limited to 20 variables");
  return global_network(2, n + 1, UINT64_MAX, [&](const Configuration& x, Configuration& out) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < n; ++j) v |= std::uint64_t{x[j + 1]} << j;
    const auto [b, w] = f(x[0], v);
    out[0] = b;
    for (std::size_t j = 0; j < n; ++j) out[j + 1] = static_cast<State>((w >> j) & 1);
  });
}

}  // namespace

Network sat_pred_network(const Cnf& cnf) {
  const std::uint64_t mask = (std::uint64_t{1} << cnf.vars) - 1;
  return counter_network(cnf, [&](State, std::uint64_t v) {
    return std::pair<State, std::uint64_t>{cnf.eval(v) ? 1 : 0, (v + 1) & mask};
  });
}

Network reach_easy_network(const Cnf& cnf) {
  const std::uint64_t mask = (std::uint64_t{1} << cnf.vars) - 1;
  return counter_network(cnf, [&](State b, std::uint64_t v) {
    if (b == 1 || !cnf.eval(v)) return std::pair<State, std::uint64_t>{0, (v + 1) & mask};
    return std::pair<State, std::uint64_t>{1, v};
  });
}

HCounterState h_counter_decode(const Configuration& x) {
  HCounterState s;
  s.c = x.empty() ? 0 : x[0] & 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    s.i |= std::uint64_t{(x[j] >> 1) & 1} << j;
    s.k |= std::uint64_t{(x[j] >> 2) & 1} << j;
  }
  return s;
}

Configuration h_counter_encode(const HCounterState& s, std::size_t n) {
  Configuration x(n + 2);
  for (std::size_t j = 0; j < x.size(); ++j)
    x[j] = static_cast<State>(s.c + 2 * ((s.i >> j) & 1) + 4 * ((s.k >> j) & 1));
  return x;
}

Network h_counter_network(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::CapExceeded, "H_n is tabulated only up to n = 6");
  const std::size_t m = n + 2;
  const std::uint64_t kmod = (std::uint64_t{1} << n) + 1;
  return global_network(8, m, UINT64_MAX, [&](const Configuration& x, Configuration& out) {
    HCounterState s = h_counter_decode(x);
    const bool wrap = s.i >= 2 * s.k;
    HCounterState next;
    next.c = (s.i < s.k || wrap) ? 0 : 1;
    next.i = wrap ? 0 : s.i + 1;
    next.k = wrap ? (s.k + 1) % kmod : s.k;
    out = h_counter_encode(next, n);
  });
}

Network product_network(const Network& f, const Network& h) {
  const std::size_t qf = f.alphabet(), qh = h.alphabet();
  const std::size_t n = std::max(f.size(), h.size());
  const std::size_t q = qf * qh;
  std::vector<Rule> rules(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> deps;
    if (v < f.size()) deps = f.rule(v).deps;
    if (v < h.size())
      for (std::size_t d : h.rule(v).deps)
        if (std::find(deps.begin(), deps.end(), d) == deps.end()) deps.push_back(d);
    if (deps.empty()) deps.push_back(v);
    const std::uint64_t count = state_count(q, deps.size(), std::uint64_t{1} << 26);
    Rule r;
    r.deps = deps;
    r.table.resize(count);
    Configuration fx(f.size(), 0), hx(h.size(), 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t d : deps) {
        const State s = static_cast<State>(rest % q);
        rest /= q;
        if (d < f.size()) fx[d] = s % qf;
        if (d < h.size()) hx[d] = s / qf;
      }
      const State a = v < f.size() ? f.eval(v, fx) : 0;
      const State b = v < h.size() ? h.eval(v, hx) : 0;
      r.table[idx] = static_cast<State>(a + qf * b);
    }
    rules[v] = std::move(r);
  }
  return Network(q, std::move(rules));
}

Network odometer(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "odometer needs at least one node");
  using L = OdometerLetters;
  const std::size_t q = L::alphabet;
  auto digit = [](State s) { return s <= 2; };
  auto chain = [](State s) { return s >= L::c0 && s < L::c0 + 3; };

  auto local = [&](std::size_t i, State prev, State x, State next) -> State {
    const bool first = i == 0, last = i + 1 == n;
    if (digit(x)) {
      if (last) return (x + 1) % 3;
      if (!digit(next)) return x;
      if (x == 2) return 0;
      if (next == 2) return x + 1;
      return x;
    }
    if (x == L::a || x == L::b) return (first || prev == 0) ? 0 : x;
    if (chain(x)) {
      const State j = x - L::c0;
      if (first && j == 2) return 0;
      if (!first && prev == 0) return 0;
      if (last) return L::c0 + (j + 1) % 3;
      if (!chain(next)) return x;
      if (j == 2) return L::c0;
      if (next - L::c0 == 2) return x + 1;
      return x;
    }
    return x;
  };

  std::vector<Rule> rules(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rule& r = rules[i];
    if (i > 0) r.deps.push_back(i - 1);
    r.deps.push_back(i);
    if (i + 1 < n) r.deps.push_back(i + 1);
    std::size_t count = 1;
    for (std::size_t d = 0; d < r.deps.size(); ++d) count *= q;
    r.table.resize(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rest = idx;
      State prev = 0, next = 0;
      if (i > 0) {
        prev = static_cast<State>(rest % q);
        rest /= q;
      }
      const State x = static_cast<State>(rest % q);
      rest /= q;
      if (i + 1 < n) next = static_cast<State>(rest % q);
      r.table[idx] = local(i, prev, x, next);
    }
  }
  return Network(q, std::move(rules));
}

}  // namespace annet
