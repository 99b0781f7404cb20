#include "annet/network.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

namespace annet {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::IllFormedCsan: return "ill-formed-csan";
    case ErrorKind::ConditionViolated: return "condition-violated";
    case ErrorKind::TraceMismatch: return "trace-mismatch";
    case ErrorKind::NotDecomposable: return "not-decomposable";
    case ErrorKind::MissingGate: return "missing-gate";
    case ErrorKind::CertificateInvalid: return "certificate-invalid";
    case ErrorKind::Construction: return "construction-error";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

std::size_t ConfigurationHash::operator()(const Configuration& x) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (State s : x) {
    h ^= static_cast<std::uint64_t>(s) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::uint64_t checked_power(std::size_t q, std::size_t k, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (q != 0 && r > limit / q) return limit + 1;
    r *= q;
  }
  return r;
}

}  // namespace

Network::Network(std::size_t alphabet, std::vector<Rule> rules) : q_(alphabet), rules_(std::move(rules)) {
  if (q_ == 0) throw Error(ErrorKind::InvalidInput, "alphabet size must be at least 1");
  const std::size_t n = rules_.size();
  for (std::size_t v = 0; v < n; ++v) {
    const Rule& r = rules_[v];
    std::vector<std::size_t> sorted = r.deps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidInput, "node " + std::to_string(v) + " lists a dependency twice");
    for (std::size_t d : r.deps)
      if (d >= n)
        throw Error(ErrorKind::InvalidInput,
                    "node " + std::to_string(v) + " depends on missing node " + std::to_string(d));
    const std::uint64_t expected = checked_power(q_, r.deps.size(), std::uint64_t{1} << 32);
    if (expected != r.table.size())
      throw Error(ErrorKind::InvalidInput, "node " + std::to_string(v) + " has table size " +
                                               std::to_string(r.table.size()) + ", expected " +
                                               std::to_string(expected));
    for (State s : r.table)
      if (s >= q_)
        throw Error(ErrorKind::InvalidInput,
                    "node " + std::to_string(v) + " table holds out-of-range state " + std::to_string(s));
  }
}

Network Network::identity(std::size_t alphabet, std::size_t nodes) {
  std::vector<Rule> rules(nodes);
  for (std::size_t v = 0; v < nodes; ++v) {
    rules[v].deps = {v};
    rules[v].table.resize(alphabet);
    std::iota(rules[v].table.begin(), rules[v].table.end(), State{0});
  }
  return Network(alphabet, std::move(rules));
}

std::size_t table_index(const Rule& rule, const Configuration& x, std::size_t q) {
  std::size_t idx = 0;
  for (std::size_t k = rule.deps.size(); k-- > 0;) idx = idx * q + x[rule.deps[k]];
  return idx;
}

State Network::eval(std::size_t v, const Configuration& x) const {
  const Rule& r = rules_[v];
  return r.table[table_index(r, x, q_)];
}

void Network::check_configuration(const Configuration& x) const {
  if (x.size() != rules_.size())
    throw Error(ErrorKind::InvalidInput, "configuration has " + std::to_string(x.size()) +
                                             " entries, network has " + std::to_string(rules_.size()) +
                                             " nodes");
  for (std::size_t v = 0; v < x.size(); ++v)
    if (x[v] >= q_)
      throw Error(ErrorKind::InvalidInput, "state " + std::to_string(x[v]) + " at node " +
                                               std::to_string(v) + " is outside the alphabet");
}

Network Network::canonical() const {
  std::vector<Rule> out;
  out.reserve(rules_.size());
  for (const Rule& r : rules_) {
    const std::size_t k = r.deps.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r.deps[a] < r.deps[b]; });
    Rule c;
    for (std::size_t i : order) c.deps.push_back(r.deps[i]);
    c.table.resize(r.table.size());
    // Position j of the new tuple holds the old position order[j].
    std::vector<State> digits(k, 0);
    for (std::size_t idx = 0; idx < r.table.size(); ++idx) {
      std::size_t rem = idx;
      for (std::size_t j = 0; j < k; ++j) {
        digits[j] = static_cast<State>(rem % q_);
        rem /= q_;
      }
      std::size_t old = 0;
      for (std::size_t j = k; j-- > 0;) {
        // digit of old position j is the new digit at the slot where order == j
        std::size_t slot = static_cast<std::size_t>(std::find(order.begin(), order.end(), j) - order.begin());
        old = old * q_ + digits[slot];
      }
      c.table[idx] = r.table[old];
    }
    out.push_back(std::move(c));
  }
  return Network(q_, std::move(out));
}

void step_into(const Network& net, const Configuration& x, Configuration& out) {
  const std::size_t n = net.size();
  out.resize(n);
  const std::size_t q = net.alphabet();
  for (std::size_t v = 0; v < n; ++v) {
    const Rule& r = net.rule(v);
    out[v] = r.table[table_index(r, x, q)];
  }
}

Configuration step(const Network& net, const Configuration& x) {
  net.check_configuration(x);
  Configuration out;
  step_into(net, x, out);
  return out;
}

Configuration iterate(const Network& net, Configuration x, std::uint64_t t) {
  net.check_configuration(x);
  Configuration next;
  for (std::uint64_t s = 0; s < t; ++s) {
    step_into(net, x, next);
    x.swap(next);
  }
  return x;
}

std::vector<State> trace(const Network& net, Configuration x, std::size_t v, std::uint64_t t) {
  net.check_configuration(x);
  if (v >= net.size()) throw Error(ErrorKind::InvalidInput, "trace node out of range");
  std::vector<State> out;
  out.reserve(t + 1);
  out.push_back(x[v]);
  Configuration next;
  for (std::uint64_t s = 0; s < t; ++s) {
    step_into(net, x, next);
    x.swap(next);
    out.push_back(x[v]);
  }
  return out;
}

OrbitAnalysis analyze_orbit(const Network& net, const Configuration& x, std::uint64_t budget) {
  net.check_configuration(x);
  std::unordered_map<Configuration, std::uint64_t, ConfigurationHash> seen;
  std::vector<Configuration> history;
  history.push_back(x);
  seen.emplace(x, 0);
  Configuration cur = x, next;
  for (std::uint64_t t = 1;; ++t) {
    step_into(net, cur, next);
    cur.swap(next);
    auto it = seen.find(cur);
    if (it != seen.end()) {
      if (t > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "orbit closes after " + std::to_string(t) + " steps, budget " + std::to_string(budget));
      OrbitAnalysis a;
      a.transient = it->second;
      a.period = t - it->second;
      a.cycle.assign(history.begin() + static_cast<std::ptrdiff_t>(a.transient), history.end());
      return a;
    }
    if (t >= budget)
      throw Error(ErrorKind::BudgetExceeded,
                  "orbit did not close within " + std::to_string(budget) + " steps");
    seen.emplace(cur, t);
    history.push_back(cur);
  }
}

std::uint64_t default_state_cap() {
  if (const char* env = std::getenv("ANNET_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 22;
}

std::uint64_t state_count(std::size_t q, std::size_t n, std::uint64_t cap) {
  std::uint64_t c = checked_power(q, n, cap);
  if (c > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(q) + "^" + std::to_string(n) +
                                            " configurations exceed the enumeration cap " +
                                            std::to_string(cap));
  return c;
}

Configuration config_at(std::uint64_t index, std::size_t q, std::size_t n) {
  Configuration x(n);
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = static_cast<State>(index % q);
    index /= q;
  }
  return x;
}

std::uint64_t index_of(const Configuration& x, std::size_t q) {
  std::uint64_t idx = 0;
  for (std::size_t v = x.size(); v-- > 0;) idx = idx * q + x[v];
  return idx;
}

OrbitGraph orbit_graph(const Network& net, std::uint64_t cap, unsigned jobs) {
  OrbitGraph g;
  g.alphabet = net.alphabet();
  g.nodes = net.size();
  const std::uint64_t total = state_count(net.alphabet(), net.size(), cap);
  g.succ.resize(total);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    Configuration x = config_at(lo, g.alphabet, g.nodes), y;
    for (std::uint64_t i = lo; i < hi; ++i) {
      step_into(net, x, y);
      g.succ[i] = index_of(y, g.alphabet);
      // advance x to the next index in mixed radix
      for (std::size_t v = 0; v < x.size(); ++v) {
        if (++x[v] < g.alphabet) break;
        x[v] = 0;
      }
    }
  };
  if (jobs <= 1 || total < 4096) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j * chunk, std::min(total, (j + 1) * chunk));
    for (auto& t : pool) t.join();
  }
  return g;
}

std::vector<Attractor> attractors(const OrbitGraph& graph) {
  const std::uint64_t total = graph.succ.size();
  constexpr std::uint32_t kUnseen = 0xffffffffu, kOnPath = 0xfffffffeu;
  std::vector<std::uint32_t> owner(total, kUnseen);
  std::vector<Attractor> result;
  std::vector<std::uint64_t> path;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (owner[s] != kUnseen) continue;
    path.clear();
    std::uint64_t cur = s;
    while (owner[cur] == kUnseen) {
      owner[cur] = kOnPath;
      path.push_back(cur);
      cur = graph.succ[cur];
    }
    std::uint32_t id;
    if (owner[cur] == kOnPath) {
      id = static_cast<std::uint32_t>(result.size());
      Attractor a;
      auto it = std::find(path.begin(), path.end(), cur);
      a.cycle.assign(it, path.end());
      result.push_back(std::move(a));
    } else {
      id = owner[cur];
    }
    for (std::uint64_t p : path) owner[p] = id;
    result[id].basin += path.size();
  }
  return result;
}

std::vector<Attractor> attractors(const Network& net, std::uint64_t cap, unsigned jobs) {
  return attractors(orbit_graph(net, cap, jobs));
}

}  // namespace annet
