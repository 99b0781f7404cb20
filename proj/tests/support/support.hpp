// Generators and independent oracles shared by the unit and acceptance tests.
// Nothing here calls the library routine it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "annet/annet.hpp"

namespace annet::testing {

// Network whose node v reads `deps[v]` and applies `f(v, values of deps)`.
inline Network tabulate(std::size_t q, const std::vector<std::vector<std::size_t>>& deps,
                        const std::function<State(std::size_t, const std::vector<State>&)>& f) {
  std::vector<Rule> rules;
  for (std::size_t v = 0; v < deps.size(); ++v) {
    Rule r;
    r.deps = deps[v];
    std::size_t count = 1;
    for (std::size_t i = 0; i < deps[v].size(); ++i) count *= q;
    std::vector<State> vals(deps[v].size());
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rest = idx;
      for (auto& s : vals) {
        s = static_cast<State>(rest % q);
        rest /= q;
      }
      r.table.push_back(f(v, vals));
    }
    rules.push_back(std::move(r));
  }
  return Network(q, std::move(rules));
}

// Uniformly random tables over random dependency sets of size 1..max_deps.
inline Network random_network(std::mt19937_64& rng, std::size_t q, std::size_t n, std::size_t max_deps) {
  std::vector<std::vector<std::size_t>> deps(n);
  for (auto& d : deps) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = 1 + rng() % std::min(n, max_deps);
    d.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return tabulate(q, deps, [&](std::size_t, const std::vector<State>&) { return static_cast<State>(rng() % q); });
}

// The binary network number `index` among all 2^(n 2^n) maps {0,1}^n -> {0,1}^n:
// bit (v 2^n + c) of index is F(c)_v, every node reading every node.
inline Network binary_network(std::size_t n, std::uint64_t index) {
  std::vector<std::vector<std::size_t>> deps(n);
  for (auto& d : deps) {
    d.resize(n);
    std::iota(d.begin(), d.end(), 0);
  }
  return tabulate(2, deps, [&](std::size_t v, const std::vector<State>& x) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c |= static_cast<std::size_t>(x[i]) << i;
    return static_cast<State>((index >> (v * (std::size_t{1} << n) + c)) & 1);
  });
}

inline Configuration nth_config(std::uint64_t index, std::size_t q, std::size_t n) {
  Configuration x(n);
  for (auto& s : x) {
    s = static_cast<State>(index % q);
    index /= q;
  }
  return x;
}

inline std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Naive stepping oracle: F^t(x) by evaluating every local table directly.
inline Configuration naive_iterate(const Network& net, Configuration x, std::uint64_t t) {
  for (std::uint64_t s = 0; s < t; ++s) {
    Configuration y(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
      const Rule& r = net.rule(v);
      std::size_t idx = 0, mul = 1;
      for (std::size_t d : r.deps) {
        idx += x[d] * mul;
        mul *= net.alphabet();
      }
      y[v] = r.table[idx];
    }
    x = std::move(y);
  }
  return x;
}

// Transient and period by Floyd's tortoise and hare (independent of the hash map).
inline std::pair<std::uint64_t, std::uint64_t> floyd(const Network& net, const Configuration& x) {
  auto f = [&](const Configuration& c) { return naive_iterate(net, c, 1); };
  Configuration slow = f(x), fast = f(f(x));
  while (slow != fast) {
    slow = f(slow);
    fast = f(f(fast));
  }
  std::uint64_t mu = 0;
  slow = x;
  while (slow != fast) {
    slow = f(slow);
    fast = f(fast);
    ++mu;
  }
  std::uint64_t lambda = 1;
  fast = f(slow);
  while (slow != fast) {
    fast = f(fast);
    ++lambda;
  }
  return {mu, lambda};
}

// Lengths of all cycles of the map by following every configuration.
inline std::vector<std::uint64_t> naive_cycle_lengths(const Network& net) {
  const std::uint64_t count = power(net.alphabet(), net.size());
  std::vector<std::uint64_t> succ(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Configuration y = naive_iterate(net, nth_config(i, net.alphabet(), net.size()), 1);
    std::uint64_t j = 0;
    for (std::size_t v = y.size(); v-- > 0;) j = j * net.alphabet() + y[v];
    succ[i] = j;
  }
  std::vector<std::uint64_t> lengths;
  std::vector<char> on_cycle_seen(count, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t a = i;
    for (std::uint64_t s = 0; s < count; ++s) a = succ[a];  // now on a cycle
    if (on_cycle_seen[a]) continue;
    std::uint64_t len = 0, b = a;
    do {
      on_cycle_seen[b] = 1;
      b = succ[b];
      ++len;
    } while (b != a);
    lengths.push_back(len);
  }
  return lengths;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint64_t primorial_below(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t p = 2; p < n; ++p)
    if (is_prime(p)) r *= p;
  return r;
}

// All connected simple graphs on n labelled vertices.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g;
    g.n = n;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1) g.edges.push_back(pairs[e]);
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
      return comp[a] == a ? a : comp[a] = find(comp[a]);
    };
    for (auto [u, v] : g.edges) comp[find(u)] = find(v);
    bool connected = true;
    for (std::size_t v = 1; v < n; ++v) connected = connected && find(v) == find(0);
    if (connected) out.push_back(std::move(g));
  }
  return out;
}

// Every G-network over `gates` with n nodes, up to renaming of nodes: gates are
// chosen as a sorted multiset, outputs are numbered in gate order and every
// bijection from input ports to nodes is tried (self-reading gates skipped).
inline std::vector<GNetwork> all_gnetworks(const std::vector<Gate>& gates, std::size_t n) {
  std::vector<GNetwork> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t in,
                                                                         std::size_t outs) {
    if (in == n && outs == n) {
      std::vector<std::size_t> alpha(n);
      std::iota(alpha.begin(), alpha.end(), 0);
      do {
        GNetwork gn;
        gn.q = gates.front().q;
        for (std::size_t k : chosen) gn.gates.push_back(gates[k]);
        gn.alpha = alpha;
        gn.beta.resize(n);
        std::iota(gn.beta.begin(), gn.beta.end(), 0);
        bool self = false;
        std::size_t ip = 0, op = 0;
        for (const auto& g : gn.gates) {
          for (std::size_t a = 0; a < g.in; ++a)
            for (std::size_t b = 0; b < g.out; ++b) self = self || alpha[ip + a] == op + b;
          ip += g.in;
          op += g.out;
        }
        if (!self) out.push_back(std::move(gn));
      } while (std::next_permutation(alpha.begin(), alpha.end()));
      return;
    }
    for (std::size_t k = from; k < gates.size(); ++k) {
      if (in + gates[k].in > n || outs + gates[k].out > n) continue;
      chosen.push_back(k);
      pick(k, in + gates[k].in, outs + gates[k].out);
      chosen.pop_back();
    }
  };
  pick(0, 0, 0);
  return out;
}

// A random closed G-network over `gates` with 1..max_gates gates.
inline GNetwork random_gnetwork(std::mt19937_64& rng, const std::vector<Gate>& gates, std::size_t max_gates) {
  for (;;) {
    const std::size_t k = 1 + rng() % max_gates;
    GNetwork gn;
    gn.q = gates.front().q;
    std::size_t in = 0, outs = 0;
    for (std::size_t j = 0; j < k; ++j) {
      gn.gates.push_back(gates[rng() % gates.size()]);
      in += gn.gates.back().in;
      outs += gn.gates.back().out;
    }
    if (in != outs) continue;
    for (int attempt = 0; attempt < 50; ++attempt) {
      gn.alpha.resize(in);
      std::iota(gn.alpha.begin(), gn.alpha.end(), 0);
      std::shuffle(gn.alpha.begin(), gn.alpha.end(), rng);
      gn.beta.resize(in);
      std::iota(gn.beta.begin(), gn.beta.end(), 0);
      std::shuffle(gn.beta.begin(), gn.beta.end(), rng);
      try {
        gn.validate();
        return gn;
      } catch (const Error&) {
      }
    }
  }
}

// Unit propagation plus splitting, on clauses of nonzero literals.
inline bool dpll(std::vector<std::vector<int>> clauses) {
  for (;;) {
    if (clauses.empty()) return true;
    int unit = 0;
    for (const auto& c : clauses) {
      if (c.empty()) return false;
      if (c.size() == 1) unit = c[0];
    }
    if (unit == 0) break;
    std::vector<std::vector<int>> next;
    for (const auto& c : clauses) {
      if (std::find(c.begin(), c.end(), unit) != c.end()) continue;
      std::vector<int> d;
      for (int l : c)
        if (l != -unit) d.push_back(l);
      next.push_back(std::move(d));
    }
    clauses = std::move(next);
  }
  const int lit = clauses.front().front();
  for (int choice : {lit, -lit}) {
    auto branch = clauses;
    branch.push_back({choice});
    if (dpll(branch)) return true;
  }
  return false;
}

// Runs F1 and F2 side by side so that the two sequences agree on the dowel:
// C1 elements follow F1, C2 elements follow F2, nodes of X and Y take random
// values.  The result is an (X + phi1(C2))-pseudo-orbit of F1 and a
// (Y + phi2(C1))-pseudo-orbit of F2 with matching dowel traces.
struct CompatiblePair {
  PseudoOrbit p1, p2;
  std::set<std::size_t> x, y;
};

inline CompatiblePair compatible_pseudo_orbits(std::mt19937_64& rng, const Network& f1, const Network& f2,
                                               const Dowel& d, std::size_t steps) {
  const std::size_t q = f1.alphabet();
  std::vector<char> dowel1(f1.size(), 0), dowel2(f2.size(), 0);
  for (std::size_t c = 0; c < d.size(); ++c) {
    dowel1[d.phi1[c]] = 1;
    dowel2[d.phi2[c]] = 1;
  }
  CompatiblePair out;
  for (std::size_t v = 0; v < f1.size(); ++v)
    if (!dowel1[v] && rng() % 3 == 0) out.x.insert(v);
  for (std::size_t v = 0; v < f2.size(); ++v)
    if (!dowel2[v] && rng() % 3 == 0) out.y.insert(v);
  Configuration a(f1.size()), b(f2.size());
  for (auto& s : a) s = static_cast<State>(rng() % q);
  for (auto& s : b) s = static_cast<State>(rng() % q);
  for (std::size_t c = 0; c < d.size(); ++c) b[d.phi2[c]] = a[d.phi1[c]];
  out.p1.configs.push_back(a);
  out.p2.configs.push_back(b);
  for (std::size_t t = 0; t < steps; ++t) {
    Configuration na = naive_iterate(f1, a, 1), nb = naive_iterate(f2, b, 1);
    for (std::size_t v : out.x) na[v] = static_cast<State>(rng() % q);
    for (std::size_t v : out.y) nb[v] = static_cast<State>(rng() % q);
    for (std::size_t c = 0; c < d.size(); ++c) {
      if (d.side[c] == DowelSide::C1)
        nb[d.phi2[c]] = na[d.phi1[c]];
      else
        na[d.phi1[c]] = nb[d.phi2[c]];
    }
    a = std::move(na);
    b = std::move(nb);
    out.p1.configs.push_back(a);
    out.p2.configs.push_back(b);
  }
  std::set<std::size_t> e1 = out.x, e2 = out.y;
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (d.side[c] == DowelSide::C2) e1.insert(d.phi1[c]);
    if (d.side[c] == DowelSide::C1) e2.insert(d.phi2[c]);
  }
  out.p1.exempt.assign(e1.begin(), e1.end());
  out.p2.exempt.assign(e2.begin(), e2.end());
  return out;
}

inline Dowel random_dowel(std::mt19937_64& rng, std::size_t n1, std::size_t n2, std::size_t m) {
  std::vector<std::size_t> a(n1), b(n2);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), 0);
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  Dowel d;
  for (std::size_t c = 0; c < m; ++c) {
    d.side.push_back(rng() % 2 ? DowelSide::C1 : DowelSide::C2);
    d.phi1.push_back(a[c]);
    d.phi2.push_back(b[c]);
  }
  return d;
}

// Interaction graph by definition: u -> v when changing x_u alone can change F(x)_v.
inline Digraph interaction_by_definition(const Network& net) {
  const std::size_t n = net.size(), q = net.alphabet();
  const std::uint64_t count = power(q, n);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Configuration x = nth_config(i, q, n);
    const Configuration fx = naive_iterate(net, x, 1);
    for (std::size_t u = 0; u < n; ++u)
      for (State s = 0; s < q; ++s) {
        if (s == x[u]) continue;
        Configuration y = x;
        y[u] = s;
        const Configuration fy = naive_iterate(net, y, 1);
        for (std::size_t v = 0; v < n; ++v)
          if (fx[v] != fy[v]) edges.emplace(u, v);
      }
  }
  Digraph g;
  g.n = n;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

}  // namespace annet::testing
