#include "annet/simulate.hpp"

#include <random>
#include <set>
#include <string>

namespace annet {

void BlockEmbedding::validate() const {
  if (time < 1) throw Error(ErrorKind::InvalidInput, "embedding time must be at least 1");
  if (patterns.size() != blocks.size())
    throw Error(ErrorKind::InvalidInput, "embedding needs one pattern list per block");
  std::vector<int> owner(g_size, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t u : blocks[i]) {
      if (u >= g_size) throw Error(ErrorKind::InvalidInput, "block " + std::to_string(i) + " names a missing node");
      if (owner[u] != -1)
        throw Error(ErrorKind::InvalidInput, "node " + std::to_string(u) + " lies in two blocks");
      owner[u] = static_cast<int>(i);
    }
    if (patterns[i].size() != f_alphabet)
      throw Error(ErrorKind::InvalidInput, "block " + std::to_string(i) + " needs one pattern per state");
    std::set<Configuration> seen;
    for (const auto& p : patterns[i]) {
      if (p.size() != blocks[i].size())
        throw Error(ErrorKind::InvalidInput, "pattern length differs from block " + std::to_string(i));
      for (State s : p)
        if (s >= g_alphabet) throw Error(ErrorKind::InvalidInput, "pattern state outside the target alphabet");
      if (!seen.insert(p).second)
        throw Error(ErrorKind::InvalidInput, "block " + std::to_string(i) + " patterns are not injective");
    }
  }
  for (std::size_t u = 0; u < g_size; ++u)
    if (owner[u] == -1 && !blocks.empty())
      throw Error(ErrorKind::InvalidInput, "node " + std::to_string(u) + " is in no block");
  if (blocks.empty() && g_size != 0)
    throw Error(ErrorKind::InvalidInput, "an empty source network cannot cover target nodes");
}

Configuration embed(const BlockEmbedding& phi, const Configuration& x) {
  if (x.size() != phi.blocks.size()) throw Error(ErrorKind::InvalidInput, "configuration size mismatch");
  Configuration y(phi.g_size, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= phi.f_alphabet) throw Error(ErrorKind::InvalidInput, "state outside the source alphabet");
    const auto& pat = phi.patterns[i][x[i]];
    for (std::size_t k = 0; k < pat.size(); ++k) y[phi.blocks[i][k]] = pat[k];
  }
  return y;
}

std::optional<Configuration> decode(const BlockEmbedding& phi, const Configuration& y) {
  if (y.size() != phi.g_size) return std::nullopt;
  Configuration x(phi.blocks.size());
  for (std::size_t i = 0; i < phi.blocks.size(); ++i) {
    bool found = false;
    for (State q = 0; q < phi.f_alphabet && !found; ++q) {
      const auto& pat = phi.patterns[i][q];
      bool eq = true;
      for (std::size_t k = 0; k < pat.size() && eq; ++k) eq = y[phi.blocks[i][k]] == pat[k];
      if (eq) {
        x[i] = q;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return x;
}

BlockEmbedding identity_embedding(std::size_t q, std::size_t n, std::uint64_t time) {
  BlockEmbedding phi;
  phi.time = time;
  phi.f_alphabet = q;
  phi.g_alphabet = q;
  phi.g_size = n;
  for (std::size_t i = 0; i < n; ++i) {
    phi.blocks.push_back({i});
    std::vector<Configuration> pats;
    for (State s = 0; s < q; ++s) pats.push_back({s});
    phi.patterns.push_back(std::move(pats));
  }
  return phi;
}

SlowedNetwork slow_down(const Network& f, std::uint64_t time) {
  if (time < 1) throw Error(ErrorKind::InvalidInput, "slow-down factor must be at least 1");
  const std::size_t n = f.size(), q = f.alphabet();
  const std::size_t t = static_cast<std::size_t>(time);
  auto id = [t](std::size_t v, std::size_t k) { return v * t + k; };
  std::vector<Rule> rules(n * t);
  for (std::size_t v = 0; v < n; ++v) {
    Rule head = f.rule(v);
    for (auto& d : head.deps) d = id(d, t - 1);
    rules[id(v, 0)] = std::move(head);
    for (std::size_t k = 1; k < t; ++k) {
      rules[id(v, k)].deps = {id(v, k - 1)};
      rules[id(v, k)].table.resize(q);
      for (State s = 0; s < q; ++s) rules[id(v, k)].table[s] = s;
    }
  }
  SlowedNetwork out{Network(q, std::move(rules)), {}};
  BlockEmbedding& phi = out.embedding;
  phi.time = time;
  phi.f_alphabet = q;
  phi.g_alphabet = q;
  phi.g_size = n * t;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> block;
    for (std::size_t k = 0; k < t; ++k) block.push_back(id(v, k));
    phi.blocks.push_back(block);
    std::vector<Configuration> pats;
    for (State s = 0; s < q; ++s) pats.emplace_back(t, s);
    phi.patterns.push_back(std::move(pats));
  }
  return out;
}

namespace {

void check_shapes(const Network& f, const Network& g, const BlockEmbedding& phi) {
  phi.validate();
  if (phi.blocks.size() != f.size())
    throw Error(ErrorKind::InvalidInput, "embedding has " + std::to_string(phi.blocks.size()) +
                                             " blocks, source network has " + std::to_string(f.size()) + " nodes");
  if (phi.g_size != g.size())
    throw Error(ErrorKind::InvalidInput, "embedding covers " + std::to_string(phi.g_size) +
                                             " nodes, target network has " + std::to_string(g.size()));
  if (phi.f_alphabet != f.alphabet() || phi.g_alphabet != g.alphabet())
    throw Error(ErrorKind::InvalidInput, "embedding alphabets do not match the networks");
}

// Calls check(x) on every configuration selected by the options; stops at the
// first failure, which is recorded in the report.
template <class Check>
SimulationReport sweep(const Network& f, const SimulationOptions& opt, Check check) {
  SimulationReport rep;
  rep.mode = opt.mode;
  rep.seed = opt.seed;
  const std::size_t q = f.alphabet(), n = f.size();
  auto run = [&](const Configuration& x) {
    ++rep.checked;
    std::string why;
    if (!check(x, why)) {
      rep.counterexample = x;
      rep.detail = why;
      return false;
    }
    return true;
  };
  if (opt.mode == SimulationMode::Exhaustive) {
    const std::uint64_t total = state_count(q, n, opt.cap);
    for (std::uint64_t i = 0; i < total; ++i)
      if (!run(config_at(i, q, n))) return rep;
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<State> dist(0, static_cast<State>(q - 1));
    for (std::uint64_t k = 0; k < opt.samples; ++k) {
      Configuration x(n);
      for (auto& s : x) s = dist(rng);
      if (!run(x)) return rep;
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace

SimulationReport verify_simulation(const Network& f, const Network& g, const BlockEmbedding& phi,
                                   const SimulationOptions& options) {
  check_shapes(f, g, phi);
  return sweep(f, options, [&](const Configuration& x, std::string& why) {
    Configuration lhs = embed(phi, step(f, x));
    Configuration rhs = iterate(g, embed(phi, x), phi.time);
    if (lhs == rhs) return true;
    for (std::size_t u = 0; u < lhs.size(); ++u)
      if (lhs[u] != rhs[u]) {
        why = "target node " + std::to_string(u) + " holds " + std::to_string(rhs[u]) + " after " +
              std::to_string(phi.time) + " steps, expected " + std::to_string(lhs[u]);
        break;
      }
    return false;
  });
}

SimulationReport verify_orbit_embedding(const Network& f, const Network& g, const BlockEmbedding& phi,
                                        const SimulationOptions& options) {
  check_shapes(f, g, phi);
  const std::uint64_t space = state_count(f.alphabet(), f.size(), ~std::uint64_t{0} >> 1);
  return sweep(f, options, [&](const Configuration& x, std::string& why) {
    if (embed(phi, step(f, x)) != iterate(g, embed(phi, x), phi.time)) {
      why = "orbit edge is not mapped to a path of length T";
      return false;
    }
    const OrbitAnalysis a = analyze_orbit(f, x, space + 1);
    const OrbitAnalysis b = analyze_orbit(g, embed(phi, x), phi.time * (a.transient + a.period) + 1);
    if ((a.transient == 0) != (b.transient == 0)) {
      why = "periodicity differs between x and its image";
      return false;
    }
    if ((phi.time * a.period) % b.period != 0) {
      why = "image period does not divide T times the source period";
      return false;
    }
    return true;
  });
}

}  // namespace annet
