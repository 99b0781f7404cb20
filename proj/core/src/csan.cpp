#include "annet/csan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace annet {

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adjacency()) best = std::max(best, a.size());
  return best;
}

Graph cycle_graph(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (i != j) g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

MultisetIndexer::MultisetIndexer(std::size_t q, std::size_t k) : q_(q), k_(k) {
  if (q == 0) throw Error(ErrorKind::InvalidInput, "multiset alphabet must be nonempty");
  const std::size_t top = k + q + 1;
  binom_.assign(top + 1, std::vector<std::size_t>(top + 1, 0));
  for (std::size_t a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
  }
  size_ = count(q, k);
}

std::size_t MultisetIndexer::count(std::size_t m, std::size_t r) const { return binom_[r + m][m]; }

std::size_t MultisetIndexer::rank(const std::vector<std::size_t>& counts) const {
  std::size_t r = 0, prefix = 0;
  for (std::size_t i = 0; i < q_; ++i) {
    for (std::size_t j = 0; j < counts[i]; ++j) r += count(q_ - i - 1, k_ - prefix - j);
    prefix += counts[i];
  }
  return r;
}

std::vector<std::size_t> MultisetIndexer::unrank(std::size_t r) const {
  std::vector<std::size_t> c(q_, 0);
  std::size_t prefix = 0;
  for (std::size_t i = 0; i < q_; ++i) {
    while (prefix + c[i] <= k_) {
      std::size_t block = count(q_ - i - 1, k_ - prefix - c[i]);
      if (r < block) break;
      r -= block;
      ++c[i];
    }
    prefix += c[i];
  }
  return c;
}

State VertexLabel::apply(State own, const std::vector<std::size_t>& counts, std::size_t q) const {
  std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total > bound)
    throw Error(ErrorKind::IllFormedCsan, "multiset of size " + std::to_string(total) +
                                              " exceeds label bound " + std::to_string(bound));
  return apply(own, counts, MultisetIndexer(q, bound));
}

State VertexLabel::apply(State own, const std::vector<std::size_t>& counts, const MultisetIndexer& idx) const {
  return table[own * idx.size() + idx.rank(counts)];
}

std::vector<State> rho_identity(std::size_t q) {
  std::vector<State> r(q);
  std::iota(r.begin(), r.end(), State{0});
  return r;
}

std::vector<State> rho_negation() { return {1, 0}; }

std::vector<State> rho_activity(std::size_t q) {
  std::vector<State> r(q, 0);
  if (q > 1) r[1] = 1;
  return r;
}

std::vector<State> rho_by_id(const std::string& id, std::size_t q) {
  if (id == "id") return rho_identity(q);
  if (id == "neg") {
    if (q != 2) throw Error(ErrorKind::InvalidInput, "negation edge label needs a binary alphabet");
    return rho_negation();
  }
  if (id == "act") return rho_activity(q);
  throw Error(ErrorKind::InvalidInput, "unknown edge label '" + id + "'");
}

Csan::Csan(std::size_t alphabet, std::size_t nodes, std::vector<CsanEdge> edges,
           std::vector<VertexLabel> labels)
    : q_(alphabet), edges_(std::move(edges)), labels_(std::move(labels)), incident_(nodes) {
  if (q_ == 0) throw Error(ErrorKind::InvalidInput, "alphabet size must be at least 1");
  if (labels_.size() != nodes)
    throw Error(ErrorKind::InvalidInput, "expected one vertex label per node");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    CsanEdge& ed = edges_[e];
    if (ed.u >= nodes || ed.v >= nodes)
      throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.u == ed.v) throw Error(ErrorKind::InvalidInput, "self-loop at node " + std::to_string(ed.u));
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    if (!seen.emplace(ed.u, ed.v).second)
      throw Error(ErrorKind::InvalidInput,
                  "duplicate edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v));
    if (ed.rho.size() != q_)
      throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e) + " label is not total on Q");
    for (State s : ed.rho)
      if (s >= q_) throw Error(ErrorKind::InvalidInput, "edge label maps outside the alphabet");
    incident_[ed.u].emplace_back(ed.v, e);
    incident_[ed.v].emplace_back(ed.u, e);
  }
  for (auto& inc : incident_) std::sort(inc.begin(), inc.end());
  for (std::size_t v = 0; v < nodes; ++v) {
    const VertexLabel& l = labels_[v];
    if (l.bound < incident_[v].size())
      throw Error(ErrorKind::IllFormedCsan, "label of node " + std::to_string(v) + " covers multisets up to " +
                                                std::to_string(l.bound) + " but the degree is " +
                                                std::to_string(incident_[v].size()));
    MultisetIndexer idx(q_, l.bound);
    if (l.table.size() != q_ * idx.size())
      throw Error(ErrorKind::IllFormedCsan, "label table of node " + std::to_string(v) + " has " +
                                                std::to_string(l.table.size()) + " entries, expected " +
                                                std::to_string(q_ * idx.size()));
    for (State s : l.table)
      if (s >= q_) throw Error(ErrorKind::InvalidInput, "label of node " + std::to_string(v) + " leaves Q");
  }
}

Graph Csan::graph() const {
  Graph g{size(), {}};
  for (const auto& e : edges_) g.edges.emplace_back(e.u, e.v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

VertexLabel make_label(std::size_t q, std::size_t bound, LabelSpec spec,
                       const std::function<State(State, const std::vector<std::size_t>&)>& f) {
  MultisetIndexer idx(q, bound);
  VertexLabel l;
  l.bound = bound;
  l.spec = std::move(spec);
  l.table.resize(q * idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    auto counts = idx.unrank(r);
    for (State s = 0; s < q; ++s) l.table[s * idx.size() + r] = f(s, counts);
  }
  return l;
}

Csan make_csan(std::size_t q, const Graph& g, const std::string& rho_id,
               const std::function<VertexLabel(std::size_t, std::size_t)>& label) {
  std::vector<CsanEdge> edges;
  for (auto [u, v] : g.edges) edges.push_back({u, v, rho_by_id(rho_id, q), rho_id});
  auto adj = g.adjacency();
  std::vector<VertexLabel> labels;
  for (std::size_t v = 0; v < g.n; ++v) labels.push_back(label(v, adj[v].size()));
  return Csan(q, g.n, std::move(edges), std::move(labels));
}

namespace {

std::vector<std::size_t> neighbour_counts(const Csan& c, std::size_t v, const Configuration& x) {
  std::vector<std::size_t> counts(c.alphabet(), 0);
  for (auto [u, e] : c.incident(v)) ++counts[c.edges()[e].rho[x[u]]];
  return counts;
}

}  // namespace

Configuration csan_step(const Csan& c, const Configuration& x) {
  if (x.size() != c.size()) throw Error(ErrorKind::InvalidInput, "configuration size mismatch");
  for (State s : x)
    if (s >= c.alphabet()) throw Error(ErrorKind::InvalidInput, "configuration state outside the alphabet");
  Configuration out(c.size());
  for (std::size_t v = 0; v < c.size(); ++v)
    out[v] = c.label(v).apply(x[v], neighbour_counts(c, v, x), c.alphabet());
  return out;
}

Csan build_threshold(const Graph& g, const std::vector<long>& theta) {
  if (theta.size() != g.n) throw Error(ErrorKind::InvalidInput, "expected one threshold per node");
  return make_csan(2, g, "id", [&](std::size_t v, std::size_t deg) {
    long th = theta[v];
    return make_label(2, deg, {"threshold", {th}}, [th](State, const std::vector<std::size_t>& m) {
      return static_cast<State>(static_cast<long>(m[1]) - th >= 0 ? 1 : 0);
    });
  });
}

Csan build_linear_gf2(const Graph& g) {
  return make_csan(2, g, "id", [](std::size_t, std::size_t deg) {
    return make_label(2, deg, {"linear", {}},
                      [](State, const std::vector<std::size_t>& m) { return static_cast<State>(m[1] % 2); });
  });
}

Csan build_rule90_ring(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "a rule-90 ring needs at least 3 nodes");
  return build_linear_gf2(cycle_graph(n));
}

Csan build_minmax(const Graph& g, const std::vector<Polarity>& polarity, std::size_t q) {
  if (polarity.size() != g.n) throw Error(ErrorKind::InvalidInput, "expected one polarity per node");
  return make_csan(q, g, "id", [&](std::size_t v, std::size_t deg) {
    bool is_max = polarity[v] == Polarity::Max;
    return make_label(q, deg, {is_max ? "max" : "min", {}},
                      [is_max, q](State own, const std::vector<std::size_t>& m) {
                        // An isolated node keeps its own state.
                        State best = own;
                        bool any = false;
                        for (State s = 0; s < q; ++s) {
                          if (m[s] == 0) continue;
                          if (!any || (is_max ? s > best : s < best)) best = s;
                          any = true;
                        }
                        return best;
                      });
  });
}

Csan build_lifelike(const Graph& g, const std::set<std::size_t>& birth, const std::set<std::size_t>& survive) {
  std::vector<long> params;
  for (auto b : birth) params.push_back(static_cast<long>(b));
  params.push_back(-1);
  for (auto s : survive) params.push_back(static_cast<long>(s));
  return make_csan(2, g, "id", [&](std::size_t, std::size_t deg) {
    return make_label(2, deg, {"lifelike", params}, [&](State own, const std::vector<std::size_t>& m) {
      const auto& rule = own ? survive : birth;
      return static_cast<State>(rule.count(m[1]) ? 1 : 0);
    });
  });
}

Csan build_game_of_life(const Graph& g) { return build_lifelike(g, {3}, {2, 3}); }

Csan build_interval(const Graph& g, std::size_t alpha, std::size_t beta) {
  return make_csan(2, g, "id", [&](std::size_t, std::size_t deg) {
    return make_label(2, deg, {"interval", {static_cast<long>(alpha), static_cast<long>(beta)}},
                      [alpha, beta](State, const std::vector<std::size_t>& m) {
                        return static_cast<State>(m[1] >= alpha && m[1] <= beta ? 1 : 0);
                      });
  });
}

Csan build_reaction_diffusion(const Graph& g, std::size_t theta, std::size_t q_prime) {
  if (q_prime < 1) throw Error(ErrorKind::InvalidInput, "reaction-diffusion needs q' >= 1");
  const std::size_t q = q_prime + 1;
  return make_csan(q, g, "act", [&](std::size_t, std::size_t deg) {
    return make_label(q, deg, {"reaction", {static_cast<long>(theta), static_cast<long>(q_prime)}},
                      [theta, q_prime](State own, const std::vector<std::size_t>& m) -> State {
                        if (own == 0) return m[1] >= theta ? 1 : 0;
                        return own == q_prime ? 0 : own + 1;
                      });
  });
}

namespace {

// Accepts v when every incident edge carries `rho_id` and the label table is
// exactly what `rebuild` produces from the label's own parameters.
FamilySpec family_by_rebuild(std::string name, std::string rho_id,
                             std::function<bool(const LabelSpec&)> spec_ok,
                             std::function<std::optional<VertexLabel>(const Csan&, std::size_t)> rebuild) {
  FamilySpec f;
  f.name = name;
  f.accepts = [rho_id, spec_ok, rebuild](const Csan& c, std::size_t v) {
    for (auto [u, e] : c.incident(v))
      if (c.edges()[e].rho != rho_by_id(rho_id, c.alphabet())) return false;
    if (!spec_ok(c.label(v).spec)) return false;
    auto expected = rebuild(c, v);
    if (!expected) return false;
    // Compare on the domain of the actual degree only.
    const VertexLabel& have = c.label(v);
    MultisetIndexer a(c.alphabet(), have.bound), b(c.alphabet(), expected->bound);
    const std::size_t deg = c.degree(v);
    MultisetIndexer dom(c.alphabet(), deg);
    for (std::size_t r = 0; r < dom.size(); ++r) {
      auto counts = dom.unrank(r);
      for (State s = 0; s < c.alphabet(); ++s)
        if (have.table[s * a.size() + a.rank(counts)] != expected->table[s * b.size() + b.rank(counts)])
          return false;
    }
    return true;
  };
  return f;
}

Graph star_of(const Csan& c, std::size_t v) {
  // A graph in which node 0 has the degree of v; used to rebuild one label.
  Graph g{c.degree(v) + 1, {}};
  for (std::size_t i = 1; i <= c.degree(v); ++i) g.edges.emplace_back(0, i);
  return g;
}

}  // namespace

FamilySpec threshold_family() {
  return family_by_rebuild(
      "threshold", "id", [](const LabelSpec& s) { return s.family == "threshold" && s.params.size() == 1; },
      [](const Csan& c, std::size_t v) -> std::optional<VertexLabel> {
        if (c.alphabet() != 2) return std::nullopt;
        Graph g = star_of(c, v);
        std::vector<long> th(g.n, 0);
        th[0] = c.label(v).spec.params[0];
        return build_threshold(g, th).label(0);
      });
}

FamilySpec linear_family() {
  return family_by_rebuild(
      "linear", "id", [](const LabelSpec& s) { return s.family == "linear"; },
      [](const Csan& c, std::size_t v) -> std::optional<VertexLabel> {
        if (c.alphabet() != 2) return std::nullopt;
        return build_linear_gf2(star_of(c, v)).label(0);
      });
}

FamilySpec minmax_family() {
  return family_by_rebuild(
      "minmax", "id", [](const LabelSpec& s) { return s.family == "min" || s.family == "max"; },
      [](const Csan& c, std::size_t v) -> std::optional<VertexLabel> {
        Graph g = star_of(c, v);
        std::vector<Polarity> pol(g.n, Polarity::Max);
        pol[0] = c.label(v).spec.family == "max" ? Polarity::Max : Polarity::Min;
        return build_minmax(g, pol, c.alphabet()).label(0);
      });
}

FamilySpec lifelike_family(std::set<std::size_t> birth, std::set<std::size_t> survive) {
  std::vector<long> params;
  for (auto b : birth) params.push_back(static_cast<long>(b));
  params.push_back(-1);
  for (auto s : survive) params.push_back(static_cast<long>(s));
  auto f = family_by_rebuild(
      "lifelike", "id", [params](const LabelSpec& s) { return s.family == "lifelike" && s.params == params; },
      [birth, survive](const Csan& c, std::size_t v) -> std::optional<VertexLabel> {
        if (c.alphabet() != 2) return std::nullopt;
        return build_lifelike(star_of(c, v), birth, survive).label(0);
      });
  return f;
}

FamilySpec game_of_life_family() {
  auto f = lifelike_family({3}, {2, 3});
  f.name = "game-of-life";
  return f;
}

FamilySpec interval_family() {
  return family_by_rebuild(
      "interval", "id", [](const LabelSpec& s) { return s.family == "interval" && s.params.size() == 2; },
      [](const Csan& c, std::size_t v) -> std::optional<VertexLabel> {
        if (c.alphabet() != 2) return std::nullopt;
        const auto& p = c.label(v).spec.params;
        if (p[0] < 0 || p[1] < 0) return std::nullopt;
        return build_interval(star_of(c, v), static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]))
            .label(0);
      });
}

FamilySpec reaction_family() {
  return family_by_rebuild(
      "reaction", "act", [](const LabelSpec& s) { return s.family == "reaction" && s.params.size() == 2; },
      [](const Csan& c, std::size_t v) -> std::optional<VertexLabel> {
        const auto& p = c.label(v).spec.params;
        if (p[0] < 0 || p[1] < 1 || c.alphabet() != static_cast<std::size_t>(p[1]) + 1) return std::nullopt;
        return build_reaction_diffusion(star_of(c, v), static_cast<std::size_t>(p[0]),
                                        static_cast<std::size_t>(p[1]))
            .label(0);
      });
}

VertexLabel family_label(const LabelSpec& spec, std::size_t q, std::size_t degree) {
  Graph g{degree + 1, {}};
  for (std::size_t i = 1; i <= degree; ++i) g.edges.emplace_back(0, i);
  const auto& p = spec.params;
  auto need = [&](bool ok) {
    if (!ok) throw Error(ErrorKind::InvalidInput, "bad parameters for label family '" + spec.family + "'");
  };
  if (spec.family == "threshold") {
    need(p.size() == 1 && q == 2);
    std::vector<long> th(g.n, 0);
    th[0] = p[0];
    return build_threshold(g, th).label(0);
  }
  if (spec.family == "linear") {
    need(q == 2);
    return build_linear_gf2(g).label(0);
  }
  if (spec.family == "max" || spec.family == "min") {
    std::vector<Polarity> pol(g.n, spec.family == "max" ? Polarity::Max : Polarity::Min);
    return build_minmax(g, pol, q).label(0);
  }
  if (spec.family == "lifelike") {
    need(q == 2);
    std::set<std::size_t> birth, survive;
    bool second = false;
    for (long x : p) {
      if (x == -1) {
        need(!second);
        second = true;
        continue;
      }
      need(x >= 0);
      (second ? survive : birth).insert(static_cast<std::size_t>(x));
    }
    need(second);
    return build_lifelike(g, birth, survive).label(0);
  }
  if (spec.family == "interval") {
    need(p.size() == 2 && p[0] >= 0 && p[1] >= 0 && q == 2);
    return build_interval(g, static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1])).label(0);
  }
  if (spec.family == "reaction") {
    need(p.size() == 2 && p[0] >= 0 && p[1] >= 1 && q == static_cast<std::size_t>(p[1]) + 1);
    return build_reaction_diffusion(g, static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1])).label(0);
  }
  throw Error(ErrorKind::InvalidInput, "unknown label family '" + spec.family + "'");
}

std::optional<std::size_t> family_violation(const Csan& c, const FamilySpec& family) {
  for (std::size_t v = 0; v < c.size(); ++v)
    if (!family.accepts(c, v)) return v;
  return std::nullopt;
}

Network csan_to_network(const Csan& c) {
  const std::size_t q = c.alphabet();
  std::vector<Rule> rules(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    Rule& r = rules[v];
    r.deps.push_back(v);
    for (auto [u, e] : c.incident(v)) r.deps.push_back(u);
    std::sort(r.deps.begin(), r.deps.end());
    const std::size_t self_pos =
        static_cast<std::size_t>(std::find(r.deps.begin(), r.deps.end(), v) - r.deps.begin());
    // rho for each dependency position (unused at the self position)
    std::vector<const std::vector<State>*> rho(r.deps.size(), nullptr);
    for (auto [u, e] : c.incident(v)) {
      std::size_t pos = static_cast<std::size_t>(std::find(r.deps.begin(), r.deps.end(), u) - r.deps.begin());
      rho[pos] = &c.edges()[e].rho;
    }
    std::size_t rows = 1;
    for (std::size_t i = 0; i < r.deps.size(); ++i) rows *= q;
    r.table.resize(rows);
    std::vector<State> digits(r.deps.size(), 0);
    std::vector<std::size_t> counts(q);
    const MultisetIndexer indexer(q, c.label(v).bound);
    for (std::size_t idx = 0; idx < rows; ++idx) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t i = 0; i < digits.size(); ++i)
        if (i != self_pos) ++counts[(*rho[i])[digits[i]]];
      r.table[idx] = c.label(v).apply(digits[self_pos], counts, indexer);
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < q) break;
        digits[i] = 0;
      }
    }
  }
  return Network(q, std::move(rules));
}

namespace {

// Achievable neighbour multisets (as count vectors) when every listed edge
// contributes rho(s) for some state s.
std::set<std::vector<std::size_t>> achievable(const Csan& c, const std::vector<std::size_t>& edges) {
  const std::size_t q = c.alphabet();
  std::set<std::vector<std::size_t>> cur{std::vector<std::size_t>(q, 0)};
  for (std::size_t e : edges) {
    std::set<State> image(c.edges()[e].rho.begin(), c.edges()[e].rho.end());
    std::set<std::vector<std::size_t>> next;
    for (const auto& m : cur)
      for (State s : image) {
        auto m2 = m;
        ++m2[s];
        next.insert(std::move(m2));
      }
    cur.swap(next);
  }
  return cur;
}

}  // namespace

Digraph interaction_graph_csan(const Csan& c) {
  const std::size_t q = c.alphabet();
  Digraph d{c.size(), {}};
  for (std::size_t v = 0; v < c.size(); ++v) {
    const VertexLabel& lab = c.label(v);
    std::vector<std::size_t> all_edges;
    for (auto [u, e] : c.incident(v)) all_edges.push_back(e);
    // Self dependency: the own state changes the output for some reachable multiset.
    bool self = false;
    for (const auto& m : achievable(c, all_edges)) {
      State first = lab.apply(0, m, q);
      for (State s = 1; s < q && !self; ++s) self = lab.apply(s, m, q) != first;
      if (self) break;
    }
    if (self) d.edges.emplace_back(v, v);
    for (auto [u, e] : c.incident(v)) {
      std::vector<std::size_t> others;
      for (auto [w, f] : c.incident(v))
        if (f != e) others.push_back(f);
      std::set<State> image(c.edges()[e].rho.begin(), c.edges()[e].rho.end());
      if (image.size() < 2) continue;
      bool dep = false;
      for (const auto& m : achievable(c, others)) {
        for (State own = 0; own < q && !dep; ++own) {
          std::set<State> outs;
          for (State a : image) {
            auto m2 = m;
            ++m2[a];
            outs.insert(lab.apply(own, m2, q));
          }
          dep = outs.size() > 1;
        }
        if (dep) break;
      }
      if (dep) d.edges.emplace_back(u, v);
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Digraph interaction_graph_bruteforce(const Network& net) {
  const std::size_t q = net.alphabet();
  Digraph d{net.size(), {}};
  for (std::size_t v = 0; v < net.size(); ++v) {
    const Rule& r = net.rule(v);
    std::size_t stride = 1;
    for (std::size_t k = 0; k < r.deps.size(); ++k) {
      bool dep = false;
      for (std::size_t idx = 0; idx < r.table.size() && !dep; ++idx) {
        std::size_t digit = (idx / stride) % q;
        if (digit != 0) continue;
        for (std::size_t a = 1; a < q && !dep; ++a) dep = r.table[idx + a * stride] != r.table[idx];
      }
      if (dep) d.edges.emplace_back(r.deps[k], v);
      stride *= q;
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Network matrix_to_network(MatrixKind kind, const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<Rule> rules(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::InvalidInput, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != 0 && m[i][j] != 1) throw Error(ErrorKind::InvalidInput, "matrix entries must be 0 or 1");
      if (m[i][j]) rules[i].deps.push_back(j);
    }
    const std::size_t k = rules[i].deps.size();
    rules[i].table.resize(std::size_t{1} << k);
    for (std::size_t idx = 0; idx < rules[i].table.size(); ++idx) {
      const int ones = __builtin_popcountll(idx);
      State out = 0;
      switch (kind) {
        case MatrixKind::Gf2: out = static_cast<State>(ones % 2); break;
        case MatrixKind::BooleanOr: out = ones > 0 ? 1 : 0; break;
        case MatrixKind::BooleanAnd: out = static_cast<std::size_t>(ones) == k ? 1 : 0; break;
      }
      rules[i].table[idx] = out;
    }
  }
  return Network(2, std::move(rules));
}

std::vector<std::vector<int>> circulant_rule90(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "a rule-90 ring needs at least 3 nodes");
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][(i + 1) % n] = 1;
    m[i][(i + n - 1) % n] = 1;
  }
  return m;
}

}  // namespace annet
