#include "annet/glue.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace annet {

void Dowel::validate(std::size_t n1, std::size_t n2) const {
  if (phi1.size() != side.size() || phi2.size() != side.size())
    throw Error(ErrorKind::InvalidInput, "dowel maps must cover every dowel element");
  std::set<std::size_t> s1, s2;
  for (std::size_t c = 0; c < side.size(); ++c) {
    if (phi1[c] >= n1 || phi2[c] >= n2)
      throw Error(ErrorKind::InvalidInput, "dowel element " + std::to_string(c) + " maps outside a network");
    if (!s1.insert(phi1[c]).second || !s2.insert(phi2[c]).second)
      throw Error(ErrorKind::InvalidInput, "dowel map is not injective at element " + std::to_string(c));
  }
}

namespace {

struct Layout {
  std::vector<std::size_t> map1, map2;
  std::vector<std::pair<int, std::size_t>> origin;  // (side 1 or 2, node of that side)
};

Layout layout(std::size_t n1, std::size_t n2, const Dowel& d) {
  d.validate(n1, n2);
  Layout l;
  l.map1.assign(n1, kNoNode);
  l.map2.assign(n2, kNoNode);
  for (DowelSide want : {DowelSide::C1, DowelSide::C2})
    for (std::size_t c = 0; c < d.size(); ++c) {
      if (d.side[c] != want) continue;
      const std::size_t id = l.origin.size();
      l.map1[d.phi1[c]] = id;
      l.map2[d.phi2[c]] = id;
      if (want == DowelSide::C1)
        l.origin.emplace_back(1, d.phi1[c]);
      else
        l.origin.emplace_back(2, d.phi2[c]);
    }
  for (std::size_t v = 0; v < n1; ++v)
    if (l.map1[v] == kNoNode) {
      l.map1[v] = l.origin.size();
      l.origin.emplace_back(1, v);
    }
  for (std::size_t v = 0; v < n2; ++v)
    if (l.map2[v] == kNoNode) {
      l.map2[v] = l.origin.size();
      l.origin.emplace_back(2, v);
    }
  return l;
}

}  // namespace

GlueResult glue_networks(const Network& f1, const Network& f2, const Dowel& d) {
  if (f1.alphabet() != f2.alphabet())
    throw Error(ErrorKind::InvalidInput, "glued networks must share an alphabet");
  Layout l = layout(f1.size(), f2.size(), d);
  std::vector<Rule> rules;
  rules.reserve(l.origin.size());
  for (auto [side, v] : l.origin) {
    Rule r = side == 1 ? f1.rule(v) : f2.rule(v);
    const auto& map = side == 1 ? l.map1 : l.map2;
    for (auto& dep : r.deps) dep = map[dep];
    rules.push_back(std::move(r));
  }
  return {Network(f1.alphabet(), std::move(rules)), std::move(l.map1), std::move(l.map2)};
}

bool PseudoOrbit::is_exempt(std::size_t v) const { return std::binary_search(exempt.begin(), exempt.end(), v); }

PseudoOrbitReport check_pseudo_orbit(const Network& f, const PseudoOrbit& p) {
  PseudoOrbitReport rep;
  if (p.configs.empty()) {
    rep.pass = false;
    rep.detail = "empty sequence";
    return rep;
  }
  for (const auto& x : p.configs) f.check_configuration(x);
  Configuration next;
  for (std::size_t t = 0; t + 1 < p.configs.size(); ++t) {
    step_into(f, p.configs[t], next);
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (p.is_exempt(v) || next[v] == p.configs[t + 1][v]) continue;
      rep.pass = false;
      rep.t = t;
      rep.v = v;
      rep.detail = "node " + std::to_string(v) + " at step " + std::to_string(t + 1) + " holds " +
                   std::to_string(p.configs[t + 1][v]) + ", the local map gives " + std::to_string(next[v]);
      return rep;
    }
  }
  return rep;
}

PseudoOrbit glue_pseudo_orbits(const GlueResult& glued, const Dowel& d, const PseudoOrbit& p1,
                               const PseudoOrbit& p2) {
  if (p1.configs.size() != p2.configs.size())
    throw Error(ErrorKind::InvalidInput, "pseudo-orbits have different lengths");
  const std::size_t n1 = glued.map1.size(), n2 = glued.map2.size();
  for (std::size_t t = 0; t < p1.configs.size(); ++t) {
    if (p1.configs[t].size() != n1 || p2.configs[t].size() != n2)
      throw Error(ErrorKind::InvalidInput, "pseudo-orbit configuration size mismatch");
    for (std::size_t c = 0; c < d.size(); ++c)
      if (p1.configs[t][d.phi1[c]] != p2.configs[t][d.phi2[c]])
        throw Error(ErrorKind::TraceMismatch, "traces disagree at t=" + std::to_string(t) + " on dowel element " +
                                                  std::to_string(c));
  }
  PseudoOrbit out;
  for (std::size_t t = 0; t < p1.configs.size(); ++t) {
    Configuration z(glued.net.size());
    for (std::size_t v = 0; v < n1; ++v) z[glued.map1[v]] = p1.configs[t][v];
    for (std::size_t v = 0; v < n2; ++v) z[glued.map2[v]] = p2.configs[t][v];
    out.configs.push_back(std::move(z));
  }
  std::set<std::size_t> c2_in_1, c1_in_2;
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (d.side[c] == DowelSide::C2) c2_in_1.insert(d.phi1[c]);
    if (d.side[c] == DowelSide::C1) c1_in_2.insert(d.phi2[c]);
  }
  std::set<std::size_t> ex;
  for (std::size_t v : p1.exempt)
    if (!c2_in_1.count(v)) ex.insert(glued.map1[v]);
  for (std::size_t v : p2.exempt)
    if (!c1_in_2.count(v)) ex.insert(glued.map2[v]);
  out.exempt.assign(ex.begin(), ex.end());
  return out;
}

namespace {

// Label tables agree on every multiset both of them cover.
bool labels_agree(const VertexLabel& a, const VertexLabel& b, std::size_t q) {
  const std::size_t k = std::min(a.bound, b.bound);
  MultisetIndexer ia(q, a.bound), ib(q, b.bound), dom(q, k);
  for (std::size_t r = 0; r < dom.size(); ++r) {
    auto counts = dom.unrank(r);
    for (State s = 0; s < q; ++s)
      if (a.apply(s, counts, ia) != b.apply(s, counts, ib)) return false;
  }
  return true;
}

}  // namespace

CsanGlueResult csan_glue(const Csan& c1, const Csan& c2, const Dowel& d, const std::optional<FamilySpec>& family) {
  if (c1.alphabet() != c2.alphabet())
    throw Error(ErrorKind::InvalidInput, "glued networks must share an alphabet");
  const std::size_t q = c1.alphabet();
  Layout l = layout(c1.size(), c2.size(), d);

  std::map<std::pair<std::size_t, std::size_t>, const CsanEdge*> e1, e2;
  for (const auto& e : c1.edges()) e1[{e.u, e.v}] = &e;
  for (const auto& e : c2.edges()) e2[{e.u, e.v}] = &e;
  auto find = [](const auto& m, std::size_t a, std::size_t b) -> const CsanEdge* {
    auto it = m.find({std::min(a, b), std::max(a, b)});
    return it == m.end() ? nullptr : it->second;
  };

  for (std::size_t a = 0; a < d.size(); ++a) {
    if (!labels_agree(c1.label(d.phi1[a]), c2.label(d.phi2[a]), q))
      throw Error(ErrorKind::ConditionViolated,
                  "induced labeled graphs differ: vertex labels of dowel element " + std::to_string(a));
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      const CsanEdge* x = find(e1, d.phi1[a], d.phi1[b]);
      const CsanEdge* y = find(e2, d.phi2[a], d.phi2[b]);
      if ((x == nullptr) != (y == nullptr) || (x && x->rho != y->rho))
        throw Error(ErrorKind::ConditionViolated, "induced labeled graphs differ on dowel elements " +
                                                      std::to_string(a) + " and " + std::to_string(b));
    }
  }
  std::vector<char> in1(c1.size(), 0), in2(c2.size(), 0);
  for (std::size_t c = 0; c < d.size(); ++c) {
    in1[d.phi1[c]] = 1;
    in2[d.phi2[c]] = 1;
  }
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (d.side[c] == DowelSide::C2)
      for (auto [u, e] : c1.incident(d.phi1[c]))
        if (!in1[u])
          throw Error(ErrorKind::ConditionViolated, "neighbourhood of the C2 image in the first network leaves the dowel at dowel element " + std::to_string(c));
    if (d.side[c] == DowelSide::C1)
      for (auto [u, e] : c2.incident(d.phi2[c]))
        if (!in2[u])
          throw Error(ErrorKind::ConditionViolated, "neighbourhood of the C1 image in the second network leaves the dowel at dowel element " + std::to_string(c));
  }

  std::vector<char> c2_in_1(c1.size(), 0), c1_in_2(c2.size(), 0);
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (d.side[c] == DowelSide::C2) c2_in_1[d.phi1[c]] = 1;
    if (d.side[c] == DowelSide::C1) c1_in_2[d.phi2[c]] = 1;
  }
  std::map<std::pair<std::size_t, std::size_t>, CsanEdge> edges;
  for (const auto& e : c1.edges()) {
    if (c2_in_1[e.u] && c2_in_1[e.v]) continue;
    CsanEdge g = e;
    g.u = std::min(l.map1[e.u], l.map1[e.v]);
    g.v = std::max(l.map1[e.u], l.map1[e.v]);
    edges.emplace(std::make_pair(g.u, g.v), g);
  }
  for (const auto& e : c2.edges()) {
    if (c1_in_2[e.u] && c1_in_2[e.v]) continue;
    CsanEdge g = e;
    g.u = std::min(l.map2[e.u], l.map2[e.v]);
    g.v = std::max(l.map2[e.u], l.map2[e.v]);
    edges.emplace(std::make_pair(g.u, g.v), g);
  }
  std::vector<CsanEdge> edge_list;
  for (auto& [k, e] : edges) edge_list.push_back(std::move(e));
  std::vector<VertexLabel> labels;
  for (auto [side, v] : l.origin) labels.push_back(side == 1 ? c1.label(v) : c2.label(v));

  CsanGlueResult out{Csan(q, l.origin.size(), std::move(edge_list), std::move(labels)), std::move(l.map1),
                     std::move(l.map2)};
  if (family && !family_violation(c1, *family) && !family_violation(c2, *family))
    if (auto bad = family_violation(out.csan, *family))
      throw Error(ErrorKind::Construction,
                  "glued node " + std::to_string(*bad) + " leaves the " + family->name + " family");
  return out;
}

}  // namespace annet
