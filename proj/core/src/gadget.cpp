#include "annet/gadget.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <tuple>
#include <string>
#include <thread>

namespace annet {

std::vector<std::size_t> Interface::inputs() const {
  std::vector<std::size_t> r;
  for (std::size_t c = 0; c < size(); ++c)
    if (is_input[c]) r.push_back(c);
  return r;
}

std::vector<std::size_t> Interface::outputs() const {
  std::vector<std::size_t> r;
  for (std::size_t c = 0; c < size(); ++c)
    if (!is_input[c]) r.push_back(c);
  return r;
}

void Interface::validate() const {
  if (is_input.empty()) throw Error(ErrorKind::InvalidInput, "an interface needs at least one element");
  if (!names.empty() && names.size() != size())
    throw Error(ErrorKind::InvalidInput, "interface names must cover every element");
}

void Gadget::validate(const Interface& iface) const {
  std::vector<char> used(net.size(), 0);
  auto check = [&](const InterfaceCopy& copy, const char* what, std::size_t k) {
    if (copy.size() != iface.size())
      throw Error(ErrorKind::InvalidInput,
                  std::string(what) + " copy " + std::to_string(k) + " does not cover the interface");
    for (std::size_t u : copy) {
      if (u >= net.size())
        throw Error(ErrorKind::InvalidInput, std::string(what) + " copy " + std::to_string(k) + " leaves the network");
      if (used[u]++)
        throw Error(ErrorKind::InvalidInput, "interface copies overlap at node " + std::to_string(u));
    }
  };
  for (std::size_t k = 0; k < in_copies.size(); ++k) check(in_copies[k], "input", k);
  for (std::size_t k = 0; k < out_copies.size(); ++k) check(out_copies[k], "output", k);
  if (csan && (csan->size() != net.size() || csan->alphabet() != net.alphabet()))
    throw Error(ErrorKind::InvalidInput, "gadget CSAN does not match its network");
  if (!names.empty() && names.size() != net.size())
    throw Error(ErrorKind::InvalidInput, "gadget names must cover every node");
}

std::vector<std::size_t> Gadget::interior() const {
  std::vector<char> used(net.size(), 0);
  for (const auto& c : in_copies)
    for (std::size_t u : c) used[u] = 1;
  for (const auto& c : out_copies)
    for (std::size_t u : c) used[u] = 1;
  std::vector<std::size_t> r;
  for (std::size_t u = 0; u < net.size(); ++u)
    if (!used[u]) r.push_back(u);
  return r;
}

std::vector<std::size_t> Gadget::exempt_nodes(const Interface& iface) const {
  std::vector<std::size_t> r;
  for (const auto& copy : in_copies)
    for (std::size_t c : iface.outputs()) r.push_back(copy[c]);
  for (const auto& copy : out_copies)
    for (std::size_t c : iface.inputs()) r.push_back(copy[c]);
  std::sort(r.begin(), r.end());
  return r;
}

GadgetGlueResult gadget_glue(const Gadget& a, const Gadget& b, const Interface& iface, const GadgetWiring& wiring,
                             const std::optional<FamilySpec>& family) {
  iface.validate();
  a.validate(iface);
  b.validate(iface);
  std::vector<char> a_in(a.in_copies.size(), 0), a_out(a.out_copies.size(), 0);
  std::vector<char> b_in(b.in_copies.size(), 0), b_out(b.out_copies.size(), 0);
  auto claim = [](std::vector<char>& used, std::size_t k, const char* what) {
    if (k >= used.size()) throw Error(ErrorKind::InvalidInput, std::string("no ") + what + " copy " + std::to_string(k));
    if (used[k]++) throw Error(ErrorKind::InvalidInput, std::string(what) + " copy " + std::to_string(k) + " is wired twice");
  };
  Dowel d;
  auto add = [&](const InterfaceCopy& ca, const InterfaceCopy& cb, bool a_is_input) {
    for (std::size_t c = 0; c < iface.size(); ++c) {
      // The consumer governs C_i, the producer governs C_o.
      const bool a_governs = iface.is_input[c] == a_is_input;
      d.side.push_back(a_governs ? DowelSide::C1 : DowelSide::C2);
      d.phi1.push_back(ca[c]);
      d.phi2.push_back(cb[c]);
    }
  };
  for (auto [ka, kb] : wiring.a_in_b_out) {
    claim(a_in, ka, "input (first gadget)");
    claim(b_out, kb, "output (second gadget)");
    add(a.in_copies[ka], b.out_copies[kb], true);
  }
  for (auto [ka, kb] : wiring.a_out_b_in) {
    claim(a_out, ka, "output (first gadget)");
    claim(b_in, kb, "input (second gadget)");
    add(a.out_copies[ka], b.in_copies[kb], false);
  }
  GlueResult g = glue_networks(a.net, b.net, d);
  GadgetGlueResult res;
  res.gadget.net = std::move(g.net);
  res.map_a = std::move(g.map1);
  res.map_b = std::move(g.map2);
  if (a.csan && b.csan) {
    CsanGlueResult cg = csan_glue(*a.csan, *b.csan, d, family);
    if (cg.map1 != res.map_a || cg.map2 != res.map_b)
      throw Error(ErrorKind::Construction, "CSAN glueing disagrees with network glueing");
    res.gadget.csan = std::move(cg.csan);
  }
  auto remap = [](const InterfaceCopy& c, const std::vector<std::size_t>& m) {
    InterfaceCopy r;
    for (std::size_t u : c) r.push_back(m[u]);
    return r;
  };
  for (std::size_t k = 0; k < a.in_copies.size(); ++k)
    if (!a_in[k]) res.gadget.in_copies.push_back(remap(a.in_copies[k], res.map_a));
  for (std::size_t k = 0; k < b.in_copies.size(); ++k)
    if (!b_in[k]) res.gadget.in_copies.push_back(remap(b.in_copies[k], res.map_b));
  for (std::size_t k = 0; k < a.out_copies.size(); ++k)
    if (!a_out[k]) res.gadget.out_copies.push_back(remap(a.out_copies[k], res.map_a));
  for (std::size_t k = 0; k < b.out_copies.size(); ++k)
    if (!b_out[k]) res.gadget.out_copies.push_back(remap(b.out_copies[k], res.map_b));
  if (!a.names.empty() && !b.names.empty()) {
    res.gadget.names.assign(res.gadget.net.size(), "");
    for (std::size_t u = 0; u < a.names.size(); ++u) res.gadget.names[res.map_a[u]] = a.names[u];
    for (std::size_t u = 0; u < b.names.size(); ++u)
      if (res.gadget.names[res.map_b[u]].empty()) res.gadget.names[res.map_b[u]] = b.names[u];
  }
  return res;
}

Gadget disjoint_union(const Gadget& a, const Gadget& b, const Interface& iface) {
  return gadget_glue(a, b, iface, {}).gadget;
}

Gadget copy(const Gadget& a, const Interface& iface) { return disjoint_union(a, a, iface); }

const CertifiedGate* CoherentCertificate::find(const std::string& name) const {
  for (const auto& g : gates)
    if (g.gate.name == name) return &g;
  return nullptr;
}

namespace {

std::vector<State> digits(std::uint64_t idx, std::size_t q, std::size_t len) {
  std::vector<State> r(len);
  for (auto& d : r) {
    d = static_cast<State>(idx % q);
    idx /= q;
  }
  return r;
}

std::string key_text(const std::vector<State>& key) {
  std::string s;
  for (State x : key) s += std::to_string(x);
  return s;
}

// Two labels agree wherever both tables are defined.
bool labels_agree(const VertexLabel& a, const VertexLabel& b, std::size_t q) {
  MultisetIndexer ia(q, a.bound), ib(q, b.bound), dom(q, std::min(a.bound, b.bound));
  for (std::size_t r = 0; r < dom.size(); ++r) {
    auto counts = dom.unrank(r);
    for (State s = 0; s < q; ++s)
      if (a.apply(s, counts, ia) != b.apply(s, counts, ib)) return false;
  }
  return true;
}

struct CopyRef {
  const Csan* csan;
  const InterfaceCopy* copy;
  std::string what;
};

// Interface conditions that keep glueing inside the symmetric class.
void check_csan_conditions(const CoherentCertificate& cert, std::vector<std::string>& failures) {
  std::vector<CopyRef> copies;
  std::size_t with = 0;
  for (const auto& g : cert.gates) {
    if (!g.gadget.csan) continue;
    ++with;
    const Csan& c = *g.gadget.csan;
    for (std::size_t k = 0; k < g.gadget.in_copies.size(); ++k) {
      const auto& copy = g.gadget.in_copies[k];
      std::set<std::size_t> image(copy.begin(), copy.end());
      for (std::size_t e : cert.iface.outputs())
        for (auto [u, ei] : c.incident(copy[e]))
          if (!image.count(u))
            failures.push_back("gate " + g.gate.name + ": input copy " + std::to_string(k) + " output element " +
                               std::to_string(e) + " has a neighbour outside the copy");
      copies.push_back({&c, &copy, g.gate.name + " input " + std::to_string(k)});
    }
    for (std::size_t k = 0; k < g.gadget.out_copies.size(); ++k) {
      const auto& copy = g.gadget.out_copies[k];
      std::set<std::size_t> image(copy.begin(), copy.end());
      for (std::size_t e : cert.iface.inputs())
        for (auto [u, ei] : c.incident(copy[e]))
          if (!image.count(u))
            failures.push_back("gate " + g.gate.name + ": output copy " + std::to_string(k) + " input element " +
                               std::to_string(e) + " has a neighbour outside the copy");
      copies.push_back({&c, &copy, g.gate.name + " output " + std::to_string(k)});
    }
  }
  if (with != 0 && with != cert.gates.size()) failures.push_back("only some gadgets are CSANs");
  if (copies.empty()) return;
  // Induced labeled graphs must coincide across all copies.
  auto induced = [&](const CopyRef& r) {
    std::map<std::size_t, std::size_t> back;
    for (std::size_t c = 0; c < r.copy->size(); ++c) back[(*r.copy)[c]] = c;
    std::set<std::tuple<std::size_t, std::size_t, std::vector<State>>> edges;
    for (const auto& e : r.csan->edges()) {
      auto iu = back.find(e.u), iv = back.find(e.v);
      if (iu == back.end() || iv == back.end()) continue;
      edges.insert({std::min(iu->second, iv->second), std::max(iu->second, iv->second), e.rho});
    }
    return edges;
  };
  const auto ref_edges = induced(copies[0]);
  for (std::size_t i = 1; i < copies.size(); ++i) {
    if (induced(copies[i]) != ref_edges)
      failures.push_back(copies[i].what + ": induced interface graph differs from " + copies[0].what);
    for (std::size_t c = 0; c < cert.iface.size(); ++c)
      if (!labels_agree(copies[0].csan->label((*copies[0].copy)[c]), copies[i].csan->label((*copies[i].copy)[c]),
                        copies[0].csan->alphabet()))
        failures.push_back(copies[i].what + ": label of interface element " + std::to_string(c) + " differs");
  }
}

}  // namespace

CertificateReport verify_certificate(const CoherentCertificate& cert, unsigned jobs) {
  CertificateReport rep;
  auto& f = rep.failures;
  const std::size_t q = cert.alphabet, nc = cert.iface.size(), T = cert.time;
  try {
    cert.iface.validate();
  } catch (const Error& e) {
    f.push_back(std::string("interface: ") + e.what());
  }
  if (cert.gates.empty()) f.push_back("certificate has no gates");
  const std::size_t gq = cert.gates.empty() ? q : cert.gates[0].gadget.net.alphabet();
  // (e) state configurations are injective.
  if (cert.state_configs.size() != q) f.push_back("expected one state configuration per state");
  for (std::size_t a = 0; a < cert.state_configs.size(); ++a) {
    if (cert.state_configs[a].size() != nc) f.push_back("state configuration " + std::to_string(a) + " has wrong size");
    for (State s : cert.state_configs[a])
      if (s >= gq) f.push_back("state configuration " + std::to_string(a) + " leaves the alphabet");
    for (std::size_t b = 0; b < a; ++b)
      if (cert.state_configs[a] == cert.state_configs[b])
        f.push_back("state configurations " + std::to_string(b) + " and " + std::to_string(a) + " coincide");
  }
  // (d) standard traces start at s_q and end at s_q'.
  bool traces_ok = cert.traces.size() == q;
  for (std::size_t a = 0; traces_ok && a < q; ++a) {
    traces_ok = cert.traces[a].size() == q;
    for (std::size_t b = 0; traces_ok && b < q; ++b) {
      const auto& tr = cert.traces[a][b];
      traces_ok = tr.size() == T + 1 && std::all_of(tr.begin(), tr.end(), [&](const auto& c) { return c.size() == nc; });
      if (traces_ok && cert.state_configs.size() == q) {
        if (tr.front() != cert.state_configs[a])
          f.push_back("trace " + std::to_string(a) + "->" + std::to_string(b) + " does not start at s_" + std::to_string(a));
        if (tr.back() != cert.state_configs[b])
          f.push_back("trace " + std::to_string(a) + "->" + std::to_string(b) + " does not end at s_" + std::to_string(b));
      }
    }
  }
  if (!traces_ok) f.push_back("standard traces are missing or malformed");

  struct Cell {
    std::size_t gate;
    std::vector<State> key;
  };
  std::vector<Cell> cells;
  std::vector<std::vector<std::size_t>> interiors(cert.gates.size()), exempts(cert.gates.size());
  for (std::size_t gi = 0; gi < cert.gates.size(); ++gi) {
    const auto& g = cert.gates[gi];
    const std::string tag = "gate " + g.gate.name + ": ";
    try {
      g.gate.validate();
      g.gadget.validate(cert.iface);
    } catch (const Error& e) {
      f.push_back(tag + e.what());
      continue;
    }
    if (g.gate.q != q) f.push_back(tag + "gate alphabet differs from the certificate");
    if (g.gadget.net.alphabet() != gq) f.push_back(tag + "gadget alphabet differs from the other gadgets");
    if (g.gadget.in_copies.size() != g.gate.in || g.gadget.out_copies.size() != g.gate.out) {
      f.push_back(tag + "copy counts do not match the gate arity");
      continue;
    }
    interiors[gi] = g.gadget.interior();
    exempts[gi] = g.gadget.exempt_nodes(cert.iface);
    if (g.context.size() != interiors[gi].size()) f.push_back(tag + "context does not cover the interior");
    const std::size_t len = 2 * g.gate.in + g.gate.out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      auto key = digits(idx, q, len);
      if (!g.pseudo_orbits.count(key))
        f.push_back(tag + "incomplete-table: no pseudo-orbit for cell " + key_text(key));
      else
        cells.push_back({gi, std::move(key)});
    }
    for (const auto& [key, p] : g.pseudo_orbits)
      if (key.size() != len) f.push_back(tag + "pseudo-orbit key " + key_text(key) + " has the wrong length");
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<std::string> local;
    for (std::size_t i; (i = next++) < cells.size();) {
      const Cell& cell = cells[i];
      const auto& g = cert.gates[cell.gate];
      const PseudoOrbit& p = g.pseudo_orbits.at(cell.key);
      const std::string tag = "gate " + g.gate.name + " cell " + key_text(cell.key) + ": ";
      const std::size_t n = g.gadget.net.size();
      if (p.configs.size() != T + 1 ||
          !std::all_of(p.configs.begin(), p.configs.end(), [&](const auto& c) { return c.size() == n; })) {
        local.push_back(tag + "pseudo-orbit has the wrong shape");
        continue;
      }
      if (p.exempt != exempts[cell.gate]) local.push_back(tag + "exempt set differs from P_g");
      // (a) the sequence is a pseudo-orbit.
      auto pr = check_pseudo_orbit(g.gadget.net, p);
      if (!pr.pass) local.push_back(tag + "not a pseudo-orbit: " + pr.detail);
      // (b) interface copies follow the standard traces.
      std::vector<State> qi(cell.key.begin(), cell.key.begin() + g.gate.in);
      std::vector<State> qi2(cell.key.begin() + g.gate.in, cell.key.begin() + 2 * g.gate.in);
      std::vector<State> qo(cell.key.begin() + 2 * g.gate.in, cell.key.end());
      const auto qo2 = g.gate.apply(qi);
      if (traces_ok) {
        auto follow = [&](const InterfaceCopy& copy, State a, State b, const std::string& what) {
          for (std::size_t t = 0; t <= T; ++t)
            for (std::size_t c = 0; c < nc; ++c)
              if (p.configs[t][copy[c]] != cert.traces[a][b][t][c]) {
                local.push_back(tag + what + " leaves the standard trace at t=" + std::to_string(t) +
                                ", element " + std::to_string(c));
                return;
              }
        };
        for (std::size_t k = 0; k < g.gate.in; ++k) follow(g.gadget.in_copies[k], qi[k], qi2[k], "input copy " + std::to_string(k));
        for (std::size_t k = 0; k < g.gate.out; ++k)
          follow(g.gadget.out_copies[k], qo[k], qo2[k], "output copy " + std::to_string(k));
      }
      // (c) the interior starts and ends in the context.
      if (g.context.size() == interiors[cell.gate].size())
        for (std::size_t i2 = 0; i2 < interiors[cell.gate].size(); ++i2) {
          const std::size_t u = interiors[cell.gate][i2];
          if (p.configs.front()[u] != g.context[i2] || p.configs.back()[u] != g.context[i2]) {
            local.push_back(tag + "interior node " + std::to_string(u) + " is not in its context at t=0 and t=T");
            break;
          }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    f.insert(f.end(), local.begin(), local.end());
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size() ? cells.size() : 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  rep.cells = cells.size();
  // (f) interface conditions for symmetric gadgets.
  check_csan_conditions(cert, f);
  std::sort(f.begin(), f.end());
  rep.pass = f.empty();
  return rep;
}

GNetCompilation compile_gnetwork(const GNetwork& gn, const CoherentCertificate& cert,
                                 const std::optional<FamilySpec>& family, unsigned jobs) {
  gn.validate();
  if (gn.q != cert.alphabet)
    throw Error(ErrorKind::InvalidInput, "G-network alphabet differs from the certificate");
  std::vector<const CertifiedGate*> use;
  for (const auto& g : gn.gates) {
    const CertifiedGate* cg = cert.find(g.name);
    if (!cg) throw Error(ErrorKind::MissingGate, "certificate has no gadget for gate " + g.name);
    if (cg->gate.in != g.in || cg->gate.out != g.out || cg->gate.table != g.table)
      throw Error(ErrorKind::MissingGate, "certificate gate " + g.name + " computes a different function");
    use.push_back(cg);
  }
  auto rep = verify_certificate(cert, jobs);
  if (!rep.pass)
    throw Error(ErrorKind::CertificateInvalid, "certificate fails verification: " + rep.failures.front());

  GNetCompilation res;
  const std::size_t n = gn.size();
  res.embedding.time = cert.time;
  res.embedding.f_alphabet = gn.q;
  if (gn.gates.empty()) {
    res.embedding.g_alphabet = cert.gates.empty() ? 2 : cert.gates[0].gadget.net.alphabet();
    if (cert.gates.empty() || cert.gates[0].gadget.csan) res.csan = Csan(res.embedding.g_alphabet, 0, {}, {});
    res.net = Network(res.embedding.g_alphabet, {});
    return res;
  }
  std::vector<std::size_t> writer(n);
  for (std::size_t v = 0; v < n; ++v) writer[gn.beta[v]] = v;
  auto in_node = [&](std::size_t j, std::size_t k) { return gn.alpha[gn.input_offset(j) + k]; };
  auto out_node = [&](std::size_t j, std::size_t k) { return writer[gn.output_offset(j) + k]; };

  Gadget h = use[0]->gadget;
  std::vector<std::size_t> h_in, h_out;  // gn node carried by each remaining copy of h
  for (std::size_t k = 0; k < gn.gates[0].in; ++k) h_in.push_back(in_node(0, k));
  for (std::size_t k = 0; k < gn.gates[0].out; ++k) h_out.push_back(out_node(0, k));
  res.instance_maps.resize(gn.gates.size());
  res.instance_maps[0].resize(h.net.size());
  for (std::size_t u = 0; u < h.net.size(); ++u) res.instance_maps[0][u] = u;

  for (std::size_t j = 1; j < gn.gates.size(); ++j) {
    const Gadget& g = use[j]->gadget;
    GadgetWiring w;
    std::vector<char> used_in(h_in.size(), 0), used_out(h_out.size(), 0);
    std::vector<char> g_in_used(gn.gates[j].in, 0), g_out_used(gn.gates[j].out, 0);
    for (std::size_t a = 0; a < h_in.size(); ++a)
      for (std::size_t m = 0; m < gn.gates[j].out; ++m)
        if (h_in[a] == out_node(j, m)) {
          w.a_in_b_out.emplace_back(a, m);
          used_in[a] = 1;
          g_out_used[m] = 1;
        }
    for (std::size_t a = 0; a < h_out.size(); ++a)
      for (std::size_t m = 0; m < gn.gates[j].in; ++m)
        if (h_out[a] == in_node(j, m)) {
          w.a_out_b_in.emplace_back(a, m);
          used_out[a] = 1;
          g_in_used[m] = 1;
        }
    GadgetGlueResult gr = gadget_glue(h, g, cert.iface, w, family);
    for (std::size_t i = 0; i < j; ++i)
      for (auto& u : res.instance_maps[i]) u = gr.map_a[u];
    res.instance_maps[j] = gr.map_b;
    std::vector<std::size_t> nin, nout;
    for (std::size_t a = 0; a < h_in.size(); ++a)
      if (!used_in[a]) nin.push_back(h_in[a]);
    for (std::size_t m = 0; m < gn.gates[j].in; ++m)
      if (!g_in_used[m]) nin.push_back(in_node(j, m));
    for (std::size_t a = 0; a < h_out.size(); ++a)
      if (!used_out[a]) nout.push_back(h_out[a]);
    for (std::size_t m = 0; m < gn.gates[j].out; ++m)
      if (!g_out_used[m]) nout.push_back(out_node(j, m));
    h = std::move(gr.gadget);
    h_in = std::move(nin);
    h_out = std::move(nout);
  }
  if (!h.in_copies.empty() || !h.out_copies.empty())
    throw Error(ErrorKind::Construction, "compiled network still has open interface copies");

  res.net = h.net;
  res.csan = h.csan;
  BlockEmbedding& phi = res.embedding;
  phi.g_alphabet = res.net.alphabet();
  phi.g_size = res.net.size();
  phi.blocks.resize(n);
  phi.patterns.assign(n, std::vector<Configuration>(gn.q));
  for (std::size_t v = 0; v < n; ++v) {
    auto [j, k] = gn.output_port(gn.beta[v]);
    const InterfaceCopy& copy = use[j]->gadget.out_copies[k];
    for (std::size_t c = 0; c < cert.iface.size(); ++c) phi.blocks[v].push_back(res.instance_maps[j][copy[c]]);
    for (std::size_t s = 0; s < gn.q; ++s) phi.patterns[v][s] = cert.state_configs[s];
  }
  for (std::size_t j = 0; j < gn.gates.size(); ++j) {
    const auto interior = use[j]->gadget.interior();
    for (std::size_t i = 0; i < interior.size(); ++i) {
      phi.blocks[0].push_back(res.instance_maps[j][interior[i]]);
      for (auto& pat : phi.patterns[0]) pat.push_back(use[j]->context[i]);
    }
  }
  phi.validate();
  return res;
}

}  // namespace annet
