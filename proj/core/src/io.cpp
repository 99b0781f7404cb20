#include "annet/io.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

namespace annet {

using json = nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("JSON: ") + e.what());
  }
}

std::string dump(const json& j, int indent) { return j.dump(indent < 0 ? -1 : indent); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::Parse, std::string("field '") + what + "' has the wrong type");
  }
}

template <class T>
T get(const json& j, const char* key) {
  return as<T>(field(j, key), key);
}

Configuration config_of(const json& j) {
  if (j.is_string()) {
    Configuration x;
    for (char ch : j.get<std::string>()) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::Parse, "configuration strings hold digits only");
      x.push_back(static_cast<State>(ch - '0'));
    }
    return x;
  }
  if (!j.is_array()) throw Error(ErrorKind::Parse, "a configuration is an array of states or a digit string");
  for (const auto& s : j)
    if (!s.is_number_unsigned()) throw Error(ErrorKind::Parse, "configuration entries are non-negative integers");
  return as<Configuration>(j, "configuration");
}

json config_json(const Configuration& x, std::size_t q) {
  if (q > 10) return x;
  std::string s;
  for (State v : x) s += static_cast<char>('0' + v);
  return s;
}

json network_j(const Network& net) {
  json rules = json::array();
  for (const auto& r : net.rules()) rules.push_back({{"deps", r.deps}, {"table", r.table}});
  return {{"alphabet", net.alphabet()}, {"nodes", net.size()}, {"rules", rules}};
}

Network network_of(const json& j) {
  const auto q = get<std::size_t>(j, "alphabet");
  std::vector<Rule> rules;
  for (const auto& r : field(j, "rules"))
    rules.push_back({get<std::vector<std::size_t>>(r, "deps"), get<std::vector<State>>(r, "table")});
  if (j.contains("nodes") && as<std::size_t>(j.at("nodes"), "nodes") != rules.size())
    throw Error(ErrorKind::InvalidInput, "node count does not match the rule list");
  return Network(q, std::move(rules));
}

VertexLabel label_of(const json& j, std::size_t q, std::size_t degree) {
  if (j.contains("family")) {
    LabelSpec spec{get<std::string>(j, "family"), j.contains("params") ? get<std::vector<long>>(j, "params")
                                                                       : std::vector<long>{}};
    return family_label(spec, q, degree);
  }
  VertexLabel l;
  l.table = get<std::vector<State>>(j, "table");
  l.bound = j.contains("bound") ? get<std::size_t>(j, "bound") : degree;
  l.spec = {"table", {}};
  return l;
}

json label_json(const VertexLabel& l, std::size_t q, std::size_t degree) {
  if (l.spec.family != "table" && !l.spec.family.empty()) {
    try {
      if (family_label(l.spec, q, degree).table == l.table && l.bound == degree)
        return {{"family", l.spec.family}, {"params", l.spec.params}};
    } catch (const Error&) {
    }
  }
  return {{"table", l.table}, {"bound", l.bound}};
}

json csan_j(const Csan& c) {
  json edges = json::array();
  for (const auto& e : c.edges()) {
    if (e.rho_id == "custom")
      edges.push_back({e.u, e.v, e.rho});
    else
      edges.push_back({e.u, e.v, e.rho_id});
  }
  json vertices = json::array();
  for (std::size_t v = 0; v < c.size(); ++v)
    vertices.push_back({{"lambda", label_json(c.label(v), c.alphabet(), c.degree(v))}});
  return {{"alphabet", c.alphabet()}, {"nodes", c.size()}, {"edges", edges}, {"vertices", vertices}};
}

Csan csan_of(const json& j) {
  const auto q = get<std::size_t>(j, "alphabet");
  std::size_t n = 0;
  if (j.contains("nodes"))
    n = get<std::size_t>(j, "nodes");
  else
    n = field(j, "vertices").size();
  std::vector<CsanEdge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) throw Error(ErrorKind::Parse, "edges are [u, v, rho]");
    CsanEdge ce;
    ce.u = as<std::size_t>(e[0], "edge");
    ce.v = as<std::size_t>(e[1], "edge");
    if (e.size() == 2 || e[2].is_string()) {
      ce.rho_id = e.size() == 2 ? "id" : e[2].get<std::string>();
      ce.rho = rho_by_id(ce.rho_id, q);
    } else {
      ce.rho_id = "custom";
      ce.rho = as<std::vector<State>>(e[2], "rho");
    }
    if (ce.u >= n || ce.v >= n) throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    ++degree[ce.u];
    ++degree[ce.v];
    edges.push_back(std::move(ce));
  }
  std::vector<VertexLabel> labels(n);
  const json* fallback = j.contains("lambda") ? &j.at("lambda") : nullptr;
  const json* vertices = j.contains("vertices") ? &j.at("vertices") : nullptr;
  if (vertices && vertices->size() != n) throw Error(ErrorKind::InvalidInput, "expected one vertex entry per node");
  for (std::size_t v = 0; v < n; ++v) {
    const json* lam = fallback;
    if (vertices && (*vertices)[v].contains("lambda")) lam = &(*vertices)[v].at("lambda");
    if (!lam) throw Error(ErrorKind::Parse, "vertex " + std::to_string(v) + " has no lambda");
    labels[v] = label_of(*lam, q, degree[v]);
  }
  return Csan(q, n, std::move(edges), std::move(labels));
}

json embedding_j(const BlockEmbedding& phi) {
  json blocks = json::array();
  for (std::size_t i = 0; i < phi.blocks.size(); ++i) {
    json pats = json::object();
    for (std::size_t s = 0; s < phi.patterns[i].size(); ++s) pats[std::to_string(s)] = phi.patterns[i][s];
    blocks.push_back({{"f_node", i}, {"g_nodes", phi.blocks[i]}, {"patterns", pats}});
  }
  return {{"time", phi.time},
          {"f_alphabet", phi.f_alphabet},
          {"g_alphabet", phi.g_alphabet},
          {"g_size", phi.g_size},
          {"blocks", blocks}};
}

BlockEmbedding embedding_of(const json& j) {
  BlockEmbedding phi;
  phi.time = get<std::uint64_t>(j, "time");
  const auto& blocks = field(j, "blocks");
  phi.blocks.resize(blocks.size());
  phi.patterns.resize(blocks.size());
  std::size_t total = 0;
  std::size_t fq = 0;
  for (const auto& b : blocks) {
    const auto i = get<std::size_t>(b, "f_node");
    if (i >= blocks.size()) throw Error(ErrorKind::InvalidInput, "f_node out of range");
    phi.blocks[i] = get<std::vector<std::size_t>>(b, "g_nodes");
    total += phi.blocks[i].size();
    const auto& pats = field(b, "patterns");
    phi.patterns[i].assign(pats.size(), {});
    for (auto it = pats.begin(); it != pats.end(); ++it) {
      std::size_t s = 0;
      try {
        s = std::stoul(it.key());
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "pattern keys are states");
      }
      if (s >= pats.size()) throw Error(ErrorKind::InvalidInput, "pattern keys must be 0..q-1");
      phi.patterns[i][s] = config_of(it.value());
    }
    fq = std::max(fq, pats.size());
  }
  phi.f_alphabet = j.contains("f_alphabet") ? get<std::size_t>(j, "f_alphabet") : fq;
  phi.g_size = j.contains("g_size") ? get<std::size_t>(j, "g_size") : total;
  if (j.contains("g_alphabet")) {
    phi.g_alphabet = get<std::size_t>(j, "g_alphabet");
  } else {
    State top = 1;
    for (const auto& ps : phi.patterns)
      for (const auto& p : ps)
        for (State s : p) top = std::max(top, s);
    phi.g_alphabet = top + 1;
  }
  phi.validate();
  return phi;
}

json gate_j(const Gate& g) {
  return {{"name", g.name}, {"q", g.q}, {"i", g.in}, {"o", g.out}, {"table", g.table}};
}

Gate gate_of(const json& j, std::size_t q) {
  Gate g;
  g.name = get<std::string>(j, "name");
  g.q = j.contains("q") ? get<std::size_t>(j, "q") : q;
  g.in = get<std::size_t>(j, "i");
  g.out = get<std::size_t>(j, "o");
  g.table = get<std::vector<State>>(j, "table");
  g.validate();
  return g;
}

json interface_j(const Interface& iface) {
  json names = iface.names;
  return {{"inputs", iface.inputs()}, {"size", iface.size()}, {"names", names}};
}

Interface interface_of(const json& j) {
  Interface iface;
  iface.is_input.assign(get<std::size_t>(j, "size"), false);
  for (std::size_t c : get<std::vector<std::size_t>>(j, "inputs")) {
    if (c >= iface.size()) throw Error(ErrorKind::InvalidInput, "interface input out of range");
    iface.is_input[c] = true;
  }
  if (j.contains("names")) iface.names = get<std::vector<std::string>>(j, "names");
  iface.validate();
  return iface;
}

json gadget_j(const Gadget& g) {
  json j = {{"in_copies", g.in_copies}, {"out_copies", g.out_copies}};
  if (g.csan)
    j["csan"] = csan_j(*g.csan);
  else
    j["network"] = network_j(g.net);
  if (!g.names.empty()) j["names"] = g.names;
  return j;
}

Gadget gadget_of(const json& j, const Interface& iface) {
  Gadget g;
  if (j.contains("csan")) {
    g.csan = csan_of(j.at("csan"));
    g.net = csan_to_network(*g.csan);
  } else {
    g.net = network_of(field(j, "network"));
  }
  g.in_copies = get<std::vector<InterfaceCopy>>(j, "in_copies");
  g.out_copies = get<std::vector<InterfaceCopy>>(j, "out_copies");
  if (j.contains("names")) g.names = get<std::vector<std::string>>(j, "names");
  g.validate(iface);
  return g;
}

}  // namespace

Network network_from_json(const std::string& text) { return network_of(parse(text)); }
std::string network_to_json(const Network& net, int indent) { return dump(network_j(net), indent); }

Configuration configuration_from_json(const std::string& text) { return config_of(parse(text)); }
std::string configuration_to_json(const Configuration& x, int indent) { return dump(json(x), indent); }

Csan csan_from_json(const std::string& text) { return csan_of(parse(text)); }
std::string csan_to_json(const Csan& c, int indent) { return dump(csan_j(c), indent); }

BlockEmbedding embedding_from_json(const std::string& text) { return embedding_of(parse(text)); }
std::string embedding_to_json(const BlockEmbedding& phi, int indent) { return dump(embedding_j(phi), indent); }

Dowel dowel_from_json(const std::string& text) {
  const json j = parse(text);
  const auto c1 = get<std::vector<std::size_t>>(j, "C1");
  const auto c2 = get<std::vector<std::size_t>>(j, "C2");
  const std::size_t m = c1.size() + c2.size();
  Dowel d;
  d.side.assign(m, DowelSide::C1);
  d.phi1.assign(m, kNoNode);
  d.phi2.assign(m, kNoNode);
  std::vector<char> seen(m, 0);
  for (auto [list, side] : {std::pair{&c1, DowelSide::C1}, std::pair{&c2, DowelSide::C2}})
    for (std::size_t c : *list) {
      if (c >= m || seen[c]++) throw Error(ErrorKind::InvalidInput, "dowel elements must be 0..m-1, each listed once");
      d.side[c] = side;
    }
  auto read_map = [&](const char* key, std::vector<std::size_t>& out) {
    const auto& mp = field(j, key);
    if (!mp.is_object() || mp.size() != m) throw Error(ErrorKind::Parse, std::string(key) + " must map every element");
    for (auto it = mp.begin(); it != mp.end(); ++it) {
      std::size_t c = 0;
      try {
        c = std::stoul(it.key());
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, std::string(key) + " keys are dowel elements");
      }
      if (c >= m) throw Error(ErrorKind::InvalidInput, std::string(key) + " names an unknown element");
      out[c] = as<std::size_t>(it.value(), key);
    }
  };
  read_map("phi1", d.phi1);
  read_map("phi2", d.phi2);
  return d;
}

std::string dowel_to_json(const Dowel& d, int indent) {
  json c1 = json::array(), c2 = json::array(), p1 = json::object(), p2 = json::object();
  for (std::size_t c = 0; c < d.size(); ++c) {
    (d.side[c] == DowelSide::C1 ? c1 : c2).push_back(c);
    p1[std::to_string(c)] = d.phi1[c];
    p2[std::to_string(c)] = d.phi2[c];
  }
  return dump({{"C1", c1}, {"C2", c2}, {"phi1", p1}, {"phi2", p2}}, indent);
}

PseudoOrbit pseudo_orbit_from_json(const std::string& text) {
  const json j = parse(text);
  PseudoOrbit p;
  p.exempt = get<std::vector<std::size_t>>(j, "exempt");
  std::sort(p.exempt.begin(), p.exempt.end());
  for (const auto& c : field(j, "configs")) p.configs.push_back(config_of(c));
  return p;
}

std::string pseudo_orbit_to_json(const PseudoOrbit& p, int indent) {
  return dump({{"exempt", p.exempt}, {"configs", p.configs}}, indent);
}

GNetwork gnet_from_json(const std::string& text) {
  const json j = parse(text);
  GNetwork gn;
  gn.q = j.contains("alphabet") ? get<std::size_t>(j, "alphabet") : 2;
  for (const auto& g : field(j, "gates")) gn.gates.push_back(gate_of(g, gn.q));
  gn.alpha = get<std::vector<std::size_t>>(j, "alpha");
  gn.beta = get<std::vector<std::size_t>>(j, "beta");
  gn.validate();
  return gn;
}

std::string gnet_to_json(const GNetwork& gn, int indent) {
  json gates = json::array();
  for (const auto& g : gn.gates) gates.push_back(gate_j(g));
  return dump({{"alphabet", gn.q}, {"gates", gates}, {"alpha", gn.alpha}, {"beta", gn.beta}}, indent);
}

Circuit circuit_from_json(const std::string& text) {
  const json j = parse(text);
  Circuit c;
  const auto& in = field(j, "inputs");
  if (in.is_array()) {
    c.input_names = as<std::vector<std::string>>(in, "inputs");
    c.inputs = c.input_names.size();
  } else {
    c.inputs = as<std::size_t>(in, "inputs");
  }
  for (const auto& g : field(j, "gates")) {
    CGate cg;
    cg.op = op_from_string(get<std::string>(g, "op"));
    const auto ins = get<std::vector<std::size_t>>(g, "in");
    if (ins.size() != fanin(cg.op))
      throw Error(ErrorKind::InvalidInput, std::string(to_string(cg.op)) + " gates take " +
                                               std::to_string(fanin(cg.op)) + " inputs");
    for (std::size_t p = 0; p < ins.size(); ++p) cg.in[p] = ins[p];
    c.gates.push_back(cg);
  }
  c.outputs = get<std::vector<std::size_t>>(j, "outputs");
  if (j.contains("output_names")) c.output_names = get<std::vector<std::string>>(j, "output_names");
  c.validate();
  return c;
}

std::string circuit_to_json(const Circuit& c, int indent) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    std::vector<std::size_t> in(g.in.begin(), g.in.begin() + static_cast<long>(fanin(g.op)));
    gates.push_back({{"op", to_string(g.op)}, {"in", in}});
  }
  json j = {{"gates", gates}, {"outputs", c.outputs}};
  if (c.input_names.empty())
    j["inputs"] = c.inputs;
  else
    j["inputs"] = c.input_names;
  if (!c.output_names.empty()) j["output_names"] = c.output_names;
  return dump(j, indent);
}

GadgetDocument gadget_from_json(const std::string& text) {
  const json j = parse(text);
  GadgetDocument doc;
  doc.iface = interface_of(field(j, "interface"));
  doc.gadget = gadget_of(j, doc.iface);
  return doc;
}

std::string gadget_to_json(const Interface& iface, const Gadget& g, int indent) {
  json j = gadget_j(g);
  j["interface"] = interface_j(iface);
  return dump(j, indent);
}

CoherentCertificate certificate_from_json(const std::string& text) {
  const json j = parse(text);
  CoherentCertificate cert;
  cert.alphabet = get<std::size_t>(j, "alphabet");
  cert.time = get<std::uint64_t>(j, "time");
  cert.iface = interface_of(field(j, "interface"));
  for (const auto& s : field(j, "state_configs")) cert.state_configs.push_back(config_of(s));
  for (const auto& row : field(j, "traces")) {
    cert.traces.emplace_back();
    for (const auto& tr : row) {
      cert.traces.back().emplace_back();
      for (const auto& c : tr) cert.traces.back().back().push_back(config_of(c));
    }
  }
  for (const auto& gj : field(j, "gates")) {
    CertifiedGate g;
    g.gate = gate_of(field(gj, "gate"), cert.alphabet);
    g.gadget = gadget_of(field(gj, "gadget"), cert.iface);
    g.context = config_of(field(gj, "context"));
    const auto exempt = g.gadget.exempt_nodes(cert.iface);
    for (const auto& pj : field(gj, "pseudo_orbits")) {
      PseudoOrbit p;
      p.exempt = pj.contains("exempt") ? get<std::vector<std::size_t>>(pj, "exempt") : exempt;
      std::sort(p.exempt.begin(), p.exempt.end());
      for (const auto& c : field(pj, "configs")) p.configs.push_back(config_of(c));
      g.pseudo_orbits[config_of(field(pj, "key"))] = std::move(p);
    }
    cert.gates.push_back(std::move(g));
  }
  return cert;
}

std::string certificate_to_json(const CoherentCertificate& cert, int indent) {
  const std::size_t gq = cert.gates.empty() ? cert.alphabet : cert.gates[0].gadget.net.alphabet();
  json states = json::array();
  for (const auto& s : cert.state_configs) states.push_back(config_json(s, gq));
  json traces = json::array();
  for (const auto& row : cert.traces) {
    json r = json::array();
    for (const auto& tr : row) {
      json t = json::array();
      for (const auto& c : tr) t.push_back(config_json(c, gq));
      r.push_back(t);
    }
    traces.push_back(r);
  }
  json gates = json::array();
  for (const auto& g : cert.gates) {
    json orbits = json::array();
    for (const auto& [key, p] : g.pseudo_orbits) {
      json configs = json::array();
      for (const auto& c : p.configs) configs.push_back(config_json(c, gq));
      orbits.push_back({{"key", config_json(key, cert.alphabet)}, {"exempt", p.exempt}, {"configs", configs}});
    }
    gates.push_back({{"gate", gate_j(g.gate)},
                     {"gadget", gadget_j(g.gadget)},
                     {"context", config_json(g.context, gq)},
                     {"pseudo_orbits", orbits}});
  }
  return dump({{"alphabet", cert.alphabet},
               {"time", cert.time},
               {"interface", interface_j(cert.iface)},
               {"state_configs", states},
               {"traces", traces},
               {"gates", gates}},
              indent);
}

namespace {

std::string node_label(std::size_t v, const std::vector<std::string>& names) {
  if (v < names.size() && !names[v].empty()) return names[v];
  return std::to_string(v);
}

std::string quoted(const std::string& s) {
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') r += '\\';
    r += ch;
  }
  return r + "\"";
}

}  // namespace

std::string network_to_dot(const Network& net, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "digraph network {\n";
  for (std::size_t v = 0; v < net.size(); ++v) os << "  n" << v << " [label=" << quoted(node_label(v, names)) << "];\n";
  for (std::size_t v = 0; v < net.size(); ++v)
    for (std::size_t u : net.rule(v).deps) os << "  n" << u << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string csan_to_dot(const Csan& c, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "graph csan {\n";
  for (std::size_t v = 0; v < c.size(); ++v) {
    std::string lab = node_label(v, names);
    const auto& spec = c.label(v).spec;
    if (!spec.family.empty() && spec.family != "table") lab += "\\n" + spec.family;
    os << "  n" << v << " [label=" << quoted(lab) << "];\n";
  }
  for (const auto& e : c.edges()) {
    os << "  n" << e.u << " -- n" << e.v;
    if (e.rho_id != "id") os << " [label=" << quoted(e.rho_id) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string gnet_to_dot(const GNetwork& gn) {
  std::ostringstream os;
  os << "digraph gnet {\n";
  for (std::size_t j = 0; j < gn.gates.size(); ++j)
    os << "  g" << j << " [shape=box,label=" << quoted(gn.gates[j].name + " #" + std::to_string(j)) << "];\n";
  std::vector<std::size_t> reader(gn.size());
  for (std::size_t p = 0; p < gn.alpha.size(); ++p) reader[gn.alpha[p]] = p;
  for (std::size_t v = 0; v < gn.size(); ++v) {
    auto [gw, pw] = gn.output_port(gn.beta[v]);
    auto [gr, pr] = gn.input_port(reader[v]);
    os << "  g" << gw << " -> g" << gr << " [label=" << quoted("x" + std::to_string(v)) << ",taillabel=" << pw
       << ",headlabel=" << pr << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string circuit_to_dot(const Circuit& c) {
  std::ostringstream os;
  os << "digraph circuit {\n";
  for (std::size_t i = 0; i < c.inputs; ++i)
    os << "  s" << i << " [shape=circle,label=" << quoted(node_label(i, c.input_names)) << "];\n";
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const std::size_t s = c.inputs + g;
    os << "  s" << s << " [shape=box,label=" << quoted(to_string(c.gates[g].op)) << "];\n";
    for (std::size_t p = 0; p < fanin(c.gates[g].op); ++p) os << "  s" << c.gates[g].in[p] << " -> s" << s << ";\n";
  }
  for (std::size_t k = 0; k < c.outputs.size(); ++k) {
    os << "  o" << k << " [shape=plaintext,label=" << quoted(node_label(k, c.output_names).insert(0, "out ")) << "];\n";
    os << "  s" << c.outputs[k] << " -> o" << k << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace annet
