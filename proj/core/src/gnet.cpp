#include "annet/gnet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace annet {

namespace {

constexpr std::size_t kNoPort = static_cast<std::size_t>(-1);

std::size_t ipow(std::size_t q, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= q;
  return r;
}

std::vector<State> digits_of(std::size_t idx, std::size_t q, std::size_t k) {
  std::vector<State> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = static_cast<State>(idx % q);
    idx /= q;
  }
  return d;
}

std::size_t ceil_log2(std::size_t k) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < k) ++r;
  return r;
}

}  // namespace

std::vector<State> Gate::apply(const std::vector<State>& inputs) const {
  if (inputs.size() != in) throw Error(ErrorKind::InvalidInput, "gate " + name + " arity mismatch");
  std::size_t idx = 0;
  for (std::size_t j = in; j-- > 0;) idx = idx * q + inputs[j];
  return std::vector<State>(table.begin() + static_cast<std::ptrdiff_t>(idx * out),
                            table.begin() + static_cast<std::ptrdiff_t>((idx + 1) * out));
}

void Gate::validate() const {
  if (q == 0) throw Error(ErrorKind::InvalidInput, "gate " + name + " has an empty alphabet");
  if (table.size() != ipow(q, in) * out)
    throw Error(ErrorKind::InvalidInput, "gate " + name + " table has the wrong size");
  for (State s : table)
    if (s >= q) throw Error(ErrorKind::InvalidInput, "gate " + name + " table leaves the alphabet");
}

bool Gate::irreducible() const {
  // Union-find over in ports [0, in) and out ports [in, in + out).
  std::vector<std::size_t> parent(in + out);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const std::size_t rows = ipow(q, in);
  for (std::size_t j = 0, stride = 1; j < in; ++j, stride *= q)
    for (std::size_t k = 0; k < out; ++k) {
      bool dep = false;
      for (std::size_t idx = 0; idx < rows && !dep; ++idx) {
        if ((idx / stride) % q != 0) continue;
        for (std::size_t a = 1; a < q && !dep; ++a)
          dep = table[(idx + a * stride) * out + k] != table[idx * out + k];
      }
      if (dep) parent[find(j)] = find(in + k);
    }
  std::set<std::size_t> roots;
  for (std::size_t p = 0; p < in + out; ++p) roots.insert(find(p));
  return roots.size() <= 1;
}

Gate make_gate(std::string name, std::size_t q, std::size_t in, std::size_t out,
               const std::function<std::vector<State>(const std::vector<State>&)>& f) {
  Gate g{std::move(name), q, in, out, {}};
  const std::size_t rows = ipow(q, in);
  g.table.reserve(rows * out);
  for (std::size_t idx = 0; idx < rows; ++idx) {
    auto o = f(digits_of(idx, q, in));
    if (o.size() != out) throw Error(ErrorKind::InvalidInput, "gate " + g.name + " returns the wrong arity");
    g.table.insert(g.table.end(), o.begin(), o.end());
  }
  g.validate();
  return g;
}

std::size_t GNetwork::input_offset(std::size_t gate) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < gate; ++j) off += gates[j].in;
  return off;
}

std::size_t GNetwork::output_offset(std::size_t gate) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < gate; ++j) off += gates[j].out;
  return off;
}

std::pair<std::size_t, std::size_t> GNetwork::output_port(std::size_t flat) const {
  for (std::size_t j = 0; j < gates.size(); ++j) {
    if (flat < gates[j].out) return {j, flat};
    flat -= gates[j].out;
  }
  throw Error(ErrorKind::InvalidInput, "output port out of range");
}

std::pair<std::size_t, std::size_t> GNetwork::input_port(std::size_t flat) const {
  for (std::size_t j = 0; j < gates.size(); ++j) {
    if (flat < gates[j].in) return {j, flat};
    flat -= gates[j].in;
  }
  throw Error(ErrorKind::InvalidInput, "input port out of range");
}

void GNetwork::validate() const {
  std::size_t ins = 0, outs = 0;
  for (const auto& g : gates) {
    if (g.q != q) throw Error(ErrorKind::InvalidInput, "gate " + g.name + " uses another alphabet");
    g.validate();
    ins += g.in;
    outs += g.out;
  }
  const std::size_t n = beta.size();
  if (ins != n || outs != n || alpha.size() != n)
    throw Error(ErrorKind::InvalidInput, "G-network needs as many input ports, output ports and nodes (" +
                                             std::to_string(ins) + ", " + std::to_string(outs) + ", " +
                                             std::to_string(n) + ")");
  std::vector<char> seen_a(n, 0), seen_b(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (alpha[p] >= n || seen_a[alpha[p]]++) throw Error(ErrorKind::InvalidInput, "alpha is not a bijection");
    if (beta[p] >= n || seen_b[beta[p]]++) throw Error(ErrorKind::InvalidInput, "beta is not a bijection");
  }
  // No gate may read a node that one of its own output ports writes.
  std::vector<std::size_t> reader(n);
  for (std::size_t p = 0; p < n; ++p) reader[alpha[p]] = input_port(p).first;
  for (std::size_t v = 0; v < n; ++v)
    if (reader[v] == output_port(beta[v]).first)
      throw Error(ErrorKind::InvalidInput, "gate " + std::to_string(reader[v]) + " (" + gates[reader[v]].name +
                                               ") reads its own output at node " + std::to_string(v));
}

std::size_t GNetBuilder::new_node() { return nodes_++; }

std::vector<std::size_t> GNetBuilder::new_nodes(std::size_t count) {
  std::vector<std::size_t> r(count);
  for (auto& v : r) v = new_node();
  return r;
}

std::size_t GNetBuilder::add(const Gate& gate, const std::vector<std::size_t>& inputs,
                             const std::vector<std::size_t>& outputs) {
  if (inputs.size() != gate.in || outputs.size() != gate.out)
    throw Error(ErrorKind::Construction, "gate " + gate.name + " wired with the wrong arity");
  gates_.push_back(gate);
  ins_.push_back(inputs);
  outs_.push_back(outputs);
  return gates_.size() - 1;
}

GNetwork GNetBuilder::build() const {
  GNetwork gn;
  gn.q = q_;
  gn.gates = gates_;
  gn.beta.assign(nodes_, kNoPort);
  std::size_t out_flat = 0;
  for (std::size_t j = 0; j < gates_.size(); ++j) {
    for (std::size_t v : ins_[j]) gn.alpha.push_back(v);
    for (std::size_t v : outs_[j]) {
      if (v >= nodes_ || gn.beta[v] != kNoPort)
        throw Error(ErrorKind::Construction, "node " + std::to_string(v) + " is written twice");
      gn.beta[v] = out_flat++;
    }
  }
  for (std::size_t v = 0; v < nodes_; ++v)
    if (gn.beta[v] == kNoPort) throw Error(ErrorKind::Construction, "node " + std::to_string(v) + " is never written");
  gn.validate();
  return gn;
}

Network gnetwork_to_network(const GNetwork& gn) {
  gn.validate();
  std::vector<Rule> rules(gn.size());
  for (std::size_t v = 0; v < gn.size(); ++v) {
    auto [j, k] = gn.output_port(gn.beta[v]);
    const Gate& g = gn.gates[j];
    const std::size_t off = gn.input_offset(j);
    Rule& r = rules[v];
    for (std::size_t p = 0; p < g.in; ++p) r.deps.push_back(gn.alpha[off + p]);
    const std::size_t rows = ipow(gn.q, g.in);
    r.table.resize(rows);
    for (std::size_t idx = 0; idx < rows; ++idx) r.table[idx] = g.table[idx * g.out + k];
  }
  return Network(gn.q, std::move(rules));
}

Network effective_network(const Network& net) {
  const std::size_t q = net.alphabet();
  std::vector<Rule> rules;
  for (std::size_t v = 0; v < net.size(); ++v) {
    const Rule& r = net.rule(v);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0, stride = 1; k < r.deps.size(); ++k, stride *= q) {
      bool dep = false;
      for (std::size_t idx = 0; idx < r.table.size() && !dep; ++idx) {
        if ((idx / stride) % q != 0) continue;
        for (std::size_t a = 1; a < q && !dep; ++a) dep = r.table[idx + a * stride] != r.table[idx];
      }
      if (dep) keep.push_back(k);
    }
    Rule e;
    for (std::size_t k : keep) e.deps.push_back(r.deps[k]);
    const std::size_t rows = ipow(q, keep.size());
    e.table.resize(rows);
    for (std::size_t idx = 0; idx < rows; ++idx) {
      auto d = digits_of(idx, q, keep.size());
      std::size_t full = 0;
      // Dropped positions read 0; the output does not depend on them.
      std::vector<State> all(r.deps.size(), 0);
      for (std::size_t i = 0; i < keep.size(); ++i) all[keep[i]] = d[i];
      for (std::size_t i = all.size(); i-- > 0;) full = full * q + all[i];
      e.table[idx] = r.table[full];
    }
    rules.push_back(std::move(e));
  }
  return Network(q, std::move(rules));
}

GNetwork network_to_gnetwork(const Network& net, const std::vector<Gate>& catalog) {
  const Network eff = effective_network(net);
  const std::size_t q = net.alphabet(), n = net.size();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  std::vector<std::vector<std::size_t>> dep_set(n);
  for (std::size_t v = 0; v < n; ++v) {
    dep_set[v] = eff.rule(v).deps;
    std::sort(dep_set[v].begin(), dep_set[v].end());
    if (dep_set[v].empty())
      throw Error(ErrorKind::NotDecomposable, "node " + std::to_string(v) + " is constant, no gate can write it");
    groups[dep_set[v]].push_back(v);
  }
  std::vector<int> read_by(n, -1);
  int gid = 0;
  for (const auto& [deps, members] : groups) {
    for (std::size_t u : deps) {
      if (read_by[u] != -1)
        throw Error(ErrorKind::NotDecomposable, "node " + std::to_string(u) + " is read by two different gates");
      read_by[u] = gid;
    }
    ++gid;
  }
  for (std::size_t u = 0; u < n; ++u)
    if (read_by[u] == -1) throw Error(ErrorKind::NotDecomposable, "node " + std::to_string(u) + " is never read");

  // Local function of node v as a table over its sorted dependency set.
  auto local_table = [&](std::size_t v) {
    const auto& deps = dep_set[v];
    std::vector<State> t(ipow(q, deps.size()));
    Configuration x(n, 0);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      auto d = digits_of(idx, q, deps.size());
      for (std::size_t i = 0; i < deps.size(); ++i) x[deps[i]] = d[i];
      t[idx] = eff.eval(v, x);
    }
    return t;
  };

  std::vector<std::pair<std::size_t, const std::vector<std::size_t>*>> order;
  for (const auto& [deps, members] : groups) order.emplace_back(members.front(), &deps);
  std::sort(order.begin(), order.end());

  GNetBuilder b(q);
  b.new_nodes(n);
  for (const auto& [first, depsp] : order) {
    const auto& deps = *depsp;
    const auto& members = groups.at(deps);
    std::vector<std::vector<State>> want;
    for (std::size_t v : members) want.push_back(local_table(v));
    bool matched = false;
    for (const Gate& g : catalog) {
      if (g.q != q || g.in != deps.size() || g.out != members.size()) continue;
      std::vector<std::size_t> perm_in(g.in);
      std::iota(perm_in.begin(), perm_in.end(), std::size_t{0});
      do {
        // Gate port p reads deps[perm_in[p]].  Column k of the gate, re-indexed
        // over the sorted deps, must equal some member's table.
        std::vector<std::vector<State>> cols(g.out, std::vector<State>(ipow(q, g.in)));
        for (std::size_t idx = 0; idx < cols[0].size(); ++idx) {
          auto d = digits_of(idx, q, g.in);
          std::vector<State> ports(g.in);
          for (std::size_t p = 0; p < g.in; ++p) ports[p] = d[perm_in[p]];
          auto o = g.apply(ports);
          for (std::size_t k = 0; k < g.out; ++k) cols[k][idx] = o[k];
        }
        std::vector<std::size_t> assign(g.out);
        std::iota(assign.begin(), assign.end(), std::size_t{0});
        do {
          bool ok = true;
          for (std::size_t k = 0; k < g.out && ok; ++k) ok = cols[k] == want[assign[k]];
          if (ok) {
            std::vector<std::size_t> ins(g.in), outs(g.out);
            for (std::size_t p = 0; p < g.in; ++p) ins[p] = deps[perm_in[p]];
            for (std::size_t k = 0; k < g.out; ++k) outs[k] = members[assign[k]];
            b.add(g, ins, outs);
            matched = true;
          }
        } while (!matched && std::next_permutation(assign.begin(), assign.end()));
      } while (!matched && std::next_permutation(perm_in.begin(), perm_in.end()));
      if (matched) break;
    }
    if (!matched)
      throw Error(ErrorKind::NotDecomposable,
                  "no catalog gate computes node " + std::to_string(first) + " and its group");
  }
  try {
    return b.build();
  } catch (const Error& e) {
    throw Error(ErrorKind::NotDecomposable, e.what());
  }
}

namespace {

std::map<std::string, std::vector<Gate>> make_catalog() {
  using V = std::vector<State>;
  std::map<std::string, std::vector<Gate>> c;
  auto and2 = [](const V& x) { return static_cast<State>(x[0] & x[1]); };
  auto or2 = [](const V& x) { return static_cast<State>(x[0] | x[1]); };
  c["Gmon"] = {
      make_gate("AND21", 2, 2, 1, [&](const V& x) { return V{and2(x)}; }),
      make_gate("AND22", 2, 2, 2, [&](const V& x) { return V{and2(x), and2(x)}; }),
      make_gate("AND11", 2, 1, 1, [](const V& x) { return V{x[0]}; }),
      make_gate("AND12", 2, 1, 2, [](const V& x) { return V{x[0], x[0]}; }),
      make_gate("OR21", 2, 2, 1, [&](const V& x) { return V{or2(x)}; }),
      make_gate("OR22", 2, 2, 2, [&](const V& x) { return V{or2(x), or2(x)}; }),
      make_gate("OR11", 2, 1, 1, [](const V& x) { return V{x[0]}; }),
      make_gate("OR12", 2, 1, 2, [](const V& x) { return V{x[0], x[0]}; }),
  };
  c["Gmon2"] = {
      make_gate("AND22", 2, 2, 2, [&](const V& x) { return V{and2(x), and2(x)}; }),
      make_gate("OR22", 2, 2, 2, [&](const V& x) { return V{or2(x), or2(x)}; }),
  };
  c["Gnor"] = {make_gate("NOR", 2, 2, 2, [&](const V& x) {
    State r = static_cast<State>(1 - or2(x));
    return V{r, r};
  })};
  c["Gnand"] = {make_gate("NAND", 2, 2, 2, [&](const V& x) {
    State r = static_cast<State>(1 - and2(x));
    return V{r, r};
  })};
  c["Gconj"] = {
      make_gate("AND", 2, 2, 1, [&](const V& x) { return V{and2(x)}; }),
      make_gate("COPY", 2, 1, 2, [](const V& x) { return V{x[0], x[0]}; }),
  };
  c["Gwire"] = {make_gate("ID", 2, 1, 1, [](const V& x) { return V{x[0]}; })};
  auto has2 = [](const V& x) { return x[0] == 2 || x[1] == 2; };
  c["Gt"] = {
      make_gate("AND01", 3, 2, 1, [&](const V& x) { return V{has2(x) ? State{2} : static_cast<State>(x[0] & x[1])}; }),
      make_gate("AND2", 3, 2, 1,
                [&](const V& x) { return V{has2(x) || (x[0] == 1 && x[1] == 1) ? State{2} : State{0}}; }),
      make_gate("LOOP", 3, 2, 1, [&](const V& x) { return V{has2(x) ? State{2} : x[0]}; }),
      make_gate("ID", 3, 1, 1, [](const V& x) { return V{x[0]}; }),
      make_gate("COPY", 3, 1, 2, [](const V& x) { return V{x[0], x[0]}; }),
  };
  return c;
}

}  // namespace

const std::map<std::string, std::vector<Gate>>& gate_sets() {
  static const auto catalog = make_catalog();
  return catalog;
}

const Gate& catalog_gate(const std::string& set, const std::string& name) {
  auto it = gate_sets().find(set);
  if (it == gate_sets().end()) throw Error(ErrorKind::InvalidInput, "unknown gate set '" + set + "'");
  for (const auto& g : it->second)
    if (g.name == name) return g;
  throw Error(ErrorKind::MissingGate, "gate set " + set + " has no gate '" + name + "'");
}

std::vector<std::size_t> primes_below(std::size_t n) {
  std::vector<std::size_t> p;
  for (std::size_t k = 2; k < n; ++k) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= k && prime; ++d) prime = k % d != 0;
    if (prime) p.push_back(k);
  }
  return p;
}

PrimeRotations prime_rotations(std::size_t n) {
  PrimeRotations r;
  r.primes = primes_below(n);
  GNetBuilder b(2);
  const Gate& id = catalog_gate("Gwire", "ID");
  for (std::size_t p : r.primes) {
    auto u = b.new_nodes(p);
    for (std::size_t i = 0; i < p; ++i) b.add(id, {u[i]}, {u[(i + 1) % p]});
    r.marked.push_back(1);
    for (std::size_t i = 1; i < p; ++i) r.marked.push_back(0);
  }
  r.gn = b.build();
  return r;
}

namespace {

Network monotone_from_graph(const Digraph& g, bool conjunctive) {
  std::vector<Rule> rules(g.n);
  for (auto [u, v] : g.edges) {
    if (u >= g.n || v >= g.n) throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (std::find(rules[v].deps.begin(), rules[v].deps.end(), u) == rules[v].deps.end()) rules[v].deps.push_back(u);
  }
  for (auto& r : rules) {
    std::sort(r.deps.begin(), r.deps.end());
    const std::size_t rows = std::size_t{1} << r.deps.size();
    r.table.resize(rows);
    for (std::size_t idx = 0; idx < rows; ++idx)
      r.table[idx] = conjunctive ? (idx == rows - 1 ? 1 : 0) : (idx != 0 ? 1 : 0);
  }
  return Network(2, std::move(rules));
}

}  // namespace

Network conjunctive_from_graph(const Digraph& g) { return monotone_from_graph(g, true); }
Network disjunctive_from_graph(const Digraph& g) { return monotone_from_graph(g, false); }

Network conjugate_by_negation(const Network& net) {
  if (net.alphabet() != 2) throw Error(ErrorKind::InvalidInput, "negation conjugation needs a binary network");
  std::vector<Rule> rules;
  for (const Rule& r : net.rules()) {
    Rule c = r;
    const std::size_t rows = r.table.size();
    for (std::size_t idx = 0; idx < rows; ++idx) c.table[idx] = 1 - r.table[(rows - 1) ^ idx];
    rules.push_back(std::move(c));
  }
  return Network(2, std::move(rules));
}

FaninGadget fanin_gadget3() {
  FaninGadget f;
  f.names = {"v1", "v2", "v3", "q1", "q2", "q3", "q4", "q5", "vo", "q7", "q8", "q9", "q6'"};
  auto id = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(f.names.begin(), f.names.end(), s) - f.names.begin());
  };
  Digraph g{f.names.size(), {}};
  auto edge = [&](const char* a, const char* b) { g.edges.emplace_back(id(a), id(b)); };
  edge("v1", "q1");
  edge("v2", "q2");
  edge("v3", "q3");
  edge("q2", "q4");
  edge("q3", "q4");
  edge("q1", "q5");
  edge("q5", "vo");
  edge("q4", "vo");
  edge("q5", "q8");
  edge("q8", "q7");
  edge("q8", "q6'");
  edge("q6'", "q7");
  edge("q7", "q6'");
  f.net = conjunctive_from_graph(g);
  f.inputs = {id("v1"), id("v2"), id("v3")};
  f.output = id("vo");
  return f;
}

GconjCompilation conj_to_gconj(const Network& input) {
  if (input.alphabet() != 2) throw Error(ErrorKind::InvalidInput, "conjunctive networks are binary");
  const Network net = effective_network(input);
  const std::size_t n = net.size();
  std::vector<std::vector<std::size_t>> in(n), out(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Rule& r = net.rule(v);
    for (std::size_t idx = 0; idx < r.table.size(); ++idx)
      if (r.table[idx] != (idx + 1 == r.table.size() ? 1u : 0u))
        throw Error(ErrorKind::InvalidInput, "node " + std::to_string(v) + " is not a conjunction of its inputs");
    in[v] = r.deps;
    std::sort(in[v].begin(), in[v].end());
    for (std::size_t u : in[v]) out[u].push_back(v);
  }
  std::size_t D = 1, E = 1;
  for (std::size_t v = 0; v < n; ++v) {
    D = std::max(D, ceil_log2(in[v].size()));
    E = std::max(E, ceil_log2(out[v].size()));
  }
  const Gate& AND = catalog_gate("Gconj", "AND");
  const Gate& COPY = catalog_gate("Gconj", "COPY");
  GNetBuilder b(2);
  std::vector<std::size_t> core = b.new_nodes(n);
  std::vector<std::vector<std::size_t>> block(n);
  for (std::size_t v = 0; v < n; ++v) block[v].push_back(core[v]);
  std::map<std::size_t, State> context;  // non-block nodes; default 1

  auto sink = [&](std::size_t s) {
    auto w = b.new_nodes(4);  // y, z, u, t
    b.add(AND, {s, w[0]}, {w[1]});
    b.add(COPY, {w[1]}, {w[2], w[3]});
    b.add(AND, {w[2], w[3]}, {w[0]});
    for (std::size_t x : w) context[x] = 0;
  };

  // Fanout trees: edge_wire[(u, v)] carries x_u after E steps.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_wire;
  for (std::size_t u = 0; u < n; ++u) {
    if (out[u].empty()) {
      sink(core[u]);
      continue;
    }
    std::vector<std::size_t> wires{core[u]};
    for (std::size_t e = 1; e <= E; ++e) {
      const std::size_t want = std::min(out[u].size(), std::size_t{1} << std::min<std::size_t>(e, 62));
      std::vector<std::size_t> next;
      for (std::size_t w : wires) {
        auto o = b.new_nodes(2);
        b.add(COPY, {w}, o);
        for (std::size_t x : o) {
          if (next.size() < want) {
            next.push_back(x);
          } else {
            context[x] = 1;
            sink(x);
          }
        }
      }
      for (std::size_t x : next) context[x] = 1;
      wires = std::move(next);
    }
    for (std::size_t i = 0; i < out[u].size(); ++i) edge_wire[{u, out[u][i]}] = wires[i];
  }

  // Fanin trees: D levels ending on the core wire.
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v].empty()) {
      auto s = b.new_nodes(4);  // a, b, c, e
      b.add(COPY, {s[0]}, {s[1], s[2]});
      b.add(COPY, {s[2]}, {s[3], core[v]});
      b.add(AND, {s[1], s[3]}, {s[0]});
      for (std::size_t x : s) context[x] = 1;
      continue;
    }
    std::vector<std::size_t> wires;
    for (std::size_t u : in[v]) wires.push_back(edge_wire.at({u, v}));
    for (std::size_t d = 1; d <= D; ++d) {
      const bool last = d == D;
      std::vector<std::size_t> next;
      std::size_t i = 0;
      for (; i + 1 < wires.size(); i += 2) {
        std::size_t o = last ? core[v] : b.new_node();
        b.add(AND, {wires[i], wires[i + 1]}, {o});
        if (!last) context[o] = 1;
        next.push_back(o);
      }
      if (i < wires.size()) {
        std::size_t o = last ? core[v] : b.new_node();
        std::size_t s = b.new_node();
        b.add(COPY, {wires[i]}, {o, s});
        if (last) {
          block[v].push_back(s);
        } else {
          context[o] = 1;
          context[s] = 1;
        }
        sink(s);
        next.push_back(o);
      }
      wires = std::move(next);
    }
    if (wires.size() != 1) throw Error(ErrorKind::Construction, "fanin tree did not reduce to one wire");
  }

  GconjCompilation res;
  res.gn = b.build();
  res.fanin_depth = D;
  res.fanout_depth = E;
  BlockEmbedding& phi = res.embedding;
  phi.time = D + E;
  phi.f_alphabet = 2;
  phi.g_alphabet = 2;
  phi.g_size = res.gn.size();
  std::vector<std::size_t> ctx_nodes;
  std::vector<char> in_block(phi.g_size, 0);
  for (const auto& bl : block)
    for (std::size_t x : bl) in_block[x] = 1;
  for (std::size_t x = 0; x < phi.g_size; ++x)
    if (!in_block[x]) ctx_nodes.push_back(x);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nodes = block[v];
    if (v == 0) nodes.insert(nodes.end(), ctx_nodes.begin(), ctx_nodes.end());
    std::vector<Configuration> pats(2);
    for (State s = 0; s < 2; ++s) {
      pats[s].assign(block[v].size(), s);
      if (v == 0)
        for (std::size_t x : ctx_nodes) pats[s].push_back(context.count(x) ? context[x] : 1);
    }
    phi.blocks.push_back(std::move(nodes));
    phi.patterns.push_back(std::move(pats));
  }
  return res;
}

GtModule gt_test_module() {
  GtModule m;
  // x, the two copies, the AND2 test, the loop and its identity feedback.
  m.names = {{"x", 0}, {"u1", 1}, {"u2", 2}, {"and2", 3}, {"loop", 4}, {"id", 5}};
  std::vector<Rule> rules(6);
  auto identity = [](std::size_t src) { return Rule{{src}, {0, 1, 2}}; };
  const Gate& and2 = catalog_gate("Gt", "AND2");
  const Gate& loop = catalog_gate("Gt", "LOOP");
  rules[0] = identity(0);
  rules[1] = identity(0);
  rules[2] = identity(0);
  rules[3] = Rule{{1, 2}, and2.table};
  rules[4] = Rule{{5, 3}, loop.table};
  rules[5] = identity(4);
  m.net = Network(3, std::move(rules));
  m.inputs = {0};
  m.output = 4;
  m.delay = 3;
  return m;
}

GtModule gt_and_tree(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "an AND tree needs at least one input");
  GtModule m;
  std::vector<Rule> rules;
  const Gate& and01 = catalog_gate("Gt", "AND01");
  for (std::size_t i = 0; i < k; ++i) {
    rules.push_back(Rule{{i}, {0, 1, 2}});
    m.inputs.push_back(i);
    m.names["x" + std::to_string(i + 1)] = i;
  }
  std::vector<std::size_t> wires = m.inputs;
  std::size_t levels = 0;
  do {
    std::vector<std::size_t> next;
    std::size_t i = 0;
    for (; i + 1 < wires.size(); i += 2) {
      rules.push_back(Rule{{wires[i], wires[i + 1]}, and01.table});
      next.push_back(rules.size() - 1);
    }
    if (i < wires.size()) {
      rules.push_back(Rule{{wires[i]}, {0, 1, 2}});
      next.push_back(rules.size() - 1);
    }
    wires = std::move(next);
    ++levels;
  } while (wires.size() > 1);
  m.net = Network(3, std::move(rules));
  m.output = wires[0];
  m.delay = levels;
  m.names["out"] = wires[0];
  return m;
}

GtTransient gt_transient_network(std::size_t n) {
  GtTransient r;
  r.primes = primes_below(n);
  if (r.primes.empty()) throw Error(ErrorKind::InvalidInput, "the transient machine needs a prime below n (n >= 3)");
  const Gate& id = catalog_gate("Gt", "ID");
  const Gate& copy = catalog_gate("Gt", "COPY");
  const Gate& and01 = catalog_gate("Gt", "AND01");
  const Gate& and2 = catalog_gate("Gt", "AND2");
  const Gate& loop = catalog_gate("Gt", "LOOP");
  GNetBuilder b(3);
  std::vector<std::size_t> taps, ones;
  for (std::size_t p : r.primes) {
    auto u = b.new_nodes(p);
    std::size_t w = b.new_node();
    for (std::size_t i = 0; i + 1 < p; ++i) b.add(id, {u[i]}, {u[i + 1]});
    b.add(copy, {u[p - 1]}, {u[0], w});
    taps.push_back(w);
    ones.push_back(u[1]);
  }
  std::vector<std::size_t> wires = taps;
  do {
    std::vector<std::size_t> next;
    std::size_t i = 0;
    for (; i + 1 < wires.size(); i += 2) {
      std::size_t o = b.new_node();
      b.add(and01, {wires[i], wires[i + 1]}, {o});
      next.push_back(o);
    }
    if (i < wires.size()) {
      std::size_t o = b.new_node();
      b.add(id, {wires[i]}, {o});
      next.push_back(o);
    }
    wires = std::move(next);
  } while (wires.size() > 1);
  auto t = b.new_nodes(5);  // u1, u2, and2, loop, id
  b.add(copy, {wires[0]}, {t[0], t[1]});
  b.add(and2, {t[0], t[1]}, {t[2]});
  b.add(loop, {t[4], t[2]}, {t[3]});
  b.add(id, {t[3]}, {t[4]});
  r.gn = b.build();
  r.loop_node = t[3];
  r.initial.assign(r.gn.size(), 0);
  for (std::size_t v : ones) r.initial[v] = 1;
  return r;
}

Network associated_conjunctive(const GNetwork& gn) {
  gn.validate();
  if (gn.q != 3) throw Error(ErrorKind::InvalidInput, "associated conjunctive network needs a Gt-network");
  std::vector<Rule> rules(gn.size());
  for (std::size_t v = 0; v < gn.size(); ++v) {
    const std::size_t j = gn.output_port(gn.beta[v]).first;
    const Gate& g = gn.gates[j];
    const std::size_t off = gn.input_offset(j);
    Rule& r = rules[v];
    if (g.name == "AND01" || g.name == "AND2") {
      r.deps = {gn.alpha[off], gn.alpha[off + 1]};
      r.table = {0, 0, 0, 1};
    } else if (g.name == "LOOP" || g.name == "ID" || g.name == "COPY") {
      r.deps = {gn.alpha[off]};
      r.table = {0, 1};
    } else {
      throw Error(ErrorKind::InvalidInput, "gate " + g.name + " is not a Gt gate");
    }
  }
  return Network(2, std::move(rules));
}

}  // namespace annet
