#include "annet/circuit.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace annet {

const char* to_string(Op op) noexcept {
  switch (op) {
    case Op::And: return "AND";
    case Op::Or: return "OR";
    case Op::Not: return "NOT";
    case Op::Id: return "ID";
  }
  return "?";
}

Op op_from_string(const std::string& s) {
  if (s == "AND") return Op::And;
  if (s == "OR") return Op::Or;
  if (s == "NOT") return Op::Not;
  if (s == "ID") return Op::Id;
  throw Error(ErrorKind::Parse, "unknown circuit gate '" + s + "'");
}

std::size_t fanin(Op op) noexcept { return op == Op::And || op == Op::Or ? 2 : 1; }

void Circuit::validate() const {
  for (std::size_t g = 0; g < gates.size(); ++g)
    for (std::size_t p = 0; p < fanin(gates[g].op); ++p)
      if (gates[g].in[p] >= inputs + g)
        throw Error(ErrorKind::InvalidInput, "gate " + std::to_string(g) + " reads a signal that is not yet defined");
  for (std::size_t o : outputs)
    if (o >= signals()) throw Error(ErrorKind::InvalidInput, "circuit output names a missing signal");
  if (!input_names.empty() && input_names.size() != inputs)
    throw Error(ErrorKind::InvalidInput, "circuit needs one name per input");
  if (!output_names.empty() && output_names.size() != outputs.size())
    throw Error(ErrorKind::InvalidInput, "circuit needs one name per output");
}

std::vector<State> eval(const Circuit& c, const std::vector<State>& bits) {
  if (bits.size() != c.inputs) throw Error(ErrorKind::InvalidInput, "circuit input width mismatch");
  std::vector<State> sig(c.signals());
  for (std::size_t i = 0; i < c.inputs; ++i) {
    if (bits[i] > 1) throw Error(ErrorKind::InvalidInput, "circuit inputs are bits");
    sig[i] = bits[i];
  }
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const CGate& gt = c.gates[g];
    State a = sig[gt.in[0]], r = 0;
    switch (gt.op) {
      case Op::And: r = a & sig[gt.in[1]]; break;
      case Op::Or: r = a | sig[gt.in[1]]; break;
      case Op::Not: r = 1 - a; break;
      case Op::Id: r = a; break;
    }
    sig[c.inputs + g] = r;
  }
  std::vector<State> out;
  for (std::size_t o : c.outputs) out.push_back(sig[o]);
  return out;
}

namespace {

std::vector<std::size_t> depths(const Circuit& c, bool longest) {
  c.validate();
  std::vector<std::size_t> d(c.signals(), 0);
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const CGate& gt = c.gates[g];
    std::size_t best = d[gt.in[0]];
    if (fanin(gt.op) == 2) best = longest ? std::max(best, d[gt.in[1]]) : std::min(best, d[gt.in[1]]);
    d[c.inputs + g] = best + 1;
  }
  return d;
}

}  // namespace

std::vector<std::size_t> max_depths(const Circuit& c) { return depths(c, true); }
std::vector<std::size_t> min_depths(const Circuit& c) { return depths(c, false); }

bool is_synchronous(const Circuit& c) {
  auto hi = max_depths(c), lo = min_depths(c);
  for (std::size_t o : c.outputs)
    if (hi[o] != lo[o] || hi[o] != hi[c.outputs.front()]) return false;
  return true;
}

std::size_t depth(const Circuit& c) {
  auto hi = max_depths(c);
  std::size_t d = 0;
  for (std::size_t o : c.outputs) d = std::max(d, hi[o]);
  return d;
}

std::vector<std::size_t> fanouts(const Circuit& c) {
  std::vector<std::size_t> f(c.signals(), 0);
  for (const auto& g : c.gates)
    for (std::size_t p = 0; p < fanin(g.op); ++p) ++f[g.in[p]];
  for (std::size_t o : c.outputs) ++f[o];
  return f;
}

Circuit synchronize(const Circuit& c) {
  const auto d = max_depths(c);
  Circuit r;
  r.inputs = c.inputs;
  r.input_names = c.input_names;
  r.output_names = c.output_names;
  std::vector<std::size_t> map(c.signals());
  for (std::size_t i = 0; i < c.inputs; ++i) map[i] = i;
  auto pad = [&](std::size_t sig, std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      r.gates.push_back({Op::Id, {sig, 0}});
      sig = r.inputs + r.gates.size() - 1;
    }
    return sig;
  };
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const CGate& gt = c.gates[g];
    const std::size_t ds = d[c.inputs + g];
    CGate ng{gt.op, {0, 0}};
    for (std::size_t p = 0; p < fanin(gt.op); ++p) ng.in[p] = pad(map[gt.in[p]], d[gt.in[p]] + 1, ds);
    r.gates.push_back(ng);
    map[c.inputs + g] = r.inputs + r.gates.size() - 1;
  }
  const std::size_t top = depth(c);
  for (std::size_t o : c.outputs) r.outputs.push_back(pad(map[o], d[o], top));
  return r;
}

Circuit random_closed_circuit(std::size_t inputs, std::size_t depth_, std::uint64_t seed) {
  if (inputs < 1 || inputs > 4) throw Error(ErrorKind::InvalidInput, "random circuits take 1 to 4 inputs");
  if (depth_ < 1) throw Error(ErrorKind::InvalidInput, "random circuits need depth at least 1");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Circuit c;
    c.inputs = inputs;
    std::vector<std::size_t> prev(inputs);
    for (std::size_t i = 0; i < inputs; ++i) prev[i] = i;
    bool ok = true;
    for (std::size_t layer = 1; layer <= depth_ && ok; ++layer) {
      const std::size_t w = layer == depth_ ? inputs : pick(1, 4);
      std::vector<Op> ops(w);
      std::size_t ports = 0;
      for (auto& op : ops) {
        op = static_cast<Op>(pick(0, 3));
        ports += fanin(op);
      }
      if (ports < prev.size() || ports > 2 * prev.size()) {
        ok = false;
        break;
      }
      // Every previous signal once, then extra uses for some of them.
      std::vector<std::size_t> uses = prev;
      std::vector<std::size_t> extra = prev;
      std::shuffle(extra.begin(), extra.end(), rng);
      for (std::size_t k = 0; uses.size() < ports; ++k) uses.push_back(extra[k]);
      std::shuffle(uses.begin(), uses.end(), rng);
      std::vector<std::size_t> next;
      std::size_t u = 0;
      for (Op op : ops) {
        CGate g{op, {uses[u], fanin(op) == 2 ? uses[u + 1] : 0}};
        u += fanin(op);
        c.gates.push_back(g);
        next.push_back(c.inputs + c.gates.size() - 1);
      }
      prev = std::move(next);
    }
    if (!ok) continue;
    c.outputs = prev;
    return c;
  }
  throw Error(ErrorKind::Construction, "could not draw a random closed circuit");
}

Network circuit_network(const Circuit& c) {
  c.validate();
  if (c.outputs.size() != c.inputs)
    throw Error(ErrorKind::InvalidInput, "a closed circuit needs as many outputs as inputs");
  const std::size_t n = c.inputs;
  std::vector<Rule> rules(n);
  for (auto& r : rules) {
    for (std::size_t i = 0; i < n; ++i) r.deps.push_back(i);
    r.table.resize(std::size_t{1} << n);
  }
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
    std::vector<State> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (idx >> i) & 1;
    auto out = eval(c, bits);
    for (std::size_t j = 0; j < n; ++j) rules[j].table[idx] = out[j];
  }
  return Network(2, std::move(rules));
}

std::size_t encoding_bits(std::size_t q) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < q) ++k;
  return std::max<std::size_t>(k, 1);
}

std::vector<State> encode_configuration(const Configuration& x, std::size_t q) {
  const std::size_t k = encoding_bits(q);
  std::vector<State> bits;
  for (State s : x)
    for (std::size_t b = 0; b < k; ++b) bits.push_back((s >> b) & 1);
  return bits;
}

Circuit circuit_encode(const Network& net) {
  const std::size_t q = net.alphabet(), n = net.size(), k = encoding_bits(q);
  Circuit c;
  c.inputs = n * k;
  std::map<std::size_t, std::size_t> negated;
  auto add = [&](Op op, std::size_t a, std::size_t b) {
    c.gates.push_back({op, {a, b}});
    return c.inputs + c.gates.size() - 1;
  };
  auto literal = [&](std::size_t bit, bool positive) {
    if (positive) return bit;
    auto it = negated.find(bit);
    if (it != negated.end()) return it->second;
    return negated[bit] = add(Op::Not, bit, 0);
  };
  auto constant = [&](bool one) {
    if (c.inputs == 0) throw Error(ErrorKind::InvalidInput, "cannot encode a constant without inputs");
    return add(one ? Op::Or : Op::And, 0, literal(0, false));
  };
  for (std::size_t v = 0; v < n; ++v) {
    const Rule& r = net.rule(v);
    const std::size_t m = r.deps.size();
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<std::size_t> terms;
      for (std::size_t idx = 0; idx < r.table.size(); ++idx) {
        if (!((r.table[idx] >> b) & 1)) continue;
        std::vector<std::size_t> lits;
        std::size_t rem = idx;
        for (std::size_t i = 0; i < m; ++i) {
          const State digit = static_cast<State>(rem % q);
          rem /= q;
          for (std::size_t bb = 0; bb < k; ++bb) lits.push_back(literal(r.deps[i] * k + bb, (digit >> bb) & 1));
        }
        if (lits.empty()) {
          terms.push_back(constant(true));
          continue;
        }
        std::size_t t = lits[0];
        for (std::size_t i = 1; i < lits.size(); ++i) t = add(Op::And, t, lits[i]);
        terms.push_back(t);
      }
      std::size_t outsig;
      if (terms.empty()) {
        outsig = constant(false);
      } else {
        outsig = terms[0];
        for (std::size_t i = 1; i < terms.size(); ++i) outsig = add(Op::Or, outsig, terms[i]);
      }
      c.outputs.push_back(outsig);
    }
  }
  return c;
}

GateCompilation double_rail(const Circuit& c) {
  c.validate();
  const std::size_t n = c.inputs;
  if (c.outputs.size() != n)
    throw Error(ErrorKind::InvalidInput, "double rail needs a closed circuit (outputs wired back to inputs)");
  if (n == 0) return {GNetBuilder(2).build(), BlockEmbedding{1, 2, 2, 0, {}, {}}};
  if (!is_synchronous(c)) throw Error(ErrorKind::InvalidInput, "double rail needs a synchronous circuit");
  const std::size_t d = depth(c);
  if (d == 0) throw Error(ErrorKind::InvalidInput, "double rail needs circuit depth at least 1");
  const auto fo = fanouts(c);
  for (std::size_t s = 0; s < c.signals(); ++s)
    if (fo[s] < 1 || fo[s] > 2)
      throw Error(ErrorKind::InvalidInput, "signal " + std::to_string(s) + " has fanout " + std::to_string(fo[s]) +
                                               "; monotone gates offer fanout 1 or 2");

  GNetBuilder b(2);
  // Wire pair (+, -) per consumer of each signal, in consumer order.
  std::vector<std::vector<std::array<std::size_t, 2>>> wires(c.signals());
  std::map<std::pair<std::size_t, std::size_t>, std::array<std::size_t, 2>> port_wire;  // (gate, port)
  std::vector<std::array<std::size_t, 2>> block(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto w = b.new_nodes(2);
    block[j] = {w[0], w[1]};
  }
  for (std::size_t g = 0; g < c.gates.size(); ++g)
    for (std::size_t p = 0; p < fanin(c.gates[g].op); ++p) {
      auto w = b.new_nodes(2);
      port_wire[{g, p}] = {w[0], w[1]};
      wires[c.gates[g].in[p]].push_back({w[0], w[1]});
    }
  for (std::size_t j = 0; j < n; ++j) wires[c.outputs[j]].push_back(block[j]);

  auto gate = [&](bool is_and, std::size_t in, std::size_t out) -> const Gate& {
    std::string name = std::string(is_and ? "AND" : "OR") + std::to_string(in) + std::to_string(out);
    return catalog_gate("Gmon", name);
  };
  auto rail_outputs = [&](std::size_t s, int rail) {
    std::vector<std::size_t> o;
    for (const auto& w : wires[s]) o.push_back(w[rail]);
    return o;
  };
  for (std::size_t j = 0; j < n; ++j)
    for (int rail = 0; rail < 2; ++rail) b.add(gate(true, 1, fo[j]), {block[j][rail]}, rail_outputs(j, rail));
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const CGate& gt = c.gates[g];
    const std::size_t s = n + g;
    switch (gt.op) {
      case Op::And:
      case Op::Or: {
        const bool is_and = gt.op == Op::And;
        auto a = port_wire[{g, 0}], bb = port_wire[{g, 1}];
        b.add(gate(is_and, 2, fo[s]), {a[0], bb[0]}, rail_outputs(s, 0));
        b.add(gate(!is_and, 2, fo[s]), {a[1], bb[1]}, rail_outputs(s, 1));
        break;
      }
      case Op::Not: {
        auto a = port_wire[{g, 0}];
        b.add(gate(true, 1, fo[s]), {a[1]}, rail_outputs(s, 0));
        b.add(gate(true, 1, fo[s]), {a[0]}, rail_outputs(s, 1));
        break;
      }
      case Op::Id: {
        auto a = port_wire[{g, 0}];
        b.add(gate(true, 1, fo[s]), {a[0]}, rail_outputs(s, 0));
        b.add(gate(true, 1, fo[s]), {a[1]}, rail_outputs(s, 1));
        break;
      }
    }
  }
  GateCompilation res;
  res.gn = b.build();
  BlockEmbedding& phi = res.embedding;
  phi.time = d + 1;
  phi.g_size = res.gn.size();
  std::vector<char> in_block(phi.g_size, 0);
  for (const auto& bl : block) in_block[bl[0]] = in_block[bl[1]] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> nodes{block[j][0], block[j][1]};
    std::vector<Configuration> pats{{0, 1}, {1, 0}};
    if (j == 0)
      for (std::size_t u = 0; u < phi.g_size; ++u)
        if (!in_block[u]) {
          nodes.push_back(u);
          pats[0].push_back(0);
          pats[1].push_back(0);
        }
    phi.blocks.push_back(std::move(nodes));
    phi.patterns.push_back(std::move(pats));
  }
  return res;
}

GateCompilation gmon_to_gmon2(const GNetwork& gn) {
  gn.validate();
  if (gn.q != 2) throw Error(ErrorKind::InvalidInput, "Gmon networks are binary");
  const std::size_t n = gn.size();
  const Gate& AND = catalog_gate("Gmon2", "AND22");
  const Gate& OR = catalog_gate("Gmon2", "OR22");
  GNetBuilder b(2);
  std::vector<std::array<std::size_t, 3>> blk(n);
  for (auto& bl : blk) {
    auto w = b.new_nodes(3);
    bl = {w[0], w[1], w[2]};
  }
  std::vector<std::size_t> writer_node(n);
  for (std::size_t v = 0; v < n; ++v) writer_node[gn.beta[v]] = v;

  const std::size_t k = gn.gates.size();
  std::vector<bool> is_and(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Gate& g = gn.gates[j];
    const bool ok_name = g.name.rfind("AND", 0) == 0 || g.name.rfind("OR", 0) == 0;
    if (!ok_name || g.in < 1 || g.in > 2 || g.out < 1 || g.out > 2)
      throw Error(ErrorKind::InvalidInput, "gate " + g.name + " is not a Gmon gate");
    const Gate& ref = catalog_gate("Gmon", g.name);
    if (ref.table != g.table) throw Error(ErrorKind::InvalidInput, "gate " + g.name + " has a foreign table");
    is_and[j] = g.name.rfind("AND", 0) == 0;
  }
  // Extra zero lanes: fanout-1 gadgets emit three, fanin-1 gadgets absorb three.
  std::vector<std::array<std::size_t, 3>> extra_out(k);
  std::vector<std::size_t> producers, consumers;
  for (std::size_t j = 0; j < k; ++j) {
    if (gn.gates[j].out == 1) {
      auto w = b.new_nodes(3);
      extra_out[j] = {w[0], w[1], w[2]};
    }
  }
  std::vector<long> feeds(k, -1);  // fanin-1 gadget j reads the extras of gadget feeds[j]
  for (std::size_t j = 0; j < k; ++j)
    if (gn.gates[j].in == 1 && gn.gates[j].out == 1) feeds[j] = static_cast<long>(j);
  for (std::size_t j = 0; j < k; ++j) {
    if (gn.gates[j].out == 1 && gn.gates[j].in == 2) producers.push_back(j);
    if (gn.gates[j].in == 1 && gn.gates[j].out == 2) consumers.push_back(j);
  }
  if (producers.size() != consumers.size())
    throw Error(ErrorKind::Construction, "zero lanes do not balance (" + std::to_string(producers.size()) +
                                             " producers, " + std::to_string(consumers.size()) + " consumers)");
  for (std::size_t i = 0; i < consumers.size(); ++i) feeds[consumers[i]] = static_cast<long>(producers[i]);

  for (std::size_t j = 0; j < k; ++j) {
    const Gate& g = gn.gates[j];
    const std::size_t off_in = gn.input_offset(j), off_out = gn.output_offset(j);
    std::array<std::size_t, 6> lane{};
    const auto& x = blk[gn.alpha[off_in]];
    lane[0] = x[0];
    lane[1] = x[1];
    lane[2] = x[2];
    if (g.in == 2) {
      const auto& y = blk[gn.alpha[off_in + 1]];
      lane[3] = y[0];
      lane[4] = y[1];
      lane[5] = y[2];
    } else {
      const auto& e = extra_out[static_cast<std::size_t>(feeds[j])];
      lane[3] = e[0];
      lane[4] = e[1];
      lane[5] = e[2];
    }
    // Final-layer outputs of the three gates.
    std::array<std::array<std::size_t, 2>, 3> final_out{};
    if (g.out == 2) {
      const auto& o1 = blk[writer_node[off_out]];
      const auto& o2 = blk[writer_node[off_out + 1]];
      final_out = {{{o1[0], o1[1]}, {o2[0], o2[1]}, {o1[2], o2[2]}}};
    } else {
      const auto& o = blk[writer_node[off_out]];
      const auto& e = extra_out[j];
      final_out = {{{o[0], o[1]}, {o[2], e[0]}, {e[1], e[2]}}};
    }
    std::array<std::array<std::size_t, 2>, 3> cur{};
    for (std::size_t layer = 1; layer <= 6; ++layer) {
      std::array<std::array<std::size_t, 2>, 3> out{};
      for (auto& o : out) {
        if (layer == 6) break;
        auto w = b.new_nodes(2);
        o = {w[0], w[1]};
      }
      if (layer == 6) out = final_out;
      const Gate& op = is_and[j] ? AND : OR;
      if (layer == 1) {
        if (g.in == 2) {
          b.add(op, {lane[0], lane[3]}, {out[0][0], out[0][1]});
          b.add(op, {lane[1], lane[4]}, {out[1][0], out[1][1]});
          b.add(OR, {lane[2], lane[5]}, {out[2][0], out[2][1]});
        } else if (g.out == 2) {
          b.add(OR, {lane[0], lane[2]}, {out[0][0], out[0][1]});
          b.add(OR, {lane[1], lane[3]}, {out[1][0], out[1][1]});
          b.add(OR, {lane[4], lane[5]}, {out[2][0], out[2][1]});
        } else {
          b.add(OR, {lane[0], lane[1]}, {out[0][0], out[0][1]});
          b.add(OR, {lane[2], lane[3]}, {out[1][0], out[1][1]});
          b.add(OR, {lane[4], lane[5]}, {out[2][0], out[2][1]});
        }
      } else if (layer == 2 && g.in == 2 && g.out == 1) {
        b.add(OR, {cur[0][0], cur[1][0]}, {out[0][0], out[0][1]});
        b.add(AND, {cur[0][1], cur[2][0]}, {out[1][0], out[1][1]});
        b.add(AND, {cur[1][1], cur[2][1]}, {out[2][0], out[2][1]});
      } else {
        for (std::size_t i = 0; i < 3; ++i) b.add(OR, {cur[i][0], cur[i][1]}, {out[i][0], out[i][1]});
      }
      cur = out;
    }
  }
  GateCompilation res;
  res.gn = b.build();
  BlockEmbedding& phi = res.embedding;
  phi.time = 6;
  phi.g_size = res.gn.size();
  std::vector<char> in_block(phi.g_size, 0);
  for (const auto& bl : blk)
    for (std::size_t u : bl) in_block[u] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nodes(blk[v].begin(), blk[v].end());
    std::vector<Configuration> pats{{0, 0, 0}, {1, 1, 0}};
    if (v == 0)
      for (std::size_t u = 0; u < phi.g_size; ++u)
        if (!in_block[u]) {
          nodes.push_back(u);
          pats[0].push_back(0);
          pats[1].push_back(0);
        }
    phi.blocks.push_back(std::move(nodes));
    phi.patterns.push_back(std::move(pats));
  }
  return res;
}

std::vector<State> GateCircuit::eval(const std::vector<State>& bits) const {
  if (bits.size() != inputs) throw Error(ErrorKind::InvalidInput, "gate circuit input width mismatch");
  std::vector<State> sig = bits;
  for (const auto& u : gates) {
    std::vector<State> in;
    for (std::size_t s : u.in) in.push_back(sig.at(s));
    auto o = u.gate.apply(in);
    sig.insert(sig.end(), o.begin(), o.end());
  }
  std::vector<State> out;
  for (std::size_t s : outputs) out.push_back(sig.at(s));
  return out;
}

NorRealizers nor_realizers() {
  const Gate& nor = catalog_gate("Gnor", "NOR");
  NorRealizers r;
  r.alpha.inputs = 4;
  r.alpha.gates = {{nor, {0, 1}}, {nor, {2, 3}}, {nor, {4, 6}}, {nor, {5, 7}}};
  r.alpha.outputs = {8, 9, 10, 11};
  r.omega.inputs = 4;
  r.omega.gates = {{nor, {0, 2}}, {nor, {1, 3}}, {nor, {4, 6}}, {nor, {5, 7}}};
  r.omega.outputs = {8, 9, 10, 11};
  return r;
}

GateCompilation gmon2_to_gnor(const GNetwork& gn) {
  gn.validate();
  const std::size_t n = gn.size();
  const Gate& nor = catalog_gate("Gnor", "NOR");
  GNetBuilder b(2);
  std::vector<std::array<std::size_t, 2>> dbl(n);
  for (auto& d : dbl) {
    auto w = b.new_nodes(2);
    d = {w[0], w[1]};
  }
  std::vector<std::size_t> writer_node(n);
  for (std::size_t v = 0; v < n; ++v) writer_node[gn.beta[v]] = v;
  std::vector<std::size_t> inner;
  for (std::size_t j = 0; j < gn.gates.size(); ++j) {
    const Gate& g = gn.gates[j];
    if (g.in != 2 || g.out != 2 || (g.name != "AND22" && g.name != "OR22") ||
        g.table != catalog_gate("Gmon2", g.name).table)
      throw Error(ErrorKind::InvalidInput, "gate " + g.name + " is not a Gmon2 gate");
    const auto& x = dbl[gn.alpha[gn.input_offset(j)]];
    const auto& y = dbl[gn.alpha[gn.input_offset(j) + 1]];
    const auto& o1 = dbl[writer_node[gn.output_offset(j)]];
    const auto& o2 = dbl[writer_node[gn.output_offset(j) + 1]];
    auto w = b.new_nodes(4);  // p1, p2, r1, r2
    inner.insert(inner.end(), w.begin(), w.end());
    if (g.name == "AND22") {
      b.add(nor, {x[0], x[1]}, {w[0], w[1]});
      b.add(nor, {y[0], y[1]}, {w[2], w[3]});
    } else {
      b.add(nor, {x[0], y[0]}, {w[0], w[1]});
      b.add(nor, {x[1], y[1]}, {w[2], w[3]});
    }
    b.add(nor, {w[0], w[2]}, {o1[0], o1[1]});
    b.add(nor, {w[1], w[3]}, {o2[0], o2[1]});
  }
  GateCompilation res;
  res.gn = b.build();
  BlockEmbedding& phi = res.embedding;
  phi.time = 2;
  phi.g_size = res.gn.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nodes{dbl[v][0], dbl[v][1]};
    std::vector<Configuration> pats{{0, 0}, {1, 1}};
    if (v == 0)
      for (std::size_t u : inner) {
        nodes.push_back(u);
        pats[0].push_back(1);
        pats[1].push_back(1);
      }
    phi.blocks.push_back(std::move(nodes));
    phi.patterns.push_back(std::move(pats));
  }
  return res;
}

}  // namespace annet
