#!/usr/bin/env python3
"""Generate the Game of Life gadget fixtures in data/gol/.

The wire, clock and NOR gadget graphs are built from alternating layers of 3
and 9 nodes.  A 3-layer is joined completely to the following 9-layer; node j
of a 9-layer is joined to node j // 3 of the following 3-layer.  A signal is
two consecutive live layers and advances one layer per step.

The certificate pseudo-orbits are produced by replaying Game of Life on every
non-exempt node and writing the standard trace on the exempt ones; the library
re-checks all of it when it loads the fixture.

Usage: gen_gol_fixtures.py [output-dir]
"""

import itertools
import json
import pathlib
import sys

T = 6
BIRTH, SURVIVE = {3}, {2, 3}
LIFELIKE = {"family": "lifelike", "params": [3, -1, 2, 3]}


class Graph:
    def __init__(self):
        self.names = []
        self.edges = set()

    def layer(self, prefix, size):
        start = len(self.names)
        self.names.extend(f"{prefix}{i}" for i in range(size))
        return list(range(start, start + size))

    def node(self, name):
        self.names.append(name)
        return len(self.names) - 1

    def join(self, u, v):
        assert u != v
        self.edges.add((min(u, v), max(u, v)))

    def chain(self, a, b):
        """Join consecutive layers a -> b following the 3/9 convention."""
        if len(a) == 3 and len(b) == 9:
            for u in a:
                for v in b:
                    self.join(u, v)
        elif len(a) == 9 and len(b) == 3:
            for j, u in enumerate(a):
                self.join(u, b[j // 3])
        else:
            raise ValueError("layers must alternate 3 and 9 nodes")

    def adjacency(self):
        adj = [[] for _ in self.names]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def csan(self):
        return {
            "alphabet": 2,
            "nodes": len(self.names),
            "edges": [[u, v, "id"] for u, v in sorted(self.edges)],
            "lambda": LIFELIKE,
        }


def gol_step(adj, x):
    out = []
    for v, nbrs in enumerate(adj):
        alive = sum(x[u] for u in nbrs)
        out.append(1 if alive in (SURVIVE if x[v] else BIRTH) else 0)
    return out


# Interface: P0..P8 form C_o, Q0..Q2 form C_i.
IFACE_NAMES = [f"P{i}" for i in range(9)] + [f"Q{i}" for i in range(3)]
IFACE_INPUTS = list(range(9, 12))


def state_config(q):
    return [q] * 12


def standard_trace(q, q2):
    pq = [(q, q), (0, q), (0, 0), (0, 0), (0, 0), (q2, 0), (q2, q2)]
    return [[p] * 9 + [r] * 3 for p, r in pq]


def build_clock(g, prefix):
    layers = [g.layer(f"{prefix}L{k}_", 3 if k % 2 == 0 else 9) for k in range(6)]
    for k in range(6):
        g.chain(layers[k], layers[(k + 1) % 6])
    return layers


def build_wire_gadget():
    g = Graph()
    p, q = g.layer("in.P", 9), g.layer("in.Q", 3)
    inner = [g.layer(f"w{k}_", 9 if k % 2 == 1 else 3) for k in range(1, 5)]
    p2, q2 = g.layer("out.P", 9), g.layer("out.Q", 3)
    seq = [p, q] + inner + [p2, q2]
    for a, b in zip(seq, seq[1:]):
        g.chain(a, b)
    return g, [p + q], [p2 + q2]


def build_nor_gadget():
    g = Graph()
    ins, ls = [], []
    for k, tag in enumerate(["x", "y"]):
        p, q = g.layer(f"{tag}.P", 9), g.layer(f"{tag}.Q", 3)
        w = g.layer(f"{tag}.W", 9)
        l = g.layer(f"{tag}.l", 3)
        for a, b in zip([p, q, w], [q, w, l]):
            g.chain(a, b)
        ins.append(p + q)
        ls.append(l)
    outs, rs = [], []
    for k in range(2):
        r = g.layer(f"o{k}.r", 3)
        p, q = g.layer(f"o{k}.P", 9), g.layer(f"o{k}.Q", 3)
        g.chain(r, p)
        g.chain(p, q)
        outs.append(p + q)
        rs.append(r)
    ck1 = build_clock(g, "ck1.")
    ck2 = build_clock(g, "ck2.")
    v = g.node("v")
    a = g.node("a")
    c, kk = ck1[0], ck2[0]
    for u in ls[0] + ls[1] + c + rs[0] + rs[1] + [a]:
        g.join(u, v)
    g.join(a, kk[0])
    g.join(a, kk[1])
    for r in rs:
        for j, u in enumerate(r):
            g.join(u, kk[j])
            g.join(u, kk[(j + 1) % 3])
    context_alive = set(ck1[3] + ck1[4] + ck2[2] + ck2[3])
    table_cols = ls[0] + ls[1] + c + [a, v] + rs[0] + rs[1]
    return g, ins, outs, context_alive, table_cols


def interior(g, ins, outs):
    used = {u for cp in ins + outs for u in cp}
    return [u for u in range(len(g.names)) if u not in used]


def exempt(ins, outs):
    ex = [cp[c] for cp in ins for c in range(12) if c not in IFACE_INPUTS]
    ex += [cp[c] for cp in outs for c in IFACE_INPUTS]
    return sorted(ex)


def pseudo_orbits(g, ins, outs, context, gate):
    adj = g.adjacency()
    inner = interior(g, ins, outs)
    ex = exempt(ins, outs)
    cells = []
    n_in, n_out = len(ins), len(outs)
    for key in itertools.product([0, 1], repeat=2 * n_in + n_out):
        # Keys enumerate with the first entry varying fastest.
        key = list(reversed(key))
        qi, qi2, qo = key[:n_in], key[n_in:2 * n_in], key[2 * n_in:]
        qo2 = gate(qi)
        x = [0] * len(g.names)
        for u, s in zip(inner, context):
            x[u] = s
        for cp, s in zip(ins, qi):
            for c, u in enumerate(cp):
                x[u] = state_config(s)[c]
        for cp, s in zip(outs, qo):
            for c, u in enumerate(cp):
                x[u] = state_config(s)[c]
        configs = [x]
        for t in range(T):
            y = gol_step(adj, configs[-1])
            for cp, a, b in zip(ins, qi, qi2):
                for c in range(12):
                    if c not in IFACE_INPUTS:
                        y[cp[c]] = standard_trace(a, b)[t + 1][c]
            for cp, a, b in zip(outs, qo, qo2):
                for c in IFACE_INPUTS:
                    y[cp[c]] = standard_trace(a, b)[t + 1][c]
            configs.append(y)
        # Self-check of the coherence clauses before writing anything.
        for t in range(T + 1):
            for cp, a, b in list(zip(ins, qi, qi2)) + list(zip(outs, qo, qo2)):
                assert [configs[t][u] for u in cp] == standard_trace(a, b)[t], (gate, key, t)
        for i, u in enumerate(inner):
            assert configs[0][u] == context[i] and configs[T][u] == context[i], (gate, key, g.names[u])
        cells.append({"key": "".join(map(str, key)), "exempt": ex,
                      "configs": ["".join(map(str, c)) for c in configs]})
    return cells


def gadget_doc(g, ins, outs):
    return {"csan": g.csan(), "in_copies": ins, "out_copies": outs, "names": g.names}


def interface_doc():
    return {"size": 12, "inputs": IFACE_INPUTS, "names": IFACE_NAMES}


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/gol")
    out_dir.mkdir(parents=True, exist_ok=True)

    wire, w_in, w_out = build_wire_gadget()
    clock = Graph()
    layers = build_clock(clock, "")
    clock_init = [1 if u in layers[0] + layers[1] else 0 for u in range(len(clock.names))]
    adj = clock.adjacency()
    x = clock_init
    for t in range(T):
        x = gol_step(adj, x)
        assert (x == clock_init) == (t == T - 1)

    nor, n_in, n_out, alive, cols = build_nor_gadget()
    assert len(nor.names) == 152
    nor_context = [1 if u in alive else 0 for u in interior(nor, n_in, n_out)]
    wire_context = [0] * len(interior(wire, w_in, w_out))

    def nor_gate(q):
        return [1 - (q[0] | q[1])] * 2

    def wire_gate(q):
        return [q[0]]

    cert = {
        "alphabet": 2,
        "time": T,
        "interface": interface_doc(),
        "state_configs": ["".join(map(str, state_config(q))) for q in (0, 1)],
        "traces": [[["".join(map(str, c)) for c in standard_trace(a, b)] for b in (0, 1)] for a in (0, 1)],
        "gates": [
            {
                "gate": {"name": "NOR", "q": 2, "i": 2, "o": 2,
                         "table": [s for a in range(4) for s in nor_gate([a & 1, a >> 1])]},
                "gadget": gadget_doc(nor, n_in, n_out),
                "context": "".join(map(str, nor_context)),
                "pseudo_orbits": pseudo_orbits(nor, n_in, n_out, nor_context, nor_gate),
            },
            {
                "gate": {"name": "WIRE", "q": 2, "i": 1, "o": 1, "table": [0, 1]},
                "gadget": gadget_doc(wire, w_in, w_out),
                "context": "".join(map(str, wire_context)),
                "pseudo_orbits": pseudo_orbits(wire, w_in, w_out, wire_context, wire_gate),
            },
        ],
    }

    def write(name, doc):
        (out_dir / name).write_text(json.dumps(doc, separators=(",", ":")) + "\n")

    write("wire.json", {"interface": interface_doc(), **gadget_doc(wire, w_in, w_out)})
    write("clock.json", {"csan": clock.csan(), "names": clock.names, "initial": clock_init})
    nor_doc = {"interface": interface_doc(), **gadget_doc(nor, n_in, n_out)}
    nor_doc["table_columns"] = cols
    nor_doc["context"] = cert["gates"][0]["context"]
    write("nor_gadget.json", nor_doc)
    write("certificate.json", cert)


if __name__ == "__main__":
    main()
