#!/usr/bin/env python3
"""Writes the 20-formula DIMACS corpus used by the SAT checks (seeded, at most 10 variables)."""

import argparse
import itertools
import pathlib
import random


def write(path, nvars, clauses, comment):
    lines = [f"c {comment}", f"p cnf {nvars} {len(clauses)}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in clauses]
    path.write_text("\n".join(lines) + "\n")


def pigeonhole(holes):
    pigeons = holes + 1
    var = lambda p, h: p * holes + h + 1
    clauses = [[var(p, h) for h in range(holes)] for p in range(pigeons)]
    for h in range(holes):
        for a, b in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(a, h), -var(b, h)])
    return pigeons * holes, clauses


def random_ksat(rng, nvars, nclauses, k):
    clauses = []
    for _ in range(nclauses):
        vs = rng.sample(range(1, nvars + 1), k)
        clauses.append([v if rng.random() < 0.5 else -v for v in vs])
    return clauses


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "cnf"))
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    write(out / "01_contradiction.cnf", 1, [[1], [-1]], "x and not x")
    write(out / "02_tautology.cnf", 2, [[1, -1], [2, -2, 1]], "every clause is a tautology")
    write(out / "03_empty.cnf", 3, [], "no clauses")
    write(out / "04_unit_chain.cnf", 5, [[1], [-1, 2], [-2, 3], [-3, 4], [-4, 5]], "forced chain")
    write(out / "05_unit_chain_unsat.cnf", 5, [[1], [-1, 2], [-2, 3], [-3, 4], [-4, 5], [-5]], "forced chain, refuted")
    n, c = pigeonhole(2)
    write(out / "06_pigeonhole_3_2.cnf", n, c, "3 pigeons, 2 holes")
    odd_cycle = [[i + 1, (i + 1) % 5 + 1] for i in range(5)] + [[-(i + 1), -((i + 1) % 5 + 1)] for i in range(5)]
    write(out / "07_two_colour_c5.cnf", 5, odd_cycle, "2-colouring of a 5-cycle")
    xor3 = [[1, 2, 3], [1, -2, -3], [-1, 2, -3], [-1, -2, 3]]
    write(out / "08_parity3.cnf", 3, xor3, "x1 xor x2 xor x3")
    write(out / "09_parity3_unsat.cnf", 3, xor3 + [[-1, -2, -3], [-1, 2, 3], [1, -2, 3], [1, 2, -3]], "odd and even parity")
    write(out / "10_last_valuation.cnf", 4, [[1], [2], [3], [4]], "only the all-true valuation")
    index = 11
    for nvars, ratio in [(6, 3.0), (6, 6.0), (8, 3.5), (8, 5.5), (9, 4.26), (10, 3.0), (10, 4.26), (10, 6.0), (7, 8.0), (10, 5.0)]:
        clauses = random_ksat(rng, nvars, round(nvars * ratio), 3)
        write(out / f"{index:02d}_random3sat_{nvars}v.cnf", nvars, clauses, f"random 3-SAT, seed {args.seed}")
        index += 1


if __name__ == "__main__":
    main()
