#!/usr/bin/env python3
"""Derive the inverse of a birational plane map by exact linear elimination.

Reads a map document (cremona.map/1 JSON), sets up the linear system that a
degree-d inverse (g1, g2, g3) must satisfy,

    g1(f1,f2,f3) * y - g2(f1,f2,f3) * x = 0
    g2(f1,f2,f3) * z - g3(f1,f2,f3) * y = 0

solves it exactly over the integers (fraction-free Gaussian elimination), and
fully verifies the result by composing in both directions.  The solution space
is one-dimensional exactly when the input is birational with a degree-d
inverse, so this doubles as a birationality check.

This is a maintenance tool: it is how the committed *_inv fixtures were
produced.  It deliberately shares no code with the C++ library it feeds.

Usage: derive_inverse.py input.json [--emit-expr] [-o output.json]
"""

import argparse
import json
import sys
from fractions import Fraction
from math import gcd


def monomials(d):
    """Exponent triples of total degree d, largest first in graded lex x>y>z."""
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


def poly_mul(p, q):
    out = {}
    for (a1, b1, c1), u in p.items():
        for (a2, b2, c2), v in q.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            w = out.get(key, 0) + u * v
            if w:
                out[key] = w
            elif key in out:
                del out[key]
    return out


def poly_scale_shift(p, s, shift):
    (da, db, dc) = shift
    return {(a + da, b + db, c + dc): s * v for (a, b, c), v in p.items()}


def parse_doc(path):
    with open(path) as fh:
        doc = json.load(fh)
    assert doc["schema"] == "cremona.map/1", "not a map document"
    d = doc["degree"]
    comps = []
    for arr in doc["f"]:
        p = {}
        for term in arr:
            a, b, c = term["exp"]
            p[(a, b, c)] = Fraction(term["coef"])
        comps.append(p)
    return d, comps


def clear_denominators(comps):
    """Scale all three components by one rational to get integer entries."""
    denlcm = 1
    for p in comps:
        for v in p.values():
            denlcm = denlcm * v.denominator // gcd(denlcm, v.denominator)
    out = []
    for p in comps:
        out.append({k: int(v * denlcm) for k, v in p.items()})
    return out


def solve_inverse(d, F):
    """Return integer components (g1,g2,g3) of the degree-d inverse of F."""
    monos = monomials(d)
    N = len(monos)

    # powers of the components
    pw = []
    for f in F:
        powers = [{(0, 0, 0): 1}]
        for _ in range(d):
            powers.append(poly_mul(powers[-1], f))
        pw.append(powers)

    # G[j] = f1^a f2^b f3^c for the j-th monomial
    G = []
    for (a, b, c) in monos:
        G.append(poly_mul(poly_mul(pw[0][a], pw[1][b]), pw[2][c]))

    # unknowns: 3N coefficients; column comp*N + j
    # rows: for each monomial of degree d^2+1, from the two identities
    rows = {}

    def add_entries(eq, comp, j, poly, shift, sign):
        for key, v in poly_scale_shift(poly, sign, shift).items():
            rows.setdefault((eq, key), {})
            col = comp * N + j
            w = rows[(eq, key)].get(col, 0) + v
            if w:
                rows[(eq, key)][col] = w
            elif col in rows[(eq, key)]:
                del rows[(eq, key)][col]

    for j in range(N):
        add_entries(0, 0, j, G[j], (0, 1, 0), 1)   # g1(F) * y
        add_entries(0, 1, j, G[j], (1, 0, 0), -1)  # - g2(F) * x
        add_entries(1, 1, j, G[j], (0, 0, 1), 1)   # g2(F) * z
        add_entries(1, 2, j, G[j], (0, 1, 0), -1)  # - g3(F) * y

    # fraction-free incremental elimination
    pivots = {}  # pivot column -> row (dict col->int)

    def reduce_row(row):
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                g = 0
                for v in row.values():
                    g = gcd(g, abs(v))
                row = {c: v // g for c, v in row.items()}
                if row[lead] < 0:
                    row = {c: -v for c, v in row.items()}
                return lead, row
            p = pivots[lead]
            a, b = p[lead], row[lead]
            new = {}
            for c in set(row) | set(p):
                v = row.get(c, 0) * a - p.get(c, 0) * b
                if v:
                    new[c] = v
            row = new
        return None, None

    for row in rows.values():
        if not row:
            continue
        lead, reduced = reduce_row(row)
        if lead is not None:
            pivots[lead] = reduced

    rank = len(pivots)
    nullity = 3 * N - rank
    if nullity != 1:
        raise SystemExit(f"solution space has dimension {nullity}; "
                         "the map is not birational with an inverse of the same degree")

    free = [c for c in range(3 * N) if c not in pivots][0]

    # back-substitute with exact rationals
    sol = {free: Fraction(1)}
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        s = Fraction(0)
        for c, v in row.items():
            if c == col:
                continue
            s += v * sol.get(c, Fraction(0))
        sol[col] = -s / row[col]

    # scale to coprime integers, leading sign positive
    denlcm = 1
    for v in sol.values():
        denlcm = denlcm * v.denominator // gcd(denlcm, v.denominator)
    ints = {c: int(v * denlcm) for c, v in sol.items() if v != 0}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    ints = {c: v // g for c, v in ints.items()}
    first = min(ints)
    if ints[first] < 0:
        ints = {c: -v for c, v in ints.items()}

    Ginv = []
    for comp in range(3):
        p = {}
        for j, m in enumerate(monos):
            v = ints.get(comp * N + j, 0)
            if v:
                p[m] = v
        Ginv.append(p)
    return Ginv


def is_identity_up_to_factor(F):
    f1, f2, f3 = F
    checks = [
        (poly_scale_shift(f1, 1, (0, 1, 0)), poly_scale_shift(f2, 1, (1, 0, 0))),
        (poly_scale_shift(f1, 1, (0, 0, 1)), poly_scale_shift(f3, 1, (1, 0, 0))),
        (poly_scale_shift(f2, 1, (0, 0, 1)), poly_scale_shift(f3, 1, (0, 1, 0))),
    ]
    return all(a == b for a, b in checks)


def compose(F, G):
    d = max(sum(k) for f in F for k in f)
    pw = []
    for g in G:
        powers = [{(0, 0, 0): 1}]
        for _ in range(d):
            powers.append(poly_mul(powers[-1], g))
        pw.append(powers)
    out = []
    for f in F:
        acc = {}
        for (a, b, c), v in f.items():
            t = poly_mul(poly_mul(pw[0][a], pw[1][b]), pw[2][c])
            for k, w in t.items():
                s = acc.get(k, 0) + v * w
                if s:
                    acc[k] = s
                elif k in acc:
                    del acc[k]
        out.append(acc)
    return out


def render_doc(d, G):
    comps = []
    for g in G:
        terms = []
        for m in monomials(d):
            if m in g:
                terms.append({"coef": str(g[m]), "exp": list(m)})
        comps.append(terms)
    return {"schema": "cremona.map/1", "degree": d, "f": comps}


def render_expr(g):
    parts = []
    for m in sorted(g, key=lambda m: (-m[0], -m[1], -m[2])):
        v = g[m]
        mono = "".join(f"{var}^{e}" if e > 1 else (var if e == 1 else "")
                       for var, e in zip("xyz", m))
        mag = abs(v)
        body = mono if mag == 1 and mono else (f"{mag}{mono}" if mono else f"{mag}")
        parts.append(("- " if v < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("input")
    ap.add_argument("-o", "--output")
    ap.add_argument("--emit-expr", action="store_true")
    args = ap.parse_args()

    d, comps = parse_doc(args.input)
    F = clear_denominators(comps)
    G = solve_inverse(d, F)

    if not is_identity_up_to_factor(compose(G, F)):
        raise SystemExit("verification failed: G(F) is not the identity up to a factor")
    if not is_identity_up_to_factor(compose(F, G)):
        raise SystemExit("verification failed: F(G) is not the identity up to a factor")
    print(f"verified: degree-{d} inverse, both compositions are the identity", file=sys.stderr)

    doc = render_doc(d, G)
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.emit_expr:
        for i, g in enumerate(G):
            print(f"# g{i + 1}", file=sys.stderr)
            print(render_expr(g), file=sys.stderr)


if __name__ == "__main__":
    main()
