"""Independent reference implementations used only by the tests."""
from __future__ import annotations

import itertools
from collections import defaultdict

import sympy as sp

from twotl.polyarith import BiPoly

XS, XT, Z, Y = sp.symbols("x_s x_t z y")


def to_sympy(p: BiPoly):
    return sum((c * XS**i * XT**j for (i, j), c in p.terms.items()), sp.Integer(0))


def from_sympy(expr) -> BiPoly:
    poly = sp.Poly(sp.expand(expr), XS, XT)
    return BiPoly({m: int(c) for m, c in zip(poly.monoms(), poly.coeffs())})


def frac_to_sympy(f):
    return to_sympy(f.num) / to_sympy(f.den)


def one_color_qnum(n: int):
    """[n](x) = U_{n-1}(x/2), with [0] = 0 and [-n] = -[n]."""
    x = sp.Symbol("x")
    if n == 0:
        return sp.Integer(0), x
    if n < 0:
        v, _ = one_color_qnum(-n)
        return -v, x
    return sp.expand(sp.chebyshevu(n - 1, x / 2)), x


def two_color_qnum(n: int, color: str = "s"):
    """Two-colored quantum number rebuilt from the one-colored Chebyshev form."""
    base, x = one_color_qnum(n)
    if n % 2:
        half = sp.expand(base)
    else:
        half = sp.cancel(base / x)  # [n]/[2] is even in x
    half_z = sp.expand(half.subs(x, Z))
    poly_z = sp.Poly(half_z, Z)
    out = sp.Integer(0)
    for (e,), c in zip(poly_z.monoms(), poly_z.coeffs()):
        assert e % 2 == 0
        out += c * (XS * XT) ** (e // 2)
    if n % 2 == 0:
        out *= XS if color == "s" else XT
    return sp.expand(out)


def psi_oracle(n: int):
    return sp.Poly(sp.minimal_polynomial(4 * sp.cos(sp.pi / n) ** 2, Y), Y)


def all_matchings(labels):
    labels = list(labels)
    if not labels:
        yield ()
        return
    a = labels[0]
    for k in range(1, len(labels)):
        rest = labels[1:k] + labels[k + 1:]
        for m in all_matchings(rest):
            yield ((a, labels[k]),) + m


def noncrossing(m) -> bool:
    return not any(a < c < b < d for (a, b), (c, d) in itertools.permutations(m, 2))


def compose_graph(top, bottom):
    """Stacking by explicit graph components; returns (matching, loop_positions).

    Nodes: ('b', label) for the lower diagram, ('t', label) for the upper one.
    """
    n = top.n
    adj = defaultdict(list)

    def edge(u, v):
        adj[u].append(v)
        adj[v].append(u)

    for a, b in bottom.matching:
        edge(("b", a), ("b", b))
    for a, b in top.matching:
        edge(("t", a), ("t", b))
    for j in range(1, n + 1):
        edge(("b", 2 * n + 1 - j), ("t", j))

    def outer(node):
        side, lbl = node
        return (side == "b" and lbl <= n) or (side == "t" and lbl > n)

    seen = set()
    pairs, loops = [], []
    for start in sorted(adj):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        ends = sorted(lbl for side, lbl in comp if outer((side, lbl)))
        if ends:
            assert len(ends) == 2
            pairs.append(tuple(ends))
        else:
            loops.append(min(lbl for side, lbl in comp if side == "t"))
    return tuple(sorted(pairs)), sorted(loops)
