"""Exact arithmetic in Z[x_s, x_t], Z[x] and Frac Z[x_s, x_t].

``BiPoly`` is a sparse map from exponent pairs ``(i, j)`` (power of x_s,
power of x_t) to nonzero Python integers.  Terms are ordered lexicographically
with x_s ranked above x_t.  ``UniPoly`` is a dense coefficient tuple and
``RatFunc`` a reduced quotient of two ``BiPoly`` values.

The gcd treats Z[x_s, x_t] as Z[x_t][x_s] and runs a primitive pseudo-remainder
sequence, with univariate gcds over Z for the contents.
"""
from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Raised by exact division when no exact quotient exists."""


class ZeroDenominator(ZeroDivisionError):
    """Raised when a fraction is built over the zero polynomial."""


# ---------------------------------------------------------------------------
# Univariate polynomials over Z (also used as coefficients in the gcd)
# ---------------------------------------------------------------------------

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _u_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _u_neg(a):
    return tuple(-v for v in a)


def _u_sub(a, b):
    return _u_add(a, _u_neg(b))


def _u_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def _u_scale(a, c):
    if c == 0:
        return ()
    return tuple(v * c for v in a)


def _u_content(a) -> int:
    return reduce(math.gcd, a, 0)


def _u_divmod_exact(a, b):
    """Quotient of a by b over Z; raises NotDivisible unless b | a exactly."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        if any(a):
            raise NotDivisible("degree too small")
        return ()
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        qc, r = divmod(c, lb)
        if r:
            raise NotDivisible("leading coefficient does not divide")
        q[k - db] = qc
        for j in range(db + 1):
            a[k - db + j] -= qc * b[j]
    if any(a):
        raise NotDivisible("nonzero remainder")
    return _trim(q)


def _u_prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        return tuple(a)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        a = [v * lb for v in a]
        if c:
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
        a.pop()
    return _trim(a)


def _u_primitive(a):
    c = _u_content(a)
    if c == 0:
        return ()
    if a[-1] < 0:
        c = -c
    return tuple(v // c for v in a)


def _u_gcd(a, b):
    """Gcd in Z[x] with positive leading coefficient."""
    if not a:
        return _u_normalize(b)
    if not b:
        return _u_normalize(a)
    c = math.gcd(_u_content(a), _u_content(b))
    a, b = _u_primitive(a), _u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _u_prem(a, b)
        a, b = b, _u_primitive(r)
        if not b:
            return _u_scale(a, c)
    if b:
        return (c,)
    return _u_scale(a, c)


def _u_normalize(a):
    if a and a[-1] < 0:
        return _u_neg(a)
    return tuple(a)


# ---------------------------------------------------------------------------
# Text rendering and parsing
# ---------------------------------------------------------------------------

def _render_terms(items, names) -> str:
    """Render (exponent tuple, coefficient) items already in display order."""
    parts = []
    for exps, c in items:
        mono = []
        for name, e in zip(names, exps):
            if e == 1:
                mono.append(name)
            elif e > 1:
                mono.append(f"{name}^{e}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([str(mag)] + mono)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) if parts else "0"


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_terms(text: str, names: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    """Parse sums of monomials such as ``2*x_s^2*x_t - 3`` into a term map.

    Only plain sums of products are accepted; parentheses are not.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    index = {n: k for k, n in enumerate(names)}
    terms: dict[tuple[int, ...], int] = {}
    pos = 0
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        exps = [0] * len(names)
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"cannot parse polynomial {text!r}")
            base, _, power = factor.partition("^")
            if base.isdigit():
                if power:
                    raise ValueError(f"cannot parse polynomial {text!r}")
                coeff *= int(base)
            elif base in index:
                exps[index[base]] += int(power) if power else 1
            else:
                raise ValueError(f"unknown symbol {base!r} in {text!r}")
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return {k: v for k, v in terms.items() if v}


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------

class UniPoly:
    """Integer polynomial in one variable; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def parse(cls, text: str, var: str = "x") -> "UniPoly":
        terms = parse_terms(text, (var,))
        deg = max((k[0] for k in terms), default=-1)
        c = [0] * (deg + 1)
        for (e,), v in terms.items():
            c[e] = v
        return cls(c)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly((other,))
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other):
        return UniPoly(_u_add(self.coeffs, _as_uni(other).coeffs))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(_u_neg(self.coeffs))

    def __sub__(self, other):
        return UniPoly(_u_sub(self.coeffs, _as_uni(other).coeffs))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        return UniPoly(_u_mul(self.coeffs, _as_uni(other).coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        return UniPoly(_u_divmod_exact(self.coeffs, _as_uni(other).coeffs))

    def __call__(self, x):
        """Horner evaluation; ``x`` may be anything supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_string(self, var: str = "x") -> str:
        items = [((i,), c) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return _render_terms(items, (var,))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"UniPoly({self.to_string()!r})"


def _as_uni(v) -> UniPoly:
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, int):
        return UniPoly((v,))
    return NotImplemented


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    return UniPoly(_u_gcd(a.coeffs, b.coeffs))


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------

_NAMES = ("x_s", "x_t")


class BiPoly:
    """Sparse element of Z[x_s, x_t].

    Instances are treated as immutable; arithmetic always returns new objects.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = (
            {k: v for k, v in terms.items() if v} if terms else {}
        )
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c}) if c else cls()

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        return cls(parse_terms(text, _NAMES))

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_term(self) -> int:
        return self.terms.get((0, 0), 0)

    def leading(self) -> tuple[tuple[int, int], int]:
        """Leading (exponents, coefficient) in lex order with x_s > x_t."""
        k = max(self.terms)
        return k, self.terms[k]

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items(), reverse=True)

    def content(self) -> int:
        return reduce(math.gcd, self.terms.values(), 0)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((k[var] for k in self.terms), default=-1)

    # -- protocol -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _as_bi(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out = dict(big)
        for k, v in small.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _as_bi(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_bi(other) - self

    def __mul__(self, other):
        other = _as_bi(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return BiPoly()
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, int], int] = {}
        get = out.get
        for (i1, j1), c1 in b.items():
            for (i2, j2), c2 in a.items():
                k = (i1 + i2, j1 + j2)
                out[k] = get(k, 0) + c1 * c2
        return BiPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, xs, xt):
        """Evaluate at (xs, xt); works for any values supporting + and *."""
        acc = None
        for (i, j), c in self.terms.items():
            t = c * xs**i * xt**j if (i or j) else c
            acc = t if acc is None else acc + t
        return 0 if acc is None else acc

    def __str__(self):
        return _render_terms(self.sorted_terms(), _NAMES)

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def _as_bi(v):
    if isinstance(v, BiPoly):
        return v
    if isinstance(v, int):
        return BiPoly.const(v)
    return NotImplemented


ZERO = BiPoly()
ONE = BiPoly.const(1)
X_S = BiPoly.monomial(1, 0)
X_T = BiPoly.monomial(0, 1)


def poly_add(a: BiPoly, b: BiPoly) -> BiPoly:
    return a + b


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return a * b


def poly_neg(a: BiPoly) -> BiPoly:
    return -a


def color_swap(a: BiPoly) -> BiPoly:
    """Exchange x_s and x_t."""
    return BiPoly._raw({(j, i): c for (i, j), c in a.terms.items()})


def to_one_color(a: BiPoly) -> UniPoly:
    """Image under x_s, x_t -> x."""
    deg = a.total_degree()
    c = [0] * (deg + 1)
    for (i, j), v in a.terms.items():
        c[i + j] += v
    return UniPoly(c)


def from_one_color_square(p: UniPoly) -> BiPoly:
    """Substitute y -> x_s*x_t into a univariate polynomial in y."""
    return BiPoly({(i, i): c for i, c in enumerate(p.coeffs) if c})


def exact_div(a: BiPoly, b: BiPoly) -> BiPoly:
    """Return q with q*b == a, raising NotDivisible if there is none."""
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.terms:
        return ZERO
    (bi, bj), bc = b.leading()
    if len(b.terms) == 1:
        out = {}
        for (i, j), c in a.terms.items():
            q, r = divmod(c, bc)
            if r or i < bi or j < bj:
                raise NotDivisible(f"{b} does not divide {a}")
            out[(i - bi, j - bj)] = q
        return BiPoly._raw(out)
    rest = [(k, v) for k, v in b.terms.items() if k != (bi, bj)]
    rem = dict(a.terms)
    quot: dict[tuple[int, int], int] = {}
    # degrees add under multiplication, which caps the quotient's x_t-degree
    max_qj = a.degree_in(1) - b.degree_in(1)
    while rem:
        ri, rj = k = max(rem)
        rc = rem[k]
        qi, qj = ri - bi, rj - bj
        if qi < 0 or qj < 0 or qj > max_qj:
            raise NotDivisible(f"{b} does not divide {a}")
        qc, r = divmod(rc, bc)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        quot[(qi, qj)] = qc
        del rem[k]
        for (i, j), c in rest:
            kk = (i + qi, j + qj)
            w = rem.get(kk, 0) - qc * c
            if w:
                rem[kk] = w
            else:
                rem.pop(kk, None)
    return BiPoly._raw(quot)


def divides(b: BiPoly, a: BiPoly) -> bool:
    try:
        exact_div(a, b)
    except NotDivisible:
        return False
    return True


# -- gcd via Z[x_t][x_s] ------------------------------------------------------

def _to_rec(a: BiPoly) -> list:
    """Dense list over x_s-degree of x_t-coefficient tuples."""
    deg = a.degree_in(0)
    rows: list[list[int]] = [[] for _ in range(deg + 1)]
    for (i, j), c in a.terms.items():
        row = rows[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = c
    return [tuple(r) for r in rows]


def _from_rec(rec) -> BiPoly:
    return BiPoly._raw(
        {(i, j): c for i, row in enumerate(rec) for j, c in enumerate(row) if c}
    )


def _rec_trim(rec):
    rec = list(rec)
    while rec and not rec[-1]:
        rec.pop()
    return rec


def _rec_content(rec):
    g = ()
    for row in rec:
        if row:
            g = _u_gcd(g, row)
            if g == (1,):
                break
    return g


def _rec_div_scalar(rec, c):
    return [_u_divmod_exact(row, c) if row else () for row in rec]


def _rec_primitive(rec):
    """Divide by the Z[x_t]-content, normalising the sign."""
    rec = _rec_trim(rec)
    if not rec:
        return []
    c = _rec_content(rec)
    if rec[-1][-1] < 0:
        c = _u_neg(c)
    if c == (1,):
        return rec
    return _rec_div_scalar(rec, c)


def _rec_prem(a, b):
    a = [tuple(r) for r in a]
    db, lb = len(b) - 1, b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        a = [_u_mul(r, lb) for r in a]
        if c:
            for j in range(db + 1):
                if b[j]:
                    a[k - db + j] = _u_sub(a[k - db + j], _u_mul(c, b[j]))
        a.pop()
    return _rec_trim(a)


def _prs_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd by primitive pseudo-remainder sequence in Z[x_t][x_s]."""
    ra, rb = _to_rec(a), _to_rec(b)
    cont = _u_gcd(_rec_content(ra), _rec_content(rb))
    pa, pb = _rec_primitive(ra), _rec_primitive(rb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while len(pb) > 1:
        r = _rec_prem(pa, pb)
        pa, pb = pb, _rec_primitive(r)
        if not pb:
            break
    if pb and len(pb) == 1:
        # the primitive parts are coprime in x_s
        g = [cont]
    else:
        g = [_u_mul(row, cont) for row in pa]
    return normalize_sign(_from_rec(g))


def _sym_digits(n: int, base: int) -> list[int]:
    """Balanced base-``base`` digits of n, least significant first."""
    out = []
    half = base // 2
    while n:
        d = n % base
        if d > half:
            d -= base
        out.append(d)
        n = (n - d) // base
    return out


def _u_eval(a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _u_divides(b, a) -> bool:
    try:
        _u_divmod_exact(a, b)
    except NotDivisible:
        return False
    return True


_HEU_TRIES = 6


def _u_heu_gcd(a, b):
    """Full gcd in Z[x] (content included) by the heuristic method, PRS fallback."""
    if not a:
        return _u_normalize(b)
    if not b:
        return _u_normalize(a)
    if len(a) == 1 or len(b) == 1:
        return (math.gcd(_u_content(a), _u_content(b)),)
    c = math.gcd(_u_content(a), _u_content(b))
    pa, pb = _u_primitive(a), _u_primitive(b)
    xi = 2 * min(max(map(abs, pa)), max(map(abs, pb))) + 29
    for _ in range(_HEU_TRIES):
        h = math.gcd(_u_eval(pa, xi), _u_eval(pb, xi))
        if h:
            g = _u_primitive(_sym_digits(h, xi))
            if g and _u_divides(g, pa) and _u_divides(g, pb):
                return _u_scale(g, c)
        xi = xi * 73794 // 27011 + 1
    return _u_gcd(a, b)


def _heu_gcd(a: BiPoly, b: BiPoly) -> BiPoly | None:
    """Heuristic gcd of primitive a, b: evaluate x_t at a large integer.

    Returns None when every evaluation point fails the divisibility check.
    """
    ra, rb = _to_rec(a), _to_rec(b)
    xi = 2 * min(max(map(abs, a.terms.values())), max(map(abs, b.terms.values()))) + 29
    for _ in range(_HEU_TRIES):
        ea = _trim(_u_eval(row, xi) for row in ra)
        eb = _trim(_u_eval(row, xi) for row in rb)
        if len(ea) == len(ra) and len(eb) == len(rb):
            h = _u_heu_gcd(ea, eb)
            terms = {}
            for i, hc in enumerate(h):
                for j, d in enumerate(_sym_digits(hc, xi)):
                    if d:
                        terms[(i, j)] = d
            g = BiPoly._raw(terms)
            if g.terms:
                c = g.content()
                if c != 1:
                    g = BiPoly._raw({k: v // c for k, v in terms.items()})
                g = normalize_sign(g)
                if divides(g, a) and divides(g, b):
                    return g
        xi = xi * 73794 // 27011 + 1
    return None


def _monomial_gcd(m: BiPoly, b: BiPoly) -> BiPoly:
    ((i, j), c), = m.terms.items()
    mi = min(i, min(k[0] for k in b.terms))
    mj = min(j, min(k[1] for k in b.terms))
    return BiPoly.monomial(mi, mj, math.gcd(c, b.content()))


def poly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd in Z[x_s, x_t], with positive leading coefficient in lex order."""
    if not a.terms and not b.terms:
        raise ValueError("gcd(0, 0) is undefined")
    if not a.terms:
        return normalize_sign(b)
    if not b.terms:
        return normalize_sign(a)
    if a.is_constant() or b.is_constant():
        return BiPoly.const(math.gcd(a.content(), b.content()))
    if len(a.terms) == 1:
        return _monomial_gcd(a, b)
    if len(b.terms) == 1:
        return _monomial_gcd(b, a)
    if a == b or a == -b:
        return normalize_sign(a)
    ca, cb = a.content(), b.content()
    c = math.gcd(ca, cb)
    pa = a if ca == 1 else BiPoly._raw({k: v // ca for k, v in a.terms.items()})
    pb = b if cb == 1 else BiPoly._raw({k: v // cb for k, v in b.terms.items()})
    g = _heu_gcd(pa, pb)
    if g is None:
        g = _prs_gcd(pa, pb)
    return g if c == 1 else g * c


def poly_gcd_prs(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd through the remainder sequence only (no heuristic shortcut)."""
    if not a.terms or not b.terms:
        return poly_gcd(a, b)
    return _prs_gcd(a, b)


def normalize_sign(a: BiPoly) -> BiPoly:
    if a.terms and a.leading()[1] < 0:
        return -a
    return a


def poly_lcm(a: BiPoly, b: BiPoly) -> BiPoly:
    if not a.terms or not b.terms:
        return ZERO
    return normalize_sign(exact_div(a, poly_gcd(a, b)) * b)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced fraction num/den in Frac Z[x_s, x_t].

    The denominator carries a positive leading coefficient and shares no
    nonunit factor (integer content included) with the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = _as_bi(num)
        den = ONE if den is None else _as_bi(den)
        if not den.terms:
            raise ZeroDenominator("zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num, self.den = num, den

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        t = text.strip()
        if "/" in t:
            n, d = t.split("/", 1)
            return cls(BiPoly.parse(n.strip().strip("()")), BiPoly.parse(d.strip().strip("()")))
        return cls(BiPoly.parse(t))

    def is_zero(self) -> bool:
        return not self.num.terms

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __eq__(self, other):
        if isinstance(other, (int, BiPoly)):
            other = RatFunc(other)
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RatFunc(a + c, b)
        if b == ONE:
            return RatFunc(a * d + c, d, _reduced=True)
        if d == ONE:
            return RatFunc(a + c * b, b, _reduced=True)
        g = poly_gcd(b, d)
        if g == ONE:
            return RatFunc(a * d + c * b, b * d, _reduced=True)
        bg, dg = exact_div(b, g), exact_div(d, g)
        num = a * dg + c * bg
        if not num.terms:
            return RatFunc(ZERO, ONE, _reduced=True)
        h = poly_gcd(num, g)
        if h != ONE:
            num, g = exact_div(num, h), exact_div(g, h)
        return RatFunc._norm(num, bg * dg * g)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_rat(other) - self

    def __mul__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        if not self.num.terms or not other.num.terms:
            return RatFunc(ZERO, ONE, _reduced=True)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d != ONE else ONE
        g2 = poly_gcd(c, b) if b != ONE else ONE
        if g1 != ONE:
            a, d = exact_div(a, g1), exact_div(d, g1)
        if g2 != ONE:
            c, b = exact_div(c, g2), exact_div(b, g2)
        return RatFunc._norm(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc._norm(self.den, self.num)

    def __truediv__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_rat(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._norm(self.num**k, self.den**k)

    @staticmethod
    def _norm(num, den):
        if den.leading()[1] < 0:
            num, den = -num, -den
        return RatFunc(num, den, _reduced=True)

    def map(self, f) -> "RatFunc":
        """Apply a ring automorphism of A to numerator and denominator."""
        return RatFunc(f(self.num), f(self.den))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _as_rat(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, BiPoly)):
        return RatFunc(_as_bi(v), ONE, _reduced=True)
    return NotImplemented


def _reduce(num: BiPoly, den: BiPoly):
    if not num.terms:
        return ZERO, ONE
    g = poly_gcd(num, den)
    if g != ONE:
        num, den = exact_div(num, g), exact_div(den, g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def frac_reduce(num: BiPoly, den: BiPoly) -> RatFunc:
    if not den.terms:
        raise ZeroDenominator("zero denominator")
    return RatFunc(num, den)
