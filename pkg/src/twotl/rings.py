"""Coefficient rings and specializations of A = Z[x_s, x_t].

A ring object carries the arithmetic; ring values are plain payloads:

=========================  ==========================================
ring                       payload
=========================  ==========================================
``Integers``               ``int``
``Rationals``              ``fractions.Fraction``
``IntegersMod(m)``         ``int`` in ``[0, m)``
``UnivariateQuotient``     tuple of ``deg(modulus)`` ints or Fractions
``FracA``                  ``RatFunc``
=========================  ==========================================
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .polyarith import BiPoly, RatFunc, UniPoly, X_S, X_T, parse_terms


class RingMismatch(TypeError):
    """A value does not belong to the ring it is used with."""


class NotInvertible(ArithmeticError):
    """The ring element has no inverse."""


class DenominatorNotInvertible(NotInvertible):
    """A fraction of A has no image in the target ring."""


class UnsupportedRing(ValueError):
    """The requested operation is not available for this ring."""


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % p for p in range(2, math.isqrt(m) + 1))


class Ring:
    """Base class for the supported commutative rings."""

    is_field = False

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def contains(self, v) -> bool:
        raise NotImplementedError

    def _check(self, *vals):
        for v in vals:
            if not self.contains(v):
                raise RingMismatch(f"{v!r} is not an element of {self}")

    def add(self, a, b):
        self._check(a, b)
        return self._add(a, b)

    def sub(self, a, b):
        self._check(a, b)
        return self._add(a, self._neg(b))

    def mul(self, a, b):
        self._check(a, b)
        return self._mul(a, b)

    def neg(self, a):
        self._check(a)
        return self._neg(a)

    def pow(self, a, k: int):
        out, base = self.one(), a
        while k:
            if k & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            k >>= 1
        return out

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def eq(self, a, b) -> bool:
        return a == b

    def is_invertible(self, a) -> bool:
        try:
            self.inverse(a)
        except NotInvertible:
            return False
        return True

    def inverse(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self._mul(a, self.inverse(b))

    # -- text ---------------------------------------------------------------
    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return self.format(a)

    def from_json(self, obj):
        return self.parse(str(obj))

    def __eq__(self, other):
        return type(self) is type(other) and self.describe() == other.describe()

    def __hash__(self):
        return hash(self.describe())

    def __repr__(self):
        return f"<ring {self.describe()}>"

    def __str__(self):
        return self.describe()


class Integers(Ring):
    def describe(self):
        return "Z"

    def from_int(self, n):
        return int(n)

    def contains(self, v):
        return type(v) is int

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def inverse(self, a):
        self._check(a)
        if a in (1, -1):
            return a
        raise NotInvertible(f"{a} is not a unit in Z")

    def parse(self, text):
        return int(text.strip())


class Rationals(Ring):
    is_field = True

    def describe(self):
        return "Q"

    def from_int(self, n):
        return Fraction(n)

    def contains(self, v):
        return isinstance(v, Fraction)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def inverse(self, a):
        self._check(a)
        if a == 0:
            raise NotInvertible("0 is not invertible")
        return 1 / a

    def parse(self, text):
        return Fraction(text.strip())


class IntegersMod(Ring):
    def __init__(self, m: int):
        if m < 2:
            raise ValueError("IntegersMod needs m >= 2")
        self.m = m
        self.is_field = _is_prime(m)

    def describe(self):
        return f"Z/{self.m}"

    def from_int(self, n):
        return int(n) % self.m

    def contains(self, v):
        return type(v) is int and 0 <= v < self.m

    def _add(self, a, b):
        return (a + b) % self.m

    def _mul(self, a, b):
        return (a * b) % self.m

    def _neg(self, a):
        return (-a) % self.m

    def inverse(self, a):
        self._check(a)
        if math.gcd(a, self.m) != 1:
            raise NotInvertible(f"{a} is not a unit mod {self.m}")
        return pow(a, -1, self.m)

    def parse(self, text):
        return int(text.strip()) % self.m


def _qpoly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _qpoly_divmod(a, b):
    """Division with remainder over Q; b nonzero."""
    a = [Fraction(v) for v in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for j, bv in enumerate(b):
                a[k + j] -= c * bv
    return _qpoly_trim(q), _qpoly_trim(a[: len(b) - 1])


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _qpoly_trim(out)


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    return _qpoly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def qpoly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g monic, over Q."""
    r0, r1 = _qpoly_trim(a), _qpoly_trim(b)
    s0, s1, t0, t1 = [Fraction(1)], [], [], [Fraction(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        t0, t1 = t1, _qpoly_sub(t0, _qpoly_mul(q, t1))
    if not r0:
        return [], [], []
    lc = Fraction(r0[-1])
    return [v / lc for v in r0], [v / lc for v in s0], [v / lc for v in t0]


class UnivariateQuotient(Ring):
    """Z[y]/(f) or Q[y]/(f) for a monic nonconstant f."""

    def __init__(self, modulus: UniPoly, base: Ring | None = None, var: str = "y"):
        base = Integers() if base is None else base
        if not isinstance(base, (Integers, Rationals)):
            raise ValueError("base ring must be Z or Q")
        if modulus.degree() < 1 or modulus[modulus.degree()] != 1:
            raise ValueError("modulus must be monic and nonconstant")
        self.modulus = modulus
        self.base = base
        self.var = var
        self.d = modulus.degree()
        # a field only when the base is Q and f is irreducible; not tested here
        self.is_field = False

    def describe(self):
        b = "Z" if isinstance(self.base, Integers) else "Q"
        return f"{b}[{self.var}]/({self.modulus.to_string(self.var).replace(' ', '')})"

    def _conv(self, v):
        return self.base.from_int(v) if isinstance(self.base, Integers) else Fraction(v)

    def _reduce(self, c):
        c = list(c)
        f = self.modulus.coeffs
        while len(c) > self.d:
            lead = c.pop()
            if lead:
                off = len(c) - self.d
                for j in range(self.d):
                    c[off + j] -= lead * f[j]
        c += [0] * (self.d - len(c))
        return tuple(self._conv(v) for v in c)

    def from_int(self, n):
        return self._reduce([n])

    def gen(self):
        return self._reduce([0, 1])

    def from_poly(self, p: UniPoly):
        return self._reduce(p.coeffs)

    def contains(self, v):
        if not isinstance(v, tuple) or len(v) != self.d:
            return False
        kind = int if isinstance(self.base, Integers) else Fraction
        return all(type(c) is kind for c in v)

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        return self._reduce(_qpoly_mul(list(a), list(b)))

    def inverse(self, a):
        self._check(a)
        g, s, _ = qpoly_xgcd(list(a), list(self.modulus.coeffs))
        if g != [1]:
            raise NotInvertible(f"{self.format(a)} is a zero divisor in {self}")
        if isinstance(self.base, Integers):
            if any(Fraction(v).denominator != 1 for v in s):
                raise NotInvertible(f"{self.format(a)} has no inverse over Z")
            s = [int(v) for v in s]
        w = self._reduce(s)
        if self._mul(a, w) != self.one():  # pragma: no cover
            raise AssertionError("inverse certificate failed")
        return w

    def parse(self, text):
        text = text.strip()
        if isinstance(self.base, Rationals) and "/" in text and self.var not in text:
            return self._reduce([Fraction(text)])
        terms = parse_terms(text, (self.var,))
        deg = max((k[0] for k in terms), default=-1)
        c = [0] * (deg + 1)
        for (e,), v in terms.items():
            c[e] = v
        return self._reduce(c)

    def format(self, a):
        items = [(i, c) for i, c in enumerate(a) if c]
        if not items:
            return "0"
        parts = []
        for i, c in reversed(items):
            mag = abs(c)
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)


class FracA(Ring):
    """The generic fraction field Frac Z[x_s, x_t]."""

    is_field = True

    def describe(self):
        return "FracA"

    def from_int(self, n):
        return RatFunc(int(n))

    def contains(self, v):
        return isinstance(v, RatFunc)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def is_zero(self, a):
        return a.is_zero()

    def inverse(self, a):
        self._check(a)
        if a.is_zero():
            raise NotInvertible("0 is not invertible")
        return a.inverse()

    def div(self, a, b):
        if b.is_zero():
            raise NotInvertible("0 is not invertible")
        return a / b

    def parse(self, text):
        return RatFunc.parse(text)

    def to_json(self, a):
        return {"num": str(a.num), "den": str(a.den)}

    def from_json(self, obj):
        if isinstance(obj, dict):
            return RatFunc(BiPoly.parse(obj["num"]), BiPoly.parse(obj["den"]))
        return self.parse(str(obj))


_QUOT_RE = re.compile(r"^([ZQ])\[([A-Za-z]\w*)\]/\((.+)\)$")


def parse_ring(text: str) -> Ring:
    """Parse ``Z``, ``Q``, ``Z/5``, ``Z[y]/(y^2-y-1)``, ``Q[y]/(...)`` or ``FracA``."""
    t = text.replace(" ", "")
    if t == "Z":
        return Integers()
    if t == "Q":
        return Rationals()
    if t == "FracA":
        return FracA()
    m = re.fullmatch(r"Z/(\d+)", t)
    if m:
        return IntegersMod(int(m.group(1)))
    m = _QUOT_RE.match(t)
    if m:
        base = Integers() if m.group(1) == "Z" else Rationals()
        var = m.group(2)
        return UnivariateQuotient(UniPoly.parse(m.group(3), var), base, var)
    raise UnsupportedRing(f"unrecognised ring {text!r}")


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Specialization:
    """The structure map A -> R sending x_s, x_t to the given images."""

    ring: Ring
    image_s: Any
    image_t: Any

    def __post_init__(self):
        for name in ("image_s", "image_t"):
            v = getattr(self, name)
            if type(v) is int and not self.ring.contains(v):
                object.__setattr__(self, name, self.ring.from_int(v))
        self.ring._check(self.image_s, self.image_t)

    @classmethod
    def generic(cls) -> "Specialization":
        return cls(FracA(), RatFunc(X_S), RatFunc(X_T))

    @classmethod
    def parse(cls, ring: str | Ring, xs: str | None = None, xt: str | None = None):
        R = parse_ring(ring) if isinstance(ring, str) else ring
        if isinstance(R, FracA) and xs is None and xt is None:
            return cls.generic()
        if xs is None or xt is None:
            raise ValueError("both images --xs and --xt are required for this ring")
        return cls(R, R.parse(xs), R.parse(xt))

    def swapped(self) -> "Specialization":
        return Specialization(self.ring, self.image_t, self.image_s)

    def describe(self) -> dict:
        return {
            "ring": self.ring.describe(),
            "xs": self.ring.to_json(self.image_s),
            "xt": self.ring.to_json(self.image_t),
        }


def specialize_poly(p: BiPoly, sp: Specialization):
    """Image of p under x_s -> image_s, x_t -> image_t."""
    R = sp.ring
    if not p.terms:
        return R.zero()
    ps: dict[int, Any] = {}
    pt: dict[int, Any] = {}
    acc = R.zero()
    for (i, j), c in p.terms.items():
        if i not in ps:
            ps[i] = R.pow(sp.image_s, i)
        if j not in pt:
            pt[j] = R.pow(sp.image_t, j)
        term = R._mul(R.from_int(c), R._mul(ps[i], pt[j]))
        acc = R._add(acc, term)
    return acc


def specialize_frac(f: RatFunc, sp: Specialization):
    """Image of a reduced fraction; DenominatorNotInvertible if it has none."""
    R = sp.ring
    num = specialize_poly(f.num, sp)
    den = specialize_poly(f.den, sp)
    try:
        inv = R.inverse(den)
    except NotInvertible as exc:
        raise DenominatorNotInvertible(
            f"denominator {f.den} maps to non-invertible {R.format(den)} in {R}"
        ) from exc
    return R._mul(num, inv)


def unit_ideal(ring: Ring, values) -> bool:
    """Whether the given elements generate the unit ideal of ``ring``."""
    vals = list(values)
    ring._check(*vals)
    if any(ring.is_invertible(v) for v in vals):
        return True
    if isinstance(ring, (Rationals, FracA)):
        return False
    if isinstance(ring, Integers):
        return math.gcd(*vals) == 1 if vals else False
    if isinstance(ring, IntegersMod):
        return math.gcd(ring.m, *vals) == 1
    if isinstance(ring, UnivariateQuotient):
        if isinstance(ring.base, Rationals):
            g = list(ring.modulus.coeffs)
            for v in vals:
                g, _, _ = qpoly_xgcd(g, list(v))
            return g == [1]
        return _lattice_is_full(ring, vals)
    raise UnsupportedRing(f"unit-ideal test not available for {ring}")


def _lattice_is_full(ring: UnivariateQuotient, vals) -> bool:
    """Z-span of {v * y^i} equals Z^d, tested by Hermite reduction."""
    rows = []
    y = ring.gen()
    for v in vals:
        w = v
        for _ in range(ring.d):
            rows.append(list(w))
            w = ring._mul(w, y)
    d = ring.d
    det_diag = []
    for col in range(d):
        # gcd-combine all rows with a nonzero entry in this column into one pivot
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            nxt = [p]
            for r in active[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            active = nxt
        if not active:
            return False
        det_diag.append(abs(active[0][col]))
        rows = rest
    return all(v == 1 for v in det_diag)
