"""Two-colored quantum numbers, binomials and their cyclotomic parts.

All values live in A = Z[x_s, x_t] (``BiPoly``) or, for the one-colored
versions, in Z[x] (``UniPoly``).
"""
from __future__ import annotations

import enum
import math
import threading
from functools import lru_cache, reduce

from .polyarith import (
    ONE,
    X_S,
    X_T,
    ZERO,
    BiPoly,
    NotDivisible,
    RatFunc,
    UniPoly,
    exact_div,
    from_one_color_square,
    normalize_sign,
    poly_gcd,
    poly_lcm,
)


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class VerificationFailed(AssertionError):
    """An internal consistency check failed; this indicates a bug."""


class InternalNotDivisible(ArithmeticError):
    """An exact division that must succeed did not; this is a bug."""


class Color(enum.Enum):
    s = "s"
    t = "t"

    def swap(self) -> "Color":
        return Color.t if self is Color.s else Color.s

    @property
    def generator(self) -> BiPoly:
        """x_s for s, x_t for t."""
        return X_S if self is Color.s else X_T

    @classmethod
    def of(cls, c) -> "Color":
        return c if isinstance(c, cls) else cls(str(c))

    def __str__(self):
        return self.value


S, T = Color.s, Color.t


# ---------------------------------------------------------------------------
# quantum numbers
# ---------------------------------------------------------------------------

class QNumTable:
    """Memo of [n]_s and [n]_t for all integers computed so far.

    Both directions of the recursion are filled contiguously from the seeds
    [0] = 0 and [1] = 1, so a lookup never recomputes anything.
    """

    def __init__(self):
        self._lock = threading.Lock()
        # index n -> (value_s, value_t)
        self._pos: list[tuple[BiPoly, BiPoly]] = [(ZERO, ZERO), (ONE, ONE)]
        self._neg: list[tuple[BiPoly, BiPoly]] = [(ZERO, ZERO)]  # _neg[k] = [-k]

    def get(self, n: int, c: Color) -> BiPoly:
        k = 0 if c is S else 1
        if n >= 0:
            if n >= len(self._pos):
                self._extend_up(n)
            return self._pos[n][k]
        if -n >= len(self._neg):
            self._extend_down(-n)
        return self._neg[-n][k]

    def _extend_up(self, n: int):
        with self._lock:
            pos = self._pos
            while len(pos) <= n:
                m = len(pos) - 1  # compute [m+1] from [m], [m-1]
                s_m, t_m = pos[m]
                s_p, t_p = pos[m - 1]
                pos.append((X_S * t_m - s_p, X_T * s_m - t_p))

    def _extend_down(self, k: int):
        # [n-1]_s = [2]_s [n]_t - [n+1]_s, run downward from n = 0
        with self._lock:
            neg = self._neg
            while len(neg) <= k:
                m = len(neg) - 1  # know [-m] and [-m+1]
                s_m, t_m = neg[m]
                s_u, t_u = neg[m - 1] if m >= 1 else self._pos[1]
                neg.append((X_S * t_m - s_u, X_T * s_m - t_u))

    def __len__(self):
        return len(self._pos) + len(self._neg) - 1


_TABLE = QNumTable()


def quantum_number(n: int, c: Color = S) -> BiPoly:
    """[n]_c, for any integer n."""
    return _TABLE.get(n, Color.of(c))


def one_color_quantum_number(n: int) -> UniPoly:
    """One-colored [n] in Z[x] from the Chebyshev recursion [n+1] = x[n] - [n-1]."""
    if n < 0:
        return -one_color_quantum_number(-n)
    return _one_color(n)


@lru_cache(maxsize=None)
def _one_color(n: int) -> UniPoly:
    if n == 0:
        return UniPoly()
    if n == 1:
        return UniPoly((1,))
    return UniPoly((0, 1)) * _one_color(n - 1) - _one_color(n - 2)


@lru_cache(maxsize=None)
def qfactorial(n: int, c: Color = S) -> BiPoly:
    c = Color.of(c)
    if n < 0:
        raise DomainError("factorial of a negative integer")
    out = ONE
    for k in range(2, n + 1):
        out = out * quantum_number(k, c)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int, c: Color = S) -> BiPoly:
    """Two-colored binomial [n]!/([k]![n-k]!); zero when k is outside [0, n]."""
    c = Color.of(c)
    if n < 0:
        raise DomainError("qbinom needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    num = ONE
    for m in range(n - k + 1, n + 1):
        num = num * quantum_number(m, c)
    try:
        return exact_div(num, qfactorial(k, c))
    except NotDivisible as exc:  # pragma: no cover - would be an arithmetic bug
        raise InternalNotDivisible(f"qbinom({n},{k})_{c}") from exc


# ---------------------------------------------------------------------------
# cyclotomic parts
# ---------------------------------------------------------------------------

def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius needs n >= 1")
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def theta_one_color(n: int) -> UniPoly:
    """Theta_n = prod_{k | n} [k]^mu(n/k) in Z[x]."""
    if n < 1:
        raise DomainError("theta needs n >= 1")
    num, den = UniPoly((1,)), UniPoly((1,))
    for k in divisors(n):
        mu = mobius(n // k)
        if mu == 1:
            num = num * one_color_quantum_number(k)
        elif mu == -1:
            den = den * one_color_quantum_number(k)
    return num.exact_div(den)


@lru_cache(maxsize=None)
def psi(n: int) -> UniPoly:
    """Minimal polynomial of 4cos^2(pi/n): Theta_n(x) = psi(x^2)."""
    if n <= 2:
        raise DomainError("psi needs n > 2")
    th = theta_one_color(n)
    if any(th[i] for i in range(1, len(th), 2)):  # pragma: no cover
        raise VerificationFailed(f"Theta_{n} is not even")
    return UniPoly(th[i] for i in range(0, len(th), 2))


@lru_cache(maxsize=None)
def theta_two_color(n: int, c: Color = S) -> BiPoly:
    """Theta_{n,c}: psi_n(x_s x_t) for n > 2, the generator x_c for n = 2, 1 for n = 1."""
    c = Color.of(c)
    if n < 1:
        raise DomainError("theta needs n >= 1")
    if n == 1:
        return ONE
    if n == 2:
        return c.generator
    return from_one_color_square(psi(n))


def theta_key(n: int, c: Color) -> tuple[int, Color]:
    """Canonical label of Theta_{n,c}; the color only matters at n = 2."""
    return (n, Color.of(c) if n == 2 else S)


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------

def poly_valuation(f: BiPoly, theta: BiPoly) -> int:
    if f.is_zero():
        raise DomainError("valuation of zero")
    v = 0
    while True:
        try:
            f = exact_div(f, theta)
        except NotDivisible:
            return v
        v += 1


def cyclo_valuation(f, l: int, c: Color = S) -> int:
    """Exponent of Theta_{l,c} in a polynomial or (reduced) fraction."""
    if l <= 1:
        raise DomainError("valuation index must exceed 1")
    th = theta_two_color(l, c)
    if isinstance(f, (int, BiPoly)):
        f = RatFunc(f)
    if f.is_zero():
        raise DomainError("valuation of zero")
    return poly_valuation(f.num, th) - poly_valuation(f.den, th)


def valuation_formula(n: int, k: int, l: int) -> int:
    """floor(n/l) - floor(k/l) - floor((n-k)/l)."""
    return n // l - k // l - (n - k) // l


# ---------------------------------------------------------------------------
# Bezout certificates
# ---------------------------------------------------------------------------

def _euclid_step(p: int, q: int, c: Color) -> tuple[BiPoly, BiPoly]:
    """(X, Y) with X[p]_c + Y[q]_c = [q - p]_c, for 1 <= p < q."""
    o = c.swap()
    if p % 2 == 1 and q % 2 == 1:
        return quantum_number(q - 1, c), -quantum_number(p - 1, c)
    return quantum_number(q - 1, o), -quantum_number(p - 1, o)


def qbezout(m: int, n: int, c: Color = S) -> tuple[BiPoly, BiPoly]:
    """(a, b) with a[m]_c + b[n]_c = [gcd(m, n)]_c, by subtractive Euclid."""
    c = Color.of(c)
    if m < 1 or n < 1:
        raise DomainError("qbezout needs positive arguments")
    # invariant: [p] = pa[m] + pb[n] and [q] = qa[m] + qb[n]
    p, pa, pb = m, ONE, ZERO
    q, qa, qb = n, ZERO, ONE
    while p != q:
        if p > q:
            p, pa, pb, q, qa, qb = q, qa, qb, p, pa, pb
        x, y = _euclid_step(p, q, c)
        q, qa, qb = q - p, x * pa + y * qa, x * pb + y * qb
    a, b = pa, pb
    if a * quantum_number(m, c) + b * quantum_number(n, c) != quantum_number(math.gcd(m, n), c):
        raise VerificationFailed(f"qbezout({m},{n})")  # pragma: no cover
    return a, b


def theta_bezout(m: int, n: int, c: Color = S) -> tuple[BiPoly, BiPoly]:
    """(a, b) with a*Theta_{m,c} + b*Theta_{n,c} = 1, for m, n not dividing one another."""
    c = Color.of(c)
    if m < 1 or n < 1:
        raise DomainError("theta_bezout needs positive arguments")
    if m % n == 0 or n % m == 0:
        raise DomainError(f"theta_bezout needs {m} and {n} not to divide one another")
    a0, b0 = qbezout(m, n, c)
    d = quantum_number(math.gcd(m, n), c)
    rest_m = exact_div(exact_div(quantum_number(m, c), d), theta_two_color(m, c))
    rest_n = exact_div(exact_div(quantum_number(n, c), d), theta_two_color(n, c))
    a, b = a0 * rest_m, b0 * rest_n
    if a * theta_two_color(m, c) + b * theta_two_color(n, c) != ONE:
        raise VerificationFailed(f"theta_bezout({m},{n})")  # pragma: no cover
    return a, b


# ---------------------------------------------------------------------------
# principal ideal generators
# ---------------------------------------------------------------------------

def binom_ideal_generator(n: int, c: Color = S) -> BiPoly:
    """Theta_{n,c}, after checking it is the gcd of qbinom(n, k), 0 < k < n."""
    c = Color.of(c)
    if n < 2:
        raise DomainError("binom_ideal_generator needs n >= 2")
    th = theta_two_color(n, c)
    binoms = [qbinom(n, k, c) for k in range(1, n)]
    for b in binoms:
        try:
            exact_div(b, th)
        except NotDivisible:
            raise VerificationFailed(f"Theta_{n} does not divide a binomial") from None
    g = reduce(poly_gcd, binoms)
    if normalize_sign(g) != normalize_sign(th):
        raise VerificationFailed(f"gcd of binomials is {g}, not {th}")
    return th


def g_poly(n: int, c: Color = S) -> BiPoly:
    """prod of Theta_{k,c} over 1 <= k <= n with k not dividing n + 1."""
    c = Color.of(c)
    out = ONE
    for k in range(1, n + 1):
        if (n + 1) % k:
            out = out * theta_two_color(k, c)
    return out


def g_factors(n: int, c: Color = S) -> list[int]:
    return [k for k in range(2, n + 1) if (n + 1) % k]


def inv_binom_ideal_generator(n: int, c: Color = S) -> BiPoly:
    """g_n, after checking it is the lcm of qbinom(n, k), 0 <= k <= n."""
    c = Color.of(c)
    if n < 1:
        raise DomainError("inv_binom_ideal_generator needs n >= 1")
    g = g_poly(n, c)
    lcm = reduce(poly_lcm, (qbinom(n, k, c) for k in range(n + 1)))
    if normalize_sign(lcm) != normalize_sign(g):
        raise VerificationFailed(f"lcm of binomials is {lcm}, not {g}")
    return g
