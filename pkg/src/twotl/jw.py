"""Jones-Wenzl projectors: generic coefficients, denominators, existence, rotation."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Any

from .diagram import (
    TLDiagram,
    enumerate_diagrams,
    fold_and_caps,
    identity_diagram,
    nested_cap_diagram,
    rotate_ccw,
    rotate_cw,
    tau_involute,
)
from .polyarith import BiPoly, RatFunc, color_swap, poly_lcm
from .qnum import (
    Color,
    S,
    VerificationFailed,
    cyclo_valuation,
    inv_binom_ideal_generator,
    qbinom,
    quantum_number,
)
from .rings import (
    DenominatorNotInvertible,
    Specialization,
    specialize_frac,
    specialize_poly,
)
from .tlalgebra import (
    AlgebraContext,
    TLElement,
    element_mul,
    generators_annihilate,
    partial_trace,
)


class NotExists(ArithmeticError):
    """The projector does not exist over the requested ring."""

    def __init__(self, message: str, report: "ExistenceReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class JWGeneric:
    n: int
    leading_color: Color
    coefficients: dict = field(compare=False)

    def coeff(self, d: TLDiagram) -> RatFunc:
        return self.coefficients.get(d, RatFunc(0))

    def as_element(self) -> TLElement:
        return TLElement._raw(AlgebraContext.generic(self.n, self.leading_color),
                              dict(self.coefficients))


@dataclass
class ExistenceReport:
    exists: bool
    witness: list = field(default_factory=list)  # (k, value, invertible)
    rotatable: bool | None = None
    rotation_scalar: Any = None
    details: dict = field(default_factory=dict)

    def failures(self) -> list[int]:
        return [k for k, _, ok in self.witness if not ok]


_lock = threading.Lock()
_levels: dict[Color, list[dict[TLDiagram, RatFunc]]] = {}


def _level(n: int, c: Color) -> dict[TLDiagram, RatFunc]:
    with _lock:
        levels = _levels.setdefault(c, [{identity_diagram(0): RatFunc(1)}])
        while len(levels) <= n:
            m = len(levels)  # build strand count m from m-1
            prev = levels[-1]
            denom = RatFunc(quantum_number(m, c))
            table: dict[TLDiagram, RatFunc] = {}
            for d in enumerate_diagrams(m):
                _, caps = fold_and_caps(d, c)
                acc = RatFunc(0)
                for cap in caps:
                    sub = prev.get(cap.deleted)
                    if sub is not None:
                        acc = acc + sub * quantum_number(cap.position, cap.color)
                if not acc.is_zero():
                    table[d] = acc / denom
            levels.append(table)
        return levels[n]


def jw_generic(n: int, leading_color: Color = S) -> JWGeneric:
    """The generic projector, built strand by strand from the cap-deletion recursion.

    >>> str(jw_generic(2).coeff(identity_diagram(2)))
    '1'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return JWGeneric(n, leading_color, _level(n, leading_color))


def jw_denominator(n: int, leading_color: Color = S) -> BiPoly:
    """lcm of all reduced denominators, checked against the inverse-binomial generator."""
    seen = set()
    acc = BiPoly.const(1)
    for f in jw_generic(n, leading_color).coefficients.values():
        if f.den not in seen:
            seen.add(f.den)
            acc = poly_lcm(acc, f.den)
    g = inv_binom_ideal_generator(n, leading_color)
    if acc != g and acc != -g:
        raise VerificationFailed(f"denominator lcm {acc} differs from {g}")
    return acc


def nested_cap_coefficient(n: int, k: int, leading_color: Color = S) -> RatFunc:
    d = nested_cap_diagram(n, k)
    v = jw_generic(n, leading_color).coeff(d)
    expected = RatFunc(1) / RatFunc(qbinom(n, k, leading_color))
    if v != expected:
        raise VerificationFailed(f"coefficient {v} of {d} is not {expected}")
    return v


def existence_check(n: int, leading_color: Color, sp: Specialization) -> ExistenceReport:
    """Test invertibility of every binomial qbinom(n, k), 0 <= k <= n, in the ring."""
    R = sp.ring
    witness = []
    for k in range(n + 1):
        v = specialize_poly(qbinom(n, k, leading_color), sp)
        witness.append((k, v, R.is_invertible(v)))
    return ExistenceReport(all(ok for _, _, ok in witness), witness)


def jw_specialize(n: int, leading_color: Color, sp: Specialization) -> TLElement:
    rep = existence_check(n, leading_color, sp)
    if not rep.exists:
        bad = ", ".join(f"qbinom({n},{k})" for k in rep.failures())
        raise NotExists(f"{bad} not invertible in {sp.ring}", rep)
    ctx = AlgebraContext.from_specialization(n, leading_color, sp)
    R = sp.ring
    out = {}
    for d, f in jw_generic(n, leading_color).coefficients.items():
        try:
            v = specialize_frac(f, sp)
        except DenominatorNotInvertible as exc:  # excluded by the existence criterion
            raise VerificationFailed(f"coefficient of {d} has no image: {exc}") from exc
        if not R.is_zero(v):
            out[d] = v
    return TLElement._raw(ctx, out)


def _fraction_vanishes(n: int, c: Color, sp: Specialization) -> bool:
    R = sp.ring
    top = RatFunc(quantum_number(n + 1, c))
    for k in range(1, n + 1):
        f = top / RatFunc(quantum_number(k, c))
        try:
            v = specialize_frac(f, sp)
        except DenominatorNotInvertible as exc:
            raise VerificationFailed(f"[{n + 1}]/[{k}] has no image although JW exists") from exc
        if not R.is_zero(v):
            return False
    return True


def binomial_vanishing(n: int, sp: Specialization) -> bool:
    """qbinom(n+1, k) vanishes in both colors for every 1 <= k <= n."""
    R = sp.ring
    return all(
        R.is_zero(specialize_poly(qbinom(n + 1, k, c), sp))
        for k in range(1, n + 1)
        for c in (Color.s, Color.t)
    )


def rotatability_check(n: int, leading_color: Color, sp: Specialization) -> ExistenceReport:
    """Decide existence of both projectors and whether they are rotatable.

    The fraction test ``[n+1]/[k] = 0`` (both colors) is cross-checked against
    the vanishing of ``qbinom(n+1, k)`` in both colors.
    """
    own = existence_check(n, leading_color, sp)
    other = existence_check(n, leading_color.swap(), sp)
    both = own.exists and other.exists
    if both:
        fraction = all(_fraction_vanishes(n, c, sp) for c in (Color.s, Color.t))
    else:
        fraction = False
    binomial = binomial_vanishing(n, sp)
    if fraction != binomial:
        raise VerificationFailed(
            f"fraction test ({fraction}) and binomial test ({binomial}) disagree at n={n}")
    own.rotatable = fraction
    own.details = {"other_exists": other.exists, "fraction_form": fraction, "binomial_form": binomial}
    return own


def _rotated(a: TLElement, rot, ctx: AlgebraContext) -> TLElement:
    return TLElement._raw(ctx, {rot(d): v for d, v in a.coeffs.items()})


def _scalar_multiple(a: TLElement, b: TLElement):
    """lambda with a == lambda*b, or None; b has identity coefficient 1."""
    R = a.context.ring
    lam = a.coeffs.get(identity_diagram(a.context.n), R.zero())
    if (b * lam) == a:
        return lam
    return None


def rotation_compare(n: int, sp: Specialization, leading_color: Color = S):
    """Rotate JW(leading, n) one strand both ways and compare with the other-colored JW.

    Returns the scalar when both rotations agree with the same multiple, else None.
    """
    a = jw_specialize(n, leading_color, sp)
    b = jw_specialize(n, leading_color.swap(), sp)
    lams = []
    for rot in (rotate_cw, rotate_ccw):
        lam = _scalar_multiple(_rotated(a, rot, b.context), b)
        if lam is None:
            return None
        lams.append(lam)
    if lams[0] != lams[1]:
        return None
    return lams[0]


def verify_ptr(n: int, leading_color: Color = S) -> RatFunc:
    """Check pTr(JW(n)) = -([n+1]/[n]) JW(n-1) and return the scalar."""
    if n < 1:
        raise ValueError("n must be at least 1")
    tr = partial_trace(jw_generic(n, leading_color).as_element())
    scalar = -RatFunc(quantum_number(n + 1, leading_color)) / RatFunc(quantum_number(n, leading_color))
    expected = jw_generic(n - 1, leading_color).as_element() * scalar
    if tr != expected:
        raise VerificationFailed(f"partial trace identity fails at n={n}")
    return scalar


def check_defining_property(n: int, leading_color: Color = S) -> bool:
    a = jw_generic(n, leading_color).as_element()
    one = a.coeffs.get(identity_diagram(n))
    return one == RatFunc(1) and generators_annihilate(a, "left") and generators_annihilate(a, "right")


def check_idempotent(a: TLElement) -> bool:
    return element_mul(a, a) == a


def tau_partner_color(n: int, leading_color: Color) -> Color:
    # mirroring moves the rightmost region to the left; swapping colors then
    # gives the other color for even n and the same color for odd n
    return leading_color.swap() if n % 2 == 0 else leading_color


def valuation_audit(n: int, leading_color: Color = S) -> dict:
    """Check the cyclotomic valuation bound on every coefficient and the mirror symmetry."""
    c = leading_color
    jw = jw_generic(n, c)
    partner = jw_generic(n, tau_partner_color(n, c))
    minima: dict[tuple[int, str], int] = {}
    for d, f in jw.coefficients.items():
        for k in range(2, n + 2):
            for u in (Color.s, Color.t):
                v = cyclo_valuation(f, k, u)
                key = (k, u.value)
                minima[key] = min(minima.get(key, v), v)
                if v < -1:
                    raise VerificationFailed(f"valuation {v} < -1 at k={k}, u={u.value}, {d}")
                if v == -1:
                    ok = 1 < k <= n and (n + 1) % k != 0 and (k != 2 or u is c)
                    if not ok:
                        raise VerificationFailed(f"valuation -1 not allowed at k={k}, u={u.value}, {d}")
        mirrored = partner.coeff(tau_involute(d)).map(color_swap)
        if mirrored != f:
            raise VerificationFailed(f"mirror symmetry fails at {d}")
    return {"n": n, "leading_color": c.value, "coefficients": len(jw.coefficients),
            "min_valuation": {f"{k}{u}": v for (k, u), v in sorted(minima.items())}}
