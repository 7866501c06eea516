"""Elements of the two-colored Temperley-Lieb algebra over a coefficient ring."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping

from .diagram import (
    TLDiagram,
    compose,
    enumerate_diagrams,
    generator_diagram,
    identity_diagram,
    partial_trace_diagram,
)
from .qnum import Color, S
from .rings import Ring, Specialization, UnsupportedRing, parse_ring


class ContextMismatch(ValueError):
    pass


class NonUniqueSolution(ArithmeticError):
    pass


@dataclass(frozen=True)
class AlgebraContext:
    """Strand count, leading color, ring and the images of [2]_s, [2]_t."""

    n: int
    leading_color: Color
    ring: Ring
    two_s: Any
    two_t: Any

    def __post_init__(self):
        self.ring._check(self.two_s, self.two_t)

    @classmethod
    def from_specialization(cls, n: int, leading: Color, sp: Specialization) -> "AlgebraContext":
        # [2]_s = x_s and [2]_t = x_t
        return cls(n, leading, sp.ring, sp.image_s, sp.image_t)

    @classmethod
    def generic(cls, n: int, leading: Color = S) -> "AlgebraContext":
        return cls.from_specialization(n, leading, Specialization.generic())

    def with_n(self, n: int) -> "AlgebraContext":
        return AlgebraContext(n, self.leading_color, self.ring, self.two_s, self.two_t)

    def with_leading(self, c: Color) -> "AlgebraContext":
        return AlgebraContext(self.n, c, self.ring, self.two_s, self.two_t)

    def loop_value(self, color: Color):
        two = self.two_s if color is Color.s else self.two_t
        return self.ring._neg(two)

    def header(self) -> dict:
        R = self.ring
        return {
            "n": self.n,
            "leading_color": self.leading_color.value,
            "ring": R.describe(),
            "two_s": R.to_json(self.two_s),
            "two_t": R.to_json(self.two_t),
        }


class TLElement:
    """A finite linear combination of diagrams; zero coefficients are dropped."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: AlgebraContext, coeffs: Mapping[TLDiagram, Any] | None = None):
        R = context.ring
        clean = {}
        for d, v in (coeffs or {}).items():
            if d.n != context.n:
                raise ContextMismatch(f"diagram on {d.n} strands in a {context.n}-strand algebra")
            R._check(v)
            if not R.is_zero(v):
                clean[d] = v
        self.context = context
        self.coeffs = clean

    @classmethod
    def _raw(cls, context, coeffs):
        e = object.__new__(cls)
        e.context = context
        e.coeffs = coeffs
        return e

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "TLElement":
        return cls._raw(ctx, {})

    @classmethod
    def identity(cls, ctx: AlgebraContext) -> "TLElement":
        return cls._raw(ctx, {identity_diagram(ctx.n): ctx.ring.one()})

    @classmethod
    def generator(cls, ctx: AlgebraContext, i: int) -> "TLElement":
        return cls._raw(ctx, {generator_diagram(i, ctx.n): ctx.ring.one()})

    @classmethod
    def basis(cls, ctx: AlgebraContext, d: TLDiagram) -> "TLElement":
        return cls(ctx, {d: ctx.ring.one()})

    # -- inspection -------------------------------------------------------
    def terms(self) -> list[tuple[TLDiagram, Any]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].matching)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __repr__(self):
        R = self.context.ring
        body = " + ".join(f"({R.format(v)})*{d}" for d, v in self.terms()) or "0"
        return f"TLElement[{self.context.n}, {self.context.leading_color.value}, {R}]({body})"

    # -- arithmetic -------------------------------------------------------
    def _same(self, other: "TLElement"):
        if self.context != other.context:
            raise ContextMismatch("elements live in different algebras")

    def __add__(self, other):
        return element_add(self, other)

    def __sub__(self, other):
        return element_add(self, element_scale(self.context.ring.from_int(-1), other))

    def __neg__(self):
        return element_scale(self.context.ring.from_int(-1), self)

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return element_mul(self, other)
        return element_scale(other, self)

    def __rmul__(self, other):
        return element_scale(other, self)

    def map_coeffs(self, f, context: AlgebraContext | None = None) -> "TLElement":
        ctx = context or self.context
        return TLElement(ctx, {d: f(v) for d, v in self.coeffs.items()})

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        R = self.context.ring
        return {
            "context": self.context.header(),
            "terms": [{"diagram": d.to_json(), "coefficient": R.to_json(v)} for d, v in self.terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TLElement":
        h = obj["context"]
        R = parse_ring(h["ring"])
        ctx = AlgebraContext(int(h["n"]), Color(h["leading_color"]), R,
                             R.from_json(h["two_s"]), R.from_json(h["two_t"]))
        return cls(ctx, {TLDiagram.from_json(t["diagram"]): R.from_json(t["coefficient"])
                         for t in obj["terms"]})


def element_add(a: TLElement, b: TLElement) -> TLElement:
    a._same(b)
    R = a.context.ring
    out = dict(a.coeffs)
    for d, v in b.coeffs.items():
        if d in out:
            w = R._add(out[d], v)
            if R.is_zero(w):
                del out[d]
            else:
                out[d] = w
        else:
            out[d] = v
    return TLElement._raw(a.context, out)


def element_scale(c, a: TLElement) -> TLElement:
    R = a.context.ring
    if isinstance(c, int) and not R.contains(c):
        c = R.from_int(c)
    R._check(c)
    if R.is_zero(c):
        return TLElement.zero(a.context)
    out = {}
    for d, v in a.coeffs.items():
        w = R._mul(c, v)
        if not R.is_zero(w):
            out[d] = w
    return TLElement._raw(a.context, out)


def element_mul(a: TLElement, b: TLElement) -> TLElement:
    """Product ``a*b`` with ``a`` stacked on top of ``b``."""
    a._same(b)
    ctx = a.context
    R = ctx.ring
    lead = ctx.leading_color
    loop_val = {Color.s: ctx.loop_value(Color.s), Color.t: ctx.loop_value(Color.t)}
    acc: dict[TLDiagram, Any] = {}
    for da, va in a.terms():
        for db, vb in b.terms():
            d, loops = compose(da, db, lead)
            v = R._mul(va, vb)
            for lp in loops:
                v = R._mul(v, loop_val[lp.ambient_color])
            acc[d] = R._add(acc[d], v) if d in acc else v
    return TLElement._raw(ctx, {d: v for d, v in acc.items() if not R.is_zero(v)})


def coeff_of(a: TLElement, d: TLDiagram):
    if d.n != a.context.n:
        raise ContextMismatch(f"diagram on {d.n} strands in a {a.context.n}-strand algebra")
    return a.coeffs.get(d, a.context.ring.zero())


def partial_trace(a: TLElement) -> TLElement:
    """Linear extension of the diagram partial trace; the leading color is kept."""
    ctx = a.context
    R = ctx.ring
    new_ctx = ctx.with_n(ctx.n - 1)
    acc: dict[TLDiagram, Any] = {}
    for d, v in a.terms():
        e, loop = partial_trace_diagram(d, ctx.leading_color)
        if loop is not None:
            v = R._mul(v, ctx.loop_value(loop.ambient_color))
        acc[e] = R._add(acc[e], v) if e in acc else v
    return TLElement._raw(new_ctx, {d: v for d, v in acc.items() if not R.is_zero(v)})


def generators_annihilate(a: TLElement, side: str = "left") -> bool:
    """Whether e_i*a (or a*e_i) vanishes for every generator."""
    ctx = a.context
    for i in range(1, ctx.n):
        g = TLElement.generator(ctx, i)
        prod = g * a if side == "left" else a * g
        if not prod.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# linear-algebra oracle
# ---------------------------------------------------------------------------

def _annihilator_rows(ctx: AlgebraContext, basis: Iterable[TLDiagram]):
    R = ctx.ring
    lead = ctx.leading_color
    loop_val = {Color.s: ctx.loop_value(Color.s), Color.t: ctx.loop_value(Color.t)}
    rows: dict[tuple[int, TLDiagram], dict[TLDiagram, Any]] = {}
    for i in range(1, ctx.n):
        g = generator_diagram(i, ctx.n)
        for d in basis:
            e, loops = compose(g, d, lead)
            v = R.one()
            for lp in loops:
                v = R._mul(v, loop_val[lp.ambient_color])
            row = rows.setdefault((i, e), {})
            row[d] = R._add(row[d], v) if d in row else v
    return [r for r in rows.values()]


def annihilator_solve(ctx: AlgebraContext) -> TLElement | None:
    """Solve e_i*f = 0 for all i together with coeff(identity) = 1.

    Returns the unique solution, or None when the system is inconsistent.
    Only field coefficient rings are accepted.
    """
    R = ctx.ring
    if not R.is_field:
        raise UnsupportedRing(f"{R} is not a field; exact linear solving is unavailable")
    basis = enumerate_diagrams(ctx.n)
    ident = identity_diagram(ctx.n)
    # unknowns with more through strands first, so the identity is eliminated early
    order = sorted(basis, key=lambda d: (-d.through_strands(), d.matching))
    col = {d: k for k, d in enumerate(order)}
    RHS = len(order)
    zero = R.zero()

    system = []
    for row in _annihilator_rows(ctx, basis):
        r = {col[d]: v for d, v in row.items() if not R.is_zero(v)}
        if r:
            system.append(r)
    system.append({col[ident]: R.one(), RHS: R.one()})

    pivots: dict[int, dict[int, Any]] = {}
    pending = sorted(system, key=len)
    for r in pending:
        r = dict(r)
        while True:
            lead_cols = [c for c in r if c != RHS]
            if not lead_cols:
                if RHS in r and not R.is_zero(r[RHS]):
                    return None
                break
            c0 = min(lead_cols)
            if c0 in pivots:
                factor = r[c0]
                for c, v in pivots[c0].items():
                    w = R._add(r.get(c, zero), R._neg(R._mul(factor, v)))
                    if R.is_zero(w):
                        r.pop(c, None)
                    else:
                        r[c] = w
                continue
            inv = R.inverse(r[c0])
            pivots[c0] = {c: R._mul(inv, v) for c, v in r.items()}
            break

    if len(pivots) < len(order):
        raise NonUniqueSolution(f"annihilator system has {len(order) - len(pivots)} free unknowns")
    sol: dict[int, Any] = {}
    for c0 in sorted(pivots, reverse=True):
        row = pivots[c0]
        v = row.get(RHS, zero)
        for c, a in row.items():
            if c != c0 and c != RHS:
                v = R._add(v, R._neg(R._mul(a, sol[c])))
        sol[c0] = v
    return TLElement._raw(ctx, {order[c]: v for c, v in sol.items() if not R.is_zero(v)})


def generic_context(n: int, leading: Color = S) -> AlgebraContext:
    return AlgebraContext.generic(n, leading)

