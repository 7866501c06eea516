"""Two-colored Temperley-Lieb diagrams as noncrossing perfect matchings.

Boundary labels run around the rectangle: bottom points ``1..n`` left to
right, then top points ``n+1..2n`` right to left, so top position ``j``
(counted from the left) carries label ``2n+1-j``.  With this circular
labelling a matching is planar iff no two pairs interleave.

Diagrams carry no colors.  The region left of the first strand has the
algebra's leading color and colors alternate across strands, so every
color below is reported relative to a ``leading`` argument.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .qnum import Color, S


class IndexOutOfRange(IndexError):
    pass


class StrandMismatch(ValueError):
    pass


class InvalidDiagram(ValueError):
    pass


def _canon(pairs: Iterable[Iterable[int]]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(p), max(p)) for p in map(tuple, pairs)))


@dataclass(frozen=True)
class TLDiagram:
    n: int
    matching: tuple[tuple[int, int], ...]
    _partner: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        m = _canon(self.matching)
        object.__setattr__(self, "matching", m)
        size = 2 * self.n
        partner = [0] * (size + 1)
        for a, b in m:
            if not (1 <= a < b <= size) or partner[a] or partner[b]:
                raise InvalidDiagram(f"not a perfect matching on 1..{size}: {m}")
            partner[a], partner[b] = b, a
        if len(m) != self.n:
            raise InvalidDiagram(f"not a perfect matching on 1..{size}: {m}")
        for a, b in m:
            for c, d in m:
                if a < c < b < d:
                    raise InvalidDiagram(f"pairs {(a, b)} and {(c, d)} cross")
        object.__setattr__(self, "_partner", tuple(partner))

    @classmethod
    def _trusted(cls, n: int, pairs) -> "TLDiagram":
        # skips the crossing check; callers guarantee planarity
        d = object.__new__(cls)
        m = _canon(pairs)
        partner = [0] * (2 * n + 1)
        for a, b in m:
            partner[a], partner[b] = b, a
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "matching", m)
        object.__setattr__(d, "_partner", tuple(partner))
        return d

    def partner(self, label: int) -> int:
        return self._partner[label]

    def through_strands(self) -> int:
        return sum(1 for a, b in self.matching if a <= self.n < b)

    def is_identity(self) -> bool:
        return self == identity_diagram(self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "matching": [list(p) for p in self.matching]}

    @classmethod
    def from_json(cls, obj: dict) -> "TLDiagram":
        return cls(int(obj["n"]), tuple(tuple(p) for p in obj["matching"]))

    def __str__(self):
        return "{" + ",".join(f"{{{a},{b}}}" for a, b in self.matching) + "}"


@dataclass(frozen=True)
class LoopRecord:
    ambient_color: Color


def top_label(n: int, j: int) -> int:
    """Label of the top point at position j (1-based from the left)."""
    return 2 * n + 1 - j


@lru_cache(maxsize=None)
def identity_diagram(n: int) -> TLDiagram:
    """
    >>> identity_diagram(3).matching
    ((1, 6), (2, 5), (3, 4))
    """
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    return TLDiagram._trusted(n, [(i, 2 * n + 1 - i) for i in range(1, n + 1)])


def generator_diagram(i: int, n: int) -> TLDiagram:
    """The diagram of e_i: a cap on bottom i, i+1 and a cup on top positions i, i+1.

    >>> generator_diagram(2, 3).matching
    ((1, 6), (2, 3), (4, 5))
    """
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{n - 1}")
    pairs = [(i, i + 1), (2 * n - i, 2 * n - i + 1)]
    pairs += [(j, 2 * n + 1 - j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return TLDiagram._trusted(n, pairs)


def _matchings(labels: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not labels:
        yield []
        return
    first = labels[0]
    for k in range(1, len(labels), 2):
        for inner in _matchings(labels[1:k]):
            for outer in _matchings(labels[k + 1:]):
                yield [(first, labels[k])] + inner + outer


@lru_cache(maxsize=None)
def enumerate_diagrams(n: int) -> tuple[TLDiagram, ...]:
    """All Catalan(n) diagrams, sorted lexicographically by canonical matching."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    ds = [TLDiagram._trusted(n, m) for m in _matchings(tuple(range(1, 2 * n + 1)))]
    ds.sort(key=lambda d: d.matching)
    return tuple(ds)


def compose(top: TLDiagram, bottom: TLDiagram, leading: Color = S):
    """Stack ``top`` on ``bottom``; return ``(diagram, loops)``.

    A closed loop sits in the region left of its leftmost middle point, which
    has the leading color exactly when that position is odd.
    """
    n = top.n
    if bottom.n != n:
        raise StrandMismatch(f"cannot compose {top.n} strands with {bottom.n}")
    two_n = 2 * n
    tp, bp = top._partner, bottom._partner
    seen = [False] * (n + 1)

    def walk(in_top: bool, label: int) -> tuple[bool, int]:
        # follow a strand until it reaches an outer boundary point
        while True:
            if in_top:
                q = tp[label]
                if q > n:
                    return True, q
                seen[q] = True
                in_top, label = False, two_n + 1 - q
            else:
                q = bp[label]
                if q <= n:
                    return False, q
                seen[two_n + 1 - q] = True
                in_top, label = True, two_n + 1 - q

    uniq = set()
    for b in range(1, n + 1):
        _, end = walk(False, b)
        uniq.add((min(b, end), max(b, end)))
    for lbl in range(n + 1, two_n + 1):
        in_top, end = walk(True, lbl)
        if in_top:
            uniq.add((min(lbl, end), max(lbl, end)))
    loops = []
    for j in range(1, n + 1):
        if seen[j]:
            continue
        # a loop: trace it from middle position j, which is its leftmost point
        pos = j
        while True:
            seen[pos] = True
            q = tp[pos]  # top diagram, bottom side, label == position
            seen[q] = True
            nxt = bp[two_n + 1 - q]
            pos = two_n + 1 - nxt
            if pos == j:
                break
        loops.append(LoopRecord(leading if j % 2 == 1 else leading.swap()))
    return TLDiagram._trusted(n, uniq), loops


def compose_many(diagrams: Iterable[TLDiagram], leading: Color = S):
    """Compose left to right as a product ``d1 * d2 * ...`` (d1 on top)."""
    ds = list(diagrams)
    if not ds:
        raise ValueError("need at least one diagram")
    acc, loops = ds[0], []
    for d in ds[1:]:
        acc, more = compose(acc, d, leading)
        loops += more
    return acc, loops


def partial_trace_diagram(d: TLDiagram, leading: Color = S):
    """Close the rightmost strand around the right side; return ``(diagram, loop)``."""
    n = d.n
    if n < 1:
        raise IndexOutOfRange("partial trace needs n >= 1")
    p = d._partner
    if p[n] == n + 1:
        rest = [(a, b) for a, b in d.matching if (a, b) != (n, n + 1)]
        loop = LoopRecord(leading if n % 2 == 1 else leading.swap())
    else:
        a, b = p[n], p[n + 1]
        rest = [q for q in d.matching if n not in q and n + 1 not in q] + [(a, b)]
        loop = None

    def relabel(x: int) -> int:
        return x if x < n else x - 2

    return TLDiagram._trusted(n - 1, [(relabel(a), relabel(b)) for a, b in rest]), loop


def rotate_ccw(d: TLDiagram) -> TLDiagram:
    """Shift every label one step back; bottom point 1 becomes the top-left point."""
    n = d.n
    if n < 1:
        return d
    m = 2 * n
    return TLDiagram._trusted(n, [((a - 2) % m + 1, (b - 2) % m + 1) for a, b in d.matching])


def rotate_cw(d: TLDiagram) -> TLDiagram:
    n = d.n
    if n < 1:
        return d
    m = 2 * n
    return TLDiagram._trusted(n, [(a % m + 1, b % m + 1) for a, b in d.matching])


def tau_involute(d: TLDiagram) -> TLDiagram:
    """Mirror about the vertical axis; read the result with colors swapped."""
    n = d.n

    def f(x: int) -> int:
        return n + 1 - x if x <= n else 3 * n + 1 - x

    return TLDiagram._trusted(n, [(f(a), f(b)) for a, b in d.matching])


@dataclass(frozen=True)
class HalfDiagram:
    """A planar matching with ``bottom`` lower points and ``top`` upper points."""

    bottom: int
    top: int
    matching: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Cap:
    position: int
    color: Color
    deleted: TLDiagram


def fold_and_caps(d: TLDiagram, leading: Color = S):
    """Fold the top-right strand down and list every removable bottom cap.

    Folding keeps the circular labelling, so label ``n+1`` simply becomes the
    extra bottom point ``n+1`` of the half diagram.  The region under a cap at
    position ``i`` has the leading color iff ``i`` is even.
    """
    N = d.n
    if N < 1:
        raise IndexOutOfRange("fold needs at least one strand")
    dhat = HalfDiagram(N + 1, N - 1, d.matching)
    p = d._partner
    caps = []
    for i in range(1, N + 1):
        if p[i] == i + 1:
            rest = [q for q in d.matching if q != (i, i + 1)]
            shrink = [tuple(x if x < i else x - 2 for x in q) for q in rest]
            color = leading if i % 2 == 0 else leading.swap()
            caps.append(Cap(i, color, TLDiagram._trusted(N - 1, shrink)))
    return dhat, caps


def nested_cap_diagram(n: int, k: int) -> TLDiagram:
    """k nested caps at the bottom left, k nested cups at the top right."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"need 0 <= k <= n, got k={k}, n={n}")
    if 2 * k > n:
        k = n - k
    if k == 0:
        return identity_diagram(n)
    pairs = [(j, 2 * k + 1 - j) for j in range(1, k + 1)]
    pairs += [(n + j, n + 2 * k + 1 - j) for j in range(1, k + 1)]
    pairs += [(2 * k + j, 2 * n + 1 - j) for j in range(1, n - 2 * k + 1)]
    return TLDiagram._trusted(n, pairs)
