"""Directed line graphs of n-gons and their plus-minus forms.

Edges are indexed 0..n-1 internally (``e_i = {v_i, v_{i+1}}``). A form is kept
as a string over ``+``, ``-`` and ``0``; ASCII order happens to be
``+ < - < 0``, which is the order used for canonical representatives, so
plain string comparison does the right thing.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import AlternationViolated, InvalidFootprint, InvalidSymbol, NoPlus, TooShort
from .tempnet import NGon

PLUS, MINUS, ZERO = "+", "-", "0"
_NEGATE = str.maketrans("+-", "-+")
_UNICODE_MINUS = str.maketrans({"−": "-", "–": "-"})


@dataclass(frozen=True)
class CycleOrientation:
    """``bits[i]`` is True iff edge i is earlier than edge i+1 (mod n)."""

    bits: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.bits) < 3:
            raise TooShort("orientation needs n >= 3")
        if all(self.bits) or not any(self.bits):
            raise ValueError("all-equal orientation is a directed cycle; not realizable")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> CycleOrientation:
        return cls(tuple(bool(mask >> i & 1) for i in range(n)))

    def to_mask(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b)


@dataclass(frozen=True, order=True)
class PmForm:
    labels: str

    @property
    def n(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return self.labels

    def __getitem__(self, i: int) -> str:
        return self.labels[i % len(self.labels)]

    @classmethod
    def parse(cls, text: str) -> PmForm:
        return validate_pm(text)


@dataclass(frozen=True)
class Footprint:
    n: int
    positions: frozenset[int]

    def __post_init__(self) -> None:
        if any(not 0 <= p < self.n for p in self.positions):
            raise InvalidFootprint("footprint position out of range")
        k = len(self.positions)
        if k < 2 or k % 2:
            raise InvalidFootprint(f"footprint size must be even and >= 2, got {k}")

    def to_mask(self) -> int:
        return sum(1 << p for p in self.positions)


def validate_pm(labels: str | Iterable[str]) -> PmForm:
    """Check a symbol sequence against the plus-minus form invariants.

    Raises TooShort, InvalidSymbol, NoPlus or AlternationViolated (in that order
    of precedence).
    """
    text = "".join(labels).translate(_UNICODE_MINUS)
    if len(text) < 3:
        raise TooShort(f"a form needs at least 3 edges, got {len(text)}")
    bad = set(text) - {PLUS, MINUS, ZERO}
    if bad:
        raise InvalidSymbol(f"unexpected symbols {''.join(sorted(bad))!r}")
    if PLUS not in text:
        raise NoPlus("a form must contain at least one '+'")
    nonzero = [c for c in text if c != ZERO]
    # cyclic alternation; an odd count necessarily repeats a symbol somewhere
    for a, b in zip(nonzero, nonzero[1:] + nonzero[:1]):
        if a == b:
            raise AlternationViolated(f"two {a!r} labels without the other sign between")
    return PmForm(text)


def line_graph_orientation(g: NGon) -> CycleOrientation:
    r, n = g.ranks, g.n
    return CycleOrientation(tuple(r[i] < r[(i + 1) % n] for i in range(n)))


def pm_from_mask(mask: int, n: int) -> str:
    """Plus-minus labels for an orientation given as an n-bit mask."""
    full = (1 << n) - 1
    before = ((mask << 1) | (mask >> (n - 1))) & full  # bit a = bit a-1 of mask
    plus = before & ~mask
    minus = ~before & mask & full
    return "".join(
        PLUS if plus >> a & 1 else MINUS if minus >> a & 1 else ZERO for a in range(n)
    )


def pm_from_orientation(o: CycleOrientation) -> PmForm:
    """A peak (both arrows in) is '+', a trough (both out) is '-', else '0'."""
    return PmForm(pm_from_mask(o.to_mask(), o.n))


def orientation_from_pm(p: PmForm) -> CycleOrientation:
    # walking forward, edges climb after a '-' until the next '+'
    n, s = p.n, p.labels
    start = s.index(PLUS)
    bits = [False] * n
    rising = False
    for k in range(n):
        a = (start + k) % n
        if s[a] == PLUS:
            rising = False
        elif s[a] == MINUS:
            rising = True
        bits[a] = rising
    return CycleOrientation(tuple(bits))


def footprint_of(p: PmForm) -> Footprint:
    return Footprint(p.n, frozenset(i for i, c in enumerate(p.labels) if c != ZERO))


def realize_labeling(p: PmForm, names: Sequence[str] | None = None) -> NGon:
    """A rank labeling whose plus-minus form is ``p``.

    Ranks are handed out by a topological sort of the arrow constraints that
    always takes the lowest-index available edge, i.e. the lexicographically
    smallest linear extension.
    """
    n = p.n
    bits = orientation_from_pm(p).bits
    preds = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, earlier in enumerate(bits):
        j = (i + 1) % n
        lo, hi = (i, j) if earlier else (j, i)
        succ[lo].append(hi)
        preds[hi] += 1
    ready = [i for i in range(n) if preds[i] == 0]
    heapq.heapify(ready)
    ranks = [0] * n
    rank = 0
    while ready:
        i = heapq.heappop(ready)
        rank += 1
        ranks[i] = rank
        for j in succ[i]:
            preds[j] -= 1
            if preds[j] == 0:
                heapq.heappush(ready, j)
    return NGon.from_ranks(ranks, names)


def transform_text(s: str, rot: int, reflect: bool) -> str:
    n = len(s)
    if reflect:
        # new[i] = s[(rot - i) % n]
        r = s[::-1]
        k = (n - 1 - rot) % n
        return r[k:] + r[:k]
    k = rot % n
    return s[k:] + s[:k]


def dihedral_transform(p: PmForm, rot: int, reflect: bool) -> PmForm:
    if not 0 <= rot < p.n:
        raise ValueError(f"rotation must lie in 0..{p.n - 1}")
    return PmForm(transform_text(p.labels, rot, reflect))


def dihedral_images(s: str) -> Iterator[str]:
    """All 2n images of a string: rotations 0..n-1, then reflections 0..n-1."""
    n = len(s)
    ss = s + s
    for k in range(n):
        yield ss[k : k + n]
    r = s[::-1]
    rr = r + r
    for rot in range(n):
        k = (n - 1 - rot) % n
        yield rr[k : k + n]


def negate_text(s: str) -> str:
    return s.translate(_NEGATE)


def negate(p: PmForm) -> PmForm:
    return PmForm(negate_text(p.labels))


def canonical_text(s: str) -> str:
    n = len(s)
    ss = s + s
    r = s[::-1]
    rr = r + r
    return min(min(ss[k : k + n] for k in range(n)), min(rr[k : k + n] for k in range(n)))


def canonical_pm(p: PmForm) -> PmForm:
    """Lexicographic minimum (``+ < - < 0``) over the dihedral orbit."""
    return PmForm(canonical_text(p.labels))


def all_forms(n: int) -> Iterator[PmForm]:
    """Every valid form of size n, in orientation-mask order."""
    for mask in range(1, (1 << n) - 1):
        yield PmForm(pm_from_mask(mask, n))
