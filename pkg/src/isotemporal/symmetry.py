"""Mirror, skewed mirror, rotational and skewed rotational symmetry of forms.

A reflection of the n-gon acts on edge indices as ``j -> s - j (mod n)``.
For even n, even ``s`` is the edge axis through ``e_{s/2}`` and odd ``s`` the
vertex axis through ``v_{(s+1)/2}``; axes are keyed by the smaller index.
For odd n every axis passes through one vertex and one edge and is keyed by
the vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import Footprint, PmForm, dihedral_images, negate_text, transform_text

MIRROR, SKEW = "mirror", "skew"


@dataclass(frozen=True)
class SymmetryProfile:
    n: int
    mirror_edge_axes: frozenset[int]
    skewed_mirror_edge_axes: frozenset[int]
    mirror_vertex_axes: frozenset[int]
    skewed_mirror_vertex_axes: frozenset[int]
    rotational_folds: frozenset[int]
    skewed_rotational_folds: frozenset[int]
    negation_isomorphic: bool

    @property
    def has_mirror(self) -> bool:
        return bool(self.mirror_edge_axes or self.mirror_vertex_axes)

    @property
    def has_skewed_mirror(self) -> bool:
        return bool(self.skewed_mirror_edge_axes or self.skewed_mirror_vertex_axes)

    @property
    def has_rotational(self) -> bool:
        return bool(self.rotational_folds)

    @property
    def has_skewed_rotational(self) -> bool:
        return bool(self.skewed_rotational_folds)

    @property
    def signature(self) -> tuple[bool, bool, bool, bool]:
        """(mirror, skewed mirror, rotational, skewed rotational)."""
        return (
            self.has_mirror,
            self.has_skewed_mirror,
            self.has_rotational,
            self.has_skewed_rotational,
        )

    @property
    def flags(self) -> str:
        return "".join(c if on else "-" for c, on in zip("MSRK", self.signature))

    @property
    def stabilizer_order(self) -> int:
        """Number of dihedral maps fixing the form."""
        rotations = max(self.rotational_folds, default=1)
        return rotations + len(self.mirror_edge_axes) + len(self.mirror_vertex_axes)

    def to_json(self) -> dict:
        # vertex mirror axes are always empty for valid forms and are not reported
        return {
            "mirror_edge_axes": sorted(self.mirror_edge_axes),
            "skewed_mirror_edge_axes": sorted(self.skewed_mirror_edge_axes),
            "skewed_mirror_vertex_axes": sorted(self.skewed_mirror_vertex_axes),
            "rotational_folds": sorted(self.rotational_folds),
            "skewed_rotational_folds": sorted(self.skewed_rotational_folds),
            "negation_isomorphic": self.negation_isomorphic,
        }


def _axis_key(s: int, n: int) -> tuple[str, int]:
    if n % 2:
        return "vertex", (s + 1) * (n + 1) // 2 % n
    if s % 2 == 0:
        return "edge", (s // 2) % (n // 2)
    return "vertex", ((s + 1) // 2) % (n // 2)


def reflection_axes(labels: str) -> list[tuple[int, str]]:
    """Symmetric reflections ``(s, kind)`` in increasing ``s``, which is also
    their angular order around the polygon."""
    n = len(labels)
    neg = negate_text(labels)
    out = []
    for s in range(n):
        image = transform_text(labels, s, True)
        if image == labels:
            out.append((s, MIRROR))
        elif image == neg:
            out.append((s, SKEW))
    return out


def _folds(labels: str, target: str) -> frozenset[int]:
    n = len(labels)
    return frozenset(
        d
        for d in range(2, n + 1)
        if n % d == 0 and all(labels[j] == target[(j + n // d) % n] for j in range(n))
    )


def _negation_isomorphic(labels: str) -> bool:
    neg = negate_text(labels)
    return any(image == neg for image in dihedral_images(labels))


def detect_symmetries(p: PmForm) -> SymmetryProfile:
    labels, n = p.labels, p.n
    axes: dict[tuple[str, str], set[int]] = {
        (kind, place): set() for kind in (MIRROR, SKEW) for place in ("edge", "vertex")
    }
    for s, kind in reflection_axes(labels):
        place, key = _axis_key(s, n)
        axes[kind, place].add(key)
    return SymmetryProfile(
        n=n,
        mirror_edge_axes=frozenset(axes[MIRROR, "edge"]),
        skewed_mirror_edge_axes=frozenset(axes[SKEW, "edge"]),
        mirror_vertex_axes=frozenset(axes[MIRROR, "vertex"]),
        skewed_mirror_vertex_axes=frozenset(axes[SKEW, "vertex"]),
        rotational_folds=_folds(labels, labels),
        skewed_rotational_folds=_folds(labels, negate_text(labels)),
        negation_isomorphic=_negation_isomorphic(labels),
    )


def is_negation_isomorphic(p: PmForm) -> bool:
    """True iff some rotation or reflection carries ``p`` onto its negation."""
    return _negation_isomorphic(p.labels)


def _bits(fp: Footprint) -> str:
    return "".join("1" if i in fp.positions else "0" for i in range(fp.n))


def footprint_rotational_folds(fp: Footprint) -> frozenset[int]:
    s = _bits(fp)
    return _folds(s, s)


def footprint_has_reflection(fp: Footprint) -> bool:
    s = _bits(fp)
    return any(transform_text(s, k, True) == s for k in range(fp.n))
