"""Brute-force censuses used to check the closed formulas.

Nothing here depends on :mod:`isotemporal.counting`; the two only meet in
:func:`verify`.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from . import counting
from .errors import CapExceeded
from .forms import PmForm, canonical_text, pm_from_mask
from .symmetry import SymmetryProfile, detect_symmetries
from .tempnet import NGon

DEFAULT_CAP = 20
LABELING_CAP = 8
FOOTPRINT_CAP = 24

Signature = tuple[bool, bool, bool, bool]


@dataclass(frozen=True)
class ClassInfo:
    form: PmForm
    orbit_size: int
    profile: SymmetryProfile


@dataclass(frozen=True)
class ClassCensus:
    n: int
    classes: tuple[ClassInfo, ...]
    total_forms: int
    by_symmetry_combination: dict[Signature, int] = field(compare=False)

    def __len__(self) -> int:
        return len(self.classes)


def _sweep(n: int, lo: int, hi: int) -> dict[str, int]:
    counts: dict[str, int] = {}
    for mask in range(max(lo, 1), min(hi, (1 << n) - 1)):
        key = canonical_text(pm_from_mask(mask, n))
        counts[key] = counts.get(key, 0) + 1
    return counts


def _partitions(n: int, parts: int) -> list[tuple[int, int]]:
    lead = max(0, min(n, (parts - 1).bit_length()))
    step = 1 << (n - lead)
    return [(k * step, (k + 1) * step) for k in range(1 << lead)]


def enumerate_pm_classes(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> ClassCensus:
    """Sweep all 2^n - 2 orientations, bucket their forms by canonical
    representative and attach a symmetry profile to each class.

    With ``workers > 1`` the sweep is split on the leading mask bits and run in
    worker processes; the merged result does not depend on the split.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")
    if workers > 1:
        chunks = _partitions(n, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep, [n] * len(chunks), *zip(*chunks)))
    else:
        parts = [_sweep(n, 0, 1 << n)]
    merged: Counter[str] = Counter()
    for part in parts:
        merged.update(part)
    classes = []
    combos: Counter[Signature] = Counter()
    for key in sorted(merged):
        form = PmForm(key)
        profile = detect_symmetries(form)
        classes.append(ClassInfo(form, merged[key], profile))
        combos[profile.signature] += 1
    return ClassCensus(
        n=n,
        classes=tuple(classes),
        total_forms=sum(merged.values()),
        by_symmetry_combination=dict(combos),
    )


def _run_key(n: int, runs: list[tuple[int, ...]]) -> tuple:
    best = None
    for k in range(n):
        for flip in (False, True):
            image = tuple(
                sorted(tuple((k - v) % n if flip else (v + k) % n for v in run) for run in runs)
            )
            if best is None or image < best:
                best = image
    return best


def brute_force_class_count_via_labelings(n: int, cap: int = LABELING_CAP) -> int:
    """Count classes directly from all n! rank labelings of the n-gon.

    Each labeling is reduced to its maximal temporal paths (vertex tuples), and
    two labelings are grouped together when some rotation or reflection of the
    vertices carries one path set exactly onto the other. No plus-minus
    machinery is involved.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the labeling oracle cap {cap}")
    names = [str(i) for i in range(n)]
    keys = set()
    for ranks in permutations(range(1, n + 1)):
        runs = NGon(tuple(names), ranks).maximal_runs()
        keys.add(_run_key(n, [tuple(int(v) for v in run) for run in runs]))
    return len(keys)


@dataclass(frozen=True)
class FootprintOrbits:
    n: int
    mode: str
    count: int
    representatives: tuple[tuple[int, ...], ...]


def enumerate_footprints(
    n: int, mode: str = "rotation", cap: int = FOOTPRINT_CAP
) -> FootprintOrbits:
    """Orbits of nonempty even-size subsets of Z_n.

    ``mode`` is ``"rotation"`` (cyclic group) or ``"dihedral"`` (rotations and
    reflections). Representatives are the numerically smallest masks.
    """
    if mode not in ("rotation", "dihedral"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the footprint cap {cap}")
    full = (1 << n) - 1

    def rev(m: int) -> int:
        return int(format(m, f"0{n}b")[::-1], 2)

    reps = []
    for mask in range(1, 1 << n):
        if mask.bit_count() % 2:
            continue
        images = [((mask >> k) | (mask << (n - k))) & full for k in range(n)]
        if mode == "dihedral":
            r = rev(mask)
            images += [((r >> k) | (r << (n - k))) & full for k in range(n)]
        if mask == min(images):
            reps.append(tuple(i for i in range(n) if mask >> i & 1))
    return FootprintOrbits(n, mode, len(reps), tuple(reps))


def _footprint_text(form: PmForm) -> str:
    return "".join("0" if c == "0" else "1" for c in form.labels)


def mirror_footprint_census(census: ClassCensus) -> int:
    """Distinct footprints, up to rotation and reflection, carried by some form
    with a mirror axis."""
    return len(
        {canonical_text(_footprint_text(c.form)) for c in census.classes if c.profile.has_mirror}
    )


def skewed_rotational_class_census(census: ClassCensus) -> int:
    return sum(1 for c in census.classes if c.profile.has_skewed_rotational)


def skew_reflective_class_census(census: ClassCensus) -> int:
    return sum(
        1
        for c in census.classes
        if c.profile.has_skewed_rotational
        and (c.profile.has_mirror or c.profile.has_skewed_mirror)
    )


def classes_per_footprint(census: ClassCensus) -> dict[str, list[ClassInfo]]:
    groups: dict[str, list[ClassInfo]] = {}
    for c in census.classes:
        groups.setdefault(canonical_text(_footprint_text(c.form)), []).append(c)
    return groups


@dataclass(frozen=True)
class CheckResult:
    n: int
    check: str
    formula: int
    oracle: int

    @property
    def passed(self) -> bool:
        return self.formula == self.oracle

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "check": self.check,
            "formula": str(self.formula),
            "oracle": str(self.oracle),
            "pass": self.passed,
        }


def verify(ns: Iterable[int], cap: int = DEFAULT_CAP, workers: int = 1) -> list[CheckResult]:
    """Compare every closed formula with its enumeration oracle for each n.

    Failures are returned as report entries; nothing is raised for them.
    """
    report = []
    for n in ns:
        census = enumerate_pm_classes(n, cap=max(cap, n), workers=workers)
        report.append(CheckResult(n, "census_total", census.total_forms, 2**n - 2))
        report.append(
            CheckResult(n, "class_count", counting.isotemporal_class_count(n), len(census))
        )
        report.append(
            CheckResult(
                n,
                "footprint_count",
                counting.footprint_count(n),
                enumerate_footprints(n, "rotation", cap=max(FOOTPRINT_CAP, n)).count,
            )
        )
        if n % 2 == 0:
            report.append(
                CheckResult(
                    n,
                    "mirror_footprint_count",
                    counting.mirror_footprint_count(n),
                    mirror_footprint_census(census),
                )
            )
            report.append(
                CheckResult(
                    n,
                    "skewed_rotational_form_count",
                    counting.skewed_rotational_form_count(n),
                    skewed_rotational_class_census(census),
                )
            )
        if n <= LABELING_CAP:
            report.append(
                CheckResult(
                    n,
                    "labeling_oracle",
                    counting.isotemporal_class_count(n),
                    brute_force_class_count_via_labelings(n),
                )
            )
    return report
