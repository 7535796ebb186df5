"""Exact counting and enumeration of isotemporal classes of temporal n-gons."""

from .counting import (
    binary_necklace_count,
    burnside_class_count,
    burnside_footprint_count,
    divisors,
    footprint_count,
    isotemporal_class_count,
    mirror_footprint_count,
    skewed_rotational_form_count,
    totient,
)
from .enumeration import (
    ClassCensus,
    brute_force_class_count_via_labelings,
    enumerate_footprints,
    enumerate_pm_classes,
    verify,
)
from .forms import (
    CycleOrientation,
    Footprint,
    PmForm,
    canonical_pm,
    dihedral_transform,
    footprint_of,
    line_graph_orientation,
    negate,
    orientation_from_pm,
    pm_from_orientation,
    realize_labeling,
    validate_pm,
)
from .symmetry import (
    SymmetryProfile,
    detect_symmetries,
    footprint_has_reflection,
    footprint_rotational_folds,
    is_negation_isomorphic,
)
from .tempnet import (
    NGon,
    TemporalNetwork,
    find_temporal_isomorphism,
    is_temporal_isomorphism,
    is_temporal_path,
    temporal_reachable_set,
    validate_network,
)

__version__ = "0.1.0"
