"""spectile: exact spectral-set and tiling decisions on Z_p^2 x Z_q."""

from ._version import __version__
from .charsums import (
    CoefficientMatrix,
    CosetDecomposition,
    NotVanishingError,
    char_coeff_matrix,
    equidistributed,
    lam_leung,
    numeric_char_sum,
    project,
    vanishes,
    zero_set,
)
from .group import (
    AffineMap,
    Element,
    EqualPrimesError,
    GroupSpec,
    Multiset,
    NotPrimeError,
    SubsetMask,
    SymmetryGroupTooLargeError,
    apply_map,
    cyclic_subgroup,
    difference_multiset,
    difference_set,
    enumerate_affine_maps,
    inner_p,
    is_subgroup,
    make_group,
    span,
)
from .spectral import (
    NoSpectrum,
    SpectralCertificate,
    find_spectrum,
    is_spectral,
    subgroup_complement_spectrum,
    verify_spectral_pair,
)
from .tiling import (
    NoComplement,
    NotASubgroupError,
    NotATilingError,
    TilingCertificate,
    find_complement,
    is_tile,
    subgroup_complement,
    verify_tiling,
)
from .verify import (
    ConjectureReport,
    ExhaustiveMode,
    GroupTooLargeForExhaustiveError,
    PropertyReport,
    SampledMode,
    SizeClass,
    canonical_form,
    direction_coverage,
    enumerate_representatives,
    lemma_suite,
    size_class,
    verify_conjecture,
)

__all__ = [
    "__version__",
    "AffineMap",
    "CoefficientMatrix",
    "ConjectureReport",
    "CosetDecomposition",
    "Element",
    "EqualPrimesError",
    "ExhaustiveMode",
    "GroupSpec",
    "GroupTooLargeForExhaustiveError",
    "Multiset",
    "NoComplement",
    "NoSpectrum",
    "NotASubgroupError",
    "NotATilingError",
    "NotPrimeError",
    "NotVanishingError",
    "PropertyReport",
    "SampledMode",
    "SizeClass",
    "SpectralCertificate",
    "SubsetMask",
    "SymmetryGroupTooLargeError",
    "TilingCertificate",
    "apply_map",
    "canonical_form",
    "char_coeff_matrix",
    "cyclic_subgroup",
    "difference_multiset",
    "difference_set",
    "direction_coverage",
    "enumerate_affine_maps",
    "enumerate_representatives",
    "equidistributed",
    "find_complement",
    "find_spectrum",
    "inner_p",
    "is_spectral",
    "is_subgroup",
    "is_tile",
    "lam_leung",
    "lemma_suite",
    "make_group",
    "numeric_char_sum",
    "project",
    "size_class",
    "span",
    "subgroup_complement",
    "subgroup_complement_spectrum",
    "vanishes",
    "verify_conjecture",
    "verify_spectral_pair",
    "verify_tiling",
    "zero_set",
]
