"""thinlab: a desk-scale laboratory for finitely generated integer matrix groups.

Exact arithmetic everywhere a mathematical claim depends on it; floating
point only inside the spectral solvers and SVG rendering.
"""

__version__ = "0.1.0"

from .intmat import IntMatrix, ModMatrix
from .words import GeneratorSet, Word, eval_word, words_up_to
from .finite_image import (
    ContainsResult,
    GroupImage,
    ImageVerdict,
    contains_mod,
    enumerate_image,
    is_prime,
    is_surjective,
    lift_to_integers,
    sl_order,
)
from .cayley import CayleyGraph, build_cayley
from .spectral import (
    EigensolverError,
    SpectralReport,
    lambda1_iterative,
    laplacian_spectrum_dense,
    spectral_scan,
)
from .closure import (
    ClosureCertificate,
    ClosureClass,
    FormSpace,
    classify,
    classify_sl2,
    classify_unipotent,
    density_certificate,
    form_signature,
    invariant_forms,
    spanning_dimension,
)
from .coset import CosetTable, coset_enumerate
from .probes import (
    ObstructionResult,
    ProbeConfig,
    Verdict,
    minus_I_obstruction,
    rewrite_in_ST,
    thinness_verdict,
)
from .packing import (
    InversiveCircle,
    PackingError,
    PackingOrbit,
    cluster_seeds,
    mirror_vectors,
    orbit_circles,
    reflection_vector,
    to_inversive,
)
from .catalog import CATALOG, CatalogEntry, catalog_checksum, get_entry, match_catalog

__all__ = [
    "IntMatrix", "ModMatrix", "GeneratorSet", "Word", "eval_word", "words_up_to",
    "GroupImage", "ImageVerdict", "ContainsResult", "enumerate_image",
    "is_surjective", "contains_mod", "lift_to_integers", "sl_order", "is_prime",
    "CayleyGraph", "build_cayley", "SpectralReport", "EigensolverError",
    "laplacian_spectrum_dense", "lambda1_iterative", "spectral_scan",
    "ClosureClass", "ClosureCertificate", "FormSpace", "invariant_forms",
    "form_signature", "spanning_dimension", "classify_unipotent",
    "density_certificate", "classify", "classify_sl2",
    "CosetTable", "coset_enumerate",
    "Verdict", "ProbeConfig", "ObstructionResult", "rewrite_in_ST",
    "minus_I_obstruction", "thinness_verdict",
    "InversiveCircle", "PackingOrbit", "PackingError", "reflection_vector",
    "to_inversive", "mirror_vectors", "cluster_seeds", "orbit_circles",
    "CATALOG", "CatalogEntry", "get_entry", "match_catalog", "catalog_checksum",
]
