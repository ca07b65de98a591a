"""Exact filtered (phi, N)-modules of semistable curves and abelian varieties.

Builds, in exact rational arithmetic, the graded Frobenius-monodromy module
on the first de Rham cohomology of a semistable curve (from its dual graph
and component Frobenius data) or of an abelian variety (from its rigid
uniformization data), and verifies the structural identities the two
constructions satisfy, including their agreement on Jacobians.
"""

from ._backend import BACKEND
from .builders import (
    CurveInstance,
    UniformizationData,
    build_from_av,
    build_from_curve,
    check_curve_jacobian_agreement,
    jacobian_data,
)
from .errors import GraphError, SchemaError, ValidationError, WeilValidationError
from .exact_linalg import (
    INFINITY,
    NewtonPolygon,
    QMatrix,
    Rational,
    char_poly,
    det,
    newton_polygon,
    padic_valuation,
    rank,
)
from .graph_core import CycleBasis, DualGraph, betti_one, cycle_basis, edge_pairing, monodromy_gram
from .laurent_calc import (
    LaurentForm,
    LaurentPolynomial,
    LogFunction,
    check_hypercocycle,
    integrate,
    residue,
    splitting_correction,
)
from .phin_module import (
    DualityPairing,
    PhiNModule,
    assemble,
    hodge_newton,
    modules_equal,
    monodromy_pairing_matrix,
    verify_monodromy_duality,
    verify_relations,
)
from .weil_data import (
    EllipticCurveSpec,
    WeilMatrix,
    count_points,
    direct_sum,
    frobenius_of_elliptic,
    validate_weil,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CurveInstance",
    "CycleBasis",
    "DualGraph",
    "DualityPairing",
    "EllipticCurveSpec",
    "GraphError",
    "INFINITY",
    "LaurentForm",
    "LaurentPolynomial",
    "LogFunction",
    "NewtonPolygon",
    "PhiNModule",
    "QMatrix",
    "Rational",
    "SchemaError",
    "UniformizationData",
    "ValidationError",
    "WeilMatrix",
    "WeilValidationError",
    "assemble",
    "betti_one",
    "build_from_av",
    "build_from_curve",
    "char_poly",
    "check_curve_jacobian_agreement",
    "check_hypercocycle",
    "count_points",
    "cycle_basis",
    "det",
    "direct_sum",
    "edge_pairing",
    "frobenius_of_elliptic",
    "hodge_newton",
    "integrate",
    "jacobian_data",
    "modules_equal",
    "monodromy_gram",
    "monodromy_pairing_matrix",
    "newton_polygon",
    "padic_valuation",
    "rank",
    "residue",
    "splitting_correction",
    "validate_weil",
    "verify_monodromy_duality",
    "verify_relations",
]
