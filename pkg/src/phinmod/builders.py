"""The two construction pipelines and their agreement check.

Curve side: a dual graph with per-component Frobenius sources yields a
module whose toric data is the cycle-space Gram matrix and whose weight-1
block is the direct sum of the component matrices.  Abelian-variety side:
torus rank, lattice Gram matrix and good-reduction Frobenius are taken as
given (the uniformization data).  For a Jacobian the two routes must agree
on the nose, because both deterministically fix the same basis: component
blocks in ascending vertex-id order, cycles in ascending non-tree-edge
order.  ``check_curve_jacobian_agreement`` turns that statement into a
regression test of all the bookkeeping in between.
"""

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import ValidationError
from .exact_linalg import QMatrix, is_prime
from .graph_core import DualGraph, betti_one, cycle_basis, edge_pairing, monodromy_gram
from .phin_module import PhiNModule, assemble, modules_equal
from .weil_data import (
    DEFAULT_POINT_BOUND,
    EllipticCurveSpec,
    WeilMatrix,
    direct_sum,
    frobenius_of_elliptic,
    validate_weil,
)

# A component Frobenius source is one of:
#   None                 -- genus-0 component (empty block)
#   EllipticCurveSpec    -- genus-1 component, counted over F_p (f = 1 only)
#   QMatrix / row list   -- explicit integer Weil-q matrix of size 2*genus


@dataclass(frozen=True)
class CurveInstance:
    """Semistable curve datum: dual graph plus component Frobenius sources."""

    graph: DualGraph
    components: Mapping
    p: int
    f: int = 1

    def __post_init__(self):
        object.__setattr__(self, "components", MappingProxyType(dict(self.components)))
        if not is_prime(self.p):
            raise ValidationError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValidationError("f must be >= 1")
        vids = {v.id for v in self.graph.vertices}
        missing = vids - set(self.components)
        if missing:
            raise ValidationError(f"no component source for vertices {sorted(missing)}")
        extra = set(self.components) - vids
        if extra:
            raise ValidationError(f"component sources for unknown vertices {sorted(extra)}")
        for v in self.graph.vertices:
            src = self.components[v.id]
            if src is None:
                if v.genus != 0:
                    raise ValidationError(
                        f"vertex {v.id} has genus {v.genus} but a genus-0 source"
                    )
            elif isinstance(src, EllipticCurveSpec):
                if v.genus != 1:
                    raise ValidationError(
                        f"vertex {v.id} has genus {v.genus} but an elliptic source"
                    )
                if src.p != self.p or self.f != 1:
                    raise ValidationError(
                        f"elliptic source of vertex {v.id} lives over F_{src.p}, "
                        f"instance is at q = {self.p}^{self.f}"
                    )
            else:
                m = src if isinstance(src, QMatrix) else QMatrix.from_rows(src)
                if m.rows != 2 * v.genus:
                    raise ValidationError(
                        f"vertex {v.id} has genus {v.genus} but a "
                        f"{m.rows}x{m.cols} matrix source"
                    )


def resolve_component(src, p: int, f: int, bound: int = DEFAULT_POINT_BOUND) -> WeilMatrix:
    """Turn a component source into validated Weil data at q = p^f."""
    if src is None:
        return validate_weil(QMatrix(0, 0, ()), p, f)
    if isinstance(src, EllipticCurveSpec):
        return frobenius_of_elliptic(src, bound)
    return validate_weil(src, p, f)


def component_sum(c: CurveInstance, bound: int = DEFAULT_POINT_BOUND) -> WeilMatrix:
    """Direct sum of the component Frobenius blocks, vertex ids ascending."""
    blocks = [
        resolve_component(c.components[v.id], c.p, c.f, bound)
        for v in sorted(c.graph.vertices, key=lambda v: v.id)
    ]
    return direct_sum(blocks, c.p, c.f)


@dataclass(frozen=True)
class UniformizationData:
    """Abelian-variety datum: torus rank, lattice Gram matrix, and the
    good-reduction part's Frobenius."""

    torus_rank: int
    gram: QMatrix
    b_frobenius: WeilMatrix
    p: int
    f: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValidationError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValidationError("f must be >= 1")
        if (self.gram.rows, self.gram.cols) != (self.torus_rank, self.torus_rank):
            raise ValidationError(
                f"gram is {self.gram.rows}x{self.gram.cols}, torus rank is "
                f"{self.torus_rank}"
            )
        if (self.b_frobenius.p, self.b_frobenius.f) != (self.p, self.f):
            raise ValidationError("good-reduction Frobenius q mismatch")


def build_from_curve(c: CurveInstance, bound: int = DEFAULT_POINT_BOUND) -> PhiNModule:
    """Module of a semistable curve: cycle-space Gram matrix for the toric
    part, component direct sum for the abelian part.

    Total dimension is 2 * (sum of component genera + b1 of the graph), the
    genus of the generic fiber counted twice.
    """
    basis = cycle_basis(c.graph).cycles
    gram = (
        QMatrix.from_rows([[edge_pairing(a, b) for b in basis] for a in basis])
        if basis
        else QMatrix(0, 0, ())
    )
    module = assemble(c.p, c.f, gram, component_sum(c, bound))
    expected = 2 * (c.graph.total_genus() + betti_one(c.graph))
    if module.dimension != expected:
        raise ValidationError(
            f"module dimension {module.dimension} != 2*(genus + b1) = {expected}"
        )
    return module


def build_from_av(u: UniformizationData) -> PhiNModule:
    """Module of an abelian variety from its uniformization data."""
    return assemble(u.p, u.f, u.gram, u.b_frobenius)


def jacobian_data(c: CurveInstance, bound: int = DEFAULT_POINT_BOUND) -> UniformizationData:
    """Uniformization data of the Jacobian: torus rank = b1, lattice pairing
    = monodromy Gram matrix, good-reduction part = product of the component
    Jacobians."""
    return UniformizationData(
        torus_rank=betti_one(c.graph),
        gram=monodromy_gram(c.graph),
        b_frobenius=component_sum(c, bound),
        p=c.p,
        f=c.f,
    )


def check_curve_jacobian_agreement(c: CurveInstance, bound: int = DEFAULT_POINT_BOUND) -> bool:
    """Exact equality of the curve-side module and the module of its
    Jacobian's uniformization data.  False signals an implementation bug."""
    return modules_equal(
        build_from_curve(c, bound), build_from_av(jacobian_data(c, bound))
    )
