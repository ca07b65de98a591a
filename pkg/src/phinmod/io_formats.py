"""Instance and report serialization.

One JSON dialect for both: every number is a decimal string (rationals as
"a/b" in lowest terms), so consumers never face 64-bit overflow and
round-trips are bit-exact.  Reports are emitted with sorted keys and fixed
indentation, making equal runs byte-identical.
"""

import json
from typing import Any, Mapping

from .builders import CurveInstance, UniformizationData
from .errors import SchemaError
from .exact_linalg import QMatrix, parse_rational, rational_str
from .graph_core import DualGraph
from .phin_module import PhiNModule, PolygonReport, RelationReport
from .weil_data import (
    DEFAULT_POINT_BOUND,
    EllipticCurveSpec,
    direct_sum,
    frobenius_of_elliptic,
    validate_weil,
)

FORMAT_NAME = "phinmod-instance-v1"
REPORT_NAME = "phinmod-report-v1"


def _get(obj: Mapping, field: str, context: str):
    if field not in obj:
        raise SchemaError(f"missing field '{context}{field}'")
    return obj[field]


def _as_int(value, context: str) -> int:
    if isinstance(value, bool):
        raise SchemaError(f"field '{context}' must be an integer string")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise SchemaError(f"field '{context}' is not an integer: {value!r}") from None
    raise SchemaError(f"field '{context}' must be an integer string")


def matrix_to_strings(m: QMatrix) -> list:
    return [[rational_str(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_strings(rows, context: str) -> QMatrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise SchemaError(f"field '{context}' must be an array of arrays")
    try:
        parsed = [[parse_rational(str(x)) for x in r] for r in rows]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"field '{context}' has a bad entry: {exc}") from None
    if not parsed:
        return QMatrix(0, 0, ())
    try:
        return QMatrix.from_rows(parsed)
    except ValueError as exc:
        raise SchemaError(f"field '{context}': {exc}") from None


# -- component sources -------------------------------------------------------

def source_to_json(src) -> dict:
    if src is None:
        return {"type": "genus0"}
    if isinstance(src, EllipticCurveSpec):
        return {"type": "elliptic", "a4": str(src.a4), "a6": str(src.a6)}
    return {"type": "matrix", "entries": matrix_to_strings(src)}


def source_from_json(obj, p: int, context: str):
    if not isinstance(obj, Mapping):
        raise SchemaError(f"field '{context}' must be an object")
    kind = _get(obj, "type", context + ".")
    if kind == "genus0":
        return None
    if kind == "elliptic":
        return EllipticCurveSpec(
            p,
            _as_int(_get(obj, "a4", context + "."), context + ".a4"),
            _as_int(_get(obj, "a6", context + "."), context + ".a6"),
        )
    if kind == "matrix":
        m = matrix_from_strings(_get(obj, "entries", context + "."), context + ".entries")
        if not m.is_integral():
            raise SchemaError(f"field '{context}.entries' must be integral")
        return m
    raise SchemaError(f"field '{context}.type' has unknown value {kind!r}")


# -- instances ----------------------------------------------------------------

def instance_to_json(inst) -> dict:
    """Canonical JSON form of a curve or abelian-variety instance."""
    if isinstance(inst, CurveInstance):
        return {
            "format": FORMAT_NAME,
            "kind": "curve",
            "p": str(inst.p),
            "f": str(inst.f),
            "graph": {
                "vertices": [
                    {"id": v.id, "genus": str(v.genus)} for v in inst.graph.vertices
                ],
                "edges": [
                    {"id": e.id, "tail": e.tail, "head": e.head}
                    for e in inst.graph.edges
                ],
            },
            "components": {
                vid: source_to_json(src) for vid, src in inst.components.items()
            },
        }
    if isinstance(inst, UniformizationData):
        return {
            "format": FORMAT_NAME,
            "kind": "av",
            "p": str(inst.p),
            "f": str(inst.f),
            "torus_rank": str(inst.torus_rank),
            "gram": matrix_to_strings(inst.gram),
            "b_frobenius": [{"type": "matrix", "entries": matrix_to_strings(inst.b_frobenius.matrix)}],
        }
    raise TypeError(f"not an instance: {inst!r}")


def instance_from_json(obj, bound: int = DEFAULT_POINT_BOUND):
    """Parse and validate an instance file; SchemaError names the bad field."""
    if not isinstance(obj, Mapping):
        raise SchemaError("instance file must be a JSON object")
    kind = _get(obj, "kind", "")
    p = _as_int(_get(obj, "p", ""), "p")
    f = _as_int(_get(obj, "f", ""), "f")
    if kind == "curve":
        graph_obj = _get(obj, "graph", "")
        vertices = []
        for k, v in enumerate(_get(graph_obj, "vertices", "graph.")):
            vertices.append(
                (
                    str(_get(v, "id", f"graph.vertices[{k}].")),
                    _as_int(_get(v, "genus", f"graph.vertices[{k}]."), f"graph.vertices[{k}].genus"),
                )
            )
        edges = []
        for k, e in enumerate(_get(graph_obj, "edges", "graph.")):
            edges.append(
                (
                    str(_get(e, "id", f"graph.edges[{k}].")),
                    str(_get(e, "tail", f"graph.edges[{k}].")),
                    str(_get(e, "head", f"graph.edges[{k}].")),
                )
            )
        graph = DualGraph.build(vertices, edges)
        comp_obj = _get(obj, "components", "")
        if not isinstance(comp_obj, Mapping):
            raise SchemaError("field 'components' must be an object")
        components = {
            vid: source_from_json(src, p, f"components.{vid}")
            for vid, src in comp_obj.items()
        }
        return CurveInstance(graph=graph, components=components, p=p, f=f)
    if kind == "av":
        torus_rank = _as_int(_get(obj, "torus_rank", ""), "torus_rank")
        gram = matrix_from_strings(_get(obj, "gram", ""), "gram")
        sources = _get(obj, "b_frobenius", "")
        if not isinstance(sources, list):
            raise SchemaError("field 'b_frobenius' must be an array of sources")
        blocks = []
        for k, src_obj in enumerate(sources):
            src = source_from_json(src_obj, p, f"b_frobenius[{k}]")
            if src is None:
                continue
            if isinstance(src, EllipticCurveSpec):
                if f != 1:
                    raise SchemaError(
                        f"field 'b_frobenius[{k}]': elliptic sources require f = 1"
                    )
                blocks.append(frobenius_of_elliptic(src, bound))
            else:
                blocks.append(validate_weil(src, p, f))
        b = direct_sum(blocks, p, f)
        return UniformizationData(
            torus_rank=torus_rank, gram=gram, b_frobenius=b, p=p, f=f
        )
    raise SchemaError(f"field 'kind' has unknown value {kind!r}")


def load_instance(path: str, bound: int = DEFAULT_POINT_BOUND):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from None
    return instance_from_json(obj, bound)


# -- reports ------------------------------------------------------------------

def _passfail(ok: bool) -> str:
    return "pass" if ok else "fail"


def polygon_to_strings(slopes) -> list:
    return [[rational_str(s), str(m)] for s, m in slopes]


def module_to_json(m: PhiNModule, polygons: PolygonReport) -> dict:
    w0, w1, w2 = m.dims
    return {
        "p": str(m.p),
        "f": str(m.f),
        "dims": {"w0": str(w0), "w1": str(w1), "w2": str(w2)},
        "fil1_dim": str(m.fil1_dim),
        "t_newton": rational_str(polygons.t_newton),
        "t_hodge": str(polygons.t_hodge),
        "newton_slopes": polygon_to_strings(polygons.newton.slopes),
        "hodge_slopes": polygon_to_strings(polygons.hodge.slopes),
        "phi": matrix_to_strings(m.phi),
        "n": matrix_to_strings(m.n),
        "gram": matrix_to_strings(m.gram),
    }


def module_from_report(report: Mapping) -> PhiNModule:
    """Rebuild the exact module from a report's matrices (bit-exact)."""
    mod = _get(report, "module", "")
    dims = _get(mod, "dims", "module.")
    return PhiNModule(
        p=_as_int(_get(mod, "p", "module."), "module.p"),
        f=_as_int(_get(mod, "f", "module."), "module.f"),
        dims=(
            _as_int(_get(dims, "w0", "module.dims."), "module.dims.w0"),
            _as_int(_get(dims, "w1", "module.dims."), "module.dims.w1"),
            _as_int(_get(dims, "w2", "module.dims."), "module.dims.w2"),
        ),
        phi=matrix_from_strings(_get(mod, "phi", "module."), "module.phi"),
        n=matrix_from_strings(_get(mod, "n", "module."), "module.n"),
        fil1_dim=_as_int(_get(mod, "fil1_dim", "module."), "module.fil1_dim"),
        gram=matrix_from_strings(_get(mod, "gram", "module."), "module.gram"),
    )


def relations_to_json(r: RelationReport) -> dict:
    return {
        "n_squared_zero": _passfail(r.n_squared_zero),
        "n_phi_commutation": _passfail(r.n_phi_commutation),
        "phi_invertible": _passfail(r.phi_invertible),
        "n_rank_is_torus_rank": _passfail(r.n_rank_is_torus_rank),
    }


def polygons_to_json(p: PolygonReport) -> dict:
    return {
        "endpoints_equal": _passfail(p.endpoints_equal),
        "newton_on_or_above_hodge": _passfail(p.newton_on_or_above_hodge),
        "newton_symmetric": _passfail(p.newton.is_symmetric()),
    }


def dump_json(obj: Any) -> str:
    """Canonical byte-stable serialization."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def build_report(inst, module, relations, polygons, duality_ok, agreement_ok=None) -> dict:
    checks = {
        "relations": relations_to_json(relations),
        "monodromy_duality": _passfail(duality_ok),
        "polygons": polygons_to_json(polygons),
    }
    if agreement_ok is not None:
        checks["curve_jacobian_agreement"] = _passfail(agreement_ok)
    return {
        "format": REPORT_NAME,
        "instance": instance_to_json(inst),
        "module": module_to_json(module, polygons),
        "checks": checks,
    }


def report_all_pass(report: Mapping) -> bool:
    checks = report["checks"]
    flat = list(checks["relations"].values()) + list(checks["polygons"].values())
    flat.append(checks["monodromy_duality"])
    if "curve_jacobian_agreement" in checks:
        flat.append(checks["curve_jacobian_agreement"])
    return all(v == "pass" for v in flat)
