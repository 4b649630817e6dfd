"""Built-in pairs and the pair-spec JSON format.

A pair-spec document looks like::

    {"name": "sextic",
     "ambient": {"kind": "projective", "params": [5]},
     "construction": {"type": "complete_intersection", "degrees": [[6]]},
     "fixtures": []}

Integers may be JSON integers or decimal strings; floats are rejected so
that specs stay bit-exact.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from .bundles import Sym, TautDualSub, Wedge, expr_from_json, expr_to_json, json_int
from .chow import AmbientModel, Grassmannian, Product, Projective
from .errors import SchemaError
from .pairs import (
    CompleteIntersection,
    DegreeOracle,
    PairSpec,
    SurfaceFixture,
    ZeroLocus,
    ci_pair,
)

CATALOG_ENV = "FOURFOLD_LEDGER_CATALOG"

# preferred restricted-count method for non-decent catalog pairs
METHOD_HINTS = {"cicy130": "bounded-box", "cicy133": "hyperbola"}

DV_TABLE = (("c1^4", 1452), ("c1^2*c2", 825), ("c2^2", 477), ("c1*c3", 330), ("c4", 105))


def _sextic() -> PairSpec:
    return PairSpec("sextic", Projective(5), CompleteIntersection(((6,),)), description="sextic fourfold in P^5")


def _fano() -> PairSpec:
    return PairSpec(
        "fano",
        Grassmannian(2, 6),
        ZeroLocus(Sym(3, TautDualSub())),
        fixtures=(SurfaceFixture("surface of lines meeting a line", (0, 1), 45, 27),),
        description="Fano variety of lines on a cubic fourfold, zero locus of Sym^3 E in G(2,6)",
    )


def _dv() -> PairSpec:
    return PairSpec(
        "dv",
        Grassmannian(6, 10),
        DegreeOracle(DV_TABLE, normal=Wedge(3, TautDualSub())),
        fixtures=(SurfaceFixture("surface of 6-spaces", (1, 0), 900, 972, hodge=(1, 0, 155)),),
        description="Debarre-Voisin fourfold, zero locus of a 3-form in G(6,10) (published degrees)",
    )


def _cicy(name: str, a: int, b: int, degrees) -> PairSpec:
    return PairSpec(name, Product(a, b), CompleteIntersection(tuple(degrees)),
                    description=f"complete intersection of bidegrees {list(degrees)} in P^{a} x P^{b}")


BUILTIN = {
    "sextic": _sextic,
    "fano": _fano,
    "dv": _dv,
    "cicy41": lambda: _cicy("cicy41", 2, 4, [(0, 5), (3, 0)]),
    "cicy130": lambda: _cicy("cicy130", 4, 6, [(0, 2), (0, 2), (1, 1), (1, 1), (1, 1), (2, 0)]),
    "cicy133": lambda: _cicy("cicy133", 5, 5, [(0, 2), (0, 2), (1, 1), (1, 1), (2, 0), (2, 0)]),
}

CATALOG_NAMES = ("sextic", "ci", "fano", "dv", "cicy41", "cicy130", "cicy133")


def extra_specs() -> dict[str, PairSpec]:
    """Pair specs from *.json files in the directory named by the environment."""
    root = os.environ.get(CATALOG_ENV)
    if not root:
        return {}
    out = {}
    for path in sorted(Path(root).glob("*.json")):
        pair = parse_pair_spec(path.read_bytes())
        out[pair.name] = pair
    return out


def catalog_names() -> list[str]:
    extra = [n for n in extra_specs() if n not in CATALOG_NAMES]
    return list(CATALOG_NAMES) + extra


def get_pair(name: str, degrees=None) -> PairSpec:
    if name == "ci":
        if not degrees:
            raise ValueError("the parametric 'ci' entry needs degrees")
        return ci_pair(degrees)
    if name in BUILTIN:
        return BUILTIN[name]()
    extra = extra_specs()
    if name in extra:
        return extra[name]
    raise KeyError(f"unknown pair {name!r}; catalog has {', '.join(catalog_names())}")


# -- JSON ------------------------------------------------------------------------


def _int_list(value: Any, path: str) -> list[int]:
    if not isinstance(value, list):
        raise SchemaError(path, "expected a list of integers")
    return [json_int(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _field(doc: dict, key: str, path: str) -> Any:
    if key not in doc:
        raise SchemaError(f"{path}.{key}" if path else key, "missing field")
    return doc[key]


def _ambient(doc: Any) -> AmbientModel:
    if not isinstance(doc, dict):
        raise SchemaError("ambient", "expected an object")
    kind = _field(doc, "kind", "ambient")
    params = _int_list(_field(doc, "params", "ambient"), "ambient.params")
    try:
        return AmbientModel(kind, tuple(params))
    except (ValueError, TypeError) as exc:
        raise SchemaError("ambient", str(exc)) from None


def _construction(doc: Any):
    path = "construction"
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    kind = _field(doc, "type", path)
    if kind == "complete_intersection":
        raw = _field(doc, "degrees", path)
        if not isinstance(raw, list) or not raw:
            raise SchemaError(f"{path}.degrees", "expected a nonempty list")
        degrees = []
        for i, d in enumerate(raw):
            p = f"{path}.degrees[{i}]"
            degrees.append(tuple(_int_list(d, p)) if isinstance(d, list) else (json_int(d, p),))
        return CompleteIntersection(tuple(degrees))
    if kind == "zero_locus":
        return ZeroLocus(expr_from_json(_field(doc, "bundle", path), f"{path}.bundle"))
    if kind == "degree_oracle":
        table = _field(doc, "table", path)
        if not isinstance(table, dict):
            raise SchemaError(f"{path}.table", "expected an object of monomial -> integer")
        entries = tuple((str(k), json_int(v, f"{path}.table[{k!r}]")) for k, v in table.items())
        normal = doc.get("normal")
        tangent = doc.get("tangent_c2")
        if (normal is None) == (tangent is None):
            raise SchemaError(path, "give exactly one of 'normal' or 'tangent_c2'")
        if tangent is not None and not isinstance(tangent, str):
            raise SchemaError(f"{path}.tangent_c2", "expected a polynomial string")
        bundle = expr_from_json(normal, f"{path}.normal") if normal is not None else None
        return DegreeOracle(entries, normal=bundle, tangent_c2=tangent)
    raise SchemaError(f"{path}.type", f"unknown construction {kind!r}")


def _fixtures(doc: Any) -> tuple[SurfaceFixture, ...]:
    if doc is None:
        return ()
    if not isinstance(doc, list):
        raise SchemaError("fixtures", "expected a list")
    out = []
    for i, fx in enumerate(doc):
        path = f"fixtures[{i}]"
        if not isinstance(fx, dict):
            raise SchemaError(path, "expected an object")
        hodge = fx.get("hodge")
        if hodge is not None:
            hodge = tuple(_int_list(hodge, f"{path}.hodge"))
            if len(hodge) != 3:
                raise SchemaError(f"{path}.hodge", "expected [h0, h1, h2]")
        out.append(SurfaceFixture(
            str(fx.get("name", f"fixture {i}")),
            tuple(_int_list(_field(fx, "alpha", path), f"{path}.alpha")),
            json_int(_field(fx, "c1sq", path), f"{path}.c1sq"),
            json_int(_field(fx, "c2", path), f"{path}.c2"),
            hodge,
        ))
    return tuple(out)


def parse_pair_spec(document: bytes | str) -> PairSpec:
    """Parse and validate a pair-spec document."""
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError("", f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("", "expected a JSON object")
    name = _field(doc, "name", "")
    if not isinstance(name, str) or not name:
        raise SchemaError("name", "expected a nonempty string")
    ambient = _ambient(_field(doc, "ambient", ""))
    construction = _construction(_field(doc, "construction", ""))
    fixtures = _fixtures(doc.get("fixtures"))
    try:
        return PairSpec(name, ambient, construction, fixtures, str(doc.get("description", "")))
    except (ValueError, TypeError) as exc:
        # malformed but well-typed content, e.g. a degree vector of the wrong length
        raise SchemaError("construction", str(exc)) from None


def pair_to_json(pair: PairSpec) -> dict:
    c = pair.construction
    if isinstance(c, CompleteIntersection):
        cons: dict = {"type": "complete_intersection", "degrees": [list(d) for d in c.degrees]}
    elif isinstance(c, ZeroLocus):
        cons = {"type": "zero_locus", "bundle": expr_to_json(c.bundle)}
    else:
        cons = {"type": "degree_oracle", "table": dict(c.table)}
        if c.normal is not None:
            cons["normal"] = expr_to_json(c.normal)
        else:
            cons["tangent_c2"] = c.tangent_c2
    doc = {
        "name": pair.name,
        "ambient": {"kind": pair.ambient.kind, "params": list(pair.ambient.params)},
        "construction": cons,
        "fixtures": [
            {"name": f.name, "alpha": list(f.alpha), "c1sq": f.c1sq, "c2": f.c2}
            | ({"hodge": list(f.hodge)} if f.hodge else {})
            for f in pair.fixtures
        ],
    }
    if pair.description:
        doc["description"] = pair.description
    return doc


def dump_pair_spec(pair: PairSpec) -> str:
    return json.dumps(pair_to_json(pair), indent=2, sort_keys=True)
