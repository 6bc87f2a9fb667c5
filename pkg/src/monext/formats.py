"""JSON documents for monoids, maps, semibiproducts and action systems.

Monoids appear either inline as ``{"table": [[...]], "labels": [...]}`` or as
a registry name string (``"M"``, ``"G"``, ``"Z3"``, ``"Z4"``, ``"T"``,
``"K4"``).  Action-system matrices are indexed ``rho[x][b]``, ``phi[b][x]``
and ``gamma[b][b']``.  All output is rendered by :func:`dumps`, which is
byte-deterministic.
"""

import json

from .action import ActionSystem
from .errors import AlgebraError, ParseError
from .monoid import Homomorphism, PointedMap, make_monoid
from .registry import DEFAULT
from .semibiproduct import Semibiproduct


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: {exc.msg}", source=source, line=exc.lineno,
                         column=exc.colno) from None


def _field(doc, key, where):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object", field=where)
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}", field=f"{where}.{key}")
    return doc[key]


def _matrix(value, where):
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ParseError(f"{where}: expected a list of lists", field=where)
    for row in value:
        for v in row:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"{where}: entries must be integers", field=where)
    return value


def _vector(value, where):
    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int)
                                          for v in value):
        raise ParseError(f"{where}: expected a list of integers", field=where)
    return value


def _wrap(where, fn, *args):
    """Re-raise domain errors from a sub-document with its field path attached."""
    try:
        return fn(*args)
    except ParseError:
        raise
    except AlgebraError as exc:
        exc.details.setdefault("field", where)
        raise


# -- monoids --------------------------------------------------------------------

def monoid_to_doc(M, registry=DEFAULT):
    name = M.name
    if name and name in registry and registry.get(name) == M:
        return name
    doc = {"table": [list(r) for r in M.table]}
    if M.labels:
        doc["labels"] = list(M.labels)
    return doc


def monoid_from_doc(doc, registry=DEFAULT, where="monoid"):
    if isinstance(doc, str):
        return registry.get(doc)
    table = _matrix(_field(doc, "table", where), f"{where}.table")
    labels = doc.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise ParseError(f"{where}.labels: expected a list", field=f"{where}.labels")
    return _wrap(where, make_monoid, table, labels)


# -- maps -----------------------------------------------------------------------

def map_to_doc(f, registry=DEFAULT):
    return {"dom": monoid_to_doc(f.dom, registry), "cod": monoid_to_doc(f.cod, registry),
            "values": list(f.values)}


def map_from_doc(doc, registry=DEFAULT, where="map", homomorphism=False):
    dom = monoid_from_doc(_field(doc, "dom", where), registry, f"{where}.dom")
    cod = monoid_from_doc(_field(doc, "cod", where), registry, f"{where}.cod")
    values = _vector(_field(doc, "values", where), f"{where}.values")
    cls = Homomorphism if homomorphism else PointedMap
    return _wrap(where, cls, dom, cod, values)


# -- semibiproducts ----------------------------------------------------------------

def sbp_to_doc(S, registry=DEFAULT):
    doc = {key: monoid_to_doc(getattr(S, key), registry) for key in "XAB"}
    for key in "pkqs":
        doc[key] = list(getattr(S, key).values)
    return doc


def sbp_from_doc(doc, registry=DEFAULT, where="semibiproduct"):
    X, A, B = (monoid_from_doc(_field(doc, key, where), registry, f"{where}.{key}")
               for key in "XAB")
    vec = {key: _vector(_field(doc, key, where), f"{where}.{key}") for key in "pkqs"}

    def build():
        return Semibiproduct(X, A, B, Homomorphism(A, B, vec["p"]),
                             Homomorphism(X, A, vec["k"]), PointedMap(A, X, vec["q"]),
                             PointedMap(B, A, vec["s"]))

    return _wrap(where, build)


def realization_to_doc(real, registry=DEFAULT):
    doc = sbp_to_doc(real.semibiproduct, registry)
    doc["carrier"] = [list(pair) for pair in real.carrier]
    return doc


# -- action systems -------------------------------------------------------------------

def act_to_doc(T, registry=DEFAULT):
    return {"X": monoid_to_doc(T.X, registry), "B": monoid_to_doc(T.B, registry),
            "rho": [list(r) for r in T.rho], "phi": [list(r) for r in T.phi],
            "gamma": [list(r) for r in T.gamma]}


def act_from_doc(doc, registry=DEFAULT, where="action"):
    X = monoid_from_doc(_field(doc, "X", where), registry, f"{where}.X")
    B = monoid_from_doc(_field(doc, "B", where), registry, f"{where}.B")
    mats = {key: _matrix(_field(doc, key, where), f"{where}.{key}")
            for key in ("rho", "phi", "gamma")}
    return _wrap(where, ActionSystem, X, B, mats["rho"], mats["phi"], mats["gamma"])


def report_to_doc(report):
    return report.to_dict()


def census_entry_to_doc(index, entry, registry=DEFAULT):
    doc = act_to_doc(entry.system, registry)
    doc.update({"index": index, "label": entry.label, "tags": sorted(entry.tags),
                "realization_size": entry.realization_size,
                "canonical_key": entry.canonical_key.hex()})
    return doc
