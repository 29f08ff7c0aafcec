"""JSON algebra files.

An algebra file looks like::

    {
      "dim": 3,
      "parameters": ["a", "b"],
      "skew": true,
      "mu": [{"left": 2, "right": 1, "result": [{"basis": 1, "coeff": "a"}]}],
      "bracket": [{"args": [1, 2, 3], "result": [{"basis": 1, "coeff": "1"}]}],
      "maps": {"alpha": [["c", "d", "h"], ["0", "1", "g"], ["0", "0", "1"]]}
    }

Indices are 1-based.  Map matrices are row-major, so column j holds the image
of e_j.  Optional keys: ``name``, ``basis``, ``nonzero`` (expressions that must
not vanish), ``notes``.  Coefficients are strings in the expression grammar.

A tensor factor file carries ``tau`` (entries on non-decreasing index triples,
completed by symmetry) and ``mu`` with optional ``maps`` (``alpha`` or
``beta``/``alpha1``/``alpha2``); its coefficients must be constants.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .constructions import SymmetricTernaryAlgebra
from .core.parametric import MAP_NAMES, ParametricAlgebra
from .core.structures import HomNambuPoissonAlgebra
from .errors import InputError
from .exactmath import ExprSyntaxError, RationalMatrix, eval_text, parse_expr, to_text

ALGEBRA_KEYS = {"dim", "name", "basis", "parameters", "nonzero", "skew", "mu", "bracket", "maps", "notes"}
FACTOR_KEYS = {"dim", "tau", "mu", "maps"}


def _fail(where: str, message: str) -> InputError:
    return InputError(f"{where}: {message}")


def _index(value: Any, dim: int, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(where, f"index must be an integer, got {value!r}")
    if not 1 <= value <= dim:
        raise _fail(where, f"index {value} outside [1, {dim}]")
    return value


def _coeff(value: Any, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise _fail(where, f"coefficient must be an expression string, got {value!r}")
    text = str(value)
    try:
        parse_expr(text)
    except ExprSyntaxError as exc:
        raise _fail(where, str(exc)) from None
    return text


def _result(value: Any, dim: int, where: str) -> dict[int, str]:
    if not isinstance(value, list):
        raise _fail(where, "result must be a list of {basis, coeff}")
    out: dict[int, str] = {}
    for n, term in enumerate(value):
        w = f"{where}.result[{n}]"
        if not isinstance(term, dict) or set(term) != {"basis", "coeff"}:
            raise _fail(w, "expected an object with keys basis and coeff")
        b = _index(term["basis"], dim, w)
        if b in out:
            raise _fail(w, f"basis {b} listed twice")
        out[b] = _coeff(term["coeff"], w)
    return out


def _entries(value: Any, dim: int, kind: str) -> dict[tuple[int, ...], dict[int, str]]:
    if value is None:
        return {}
    if not isinstance(value, list):
        raise _fail(kind, "must be a list")
    out: dict[tuple[int, ...], dict[int, str]] = {}
    for n, item in enumerate(value):
        w = f"{kind}[{n}]"
        if not isinstance(item, dict):
            raise _fail(w, "expected an object")
        if kind == "mu":
            if set(item) != {"left", "right", "result"}:
                raise _fail(w, "expected keys left, right, result")
            key: tuple[int, ...] = (_index(item["left"], dim, w), _index(item["right"], dim, w))
        else:
            if set(item) != {"args", "result"}:
                raise _fail(w, "expected keys args, result")
            args = item["args"]
            if not isinstance(args, list) or len(args) != 3:
                raise _fail(w, "args must be a list of three indices")
            key = tuple(_index(a, dim, w) for a in args)
        if key in out:
            raise _fail(w, f"entry {list(key)} given twice")
        out[key] = _result(item["result"], dim, w)
    return out


def _maps(value: Any, dim: int) -> dict[str, list[list[str]]]:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise _fail("maps", "must be an object of named matrices")
    out = {}
    for name, rows in value.items():
        w = f"maps.{name}"
        if name not in MAP_NAMES + ("alpha",):
            raise _fail(w, "unknown map; expected alpha, beta, alpha1 or alpha2")
        if not isinstance(rows, list) or len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
            raise _fail(w, f"must be a {dim}x{dim} list of rows")
        out[name] = [[_coeff(v, f"{w}[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]
    return out


def _names(value: Any, where: str) -> list[str]:
    if value is None:
        return []
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise _fail(where, "must be a list of strings")
    return list(value)


def _dim(data: dict) -> int:
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise _fail("dim", f"must be a positive integer, got {dim!r}")
    return dim


def algebra_from_dict(data: Any) -> ParametricAlgebra:
    if not isinstance(data, dict):
        raise InputError("algebra file must hold a JSON object")
    unknown = set(data) - ALGEBRA_KEYS
    if unknown:
        raise InputError(f"unknown keys: {', '.join(sorted(unknown))}")
    dim = _dim(data)
    skew = data.get("skew", True)
    if not isinstance(skew, bool):
        raise _fail("skew", "must be true or false")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise _fail("name", "must be a string")
    return ParametricAlgebra.create(
        dim,
        _entries(data.get("mu"), dim, "mu"),
        _entries(data.get("bracket"), dim, "bracket"),
        skew=skew,
        maps=_maps(data.get("maps"), dim),
        parameters=_names(data.get("parameters"), "parameters"),
        nonzero=[_coeff(v, "nonzero") for v in _names(data.get("nonzero"), "nonzero")],
        labels=_names(data.get("basis"), "basis"),
        name=name,
        notes=_names(data.get("notes"), "notes"),
    )


def _vector_terms(vec) -> list[dict]:
    return [{"basis": i + 1, "coeff": to_text(e)} for i, e in enumerate(vec) if to_text(e) != "0"]


def algebra_to_dict(P: ParametricAlgebra | HomNambuPoissonAlgebra) -> dict:
    """Canonical form: entries sorted by index, zero terms dropped, identity maps omitted."""
    if isinstance(P, HomNambuPoissonAlgebra):
        P = ParametricAlgebra.from_algebra(P)
    out: dict = {"dim": P.dim, "skew": P.skew}
    mu = []
    for (i, j) in sorted(P.mu):
        terms = _vector_terms(P.mu[(i, j)])
        if terms:
            mu.append({"left": i, "right": j, "result": terms})
    br = []
    for key in sorted(P.bracket):
        terms = _vector_terms(P.bracket[key])
        if terms:
            br.append({"args": list(key), "result": terms})
    out["mu"] = mu
    out["bracket"] = br
    if P.maps:
        out["maps"] = {k: [[to_text(e) for e in row] for row in rows] for k, rows in sorted(P.maps.items())}
    if P.parameters:
        out["parameters"] = list(P.parameters)
    if P.nonzero:
        out["nonzero"] = [to_text(e) for e in P.nonzero]
    if P.labels:
        out["basis"] = list(P.labels)
    if P.name:
        out["name"] = P.name
    if P.notes:
        out["notes"] = list(P.notes)
    return out


def dumps(data: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize_algebra(P: ParametricAlgebra | HomNambuPoissonAlgebra) -> str:
    return dumps(algebra_to_dict(P))


def parse_algebra(text: str) -> ParametricAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return algebra_from_dict(data)


def read_algebra(path: str) -> ParametricAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


def digest(P: ParametricAlgebra | HomNambuPoissonAlgebra) -> str:
    """sha256 of the canonical serialization."""
    return hashlib.sha256(serialize_algebra(P).encode("utf-8")).hexdigest()


# tensor factors

def factor_from_dict(data: Any) -> SymmetricTernaryAlgebra:
    if not isinstance(data, dict):
        raise InputError("factor file must hold a JSON object")
    unknown = set(data) - FACTOR_KEYS
    if unknown:
        raise InputError(f"unknown keys in factor file: {', '.join(sorted(unknown))}")
    dim = _dim(data)

    def const(text: str, where: str):
        try:
            return eval_text(text)
        except InputError as exc:
            raise _fail(where, f"factor coefficients must be constants ({exc})") from None

    def vec(terms: dict[int, str], where: str):
        v = [0] * dim
        for b, c in terms.items():
            v[b - 1] = const(c, where)
        return v

    tau = {}
    for key, terms in _entries(data.get("tau"), dim, "tau").items():
        if list(key) != sorted(key):
            raise _fail("tau", f"entries need non-decreasing args, got {list(key)}")
        tau[key] = vec(terms, f"tau{list(key)}")
    mu = {k: vec(t, f"mu{list(k)}") for k, t in _entries(data.get("mu"), dim, "mu").items()}
    mats = {
        k: RationalMatrix([[const(v, f"maps.{k}") for v in row] for row in rows], dim)
        for k, rows in _maps(data.get("maps"), dim).items()
    }
    if "alpha" in mats and len(mats) > 1:
        raise InputError("give either alpha or beta/alpha1/alpha2, not both")
    if "alpha" in mats:
        return SymmetricTernaryAlgebra.symmetric(dim, tau, mu, alpha=mats["alpha"])
    return SymmetricTernaryAlgebra.symmetric(
        dim, tau, mu, beta=mats.get("beta"), alpha1=mats.get("alpha1"), alpha2=mats.get("alpha2")
    )


def read_factor(path: str) -> SymmetricTernaryAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return factor_from_dict(data)
