"""Built-in algebras: the R^4 cross product and the 3-dimensional classification families."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Mapping

from ..errors import InputError
from ..exactmath import RationalMatrix
from .parametric import ParametricAlgebra
from .structures import BinaryStructure, HomNambuPoissonAlgebra, TernaryStructure

THM51_BRACKET = {(1, 2, 3): {1: "1"}}


def cross4() -> HomNambuPoissonAlgebra:
    """Ternary cross product on R^4, [x, y, z] = det(x | y | z | e).

    The coefficient of e_m is the cofactor of the e-column at row m, obtained by
    replacing that column with the m-th unit vector and taking the determinant.
    """
    n = 4
    unit = [[1 if r == c else 0 for r in range(n)] for c in range(n)]
    entries = {}
    for i, j, k in combinations(range(n), 3):
        vec = []
        for m in range(n):
            cols = [unit[i], unit[j], unit[k], unit[m]]
            vec.append(RationalMatrix.from_columns(cols).det())
        entries[(i + 1, j + 1, k + 1)] = vec
    return HomNambuPoissonAlgebra.build(
        BinaryStructure.zero(n), TernaryStructure(n, entries, skew=True), name="cross4"
    )


def _cross4_parametric() -> ParametricAlgebra:
    return ParametricAlgebra.from_algebra(cross4())


def _thm51(which: str, printed: bool = False) -> ParametricAlgebra:
    if which == "mu1":
        if printed:
            mu = {(2, 1): {1: "a"}, (2, 2): {2: "1"}, (2, 3): {3: "1"},
                  (3, 1): {1: "b"}, (3, 2): {2: "b"}, (3, 3): {3: "b"}}
            note = "mu1 as printed: mu(e2,e2)=e2, mu(e2,e3)=e3"
        else:
            # left multiplication by a*e2^* + b*e3^*: the row of e2 scales by a like the row of e3 by b
            mu = {(2, 1): {1: "a"}, (2, 2): {2: "a"}, (2, 3): {3: "a"},
                  (3, 1): {1: "b"}, (3, 2): {2: "b"}, (3, 3): {3: "b"}}
            note = "editorial reading of mu1: mu(e2,e2)=a e2, mu(e2,e3)=a e3"
        return ParametricAlgebra.create(
            3, mu, THM51_BRACKET, parameters=("a", "b"),
            name="thm51-mu1-printed" if printed else "thm51-mu1", notes=(note,),
        )
    if which == "mu2":
        mu = {(1, 2): {1: "a"}, (1, 3): {1: "b"}, (2, 2): {2: "a"},
              (2, 3): {2: "b"}, (3, 2): {3: "a"}, (3, 3): {3: "b"}}
        return ParametricAlgebra.create(3, mu, THM51_BRACKET, parameters=("a", "b"), nonzero=("a",),
                                        name="thm51-mu2")
    if which == "mu3":
        mu = {(1, 3): {1: "a"}, (2, 3): {2: "a"}, (3, 3): {3: "a"}}
        return ParametricAlgebra.create(3, mu, THM51_BRACKET, parameters=("a",), nonzero=("a",),
                                        name="thm51-mu3")
    if which == "bracket-only":
        return ParametricAlgebra.create(3, {}, THM51_BRACKET, name="thm51-bracket-only")
    raise InputError(f"unknown classification family {which!r}; expected mu1, mu2, mu3 or bracket-only")


BUILTINS: dict[str, Callable[[], ParametricAlgebra]] = {
    "cross4": _cross4_parametric,
    "thm51-mu1": lambda: _thm51("mu1"),
    "thm51-mu1-printed": lambda: _thm51("mu1", printed=True),
    "thm51-mu2": lambda: _thm51("mu2"),
    "thm51-mu3": lambda: _thm51("mu3"),
    "thm51-bracket-only": lambda: _thm51("bracket-only"),
}


def builtin_names() -> list[str]:
    return list(BUILTINS)


def builtin_parametric(name: str) -> ParametricAlgebra:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise InputError(f"unknown built-in {name!r}; known: {', '.join(BUILTINS)}") from None


def builtin(name: str, assignment: Mapping[str, Fraction | int] | None = None) -> HomNambuPoissonAlgebra:
    """Concrete built-in algebra; parameterized ones need an assignment.

    ``thm51-mu2`` and ``thm51-mu3`` refuse a = 0.
    """
    return builtin_parametric(name).instantiate(assignment or {})
