"""The 3-dimensional families: untwisted (mu1, mu2, mu3) and their nine twists."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..core.builtins import THM51_BRACKET, builtin_parametric
from ..core.parametric import ParametricAlgebra
from ..core.structures import HomNambuPoissonAlgebra
from ..errors import InputError

THM51 = ("mu1", "mu2", "mu3")


def thm51_parametric(which: str, printed: bool = False) -> ParametricAlgebra:
    if which not in THM51:
        raise InputError(f"unknown family {which!r}; expected one of {THM51}")
    if which == "mu1" and printed:
        return builtin_parametric("thm51-mu1-printed")
    return builtin_parametric(f"thm51-{which}")


def thm51_family(which: str, p: Mapping[str, Fraction | int], printed: bool = False) -> HomNambuPoissonAlgebra:
    """Bracket {e1,e2,e3} = e1 with the chosen product; mu2 and mu3 refuse a = 0."""
    return thm51_parametric(which, printed).instantiate(p)


# images of e1, e2, e3 under the printed structure maps
_ALPHA: dict[int, tuple[dict[int, str], dict[int, str], dict[int, str]]] = {
    1: ({1: "c"}, {1: "d", 2: "1"}, {1: "h", 2: "g", 3: "1"}),
    2: ({1: "c"}, {1: "d", 2: "1", 3: "l"}, {1: "h", 3: "1"}),
    3: ({1: "c"}, {1: "d", 2: "f", 3: "a/b*(1 - f)"}, {1: "h", 2: "b/a*(f - 1)", 3: "(b - g*a)/b"}),
    4: ({1: "c"}, {1: "d", 2: "1"}, {1: "h", 2: "g", 3: "1"}),
    5: ({1: "c"}, {1: "d", 2: "1", 3: "l"}, {1: "h", 3: "1"}),
    6: ({1: "c"}, {1: "d", 2: "f", 3: "a/b*(1 - f)"}, {1: "h", 2: "-b/a*(f - 1)", 3: "(b - a*g)/b"}),
    7: ({1: "c"}, {1: "d", 2: "f", 3: "l"}, {1: "h", 2: "g", 3: "(1 + g + l)/f"}),
    8: ({1: "c"}, {1: "d", 2: "1"}, {1: "h", 2: "g", 3: "1"}),
    9: ({1: "c"}, {1: "d", 3: "-1/g"}, {1: "h", 2: "g", 3: "r"}),
}

_PARAMS = {
    1: "a b c d g h", 2: "a b c d h l", 3: "a b c d f g h",
    4: "a b c d g h", 5: "a b c d h l", 6: "a b c d f g h",
    7: "a c d f g h l", 8: "a c d g h", 9: "a c d g h r",
}

# which untwisted product each family twists
UNTWISTED = {1: "mu1", 2: "mu1", 3: "mu1", 4: "mu2", 5: "mu2", 6: "mu2", 7: "mu3", 8: "mu3", 9: "mu3"}


def _scaled(s: str, image: dict[int, str]) -> dict[int, str]:
    return {k: f"{s}*({v})" for k, v in image.items()}


def _printed_table(index: int) -> dict[tuple[int, int], dict[int, str]]:
    _, im2, im3 = _ALPHA[index]
    if index <= 3:
        table = {
            (2, 1): {1: "a*c"}, (3, 1): {1: "b*c"},
            (2, 2): _scaled("a", im2), (3, 2): _scaled("b", im2),
            (2, 3): _scaled("a", im3), (3, 3): _scaled("b", im3),
        }
        if index == 2:
            # printed as mu(e1, e2) = a c e1
            del table[(2, 1)]
            table[(1, 2)] = {1: "a*c"}
        return table
    if index <= 6:
        return {
            (1, 2): {1: "a*c"}, (1, 3): {1: "b*c"},
            (2, 2): _scaled("a", im2), (2, 3): _scaled("b", im2),
            (3, 2): _scaled("a", im3), (3, 3): _scaled("b", im3),
        }
    return {(1, 3): {1: "a*c"}, (2, 3): _scaled("a", im2), (3, 3): _scaled("a", im3)}


@dataclass(frozen=True)
class EditorialReading:
    restriction: Mapping[str, str]
    table_fix: bool = False
    note: str = ""


# parameter restrictions under which the printed map is a weak morphism of the untwisted algebra
EDITORIAL: dict[int, EditorialReading | None] = {
    1: EditorialReading({"g": "0"}, note="g = 0"),
    2: EditorialReading({"l": "0"}, table_fix=True, note="mu(e2,e1) = a c e1 in place of mu(e1,e2); l = 0"),
    3: EditorialReading({"g": "b*(f - 1)/a"}, note="g = b (f - 1)/a"),
    4: EditorialReading({"g": "0"}, note="g = 0"),
    5: EditorialReading({"l": "0"}, note="l = 0"),
    6: EditorialReading({"f": "1", "g": "0"}, note="f = 1, g = 0"),
    7: EditorialReading({"l": "0", "f": "1", "g": "0"}, note="l = 0, f = 1, g = 0"),
    8: None,  # printed form holds
    9: None,  # no restriction works: a e3^*(alpha(e2)) = -a/g never vanishes
}

NO_READING_9 = (
    "no editorial reading: mu(x,y) = rho(y) alpha(x) with rho = a e3^* is Hom-associative only if "
    "rho o alpha is a multiple of rho, but rho(alpha(e2)) = -a/g is never zero"
)


def _check_index(index: int) -> None:
    if index not in _ALPHA:
        raise InputError(f"twisted family index must be 1..9, got {index!r}")


def prop53_parametric(index: int, reading: str = "printed") -> ParametricAlgebra:
    """Family ``index`` with bracket {e1,e2,e3} = c e1 and alpha = beta = alpha1 = alpha2.

    ``reading="editorial"`` applies the table fix and parameter restriction of
    :data:`EDITORIAL`; families without one refuse.
    """
    _check_index(index)
    if reading not in ("printed", "editorial"):
        raise InputError(f"reading must be 'printed' or 'editorial', got {reading!r}")
    table = _printed_table(index)
    notes = [f"twist of thm51-{UNTWISTED[index]}"]
    ed = EDITORIAL[index]
    if reading == "editorial":
        if ed is None:
            raise InputError(f"family {index} has no editorial reading")
        if ed.table_fix:
            del table[(1, 2)]
            table[(2, 1)] = {1: "a*c"}
    P = ParametricAlgebra.create(
        3,
        table,
        {(1, 2, 3): {1: "c"}},
        images={"alpha": _ALPHA[index]},
        parameters=_PARAMS[index].split(),
        nonzero=("a",) if index >= 4 else (),
        name=f"prop53-{index}" + ("-editorial" if reading == "editorial" else ""),
        notes=notes,
    )
    if reading == "editorial":
        P = P.restrict(ed.restriction, note=f"editorial reading: {ed.note}")
    return P


def prop53_family(index: int, p: Mapping[str, Fraction | int], reading: str = "printed") -> HomNambuPoissonAlgebra:
    """Concrete twisted family; a vanishing printed denominator (or a = 0 for 4..9) is refused."""
    return prop53_parametric(index, reading).instantiate(p)


def untwisted_parametric(index: int) -> ParametricAlgebra:
    _check_index(index)
    return thm51_parametric(UNTWISTED[index])


def lookup(name: str) -> ParametricAlgebra:
    """Resolve a built-in or family name.

    Accepts the built-in names, ``thm51:mu1`` .. ``thm51:mu3``, ``thm51:mu1-printed``,
    ``prop53:N`` and ``prop53:N:editorial`` (also with ``-`` in place of ``:``).
    """
    from ..core.builtins import BUILTINS

    if name in BUILTINS:
        return builtin_parametric(name)
    parts = name.replace(":", "-").split("-")
    if parts[0] == "thm51" and len(parts) >= 2:
        which = parts[1]
        printed = parts[2:] == ["printed"]
        if which in THM51 and (len(parts) == 2 or printed and which == "mu1"):
            return thm51_parametric(which, printed)
    if parts[0] == "prop53" and len(parts) in (2, 3) and parts[1].isdigit():
        reading = parts[2] if len(parts) == 3 else "printed"
        return prop53_parametric(int(parts[1]), reading)
    raise InputError(
        f"unknown algebra {name!r}; expected a built-in, thm51:mu1..mu3, prop53:1..9 or prop53:N:editorial"
    )


def family_names() -> list[str]:
    out = [f"thm51:{w}" for w in THM51] + ["thm51:mu1-printed"]
    for i in range(1, 10):
        out.append(f"prop53:{i}")
        if EDITORIAL[i] is not None:
            out.append(f"prop53:{i}:editorial")
    return out
