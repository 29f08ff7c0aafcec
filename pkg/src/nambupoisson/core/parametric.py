"""Algebras whose structure constants are coefficient expressions in named parameters.

Nothing symbolic is carried through the tensor arithmetic: a parametric algebra
is instantiated at a concrete assignment and the concrete algebra is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence, Union

from ..errors import DomainError, InadmissibleSample, InputError
from ..exactmath import Expr, RationalMatrix, evaluate, format_rational, names, parse_expr, substitute, to_text
from .structures import BinaryStructure, HomNambuPoissonAlgebra, TernaryStructure

MAP_NAMES = ("beta", "alpha1", "alpha2")

ExprLike = Union[str, int, Fraction, Expr]
VectorLike = Union[Sequence[ExprLike], Mapping[int, ExprLike]]

_ZERO = parse_expr("0")


def as_expr(value: ExprLike) -> Expr:
    if isinstance(value, bool):
        raise InputError(f"not an expression: {value!r}")
    if isinstance(value, (int, Fraction)):
        return parse_expr(format_rational(Fraction(value)))
    if isinstance(value, str):
        return parse_expr(value)
    return value


def _as_vector(value: VectorLike, dim: int, where: str) -> tuple[Expr, ...]:
    if isinstance(value, Mapping):
        vec = [_ZERO] * dim
        for idx, coeff in value.items():
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                raise InputError(f"{where}: basis index {idx!r} outside [1, {dim}]")
            vec[idx - 1] = as_expr(coeff)
        return tuple(vec)
    vec = tuple(as_expr(v) for v in value)
    if len(vec) != dim:
        raise InputError(f"{where}: vector of length {len(vec)} in dimension {dim}")
    return vec


def _is_zero_literal(e: Expr) -> bool:
    return to_text(e) == "0"


@dataclass(frozen=True)
class ParametricAlgebra:
    """Structure constants and maps as expressions; maps are row-major (entry [i][j] = coeff of e_i in image of e_j)."""

    dim: int
    mu: Mapping[tuple[int, int], tuple[Expr, ...]]
    bracket: Mapping[tuple[int, int, int], tuple[Expr, ...]]
    skew: bool = True
    maps: Mapping[str, tuple[tuple[Expr, ...], ...]] = field(default_factory=dict)
    parameters: tuple[str, ...] = ()
    nonzero: tuple[Expr, ...] = ()
    labels: tuple[str, ...] = ()
    name: str = ""
    notes: tuple[str, ...] = ()

    @classmethod
    def create(
        cls,
        dim: int,
        mu: Mapping[Sequence[int], VectorLike] | None = None,
        bracket: Mapping[Sequence[int], VectorLike] | None = None,
        *,
        skew: bool = True,
        maps: Mapping[str, Sequence[Sequence[ExprLike]]] | None = None,
        images: Mapping[str, Sequence[VectorLike]] | None = None,
        parameters: Sequence[str] = (),
        nonzero: Sequence[ExprLike] = (),
        labels: Sequence[str] = (),
        name: str = "",
        notes: Sequence[str] = (),
    ) -> "ParametricAlgebra":
        """Coercing constructor.

        Vectors may be dense sequences or ``{basis_index: coeff}`` dicts.  Maps can
        be given row-major (``maps``) or as lists of basis images (``images``).
        """
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise InputError(f"dimension must be a positive integer, got {dim!r}")
        mu_e = {tuple(k): _as_vector(v, dim, f"mu{tuple(k)}") for k, v in (mu or {}).items()}
        br_e = {tuple(k): _as_vector(v, dim, f"bracket{tuple(k)}") for k, v in (bracket or {}).items()}
        all_maps: dict[str, tuple[tuple[Expr, ...], ...]] = {}
        for key, rows in (maps or {}).items():
            all_maps[key] = tuple(tuple(as_expr(v) for v in row) for row in rows)
        for key, imgs in (images or {}).items():
            if key in all_maps:
                raise InputError(f"map {key!r} given twice")
            cols = [_as_vector(v, dim, f"{key} image") for v in imgs]
            if len(cols) != dim:
                raise InputError(f"map {key!r} needs {dim} basis images, got {len(cols)}")
            all_maps[key] = tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))
        return cls(
            dim, mu_e, br_e, skew, all_maps, tuple(parameters), tuple(as_expr(v) for v in nonzero),
            tuple(labels), name, tuple(notes),
        )

    def __post_init__(self) -> None:
        n = self.dim
        for (key, vec), arity in [(kv, 2) for kv in self.mu.items()] + [(kv, 3) for kv in self.bracket.items()]:
            if len(key) != arity or any(not isinstance(i, int) or not 1 <= i <= n for i in key):
                raise InputError(f"structure entry {key} has indices outside [1, {n}] or wrong arity")
            if len(vec) != n:
                raise InputError(f"structure entry {key} has a vector of length {len(vec)}")
        if self.skew:
            for key in self.bracket:
                if not key[0] < key[1] < key[2]:
                    raise InputError(f"skew bracket entries need strictly increasing args, got {list(key)}")
        for key, rows in self.maps.items():
            if key not in MAP_NAMES + ("alpha",):
                raise InputError(f"unknown map {key!r}; expected alpha, beta, alpha1 or alpha2")
            if len(rows) != n or any(len(r) != n for r in rows):
                raise InputError(f"map {key!r} must be {n}x{n}")
        if "alpha" in self.maps and any(k in self.maps for k in MAP_NAMES):
            raise InputError("give either alpha or beta/alpha1/alpha2, not both")
        if len(set(self.parameters)) != len(self.parameters):
            raise InputError("duplicate parameter names")
        if self.labels and len(self.labels) != n:
            raise InputError(f"{len(self.labels)} basis labels for dimension {n}")
        unknown = self.used_names() - set(self.parameters)
        if unknown:
            raise InputError(f"undeclared parameters: {', '.join(sorted(unknown))}")

    def expressions(self):
        for vec in list(self.mu.values()) + list(self.bracket.values()):
            yield from vec
        for rows in self.maps.values():
            for row in rows:
                yield from row
        yield from self.nonzero

    def used_names(self) -> set[str]:
        out: set[str] = set()
        for e in self.expressions():
            out |= names(e)
        return out

    @property
    def is_concrete(self) -> bool:
        return not self.parameters

    def instantiate(self, assignment: Mapping[str, Fraction] | None = None) -> HomNambuPoissonAlgebra:
        """Concrete algebra at ``assignment``.

        Raises InadmissibleSample when a declared non-zero constraint or a divisor vanishes.
        """
        env = {k: Fraction(v) for k, v in (assignment or {}).items()}
        missing = [p for p in self.parameters if p not in env]
        if missing:
            raise InputError(f"no value for parameters: {', '.join(missing)}")
        for cond in self.nonzero:
            try:
                value = evaluate(cond, env)
            except DomainError as exc:
                raise InadmissibleSample(str(exc), *exc.operands) from None
            if value == 0:
                raise InadmissibleSample(f"constraint {to_text(cond)} != 0 violated", cond)
        try:
            mu = BinaryStructure(self.dim, {k: [evaluate(e, env) for e in v] for k, v in self.mu.items()})
            br = TernaryStructure(
                self.dim, {k: [evaluate(e, env) for e in v] for k, v in self.bracket.items()}, self.skew
            )
            mats = {k: RationalMatrix([[evaluate(e, env) for e in row] for row in rows], self.dim)
                    for k, rows in self.maps.items()}
        except DomainError as exc:
            if isinstance(exc, InadmissibleSample):
                raise
            raise InadmissibleSample(str(exc), *exc.operands) from None
        return HomNambuPoissonAlgebra.build(
            mu, br, mats.get("alpha"), beta=mats.get("beta"), alpha1=mats.get("alpha1"),
            alpha2=mats.get("alpha2"), labels=self.labels, name=self.name, notes=self.notes,
        )

    def restrict(self, subs: Mapping[str, ExprLike], note: str = "") -> "ParametricAlgebra":
        """Substitute expressions for some parameters; substituted names are dropped."""
        mapping = {k: as_expr(v) for k, v in subs.items()}
        for k in mapping:
            if k not in self.parameters:
                raise InputError(f"cannot restrict undeclared parameter {k!r}")
        sub = lambda e: substitute(e, mapping)  # noqa: E731
        params = tuple(p for p in self.parameters if p not in mapping)
        for e in mapping.values():
            extra = names(e) - set(params)
            if extra:
                raise InputError(f"restriction introduces undeclared names {sorted(extra)}")
        return ParametricAlgebra(
            self.dim,
            {k: tuple(sub(e) for e in v) for k, v in self.mu.items()},
            {k: tuple(sub(e) for e in v) for k, v in self.bracket.items()},
            self.skew,
            {k: tuple(tuple(sub(e) for e in row) for row in rows) for k, rows in self.maps.items()},
            params,
            tuple(sub(e) for e in self.nonzero),
            self.labels,
            self.name,
            self.notes + ((note,) if note else ()),
        )

    def with_meta(self, *, name: str | None = None, notes: Sequence[str] | None = None) -> "ParametricAlgebra":
        return ParametricAlgebra(
            self.dim, self.mu, self.bracket, self.skew, self.maps, self.parameters, self.nonzero,
            self.labels, self.name if name is None else name, self.notes if notes is None else tuple(notes),
        )

    @classmethod
    def from_algebra(cls, A: HomNambuPoissonAlgebra) -> "ParametricAlgebra":
        """Concrete algebra as constant expressions; identity maps are omitted."""
        maps: dict = {}
        if A.is_single_map:
            if not A.beta.is_identity():
                maps["alpha"] = A.beta.entries
        else:
            maps = {k: getattr(A, k).entries for k in MAP_NAMES}
        labels = A.labels if A.labels != tuple(f"e{i}" for i in range(1, A.dim + 1)) else ()
        return cls.create(
            A.dim,
            dict(A.mu.entries),
            dict(A.bracket.entries),
            skew=A.bracket.skew,
            maps=maps,
            labels=labels,
            name=A.name,
            notes=A.notes,
        )
