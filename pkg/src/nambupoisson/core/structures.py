"""Structure-constant tensors and the Hom-Nambu-Poisson algebra bundle.

Public indices are 1-based, matching e1, e2, ...; the cached evaluation
tables are 0-based lists of sparse vectors (``{index: coeff}``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from typing import Mapping, Sequence

from ..errors import InputError
from ..exactmath import RationalMatrix

Vector = tuple[Fraction, ...]
Sparse = dict[int, Fraction]


# sparse helpers (0-based)

def to_sparse(vec: Sequence[Fraction]) -> Sparse:
    return {i: Fraction(v) for i, v in enumerate(vec) if v}


def to_dense(vec: Sparse, dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for i, v in vec.items():
        out[i] = v
    return tuple(out)


def basis_vector(i: int) -> Sparse:
    return {i: Fraction(1)}


def sparse_add(*vecs: Sparse) -> Sparse:
    out: Sparse = {}
    for vec in vecs:
        for k, v in vec.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def sparse_scale(s: Fraction, vec: Sparse) -> Sparse:
    if not s:
        return {}
    return {k: s * v for k, v in vec.items()}


def sparse_map(columns: Sequence[Sparse], vec: Sparse) -> Sparse:
    """Apply a linear map given by its sparse columns."""
    out: Sparse = {}
    for j, xj in vec.items():
        for k, v in columns[j].items():
            s = out.get(k, 0) + xj * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def sparse_columns(m: RationalMatrix) -> list[Sparse]:
    return [to_sparse(m.column(j)) for j in range(m.cols)]


def _check_index(idx: int, dim: int) -> None:
    if not isinstance(idx, int) or not 1 <= idx <= dim:
        raise InputError(f"basis index {idx!r} outside [1, {dim}]")


def _vector(value: Sequence, dim: int) -> Vector:
    vec = tuple(Fraction(v) for v in value)
    if len(vec) != dim:
        raise InputError(f"coordinate vector of length {len(vec)} in a {dim}-dimensional algebra")
    return vec


def perm_sign(p: Sequence[int]) -> int:
    sign = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class BinaryStructure:
    """Bilinear product by structure constants: ``entries[(i, j)]`` is the coordinate vector of mu(e_i, e_j)."""

    dim: int
    entries: Mapping[tuple[int, int], Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"dimension must be a positive integer, got {self.dim!r}")
        clean = {}
        for key, vec in dict(self.entries).items():
            key = tuple(key)
            if len(key) != 2:
                raise InputError(f"binary entry key {key} must have two indices")
            for idx in key:
                _check_index(idx, self.dim)
            vec = _vector(vec, self.dim)
            if any(vec):
                clean[key] = vec
        object.__setattr__(self, "entries", clean)

    @classmethod
    def zero(cls, dim: int) -> "BinaryStructure":
        return cls(dim, {})

    @cached_property
    def table(self) -> list[list[Sparse]]:
        n = self.dim
        t: list[list[Sparse]] = [[{} for _ in range(n)] for _ in range(n)]
        for (i, j), vec in self.entries.items():
            t[i - 1][j - 1] = to_sparse(vec)
        return t

    def apply(self, x: Sparse, y: Sparse) -> Sparse:
        out: Sparse = {}
        t = self.table
        for i, xi in x.items():
            row = t[i]
            for j, yj in y.items():
                c = xi * yj
                for k, v in row[j].items():
                    s = out.get(k, 0) + c * v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def __call__(self, x: Sequence, y: Sequence) -> Vector:
        return to_dense(self.apply(to_sparse(_vector(x, self.dim)), to_sparse(_vector(y, self.dim))), self.dim)

    def dense(self) -> tuple:
        zero = (Fraction(0),) * self.dim
        return tuple(
            self.entries.get((i, j), zero) for i in range(1, self.dim + 1) for j in range(1, self.dim + 1)
        )

    def post_compose(self, f: RationalMatrix) -> "BinaryStructure":
        """The product ``f o mu``."""
        return BinaryStructure(self.dim, {k: f.apply(v) for k, v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryStructure):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BinaryStructure(dim={self.dim}, entries={len(self.entries)})"


@dataclass(frozen=True, eq=False)
class TernaryStructure:
    """Trilinear bracket by structure constants.

    With ``skew=True`` only strictly increasing index triples are stored and the
    rest follow by the sign of the sorting permutation.
    """

    dim: int
    entries: Mapping[tuple[int, int, int], Vector] = field(default_factory=dict)
    skew: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"dimension must be a positive integer, got {self.dim!r}")
        clean = {}
        for key, vec in dict(self.entries).items():
            key = tuple(key)
            if len(key) != 3:
                raise InputError(f"ternary entry key {key} must have three indices")
            for idx in key:
                _check_index(idx, self.dim)
            if self.skew and not key[0] < key[1] < key[2]:
                raise InputError(f"skew bracket entries need strictly increasing indices, got {key}")
            vec = _vector(vec, self.dim)
            if any(vec):
                clean[key] = vec
        object.__setattr__(self, "entries", clean)

    @classmethod
    def zero(cls, dim: int) -> "TernaryStructure":
        return cls(dim, {}, skew=True)

    @cached_property
    def table(self) -> list[list[list[Sparse]]]:
        n = self.dim
        t: list[list[list[Sparse]]] = [[[{} for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for key, vec in self.entries.items():
            sp = to_sparse(vec)
            if self.skew:
                for p in permutations(range(3)):
                    i, j, k = (key[p[0]] - 1, key[p[1]] - 1, key[p[2]] - 1)
                    sign = perm_sign(p)
                    t[i][j][k] = sp if sign > 0 else {a: -v for a, v in sp.items()}
            else:
                i, j, k = key
                t[i - 1][j - 1][k - 1] = sp
        return t

    def apply(self, x: Sparse, y: Sparse, z: Sparse) -> Sparse:
        out: Sparse = {}
        t = self.table
        for i, xi in x.items():
            ti = t[i]
            for j, yj in y.items():
                tij = ti[j]
                cxy = xi * yj
                for k, zk in z.items():
                    entry = tij[k]
                    if not entry:
                        continue
                    c = cxy * zk
                    for m, v in entry.items():
                        s = out.get(m, 0) + c * v
                        if s:
                            out[m] = s
                        else:
                            out.pop(m, None)
        return out

    def __call__(self, x: Sequence, y: Sequence, z: Sequence) -> Vector:
        n = self.dim
        return to_dense(
            self.apply(to_sparse(_vector(x, n)), to_sparse(_vector(y, n)), to_sparse(_vector(z, n))), n
        )

    def dense(self) -> tuple:
        """All n^3 coordinate vectors (skew entries completed) in lexicographic order."""
        n = self.dim
        t = self.table
        return tuple(to_dense(t[i][j][k], n) for i in range(n) for j in range(n) for k in range(n))

    def dense_entries(self) -> dict[tuple[int, int, int], Vector]:
        """Explicit non-zero entries for every index triple (1-based), skew completion applied."""
        n = self.dim
        t = self.table
        return {
            (i + 1, j + 1, k + 1): to_dense(t[i][j][k], n)
            for i in range(n) for j in range(n) for k in range(n) if t[i][j][k]
        }

    def post_compose(self, f: RationalMatrix) -> "TernaryStructure":
        return TernaryStructure(self.dim, {k: f.apply(v) for k, v in self.entries.items()}, self.skew)

    def is_zero(self) -> bool:
        return not self.entries

    def same_tensor(self, other: "TernaryStructure") -> bool:
        return self.dim == other.dim and self.dense() == other.dense()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TernaryStructure):
            return NotImplemented
        return self.same_tensor(other)

    def __repr__(self) -> str:
        kind = "skew" if self.skew else "dense"
        return f"TernaryStructure(dim={self.dim}, {kind}, entries={len(self.entries)})"


@dataclass(frozen=True, eq=False)
class HomNambuPoissonAlgebra:
    """``(A, mu, bracket, beta, (alpha1, alpha2))``; maps are square matrices, column j = image of e_j.

    Use :meth:`build` for the usual constructors: no maps gives the classical
    algebra, a single ``alpha`` sets beta = alpha1 = alpha2.
    """

    mu: BinaryStructure
    bracket: TernaryStructure
    beta: RationalMatrix
    alpha1: RationalMatrix
    alpha2: RationalMatrix
    labels: tuple[str, ...] = ()
    name: str = ""
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = self.mu.dim
        if self.bracket.dim != n:
            raise InputError(f"bracket dimension {self.bracket.dim} differs from product dimension {n}")
        for label, m in (("beta", self.beta), ("alpha1", self.alpha1), ("alpha2", self.alpha2)):
            if not isinstance(m, RationalMatrix) or (m.rows, m.cols) != (n, n):
                raise InputError(f"{label} must be a {n}x{n} matrix")
        labels = tuple(self.labels) or tuple(f"e{i}" for i in range(1, n + 1))
        if len(labels) != n:
            raise InputError(f"{len(labels)} basis labels for dimension {n}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "notes", tuple(self.notes))

    @classmethod
    def build(
        cls,
        mu: BinaryStructure,
        bracket: TernaryStructure,
        alpha: RationalMatrix | None = None,
        *,
        beta: RationalMatrix | None = None,
        alpha1: RationalMatrix | None = None,
        alpha2: RationalMatrix | None = None,
        labels: Sequence[str] = (),
        name: str = "",
        notes: Sequence[str] = (),
    ) -> "HomNambuPoissonAlgebra":
        ident = RationalMatrix.identity(mu.dim)
        if alpha is not None:
            if any(m is not None for m in (beta, alpha1, alpha2)):
                raise InputError("give either alpha or the (beta, alpha1, alpha2) tuple, not both")
            beta = alpha1 = alpha2 = alpha
        return cls(
            mu,
            bracket,
            beta if beta is not None else ident,
            alpha1 if alpha1 is not None else ident,
            alpha2 if alpha2 is not None else ident,
            tuple(labels),
            name,
            tuple(notes),
        )

    @property
    def dim(self) -> int:
        return self.mu.dim

    @property
    def is_single_map(self) -> bool:
        return self.beta == self.alpha1 == self.alpha2

    @property
    def alpha(self) -> RationalMatrix:
        if not self.is_single_map:
            raise InputError("algebra has distinct structure maps; alpha is undefined")
        return self.beta

    @property
    def is_classical(self) -> bool:
        return self.is_single_map and self.beta.is_identity()

    @cached_property
    def beta_cols(self) -> list[Sparse]:
        return sparse_columns(self.beta)

    @cached_property
    def alpha1_cols(self) -> list[Sparse]:
        return sparse_columns(self.alpha1)

    @cached_property
    def alpha2_cols(self) -> list[Sparse]:
        return sparse_columns(self.alpha2)

    def same_structure(self, other: "HomNambuPoissonAlgebra") -> bool:
        """Bit-identical structure constants and maps (labels and notes ignored)."""
        return (
            self.dim == other.dim
            and self.mu.dense() == other.mu.dense()
            and self.bracket.dense() == other.bracket.dense()
            and self.beta == other.beta
            and self.alpha1 == other.alpha1
            and self.alpha2 == other.alpha2
        )

    def with_notes(self, *notes: str) -> "HomNambuPoissonAlgebra":
        return HomNambuPoissonAlgebra(
            self.mu, self.bracket, self.beta, self.alpha1, self.alpha2, self.labels, self.name,
            self.notes + tuple(notes),
        )

    def __repr__(self) -> str:
        kind = "classical" if self.is_classical else "single-map" if self.is_single_map else "general"
        return f"HomNambuPoissonAlgebra(dim={self.dim}, {kind}, name={self.name!r})"


def eval_mu(A: HomNambuPoissonAlgebra, x: Sequence, y: Sequence) -> Vector:
    return A.mu(x, y)


def eval_bracket(A: HomNambuPoissonAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    return A.bracket(x, y, z)
