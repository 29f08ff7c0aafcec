"""Products compatible with a fixed bracket: the linear Leibniz system and desk-scale searches.

For a fixed bracket B the Leibniz rule

    {mu(x1,x2), x3, x4} = mu(x1, {x2,x3,x4}) + mu({x1,x3,x4}, x2)

is linear in the n^3 structure constants of mu, so the set of all compatible
products is the nullspace of an exact n^5 x n^3 system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from ..core.checks import run_identity
from ..core.structures import BinaryStructure, HomNambuPoissonAlgebra, TernaryStructure
from ..errors import PreconditionError
from ..exactmath import RationalMatrix, format_rational, in_span, nullspace

GRID_RANGE = 3
GRID_BUDGET = 20000
RANDOM_POINTS = 100


def _u(n: int, i: int, j: int, m: int) -> int:
    # unknown mu^m_{ij}, 0-based
    return (i * n + j) * n + m


def mu_to_vector(mu: BinaryStructure) -> tuple[Fraction, ...]:
    n = mu.dim
    v = [Fraction(0)] * n ** 3
    for (i, j), vec in mu.entries.items():
        for m, c in enumerate(vec):
            v[_u(n, i - 1, j - 1, m)] = c
    return tuple(v)


def vector_to_mu(n: int, v: Sequence[Fraction]) -> BinaryStructure:
    entries = {}
    for i, j in product(range(n), repeat=2):
        vec = [v[_u(n, i, j, m)] for m in range(n)]
        if any(vec):
            entries[(i + 1, j + 1)] = vec
    return BinaryStructure(n, entries)


def leibniz_system(bracket: TernaryStructure) -> RationalMatrix:
    """Rows indexed by (p, q, r, s, t): component t of the Leibniz rule on (e_p, e_q, e_r, e_s)."""
    n = bracket.dim
    B = bracket.dense()  # B[(i*n + j)*n + k] = coordinates of {e_i, e_j, e_k}

    def br(i, j, k):
        return B[(i * n + j) * n + k]

    rows = []
    for p, q, r, s in product(range(n), repeat=4):
        for t in range(n):
            row = [Fraction(0)] * n ** 3
            for m in range(n):
                row[_u(n, p, q, m)] += br(m, r, s)[t]
                row[_u(n, p, m, t)] -= br(q, r, s)[m]
                row[_u(n, m, q, t)] -= br(p, r, s)[m]
            rows.append(row)
    return RationalMatrix(rows, n ** 3)


@dataclass
class LeibnizSpace:
    bracket: TernaryStructure
    system: RationalMatrix
    vectors: list[tuple[Fraction, ...]]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        return self.bracket.dim

    @property
    def basis(self) -> list[BinaryStructure]:
        return [vector_to_mu(self.n, v) for v in self.vectors]

    def satisfies_system(self, mu: BinaryStructure) -> bool:
        """mu solves the Leibniz equations (symbol-free, exact)."""
        return not any(self.system.apply(mu_to_vector(mu)))

    def contains(self, mu: BinaryStructure) -> bool:
        """mu lies in the span of the computed basis (rank test)."""
        return in_span(self.vectors, mu_to_vector(mu))

    def combine(self, coords: Sequence[Fraction]) -> BinaryStructure:
        v = [Fraction(0)] * self.n ** 3
        for c, b in zip(coords, self.vectors):
            if c:
                for k, x in enumerate(b):
                    if x:
                        v[k] += c * x
        return vector_to_mu(self.n, v)


def leibniz_solution_space(bracket: TernaryStructure, *, check: bool = True) -> LeibnizSpace:
    """All products satisfying the Leibniz rule with ``bracket`` (identity maps).

    With ``check`` the bracket must be skew and satisfy the fundamental identity.
    """
    if check:
        A = HomNambuPoissonAlgebra.build(BinaryStructure.zero(bracket.dim), bracket)
        for axiom in ("skew", "hom-nambu"):
            res = run_identity(A, axiom)
            if not res.ok:
                raise PreconditionError(f"bracket fails {axiom}: {res.counterexample.describe()}", res)
    system = leibniz_system(bracket)
    return LeibnizSpace(bracket, system, nullspace(system))


def is_associative(mu: BinaryStructure) -> bool:
    A = HomNambuPoissonAlgebra.build(mu, TernaryStructure.zero(mu.dim))
    return run_identity(A, "hom-associativity").ok


def is_commutative(mu: BinaryStructure) -> bool:
    t = mu.table
    n = mu.dim
    return all(t[i][j] == t[j][i] for i in range(n) for j in range(n))


def commutative_subspace(space: LeibnizSpace) -> LeibnizSpace:
    """Intersect the space with the linear condition mu(e_i, e_j) = mu(e_j, e_i)."""
    n = space.n
    if not space.vectors:
        return LeibnizSpace(space.bracket, space.system, [])
    # columns: antisymmetric part of each basis vector
    cols = []
    for v in space.vectors:
        col = []
        for i, j in combinations(range(n), 2):
            for m in range(n):
                col.append(v[_u(n, i, j, m)] - v[_u(n, j, i, m)])
        cols.append(col)
    if not cols[0]:
        return LeibnizSpace(space.bracket, space.system, list(space.vectors))
    coeffs = nullspace(RationalMatrix.from_columns(cols))
    vectors = []
    for c in coeffs:
        w = [Fraction(0)] * n ** 3
        for ci, v in zip(c, space.vectors):
            if ci:
                for k, x in enumerate(v):
                    w[k] += ci * x
        vectors.append(tuple(w))
    return LeibnizSpace(space.bracket, space.system, vectors)


def _grid_points(k: int, bound: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Non-zero integer points of [-bound, bound]^k, fewest non-zero coordinates first."""
    values = [v for r in range(1, bound + 1) for v in (r, -r)]
    count = 0
    for support in range(1, k + 1):
        for idx in combinations(range(k), support):
            for vals in product(values, repeat=support):
                if count >= budget:
                    return
                point = [0] * k
                for i, v in zip(idx, vals):
                    point[i] = v
                count += 1
                yield tuple(point)


@dataclass
class SearchReport:
    space_dim: int
    grid_points: int = 0
    random_points: int = 0
    witness: BinaryStructure | None = None
    coords: tuple[Fraction, ...] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def summary(self) -> str:
        if self.found:
            return "witness found: " + ", ".join(format_rational(c) for c in self.coords)
        return "none found at desk scale"

    def to_dict(self) -> dict:
        out = {
            "space_dim": self.space_dim,
            "grid_points": self.grid_points,
            "random_points": self.random_points,
            "result": self.summary,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def associative_search(
    space: LeibnizSpace,
    *,
    grid_range: int = GRID_RANGE,
    random_points: int = RANDOM_POINTS,
    seed: int = 1729,
    budget: int = GRID_BUDGET,
) -> SearchReport:
    """Search the space for a non-zero associative product.

    Points are a deterministic integer grid (ordered by support size, capped at
    ``budget``) followed by ``random_points`` random rational points.
    """
    k = space.dim
    rep = SearchReport(k)
    if k == 0:
        rep.notes.append("space is {0}")
        return rep

    def test(coords) -> bool:
        mu = space.combine(coords)
        if mu.is_zero() or not is_associative(mu):
            return False
        rep.witness = mu
        rep.coords = tuple(Fraction(c) for c in coords)
        return True

    total = (2 * grid_range + 1) ** k - 1
    if total > budget:
        rep.notes.append(f"grid truncated to {budget} of {total} points")
    for point in _grid_points(k, grid_range, budget):
        rep.grid_points += 1
        if test(point):
            return rep
    rng = random.Random(f"{seed}:associative-search")
    for _ in range(random_points):
        coords = [Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000)) for _ in range(k)]
        rep.random_points += 1
        if test(coords):
            return rep
    return rep


def commutative_slice(
    space: LeibnizSpace,
    *,
    grid_range: int = GRID_RANGE,
    random_points: int = RANDOM_POINTS,
    seed: int = 1729,
    budget: int = GRID_BUDGET,
) -> SearchReport:
    """Impose commutativity, then search for a non-zero associative element."""
    sub = commutative_subspace(space)
    rep = associative_search(sub, grid_range=grid_range, random_points=random_points, seed=seed, budget=budget)
    rep.notes.insert(0, f"commutative subspace of dimension {sub.dim} inside {space.dim}")
    return rep
