"""Independent sympy model of (Hom-)Nambu-Poisson structure constants, used as a test oracle.

Nothing here imports the package under test.
"""

from __future__ import annotations

from itertools import permutations, product

import sympy


def perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


class SymAlgebra:
    """mu[(i, j)], br[(i, j, k)] as sympy column vectors (0-based keys); maps as sympy matrices."""

    def __init__(self, n, mu, bracket, skew=True, beta=None, alpha1=None, alpha2=None):
        self.n = n
        zero = sympy.zeros(n, 1)
        self.mu = {k: zero for k in product(range(n), repeat=2)}
        for (i, j), v in mu.items():
            self.mu[(i - 1, j - 1)] = sympy.Matrix(v)
        self.br = {k: zero for k in product(range(n), repeat=3)}
        for key, v in bracket.items():
            key = tuple(k - 1 for k in key)
            if skew:
                for p in permutations(range(3)):
                    self.br[tuple(key[q] for q in p)] = perm_sign(p) * sympy.Matrix(v)
            else:
                self.br[key] = sympy.Matrix(v)
        eye = sympy.eye(n)
        self.beta = beta if beta is not None else eye
        self.alpha1 = alpha1 if alpha1 is not None else eye
        self.alpha2 = alpha2 if alpha2 is not None else eye

    def m(self, x, y):
        out = sympy.zeros(self.n, 1)
        for i, j in product(range(self.n), repeat=2):
            if x[i] != 0 and y[j] != 0:
                out += x[i] * y[j] * self.mu[(i, j)]
        return out

    def b(self, x, y, z):
        out = sympy.zeros(self.n, 1)
        for i, j, k in product(range(self.n), repeat=3):
            if x[i] != 0 and y[j] != 0 and z[k] != 0:
                out += x[i] * y[j] * z[k] * self.br[(i, j, k)]
        return out

    def e(self, i):
        return sympy.eye(self.n)[:, i]


def _zero(v) -> bool:
    return all(sympy.simplify(c) == 0 for c in v)


def residuals(A: SymAlgebra, axiom: str):
    """Yield (indices, residual vector) over the basis for ``axiom``."""
    n, e = A.n, A.e
    if axiom == "skew":
        for i, j, k in product(range(n), repeat=3):
            x, y, z = e(i), e(j), e(k)
            yield (i, j, k), A.b(x, y, z) + A.b(y, x, z)
            yield (i, j, k), A.b(x, y, z) + A.b(x, z, y)
    elif axiom == "hom-associativity":
        for i, j, k in product(range(n), repeat=3):
            x, y, z = e(i), e(j), e(k)
            yield (i, j, k), A.m(A.beta * x, A.m(y, z)) - A.m(A.m(x, y), A.beta * z)
    elif axiom == "hom-nambu":
        a1, a2 = A.alpha1, A.alpha2
        for idx in product(range(n), repeat=5):
            x1, x2, x3, x4, x5 = (e(i) for i in idx)
            lhs = A.b(a1 * x1, a2 * x2, A.b(x3, x4, x5))
            rhs = (A.b(A.b(x1, x2, x3), a1 * x4, a2 * x5) + A.b(a1 * x3, A.b(x1, x2, x4), a2 * x5)
                   + A.b(a1 * x3, a2 * x4, A.b(x1, x2, x5)))
            yield idx, lhs - rhs
    elif axiom == "hom-leibniz":
        a1, a2, be = A.alpha1, A.alpha2, A.beta
        for idx in product(range(n), repeat=4):
            x1, x2, x3, x4 = (e(i) for i in idx)
            lhs = A.b(A.m(x1, x2), a1 * x3, a2 * x4)
            rhs = A.m(be * x1, A.b(x2, x3, x4)) + A.m(A.b(x1, x3, x4), be * x2)
            yield idx, lhs - rhs
    elif axiom == "multiplicative":
        al = A.beta
        for i, j in product(range(n), repeat=2):
            yield (i, j), al * A.m(e(i), e(j)) - A.m(al * e(i), al * e(j))
        for i, j, k in product(range(n), repeat=3):
            yield (i, j, k), al * A.b(e(i), e(j), e(k)) - A.b(al * e(i), al * e(j), al * e(k))
    else:
        raise ValueError(axiom)


def holds(A: SymAlgebra, axiom: str) -> bool:
    return all(_zero(r) for _, r in residuals(A, axiom))


def first_failure(A: SymAlgebra, axiom: str):
    for idx, r in residuals(A, axiom):
        if not _zero(r):
            return idx, r
    return None


# transcriptions of the 3-dimensional families straight from their printed tables

a, b, c, d, f, g, h, l, r = sympy.symbols("a b c d f g h l r")


def vec(*coords):
    return list(coords) + [0] * (3 - len(coords))


def thm51(which: str, printed: bool = False):
    if which == "mu1":
        s2 = 1 if printed else a  # editorial reading scales the e2 row by a
        mu = {(2, 1): vec(a), (2, 2): vec(0, s2), (2, 3): vec(0, 0, s2),
              (3, 1): vec(b), (3, 2): vec(0, b), (3, 3): vec(0, 0, b)}
    elif which == "mu2":
        mu = {(1, 2): vec(a), (1, 3): vec(b), (2, 2): vec(0, a), (2, 3): vec(0, b),
              (3, 2): vec(0, 0, a), (3, 3): vec(0, 0, b)}
    else:
        mu = {(1, 3): vec(a), (2, 3): vec(0, a), (3, 3): vec(0, 0, a)}
    return mu, {(1, 2, 3): vec(1)}


def prop53(index: int):
    """(mu table, alpha matrix) exactly as printed, family ``index``."""
    im1 = vec(c)
    ims = {
        1: (vec(d, 1), vec(h, g, 1)),
        2: (vec(d, 1, l), vec(h, 0, 1)),
        3: (vec(d, f, a / b * (1 - f)), vec(h, b / a * (f - 1), (b - g * a) / b)),
        4: (vec(d, 1), vec(h, g, 1)),
        5: (vec(d, 1, l), vec(h, 0, 1)),
        6: (vec(d, f, a / b * (1 - f)), vec(h, -b / a * (f - 1), (b - a * g) / b)),
        7: (vec(d, f, l), vec(h, g, (1 + g + l) / f)),
        8: (vec(d, 1), vec(h, g, 1)),
        9: (vec(d, 0, -1 / g), vec(h, g, r)),
    }
    im2, im3 = ims[index]
    sc = lambda s, v: [s * x for x in v]  # noqa: E731
    if index in (1, 3):
        mu = {(2, 1): vec(a * c), (3, 1): vec(b * c), (2, 2): sc(a, im2), (3, 2): sc(b, im2),
              (2, 3): sc(a, im3), (3, 3): sc(b, im3)}
    elif index == 2:
        mu = {(1, 2): vec(a * c), (3, 1): vec(b * c), (2, 2): sc(a, im2), (3, 2): sc(b, im2),
              (2, 3): sc(a, im3), (3, 3): sc(b, im3)}
    elif index in (4, 5, 6):
        mu = {(1, 2): vec(a * c), (1, 3): vec(b * c), (2, 2): sc(a, im2), (2, 3): sc(b, im2),
              (3, 2): sc(a, im3), (3, 3): sc(b, im3)}
    else:
        mu = {(1, 3): vec(a * c), (2, 3): sc(a, im2), (3, 3): sc(a, im3)}
    alpha = sympy.Matrix.hstack(sympy.Matrix(im1), sympy.Matrix(im2), sympy.Matrix(im3))
    return mu, alpha


def prop53_algebra(index: int, subs: dict | None = None) -> SymAlgebra:
    mu, alpha = prop53(index)
    if subs:
        mu = {k: [sympy.sympify(x).subs(subs) for x in v] for k, v in mu.items()}
        alpha = alpha.subs(subs)
    return SymAlgebra(3, mu, {(1, 2, 3): vec(c)}, beta=alpha, alpha1=alpha, alpha2=alpha)


def cross4_bracket():
    """[x, y, z] = formal det with columns x, y, z, e, expanded symbolically."""
    xs = sympy.symbols("x1:5")
    ys = sympy.symbols("y1:5")
    zs = sympy.symbols("z1:5")
    es = sympy.symbols("E1:5")
    det = sympy.Matrix([list(xs), list(ys), list(zs), list(es)]).T.det()
    out = {}
    for i, j, k in product(range(4), repeat=3):
        vals = {s: 0 for s in xs + ys + zs}
        vals[xs[i]] = 1
        vals[ys[j]] = 1
        vals[zs[k]] = 1
        expr = sympy.expand(det.subs(vals))
        out[(i + 1, j + 1, k + 1)] = [expr.coeff(E) for E in es]
    return out
