"""
Characters and dimensions of irreducible representations of U(a) and O(b).

Weights come from determinantal formulas in complete homogeneous symmetric
polynomials: Jacobi-Trudi for U(a) and Koike-Terada for O(b).
"""

from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple, Union

from sympy import Rational
from sympy.combinatorics import Permutation

from theta_orbits.characters.formal import (
    FormalCharacter,
    GroupFactor,
    Poly,
    ProductGroup,
    Weight,
    poly_add,
    poly_mul,
    shift,
)
from theta_orbits.characters.labels import OLabel, ULabel, interlacing, is_split, make_o_label, make_u_label
from theta_orbits.errors import ParameterError

Label = Union[ULabel, OLabel]


def _unit(rank: int, k: int, sign: int = 1) -> Weight:
    return tuple(sign if i == k else 0 for i in range(rank))


def _o_variables(b: int) -> Tuple[Weight, ...]:
    m = b // 2
    out = [_unit(m, k, s) for k in range(m) for s in (1, -1)]
    if b % 2:
        out.append((0,) * m)
    return tuple(out)


def _u_variables(a: int) -> Tuple[Weight, ...]:
    return tuple(_unit(a, k) for k in range(a))


@lru_cache(maxsize=None)
def complete_homogeneous(variables: Tuple[Weight, ...], rank: int, kmax: int) -> Tuple[Poly, ...]:
    """h_0, ..., h_kmax in the monomials e**v for v in `variables`."""
    polys: List[Poly] = [{(0,) * rank: 1}] + [{} for _ in range(kmax)]
    for v in variables:
        for k in range(1, kmax + 1):
            polys[k] = poly_add(polys[k], shift(polys[k - 1], v))
    return tuple(polys)


def _determinant(matrix: List[List[Poly]], rank: int) -> Poly:
    size = len(matrix)
    total: Poly = {}
    for perm in permutations(range(size)):
        term: Poly = {(0,) * rank: Permutation(list(perm)).signature()}
        for i, j in enumerate(perm):
            term = poly_mul(term, matrix[i][j])
            if not term:
                break
        total = poly_add(total, term)
    return total


def o_weights(b: int, nu: Sequence[int]) -> Poly:
    """SO(b)-torus weights of the O(b) irrep with highest weight nu."""
    m = b // 2
    rows = [v for v in nu if v > 0]
    if len(rows) > m:
        raise ParameterError(f"{tuple(nu)} has more than {m} nonzero entries")
    if not rows:
        return {(0,) * m: 1}
    size = len(rows)
    h = complete_homogeneous(_o_variables(b), m, rows[0] + size)

    def entry(k: int) -> Poly:
        return h[k] if k >= 0 else {}

    matrix = [
        [poly_add(entry(rows[i] - i + j), entry(rows[i] - i - j - 2), -1) for j in range(size)]
        for i in range(size)
    ]
    return _determinant(matrix, m)


def u_weights(a: int, lam: Sequence[int]) -> Poly:
    """Weights of the U(a) irrep with highest weight lam."""
    lam = make_u_label(a, lam)
    if a == 0:
        return {(): 1}
    low = lam[-1]
    rows = [v - low for v in lam if v - low > 0]
    if rows:
        size = len(rows)
        h = complete_homogeneous(_u_variables(a), a, rows[0] + size)
        matrix = [
            [h[rows[i] - i + j] if rows[i] - i + j >= 0 else {} for j in range(size)] for i in range(size)
        ]
        poly = _determinant(matrix, a)
    else:
        poly = {(0,) * a: 1}
    return shift(poly, (low,) * a)


def _twisted_o_weights(b: int, label: OLabel) -> Poly:
    nu, eps = label
    if not is_split(b, nu):
        return {}
    parity = sum(nu)
    if b % 2:
        return {w: eps * (-1) ** (parity + sum(w)) * c for w, c in o_weights(b, nu).items()}
    m = b // 2
    total: Poly = {}
    for kappa in interlacing(nu, m - 1):
        sign = eps * (-1) ** (parity + sum(kappa))
        lower = {w + (0,): sign * c for w, c in o_weights(b - 1, kappa).items()}
        total = poly_add(total, lower)
    return total


@lru_cache(maxsize=None)
def _factor_character(factor: GroupFactor, label: Label) -> FormalCharacter:
    group = ProductGroup.of(factor)
    if factor.kind == "U":
        return FormalCharacter.of(group, {(): u_weights(factor.size, label)})
    label = make_o_label(factor.size, *label)
    if factor.size == 0:
        return FormalCharacter.of(group, {(): {(): 1}})
    sectors = {(0,): o_weights(factor.size, label.nu)}
    twisted = _twisted_o_weights(factor.size, label)
    if twisted:
        sectors[(1,)] = twisted
    return FormalCharacter.of(group, sectors)


def irrep_character(factor: GroupFactor, label: Label) -> FormalCharacter:
    """Character of one irrep of a single factor, as a one-factor product group."""
    if factor.kind == "O":
        label = OLabel(tuple(label[0]), label[1])
    else:
        label = tuple(label)
    return _factor_character(factor, label)


@lru_cache(maxsize=4096)
def product_irrep_character(group: ProductGroup, labels: Tuple[Label, ...]) -> FormalCharacter:
    if len(labels) != len(group.factors):
        raise ParameterError(f"{len(labels)} labels for {len(group.factors)} factors")
    ch = FormalCharacter.trivial(ProductGroup.of())
    for factor, label in zip(group.factors, labels):
        ch = ch.outer(irrep_character(factor, label))
    return ch


def o_dim(b: int, label: OLabel) -> int:
    """Weyl dimension of an O(b) irrep; irreps that split over SO(b) count twice."""
    m = b // 2
    nu = make_o_label(b, *label).nu
    value = Rational(1)
    if b % 2:
        # doubled half-integers keep everything integral
        rho = [2 * (m - i) - 1 for i in range(m)]
        shifted = [2 * v + r for v, r in zip(nu, rho)]
        for i in range(m):
            value *= Rational(shifted[i], rho[i])
    else:
        rho = [m - i - 1 for i in range(m)]
        shifted = [v + r for v, r in zip(nu, rho)]
    for i in range(m):
        for j in range(i + 1, m):
            value *= Rational(shifted[i] ** 2 - shifted[j] ** 2, rho[i] ** 2 - rho[j] ** 2)
    if not is_split(b, nu):
        value *= 2
    return int(value)


def u_dim(a: int, lam: Sequence[int]) -> int:
    lam = make_u_label(a, lam)
    value = Rational(1)
    for i in range(a):
        for j in range(i + 1, a):
            value *= Rational(lam[i] - lam[j] + j - i, j - i)
    return int(value)


def label_dim(factor: GroupFactor, label: Label) -> int:
    if factor.kind == "U":
        return u_dim(factor.size, label)
    return o_dim(factor.size, OLabel(tuple(label[0]), label[1]))
