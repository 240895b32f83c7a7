"""
Graded characters of the Fock model C[W] and of the null-cone coordinate ring.

W = M_{p,n} + M_{q,n} + M_{t,n} carries O(p) x O(q) x O(t) on the rows and
U(n) on the columns. Coordinate functions of the first block have U(n)
weight +e_j, those of the other blocks -e_j.
"""

import logging
from math import comb
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from theta_orbits.characters.formal import (
    FormalCharacter,
    O,
    Poly,
    ProductGroup,
    SectorKey,
    U,
    Weight,
)
from theta_orbits.config import load_settings
from theta_orbits.dualpairs.params import DualPairParams, PairFamily, in_stable_range
from theta_orbits.errors import FreenessError, ParameterError

logger = logging.getLogger(__name__)

# (sign, degree step, weight) of one factor 1 / (1 - sign * e**weight * z**step)
Variable = Tuple[int, int, Weight]


class GradedCharacter(BaseModel):
    model_config = ConfigDict(frozen=True)

    group: ProductGroup
    pieces: List[FormalCharacter]

    @property
    def dmax(self) -> int:
        return len(self.pieces) - 1

    def degree(self, d: int) -> FormalCharacter:
        return self.pieces[d]

    def dims(self) -> List[int]:
        return [piece.dim() for piece in self.pieces]


def fock_group(pp: DualPairParams) -> ProductGroup:
    """K x K' for the Fock model: O(p) x O(q) [x O(t)] x U(n)."""
    blocks = [O(pp.p), O(pp.q)] + ([O(pp.t)] if pp.t else [])
    return ProductGroup.of(*blocks, U(pp.n))


def _row_eigenvalues(b: int, twisted: bool) -> List[Tuple[int, int, Weight]]:
    """Eigen-monomials of the standard O(b) module in one sector, as (sign, step, block weight)."""
    m = b // 2
    zero = (0,) * m

    def unit(k: int, s: int) -> Weight:
        return tuple(s if i == k else 0 for i in range(m))

    planes = m - 1 if twisted and b % 2 == 0 else m
    out = [(1, 1, unit(k, s)) for k in range(planes) for s in (1, -1)]
    if b % 2:
        out.append((-1 if twisted else 1, 1, zero))
    elif twisted and m:
        # the reflected plane has eigenvalues +1, -1, giving 1 / (1 - z**2)
        out.append((1, 2, zero))
    return out


def _series(variables: List[Variable], rank: int, dmax: int) -> List[Poly]:
    polys: List[Poly] = [{(0,) * rank: 1}] + [{} for _ in range(dmax)]
    for sign, step, v in variables:
        for d in range(step, dmax + 1):
            target = polys[d]
            for w, c in polys[d - step].items():
                moved = tuple(x + y for x, y in zip(w, v))
                target[moved] = target.get(moved, 0) + sign * c
    return [{w: c for w, c in poly.items() if c} for poly in polys]


def _check_size(variables: int, dmax: int, max_terms: Optional[int]) -> None:
    cap = load_settings().max_terms if max_terms is None else max_terms
    monomials = comb(variables + dmax - 1, dmax) if variables else 1
    if monomials > cap:
        raise ParameterError(
            f"{variables} variables up to degree {dmax} give {monomials} monomials, above the cap {cap}"
        )


def fock_graded_character(pp: DualPairParams, dmax: int, max_terms: Optional[int] = None) -> GradedCharacter:
    """Degree-d pieces of C[W] = Sym(W*) for d <= dmax."""
    if pp.family is not PairFamily.OSP:
        raise ParameterError(f"Fock characters are implemented for OSp pairs, got {pp.family.value}")
    if dmax < 0:
        raise ParameterError("dmax must be nonnegative")
    _check_size((pp.p + pp.q + pp.t) * pp.n, dmax, max_terms)
    group = fock_group(pp)
    u_index = len(group.factors) - 1
    u_block = group.block(u_index)
    blocks = [(i, f.size, 1 if i == 0 else -1) for i, f in enumerate(group.factors[:u_index])]
    sectors: List[Dict[SectorKey, Poly]] = [{} for _ in range(dmax + 1)]
    positions = {index: pos for pos, index in enumerate(group.sector_factors)}
    for key in group.sector_keys():
        variables: List[Variable] = []
        for index, size, charge in blocks:
            twisted = index in positions and key[positions[index]] == 1
            block = group.block(index)
            for sign, step, row_weight in _row_eigenvalues(size, twisted):
                for j in range(pp.n):
                    w = [0] * group.rank
                    w[block] = row_weight
                    w[u_block.start + j] = step * charge
                    variables.append((sign, step, tuple(w)))
        for d, poly in enumerate(_series(variables, group.rank, dmax)):
            if poly:
                sectors[d][key] = poly
    logger.debug("Fock character of %s up to degree %d", pp.label(), dmax)
    return GradedCharacter(group=group, pieces=[FormalCharacter.of(group, s) for s in sectors])


def pprime_graded_character(group: ProductGroup, n: int, dmax: int) -> GradedCharacter:
    """
    S(p') with p' = Sym^2(C^n) + Sym^2(C^n)*, generators in degree 2.

    The generators are the O-invariant quadrics with U(n) weights +-(e_j + e_k),
    so every sector sees the same series.
    """
    u_block = group.block(len(group.factors) - 1)
    variables: List[Variable] = []
    for j in range(n):
        for k in range(j, n):
            for charge in (1, -1):
                w = [0] * group.rank
                w[u_block.start + j] += charge
                w[u_block.start + k] += charge
                variables.append((1, 2, tuple(w)))
    series = _series(variables, group.rank, dmax)
    pieces = []
    for poly in series:
        pieces.append(FormalCharacter.of(group, {key: dict(poly) for key in group.sector_keys()} if poly else {}))
    return GradedCharacter(group=group, pieces=pieces)


def nullcone_graded_character(
    pp: DualPairParams, dmax: int, max_terms: Optional[int] = None
) -> GradedCharacter:
    """
    Graded character of C[N] for the null cone N, by dividing C[W] by S(p').

    Uses C[W] = C[N] (x) S(p') in the stable range; a negative ordinary
    coefficient means the freeness does not hold and raises FreenessError.
    """
    if not in_stable_range(pp):
        raise ParameterError(f"{pp.label()} is not in the stable range")
    fock = fock_graded_character(pp, dmax, max_terms)
    pprime = pprime_graded_character(fock.group, pp.n, dmax)
    pieces: List[FormalCharacter] = []
    for d in range(dmax + 1):
        piece = fock.degree(d)
        for e in range(1, d // 2 + 1):
            piece = piece - pprime.degree(2 * e).tensor(pieces[d - 2 * e])
        negative = piece.negative_ordinary()
        if negative:
            raise FreenessError(
                f"C[W] is not free over S(p') for {pp.label()}: negative coefficients in degree {d}",
                {"degree": d, "weights": [list(w) for w, _ in negative[:5]]},
            )
        pieces.append(piece)
    logger.info("null cone character of %s: dims %s", pp.label(), [p.dim() for p in pieces])
    return GradedCharacter(group=fock.group, pieces=pieces)
