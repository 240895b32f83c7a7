"""
Exact Hilbert function of C[W] / (psi+, psi-) by linear algebra on monomials.

Independent of the character engine: it only counts dimensions, bigraded
by the degrees in the first block and in the remaining blocks.
"""

import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def _monomials(variables: int, degree: int) -> Tuple[Monomial, ...]:
    if degree < 0:
        return ()
    return tuple(combinations_with_replacement(range(variables), degree))


def _quadrics(rows: int, n: int) -> List[Dict[Monomial, int]]:
    """psi_jk = sum_i z_ij z_ik for j <= k, with z_ij numbered i * n + j."""
    out = []
    for j in range(n):
        for k in range(j, n):
            out.append({tuple(sorted((i * n + j, i * n + k))): 1 for i in range(rows)})
    return out


def _multiples(
    gens: List[Dict[Monomial, int]], lower: Tuple[Monomial, ...], other: Tuple[Monomial, ...], columns: Dict, left: bool
) -> List[Dict[int, int]]:
    rows = []
    for g in gens:
        for m in lower:
            for o in other:
                row: Dict[int, int] = {}
                for term, c in g.items():
                    merged = tuple(sorted(term + m))
                    col = columns[(merged, o) if left else (o, merged)]
                    row[col] = row.get(col, 0) + c
                rows.append(row)
    return rows


def quotient_dims(pp: DualPairParams, dmax: int, charge: Optional[int] = None) -> List[int]:
    """
    dim (C[W] / I)_d for d <= dmax, I generated by the entries of (w+)^T w+ and w_-^T w_-.

    With `charge` set (n = 1 only) only bidegrees (a, b) with a - b = charge
    are counted, which is the U(1)-isotypic part of that weight.
    """
    if charge is not None and pp.n != 1:
        raise ParameterError("the charge filter needs n = 1")
    nx, ny = pp.p * pp.n, (pp.q + pp.t) * pp.n
    psi_plus, psi_minus = _quadrics(pp.p, pp.n), _quadrics(pp.q + pp.t, pp.n)
    dims = []
    for d in range(dmax + 1):
        total = 0
        for a in range(d + 1):
            b = d - a
            if charge is not None and a - b != charge:
                continue
            xs, ys = _monomials(nx, a), _monomials(ny, b)
            columns = {(mx, my): i for i, (mx, my) in enumerate((mx, my) for mx in xs for my in ys)}
            rows = _multiples(psi_plus, _monomials(nx, a - 2), ys, columns, left=True)
            rows += _multiples(psi_minus, _monomials(ny, b - 2), xs, columns, left=False)
            rank = 0
            if rows and columns:
                matrix = DomainMatrix(
                    {i: {j: QQ(c) for j, c in row.items()} for i, row in enumerate(rows)},
                    (len(rows), len(columns)),
                    QQ,
                )
                rank = matrix.rank()
            total += len(columns) - rank
        dims.append(total)
    logger.debug("ideal quotient dims for %s: %s", pp.label(), dims)
    return dims
