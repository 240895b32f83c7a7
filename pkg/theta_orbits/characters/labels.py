"""
Irreducible-representation labels for the compact factors U(a) and O(b).

An O(b) irrep is carried as (nu, eps): nu is a dominant SO(b) weight with
nu_1 >= ... >= nu_m >= 0 (m = b // 2) and eps is the eigenvalue of the
reflection diag(1, ..., 1, -1) on the highest weight vector. When the irrep
restricts to SO(b) as V_nu + V_nu-bar (b even, nu_m > 0) there is no such
sign and eps is fixed to +1.
"""

from itertools import product
from typing import Iterator, NamedTuple, Sequence, Tuple

from theta_orbits.errors import ParameterError


class OLabel(NamedTuple):
    nu: Tuple[int, ...]
    eps: int = 1


ULabel = Tuple[int, ...]


def o_rank(b: int) -> int:
    return b // 2


def is_split(b: int, nu: Sequence[int]) -> bool:
    """True when the O(b) irrep stays irreducible on SO(b)."""
    return b % 2 == 1 or not nu or nu[-1] == 0


def make_o_label(b: int, nu: Sequence[int], eps: int = 1) -> OLabel:
    m = o_rank(b)
    nu = tuple(int(v) for v in nu) + (0,) * (m - len(nu))
    if len(nu) != m:
        raise ParameterError(f"O({b}) weights have {m} entries, got {nu}")
    if any(v < 0 for v in nu) or any(a < c for a, c in zip(nu, nu[1:])):
        raise ParameterError(f"{nu} is not a dominant O({b}) weight")
    if eps not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {eps}")
    if b == 0 or not is_split(b, nu):
        eps = 1
    return OLabel(nu, eps)


def conjugate_columns(lam: Sequence[int]) -> Tuple[int, ...]:
    lam = [v for v in lam if v > 0]
    if not lam:
        return ()
    return tuple(sum(1 for r in lam if r > j) for j in range(lam[0]))


def from_partition(b: int, lam: Sequence[int], det_twist: int = 0) -> OLabel:
    """
    Convert a partition label [lam] (tensored with det**det_twist) into (nu, eps).

    Partitions with more than b // 2 rows are associated to a shorter
    partition tensored with det.
    """
    lam = tuple(v for v in lam if v > 0)
    cols = conjugate_columns(lam)
    first = cols[0] if cols else 0
    second = cols[1] if len(cols) > 1 else 0
    if first + second > b:
        raise ParameterError(f"partition {lam} does not label an O({b}) irrep")
    m = o_rank(b)
    if first <= m:
        label = make_o_label(b, lam, 1)
    else:
        label = make_o_label(b, lam[: b - first], -1)
    if det_twist % 2:
        label = tensor_det(b, label)
    return label


def to_partition(b: int, label: OLabel) -> Tuple[int, ...]:
    """Partition label of an O(b) irrep; inverse of `from_partition` without twist."""
    rows = tuple(v for v in label.nu if v > 0)
    if label.eps == 1:
        return rows
    return rows + (1,) * (b - 2 * len(rows))


def tensor_det(b: int, label: OLabel) -> OLabel:
    if b > 0 and is_split(b, label.nu):
        return OLabel(label.nu, -label.eps)
    return label


def trivial_o(b: int) -> OLabel:
    return OLabel((0,) * o_rank(b), 1)


def det_o(b: int) -> OLabel:
    return OLabel((0,) * o_rank(b), -1)


def make_u_label(a: int, lam: Sequence[int]) -> ULabel:
    lam = tuple(int(v) for v in lam)
    if len(lam) != a or any(x < y for x, y in zip(lam, lam[1:])):
        raise ParameterError(f"{lam} is not a dominant U({a}) weight")
    return lam


def format_o_label(b: int, label: OLabel) -> str:
    rows = to_partition(b, label)
    return "[" + ",".join(str(r) for r in rows) + "]"


def interlacing(nu: Sequence[int], length: int) -> Iterator[Tuple[int, ...]]:
    """Weights kappa of the given length with nu_(i+1) <= kappa_i <= nu_i (nu padded by zeros)."""
    padded = tuple(nu) + (0,) * (length + 1)
    ranges = [range(padded[i + 1], padded[i] + 1) for i in range(length)]
    yield from product(*ranges)
