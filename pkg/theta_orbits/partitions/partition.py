import logging
from collections import Counter
from enum import Enum
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from theta_orbits.errors import ParameterError

logger = logging.getLogger(__name__)


class Level(str, Enum):
    COMPLEX = "complex"
    K = "K"


class Partition(BaseModel):
    """A partition stored as weakly decreasing positive rows."""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[int, ...] = ()

    @field_validator("rows")
    @classmethod
    def _weakly_decreasing(cls, rows: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(r <= 0 for r in rows):
            raise ValueError(f"rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")
        return rows

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build from parts in any order; zeros are dropped."""
        return cls(rows=tuple(sorted((p for p in parts if p), reverse=True)))

    @classmethod
    def from_counts(cls, counts: Iterable[Tuple[int, int]]) -> "Partition":
        """Build from (part, multiplicity) pairs."""
        parts: List[int] = []
        for part, mult in counts:
            parts.extend([part] * mult)
        return cls.of(*parts)

    def total(self) -> int:
        return sum(self.rows)

    def multiplicities(self) -> Counter:
        return Counter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.rows) + ")"


class LieType(BaseModel):
    """so(m) for letters B (m odd) and D (m even); sp(m) for C (m even)."""

    model_config = ConfigDict(frozen=True)

    letter: str
    m: int

    @model_validator(mode="after")
    def _carrier_parity(self) -> "LieType":
        if self.letter not in ("B", "C", "D"):
            raise ValueError(f"unknown letter {self.letter}")
        if self.m < 0:
            raise ValueError("rank carrier must be nonnegative")
        if self.letter == "B" and self.m % 2 == 0:
            raise ValueError("type B needs odd m")
        if self.letter in ("C", "D") and self.m % 2 == 1:
            raise ValueError(f"type {self.letter} needs even m")
        return self

    @classmethod
    def orthogonal(cls, m: int) -> "LieType":
        return cls(letter="B" if m % 2 else "D", m=m)

    @classmethod
    def symplectic(cls, m: int) -> "LieType":
        return cls(letter="C", m=m)

    @property
    def is_orthogonal(self) -> bool:
        return self.letter != "C"

    def algebra_dim(self) -> int:
        if self.is_orthogonal:
            return self.m * (self.m - 1) // 2
        return self.m * (self.m + 1) // 2

    def __str__(self) -> str:
        return f"so({self.m})" if self.is_orthogonal else f"sp({self.m})"


def transpose(p: Partition) -> Partition:
    if not p.rows:
        return Partition()
    return Partition(rows=tuple(sum(1 for r in p.rows if r > j) for j in range(p.rows[0])))


def _bad_parity(lie_type: LieType) -> int:
    # orthogonal: even parts need even multiplicity; symplectic: odd parts
    return 0 if lie_type.is_orthogonal else 1


def is_valid_for(p: Partition, lie_type: LieType) -> bool:
    if p.total() != lie_type.m:
        return False
    bad = _bad_parity(lie_type)
    return all(mult % 2 == 0 for part, mult in p.multiplicities().items() if part % 2 == bad)


def _check_total(p: Partition, lie_type: LieType) -> None:
    if p.total() != lie_type.m:
        raise ParameterError(f"partition {p} has total {p.total()}, expected {lie_type.m} for {lie_type}")


def collapse(p: Partition, lie_type: LieType) -> Partition:
    """
    Largest partition in dominance order below `p` that is valid for `lie_type`.

    Repeatedly takes the largest part q with the wrong multiplicity parity,
    lowers its last occurrence by one and raises the first later part that is
    smaller than q - 1.
    """
    _check_total(p, lie_type)
    bad = _bad_parity(lie_type)
    rows = list(p.rows)
    while True:
        counts = Counter(rows)
        offenders = [part for part, mult in counts.items() if part % 2 == bad and mult % 2 == 1]
        if not offenders:
            break
        q = max(offenders)
        last = max(i for i, r in enumerate(rows) if r == q)
        rows[last] -= 1
        target = last + 1
        while target < len(rows) and rows[target] >= q - 1:
            target += 1
        if target == len(rows):
            rows.append(0)
        rows[target] += 1
        rows = [r for r in rows if r > 0]
    result = Partition.of(*rows)
    logger.debug("collapse %s in %s -> %s", p, lie_type, result)
    return result


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True when every prefix sum of `a` is at most the matching prefix sum of `b`."""
    width = max(len(a.rows), len(b.rows))
    pa = list(accumulate(a.rows + (0,) * (width - len(a.rows))))
    pb = list(accumulate(b.rows + (0,) * (width - len(b.rows))))
    return all(x <= y for x, y in zip(pa, pb))


def _centralizer_dim(p: Partition, lie_type: LieType) -> int:
    squares = sum(c * c for c in transpose(p).rows)
    odd_parts = sum(1 for r in p.rows if r % 2 == 1)
    if lie_type.is_orthogonal:
        return (squares - odd_parts) // 2
    return (squares + odd_parts) // 2


def orbit_dim(p, lie_type: LieType, level: Level = Level.COMPLEX) -> int:
    """
    Dimension of the nilpotent orbit with Jordan type `p`.

    Accepts a Partition or anything with an `unsigned()` method (signed
    partitions). At the K level the value is half the complex dimension.
    """
    if hasattr(p, "unsigned"):
        p = p.unsigned()
    if not is_valid_for(p, lie_type):
        raise ParameterError(f"{p} is not a nilpotent orbit of {lie_type}")
    complex_dim = lie_type.algebra_dim() - _centralizer_dim(p, lie_type)
    if Level(level) is Level.COMPLEX:
        return complex_dim
    if complex_dim % 2:
        raise ParameterError(f"odd complex orbit dimension {complex_dim} for {p} in {lie_type}")
    return complex_dim // 2


@lru_cache(maxsize=None)
def _partitions_of(total: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions_of(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(total: int) -> Iterator[Partition]:
    """All partitions of `total`, in reverse lexicographic order."""
    for rows in _partitions_of(total, total):
        yield Partition(rows=rows)


def valid_partitions(lie_type: LieType) -> Iterator[Partition]:
    for p in partitions_of(lie_type.m):
        if is_valid_for(p, lie_type):
            yield p
