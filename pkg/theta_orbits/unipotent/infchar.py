from collections import Counter
from typing import Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field
from sympy import Rational

from theta_orbits.errors import ParameterError
from theta_orbits.partitions.partition import Partition


class InfChar(BaseModel):
    """Infinitesimal character as a multiset of half-integers of a fixed rank."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: Tuple[Rational, ...]
    rank: int = Field(ge=0)

    def multiset(self) -> Counter:
        return Counter(self.entries)

    def sorted_entries(self) -> Tuple[Rational, ...]:
        return tuple(sorted(self.entries, reverse=True))

    def has_zero(self) -> bool:
        return any(e == 0 for e in self.entries)

    def to_json(self) -> List[str]:
        return [str(e) for e in self.sorted_entries()]


def delta_vector(N: int) -> Tuple[Rational, ...]:
    """(N/2 - 1, N/2 - 2, ...) with floor(N/2) entries."""
    if N < 0:
        raise ParameterError(f"delta_N needs N >= 0, got {N}")
    return tuple(Rational(N, 2) - k for k in range(1, N // 2 + 1))


def normalize(entries: Iterable[Rational], rank: int) -> InfChar:
    """Insert or remove zeros until there are `rank` entries."""
    entries = [Rational(e) for e in entries]
    surplus = len(entries) - rank
    if surplus > 0:
        zeros = sum(1 for e in entries if e == 0)
        if zeros < surplus:
            raise ParameterError(
                f"cannot reach rank {rank}: {surplus} entries too many but only {zeros} zeros"
            )
        for _ in range(surplus):
            entries.remove(0)
    else:
        entries.extend([Rational(0)] * -surplus)
    return InfChar(entries=tuple(entries), rank=rank)


def inf_char_theta_L(p: int, q: int, t: int, n: int) -> InfChar:
    """(delta_t, delta_{p+q-2n}, delta_{2n-t+2}) normalized to rank floor((p+q)/2)."""
    raw = delta_vector(t) + delta_vector(p + q - 2 * n) + delta_vector(2 * n - t + 2)
    return normalize(raw, (p + q) // 2)


def half_h_dual(dual_orbit: Partition, rank: int) -> InfChar:
    """One half of the neutral element attached to the dual orbit: delta_{a+1} for every row a."""
    raw: Tuple[Rational, ...] = ()
    for row in dual_orbit.rows:
        raw += delta_vector(row + 1)
    return normalize(raw, rank)
