from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from theta_orbits.characters.labels import OLabel, conjugate_columns, from_partition
from theta_orbits.errors import ParameterError


class GenuineCompactType(BaseModel):
    """
    Irrep mu of the double cover of O(t) that occurs in the compact pair (O(t), Sp(2n)).

    mu = varsigma_2 (x) [partition] (x) det**det_twist, where varsigma_2 is the
    genuine character with varsigma_2**2 = det**n. `half_twist` marks the
    genuine factor and must equal n % 2 once a pair is attached.
    """

    model_config = ConfigDict(frozen=True)

    partition: Tuple[int, ...] = ()
    det_twist: int = Field(default=0, ge=0, le=1)
    half_twist: bool = False

    @field_validator("partition")
    @classmethod
    def _partition(cls, rows: Tuple[int, ...]) -> Tuple[int, ...]:
        rows = tuple(r for r in rows if r != 0)
        if any(r < 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"{rows} is not a partition")
        return rows

    @classmethod
    def for_pair(cls, partition: Tuple[int, ...], n: int, det_twist: int = 0) -> "GenuineCompactType":
        return cls(partition=tuple(partition), det_twist=det_twist, half_twist=n % 2 == 1)

    def fits(self, t: int) -> bool:
        cols = conjugate_columns(self.partition)
        return (cols[0] if cols else 0) + (cols[1] if len(cols) > 1 else 0) <= t

    def check_for(self, t: int, n: int) -> None:
        if not self.fits(t):
            raise ParameterError(f"partition {self.partition} does not label an O({t}) irrep")
        if self.half_twist != (n % 2 == 1):
            raise ParameterError(
                f"half_twist={self.half_twist} does not match n={n}: the cover over O({t}) "
                f"is {'non' if n % 2 else ''}split"
            )

    def honest_label(self, t: int, n: int) -> OLabel:
        """O(t) label of tau = varsigma_2 (x) mu = det**n (x) [partition] (x) det**det_twist."""
        self.check_for(t, n)
        return from_partition(t, self.partition, (self.det_twist + n) % 2)

    def describe(self) -> str:
        rows = ",".join(str(r) for r in self.partition)
        twist = " (x) det" if self.det_twist else ""
        return f"[{rows}]{twist}" + (" genuine" if self.half_twist else "")
