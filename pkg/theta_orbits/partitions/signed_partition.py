import re
from collections import defaultdict
from enum import Enum
from typing import Dict, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from theta_orbits.errors import ParameterError
from theta_orbits.partitions.partition import Partition

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_ROW_PATTERN = re.compile(r"^(\d+)([+-])(?:\^(\d+))?$")


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"

    def flip(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @property
    def subscript(self) -> str:
        return "₊" if self is Sign.PLUS else "₋"


class Family(str, Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"


class SignedRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    len: int = Field(gt=0)
    sign: Sign
    mult: int = Field(gt=0)

    def box_counts(self) -> Tuple[int, int]:
        """(#+, #-) boxes in a single row."""
        lead = (self.len + 1) // 2
        trail = self.len // 2
        return (lead, trail) if self.sign is Sign.PLUS else (trail, lead)


def _canonical(rows: Iterable[SignedRow]) -> Tuple[SignedRow, ...]:
    merged: Dict[Tuple[int, Sign], int] = defaultdict(int)
    for row in rows:
        merged[(row.len, row.sign)] += row.mult
    keys = sorted(merged, key=lambda k: (-k[0], k[1] is Sign.MINUS))
    return tuple(SignedRow(len=k[0], sign=k[1], mult=merged[k]) for k in keys if merged[k] > 0)


class SignedPartition(BaseModel):
    """
    Signed Young diagram with rows stored as (length, leading sign, multiplicity).

    Rows are merged and put in canonical order on construction: length
    descending, + before -.
    """

    model_config = ConfigDict(frozen=True)

    rows: Tuple[SignedRow, ...] = ()
    family: Family

    @field_validator("rows")
    @classmethod
    def _canonical_rows(cls, rows: Tuple[SignedRow, ...]) -> Tuple[SignedRow, ...]:
        return _canonical(rows)

    @classmethod
    def build(cls, family: Family, *rows: Tuple[int, str, int]) -> "SignedPartition":
        """`build(Family.ORTHOGONAL, (3, "+", 2), (1, "-", 0))`; zero multiplicities are dropped."""
        kept = [SignedRow(len=n, sign=Sign(s), mult=m) for n, s, m in rows if m > 0]
        return cls(rows=tuple(kept), family=family)

    @classmethod
    def parse(cls, text: str, family: Family) -> "SignedPartition":
        """Parse the text form `3+^2 2+ 2- 1+^2`."""
        rows = []
        for token in text.split():
            match = _ROW_PATTERN.match(token)
            if not match:
                raise ParameterError(f"cannot parse signed row {token!r}")
            length, sign, mult = match.groups()
            rows.append(SignedRow(len=int(length), sign=Sign(sign), mult=int(mult or 1)))
        return cls(rows=tuple(rows), family=family)

    def to_text(self) -> str:
        return " ".join(
            f"{r.len}{r.sign.value}" + (f"^{r.mult}" if r.mult > 1 else "") for r in self.rows
        )

    def to_superscript(self) -> str:
        if not self.rows:
            return "∅"
        return "".join(
            f"{r.len}{r.sign.subscript}" + (str(r.mult).translate(_SUPERSCRIPTS) if r.mult > 1 else "")
            for r in self.rows
        )

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "rows": [{"len": r.len, "sign": r.sign.value, "mult": r.mult} for r in self.rows],
        }

    def unsigned(self) -> Partition:
        parts: List[int] = []
        for r in self.rows:
            parts.extend([r.len] * r.mult)
        return Partition.of(*parts)

    def count(self, length: int, sign: str) -> int:
        for r in self.rows:
            if r.len == length and r.sign is Sign(sign):
                return r.mult
        return 0

    def __str__(self) -> str:
        return self.to_text()


def validate_signed(sp: SignedPartition) -> Tuple[bool, List[str]]:
    """Check the pairing rule of the declared family; returns (ok, violations)."""
    violations = []
    paired_parity = 0 if sp.family is Family.ORTHOGONAL else 1
    lengths = sorted({r.len for r in sp.rows}, reverse=True)
    for length in lengths:
        if length % 2 != paired_parity:
            continue
        plus, minus = sp.count(length, "+"), sp.count(length, "-")
        if plus != minus:
            violations.append(
                f"rows of length {length} must pair with opposite leading signs ({plus}+ vs {minus}-)"
            )
    return not violations, violations


def signature(sp: SignedPartition) -> Tuple[int, int]:
    plus = minus = 0
    for row in sp.rows:
        a, b = row.box_counts()
        plus += a * row.mult
        minus += b * row.mult
    return plus, minus


def require_valid(sp: SignedPartition) -> SignedPartition:
    ok, violations = validate_signed(sp)
    if not ok:
        raise ParameterError(f"invalid signed partition {sp}: {'; '.join(violations)}")
    return sp


def orbit_from_ranks(p: int, q: int, rank_x: int, rank_xxt: int, rank_xtx: int) -> SignedPartition:
    """
    Orbit of X = [[0, x], [-x^T, 0]] in so(p+q) from the ranks of x, x x^T and x^T x.

    Only orbits with rows of length at most 3 arise: 3+ rows are counted by
    rank(x x^T), 3- rows by rank(x^T x) and the rest of rank(x) is paired rows
    of length 2.
    """
    pairs = rank_x - rank_xxt - rank_xtx
    ones_plus = p - (2 * rank_xxt + rank_xtx + 2 * pairs)
    ones_minus = q - (rank_xxt + 2 * rank_xtx + 2 * pairs)
    if min(pairs, ones_plus, ones_minus) < 0:
        raise ParameterError(
            f"rank profile (x={rank_x}, xx^T={rank_xxt}, x^Tx={rank_xtx}) is impossible for O({p},{q})"
        )
    return SignedPartition.build(
        Family.ORTHOGONAL,
        (3, "+", rank_xxt),
        (3, "-", rank_xtx),
        (2, "+", pairs),
        (2, "-", pairs),
        (1, "+", ones_plus),
        (1, "-", ones_minus),
    )
