import logging
import re
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from theta_orbits.errors import ParameterError

logger = logging.getLogger(__name__)


class PairFamily(str, Enum):
    OSP = "OSp"
    UU = "UU"
    SPOSTAR = "SpOstar"


class Case(str, Enum):
    I = "I"
    II = "II"


class DualPairParams(BaseModel):
    """
    Parameters (family, p, q, t, n) of a dual pair with a compact factor of size t.

    For OSp the pair is O(p, q+t) x Sp(2n, R); UU carries (n1, n2) in place of n.
    Range and case flags are derived on demand and never stored.
    """

    model_config = ConfigDict(frozen=True)

    family: PairFamily = PairFamily.OSP
    p: int = Field(ge=0)
    q: int = Field(ge=0)
    t: int = Field(default=0, ge=0)
    n: Optional[int] = Field(default=None, ge=0)
    n1: Optional[int] = Field(default=None, ge=0)
    n2: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _family_fields(self) -> "DualPairParams":
        if self.family is PairFamily.UU:
            if self.n1 is None or self.n2 is None:
                raise ValueError("UU pairs need n1 and n2")
        elif self.n is None:
            raise ValueError(f"{self.family.value} pairs need n")
        return self

    @classmethod
    def osp(cls, p: int, q: int, t: int, n: int) -> "DualPairParams":
        return cls(family=PairFamily.OSP, p=p, q=q, t=t, n=n)

    @classmethod
    def parse(cls, text: str) -> "DualPairParams":
        """
        Parse the CLI pair syntax `osp:p,q,t,n`, `uu:p,q,t,n1,n2` or `spostar:p,q,t,n`.
        """
        match = re.fullmatch(r"\s*(\w+)\s*:\s*([\d,\s]+)", text)
        if not match:
            raise ParameterError(f"malformed pair {text!r}; expected e.g. osp:6,4,0,2")
        name, numbers = match.group(1).lower(), [int(v) for v in match.group(2).split(",") if v.strip()]
        families = {"osp": PairFamily.OSP, "uu": PairFamily.UU, "spostar": PairFamily.SPOSTAR}
        if name not in families:
            raise ParameterError(f"unknown pair family {name!r}")
        family = families[name]
        expected = 5 if family is PairFamily.UU else 4
        if len(numbers) != expected:
            raise ParameterError(f"{name} pairs take {expected} integers, got {len(numbers)}")
        if family is PairFamily.UU:
            p, q, t, n1, n2 = numbers
            return build_params(family=family, p=p, q=q, t=t, n1=n1, n2=n2)
        p, q, t, n = numbers
        return build_params(family=family, p=p, q=q, t=t, n=n)

    @property
    def parity_even(self) -> bool:
        return (self.p + self.q + self.t) % 2 == 0

    @property
    def stable(self) -> bool:
        return in_stable_range(self)

    def label(self) -> str:
        if self.family is PairFamily.UU:
            return f"uu:{self.p},{self.q},{self.t},{self.n1},{self.n2}"
        return f"{self.family.value.lower()}:{self.p},{self.q},{self.t},{self.n}"


def build_params(**fields) -> DualPairParams:
    """Construct params, converting validation failures into ParameterError."""
    try:
        return DualPairParams(**fields)
    except ValidationError as exc:
        raise ParameterError(str(exc)) from exc


def in_stable_range(pp: DualPairParams) -> bool:
    big = pp.q + pp.t
    if pp.family is PairFamily.OSP:
        return min(pp.p, big) >= 2 * pp.n and max(pp.p, big) > 2 * pp.n and pp.parity_even
    if pp.family is PairFamily.UU:
        return pp.p >= pp.n1 + pp.n2 and big >= pp.n1 + pp.n2
    return pp.p >= pp.n and big >= pp.n


def classify_case(pp: DualPairParams) -> Case:
    if not in_stable_range(pp):
        raise ParameterError(f"{pp.label()} is not in the stable range")
    if pp.family is PairFamily.OSP:
        first = pp.q >= pp.n
    elif pp.family is PairFamily.UU:
        first = pp.q >= pp.n1 and pp.q >= pp.n2
    else:
        first = 2 * pp.q >= pp.n
    return Case.I if first else Case.II


class BoundaryCodim(BaseModel):
    model_config = ConfigDict(frozen=True)

    ok: bool
    codim: Optional[int] = None


def boundary_codim_ok(pp: DualPairParams) -> BoundaryCodim:
    """
    Whether the boundary of the open stratum has codimension at least two.

    For OSp the codimension is 1 + n - t when t < n <= q and 1 + n - q when q < n.
    """
    if pp.family is PairFamily.OSP:
        if pp.n <= min(pp.q, pp.t):
            raise ParameterError(f"need n > min(q, t), got q={pp.q}, t={pp.t}, n={pp.n}")
        codim = 1 + pp.n - pp.t if pp.t < pp.n <= pp.q else 1 + pp.n - pp.q
        return BoundaryCodim(ok=codim >= 2, codim=codim)
    if pp.family is PairFamily.UU:
        return BoundaryCodim(ok=max(pp.n1, pp.n2) > min(pp.t, pp.n1, pp.n2))
    return BoundaryCodim(ok=pp.n > 2 * pp.t or pp.n % 2 == 1)
