import logging
from typing import Dict, Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from theta_orbits.characters.isotropy import case1_isotropy_dim, case2_isotropy_dim
from theta_orbits.config import load_settings
from theta_orbits.dualpairs.params import Case, DualPairParams, classify_case, in_stable_range
from theta_orbits.errors import ParameterError, TruncationError
from theta_orbits.orbitlifts.compact_type import GenuineCompactType
from theta_orbits.orbitlifts.lifts import Provenance, add_column_lift, lift_orbit, lift_zero
from theta_orbits.partitions.signed_partition import SignedPartition, require_valid

logger = logging.getLogger(__name__)


class CycleTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    mult: int = Field(ge=0)
    orbit: SignedPartition


class OrbitCycle(BaseModel):
    """
    Formal nonnegative combination of orbit closures.

    Equal orbits are merged, zero terms dropped and the rest sorted by their
    text form, so equal cycles compare equal.
    """

    model_config = ConfigDict(frozen=True)

    terms: Tuple[CycleTerm, ...] = ()

    @field_validator("terms")
    @classmethod
    def _merge(cls, terms: Tuple[CycleTerm, ...]) -> Tuple[CycleTerm, ...]:
        merged: Dict[SignedPartition, int] = {}
        for term in terms:
            require_valid(term.orbit)
            merged[term.orbit] = merged.get(term.orbit, 0) + term.mult
        kept = [CycleTerm(mult=m, orbit=o) for o, m in merged.items() if m > 0]
        return tuple(sorted(kept, key=lambda term: term.orbit.to_text()))

    @classmethod
    def of(cls, *pairs: Tuple[int, SignedPartition]) -> "OrbitCycle":
        return cls(terms=tuple(CycleTerm(mult=m, orbit=o) for m, o in pairs))

    @classmethod
    def sum(cls, cycles: Iterable["OrbitCycle"]) -> "OrbitCycle":
        return cls(terms=tuple(term for c in cycles for term in c.terms))

    def __add__(self, other: "OrbitCycle") -> "OrbitCycle":
        return OrbitCycle(terms=self.terms + other.terms)

    def scale(self, k: int) -> "OrbitCycle":
        if k < 0:
            raise ParameterError("cycles have nonnegative multiplicities")
        return OrbitCycle(terms=tuple(CycleTerm(mult=k * t.mult, orbit=t.orbit) for t in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list:
        return [{"mult": t.mult, "orbit": t.orbit.to_text()} for t in self.terms]


def lift_cycle(cycle: OrbitCycle, target: DualPairParams) -> OrbitCycle:
    """Lift every term of a symplectic cycle to O(target.p, target.q), keeping multiplicities."""
    return OrbitCycle.of(*((t.mult, add_column_lift(t.orbit, target.p, target.q)) for t in cycle.terms))


def assoc_cycle_theta_sigma(p: int, q: int, n: int) -> OrbitCycle:
    """Associated cycle of the lift of the trivial character: the closure of O_{p,q} once."""
    pp = DualPairParams.osp(p, q, 0, n)
    if not in_stable_range(pp):
        raise ParameterError(f"{pp.label()} must be in the stable range with p+q even")
    return OrbitCycle.of((1, lift_zero(p, q, n)))


class AssociatedCycle(BaseModel):
    model_config = ConfigDict(frozen=True)

    cycle: OrbitCycle
    multiplicity: int
    nonzero: bool
    provenance: Provenance
    case: Case
    stabilized: bool = True

    def to_json(self) -> dict:
        return {
            "cycle": self.cycle.to_json(),
            "multiplicity": self.multiplicity,
            "nonzero": self.nonzero,
            "provenance": self.provenance.value,
            "case": self.case.value,
            "stabilized": self.stabilized,
        }


def assoc_cycle_theta_L(
    pp: DualPairParams,
    mu: GenuineCompactType,
    dmax: Optional[int] = None,
    window: Optional[int] = None,
) -> AssociatedCycle:
    """
    Associated cycle of the lift of the lowest weight module attached to mu.

    Case I multiplies the lifted orbit by the isotropy dimension from O(t)
    branching. Case II runs the truncated smaller-pair pipeline and raises
    TruncationError if it has not stabilized by `dmax`.
    """
    case = classify_case(pp)
    mu.check_for(pp.t, pp.n)
    orbit, provenance = lift_orbit(pp)
    if case is Case.I:
        multiplicity = case1_isotropy_dim(mu, pp.t, pp.n)
    else:
        settings = load_settings()
        dmax = settings.dmax if dmax is None else dmax
        window = settings.window if window is None else window
        multiplicity, stabilized = case2_isotropy_dim(pp, mu, dmax, window)
        if not stabilized:
            raise TruncationError(
                f"isotropy dimension for {pp.label()} not constant over {window} degrees by dmax={dmax}",
                partial_value=multiplicity,
                dmax=dmax,
            )
    logger.debug("%s %s: multiplicity %d on %s", pp.label(), mu.describe(), multiplicity, orbit)
    return AssociatedCycle(
        cycle=OrbitCycle.of((multiplicity, orbit)),
        multiplicity=multiplicity,
        nonzero=multiplicity > 0,
        provenance=provenance,
        case=case,
    )
