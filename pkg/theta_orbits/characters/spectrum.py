import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from theta_orbits.characters.decompose import decompose
from theta_orbits.characters.graded import nullcone_graded_character
from theta_orbits.characters.irreps import o_dim
from theta_orbits.characters.labels import OLabel, to_partition
from theta_orbits.dualpairs.params import build_params, in_stable_range
from theta_orbits.errors import ParameterError

logger = logging.getLogger(__name__)

KType = Tuple[OLabel, OLabel]


class KTypeSpectrum(BaseModel):
    """K = O(p) x O(q) types of the lift of the trivial character, degree by degree."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=0)
    q: int = Field(ge=0)
    n: int = Field(ge=0)
    degrees: List[Dict[KType, int]] = Field(default_factory=list)

    def dims(self) -> List[int]:
        return [
            sum(m * o_dim(self.p, a) * o_dim(self.q, b) for (a, b), m in types.items())
            for types in self.degrees
        ]

    def multiplicity(self, k_type: KType) -> int:
        return sum(types.get(k_type, 0) for types in self.degrees)

    def to_json(self) -> List[dict]:
        out = []
        dims = self.dims()
        for d, types in enumerate(self.degrees):
            rows = [
                {
                    "o_p": list(to_partition(self.p, a)),
                    "o_q": list(to_partition(self.q, b)),
                    "mult": m,
                }
                for (a, b), m in types.items()
            ]
            rows.sort(key=lambda row: (row["o_p"], row["o_q"]))
            out.append({"degree": d, "dim": dims[d], "k_types": rows})
        return out


def theta_sigma_spectrum(p: int, q: int, n: int, dmax: int, max_terms: Optional[int] = None) -> KTypeSpectrum:
    """
    K-types of the graded lift of the trivial character of the metaplectic group.

    Decomposes C[N] degreewise and keeps the U(n)-isotypic part det**(-(p-q)/2),
    which tensoring with det**((p-q)/2) turns into U(n)-invariants.
    """
    pp = build_params(p=p, q=q, t=0, n=n)
    if not in_stable_range(pp):
        raise ParameterError(f"{pp.label()} must be in the stable range with p+q even")
    k = (p - q) // 2
    target = (-k,) * n
    graded = nullcone_graded_character(pp, dmax, max_terms)
    degrees: List[Dict[KType, int]] = []
    for d, piece in enumerate(graded.pieces):
        kept: Dict[KType, int] = {}
        for labels, mult in decompose(piece).items():
            if tuple(labels[2]) == target:
                kept[(labels[0], labels[1])] = kept.get((labels[0], labels[1]), 0) + mult
        degrees.append(kept)
        logger.debug("degree %d of %s: %d K-types", d, pp.label(), len(kept))
    return KTypeSpectrum(p=p, q=q, n=n, degrees=degrees)
