"""Dimensions of the isotropy representations at generic points of the lifted orbit."""

import logging
from collections import Counter
from typing import TYPE_CHECKING, List, Tuple

from theta_orbits.characters.decompose import branch_O
from theta_orbits.characters.irreps import o_dim
from theta_orbits.characters.labels import to_partition, trivial_o
from theta_orbits.characters.spectrum import theta_sigma_spectrum
from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError

if TYPE_CHECKING:
    from theta_orbits.orbitlifts.compact_type import GenuineCompactType

logger = logging.getLogger(__name__)


def case1_isotropy_dim(mu: "GenuineCompactType", t: int, n: int) -> int:
    """
    dim of the isotropy representation when q >= n.

    It is tau = varsigma_2 (x) mu itself for t <= n and its O(t-n)-invariants
    otherwise.
    """
    tau = mu.honest_label(t, n)
    if t <= n:
        return o_dim(t, tau)
    branched = branch_O(tau, t, n)
    return branched.get(trivial_o(t - n), 0)


def first_degree_bound(branched: Counter, t_s: int, n_s: int, k: int) -> int:
    """
    Last degree at which a K-type with O(t_s) component in `branched` can first occur.

    Harmonics of M_{t_s, n_s} carry [rho] only when rho has at most n_s rows, in
    degree |rho|; the matching O(p_s) type has size |rho| - k n_s.
    """
    bound = 0
    for rho in branched:
        rows = to_partition(t_s, rho)
        if len(rows) <= n_s:
            bound = max(bound, 2 * sum(rows) + abs(k) * n_s)
    return bound


def case2_isotropy_dim(
    pp: DualPairParams, mu: "GenuineCompactType", dmax: int, window: int
) -> Tuple[int, bool]:
    """
    Truncated isotropy dimension when q < n.

    Pairs the K-spectrum of the smaller pair (p-2q, t-q, n-q) with tau
    restricted to O(t-q): each K-type (alpha, rho) contributes
    mult * dim(alpha) * [rho : tau]. The total is stable once every branched
    rho has had its chance to appear and it then stayed constant over
    `window` nonempty degrees.
    """
    p, q, t, n = pp.p, pp.q, pp.t, pp.n
    if not q < n:
        raise ParameterError(f"case II needs q < n, got q={q}, n={n}")
    if window < 1:
        raise ParameterError("window must be positive")
    p_s, t_s, n_s = p - 2 * q, t - q, n - q
    tau = mu.honest_label(t, n)
    branched = branch_O(tau, t, q)
    start = first_degree_bound(branched, t_s, n_s, (p_s - t_s) // 2)
    spectrum = theta_sigma_spectrum(p_s, t_s, n_s, dmax)
    running = 0
    history: List[int] = []
    for d, types in enumerate(spectrum.degrees):
        for (alpha, rho), mult in types.items():
            if rho in branched:
                running += mult * o_dim(p_s, alpha) * branched[rho]
        if d < start or not types:
            continue
        history.append(running)
        if len(history) >= window and len(set(history[-window:])) == 1:
            logger.info("isotropy dimension for %s stabilized at degree %d: %d", pp.label(), d, running)
            return running, True
    logger.warning(
        "isotropy dimension for %s not stable by degree %d (last %d, window opens at %d)",
        pp.label(),
        dmax,
        running,
        start,
    )
    return running, False
