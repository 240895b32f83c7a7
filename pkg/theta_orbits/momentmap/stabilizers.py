"""
Linearized group actions: orbit dimensions as Jacobian ranks, stabilizer
algebras as null spaces, and the map beta from the stabilizer K_x to GL(n).
"""

import logging
from enum import Enum
from typing import List, NamedTuple, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.linalg import expm, null_space

from theta_orbits.config import load_settings
from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError, VerificationError
from theta_orbits.momentmap.frames import NullConePoint, isotropic_frame, reference_point
from theta_orbits.momentmap.ranks import numeric_rank

logger = logging.getLogger(__name__)


class OrbitGroup(str, Enum):
    K = "K"
    KPRIME = "Kprime"
    K_X_KPRIME = "KxKprime"


def so_basis(m: int) -> List[np.ndarray]:
    basis = []
    for a in range(m):
        for b in range(a + 1, m):
            gen = np.zeros((m, m))
            gen[a, b], gen[b, a] = 1, -1
            basis.append(gen)
    return basis


def gl_basis(n: int) -> List[np.ndarray]:
    basis = []
    for i in range(n):
        for j in range(n):
            gen = np.zeros((n, n))
            gen[i, j] = 1
            basis.append(gen)
    return basis


def _columns(vectors: List[np.ndarray], rows: int) -> np.ndarray:
    if not vectors:
        return np.zeros((rows, 0), dtype=complex)
    return np.column_stack(vectors)


def k_jacobian(x: np.ndarray) -> np.ndarray:
    """so(p) + so(q) -> M_{p,q}, (A, B) -> A x + x B^T."""
    p, q = x.shape
    cols = [(gen @ x).ravel() for gen in so_basis(p)]
    cols += [(x @ gen.T).ravel() for gen in so_basis(q)]
    return _columns(cols, p * q)


def kprime_jacobian(xprime: np.ndarray) -> np.ndarray:
    """gl(n) -> Sym_n, E -> E x' + x' E^T."""
    n = xprime.shape[0]
    return _columns([(gen @ xprime + xprime @ gen.T).ravel() for gen in gl_basis(n)], n * n)


def point_jacobian(pt: NullConePoint) -> np.ndarray:
    """Linearized action of O(p) x O(q) x O(t) x GL(n) at pt, one column per generator."""
    p, q, t, n = pt.shape
    zp, zq, zt = (np.zeros(b.shape, dtype=complex) for b in (pt.wplus, pt.w1, pt.w2))

    def stack(a, b, c):
        return np.concatenate([a.ravel(), b.ravel(), c.ravel()])

    cols = [stack(gen @ pt.wplus, zq, zt) for gen in so_basis(p)]
    cols += [stack(zp, gen @ pt.w1, zt) for gen in so_basis(q)]
    cols += [stack(zp, zq, gen @ pt.w2) for gen in so_basis(t)]
    cols += [stack(-pt.wplus @ gen, pt.w1 @ gen.T, pt.w2 @ gen.T) for gen in gl_basis(n)]
    return _columns(cols, (p + q + t) * n)


def numeric_orbit_dim(
    target: Union[np.ndarray, NullConePoint],
    group: OrbitGroup = OrbitGroup.K,
    rtol: Optional[float] = None,
    gap: Optional[float] = None,
) -> int:
    """
    Orbit dimension as the rank of the linearized action at `target`.

    K takes x in M_{p,q}, Kprime takes x' in Sym_n and KxKprime takes a full point.
    """
    group = OrbitGroup(group)
    if group is OrbitGroup.K_X_KPRIME:
        if not isinstance(target, NullConePoint):
            raise ParameterError("KxKprime orbits are computed at a NullConePoint")
        jac = point_jacobian(target)
    elif isinstance(target, NullConePoint):
        raise ParameterError(f"{group.value} orbits are computed at a matrix, not a point")
    elif group is OrbitGroup.K:
        jac = k_jacobian(target)
    else:
        if target.shape[0] != target.shape[1]:
            raise ParameterError(f"K' acts on square symmetric matrices, got shape {target.shape}")
        jac = kprime_jacobian(target)
    return numeric_rank(jac, rtol, gap)


def null_cone_dim(pp: DualPairParams) -> int:
    """(p+q+t)n - n(n+1): the cone is cut out by the n(n+1) equations psi+ = 0, psi- + psi2 = 0."""
    return (pp.p + pp.q + pp.t) * pp.n - pp.n * (pp.n + 1)


def fiber_dim(pt: NullConePoint, rtol: Optional[float] = None, gap: Optional[float] = None) -> Tuple[int, int]:
    """(orbit dimension at pt, dimension of the fiber of x through pt inside the orbit)."""
    jac = point_jacobian(pt)
    p, q, t, n = pt.shape
    images = []
    for col in jac.T:
        v_plus = col[: p * n].reshape(p, n)
        v_1 = col[p * n : (p + q) * n].reshape(q, n)
        images.append((v_plus @ pt.w1.T + pt.wplus @ v_1.T).ravel())
    orbit = numeric_rank(jac, rtol, gap)
    image = numeric_rank(_columns(images, p * q), rtol, gap)
    return orbit, orbit - image


class StabilizerCodim(BaseModel):
    model_config = ConfigDict(frozen=True)

    q: int
    t: int
    n: int
    dim_s0: int
    codim: int
    numeric_dim_s0: int


def stabilizer_codim_check(q: int, t: int, n: int) -> StabilizerCodim:
    """
    Stabilizer of E_{q+t,n} in O(q) x O(t) x GL(n): closed formula against the
    null space of the linearized action.
    """
    if not q > n > t:
        raise ParameterError(f"stabilizer formula needs q > n > t, got q={q}, t={t}, n={n}")
    frame = isotropic_frame(q + t, n)
    w1, w2 = frame[:q], frame[q:]
    cols = [np.concatenate([(gen @ w1).ravel(), np.zeros(t * n)]) for gen in so_basis(q)]
    cols += [np.concatenate([np.zeros(q * n), (gen @ w2).ravel()]) for gen in so_basis(t)]
    cols += [np.concatenate([(w1 @ gen.T).ravel(), (w2 @ gen.T).ravel()]) for gen in gl_basis(n)]
    jac = _columns(cols, (q + t) * n)
    numeric = jac.shape[1] - numeric_rank(jac)
    formula = (n * n - n + q * q - q + t * t - t) // 2 + n * (n - q - t + 1)
    result = StabilizerCodim(q=q, t=t, n=n, dim_s0=formula, codim=1 + n - t, numeric_dim_s0=numeric)
    if numeric != formula:
        raise VerificationError(
            f"stabilizer dimension {numeric} differs from the formula value {formula}",
            data=result.model_dump(),
        )
    return result


class KElement(NamedTuple):
    kp: np.ndarray
    kq: np.ndarray


class BetaImage(NamedTuple):
    beta: np.ndarray
    residual: float


def case1_reference(pp: DualPairParams) -> Tuple[np.ndarray, np.ndarray]:
    """y = pr(z0) = (w+, w1); both blocks have full column rank n when q >= n."""
    if pp.q < pp.n:
        raise ParameterError(f"beta is defined for q >= n, got {pp.label()}")
    z0 = reference_point(pp)
    return z0.wplus, z0.w1


def stabilizer_algebra(x: np.ndarray, rtol: Optional[float] = None) -> np.ndarray:
    """Null space of (A, B) -> A x + x B^T in so(p) + so(q), one column per basis vector."""
    rtol = load_settings().rank_rtol if rtol is None else rtol
    jac = k_jacobian(x)
    basis = null_space(jac, rcond=rtol)
    expected = jac.shape[1] - numeric_rank(jac, rtol)
    if basis.shape[1] != expected:
        raise VerificationError(
            f"null space has {basis.shape[1]} vectors, rank count gives {expected}",
            data={"shape": list(jac.shape)},
        )
    return basis


def _assemble(coefficients: np.ndarray, m: int) -> np.ndarray:
    out = np.zeros((m, m), dtype=complex)
    for c, gen in zip(coefficients, so_basis(m)):
        out += c * gen
    return out


def stabilizer_samples(x: np.ndarray, rng: np.random.Generator, count: int, scale: float = 0.5) -> List[KElement]:
    """Exponentials of random elements of the stabilizer algebra of x."""
    p, q = x.shape
    basis = stabilizer_algebra(x)
    split = p * (p - 1) // 2
    samples = []
    for _ in range(count):
        coeffs = basis @ (rng.standard_normal(basis.shape[1]) + 1j * rng.standard_normal(basis.shape[1]))
        coeffs *= scale / max(np.linalg.norm(coeffs), 1e-300)
        samples.append(KElement(expm(_assemble(coeffs[:split], p)), expm(_assemble(coeffs[split:], q))))
    return samples


def levi_element(p: int, n: int, g: np.ndarray, g_inv: np.ndarray) -> np.ndarray:
    """F diag(g, I, g^-T) F^-1 with F = [E_{p,n} | middle | conj(E_{p,n})/2]; maps E_{p,n} to E_{p,n} g."""
    frame = isotropic_frame(p, n)
    middle = np.eye(p, dtype=complex)[:, n : p - n]
    basis = np.hstack([frame, middle, frame.conj() / 2])
    block = np.eye(p, dtype=complex)
    block[:n, :n] = g
    block[p - n :, p - n :] = g_inv.T
    return basis @ block @ np.linalg.inv(basis)


def levi_pair(pp: DualPairParams, g: np.ndarray, g_inv: np.ndarray) -> KElement:
    """(L_p(g), L_q(g^-T)) in K_x for t = 0; its beta image is g."""
    if pp.t != 0 or pp.q < pp.n:
        raise ParameterError(f"Levi pairs are built for t = 0 and q >= n, got {pp.label()}")
    return KElement(levi_element(pp.p, pp.n, g, g_inv), levi_element(pp.q, pp.n, g_inv.T, g.T))


def beta_map(k: KElement, reference: Tuple[np.ndarray, np.ndarray], tol: Optional[float] = None) -> BetaImage:
    """
    GL(n) component beta(k) with k_p y+ = y+ beta(k).

    Raises VerificationError when k does not fix x = y+ (y-)^T or when
    (k, beta(k)) does not fix y.
    """
    tol = load_settings().certify_tol if tol is None else tol
    y_plus, y_minus = reference
    x = y_plus @ y_minus.T
    drift = float(np.abs(k.kp @ x @ k.kq.T - x).max(initial=0.0))
    if drift >= tol:
        raise VerificationError(f"k does not stabilize x (drift {drift:.2e})", data={"drift": drift})
    beta = np.linalg.lstsq(y_plus, k.kp @ y_plus, rcond=None)[0]
    moved_plus = k.kp @ y_plus @ np.linalg.inv(beta)
    moved_minus = k.kq @ y_minus @ beta.T
    residual = float(max(np.abs(moved_plus - y_plus).max(initial=0.0), np.abs(moved_minus - y_minus).max(initial=0.0)))
    if residual >= tol:
        raise VerificationError(f"(k, beta(k)) moves y by {residual:.2e}", data={"residual": residual})
    logger.debug("beta residual %.2e", residual)
    return BetaImage(beta, residual)
