"""
Projection of the null cone onto (A1, B1, A1 B2^T) when q < n.

Coordinates on C^p are taken in the adapted basis C (C^T C = J). The fiber over
m = (I_{q,n}, I_{q,n}, i I_{q,t}) is the null cone of the smaller pair with
p - 2q, t - q and n - q.
"""

import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.linalg import null_space, sqrtm

from theta_orbits.config import load_settings
from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError, VerificationError
from theta_orbits.momentmap.frames import (
    NullConePoint,
    adapted_basis,
    isotropic_frame,
    random_gl,
    random_orthogonal,
)

logger = logging.getLogger(__name__)

Triple = Tuple[np.ndarray, np.ndarray, np.ndarray]


class Case2Projection(NamedTuple):
    m: Triple
    a_small: np.ndarray
    b_small: np.ndarray
    residual: float


class QElement(NamedTuple):
    """(k^p, r1, r2, g, g^-1); k^p is block diagonal (r1, k_s, R r1 R) in adapted coordinates."""

    kp: np.ndarray
    r1: np.ndarray
    r2: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray


def _check_shapes(p: int, q: int, t: int, n: int) -> None:
    if not q < n <= q + t:
        raise ParameterError(f"projection needs q < n <= q + t, got q={q}, t={t}, n={n}")
    if p < 2 * n or q + t < 2 * n:
        raise ParameterError(f"projection needs 2n <= min(p, q+t), got p={p}, q={q}, t={t}, n={n}")


def _unit(rows: int, cols: int, value: complex = 1) -> np.ndarray:
    out = np.zeros((rows, cols), dtype=complex)
    out[: min(rows, cols), : min(rows, cols)] = value * np.eye(min(rows, cols))
    return out


def reference_image(p: int, q: int, t: int, n: int) -> Triple:
    return _unit(q, n), _unit(q, n), _unit(q, t, 1j)


def adapted_coordinates(wplus: np.ndarray) -> np.ndarray:
    p, n = wplus.shape
    basis, gram = adapted_basis(p, n)
    return gram @ basis.T @ wplus


def projection(pt: NullConePoint) -> Triple:
    p, q, t, n = pt.shape
    _check_shapes(p, q, t, n)
    a1 = adapted_coordinates(pt.wplus)[:q]
    return a1, pt.w1, a1 @ pt.w2.T


def _distance(a: Triple, b: Triple) -> float:
    return float(max(np.abs(x - y).max(initial=0.0) for x, y in zip(a, b)))


def case2_projection(pt: NullConePoint, tol: Optional[float] = None) -> Case2Projection:
    """
    Value of the projection and, for a point over m, its image (A_s, B_s) on the
    null cone of the smaller pair.
    """
    tol = load_settings().certify_tol if tol is None else tol
    p, q, t, n = pt.shape
    value = projection(pt)
    offset = _distance(value, reference_image(p, q, t, n))
    if offset >= tol:
        raise VerificationError(f"point is not over m (offset {offset:.2e})", data={"offset": offset})
    _, gram = adapted_basis(p, n)
    a_small = adapted_coordinates(pt.wplus)[q : p - q, q:]
    b_small = pt.w2[q:, q:]
    gram_small = gram[q : p - q, q : p - q]
    residual = float(
        max(
            np.abs(a_small.T @ gram_small @ a_small).max(initial=0.0),
            np.abs(b_small.T @ b_small).max(initial=0.0),
        )
    )
    if residual >= tol:
        raise VerificationError(
            f"fiber image is off the smaller null cone (residual {residual:.2e})", data={"residual": residual}
        )
    return Case2Projection(value, a_small, b_small, residual)


def _small_orthogonal(rng: np.random.Generator, p_s: int, n_s: int) -> np.ndarray:
    """k_s = C_s^-1 O C_s, orthogonal for the form J_s."""
    basis, gram = adapted_basis(p_s, n_s)
    return gram @ basis.T @ random_orthogonal(rng, p_s) @ basis


def fiber_point(pp: DualPairParams, rng: np.random.Generator) -> NullConePoint:
    """Random point over m: (A_s, B_s) = (k_s [I; 0] h^-1, o E h^T) placed in the fiber."""
    p, q, t, n = pp.p, pp.q, pp.t, pp.n
    _check_shapes(p, q, t, n)
    p_s, t_s, n_s = p - 2 * q, t - q, n - q
    h, h_inv = random_gl(rng, n_s)
    a_small = _small_orthogonal(rng, p_s, n_s) @ _unit(p_s, n_s) @ h_inv
    b_small = random_orthogonal(rng, t_s) @ isotropic_frame(t_s, n_s) @ h.T
    adapted = np.zeros((p, n), dtype=complex)
    adapted[:q, :q] = np.eye(q)
    adapted[q : p - q, q:] = a_small
    basis, _ = adapted_basis(p, n)
    w2 = np.zeros((t, n), dtype=complex)
    w2[:q, :q] = 1j * np.eye(q)
    w2[q:, q:] = b_small
    return NullConePoint.of(basis @ adapted, _unit(q, n), w2)


def q_element(pp: DualPairParams, rng: np.random.Generator) -> QElement:
    p, q, t, n = pp.p, pp.q, pp.t, pp.n
    _check_shapes(p, q, t, n)
    r1 = random_orthogonal(rng, q)
    r2 = random_orthogonal(rng, t)
    g, g_inv = random_gl(rng, n)
    reverse = np.eye(q)[::-1]
    kad = np.zeros((p, p), dtype=complex)
    kad[:q, :q] = r1
    kad[q : p - q, q : p - q] = _small_orthogonal(rng, p - 2 * q, n - q)
    kad[p - q :, p - q :] = reverse @ r1 @ reverse
    basis, gram = adapted_basis(p, n)
    return QElement(basis @ kad @ gram @ basis.T, r1, r2, g, g_inv)


def act_on_image(element: QElement, value: Triple) -> Triple:
    """(r1 A1 g^-1, r1 B1 g^T, r1 (A1 B2^T) r2^T)."""
    a1, b1, c1 = value
    return element.r1 @ a1 @ element.g_inv, element.r1 @ b1 @ element.g.T, element.r1 @ c1 @ element.r2.T


def equivariance_residual(pt: NullConePoint, element: QElement) -> float:
    moved = pt.act(element.kp, element.r1, element.r2, element.g, element.g_inv)
    return _distance(projection(moved), act_on_image(element, projection(pt)))


class FiberMotion(NamedTuple):
    """(k^p, k^t, g, g^-1) moving a point over m; the O(q) component is the identity."""

    kp: np.ndarray
    kt: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray


def _orthonormal_columns(span: np.ndarray) -> np.ndarray:
    """Columns with S^T S = I spanning the same nondegenerate subspace."""
    if span.shape[1] == 0:
        return span.astype(complex)
    return span @ np.linalg.inv(sqrtm(span.T @ span))


def _frame_to_standard(wplus: np.ndarray) -> np.ndarray:
    """
    Element of O(p, C) taking the isotropic frame w+ to E_{p,n}.

    w+ is completed to a basis P = [w+, R, dual frame reversed] with
    P^T P = J, so C P^-1 is orthogonal and sends w+ to the first n columns of C.
    """
    p, n = wplus.shape
    basis, _ = adapted_basis(p, n)
    seed = wplus.conj()
    dual = seed @ np.linalg.inv(wplus.T @ seed)
    dual = dual - 0.5 * wplus @ (dual.T @ dual)
    middle = _orthonormal_columns(null_space(np.hstack([wplus, dual]).T))
    frame = np.zeros((p, p), dtype=complex)
    frame[:, :n] = wplus
    frame[:, n : p - n] = middle
    frame[:, p - n :] = dual[:, ::-1]
    return basis @ np.linalg.inv(frame)


def motion_over_m(pt: NullConePoint) -> FiberMotion:
    """
    Group element moving an open-stratum point into the fiber over m.

    g sends w1 to [I_q, 0]; k^t rotates the first q columns of w2 to i [I_q; 0];
    k^p sends w+ to E_{p,n}.
    """
    p, q, t, n = pt.shape
    _check_shapes(p, q, t, n)
    kernel = null_space(pt.w1)
    if kernel.shape[1] != n - q:
        raise VerificationError(
            f"w1 has rank {n - kernel.shape[1]} < {q}; the point is off the open stratum",
            data={"rank_w1": n - kernel.shape[1]},
        )
    rows = np.vstack([pt.w1, kernel.conj().T])
    g_inv = rows.T
    g = np.linalg.inv(g_inv)
    moved = pt.act(np.eye(p), np.eye(q), np.eye(t), g, g_inv)
    head = -1j * moved.w2[:, :q]
    completion = _orthonormal_columns(null_space(head.T))
    kt = np.hstack([head, completion]).T
    kp = _frame_to_standard(moved.wplus)
    return FiberMotion(kp, kt, g, g_inv)


def project_generic(pt: NullConePoint, tol: Optional[float] = None) -> Tuple[NullConePoint, Case2Projection]:
    """Move pt over m and project it; returns the moved point and its projection."""
    motion = motion_over_m(pt)
    p, q, t, _ = pt.shape
    moved = pt.act(motion.kp, np.eye(q), motion.kt, motion.g, motion.g_inv)
    logger.debug("moved point residual %.2e", moved.residual())
    return moved, case2_projection(moved, tol)
