"""
Matrix models for W = M_{p,n} + M_{q,n} + M_{t,n}: points, moment maps, reference frames.

(o_p, o_q, o_t, g) acts by (o_p w+ g^-1, o_q w1 g^T, o_t w2 g^T). The moment
maps are x = w+ w1^T into p, and psi+ = (w+)^T w+, psi- = w1^T w1,
psi2 = w2^T w2 into p'. The null cone is psi+ = 0, psi- + psi2 = 0.
"""

import zlib
from typing import NamedTuple, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator
from scipy.linalg import expm

from theta_orbits.dualpairs.params import DualPairParams
from theta_orbits.errors import ParameterError


def rng_for(seed: int, op: str, index: int, attempt: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, operation, index, attempt)."""
    key = np.random.SeedSequence([seed, zlib.crc32(op.encode()), index, attempt])
    return np.random.Generator(np.random.Philox(key))


def _complex_normal(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_orthogonal(rng: np.random.Generator, m: int, scale: float = 0.3) -> np.ndarray:
    """Element of O(m, C) as the exponential of a random skew-symmetric matrix."""
    if m == 0:
        return np.eye(0, dtype=complex)
    z = _complex_normal(rng, (m, m))
    return expm(scale / np.sqrt(m) * (z - z.T))


def random_gl(rng: np.random.Generator, n: int, scale: float = 0.3) -> Tuple[np.ndarray, np.ndarray]:
    """(g, g^-1) in GL(n, C), both computed as exponentials."""
    z = scale / np.sqrt(max(n, 1)) * _complex_normal(rng, (n, n))
    return expm(z), expm(-z)


def isotropic_frame(p: int, n: int) -> np.ndarray:
    """E_{p,n} = [I_n; 0; i I_n], so that E^T E = 0."""
    if p < 2 * n:
        raise ParameterError(f"an isotropic n-frame needs p >= 2n, got p={p}, n={n}")
    frame = np.zeros((p, n), dtype=complex)
    frame[:n, :n] = np.eye(n)
    frame[p - n :, :n] = 1j * np.eye(n)
    return frame


def adapted_basis(p: int, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Basis C of C^p with C^T C = J, J the permutation pairing j with p-1-j for
    j < n and fixing the middle. The first n columns are E_{p,n}; C^-1 = J C^T.
    """
    if p < 2 * n:
        raise ParameterError(f"adapted basis needs p >= 2n, got p={p}, n={n}")
    basis = np.zeros((p, p), dtype=complex)
    gram = np.zeros((p, p))
    for j in range(n):
        basis[j, j] = 1
        basis[p - n + j, j] = 1j
        basis[j, p - 1 - j] = 0.5
        basis[p - n + j, p - 1 - j] = -0.5j
        gram[j, p - 1 - j] = gram[p - 1 - j, j] = 1
    for k in range(n, p - n):
        basis[k, k] = 1
        gram[k, k] = 1
    return basis, gram


class MomentImages(NamedTuple):
    x: np.ndarray
    psi_plus: np.ndarray
    psi_minus: np.ndarray
    psi2: np.ndarray


class NullConePoint(BaseModel):
    """A point (w+, w1, w2) of W; nothing forces it onto the null cone."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    wplus: np.ndarray
    w1: np.ndarray
    w2: np.ndarray

    @model_validator(mode="after")
    def _shared_columns(self) -> "NullConePoint":
        blocks = (self.wplus, self.w1, self.w2)
        if any(b.ndim != 2 for b in blocks) or len({b.shape[1] for b in blocks}) != 1:
            raise ValueError(
                f"blocks must share n columns, got {self.wplus.shape}, {self.w1.shape}, {self.w2.shape}"
            )
        return self

    @classmethod
    def of(cls, wplus: np.ndarray, w1: np.ndarray, w2: np.ndarray) -> "NullConePoint":
        try:
            return cls(wplus=wplus, w1=w1, w2=w2)
        except ValidationError as exc:
            raise ParameterError(str(exc)) from exc

    @property
    def shape(self) -> Tuple[int, int, int, int]:
        """(p, q, t, n)."""
        return self.wplus.shape[0], self.w1.shape[0], self.w2.shape[0], self.wplus.shape[1]

    def act(self, o_p: np.ndarray, o_q: np.ndarray, o_t: np.ndarray, g: np.ndarray, g_inv: np.ndarray) -> "NullConePoint":
        return NullConePoint.of(o_p @ self.wplus @ g_inv, o_q @ self.w1 @ g.T, o_t @ self.w2 @ g.T)

    def residuals(self) -> Tuple[float, float]:
        """Largest entries of psi+ and psi- + psi2."""
        images = moment_images(self)
        plus = float(np.abs(images.psi_plus).max(initial=0.0))
        minus = float(np.abs(images.psi_minus + images.psi2).max(initial=0.0))
        return plus, minus

    def residual(self) -> float:
        return max(self.residuals())

    def scale(self) -> float:
        return float(max(np.linalg.norm(self.wplus, 2), np.linalg.norm(self.w1, 2), np.linalg.norm(self.w2, 2), 1.0))

    def vector(self) -> np.ndarray:
        return np.concatenate([self.wplus.ravel(), self.w1.ravel(), self.w2.ravel()])

    @classmethod
    def zero(cls, p: int, q: int, t: int, n: int) -> "NullConePoint":
        return cls.of(
            np.zeros((p, n), dtype=complex), np.zeros((q, n), dtype=complex), np.zeros((t, n), dtype=complex)
        )


def moment_images(pt: NullConePoint) -> MomentImages:
    return MomentImages(
        x=pt.wplus @ pt.w1.T,
        psi_plus=pt.wplus.T @ pt.wplus,
        psi_minus=pt.w1.T @ pt.w1,
        psi2=pt.w2.T @ pt.w2,
    )


def reference_point(pp: DualPairParams) -> NullConePoint:
    """
    Base point of the open stratum of the null cone.

    For q >= n the last two blocks are E_{q+t,n} split after q rows. For q < n
    they are w1 = [I_q, 0] and w2 = [[i I_q, 0], [0, E_{t-q,n-q}]].
    """
    p, q, t, n = pp.p, pp.q, pp.t, pp.n
    if p < 2 * n or q + t < 2 * n:
        raise ParameterError(f"{pp.label()} needs 2n <= min(p, q+t)")
    wplus = isotropic_frame(p, n)
    if q >= n:
        lower = isotropic_frame(q + t, n)
        return NullConePoint.of(wplus, lower[:q], lower[q:])
    w1 = np.zeros((q, n), dtype=complex)
    w1[:, :q] = np.eye(q)
    w2 = np.zeros((t, n), dtype=complex)
    w2[:q, :q] = 1j * np.eye(q)
    w2[q:, q:] = isotropic_frame(t - q, n - q)
    return NullConePoint.of(wplus, w1, w2)
