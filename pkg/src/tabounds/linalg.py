"""Dense complex linear algebra for small quantum systems (dimension <= 8).

Tensor products, partial traces over labelled tensor factors, a cyclic-Jacobi
Hermitian eigensolver, and von Neumann entropies.  All entropies throughout
the package are in bits (base-2 logarithms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from string import ascii_lowercase

import numpy as np

# Tolerances shared by the whole package.
HERMITIAN_ATOL = 1e-10      # admissible Hermiticity defect of eigensolver inputs
STATE_ATOL = 1e-12          # Hermiticity / unit-trace defect of density matrices
EIGENVALUE_FLOOR = -1e-10   # most negative eigenvalue tolerated before erroring
JACOBI_REL_TOL = 1e-13      # off-diagonal norm at convergence, relative


class InvalidStateError(ValueError):
    """Raised when a matrix violates the density-matrix requirements."""


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the left factor is the slowest-varying index."""
    return np.kron(np.asarray(a), np.asarray(b))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian unit-trace matrix together with its tensor-factor dimensions.

    ``dims`` lists the dimension of each tensor factor, slowest-varying
    first; their product must equal the matrix dimension.  Hermiticity and
    unit trace are checked on construction.  Positive semidefiniteness is
    enforced where eigenvalues are actually computed (see
    :func:`von_neumann_entropy`), keeping construction cheap in inner loops.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidStateError(f"density matrix must be square, got shape {m.shape}")
        if any(d < 1 for d in dims) or math.prod(dims) != m.shape[0]:
            raise InvalidStateError(
                f"factor dimensions {dims} do not multiply to matrix dimension {m.shape[0]}"
            )
        if np.abs(m - m.conj().T).max(initial=0.0) > STATE_ATOL:
            raise InvalidStateError("matrix is not Hermitian within 1e-12")
        if abs(m.trace() - 1.0) > STATE_ATOL:
            raise InvalidStateError(f"trace is {m.trace():.15g}, expected 1 within 1e-12")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Trace out all tensor factors except ``keep`` (a set of factor indices).

    The kept factors appear in the output in their original order.
    """
    dims = rho.dims
    n_factors = len(dims)
    kept = sorted({int(i) for i in keep})
    if not kept:
        raise ValueError("keep must name at least one tensor factor")
    if kept[0] < 0 or kept[-1] >= n_factors:
        raise ValueError(f"factor index out of range for {n_factors} factors: {kept}")

    # One einsum: traced factors share a row/column index, kept factors keep both.
    row = [ascii_lowercase[2 * i] for i in range(n_factors)]
    col = [ascii_lowercase[2 * i + 1] if i in kept else row[i] for i in range(n_factors)]
    out = [row[i] for i in kept] + [col[i] for i in kept]
    sub = "".join(row + col) + "->" + "".join(out)
    reduced = np.einsum(sub, rho.matrix.reshape(dims + dims))

    kept_dims = tuple(dims[i] for i in kept)
    d = math.prod(kept_dims)
    return DensityMatrix(reduced.reshape(d, d), kept_dims)


def _jacobi_rotate(a: np.ndarray, p: int, q: int) -> None:
    """Unitary plane rotation zeroing a[p, q] of a Hermitian matrix, in place."""
    apq = a[p, q]
    beta = abs(apq)
    w = apq / beta  # unit-modulus phase of the pivot entry
    tau = (a[q, q].real - a[p, p].real) / (2.0 * beta)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    wc = w.conjugate()
    cp = a[:, p].copy()
    cq = a[:, q].copy()
    a[:, p] = c * cp - s * wc * cq
    a[:, q] = s * cp + c * wc * cq
    rp = a[p, :].copy()
    rq = a[q, :].copy()
    a[p, :] = c * rp - s * w * rq
    a[q, :] = s * rp + c * w * rq

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def hermitian_eigenvalues(m: np.ndarray, rel_tol: float = JACOBI_REL_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, descending.

    Sweeps run until the off-diagonal Frobenius norm drops below
    ``rel_tol * ||m||_F`` (the Frobenius norm lower-bounds the trace norm).
    Jacobi retains high relative accuracy for the tiny eigenvalues that
    dominate entropy errors on rank-deficient states.

    Raises ValueError when the input is not square or not Hermitian
    within 1e-10.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if np.abs(a - a.conj().T).max(initial=0.0) > HERMITIAN_ATOL:
        raise ValueError("matrix is not Hermitian within 1e-10")
    a = (a + a.conj().T) / 2.0

    n = a.shape[0]
    if n == 1:
        return a.diagonal().real.copy()
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n)
    thresh = rel_tol * scale
    skip = thresh / (4.0 * n)

    for _ in range(100):
        off = float(np.linalg.norm(a - np.diag(a.diagonal())))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > skip:
                    _jacobi_rotate(a, p, q)
    else:  # pragma: no cover - quadratic convergence makes this unreachable
        raise ArithmeticError("Jacobi iteration failed to converge in 100 sweeps")

    return np.sort(a.diagonal().real)[::-1].copy()


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -sum_i lambda_i log2 lambda_i in bits, with 0 log 0 = 0.

    Eigenvalues in [-1e-10, 0) are treated as roundoff and clipped to zero;
    anything more negative raises InvalidStateError.
    """
    w = hermitian_eigenvalues(rho.matrix)
    if w[-1] < EIGENVALUE_FLOOR:
        raise InvalidStateError(f"state has negative eigenvalue {w[-1]:.3e}")
    w = w[w > 0.0]
    if w.size == 0:
        return 0.0
    return float(-(w * np.log2(w)).sum())
