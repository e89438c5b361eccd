"""Full spectra of Hermitian matrices, via two independent routes.

``eigenvalues`` runs cyclic Jacobi on the complex matrix itself;
``oracle_eigenvalues`` solves the 2n x 2n real symmetric embedding
[[X, -Y], [Y, X]] of M = X + iY with Householder + implicit-shift QL, where
every eigenvalue of M shows up twice. Agreement between the two is the
library's main internal consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import householder_tridiag, jacobi_eigvals, ql_implicit_eigvals
from .matrices import HermitianMatrix

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 30
MAX_QL_ITER = 50
MOMENT_RTOL = 1e-8


class KernelConvergenceError(RuntimeError):
    """An eigenvalue kernel failed to converge; indicates a kernel bug."""


class EmbeddingPairingError(RuntimeError):
    """Embedding eigenvalues did not come in near-identical pairs."""


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted non-increasing, with a backward-error estimate."""

    values: tuple[float, ...]
    backward_error: float = 0.0

    def __post_init__(self):
        if len(self.values) == 0:
            raise ValueError("spectrum must contain at least one eigenvalue")
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("eigenvalues must be sorted non-increasing")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def mu_max(self) -> float:
        return self.values[0]

    @property
    def mu_min(self) -> float:
        return self.values[-1]


def _check_moments(m: HermitianMatrix, values: np.ndarray, route: str) -> None:
    tr = m.trace()
    tr2 = m.trace_of_square()
    sum1 = float(values.sum())
    sum2 = float((values * values).sum())
    if abs(sum1 - tr) > MOMENT_RTOL * max(1.0, abs(tr)):
        raise KernelConvergenceError(
            f"{route}: eigenvalue sum {sum1} does not match trace {tr}"
        )
    if abs(sum2 - tr2) > MOMENT_RTOL * max(1.0, tr2):
        raise KernelConvergenceError(
            f"{route}: eigenvalue square sum {sum2} does not match trace of square {tr2}"
        )


def eigenvalues(m: HermitianMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """All eigenvalues of ``m`` by cyclic Jacobi, sorted non-increasing.

    Deterministic for fixed input; raises KernelConvergenceError if the
    off-diagonal mass is not below tol * ||m||_F within the sweep budget.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    work = np.array(m.data, dtype=np.complex128)
    d, off, sweeps = jacobi_eigvals(work, tol, MAX_SWEEPS)
    if off > tol * m.frobenius_norm():
        raise KernelConvergenceError(
            f"jacobi: off-diagonal mass {off} above target after {sweeps} sweeps"
        )
    vals = np.sort(d)[::-1]
    _check_moments(m, vals, "jacobi")
    return Spectrum(values=tuple(float(v) for v in vals), backward_error=float(off))


def oracle_eigenvalues(m: HermitianMatrix) -> Spectrum:
    """Eigenvalues via the real symmetric embedding, solved by a different kernel.

    The embedding doubles every eigenvalue; adjacent sorted values are paired
    and averaged. A pair gap above 1e-8 * ||m||_F raises EmbeddingPairingError.
    """
    n = m.n
    x = np.ascontiguousarray(m.data.real)
    y = np.ascontiguousarray(m.data.imag)
    emb = np.empty((2 * n, 2 * n), dtype=np.float64)
    emb[:n, :n] = x
    emb[:n, n:] = -y
    emb[n:, :n] = y
    emb[n:, n:] = x

    d, e = householder_tridiag(emb)
    if ql_implicit_eigvals(d, e, MAX_QL_ITER) != 0:
        raise KernelConvergenceError("ql: eigenvalue iteration did not converge")

    pair_tol = 1e-8 * m.frobenius_norm()
    d.sort()
    gaps = d[1::2] - d[0::2]
    worst = float(np.max(np.abs(gaps))) if gaps.size else 0.0
    if worst > pair_tol:
        raise EmbeddingPairingError(
            f"embedding eigenvalues do not pair: worst gap {worst} > {pair_tol}"
        )
    vals = np.sort((d[0::2] + d[1::2]) / 2.0)[::-1]
    _check_moments(m, vals, "embedding")
    return Spectrum(values=tuple(float(v) for v in vals), backward_error=worst / 2.0)


def spectral_radius(s: Spectrum) -> float:
    """Largest absolute eigenvalue."""
    return max(abs(s.mu_max), abs(s.mu_min))


def spread(s: Spectrum) -> float:
    """Largest minus smallest eigenvalue."""
    return s.mu_max - s.mu_min


def trace_norm(s: Spectrum) -> float:
    """Sum of absolute eigenvalues (the graph energy for adjacency-type matrices)."""
    return float(sum(abs(v) for v in s.values))
