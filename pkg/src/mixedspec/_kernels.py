"""Numeric kernels for the two eigenvalue routes.

Primary route: cyclic Jacobi sweeps on the complex Hermitian matrix, each
rotation solving a 2x2 Hermitian subproblem exactly. Oracle route: Householder
reduction of a real symmetric matrix to tridiagonal form followed by
implicit-shift QL, applied to the 2n x 2n real embedding.

The loops are plain scalar code jitted with numba; if numba is unavailable the
same functions run as pure Python (slow but correct).
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def jacobi_eigvals(a, tol, max_sweeps):
    """Diagonalize Hermitian ``a`` in place by cyclic Jacobi rotations.

    Returns (diagonal, final off-diagonal Frobenius mass, sweeps used).
    Convergence: off-diagonal Frobenius mass below tol * ||a||_F. The caller
    checks the sweep budget.
    """
    n = a.shape[0]
    norm_sq = 0.0
    for i in range(n):
        for j in range(n):
            v = a[i, j]
            norm_sq += v.real * v.real + v.imag * v.imag
    norm_f = math.sqrt(norm_sq)
    threshold = tol * norm_f
    # rotations this small cannot lift the off-mass above the target
    skip = threshold / (10.0 * n) if n > 0 else 0.0

    off = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                v = a[i, j]
                off += v.real * v.real + v.imag * v.imag
    off = math.sqrt(off)

    sweeps = 0
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                # phase: apq = r * e^{i phi}
                phase = apq / r
                tau = (aqq - app) / (2.0 * r)
                if abs(tau) > 1e10:
                    t = 1.0 / (2.0 * tau)
                else:
                    if tau >= 0.0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = (t * c) * phase

                sc = s.conjugate()
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - sc * akq
                        a[k, q] = s * akp + c * akq
                        a[p, k] = a[k, p].conjugate()
                        a[q, k] = a[k, q].conjugate()
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    v = a[i, j]
                    off += v.real * v.real + v.imag * v.imag
        off = math.sqrt(off)

    d = np.empty(n, dtype=np.float64)
    for i in range(n):
        d[i] = a[i, i].real
    return d, off, sweeps


@njit(cache=True)
def householder_tridiag(a):
    """Reduce real symmetric ``a`` (in place) to tridiagonal form.

    Returns (diagonal d, subdiagonal e) with e[0] unused.
    """
    n = a.shape[0]
    d = np.empty(n, dtype=np.float64)
    e = np.zeros(n, dtype=np.float64)
    v = np.empty(n, dtype=np.float64)
    p = np.empty(n, dtype=np.float64)

    for k in range(n - 2):
        xnorm_sq = 0.0
        for i in range(k + 1, n):
            xnorm_sq += a[i, k] * a[i, k]
        xnorm = math.sqrt(xnorm_sq)
        if xnorm == 0.0:
            e[k + 1] = 0.0
            continue
        alpha = -xnorm if a[k + 1, k] >= 0.0 else xnorm
        # reflector v = x - alpha*e1, normalized
        vnorm_sq = 0.0
        for i in range(k + 1, n):
            vi = a[i, k]
            if i == k + 1:
                vi -= alpha
            v[i] = vi
            vnorm_sq += vi * vi
        if vnorm_sq == 0.0:
            e[k + 1] = alpha
            continue
        vnorm = math.sqrt(vnorm_sq)
        for i in range(k + 1, n):
            v[i] /= vnorm

        # symmetric rank-2 update of the trailing block: A <- A - 2vq' - 2qv'
        kk = 0.0
        for i in range(k + 1, n):
            s = 0.0
            for j in range(k + 1, n):
                s += a[i, j] * v[j]
            p[i] = s
        for i in range(k + 1, n):
            kk += v[i] * p[i]
        for i in range(k + 1, n):
            p[i] -= kk * v[i]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i, j] -= 2.0 * (v[i] * p[j] + p[i] * v[j])

        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        for i in range(k + 2, n):
            a[i, k] = 0.0
            a[k, i] = 0.0
        e[k + 1] = alpha

    if n >= 2:
        e[n - 1] = a[n - 1, n - 2]
    for i in range(n):
        d[i] = a[i, i]
    return d, e


@njit(cache=True)
def ql_implicit_eigvals(d, e, max_iter):
    """Implicit-shift QL on a symmetric tridiagonal (d, e); d becomes the
    eigenvalues (unordered). e[0] is unused; e is destroyed.

    Returns 0 on success, 1 if some eigenvalue failed to converge.
    """
    n = d.shape[0]
    eps = 2.220446049250313e-16
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0

    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                return 1
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            if g >= 0.0:
                g = d[m] - d[l] + e[l] / (g + r)
            else:
                g = d[m] - d[l] + e[l] / (g - r)
            s = 1.0
            c = 1.0
            p = 0.0
            broke = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    broke = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if broke:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return 0
