"""Dense complex non-Hermitian eigensolver with an independent oracle.

``eigenvalues`` reduces the matrix to upper Hessenberg form with
Householder reflections and runs an explicitly shifted QR iteration
(Wilkinson shift from the trailing 2x2, Givens rotations, deflation on
negligible subdiagonal entries). ``charpoly_oracle`` recovers the same
multiset by a completely different route: characteristic-polynomial
coefficients via the Faddeev-LeVerrier recurrence, roots via
Durand-Kerner iteration. Eigenvectors come from inverse iteration and
feed the per-eigenvalue residual diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ConvergenceError",
    "DEFLATION_TOL",
    "MATCH_TOL",
    "MatchResult",
    "RESIDUAL_TOL",
    "Spectrum",
    "charpoly_coefficients",
    "charpoly_oracle",
    "eigenvalues",
    "eigenvector",
    "match_multisets",
]

DEFLATION_TOL = 1e-12
RESIDUAL_TOL = 1e-8
MATCH_TOL = 1e-8
_SEED = 0x5EED  # fixed so inverse-iteration perturbations are reproducible


class ConvergenceError(RuntimeError):
    """An iterative stage failed to converge within its budget."""


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of one matrix, sorted by (Re, Im) ascending.

    ``residuals[k]`` is ||A v - eigenvalues[k] v||_2 for the unit
    eigenvector v obtained by inverse iteration. ``converged`` reports
    whether the QR iteration deflated completely within its sweep
    budget (the oracle sets it from the root finder instead).
    """

    eigenvalues: np.ndarray
    residuals: np.ndarray
    converged: bool

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def by_modulus(self) -> np.ndarray:
        """Eigenvalues reordered by ascending modulus (then Re, then Im)."""
        ev = self.eigenvalues
        order = np.lexsort((ev.imag, ev.real, np.abs(ev)))
        return ev[order]

    def zero_count(self, zero_tol: float = RESIDUAL_TOL) -> int:
        return int(np.sum(np.abs(self.eigenvalues) <= zero_tol))

    def smallest_nonzero_modulus(self, zero_tol: float = RESIDUAL_TOL) -> float:
        moduli = np.abs(self.eigenvalues)
        nonzero = moduli[moduli > zero_tol]
        return float(nonzero.min()) if nonzero.size else float("nan")


def _checked_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("matrix must be at least 1x1")
    if not np.all(np.isfinite(a.real) & np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def _sorted_lex(values: np.ndarray) -> np.ndarray:
    order = np.lexsort((values.imag, values.real))
    return values[order]


# ---------------------------------------------------------------------------
# Hessenberg + shifted QR
# ---------------------------------------------------------------------------

def _hessenberg(a: np.ndarray) -> np.ndarray:
    """Unitary similarity reduction to upper Hessenberg form."""
    h = np.array(a, dtype=complex, copy=True)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        xnorm = np.linalg.norm(x)
        if xnorm == 0.0:
            continue
        alpha = x[0]
        phase = alpha / abs(alpha) if alpha != 0.0 else 1.0 + 0.0j
        v = x.copy()
        v[0] += phase * xnorm
        v /= np.linalg.norm(v)
        # apply P = I - 2 v v^H from the left, then from the right
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _givens(a: complex, b: complex) -> tuple[float, complex]:
    """Rotation [[c, s], [-conj(s), c]] with c real zeroing b below a."""
    if b == 0.0:
        return 1.0, 0.0 + 0.0j
    if a == 0.0:
        return 0.0, np.conj(b) / abs(b)
    absa = abs(a)
    t = np.hypot(absa, abs(b))
    return absa / t, (a / absa) * (np.conj(b) / t)


def _wilkinson_shift(h: np.ndarray, hi: int) -> complex:
    """Eigenvalue of the trailing 2x2 block closest to h[hi, hi]."""
    a = h[hi - 1, hi - 1]
    b = h[hi - 1, hi]
    c = h[hi, hi - 1]
    d = h[hi, hi]
    tr = a + d
    det = a * d - b * c
    disc = np.sqrt(complex(tr * tr - 4.0 * det))
    r1 = (tr + disc) / 2.0 if abs(tr + disc) >= abs(tr - disc) else (tr - disc) / 2.0
    if r1 == 0.0:
        return 0.0 + 0.0j  # both roots vanish
    r2 = det / r1
    return r1 if abs(r1 - d) <= abs(r2 - d) else r2


def _qr_sweep(h: np.ndarray, lo: int, hi: int, mu: complex) -> None:
    """One explicit shifted QR step on the diagonal block [lo..hi].

    Only the block itself is updated; the split at lo makes the matrix
    block triangular, so the eigenvalue multiset is unaffected.
    """
    idx = np.arange(lo, hi + 1)
    h[idx, idx] -= mu
    rotations: list[tuple[float, complex]] = []
    for k in range(lo, hi):
        ck, sk = _givens(h[k, k], h[k + 1, k])
        rotations.append((ck, sk))
        cols = slice(k, hi + 1)
        rk = h[k, cols].copy()
        rk1 = h[k + 1, cols].copy()
        h[k, cols] = ck * rk + sk * rk1
        h[k + 1, cols] = -np.conj(sk) * rk + ck * rk1
        h[k + 1, k] = 0.0
    for j, (ck, sk) in enumerate(rotations):
        k = lo + j
        rows = slice(lo, k + 2)
        colk = h[rows, k].copy()
        colk1 = h[rows, k + 1].copy()
        h[rows, k] = ck * colk + np.conj(sk) * colk1
        h[rows, k + 1] = -sk * colk + ck * colk1
    h[idx, idx] += mu


def _qr_eigenvalues(
    h: np.ndarray, deflation_tol: float, max_sweeps: int
) -> tuple[np.ndarray, bool]:
    n = h.shape[0]
    values: list[complex] = []
    hi = n - 1
    sweeps = 0
    since_deflation = 0
    while hi >= 0:
        if hi == 0:
            values.append(h[0, 0])
            break
        lo = hi
        while lo > 0:
            if abs(h[lo, lo - 1]) <= deflation_tol * (
                abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            ):
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            values.append(h[hi, hi])
            hi -= 1
            since_deflation = 0
            continue
        if sweeps >= max_sweeps:
            values.extend(h[k, k] for k in range(hi + 1))
            return np.array(values, dtype=complex), False
        if since_deflation and since_deflation % 10 == 0:
            # exceptional shift to break symmetric limit cycles
            mu = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(h, hi)
        _qr_sweep(h, lo, hi, mu)
        sweeps += 1
        since_deflation += 1
    return np.array(values, dtype=complex), True


def eigenvalues(a, deflation_tol: float = DEFLATION_TOL, compute_residuals: bool = True) -> Spectrum:
    """Full spectrum of a dense complex matrix, with residual diagnostics.

    Non-convergence of the QR iteration (more than 40 n sweeps without
    full deflation) is reported through ``converged=False`` rather than
    an exception; the diagonal of the unfinished iterate fills in the
    missing estimates.
    """
    a = _checked_square(a)
    n = a.shape[0]
    if n == 1:
        values = a.diagonal().copy()
        converged = True
    else:
        h = _hessenberg(a)
        values, converged = _qr_eigenvalues(h, deflation_tol, 40 * n)
    values = _sorted_lex(values)
    residuals = np.zeros(n)
    if compute_residuals:
        for k, lam in enumerate(values):
            _, residuals[k], _ = _inverse_iteration(a, lam)
    return Spectrum(values, residuals, converged)


# ---------------------------------------------------------------------------
# eigenvectors via inverse iteration
# ---------------------------------------------------------------------------

def _inverse_iteration(
    a: np.ndarray,
    lam: complex,
    tol: float = RESIDUAL_TOL,
    max_iterations: int = 50,
) -> tuple[np.ndarray, float, bool]:
    n = a.shape[0]
    rng = np.random.default_rng(_SEED)
    scale = max(1.0, abs(lam))
    shift = complex(lam)
    v = np.ones(n, dtype=complex)
    v += 1e-2 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    v /= np.linalg.norm(v)
    best_v, best_res = v, float("inf")
    eye = np.eye(n)
    for _ in range(max_iterations):
        try:
            with np.errstate(all="ignore"):
                w = np.linalg.solve(a - shift * eye, v)
        except np.linalg.LinAlgError:
            w = None
        if w is None or not np.all(np.isfinite(w.real) & np.isfinite(w.imag)):
            # exactly singular shift: nudge it in a random direction
            theta = rng.uniform(0.0, 2.0 * np.pi)
            shift = complex(lam) + 1e-10 * scale * np.exp(1j * theta)
            continue
        wnorm = np.linalg.norm(w)
        if wnorm == 0.0:
            theta = rng.uniform(0.0, 2.0 * np.pi)
            shift = complex(lam) + 1e-10 * scale * np.exp(1j * theta)
            continue
        v = w / wnorm
        res = float(np.linalg.norm(a @ v - lam * v))
        if res < best_res:
            best_v, best_res = v.copy(), res
        if res <= tol:
            return v, res, True
    return best_v, best_res, False


def eigenvector(a, lam: complex, tol: float = RESIDUAL_TOL, max_iterations: int = 50) -> np.ndarray:
    """Unit eigenvector for an (approximately known) eigenvalue.

    Raises :class:`ConvergenceError` if inverse iteration cannot push
    the residual below ``tol`` within ``max_iterations`` solves.
    """
    a = _checked_square(a)
    v, res, ok = _inverse_iteration(a, complex(lam), tol, max_iterations)
    if not ok:
        raise ConvergenceError(
            f"inverse iteration stalled at residual {res:.3e} for eigenvalue {lam}"
        )
    return v


# ---------------------------------------------------------------------------
# characteristic-polynomial oracle
# ---------------------------------------------------------------------------

def charpoly_coefficients(a) -> np.ndarray:
    """Monic characteristic polynomial, coefficients in descending powers."""
    a = _checked_square(a)
    n = a.shape[0]
    coeffs = np.empty(n + 1, dtype=complex)
    coeffs[0] = 1.0
    m = np.zeros((n, n), dtype=complex)
    c = 1.0 + 0.0j
    for k in range(1, n + 1):
        m = a @ m + c * np.eye(n)
        c = -np.trace(a @ m) / k
        coeffs[k] = c
    return coeffs


def _durand_kerner(coeffs: np.ndarray, max_sweeps: int = 1000, tol: float = 1e-13) -> np.ndarray:
    n = coeffs.size - 1
    radius = 1.0 + float(np.max(np.abs(coeffs[1:])))  # Cauchy root bound
    k = np.arange(n)
    # rotated roots of unity: the offset breaks conjugate symmetry traps
    z = radius * np.exp(1j * (2.0 * np.pi * k / n + 0.4))
    for _ in range(max_sweeps):
        p = np.polyval(coeffs, z)
        denom = np.empty(n, dtype=complex)
        for j in range(n):
            diff = z[j] - z
            diff[j] = 1.0
            denom[j] = np.prod(diff)
        collided = denom == 0.0
        if np.any(collided):
            z[collided] += radius * 1e-6 * np.exp(1j * (1.0 + k[collided]))
            continue
        step = p / denom
        z = z - step
        if np.max(np.abs(step)) <= tol * max(1.0, float(np.max(np.abs(z)))):
            return z
    raise ConvergenceError(f"Durand-Kerner did not converge within {max_sweeps} sweeps")


def charpoly_oracle(a) -> Spectrum:
    """Spectrum via characteristic polynomial root finding (n <= 10).

    Independent of the QR path end to end, which makes it a useful
    cross-check for the main solver on small matrices.
    """
    a = _checked_square(a)
    n = a.shape[0]
    if n > 10:
        raise ValueError("characteristic-polynomial oracle is limited to n <= 10")
    if n == 1:
        values = a.diagonal().astype(complex)
    else:
        values = _durand_kerner(charpoly_coefficients(a))
    values = _sorted_lex(values)
    residuals = np.zeros(n)
    for k, lam in enumerate(values):
        _, residuals[k], _ = _inverse_iteration(a, lam)
    return Spectrum(values, residuals, True)


# ---------------------------------------------------------------------------
# multiset comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatchResult:
    """Greedy minimal-distance perfect matching between two multisets."""

    ok: bool
    max_distance: float
    pairs: tuple[tuple[int, int], ...]


def match_multisets(a, b, tol: float = MATCH_TOL) -> MatchResult:
    """Pair up two equal-length complex multisets, closest pairs first.

    Succeeds when every matched pair lies within ``tol``. Greedy
    matching is exact for the near-identical multisets compared here.
    """
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        raise ValueError(f"multiset lengths differ: {a.size} != {b.size}")
    if a.size == 0:
        return MatchResult(True, 0.0, ())
    dist = np.abs(a[:, None] - b[None, :])
    order = np.argsort(dist, axis=None, kind="stable")
    used_a = np.zeros(a.size, dtype=bool)
    used_b = np.zeros(b.size, dtype=bool)
    pairs: list[tuple[int, int]] = []
    max_distance = 0.0
    for flat in order:
        i, j = divmod(int(flat), b.size)
        if used_a[i] or used_b[j]:
            continue
        used_a[i] = True
        used_b[j] = True
        pairs.append((i, j))
        max_distance = max(max_distance, float(dist[i, j]))
        if len(pairs) == a.size:
            break
    return MatchResult(max_distance <= tol, max_distance, tuple(pairs))
