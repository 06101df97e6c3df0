"""Assembly of the normalized complex-weighted Laplacian and the energy
identities attached to it.

The operator acts on functions f on the vertex set as

    f(x)  -  (1 / rho(x)) * sum_y f(y) rho_xy

so its matrix has unit diagonal, ``-rho_xy / rho(x)`` off the diagonal on
edges, zeros elsewhere, and zero row sums. The dual variant replaces every
admittance by its complex conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .admittance import admittance_table, validate_frequency
from .network import Network

__all__ = [
    "LaplacianMatrix",
    "apply",
    "assemble",
    "complex_power",
    "format_complex",
    "format_matrix",
    "green_residual",
]


@dataclass(frozen=True)
class LaplacianMatrix:
    """Dense matrix of the normalized Laplacian at one frequency."""

    entries: np.ndarray
    dual: bool = False

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def assemble(net: Network, s, dual: bool = False) -> LaplacianMatrix:
    """Build the normalized Laplacian of ``net`` at frequency ``s``.

    With ``dual=True`` every admittance in the formula is conjugated,
    which conjugates the matrix entrywise.
    """
    s = validate_frequency(s)
    table = admittance_table(net, s)
    rho_edge = table.rho_edge
    rho_vertex = table.rho_vertex
    if dual:
        rho_edge = rho_edge.conj()
        rho_vertex = rho_vertex.conj()
    # Re rho(x) > 0 holds for every vertex of a valid network; the guard
    # only protects against pathological underflow.
    assert np.all(np.abs(rho_vertex) > 1e-30)
    a = np.eye(net.n, dtype=complex)
    for k, e in enumerate(net.edges):
        a[e.u, e.v] = -rho_edge[k] / rho_vertex[e.u]
        a[e.v, e.u] = -rho_edge[k] / rho_vertex[e.v]
    return LaplacianMatrix(a, dual)


def apply(lap: LaplacianMatrix, f) -> np.ndarray:
    f = np.asarray(f, dtype=complex)
    if f.shape != (lap.n,):
        raise ValueError(f"expected a vector of length {lap.n}, got shape {f.shape}")
    return lap.entries @ f


def green_residual(net: Network, s, f, g) -> float:
    """Absolute defect of the summation-by-parts identity.

    Compares sum_x (Lf)(x) g(x) rho(x) against the half ordered-pair sum
    of the gradient products weighted by edge admittances; the identity
    is exact, so the result is rounding noise.
    """
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if f.shape != (net.n,) or g.shape != (net.n,):
        raise ValueError(f"expected vectors of length {net.n}")
    s = validate_frequency(s)
    table = admittance_table(net, s)
    lap = assemble(net, s)
    lhs = np.sum((lap.entries @ f) * g * table.rho_vertex)
    rhs = 0.0 + 0.0j
    for k, e in enumerate(net.edges):
        # each edge stands for both ordered pairs, cancelling the 1/2
        rhs += (f[e.v] - f[e.u]) * (g[e.v] - g[e.u]) * table.rho_edge[k]
    return abs(lhs - rhs)


def complex_power(net: Network, s, f) -> complex:
    """Half the ordered-pair sum of |f(y) - f(x)|^2 rho_xy."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (net.n,):
        raise ValueError(f"expected a vector of length {net.n}")
    s = validate_frequency(s)
    table = admittance_table(net, s)
    total = 0.0 + 0.0j
    for k, e in enumerate(net.edges):
        total += abs(f[e.v] - f[e.u]) ** 2 * table.rho_edge[k]
    return complex(total)


def format_complex(z: complex) -> str:
    """Render a complex number as ``re{+|-}im i`` with 17 significant digits."""
    z = complex(z)
    sign = "+" if z.imag >= 0 or z.imag != z.imag else "-"
    return f"{z.real:.16e}{sign}{abs(z.imag):.16e}i"


def format_matrix(lap: LaplacianMatrix | np.ndarray) -> str:
    """Debug dump: one row per line, entries space-separated."""
    a = lap.entries if isinstance(lap, LaplacianMatrix) else np.asarray(lap, dtype=complex)
    return "\n".join(" ".join(format_complex(z) for z in row) for row in a) + "\n"
