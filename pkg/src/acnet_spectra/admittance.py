"""Complex admittances at a frequency s with Re s > 0, and the scalar
constants and bound margins derived from them.

The admittance of a branch with elements (L, R, D) is s / (L s^2 + R s + D).
For Re s > 0 the denominator cannot vanish, every edge admittance has a
strictly positive real part, and the moduli obey

    |rho_xy|  <=  (|s| / Re s) * Re rho_xy
    |rho(x)|  <=  sum_y 1/(L+R+D) * max(1, |s|^2) / Re s

The margin functions below return the raw signed slack of those bounds so
callers can assert quantitative headroom rather than booleans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .network import Network

__all__ = [
    "AdmittanceTable",
    "GapConstants",
    "admittance_table",
    "edge_admittance",
    "gap_constants",
    "lemma_lhs",
    "modulus_bound_margin",
    "validate_frequency",
    "vertex_modulus_bound_margin",
]


def validate_frequency(s) -> complex:
    """Coerce to complex and require a finite value with Re s > 0."""
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise ValueError("frequency must be finite")
    if not s.real > 0.0:
        raise ValueError("Re s must be positive")
    return s


def edge_admittance(L: float, R: float, D: float, s) -> complex:
    """Admittance s / (L s^2 + R s + D) of one series branch."""
    for value in (L, R, D):
        if not math.isfinite(value) or value < 0.0:
            raise ValueError("element values must be non-negative finite reals")
    if L + R + D == 0.0:
        raise ValueError("element values must not all be zero")
    s = validate_frequency(s)
    return s / (L * s * s + R * s + D)


@dataclass(frozen=True)
class AdmittanceTable:
    """Per-edge and per-vertex admittances of a network at one frequency.

    ``rho_edge[k]`` is the admittance of ``net.edges[k]``; ``rho_vertex[x]``
    is the sum of the admittances of the edges incident to vertex x.
    """

    rho_edge: np.ndarray
    rho_vertex: np.ndarray

    @property
    def tau_edge(self) -> np.ndarray:
        return self.rho_edge.real

    @property
    def sigma_edge(self) -> np.ndarray:
        return self.rho_edge.imag

    @property
    def tau_vertex(self) -> np.ndarray:
        return self.rho_vertex.real

    @property
    def sigma_vertex(self) -> np.ndarray:
        return self.rho_vertex.imag


def admittance_table(net: Network, s) -> AdmittanceTable:
    s = validate_frequency(s)
    rho_edge = np.array([edge_admittance(e.L, e.R, e.D, s) for e in net.edges], dtype=complex)
    rho_vertex = np.zeros(net.n, dtype=complex)
    for k, e in enumerate(net.edges):
        rho_vertex[e.u] += rho_edge[k]
        rho_vertex[e.v] += rho_edge[k]
    return AdmittanceTable(rho_edge, rho_vertex)


def modulus_bound_margin(table: AdmittanceTable, s) -> float:
    """Min over edges of (|s|/Re s) * Re rho_xy - |rho_xy|; never negative."""
    s = validate_frequency(s)
    ratio = abs(s) / s.real
    return float(np.min(ratio * table.rho_edge.real - np.abs(table.rho_edge)))


def vertex_modulus_bound_margin(net: Network, table: AdmittanceTable, s) -> float:
    """Min over vertices of the modulus bound slack for rho(x)."""
    s = validate_frequency(s)
    cap = max(1.0, abs(s) ** 2) / s.real
    inverse_sums = np.zeros(net.n)
    for e in net.edges:
        w = 1.0 / (e.L + e.R + e.D)
        inverse_sums[e.u] += w
        inverse_sums[e.v] += w
    return float(np.min(inverse_sums * cap - np.abs(table.rho_vertex)))


@dataclass(frozen=True)
class GapConstants:
    """Network constants entering the diameter-based spectral-gap bound.

    ``c1`` is the minimum over vertices of the incident sums of
    1/(L+R+D); ``c2`` sums 1/(L+R+D) over ordered vertex pairs, i.e.
    every edge counts twice (halve it if you want the per-edge sum).
    ``admissible`` is True when ``condition_lhs`` is strictly positive,
    which is the hypothesis under which the gap bound applies.
    """

    c1: float
    c2: float
    condition_lhs: float
    admissible: bool


def gap_constants(net: Network, s) -> GapConstants:
    s = validate_frequency(s)
    inverse_sums = np.zeros(net.n)
    for e in net.edges:
        w = 1.0 / (e.L + e.R + e.D)
        inverse_sums[e.u] += w
        inverse_sums[e.v] += w
    c1 = float(np.min(inverse_sums))
    c2 = float(np.sum(inverse_sums))
    mod2 = abs(s) ** 2
    condition_lhs = c1 * s.real * min(mod2, mod2 ** -2) - c2 * (abs(s.imag) / s.real) * (
        max(1.0, mod2) / s.real
    )
    return GapConstants(c1, c2, condition_lhs, condition_lhs > 0.0)


def lemma_lhs(table: AdmittanceTable, s) -> float:
    """min_x Re rho(x) - (|Im s|/Re s) * sum_x Re rho(x).

    This is bounded below by ``GapConstants.condition_lhs`` for the same
    network and frequency.
    """
    s = validate_frequency(s)
    tau = table.rho_vertex.real
    return float(np.min(tau) - (abs(s.imag) / s.real) * np.sum(tau))
