"""Spectral verifiers for the normalized complex Laplacian.

Every check returns raw signed margins (positive = slack, negative =
violation) next to its pass/fail verdict, so callers can assert
quantitative headroom. ``run_all_checks`` bundles them into a
:class:`VerificationReport` that serializes both as human-readable text
and as machine-readable ``check=<name> pass=<bool> margin=<real>`` lines.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .admittance import gap_constants, validate_frequency
from .eigensolver import MatchResult, Spectrum, eigenvalues, match_multisets
from .laplacian import assemble
from .network import Network, bipartition, diameter, p4_example

__all__ = [
    "CheckOutcome",
    "CircleEntry",
    "GapReport",
    "RegionReport",
    "SharpnessPoint",
    "Tolerances",
    "TraceReport",
    "VerificationReport",
    "check_bipartite_symmetry",
    "check_circles",
    "check_disk",
    "check_dual",
    "check_trace",
    "check_zero_simple",
    "gap_bound",
    "run_all_checks",
    "sharpness_sweep",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack applied by the verifiers.

    region     -- allowed undershoot of disk/circle/interval margins
    real_axis  -- |Im| threshold classifying an eigenvalue as real
    zero       -- |eigenvalue| threshold for the kernel / gap split
    match      -- multiset matching distance (dual, bipartite, oracles)
    trace      -- per-vertex scale factor for the trace identities
    gap        -- allowed undershoot of the spectral-gap bound
    locate     -- nearest-eigenvalue search radius in the sweep
    """

    region: float = 1e-8
    real_axis: float = 1e-9
    zero: float = 1e-8
    match: float = 1e-8
    trace: float = 1e-8
    gap: float = 1e-10
    locate: float = 1e-6

    def replace(self, **overrides) -> "Tolerances":
        return dataclasses.replace(self, **overrides)


# ---------------------------------------------------------------------------
# eigenvalue regions
# ---------------------------------------------------------------------------

def check_disk(spectrum: Spectrum, s) -> float:
    """Margin of the disk estimate |1 - lambda| <= |s| / Re s.

    Returns min over eigenvalues of the slack; nonnegative (up to
    rounding) for the spectrum of any valid network Laplacian.
    """
    s = validate_frequency(s)
    radius = abs(s) / s.real
    return float(np.min(radius - np.abs(1.0 - spectrum.eigenvalues)))


@dataclass(frozen=True)
class CircleEntry:
    """Region diagnostics for one eigenvalue.

    ``classification`` is 'real' for |Im| below the real-axis threshold,
    otherwise 'plus'/'minus' for the nearer of the two circles centered
    at (1, +|Im s|/Re s) and (1, -|Im s|/Re s). ``margin`` is the
    interval slack min(Re, 2 - Re) for real entries and radius minus
    distance-to-nearer-center otherwise. ``re_sign_ok`` picks the circle
    by the sign of Re lambda, ``im_sign_ok`` by the sign of Im lambda;
    both are informational, the pass decision uses the circle union.
    """

    eigenvalue: complex
    classification: str
    margin: float
    re_sign_ok: bool
    im_sign_ok: bool


@dataclass(frozen=True)
class RegionReport:
    disk_margin: float
    circle_margins: tuple[CircleEntry, ...]
    real_interval_ok: bool
    all_pass: bool


def check_circles(spectrum: Spectrum, s, tols: Tolerances = Tolerances()) -> RegionReport:
    """Membership of every eigenvalue in the twin-circle union / [0, 2]."""
    s = validate_frequency(s)
    c = abs(s.imag) / s.real
    radius = math.sqrt(1.0 + c * c)
    center_plus = complex(1.0, c)
    center_minus = complex(1.0, -c)
    entries: list[CircleEntry] = []
    for lam in spectrum.eigenvalues:
        lam = complex(lam)
        d_plus = abs(lam - center_plus)
        d_minus = abs(lam - center_minus)
        in_plus = radius - d_plus >= -tols.region
        in_minus = radius - d_minus >= -tols.region
        interval_margin = min(lam.real, 2.0 - lam.real)
        interval_ok = interval_margin >= -tols.region
        if abs(lam.imag) <= tols.real_axis:
            classification = "real"
            margin = interval_margin
        else:
            classification = "plus" if d_plus <= d_minus else "minus"
            margin = radius - min(d_plus, d_minus)
        if lam.real > 0:
            re_sign_ok = in_plus
        elif lam.real < 0:
            re_sign_ok = in_minus
        else:
            re_sign_ok = True
        if lam.imag > tols.real_axis:
            im_sign_ok = in_plus
        elif lam.imag < -tols.real_axis:
            im_sign_ok = in_minus
        else:
            im_sign_ok = interval_ok
        entries.append(CircleEntry(lam, classification, float(margin), re_sign_ok, im_sign_ok))
    real_interval_ok = all(
        e.margin >= -tols.region for e in entries if e.classification == "real"
    )
    disk_margin = check_disk(spectrum, s)
    all_pass = (
        disk_margin >= -tols.region
        and all(e.margin >= -tols.region for e in entries)
        and real_interval_ok
    )
    return RegionReport(disk_margin, tuple(entries), real_interval_ok, all_pass)


# ---------------------------------------------------------------------------
# trace and kernel
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TraceReport:
    """Trace-based identities: sum of eigenvalues, imaginary cancellation,
    and the n/(n-1) envelope for the real parts and the largest modulus."""

    eigen_sum_error: float
    imag_sum_error: float
    max_real: float
    min_real_nonzero: float
    max_modulus: float
    threshold: float
    passed: bool


def check_trace(spectrum: Spectrum, n: int, tols: Tolerances = Tolerances()) -> TraceReport:
    ev = spectrum.eigenvalues
    eigen_sum_error = abs(complex(np.sum(ev)) - n)
    imag_sum_error = abs(float(np.sum(ev.imag)))
    max_real = float(np.max(ev.real))
    nonzero = ev[np.abs(ev) > tols.zero]
    min_real_nonzero = float(np.min(nonzero.real)) if nonzero.size else float("nan")
    max_modulus = float(np.max(np.abs(ev)))
    threshold = n / (n - 1)
    slack = tols.trace * n
    passed = (
        eigen_sum_error <= slack
        and imag_sum_error <= slack
        and max_real >= threshold - tols.trace
        and (not nonzero.size or min_real_nonzero <= threshold + tols.trace)
        and max_modulus >= threshold - tols.trace
    )
    return TraceReport(
        float(eigen_sum_error),
        imag_sum_error,
        max_real,
        min_real_nonzero,
        max_modulus,
        threshold,
        passed,
    )


def check_zero_simple(spectrum: Spectrum, tols: Tolerances = Tolerances()) -> bool:
    """Exactly one eigenvalue inside the zero threshold."""
    return spectrum.zero_count(tols.zero) == 1


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------

def check_dual(spectrum: Spectrum, dual_spectrum: Spectrum, tols: Tolerances = Tolerances()) -> MatchResult:
    """Conjugating every admittance conjugates the spectrum."""
    return match_multisets(
        np.conj(spectrum.eigenvalues), dual_spectrum.eigenvalues, tols.match
    )


def check_bipartite_symmetry(
    net: Network, spectrum: Spectrum, tols: Tolerances = Tolerances()
) -> MatchResult | None:
    """On bipartite graphs the spectrum is invariant under 2 - lambda.

    Returns None (not applicable) when the graph has an odd cycle.
    """
    if bipartition(net) is None:
        return None
    ev = spectrum.eigenvalues
    return match_multisets(ev, 2.0 - ev, tols.match)


# ---------------------------------------------------------------------------
# spectral gap
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GapReport:
    """Diameter-based lower bound on the smallest nonzero |eigenvalue|.

    ``bound`` is present exactly when the admissibility condition holds;
    ``satisfied`` is None in the inadmissible case.
    """

    admissible: bool
    bound: float | None
    lambda1_modulus: float
    satisfied: bool | None


def gap_bound(net: Network, s, spectrum: Spectrum, tols: Tolerances = Tolerances()) -> GapReport:
    s = validate_frequency(s)
    constants = gap_constants(net, s)
    lambda1 = spectrum.smallest_nonzero_modulus(tols.zero)
    if not constants.admissible:
        return GapReport(False, None, lambda1, None)
    bound = constants.c1 * s.real**2 / (
        diameter(net) * constants.c2 * min(1.0, abs(s) ** 2)
    )
    return GapReport(True, bound, lambda1, lambda1 >= bound - tols.gap)


# ---------------------------------------------------------------------------
# sharpness sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SharpnessPoint:
    """How much of the upper circle's radius the tracked eigenvalue uses.

    ``target_eigenvalue`` is the closed-form location 1 + s^2/(1 + s^2)
    of the tracked eigenvalue of the built-in 4-vertex path;
    ``eigenvalue`` is the solved eigenvalue nearest to it. ``ratio`` is
    distance-to-center over radius for the circle centered at
    (1, s2/s1); it approaches 1 as s1 grows, so the circles cannot be
    shrunk.
    """

    s1: float
    s2: float
    target_eigenvalue: complex
    eigenvalue: complex
    ratio: float


def sharpness_sweep(
    s1_values,
    s2: float,
    net: Network | None = None,
    tols: Tolerances = Tolerances(),
) -> list[SharpnessPoint]:
    """Track the circle-filling eigenvalue over frequencies s1 + i s2.

    Uses the built-in 4-vertex path with weights (s, 1/s, s) unless an
    explicit network is supplied. ``s1_values`` must be positive and
    ascending, ``s2`` positive.
    """
    s1_list = [float(x) for x in s1_values]
    if not s1_list:
        raise ValueError("need at least one s1 value")
    if any(x <= 0 for x in s1_list) or any(
        a >= b for a, b in zip(s1_list, s1_list[1:])
    ):
        raise ValueError("s1 values must be positive and strictly ascending")
    if not s2 > 0:
        raise ValueError("s2 must be positive")
    if net is None:
        net = p4_example()
    points: list[SharpnessPoint] = []
    for s1 in s1_list:
        s = complex(s1, s2)
        target = 1.0 + s * s / (1.0 + s * s)
        spectrum = eigenvalues(assemble(net, s).entries, compute_residuals=False)
        distances = np.abs(spectrum.eigenvalues - target)
        nearest = int(np.argmin(distances))
        if distances[nearest] > tols.locate:
            raise RuntimeError(
                f"no eigenvalue within {tols.locate:g} of the tracked value "
                f"at s = {s} (nearest is {distances[nearest]:.3e} away)"
            )
        lam = complex(spectrum.eigenvalues[nearest])
        m = s2 / s1
        ratio = abs(lam - complex(1.0, m)) / math.sqrt(1.0 + m * m)
        points.append(SharpnessPoint(s1, s2, complex(target), lam, float(ratio)))
    return points


# ---------------------------------------------------------------------------
# combined report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckOutcome:
    name: str
    applicable: bool
    passed: bool
    margin: float
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    outcomes: tuple[CheckOutcome, ...]

    def all_passed(self) -> bool:
        return all(o.passed for o in self.outcomes if o.applicable)

    def failures(self) -> list[CheckOutcome]:
        return [o for o in self.outcomes if o.applicable and not o.passed]

    def to_text(self) -> str:
        width = max(len(o.name) for o in self.outcomes)
        lines = []
        for o in self.outcomes:
            if not o.applicable:
                verdict = "n/a "
            else:
                verdict = "PASS" if o.passed else "FAIL"
            margin = "" if math.isnan(o.margin) else f"  margin={o.margin:.6e}"
            note = f"  ({o.note})" if o.note else ""
            lines.append(f"{o.name.ljust(width)}  {verdict}{margin}{note}")
        verdict = "all applicable checks passed" if self.all_passed() else "FAILURES: " + ", ".join(
            o.name for o in self.failures()
        )
        lines.append(f"summary: {verdict}")
        return "\n".join(lines)

    def to_machine(self) -> str:
        lines = []
        for o in self.outcomes:
            passed = ("true" if o.passed else "false") if o.applicable else "na"
            lines.append(f"check={o.name} pass={passed} margin={o.margin!r}")
        return "\n".join(lines)


def run_all_checks(
    net: Network, s, tols: Tolerances = Tolerances()
) -> tuple[VerificationReport, Spectrum, Spectrum]:
    """Run every verifier on a network at one frequency.

    Returns the report plus the primal and dual spectra so callers can
    inspect convergence and residuals.
    """
    s = validate_frequency(s)
    spectrum = eigenvalues(assemble(net, s).entries)
    dual_spectrum = eigenvalues(assemble(net, s, dual=True).entries)
    region = check_circles(spectrum, s, tols)
    trace = check_trace(spectrum, net.n, tols)
    zero_ok = check_zero_simple(spectrum, tols)
    dual = check_dual(spectrum, dual_spectrum, tols)
    bip = check_bipartite_symmetry(net, spectrum, tols)
    gap = gap_bound(net, s, spectrum, tols)

    moduli = np.sort(np.abs(spectrum.eigenvalues))
    zero_margin = min(tols.zero - moduli[0], moduli[1] - tols.zero)
    real_margins = [e.margin for e in region.circle_margins if e.classification == "real"]
    circle_margin = min(e.margin for e in region.circle_margins)
    trace_margin = min(
        tols.trace * net.n - trace.eigen_sum_error,
        tols.trace * net.n - trace.imag_sum_error,
        trace.max_real - trace.threshold + tols.trace,
        (trace.threshold + tols.trace - trace.min_real_nonzero)
        if not math.isnan(trace.min_real_nonzero)
        else float("inf"),
        trace.max_modulus - trace.threshold + tols.trace,
    )

    outcomes = [
        CheckOutcome(
            "disk", True, region.disk_margin >= -tols.region, region.disk_margin
        ),
        CheckOutcome(
            "circles",
            True,
            all(e.margin >= -tols.region for e in region.circle_margins),
            circle_margin,
        ),
        CheckOutcome(
            "real_interval",
            True,
            region.real_interval_ok,
            min(real_margins) if real_margins else float("nan"),
            "" if real_margins else "no real eigenvalues",
        ),
        CheckOutcome("trace", True, trace.passed, trace_margin),
        CheckOutcome("zero_simple", True, zero_ok, float(zero_margin)),
        CheckOutcome("dual", True, dual.ok, tols.match - dual.max_distance),
        CheckOutcome(
            "bipartite",
            bip is not None,
            bip.ok if bip is not None else True,
            tols.match - bip.max_distance if bip is not None else float("nan"),
            "" if bip is not None else "graph has an odd cycle",
        ),
        CheckOutcome(
            "gap_bound",
            gap.admissible,
            bool(gap.satisfied) if gap.admissible else True,
            gap.lambda1_modulus - gap.bound if gap.admissible else float("nan"),
            "" if gap.admissible else "admissibility condition not positive at this s",
        ),
    ]
    return VerificationReport(tuple(outcomes)), spectrum, dual_spectrum
