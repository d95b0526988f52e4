"""Seeded random scenes for cross-validating the drall closed form.

The generators produce synthesized curves with a spacelike rotation vector
(|kappa| > |tau| everywhere) or a timelike one (|tau| > |kappa|), random
non-null ruling directions, and sample parameters; trials compare the closed
form against the finite-difference determinant at the stated tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .curves import Curve, curve_from_curvature
from .involute import InvoluteCurve
from .surfaces import (
    Degeneracy,
    DrallResult,
    RulingDirection,
    TrajectoryRuledSurface,
    drall_closed,
    drall_numeric,
    make_direction,
)

__all__ = [
    "OracleTrial",
    "RandomCurve",
    "build_case1_curve",
    "build_case2_curve",
    "random_direction",
    "run_trials",
]

REL_TOL = 1e-4


@dataclass(frozen=True)
class OracleTrial:
    s: float
    direction: RulingDirection
    closed: DrallResult
    numeric: DrallResult
    rel_err: float
    agree: bool


@dataclass(frozen=True)
class RandomCurve:
    """A synthesized curve together with the functions that prescribed it."""

    curve: Curve
    kappa: Callable[[float], float]
    tau: Callable[[float], float]


def random_direction(rng: np.random.Generator, min_square: float = 0.2) -> RulingDirection:
    """Random non-null ruling direction with a comfortably non-null square."""
    while True:
        x = rng.uniform(-1.5, 1.5, size=3)
        q = x[0] * x[0] - x[1] * x[1] + x[2] * x[2]
        if abs(q) >= min_square:
            return make_direction(float(x[0]), float(x[1]), float(x[2]))


def _poly(coeffs: Sequence[float]) -> Callable[[float], float]:
    cs = list(coeffs)

    def f(s: float) -> float:
        acc = 0.0
        for c in reversed(cs):
            acc = acc * s + c
        return acc

    return f


def build_case1_curve(
    rng: np.random.Generator, domain: tuple[float, float] = (-0.05, 2.05)
) -> RandomCurve:
    """Synthesized curve with |kappa| > |tau|: kappa quadratic, ratio linear."""
    k0 = rng.uniform(0.7, 1.6)
    k1 = rng.uniform(-0.12, 0.12)
    k2 = rng.uniform(-0.05, 0.05)
    r0 = rng.uniform(-0.55, 0.55)
    r1 = rng.uniform(-0.12, 0.12)
    kappa = _poly([k0, k1, k2])
    ratio = _poly([r0, r1])

    def tau(s: float) -> float:
        return ratio(s) * kappa(s)

    # keep the ratio clear of +-1 over the domain so the rotation vector
    # stays spacelike
    grid = np.linspace(domain[0], domain[1], 33)
    if max(abs(ratio(float(s))) for s in grid) > 0.85:
        return build_case1_curve(rng, domain)
    if min(kappa(float(s)) for s in grid) < 0.3:
        return build_case1_curve(rng, domain)
    return RandomCurve(curve_from_curvature(kappa, tau, domain=domain), kappa, tau)


def build_case2_curve(
    rng: np.random.Generator, domain: tuple[float, float] = (-0.05, 2.05)
) -> RandomCurve:
    """Synthesized curve with |tau| > |kappa| > 0 (timelike rotation vector)."""
    t0 = rng.uniform(0.8, 1.6)
    t1 = rng.uniform(-0.12, 0.12)
    rho0 = rng.uniform(0.2, 0.7)
    rho1 = rng.uniform(-0.08, 0.08)
    tau = _poly([t0, t1])
    rho = _poly([rho0, rho1])

    def kappa(s: float) -> float:
        return rho(s) * tau(s)

    grid = np.linspace(domain[0], domain[1], 33)
    if max(abs(rho(float(s))) for s in grid) > 0.85:
        return build_case2_curve(rng, domain)
    if min(rho(float(s)) for s in grid) < 0.1 or min(tau(float(s)) for s in grid) < 0.4:
        return build_case2_curve(rng, domain)
    return RandomCurve(curve_from_curvature(kappa, tau, domain=domain), kappa, tau)


def _trial(surf: TrajectoryRuledSurface, s: float) -> OracleTrial:
    closed = drall_closed(surf, s)
    numeric = drall_numeric(surf, s)
    if (
        closed.degeneracy is Degeneracy.REGULAR
        and numeric.degeneracy is Degeneracy.REGULAR
    ):
        rel = abs(closed.value - numeric.value) / max(1.0, abs(numeric.value))
        agree = rel <= REL_TOL
    elif closed.degeneracy is numeric.degeneracy:
        rel = 0.0
        agree = True
    else:
        regular = closed if closed.degeneracy is Degeneracy.REGULAR else numeric
        rel = abs(regular.value)
        agree = rel <= REL_TOL
    return OracleTrial(
        s=s, direction=surf.direction, closed=closed, numeric=numeric,
        rel_err=rel, agree=agree,
    )


def run_trials(
    curve: Curve,
    c_const: float,
    s_window: tuple[float, float],
    rng: np.random.Generator,
    trials: int,
    min_denominator: float = 0.02,
) -> list[OracleTrial]:
    """Seeded (direction, s) trials on one curve.

    Directions and samples whose closed-form denominator sits too close to
    zero (relative to its natural scale) are resampled: near the singular
    set the distribution parameter itself diverges and relative comparison
    is meaningless.
    """
    inv = InvoluteCurve(curve, c_const, domain=s_window)
    out: list[OracleTrial] = []
    attempts = 0
    while len(out) < trials:
        attempts += 1
        if attempts > 50 * trials:
            raise RuntimeError("could not find enough well-conditioned trials")
        direction = random_direction(rng)
        s = float(rng.uniform(s_window[0], s_window[1]))
        surf = TrajectoryRuledSurface(inv=inv, direction=direction)
        closed = drall_closed(surf, s)
        if closed.degeneracy is Degeneracy.REGULAR:
            scale = max(1.0, abs(closed.denominator) + abs(closed.numerator))
            if abs(closed.denominator) < min_denominator * scale:
                continue
        out.append(_trial(surf, s))
    return out
