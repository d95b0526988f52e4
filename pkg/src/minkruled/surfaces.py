"""Trajectory ruled surfaces over spacelike involutes.

A surface is swept by a line whose direction X = x1 t* + x2 n* + x3 b* is
held fixed in the involute frame. The module computes the distribution
parameter (drall) of such surfaces two independent ways: a closed form in
the frame invariants (kappa, ||d||, theta, theta') and a finite-difference
determinant evaluation, classifies developability, constructs angle profiles
that force developability, and evaluates striction curves.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from . import numdiff
from .curves import darboux_data, frenet_apparatus, is_general_helix
from .errors import (
    CylindricalRulingError,
    DegenerateCoefficientError,
    GeometryError,
    NullDirectionError,
)
from .involute import InvoluteCurve, involute_frame, involute_point, involute_velocity
from .lorentz import CausalClass, Causality, Orientation, inner, triple

__all__ = [
    "DEGEN_TOL",
    "Degeneracy",
    "DevelopabilityReport",
    "DrallResult",
    "ProfileKind",
    "RulingDirection",
    "StrictionPoint",
    "TAU_DEV",
    "TAU_DEV_FD",
    "TAU_STRICT",
    "TrajectoryRuledSurface",
    "base_is_striction",
    "binormal_surface",
    "classify_developability",
    "developable_prescription",
    "drall_closed",
    "drall_numeric",
    "general_surface",
    "make_direction",
    "normal_binormal_drall_ratio",
    "normal_surface",
    "ruling_derivative",
    "ruling_vector",
    "striction_point",
    "surface_point",
    "tangent_surface",
    "theta_profile",
]

TAU_DEV = 1e-6
TAU_DEV_FD = 1e-4
TAU_STRICT = 1e-4
DEGEN_TOL = 1e-9


@dataclass(frozen=True)
class RulingDirection:
    """Constant ruling coefficients in the involute frame, normalized so that
    |x1^2 - x2^2 + x3^2| = 1 (the frame square with a timelike normal)."""

    x1: float
    x2: float
    x3: float
    causal: CausalClass

    def coefficients(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)


def make_direction(x1: float, x2: float, x3: float) -> RulingDirection:
    """Normalize ruling coefficients and record their causal type.

    The square is taken in the involute frame signature with timelike normal:
    q = x1^2 - x2^2 + x3^2. Lightlike coefficient triples are rejected; any
    non-null triple (spacelike or timelike) is accepted.
    """
    q = x1 * x1 - x2 * x2 + x3 * x3
    scale = max(1.0, x1 * x1 + x2 * x2 + x3 * x3)
    if abs(q) <= DEGEN_TOL * scale:
        raise NullDirectionError(
            f"coefficients ({x1}, {x2}, {x3}) have vanishing frame square"
        )
    r = 1.0 / math.sqrt(abs(q))
    if q < 0.0:
        causal = CausalClass(Causality.TIMELIKE, Orientation.POSITIVE)
    else:
        causal = CausalClass(Causality.SPACELIKE)
    return RulingDirection(x1=x1 * r, x2=x2 * r, x3=x3 * r, causal=causal)


@dataclass(frozen=True)
class TrajectoryRuledSurface:
    """phi(s, v) = gamma(s) + v X(s) with X fixed in the involute frame."""

    inv: InvoluteCurve
    direction: RulingDirection


def general_surface(inv: InvoluteCurve, x1: float, x2: float, x3: float) -> TrajectoryRuledSurface:
    return TrajectoryRuledSurface(inv=inv, direction=make_direction(x1, x2, x3))


def tangent_surface(inv: InvoluteCurve) -> TrajectoryRuledSurface:
    """Ruling along t*: the surface swept by the involute tangents."""
    return general_surface(inv, 1.0, 0.0, 0.0)


def normal_surface(inv: InvoluteCurve) -> TrajectoryRuledSurface:
    """Ruling along n*."""
    return general_surface(inv, 0.0, 1.0, 0.0)


def binormal_surface(inv: InvoluteCurve) -> TrajectoryRuledSurface:
    """Ruling along b*."""
    return general_surface(inv, 0.0, 0.0, 1.0)


def ruling_vector(surf: TrajectoryRuledSurface, s: float) -> np.ndarray:
    """X(s) = x1 t*(s) + x2 n*(s) + x3 b*(s) in ambient coordinates."""
    fr = involute_frame(surf.inv, s)
    d = surf.direction
    return d.x1 * fr.t_star + d.x2 * fr.n_star + d.x3 * fr.b_star


def surface_point(surf: TrajectoryRuledSurface, s: float, v: float) -> np.ndarray:
    """phi(s, v) = gamma(s) + v X(s)."""
    return involute_point(surf.inv, s) + v * ruling_vector(surf, s)


def ruling_derivative(surf: TrajectoryRuledSurface, s: float) -> np.ndarray:
    """X'(s) in ambient coordinates, from the frame equations.

    Expanding X in the base frame and differentiating gives, for a spacelike
    rotation vector,

        X' = (x1 kappa - theta' (x2 sinh + x3 cosh)) t
             - x2 ||d|| n
             + (-x1 tau + theta' (x2 cosh + x3 sinh)) b

    and the mirrored coefficients for a timelike one. The n-coefficient is
    -x2 ||d|| in both cases.
    """
    fa = frenet_apparatus(surf.inv.base, s)
    dd = darboux_data(surf.inv.base, s)
    x1, x2, x3 = surf.direction.coefficients()
    ch = math.cosh(dd.theta)
    sh = math.sinh(dd.theta)
    td = dd.theta_dot
    if dd.d_class.is_spacelike:
        yt = x1 * fa.kappa - td * (x2 * sh + x3 * ch)
        yb = -x1 * fa.tau + td * (x2 * ch + x3 * sh)
    else:
        yt = x1 * fa.kappa + td * (x2 * ch - x3 * sh)
        yb = -x1 * fa.tau - td * (x2 * sh - x3 * ch)
    yn = -x2 * dd.d_norm
    return yt * fa.t + yn * fa.n + yb * fa.b


class Degeneracy(enum.Enum):
    REGULAR = "regular"
    CYLINDRICAL = "cylindrical"
    SINGULAR = "singular"


@dataclass(frozen=True)
class DrallResult:
    """Signed distribution parameter with its degeneracy class.

    value is numerator/|denominator| for regular rulings, 0 for cylindrical
    ones (vanishing ruling derivative, trivially developable) and signed
    infinity for singular ones (vanishing denominator, surviving numerator).
    """

    value: float
    degeneracy: Degeneracy
    developable: bool
    numerator: float
    denominator: float


def _classify_drall(
    num: float, den: float, num_scale: float, den_scale: float, tau_dev: float
) -> DrallResult:
    if abs(den) <= DEGEN_TOL * den_scale:
        if abs(num) <= DEGEN_TOL * num_scale:
            return DrallResult(0.0, Degeneracy.CYLINDRICAL, True, num, den)
        return DrallResult(
            math.copysign(math.inf, num), Degeneracy.SINGULAR, False, num, den
        )
    value = num / abs(den)
    return DrallResult(value, Degeneracy.REGULAR, abs(value) <= tau_dev, num, den)


def _tau_dev_for(surf: TrajectoryRuledSurface) -> float:
    from .curves import DerivativeMode

    if surf.inv.base.derivative_mode is DerivativeMode.ANALYTIC:
        return TAU_DEV
    return TAU_DEV_FD


def drall_closed(surf: TrajectoryRuledSurface, s: float) -> DrallResult:
    """Distribution parameter from the closed form in frame invariants.

    For a spacelike rotation vector,

        delta = (c - s) kappa [x1 x3 ||d|| - theta' (x3^2 - x2^2)]
                / |(x2^2 - x1^2) ||d||^2 + (x2^2 - x3^2) theta'^2
                   + 2 x1 x3 theta' ||d|||

    where the denominator is the Lorentzian square of X'. The leading kappa
    factor is required for consistency with the determinant evaluation (see
    drall_numeric), as the axis-direction specializations confirm. For a
    timelike rotation vector the mirrored expansion yields the negated
    numerator over |(x1^2 + x2^2) ||d||^2 - (x2^2 - x3^2) theta'^2
    - 2 x1 x3 theta' ||d|||.
    """
    fa = frenet_apparatus(surf.inv.base, s)
    dd = darboux_data(surf.inv.base, s)
    x1, x2, x3 = surf.direction.coefficients()
    cs = surf.inv.c_const - s
    dn = dd.d_norm
    td = dd.theta_dot
    bracket = x1 * x3 * dn - td * (x3 * x3 - x2 * x2)
    if dd.d_class.is_spacelike:
        num = cs * fa.kappa * bracket
        den = (
            (x2 * x2 - x1 * x1) * dn * dn
            + (x2 * x2 - x3 * x3) * td * td
            + 2.0 * x1 * x3 * td * dn
        )
    else:
        num = -cs * fa.kappa * bracket
        den = (
            (x1 * x1 + x2 * x2) * dn * dn
            - (x2 * x2 - x3 * x3) * td * td
            - 2.0 * x1 * x3 * td * dn
        )
    num_scale = max(1.0, abs(cs) * fa.kappa * (dn + abs(td)))
    den_scale = max(1.0, dn * dn + td * td)
    return _classify_drall(num, den, num_scale, den_scale, _tau_dev_for(surf))


def drall_numeric(surf: TrajectoryRuledSurface, s: float) -> DrallResult:
    """Distribution parameter by the determinant rule.

    delta = det(gamma', X, X') / |<X', X'>| with X' obtained by five-point
    central differencing of the frame-built ruling, independent of the
    closed form above. gamma' is evaluated analytically and cross-checked
    against finite differences of the involute position.
    """
    inv = surf.inv
    gdot = involute_velocity(inv, s)
    gdot_fd = numdiff.derivative(lambda u: involute_point(inv, u), s, order=1)
    drift = float(np.max(np.abs(gdot - gdot_fd)))
    if drift > 1e-4 * max(1.0, float(np.max(np.abs(gdot)))):
        raise GeometryError(
            f"involute velocity cross-check failed at s = {s} (drift {drift})"
        )
    x_here = ruling_vector(surf, s)
    xdot = numdiff.derivative(lambda u: ruling_vector(surf, u), s, order=1)
    num = triple(gdot, x_here, xdot)
    den = inner(xdot, xdot)
    xdot_sq = float(xdot @ xdot)
    num_scale = max(
        1.0,
        float(np.linalg.norm(gdot))
        * float(np.linalg.norm(x_here))
        * max(1.0, math.sqrt(xdot_sq)),
    )
    den_scale = max(1.0, xdot_sq)
    return _classify_drall(num, den, num_scale, den_scale, TAU_DEV_FD)


def normal_binormal_drall_ratio(inv: InvoluteCurve, s: float) -> float:
    """theta'^2 / (||d||^2 + theta'^2): the predicted |drall| ratio of the
    n*-ruled to the b*-ruled surface wherever both are regular."""
    dd = darboux_data(inv.base, s)
    td = dd.theta_dot
    return td * td / (dd.d_norm * dd.d_norm + td * td)


@dataclass(frozen=True)
class DevelopabilityReport:
    developable: bool
    max_abs_drall: float
    degeneracy_counts: Mapping[Degeneracy, int]
    reason: str
    max_normal_angle: float


def _surface_normal(surf: TrajectoryRuledSurface, s: float, v: float) -> np.ndarray | None:
    # Euclidean normal of the tangent plane span{phi_s, phi_v}; the span is
    # metric-independent, so this is a valid constancy probe along rulings.
    phi_s = involute_velocity(surf.inv, s) + v * ruling_derivative(surf, s)
    n = np.cross(phi_s, ruling_vector(surf, s))
    length = float(np.linalg.norm(n))
    if length < 1e-12:
        return None
    return n / length


def classify_developability(
    surf: TrajectoryRuledSurface, samples: Sequence[float]
) -> DevelopabilityReport:
    """Developability verdict over a sample set, with evidence.

    Every sample must come out developable (cylindrical, or |drall| within
    tolerance). For flagged-developable samples the verdict is cross-checked
    geometrically: the tangent-plane normal at ruling parameters 0.1 and 1.0
    must be parallel within 1e-3 radians.
    """
    counts = {deg: 0 for deg in Degeneracy}
    max_abs = 0.0
    bad = 0
    max_angle = 0.0
    for s in samples:
        res = drall_closed(surf, float(s))
        counts[res.degeneracy] += 1
        if res.degeneracy is Degeneracy.REGULAR:
            max_abs = max(max_abs, abs(res.value))
        if not res.developable:
            bad += 1
            continue
        n1 = _surface_normal(surf, float(s), 0.1)
        n2 = _surface_normal(surf, float(s), 1.0)
        if n1 is None or n2 is None:
            continue
        angle = math.acos(min(1.0, abs(float(n1 @ n2))))
        max_angle = max(max_angle, angle)
        if angle > 1e-3:
            raise GeometryError(
                f"drall flags s = {s} developable but ruling normals tilt by {angle}"
            )
    developable = bad == 0
    x1, x2, x3 = surf.direction.coefficients()
    if not developable:
        reason = f"drall exceeds tolerance at {bad} of {len(samples)} samples"
    elif counts[Degeneracy.CYLINDRICAL] == len(samples):
        reason = "constant ruling direction (cylindrical surface)"
    elif abs(x2) < 1e-12 and abs(x3) < 1e-12:
        reason = "ruling along the involute tangent"
    elif is_general_helix(surf.inv.base, samples)[0]:
        reason = "base curve is a general helix (constant rotation angle)"
    else:
        reason = "rotation-angle profile satisfies the developability condition"
    return DevelopabilityReport(
        developable=developable,
        max_abs_drall=max_abs,
        degeneracy_counts=counts,
        reason=reason,
        max_normal_angle=max_angle,
    )


class ProfileKind(enum.Enum):
    GENERAL = "general"
    RECTIFYING = "rectifying"


def theta_profile(
    kind: ProfileKind,
    direction: RulingDirection,
    dnorm_fn: Callable[[float], float],
    lam: float,
) -> Callable[[float], float]:
    """Rotation-angle profile that makes the X-ruled surface developable.

    Returns theta(s) = coeff * integral_0^s dnorm_fn(u) du + lam with
    coeff = x1 x3 / (x3^2 - x2^2) in general and x1/x3 on the rectifying
    plane (x2 = 0), by composite Simpson quadrature. Feeding the resulting
    torsion tau = kappa tanh(theta) into curve_from_curvature produces a
    curve whose X-ruled trajectory surface has vanishing drall.
    """
    x1, x2, x3 = direction.coefficients()
    if kind is ProfileKind.RECTIFYING:
        if abs(x2) > 1e-12:
            raise DegenerateCoefficientError("rectifying profile needs x2 = 0")
        if abs(x3) <= DEGEN_TOL:
            raise DegenerateCoefficientError("rectifying profile needs x3 != 0")
        coeff = x1 / x3
    else:
        gap = x3 * x3 - x2 * x2
        if abs(gap) <= DEGEN_TOL:
            raise DegenerateCoefficientError(
                "general profile needs x3^2 != x2^2"
            )
        coeff = x1 * x3 / gap

    def theta(s: float) -> float:
        return coeff * _simpson(dnorm_fn, 0.0, float(s)) + lam

    return theta


def _simpson(f: Callable[[float], float], a: float, b: float) -> float:
    if b == a:
        return 0.0
    n = max(4, 2 * math.ceil(abs(b - a) / 0.002))
    grid = np.linspace(a, b, n + 1)
    vals = np.array([f(float(u)) for u in grid])
    h = (b - a) / n
    return float(h / 3.0 * (vals[0] + vals[-1] + 4.0 * vals[1:-1:2].sum() + 2.0 * vals[2:-2:2].sum()))


def developable_prescription(
    direction: RulingDirection,
    dnorm_fn: Callable[[float], float],
    lam: float,
    kind: ProfileKind = ProfileKind.GENERAL,
) -> tuple[Callable[[float], float], Callable[[float], float]]:
    """Curvature/torsion pair realizing the developable angle profile.

    With theta from theta_profile, kappa = dnorm_fn * cosh(theta) and
    tau = dnorm_fn * sinh(theta) = kappa tanh(theta); the synthesized curve
    then has rotation-vector magnitude dnorm_fn and angle theta exactly.
    """
    theta = theta_profile(kind, direction, dnorm_fn, lam)

    def kappa_fn(s: float) -> float:
        return dnorm_fn(s) * math.cosh(theta(s))

    def tau_fn(s: float) -> float:
        return dnorm_fn(s) * math.sinh(theta(s))

    return kappa_fn, tau_fn


@dataclass(frozen=True)
class StrictionPoint:
    """Central point of the ruling through s.

    offset is the signed ruling-parameter value -<gamma', X'>/<X', X'> from
    finite differences; offset_closed is the same quantity from the frame
    invariants, x2 (c - s) kappa ||d|| / <X', X'>. The signed denominator
    keeps the central-point property <C', X'> = 0 even for rulings whose
    derivative is timelike.
    """

    point: np.ndarray
    offset: float
    offset_closed: float


def striction_point(surf: TrajectoryRuledSurface, s: float) -> StrictionPoint:
    """Central point on the ruling at s; undefined for cylindrical rulings."""
    inv = surf.inv
    fa = frenet_apparatus(inv.base, s)
    dd = darboux_data(inv.base, s)
    xdot_closed = ruling_derivative(surf, s)
    xx = inner(xdot_closed, xdot_closed)
    if abs(xx) <= DEGEN_TOL * max(1.0, dd.d_norm ** 2 + dd.theta_dot ** 2):
        raise CylindricalRulingError(
            f"striction undefined at s = {s}: ruling derivative is numerically null"
        )
    gdot_fd = numdiff.derivative(lambda u: involute_point(inv, u), s, order=1)
    xdot_fd = numdiff.derivative(lambda u: ruling_vector(surf, u), s, order=1)
    offset = -inner(gdot_fd, xdot_fd) / inner(xdot_fd, xdot_fd)
    cs = inv.c_const - s
    offset_closed = surf.direction.x2 * cs * fa.kappa * dd.d_norm / xx
    if abs(offset - offset_closed) > TAU_STRICT * max(1.0, abs(offset)):
        raise GeometryError(
            f"striction offsets disagree at s = {s}: "
            f"numeric {offset} vs closed {offset_closed}"
        )
    point = involute_point(inv, s) + offset * ruling_vector(surf, s)
    return StrictionPoint(point=point, offset=offset, offset_closed=offset_closed)


def base_is_striction(surf: TrajectoryRuledSurface, samples: Sequence[float]) -> bool:
    """Whether the involute itself is the striction curve over the samples.

    Cylindrical samples are skipped (no central point); every remaining
    offset must vanish within TAU_STRICT. Away from degeneracies this is
    equivalent to x2 = 0.
    """
    for s in samples:
        try:
            sp = striction_point(surf, float(s))
        except CylindricalRulingError:
            continue
        if abs(sp.offset) > TAU_STRICT:
            return False
    return True
