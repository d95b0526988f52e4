"""Spacelike involutes of timelike base curves and their moving frames."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve, _rotation_angle, frenet_apparatus
from .lorentz import CausalClass, as_vector

__all__ = [
    "EPS_CUSP",
    "InvoluteCurve",
    "InvoluteFrame",
    "involute_frame",
    "involute_point",
    "involute_velocity",
]

EPS_CUSP = 1e-3


class InvoluteCurve:
    """Involute gamma(s) = r(s) + (c - s) t(s) of a timelike base curve.

    The offset (c - s) is signed. gamma is spacelike away from s = c, where
    its velocity vanishes (a cusp); the stored sampling domain must keep a
    margin of EPS_CUSP from the cusp. Pointwise evaluators accept any s the
    base curve can handle, so the cusp itself remains probeable.
    """

    def __init__(self, base: Curve, c_const: float, domain: tuple[float, float] | None = None):
        self.base = base
        self.c_const = float(c_const)
        if domain is None:
            domain = self._default_domain()
        lo, hi = float(domain[0]), float(domain[1])
        blo, bhi = base.domain
        if lo >= hi:
            raise ValueError("involute domain must satisfy s_min < s_max")
        if lo < blo - 1e-12 or hi > bhi + 1e-12:
            raise ValueError("involute domain must lie inside the base domain")
        if lo < self.c_const + EPS_CUSP and hi > self.c_const - EPS_CUSP:
            raise ValueError(
                f"involute domain may not approach the cusp at s = {self.c_const} "
                f"closer than {EPS_CUSP}"
            )
        self.domain = (lo, hi)

    def _default_domain(self) -> tuple[float, float]:
        blo, bhi = self.base.domain
        c = self.c_const
        pieces = [
            (blo, min(bhi, c - EPS_CUSP)),
            (max(blo, c + EPS_CUSP), bhi),
        ]
        pieces = [(a, b) for a, b in pieces if b - a > 0.0]
        if not pieces:
            raise ValueError("no cusp-free sub-interval inside the base domain")
        return max(pieces, key=lambda p: p[1] - p[0])


def involute_point(inv: InvoluteCurve, s: float) -> np.ndarray:
    """gamma(s) = r(s) + (c - s) t(s)."""
    base = inv.base
    return as_vector(base.point(s) + (inv.c_const - s) * base.derivative(s, 1))


def involute_velocity(inv: InvoluteCurve, s: float) -> np.ndarray:
    """gamma'(s) = (c - s) kappa(s) n(s); vanishes at the cusp s = c."""
    fa = frenet_apparatus(inv.base, s)
    return (inv.c_const - s) * fa.kappa * fa.n


@dataclass(frozen=True)
class InvoluteFrame:
    """Frame {t*, n*, b*} of the involute, rotated off the base frame.

    t* equals the base normal in both cases. With a spacelike rotation
    vector the signature is (<t*,t*>, <n*,n*>, <b*,b*>) = (+1, -1, +1); with
    a timelike one the hyperbolic rotation lands on (+1, +1, -1) instead.
    The frame does not depend on the involute constant c.
    """

    t_star: np.ndarray
    n_star: np.ndarray
    b_star: np.ndarray
    d_case: CausalClass


def involute_frame(inv: InvoluteCurve, s: float) -> InvoluteFrame:
    """Involute frame at s via the hyperbolic rotation by theta.

    Spacelike rotation vector: t* = n, n* = -cosh(theta) t + sinh(theta) b,
    b* = -sinh(theta) t + cosh(theta) b. Timelike rotation vector: t* = n,
    n* = sinh(theta) t - cosh(theta) b, b* = -cosh(theta) t + sinh(theta) b.
    """
    fa, _, d_class, _, theta = _rotation_angle(inv.base, s)
    ch = math.cosh(theta)
    sh = math.sinh(theta)
    if d_class.is_spacelike:
        n_star = -ch * fa.t + sh * fa.b
        b_star = -sh * fa.t + ch * fa.b
    else:
        n_star = sh * fa.t - ch * fa.b
        b_star = -ch * fa.t + sh * fa.b
    return InvoluteFrame(t_star=fa.n, n_star=n_star, b_star=b_star, d_case=d_class)
