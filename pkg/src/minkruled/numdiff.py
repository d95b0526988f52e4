"""Five-point central finite-difference stencils for scalar or vector data."""

from __future__ import annotations

H_FIRST = 1e-4
H_SECOND = 1e-4
H_THIRD = 1e-3


def step_for(order: int) -> float:
    return H_THIRD if order == 3 else H_FIRST


def stencil_halfwidth(order: int) -> float:
    """Distance the stencil reaches on either side of the expansion point."""
    return 2.0 * step_for(order)


def derivative(f, s: float, order: int = 1, h: float | None = None):
    """order-th derivative of f at s (orders 1..3, five-point stencils)."""
    if order not in (1, 2, 3):
        raise ValueError("derivative order must be 1, 2 or 3")
    if h is None:
        h = step_for(order)
    fm2 = f(s - 2 * h)
    fm1 = f(s - h)
    fp1 = f(s + h)
    fp2 = f(s + 2 * h)
    if order == 1:
        return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    if order == 2:
        f0 = f(s)
        return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return (-fm2 + 2 * fm1 - 2 * fp1 + fp2) / (2 * h ** 3)
