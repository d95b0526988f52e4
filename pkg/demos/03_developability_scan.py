"""Distribution parameters and developability of trajectory ruled surfaces
==========================================================================

Evaluates the drall of ruled surfaces over involutes two independent ways
(closed form vs determinant with finite differences), reproduces the
axis-ruling special cases, and constructs rulings that are developable by
design via the rotation-angle profile.
"""

import math

import numpy as np

import minkruled as mk
from minkruled import Degeneracy, ProfileKind

helix = mk.helix_curve(2 / 3, 1 / 3, domain=(-0.2, math.pi + 0.2))
inv_h = mk.InvoluteCurve(helix, 1.0, domain=(0.0, 0.98))

print("helix, axis rulings at s = 0.5:")
for label, surf in (
    ("t*", mk.tangent_surface(inv_h)),
    ("n*", mk.normal_surface(inv_h)),
    ("b*", mk.binormal_surface(inv_h)),
):
    res = mk.drall_closed(surf, 0.5)
    print(f"  {label}: drall = {res.value:+.3e}  [{res.degeneracy.value}]"
          f"  developable = {res.developable}")

# A curve that is not a helix: torsion grows linearly, so the n*-ruled
# surface picks up a genuine drall.
ramp = mk.curve_from_curvature(lambda s: 1.0, lambda s: s / 4, domain=(-0.05, 2.05))
inv_r = mk.InvoluteCurve(ramp, 2.0, domain=(0.1, 1.9))
print("\nnon-helix base, n* ruling:")
for s in (0.5, 1.0, 1.5):
    closed = mk.drall_closed(mk.normal_surface(inv_r), s)
    numeric = mk.drall_numeric(mk.normal_surface(inv_r), s)
    print(f"  s = {s}: closed {closed.value:+.9f}  numeric {numeric.value:+.9f}")

report = mk.classify_developability(
    mk.normal_surface(inv_r), list(np.linspace(0.3, 1.7, 9))
)
print("  verdict:", report.developable, "-", report.reason)

# The predicted ratio of the n*- and b*-ruling dralls depends only on the
# rotation data of the base curve.
s = 0.9
dn = mk.drall_closed(mk.normal_surface(inv_r), s)
db = mk.drall_closed(mk.binormal_surface(inv_r), s)
print(f"\n|drall_n / drall_b| at s = {s}: {abs(dn.value / db.value):.9f}")
print(f"predicted ratio:              {mk.normal_binormal_drall_ratio(inv_r, s):.9f}")

# Construct a developable surface for an arbitrary ruling: choose the
# rotation-angle profile so the drall numerator cancels, then synthesize the
# matching curve.
direction = mk.make_direction(0.7, 0.3, 1.0)
kappa_fn, tau_fn = mk.developable_prescription(direction, lambda s: 0.6 + 0.1 * s, 0.15)
built = mk.curve_from_curvature(kappa_fn, tau_fn, domain=(-0.05, 1.55))
inv_b = mk.InvoluteCurve(built, 2.0, domain=(0.05, 1.45))
surf = mk.TrajectoryRuledSurface(inv=inv_b, direction=direction)
worst = max(abs(mk.drall_numeric(surf, float(s)).value) for s in np.linspace(0.1, 1.4, 9))
print(f"\nangle-profile construction, general ruling: max |drall| = {worst:.2e}")

rect = mk.make_direction(0.6, 0.0, 0.8)
kappa_fn, tau_fn = mk.developable_prescription(
    rect, lambda s: 0.7, 0.1, kind=ProfileKind.RECTIFYING
)
built = mk.curve_from_curvature(kappa_fn, tau_fn, domain=(-0.05, 1.55))
surf = mk.TrajectoryRuledSurface(
    inv=mk.InvoluteCurve(built, 2.0, domain=(0.05, 1.45)), direction=rect
)
res = mk.drall_numeric(surf, 0.7)
print(f"rectifying-plane construction: {res.degeneracy.value} (ruling derivative is null)")

# Striction: the central point sits off the base exactly when the ruling has
# a normal component.
sp = mk.striction_point(mk.normal_surface(inv_r), 0.8)
print(f"\nstriction offset of the n* ruling at s = 0.8: {sp.offset:+.6f}")
print("base curve is the striction curve for x2 = 0 rulings:",
      mk.base_is_striction(mk.general_surface(inv_r, 1.0, 0.0, 1.0), [0.4, 0.9, 1.4]))
