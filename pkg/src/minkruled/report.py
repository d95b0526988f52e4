"""Deterministic plain-text analysis reports for a configured scene.

Every number in the report comes from a library operation; the report layer
only formats. Identical configurations produce byte-identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import SceneConfig, build_curve, split_range
from .curves import darboux_data, frenet_apparatus, is_general_helix
from .errors import CylindricalRulingError, GeometryError
from .involute import InvoluteCurve
from .lorentz import coordinate_cross, cross, inner
from .surfaces import (
    Degeneracy,
    classify_developability,
    drall_closed,
    drall_numeric,
    general_surface,
    striction_point,
)

__all__ = ["ReportResult", "run_report"]

MISMATCH_TOL = 1e-3


@dataclass(frozen=True)
class ReportResult:
    text: str
    exit_code: int
    warnings: tuple[str, ...]


def _fmt(x: float) -> str:
    return f"{float(x) + 0.0:.9g}"


def _sample_points(cfg: SceneConfig) -> list[float]:
    segments = split_range(cfg.s_range, cfg.c_const, cfg.cusp_margin)
    total_len = sum(b - a for a, b in segments)
    points: list[float] = []
    for a, b in segments:
        count = max(2, round(cfg.samples * (b - a) / total_len))
        points.extend(float(s) for s in np.linspace(a, b, count))
    return points


def _frame_residuals(fa) -> tuple[float, float, float]:
    pairs = [
        (inner(fa.t, fa.t) + 1.0),
        (inner(fa.n, fa.n) - 1.0),
        (inner(fa.b, fa.b) - 1.0),
        inner(fa.t, fa.n),
        inner(fa.n, fa.b),
        inner(fa.b, fa.t),
    ]
    ortho = max(abs(v) for v in pairs)
    printed = [
        (coordinate_cross(fa.t, fa.n), -fa.b),
        (coordinate_cross(fa.n, fa.b), fa.t),
        (coordinate_cross(fa.b, fa.t), -fa.n),
    ]
    coord = max(float(np.max(np.abs(got - want))) for got, want in printed)
    flipped = [
        (cross(fa.t, fa.n), fa.b),
        (cross(fa.n, fa.b), -fa.t),
        (cross(fa.b, fa.t), fa.n),
    ]
    dual = max(float(np.max(np.abs(got - want))) for got, want in flipped)
    return ortho, coord, dual


def run_report(cfg: SceneConfig) -> ReportResult:
    """Analyze the scene and render the report.

    Exit code 0 on a clean run, 3 when numerical degeneracies were demoted
    to warnings (singular dralls, closed/numeric disagreements, striction
    inconsistencies). Configuration errors are raised before this point and
    map to exit code 2 in the command-line front end.
    """
    warnings: list[str] = []
    lines: list[str] = []
    curve = build_curve(cfg)
    samples = _sample_points(cfg)
    segments = split_range(cfg.s_range, cfg.c_const, cfg.cusp_margin)

    lines.append("= scene =")
    kind = cfg.curve.builtin if cfg.curve.builtin else "prescribed curvature/torsion"
    lines.append(f"curve: {kind}")
    lines.append(f"c: {_fmt(cfg.c_const)}")
    lines.append(
        "s-range: [" + _fmt(cfg.s_range[0]) + ", " + _fmt(cfg.s_range[1]) + "]"
    )
    lines.append(
        "v-range: [" + _fmt(cfg.v_range[0]) + ", " + _fmt(cfg.v_range[1]) + "]"
    )
    if len(segments) > 1:
        lines.append(
            "note: s-range crosses the involute cusp at s = c; "
            "analysis splits into "
            + " and ".join(f"[{_fmt(a)}, {_fmt(b)}]" for a, b in segments)
        )

    lines.append("")
    lines.append("= base curve =")
    header = f"{'s':>14} {'kappa':>14} {'tau':>14} {'theta':>14} {'theta_dot':>14}"
    lines.append(header)
    dd_first = None
    for s in samples:
        fa = frenet_apparatus(curve, s)
        dd = darboux_data(curve, s)
        if dd_first is None:
            dd_first = dd
        lines.append(
            f"{_fmt(s):>14} {_fmt(fa.kappa):>14} {_fmt(fa.tau):>14} "
            f"{_fmt(dd.theta):>14} {_fmt(dd.theta_dot):>14}"
        )
    lines.append(f"rotation vector: {dd_first.d_class}")
    helix, deviation = is_general_helix(curve, samples)
    lines.append(
        f"general helix: {'yes' if helix else 'no'} "
        f"(ratio deviation {_fmt(deviation)})"
    )
    ortho, coord_res, dual_res = _frame_residuals(frenet_apparatus(curve, samples[0]))
    lines.append(f"frame orthonormality residual: {_fmt(ortho)}")
    lines.append(
        "frame product residuals: coordinate rule "
        + _fmt(coord_res)
        + ", determinant rule (global sign -1) "
        + _fmt(dual_res)
    )

    for d_idx, coeffs in enumerate(cfg.directions):
        lines.append("")
        lines.append(
            f"= direction {d_idx}: [{_fmt(coeffs[0])}, {_fmt(coeffs[1])}, {_fmt(coeffs[2])}] ="
        )
        seg_surfaces = []
        for seg in segments:
            inv = InvoluteCurve(curve, cfg.c_const, domain=seg)
            seg_surfaces.append(general_surface(inv, *coeffs))
        d = seg_surfaces[0].direction
        lines.append(
            f"normalized: [{_fmt(d.x1)}, {_fmt(d.x2)}, {_fmt(d.x3)}] ({d.causal})"
        )
        lines.append(
            f"{'s':>14} {'drall closed':>14} {'drall numeric':>14} "
            f"{'degeneracy':>12} {'striction':>14}"
        )
        for seg, surf in zip(segments, seg_surfaces):
            seg_samples = [s for s in samples if seg[0] - 1e-12 <= s <= seg[1] + 1e-12]
            for s in seg_samples:
                closed = drall_closed(surf, s)
                try:
                    numeric = drall_numeric(surf, s)
                    numeric_txt = _fmt(numeric.value)
                    if (
                        closed.degeneracy is Degeneracy.REGULAR
                        and numeric.degeneracy is Degeneracy.REGULAR
                    ):
                        gap = abs(closed.value - numeric.value)
                        if gap > MISMATCH_TOL * max(1.0, abs(numeric.value)):
                            warnings.append(
                                f"direction {d_idx}: closed/numeric drall disagree "
                                f"at s = {_fmt(s)} ({_fmt(closed.value)} vs {_fmt(numeric.value)})"
                            )
                except GeometryError as exc:
                    numeric_txt = "error"
                    warnings.append(f"direction {d_idx}: {exc}")
                if closed.degeneracy is Degeneracy.SINGULAR:
                    warnings.append(
                        f"direction {d_idx}: singular drall denominator at s = {_fmt(s)}"
                    )
                try:
                    strict = _fmt(striction_point(surf, s).offset)
                except CylindricalRulingError:
                    strict = "cylindrical"
                except GeometryError as exc:
                    strict = "error"
                    warnings.append(f"direction {d_idx}: {exc}")
                lines.append(
                    f"{_fmt(s):>14} {_fmt(closed.value):>14} {numeric_txt:>14} "
                    f"{closed.degeneracy.value:>12} {strict:>14}"
                )
        verdicts = [
            classify_developability(
                surf,
                [s for s in samples if seg[0] - 1e-12 <= s <= seg[1] + 1e-12],
            )
            for seg, surf in zip(segments, seg_surfaces)
        ]
        developable = all(v.developable for v in verdicts)
        reason = verdicts[0].reason
        lines.append(
            f"developable: {'yes' if developable else 'no'} ({reason})"
        )

    lines.append("")
    lines.append("= warnings =")
    if warnings:
        for w in warnings:
            lines.append(f"! {w}")
    else:
        lines.append("(none)")

    text = "\n".join(lines) + "\n"
    return ReportResult(
        text=text, exit_code=3 if warnings else 0, warnings=tuple(warnings)
    )
