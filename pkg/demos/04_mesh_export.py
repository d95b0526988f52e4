"""Sampling ruled surfaces into meshes and exporting OBJ/CSV
============================================================

Reproduces the three axis-ruled surfaces over the involute of the standard
helix (c = 1, s in [0, pi] split around the cusp, v in [-2, 2]) and writes
deterministic OBJ and CSV files into ./out. The same flow is available from
the command line:

    minkruled mesh scene.json
    minkruled report scene.json
    minkruled verify scene.json --trials 50 --seed 0
"""

import json
import math
import pathlib

import minkruled as mk

OUT = pathlib.Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

helix = mk.helix_curve(2 / 3, 1 / 3, domain=(-0.2, math.pi + 0.2))
segments = mk.split_range((0.0, math.pi), 1.0, 0.01)
print("cusp at s = 1 splits the range into:", segments)

factories = {
    "tangent": mk.tangent_surface,
    "normal": mk.normal_surface,
    "binormal": mk.binormal_surface,
}
for name, factory in factories.items():
    for idx, seg in enumerate(segments):
        inv = mk.InvoluteCurve(helix, 1.0, domain=seg)
        mesh = mk.sample_grid(factory(inv), seg, (-2.0, 2.0), 40, 9)
        obj_path = OUT / f"helix_{name}_{idx}.obj"
        csv_path = OUT / f"helix_{name}_{idx}.csv"
        mk.write_obj(mesh, str(obj_path))
        mk.write_csv(mesh, str(csv_path))
        print(
            f"wrote {obj_path.name} and {csv_path.name}: "
            f"{mesh.vertex_count} vertices, {mesh.face_count} faces"
        )

# The equivalent scene file for the command-line front end.
scene = {
    "curve": {"builtin": "timelike-helix"},
    "c": 1.0,
    "directions": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "s_range": [0.0, math.pi],
    "v_range": [-2.0, 2.0],
    "grid": [40, 9],
    "outputs": [{"format": "obj", "path": str(OUT / "helix_cli.obj")}],
}
scene_path = OUT / "scene.json"
scene_path.write_text(json.dumps(scene, indent=2))
print(f"\nscene file for the CLI written to {scene_path}")
print(f"try: minkruled report {scene_path}")
