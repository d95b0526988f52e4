import json
import math

import numpy as np
import pytest

import minkruled as mk
from minkruled import cli

RT3 = math.sqrt(3.0)


def parse_obj(path):
    vertices = []
    faces = []
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "v":
                vertices.append([float(x) for x in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(x) for x in parts[1:]])
    return np.array(vertices), faces


class TestSampleGrid:
    def test_two_by_two_matches_direct_evaluation(self, helix_involute):
        surf = mk.binormal_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 2, 2)
        assert mesh.vertex_count == 4
        assert mesh.face_count == 1
        for i, s in enumerate((0.0, 0.9)):
            for j, v in enumerate((-2.0, 2.0)):
                assert np.allclose(
                    mesh.vertices[i, j], mk.surface_point(surf, s, v), atol=0.0
                )

    def test_grid_too_small_rejected(self, helix_involute):
        surf = mk.binormal_surface(helix_involute)
        with pytest.raises(ValueError):
            mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 1, 2)

    def test_drall_attribute_per_row(self, helix_involute):
        surf = mk.binormal_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 3, 2)
        assert np.allclose(mesh.drall, 0.0)  # cylindrical rows export zero


class TestObjExport:
    def test_line_structure(self, helix_involute, tmp_path):
        surf = mk.binormal_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 2, 2)
        path = tmp_path / "mesh.obj"
        mk.write_obj(mesh, str(path))
        lines = path.read_text().splitlines()
        assert sum(1 for l in lines if l.startswith("v ")) == 4
        assert sum(1 for l in lines if l.startswith("f ")) == 1

    def test_round_trip(self, helix_involute, tmp_path):
        surf = mk.tangent_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 5, 4)
        path = tmp_path / "mesh.obj"
        mk.write_obj(mesh, str(path))
        verts, faces = parse_obj(str(path))
        flat = mesh.vertices.reshape(-1, 3)
        assert verts.shape == flat.shape
        assert np.max(np.abs(verts - flat)) <= 1e-8 * max(
            1.0, float(np.max(np.abs(flat)))
        )
        assert len(faces) == mesh.face_count
        assert all(len(f) == 4 for f in faces)
        assert min(min(f) for f in faces) == 1
        assert max(max(f) for f in faces) == mesh.vertex_count

    def test_byte_identical_across_runs(self, helix_involute, tmp_path):
        surf = mk.normal_surface(helix_involute)
        a = tmp_path / "a.obj"
        b = tmp_path / "b.obj"
        mk.write_obj(mk.sample_grid(surf, (0.0, 0.9), (-1.0, 1.0), 4, 3), str(a))
        mk.write_obj(mk.sample_grid(surf, (0.0, 0.9), (-1.0, 1.0), 4, 3), str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_empty_path_raises(self, helix_involute):
        surf = mk.binormal_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 2, 2)
        with pytest.raises(OSError):
            mk.write_obj(mesh, "")


class TestCsvExport:
    def test_header_and_rows(self, helix_involute, tmp_path):
        surf = mk.binormal_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 3, 2)
        path = tmp_path / "mesh.csv"
        mk.write_csv(mesh, str(path))
        lines = path.read_text().splitlines()
        assert lines[0] == "s,v,x,y,z,drall"
        assert len(lines) == 1 + mesh.vertex_count

    def test_unknown_format_rejected(self, helix_involute, tmp_path):
        surf = mk.binormal_surface(helix_involute)
        mesh = mk.sample_grid(surf, (0.0, 0.9), (-2.0, 2.0), 2, 2)
        with pytest.raises(ValueError):
            mk.export_mesh(mesh, "stl", str(tmp_path / "x.stl"))


def helix_config(tmp_path, **overrides):
    cfg = {
        "curve": {"builtin": "timelike-helix"},
        "c": 1.0,
        "directions": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "s_range": [0.0, math.pi],
        "v_range": [-2.0, 2.0],
        "grid": [8, 5],
        "outputs": [{"format": "obj", "path": str(tmp_path / "helix.obj")}],
        "samples": 8,
    }
    cfg.update(overrides)
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(cfg))
    return str(path)


class TestConfig:
    def test_loads_builtin_scene(self, tmp_path):
        cfg = mk.load_config(helix_config(tmp_path))
        assert cfg.curve.builtin == mk.BUILTIN_HELIX
        assert cfg.grid == (8, 5)
        curve = mk.build_curve(cfg)
        assert mk.frenet_apparatus(curve, 1.0).kappa == pytest.approx(2 / 3)

    def test_prescribed_polynomials(self, tmp_path):
        path = helix_config(
            tmp_path,
            curve={
                "kappa": {"poly": [1.0]},
                "tau": {"poly": [0.0, 0.25]},
            },
            c=3.0,
            s_range=[0.1, 0.9],
        )
        cfg = mk.load_config(path)
        curve = mk.build_curve(cfg)
        fa = mk.frenet_apparatus(curve, 0.5)
        assert fa.tau == pytest.approx(0.125, abs=1e-6)

    def test_prescribed_table(self, tmp_path):
        path = helix_config(
            tmp_path,
            curve={
                "kappa": {"table": {"s": [-1.0, 3.0], "values": [1.0, 1.0]}},
                "tau": {"table": {"s": [-1.0, 3.0], "values": [0.2, 0.2]}},
            },
            c=3.0,
            s_range=[0.1, 0.9],
        )
        curve = mk.build_curve(mk.load_config(path))
        assert mk.frenet_apparatus(curve, 0.5).tau == pytest.approx(0.2, abs=1e-6)

    def test_field_path_in_errors(self, tmp_path):
        path = helix_config(tmp_path, grid=[1, 5])
        with pytest.raises(mk.ConfigError, match="grid"):
            mk.load_config(path)
        path = helix_config(tmp_path, s_range=[2.0, 1.0])
        with pytest.raises(mk.ConfigError, match="s_range"):
            mk.load_config(path)

    def test_invalid_json_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\n  bad\n}")
        with pytest.raises(mk.ConfigError, match="line 2"):
            mk.load_config(str(path))

    def test_split_range(self):
        pieces = mk.split_range((0.0, math.pi), 1.0, 0.01)
        assert pieces[0] == (0.0, 0.99)
        assert pieces[1][0] == pytest.approx(1.01)


class TestReport:
    def test_helix_report_contents_and_determinism(self, tmp_path):
        cfg = mk.load_config(helix_config(tmp_path))
        res1 = mk.run_report(cfg)
        res2 = mk.run_report(cfg)
        assert res1.text == res2.text
        assert res1.exit_code == 0
        assert "0.666666667" in res1.text
        assert "0.333333333" in res1.text
        assert "general helix: yes" in res1.text
        assert res1.text.count("developable: yes") == 3
        assert "cylindrical" in res1.text
        assert "(none)" in res1.text

    def test_non_helix_normal_ruling_flagged(self, tmp_path):
        path = helix_config(
            tmp_path,
            curve={"kappa": {"poly": [1.0]}, "tau": {"poly": [0.0, 0.25]}},
            c=3.0,
            s_range=[0.3, 1.6],
            directions=[[0, 1, 0]],
        )
        res = mk.run_report(mk.load_config(path))
        assert "developable: no" in res.text


class TestCli:
    def test_report_command(self, tmp_path, capsys):
        code = cli.main(["report", helix_config(tmp_path)])
        out = capsys.readouterr().out
        assert code == 0
        assert "= base curve =" in out

    def test_mesh_command_writes_files(self, tmp_path, capsys):
        code = cli.main(["mesh", helix_config(tmp_path)])
        out = capsys.readouterr().out
        assert code == 0
        # cusp at s = 1 splits [0, pi]: two segments per direction
        expected = [
            tmp_path / f"helix_d{d}_s{seg}.obj" for d in range(3) for seg in range(2)
        ]
        for p in expected:
            assert p.exists(), p
        assert "splitting into 2 segments" in out

    def test_verify_command_passes_on_helix(self, tmp_path, capsys):
        code = cli.main(
            ["verify", helix_config(tmp_path), "--trials", "8", "--seed", "3"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "verdict: PASS" in out
        assert "seed: 3" in out

    def test_env_seed_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("MINKRULED_SEED", "11")
        code = cli.main(
            ["verify", helix_config(tmp_path), "--trials", "4", "--seed", "3"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "seed: 11" in out

    def test_config_error_exit_code(self, tmp_path, capsys):
        path = helix_config(tmp_path, grid=[1, 2])
        assert cli.main(["report", path]) == 2
        assert "config error" in capsys.readouterr().err

    def test_degenerate_scene_exit_code(self, tmp_path, capsys):
        # near-helix with a binormal ruling: the drall denominator is
        # numerically zero while the numerator survives, a singular setup
        path = helix_config(
            tmp_path,
            curve={"kappa": {"poly": [1.0]}, "tau": {"poly": [0.25, 1e-6]}},
            c=3.0,
            s_range=[0.1, 0.9],
            directions=[[0, 0, 1]],
            samples=4,
        )
        code = cli.main(["report", path])
        out = capsys.readouterr().out
        assert code == 3
        assert "singular" in out
