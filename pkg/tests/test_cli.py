import re

import numpy as np
import pytest
from helpers import isolated_patch_image

from quatcorr.cli import main
from quatcorr.imageio import RgbImage, load_signal_csv, load_surface_csv, rgb_to_quat, save_ppm, save_signal_csv
from quatcorr.signals import QuatSignal


def write_signal(path, comps):
    save_signal_csv(path, QuatSignal.from_components(np.asarray(comps, dtype=float)))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def signals(tmp_path):
    rng = np.random.default_rng(99)
    v = write_signal(tmp_path / "v.csv", rng.uniform(-1, 1, (4, 4)))
    q = write_signal(tmp_path / "q.csv", rng.uniform(-1, 1, (10, 4)))
    return v, q


def test_delta_method_both(tmp_path, capsys):
    v = write_signal(tmp_path / "d.csv", [[1, 0, 0, 0]])
    q = write_signal(tmp_path / "q.csv", np.random.default_rng(0).normal(size=(9, 4)))
    out_csv = tmp_path / "r.csv"
    code, out, _ = run(capsys, "correlate1d", v, q, "--method", "both", "--out", out_csv)
    assert code == 0
    dev = float(re.search(r"max relative deviation direct vs fft: (\S+)", out).group(1))
    assert dev <= 1e-9
    r = load_signal_csv(out_csv)
    np.testing.assert_allclose(r.components(), load_signal_csv(q).components(), atol=1e-12)


def test_real_global_peak(tmp_path, capsys):
    f = np.zeros((7, 4))
    f[:, 0] = [1, -2, 3, 0.5, 2, -1, 4]
    p = write_signal(tmp_path / "f.csv", f)
    code, out, err = run(capsys, "correlate1d", p, p, "--normalize", "global")
    assert code == 0
    assert out.splitlines()[0] == "lag,a,b,c,d"
    m = re.search(r"peak (\S+) at lag (-?\d+)", err)
    assert float(m.group(1)) == pytest.approx(1.0, abs=1e-11)
    assert m.group(2) == "0"


def test_models_differ(tmp_path, capsys, signals):
    v, q = signals
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "correlate1d", v, q, "--model", "22", "--method", "direct", "--out", a)[0] == 0
    assert run(capsys, "correlate1d", v, q, "--model", "13", "--method", "direct", "--out", b)[0] == 0
    ra, rb = load_signal_csv(a), load_signal_csv(b)
    assert ra.lag_offset == rb.lag_offset == 3
    assert np.max(np.abs(ra.components() - rb.components())) > 1e-3


def test_model13_needs_direct(capsys, signals):
    code, _, err = run(capsys, "correlate1d", *signals, "--model", "13")
    assert code == 2 and "direct" in err


def test_count_flag(capsys, signals):
    code, out, err = run(capsys, "correlate1d", *signals, "--count")
    assert code == 0
    assert "pointwise: 208 real" in err


def test_correlate_errors(tmp_path, capsys, signals):
    v, q = signals
    assert run(capsys, "correlate1d", q, v)[0] == 2
    assert run(capsys, "correlate1d", tmp_path / "missing.csv", q)[0] == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2,3\n")
    code, _, err = run(capsys, "correlate1d", bad, q)
    assert code == 2 and "bad.csv:1" in err


@pytest.fixture
def images(tmp_path):
    rng = np.random.default_rng(4)
    px = isolated_patch_image(rng, shape=(20, 24), patch=(6, 7), offset=(3, 5))
    ref, tpl = tmp_path / "ref.ppm", tmp_path / "tpl.ppm"
    save_ppm(ref, RgbImage(px))
    save_ppm(tpl, RgbImage(px[3:9, 5:12]))
    return ref, tpl, px


def test_match2d_offset(tmp_path, capsys, images):
    ref, tpl, _ = images
    surf, heat = tmp_path / "s.csv", tmp_path / "h.pgm"
    code, out, _ = run(capsys, "match2d", ref, tpl, "--normalize", "global", "--method", "both",
                       "--out", surf, "--heatmap", heat)
    assert code == 0
    assert "peak lag (row, col): (3, 5)" in out
    assert float(re.search(r"deviation direct vs fft: (\S+)", out).group(1)) <= 1e-9
    s = load_surface_csv(surf)
    assert s.shape == (25, 30) and s.lag_offsets == (5, 6)
    assert heat.read_bytes()[:2] == b"P5"


def test_match2d_self(capsys, images):
    ref, _, px = images
    code, out, _ = run(capsys, "match2d", ref, ref, "--normalize", "global")
    assert code == 0
    assert "peak lag (row, col): (0, 0)" in out
    # lag-0 value is sum q^2 over sum |q|^2 under the unconjugated product
    q = rgb_to_quat(RgbImage(px))
    s1 = np.sum(q.f * q.f - q.g * q.g)
    s2 = np.sum(2 * q.f * q.g)
    want = np.sqrt(abs(s1) ** 2 + abs(s2) ** 2) / np.sum(np.abs(q.f) ** 2 + np.abs(q.g) ** 2)
    got = float(re.search(r"modulus: (\S+)", out).group(1))
    assert got == pytest.approx(want, rel=1e-10)


def test_match2d_pure_red_self_is_one(tmp_path, capsys):
    px = np.zeros((5, 6, 3), dtype=np.uint8)
    px[..., 0] = np.random.default_rng(1).integers(1, 256, (5, 6))
    p = tmp_path / "red.ppm"
    save_ppm(p, RgbImage(px))
    code, out, _ = run(capsys, "match2d", p, p, "--normalize", "global", "--method", "direct")
    assert code == 0
    assert "(0, 0)" in out
    assert float(re.search(r"modulus: (\S+)", out).group(1)) == pytest.approx(1.0, abs=1e-11)


def test_match2d_template_too_large(capsys, images):
    ref, tpl, _ = images
    code, _, err = run(capsys, "match2d", tpl, ref)
    assert code == 2 and "larger" in err


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--lengths", "16,21", "--shapes", "8x8")
    assert code == 0
    lines = out.splitlines()
    header = lines[1].split("\t")
    assert header == ["kind", "size", "m_dft", "pointwise", "pointwise_formula", "total", "total_formula", "match"]
    rows = [dict(zip(header, line.split("\t"))) for line in lines[2:]]
    assert rows[0]["size"] == "16" and rows[0]["pointwise"] == "256"
    assert rows[2]["size"] == "8x8" and rows[2]["pointwise"] == "1024"
    assert all(r["match"] == "yes" and r["total"] == r["total_formula"] for r in rows)


def test_bench_bad_args(capsys):
    assert run(capsys, "bench", "--lengths", "abc")[0] == 2
    assert run(capsys, "bench", "--shapes", "8by8")[0] == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "det M = 340" in out
    assert "9/9 entries" in out
    assert "FAIL" not in out


def test_deterministic(capsys, signals):
    a = run(capsys, "correlate1d", *signals, "--method", "both")
    b = run(capsys, "correlate1d", *signals, "--method", "both")
    assert a == b
