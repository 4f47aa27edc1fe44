import os

import numpy as np
import pytest

import qfe


def random_rgb(rng, rows=16, cols=16):
    return rng.integers(0, 256, size=(rows, cols, 3)).astype(np.float64)


def test_quaternion_algebra():
    i = qfe.Quaternion(0, 1, 0, 0)
    j = qfe.Quaternion(0, 0, 1, 0)
    k = qfe.Quaternion(0, 0, 0, 1)
    assert i * j == k
    assert j * k == i
    assert (i * i).a == -1.0
    assert i.is_pure()
    assert qfe.Quaternion(1, 2, 3, 4).norm() == 30.0


def test_qdft_round_trip():
    rng = np.random.default_rng(11)
    img = rng.uniform(-255, 255, size=(8, 12, 4))
    spec = qfe.qdft(img)
    assert spec.shape == (8, 12, 4)
    back = qfe.iqdft(spec)
    assert np.max(np.abs(back - img)) < 1e-9


def test_fast_matches_naive():
    rng = np.random.default_rng(12)
    img = rng.uniform(-255, 255, size=(6, 5, 4))
    assert np.allclose(qfe.qdft(img, fast=True), qfe.qdft(img, fast=False), atol=1e-8)


def test_alpha_one_is_identity():
    rng = np.random.default_rng(13)
    img = random_rgb(rng)
    out, residue = qfe.enhance_qdft(img, 1.0)
    assert out.shape == img.shape
    assert np.max(np.abs(out - img)) < 1e-6
    assert np.max(np.abs(residue)) < 1e-6
    dft_out = qfe.enhance_dft(img, 1.0, 1.0, 1.0)
    assert np.max(np.abs(dft_out - img)) < 1e-6


def test_alpha_validation():
    rng = np.random.default_rng(14)
    img = random_rgb(rng)
    with pytest.raises(ValueError):
        qfe.enhance_qdft(img, 0.0)
    with pytest.raises(ValueError):
        qfe.enhance_qdft(img, 1.5)


def test_measures():
    flat = np.full((16, 16), 128.0)
    assert qfe.eme(flat) == 0.0
    assert qfe.ceme([flat, flat, flat]) == 0.0
    rng = np.random.default_rng(15)
    img = random_rgb(rng)
    value = qfe.ceme_rgb(img)
    assert value > 0.0
    assert qfe.ceme([img[:, :, 0], img[:, :, 1], img[:, :, 2]]) == value


def test_hsv_and_equalization():
    rng = np.random.default_rng(16)
    img = random_rgb(rng)
    h, s, v = qfe.rgb_to_hsv(img)
    back = qfe.hsv_to_rgb(h, s, v)
    assert np.max(np.abs(back - img)) < 1e-9
    eq = qfe.hist_eq_v(img)
    assert eq.shape == img.shape
    assert eq.min() >= 0.0 and eq.max() <= 255.0


def test_sweep_and_compare():
    rng = np.random.default_rng(17)
    img = random_rgb(rng)
    sweep = qfe.sweep_qdft(img, alpha_min=0.9, alpha_step=0.05)
    assert set(sweep) == {"alphas", "values", "best_alpha", "best_value"}
    assert len(sweep["alphas"]) == len(sweep["values"]) == 3
    assert sweep["best_value"] == max(sweep["values"])
    r, g, b = qfe.sweep_dft(img, alpha_min=0.9, alpha_step=0.05)
    assert r["best_alpha"] in r["alphas"]
    rows = qfe.compare(img, alpha_min=0.95, alpha_step=0.05)
    assert [row["method"] for row in rows] == [
        "original",
        "qdft-alpha",
        "qdft-alpha+he",
        "dft-alpha",
        "dft-alpha+he",
    ]


def test_image_io(tmp_path):
    data_dir = os.environ["QFE_DATA_DIR"]
    photo = qfe.load_image(os.path.join(data_dir, "astronaut.png"))
    assert photo.shape == (512, 512, 3)
    rng = np.random.default_rng(18)
    img = random_rgb(rng, 9, 13)
    path = str(tmp_path / "roundtrip.png")
    qfe.save_image(img, path)
    assert np.array_equal(qfe.load_image(path), img)
    with pytest.raises(Exception):
        qfe.load_image(str(tmp_path / "missing.png"))
