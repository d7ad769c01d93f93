import numpy as np
import pytest

import fastce


@pytest.fixture
def noise():
    rng = np.random.default_rng(7)
    return rng.integers(0, 256, size=(96, 128), dtype=np.uint8)


def test_fhe_matches_he_without_downsampling(noise):
    assert np.array_equal(fastce.fhe(noise, s=1, ng=256), fastce.he(noise))


def test_fsmirank_matches_smirank_without_downsampling(noise):
    fast = fastce.fsmirank(noise, s=1, ng=256, alpha=0.9)
    naive = fastce.smirank(noise, alpha=0.9)
    assert np.array_equal(fast, naive)


def test_shapes_preserved(noise):
    for out in (fastce.he(noise), fastce.fhe(noise, s=8, ng=64),
                fastce.fsmirank(noise, s=8, ng=64)):
        assert out.shape == noise.shape
        assert out.dtype == np.uint8


def test_downsample_decimates(noise):
    out = fastce.spatial_downsample(noise, 4)
    assert out.shape == (24, 32)
    assert np.array_equal(out, noise[::4, ::4])


def test_histogram_mass(noise):
    bins, delta = fastce.histogram(noise, ng=64)
    assert delta == 4
    assert sum(bins) == noise.size


def test_generate_is_deterministic():
    a = fastce.generate("two-peak", 64, 48, seed=5)
    b = fastce.generate("two-peak", 64, 48, seed=5)
    assert np.array_equal(a, b)
    grad = fastce.generate("smooth-gradient", 256, 1)
    assert np.array_equal(grad[0], np.arange(256, dtype=np.uint8))


def test_roundtrip_pgm(tmp_path, noise):
    path = str(tmp_path / "img.pgm")
    fastce.write_image(noise, path)
    assert np.array_equal(fastce.read_image(path), noise)


def test_color_pipeline(tmp_path):
    rng = np.random.default_rng(11)
    rgb = rng.integers(0, 256, size=(32, 40, 3), dtype=np.uint8)
    v = fastce.extract_luminance(rgb)
    assert np.array_equal(v, rgb.max(axis=2))
    out = fastce.recombine_luminance(rgb, fastce.fhe(v, s=1, ng=256))
    assert out.shape == rgb.shape

    path = str(tmp_path / "img.ppm")
    fastce.write_image(rgb, path)
    assert np.array_equal(fastce.read_image(path), rgb)


def test_parameter_validation(noise):
    with pytest.raises(ValueError):
        fastce.fhe(noise, s=8, ng=100)
    with pytest.raises(ValueError):
        fastce.spatial_downsample(noise, 0)
