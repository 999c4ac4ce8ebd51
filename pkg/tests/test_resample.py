import numpy as np
import pytest

from foveasim import (DomainError, InvalidBandwidthError, realized_bandwidth,
                      resize, simulate_bandwidth)


def test_identity_bandwidth_is_bit_exact():
    rng = np.random.default_rng(0)
    img = rng.uniform(size=(13, 17, 3))
    out = simulate_bandwidth(img, 70, 70)
    assert np.array_equal(out, img)
    out[0, 0, 0] = -1  # copy, not a view
    assert img[0, 0, 0] != -1


def test_constant_invariance():
    img = np.full((11, 9), 0.37)
    out = simulate_bandwidth(img, 70, 7)
    assert np.allclose(out, 0.37, atol=1e-12)


def test_checkerboard_roundtrip_to_uniform_half():
    # 4x4 checkerboard, ratio 1/2: the 2x2 box intermediate averages each
    # 2x2 block of two 0s and two 1s to 0.5; upsampling a constant stays 0.5
    img = (np.indices((4, 4)).sum(axis=0) % 2).astype(float)
    out = simulate_bandwidth(img, 70, 35)
    assert np.allclose(out, 0.5, atol=1e-12)


def test_upsampling_request_rejected():
    img = np.zeros((4, 4))
    with pytest.raises(InvalidBandwidthError):
        simulate_bandwidth(img, 35, 70)


@pytest.mark.parametrize("from_bw,to_bw", [(0, 1), (70, 0), (70, -1), (-1, -2)])
def test_nonpositive_bandwidth_rejected(from_bw, to_bw):
    with pytest.raises(DomainError):
        simulate_bandwidth(np.zeros((4, 4)), from_bw, to_bw)


def test_output_dimensions_preserved():
    rng = np.random.default_rng(1)
    for shape in [(7, 5), (16, 16, 3), (3, 31)]:
        img = rng.uniform(size=shape)
        out = simulate_bandwidth(img, 70, 23.5)
        assert out.shape == img.shape


def test_monotone_information_loss_statistically():
    # natural-ish images: smooth random fields. Mean abs error to the
    # degraded image grows as bandwidth drops, averaged over a corpus.
    rng = np.random.default_rng(2)
    losses = {35.0: [], 17.0: [], 8.0: []}
    for _ in range(20):
        base = rng.uniform(size=(32, 32))
        img = resize(base, (64, 64), "bilinear")  # correlated content
        for bw in losses:
            out = simulate_bandwidth(img, 70.0, bw)
            losses[bw].append(np.mean(np.abs(out - img)))
    m35, m17, m8 = (np.mean(losses[b]) for b in (35.0, 17.0, 8.0))
    assert m8 >= m17 >= m35


def test_box_downsample_exact_block_average():
    img = np.arange(16, dtype=float).reshape(4, 4)
    small = resize(img, (2, 2), "box")
    expected = np.array([[img[:2, :2].mean(), img[:2, 2:].mean()],
                         [img[2:, :2].mean(), img[2:, 2:].mean()]])
    assert np.allclose(small, expected)


def test_realized_bandwidth_rounding():
    ry, rx = realized_bandwidth((10, 10), 70, 33)
    # 10 * 33/70 = 4.714 -> 5 pixels -> realized 35 px/mm
    assert rx == pytest.approx(35.0)
    assert ry == pytest.approx(35.0)
