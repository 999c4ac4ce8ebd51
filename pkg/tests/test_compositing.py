import numpy as np
import pytest

from foveasim import (BlendConfig, DomainError, ShapeError, composite,
                      feather, oracle_substitute)


def rand_triple(rng, shape=(8, 8, 3)):
    return (rng.uniform(size=shape), rng.uniform(size=shape),
            rng.uniform(size=shape[:2]))


class TestComposite:
    def test_mask_one_returns_focused(self):
        rng = np.random.default_rng(0)
        wac, focused, _ = rand_triple(rng)
        out = composite(wac, focused, np.ones((8, 8)))
        assert np.allclose(out, focused)

    def test_mask_zero_returns_wac(self):
        rng = np.random.default_rng(1)
        wac, focused, _ = rand_triple(rng)
        out = composite(wac, focused, np.zeros((8, 8)))
        assert np.allclose(out, wac)

    def test_half_mask_midpoint(self):
        wac = np.full((2, 2), 0.2)
        focused = np.full((2, 2), 0.8)
        out = composite(wac, focused, np.full((2, 2), 0.5))
        assert np.allclose(out, 0.5)

    def test_idempotence(self):
        rng = np.random.default_rng(2)
        img = rng.uniform(size=(6, 6, 3))
        mask = rng.uniform(size=(6, 6))
        assert np.allclose(composite(img, img, mask), img)

    def test_convexity(self):
        rng = np.random.default_rng(3)
        wac, focused, mask = rand_triple(rng)
        out = composite(wac, focused, mask)
        lo = np.minimum(wac, focused)
        hi = np.maximum(wac, focused)
        assert np.all(out >= lo - 1e-12)
        assert np.all(out <= hi + 1e-12)

    def test_linear_in_mask(self):
        rng = np.random.default_rng(4)
        wac, focused, _ = rand_triple(rng)
        m1 = rng.uniform(size=(8, 8))
        m2 = rng.uniform(size=(8, 8))
        avg = composite(wac, focused, (m1 + m2) / 2)
        sep = (composite(wac, focused, m1) + composite(wac, focused, m2)) / 2
        assert np.allclose(avg, sep)

    def test_gamma_applies_to_focused_only(self):
        wac = np.full((2, 2), 0.25)
        focused = np.full((2, 2), 0.25)
        cfg = BlendConfig(gamma=2.0)
        out = composite(wac, focused, np.ones((2, 2)), cfg)
        assert np.allclose(out, 0.25 ** 0.5)
        out = composite(wac, focused, np.zeros((2, 2)), cfg)
        assert np.allclose(out, 0.25)

    def test_shape_and_domain_errors(self):
        with pytest.raises(ShapeError):
            composite(np.ones((3, 3)), np.ones((4, 4)), np.ones((3, 3)))
        with pytest.raises(DomainError):
            composite(np.ones((3, 3)), np.ones((3, 3)), np.full((3, 3), 1.5))


class TestFeather:
    def test_radius_zero_identity(self):
        mask = (np.random.default_rng(0).uniform(size=(6, 6)) > 0.5).astype(float)
        assert np.array_equal(feather(mask, 0), mask)

    def test_all_ones_unchanged(self):
        assert np.all(feather(np.ones((5, 5)), 3) == 1)

    def test_single_pixel_chebyshev_ramp(self):
        mask = np.zeros((5, 5))
        mask[2, 2] = 1
        out = feather(mask, 1)
        expected = np.zeros((5, 5))
        expected[1:4, 1:4] = 0.5
        expected[2, 2] = 1.0
        assert np.allclose(out, expected)

    def test_values_in_unit_interval(self):
        rng = np.random.default_rng(7)
        mask = (rng.uniform(size=(12, 12)) > 0.7).astype(float)
        out = feather(mask, 2)
        assert out.min() >= 0 and out.max() <= 1

    def test_rejects_nonbinary(self):
        with pytest.raises(DomainError):
            feather(np.full((3, 3), 0.5), 1)


class TestOracleSubstitute:
    def test_mask_extremes(self):
        rng = np.random.default_rng(8)
        base = rng.uniform(1, 10, (5, 5))
        repl = rng.uniform(1, 10, (5, 5))
        assert np.array_equal(oracle_substitute(base, repl, np.zeros((5, 5))), base)
        assert np.array_equal(oracle_substitute(base, repl, np.ones((5, 5))), repl)

    def test_single_pixel(self):
        base = np.ones((4, 4))
        repl = np.full((4, 4), 2.0)
        mask = np.zeros((4, 4))
        mask[1, 3] = 1
        out = oracle_substitute(base, repl, mask)
        assert out[1, 3] == 2.0
        out[1, 3] = 1.0
        assert np.array_equal(out, base)

    def test_substitution_roundtrip(self):
        rng = np.random.default_rng(9)
        a = rng.uniform(1, 10, (6, 6))
        b = rng.uniform(1, 10, (6, 6))
        mask = (rng.uniform(size=(6, 6)) > 0.5).astype(float)
        merged = oracle_substitute(a, b, mask)
        back = oracle_substitute(merged, a, mask)
        assert np.array_equal(back, a)
