import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings

from qtorus.alternating import AltFamily, alt_elem
from qtorus.qfield import PoleError, q_power
from qtorus.repcheck import RepConfig, clock_shift, eval_element, perturb, residual_suite
from qtorus.torus import TorusElement, w0
from strategies import laurent_scalars, torus_elements


@pytest.mark.parametrize("n", range(3, 13))
def test_defining_relations(n):
    cfg = RepConfig(n)
    X, Y, Xi, Yi = clock_shift(cfg)
    eye = np.eye(n)
    assert np.linalg.norm(X @ Y - cfg.q ** 2 * (Y @ X)) < 1e-12
    for a, b in ((X, Xi), (Y, Yi)):
        assert np.linalg.norm(a @ b - eye) < 1e-12
        assert np.linalg.norm(b @ a - eye) < 1e-12


def test_invalid_configs():
    with pytest.raises(PoleError):
        RepConfig(4, 1j).validate()
    with pytest.raises(ValueError):
        RepConfig(2).validate()
    with pytest.raises(ValueError, match="unit circle"):
        RepConfig(5, 1.1 * cmath.exp(1j * math.pi / 5)).validate()
    with pytest.raises(ValueError, match="primitive"):
        RepConfig(6, cmath.exp(1j * math.pi / 3)).validate()
    with pytest.raises(ValueError):
        RepConfig(5, tol=0).validate()


def test_eval_examples():
    cfg = RepConfig(5)
    X, Y, Xi, Yi = mats = clock_shift(cfg)
    assert np.allclose(eval_element(w0(), cfg, mats), X + Xi, atol=1e-14)
    assert np.count_nonzero(eval_element(TorusElement.zero(), cfg, mats)) == 0
    q = cfg.q
    expected = q * (q - 1 / q) * (q + 1 / q) * (X @ Yi + Xi @ Y)
    assert np.linalg.norm(eval_element(alt_elem(AltFamily.G, 1), cfg, mats) - expected) < 1e-12


def test_pole_names_the_monomial():
    cfg = RepConfig(4, cmath.exp(1j * math.pi / 4))
    bad = TorusElement.monomial(2, -1, (q_power(4) + 1).inv())  # 1/(q^4 + 1) is singular here
    with pytest.raises(PoleError, match="x\\^2 y\\^-1"):
        eval_element(bad, cfg)


@settings(max_examples=50)
@given(torus_elements(3, laurent_scalars()), torus_elements(3, laurent_scalars()))
def test_eval_is_a_homomorphism(u, v):
    cfg = RepConfig(7)
    mats = clock_shift(cfg)
    eu, ev = eval_element(u, cfg, mats), eval_element(v, cfg, mats)
    scale = max(1.0, np.linalg.norm(eu) * np.linalg.norm(ev))
    assert np.linalg.norm(eval_element(u * v, cfg, mats) - eu @ ev) < 1e-9 * scale
    assert np.linalg.norm(eval_element(u + v, cfg, mats) - (eu + ev)) < 1e-9 * scale


@pytest.mark.parametrize("n", [5, 7])
def test_residual_suite_passes(n):
    report = residual_suite(RepConfig(n), kmax=6)
    assert report.passed, report.text()
    assert all(c.residual < 1e-9 for c in report.checks)


def test_perturbed_shift_detected():
    cfg = RepConfig(5)
    report = residual_suite(cfg, 6, perturb(clock_shift(cfg), "Y", 0, 0, 1e-3))
    assert not report.passed
    assert max(c.residual for c in report.checks) > 1e-6
    assert all(c.witness is not None for c in report.failures())
