import itertools

import pytest
from hypothesis import given, settings

from qtorus.qfield import ONE, Q, q_power, rho
from qtorus.torus import (XINV, YINV, Monomial, TorusElement, X, Y, commutator, ddagger,
                          monomial_mul, r_commutator, tau, te_arith, w0, w1)
from strategies import laurent_scalars, torus_elements

QI = q_power(-1)
M = TorusElement.monomial

# Single-step swaps (y-letter, x-letter) -> q-power picked up when moving x left.
# Each is one of the four defining commutation rules rearranged.
_SWAP = {("y", "x"): -2, ("y", "X"): 2, ("Y", "x"): 2, ("Y", "X"): -2}


def _word(a, b):
    return ["x" if a > 0 else "X"] * abs(a) + ["y" if b > 0 else "Y"] * abs(b)


def _rewrite(word):
    """Bubble every x-letter left of every y-letter, one adjacent swap at a time."""
    word = list(word)
    qexp = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            pair = (word[i], word[i + 1])
            if pair in _SWAP:
                qexp += _SWAP[pair]
                word[i], word[i + 1] = word[i + 1], word[i]
                changed = True
    a = sum(1 if c == "x" else -1 for c in word if c in "xX")
    b = sum(1 if c == "y" else -1 for c in word if c in "yY")
    return qexp, (a, b)


def test_monomial_mul_examples():
    assert monomial_mul((1, 0), (0, 1)) == (ONE, Monomial(1, 1))
    assert monomial_mul((0, 1), (1, 0)) == (q_power(-2), Monomial(1, 1))
    assert monomial_mul((0, 1), (-1, 0)) == (q_power(2), Monomial(-1, 1))
    assert monomial_mul((2, 3), (-1, 2)) == (q_power(6), Monomial(1, 5))


def test_monomial_mul_against_rewrites():
    rng = range(-3, 4)
    for a, b, c, d in itertools.product(rng, repeat=4):
        qexp, mono = _rewrite(_word(a, b) + _word(c, d))
        assert monomial_mul((a, b), (c, d)) == (q_power(qexp), Monomial(*mono))


def test_normal_form_products():
    assert w0() * w1() == M(1, 1) + M(1, -1) + M(-1, 1) + M(-1, -1)
    q2, qm2 = q_power(2), q_power(-2)
    assert w1() * w0() == M(1, 1, qm2) + M(1, -1, q2) + M(-1, 1, q2) + M(-1, -1, qm2)
    assert te_arith("add", X, -X).is_zero()
    assert te_arith("scale", X, Q) == M(1, 0, Q)
    assert X * XINV == TorusElement.one() == Y * YINV


def test_no_zero_coefficients_stored():
    u = M(1, 2, Q) + M(0, 0, 3) - M(1, 2, Q)
    assert u.support() == {Monomial(0, 0)}
    assert TorusElement.monomial(3, 3, 0).is_zero()


def test_commutator_examples():
    assert commutator(X, XINV).is_zero()
    expected = (M(1, 1) + M(-1, -1)).scale(1 - q_power(-2)) - \
        (M(1, -1) + M(-1, 1)).scale(q_power(2) - 1)
    assert commutator(w0(), w1()) == expected


def test_r_commutator_examples():
    u, v = w0(), w1()
    assert r_commutator(u, v, ONE) == commutator(u, v)
    assert r_commutator(w0(), r_commutator(w0(), w1(), Q), QI) == w1().scale(rho())
    assert r_commutator(w1(), r_commutator(w1(), w0(), Q), QI) == w0().scale(rho())
    with pytest.raises(ZeroDivisionError):
        r_commutator(u, v, 0)


def test_q_dolan_grady():
    for a, b in ((w0(), w1()), (w1(), w0())):
        lhs = commutator(a, r_commutator(a, r_commutator(a, b, Q), QI))
        assert lhs == commutator(a, b).scale(rho())


def test_tau_and_ddagger_examples():
    assert tau(X) == YINV
    assert tau(Y) == X
    assert tau(M(2, 1)) == M(1, -2, q_power(4))
    assert ddagger(X) == XINV
    assert ddagger(Y) == Y
    assert ddagger(M(1, 1)) == M(-1, 1, q_power(2))
    assert ddagger(M(1, 1)) == ddagger(Y) * ddagger(X)
    assert tau(w0()) == w1() and tau(w1()) == w0()
    # the two maps do not commute on T_q
    assert ddagger(tau(X)) != tau(ddagger(X))


def _from_generators(u, image_x, image_y, anti=False):
    """Apply a (anti)homomorphism given by generator images, monomial by monomial."""
    out = TorusElement.zero()
    for (a, b), c in u:
        xa, yb = image_x ** a, image_y ** b
        out = out + (yb * xa if anti else xa * yb).scale(c)
    return out


@settings(max_examples=100)
@given(torus_elements(coeffs=laurent_scalars()))
def test_closed_forms_match_generator_images(u):
    assert tau(u) == _from_generators(u, YINV, X)
    assert ddagger(u) == _from_generators(u, XINV, Y, anti=True)


@settings(max_examples=100)
@given(torus_elements())
def test_tau_order_four_ddagger_involution(u):
    assert tau(tau(tau(tau(u)))) == u
    assert ddagger(ddagger(u)) == u


@settings(max_examples=200)
@given(torus_elements(coeffs=laurent_scalars()), torus_elements(coeffs=laurent_scalars()))
def test_tau_hom_ddagger_antihom(u, v):
    assert tau(u * v) == tau(u) * tau(v)
    assert ddagger(u * v) == ddagger(v) * ddagger(u)


@settings(max_examples=200)
@given(torus_elements(), torus_elements(), torus_elements())
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@settings(max_examples=100)
@given(torus_elements(), torus_elements(), torus_elements())
def test_distributivity_and_antisymmetry(u, v, w):
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w
    assert commutator(u, v) == -commutator(v, u)


@settings(max_examples=100)
@given(torus_elements())
def test_json_round_trip(u):
    data = u.to_json()
    keys = [(t["x"], t["y"]) for t in data["terms"]]
    assert keys == sorted(keys)
    assert TorusElement.from_json(data) == u


def test_powers_and_inverse_restrictions():
    assert X ** -2 == M(-2, 0)
    assert (X * Y) ** -1 * (X * Y) == TorusElement.one()
    with pytest.raises(ValueError):
        w0().inverse()
