"""Numeric sanity check with clock and shift matrices at a root of unity.

With w = q^2 a primitive n-th root of unity, X = diag(1, w, ..., w^(n-1))
and the cyclic shift Y (Y e_j = e_(j+1)) satisfy XY = q^2 YX.  Evaluating
the alternating elements on (X, Y) turns the exact identities into matrix
identities that must hold to floating-point accuracy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .alternating import AltFamily, alt_elem
from .qfield import PoleError, rf_eval
from .report import Check, VerificationReport
from .torus import TorusElement, w0, w1

__all__ = ["RepConfig", "Matrices", "clock_shift", "eval_element", "perturb",
           "residual_suite", "RELATION_TOL"]

RELATION_TOL = 1e-12


@dataclass(frozen=True)
class RepConfig:
    dim: int
    qval: complex | None = None  # defaults to exp(i pi / dim)
    tol: float = 1e-9

    @property
    def q(self) -> complex:
        return cmath.exp(1j * math.pi / self.dim) if self.qval is None else complex(self.qval)

    def validate(self) -> None:
        if self.dim < 3:
            raise ValueError("dimension must be at least 3")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        q = self.q
        # denominators of the closed forms are powers of q and of q^2 + 1
        for label, v in (("q + q^-1", q + 1 / q), ("q - q^-1", q - 1 / q)):
            if abs(v) < 1e-8:
                raise PoleError(f"pole: {label} vanishes at q={q!r}")
        if abs(abs(q) - 1) > 1e-12:
            raise ValueError("q must lie on the unit circle")
        w = q * q
        powers = [w ** k for k in range(1, self.dim + 1)]
        if abs(powers[-1] - 1) > 1e-9 or any(abs(p - 1) < 1e-9 for p in powers[:-1]):
            raise ValueError(f"q^2 must be a primitive {self.dim}-th root of unity")


class Matrices(NamedTuple):
    X: np.ndarray
    Y: np.ndarray
    Xinv: np.ndarray
    Yinv: np.ndarray


def clock_shift(cfg: RepConfig) -> Matrices:
    cfg.validate()
    n = cfg.dim
    w = cfg.q ** 2
    phases = np.array([w ** j for j in range(n)], dtype=complex)
    X = np.diag(phases)
    Xinv = np.diag(phases.conj())
    Y = np.roll(np.eye(n, dtype=complex), 1, axis=0)
    return Matrices(X, Y, Xinv, Y.T.copy())


def perturb(mats: Matrices, which: str = "Y", i: int = 0, j: int = 0,
            eps: float = 1e-3) -> Matrices:
    """Copy of ``mats`` with one entry of X or Y nudged by ``eps``."""
    m = getattr(mats, which).copy()
    m[i, j] += eps
    return mats._replace(**{which: m})


def _power(m: np.ndarray, minv: np.ndarray, k: int) -> np.ndarray:
    return np.linalg.matrix_power(m if k >= 0 else minv, abs(k))


def eval_element(u: TorusElement, cfg: RepConfig, mats: Matrices | None = None) -> np.ndarray:
    """sum c(q0) X^a Y^b over the terms of u."""
    if mats is None:
        mats = clock_shift(cfg)
    q0 = cfg.q
    out = np.zeros((cfg.dim, cfg.dim), dtype=complex)
    for (a, b), c in u:
        try:
            val = rf_eval(c, q0)
        except PoleError as exc:
            raise PoleError(f"coefficient of x^{a} y^{b}: {exc}") from None
        out += val * (_power(mats.X, mats.Xinv, a) @ _power(mats.Y, mats.Yinv, b))
    return out


def _fro(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def _relative(lhs: np.ndarray, rhs: np.ndarray) -> float:
    scale = max(1.0, _fro(lhs), _fro(rhs))
    return _fro(lhs - rhs) / scale


def _comm(a, b):
    return a @ b - b @ a


def _rcomm(a, b, r):
    return r * (a @ b) - (b @ a) / r


def _numeric_check(name: str, truncation: tuple[int, ...], label: str,
                   residuals: list[tuple[int | None, float]], tol: float) -> Check:
    worst = max(residuals, key=lambda kr: kr[1])
    if worst[1] < tol:
        return Check(name, truncation, True, residual=worst[1])
    deg = None if worst[0] is None else (worst[0],)
    return Check(name, truncation, False, deg, worst[1], label, residual=worst[1])


def residual_suite(cfg: RepConfig, kmax: int = 6,
                   mats: Matrices | None = None) -> VerificationReport:
    """Frobenius residuals of the defining relations and degree-k identities.

    Defining relations are held to an absolute 1e-12; everything else is
    relative to the largest operand norm and held to ``cfg.tol``.
    """
    cfg.validate()
    if mats is None:
        mats = clock_shift(cfg)
    n = cfg.dim
    q = cfg.q
    X, Y, Xi, Yi = mats
    eye = np.eye(n)
    report = VerificationReport()
    tr = (n,)
    report.add(_numeric_check("rep_xy_relation", tr, "XY = q^2 YX",
                              [(None, _fro(X @ Y - q * q * (Y @ X)))], RELATION_TOL))
    report.add(_numeric_check("rep_inverses", tr, "X X^-1 = Y Y^-1 = I",
                              [(None, _fro(X @ Xi - eye)), (None, _fro(Xi @ X - eye)),
                               (None, _fro(Y @ Yi - eye)), (None, _fro(Yi @ Y - eye))],
                              RELATION_TOL))

    def ev(u):
        return eval_element(u, cfg, mats)

    W0, W1 = ev(w0()), ev(w1())
    rho = -(q * q - 1 / (q * q)) ** 2
    qi = 1 / q
    lhs0 = _comm(W0, _rcomm(W0, _rcomm(W0, W1, q), qi))
    lhs1 = _comm(W1, _rcomm(W1, _rcomm(W1, W0, q), qi))
    report.add(_numeric_check("rep_q_dolan_grady", tr, "q-Dolan-Grady relations",
                              [(None, _relative(lhs0, rho * _comm(W0, W1))),
                               (None, _relative(lhs1, rho * _comm(W1, W0)))], cfg.tol))

    WM, WP, G, GT = AltFamily
    wm = [ev(alt_elem(WM, k)) for k in range(kmax + 2)]   # w_{-k}
    wp = [ev(alt_elem(WP, k)) for k in range(kmax + 2)]   # w_{k+1}
    g = [ev(alt_elem(G, k)) for k in range(kmax + 2)]     # g_k
    gt = [ev(alt_elem(GT, k)) for k in range(kmax + 2)]   # g~_k
    qq = q + qi
    ks = range(kmax + 1)
    tr2 = (n, kmax)

    report.add(_numeric_check(
        "rep_commutator_w0_wplus", tr2,
        "(q+q^-1)[W0, W_k+1] = (q+q^-1)[W_-k, W1] = G~_k+1 - G_k+1",
        [r for k in ks for r in (
            (k, _relative(qq * _comm(W0, wp[k]), gt[k + 1] - g[k + 1])),
            (k, _relative(qq * _comm(wm[k], W1), gt[k + 1] - g[k + 1])))],
        cfg.tol))
    report.add(_numeric_check(
        "rep_qcommutator_w0_g", tr2,
        "[W0, G_k+1]_q = [G~_k+1, W0]_q = rho W_-k-1 - rho W_k+1",
        [r for k in ks for r in (
            (k, _relative(_rcomm(W0, g[k + 1], q), rho * wm[k + 1] - rho * wp[k])),
            (k, _relative(_rcomm(gt[k + 1], W0, q), rho * wm[k + 1] - rho * wp[k])))],
        cfg.tol))
    report.add(_numeric_check(
        "rep_qcommutator_g_w1", tr2,
        "[G_k+1, W1]_q = [W1, G~_k+1]_q = rho W_k+2 - rho W_-k",
        [r for k in ks for r in (
            (k, _relative(_rcomm(g[k + 1], W1, q), rho * wp[k + 1] - rho * wm[k])),
            (k, _relative(_rcomm(W1, gt[k + 1], q), rho * wp[k + 1] - rho * wm[k])))],
        cfg.tol))
    return report
