"""Alternating elements of the quantum torus and the identities they satisfy.

The four generating functions have closed forms in terms of

    omega(t) = sum_i C(2i, i) (t / (q + q^-1))^(2i):

    w-(t)  = omega(t) (x + x^-1)
    w+(t)  = omega(t) (y + y^-1)
    g(t)   = (q^2 - q^-2) omega(t) (t (q x^-1 y + q x y^-1) - q - q^-1)
    g~(t)  = (q^2 - q^-2) omega(t) (t (q^-1 x y + q^-1 x^-1 y^-1) - q - q^-1)

Index conventions (coefficient of t^k):

    Wminus -> w_{-k},   Wplus -> w_{k+1},   G -> g_k,   Gtilde -> g~_k

with g_0 = g~_0 = -(q - q^-1)(q + q^-1)^2.

Every ``verify_*`` function returns a :class:`VerificationReport`; nothing
here raises on a failed identity.  All residuals must be exactly zero.
"""

from __future__ import annotations

from enum import Enum
from math import comb
from typing import Callable

from .qfield import ONE, RatFunc, q_power, rho
from .report import Check, VerificationReport
from .series import (
    BiTorusSeries,
    ScalarSeries,
    Series,
    TorusSeries,
    c_n,
    expand_rational_t,
    omega_series,
    s_series,
    t_series,
)
from .torus import TorusElement, commutator, ddagger, r_commutator, tau, w0, w1

__all__ = [
    "AltFamily",
    "FAULTS",
    "NINE_MONOMIALS",
    "alt_gf",
    "alt_elem",
    "faulty_gf",
    "verify_relation_suite",
    "verify_z_identity",
    "verify_symmetries",
    "verify_span",
    "verify_specializations",
    "verify_coherence",
    "verify_torus_relations",
    "verify_series_identities",
    "full_suite",
]


class AltFamily(Enum):
    WMINUS = "Wminus"
    WPLUS = "Wplus"
    G = "G"
    GTILDE = "Gtilde"

    @classmethod
    def parse(cls, name) -> "AltFamily":
        if isinstance(name, cls):
            return name
        for fam in cls:
            if name in (fam.value, fam.name) or str(name).lower() == fam.value.lower():
                return fam
        raise ValueError(f"unknown family {name!r}; expected one of "
                         + ", ".join(f.value for f in cls))


GF = Callable[[AltFamily, int], TorusSeries]

NINE_MONOMIALS = frozenset([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1),
                            (1, 1), (1, -1), (-1, 1), (-1, -1)])

FAULTS = ("gtilde-plus-t", "z-q-cubed")

_q = q_power(1)
_qi = q_power(-1)
_qq = _q + _qi          # q + q^-1
_qm = _q - _qi          # q - q^-1
_q2m = q_power(2) - q_power(-2)


def _m(a: int, b: int, c=1) -> TorusElement:
    return TorusElement.monomial(a, b, c)


def _g_linear() -> TorusElement:
    return _m(-1, 1, _q) + _m(1, -1, _q)


def _gt_linear() -> TorusElement:
    return _m(1, 1, _qi) + _m(-1, -1, _qi)


def alt_gf(family: AltFamily | str, n: int) -> TorusSeries:
    """Generating function of one alternating family, truncated at t^n."""
    family = AltFamily.parse(family)
    if n < 0:
        raise ValueError("order must be nonnegative")
    omega = omega_series(n)
    if family is AltFamily.WMINUS:
        return omega * w0()
    if family is AltFamily.WPLUS:
        return omega * w1()
    lin = _g_linear() if family is AltFamily.G else _gt_linear()
    inner = TorusSeries.from_poly([TorusElement.scalar(-_qq), lin], n)
    return (omega * inner).scale(_q2m)


def alt_elem(family: AltFamily | str, k: int) -> TorusElement:
    """Closed form of the k-th alternating element, split on the parity of k."""
    family = AltFamily.parse(family)
    if k < 0:
        raise ValueError("index must be nonnegative")
    j, odd = divmod(k, 2)
    c = RatFunc.coerce(comb(2 * j, j))
    if family in (AltFamily.WMINUS, AltFamily.WPLUS):
        if odd:
            return TorusElement.zero()
        base = w0() if family is AltFamily.WMINUS else w1()
        return base.scale(c * _qq ** (-2 * j))
    if not odd:
        return TorusElement.scalar(-c * _qm * _qq ** (2 - 2 * j))
    if family is AltFamily.G:
        return (_m(1, -1) + _m(-1, 1)).scale(c * _q * _qm * _qq ** (1 - 2 * j))
    return (_m(1, 1) + _m(-1, -1)).scale(c * _qi * _qm * _qq ** (1 - 2 * j))


def faulty_gf(fault: str | None) -> GF:
    """Generating-function provider, optionally with a deliberate error."""
    if fault in (None, "z-q-cubed"):
        return alt_gf
    if fault == "gtilde-plus-t":
        def gf(family, n):
            f = alt_gf(family, n)
            if AltFamily.parse(family) is AltFamily.GTILDE and n >= 1:
                f = f + TorusSeries.from_poly([0, 1], n)
            return f
        return gf
    raise ValueError(f"unknown fault {fault!r}; expected one of {', '.join(FAULTS)}")


# ---------------------------------------------------------------------------
# residual bookkeeping


def _identity_check(name: str, truncation: tuple[int, ...],
                    residuals: list[tuple[str, object]]) -> Check:
    """One check covering several sub-identities; each residual must vanish."""
    for label, res in residuals:
        if isinstance(res, BiTorusSeries):
            pos = res.first_nonzero()
            if pos is not None:
                return Check(name, truncation, False, pos, res[pos], label)
        elif isinstance(res, Series):
            pos = res.first_nonzero()
            if pos is not None:
                return Check(name, truncation, False, (pos,), res[pos], label)
        elif res:
            return Check(name, truncation, False, None, res, label)
    return Check(name, truncation, True)


def _indexed_check(name: str, truncation: tuple[int, ...], label: str,
                   pairs) -> Check:
    # pairs: iterable of (k, lhs, rhs)
    for k, lhs, rhs in pairs:
        diff = lhs - rhs
        if diff:
            return Check(name, truncation, False, (k,), diff, label)
    return Check(name, truncation, True)


# ---------------------------------------------------------------------------
# generating-function relations


def verify_relation_suite(n_uni: int = 12, n_bi: int = 8, gf: GF = alt_gf) -> VerificationReport:
    """The eleven generating-function relations, univariate and bivariate."""
    report = VerificationReport()
    n = n_uni
    W0, W1 = w0(), w1()
    rh = rho()
    # one extra degree so that t^-1 (g~ - g) still reaches t^n
    wm, wp, g, gt = (gf(f, n + 1) for f in AltFamily)
    wm_n, wp_n, g_n, gt_n = (f.truncate(n) for f in (wm, wp, g, gt))
    tr = (n,)

    diff = gt - g
    if diff[0]:
        report.add(Check("gf_commutator_w0_wplus", tr, False, (0,), diff[0],
                         "g~(t) - g(t) has zero constant term"))
    else:
        rhs = diff.shift_down(1).scale(_qq.inv())
        report.add(_identity_check("gf_commutator_w0_wplus", tr, [
            ("[w0, w+(t)] = [w-(t), w1]", commutator(W0, wp_n) - commutator(wm_n, W1)),
            ("[w-(t), w1] = t^-1 (g~(t) - g(t)) / (q + q^-1)", commutator(wm_n, W1) - rhs),
        ]))

    combo = wm_n.scale(rh) - wp_n.shift_up(1).scale(rh)
    report.add(_identity_check("gf_qcommutator_w0_g", tr, [
        ("[w0, g(t)]_q = [g~(t), w0]_q",
         r_commutator(W0, g_n, _q) - r_commutator(gt_n, W0, _q)),
        ("[g~(t), w0]_q = rho w-(t) - rho t w+(t)", r_commutator(gt_n, W0, _q) - combo),
    ]))

    combo = wp_n.scale(rh) - wm_n.shift_up(1).scale(rh)
    report.add(_identity_check("gf_qcommutator_g_w1", tr, [
        ("[g(t), w1]_q = [w1, g~(t)]_q",
         r_commutator(g_n, W1, _q) - r_commutator(W1, gt_n, _q)),
        ("[w1, g~(t)]_q = rho w+(t) - rho t w-(t)", r_commutator(W1, gt_n, _q) - combo),
    ]))

    m = n_bi
    tr2 = (m, m)
    fams = {f: gf(f, m) for f in AltFamily}
    S = {f: BiTorusSeries.in_s(s, m) for f, s in fams.items()}
    T = {f: BiTorusSeries.in_t(s, m) for f, s in fams.items()}
    WM, WP, G, GT = AltFamily

    def weighted(a, b):
        # s [a(s), b(t)] + t [b(s), a(t)]
        return commutator(S[a], T[b]).shift(1, 0) + commutator(S[b], T[a]).shift(0, 1)

    report.add(_identity_check("gf_commuting_w_w", tr2, [
        ("[w-(s), w-(t)] = 0", commutator(S[WM], T[WM])),
        ("[w+(s), w+(t)] = 0", commutator(S[WP], T[WP])),
    ]))
    report.add(_identity_check("gf_cross_wminus_wplus", tr2, [
        ("[w-(s), w+(t)] + [w+(s), w-(t)] = 0",
         commutator(S[WM], T[WP]) + commutator(S[WP], T[WM])),
    ]))
    report.add(_identity_check("gf_cross_wminus_g", tr2, [
        ("s[w-(s), g(t)] + t[g(s), w-(t)] = 0", weighted(WM, G)),
    ]))
    report.add(_identity_check("gf_cross_wminus_gtilde", tr2, [
        ("s[w-(s), g~(t)] + t[g~(s), w-(t)] = 0", weighted(WM, GT)),
    ]))
    report.add(_identity_check("gf_cross_wplus_g", tr2, [
        ("s[w+(s), g(t)] + t[g(s), w+(t)] = 0", weighted(WP, G)),
    ]))
    report.add(_identity_check("gf_cross_wplus_gtilde", tr2, [
        ("s[w+(s), g~(t)] + t[g~(s), w+(t)] = 0", weighted(WP, GT)),
    ]))
    report.add(_identity_check("gf_commuting_g_g", tr2, [
        ("[g(s), g(t)] = 0", commutator(S[G], T[G])),
        ("[g~(s), g~(t)] = 0", commutator(S[GT], T[GT])),
    ]))
    report.add(_identity_check("gf_cross_gtilde_g", tr2, [
        ("[g~(s), g(t)] + [g(s), g~(t)] = 0",
         commutator(S[GT], T[G]) + commutator(S[G], T[GT])),
    ]))
    return report


def z_identity_series(n: int, gf: GF = alt_gf, q2_weight: RatFunc | None = None) -> TorusSeries:
    """Right-hand side of the constant-series identity, truncated at t^n.

    t^-1 ST w-(S)w+(T) + tST w+(S)w-(T) - q^2 ST w-(S)w-(T)
        - q^-2 ST w+(S)w+(T) + (q^2 - q^-2)^-2 g(S)g~(T)
    """
    m = n + 1  # t^-1 ST loses one degree
    S, T = s_series(m), t_series(m)
    wm, wp, g, gt = (gf(f, m) for f in AltFamily)
    wmS, wpS, gS = wm.compose(S), wp.compose(S), g.compose(S)
    wmT, wpT, gtT = wm.compose(T), wp.compose(T), gt.compose(T)
    st = S * T
    a = q_power(2) if q2_weight is None else RatFunc.coerce(q2_weight)
    total = (
        st.shift_down(1) * (wmS * wpT)
        + st.shift_up(1) * (wpS * wmT)
        - st.scale(a) * (wmS * wmT)
        - st.scale(q_power(-2)) * (wpS * wpT)
        + (gS * gtT).scale(_q2m.inv() ** 2)
    )
    return total.truncate(n)


def verify_z_identity(n: int = 12, gf: GF = alt_gf,
                      q2_weight: RatFunc | None = None) -> VerificationReport:
    """The five-term product identity must equal the constant (q + q^-1)^2."""
    total = z_identity_series(n, gf, q2_weight)
    expected = TorusSeries.constant(TorusElement.scalar(_qq ** 2), n)
    report = VerificationReport()
    report.add(_identity_check("z_identity", (n,), [
        ("five-term product sum = (q + q^-1)^2", total - expected),
    ]))
    return report


# ---------------------------------------------------------------------------
# substitutions t -> S, T


def verify_specializations(n: int = 12, gf: GF = alt_gf) -> VerificationReport:
    """Generating functions at S and T against their rational closed forms.

    For g(S) and g~(T) the t^-1-bearing denominators are cleared first by
    multiplying through by q + q^-1 t^2 and q t^2 + q^-1 respectively.
    """
    S, T = s_series(n), t_series(n)
    q2, qm2 = q_power(2), q_power(-2)
    ratio_S = expand_rational_t([1, 0, qm2], [1, 0, -qm2], n)
    ratio_T = expand_rational_t([1, 0, q2], [1, 0, -q2], n)
    wm, wp, g, gt = (gf(f, n) for f in AltFamily)
    pref = _qq ** 2 * _qm

    rows = [
        ("substituted_wminus_S", "w-(S) = (1+q^-2t^2)/(1-q^-2t^2) (x + x^-1)",
         wm.compose(S), ratio_S * w0()),
        ("substituted_wplus_S", "w+(S) = (1+q^-2t^2)/(1-q^-2t^2) (y + y^-1)",
         wp.compose(S), ratio_S * w1()),
        ("substituted_wminus_T", "w-(T) = (1+q^2t^2)/(1-q^2t^2) (x + x^-1)",
         wm.compose(T), ratio_T * w0()),
        ("substituted_wplus_T", "w+(T) = (1+q^2t^2)/(1-q^2t^2) (y + y^-1)",
         wp.compose(T), ratio_T * w1()),
        ("substituted_g_S", "g(S) (q + q^-1 t^2) closed form",
         g.compose(S) * ScalarSeries.from_poly([_q, 0, _qi], n),
         ratio_S.scale(pref) * TorusSeries.from_poly(
             [TorusElement.scalar(-_q), _g_linear(), TorusElement.scalar(-_qi)], n)),
        ("substituted_gtilde_T", "g~(T) (q t^2 + q^-1) closed form",
         gt.compose(T) * ScalarSeries.from_poly([_qi, 0, _q], n),
         ratio_T.scale(pref) * TorusSeries.from_poly(
             [TorusElement.scalar(-_qi), _gt_linear(), TorusElement.scalar(-_q)], n)),
    ]
    report = VerificationReport()
    for name, label, lhs, rhs in rows:
        report.add(_identity_check(name, (n,), [(label, lhs - rhs)]))
    return report


# ---------------------------------------------------------------------------
# element-level checks


def verify_coherence(n: int = 12, gf: GF = alt_gf) -> VerificationReport:
    """Coefficient k of each generating function equals the closed-form element."""
    report = VerificationReport()
    for fam in AltFamily:
        f = gf(fam, n)
        report.add(_indexed_check(f"coefficients_{fam.value}", (n,),
                                  f"coefficient k of {fam.value} generating function",
                                  ((k, f[k], alt_elem(fam, k)) for k in range(n + 1))))
    return report


def verify_symmetries(kmax: int = 12) -> VerificationReport:
    """tau swaps w-/w+ and g/g~; ddagger fixes w-/w+ and swaps g/g~."""
    WM, WP, G, GT = AltFamily
    ks = range(kmax + 1)
    rows = [
        ("tau_wminus", "tau(w_-k) = w_k+1", tau, WM, WP, 0),
        ("tau_wplus", "tau(w_k+1) = w_-k", tau, WP, WM, 0),
        ("tau_g", "tau(g_k+1) = g~_k+1", tau, G, GT, 1),
        ("tau_gtilde", "tau(g~_k+1) = g_k+1", tau, GT, G, 1),
        ("ddagger_wminus", "ddagger(w_-k) = w_-k", ddagger, WM, WM, 0),
        ("ddagger_wplus", "ddagger(w_k+1) = w_k+1", ddagger, WP, WP, 0),
        ("ddagger_g", "ddagger(g_k+1) = g~_k+1", ddagger, G, GT, 1),
        ("ddagger_gtilde", "ddagger(g~_k+1) = g_k+1", ddagger, GT, G, 1),
    ]
    report = VerificationReport()
    for name, label, fn, src, dst, off in rows:
        report.add(_indexed_check(name, (kmax,), label,
                                  ((k, fn(alt_elem(src, k + off)), alt_elem(dst, k + off))
                                   for k in ks)))
    return report


def verify_span(kmax: int = 24) -> VerificationReport:
    """Every alternating element is supported on the nine monomials |a|, |b| <= 1."""
    report = VerificationReport()
    for fam in AltFamily:
        check = Check(f"span_{fam.value}", (kmax,), True)
        for k in range(kmax + 1):
            u = alt_elem(fam, k)
            outside = {m: c for m, c in u.items() if m not in NINE_MONOMIALS}
            if outside:
                check = Check(check.name, (kmax,), False, (k,), TorusElement(outside),
                              "support outside the nine monomials")
                break
        report.add(check)
    return report


def verify_torus_relations() -> VerificationReport:
    """q-Dolan-Grady relations and their reduced forms for w0, w1."""
    W0, W1 = w0(), w1()
    rh = rho()
    report = VerificationReport()
    rows = [
        ("reduced_w0", "[w0,[w0,w1]_q]_q^-1 = rho w1",
         r_commutator(W0, r_commutator(W0, W1, _q), _qi), W1.scale(rh)),
        ("reduced_w1", "[w1,[w1,w0]_q]_q^-1 = rho w0",
         r_commutator(W1, r_commutator(W1, W0, _q), _qi), W0.scale(rh)),
        ("q_dolan_grady_w0", "[w0,[w0,[w0,w1]_q]_q^-1] = rho [w0,w1]",
         commutator(W0, r_commutator(W0, r_commutator(W0, W1, _q), _qi)),
         commutator(W0, W1).scale(rh)),
        ("q_dolan_grady_w1", "[w1,[w1,[w1,w0]_q]_q^-1] = rho [w1,w0]",
         commutator(W1, r_commutator(W1, r_commutator(W1, W0, _q), _qi)),
         commutator(W1, W0).scale(rh)),
    ]
    for name, label, lhs, rhs in rows:
        report.add(_identity_check(name, (), [(label, lhs - rhs)]))
    return report


def verify_series_identities(n: int = 24, cn_max: int = 40) -> VerificationReport:
    """omega(T), omega(S) as rational functions of t, and c_n = 1."""
    report = VerificationReport()
    q2, qm2 = q_power(2), q_power(-2)
    omega = omega_series(n)
    wT = omega.compose(t_series(n))
    wS = omega.compose(s_series(n))
    report.add(_identity_check("omega_of_T", (n,), [
        ("omega(T) = (1+q^2t^2)/(1-q^2t^2)", wT - expand_rational_t([1, 0, q2], [1, 0, -q2], n)),
    ]))
    report.add(_identity_check("omega_of_S", (n,), [
        ("omega(S) = (1+q^-2t^2)/(1-q^-2t^2)",
         wS - expand_rational_t([1, 0, qm2], [1, 0, -qm2], n)),
    ]))
    geometric = ScalarSeries([q_power(i) if i % 2 == 0 else 0 for i in range(n + 1)])
    report.add(_identity_check("omega_of_T_over_1_plus_q2t2", (n,), [
        ("(1+q^2t^2)^-1 omega(T) = sum q^2n t^2n",
         wT * ScalarSeries.from_poly([1, 0, q2], n).inverse() - geometric),
    ]))
    report.add(_indexed_check("binomial_sum_cn", (cn_max,), "c_n = 1",
                              ((k, c_n(k), ONE) for k in range(cn_max + 1))))
    return report


def full_suite(n_uni: int = 12, n_bi: int = 8, kmax: int = 12, span_kmax: int = 24,
               series_order: int = 24, cn_max: int = 40,
               fault: str | None = None) -> VerificationReport:
    gf = faulty_gf(fault)
    q2_weight = q_power(3) if fault == "z-q-cubed" else None
    report = VerificationReport()
    report.extend(verify_torus_relations())
    report.extend(verify_coherence(n_uni, gf))
    report.extend(verify_relation_suite(n_uni, n_bi, gf))
    report.extend(verify_z_identity(n_uni, gf, q2_weight))
    report.extend(verify_specializations(n_uni, gf))
    report.extend(verify_symmetries(kmax))
    report.extend(verify_span(span_kmax))
    report.extend(verify_series_identities(series_order, cn_max))
    return report
