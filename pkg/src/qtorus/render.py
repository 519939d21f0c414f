"""Text, LaTeX and JSON renderings.

Text output is valid input for :func:`qtorus.expr.parse_expr`, so
``eval_expr(parse_expr(render(u)))`` gives back ``u``.  Text and LaTeX list
terms in decreasing (xexp, yexp) order; JSON lists them increasing.
"""

from __future__ import annotations

import json
import math

from .qfield import RatFunc

__all__ = ["render", "ratfunc_text", "ratfunc_latex", "element_text", "element_latex",
           "series_text", "series_latex", "to_json"]


def _poly_text(p) -> str:
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) or "0"


def _nterms(p) -> int:
    return sum(1 for c in p if c)


def ratfunc_text(a: RatFunc) -> str:
    num = _poly_text(a.num)
    if a.den == (1,):
        return num
    if _nterms(a.num) > 1:
        num = f"({num})"
    den = _poly_text(a.den)
    # a bare q^k or integer is safe after '/'; anything else needs grouping
    bare = _nterms(a.den) == 1 and (len(a.den) == 1 or a.den[-1] == 1)
    return f"{num}/{den}" if bare else f"{num}/({den})"


def _coeff_text(c: RatFunc) -> str:
    # coefficient placed in front of "* monomial"
    s = ratfunc_text(c)
    if c.den == (1,) and _nterms(c.num) > 1:
        return f"({s})"
    return s


def _monomial_text(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts)


def _is_negative(c: RatFunc) -> bool:
    return c.num[-1] < 0


def _join(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (neg, body) in enumerate(terms):
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _desc(u):
    return sorted(u._terms.items(), reverse=True)


def element_text(u) -> str:
    terms = []
    for (a, b), c in _desc(u):
        neg = _is_negative(c)
        if neg:
            c = -c
        mono = _monomial_text(a, b)
        if not mono:
            body = ratfunc_text(c)
        elif c.is_one():
            body = mono
        else:
            body = f"{_coeff_text(c)} * {mono}"
        terms.append((neg, body))
    return _join(terms)


# -- LaTeX --------------------------------------------------------------------


def _laurent_latex(coeffs: dict[int, int]) -> str:
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{{{e}}}"
            body = var if mag == 1 else f"{mag}{var}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts)


def _ratfunc_latex_parts(a: RatFunc) -> tuple[int, str, bool]:
    """(integer content, body, body-is-a-sum) with the Laurent part of num/den."""
    m = next(i for i, c in enumerate(a.den) if c)
    rest = a.den[m:]
    content = math.gcd(*a.num)
    if a.num[-1] < 0:
        content = -content
    lau = {i - m: c // content for i, c in enumerate(a.num) if c}
    body = _laurent_latex(lau)
    is_sum = len(lau) > 1
    if len(rest) > 1 or rest[0] != 1:
        den = _laurent_latex({i: c for i, c in enumerate(rest) if c})
        body = f"\\frac{{{body}}}{{{den}}}"
        is_sum = False
    return content, body, is_sum


def _prefix(content: int) -> str:
    if content == 1:
        return ""
    if content == -1:
        return "-"
    return str(content)


def ratfunc_latex(a: RatFunc, grouped: bool = False) -> str:
    if a.is_zero():
        return "0"
    content, body, is_sum = _ratfunc_latex_parts(a)
    if body == "1":
        return str(content)
    if is_sum and (grouped or abs(content) != 1):
        body = f"\\left({body}\\right)"
    return _prefix(content) + body


def _monomial_latex(a: int, b: int) -> str:
    out = ""
    if a:
        out += "x" if a == 1 else f"x^{{{a}}}"
    if b:
        out += "y" if b == 1 else f"y^{{{b}}}"
    return out


def element_latex(u) -> str:
    terms = []
    for (a, b), c in _desc(u):
        neg = _is_negative(c)
        if neg:
            c = -c
        mono = _monomial_latex(a, b)
        if not mono:
            body = ratfunc_latex(c)
        elif c.is_one():
            body = mono
        else:
            body = ratfunc_latex(c, grouped=True) + mono
        terms.append((neg, body))
    return _join(terms)


# -- series -----------------------------------------------------------------


def _series_terms(f, coeff_render, var: str, fmt: str) -> str:
    from .torus import TorusElement

    terms = []
    for k, c in enumerate(f.coeffs):
        if not c:
            continue
        body = coeff_render(c)
        if k:
            power = var if k == 1 else (f"{var}^{k}" if fmt == "text" else f"{var}^{{{k}}}")
            multi = (isinstance(c, TorusElement) and len(c) > 1) or \
                (isinstance(c, RatFunc) and (_nterms(c.num) > 1 or c.den != (1,)))
            if body == "1":
                body = power
            elif fmt == "text":
                body = f"({body})*{power}" if multi else f"{body}*{power}"
            else:
                body = f"\\left({body}\\right){power}" if multi else f"{body}{power}"
        terms.append(body)
    n = f.order + 1
    tail = f"O({var}^{n})" if fmt == "text" else f"O({var}^{{{n}}})"
    return " + ".join(terms + [tail])


def _coeff_any(c, fmt):
    from .torus import TorusElement

    if isinstance(c, TorusElement):
        return element_text(c) if fmt == "text" else element_latex(c)
    return ratfunc_text(c) if fmt == "text" else ratfunc_latex(c)


def series_text(f) -> str:
    return _series_terms(f, lambda c: _coeff_any(c, "text"), "t", "text")


def series_latex(f) -> str:
    return _series_terms(f, lambda c: _coeff_any(c, "latex"), "t", "latex")


# -- dispatch -----------------------------------------------------------------


def to_json(obj) -> str:
    return json.dumps(obj.to_json(), indent=2)


def render(obj, fmt: str = "text") -> str:
    from .report import VerificationReport
    from .series import BiTorusSeries, Series
    from .torus import TorusElement

    if fmt not in ("text", "latex", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        return to_json(obj)
    if isinstance(obj, VerificationReport):
        return obj.text()
    if isinstance(obj, BiTorusSeries):
        if fmt == "latex":
            raise ValueError("no LaTeX rendering for bivariate series")
        rows = []
        for i, row in enumerate(obj.grid):
            for j, c in enumerate(row):
                if c:
                    rows.append(f"s^{i}*t^{j}: {element_text(c)}")
        return "\n".join(rows) or "0"
    if isinstance(obj, Series):
        return series_text(obj) if fmt == "text" else series_latex(obj)
    if isinstance(obj, TorusElement):
        return element_text(obj) if fmt == "text" else element_latex(obj)
    if isinstance(obj, RatFunc):
        return ratfunc_text(obj) if fmt == "text" else ratfunc_latex(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
