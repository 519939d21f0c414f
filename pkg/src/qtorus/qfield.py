"""Exact arithmetic in Q(q), the field of rational functions in one variable.

Polynomials are tuples of Python ints, index = exponent of q, with no
trailing zeros; ``()`` is the zero polynomial.

A :class:`RatFunc` stores ``num/den`` in a unique canonical form:

* ``num`` and ``den`` have no common non-constant factor,
* the integer coefficients of ``num`` and ``den`` taken together have gcd 1,
* the leading coefficient of ``den`` is positive.

So two equal field elements always have identical ``(num, den)`` and
equality is tuple comparison.  Laurent polynomials in q are stored with a
``q**k`` denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

IntPoly = tuple  # tuple[int, ...], low degree first

__all__ = [
    "IntPoly",
    "PoleError",
    "RatFunc",
    "Q",
    "ONE",
    "ZERO",
    "poly_trim",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_divmod_exact",
    "poly_gcd",
    "rf_canonicalize",
    "rf_arith",
    "rf_eval",
    "qbracket",
    "q_power",
    "rho",
]


class PoleError(ValueError):
    """A rational function was evaluated too close to a pole."""


# ---------------------------------------------------------------------------
# integer polynomials


def poly_trim(a: Iterable[int]) -> IntPoly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_neg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_scale(a: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ()
    return tuple(c * x for x in a)


def poly_content(a: IntPoly) -> int:
    return math.gcd(*a) if a else 0


def poly_primitive(a: IntPoly) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return ()
    c = poly_content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _valuation(a: IntPoly) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("valuation of the zero polynomial")


def poly_divmod_exact(a: IntPoly, b: IntPoly) -> IntPoly | None:
    """Return ``a / b`` if ``b`` divides ``a`` in Z[q], else ``None``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    lb = b[-1]
    rem = list(a)
    if len(rem) - 1 < db:
        return None
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        qc, r = divmod(c, lb)
        if r:
            return None
        quo[k - db] = qc
        off = k - db
        for j, bj in enumerate(b):
            if bj:
                rem[off + j] -= qc * bj
    if any(rem[:db]):
        return None
    return tuple(quo)


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        r = list(poly_trim(r))
    return tuple(r)


def _gcd_prs(a: IntPoly, b: IntPoly) -> IntPoly:
    # primitive Euclidean remainder sequence
    a, b = poly_primitive(a), poly_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, poly_primitive(r)
    return poly_primitive(a)


def _eval_int(a: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _gcd_heuristic(a: IntPoly, b: IntPoly) -> IntPoly | None:
    # evaluate at a large integer, take the integer gcd, read the answer
    # back off in balanced base-x digits and confirm by exact division
    na = max(abs(c) for c in a)
    nb = max(abs(c) for c in b)
    bound = 2 * min(na, nb) + 29
    x = max(min(bound, 99 * math.isqrt(bound)),
            2 * min(na // abs(a[-1]), nb // abs(b[-1])) + 2)
    for _ in range(6):
        h = math.gcd(_eval_int(a, x), _eval_int(b, x))
        if h:
            digits = []
            half = x // 2
            while h:
                d = h % x
                if d > half:
                    d -= x
                digits.append(d)
                h = (h - d) // x
            cand = poly_primitive(poly_trim(digits))
            if cand and poly_divmod_exact(a, cand) is not None \
                    and poly_divmod_exact(b, cand) is not None:
                return cand
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    return None


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Q, normalized to a positive leading coefficient."""
    if not a:
        return poly_primitive(b) if b else (1,)
    if not b:
        return poly_primitive(a)
    v = min(_valuation(a), _valuation(b))
    a = poly_primitive(a[_valuation(a):])
    b = poly_primitive(b[_valuation(b):])
    if len(a) == 1 or len(b) == 1:
        g = (1,)
    elif a == b:
        g = a
    else:
        g = _gcd_heuristic(a, b) or _gcd_prs(a, b)
    return (0,) * v + g if v else g


# ---------------------------------------------------------------------------
# rational functions



def _coerce_poly(p) -> IntPoly:
    if isinstance(p, int):
        return (p,) if p else ()
    return poly_trim(int(c) for c in p)


def _finish(num: IntPoly, den: IntPoly) -> "RatFunc":
    # num/den already coprime; fix integer content and sign
    if not num:
        return ZERO
    c = math.gcd(poly_content(num), poly_content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return RatFunc._raw(num, den)


def rf_canonicalize(num: Sequence[int] | int, den: Sequence[int] | int = 1) -> "RatFunc":
    """Canonical form of ``num/den`` for integer coefficient sequences."""
    num = _coerce_poly(num)
    den = _coerce_poly(den)
    if not den:
        raise ZeroDivisionError("division by zero rational function")
    if not num:
        return ZERO
    g = poly_gcd(num, den)
    if g != (1,):
        num = poly_divmod_exact(num, g)
        den = poly_divmod_exact(den, g)
    return _finish(num, den)


class RatFunc:
    """An element of Q(q) in canonical form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Sequence[int] | int = 0, den: Sequence[int] | int = 1):
        c = rf_canonicalize(num, den)
        self.num = c.num
        self.den = c.den
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return cls._raw((value,), (1,)) if value else ZERO
        if isinstance(value, Fraction):
            return rf_canonicalize(value.numerator, value.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")

    @classmethod
    def laurent(cls, coeffs: dict[int, int]) -> "RatFunc":
        """Build ``sum c * q**e`` from an exponent -> coefficient mapping."""
        coeffs = {e: c for e, c in coeffs.items() if c}
        if not coeffs:
            return ZERO
        low = min(coeffs)
        shift = -low if low < 0 else 0
        num = [0] * (max(coeffs) + shift + 1)
        for e, c in coeffs.items():
            num[e + shift] = c
        return rf_canonicalize(num, (0,) * shift + (1,))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def is_integer(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "RatFunc":
        if not self.num:
            return self
        return RatFunc._raw(poly_neg(self.num), self.den)

    def __add__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return rf_canonicalize(poly_add(a, c), b)
        if len(b) == 1 and len(d) == 1:
            return rf_canonicalize(poly_add(poly_scale(a, d[0]), poly_scale(c, b[0])),
                                   (b[0] * d[0],))
        g = poly_gcd(b, d)
        if g == (1,):
            return rf_canonicalize(poly_add(poly_mul(a, d), poly_mul(c, b)), poly_mul(b, d))
        b1 = poly_divmod_exact(b, g)
        d1 = poly_divmod_exact(d, g)
        num = poly_add(poly_mul(a, d1), poly_mul(c, b1))
        return rf_canonicalize(num, poly_mul(b1, d))

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if g1 != (1,):
            a = poly_divmod_exact(a, g1)
            d = poly_divmod_exact(d, g1)
        if g2 != (1,):
            c = poly_divmod_exact(c, g2)
            b = poly_divmod_exact(b, g2)
        return _finish(poly_mul(a, c), poly_mul(b, d))

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("division by zero rational function")
        return _finish(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        # coprime num/den stay coprime under powers
        num, den = (1,), (1,)
        bn, bd = self.num, self.den
        while n:
            if n & 1:
                num, den = poly_mul(num, bn), poly_mul(den, bd)
            n >>= 1
            if n:
                bn, bd = poly_mul(bn, bn), poly_mul(bd, bd)
        return _finish(num, den) if num else ZERO

    def mul_qpow(self, e: int) -> "RatFunc":
        """Multiply by ``q**e`` without a general gcd."""
        if e == 0 or not self.num:
            return self
        num, den = self.num, self.den
        if e > 0:
            vd = _valuation(den)
            k = min(vd, e)
            den = den[k:]
            num = (0,) * (e - k) + num
        else:
            e = -e
            vn = _valuation(num)
            k = min(vn, e)
            num = num[k:]
            den = (0,) * (e - k) + den
        return RatFunc._raw(num, den)

    # -- evaluation / conversion -------------------------------------------

    def eval(self, q0: complex, tol: float = 1e-12) -> complex:
        return rf_eval(self, q0, tol)

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return rf_canonicalize([int(c) for c in data["num"]], [int(c) for c in data["den"]])

    def __str__(self) -> str:
        from .render import ratfunc_text
        return ratfunc_text(self)

    def __repr__(self) -> str:
        return f"RatFunc({list(self.num)!r}, {list(self.den)!r})"


ZERO = RatFunc._raw((), (1,))
ONE = RatFunc._raw((1,), (1,))
Q = RatFunc._raw((0, 1), (1,))


def q_power(e: int) -> RatFunc:
    if e >= 0:
        return RatFunc._raw((0,) * e + (1,), (1,))
    return RatFunc._raw((1,), (0,) * (-e) + (1,))


_ARITH = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rf_arith(op: str, a, b=None) -> RatFunc:
    a = RatFunc.coerce(a)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op not in _ARITH:
        raise ValueError(f"unknown operation {op!r}")
    if b is None:
        raise TypeError(f"{op} needs two operands")
    return _ARITH[op](a, RatFunc.coerce(b))


def _horner(p: IntPoly, z: complex) -> complex:
    acc = 0j
    for c in reversed(p):
        acc = acc * z + c
    return acc


def rf_eval(a: RatFunc, q0: complex, tol: float = 1e-12) -> complex:
    """Numeric value of ``a`` at ``q = q0``."""
    a = RatFunc.coerce(a)
    d = _horner(a.den, q0)
    if abs(d) <= tol:
        raise PoleError(f"pole near evaluation point q={q0!r} (|den|={abs(d):.3g})")
    return _horner(a.num, q0) / d


def qbracket(n: int) -> RatFunc:
    """[n]_q = (q^n - q^-n) / (q - q^-1)."""
    if n < 0:
        raise ValueError("qbracket is defined for natural numbers")
    if n == 0:
        return ZERO
    # (q^{2n} - 1) / (q^{n-1} (q^2 - 1)) = (1 + q^2 + ... + q^{2n-2}) / q^{n-1}
    num = [0] * (2 * n - 1)
    for i in range(0, 2 * n - 1, 2):
        num[i] = 1
    return RatFunc._raw(tuple(num), (0,) * (n - 1) + (1,))


def rho() -> RatFunc:
    """-(q^2 - q^-2)^2."""
    return -((q_power(2) - q_power(-2)) ** 2)
