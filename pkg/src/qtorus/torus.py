"""The quantum torus: Q(q)-linear combinations of x^a y^b with xy = q^2 yx.

Elements are kept in normal form, a sparse map from exponent pairs to
nonzero coefficients.  Moving y^b past x^c costs q^(-2bc), which gives

    x^a y^b * x^c y^d = q^(-2bc) x^(a+c) y^(b+d).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterator, Mapping, NamedTuple

from .qfield import ONE, ZERO, RatFunc, q_power

__all__ = [
    "Monomial",
    "TorusElement",
    "monomial_mul",
    "te_arith",
    "commutator",
    "r_commutator",
    "tau",
    "ddagger",
    "w0",
    "w1",
    "X",
    "Y",
    "XINV",
    "YINV",
]


class Monomial(NamedTuple):
    xexp: int
    yexp: int


def monomial_mul(m1: tuple[int, int], m2: tuple[int, int]) -> tuple[RatFunc, Monomial]:
    a, b = m1
    c, d = m2
    return q_power(-2 * b * c), Monomial(a + c, b + d)


class TorusElement:
    """A quantum-torus element in normal form.  Treat as immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = RatFunc.coerce(c)
                if c:
                    clean[Monomial(*key)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "TorusElement":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "TorusElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "TorusElement":
        return cls._raw({Monomial(0, 0): ONE})

    @classmethod
    def scalar(cls, c) -> "TorusElement":
        c = RatFunc.coerce(c)
        return cls._raw({Monomial(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "TorusElement":
        c = RatFunc.coerce(coeff)
        return cls._raw({Monomial(a, b): c} if c else {})

    @classmethod
    def coerce(cls, value) -> "TorusElement":
        if isinstance(value, TorusElement):
            return value
        return cls.scalar(value)

    # -- inspection ---------------------------------------------------------

    def items(self) -> list[tuple[Monomial, RatFunc]]:
        """Terms sorted lexicographically by (xexp, yexp)."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Monomial, RatFunc]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, a: int, b: int) -> RatFunc:
        return self._terms.get((a, b), ZERO)

    def support(self) -> set[Monomial]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def scalar_part(self) -> RatFunc:
        return self.coeff(0, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            try:
                other = TorusElement.coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "TorusElement":
        if not isinstance(other, TorusElement):
            try:
                other = TorusElement.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TorusElement._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "TorusElement":
        return TorusElement._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "TorusElement":
        if not isinstance(other, TorusElement):
            try:
                other = TorusElement.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TorusElement":
        return TorusElement.coerce(other) - self

    def scale(self, c) -> "TorusElement":
        c = RatFunc.coerce(c)
        if not c:
            return TorusElement.zero()
        if c.is_one():
            return self
        return TorusElement._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "TorusElement":
        if isinstance(other, (RatFunc, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        if not self._terms or not other._terms:
            return TorusElement.zero()
        buckets: dict[Monomial, list[RatFunc]] = defaultdict(list)
        for (a, b), c1 in self._terms.items():
            for (c, d), c2 in other._terms.items():
                buckets[Monomial(a + c, b + d)].append((c1 * c2).mul_qpow(-2 * b * c))
        out = {}
        for k, parts in buckets.items():
            s = parts[0]
            for p in parts[1:]:
                s = s + p
            if s:
                out[k] = s
        return TorusElement._raw(out)

    def __rmul__(self, other) -> "TorusElement":
        if isinstance(other, (RatFunc, int)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "TorusElement":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = TorusElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "TorusElement":
        """Inverse of a single nonzero term c x^a y^b."""
        if len(self._terms) != 1:
            raise ValueError("only single-term elements are invertible here")
        ((a, b), c), = self._terms.items()
        # (x^a y^b)(x^-a y^-b) = q^(2ab)
        return TorusElement._raw({Monomial(-a, -b): (c.inv()).mul_qpow(-2 * a * b)})

    # -- rendering ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [{"x": a, "y": b, "coeff": c.to_json()} for (a, b), c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "TorusElement":
        return cls({(t["x"], t["y"]): RatFunc.from_json(t["coeff"]) for t in data["terms"]})

    def __str__(self) -> str:
        from .render import element_text
        return element_text(self)

    def __repr__(self) -> str:
        return f"TorusElement({self!s})"


def te_arith(op: str, u: TorusElement, v) -> TorusElement:
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "scale":
        return u.scale(v)
    if op == "mul":
        return u * v
    raise ValueError(f"unknown operation {op!r}")


# These two work for anything closed under * and - (elements, series).
def commutator(u, v):
    """[u, v] = uv - vu."""
    return u * v - v * u


def r_commutator(u, v, r):
    """[u, v]_r = r uv - r^-1 vu."""
    r = RatFunc.coerce(r)
    if not r:
        raise ZeroDivisionError("r-commutator needs a nonzero r")
    return (u * v) * r - (v * u) * r.inv()


def tau(u: TorusElement) -> TorusElement:
    """Automorphism x -> y^-1, y -> x; on monomials c x^a y^b -> c q^(2ab) x^b y^-a."""
    return TorusElement._raw({Monomial(b, -a): c.mul_qpow(2 * a * b)
                              for (a, b), c in u._terms.items()})


def ddagger(u: TorusElement) -> TorusElement:
    """Antiautomorphism x -> x^-1, y -> y; on monomials c x^a y^b -> c q^(2ab) x^-a y^b."""
    return TorusElement._raw({Monomial(-a, b): c.mul_qpow(2 * a * b)
                              for (a, b), c in u._terms.items()})


X = TorusElement.monomial(1, 0)
Y = TorusElement.monomial(0, 1)
XINV = TorusElement.monomial(-1, 0)
YINV = TorusElement.monomial(0, -1)


def w0() -> TorusElement:
    return X + XINV


def w1() -> TorusElement:
    return Y + YINV

