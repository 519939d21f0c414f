"""Truncated power series in t (and in s, t).

A series of order N stores the coefficients of t^0 .. t^N.  Coefficients are
either field elements (:class:`ScalarSeries`) or quantum-torus elements
(:class:`TorusSeries`).  Products keep the order of factors, which matters
for torus coefficients.  Binary operations on series of different orders
truncate to the smaller one.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .qfield import ONE, ZERO, RatFunc, q_power
from .torus import TorusElement

__all__ = [
    "Series",
    "ScalarSeries",
    "TorusSeries",
    "BiTorusSeries",
    "expand_rational_t",
    "omega_series",
    "t_series",
    "s_series",
    "c_n",
]


def _is_scalar(c) -> bool:
    return isinstance(c, (RatFunc, int)) and not isinstance(c, bool)


def _make(coeffs: list) -> "Series":
    if all(isinstance(c, RatFunc) for c in coeffs):
        return ScalarSeries(coeffs)
    return TorusSeries([TorusElement.coerce(c) for c in coeffs])


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_nonzero(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, n: int) -> "Series":
        if n > self.order:
            raise ValueError(f"cannot raise order {self.order} to {n}")
        return type(self)(self.coeffs[: n + 1])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            if _is_scalar(other) or isinstance(other, TorusElement):
                return _make([self.coeffs[0] + other, *self.coeffs[1:]])
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        return _make([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (Series, TorusElement)) and not _is_scalar(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(len(self.coeffs), len(other.coeffs))
            a, b = self.coeffs, other.coeffs
            nz_a = [i for i in range(n) if a[i]]
            nz_b = [j for j in range(n) if b[j]]
            out = [None] * n
            for i in nz_a:
                for j in nz_b:
                    if i + j >= n:
                        break
                    p = a[i] * b[j]
                    out[i + j] = p if out[i + j] is None else out[i + j] + p
            both_scalar = isinstance(self, ScalarSeries) and isinstance(other, ScalarSeries)
            zero = ZERO if both_scalar else TorusElement.zero()
            return _make([zero if c is None else c for c in out])
        if _is_scalar(other) or isinstance(other, TorusElement):
            return _make([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other) or isinstance(other, TorusElement):
            return _make([other * c for c in self.coeffs])
        return NotImplemented

    def scale(self, c):
        return self * RatFunc.coerce(c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = type(self).one(self.order) if isinstance(self, ScalarSeries) else \
            TorusSeries.constant(TorusElement.one(), self.order)
        for _ in range(n):
            result = result * self
        return result

    # -- shifts and substitution -------------------------------------------

    def shift_down(self, k: int) -> "Series":
        """Divide by t^k; the k lowest coefficients must vanish."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k > self.order:
            raise ValueError("shift exceeds series order")
        for i in range(k):
            if self.coeffs[i]:
                raise ValueError(f"not divisible by t^{k}: coefficient of t^{i} is nonzero")
        return type(self)(self.coeffs[k:])

    def shift_up(self, k: int) -> "Series":
        """Multiply by t^k, keeping the order (top coefficients drop off)."""
        zero = self.coeffs[0] * 0
        return type(self)(([zero] * k + list(self.coeffs))[: len(self.coeffs)])

    def compose(self, g: "ScalarSeries") -> "Series":
        """f(g(t)) truncated to the order of f; g must have zero constant term."""
        if not isinstance(g, ScalarSeries):
            raise TypeError("inner series must have scalar coefficients")
        if g.coeffs[0]:
            raise ValueError("composition requires valuation >= 1")
        n = self.order
        if g.order < n:
            n = g.order
        g = g.truncate(n)
        zero = self.coeffs[0] * 0
        acc = [zero] * (n + 1)
        power = ScalarSeries.one(n)  # g^i, built up one factor at a time
        for i in range(n + 1):
            fi = self.coeffs[i]
            if fi:
                # g^i has valuation >= i
                for m in range(i, n + 1):
                    c = power.coeffs[m]
                    if c:
                        acc[m] = acc[m] + fi * c
            if i < n:
                power = power * g
        return type(self)(acc)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    def __str__(self) -> str:
        from .render import series_text
        return series_text(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}: {self})"


class ScalarSeries(Series):
    __slots__ = ()

    def __init__(self, coeffs: Sequence):
        super().__init__([RatFunc.coerce(c) for c in coeffs])

    @classmethod
    def zero(cls, n: int) -> "ScalarSeries":
        return cls([ZERO] * (n + 1))

    @classmethod
    def one(cls, n: int) -> "ScalarSeries":
        return cls([ONE] + [ZERO] * n)

    @classmethod
    def from_poly(cls, coeffs: Sequence, n: int) -> "ScalarSeries":
        """Polynomial in t (low degree first) as a series of order n."""
        c = [RatFunc.coerce(x) for x in coeffs[: n + 1]]
        return cls(c + [ZERO] * (n + 1 - len(c)))

    def inverse(self) -> "ScalarSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inv()
        out = [inv0]
        for m in range(1, len(self.coeffs)):
            s = ZERO
            for i in range(1, m + 1):
                a = self.coeffs[i]
                if a:
                    s = s + a * out[m - i]
            out.append(-(s * inv0))
        return ScalarSeries(out)

    def __truediv__(self, other) -> "ScalarSeries":
        if isinstance(other, ScalarSeries):
            return self * other.inverse()
        if _is_scalar(other):
            return self * RatFunc.coerce(other).inv()
        return NotImplemented


class TorusSeries(Series):
    __slots__ = ()

    def __init__(self, coeffs: Sequence):
        super().__init__([TorusElement.coerce(c) for c in coeffs])

    @classmethod
    def zero(cls, n: int) -> "TorusSeries":
        return cls([TorusElement.zero()] * (n + 1))

    @classmethod
    def constant(cls, u: TorusElement, n: int) -> "TorusSeries":
        return cls([u] + [TorusElement.zero()] * n)

    @classmethod
    def from_poly(cls, coeffs: Sequence, n: int) -> "TorusSeries":
        c = [TorusElement.coerce(x) for x in coeffs[: n + 1]]
        return cls(c + [TorusElement.zero()] * (n + 1 - len(c)))


class BiTorusSeries:
    """Truncated series in s and t with torus coefficients, as a dense grid.

    ``grid[i][j]`` is the coefficient of s^i t^j.
    """

    __slots__ = ("grid",)

    def __init__(self, grid: Sequence[Sequence]):
        rows = [tuple(TorusElement.coerce(c) for c in row) for row in grid]
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("grid must be a nonempty rectangle")
        self.grid = tuple(rows)

    @property
    def order_s(self) -> int:
        return len(self.grid) - 1

    @property
    def order_t(self) -> int:
        return len(self.grid[0]) - 1

    @property
    def orders(self) -> tuple[int, int]:
        return self.order_s, self.order_t

    @classmethod
    def zero(cls, ns: int, nt: int) -> "BiTorusSeries":
        z = TorusElement.zero()
        return cls([[z] * (nt + 1) for _ in range(ns + 1)])

    @classmethod
    def in_s(cls, f: Series, nt: int) -> "BiTorusSeries":
        """View a series in one variable as a series in s."""
        z = TorusElement.zero()
        return cls([[TorusElement.coerce(c)] + [z] * nt for c in f.coeffs])

    @classmethod
    def in_t(cls, f: Series, ns: int) -> "BiTorusSeries":
        z = TorusElement.zero()
        row = [TorusElement.coerce(c) for c in f.coeffs]
        return cls([row] + [[z] * len(row) for _ in range(ns)])

    def __getitem__(self, ij: tuple[int, int]) -> TorusElement:
        i, j = ij
        return self.grid[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiTorusSeries):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self) -> int:
        return hash(self.grid)

    def _shape(self, other: "BiTorusSeries") -> tuple[int, int]:
        return min(len(self.grid), len(other.grid)), min(len(self.grid[0]), len(other.grid[0]))

    def __add__(self, other):
        if not isinstance(other, BiTorusSeries):
            return NotImplemented
        ns, nt = self._shape(other)
        return BiTorusSeries([[self.grid[i][j] + other.grid[i][j] for j in range(nt)]
                              for i in range(ns)])

    def __neg__(self):
        return BiTorusSeries([[-c for c in row] for row in self.grid])

    def __sub__(self, other):
        if not isinstance(other, BiTorusSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiTorusSeries):
            ns, nt = self._shape(other)
            a = [(i, j, self.grid[i][j]) for i in range(ns) for j in range(nt) if self.grid[i][j]]
            b = [(i, j, other.grid[i][j]) for i in range(ns) for j in range(nt) if other.grid[i][j]]
            out: dict[tuple[int, int], TorusElement] = {}
            for i1, j1, u in a:
                for i2, j2, v in b:
                    i, j = i1 + i2, j1 + j2
                    if i < ns and j < nt:
                        p = u * v
                        out[i, j] = out[i, j] + p if (i, j) in out else p
            z = TorusElement.zero()
            return BiTorusSeries([[out.get((i, j), z) for j in range(nt)] for i in range(ns)])
        if _is_scalar(other) or isinstance(other, TorusElement):
            return BiTorusSeries([[c * other for c in row] for row in self.grid])
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other) or isinstance(other, TorusElement):
            return BiTorusSeries([[other * c for c in row] for row in self.grid])
        return NotImplemented

    def scale(self, c) -> "BiTorusSeries":
        return self * RatFunc.coerce(c)

    def shift(self, di: int, dj: int) -> "BiTorusSeries":
        """Multiply by s^di t^dj, keeping both orders."""
        z = TorusElement.zero()
        ns, nt = len(self.grid), len(self.grid[0])
        return BiTorusSeries([[self.grid[i - di][j - dj] if i >= di and j >= dj else z
                               for j in range(nt)] for i in range(ns)])

    def is_zero(self) -> bool:
        return not any(c for row in self.grid for c in row)

    def first_nonzero(self) -> tuple[int, int] | None:
        """Lowest nonzero (i, j), ordered by total degree then by i."""
        best = None
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c and (best is None or (i + j, i) < (best[0] + best[1], best[0])):
                    best = (i, j)
        return best

    def to_json(self) -> dict:
        return {"order": [self.order_s, self.order_t],
                "coeffs": [[c.to_json() for c in row] for row in self.grid]}


def expand_rational_t(numer, denom, n: int) -> ScalarSeries:
    """Series expansion of numer(t)/denom(t) to order n.

    ``numer`` and ``denom`` are polynomials in t, given as coefficient lists
    (low degree first) or as series.
    """
    if isinstance(numer, Series):
        numer = numer.coeffs
    if isinstance(denom, Series):
        denom = denom.coeffs
    d = ScalarSeries.from_poly(denom, n)
    if not d.coeffs[0]:
        raise ZeroDivisionError("denominator has zero constant term")
    return ScalarSeries.from_poly(numer, n) * d.inverse()


def _qq() -> RatFunc:
    return q_power(1) + q_power(-1)


def omega_series(n: int) -> ScalarSeries:
    """sum_i C(2i, i) (t / (q + q^-1))^(2i), truncated at t^n."""
    inv_sq = _qq().inv() ** 2
    coeffs = [ZERO] * (n + 1)
    p = ONE
    for i in range(0, n // 2 + 1):
        coeffs[2 * i] = p * comb(2 * i, i)
        p = p * inv_sq
    return ScalarSeries(coeffs)


def _odd_series(n: int, sign: int) -> ScalarSeries:
    qq = _qq()
    coeffs = [ZERO] * (n + 1)
    for l in range(0, (n - 1) // 2 + 1):
        c = qq * q_power(sign * (2 * l + 1))
        coeffs[2 * l + 1] = -c if l % 2 else c
    return ScalarSeries(coeffs)


def t_series(n: int) -> ScalarSeries:
    """(q + q^-1) / (q t + q^-1 t^-1) = (q + q^-1) sum (-1)^l q^(2l+1) t^(2l+1)."""
    return _odd_series(n, 1)


def s_series(n: int) -> ScalarSeries:
    """(q + q^-1) / (q t^-1 + q^-1 t) = (q + q^-1) sum (-1)^l q^-(2l+1) t^(2l+1)."""
    return _odd_series(n, -1)


def c_n(n: int) -> RatFunc:
    """sum_{i=0}^n (-1)^(n-i) C(2i, i) C(n+i, n-i)."""
    total = sum((-1) ** (n - i) * comb(2 * i, i) * comb(n + i, n - i) for i in range(n + 1))
    return RatFunc.coerce(total)
