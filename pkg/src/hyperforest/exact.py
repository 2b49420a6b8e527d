"""Exact univariate polynomials and truncated formal power series.

Integers are Python ints and rationals are :class:`fractions.Fraction`; nothing
in this module ever rounds.  ``TruncatedSeries`` works over any commutative ring
whose elements support ``+ - *``, division by a nonzero int and ``==``; in
practice that means ``Fraction`` or :class:`UniPoly`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = [
    "UniPoly",
    "TruncatedSeries",
    "poly_eval",
    "series_exp",
    "series_compose",
    "series_reversion",
]


def _scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def _is_scalar(c):
    return isinstance(c, (int, Rational)) and not isinstance(c, bool)


class UniPoly:
    """Dense polynomial with ``Fraction`` coefficients, ``coeffs[i]`` multiplies ``var**i``.

    Immutable.  Plain ints and Fractions mix freely as constant polynomials.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="x"):
        cs = [_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def monomial(cls, degree, coeff=1, var="x"):
        return cls([0] * degree + [coeff], var)

    @classmethod
    def variable(cls, var="x"):
        return cls([0, 1], var)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, v):
        """Horner evaluation; ``v`` may be a scalar or another UniPoly (composition)."""
        acc = UniPoly((), v.var) if isinstance(v, UniPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.var != self.var and self.degree > 0 and other.degree > 0:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if _is_scalar(other):
            return UniPoly([other], self.var)
        return NotImplemented

    def _var_with(self, other):
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = _scalar(other)
            return UniPoly([c * a for a in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly((), self._var_with(other))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out, self._var_with(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        c = _scalar(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return UniPoly([a / c for a in self.coeffs], self.var)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = UniPoly([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self.degree <= 0:
            return hash(self[0])
        return hash(self.coeffs)

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            else:
                cs = str(c) if c.denominator == 1 or not mono else f"({c})"
                term = cs + ("*" + mono if mono else "")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def poly_eval(p, v):
    """Exact Horner evaluation of ``p`` at ``v``."""
    return p(v)


def _ring_zero_like(c):
    return UniPoly((), c.var) if isinstance(c, UniPoly) else Fraction(0)


def _norm(c):
    return Fraction(c) if isinstance(c, int) else c


class TruncatedSeries:
    """Power series ``sum c_i z**i`` known exactly for ``0 <= i <= order``.

    Binary operations between series of different orders truncate to the
    smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [_norm(c) for c in list(coeffs)[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def z(cls, order):
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def egf_coeffs(self):
        """``[n! * c_n for n in 0..order]``."""
        out, f = [], 1
        for i, c in enumerate(self.coeffs):
            if i:
                f *= i
            out.append(c * f)
        return out

    def truncate(self, order):
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries([self[i] + other[i] for i in range(n + 1)], n)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncatedSeries(cs, self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [_ring_zero_like(a[0])] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if x == 0:
                continue
            for j in range(n + 1 - i):
                y = b[j]
                if y != 0:
                    out[i + j] = out[i + j] + x * y
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return TruncatedSeries([x / c for x in self.coeffs], self.order)

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = TruncatedSeries([1], self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def shift(self, k):
        """Multiply by ``z**k`` (k > 0) or divide by ``z**-k`` (k < 0, low terms must vanish)."""
        if k >= 0:
            return TruncatedSeries([0] * k + list(self.coeffs), self.order + k)
        if any(c != 0 for c in self.coeffs[:-k]):
            raise ValueError("series is not divisible by z^%d" % -k)
        if self.order + k < 0:
            raise ValueError("shift leaves no coefficients")
        return TruncatedSeries(self.coeffs[-k:], self.order + k)

    def derivative(self):
        if self.order == 0:
            return TruncatedSeries([0], 0)
        return TruncatedSeries(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1
        )

    def integral(self):
        """Term-by-term antiderivative with zero constant; order grows by one."""
        return TruncatedSeries(
            [0] + [c / (i + 1) for i, c in enumerate(self.coeffs)], self.order + 1
        )

    def exp(self):
        return series_exp(self)

    def compose(self, inner):
        return series_compose(self, inner)

    def reversion(self):
        return series_reversion(self)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_exp(s):
    """``exp(s)`` for a series with zero constant term.

    Uses ``n e_n = sum_{k=1}^{n} k s_k e_{n-k}`` (from ``E' = S' E``).
    """
    if s[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n = s.order
    e = [Fraction(1)]
    for m in range(1, n + 1):
        acc = _ring_zero_like(s[1])
        for k in range(1, m + 1):
            sk = s[k]
            if sk != 0:
                acc = acc + k * sk * e[m - k]
        e.append(acc / m)
    return TruncatedSeries(e, n)


def series_compose(outer, inner):
    """``outer(inner(z))``; the inner series must have zero constant term."""
    if inner[0] != 0:
        raise ValueError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries([outer[n]], n)
    for i in range(n - 1, -1, -1):
        acc = acc * inner + outer[i]
    return acc


def series_reversion(s):
    """Compositional inverse ``r`` with ``s(r(z)) = z`` through ``z**order``.

    Each correction step ``r <- r - (s(r) - z)/c1`` fixes one more coefficient.
    """
    if s[0] != 0:
        raise ValueError("reversion needs a zero constant term")
    c1 = s[1]
    if c1 == 0:
        raise ValueError("no compositional inverse: linear coefficient is zero")
    n = s.order
    z = TruncatedSeries.z(n)
    r = z / c1 if n >= 1 else TruncatedSeries([0], n)
    for _ in range(1, n):
        r = r - (series_compose(s, r) - z) / c1
    return r
