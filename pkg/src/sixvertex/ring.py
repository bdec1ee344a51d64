"""Exact coefficient rings.

Three rings are used throughout the package:

* ``Rat`` -- arbitrary precision rationals (``fractions.Fraction``; plain
  ``int`` values are accepted wherever a ``Rat`` is expected),
* :class:`PolyGamma` -- dense polynomials in the six-vertex weight gamma,
* :class:`LaurentOmega` -- sparse Laurent polynomials in omega.

:func:`chebyshev_reduce` rewrites a Laurent polynomial that is invariant under
omega -> 1/omega and omega -> -omega as a polynomial in
gamma = omega^2 + omega^-2.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import InexactDivision, NotSymmetric

Rat = Fraction
Scalar = Union[int, Fraction]


def rat(value) -> Scalar:
    """Coerce ``value`` (int, Fraction or a ``"p/q"`` string) to an exact scalar.

    Integral values come back as ``int`` so that the common case stays fast.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return rat(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return rat(Fraction(value.strip()))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Scalar) -> str:
    value = rat(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def _div_scalar(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    return rat(Fraction(a) / b)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class PolyGamma:
    """Dense univariate polynomial in gamma with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of gamma^k; trailing zeros are trimmed so
    that the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def const(cls, c) -> PolyGamma:
        return cls((c,))

    @classmethod
    def gen(cls) -> PolyGamma:
        return cls((0, 1))

    @classmethod
    def coerce(cls, x) -> PolyGamma:
        if isinstance(x, PolyGamma):
            return x
        return cls((x,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    def __repr__(self):
        return f"PolyGamma({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "g") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{rat_str(a)}*{mono}"
            else:
                body = rat_str(a)
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other):
        if isinstance(other, PolyGamma):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == PolyGamma((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs) if len(self.coeffs) != 1 else hash(self.coeffs[0])
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return PolyGamma(-c for c in self.coeffs)

    def __add__(self, other):
        if _is_scalar(other):
            other = PolyGamma((other,))
        elif not isinstance(other, PolyGamma):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyGamma(out)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = PolyGamma((other,))
        elif not isinstance(other, PolyGamma):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return PolyGamma()
            return PolyGamma(c * other for c in self.coeffs)
        if not isinstance(other, PolyGamma):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyGamma()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return PolyGamma(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyGamma((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: PolyGamma) -> tuple[PolyGamma, PolyGamma]:
        other = PolyGamma.coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= db:
            return PolyGamma(), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = _div_scalar(rem[k + db], lead)
            quot[k] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    rem[k + j] -= c * bj
        return PolyGamma(quot), PolyGamma(rem[:db])

    def exact_div(self, other) -> PolyGamma:
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return PolyGamma(_div_scalar(c, other) for c in self.coeffs)
        q, r = self.divmod(other)
        if r:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return q

    def __truediv__(self, other):
        if not (_is_scalar(other) or isinstance(other, PolyGamma)):
            return NotImplemented
        if isinstance(other, PolyGamma) and other.degree == 0:
            other = other.coeffs[0]
        return self.exact_div(other)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return rat(acc) if _is_scalar(acc) else acc

    def compose(self, inner: PolyGamma) -> PolyGamma:
        acc = PolyGamma()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]


class LaurentOmega:
    """Sparse Laurent polynomial in omega with exact rational coefficients.

    Stored as a mapping exponent -> coefficient with no zero entries.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, Scalar] = {}
        for e, c in items:
            c = rat(c)
            if c:
                d[int(e)] = d.get(int(e), 0) + c
                if d[int(e)] == 0:
                    del d[int(e)]
        self.terms = d
        self._hash = None

    @classmethod
    def const(cls, c) -> LaurentOmega:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> LaurentOmega:
        return cls({e: c})

    @classmethod
    def from_dense(cls, offset: int, coeffs: Iterable) -> LaurentOmega:
        return cls((offset + i, c) for i, c in enumerate(coeffs) if c)

    @classmethod
    def coerce(cls, x) -> LaurentOmega:
        if isinstance(x, LaurentOmega):
            return x
        return cls({0: x})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def max_exp(self) -> int:
        return max(self.terms)

    @property
    def min_exp(self) -> int:
        return min(self.terms)

    def __repr__(self):
        return f"LaurentOmega({dict(sorted(self.terms.items()))!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("w" if e == 1 else f"w^{e}" if e > 0 else f"w^({e})")
            if mono:
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{rat_str(c)}*{mono}")
            else:
                body = rat_str(c)
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __eq__(self, other):
        if isinstance(other, LaurentOmega):
            return self.terms == other.terms
        if _is_scalar(other):
            return self.terms == LaurentOmega({0: other}).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentOmega({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if _is_scalar(other):
            other = LaurentOmega({0: other})
        elif not isinstance(other, LaurentOmega):
            return NotImplemented
        d = dict(self.terms)
        for e, c in other.terms.items():
            d[e] = d.get(e, 0) + c
        return LaurentOmega(d)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = LaurentOmega({0: other})
        elif not isinstance(other, LaurentOmega):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return LaurentOmega({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentOmega):
            return NotImplemented
        d: dict[int, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentOmega(d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise InexactDivision("only monomials are invertible")
            (e, c), = self.terms.items()
            return LaurentOmega({e * n: Fraction(1) / c ** (-n)})
        result = LaurentOmega({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other) -> LaurentOmega:
        """Exact division; raises :class:`InexactDivision` if there is a remainder."""
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return LaurentOmega({e: _div_scalar(c, other) for e, c in self.terms.items()})
        other = LaurentOmega.coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        # quotient exponents lie in [min(self) - min(other), max(self) - max(other)]
        top_b, low_b = other.max_exp, other.min_exp
        lead = other.terms[top_b]
        rem = dict(self.terms)
        quot: dict[int, Scalar] = {}
        lowest_quotient_exp = (min(rem) - low_b) if rem else 0
        while rem:
            top = max(rem)
            if top - top_b < lowest_quotient_exp:
                break
            c = _div_scalar(rem[top], lead)
            shift = top - top_b
            quot[shift] = c
            for e, b in other.terms.items():
                v = rem.get(e + shift, 0) - c * b
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return LaurentOmega(quot)

    def __truediv__(self, other):
        if not (_is_scalar(other) or isinstance(other, LaurentOmega)):
            return NotImplemented
        return self.exact_div(other)

    def invert_omega(self) -> LaurentOmega:
        """Substitute omega -> 1/omega."""
        return LaurentOmega({-e: c for e, c in self.terms.items()})

    def negate_omega(self) -> LaurentOmega:
        """Substitute omega -> -omega."""
        return LaurentOmega({e: (-c if e % 2 else c) for e, c in self.terms.items()})

    def __call__(self, w):
        acc = 0
        for e, c in self.terms.items():
            acc += c * (w ** e if e >= 0 else Fraction(1) / w ** (-e))
        return rat(acc) if _is_scalar(acc) else acc


def _gamma_power_in_omega(k: int) -> LaurentOmega:
    # (w^2 + w^-2)^k = sum_i C(k, i) w^(2k - 4i)
    return LaurentOmega({2 * k - 4 * i: comb(k, i) for i in range(k + 1)})


def gamma_to_omega(g: PolyGamma) -> LaurentOmega:
    """Substitute gamma = omega^2 + omega^-2."""
    acc = LaurentOmega()
    for k, c in enumerate(g.coeffs):
        if c:
            acc = acc + _gamma_power_in_omega(k) * c
    return acc


def chebyshev_reduce(p: LaurentOmega) -> PolyGamma:
    """Write ``p(omega)`` as ``g(omega^2 + omega^-2)``.

    Works by peeling off the leading monomial c*omega^(2k) against
    c*(omega^2 + omega^-2)^k. Raises :class:`NotSymmetric` when the input is
    not invariant under omega -> 1/omega and omega -> -omega.
    """
    p = LaurentOmega.coerce(p)
    rem = dict(p.terms)
    out: dict[int, Scalar] = {}
    while rem:
        top = max(rem)
        if top < 0 or top % 2:
            raise NotSymmetric(f"{p} is not a polynomial in omega^2 + omega^-2")
        k = top // 2
        c = rem[top]
        out[k] = c
        for i in range(k + 1):
            e = 2 * k - 4 * i
            v = rem.get(e, 0) - c * comb(k, i)
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    if not out:
        return PolyGamma()
    return PolyGamma(out.get(k, 0) for k in range(max(out) + 1))
