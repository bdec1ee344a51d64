"""Truncated formal power series over exact coefficient rings.

A :class:`TruncSeries` holds the coefficients c_0 .. c_{N-1} of a power series
in one variable (called ``t`` here, ``q`` or ``w`` elsewhere) together with the
truncation order N. Results of binary operations carry the smaller of the two
operand orders.

Coefficients belong to a :class:`Ring`. The rings provided are

* :data:`QQ` -- rationals,
* :data:`GAMMA` -- :class:`~sixvertex.ring.PolyGamma`,
* :data:`OMEGA` -- :class:`~sixvertex.ring.LaurentOmega`,
* :class:`MPolyRing` -- multivariate (Laurent) polynomials, i.e. series whose
  coefficients are polynomials in x, y, ... ("PolyCoeffSeries").

Rings with a packed representation (``GAMMA``, ``MPolyRing``) override
:meth:`Ring.convolve` so a whole series product costs one big-integer
multiplication.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import BadConstantTerm, DegreeOverflow, NonUnitLeading, NotReversible
from .mpoly import MPoly, kron_mul, zeros
from .ring import LaurentOmega, PolyGamma, rat


class Ring:
    """Coefficient ring interface used by :class:`TruncSeries`."""

    name = "ring"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def is_zero(self, c) -> bool:
        return c == 0

    def is_unit(self, c) -> bool:
        raise NotImplementedError

    def inverse(self, c):
        raise NotImplementedError

    def div_int(self, c, n: int):
        """Exact division of a coefficient by a nonzero integer."""
        return c * Fraction(1, n)

    def mul(self, a, b):
        return a * b

    def convolve(self, a: Sequence, b: Sequence, n: int) -> list:
        """First ``n`` coefficients of the product of two coefficient lists."""
        out = []
        zero = self.zero()
        la, lb = len(a), len(b)
        nz_a = [i for i in range(min(la, n)) if not self.is_zero(a[i])]
        for k in range(n):
            acc = zero
            for i in nz_a:
                if i > k:
                    break
                j = k - i
                if j < lb:
                    bj = b[j]
                    if not self.is_zero(bj):
                        acc = acc + a[i] * bj
            out.append(acc)
        return out

    def __repr__(self):
        return self.name


class RationalRing(Ring):
    name = "QQ"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, PolyGamma):
            if x.degree > 0:
                raise TypeError("cannot coerce a nonconstant polynomial to QQ")
            return x.constant()
        return rat(x)

    def is_unit(self, c) -> bool:
        return c != 0

    def inverse(self, c):
        if c == 0:
            raise NonUnitLeading("zero is not invertible")
        return rat(Fraction(1) / c)

    def div_int(self, c, n):
        return rat(Fraction(c, n)) if isinstance(c, int) else rat(c / n)


class GammaRing(Ring):
    name = "QQ[gamma]"

    def zero(self):
        return PolyGamma()

    def one(self):
        return PolyGamma((1,))

    def coerce(self, x):
        return PolyGamma.coerce(x if not isinstance(x, str) else rat(x))

    def is_zero(self, c) -> bool:
        return not c

    def is_unit(self, c) -> bool:
        return c.degree == 0

    def inverse(self, c):
        if c.degree != 0:
            raise NonUnitLeading(f"{c} is not a unit in QQ[gamma]")
        return PolyGamma((rat(Fraction(1) / c.coeffs[0]),))

    def div_int(self, c, n):
        return c.exact_div(n)

    def convolve(self, a, b, n):
        a = [self.coerce(x) for x in a[:n]]
        b = [self.coerce(x) for x in b[:n]]
        if not a or not b:
            return [self.zero()] * n
        da = max((x.degree for x in a), default=-1)
        db = max((x.degree for x in b), default=-1)
        if da < 0 or db < 0:
            return [self.zero()] * n
        arr_a = zeros((len(a), da + 1))
        arr_b = zeros((len(b), db + 1))
        for i, p in enumerate(a):
            arr_a[i, : len(p.coeffs)] = p.coeffs
        for i, p in enumerate(b):
            arr_b[i, : len(p.coeffs)] = p.coeffs
        prod = kron_mul(arr_a, arr_b)
        out = [PolyGamma(prod[k]) for k in range(min(n, prod.shape[0]))]
        out.extend(self.zero() for _ in range(n - len(out)))
        return out


class OmegaRing(Ring):
    name = "QQ[omega, 1/omega]"

    def zero(self):
        return LaurentOmega()

    def one(self):
        return LaurentOmega.const(1)

    def coerce(self, x):
        return LaurentOmega.coerce(x)

    def is_zero(self, c) -> bool:
        return not c

    def is_unit(self, c) -> bool:
        return len(c.terms) == 1

    def inverse(self, c):
        if len(c.terms) != 1:
            raise NonUnitLeading(f"{c} is not a unit in QQ[omega, 1/omega]")
        return c ** -1

    def div_int(self, c, n):
        return c.exact_div(n)


class MPolyRing(Ring):
    """Multivariate Laurent polynomials in named variables.

    ``max_deg`` optionally maps a variable name to the largest exponent kept;
    every product is truncated accordingly (the ring is then a quotient ring,
    which keeps all series algorithms valid).
    """

    def __init__(self, names: Sequence[str], max_deg: dict[str, int] | None = None):
        self.names = tuple(names)
        self.max_deg = dict(max_deg or {})
        self.name = "QQ[" + ",".join(self.names) + "]"

    def __eq__(self, other):
        return isinstance(other, MPolyRing) and self.names == other.names and self.max_deg == other.max_deg

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.max_deg.items()))))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def axis(self, name: str) -> int:
        return self.names.index(name)

    def zero(self):
        return MPoly.zero(self.nvars)

    def one(self):
        return MPoly.const(1, self.nvars)

    def coerce(self, x):
        if isinstance(x, MPoly):
            return x
        return MPoly.const(rat(x), self.nvars)

    def is_zero(self, c) -> bool:
        return c.is_zero()

    def reduce(self, p: MPoly) -> MPoly:
        for name, bound in self.max_deg.items():
            ax = self.axis(name)
            if p.c.size and p.offset[ax] + p.c.shape[ax] - 1 > bound:
                p = p.truncate(ax, hi=bound)
        return p.trim()

    def mul(self, a, b):
        return self.reduce(a * b)

    def is_unit(self, c) -> bool:
        c = c.trim()
        return c.c.size == 1 and all(o == 0 for o in c.offset)

    def inverse(self, c):
        c = c.trim()
        if not self.is_unit(c):
            raise NonUnitLeading("only nonzero constants are inverted in a polynomial ring")
        return MPoly.const(rat(Fraction(1) / c.scalar()), self.nvars)

    def div_int(self, c, n):
        return c.scale_div(n)

    def convolve(self, a, b, n):
        a = [self.coerce(x).trim() for x in a[:n]]
        b = [self.coerce(x).trim() for x in b[:n]]
        stack_a, off_a = _stack(a, self.nvars)
        stack_b, off_b = _stack(b, self.nvars)
        if stack_a is None or stack_b is None:
            return [self.zero() for _ in range(n)]
        prod = kron_mul(stack_a, stack_b)
        off = [x + y for x, y in zip(off_a, off_b)]
        out = []
        for k in range(n):
            if k < prod.shape[0]:
                out.append(self.reduce(MPoly(prod[k], off)))
            else:
                out.append(self.zero())
        return out


def _stack(polys: list[MPoly], nvars: int):
    nonzero = [p for p in polys if p.c.size]
    if not nonzero:
        return None, None
    lo = [min(p.offset[i] for p in nonzero) for i in range(nvars)]
    hi = [max(p.offset[i] + p.c.shape[i] for p in nonzero) for i in range(nvars)]
    arr = zeros([len(polys)] + [h - l for l, h in zip(lo, hi)])
    for k, p in enumerate(polys):
        if p.c.size:
            arr[(k,) + tuple(slice(o - l, o - l + s) for o, l, s in zip(p.offset, lo, p.c.shape))] = p.c
    return arr, lo


QQ = RationalRing()
GAMMA = GammaRing()
OMEGA = OmegaRing()


class TruncSeries:
    """c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N) over ``ring``."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, coeffs: Iterable = (), order: int | None = None, ring: Ring = QQ):
        cs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError("negative truncation order")
        cs = cs[:order]
        cs.extend(ring.zero() for _ in range(order - len(cs)))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list, order: int, ring: Ring) -> TruncSeries:
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.order = order
        obj.coeffs = tuple(rat(c) for c in coeffs) if ring is QQ else tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, order: int, ring: Ring = QQ) -> TruncSeries:
        return cls._raw([ring.zero()] * order, order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = QQ) -> TruncSeries:
        return cls.monomial(0, order, ring)

    @classmethod
    def gen(cls, order: int, ring: Ring = QQ) -> TruncSeries:
        return cls.monomial(1, order, ring)

    @classmethod
    def monomial(cls, k: int, order: int, ring: Ring = QQ, c=None) -> TruncSeries:
        cs = [ring.zero()] * order
        if k < order:
            cs[k] = ring.one() if c is None else ring.coerce(c)
        return cls._raw(cs, order, ring)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return list(self.coeffs)[k]
        if k < 0:
            raise IndexError("negative index")
        if k >= self.order:
            raise IndexError(f"coefficient {k} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"TruncSeries([{shown}{more}], order={self.order}, ring={self.ring!r})"

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order`` if none)."""
        for k, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return k
        return self.order

    def truncate(self, order: int) -> TruncSeries:
        if order >= self.order:
            return self
        return TruncSeries._raw(list(self.coeffs[:order]), order, self.ring)

    def _lift(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            if other.ring != self.ring:
                raise TypeError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return TruncSeries.monomial(0, self.order, self.ring, other)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncSeries._raw([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw([-c for c in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncSeries._raw([a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n, self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            if other.ring != self.ring:
                raise TypeError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            n = min(self.order, other.order)
            return TruncSeries._raw(self.ring.convolve(self.coeffs, other.coeffs, n), n, self.ring)
        c = other if isinstance(other, (MPoly, PolyGamma, LaurentOmega)) else self.ring.coerce(other)
        return TruncSeries._raw([x * c for x in self.coeffs], self.order, self.ring)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        if isinstance(other, int):
            return TruncSeries._raw([self.ring.div_int(c, other) for c in self.coeffs], self.order, self.ring)
        if isinstance(other, Fraction):
            return (self * other.denominator) / other.numerator
        if isinstance(other, PolyGamma):
            return TruncSeries._raw([c.exact_div(other) for c in self.coeffs], self.order, self.ring)
        if isinstance(other, LaurentOmega):
            return TruncSeries._raw([c.exact_div(other) for c in self.coeffs], self.order, self.ring)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncSeries.one(self.order, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            return all(a == b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))
        return NotImplemented

    __hash__ = None

    def first_difference(self, other: TruncSeries) -> int | None:
        """Smallest index where the coefficients differ, or ``None``."""
        n = min(self.order, other.order)
        for k in range(n):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse by Newton iteration."""
        if self.order == 0:
            return self
        a0 = self.coeffs[0]
        if not self.ring.is_unit(a0):
            raise NonUnitLeading(f"constant term {a0} is not invertible")
        n = self.order
        b = TruncSeries._raw([self.ring.inverse(a0)], 1, self.ring)
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            a = self.truncate(prec)
            b = TruncSeries._raw(list(b.coeffs) + [self.ring.zero()] * (prec - b.order), prec, self.ring)
            err = TruncSeries.one(prec, self.ring) - a * b
            b = b + b * err
        return b

    def shift(self, k: int) -> TruncSeries:
        """Multiply by t^k (k may be negative if the low coefficients vanish)."""
        if k >= 0:
            cs = [self.ring.zero()] * k + list(self.coeffs)
            return TruncSeries._raw(cs[: self.order + k], self.order + k, self.ring)
        for c in self.coeffs[:-k]:
            if not self.ring.is_zero(c):
                raise ValueError("cannot divide by t: low coefficients are nonzero")
        return TruncSeries._raw(list(self.coeffs[-k:]), self.order + k, self.ring)

    def derivative(self) -> TruncSeries:
        cs = [c * k for k, c in enumerate(self.coeffs)][1:]
        return TruncSeries._raw(cs, max(self.order - 1, 0), self.ring)

    def theta_op(self) -> TruncSeries:
        """t d/dt."""
        return TruncSeries._raw([c * k for k, c in enumerate(self.coeffs)], self.order, self.ring)

    def integral(self) -> TruncSeries:
        cs = [self.ring.zero()] + [self.ring.div_int(c, k + 1) for k, c in enumerate(self.coeffs)]
        return TruncSeries._raw(cs, self.order + 1, self.ring)

    def map_coeffs(self, fn: Callable, ring: Ring | None = None) -> TruncSeries:
        ring = ring or self.ring
        return TruncSeries([fn(c) for c in self.coeffs], self.order, ring)

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """self(inner(t)); ``inner`` must have zero constant term."""
        if inner.order and not inner.ring.is_zero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        if n == 0:
            return TruncSeries.zero(0, self.ring)
        inner = inner.truncate(n)
        acc = TruncSeries.monomial(0, n, self.ring, self.coeffs[n - 1])
        for k in range(n - 2, -1, -1):
            acc = acc * inner
            acc = TruncSeries._raw([acc.coeffs[0] + self.coeffs[k]] + list(acc.coeffs[1:]), n, self.ring)
        return acc

    __call__ = compose

    def to_json(self) -> list:
        from .ring import rat_str

        out = []
        for c in self.coeffs:
            if isinstance(c, PolyGamma):
                out.append(c.to_json())
            elif isinstance(c, (int, Fraction)):
                out.append(rat_str(c))
            else:
                out.append(str(c))
        return out


def from_function(fn: Callable[[int], object], order: int, ring: Ring = QQ) -> TruncSeries:
    return TruncSeries([fn(k) for k in range(order)], order, ring)


def exp(a: TruncSeries) -> TruncSeries:
    """exp(a) for a series with zero constant term."""
    ring = a.ring
    if a.order and not ring.is_zero(a.coeffs[0]):
        raise BadConstantTerm("exp needs a zero constant term")
    n = a.order
    if n == 0:
        return a
    # n e_n = sum_{k=1}^{n} k a_k e_{n-k}
    ka = [a.coeffs[k] * k for k in range(n)]
    e = [ring.one()]
    for m in range(1, n):
        acc = ring.zero()
        for k in range(1, m + 1):
            if not ring.is_zero(ka[k]):
                acc = acc + ring.mul(ka[k], e[m - k])
        e.append(ring.div_int(acc, m))
    return TruncSeries._raw(e, n, ring)


def log(a: TruncSeries) -> TruncSeries:
    """log(a) for a series with constant term 1."""
    if a.order and a.coeffs[0] != a.ring.one():
        raise BadConstantTerm("log needs constant term 1")
    if a.order <= 1:
        return TruncSeries.zero(a.order, a.ring)
    return (a.derivative() * a.truncate(a.order - 1).inverse()).integral()


def reversion(f: TruncSeries, method: str = "lagrange") -> TruncSeries:
    """Compositional inverse g of f, so that f(g(t)) = g(f(t)) = t.

    ``method="lagrange"`` reads each coefficient off a power of t/f(t):
    [t^n] g = (1/n) [z^(n-1)] (z/f(z))^n. ``method="solve"`` determines
    g_1, g_2, ... one at a time from the requirement [t^n] f(g) = 0.
    """
    ring = f.ring
    n = f.order
    if n < 2:
        raise NotReversible("need at least the linear coefficient")
    if not ring.is_zero(f.coeffs[0]):
        raise NotReversible("constant term must vanish")
    if not ring.is_unit(f.coeffs[1]):
        raise NotReversible("linear coefficient must be invertible")
    if method == "lagrange":
        return _reversion_lagrange(f)
    if method == "solve":
        return _reversion_solve(f)
    raise ValueError(f"unknown reversion method {method!r}")


def _reversion_lagrange(f: TruncSeries) -> TruncSeries:
    ring = f.ring
    n = f.order
    h = f.shift(-1).inverse()  # z / f(z), order n - 1
    g = [ring.zero()]
    power = TruncSeries.one(n - 1, ring)
    for m in range(1, n):
        power = power * h
        g.append(ring.div_int(power.coeffs[m - 1], m))
    return TruncSeries._raw(g, n, ring)


def _reversion_solve(f: TruncSeries) -> TruncSeries:
    ring = f.ring
    n = f.order
    inv1 = ring.inverse(f.coeffs[1])
    g = [ring.zero(), inv1]
    # powers[k][m] = [t^m] g^k, filled in as the g-coefficients become known
    powers: list[list] = [[], [ring.zero(), inv1]]
    for m in range(2, n):
        total = ring.zero()
        for k in range(2, m + 1):
            if len(powers) <= k:
                powers.append([ring.zero()] * k)
            prev = powers[k - 1]
            acc = ring.zero()
            for j in range(1, m - k + 2):
                pj = prev[m - j] if m - j < len(prev) else ring.zero()
                if not ring.is_zero(pj):
                    acc = acc + g[j] * pj
            powers[k].append(acc)
            fk = f.coeffs[k]
            if not ring.is_zero(fk):
                total = total + fk * acc
        gm = -(total * inv1)
        g.append(gm)
        powers[1].append(gm)
    return TruncSeries._raw(g, n, ring)


class ShiftedSeries:
    """q^shift * body, with a rational shift >= 0."""

    __slots__ = ("shift", "body")

    def __init__(self, shift, body: TruncSeries):
        shift = Fraction(shift)
        if shift < 0:
            raise ValueError("shift must be nonnegative")
        self.shift = shift
        self.body = body

    def __repr__(self):
        return f"ShiftedSeries(q^{self.shift} * {self.body!r})"

    @property
    def order(self) -> Fraction:
        """Exponent bound: terms up to q^(shift + body.order) are known."""
        return self.shift + self.body.order

    def normalised(self) -> ShiftedSeries:
        """Move whole powers of q from the shift into the body (shift in [0, 1))."""
        whole = int(self.shift)
        if whole == 0:
            return self
        return ShiftedSeries(self.shift - whole, self.body.shift(whole))

    def __mul__(self, other):
        if isinstance(other, ShiftedSeries):
            return ShiftedSeries(self.shift + other.shift, self.body * other.body)
        if isinstance(other, TruncSeries):
            return ShiftedSeries(self.shift, self.body * other)
        return ShiftedSeries(self.shift, self.body * other)

    __rmul__ = __mul__

    def __add__(self, other: ShiftedSeries):
        a, b = self.normalised(), other.normalised()
        if a.shift != b.shift:
            raise ValueError("cannot add series whose shifts differ modulo 1")
        return ShiftedSeries(a.shift, a.body + b.body)

    def __pow__(self, k: int):
        return ShiftedSeries(self.shift * k, self.body ** k)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            if other.valuation() != 0:
                raise NonUnitLeading("divisor must have a unit constant term")
            return ShiftedSeries(self.shift, self.body / other)
        return ShiftedSeries(self.shift, self.body / other)

    def to_integral(self) -> TruncSeries:
        """The plain series, if the shift is a whole number."""
        if self.shift.denominator != 1:
            raise ValueError(f"shift {self.shift} is not integral")
        return self.body.shift(int(self.shift))

    def coefficient(self, exponent) -> object:
        e = Fraction(exponent) - self.shift
        if e.denominator != 1 or e < 0:
            return self.body.ring.zero()
        return self.body[int(e)]


# ---------------------------------------------------------------------------
# polynomial-coefficient series (coefficients in an MPolyRing)
# ---------------------------------------------------------------------------


def _poly_ring(p: TruncSeries) -> MPolyRing:
    if not isinstance(p.ring, MPolyRing):
        raise TypeError("expected a series with polynomial coefficients")
    return p.ring


def extract(p: TruncSeries, var: str, k: int | None = None, nonnegative: bool = False) -> TruncSeries:
    """Coefficient extraction [var^k] p, or [var^{>=0}] p with ``nonnegative``.

    [var^k] drops ``var`` from the coefficient ring (falling back to QQ when no
    variables remain); [var^{>=0}] keeps the ring.
    """
    ring = _poly_ring(p)
    ax = ring.axis(var)
    if nonnegative:
        return TruncSeries._raw([c.truncate(ax, lo=0).trim() for c in p.coeffs], p.order, ring)
    if k is None:
        raise ValueError("give an exponent or nonnegative=True")
    names = [nm for nm in ring.names if nm != var]
    if not names:
        return TruncSeries([rat(c.slice(ax, k).scalar()) for c in p.coeffs], p.order, QQ)
    bounds = {nm: b for nm, b in ring.max_deg.items() if nm != var}
    sub = MPolyRing(names, bounds)
    return TruncSeries._raw([c.slice(ax, k).trim() for c in p.coeffs], p.order, sub)


def substitute(p: TruncSeries, rule: str, bound: int | None = None) -> TruncSeries:
    """Apply one of the substitutions used by the functional equations.

    ``rule`` is ``"x->1/(1-x)"``, ``"x->1/x"`` or ``"y->t*x"`` with any variable
    names in place of x and y. For ``1/(1-x)`` the result is truncated at
    x-degree ``bound`` (default: the ring's bound for x). ``y->t*x`` re-grades
    the t-order and raises :class:`DegreeOverflow` if a term would exceed the
    x-degree bound of the ring.
    """
    ring = _poly_ring(p)
    rule = rule.replace(" ", "")
    if m := re.fullmatch(r"(\w+)->1/\1", rule):
        var = m.group(1)
        ax = ring.axis(var)
        target = MPolyRing(ring.names, {k: v for k, v in ring.max_deg.items() if k != var})
        return TruncSeries._raw([c.reflect(ax) for c in p.coeffs], p.order, target)
    if m := re.fullmatch(r"(\w+)->1/\(1-\1\)", rule):
        var = m.group(1)
        ax = ring.axis(var)
        if bound is None:
            bound = ring.max_deg.get(var)
        if bound is None:
            raise DegreeOverflow(f"{var} -> 1/(1-{var}) needs an explicit degree bound")
        return TruncSeries._raw([_geometric_substitute(c, ax, bound) for c in p.coeffs], p.order, ring)
    if m := re.fullmatch(r"(\w+)->t\*(\w+)", rule):
        src, dst = m.groups()
        ax_src, ax_dst = ring.axis(src), ring.axis(dst)
        bound = ring.max_deg.get(dst)
        out = [ring.zero() for _ in range(p.order)]
        for n, c in enumerate(p.coeffs):
            for j, mono in _slices(c, ax_src):
                if n + j >= p.order:
                    continue
                moved = mono.shift([j if i == ax_dst else 0 for i in range(ring.nvars)])
                if bound is not None and moved.c.size and moved.degree(ax_dst) > bound:
                    raise DegreeOverflow(f"{dst}-degree exceeds the bound {bound}")
                out[n + j] = out[n + j] + moved
        return TruncSeries._raw([o.trim() for o in out], p.order, ring)
    raise ValueError(f"unsupported substitution {rule!r}")


def _slices(c: MPoly, axis: int):
    """Yield (exponent, polynomial) with the given variable set to exponent 0."""
    if not c.c.size:
        return
    lo, hi = c.bounds(axis)
    for e in range(lo, hi + 1):
        s = c.slice(axis, e)
        if s:
            yield e, s.insert_axis(axis)


def _geometric_substitute(c: MPoly, axis: int, bound: int) -> MPoly:
    """Replace x^k by (1-x)^(-k) = sum_i C(k+i-1, i) x^i, truncated at x^bound."""
    from math import comb

    if not c.c.size:
        return c
    lo, hi = c.bounds(axis)
    if lo < 0:
        raise ValueError("x -> 1/(1-x) needs a polynomial in x")
    rest_shape = list(c.c.shape)
    rest_shape[axis] = bound + 1
    out = zeros(rest_shape)
    out_off = list(c.offset)
    out_off[axis] = 0
    for k in range(lo, hi + 1):
        s = np.take(c.c, k - lo, axis=axis)
        if not np.any(s != 0):
            continue
        for i in range(bound + 1):
            coef = 1 if k == 0 and i == 0 else (0 if k == 0 else comb(k + i - 1, i))
            if coef:
                idx = [slice(None)] * c.nvars
                idx[axis] = i
                out[tuple(idx)] += s * coef
    return MPoly(out, out_off).trim()


def series_in(ring: MPolyRing, terms: dict, order: int) -> TruncSeries:
    """Build a polynomial-coefficient series from {(n, e_1, ..., e_k): c}."""
    buckets: dict[int, dict] = {}
    for key, c in terms.items():
        n, rest = key[0], tuple(key[1:])
        if n < order:
            buckets.setdefault(n, {})[rest] = c
    return TruncSeries._raw(
        [ring.reduce(MPoly.from_dict(buckets.get(n, {}), ring.nvars)) for n in range(order)], order, ring
    )
