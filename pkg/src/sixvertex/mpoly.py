"""Dense multivariate Laurent polynomials over Q with fast multiplication.

Coefficients live in a numpy ``object`` array holding Python ``int`` or
``Fraction`` values; ``offset[k]`` is the exponent of index 0 along axis k,
so negative exponents (Laurent in any variable) cost nothing extra.

Multiplication goes through Kronecker substitution: both operands are packed
into single big integers, multiplied once, and unpacked. The packing is
vectorised through 64-bit words so the Python-level work stays linear in the
number of coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

import gmpy2
import numpy as np

_GMP_THRESHOLD_BITS = 200_000
_NAIVE_MAX_TERMS = 6
_MASK64 = (1 << 64) - 1


def zeros(shape: Sequence[int]) -> np.ndarray:
    out = np.empty(tuple(shape), dtype=object)
    out.fill(0)
    return out


def as_object_array(values) -> np.ndarray:
    arr = np.array(values, dtype=object)
    return arr


def _lcm_of_denominators(arr: np.ndarray) -> int:
    d = 1
    for v in arr.flat:
        if isinstance(v, Fraction):
            den = v.denominator
            if den != 1:
                d = d * den // gcd(d, den)
    return d


def _to_integers(arr: np.ndarray) -> tuple[np.ndarray, int]:
    den = _lcm_of_denominators(arr)
    if den == 1:
        if any(isinstance(v, Fraction) for v in arr.flat):
            arr = np.frompyfunc(int, 1, 1)(arr) if arr.size else arr
        return arr, 1
    scaled = np.frompyfunc(lambda v: int(v * den), 1, 1)(arr)
    return scaled, den


def _normalise_fraction(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


_normalise = np.frompyfunc(_normalise_fraction, 1, 1)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(max(abs(int(v)) for v in (arr.max(), arr.min())))


def _pack(flat: np.ndarray, words: int) -> int:
    """Pack signed digits (|d| < 2^(64*words-1)) into one integer."""
    half = 1 << (64 * words - 1)
    shifted = flat + half
    cols = np.empty((flat.size, words), dtype=np.uint64)
    for j in range(words):
        cols[:, j] = ((shifted >> (64 * j)) & _MASK64).astype(np.uint64)
    raw = int.from_bytes(cols.tobytes(), "little")
    return raw - _offset(flat.size, words)


_OFFSET_CACHE: dict[tuple[int, int], int] = {}


def _offset(length: int, words: int) -> int:
    key = (length, words)
    val = _OFFSET_CACHE.get(key)
    if val is None:
        digit = (1 << (64 * words - 1)).to_bytes(8 * words, "little")
        val = int.from_bytes(digit * length, "little")
        if length * words < 1 << 16:
            _OFFSET_CACHE[key] = val
    return val


def _unpack(value: int, length: int, words: int) -> np.ndarray:
    half = 1 << (64 * words - 1)
    raw = value + _offset(length, words)
    buf = raw.to_bytes(8 * words * length, "little")
    cols = np.frombuffer(buf, dtype="<u8").reshape(length, words)
    out = cols[:, 0].astype(object)
    for j in range(1, words):
        out = out + (cols[:, j].astype(object) << (64 * j))
    return out - half


def _naive_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if np.count_nonzero(a != 0) > np.count_nonzero(b != 0):
        a, b = b, a
    shape = tuple(x + y - 1 for x, y in zip(a.shape, b.shape))
    out = zeros(shape)
    for idx in zip(*np.nonzero(a != 0)):
        v = a[idx]
        sl = tuple(slice(i, i + n) for i, n in zip(idx, b.shape))
        out[sl] += v * b
    return out


def kron_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Full product of two dense coefficient arrays of equal rank."""
    if a.ndim != b.ndim:
        raise ValueError("rank mismatch")
    if a.size == 0 or b.size == 0:
        return zeros(tuple(max(x + y - 1, 0) for x, y in zip(a.shape, b.shape)))
    if min(a.size, b.size) <= _NAIVE_MAX_TERMS:
        return _normalise(_naive_mul(a, b))
    ai, da = _to_integers(a)
    bi, db = _to_integers(b)
    ma, mb = _max_abs(ai), _max_abs(bi)
    if ma == 0 or mb == 0:
        return zeros(tuple(x + y - 1 for x, y in zip(a.shape, b.shape)))
    rshape = tuple(x + y - 1 for x, y in zip(a.shape, b.shape))
    bits = ma.bit_length() + mb.bit_length() + min(a.size, b.size).bit_length() + 2
    words = -(-bits // 64)

    def embed(x: np.ndarray) -> np.ndarray:
        if x.ndim == 1:
            return x
        padded = zeros((x.shape[0],) + rshape[1:])
        padded[tuple(slice(0, n) for n in x.shape)] = x
        return padded

    pa = _pack(embed(ai).ravel(), words)
    pb = _pack(embed(bi).ravel(), words)
    if (abs(pa).bit_length() + abs(pb).bit_length()) > _GMP_THRESHOLD_BITS:
        prod_val = int(gmpy2.mpz(pa) * gmpy2.mpz(pb))
    else:
        prod_val = pa * pb
    flat = _unpack(prod_val, prod(rshape), words)
    out = flat.reshape(rshape)
    den = da * db
    if den != 1:
        out = _normalise(np.frompyfunc(lambda v: Fraction(v, den), 1, 1)(out))
    return out


class MPoly:
    """Dense multivariate Laurent polynomial.

    ``c[i_0, ..., i_{k-1}]`` is the coefficient of the monomial with exponents
    ``offset[j] + i_j``.
    """

    __slots__ = ("c", "offset")

    def __init__(self, coeffs, offset: Iterable[int] | None = None):
        c = coeffs if isinstance(coeffs, np.ndarray) and coeffs.dtype == object else as_object_array(coeffs)
        self.c = c
        self.offset = tuple(offset) if offset is not None else (0,) * c.ndim
        if len(self.offset) != c.ndim:
            raise ValueError("offset length must equal the number of variables")

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls(zeros((0,) * nvars), (0,) * nvars)

    @classmethod
    def const(cls, value, nvars: int) -> MPoly:
        if value == 0:
            return cls.zero(nvars)
        arr = zeros((1,) * nvars)
        arr[(0,) * nvars] = value
        return cls(arr)

    @classmethod
    def monomial(cls, exps: Sequence[int], value=1) -> MPoly:
        arr = zeros((1,) * len(exps))
        arr[(0,) * len(exps)] = value
        return cls(arr, exps).trim()

    @classmethod
    def from_dict(cls, terms: dict, nvars: int) -> MPoly:
        terms = {tuple(k): v for k, v in terms.items() if v != 0}
        if not terms:
            return cls.zero(nvars)
        lo = [min(k[i] for k in terms) for i in range(nvars)]
        hi = [max(k[i] for k in terms) for i in range(nvars)]
        arr = zeros([h - l + 1 for l, h in zip(lo, hi)])
        for k, v in terms.items():
            arr[tuple(e - l for e, l in zip(k, lo))] += v
        return cls(arr, lo).trim()

    # basic properties ---------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.c.ndim

    def is_zero(self) -> bool:
        return self.c.size == 0 or not np.any(self.c != 0)

    def __bool__(self):
        return not self.is_zero()

    def trim(self) -> MPoly:
        """Drop zero border slabs so the array is the tight bounding box."""
        c = self.c
        if c.ndim == 0:
            return self
        if c.size == 0:
            return MPoly.zero(self.nvars)
        nz = c != 0
        if not nz.any():
            return MPoly.zero(self.nvars)
        sl = []
        off = []
        for ax in range(c.ndim):
            other = tuple(i for i in range(c.ndim) if i != ax)
            hit = np.nonzero(nz.any(axis=other) if other else nz)[0]
            lo, hi = int(hit[0]), int(hit[-1])
            sl.append(slice(lo, hi + 1))
            off.append(self.offset[ax] + lo)
        return MPoly(c[tuple(sl)], off)

    def bounds(self, axis: int) -> tuple[int, int]:
        """(min, max) exponent along ``axis`` of the stored box."""
        return self.offset[axis], self.offset[axis] + self.c.shape[axis] - 1

    def degree(self, axis: int) -> int:
        t = self.trim()
        if t.c.size == 0:
            return -1
        return t.offset[axis] + t.c.shape[axis] - 1

    def low_degree(self, axis: int) -> int:
        t = self.trim()
        if t.c.size == 0:
            return 0
        return t.offset[axis]

    def coeff(self, exps: Sequence[int]):
        idx = tuple(e - o for e, o in zip(exps, self.offset))
        if any(i < 0 or i >= n for i, n in zip(idx, self.c.shape)):
            return 0
        return self.c[idx]

    def terms(self) -> dict:
        out = {}
        for idx in zip(*np.nonzero(self.c != 0)):
            out[tuple(int(i) + o for i, o in zip(idx, self.offset))] = self.c[idx]
        return out

    def __repr__(self):
        return f"MPoly({self.terms()!r})"

    # arithmetic -----------------------------------------------------------

    def _aligned(self, other: MPoly) -> tuple[np.ndarray, np.ndarray, tuple[int, ...]]:
        if self.c.size == 0:
            return zeros(other.c.shape), other.c, other.offset
        if other.c.size == 0:
            return self.c, zeros(self.c.shape), self.offset
        lo = [min(a, b) for a, b in zip(self.offset, other.offset)]
        hi = [max(a + n, b + m) for a, n, b, m in zip(self.offset, self.c.shape, other.offset, other.c.shape)]
        shape = [h - l for l, h in zip(lo, hi)]

        def place(p: MPoly) -> np.ndarray:
            if list(p.offset) == lo and list(p.c.shape) == shape:
                return p.c
            arr = zeros(shape)
            arr[tuple(slice(o - l, o - l + n) for o, l, n in zip(p.offset, lo, p.c.shape))] = p.c
            return arr

        return place(self), place(other), tuple(lo)

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        a, b, off = self._aligned(other)
        return MPoly(a + b, off)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        a, b, off = self._aligned(other)
        return MPoly(a - b, off)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MPoly(-self.c, self.offset)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            if self.c.size == 0 or other.c.size == 0:
                return MPoly.zero(self.nvars)
            prod_c = kron_mul(self.c, other.c)
            return MPoly(prod_c, [a + b for a, b in zip(self.offset, other.offset)])
        if other == 0:
            return MPoly.zero(self.nvars)
        return MPoly(_normalise(self.c * other) if isinstance(other, Fraction) else self.c * other, self.offset)

    __rmul__ = __mul__

    def scale_div(self, d) -> MPoly:
        """Divide every coefficient by the scalar ``d`` exactly."""
        return MPoly(_normalise(np.frompyfunc(lambda v: Fraction(v) / d, 1, 1)(self.c)) if self.c.size else self.c,
                     self.offset)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction)):
                other = MPoly.const(other, self.nvars)
            else:
                return NotImplemented
        d = self - other
        return d.is_zero()

    __hash__ = None

    # structural operations --------------------------------------------

    def shift(self, exps: Sequence[int]) -> MPoly:
        """Multiply by the monomial with exponents ``exps``."""
        return MPoly(self.c, [o + e for o, e in zip(self.offset, exps)])

    def truncate(self, axis: int, lo: int | None = None, hi: int | None = None) -> MPoly:
        """Keep only monomials with lo <= exponent <= hi along ``axis``."""
        start, stop = 0, self.c.shape[axis]
        if lo is not None:
            start = max(start, lo - self.offset[axis])
        if hi is not None:
            stop = min(stop, hi - self.offset[axis] + 1)
        if stop <= start:
            return MPoly.zero(self.nvars)
        sl = [slice(None)] * self.nvars
        sl[axis] = slice(start, stop)
        off = list(self.offset)
        off[axis] += start
        return MPoly(self.c[tuple(sl)], off)

    def slice(self, axis: int, exp: int) -> MPoly:
        """Coefficient of var_axis^exp, as a polynomial in the remaining variables."""
        i = exp - self.offset[axis]
        rest = [o for k, o in enumerate(self.offset) if k != axis]
        if i < 0 or i >= self.c.shape[axis]:
            return MPoly.zero(self.nvars - 1)
        sub = np.take(self.c, i, axis=axis)
        if not isinstance(sub, np.ndarray):
            arr = zeros(())
            arr[()] = sub
            sub = arr
        return MPoly(sub, rest)

    def reflect(self, axis: int) -> MPoly:
        """Substitute var_axis -> 1/var_axis."""
        off = list(self.offset)
        off[axis] = -(self.offset[axis] + self.c.shape[axis] - 1)
        return MPoly(np.flip(self.c, axis=axis), off)

    def insert_axis(self, axis: int) -> MPoly:
        """Add a new variable (appearing to the power 0) at position ``axis``."""
        off = list(self.offset)
        off.insert(axis, 0)
        return MPoly(np.expand_dims(self.c, axis), off)

    def transpose(self, axes: Sequence[int]) -> MPoly:
        return MPoly(np.transpose(self.c, axes), [self.offset[a] for a in axes])

    def map_coeffs(self, fn) -> MPoly:
        if self.c.size == 0:
            return self
        return MPoly(np.frompyfunc(fn, 1, 1)(self.c), self.offset)

    def evaluate(self, axis: int, value) -> MPoly:
        """Substitute a scalar for one variable."""
        out = MPoly.zero(self.nvars - 1)
        lo, hi = self.bounds(axis)
        for e in range(lo, hi + 1):
            s = self.slice(axis, e)
            if s:
                w = value ** e if e >= 0 else Fraction(1) / value ** (-e)
                out = out + s * w
        return out

    def scalar(self):
        """Value of a polynomial in zero variables (or the constant term)."""
        return self.coeff((0,) * self.nvars)
