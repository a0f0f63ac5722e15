"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals a + bi."""

from fractions import Fraction

Rational = Fraction

_ZERO = Fraction(0)


def _coerce(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational._make(Fraction(x), _ZERO)
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact; use GaussRational")
    return NotImplemented


class GaussRational:
    """Element of Q(i). Immutable; both parts are canonical ``Fraction`` s."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact; pass int, Fraction or str")
        if isinstance(re, GaussRational):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    def __reduce__(self):
        return (GaussRational, (self.re, self.im))

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussRational._make(a * c, _ZERO)
        return GaussRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return GaussRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero in Q(i)")
        if not self.im:
            return GaussRational._make(1 / self.re, _ZERO)
        n = self.norm_sq()
        return GaussRational._make(self.re / n, -self.im / n)

    def conjugate(self):
        return GaussRational._make(self.re, -self.im)

    def norm_sq(self):
        """x * conj(x) as a nonnegative Fraction."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self):
        return not self.im

    # comparison / hashing

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRational({format_coeff(self)!r})"

    def __str__(self):
        return format_coeff(self)


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def conjugate(a):
    return _coerce(a).conjugate()


def _fmt_frac(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_coeff(c):
    """Render a scalar in the polynomial grammar, e.g. ``-1/2``, ``3*i``, ``(1 - i)``."""
    c = _coerce(c)
    re, im = c.re, c.im
    if not im:
        return _fmt_frac(re)
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = f"{_fmt_frac(im)}*i"
    if not re:
        return imag
    sign = "-" if im < 0 else "+"
    mag = imag[1:] if imag.startswith("-") else imag
    return f"({_fmt_frac(re)} {sign} {mag})"
