"""Second-order forward-mode automatic differentiation.

A :class:`Jet2` carries ``(value, first derivative, second derivative)`` of a
scalar function of one variable.  Arithmetic follows the truncated Taylor
rules, so composing jets gives exact first and second derivatives.
"""
import math

from .errors import DomainError


class Jet2:
    """Truncated Taylor triple ``(val, d1, d2)``."""

    __slots__ = ("val", "d1", "d2")

    def __init__(self, val, d1=0.0, d2=0.0):
        self.val = float(val)
        self.d1 = float(d1)
        self.d2 = float(d2)

    @classmethod
    def const(cls, c):
        return cls(c, 0.0, 0.0)

    @classmethod
    def var(cls, x):
        """Jet of the identity function at ``x``."""
        return cls(x, 1.0, 0.0)

    def __iter__(self):
        yield self.val
        yield self.d1
        yield self.d2

    def __repr__(self):
        return f"Jet2({self.val!r}, {self.d1!r}, {self.d2!r})"

    def __eq__(self, other):
        if not isinstance(other, Jet2):
            return NotImplemented
        return (self.val, self.d1, self.d2) == (other.val, other.d1, other.d2)

    def __hash__(self):
        return hash((self.val, self.d1, self.d2))

    def is_finite(self):
        return math.isfinite(self.val) and math.isfinite(self.d1) and math.isfinite(self.d2)

    def __neg__(self):
        return Jet2(-self.val, -self.d1, -self.d2)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.val + other.val, self.d1 + other.d1, self.d2 + other.d2)
        return Jet2(self.val + other, self.d1, self.d2)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.val - other.val, self.d1 - other.d1, self.d2 - other.d2)
        return Jet2(self.val - other, self.d1, self.d2)

    def __rsub__(self, other):
        return Jet2(other - self.val, -self.d1, -self.d2)

    def __mul__(self, other):
        if isinstance(other, Jet2):
            a, b = self, other
            return Jet2(
                a.val * b.val,
                a.val * b.d1 + a.d1 * b.val,
                a.val * b.d2 + 2.0 * a.d1 * b.d1 + a.d2 * b.val,
            )
        return Jet2(self.val * other, self.d1 * other, self.d2 * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet2):
            other = Jet2.const(other)
        b0 = other.val
        if b0 == 0.0:
            raise DomainError("division by zero")
        q0 = self.val / b0
        q1 = (self.d1 - q0 * other.d1) / b0
        q2 = (self.d2 - 2.0 * q1 * other.d1 - q0 * other.d2) / b0
        return Jet2(q0, q1, q2)

    def __rtruediv__(self, other):
        return Jet2.const(other) / self

    def __pow__(self, other):
        if isinstance(other, Jet2):
            if other.d1 == 0.0 and other.d2 == 0.0:
                return power_const(self, other.val)
            return power(self, other)
        return power_const(self, other)

    def __rpow__(self, other):
        return power(Jet2.const(other), self)


def _chain(x, f0, f1, f2):
    """Compose a scalar function with value/derivatives (f0, f1, f2) at x.val."""
    return Jet2(f0, f1 * x.d1, f2 * x.d1 * x.d1 + f1 * x.d2)


def _finite(j, name):
    if not j.is_finite():
        raise DomainError(f"{name} produced a non-finite result")
    return j


def sin(x):
    s, c = math.sin(x.val), math.cos(x.val)
    return _chain(x, s, c, -s)


def cos(x):
    s, c = math.sin(x.val), math.cos(x.val)
    return _chain(x, c, -s, -c)


def tan(x):
    c = math.cos(x.val)
    if c == 0.0:
        raise DomainError(f"tan undefined at {x.val!r}")
    t = math.tan(x.val)
    sec2 = 1.0 + t * t
    return _finite(_chain(x, t, sec2, 2.0 * t * sec2), "tan")


def asin(x):
    if not -1.0 < x.val < 1.0:
        raise DomainError(f"asin argument {x.val!r} outside (-1, 1)")
    r = 1.0 - x.val * x.val
    d1 = 1.0 / math.sqrt(r)
    return _chain(x, math.asin(x.val), d1, x.val * d1 / r)


def atan(x):
    r = 1.0 / (1.0 + x.val * x.val)
    return _chain(x, math.atan(x.val), r, -2.0 * x.val * r * r)


def sinh(x):
    try:
        s, c = math.sinh(x.val), math.cosh(x.val)
    except OverflowError:
        raise DomainError(f"sinh overflow at {x.val!r}") from None
    return _chain(x, s, c, s)


def cosh(x):
    try:
        s, c = math.sinh(x.val), math.cosh(x.val)
    except OverflowError:
        raise DomainError(f"cosh overflow at {x.val!r}") from None
    return _chain(x, c, s, c)


def exp(x):
    try:
        e = math.exp(x.val)
    except OverflowError:
        raise DomainError(f"exp overflow at {x.val!r}") from None
    return _finite(_chain(x, e, e, e), "exp")


def ln(x):
    if not x.val > 0.0:
        raise DomainError(f"ln argument {x.val!r} is not positive")
    inv = 1.0 / x.val
    return _finite(_chain(x, math.log(x.val), inv, -inv * inv), "ln")


def sqrt(x):
    if not x.val > 0.0:
        raise DomainError(f"sqrt argument {x.val!r} is not positive")
    r = math.sqrt(x.val)
    return _finite(_chain(x, r, 0.5 / r, -0.25 / (r * x.val)), "sqrt")


def abs_(x):
    if x.val == 0.0:
        raise DomainError("abs is not differentiable at 0")
    return x if x.val > 0.0 else -x


def power_const(x, p):
    """``x ** p`` for a constant exponent ``p``."""
    p = float(p)
    if p == 0.0:
        return Jet2.const(1.0)
    if p.is_integer():
        n = int(p)
        if x.val == 0.0 and n < 0:
            raise DomainError("zero raised to a negative power")
        if n == 1:
            return x
        try:
            f0 = x.val**n
            f1 = n * x.val ** (n - 1)
            f2 = n * (n - 1) * x.val ** (n - 2)
        except OverflowError:
            raise DomainError(f"power overflow at {x.val!r}") from None
        return _finite(_chain(x, f0, f1, f2), "power")
    if not x.val > 0.0:
        raise DomainError(f"non-integer power of non-positive base {x.val!r}")
    try:
        f0 = x.val**p
    except OverflowError:
        raise DomainError(f"power overflow at {x.val!r}") from None
    return _finite(_chain(x, f0, p * f0 / x.val, p * (p - 1.0) * f0 / (x.val * x.val)), "power")


def power(x, y):
    """``x ** y`` with a non-constant exponent, via exp(y ln x)."""
    return exp(y * ln(x))


FUNCTIONS = {
    "sin": sin,
    "cos": cos,
    "tan": tan,
    "asin": asin,
    "atan": atan,
    "sinh": sinh,
    "cosh": cosh,
    "ln": ln,
    "exp": exp,
    "sqrt": sqrt,
    "abs": abs_,
}
