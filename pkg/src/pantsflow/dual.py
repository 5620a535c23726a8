"""Forward-mode automatic differentiation with dual numbers.

A Dual carries a value and one derivative component.  Nesting Duals
(a Dual whose parts are themselves Duals) gives exact second
derivatives, which is how the fixed-point solver obtains Hessians.
All the math helpers below accept plain floats as well, so the same
closed-form expressions can be evaluated with or without derivative
tracking.
"""

import math


class Dual:
    """Number of the form a + b*eps with eps**2 = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0.0):
        self.a = a
        self.b = b

    def __repr__(self):
        return "Dual(%r, %r)" % (self.a, self.b)

    # arithmetic; plain numbers promote to constants (zero derivative)

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.a + other.a, self.b + other.b)
        return Dual(self.a + other, self.b)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.a - other.a, self.b - other.b)
        return Dual(self.a - other, self.b)

    def __rsub__(self, other):
        return Dual(other - self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.a * other.a, self.a * other.b + self.b * other.a)
        return Dual(self.a * other, self.b * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            # (a + b e)/(c + d e) = a/c + (b - (a/c) d)/c e
            q = self.a / other.a
            return Dual(q, (self.b - q * other.b) / other.a)
        return Dual(self.a / other, self.b / other)

    def __rtruediv__(self, other):
        q = other / self.a
        return Dual(q, -q * self.b / self.a)

    def __pow__(self, n):
        # integer powers only; fractional powers go through exp/log
        if n == 0:
            return Dual(1.0, 0.0 * self.b)
        if n < 0:
            return 1.0 / (self ** (-n))
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    # comparisons look at values only: branch decisions in generic code

    def __lt__(self, other):
        return value_of(self) < value_of(other)

    def __le__(self, other):
        return value_of(self) <= value_of(other)

    def __gt__(self, other):
        return value_of(self) > value_of(other)

    def __ge__(self, other):
        return value_of(self) >= value_of(other)


def value_of(x):
    """Strip all derivative parts, returning the underlying float."""
    while isinstance(x, Dual):
        x = x.a
    return x


def exp(x):
    if isinstance(x, Dual):
        e = exp(x.a)
        return Dual(e, x.b * e)
    return math.exp(x)


def log(x):
    if isinstance(x, Dual):
        return Dual(log(x.a), x.b / x.a)
    return math.log(x)


def sqrt(x):
    if isinstance(x, Dual):
        s = sqrt(x.a)
        return Dual(s, x.b / (2.0 * s))
    return math.sqrt(x)


def cbrt(x):
    # positive arguments only; exp(log/3) keeps the dual chain exact
    return exp(log(x) / 3.0)


def cos(x):
    if isinstance(x, Dual):
        return Dual(cos(x.a), -x.b * sin(x.a))
    return math.cos(x)


def sin(x):
    if isinstance(x, Dual):
        return Dual(sin(x.a), x.b * cos(x.a))
    return math.sin(x)


def powf(x, p):
    """x**p for positive x and constant real p, dual-capable."""
    return exp(p * log(x))


def gradient2(f, x, y):
    """Value and gradient of f(x, y) by two dual evaluations."""
    fx = f(Dual(x, 1.0), Dual(y, 0.0))
    fy = f(Dual(x, 0.0), Dual(y, 1.0))
    return value_of(fx), (fx.b, fy.b)


def hessian2(f, x, y):
    """Value, gradient and symmetric Hessian of f(x, y).

    Uses nested duals: the epsilon-epsilon coefficient of
    f(x + e1 u, y + e2 w) is the mixed second derivative along (u, w).
    """
    fxx = f(Dual(Dual(x, 1.0), Dual(1.0, 0.0)), Dual(Dual(y, 0.0), Dual(0.0, 0.0)))
    fxy = f(Dual(Dual(x, 1.0), Dual(0.0, 0.0)), Dual(Dual(y, 0.0), Dual(1.0, 0.0)))
    fyy = f(Dual(Dual(x, 0.0), Dual(0.0, 0.0)), Dual(Dual(y, 1.0), Dual(1.0, 0.0)))
    val = value_of(fxx)
    gx = value_of(fxx.a.b)
    gy = value_of(fyy.a.b)
    hxx = value_of(fxx.b.b)
    hxy = value_of(fxy.b.b)
    hyy = value_of(fyy.b.b)
    return val, (gx, gy), (hxx, hxy, hyy)
