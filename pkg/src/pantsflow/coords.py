"""Coordinates on framed structures over the three-holed sphere.

A structure is pinned down by eight positive numbers: six edge
coordinates sigma_1..sigma_6 and two triangle coordinates tau_1, tau_2.
Six products of them are conserved by every flow (the Casimir
functions); fixing those six values cuts out a two-dimensional leaf
charted by (sigma_1, tau_1).  leaf_embed reconstructs the remaining
coordinates from a chart point, and fuchsian_point returns the
distinguished hyperbolic structure for a triple of boundary lengths.
"""

import json
import math

from .dual import powf, sqrt, value_of


def _check_positive(values, what):
    for x in values:
        if not (value_of(x) > 0.0):
            raise ValueError("%s must be strictly positive" % what)


class FGCoords:
    """The eight positive coordinates (sigma_1..sigma_6, tau_1, tau_2)."""

    __slots__ = ("sigma", "tau")

    def __init__(self, sigma, tau):
        sigma = tuple(sigma)
        tau = tuple(tau)
        if len(sigma) != 6 or len(tau) != 2:
            raise ValueError("expected six sigma and two tau values")
        _check_positive(sigma, "sigma")
        _check_positive(tau, "tau")
        self.sigma = sigma
        self.tau = tau

    def as_tuple(self):
        return self.sigma + self.tau

    def __repr__(self):
        return "FGCoords(sigma=%r, tau=%r)" % (self.sigma, self.tau)

    def to_json(self):
        return json.dumps({"sigma": [_f17(x) for x in self.sigma],
                           "tau": [_f17(x) for x in self.tau]})

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(d["sigma"], d["tau"])


class LengthVector:
    """Casimir values (l_a1, l_a2, l_b1, l_b2, l_g1, l_g2), all positive."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        if len(values) != 6:
            raise ValueError("expected six leaf values")
        _check_positive(values, "leaf values")
        self.values = values

    def __repr__(self):
        return "LengthVector(%r)" % (self.values,)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


class LeafPoint:
    """A leaf (six Casimir values) plus the chart point (sigma_1, tau_1)."""

    __slots__ = ("leaf", "sigma1", "tau1")

    def __init__(self, leaf, sigma1, tau1):
        if not isinstance(leaf, LengthVector):
            leaf = LengthVector(leaf)
        _check_positive((sigma1, tau1), "chart coordinates")
        self.leaf = leaf
        self.sigma1 = sigma1
        self.tau1 = tau1

    def __repr__(self):
        return "LeafPoint(%r, %r, %r)" % (self.leaf, self.sigma1, self.tau1)

    def to_json(self):
        return json.dumps({"leaf": [_f17(x) for x in self.leaf],
                           "point": [_f17(self.sigma1), _f17(self.tau1)]})

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(LengthVector(d["leaf"]), d["point"][0], d["point"][1])


def _f17(x):
    # 17 significant digits round-trip any double exactly
    return float("%.17g" % value_of(x))


def casimirs(c):
    """The six conserved products of a coordinate tuple."""
    s1, s2, s3, s4, s5, s6 = c.sigma
    t1, t2 = c.tau
    return LengthVector((
        s1 * s4,
        t1 * t2 / (s2 * s3),
        s3 * s6,
        t1 * t2 / (s4 * s5),
        s2 * s5,
        t1 * t2 / (s1 * s6),
    ))


def leaf_embed(p):
    """Full coordinates of a chart point on its leaf.

    Inverts the Casimir map given (sigma_1, tau_1): the remaining six
    coordinates are fixed radical expressions in the leaf values, and
    casimirs(leaf_embed(p)) reproduces the leaf exactly.
    """
    la1, la2, lb1, lb2, lg1, lg2 = p.leaf
    s1 = p.sigma1
    t1 = p.tau1
    s2 = powf(la1 * lb2 * lg1, 2.0 / 3.0) / (s1 * powf(la2 * lb1 * lg2, 1.0 / 3.0))
    s3 = powf(lb1 * lg2, 2.0 / 3.0) * s1 / powf(la1 * la2 * lb2 * lg1, 1.0 / 3.0)
    s4 = la1 / s1
    s5 = powf(la2 * lb1 * lg1 * lg2, 1.0 / 3.0) * s1 / powf(la1 * lb2, 2.0 / 3.0)
    s6 = powf(la1 * la2 * lb1 * lb2 * lg1, 1.0 / 3.0) / (powf(lg2, 2.0 / 3.0) * s1)
    t2 = powf(la1 * la2 * lb1 * lb2 * lg1 * lg2, 1.0 / 3.0) / t1
    return FGCoords((s1, s2, s3, s4, s5, s6), (t1, t2))


def fuchsian_point(la, lb, lg):
    """Coordinates of the hyperbolic structure with boundary data (la, lb, lg).

    Both triangle coordinates are 1 and the edge coordinates come in
    equal pairs, s1 = sqrt(la*lg/lb) and cyclic.  The paired Casimirs
    of the result are reciprocal (l_x2 = 1/l_x1 for each boundary x),
    so the leaf is fuchsian_leaf(la, lb, lg).
    """
    _check_positive((la, lb, lg), "boundary data")
    s1 = sqrt(la * lg / lb)
    s3 = sqrt(la * lb / lg)
    s5 = sqrt(lb * lg / la)
    return FGCoords((s1, s1, s3, s3, s5, s5), (1.0, 1.0))


def fuchsian_leaf(la, lb, lg):
    """The length vector of the leaf through fuchsian_point(la, lb, lg)."""
    return LengthVector((la, 1.0 / la, lb, 1.0 / lb, lg, 1.0 / lg))


def unipotent_leaf():
    """The leaf where every Casimir equals one."""
    return LengthVector((1.0,) * 6)


def chart_point(c):
    """Project full coordinates to their (leaf, sigma_1, tau_1) chart."""
    return LeafPoint(casimirs(c), c.sigma[0], c.tau[0])
