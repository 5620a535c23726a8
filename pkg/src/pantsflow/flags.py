"""Flags in the real projective plane and their invariants.

A flag is an incident (point, line) pair.  Points and lines live in
homogeneous coordinates; equality is equality up to scale.  The two
four-flag cross ratios and the triple ratio are the basic projective
invariants, and cross_ratio_concurrent realizes the classical cross
ratio of four concurrent lines by cutting the pencil with an auxiliary
transversal, which the invariants can be checked against.
"""

import math

from .dual import value_of

TRANSVERSALITY_TOL = 1e-10
INCIDENCE_TOL = 1e-10


def _norm3(v):
    return math.sqrt(sum(value_of(x) ** 2 for x in v))


def _normalize(v):
    """Unit-norm representative with first nonzero coordinate positive."""
    n = _norm3(v)
    if n == 0.0:
        raise ValueError("zero homogeneous vector")
    w = tuple(x / n for x in v)
    for x in w:
        if abs(value_of(x)) > 1e-14:
            if value_of(x) < 0:
                w = tuple(-y for y in w)
            break
    return w


def cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot3(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


class ProjPoint:
    """Point of the projective plane, stored as a normalized 3-vector."""

    def __init__(self, coords):
        self.coords = _normalize(tuple(float(x) for x in coords))

    def __repr__(self):
        return "ProjPoint(%r)" % (self.coords,)


class ProjLine:
    """Line of the projective plane, stored as a normalized covector."""

    def __init__(self, coeffs):
        self.coeffs = _normalize(tuple(float(x) for x in coeffs))

    def __repr__(self):
        return "ProjLine(%r)" % (self.coeffs,)

    def __call__(self, p):
        return dot3(self.coeffs, p.coords)


class Flag:
    """Incident (point, line) pair."""

    def __init__(self, point, line):
        if not isinstance(point, ProjPoint):
            point = ProjPoint(point)
        if not isinstance(line, ProjLine):
            line = ProjLine(line)
        if abs(line(point)) > INCIDENCE_TOL:
            raise ValueError("point and line are not incident")
        self.point = point
        self.line = line

    def __repr__(self):
        return "Flag(%r, %r)" % (self.point, self.line)


def join(p, q):
    """Line through two points."""
    c = cross3(p.coords, q.coords)
    return ProjLine(c)


def _pencil_parameters(lines, p, transversal=None):
    """Intersection parameters of concurrent lines with a transversal.

    Each line of the pencil meets the transversal in a point a*u + b*v
    for a fixed basis (u, v) of the transversal, and (a, b) is the
    homogeneous parameter used for the cross ratio.  The resulting
    cross ratio does not depend on the transversal or the basis.
    """
    if transversal is None:
        # the coordinate line {x_k = 0} misses p when p_k is the largest
        # coordinate of the unit vector p (|p_k| >= 1/sqrt(3))
        k = max(range(3), key=lambda idx: abs(p.coords[idx]))
        h = tuple(1.0 if idx == k else 0.0 for idx in range(3))
    else:
        h = transversal.coeffs
        if abs(dot3(h, p.coords)) <= INCIDENCE_TOL:
            raise ValueError("transversal passes through the pencil point")
    # orthogonal basis of the points on h
    e = tuple(1.0 if idx == min(range(3), key=lambda i: abs(h[i])) else 0.0
              for idx in range(3))
    u = cross3(h, e)
    v = cross3(h, u)
    params = []
    for l in lines:
        x = cross3(l.coeffs, h)  # intersection point of l with h
        params.append((dot3(x, u) / dot3(u, u), dot3(x, v) / dot3(v, v)))
    return params


def cross_ratio_concurrent(l1, l2, l3, l4, p, transversal=None):
    """Cross ratio of four lines through the common point p.

    Convention: parameters (x1, x2, x3, x4) on a transversal give
    (x1-x2)(x3-x4) / ((x1-x4)(x2-x3)), so (inf, -1, 0, x) maps to x.
    The value does not depend on the transversal; one can be passed in
    to exercise exactly that.
    """
    lines = (l1, l2, l3, l4)
    for l in lines:
        if abs(l(p)) > INCIDENCE_TOL:
            raise ValueError("lines are not concurrent")
    for i in range(4):
        for j in range(i + 1, 4):
            if _norm3(cross3(lines[i].coeffs, lines[j].coeffs)) <= TRANSVERSALITY_TOL:
                raise ValueError("degenerate pencil")
    (a1, b1), (a2, b2), (a3, b3), (a4, b4) = _pencil_parameters(lines, p, transversal)
    num = (a1 * b2 - a2 * b1) * (a3 * b4 - a4 * b3)
    den = (a1 * b4 - a4 * b1) * (a2 * b3 - a3 * b2)
    return num / den


def _require_pairing(x, what):
    if abs(value_of(x)) <= TRANSVERSALITY_TOL:
        raise ValueError("non-generic flags")
    return x


def cr1(f1, f2, f3, f4):
    """First cross ratio of a transverse four-flag tuple.

    -l1(p2) (p1 p3)(p4) / ( l1(p4) (p1 p3)(p2) ) where (p1 p3) is the
    line joining the first and third points.
    """
    l13 = join(f1.point, f3.point)
    num = _require_pairing(f1.line(f2.point), "l1(p2)") * _require_pairing(l13(f4.point), "(p1p3)(p4)")
    den = _require_pairing(f1.line(f4.point), "l1(p4)") * _require_pairing(l13(f2.point), "(p1p3)(p2)")
    return -num / den


def cr2(f1, f2, f3, f4):
    """Second cross ratio of a transverse four-flag tuple."""
    l13 = join(f1.point, f3.point)
    num = _require_pairing(f3.line(f4.point), "l3(p4)") * _require_pairing(l13(f2.point), "(p1p3)(p2)")
    den = _require_pairing(f3.line(f2.point), "l3(p2)") * _require_pairing(l13(f4.point), "(p1p3)(p4)")
    return -num / den


def triple_ratio(f1, f2, f3):
    """Triple ratio l1(p2) l2(p3) l3(p1) / ( l1(p3) l2(p1) l3(p2) )."""
    num = (_require_pairing(f1.line(f2.point), "l1(p2)")
           * _require_pairing(f2.line(f3.point), "l2(p3)")
           * _require_pairing(f3.line(f1.point), "l3(p1)"))
    den = (_require_pairing(f1.line(f3.point), "l1(p3)")
           * _require_pairing(f2.line(f1.point), "l2(p1)")
           * _require_pairing(f3.line(f2.point), "l3(p2)"))
    return num / den


def apply_matrix_point(m, p):
    """Image of a point under an invertible matrix."""
    x = p.coords
    return ProjPoint(tuple(sum(m[i][k] * x[k] for k in range(3)) for i in range(3)))


def apply_matrix_line(m_inv, l):
    """Image of a line under the matrix whose inverse is given.

    Covectors transform by the inverse transpose, so passing the
    inverse avoids recomputing it per call.
    """
    c = l.coeffs
    return ProjLine(tuple(sum(m_inv[k][i] * c[k] for k in range(3)) for i in range(3)))


def apply_matrix_flag(m, m_inv, f):
    return Flag(apply_matrix_point(m, f.point), apply_matrix_line(m_inv, f.line))


def standard_quadruple(x, y, z, w):
    """The four-flag configuration with free parameters x, y, z, w.

    p1=(1,0,0), l1=[0,1,1]; p2=(0,1,0), l2=[1,0,1]; p3=(0,0,1),
    l3=[1,x,0]; p4=(1,y,z), l4=[-wz-y,1,w].  All parameters nonzero.
    Its invariants are cr1 = -y/(y+z) and cr2 = -(1+xy)/(xy).
    """
    for name, val in (("x", x), ("y", y), ("z", z), ("w", w)):
        if val == 0:
            raise ValueError("parameter %s must be nonzero" % name)
    f1 = Flag((1.0, 0.0, 0.0), (0.0, 1.0, 1.0))
    f2 = Flag((0.0, 1.0, 0.0), (1.0, 0.0, 1.0))
    f3 = Flag((0.0, 0.0, 1.0), (1.0, x, 0.0))
    f4 = Flag((1.0, y, z), (-w * z - y, 1.0, w))
    return f1, f2, f3, f4
