"""Fixed-size 3x3 real linear algebra for projective matrix work.

Matrices are tuples of three row-tuples.  Everything here is written
against plain arithmetic so dual numbers flow through unchanged; no
array library is involved.  Eigenvalues of a 3x3 matrix come from the
characteristic cubic solved in closed form (trigonometric branch for
three real roots), with a structural fast path for triangular input.
"""

import math
from fractions import Fraction

from .dual import Dual, value_of

IDENTITY3 = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))

_TRIANGULAR_TOL = 1e-12
_DET_TOL = 1e-12


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_scale(a, s):
    return tuple(tuple(a[i][j] * s for j in range(3)) for i in range(3))


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


def transpose(a):
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def det3(m):
    """Determinant by cofactor expansion along the first row."""
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def adjugate(m):
    return (
        (m[1][1] * m[2][2] - m[1][2] * m[2][1],
         m[0][2] * m[2][1] - m[0][1] * m[2][2],
         m[0][1] * m[1][2] - m[0][2] * m[1][1]),
        (m[1][2] * m[2][0] - m[1][0] * m[2][2],
         m[0][0] * m[2][2] - m[0][2] * m[2][0],
         m[0][2] * m[1][0] - m[0][0] * m[1][2]),
        (m[1][0] * m[2][1] - m[1][1] * m[2][0],
         m[0][1] * m[2][0] - m[0][0] * m[2][1],
         m[0][0] * m[1][1] - m[0][1] * m[1][0]),
    )


def mat_inv(m):
    """Inverse via the adjugate; raises on a singular matrix."""
    d = det3(m)
    _check_nonsingular(m, d)
    return mat_scale(adjugate(m), 1.0 / d)


def _max_abs(m):
    return max(abs(value_of(m[i][j])) for i in range(3) for j in range(3))


def _check_nonsingular(m, d):
    scale = _max_abs(m)
    if scale == 0.0 or abs(value_of(d)) <= _DET_TOL * scale ** 3:
        raise ValueError("singular matrix")


def normalize_sl3(m):
    """Scale m by the real cube root of its determinant to reach det 1.

    The real cube root of a nonzero real is unique, so this picks out a
    canonical representative of the projective class.
    """
    d = det3(m)
    _check_nonsingular(m, d)
    if not isinstance(d, Dual):
        c = math.copysign(abs(d) ** (1.0 / 3.0), d)
    else:
        # dual-valued determinant; sign taken from the value part
        from .dual import exp, log
        if value_of(d) < 0:
            c = -exp(log(-d) / 3.0)
        else:
            c = exp(log(d) / 3.0)
    return mat_scale(m, 1.0 / c)


def _triangular_diag(m):
    # strict structural zeros, not approximate ones from cancellation
    tol = _TRIANGULAR_TOL * (1.0 + _max_abs(m))
    lower = max(abs(value_of(m[1][0])), abs(value_of(m[2][0])), abs(value_of(m[2][1])))
    upper = max(abs(value_of(m[0][1])), abs(value_of(m[0][2])), abs(value_of(m[1][2])))
    if lower <= tol or upper <= tol:
        return (m[0][0], m[1][1], m[2][2])
    return None


def eigenvalues_real3(m, tol=1e-9):
    """The three real eigenvalues of m, ascending.

    Triangular matrices are recognized structurally and read off the
    diagonal.  Otherwise the characteristic cubic
    lam^3 - tr lam^2 + q lam - det is solved by the trigonometric
    method; a complex conjugate pair raises an error.
    """
    diag = _triangular_diag(m)
    if diag is not None:
        return tuple(sorted(value_of(x) for x in diag))

    # Entries are dyadic rationals, so the invariants can be accumulated
    # exactly and rounded once.  That matters when large entries cancel
    # down to order-one invariants: the plain double determinant of such
    # a matrix loses enough digits to drag clustered eigenvalues off by
    # far more than roundoff.
    e = [[Fraction(value_of(x)) for x in row] for row in m]
    tr = float(e[0][0] + e[1][1] + e[2][2])
    # sum of principal 2x2 minors
    q2 = float(
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
        + e[0][0] * e[2][2] - e[0][2] * e[2][0]
        + e[1][1] * e[2][2] - e[1][2] * e[2][1])
    d = float(
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
        - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
        + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]))

    # depressed cubic y^3 + p y + r with lam = y + tr/3
    p = q2 - tr * tr / 3.0
    r = -2.0 * tr ** 3 / 27.0 + tr * q2 / 3.0 - d
    disc = 4.0 * p ** 3 + 27.0 * r ** 2
    scale = 4.0 * abs(p) ** 3 + 27.0 * r ** 2 + 1e-300
    if disc > tol * scale:
        raise ValueError("complex spectrum")

    if abs(p) ** 3 <= 1e-300 * scale:
        # triple root (p and r both vanish at this tolerance)
        roots = [tr / 3.0] * 3
    else:
        j = math.sqrt(-p / 3.0)
        arg = 3.0 * r / (2.0 * p * j)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg)
        roots = [2.0 * j * math.cos((theta - 2.0 * math.pi * k) / 3.0) + tr / 3.0
                 for k in range(3)]

    # The trig roots carry absolute error ~eps*max|lam|, which is a poor
    # relative error for a small eigenvalue of a badly scaled matrix.
    # Two Newton steps on the characteristic cubic restore relative
    # accuracy there; the step-size guard leaves clustered roots alone.
    polished = []
    for lam in roots:
        for _ in range(2):
            dp = (3.0 * lam - 2.0 * tr) * lam + q2
            if dp == 0.0:
                break
            step = (((lam - tr) * lam + q2) * lam - d) / dp
            if not math.isfinite(step) or abs(step) > 0.1 * (1.0 + abs(lam)):
                break
            lam -= step
        polished.append(lam)
    return tuple(sorted(polished))


def projectively_equal(a, b, tol=1e-9):
    """True iff a and b agree entrywise after SL(3) normalization.

    In SL(3,R) there is no residual sign freedom (-I has determinant
    -1), so plain entrywise comparison suffices.
    """
    na = normalize_sl3(a)
    nb = normalize_sl3(b)
    worst = max(abs(value_of(na[i][j] - nb[i][j])) for i in range(3) for j in range(3))
    return worst <= tol


def projective_distance(a, b):
    """Max-entry distance of the SL(3) normalizations of a and b."""
    na = normalize_sl3(a)
    nb = normalize_sl3(b)
    return max(abs(value_of(na[i][j] - nb[i][j])) for i in range(3) for j in range(3))
