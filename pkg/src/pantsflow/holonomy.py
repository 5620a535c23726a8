"""Holonomy reconstruction from coordinates.

The two elementary matrices T(x) and E(z, w) generate every holonomy:
words in the three boundary loops a, b, c are multiplied left to
right.  The three peripheral matrices also have closed-form entries
(a is upper triangular, c lower triangular) which this module uses
directly; the T/E product route is kept alongside as an independent
cross-check.  All arithmetic is dual-capable.
"""

import re

from .dual import cbrt, value_of
from .proj_linalg import IDENTITY3, eigenvalues_real3, mat_inv, mat_mul


def matrix_T(x):
    """The triangle matrix x^(-1/3) [[0,0,1],[0,-1,-1],[x,1+x,1]]; det 1."""
    if not (value_of(x) > 0.0):
        raise ValueError("matrix_T argument must be positive")
    r = cbrt(x)
    return ((0.0, 0.0, 1.0 / r),
            (0.0, -1.0 / r, -1.0 / r),
            (x / r, (1.0 + x) / r, 1.0 / r))


def matrix_E(z, w):
    """The edge matrix (z/w)^(1/3) [[0,0,1/z],[0,-1,0],[w,0,0]]; det 1."""
    if not (value_of(z) > 0.0 and value_of(w) > 0.0):
        raise ValueError("matrix_E arguments must be positive")
    r = cbrt(z / w)
    return ((0.0, 0.0, r / z),
            (0.0, -r, 0.0),
            (w * r, 0.0, 0.0))


def peripheral_products(c):
    """The three boundary holonomies as raw T/E products.

    Used as the independent route against the closed-form entries.
    """
    s1, s2, s3, s4, s5, s6 = c.sigma
    t1, t2 = c.tau
    T1 = matrix_T(t1)
    T2 = matrix_T(t2)
    T1i = mat_inv(T1)
    a = mat_mul(mat_mul(matrix_E(s2, s1), T2), mat_mul(matrix_E(s3, s4), T1))
    b = mat_mul(mat_mul(T1i, matrix_E(s4, s3)),
                mat_mul(T2, mat_mul(matrix_E(s5, s6), T1i)))
    cm = mat_mul(mat_mul(T1, matrix_E(s6, s5)), mat_mul(T2, matrix_E(s1, s2)))
    return a, b, cm


def peripheral_holonomies(c):
    """Closed-form peripheral matrices (A, B, C).

    A is exactly upper triangular and C exactly lower triangular.  The
    entries below reproduce the T/E products to machine precision; the
    group relation A*B*C = 1 ties all three together.
    """
    s1, s2, s3, s4, s5, s6 = c.sigma
    t1, t2 = c.tau

    ra = cbrt(s2 * s3 / (s1 * s4 * t1 * t2))
    a = ((cbrt(t1 ** 2 * t2 ** 2 / (s1 * s2 ** 2 * s3 ** 2 * s4)),
          ra * (s3 * t2 + s3 + t1 * t2 + t2) / (s2 * s3),
          ra * (s3 * (s4 + t2 + 1.0) + t2) / (s2 * s3)),
         (0.0, ra, (s4 + 1.0) * ra),
         (0.0, 0.0, cbrt(s1 ** 2 * s2 * s3 * s4 ** 2 / (t1 * t2))))

    rc = cbrt(s1 * s6 / (s2 * s5 * t1 * t2))
    cm = ((cbrt(s1 * s2 ** 2 * s5 ** 2 * s6 / (t1 * t2)), 0.0, 0.0),
          (-s2 * (s5 + 1.0) * rc, rc, 0.0),
          (s2 * (s6 * (s5 + t1 + 1.0) + t1) * rc / s6,
           -rc * (s6 * (t1 + 1.0) + t1 * (t2 + 1.0)) / s6,
           cbrt(t1 ** 2 * t2 ** 2 / (s1 ** 2 * s2 * s5 * s6 ** 2))))

    rb = cbrt(s4 * s5 / (s3 * s6 * t1 * t2))
    rb4 = cbrt(s4 * s5 / (s3 * s6 * t1 ** 4 * t2))
    rbq = cbrt(t1 ** 2) / cbrt(s3 * s4 ** 2 * s5 ** 2 * s6 * t2)
    b = ((rb * (s4 * s5 * (s6 * (s3 + t1 + 1.0) + t1 + 1.0)
                + t1 * (s5 * (s6 + t2 + 1.0) + t2)) / (s4 * s5),
          rb4 * (s4 * (t1 + 1.0) * (s6 * (s3 + t1 + 1.0) + t1)
                 + t1 * (s6 * (t1 + 1.0) + t1 * (t2 + 1.0))) / s4,
          s6 * (s4 * (s3 + t1 + 1.0) + t1) * rb4 / s4),
         (-rbq * (s5 * (s6 + s4 * (s6 + 1.0) + t2 + 1.0) + t2),
          -rb * ((s4 + 1.0) * s6 * (t1 + 1.0) + t1 * (s4 + t2 + 1.0)) / s4,
          -(s4 + 1.0) * s6 * rb / s4),
         (rbq * (s5 * (s6 + t2 + 1.0) + t2),
          rb * (s6 * (t1 + 1.0) + t1 * (t2 + 1.0)) / s4,
          cbrt(s5 * s6 ** 2 / (s3 * s4 ** 2 * t1 * t2))))

    return a, b, cm


WORD_TOKEN = re.compile(r"^([abc])(?:\^(-?\d+))?$")


class Word:
    """A word in the boundary generators with integer exponents.

    tokens is a list of (generator, exponent) pairs with generator in
    "abc" and nonzero exponent; the empty word is the identity.
    """

    __slots__ = ("tokens",)

    def __init__(self, tokens=()):
        tokens = tuple((g, int(e)) for g, e in tokens)
        for g, e in tokens:
            if g not in ("a", "b", "c"):
                raise ValueError("unknown generator %r" % (g,))
            if e == 0:
                raise ValueError("zero exponent in word")
        self.tokens = tokens

    @classmethod
    def parse(cls, text):
        """Parse whitespace-separated tokens like "a c^-1"."""
        tokens = []
        for raw in text.split():
            m = WORD_TOKEN.match(raw)
            if m is None:
                raise ValueError("bad word token %r" % (raw,))
            g, e = m.group(1), m.group(2)
            tokens.append((g, 1 if e is None else int(e)))
        return cls(tokens)

    def inverse(self):
        return Word([(g, -e) for g, e in reversed(self.tokens)])

    def __mul__(self, other):
        return Word(self.tokens + other.tokens)

    def __repr__(self):
        return "Word(%r)" % (self.tokens,)

    def __str__(self):
        return " ".join(g if e == 1 else "%s^%d" % (g, e) for g, e in self.tokens)


def _mat_pow(m, k):
    out = IDENTITY3
    for _ in range(abs(k)):
        out = mat_mul(out, m)
    if k < 0:
        out = mat_inv(out)
    return out


def holonomy_word(c, w):
    """Holonomy of a word; generators compose left to right.

    The peripherals have unit determinant by construction, so the
    product does too and is returned unnormalized.  Recomputing the
    determinant of the full product and dividing it out would lose
    accuracy: that determinant suffers heavy cancellation for words
    with large entries while the true value is pinned at one.
    """
    a, b, cm = peripheral_holonomies(c)
    gens = {"a": a, "b": b, "c": cm}
    out = IDENTITY3
    for g, e in w.tokens:
        out = mat_mul(out, _mat_pow(gens[g], e))
    return out


def predicted_eigenvalue_ratios(c):
    """The two predicted eigenvalue ratios for each peripheral matrix."""
    s1, s2, s3, s4, s5, s6 = c.sigma
    t1, t2 = c.tau
    return {
        "a": (s1 * s4, t1 * t2 / (s2 * s3)),
        "b": (s3 * s6, t1 * t2 / (s4 * s5)),
        "c": (s2 * s5, t1 * t2 / (s1 * s6)),
    }


def eigenvalue_ratio_report(c, tol=1e-8):
    """Check the predicted eigenvalue ratios against each peripheral.

    For each boundary matrix the multiset of the six ordered pairwise
    eigenvalue ratios must contain both predicted values within tol
    relative.  No statement is made about which eigenvalue pair gives
    which ratio.
    """
    a, b, cm = peripheral_holonomies(c)
    predicted = predicted_eigenvalue_ratios(c)
    report = {}
    for name, m in (("a", a), ("b", b), ("c", cm)):
        ev = eigenvalues_real3(m)
        ratios = [ev[i] / ev[j] for i in range(3) for j in range(3) if i != j]
        matches = []
        for target in predicted[name]:
            tv = value_of(target)
            err = min(abs(r - tv) / abs(tv) for r in ratios)
            matches.append(err)
        report[name] = {
            "eigenvalues": ev,
            "predicted": tuple(value_of(t) for t in predicted[name]),
            "errors": tuple(matches),
            "ok": all(e <= tol for e in matches),
        }
    report["ok"] = all(report[g]["ok"] for g in ("a", "b", "c"))
    return report
