"""Trace functions of closed curves, evaluated on a leaf chart.

Each curve is named by a CurveId tag.  Two independent evaluation
routes exist: long closed-form expressions in (sigma1, tau1) and the
leaf values, and a short matrix oracle that multiplies out the word in
the boundary holonomies and takes the trace.  The two must agree; the
oracle is authoritative where no closed form is available (word
curves, and commutator/power off the all-ones leaf).  Both routes
accept dual numbers so either can drive the Hamiltonian dynamics.
"""

import math
import random

from .coords import LeafPoint, LengthVector, leaf_embed
from .dual import cbrt, powf
from .holonomy import Word, holonomy_word, peripheral_holonomies
from .proj_linalg import mat_inv, mat_mul

CLOSED_FORM_UNAVAILABLE = "closed form unavailable; use matrix oracle"

_TAGS = ("fig8", "fig8_inv", "fig8_sym", "commutator", "power", "theta_web",
         "word")


class CurveId:
    """A named closed curve: a fixed tag, power(k), or an explicit word."""

    __slots__ = ("tag", "k", "word")

    def __init__(self, tag, k=None, word=None):
        if tag not in _TAGS:
            raise ValueError("unknown curve tag %r" % (tag,))
        if tag == "power":
            k = int(k)
            if k < 1:
                raise ValueError("power exponent must be at least 1")
        elif k is not None:
            raise ValueError("only power curves take an exponent")
        if tag == "word":
            if isinstance(word, str):
                word = Word.parse(word)
            elif not isinstance(word, Word):
                word = Word(word)
        elif word is not None:
            raise ValueError("only word curves take a word")
        self.tag = tag
        self.k = k
        self.word = word

    @classmethod
    def parse(cls, text):
        """Parse a curve name: fig8, fig8_inv, fig8_sym, commutator,
        power:<k>, theta, or word:<tokens>."""
        if text in ("fig8", "fig8_inv", "fig8_sym", "commutator"):
            return cls(text)
        if text in ("theta", "theta_web"):
            return cls("theta_web")
        if text.startswith("power:"):
            return cls("power", k=int(text[len("power:"):]))
        if text.startswith("word:"):
            return cls("word", word=Word.parse(text[len("word:"):]))
        raise ValueError("unknown curve %r" % (text,))

    def label(self):
        if self.tag == "power":
            return "power:%d" % self.k
        if self.tag == "word":
            return "word:%s" % (self.word,)
        return self.tag

    def __eq__(self, other):
        return (isinstance(other, CurveId)
                and (self.tag, self.k) == (other.tag, other.k)
                and (self.word.tokens if self.word else None)
                == (other.word.tokens if other.word else None))

    def __hash__(self):
        return hash((self.tag, self.k,
                     self.word.tokens if self.word else None))

    def __repr__(self):
        return "CurveId(%r)" % (self.label(),)


def realizing_word(curve):
    """The word in the boundary generators whose trace the curve takes."""
    if curve.tag == "fig8":
        return Word([("a", 1), ("c", -1)])
    if curve.tag == "fig8_inv":
        return Word([("c", 1), ("a", -1)])
    if curve.tag == "commutator":
        return Word([("a", 1), ("c", 1), ("a", -1), ("c", -1)])
    if curve.tag == "power":
        return Word([("a", curve.k), ("c", -1)])
    if curve.tag == "word":
        return curve.word
    raise ValueError("no single realizing word for %r" % (curve.tag,))


def _trace3(m):
    return m[0][0] + m[1][1] + m[2][2]


def trace_matrix_oracle(p, curve):
    """Trace of the curve's holonomy, by multiplying out the word."""
    if curve.tag == "fig8_sym":
        return (trace_matrix_oracle(p, CurveId("fig8"))
                + trace_matrix_oracle(p, CurveId("fig8_inv")))
    c = leaf_embed(p)
    if curve.tag == "theta_web":
        a, _, cm = peripheral_holonomies(c)
        return (_trace3(a) * _trace3(cm)
                - _trace3(mat_mul(a, mat_inv(cm))))
    return _trace3(holonomy_word(c, realizing_word(curve)))


def _is_unipotent(leaf):
    return all(abs(v - 1.0) <= 1e-12 for v in leaf)


def has_closed_form(leaf, curve):
    if curve.tag in ("fig8", "fig8_inv", "fig8_sym", "theta_web"):
        return True
    if curve.tag in ("commutator", "power"):
        return _is_unipotent(leaf)
    return False


def trace_closed_form(p, curve):
    """Closed-form trace value at a chart point.

    fig8, fig8_inv, fig8_sym, and theta_web work on any leaf; the
    commutator and power expressions are only valid where every leaf
    value is one and raise otherwise.
    """
    L = tuple(p.leaf)
    s1 = p.sigma1
    t1 = p.tau1
    tag = curve.tag
    if tag == "fig8":
        return _fig8_closed(L, s1, t1)
    if tag == "fig8_inv":
        return _fig8_inv_closed(L, s1, t1)
    if tag == "fig8_sym":
        return _fig8_closed(L, s1, t1) + _fig8_inv_closed(L, s1, t1)
    if tag == "theta_web":
        return theta_constant(p.leaf) - _fig8_closed(L, s1, t1)
    if tag in ("commutator", "power"):
        if not _is_unipotent(L):
            raise ValueError(CLOSED_FORM_UNAVAILABLE)
        if tag == "commutator":
            return _commutator_closed_unipotent(s1, t1)
        return _power_closed_unipotent(curve.k, s1, t1)
    raise ValueError(CLOSED_FORM_UNAVAILABLE)


def trace_function(L, curve, route="auto"):
    """A callable (sigma1, tau1) -> trace for the given leaf and curve.

    route "closed" or "oracle" forces one evaluation path; "auto"
    prefers the closed form and falls back to the oracle.  The result
    passes dual numbers through untouched.
    """
    if not isinstance(L, LengthVector):
        L = LengthVector(L)
    if route not in ("auto", "closed", "oracle"):
        raise ValueError("unknown route %r" % (route,))
    if route == "closed" and not has_closed_form(L, curve):
        raise ValueError(CLOSED_FORM_UNAVAILABLE)
    use_closed = route == "closed" or (route == "auto"
                                       and has_closed_form(L, curve))
    if use_closed:
        def f(s1, t1):
            return trace_closed_form(LeafPoint(L, s1, t1), curve)
    else:
        def f(s1, t1):
            return trace_matrix_oracle(LeafPoint(L, s1, t1), curve)
    return f


_THETA_SEED = 891021
_theta_cache = {}


def theta_constant(L):
    """tr(a)*tr(c), which depends only on the leaf.

    Sampled at ten fixed pseudo-random chart points as a consistency
    check; the spread must be at the noise level or the leaf data is
    inconsistent.
    """
    key = tuple(float(v) for v in L)
    if key in _theta_cache:
        return _theta_cache[key]
    rng = random.Random(_THETA_SEED)
    vals = []
    for _ in range(10):
        s1 = math.exp(rng.uniform(-1.0, 1.0))
        t1 = math.exp(rng.uniform(-1.0, 1.0))
        a, _, cm = peripheral_holonomies(leaf_embed(LeafPoint(key, s1, t1)))
        vals.append(_trace3(a) * _trace3(cm))
    mean = math.fsum(vals) / len(vals)
    spread = math.sqrt(math.fsum((v - mean) ** 2 for v in vals) / len(vals))
    if spread > 1e-9 * abs(mean):
        raise ArithmeticError("theta constant varies across the leaf")
    _theta_cache[key] = mean
    return mean


def _fig8_closed(L, s1, t1):
    la1, la2, lb1, lb2, lg1, lg2 = L
    T1 = s1 ** 3 * t1 ** 2 * lg2 * cbrt(la2 * lb1)
    T2 = (powf(la1, 5.0 / 3.0) * powf(lb2 * lg1 * lg2, 2.0 / 3.0)
          * ((s1 + t1 + 1) * la2 * lb2 + s1 * t1 ** 2))
    T3 = (s1 ** 2 * t1 * powf(la2 * lb1, 2.0 / 3.0)
          * cbrt(la1 * lb2 * lg1 * lg2) * (2 * s1 * lg2 + lg2 + t1))
    T4 = (s1 * powf(la1, 4.0 / 3.0) * powf(la2 * lb1, 2.0 / 3.0)
          * cbrt(lb2 * lg1 * lg2)
          * ((s1 + 1) * lb2 * lg2 + t1 * (s1 * lg2 + t1)))
    T5 = (t1 * la1 ** 2 * lb2 * cbrt(la2 * lb1)
          * (lg1 * (s1 * lg2 + s1 + t1 + 1) + s1 * lg2))
    T6 = (s1 ** 2 * powf(la1 * lb2 * lg1 * lg2, 2.0 / 3.0)
          * (la2 * (lb1 * (s1 * lg2 + lg2 + t1) + t1) + t1 ** 2))
    T7 = (s1 * la1 * cbrt(la2 * lb1)
          * (t1 * (lb2 * lg1 * (s1 * lg2 + lg2 + t1 + 1)
                   + (s1 + 1) * lb2 * lg2 + s1 * t1 * lg2)
             + la2 * lb2 * (lg1 * ((s1 + t1 + 1) * lg2 + t1) + t1 * lg2)))
    pref = (s1 * t1 * powf(la1, 4.0 / 3.0) * cbrt(lb1) * lb2
            * powf(la2 * lg1 * lg2, 2.0 / 3.0))
    return (T1 + T2 + T3 + T4 + T5 + T6 + T7) / pref


def _fig8_inv_closed(L, s1, t1):
    la1, la2, lb1, lb2, lg1, lg2 = L
    S = ((t1 + 1) * (s1 + t1 + 1) * la1 ** 2 * lg1
         * cbrt(la2 ** 2 * lb1 * lb2 ** 4)
         + s1 * la1 * (t1 * (t1 + 1) * lg1 * cbrt(la2 ** 2 * lb1 * lb2 ** 4)
                       + s1 * t1 ** 2 * lg2 * cbrt(la2 ** 2 * lb1 * lb2)
                       + s1 * (s1 + 1) * lg1 * lg2
                       * cbrt(la2 ** 2 * lb1 ** 4 * lb2))
         + s1 * (s1 * t1 * cbrt(la2) * powf(la1 * lg1 * lg2, 2.0 / 3.0)
                 * (s1 * lb1 + t1 * lb2)
                 + t1 * (t1 + 1) * lb2
                 * cbrt(la1 ** 5 * la2 * lg1 ** 2 * lg2 ** 2)
                 + (s1 + t1 + 1) * lb1 * lb2
                 * cbrt(la1 ** 5 * la2 * lg1 ** 2 * lg2 ** 2)
                 + s1 * t1 * (s1 * t1 * lg2 * cbrt(la2 ** 2 * lb1 * lb2)
                              + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2 * lg1 * lg2)
                              + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                     * lg1 ** 4 * lg2)
                              + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                     * lg1 * lg2 ** 4))
                 + la2 * (s1 ** 2 * t1
                          * cbrt(la1 * lb1 ** 2 * lb2 ** 2 * lg1 * lg2 ** 4)
                          + (t1 + 1) * (t1 * cbrt(la1 ** 4 * lb1 ** 2
                                                  * lb2 ** 2 * lg1 * lg2)
                                        + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                               * lg1 ** 4 * lg2))
                          + s1 * (t1 ** 2 * cbrt(la1 * lb1 ** 2 * lb2 ** 2
                                                 * lg1 * lg2)
                                  + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                         * lg1 ** 4 * lg2)
                                  + t1 * (cbrt(la1 * lb1 ** 2 * lb2 ** 2
                                               * lg1 * lg2)
                                          + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                                 * lg1 * lg2)
                                          + cbrt(la1 * lb1 ** 2 * lb2 ** 2
                                                 * lg1 ** 4 * lg2)
                                          + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                                 * lg1 ** 4 * lg2)
                                          + cbrt(la1 * lb1 ** 2 * lb2 ** 2
                                                 * lg1 * lg2 ** 4)
                                          + cbrt(la1 ** 4 * lb1 ** 2 * lb2 ** 2
                                                 * lg1 * lg2 ** 4))))))
    pref = s1 ** 2 * t1 * la1 * powf(la2 * lb1 * lb2 * lg1 * lg2, 2.0 / 3.0)
    return S / pref


def _commutator_closed_unipotent(s1, t1):
    return (s1 ** 6 * (t1 + 1) ** 3
            + 3 * s1 ** 5 * (t1 + 1) ** 2 * (2 * t1 + 1)
            + 3 * s1 ** 4 * (t1 + 1) ** 2 * (5 * t1 + 1)
            + s1 ** 3 * (20 * t1 ** 3 + 42 * t1 ** 2 + 27 * t1 + 2)
            + 3 * s1 ** 2 * (t1 + 1) ** 2 * (5 * t1 + 1)
            + 3 * s1 * (t1 + 1) ** 2 * (2 * t1 + 1)
            + (t1 + 1) ** 3) / (s1 ** 3 * t1)


def _power_closed_unipotent(k, s1, t1):
    return (k ** 2 * (s1 + 1) ** 3 * (t1 + 1) ** 2
            + k * (s1 + 1) ** 3 * (t1 + 1) ** 2
            + 6 * s1 * t1) / (2 * s1 * t1)
