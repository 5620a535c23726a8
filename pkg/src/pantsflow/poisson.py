"""Quiver Poisson structure and its closed-form flows.

The bracket on the coordinate algebra is {X_i, X_j} = 2 eps_ij X_i X_j
for a fixed antisymmetric integer matrix eps in the coordinate basis
(sigma1..sigma6, tau1, tau2).  Log-linear functions (Casimirs, the two
generating Hamiltonians) have constant brackets, and their flows are
exact coordinate scalings, so everything here is closed form.
"""

import math

from .dual import exp, log
from .coords import FGCoords


def _build_epsilon():
    m = [[0] * 8 for _ in range(8)]
    for r in range(6):
        # sigma rows pair only with the tau columns
        s = 1 if r % 2 == 0 else -1
        m[r][6] = s
        m[r][7] = -s
        m[6][r] = -s
        m[7][r] = s
    return tuple(tuple(row) for row in m)


EPSILON = _build_epsilon()


class LogLinearFunction:
    """f = constant + sum_i coefficients[i] * log X_i over the 8 coordinates."""

    __slots__ = ("coefficients", "constant")

    def __init__(self, coefficients, constant=0.0):
        coefficients = tuple(float(c) for c in coefficients)
        if len(coefficients) != 8:
            raise ValueError("need 8 coefficients")
        self.coefficients = coefficients
        self.constant = float(constant)

    def value(self, c):
        xs = c.as_tuple()
        return self.constant + math.fsum(
            ci * math.log(x) for ci, x in zip(self.coefficients, xs) if ci != 0.0)

    def __repr__(self):
        return "LogLinearFunction(%r, %r)" % (self.coefficients, self.constant)


# the two generating Hamiltonians: (log tau1 - log tau2)/4 and the
# alternating sigma average -(1/12) sum (-1)^(i+1) log sigma_i
HAM_I = LogLinearFunction((0, 0, 0, 0, 0, 0, 0.25, -0.25))
HAM_E = LogLinearFunction(tuple((-1.0 / 12.0 if i % 2 == 0 else 1.0 / 12.0)
                                for i in range(6)) + (0, 0))


def log_coordinate(i):
    """log X_i as a LogLinearFunction; i is 1-based."""
    if not 1 <= i <= 8:
        raise ValueError("coordinate index must be in 1..8")
    return LogLinearFunction(tuple(1.0 if j == i - 1 else 0.0 for j in range(8)))


def casimir_log_functions():
    """The six log-Casimirs as LogLinearFunctions, keyed by boundary pair."""
    return {
        "alpha1": LogLinearFunction((1, 0, 0, 1, 0, 0, 0, 0)),
        "alpha2": LogLinearFunction((0, -1, -1, 0, 0, 0, 1, 1)),
        "beta1": LogLinearFunction((0, 0, 1, 0, 0, 1, 0, 0)),
        "beta2": LogLinearFunction((0, 0, 0, -1, -1, 0, 1, 1)),
        "gamma1": LogLinearFunction((0, 1, 0, 0, 1, 0, 0, 0)),
        "gamma2": LogLinearFunction((-1, 0, 0, 0, 0, -1, 1, 1)),
    }


def bracket_coordinates(i, j, c):
    """{X_i, X_j} = 2 eps_ij X_i X_j at the point c; indices are 1-based."""
    if not (1 <= i <= 8 and 1 <= j <= 8):
        raise ValueError("coordinate indices must be in 1..8")
    xs = c.as_tuple()
    return 2.0 * EPSILON[i - 1][j - 1] * xs[i - 1] * xs[j - 1]


def bracket_log_linear(f, g):
    """{f, g} = 2 cf^T eps cg; constant over the whole space.

    Accumulated with fsum so integer-valued coefficient patterns come
    out exact (the generating pair gives exactly 1/2).
    """
    cf = f.coefficients
    cg = g.coefficients
    return 2.0 * math.fsum(cf[i] * EPSILON[i][j] * cg[j]
                           for i in range(8) for j in range(8)
                           if EPSILON[i][j] != 0 and cf[i] != 0.0 and cg[j] != 0.0)


def eruption_flow(c, t):
    """Flow of HAM_E for time t: scales (tau1, tau2) by (e^t, e^-t)."""
    et = math.exp(t)
    return FGCoords(c.sigma, (c.tau[0] * et, c.tau[1] / et))


def hexagon_flow(c, t):
    """Flow of HAM_I for time t: scales sigma_i by e^((-1)^(i+1) t)."""
    et = math.exp(t)
    sigma = tuple(s * (et if i % 2 == 0 else 1.0 / et)
                  for i, s in enumerate(c.sigma))
    return FGCoords(sigma, c.tau)


VARIANT_HEX_OF_ERUPTION = "I∘aE"
VARIANT_ERUPTION_OF_HEX = "aI∘E"
_VARIANT_ALIASES = {
    VARIANT_HEX_OF_ERUPTION: VARIANT_HEX_OF_ERUPTION,
    VARIANT_ERUPTION_OF_HEX: VARIANT_ERUPTION_OF_HEX,
    "IoaE": VARIANT_HEX_OF_ERUPTION,
    "aIoE": VARIANT_ERUPTION_OF_HEX,
}


def mixed_flow(c, a, t, variant=VARIANT_HEX_OF_ERUPTION):
    """Composite flow mixing the hexagon and eruption scalings.

    "I∘aE" runs the eruption for time a*t and the hexagon for time t,
    so the chart point maps to (e^t sigma1, e^(a t) tau1).  "aI∘E"
    swaps the weighting: (e^(a t) sigma1, e^t tau1).  The two flows
    commute so the composition order does not matter.
    """
    v = _VARIANT_ALIASES.get(variant)
    if v is None:
        raise ValueError("unknown mixed flow variant %r" % (variant,))
    if v == VARIANT_HEX_OF_ERUPTION:
        return hexagon_flow(eruption_flow(c, a * t), t)
    return hexagon_flow(eruption_flow(c, t), a * t)


_COORD_NAMES = ("sigma1", "sigma2", "sigma3", "sigma4", "sigma5", "sigma6",
                "tau1", "tau2")


def coordinate_flow(c, which, t):
    """Flow of a single coordinate function for time t.

    which is a 1-based index or one of the names sigma1..sigma6, tau1,
    tau2.  A sigma coordinate moves only the taus; a tau coordinate
    moves only the sigmas, with alternating signs in both cases.
    """
    if isinstance(which, str):
        try:
            idx = _COORD_NAMES.index(which) + 1
        except ValueError:
            raise ValueError("unknown coordinate %r" % (which,))
    else:
        idx = int(which)
        if not 1 <= idx <= 8:
            raise ValueError("coordinate index must be in 1..8")
    xs = c.as_tuple()
    val = xs[idx - 1]
    if idx <= 6:
        # sign (-1)^i on tau1 and (-1)^(i+1) on tau2, i the sigma index
        s = -1.0 if idx % 2 == 1 else 1.0
        return FGCoords(c.sigma, (c.tau[0] * math.exp(s * t * val),
                                  c.tau[1] * math.exp(-s * t * val)))
    # tau1 pushes sigma_i by (-1)^(i+1), tau2 by (-1)^i
    s = 1.0 if idx == 7 else -1.0
    sigma = tuple(x * math.exp((s if i % 2 == 0 else -s) * t * val)
                  for i, x in enumerate(c.sigma))
    return FGCoords(sigma, c.tau)


def symplectic_form_leaf(p, v, w):
    """Leaf symplectic form: (v1 w2 - v2 w1) / (2 sigma1 tau1)."""
    return (v[0] * w[1] - v[1] * w[0]) / (2.0 * p.sigma1 * p.tau1)


def hamiltonian_vf_leaf(p, f):
    """Hamiltonian vector field of f in the leaf chart.

    f maps (sigma1, tau1) to a scalar and must accept dual numbers;
    the field is 2 sigma1 tau1 (-df/dtau1, df/dsigma1).
    """
    from .dual import gradient2
    _, (fs, ft) = gradient2(f, p.sigma1, p.tau1)
    factor = 2.0 * p.sigma1 * p.tau1
    return (-factor * ft, factor * fs)
