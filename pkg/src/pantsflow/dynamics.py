"""Hamiltonian dynamics of trace functions on a leaf chart.

Integration happens in log coordinates (u, v) = (log sigma1, log tau1)
where positivity is automatic and the ODE reads
(du/dt, dv/dt) = 2(-dg/dv, dg/du) for g(u, v) = f(e^u, e^v).
Orbits of the trace functions are closed curves around a unique
minimum; the routines here integrate them, find the period through a
Poincare section, locate the minimum by damped Newton, and trace out
level sets.
"""

import math

from .coords import LeafPoint, LengthVector
from .dual import Dual, exp, gradient2, hessian2, value_of
from .traces import trace_function

ESCAPE_LOG = 300.0


class BelowMinimumError(ValueError):
    """Requested level set lies at or under the function minimum."""


class Trajectory:
    """An integrated orbit: samples of (t, sigma1, tau1, f) plus drift."""

    __slots__ = ("leaf", "curve", "samples", "drift")

    def __init__(self, leaf, curve, samples, drift):
        self.leaf = leaf
        self.curve = curve
        self.samples = list(samples)
        self.drift = drift

    def points(self):
        return [(s[1], s[2]) for s in self.samples]

    def __len__(self):
        return len(self.samples)


def _chart_rhs(f):
    def g(u, v):
        return f(exp(u), exp(v))

    def rhs(u, v):
        _, (gu, gv) = gradient2(g, u, v)
        return (-2.0 * gv, 2.0 * gu)

    return g, rhs


# Dormand-Prince 5(4) tableau
_DP_A = (
    (),
    (1.0 / 5.0,),
    (3.0 / 40.0, 9.0 / 40.0),
    (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0),
    (19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0),
    (9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
     -5103.0 / 18656.0),
    (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
     11.0 / 84.0),
)
_DP_B5 = (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0,
          -2187.0 / 6784.0, 11.0 / 84.0, 0.0)
_DP_B4 = (5179.0 / 57600.0, 0.0, 7571.0 / 16695.0, 393.0 / 640.0,
          -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0)


def _dp_step(rhs, y, h):
    """One Dormand-Prince step: returns (y5, error_estimate)."""
    k = []
    for row in _DP_A:
        u = y[0] + h * math.fsum(row[j] * k[j][0] for j in range(len(row)))
        v = y[1] + h * math.fsum(row[j] * k[j][1] for j in range(len(row)))
        k.append(rhs(u, v))
    y5 = (y[0] + h * math.fsum(_DP_B5[j] * k[j][0] for j in range(7)),
          y[1] + h * math.fsum(_DP_B5[j] * k[j][1] for j in range(7)))
    err = (h * math.fsum((_DP_B5[j] - _DP_B4[j]) * k[j][0] for j in range(7)),
           h * math.fsum((_DP_B5[j] - _DP_B4[j]) * k[j][1] for j in range(7)))
    return y5, err


def _advance_fixed(rhs, y, dt, substeps=2):
    """Advance by dt with forced equal steps; used by bisection refinement."""
    h = dt / substeps
    for _ in range(substeps):
        y, _ = _dp_step(rhs, y, h)
    return y


class _Stepper:
    """Adaptive stepping with a PI controller in the log chart."""

    def __init__(self, rhs, y0, rtol, atol, max_step=None):
        self.rhs = rhs
        self.t = 0.0
        self.y = y0
        self.rtol = rtol
        self.atol = atol
        self.max_step = max_step
        self.h = 1e-3
        self.err_prev = 1.0

    def _error_norm(self, y, y_new, err):
        acc = 0.0
        for i in range(2):
            scale = self.atol + self.rtol * max(abs(y[i]), abs(y_new[i]))
            acc += (err[i] / scale) ** 2
        return math.sqrt(acc / 2.0)

    def step(self, t_limit):
        """Advance one accepted step toward t_limit (signed)."""
        direction = 1.0 if t_limit >= self.t else -1.0
        remaining = abs(t_limit - self.t)
        if remaining == 0.0:
            return self.t, self.y
        h = min(self.h, remaining)
        if self.max_step is not None:
            h = min(h, self.max_step)
        for _ in range(200):
            y_new, err = _dp_step(self.rhs, self.y, direction * h)
            en = self._error_norm(self.y, y_new, err)
            if en <= 1.0:
                self.t += direction * h
                self.y = y_new
                grow = 0.9 * max(en, 1e-10) ** -0.17 * self.err_prev ** 0.04
                self.h = h * min(5.0, max(0.2, grow))
                self.err_prev = max(en, 1e-10)
                if abs(y_new[0]) > ESCAPE_LOG or abs(y_new[1]) > ESCAPE_LOG:
                    raise ArithmeticError("trajectory escaped")
                return self.t, self.y
            h *= max(0.1, 0.9 * en ** -0.2)
            if h < 1e-13 * max(1.0, abs(self.t)):
                raise ArithmeticError("stiff segment")
        raise ArithmeticError("stiff segment")


def integrate(p0, curve, t_max, rtol=1e-10, atol=1e-12, project=False,
              max_step=None, route="auto"):
    """Integrate the Hamiltonian orbit of the curve's trace through p0.

    Returns a Trajectory sampled at the accepted steps over [0, t_max]
    (t_max may be negative).  The trace value is conserved along the
    exact flow; if the numerical drift exceeds 100*rtol the run is
    rejected with an error rather than returned.
    """
    if not 1e-13 <= rtol <= 1e-4:
        raise ValueError("rtol out of range")
    f = trace_function(p0.leaf, curve, route)
    g, rhs = _chart_rhs(f)
    u0 = math.log(value_of(p0.sigma1))
    v0 = math.log(value_of(p0.tau1))
    f0 = f(math.exp(u0), math.exp(v0))
    samples = [(0.0, math.exp(u0), math.exp(v0), f0)]
    if t_max == 0.0:
        return Trajectory(p0.leaf, curve, samples, 0.0)
    stepper = _Stepper(rhs, (u0, v0), rtol, atol, max_step)
    drift = 0.0
    scale = abs(f0) if f0 != 0.0 else 1.0
    while (t_max - stepper.t) * math.copysign(1.0, t_max) > 0.0:
        t, y = stepper.step(t_max)
        if project:
            val, (gu, gv) = gradient2(g, y[0], y[1])
            n2 = gu * gu + gv * gv
            if n2 > 0.0:
                y = (y[0] - (val - f0) * gu / n2, y[1] - (val - f0) * gv / n2)
                stepper.y = y
        s1 = math.exp(y[0])
        t1 = math.exp(y[1])
        ft = f(s1, t1)
        drift = max(drift, abs(ft - f0) / scale)
        samples.append((t, s1, t1, ft))
    if drift > 100.0 * rtol:
        raise ArithmeticError("energy drift exceeds budget")
    return Trajectory(p0.leaf, curve, samples, drift)


def detect_period(p0, curve, rtol=1e-10, t_max=500.0, route="auto"):
    """Period of the closed orbit through p0.

    Crossings of the Poincare section (the line through the start
    orthogonal to the initial velocity, in log coordinates) are
    bracketed during integration and the same-direction return is
    bisected down to 1e-10 in t.  Sublevel sets are convex in the log
    chart, so the section meets the orbit exactly twice and the first
    same-direction crossing is the period.
    """
    f = trace_function(p0.leaf, curve, route)
    _, rhs = _chart_rhs(f)
    y0 = (math.log(value_of(p0.sigma1)), math.log(value_of(p0.tau1)))
    d0 = rhs(*y0)
    speed = math.hypot(*d0)
    if speed == 0.0:
        raise ArithmeticError("period not found")

    def section(y):
        return (y[0] - y0[0]) * d0[0] + (y[1] - y0[1]) * d0[1]

    stepper = _Stepper(rhs, y0, rtol, 1e-12)
    g_prev = 0.0
    t_prev = 0.0
    y_prev = y0
    bracket = None
    while stepper.t < t_max:
        t, y = stepper.step(t_max)
        g = section(y)
        if g_prev < 0.0 and g >= 0.0:
            bracket = (t_prev, y_prev, t - t_prev)
            break
        g_prev, t_prev, y_prev = g, t, y
    if bracket is None:
        raise ArithmeticError("period not found")

    t_base, y_base, width = bracket
    lo, hi = 0.0, width
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        if section(_advance_fixed(rhs, y_base, mid)) < 0.0:
            lo = mid
        else:
            hi = mid
    dt = 0.5 * (lo + hi)
    period = t_base + dt
    y_ret = _advance_fixed(rhs, y_base, dt)
    p_ret = (math.exp(y_ret[0]), math.exp(y_ret[1]))
    p_start = (value_of(p0.sigma1), value_of(p0.tau1))
    dist = math.hypot(p_ret[0] - p_start[0], p_ret[1] - p_start[1])
    if dist > 1e-6 * (1.0 + math.hypot(*p_start)):
        raise ArithmeticError("period not found")
    return period


def _chart_gradient_norm(g, u, v):
    val, (gu, gv) = gradient2(g, u, v)
    return val, (gu, gv), math.hypot(gu / math.exp(u), gv / math.exp(v))


def _bracket_line_min(phi, p0):
    """Expanding bracket [lo, hi] around the minimum of convex phi."""
    step = 1.0
    lo, hi = -step, step
    flo, fhi = phi(lo), phi(hi)
    for _ in range(120):
        if flo >= p0 and fhi >= p0:
            return lo, hi
        if flo < p0:
            lo *= 2.0
            flo = phi(lo)
        if fhi < p0:
            hi *= 2.0
            fhi = phi(hi)
    raise ArithmeticError("line search failed: no bracket on convex section")


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(phi, lo, hi, tol=1e-13):
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = phi(c), phi(d)
    while b - a > tol * (1.0 + abs(a) + abs(b)):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = phi(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = phi(d)
    return 0.5 * (a + b)


def find_minimum(L, curve, start=(1.0, 1.0), route="auto", max_iter=200):
    """Unique minimum of the trace function on the leaf.

    Damped Newton in log coordinates with dual-number Hessians; if a
    Newton step cannot make progress the solver falls back to
    alternating golden-section line searches (every line restriction
    is strictly convex), then polishes with Newton again.  Returns
    (sigma1, tau1, value) with chart gradient norm at most
    2e-13*(1 + |value|).
    """
    if not isinstance(L, LengthVector):
        L = LengthVector(L)
    f = trace_function(L, curve, route)

    def g(u, v):
        return f(exp(u), exp(v))

    u, v = math.log(start[0]), math.log(start[1])

    def converged(u, v):
        val, _, cn = _chart_gradient_norm(g, u, v)
        return cn <= 2e-13 * (1.0 + abs(val))

    def newton(u, v):
        best = None
        forced = 0
        for _ in range(max_iter):
            val, (gu, gv), (huu, huv, hvv) = hessian2(g, u, v)
            cn = math.hypot(gu / math.exp(u), gv / math.exp(v))
            if best is None or cn < best[0]:
                best = (cn, u, v)
            if cn <= 1e-13 * (1.0 + abs(val)):
                return u, v, True
            det = huu * hvv - huv * huv
            if det > 0.0 and huu > 0.0:
                du = -(hvv * gu - huv * gv) / det
                dv = -(huu * gv - huv * gu) / det
            else:
                du, dv = -gu, -gv
            slope = gu * du + gv * dv
            step = 1.0
            while step > 1e-12:
                if g(u + step * du, v + step * dv) <= val + 1e-4 * step * slope:
                    break
                step *= 0.5
            else:
                # the value is flat to the last ulp here, but close to
                # the minimum the full step still shrinks the gradient
                if cn <= 1e-6 * (1.0 + abs(val)) and forced < 8:
                    forced += 1
                    u += du
                    v += dv
                    continue
                _, u, v = best
                return u, v, False
            u += step * du
            v += step * dv
        _, u, v = best
        return u, v, False

    u, v, ok = newton(u, v)
    if not ok and not converged(u, v):
        # alternating strictly convex line minimizations, then re-polish
        for _ in range(300):
            p0 = g(u, v)
            lo, hi = _bracket_line_min(lambda s: g(u + s, v), p0)
            u += _golden_min(lambda s: g(u + s, v), lo, hi)
            p0 = g(u, v)
            lo, hi = _bracket_line_min(lambda s: g(u, v + s), p0)
            v += _golden_min(lambda s: g(u, v + s), lo, hi)
            u, v, ok = newton(u, v)
            if ok or converged(u, v):
                break
        else:
            raise ArithmeticError(
                "line search failed: no convergence at (%g, %g)"
                % (math.exp(u), math.exp(v)))
    s1 = math.exp(u)
    t1 = math.exp(v)
    return s1, t1, f(s1, t1)


def level_set(L, curve, level, route="auto", samples_per_orbit=256):
    """Closed polyline of chart points where the trace equals level.

    The seed is found by walking the diagonal ray from the minimum
    (strictly increasing by convexity and properness) and bisecting;
    the polyline is one full period of the Hamiltonian orbit.
    """
    if not isinstance(L, LengthVector):
        L = LengthVector(L)
    s1m, t1m, fmin = find_minimum(L, curve, route=route)
    if level <= fmin:
        raise BelowMinimumError("below minimum")
    f = trace_function(L, curve, route)
    um, vm = math.log(s1m), math.log(t1m)

    def phi(t):
        return f(math.exp(um + t), math.exp(vm + t))

    hi = 1.0
    while phi(hi) < level:
        hi *= 2.0
        if um + hi > ESCAPE_LOG:
            raise ArithmeticError("trajectory escaped")
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if phi(mid) < level:
            lo = mid
        else:
            hi = mid
    t_seed = 0.5 * (lo + hi)
    seed = LeafPoint(L, math.exp(um + t_seed), math.exp(vm + t_seed))
    period = detect_period(seed, curve, route=route)
    traj = integrate(seed, curve, period, max_step=period / samples_per_orbit,
                     route=route)
    points = traj.points()
    first, last = points[0], points[-1]
    if math.hypot(last[0] - first[0], last[1] - first[1]) > 1e-6:
        raise ArithmeticError("level set polyline failed to close")
    return points


def _chart_mixed_point(q, a, t, variant):
    # chart action of the mixed flow; matches poisson.mixed_flow
    if variant == "I∘aE" or variant == "IoaE":
        return (q[0] * math.exp(t), q[1] * math.exp(a * t))
    if variant == "aI∘E" or variant == "aIoE":
        return (q[0] * math.exp(a * t), q[1] * math.exp(t))
    raise ValueError("unknown mixed flow variant %r" % (variant,))


def convexity_probe(L, curve, q, a, variant="I∘aE", n=61, route="auto"):
    """Minimum centered second difference of the trace along a mixed flow.

    Samples t on an n-point grid over [-3, 3]; a strictly convex
    restriction gives a strictly positive result.
    """
    if n < 3:
        raise ValueError("need at least 3 grid points")
    if not isinstance(L, LengthVector):
        L = LengthVector(L)
    f = trace_function(L, curve, route)
    dt = 6.0 / (n - 1)
    vals = []
    for j in range(n):
        s1, t1 = _chart_mixed_point(q, a, -3.0 + j * dt, variant)
        vals.append(f(s1, t1))
    return min((vals[j - 1] - 2.0 * vals[j] + vals[j + 1]) / (dt * dt)
               for j in range(1, n - 1))


RAYS = ("sigma->inf", "sigma->0", "tau->inf", "tau->0", "both->inf")


def properness_probe(L, curve, ray, steps=24, route="auto"):
    """Evaluate the trace along a geometric escape ray from (1,1).

    Reports the sampled values and whether they blow up: the last
    value must exceed 1e6 and the final four must be strictly
    increasing.
    """
    if steps < 4:
        raise ValueError("need at least 4 steps")
    if ray not in RAYS:
        raise ValueError("unknown ray %r" % (ray,))
    if not isinstance(L, LengthVector):
        L = LengthVector(L)
    f = trace_function(L, curve, route)
    values = []
    for j in range(1, steps + 1):
        r = 2.0 ** j
        if ray == "sigma->inf":
            s1, t1 = r, 1.0
        elif ray == "sigma->0":
            s1, t1 = 1.0 / r, 1.0
        elif ray == "tau->inf":
            s1, t1 = 1.0, r
        elif ray == "tau->0":
            s1, t1 = 1.0, 1.0 / r
        else:
            s1, t1 = r, r
        values.append(f(s1, t1))
    tail_increasing = all(values[i] < values[i + 1]
                          for i in range(len(values) - 4, len(values) - 1))
    return {
        "ray": ray,
        "values": values,
        "diverges": values[-1] > 1e6 and tail_increasing,
    }


def trajectory_csv(traj):
    """CSV text for a trajectory: t,sigma1,tau1,f at 17 significant digits."""
    lines = ["t,sigma1,tau1,f"]
    for t, s1, t1, ft in traj.samples:
        lines.append("%.17g,%.17g,%.17g,%.17g" % (t, s1, t1, ft))
    return "\n".join(lines) + "\n"


def level_set_csv(points):
    """CSV text for a level-set polyline: sigma1,tau1 rows."""
    lines = ["sigma1,tau1"]
    for s1, t1 in points:
        lines.append("%.17g,%.17g" % (s1, t1))
    return "\n".join(lines) + "\n"


def svg_polyline(points, width=600, height=600):
    """Minimal standalone SVG of a chart polyline on log-log axes."""
    xs = [math.log10(p[0]) for p in points]
    ys = [math.log10(p[1]) for p in points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    dx = (x1 - x0) or 1.0
    dy = (y1 - y0) or 1.0
    margin = 50.0

    def px(x):
        return margin + (x - x0) / dx * (width - 2 * margin)

    def py(y):
        return height - margin - (y - y0) / dy * (height - 2 * margin)

    coords = " ".join("%.6g,%.6g" % (px(x), py(y)) for x, y in zip(xs, ys))
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height),
        '<rect width="%d" height="%d" fill="white"/>' % (width, height),
        '<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="black"/>'
        % (margin, height - margin, width - margin, height - margin),
        '<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="black"/>'
        % (margin, margin, margin, height - margin),
        '<text x="%g" y="%g" font-size="12">log10(sigma1): %.6g .. %.6g</text>'
        % (margin, height - margin / 3.0, x0, x1),
        '<text x="%g" y="%g" font-size="12" transform="rotate(-90 %g %g)">'
        'log10(tau1): %.6g .. %.6g</text>'
        % (margin / 3.0, height - margin, margin / 3.0, height - margin,
           y0, y1),
        '<polyline points="%s" fill="none" stroke="blue"/>' % coords,
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
