"""Independent numerical oracle for the symbolic pipeline.

Complex double-precision sampling of the constraint variety, evaluation
cross-checks of the key-polynomial reduction, Runge-Kutta integration of
the derivation flow with constraint-drift monitoring, and exact
Sturm-sequence isolation of real roots of univariate eliminants.

Sampling is complex on purpose: the real points of the variety may be
empty in whole sign regimes of (a, k, c), while every algebraic identity
being checked holds over the complex numbers, which is all an evaluation
oracle needs.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from .symcore import Polynomial, Variable
from .geomsys import (
    SystemSpec, apply_derivation, derive_key_polynomial, load_key_polynomial,
    system_spec,
)

_STATE_VARS = (Variable.ALPHA, Variable.KAPPA, Variable.C, Variable.U, Variable.W)
BLOWUP_LIMIT = 1e12
DEGENERACY_TOL = 1e-12


class DegeneratePointError(ValueError):
    """A4, A5 or w vanishes at the requested point; use the degenerate
    branch analysis instead."""


class SamplingFailureError(RuntimeError):
    """Could not build the requested number of admissible variety points."""


class ZeroPolynomialError(ValueError):
    """Root isolation was asked about the zero polynomial."""


def _compile(p: Polynomial) -> Callable:
    """Compile a polynomial in (a, k, c, u, w) to a fast complex evaluator."""
    terms = []
    for exps, coeff in p.terms():
        terms.append((complex(coeff), tuple(exps[v] for v in _STATE_VARS)))

    def evaluate(al: complex, ka: complex, cc: complex,
                 uu: complex, ww: complex) -> complex:
        vals = (al, ka, cc, uu, ww)
        total = 0j
        for coeff, exps in terms:
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    return evaluate


def _compile_scale(p: Polynomial) -> Callable:
    terms = []
    for exps, coeff in p.terms():
        terms.append((abs(complex(coeff)), tuple(exps[v] for v in _STATE_VARS)))

    def scale(al: complex, ka: complex, cc: complex,
              uu: complex, ww: complex) -> float:
        vals = (abs(al), abs(ka), abs(cc), abs(uu), abs(ww))
        best = 0.0
        for coeff, exps in terms:
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            if term > best:
                best = term
        return best

    return scale


class _Compiled:
    """Lazily compiled evaluators for the fixed system."""

    def __init__(self, spec: SystemSpec):
        self.spec = spec
        self.A = {name: _compile(poly) for name, poly in
                  (("A1", spec.A1), ("A2", spec.A2), ("A3", spec.A3),
                   ("A4", spec.A4), ("A5", spec.A5))}
        self.A_scale = {name: _compile_scale(poly) for name, poly in
                        (("A4", spec.A4), ("A5", spec.A5))}
        self.constraints = {name: _compile(poly)
                            for name, poly in spec.constraints.items()}
        self.constraint_scales = {name: _compile_scale(poly)
                                  for name, poly in spec.constraints.items()}
        self.rhs = [_compile(spec.derivation[v])
                    for v in (Variable.ALPHA, Variable.U, Variable.KAPPA,
                              Variable.W)]
        key = load_key_polynomial()
        self.key = _compile(key)
        self.key_coeffs = [key.coefficient(Variable.KAPPA, d)
                           for d in range(4, -1, -1)]
        self.key_coeff_eval = [_compile(cp) for cp in self.key_coeffs]
        self.dkey = _compile(key.partial_derivative(Variable.KAPPA))


_COMPILED: Optional[_Compiled] = None


def _compiled() -> _Compiled:
    global _COMPILED
    if _COMPILED is None:
        _COMPILED = _Compiled(system_spec())
    return _COMPILED


@dataclass(frozen=True)
class StatePoint:
    """A numeric (possibly complex) point for the system variables.

    Residuals are recomputed from the coordinates on every access; they are
    never cached."""

    alpha: complex
    kappa: complex
    c: complex
    u: complex
    w: complex

    @property
    def residuals(self) -> dict:
        comp = _compiled()
        args = (self.alpha, self.kappa, self.c, self.u, self.w)
        return {name: abs(fn(*args)) for name, fn in comp.constraints.items()}

    @property
    def residual_ratios(self) -> dict:
        """Residuals relative to the largest monomial magnitude involved."""
        comp = _compiled()
        args = (self.alpha, self.kappa, self.c, self.u, self.w)
        out = {}
        for name, fn in comp.constraints.items():
            scale = comp.constraint_scales[name](*args)
            out[name] = abs(fn(*args)) / scale if scale > 0 else abs(fn(*args))
        return out

    def is_real(self, tol: float = 1e-12) -> bool:
        return all(abs(z.imag) <= tol for z in
                   (complex(self.alpha), complex(self.kappa), complex(self.c),
                    complex(self.u), complex(self.w)))


def sample_variety_point(alpha: complex, kappa: complex, c: complex,
                         branch: int = 1) -> StatePoint:
    """Complete (alpha, kappa, c) to a constraint-variety point.

    Sets w = branch * sqrt(A4*A1/A5) (principal complex square root) and
    u = alpha*A1/w, which satisfies all four constraints exactly in exact
    arithmetic and to rounding error here.  Raises DegeneratePointError when
    A4, A5 or the resulting w is numerically degenerate; the degenerate
    branch analysis covers those loci.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    comp = _compiled()
    args0 = (alpha, kappa, c, 0j, 0j)
    a1 = comp.A["A1"](*args0)
    a4 = comp.A["A4"](*args0)
    a5 = comp.A["A5"](*args0)
    a4_scale = comp.A_scale["A4"](*args0)
    a5_scale = comp.A_scale["A5"](*args0)
    if abs(a4) <= DEGENERACY_TOL * max(a4_scale, 1.0) \
            or abs(a5) <= DEGENERACY_TOL * max(a5_scale, 1.0):
        raise DegeneratePointError(
            "A4 or A5 vanishes here; use the degenerate branch analysis")
    w = branch * cmath.sqrt(a4 * a1 / a5)
    if abs(w) <= DEGENERACY_TOL * max(1.0, abs(a1)):
        raise DegeneratePointError("w vanishes here (A1 is on its zero set)")
    u = alpha * a1 / w
    return StatePoint(complex(alpha), complex(kappa), complex(c), u, w)


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randrange(-128, 129), 64)


def _random_complex(rng: random.Random, min_abs: float = 0.125) -> complex:
    while True:
        z = complex(float(_random_rational(rng)), float(_random_rational(rng)))
        if abs(z) >= min_abs:
            return z


@dataclass(frozen=True)
class OracleReport:
    samples: int
    max_rel_dev: float
    max_flow_ratio: float
    real_points: int
    complex_points: int
    tol: float
    passed: bool

    def as_json(self) -> dict:
        return {
            "samples": self.samples,
            "max_rel_dev": self.max_rel_dev,
            "max_flow_ratio": self.max_flow_ratio,
            "real_points": self.real_points,
            "complex_points": self.complex_points,
            "tol": self.tol,
            "pass": self.passed,
        }


def kappa_roots(alpha: complex, c: complex) -> List[complex]:
    """The four complex roots in k of the key quartic at fixed (a, c),
    polished by two Newton steps."""
    comp = _compiled()
    coeffs = [fn(alpha, 0j, c, 0j, 0j) for fn in comp.key_coeff_eval]
    roots = list(np.roots(coeffs))
    polished = []
    for r in roots:
        z = complex(r)
        for _ in range(2):
            f = comp.key(alpha, z, c, 0j, 0j)
            df = comp.dkey(alpha, z, c, 0j, 0j)
            if df != 0:
                z = z - f / df
        polished.append(z)
    return polished


def numeric_reduction_oracle(n_samples: int, seed: int,
                             tol: float = 1e-9) -> OracleReport:
    """Evaluation cross-check of the symbolic reduction.

    Two families of variety points are used, n_samples of each:

    * free points (random complex (a, k, c)) check the reduction identity:
      clearing_multiplier * D(C2) must equal lam * factor * key polynomial,
      within `tol` relative deviation, and D(C1) must vanish;
    * quartic-rooted points (k a root of the key polynomial at random
      (a, c)) check that D(Ci) vanishes for all four constraints, which is
      the flow-consistency statement: the constraint variety is conserved
      exactly on the locus where the key relation also holds.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    spec = system_spec()
    comp = _compiled()
    report = derive_key_polynomial(spec)
    lam = float(report.lam) if report.lam is not None else 0.0

    raw_poly = apply_derivation(spec, spec.constraints["C2"])
    raw = _compile(raw_poly)
    mult = _compile(report.clearing_multiplier)
    factor = _compile(report.extracted_factor)
    lhs_scale = _compile_scale(report.clearing_multiplier * raw_poly)
    dC = {name: apply_derivation(spec, poly)
          for name, poly in spec.constraints.items()}
    dC_eval = {name: _compile(p) for name, p in dC.items()}
    dC_scale = {name: _compile_scale(p) for name, p in dC.items()}

    rng = random.Random(seed)
    max_rel_dev = 0.0
    max_flow_ratio = 0.0
    real_points = 0
    complex_points = 0

    def build_point(al, ka, cc) -> Optional[StatePoint]:
        best = None
        for branch in (1, -1):
            try:
                pt = sample_variety_point(al, ka, cc, branch)
            except DegeneratePointError:
                return None
            r2 = pt.residuals["C2"]
            if best is None or r2 < best[0]:
                best = (r2, pt)
        return best[1]

    # Family 1: free (a, k, c).
    collected = 0
    attempts = 0
    while collected < n_samples:
        attempts += 1
        if attempts > 100 * n_samples:
            raise SamplingFailureError(
                f"only {collected}/{n_samples} free samples after {attempts} tries")
        al = _random_complex(rng)
        ka = _random_complex(rng)
        cc = _random_complex(rng)
        pt = build_point(al, ka, cc)
        if pt is None:
            continue
        args = (pt.alpha, pt.kappa, pt.c, pt.u, pt.w)
        lhs = mult(*args) * raw(*args)
        rhs = lam * factor(*args) * comp.key(*args)
        scale = max(abs(lhs), abs(rhs), 1e-6 * max(lhs_scale(*args), 1.0))
        max_rel_dev = max(max_rel_dev, abs(lhs - rhs) / scale)
        dc1_scale = max(dC_scale["C1"](*args), 1e-30)
        max_flow_ratio = max(max_flow_ratio,
                             abs(dC_eval["C1"](*args)) / dc1_scale)
        if pt.is_real():
            real_points += 1
        else:
            complex_points += 1
        collected += 1

    # Family 2: quartic-rooted (a, c).
    collected = 0
    attempts = 0
    while collected < n_samples:
        attempts += 1
        if attempts > 100 * n_samples:
            raise SamplingFailureError(
                f"only {collected}/{n_samples} rooted samples after {attempts} tries")
        al = _random_complex(rng)
        cc = _random_complex(rng)
        roots = kappa_roots(al, cc)
        ka = roots[rng.randrange(len(roots))]
        pt = build_point(al, ka, cc)
        if pt is None:
            continue
        args = (pt.alpha, pt.kappa, pt.c, pt.u, pt.w)
        for name in ("C1", "C2", "C3", "C4"):
            scale = max(dC_scale[name](*args), 1e-30)
            max_flow_ratio = max(max_flow_ratio,
                                 abs(dC_eval[name](*args)) / scale)
        if pt.is_real():
            real_points += 1
        else:
            complex_points += 1
        collected += 1

    passed = report.match and max_rel_dev <= tol and max_flow_ratio <= tol
    return OracleReport(2 * n_samples, max_rel_dev, max_flow_ratio,
                        real_points, complex_points, tol, passed)


# -- flow integration ----------------------------------------------------------------


@dataclass
class FlowReport:
    t_end: float
    step: float
    times: list
    states: list
    max_drift: dict
    discretization_drift: dict
    blowup: bool

    def as_json(self) -> dict:
        return {
            "t_end": self.t_end,
            "step": self.step,
            "max_drift": dict(self.max_drift),
            "discretization_drift": dict(self.discretization_drift),
            "blowup": self.blowup,
        }


def _rk4_step(state: tuple, cc: complex, h: float, rhs_fns) -> tuple:
    def deriv(s):
        al, uu, ka, ww = s
        return tuple(fn(al, ka, cc, uu, ww) for fn in rhs_fns)

    k1 = deriv(state)
    k2 = deriv(tuple(s + 0.5 * h * d for s, d in zip(state, k1)))
    k3 = deriv(tuple(s + 0.5 * h * d for s, d in zip(state, k2)))
    k4 = deriv(tuple(s + h * d for s, d in zip(state, k3)))
    return tuple(s + h / 6.0 * (a + 2 * b + 2 * c_ + d)
                 for s, a, b, c_, d in zip(state, k1, k2, k3, k4))


def _integrate(state: tuple, cc: complex, h: float, n: int,
               rhs_fns, keep_every: int = 1) -> tuple:
    states = [state]
    blowup = False
    for i in range(n):
        state = _rk4_step(state, cc, h, rhs_fns)
        if max(abs(z) for z in state) > BLOWUP_LIMIT:
            blowup = True
            break
        if (i + 1) % keep_every == 0:
            states.append(state)
    return states, blowup


def flow_integrate(start: StatePoint, t_end: float, step: float,
                   reference_refinement: int = 4) -> FlowReport:
    """RK4 integration of the derivation flow with drift monitoring.

    The autonomous system is a' = u, u' = a*A2, k' = A3*w - (27/4)*a*u,
    w' = w^2 + 2k + 4c - (27/4)*a^2 with c constant, taken directly from
    the rule table.  `max_drift` reports the largest excursion of each
    constraint value and of the key polynomial from their start values
    along the trajectory (the raw, integrator-independent drift).
    `discretization_drift` isolates the integrator's own contribution by
    comparing against a trajectory at step/reference_refinement on the same
    grid; that component scales like step**4 and is the quantity that the
    order-of-convergence check halves.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    ratios = start.residual_ratios
    worst = max(ratios.values())
    if worst > 1e-6:
        raise ValueError(
            f"start point residual ratio {worst:.2e} exceeds the 1e-6 gate")
    comp = _compiled()
    n = max(1, round(t_end / step))
    cc = complex(start.c)
    state0 = (complex(start.alpha), complex(start.u),
              complex(start.kappa), complex(start.w))

    states, blowup = _integrate(state0, cc, step, n, comp.rhs)
    times = [i * step for i in range(len(states))]

    names = ("C1", "C2", "C3", "C4", "P")

    def values(s: tuple) -> dict:
        al, uu, ka, ww = s
        args = (al, ka, cc, uu, ww)
        out = {name: comp.constraints[name](*args)
               for name in ("C1", "C2", "C3", "C4")}
        out["P"] = comp.key(*args)
        return out

    base = values(state0)
    max_drift = {name: 0.0 for name in names}
    for s in states:
        vals = values(s)
        for name in names:
            max_drift[name] = max(max_drift[name], abs(vals[name] - base[name]))

    disc = {name: 0.0 for name in names}
    if not blowup and reference_refinement > 1:
        ref_states, ref_blowup = _integrate(
            state0, cc, step / reference_refinement,
            n * reference_refinement, comp.rhs, keep_every=reference_refinement)
        if not ref_blowup:
            for s, r in zip(states, ref_states):
                vs, vr = values(s), values(r)
                for name in names:
                    disc[name] = max(disc[name], abs(vs[name] - vr[name]))

    return FlowReport(t_end=t_end, step=step, times=times,
                      states=states, max_drift=max_drift,
                      discretization_drift=disc, blowup=blowup)


def scaled_quartic_start(scale: float = 0.01, alpha_unit: float = 0.8,
                         c_unit: float = 1.0, root_index: int = 0,
                         branch: int = 1) -> StatePoint:
    """A variety start point on the key-polynomial locus, shrunk by the
    weighted scaling (a, k, c, u, w) -> (s*a, s^2*k, s^2*c, s^2*u, s*w)
    under which the whole system is homogeneous.  Small scales keep the
    true constraint drift of the flow tiny."""
    al = alpha_unit * scale
    cc = c_unit * scale * scale
    roots = sorted(kappa_roots(complex(al), complex(cc)),
                   key=lambda z: (z.real, z.imag))
    ka = roots[root_index % len(roots)]
    return sample_variety_point(al, ka, cc, branch)


# -- exact real-root isolation ----------------------------------------------------------


@dataclass(frozen=True)
class RootInterval:
    lower: Fraction
    upper: Fraction
    sign_change: bool

    def width(self) -> Fraction:
        return self.upper - self.lower

    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def as_json(self) -> dict:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "approx": float(self.midpoint()),
            "sign_change": self.sign_change,
        }


TARGET_WIDTH = Fraction(1, 2 ** 30)


def _univariate_coefficients(p: Polynomial) -> list:
    used = p.variables()
    if len(used) > 1:
        raise ValueError("polynomial is not univariate")
    v = used.pop() if used else Variable.ALPHA
    coeffs = [Fraction(0)] * (p.degree(v) + 1)
    for exps, coeff in p.terms():
        coeffs[exps[v]] += coeff
    return coeffs


def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _derivative(coeffs: Sequence[Fraction]) -> list:
    return [i * c for i, c in enumerate(coeffs)][1:] or [Fraction(0)]


def _trim(coeffs: Sequence[Fraction]) -> list:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _divmod_poly(f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple:
    f = _trim(f)
    g = _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g) and _trim(r):
        r = _trim(r)
        if len(r) < len(g):
            break
        shift = len(r) - len(g)
        factor = r[-1] / g[-1]
        q[shift] = factor
        for i, gc in enumerate(g):
            r[shift + i] -= factor * gc
        r = _trim(r)
    return _trim(q), _trim(r)


def _gcd_poly(f: Sequence[Fraction], g: Sequence[Fraction]) -> list:
    f, g = _trim(f), _trim(g)
    while g:
        _, r = _divmod_poly(f, g)
        f, g = g, r
    if f:
        lead = f[-1]
        f = [c / lead for c in f]
    return f


def _squarefree(coeffs: Sequence[Fraction]) -> list:
    d = _derivative(coeffs)
    g = _gcd_poly(coeffs, d)
    if len(g) <= 1:
        return _trim(coeffs)
    q, r = _divmod_poly(coeffs, g)
    assert not r, "squarefree division left a remainder"
    return q


def _sturm_chain(coeffs: Sequence[Fraction]) -> list:
    chain = [_trim(coeffs), _trim(_derivative(coeffs))]
    while chain[-1]:
        _, r = _divmod_poly(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for coeffs in chain:
        v = _eval(coeffs, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def _nonroot_split(coeffs: Sequence[Fraction], lo: Fraction,
                   hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 5), (4, 5), (3, 7), (5, 7)):
        mid = lo + (hi - lo) * Fraction(num, den)
        if _eval(coeffs, mid) != 0:
            return mid
    raise AssertionError("could not find a non-root split point")


def isolate_real_roots(p: Polynomial) -> List[RootInterval]:
    """Complete, sound isolation of the real roots of a univariate p.

    Sturm-sequence counting on the squarefree part, followed by sign
    bisection down to width <= 2**-30.  Returned intervals are pairwise
    disjoint, sorted, and each contains exactly one real root of p.
    """
    if p.is_zero():
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    coeffs = _trim(_univariate_coefficients(p))
    if len(coeffs) <= 1:
        return []
    sf = _squarefree(coeffs)
    if len(sf) <= 1:
        return []
    if len(sf) == 2:
        root = -sf[0] / sf[1]
        return [RootInterval(root, root, True)]
    chain = _sturm_chain(sf)
    bound = Fraction(1) + max(abs(c) for c in sf[:-1]) / abs(sf[-1])
    work = [(-bound, bound)]
    found = []
    while work:
        lo, hi = work.pop()
        vlo, vhi = _variations(chain, lo), _variations(chain, hi)
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            found.append(_refine(sf, lo, hi))
            continue
        mid = _nonroot_split(sf, lo, hi)
        work.append((lo, mid))
        work.append((mid, hi))
    found.sort(key=lambda r: r.lower)
    return found


def _refine(sf: Sequence[Fraction], lo: Fraction, hi: Fraction) -> RootInterval:
    flo = _eval(sf, lo)
    if flo == 0:
        return RootInterval(lo, lo, True)
    fhi = _eval(sf, hi)
    if fhi == 0:
        return RootInterval(hi, hi, True)
    if (flo > 0) == (fhi > 0):
        # Single root without a sign change cannot happen for a squarefree
        # polynomial; guard against a miscounted interval.
        raise AssertionError("isolated interval lacks a sign change")
    while hi - lo > TARGET_WIDTH:
        mid = (lo + hi) / 2
        fmid = _eval(sf, mid)
        if fmid == 0:
            return RootInterval(mid, mid, True)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return RootInterval(lo, hi, True)
