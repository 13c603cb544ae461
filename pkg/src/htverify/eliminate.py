"""Kappa-elimination endgame.

Starting from the key quartic relation P(a, k, c) = 0, the total derivative
of P along the curvature profile (with dk/da supplied by the derivation
system and denominators cleared by a*A5) yields a quintic-in-k companion Q.
Eliminating k between P and Q, either through the Sylvester resultant or
through the stepwise subresultant remainder chain, produces a k-free
polynomial in (a, c) whose specializations at fixed c are the
constant-coefficient equations the mean curvature must satisfy.  The two
degenerate branches substitute the root of A4 = 0 or A5 = 0 for k directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .symcore import (
    ALPHA, C, KAPPA, DegenerateInputError, Polynomial, Variable,
    canonical_text, divide_exact, resultant, subresultant_prs,
)
from .geomsys import SystemSpec, system_spec

_BASE_VARS = {Variable.ALPHA, Variable.KAPPA, Variable.C}

METHOD_SYLVESTER = "sylvester"
METHOD_STEPWISE = "stepwise"


def total_alpha_derivative(P: Polynomial,
                           spec: Optional[SystemSpec] = None) -> Polynomial:
    """d/da of P(a, k(a), c) along the curvature profile, denominators cleared.

    Returns Q := a*A5 * dP/da + (A3*A4 - (27/4)*a^2*A5) * dP/dk, which is
    a*A5 times the total derivative once dk/da = A3*A4/(a*A5) - (27/4)*a
    is substituted.
    """
    if not P.variables() <= _BASE_VARS:
        raise ValueError("input must be a polynomial in (a, k, c) only")
    spec = spec or system_spec()
    a = ALPHA
    kprime_cleared = spec.A3 * spec.A4 - (a * a * spec.A5).scaled(Fraction(27, 4))
    return a * spec.A5 * P.partial_derivative(Variable.ALPHA) \
        + kprime_cleared * P.partial_derivative(Variable.KAPPA)


@dataclass(frozen=True)
class SpecializationRecord:
    c_value: Fraction
    polynomial: Polynomial
    nonzero: bool

    def as_json(self) -> dict:
        return {
            "c": str(self.c_value),
            "degree": self.polynomial.degree(Variable.ALPHA),
            "nonzero": self.nonzero,
        }


@dataclass
class EliminationReport:
    P: Polynomial
    Q: Polynomial
    method: str
    eliminant: Polynomial
    eliminant_nonzero: bool
    degrees: tuple
    specializations: list = field(default_factory=list)
    used_subresultant_fallback: bool = False

    def as_json(self) -> dict:
        return {
            "method": self.method,
            "deg_kappa_Q": self.degrees[0],
            "eliminant_degree_alpha": self.degrees[1],
            "eliminant_nonzero": self.eliminant_nonzero,
            "used_subresultant_fallback": self.used_subresultant_fallback,
            "specializations": [s.as_json() for s in self.specializations],
        }


def eliminate_kappa(P: Polynomial, Q: Polynomial,
                    method: str = METHOD_SYLVESTER) -> EliminationReport:
    """Produce a k-free consequence of P = Q = 0.

    `sylvester` evaluates the resultant of (P, Q) in k as the determinant of
    the Sylvester matrix (fraction-free elimination).  `stepwise` runs the
    subresultant remainder chain, eliminating the highest power of k at each
    step with explicit multiplier bookkeeping, and returns its last k-free
    member.  Should the Sylvester resultant vanish identically, the last
    nonzero subresultant is substituted and flagged.
    """
    if P.degree(Variable.KAPPA) < 1 or Q.degree(Variable.KAPPA) < 1:
        raise DegenerateInputError("both inputs must depend on k")
    fallback = False
    if method == METHOD_SYLVESTER:
        elim = resultant(P, Q, Variable.KAPPA)
        if elim.is_zero():
            chain = subresultant_prs(Q, P, Variable.KAPPA)
            last = next((m for m in reversed(chain) if not m.is_zero()),
                        Polynomial.zero())
            elim = _strip_kappa_free_part(last)
            fallback = True
    elif method == METHOD_STEPWISE:
        chain = subresultant_prs(Q, P, Variable.KAPPA)
        last = chain[-1]
        if last.degree(Variable.KAPPA) > 0:
            # Nontrivial common factor in k: no k-free consequence survives.
            elim = Polynomial.zero()
        else:
            elim = last
    else:
        raise ValueError(f"unknown elimination method: {method!r}")
    report = EliminationReport(
        P=P, Q=Q, method=method, eliminant=elim,
        eliminant_nonzero=not elim.is_zero(),
        degrees=(Q.degree(Variable.KAPPA), elim.degree(Variable.ALPHA)),
        used_subresultant_fallback=fallback,
    )
    for cv in (Fraction(-1), Fraction(0), Fraction(1)):
        report.specializations.append(specialize(report, cv))
    return report


def _strip_kappa_free_part(p: Polynomial) -> Polynomial:
    if p.degree(Variable.KAPPA) <= 0:
        return p
    return Polynomial.zero()


def specialize(report: EliminationReport, c_value: Fraction) -> SpecializationRecord:
    """Substitute a rational value for c in the eliminant."""
    poly = report.eliminant.substitute(Variable.C,
                                       Polynomial.constant(Fraction(c_value)))
    return SpecializationRecord(Fraction(c_value), poly, not poly.is_zero())


# -- degenerate branches ----------------------------------------------------------


BRANCH_A4 = "a4"
BRANCH_A5 = "a5"


@dataclass(frozen=True)
class DegenerateBranchReport:
    branch: str
    kappa_value: Polynomial
    restricted: Polynomial
    degree_in_alpha: int
    nonzero: bool

    def as_json(self) -> dict:
        return {
            "branch": self.branch,
            "kappa_value": canonical_text(self.kappa_value),
            "restricted": canonical_text(self.restricted),
            "degree_in_alpha": self.degree_in_alpha,
            "nonzero": self.nonzero,
        }


def degenerate_branch(branch: str, P: Optional[Polynomial] = None,
                      spec: Optional[SystemSpec] = None) -> DegenerateBranchReport:
    """Substitute the vanishing-branch value of k into the key polynomial.

    Solving A5 = 0 (resp. A4 = 0) for k, which is linear in k, and
    substituting into P yields a polynomial in a alone with coefficients in
    c; the report carries it cleared to integer content.
    """
    spec = spec or system_spec()
    if P is None:
        from .geomsys import load_key_polynomial
        P = load_key_polynomial()
    if branch == BRANCH_A4:
        target = spec.A4
    elif branch == BRANCH_A5:
        target = spec.A5
    else:
        raise ValueError(f"unknown branch: {branch!r} (expected 'a4' or 'a5')")
    slope = target.coefficient(Variable.KAPPA, 1).constant_value()
    rest = target - KAPPA.scaled(slope)
    kappa_value = rest.scaled(Fraction(-1) / slope)
    check = target.substitute(Variable.KAPPA, kappa_value)
    if not check.is_zero():
        raise AssertionError("branch value does not annihilate its coefficient")
    restricted = P.substitute(Variable.KAPPA, kappa_value)
    cleared = restricted.scaled(1 / restricted.rational_content()) \
        if not restricted.is_zero() else restricted
    return DegenerateBranchReport(
        branch=branch,
        kappa_value=kappa_value,
        restricted=cleared,
        degree_in_alpha=cleared.degree(Variable.ALPHA),
        nonzero=not cleared.is_zero(),
    )
