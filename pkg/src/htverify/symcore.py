"""Exact rational scalars and sparse multivariate polynomials.

Everything downstream (the derivation system, the elimination engine, the
fixtures) computes in the ring Q[a, k, c, u, w, b2, b3, k2, k3, d2, d3].
Coefficients are exact rationals end to end; no floating point enters this
module.  Polynomials are stored sparsely as a map from exponent vectors to
nonzero coefficients, and the canonical text rendering orders terms by
descending graded-lexicographic order under the fixed variable order
a > k > c > u > w > b2 > b3 > k2 > k3 > d2 > d3.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction]


class Variable(enum.IntEnum):
    """The fixed, totally ordered variable universe."""

    ALPHA = 0
    KAPPA = 1
    C = 2
    U = 3
    W = 4
    BETA2 = 5
    BETA3 = 6
    K2 = 7
    K3 = 8
    D2 = 9
    D3 = 10

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    Variable.ALPHA: "a",
    Variable.KAPPA: "k",
    Variable.C: "c",
    Variable.U: "u",
    Variable.W: "w",
    Variable.BETA2: "b2",
    Variable.BETA3: "b3",
    Variable.K2: "k2",
    Variable.K3: "k3",
    Variable.D2: "d2",
    Variable.D3: "d3",
}
_SYMBOL_TO_VAR = {sym: v for v, sym in _SYMBOLS.items()}
NVARS = len(Variable)
_ZERO_EXPS = (0,) * NVARS


class PolynomialError(Exception):
    """Base class for errors raised by this module."""


class ParseError(PolynomialError):
    """Malformed polynomial text.  Carries the 0-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegenerateInputError(PolynomialError):
    """An operand does not actually involve the elimination variable."""


def _as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    """Sparse multivariate polynomial over exact rationals.

    Immutable by convention: no public method mutates `self`, and the term
    map is copied on construction.  Values may be shared freely between
    threads.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, ScalarLike] = ()):
        cleaned = {}
        for exps, coeff in dict(terms).items():
            coeff = _as_scalar(coeff)
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != NVARS or any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"bad exponent vector: {exps!r}")
            cleaned[exps] = coeff
        self._terms = cleaned
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, value: ScalarLike) -> "Polynomial":
        return cls({_ZERO_EXPS: value})

    @classmethod
    def variable(cls, v: Variable) -> "Polynomial":
        exps = [0] * NVARS
        exps[v] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def monomial(cls, coeff: ScalarLike, powers: Mapping[Variable, int]) -> "Polynomial":
        exps = [0] * NVARS
        for v, e in powers.items():
            exps[v] = e
        return cls({tuple(exps): coeff})

    # -- basic views ------------------------------------------------------

    def terms(self) -> Iterator[tuple]:
        """Yield (exponent-vector, coefficient) in descending graded-lex order."""
        for exps in sorted(self._terms, key=_grlex_key, reverse=True):
            yield exps, self._terms[exps]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({canonical_text(self)!r})"

    def variables(self) -> set:
        """The variables that actually occur."""
        used = set()
        for exps in self._terms:
            for v in Variable:
                if exps[v]:
                    used.add(v)
        return used

    def degree(self, v: Variable) -> int:
        """Degree in `v`; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(exps[v] for exps in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if non-constant."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and _ZERO_EXPS in self._terms:
            return self._terms[_ZERO_EXPS]
        raise ValueError("polynomial is not constant")

    def coefficient(self, v: Variable, power: int) -> "Polynomial":
        """The coefficient of v**power, as a polynomial in the other variables."""
        out = {}
        for exps, coeff in self._terms.items():
            if exps[v] == power:
                reduced = list(exps)
                reduced[v] = 0
                out[tuple(reduced)] = coeff
        return Polynomial(out)

    def leading_coefficient(self, v: Variable) -> "Polynomial":
        return self.coefficient(v, self.degree(v)) if self._terms else Polynomial.zero()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc = out.get(exps, 0) + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return _raw({exps: -coeff for exps, coeff in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return Polynomial.zero()
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scaled(self, factor: ScalarLike) -> "Polynomial":
        factor = _as_scalar(factor)
        if factor == 0:
            return Polynomial.zero()
        return _raw({exps: coeff * factor for exps, coeff in self._terms.items()})

    # -- calculus and substitution ------------------------------------------

    def partial_derivative(self, v: Variable) -> "Polynomial":
        out = {}
        for exps, coeff in self._terms.items():
            e = exps[v]
            if e == 0:
                continue
            reduced = list(exps)
            reduced[v] = e - 1
            out[tuple(reduced)] = coeff * e
        return _raw(out)

    def substitute(self, v: Variable, replacement: "Polynomial") -> "Polynomial":
        """Image of the ring map sending v to `replacement` (exact)."""
        replacement = _coerce(replacement)
        powers = {0: Polynomial.constant(1)}

        def power(e: int) -> Polynomial:
            if e not in powers:
                powers[e] = power(e - 1) * replacement
            return powers[e]

        result = Polynomial.zero()
        for exps, coeff in self._terms.items():
            rest = list(exps)
            e = rest[v]
            rest[v] = 0
            result = result + power(e) * Polynomial({tuple(rest): coeff})
        return result

    def substitute_fraction(self, v: Variable, num: "Polynomial",
                            den: "Polynomial") -> tuple:
        """Substitute v -> num/den with denominators cleared.

        Returns (q, d) where d = degree of self in v and
        q = den**d * self(v -> num/den) exactly.
        """
        d = self.degree(v)
        if d <= 0:
            return self, 0
        num_pows = {0: Polynomial.constant(1)}
        den_pows = {0: Polynomial.constant(1)}
        for i in range(1, d + 1):
            num_pows[i] = num_pows[i - 1] * num
            den_pows[i] = den_pows[i - 1] * den
        result = Polynomial.zero()
        for exps, coeff in self._terms.items():
            rest = list(exps)
            e = rest[v]
            rest[v] = 0
            result = result + (num_pows[e] * den_pows[d - e]
                               * Polynomial({tuple(rest): coeff}))
        return result, d

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Mapping[Variable, object]):
        """Evaluate at a point.

        Exact (Fraction) when every supplied value is int/Fraction, complex
        floating otherwise.  Every variable occurring in the polynomial must
        be assigned.
        """
        missing = self.variables() - set(point)
        if missing:
            raise KeyError(f"unassigned variables: {sorted(v.symbol for v in missing)}")
        exact = all(isinstance(point[v], (int, Fraction)) for v in self.variables())
        total = Fraction(0) if exact else 0j
        for exps, coeff in self._terms.items():
            term = coeff if exact else complex(coeff)
            for v in Variable:
                e = exps[v]
                if e:
                    val = point[v] if exact else complex(point[v])
                    term = term * val ** e
            total = total + term
        return total

    def evaluate_scale(self, point: Mapping[Variable, object]) -> float:
        """Largest monomial magnitude at the point (the cancellation scale)."""
        scale = 0.0
        for exps, coeff in self._terms.items():
            mag = abs(complex(coeff))
            for v in Variable:
                e = exps[v]
                if e:
                    mag *= abs(complex(point[v])) ** e
            scale = max(scale, mag)
        return scale

    # -- content helpers -----------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if not self._terms:
            return Fraction(0)
        from math import gcd, lcm
        n = 0
        d = 1
        for coeff in self._terms.values():
            n = gcd(n, abs(coeff.numerator))
            d = lcm(d, coeff.denominator)
        return Fraction(n, d)

    def monomial_content(self) -> tuple:
        """Componentwise minimum exponent vector across all terms."""
        if not self._terms:
            return _ZERO_EXPS
        mins = [min(exps[i] for exps in self._terms) for i in range(NVARS)]
        return tuple(mins)

    def divide_monomial(self, exps: tuple) -> "Polynomial":
        out = {}
        for e, coeff in self._terms.items():
            reduced = tuple(a - b for a, b in zip(e, exps))
            if any(x < 0 for x in reduced):
                raise ValueError("monomial does not divide every term")
            out[reduced] = coeff
        return _raw(out)

    def primitive_part(self) -> "Polynomial":
        """Self divided by rational and monomial content, sign-normalized so
        the graded-lex leading coefficient is positive."""
        if not self._terms:
            return self
        p = self.divide_monomial(self.monomial_content())
        p = p.scaled(1 / p.rational_content())
        lead = max(p._terms, key=_grlex_key)
        if p._terms[lead] < 0:
            p = -p
        return p


def _raw(terms: dict) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p._terms = terms
    p._hash = None
    return p


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


def arith(p: Polynomial, q: Polynomial, kind: str) -> Polynomial:
    """Ring arithmetic dispatch: kind is one of 'add', 'sub', 'mul'."""
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind: {kind!r}")


# -- pseudo-division and exact division -------------------------------------


def _split_by_variable(p: Polynomial, v: Variable) -> dict:
    """Map degree-in-v -> coefficient polynomial (v removed)."""
    out = {}
    for exps, coeff in p._terms.items():
        e = exps[v]
        rest = list(exps)
        rest[v] = 0
        bucket = out.setdefault(e, {})
        key = tuple(rest)
        acc = bucket.get(key, 0) + coeff
        if acc:
            bucket[key] = acc
        else:
            bucket.pop(key, None)
    return {e: _raw(bucket) for e, bucket in out.items() if bucket}


def _join_by_variable(parts: Mapping[int, Polynomial], v: Variable) -> Polynomial:
    out = {}
    for e, part in parts.items():
        for exps, coeff in part._terms.items():
            key = list(exps)
            key[v] = key[v] + e
            key = tuple(key)
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return _raw(out)


def pseudo_divide(p: Polynomial, q: Polynomial, v: Variable,
                  classical: bool = False) -> tuple:
    """Pseudo-division of p by q with respect to v.

    Returns (multiplier, quotient, remainder) satisfying exactly

        multiplier * p == quotient * q + remainder,

    with deg_v(remainder) < deg_v(q) and multiplier a power of the leading
    v-coefficient of q.  The power is tight (one factor per reduction step)
    unless `classical` is set, in which case it is forced to
    lc**(deg p - deg q + 1) as the textbook prem/pquo convention requires.
    """
    if q.is_zero():
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    dq = q.degree(v)
    lead_q = q.leading_coefficient(v)
    remainder = p
    quotient = Polynomial.zero()
    multiplier = Polynomial.constant(1)
    steps = 0
    while not remainder.is_zero() and remainder.degree(v) >= dq:
        dr = remainder.degree(v)
        lead_r = remainder.leading_coefficient(v)
        shift = Polynomial.monomial(1, {v: dr - dq})
        quotient = lead_q * quotient + lead_r * shift
        remainder = lead_q * remainder - lead_r * shift * q
        multiplier = multiplier * lead_q
        steps += 1
    if classical:
        want = max(p.degree(v) - dq + 1, 0)
        pad = lead_q ** (want - steps)
        quotient = quotient * pad
        remainder = remainder * pad
        multiplier = multiplier * pad
    return multiplier, quotient, remainder


def divide_exact(p: Polynomial, d: Polynomial) -> Polynomial:
    """Exact division: returns q with p == q * d, or raises ValueError."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Polynomial.zero()
    if len(d) == 1:
        (exps, coeff), = d._terms.items()
        return p.divide_monomial(exps).scaled(Fraction(1) / coeff)
    lead_d = max(d._terms, key=_grlex_key)
    cd = d._terms[lead_d]
    rem = dict(p._terms)
    out = {}
    while rem:
        lead_r = max(rem, key=_grlex_key)
        qexp = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(e < 0 for e in qexp):
            raise ValueError("division is not exact")
        qc = rem[lead_r] / cd
        out[qexp] = qc
        for exps, coeff in d._terms.items():
            key = tuple(a + b for a, b in zip(qexp, exps))
            acc = rem.get(key, 0) - qc * coeff
            if acc:
                rem[key] = acc
            else:
                rem.pop(key, None)
    return _raw(out)


# -- resultants ---------------------------------------------------------------


def sylvester_matrix(p: Polynomial, q: Polynomial, v: Variable) -> list:
    """Sylvester matrix of (p, q) in v, p's coefficient rows first.

    Entries are polynomials in the remaining variables; the matrix is
    (m+n) x (m+n) for m = deg_v(p), n = deg_v(q).
    """
    m, n = p.degree(v), q.degree(v)
    if m < 1 or n < 1:
        raise DegenerateInputError("both operands must depend on the variable")
    pc = _split_by_variable(p, v)
    qc = _split_by_variable(q, v)
    size = m + n
    zero = Polynomial.zero()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j in range(m + 1):
            row[i + j] = pc.get(m - j, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j in range(n + 1):
            row[i + j] = qc.get(n - j, zero)
        rows.append(row)
    return rows


def bareiss_determinant(matrix: list) -> Polynomial:
    """Fraction-free Bareiss determinant of a square matrix of polynomials.

    Row pivoting picks the sparsest nonzero candidate; every interior
    division is exact by the Bareiss identity.
    """
    m = [row[:] for row in matrix]
    size = len(m)
    sign = 1
    prev = Polynomial.constant(1)
    for k in range(size - 1):
        pivot_row = None
        best = None
        for i in range(k, size):
            if not m[i][k].is_zero():
                weight = len(m[i][k])
                if best is None or weight < best:
                    best = weight
                    pivot_row = i
        if pivot_row is None:
            return Polynomial.zero()
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numer = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = divide_exact(numer, prev)
            m[i][k] = Polynomial.zero()
        prev = pivot
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def resultant(p: Polynomial, q: Polynomial, v: Variable) -> Polynomial:
    """Sylvester resultant with respect to v.

    Sign convention: det of the Sylvester matrix with p's coefficient rows
    first.  Computed by fraction-free Bareiss elimination; falls back to the
    subresultant remainder chain if an exact interior division ever fails
    (it should not, but the chain is a safe independent route).
    """
    if p.is_zero() or q.is_zero() or p.degree(v) < 1 or q.degree(v) < 1:
        raise DegenerateInputError(
            "resultant requires both operands to depend on the variable")
    try:
        return bareiss_determinant(sylvester_matrix(p, q, v))
    except ValueError:
        return _resultant_via_prs(p, q, v)


def subresultant_prs(f: Polynomial, g: Polynomial, v: Variable) -> list:
    """Subresultant polynomial remainder sequence of (f, g) in v.

    Classical Collins chain: pseudo-remainders divided by the beta factors,
    which removes exactly the content the raw chain would accumulate.  For a
    normal chain (degree drops of one) the last member of the sequence of a
    coprime pair equals the resultant.
    """
    if f.degree(v) < g.degree(v):
        f, g = g, f
    if g.is_zero():
        return [f]
    prs = [f, g]
    one = Polynomial.constant(1)
    delta = f.degree(v) - g.degree(v)
    beta = Polynomial.constant(Fraction((-1) ** (delta + 1)))
    psi = -one
    while True:
        _, _, rem = pseudo_divide(prs[-2], prs[-1], v, classical=True)
        if rem.is_zero():
            break
        rem = divide_exact(rem, beta)
        prs.append(rem)
        if rem.degree(v) <= 0:
            break
        lc = prs[-2].leading_coefficient(v)
        if delta > 0:
            psi = divide_exact((-lc) ** delta, psi ** (delta - 1))
        delta = prs[-2].degree(v) - prs[-1].degree(v)
        beta = -lc * psi ** delta
    return prs


def _resultant_via_prs(p: Polynomial, q: Polynomial, v: Variable) -> Polynomial:
    chain = subresultant_prs(p, q, v)
    last = chain[-1]
    if last.degree(v) > 0:
        return Polynomial.zero()
    # Sign relative to det(Sylvester) for a normal chain with p rows first.
    m, n = p.degree(v), q.degree(v)
    sign = 1 if (m * n) % 2 == 0 or m >= n else -1
    swapped = p.degree(v) < q.degree(v)
    if swapped and (m * n) % 2 == 1:
        sign = -sign
    return last if sign == 1 else -last


# -- text format ----------------------------------------------------------------


def canonical_text(p: Polynomial) -> str:
    """Deterministic rendering; inverse of parse()."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, coeff in p.terms():
        factors = []
        for v in Variable:
            e = exps[v]
            if e == 1:
                factors.append(v.symbol)
            elif e > 1:
                factors.append(f"{v.symbol}^{e}")
        mag = abs(coeff)
        if not factors:
            body = _scalar_text(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _scalar_text(mag) + "*" + "*".join(factors)
        parts.append((coeff < 0, body))
    first_neg, first_body = parts[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _scalar_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def take_variable(self) -> Variable:
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not self.text[self.pos].isalpha():
            raise ParseError("expected a variable name", start)
        name = self.text[self.pos]
        self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos].isdigit() \
                and name + self.text[self.pos] in _SYMBOL_TO_VAR:
            name += self.text[self.pos]
            self.pos += 1
        if name not in _SYMBOL_TO_VAR:
            raise ParseError(f"unknown variable {name!r}", start)
        return _SYMBOL_TO_VAR[name]


def parse(text: str) -> Polynomial:
    """Parse the canonical polynomial grammar.

    Terms joined by '+'/'-'; a term is [coefficient]['*']monomial or a bare
    coefficient; a coefficient is an integer or integer/integer; a monomial
    is '*'-separated variable factors, each optionally '^'exponent.
    Whitespace is insignificant.  Raises ParseError with a position.
    """
    tok = _Tokenizer(text)
    result = Polynomial.zero()
    expect_term = True
    sign = 1
    tok.skip_ws()
    if tok.peek() == "":
        raise ParseError("empty input", 0)
    while True:
        ch = tok.peek()
        if ch == "" and not expect_term:
            break
        if expect_term:
            if ch == "-":
                tok.pos += 1
                sign = -sign
                continue
            if ch == "+":
                tok.pos += 1
                continue
            result = result + _parse_term(tok).scaled(sign)
            sign = 1
            expect_term = False
        else:
            if ch == "+":
                tok.pos += 1
                expect_term = True
            elif ch == "-":
                tok.pos += 1
                sign = -1
                expect_term = True
            else:
                raise ParseError(f"unexpected character {ch!r}", tok.pos)
    return result


def _parse_term(tok: _Tokenizer) -> Polynomial:
    coeff = Fraction(1)
    powers = {}
    saw_coefficient = False
    ch = tok.peek()
    if ch.isdigit():
        num = tok.take_int()
        if tok.peek() == "/":
            tok.pos += 1
            den_pos = tok.pos
            den = tok.take_int()
            if den == 0:
                raise ParseError("zero denominator", den_pos)
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
        saw_coefficient = True
        if tok.peek() == "*":
            tok.pos += 1
        elif not tok.peek().isalpha():
            return Polynomial.constant(coeff)
    while True:
        v = tok.take_variable()
        e = 1
        if tok.peek() == "^":
            tok.pos += 1
            e = tok.take_int()
        powers[v] = powers.get(v, 0) + e
        if tok.peek() == "*":
            tok.pos += 1
            if tok.peek().isdigit():
                raise ParseError("coefficient must precede the monomial", tok.pos)
            continue
        break
    if not powers and not saw_coefficient:
        raise ParseError("empty term", tok.pos)
    return Polynomial.monomial(coeff, powers)


# Convenience handles used across the package.
ALPHA = Polynomial.variable(Variable.ALPHA)
KAPPA = Polynomial.variable(Variable.KAPPA)
C = Polynomial.variable(Variable.C)
U = Polynomial.variable(Variable.U)
W = Polynomial.variable(Variable.W)
BETA2 = Polynomial.variable(Variable.BETA2)
BETA3 = Polynomial.variable(Variable.BETA3)
K2 = Polynomial.variable(Variable.K2)
K3 = Polynomial.variable(Variable.K3)
D2 = Polynomial.variable(Variable.D2)
D3 = Polynomial.variable(Variable.D3)


def frac(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)
