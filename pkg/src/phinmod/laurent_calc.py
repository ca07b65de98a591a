"""Formal Laurent calculus on an annulus coordinate.

Finite Laurent polynomials and 1-forms with exact rational coefficients, the
residue, and integration with a formal log term.  Primitives are taken
modulo constants, so the antiderivative type carries no coefficient at
exponent 0; the log branch is a free symbol, never evaluated.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact_linalg import Rational, as_rational


def _canonical(terms) -> tuple:
    """Sorted (exponent, coefficient) pairs, zeros dropped."""
    if isinstance(terms, Mapping):
        terms = terms.items()
    acc = {}
    for n, c in terms:
        c = as_rational(c)
        if c == 0:
            continue
        acc[n] = as_rational(acc.get(n, 0) + c)
        if acc[n] == 0:
            del acc[n]
    return tuple(sorted(acc.items()))


def _terms_str(terms, unit: str) -> str:
    if not terms:
        return "0"
    return " + ".join(f"({c})*z^{n}{unit}" for n, c in terms)


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finite sum of c_n z^n with exact coefficients."""

    terms: tuple

    @staticmethod
    def make(coeffs) -> "LaurentPolynomial":
        return LaurentPolynomial(_canonical(coeffs))

    @staticmethod
    def zero() -> "LaurentPolynomial":
        return LaurentPolynomial(())

    def coefficient(self, n: int) -> Rational:
        for m, c in self.terms:
            if m == n:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return LaurentPolynomial(_canonical(list(self.terms) + list(other.terms)))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "LaurentPolynomial":
        return LaurentPolynomial(_canonical((n, c * a) for n, a in self.terms))

    def differential(self) -> "LaurentForm":
        """d(sum c_n z^n) = sum n c_n z^(n-1) dz; never has a z^-1 term."""
        return LaurentForm(_canonical((n - 1, n * c) for n, c in self.terms))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({_terms_str(self.terms, '')})"


@dataclass(frozen=True)
class LaurentForm:
    """1-form (sum a_n z^n) dz on the annulus."""

    terms: tuple

    @staticmethod
    def make(coeffs) -> "LaurentForm":
        return LaurentForm(_canonical(coeffs))

    @staticmethod
    def zero() -> "LaurentForm":
        return LaurentForm(())

    def coefficient(self, n: int) -> Rational:
        for m, c in self.terms:
            if m == n:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentForm") -> "LaurentForm":
        return LaurentForm(_canonical(list(self.terms) + list(other.terms)))

    def __sub__(self, other: "LaurentForm") -> "LaurentForm":
        return self + other.scale(-1)

    def scale(self, c) -> "LaurentForm":
        return LaurentForm(_canonical((n, c * a) for n, a in self.terms))

    def __repr__(self) -> str:
        return f"LaurentForm({_terms_str(self.terms, ' dz')})"


@dataclass(frozen=True)
class LogFunction:
    """Laurent polynomial plus a multiple of log z, taken modulo constants.

    The exponent-0 slot is deliberately unrepresented: values live in the
    function space modulo the scalar field, so any constant term is dropped
    on construction.
    """

    poly: tuple
    log_coeff: Rational

    @staticmethod
    def make(coeffs, log_coeff=0) -> "LogFunction":
        terms = tuple((n, c) for n, c in _canonical(coeffs) if n != 0)
        return LogFunction(terms, as_rational(log_coeff))

    @staticmethod
    def zero() -> "LogFunction":
        return LogFunction((), 0)

    def coefficient(self, n: int) -> Rational:
        if n == 0:
            raise ValueError("constant term is not represented (class mod constants)")
        for m, c in self.poly:
            if m == n:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.poly and self.log_coeff == 0

    def __add__(self, other: "LogFunction") -> "LogFunction":
        return LogFunction.make(
            list(self.poly) + list(other.poly), self.log_coeff + other.log_coeff
        )

    def __sub__(self, other: "LogFunction") -> "LogFunction":
        return self + other.scale(-1)

    def scale(self, c) -> "LogFunction":
        return LogFunction.make(
            ((n, c * a) for n, a in self.poly), as_rational(c * self.log_coeff)
        )

    def differential(self) -> LaurentForm:
        """d(poly + c log z) = d(poly) + c dz/z."""
        terms = [(n - 1, n * c) for n, c in self.poly]
        if self.log_coeff != 0:
            terms.append((-1, self.log_coeff))
        return LaurentForm(_canonical(terms))

    def __repr__(self) -> str:
        body = _terms_str(self.poly, "")
        if self.log_coeff != 0:
            body += f" + ({self.log_coeff})*log z"
        return f"LogFunction({body})"


def residue(w: LaurentForm) -> Rational:
    """Coefficient of dz/z."""
    return w.coefficient(-1)


def integrate(w: LaurentForm) -> LogFunction:
    """Primitive modulo constants: a_n z^n dz -> a_n/(n+1) z^(n+1), the
    dz/z coefficient becoming the log term.  Exact section of d."""
    poly = []
    log_coeff = 0
    for n, a in w.terms:
        if n == -1:
            log_coeff = a
        else:
            poly.append((n + 1, as_rational(a * Fraction(1, n + 1))))
    return LogFunction.make(poly, log_coeff)


def check_hypercocycle(w_a: LaurentForm, w_b: LaurentForm, f_e: LaurentPolynomial) -> bool:
    """Cocycle condition on one overlap: w_a - w_b = d(f_e), coefficientwise."""
    return (w_a - w_b) == f_e.differential()


def splitting_correction(
    f_e: LaurentPolynomial, s_a: LogFunction, s_b: LogFunction
) -> tuple:
    """f_e - (s_a - s_b), the per-overlap term of the log-integration
    splitting.

    When s_a, s_b are primitives of forms whose difference on the annulus is
    d(f_e), everything cancels modulo constants.  Returns (is_constant,
    remainder); a non-constant remainder signals that the inputs were not a
    matching hypercocycle/primitive triple, and is reported rather than
    raised.
    """
    remainder = LogFunction.make(f_e.terms) - (s_a - s_b)
    return remainder.is_zero(), remainder
