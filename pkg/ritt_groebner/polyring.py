"""
Exact multivariate polynomials under a fixed plex variable order.

A ``VariableOrder`` lists variables from lowest to highest (x_1 < ... < x_n).
Arithmetic is delegated to a sympy ``PolyRing`` whose generators are the same
names in reverse, so sympy's ``lex`` coincides with plex on x_1 < ... < x_n and
sympy's term order is ours. Coefficients live in QQ or in a prime field.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Symbol, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from .constants import MAX_PRIME, PRIME_FIELD_PREFIX, RATIONAL_FIELD_SPEC, TAG_VARIABLE_PREFIX
from .errors import (
    DegenerateResultantError,
    EmptyInputError,
    OrderMismatchError,
    PolynomialDivisionByZeroError,
    SystemParseError,
)

logger = logging.getLogger(__name__)

Variable = Union[str, int]


# ==============================================================================
# COEFFICIENT FIELDS AND VARIABLE ORDERS
# ==============================================================================

@dataclass(frozen=True)
class CoefficientField:
    """QQ when ``characteristic`` is 0, otherwise the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p >= MAX_PRIME or not isprime(p)):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    @classmethod
    def parse(cls, spec: str) -> "CoefficientField":
        """
        Parse a field spec: ``q`` for the rationals or ``fp:P`` for F_P.

        Args:
            spec: The textual field spec

        Returns:
            CoefficientField: The parsed field
        """
        text = spec.strip().lower()
        if text == RATIONAL_FIELD_SPEC:
            return cls(0)
        if text.startswith(PRIME_FIELD_PREFIX):
            modulus = text[len(PRIME_FIELD_PREFIX):]
            if not modulus.isdigit():
                raise SystemParseError(f"malformed modulus in field spec {spec!r}")
            p = int(modulus)
            if p == 0:
                raise SystemParseError("zero modulus in field spec")
            if p >= MAX_PRIME or not isprime(p):
                raise SystemParseError(f"modulus {p} is not a prime below 2^31")
            return cls(p)
        raise SystemParseError(f"unknown field spec {spec!r} (expected 'q' or 'fp:P')")

    @cached_property
    def domain(self):
        if self.characteristic == 0:
            return QQ
        return GF(self.characteristic, symmetric=False)

    def element(self, numerator: int, denominator: int = 1):
        if denominator == 0:
            raise PolynomialDivisionByZeroError("zero denominator in coefficient")
        if self.characteristic and denominator % self.characteristic == 0:
            raise PolynomialDivisionByZeroError(f"denominator {denominator} vanishes modulo {self.characteristic}")
        domain = self.domain
        return domain.quo(domain.convert(numerator), domain.convert(denominator))

    def to_pair(self, value) -> Tuple[int, int]:
        """Return (numerator, denominator) of a field element; denominator is 1 in F_p."""
        if self.characteristic == 0:
            return int(QQ.numer(value)), int(QQ.denom(value))
        return int(value) % self.characteristic, 1

    def __str__(self) -> str:
        if self.characteristic == 0:
            return RATIONAL_FIELD_SPEC
        return f"{PRIME_FIELD_PREFIX}{self.characteristic}"


RATIONALS = CoefficientField(0)


@dataclass(frozen=True)
class VariableOrder:
    """Variables listed lowest first; position k (1-based) is x_k."""

    names: Tuple[str, ...]
    field: CoefficientField = RATIONALS

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise EmptyInputError("a variable order needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variables in order {self.names}")

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def ring(self) -> PolyRing:
        symbols = tuple(Symbol(name) for name in reversed(self.names))
        return PolyRing(symbols, self.field.domain, lex)

    def index(self, var: Variable) -> int:
        """1-based plex index of a variable given by name or index."""
        if isinstance(var, int):
            if not 1 <= var <= self.n:
                raise OrderMismatchError(f"variable index {var} outside 1..{self.n}")
            return var
        try:
            return self.names.index(var) + 1
        except ValueError:
            raise OrderMismatchError(f"variable {var!r} not in order {self.names}") from None

    def position(self, var: Variable) -> int:
        """Generator position of a variable inside the sympy ring."""
        return self.n - self.index(var)

    def name(self, k: int) -> str:
        return self.names[k - 1]

    def with_tag(self) -> Tuple["VariableOrder", str]:
        """Extend the order by a fresh variable that is plex-greatest."""
        suffix = 0
        while f"{TAG_VARIABLE_PREFIX}{suffix}" in self.names:
            suffix += 1
        tag = f"{TAG_VARIABLE_PREFIX}{suffix}"
        return VariableOrder(self.names + (tag,), self.field), tag

    def permuted(self, names: Sequence[str]) -> "VariableOrder":
        if sorted(names) != sorted(self.names):
            raise OrderMismatchError(f"{tuple(names)} is not a permutation of {self.names}")
        return VariableOrder(tuple(names), self.field)

    def zero(self) -> "Polynomial":
        return Polynomial(self, self.ring.zero)

    def one(self) -> "Polynomial":
        return Polynomial(self, self.ring.one)

    def constant(self, numerator: int, denominator: int = 1) -> "Polynomial":
        return Polynomial(self, self.ring.ground_new(self.field.element(numerator, denominator)))

    def variable(self, var: Variable) -> "Polynomial":
        return Polynomial(self, self.ring.gens[self.position(var)])

    def variables(self) -> List["Polynomial"]:
        return [self.variable(k) for k in range(1, self.n + 1)]

    def from_terms(self, terms: Iterable[Tuple[Tuple[int, int], Sequence[int]]]) -> "Polynomial":
        """Build a polynomial from ((numerator, denominator), exponents x_1..x_n) pairs."""
        rep = self.ring.zero
        for (numerator, denominator), exponents in terms:
            monomial = Monomial(self, tuple(exponents))
            rep += self.ring.term_new(monomial.rep, self.field.element(numerator, denominator))
        return Polynomial(self, rep)

    def __str__(self) -> str:
        return " < ".join(self.names)


# ==============================================================================
# MONOMIALS AND PLEX COMPARISON
# ==============================================================================

class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Monomial:
    order: VariableOrder
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != self.order.n:
            raise OrderMismatchError(
                f"monomial has {len(self.exponents)} exponents, order has {self.order.n} variables"
            )
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def from_rep(cls, order: VariableOrder, rep: Tuple[int, ...]) -> "Monomial":
        return cls(order, tuple(reversed(rep)))

    @property
    def rep(self) -> Tuple[int, ...]:
        return tuple(reversed(self.exponents))

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.order, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.order, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        factors = []
        for name, e in zip(self.order.names, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"


def plex_compare(a: Monomial, b: Monomial) -> Ordering:
    """Compare by the highest-index differing exponent."""
    if a.order.names != b.order.names:
        raise OrderMismatchError(f"cannot compare monomials under {a.order} and {b.order}")
    left, right = a.rep, b.rep
    if left == right:
        return Ordering.EQUAL
    return Ordering.LESS if left < right else Ordering.GREATER


# ==============================================================================
# POLYNOMIALS
# ==============================================================================

def _degree(rep: PolyElement, j: int) -> int:
    return max((monom[j] for monom in rep), default=-1)


def _coefficient(rep: PolyElement, j: int, d: int) -> PolyElement:
    part = {}
    for monom, coeff in rep.items():
        if monom[j] == d:
            part[monom[:j] + (0,) + monom[j + 1:]] = coeff
    return rep.ring.from_dict(part)


@dataclass(frozen=True)
class PolyAttributes:
    cls: int
    lv: Optional[str]
    deg_in_lv: int
    initial: "Polynomial"


@dataclass(frozen=True, eq=False)
class Polynomial:
    """An element of k[x_1..x_n]; canonical because the sympy element is."""

    order: VariableOrder
    rep: PolyElement

    def _lift(self, other) -> PolyElement:
        if isinstance(other, Polynomial):
            if other.order != self.order:
                raise OrderMismatchError(f"operands live under {self.order} and {other.order}")
            return other.rep
        if isinstance(other, int):
            return self.order.ring.ground_new(other)
        return NotImplemented

    def _binary(self, other, op):
        rep = self._lift(other)
        if rep is NotImplemented:
            return NotImplemented
        return Polynomial(self.order, op(self.rep, rep))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.order, -self.rep)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return Polynomial(self.order, self.rep ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.order == other.order and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.order.ring.ground_new(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.rep.items())))

    def __str__(self) -> str:
        pieces = []
        for coeff, monomial in self.terms():
            numerator, denominator = self.order.field.to_pair(coeff)
            magnitude = str(abs(numerator)) if denominator == 1 else f"{abs(numerator)}/{denominator}"
            if monomial.is_one:
                body = magnitude
            elif magnitude == "1":
                body = str(monomial)
            else:
                body = f"{magnitude}*{monomial}"
            if not pieces:
                pieces.append(f"-{body}" if numerator < 0 else body)
            else:
                pieces.append(f" - {body}" if numerator < 0 else f" + {body}")
        return "".join(pieces) or "0"

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    # --- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.rep

    @property
    def is_constant(self) -> bool:
        return self.rep.is_ground

    def terms(self) -> List[Tuple[object, Monomial]]:
        """(coefficient, monomial) pairs, strictly descending in plex."""
        return [(coeff, Monomial.from_rep(self.order, monom)) for monom, coeff in self.rep.terms()]

    def degree(self, var: Variable) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        return _degree(self.rep, self.order.position(var))

    def total_degree(self) -> int:
        return max((sum(monom) for monom in self.rep), default=-1)

    def coefficient(self, var: Variable, d: int) -> "Polynomial":
        return Polynomial(self.order, _coefficient(self.rep, self.order.position(var), d))

    def coefficients(self, var: Variable) -> List["Polynomial"]:
        """Coefficients in ``var`` indexed by degree."""
        return [self.coefficient(var, d) for d in range(self.degree(var) + 1)]

    def leading_coefficient(self, var: Variable) -> "Polynomial":
        if self.is_zero:
            return self
        return self.coefficient(var, self.degree(var))

    def depends_on(self, var: Variable) -> bool:
        return self.degree(var) > 0

    @property
    def cls(self) -> int:
        n = self.order.n
        for j in range(n):
            if any(monom[j] for monom in self.rep):
                return n - j
        return 0

    @property
    def leading_variable(self) -> Optional[str]:
        k = self.cls
        return self.order.name(k) if k else None

    @property
    def leading_degree(self) -> int:
        k = self.cls
        return self.degree(k) if k else 0

    @property
    def initial(self) -> "Polynomial":
        k = self.cls
        return self.leading_coefficient(k) if k else self

    def attributes(self) -> PolyAttributes:
        return PolyAttributes(
            cls=self.cls,
            lv=self.leading_variable,
            deg_in_lv=self.leading_degree,
            initial=self.initial,
        )

    @property
    def lpp(self) -> Monomial:
        return Monomial.from_rep(self.order, self.rep.LM)

    @property
    def lc(self):
        return self.rep.LC

    def monic(self) -> "Polynomial":
        return Polynomial(self.order, self.rep.monic())

    def variables(self) -> List[str]:
        return [name for name in self.order.names if self.depends_on(name)]

    def to_order(self, target: VariableOrder) -> "Polynomial":
        """Re-express under ``target``, a permutation of this polynomial's order."""
        if target == self.order:
            return self
        if sorted(target.names) != sorted(self.order.names) or target.field != self.order.field:
            raise OrderMismatchError(f"cannot move a polynomial from {self.order} to {target}")
        slots = [self.order.names.index(name) for name in target.names]
        rep = target.ring.zero
        for monom, coeff in self.rep.items():
            exponents = tuple(reversed(monom))
            moved = tuple(exponents[s] for s in slots)
            rep += target.ring.term_new(tuple(reversed(moved)), coeff)
        return Polynomial(target, rep)

    def embed(self, target: VariableOrder) -> "Polynomial":
        """Map into an order whose names extend this one's at the top."""
        if target.names[: self.order.n] != self.order.names or target.field != self.order.field:
            raise OrderMismatchError(f"{target} does not extend {self.order}")
        pad = (0,) * (target.n - self.order.n)
        return Polynomial(target, target.ring.from_dict({pad + monom: c for monom, c in self.rep.items()}))

    def restrict(self, target: VariableOrder) -> "Polynomial":
        """Inverse of ``embed`` for polynomials free of the extra variables."""
        extra = self.order.n - target.n
        if self.order.names[:target.n] != target.names:
            raise OrderMismatchError(f"{self.order} does not extend {target}")
        part = {}
        for monom, coeff in self.rep.items():
            if any(monom[:extra]):
                raise OrderMismatchError(f"{self} involves variables outside {target}")
            part[monom[extra:]] = coeff
        return Polynomial(target, target.ring.from_dict(part))


def product(polynomials: Iterable[Polynomial], order: VariableOrder) -> Polynomial:
    result = order.one()
    for p in polynomials:
        result = result * p
    return result


# ==============================================================================
# PSEUDO-DIVISION
# ==============================================================================

@dataclass(frozen=True)
class PseudoDivisionResult:
    """I^q * G = Q * F + R with deg(R, x) < deg(F, x)."""

    dividend: Polynomial
    divisor: Polynomial
    variable: str
    quotient: Polynomial
    remainder: Polynomial
    power: int
    multiplier: Polynomial

    def verify(self) -> bool:
        lhs = self.multiplier ** self.power * self.dividend
        return (lhs - self.quotient * self.divisor - self.remainder).is_zero


def pseudo_divide(G: Polynomial, F: Polynomial, var: Variable) -> PseudoDivisionResult:
    """
    Pseudo-divide G by F with respect to ``var``.

    Args:
        G: The dividend
        F: The divisor, nonzero
        var: The variable to divide in

    Returns:
        PseudoDivisionResult: Quotient, remainder, power and multiplier
    """
    if F.is_zero:
        raise PolynomialDivisionByZeroError(f"pseudo-division of {G} by the zero polynomial")
    if F.order != G.order:
        raise OrderMismatchError(f"operands live under {G.order} and {F.order}")
    order = G.order
    j = order.position(var)
    name = order.name(order.index(var))
    m = _degree(F.rep, j)
    l = _degree(G.rep, j)
    I = _coefficient(F.rep, j, m)
    ring = order.ring

    if m == 0:
        q = max(l + 1, 0)
        quotient = F.rep ** l * G.rep if l >= 0 else ring.zero
        remainder = ring.zero
    elif l < m:
        q, quotient, remainder = 0, ring.zero, G.rep
    else:
        x = ring.gens[j]
        quotient, remainder = ring.zero, G.rep
        for e in range(l, m - 1, -1):
            c = _coefficient(remainder, j, e)
            shift = x ** (e - m)
            quotient = I * quotient + c * shift
            remainder = I * remainder - c * shift * F.rep
        q = l - m + 1

    return PseudoDivisionResult(
        dividend=G,
        divisor=F,
        variable=name,
        quotient=Polynomial(order, quotient),
        remainder=Polynomial(order, remainder),
        power=q,
        multiplier=Polynomial(order, I),
    )


def prem(G: Polynomial, F: Polynomial, var: Variable) -> Polynomial:
    return pseudo_divide(G, F, var).remainder


def pquo(G: Polynomial, F: Polynomial, var: Variable) -> Polynomial:
    return pseudo_divide(G, F, var).quotient


# ==============================================================================
# RESULTANTS
# ==============================================================================

@dataclass(frozen=True)
class ResultantCertificate:
    """res(F, G, x) = A * F + B * G."""

    first: Polynomial
    second: Polynomial
    variable: str
    value: Polynomial
    first_cofactor: Polynomial
    second_cofactor: Polynomial

    def verify(self) -> bool:
        combination = self.first_cofactor * self.first + self.second_cofactor * self.second
        return (combination - self.value).is_zero and not self.value.depends_on(self.variable)


def _bareiss_determinant(matrix: List[List[PolyElement]], ring: PolyRing) -> PolyElement:
    """Fraction-free determinant; every division below is exact."""
    size = len(matrix)
    if size == 0:
        return ring.one
    rows = [list(row) for row in matrix]
    sign = 1
    previous = ring.one
    for k in range(size - 1):
        if not rows[k][k]:
            for i in range(k + 1, size):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (pivot * rows[i][j] - rows[i][k] * rows[k][j]).exquo(previous)
            rows[i][k] = ring.zero
        previous = pivot
    determinant = rows[size - 1][size - 1]
    return determinant if sign > 0 else -determinant


def _sylvester(F: PolyElement, G: PolyElement, j: int, m: int, n: int) -> List[List[PolyElement]]:
    ring = F.ring
    size = m + n
    f_coeffs = [_coefficient(F, j, m - t) for t in range(m + 1)]
    g_coeffs = [_coefficient(G, j, n - t) for t in range(n + 1)]
    matrix = []
    for i in range(n):
        matrix.append([ring.zero] * i + f_coeffs + [ring.zero] * (size - i - m - 1))
    for i in range(m):
        matrix.append([ring.zero] * i + g_coeffs + [ring.zero] * (size - i - n - 1))
    return matrix


def resultant_certificate(F: Polynomial, G: Polynomial, var: Variable) -> ResultantCertificate:
    """
    Sylvester resultant of F and G in ``var`` together with its cofactors.

    The cofactors are determinants of the Sylvester matrix with its last
    column replaced by the powers of ``var`` that multiply F (resp. G).
    """
    if F.order != G.order:
        raise OrderMismatchError(f"operands live under {F.order} and {G.order}")
    order = F.order
    ring = order.ring
    j = order.position(var)
    name = order.name(order.index(var))
    m, n = _degree(F.rep, j), _degree(G.rep, j)
    if m < 1 and n < 1:
        raise DegenerateResultantError(f"{F} and {G} both have degree 0 in {name}")
    if F.is_zero or G.is_zero:
        one, zero = order.one(), order.zero()
        return ResultantCertificate(F, G, name, zero, one if F.is_zero else zero, one if G.is_zero else zero)

    matrix = _sylvester(F.rep, G.rep, j, m, n)
    x = ring.gens[j]
    size = m + n
    value = _bareiss_determinant(matrix, ring)

    first_column = [x ** (n - 1 - i) if i < n else ring.zero for i in range(size)]
    second_column = [ring.zero if i < n else x ** (m - 1 - (i - n)) for i in range(size)]
    cofactors = []
    for column in (first_column, second_column):
        replaced = [row[:-1] + [entry] for row, entry in zip(matrix, column)]
        cofactors.append(_bareiss_determinant(replaced, ring))

    logger.debug(f"[resultant]: variable={name}, sylvester_size={size}")
    return ResultantCertificate(
        first=F,
        second=G,
        variable=name,
        value=Polynomial(order, value),
        first_cofactor=Polynomial(order, cofactors[0]),
        second_cofactor=Polynomial(order, cofactors[1]),
    )


def resultant(F: Polynomial, G: Polynomial, var: Variable) -> Polynomial:
    return resultant_certificate(F, G, var).value
