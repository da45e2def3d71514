"""
Polynomial plumbing for the localization of Q[x, y] at (x, y).

Elements are fractions f/g of ``sympy.Poly`` objects over QQ with g(0, 0) != 0.
Monomials are exponent pairs ``(a, b)`` standing for x^a y^b.
"""

from tokenize import TokenError
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

from sympy import Poly, QQ, Symbol, symbols
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from app.errors import ParseError


Monomial = Tuple[int, int]

X, Y = symbols("x y")
GENS = (X, Y)
ONE: Monomial = (0, 0)

_TRANSFORMS = standard_transformations + (
    convert_xor,
    implicit_multiplication_application,
)


def poly(expr) -> Poly:
    return Poly(expr, *GENS, domain=QQ)


def poly_from_support(support: Iterable[Monomial]) -> Poly:
    """Polynomial with coefficient 1 on each monomial of ``support``."""
    terms: Dict[Monomial, int] = {m: 1 for m in support}
    if not terms:
        return poly(0)
    return Poly.from_dict(terms, *GENS, domain=QQ)


def constant_term(p: Poly) -> object:
    return p.coeff_monomial(1)


def support(p: Poly) -> Tuple[Monomial, ...]:
    """Monomials with nonzero coefficient, empty for the zero polynomial."""
    if p.is_zero:
        return ()
    return tuple(tuple(m) for m in p.monoms())


def normalize_fraction(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    """Lowest terms with the denominator's constant term scaled to 1.

    Raises:
        ValueError: if the denominator is not a unit of the local ring
    """
    if constant_term(den) == 0:
        raise ValueError("denominator must have a nonzero constant term")
    g = num.gcd(den)
    if not g.is_one and not g.is_zero:
        num = num.exquo(g)
        den = den.exquo(g)
    scale = constant_term(den)
    if scale != 1:
        num = num.quo_ground(scale)
        den = den.quo_ground(scale)
    return num, den


def monomial_part(p: Poly) -> Monomial:
    """Componentwise minimum exponent over the support of a nonzero ``p``."""
    monoms = support(p)
    return (min(m[0] for m in monoms), min(m[1] for m in monoms))


def is_monomial_times_unit(p: Poly) -> bool:
    """True when ``p = x^a y^b * u`` with u(0, 0) != 0."""
    if p.is_zero:
        return False
    return monomial_part(p) in support(p)


def divides(m: Monomial, n: Monomial) -> bool:
    return m[0] <= n[0] and m[1] <= n[1]


def monomial_degree(m: Monomial) -> int:
    return m[0] + m[1]


def monomial_key(m: Monomial) -> Tuple[int, int]:
    """Graded order with x before y: 1, x, y, x^2, x*y, y^2, ..."""
    return (m[0] + m[1], -m[0])


def format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip("xy", m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Poly) -> str:
    text = str(p.as_expr()).replace("**", "^")
    return text


def parse_fraction(text: str) -> Tuple[Poly, Poly]:
    """Parse a rational function in x and y into a (numerator, denominator) pair."""
    try:
        expr = parse_expr(
            text,
            local_dict={"x": X, "y": Y},
            transformations=_TRANSFORMS,
            evaluate=True,
        )
    except (SympifyError, SyntaxError, TypeError, TokenError) as e:
        raise ParseError(f"invalid polynomial literal: {e}", token=text) from e
    stray = [s for s in expr.free_symbols if isinstance(s, Symbol) and s not in GENS]
    if stray:
        raise ParseError("only the variables x and y are allowed", token=str(stray[0]))
    num, den = expr.as_numer_denom()
    try:
        return poly(num), poly(den)
    except Exception as e:
        raise ParseError(f"not a rational function in x, y: {e}", token=text) from e


def monomials_up_to(degree: int, include_one: bool = False) -> List[Monomial]:
    """Monomials of total degree <= ``degree`` in graded order."""
    low = 0 if include_one else 1
    result = [(a, d - a) for d in range(low, degree + 1) for a in range(d, -1, -1)]
    return sorted(result, key=monomial_key)


def candidate_supports(
    degree: int, max_terms: int, include_units: bool = False
) -> List[FrozenSet[Monomial]]:
    """Supports of the bounded search space, monomials first.

    Coefficients range over {0, 1}, so a candidate is determined by its
    support. The zero polynomial is left out: it never occurs in a witness.
    """
    monos = monomials_up_to(degree, include_one=include_units)
    result: List[FrozenSet[Monomial]] = []
    for size in range(1, max_terms + 1):
        for combo in combinations(monos, size):
            result.append(frozenset(combo))
    return result


def minkowski(f: FrozenSet[Monomial], g: FrozenSet[Monomial]) -> FrozenSet[Monomial]:
    """Support of a product of polynomials with nonnegative coefficients."""
    return frozenset((a[0] + b[0], a[1] + b[1]) for a in f for b in g)
