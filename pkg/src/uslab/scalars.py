"""Exact scalars: rationals (gmpy2 ``mpq``) and rational functions in the
formal parameters ``c, mu1..mu4, lam1..lam4``.

Constant values are always stored as ``mpq`` so that equality and hashing are
canonical; non-constant values are sympy fraction-field elements, which are
kept reduced by sympy.
"""
from __future__ import annotations

import re
from fractions import Fraction

import sympy
from gmpy2 import mpq
from sympy import QQ
from sympy.polys.fields import FracElement, field

MAX_RANK = 4

PARAM_NAMES = (
    ("c",)
    + tuple(f"mu{i}" for i in range(1, MAX_RANK + 1))
    + tuple(f"lam{i}" for i in range(1, MAX_RANK + 1))
)

K, *_GENS = field(",".join(PARAM_NAMES), QQ)
PARAMS = dict(zip(PARAM_NAMES, _GENS))

ZERO = mpq(0)
ONE = mpq(1)


class ScalarParseError(ValueError):
    pass


def param(name: str):
    """The formal parameter ``name`` as a scalar."""
    try:
        return PARAMS[name]
    except KeyError:
        raise ScalarParseError(f"unknown parameter {name!r}") from None


def mu(n: int):
    return tuple(PARAMS[f"mu{i}"] for i in range(1, n + 1))


def lam(n: int):
    return tuple(PARAMS[f"lam{i}"] for i in range(1, n + 1))


def norm(x):
    """Canonical form of a scalar (constants collapse to ``mpq``)."""
    t = type(x)
    if t is mpq:
        return x
    if t is FracElement:
        if x.numer.is_ground and x.denom.is_ground:
            return mpq(x.numer.LC) / mpq(x.denom.LC)
        return x
    if t is int or t is Fraction:
        return mpq(x)
    if isinstance(x, int):  # bool, numpy ints
        return mpq(int(x))
    raise TypeError(f"not a scalar: {x!r}")


def is_zero(x) -> bool:
    if type(x) is FracElement:
        return not x.numer
    return x == 0


def is_constant(x) -> bool:
    return type(norm(x)) is mpq


def to_fraction(x) -> Fraction:
    x = norm(x)
    if type(x) is not mpq:
        raise ValueError(f"scalar {x} is not a constant")
    return Fraction(int(x.numerator), int(x.denominator))


def is_integer(x) -> bool:
    x = norm(x)
    return type(x) is mpq and x.denominator == 1


_RATIONAL = re.compile(r"^\s*[-+]?\d+(\s*/\s*\d+)?\s*$")


def parse_scalar(text) -> object:
    """Parse ``"p/q"``, an integer, or an expression in the parameters."""
    if isinstance(text, (int, Fraction)) or type(text) is mpq:
        return norm(text)
    if not isinstance(text, str):
        raise ScalarParseError(f"cannot parse scalar from {text!r}")
    if _RATIONAL.match(text):
        p, _, q = text.replace(" ", "").partition("/")
        if q and int(q) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return mpq(int(p), int(q) if q else 1)
    try:
        expr = sympy.sympify(text, locals={name: sympy.Symbol(name) for name in PARAM_NAMES})
        free = {str(s) for s in expr.free_symbols}
        if not free <= set(PARAM_NAMES):
            raise ScalarParseError(f"unknown symbols {sorted(free - set(PARAM_NAMES))} in {text!r}")
        return norm(K.from_expr(expr))
    except ScalarParseError:
        raise
    except Exception as exc:
        raise ScalarParseError(f"cannot parse scalar from {text!r}: {exc}") from None


def format_scalar(x) -> str:
    """Reduced fraction string, or a parenthesised rational function."""
    x = norm(x)
    if type(x) is mpq:
        if x.denominator == 1:
            return str(int(x.numerator))
        return f"{int(x.numerator)}/{int(x.denominator)}"
    return f"({x.as_expr()})"


def substitute(x, values: dict):
    """Evaluate the parameters named in ``values`` (a dict name -> rational)."""
    x = norm(x)
    if type(x) is mpq:
        return x
    expr = x.as_expr().subs({sympy.Symbol(k): sympy.Rational(str(norm(v))) for k, v in values.items()})
    return norm(K.from_expr(sympy.nsimplify(expr)))
