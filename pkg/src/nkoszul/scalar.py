"""Exact coefficient fields.

Two fields are supported: plain rationals (``fractions.Fraction``) and
fractions of multivariate polynomials in named parameters (for quantum-space
coefficients).  Scalars are duck-typed: everything downstream only uses
``+ - * /``, equality and truthiness, so the two kinds mix freely with the
rest of the code as long as a single field is used per algebra.
"""

from __future__ import annotations

from fractions import Fraction

import sympy
from sympy.polys.domains import QQ as _SYMPY_QQ
from sympy.polys.fields import field as _frac_field


class RationalField:
    """The rationals, realized by arbitrary-precision ``Fraction`` values."""

    parameters: tuple[str, ...] = ()

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k: int):
        return Fraction(k)

    def rational(self, p: int, q: int = 1):
        return Fraction(p, q)

    def parse(self, text: str):
        # Fraction accepts both "p/q" and "p".
        return Fraction(text)

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


class ParameterField:
    """Field of fractions of polynomials over QQ in named parameters.

    Backed by sympy's sparse fraction field, whose elements are kept in
    lowest terms with a sign-normalized denominator, so equality of values
    is equality of representations.  Negative powers of a parameter are
    ordinary fractions, which covers Laurent expressions like q**-1.
    """

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("parameter field needs at least one parameter name")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names: {names}")
        self.parameters = names
        fld, *gens = _frac_field(" ".join(names), _SYMPY_QQ)
        self._field = fld
        self._gens = dict(zip(names, gens))

    @property
    def zero(self):
        return self._field.zero

    @property
    def one(self):
        return self._field.one

    def parameter(self, name: str):
        return self._gens[name]

    def from_int(self, k: int):
        return self._field.one * k

    def rational(self, p: int, q: int = 1):
        if q == 0:
            raise ZeroDivisionError("zero denominator")
        return (self._field.one * p) / q

    def parse(self, text: str):
        return self._field.from_expr(sympy.sympify(text))

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"QQ({', '.join(self.parameters)})"

    def __eq__(self, other):
        return isinstance(other, ParameterField) and self.parameters == other.parameters

    def __hash__(self):
        return hash(("ParameterField", self.parameters))


#: Shared default field instance.
QQ = RationalField()


def is_zero(x) -> bool:
    return not x
