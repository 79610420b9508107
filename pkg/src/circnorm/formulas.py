"""Evaluate closed-form expressions written as text.

Catalog formulas are stored as short Python-syntax strings such as
``"(n - 1)*F(n + 1) - F(n + 2) + 2"`` and evaluated here in exact rational
arithmetic. Only a small subset of the grammar is accepted: integer
literals, the name ``n``, calls ``F(k)`` and ``L(k)``, the arithmetic
operators, parity tests and conditional expressions.
"""

import ast
import operator
from fractions import Fraction
from functools import lru_cache

from .sequences import fib, lucas

__all__ = ["FormulaError", "NonIntegralValue", "evaluate", "evaluate_int", "parse"]


class FormulaError(ValueError):
    """A formula string uses syntax outside the accepted subset."""


class NonIntegralValue(ArithmeticError):
    """A closed form that should be an integer left a remainder."""

    def __init__(self, formula, n, value):
        super().__init__(f"{formula!r} at n={n} gives non-integer {value}")
        self.formula = formula
        self.n = n
        self.value = value


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Mod: operator.mod,
    ast.Pow: operator.pow,
}
_CMPOPS = {ast.Eq: operator.eq, ast.NotEq: operator.ne}
_SEQUENCES = {"F": fib, "L": lucas}


def _as_index(value, formula):
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise FormulaError(f"non-integer sequence index in {formula!r}")
        value = value.numerator
    return value


def _check(node, formula):
    if isinstance(node, ast.Expression):
        _check(node.body, formula)
    elif isinstance(node, ast.BinOp):
        if type(node.op) not in _BINOPS:
            raise FormulaError(f"operator not allowed in {formula!r}")
        _check(node.left, formula)
        _check(node.right, formula)
    elif isinstance(node, ast.UnaryOp):
        if not isinstance(node.op, (ast.USub, ast.UAdd)):
            raise FormulaError(f"unary operator not allowed in {formula!r}")
        _check(node.operand, formula)
    elif isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise FormulaError(f"only integer literals allowed in {formula!r}")
    elif isinstance(node, ast.Name):
        if node.id != "n":
            raise FormulaError(f"unknown name {node.id!r} in {formula!r}")
    elif isinstance(node, ast.Call):
        if (
            not isinstance(node.func, ast.Name)
            or node.func.id not in _SEQUENCES
            or len(node.args) != 1
            or node.keywords
        ):
            raise FormulaError(f"only F(k) and L(k) calls allowed in {formula!r}")
        _check(node.args[0], formula)
    elif isinstance(node, ast.IfExp):
        for child in (node.test, node.body, node.orelse):
            _check(child, formula)
    elif isinstance(node, ast.Compare):
        if len(node.ops) != 1 or type(node.ops[0]) not in _CMPOPS:
            raise FormulaError(f"only == and != comparisons allowed in {formula!r}")
        _check(node.left, formula)
        _check(node.comparators[0], formula)
    else:
        raise FormulaError(f"{type(node).__name__} not allowed in {formula!r}")


@lru_cache(maxsize=None)
def parse(formula):
    """Parse and validate ``formula``; raises :class:`FormulaError`."""
    try:
        tree = ast.parse(formula, mode="eval")
    except SyntaxError as exc:
        raise FormulaError(f"cannot parse {formula!r}: {exc.msg}") from None
    _check(tree, formula)
    return tree


def _eval(node, n, formula):
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, n, formula)
        right = _eval(node.right, n, formula)
        if isinstance(node.op, ast.Div):
            return Fraction(left) / Fraction(right)
        if isinstance(node.op, ast.Pow):
            right = _as_index(right, formula)
            if right < 0:
                return Fraction(1) / Fraction(left) ** -right
        return _BINOPS[type(node.op)](left, right)
    if isinstance(node, ast.UnaryOp):
        value = _eval(node.operand, n, formula)
        return -value if isinstance(node.op, ast.USub) else value
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.Name):
        return n
    if isinstance(node, ast.Call):
        index = _as_index(_eval(node.args[0], n, formula), formula)
        if index < 0:
            raise FormulaError(f"negative sequence index {index} in {formula!r}")
        return _SEQUENCES[node.func.id](index)
    if isinstance(node, ast.IfExp):
        branch = node.body if _eval(node.test, n, formula) else node.orelse
        return _eval(branch, n, formula)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, n, formula)
        right = _eval(node.comparators[0], n, formula)
        return _CMPOPS[type(node.ops[0])](left, right)
    raise FormulaError(f"{type(node).__name__} not allowed in {formula!r}")


def evaluate(formula, n):
    """Evaluate ``formula`` at order ``n`` as an exact int or Fraction."""
    value = _eval(parse(formula).body, int(n), formula)
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def evaluate_int(formula, n):
    """Like :func:`evaluate` but raise :class:`NonIntegralValue` on a remainder."""
    value = evaluate(formula, n)
    if isinstance(value, Fraction):
        raise NonIntegralValue(formula, n, value)
    return value
