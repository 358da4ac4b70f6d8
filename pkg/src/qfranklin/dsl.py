"""A small expression language for truncated q-series.

Grammar (lowest to highest precedence, binary operators left-associative)::

    expr    := term (('+' | '-') term)*
    term    := power (('*' | '/') power)*
    power   := unary ('^' unary)*
    unary   := '-' unary | primary
    primary := INT | 'q' | 'x' | NAME | '(' expr ')'
             | 'poch' '(' expr ',' (expr | 'inf') ')'
             | 'sum' '(' NAME ',' expr ',' (expr | 'inf') ',' expr ')'

Unary minus binds tighter than ``^``, so ``-q^2`` is ``(-q)^2``.  ``NAME`` is
a variable bound by an enclosing ``sum``.  Exponents, Pochhammer counts and
sum bounds are integer expressions over bound variables; there ``/`` is
exact integer division.

Examples::

    poch(q, inf)
    sum(k, 1, inf, q^k / (1 - q^k))
    sum(r, 0, inf, poch(x, r + 1) * x^r)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .series import XQSeries, first_mismatch

__all__ = [
    "Expr", "IntLit", "VarQ", "VarX", "Var", "Inf", "Neg", "Add", "Sub", "Mul",
    "Div", "Pow", "Poch", "Sum",
    "DSLError", "DSLSyntaxError", "DSLEvalError", "NonUnitDivisionError",
    "DivergenceError", "ExponentError",
    "parse", "to_text", "eval_expr", "Evaluator", "VerifyReport", "run_verify",
    "DEFAULT_GUARD_WINDOW", "IDENTITY_SCRIPTS",
]

DEFAULT_GUARD_WINDOW = 8


class DSLError(Exception):
    """Base class for parse and evaluation failures."""


class DSLSyntaxError(DSLError):
    def __init__(self, message: str, line: int, column: int, token: str):
        self.line, self.column, self.token = line, column, token
        self.bare_message = message
        shown = repr(token) if token else "end of input"
        super().__init__(f"{line}:{column}: {message} (at {shown})")


class DSLEvalError(DSLError):
    pass


class NonUnitDivisionError(DSLEvalError):
    pass


class DivergenceError(DSLEvalError):
    pass


class ExponentError(DSLEvalError):
    pass


# AST

class Expr:
    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True)
class VarQ(Expr):
    pass


@dataclass(frozen=True)
class VarX(Expr):
    pass


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Inf(Expr):
    pass


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: Expr


@dataclass(frozen=True)
class Poch(Expr):
    base: Expr
    count: Expr  # integer expression or Inf()


@dataclass(frozen=True)
class Sum(Expr):
    var: str
    lo: Expr
    hi: Expr  # integer expression or Inf()
    body: Expr


# Tokenizer

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)

KEYWORDS = {"q", "x", "poch", "sum", "inf"}


@dataclass(frozen=True)
class Token:
    kind: str   # 'int', 'name', 'op', 'eof'
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DSLSyntaxError("unexpected character", line, pos - line_start + 1, text[pos])
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.scope: List[str] = []

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        raise DSLSyntaxError(message, tok.line, tok.column, tok.text)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "name") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not (self.tok.kind in ("op", "name") and self.tok.text == text):
            self.error(f"expected {text!r}")
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            self.error("unexpected token")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.power()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            rhs = self.power()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def power(self) -> Expr:
        e = self.unary()
        while self.accept("^"):
            e = Pow(e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.accept("-"):
            return Neg(self.unary())
        return self.primary()

    def count_or_inf(self) -> Expr:
        if self.accept("inf"):
            return Inf()
        return self.expr()

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return IntLit(int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind != "name":
            self.error("expected an expression")
        name = tok.text
        if name == "q":
            self.advance()
            return VarQ()
        if name == "x":
            self.advance()
            return VarX()
        if name == "poch":
            self.advance()
            self.expect("(")
            base = self.expr()
            self.expect(",")
            count = self.count_or_inf()
            self.expect(")")
            return Poch(base, count)
        if name == "sum":
            self.advance()
            self.expect("(")
            var_tok = self.tok
            if var_tok.kind != "name" or var_tok.text in KEYWORDS:
                self.error("expected a bound variable name")
            if var_tok.text in self.scope:
                self.error(f"bound variable {var_tok.text!r} shadows an enclosing sum")
            self.advance()
            self.expect(",")
            lo = self.expr()
            self.expect(",")
            hi = self.count_or_inf()
            self.expect(",")
            self.scope.append(var_tok.text)
            body = self.expr()
            self.scope.pop()
            self.expect(")")
            return Sum(var_tok.text, lo, hi, body)
        if name == "inf":
            self.error("'inf' is only allowed as a poch count or a sum bound")
        if name in self.scope:
            self.advance()
            return Var(name)
        self.error(f"unknown identifier {name!r}")


def parse(text: str) -> Expr:
    """Parse DSL source into an :class:`Expr`; raises :class:`DSLSyntaxError`."""
    return _Parser(text).parse()


# Canonical printer

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2, Pow: 3, Neg: 4}
_OPS = {Add: "+", Sub: "-", Mul: "*", Div: "/", Pow: "^"}


def _prec(e: Expr) -> int:
    return _PREC.get(type(e), 5)


def to_text(e: Expr) -> str:
    """Canonical source text; ``parse(to_text(e)) == e``."""
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, VarQ):
        return "q"
    if isinstance(e, VarX):
        return "x"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Inf):
        return "inf"
    if isinstance(e, Neg):
        inner = to_text(e.operand)
        return "-" + (inner if _prec(e.operand) >= 4 else f"({inner})")
    if isinstance(e, Poch):
        return f"poch({to_text(e.base)}, {to_text(e.count)})"
    if isinstance(e, Sum):
        return f"sum({e.var}, {to_text(e.lo)}, {to_text(e.hi)}, {to_text(e.body)})"
    if isinstance(e, Pow):
        lnode, rnode, sep = e.base, e.exponent, "^"
    else:
        lnode, rnode, sep = e.left, e.right, f" {_OPS[type(e)]} "
    p = _prec(e)
    left, right = to_text(lnode), to_text(rnode)
    if _prec(lnode) < p:
        left = f"({left})"
    if _prec(rnode) <= p:
        right = f"({right})"
    return f"{left}{sep}{right}"


# Evaluation

class Evaluator:
    """Evaluates closed expressions to :class:`XQSeries` at fixed orders.

    Pochhammer products are cached per evaluator and extended one factor at
    a time, so ``sum(n, 0, inf, poch(q, n))`` costs one factor per term.
    """

    def __init__(self, qorder: int, xorder: int = 0,
                 guard_window: int = DEFAULT_GUARD_WINDOW):
        if qorder < 0 or xorder < 0:
            raise ValueError("orders must be nonnegative")
        if guard_window < 1:
            raise ValueError("guard window must be positive")
        self.qorder, self.xorder = qorder, xorder
        self.guard_window = guard_window
        self._poch: Dict[Tuple[int, int, int], Dict[int, XQSeries]] = {}

    def const(self, c: int) -> XQSeries:
        return XQSeries.monomial(0, 0, c, self.qorder, self.xorder)

    def integer(self, e: Expr, env: Dict[str, int]) -> int:
        """Evaluate an exponent/count/bound position to a Python int."""
        if isinstance(e, IntLit):
            return e.value
        if isinstance(e, Var):
            return env[e.name]
        if isinstance(e, Neg):
            return -self.integer(e.operand, env)
        if isinstance(e, Add):
            return self.integer(e.left, env) + self.integer(e.right, env)
        if isinstance(e, Sub):
            return self.integer(e.left, env) - self.integer(e.right, env)
        if isinstance(e, Mul):
            return self.integer(e.left, env) * self.integer(e.right, env)
        if isinstance(e, Div):
            num, den = self.integer(e.left, env), self.integer(e.right, env)
            if den == 0 or num % den:
                raise ExponentError(f"{to_text(e)} is not an exact integer ({num}/{den})")
            return num // den
        if isinstance(e, Pow):
            k = self.integer(e.exponent, env)
            if k < 0:
                raise ExponentError(f"negative exponent in {to_text(e)}")
            return self.integer(e.base, env) ** k
        raise ExponentError(f"{to_text(e)} is not an integer expression")

    def _exponent(self, e: Expr, env) -> int:
        k = self.integer(e, env)
        if k < 0:
            raise ExponentError(f"exponent {to_text(e)} = {k} is negative")
        return k

    def eval(self, e: Expr, env: Optional[Dict[str, int]] = None) -> XQSeries:
        env = env or {}
        if isinstance(e, IntLit):
            return self.const(e.value)
        if isinstance(e, Var):
            return self.const(env[e.name])
        if isinstance(e, VarQ):
            return XQSeries.monomial(0, 1, 1, self.qorder, self.xorder)
        if isinstance(e, VarX):
            return XQSeries.monomial(1, 0, 1, self.qorder, self.xorder)
        if isinstance(e, Neg):
            return -self.eval(e.operand, env)
        if isinstance(e, Add):
            return self.eval(e.left, env) + self.eval(e.right, env)
        if isinstance(e, Sub):
            return self.eval(e.left, env) - self.eval(e.right, env)
        if isinstance(e, Mul):
            return self.eval(e.left, env) * self.eval(e.right, env)
        if isinstance(e, Div):
            num = self.eval(e.left, env)
            den = self.eval(e.right, env)
            try:
                inv = den.inverse()
            except ZeroDivisionError as exc:
                raise NonUnitDivisionError(
                    f"cannot divide by {to_text(e.right)}: {exc}") from None
            return num * inv
        if isinstance(e, Pow):
            return self._pow(self.eval(e.base, env), self._exponent(e.exponent, env))
        if isinstance(e, Poch):
            return self._pochhammer(e, env)
        if isinstance(e, Sum):
            return self._sum(e, env)
        if isinstance(e, Inf):
            raise DSLEvalError("'inf' is not a value")
        raise DSLEvalError(f"cannot evaluate {e!r}")

    def _pow(self, base: XQSeries, k: int) -> XQSeries:
        terms = list(base.terms())
        if len(terms) == 1:
            a, b, c = terms[0]
            if a * k > self.xorder or b * k > self.qorder:
                return XQSeries.zero(self.qorder, self.xorder)
            return XQSeries.monomial(a * k, b * k, c ** k, self.qorder, self.xorder)
        if not terms:
            return self.const(1 if k == 0 else 0)
        result = self.const(1)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _pochhammer(self, e: Poch, env) -> XQSeries:
        base = self.eval(e.base, env)
        terms = list(base.terms())
        if not terms:
            # base vanishes under truncation, so every factor is 1
            return self.const(1)
        if len(terms) != 1:
            raise DSLEvalError(f"poch base {to_text(e.base)} must be a single monomial")
        a, s, c = terms[0]
        # factor k (1-based) is 1 - c x^a q^(s+k-1); past the window it is 1
        if isinstance(e.count, Inf):
            n = self.qorder - s + 1
        else:
            n = self.integer(e.count, env)
            if n < 0:
                raise ExponentError(f"poch count {to_text(e.count)} = {n} is negative")
            n = min(n, self.qorder - s + 1)
        if a > self.xorder or n < 0:
            n = 0
        cache = self._poch.setdefault((a, s, c), {0: self.const(1)})
        start = max(k for k in cache if k <= n)
        value = cache[start]
        for k in range(start + 1, n + 1):
            value = value.times_one_minus_monomial(a, s + k - 1, c)
            cache[k] = value
        return value

    def _sum(self, e: Sum, env) -> XQSeries:
        lo = self.integer(e.lo, env)
        if lo < 0:
            raise ExponentError(f"sum lower bound {lo} is negative")
        acc = XQSeries.zero(self.qorder, self.xorder)
        inner = dict(env)
        if not isinstance(e.hi, Inf):
            for v in range(lo, self.integer(e.hi, env) + 1):
                inner[e.var] = v
                acc = acc + self.eval(e.body, inner)
            return acc
        best: Optional[int] = None
        stalled = 0
        v = lo
        while True:
            inner[e.var] = v
            term = self.eval(e.body, inner)
            val = term.valuation()
            if val is None:
                return acc
            acc = acc + term
            if best is None or val > best:
                best, stalled = val, 0
            else:
                stalled += 1
                if stalled >= self.guard_window:
                    raise DivergenceError(
                        f"sum over {e.var} is not converging: valuation stuck at "
                        f"{best} for {stalled} terms (at {e.var}={v})")
            v += 1


def eval_expr(e: Union[Expr, str], qorder: int, xorder: int = 0,
              guard_window: int = DEFAULT_GUARD_WINDOW) -> XQSeries:
    """Evaluate ``e`` exactly through ``q^qorder`` and ``x^xorder``.

    An infinite ``sum`` stops at the first term that vanishes under
    truncation.  If the lowest total degree of successive terms fails to
    increase for ``guard_window`` consecutive terms, :class:`DivergenceError`
    is raised instead.
    """
    if isinstance(e, str):
        e = parse(e)
    return Evaluator(qorder, xorder, guard_window).eval(e)


@dataclass(frozen=True)
class VerifyReport:
    equal: bool
    first_mismatch: Optional[Tuple[int, int, int, int]]  # (xexp, qexp, lhs, rhs)
    qorder: int
    xorder: int

    @property
    def status(self) -> str:
        return "equal" if self.equal else "mismatch"


def run_verify(lhs: str, rhs: str, qorder: int, xorder: int = 0,
               guard_window: int = DEFAULT_GUARD_WINDOW) -> VerifyReport:
    """Evaluate both sides and compare them monomial by monomial."""
    ev = Evaluator(qorder, xorder, guard_window)
    left = ev.eval(parse(lhs))
    right = ev.eval(parse(rhs))
    mm = first_mismatch(left, right)
    return VerifyReport(mm is None, mm, qorder, xorder)


# Shipped identity scripts: name -> (lhs, rhs)
IDENTITY_SCRIPTS: Dict[str, Tuple[str, str]] = {
    "pentagonal": (
        "poch(q, inf)",
        "1 + sum(r, 1, inf, (-1)^r * (q^(r*(3*r - 1)/2) + q^(r*(3*r + 1)/2)))",
    ),
    "zagier": (
        "sum(n, 0, inf, poch(q, inf) - poch(q, n))",
        "poch(q, inf) * sum(k, 1, inf, q^k / (1 - q^k))"
        " + sum(r, 1, inf, (-1)^r * ((3*r - 1)*q^(r*(3*r - 1)/2) + 3*r*q^(r*(3*r + 1)/2)))",
    ),
    "s_series": (
        "sum(r, 0, inf, poch(x, r + 1) * x^r)",
        "1 + sum(r, 1, inf, (-1)^r * (x^(3*r - 1)*q^(r*(3*r - 1)/2) + x^(3*r)*q^(r*(3*r + 1)/2)))",
    ),
}
