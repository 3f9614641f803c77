"""
Exact scalars: multivariate polynomials over Q and quotients of them.

Every structure constant, twist entry and cochain coordinate in the package
is a :class:`Scalar` living in a :class:`ParameterContext`.  Fractions are
not reduced by a gcd; equality is decided by cross multiplication.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ScalarError(Exception):
    pass


class ContextMismatch(ScalarError):
    pass


class SingularSpecialization(ScalarError):
    pass


class ExpressionError(ScalarError):
    """Syntax error or unknown symbol, with a 1-based position."""

    def __init__(self, msg, line=1, col=1):
        ScalarError.__init__(self, "%s at line %d, column %d" % (msg, line, col))
        self.msg = msg
        self.line = line
        self.col = col


@dataclass(frozen=True)
class ParameterContext:
    symbols: tuple = ()
    deformation_symbol: str = None

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(set(symbols)) != len(symbols):
            raise ValueError("duplicate symbol in %r" % (symbols,))
        for s in symbols:
            if not IDENT.match(s):
                raise ValueError("bad symbol name %r" % s)
        if self.deformation_symbol is not None and self.deformation_symbol not in symbols:
            raise ValueError("deformation symbol %r not among %r" % (self.deformation_symbol, symbols))

    def __len__(self):
        return len(self.symbols)

    def index(self, name):
        try:
            return self.symbols.index(name)
        except ValueError:
            raise ScalarError("unknown symbol %r" % name) from None

    def union(self, *others):
        symbols = list(self.symbols)
        tsym = self.deformation_symbol
        for other in others:
            for s in other.symbols:
                if s not in symbols:
                    symbols.append(s)
            if tsym is None:
                tsym = other.deformation_symbol
            elif other.deformation_symbol not in (None, tsym):
                raise ContextMismatch("two deformation symbols %r, %r" % (tsym, other.deformation_symbol))
        return ParameterContext(tuple(symbols), tsym)

    def extend(self, names):
        return self.union(ParameterContext(tuple(names)))

    def without(self, names):
        names = set(names)
        tsym = self.deformation_symbol
        if tsym in names:
            tsym = None
        return ParameterContext(tuple(s for s in self.symbols if s not in names), tsym)

    def with_deformation(self, name):
        if name not in self.symbols:
            return ParameterContext(self.symbols + (name,), name)
        return ParameterContext(self.symbols, name)

    def __str__(self):
        return "Q(%s)" % ", ".join(self.symbols)


EMPTY = ParameterContext()


def _embedding(src, dst):
    return tuple(dst.index(s) for s in src.symbols)


class Polynomial:
    """Sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {} if terms is None else terms

    @classmethod
    def const(cls, ctx, value):
        value = Fraction(value)
        if value == 0:
            return cls(ctx)
        return cls(ctx, {(0,) * len(ctx): value})

    @classmethod
    def var(cls, ctx, name):
        e = [0] * len(ctx)
        e[ctx.index(name)] = 1
        return cls(ctx, {tuple(e): Fraction(1)})

    def _check(self, other):
        if other.ctx is not self.ctx and other.ctx.symbols != self.ctx.symbols:
            raise ContextMismatch("%s vs %s" % (self.ctx, other.ctx))

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        n = len(self.terms)
        return n == 0 or (n == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        return self.terms.get((0,) * len(self.ctx), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __neg__(self):
        return Polynomial(self.ctx, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            c = terms.get(e, 0) + c
            if c:
                terms[e] = c
            else:
                terms.pop(e, None)
        return Polynomial(self.ctx, terms)

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            c = terms.get(e, 0) - c
            if c:
                terms[e] = c
            else:
                terms.pop(e, None)
        return Polynomial(self.ctx, terms)

    def __mul__(self, other):
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial(self.ctx)
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        get = terms.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                terms[e] = get(e, 0) + c1 * c2
        return Polynomial(self.ctx, {e: c for e, c in terms.items() if c})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial(self.ctx)
        return Polynomial(self.ctx, {e: v * c for e, v in self.terms.items()})

    def leading(self):
        # lex order in symbol order == tuple order
        e = max(self.terms)
        return e, self.terms[e]

    def divexact(self, other):
        """Quotient if `other` divides self exactly, else None."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        le, lc = other.leading()
        rem = Polynomial(self.ctx, dict(self.terms))
        quot = {}
        while rem.terms:
            e, c = rem.leading()
            if any(x < y for x, y in zip(e, le)):
                return None
            qe = tuple(x - y for x, y in zip(e, le))
            qc = c / lc
            quot[qe] = qc
            rem = rem - other * Polynomial(self.ctx, {qe: qc})
        return Polynomial(self.ctx, quot)

    def monomial_gcd(self):
        it = iter(self.terms)
        g = list(next(it))
        for e in it:
            g = [min(x, y) for x, y in zip(g, e)]
        return tuple(g)

    def shift_down(self, e0):
        return Polynomial(self.ctx, {tuple(x - y for x, y in zip(e, e0)): c for e, c in self.terms.items()})

    def degree_in(self, idx):
        return max((e[idx] for e in self.terms), default=0)

    def depends_on(self, idx):
        return any(e[idx] for e in self.terms)

    def lift(self, ctx):
        if ctx is self.ctx or ctx.symbols == self.ctx.symbols:
            return Polynomial(ctx, self.terms)
        pos = _embedding(self.ctx, ctx)
        n = len(ctx)
        terms = {}
        for e, c in self.terms.items():
            f = [0] * n
            for i, x in zip(pos, e):
                f[i] = x
            terms[tuple(f)] = c
        return Polynomial(ctx, terms)

    def substitute(self, values, ctx):
        """values: index -> Fraction; result lives in `ctx` (the unbound symbols)."""
        keep = [i for i in range(len(self.ctx)) if i not in values]
        terms = {}
        for e, c in self.terms.items():
            for i, v in values.items():
                if e[i]:
                    c = c * v ** e[i]
            if c:
                f = tuple(e[i] for i in keep)
                c = terms.get(f, 0) + c
                if c:
                    terms[f] = c
                else:
                    terms.pop(f, None)
        return Polynomial(ctx, terms)

    def split(self, idx):
        """Group terms by the exponent of symbol `idx`: degree -> polynomial."""
        out = {}
        for e, c in self.terms.items():
            d = e[idx]
            out.setdefault(d, {})[e[:idx] + (0,) + e[idx + 1:]] = c
        return {d: Polynomial(self.ctx, terms) for d, terms in out.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                s if k == 1 else "%s^%d" % (s, k) for s, k in zip(self.ctx.symbols, e) if k)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = "%s*%s" % (c, mono)
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += " %s %s" % (sign, body)
        return s

    __repr__ = __str__


def _normalize(num, den):
    if num.is_zero():
        return num, Polynomial.const(num.ctx, 1)
    if den.is_constant():
        c = den.constant_value()
        return (num if c == 1 else num.scale(1 / c)), Polynomial.const(num.ctx, 1)
    _, lc = den.leading()
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    g = [min(x, y) for x, y in zip(num.monomial_gcd(), den.monomial_gcd())]
    if any(g):
        num, den = num.shift_down(g), den.shift_down(g)
        if den.is_constant():
            return num, Polynomial.const(num.ctx, 1)
    q = num.divexact(den)
    if q is not None:
        return q, Polynomial.const(num.ctx, 1)
    return num, den


class Scalar:
    """Element of Q(symbols), stored as an unreduced numerator/denominator pair."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        if den is None:
            den = Polynomial.const(num.ctx, 1)
        elif den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def ctx(self):
        return self.num.ctx

    @classmethod
    def const(cls, ctx, value):
        return cls(Polynomial.const(ctx, value), None, False)

    @classmethod
    def zero(cls, ctx):
        return cls.const(ctx, 0)

    @classmethod
    def one(cls, ctx):
        return cls.const(ctx, 1)

    @classmethod
    def var(cls, ctx, name):
        return cls(Polynomial.var(ctx, name), None, False)

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.num.ctx is not self.num.ctx and other.ctx.symbols != self.ctx.symbols:
                raise ContextMismatch("%s vs %s" % (self.ctx, other.ctx))
            return other
        if isinstance(other, (int, Rational)):
            return Scalar.const(self.ctx, other)
        return NotImplemented

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def is_rational(self):
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self):
        if not self.is_rational():
            raise ScalarError("%s is not a rational number" % self)
        return self.num.constant_value() / self.den.constant_value()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return (self.num * other.den - other.num * self.den).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __neg__(self):
        return Scalar(-self.num, self.den, False)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            return Scalar(self.num + other.num, d1, not d1.is_constant())
        q = d2.divexact(d1)
        if q is not None:
            return Scalar(self.num * q + other.num, d2)
        q = d1.divexact(d2)
        if q is not None:
            return Scalar(self.num + other.num * q, d1)
        return Scalar(self.num * d2 + other.num * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.terms or not other.num.terms:
            return Scalar.zero(self.ctx)
        if self.den.is_constant() and other.den.is_constant():
            return Scalar(self.num * other.num, None, False)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Scalar.one(self.ctx) / self ** (-k)
        out = Scalar.one(self.ctx)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def lift(self, ctx):
        if ctx is self.ctx:
            return self
        return Scalar(self.num.lift(ctx), self.den.lift(ctx), False)

    def substitute(self, bindings):
        return substitute(self, bindings)

    def truncate(self, order, symbol=None):
        return truncate_in_t(self, order, symbol)

    def coefficient(self, symbol, degree):
        """Coefficient of symbol^degree; the denominator must not involve the symbol."""
        idx = self.ctx.index(symbol)
        if self.den.depends_on(idx):
            raise ScalarError("denominator of %s depends on %s" % (self, symbol))
        part = self.num.split(idx).get(degree)
        if part is None:
            return Scalar.zero(self.ctx)
        return Scalar(part, self.den)

    def degree_in(self, symbol):
        idx = self.ctx.index(symbol)
        if self.den.depends_on(idx):
            raise ScalarError("denominator of %s depends on %s" % (self, symbol))
        return self.num.degree_in(idx)

    def denominator_factors(self):
        """Nonconstant pieces of the denominator, split into symbols when it is a monomial."""
        if self.den.is_constant():
            return []
        if len(self.den.terms) == 1:
            (e,) = self.den.terms
            return [s for s, k in zip(self.ctx.symbols, e) if k]
        return [str(self.den)]

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "Scalar(%s)" % self


def scalar_arith(op, s1, s2=None):
    if op == "add":
        return s1 + s2
    if op == "sub":
        return s1 - s2
    if op == "mul":
        return s1 * s2
    if op == "div":
        return s1 / s2
    if op == "neg":
        return -s1
    raise ValueError("unknown op %r" % op)


def scalar_eq(s1, s2):
    return s1 == s2


def substitute(s, bindings):
    """Bind symbols to rationals; the result lives in the context of the unbound symbols."""
    ctx = s.ctx
    values = {}
    for name, v in bindings.items():
        values[ctx.index(name)] = Fraction(v)
    rest = ctx.without(bindings)
    num = s.num.substitute(values, rest)
    den = s.den.substitute(values, rest)
    if den.is_zero():
        raise SingularSpecialization(
            "denominator %s vanishes at %s" % (s.den, ", ".join("%s=%s" % kv for kv in bindings.items())))
    return Scalar(num, den)


def truncate_in_t(s, order, symbol=None):
    """Drop numerator monomials of degree > order in the deformation symbol."""
    symbol = symbol or s.ctx.deformation_symbol
    if symbol is None:
        raise ScalarError("no deformation symbol in %s" % s.ctx)
    idx = s.ctx.index(symbol)
    if s.den.depends_on(idx):
        raise ScalarError("cannot truncate %s: denominator depends on %s" % (s, symbol))
    terms = {e: c for e, c in s.num.terms.items() if e[idx] <= order}
    return Scalar(Polynomial(s.ctx, terms), s.den, False)


def coerce(x, ctx):
    if isinstance(x, Scalar):
        return x.lift(ctx) if x.ctx.symbols != ctx.symbols else x
    if isinstance(x, str):
        return parse_expression(x, ctx)
    return Scalar.const(ctx, x)


# ---------------------------------------------------------------------------
# expression parser

def _tokenize(text, line, col0):
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        ch = text[pos]
        col = col0 + pos
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            toks.append(("int", int(text[pos:end]), col))
        elif ch.isalpha() and ch.isascii():
            end = pos
            while end < n and (text[end].isalnum() and text[end].isascii() or text[end] == "_"):
                end += 1
            toks.append(("sym", text[pos:end], col))
        elif ch in "+-*/^()":
            end = pos + 1
            toks.append((ch, ch, col))
        else:
            raise ExpressionError("unexpected character %r" % ch, line, col)
        pos = end
    toks.append(("end", None, col0 + n))
    return toks


class _Parser:
    def __init__(self, text, ctx, line, col):
        self.ctx = ctx
        self.line = line
        self.toks = _tokenize(text, line, col)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        raise ExpressionError(msg, self.line, self.toks[self.i][2])

    def parse(self):
        if self.peek() == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek() != "end":
            self.fail("unexpected %r" % (self.toks[self.i][1],))
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            pos = self.i
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    self.i = pos
                    self.fail("division by zero")
                value = value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() != "int":
                self.fail("expected a nonnegative integer exponent")
            base = base ** self.take()[1]
        return base

    def atom(self):
        kind, value, col = self.toks[self.i]
        if kind == "int":
            self.i += 1
            return Scalar.const(self.ctx, value)
        if kind == "sym":
            if value not in self.ctx.symbols:
                self.fail("unknown symbol %r" % value)
            self.i += 1
            return Scalar.var(self.ctx, value)
        if kind == "(":
            self.i += 1
            inner = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.i += 1
            return inner
        if kind == "end":
            self.fail("unexpected end of expression")
        self.fail("unexpected %r" % value)


def parse_expression(text, ctx, line=1, col=1):
    """Parse `text` into a Scalar over `ctx`.

    Precedence: ``^`` binds tighter than unary minus, which binds tighter than
    ``*``/``/``, then ``+``/``-``.  `line`/`col` shift reported error positions.
    """
    return _Parser(text, ctx, line, col).parse()
