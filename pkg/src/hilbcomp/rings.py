"""Exact multivariate polynomials over the rationals.

The ring is QQ[x_0, ..., x_n], optionally extended by a deformation
parameter t (an ordinary variable of its own index) and, internally, by
auxiliary elimination variables u_j used by ideal operations.  Coefficients
are arbitrary-precision `fractions.Fraction` values, monomials are exponent
tuples, and every polynomial is kept in canonical form: terms strictly
descending under the ring's monomial order, no zero coefficients, no
duplicate monomials.

Everything here is immutable and hashable; operations are pure functions.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, RingMismatchError

MAX_EXPONENT = 2**20


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative monomial order on exponent tuples.

    kind is "lex", "grevlex" or "block"; a block order compares total degree
    in the front variable set first, then grevlex within the front block,
    then grevlex within the remaining block.  Larger key tuple == larger
    monomial.
    """

    kind: str
    front: tuple = ()

    def key_function(self, width):
        if self.kind == "lex":
            return lambda m: m
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "block":
            front = tuple(i for i in self.front if i < width)
            back = tuple(i for i in range(width) if i not in set(front))
            return _block_key_function(front, back)
        raise ValueError(f"unknown monomial order kind {self.kind!r}")


def _grevlex_key(m):
    total = 0
    for e in m:
        total += e
    return (total,) + tuple(-e for e in reversed(m))


def _block_key_function(front, back):
    def key(m):
        fsub = tuple(m[i] for i in front)
        bsub = tuple(m[i] for i in back)
        return (
            (sum(fsub),)
            + tuple(-e for e in reversed(fsub))
            + (sum(bsub),)
            + tuple(-e for e in reversed(bsub))
        )

    return key


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(front_vars):
    """Block order eliminating the given variable indices first."""
    return MonomialOrder("block", tuple(sorted(set(front_vars))))


@dataclass(frozen=True)
class PolyRing:
    """QQ[x_0..x_{num_vars-1}] (+ t when has_param, + u_j auxiliaries)."""

    num_vars: int
    has_param: bool = False
    order: MonomialOrder = GREVLEX
    num_aux: int = 0

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one x variable")

    @property
    def width(self):
        return self.num_vars + (1 if self.has_param else 0) + self.num_aux

    @property
    def param_index(self):
        return self.num_vars if self.has_param else None

    def aux_index(self, j=0):
        if not 0 <= j < self.num_aux:
            raise ValueError("no such auxiliary variable")
        return self.num_vars + (1 if self.has_param else 0) + j

    def var_name(self, i):
        if i < self.num_vars:
            return f"x{i}"
        if self.has_param and i == self.num_vars:
            return "t"
        return f"u{i - self.num_vars - (1 if self.has_param else 0)}"

    def sort_key(self):
        return _cached_key(self.order, self.width)

    # ----- element constructors -------------------------------------
    @property
    def zero(self):
        return Polynomial(self, ())

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero
        return Polynomial(self, (((0,) * self.width, c),))

    def variable(self, i):
        if not 0 <= i < self.width:
            raise ValueError(f"variable index {i} out of range")
        mono = tuple(1 if j == i else 0 for j in range(self.width))
        return Polynomial(self, ((mono, Fraction(1)),))

    def x(self, i):
        if not 0 <= i < self.num_vars:
            raise ValueError(f"x{i} is not a variable of this ring")
        return self.variable(i)

    @property
    def t(self):
        if not self.has_param:
            raise ValueError("ring has no parameter variable")
        return self.variable(self.param_index)

    def variables(self):
        return tuple(self.variable(i) for i in range(self.width))

    def from_dict(self, coeffs):
        """Canonical polynomial from {exponent tuple: coefficient}."""
        key = self.sort_key()
        terms = tuple(
            (m, Fraction(c))
            for m, c in sorted(coeffs.items(), key=lambda mc: key(mc[0]), reverse=True)
            if c
        )
        return Polynomial(self, terms)

    def from_terms(self, pairs):
        acc = {}
        for m, c in pairs:
            acc[m] = acc.get(m, 0) + Fraction(c)
        return self.from_dict(acc)

    # ----- ring derivation -------------------------------------------
    def with_order(self, order):
        return PolyRing(self.num_vars, self.has_param, order, self.num_aux)

    def with_param(self):
        return PolyRing(self.num_vars, True, self.order, self.num_aux)

    def without_param(self):
        return PolyRing(self.num_vars, False, self.order, self.num_aux)

    def with_aux(self, k):
        return PolyRing(self.num_vars, self.has_param, self.order, k)

    def compatible(self, other):
        """Same variables, possibly different order."""
        return (
            self.num_vars == other.num_vars
            and self.has_param == other.has_param
            and self.num_aux == other.num_aux
        )


@functools.lru_cache(maxsize=None)
def _cached_key(order, width):
    return order.key_function(width)


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_pow(a, e):
    return tuple(x * e for x in a)


class Polynomial:
    """Immutable canonical polynomial: terms descending in the ring order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Polynomial is immutable")

    # ----- basic queries ---------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lead_coeff(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[0][1]

    def total_degree(self):
        """Largest total degree over all variables (including t); -1 for 0."""
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def x_degree(self):
        """Largest degree in the x variables only; -1 for 0."""
        if not self.terms:
            return -1
        nv = self.ring.num_vars
        return max(sum(m[:nv]) for m, _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(m) for m, _ in self.terms}
        return len(degs) == 1

    def is_x_homogeneous(self):
        if not self.terms:
            return True
        nv = self.ring.num_vars
        degs = {sum(m[:nv]) for m, _ in self.terms}
        return len(degs) == 1

    def as_dict(self):
        return dict(self.terms)

    def coefficient(self, mono):
        for m, c in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    # ----- arithmetic -------------------------------------------------
    def _require_same_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands live in different rings: {self.ring} vs {other.ring}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._require_same_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m)
            if v is None:
                acc[m] = c
            else:
                v = v + c
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        return self.ring.from_dict(acc)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._require_same_ring(other)
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = _mono_mul(m1, m2)
                v = acc.get(m)
                if v is None:
                    acc[m] = c1 * c2
                else:
                    v = v + c1 * c2
                    if v:
                        acc[m] = v
                    else:
                        del acc[m]
        return self.ring.from_dict(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return self.ring.zero
        return Polynomial(self.ring, tuple((m, v * c) for m, v in self.terms))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    def content(self):
        """Positive rational content (gcd of coefficients); 0 for the zero poly."""
        if not self.terms:
            return Fraction(0)
        from math import gcd

        num = 0
        den = 1
        for _, c in self.terms:
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Scaled to coprime integer coefficients with positive leading sign."""
        if not self.terms:
            return self
        c = self.content()
        p = self.scale(1 / c)
        if p.terms[0][1] < 0:
            p = p.scale(-1)
        return p

    # ----- structural operations --------------------------------------
    def substitute(self, var_index, replacement):
        """Image under the ring map sending variable var_index to replacement."""
        if isinstance(replacement, (int, Fraction)):
            replacement = self.ring.constant(replacement)
        self._require_same_ring(replacement)
        out = self.ring.zero
        powers = {0: self.ring.one}
        for m, c in self.terms:
            e = m[var_index]
            if e not in powers:
                powers[e] = replacement**e
            rest = tuple(0 if i == var_index else v for i, v in enumerate(m))
            out = out + powers[e].scale(c) * Polynomial(self.ring, ((rest, Fraction(1)),))
        return out

    def convert(self, target):
        """Reinterpret in a ring with the same variable identities.

        Variables absent from the target must not occur; extra target
        variables get exponent zero.
        """
        src, dst = self.ring, target
        mapping = []
        for i in range(src.width):
            name = src.var_name(i)
            j = _target_index(dst, name)
            mapping.append(j)
        acc = {}
        for m, c in self.terms:
            out = [0] * dst.width
            for i, e in enumerate(m):
                if e == 0:
                    continue
                j = mapping[i]
                if j is None:
                    raise RingMismatchError(
                        f"variable {src.var_name(i)} does not exist in target ring"
                    )
                out[j] = e
            acc[tuple(out)] = acc.get(tuple(out), 0) + c
        return dst.from_dict(acc)

    def compose_linear(self, matrix):
        """Substitute x_i -> sum_j matrix[i][j] * x_j simultaneously."""
        ring = self.ring
        nv = ring.num_vars
        images = []
        for i in range(nv):
            row = matrix[i]
            acc = {}
            for j, a in enumerate(row):
                if a:
                    mono = tuple(1 if k == j else 0 for k in range(ring.width))
                    acc[mono] = Fraction(a)
            images.append(ring.from_dict(acc))
        out = ring.zero
        for m, c in self.terms:
            term = ring.constant(c)
            for i in range(nv):
                if m[i]:
                    term = term * images[i] ** m[i]
            for i in range(nv, ring.width):
                if m[i]:
                    term = term * ring.variable(i) ** m[i]
            out = out + term
        return out

    # ----- comparisons / hashing ---------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _target_index(ring, name):
    for j in range(ring.width):
        if ring.var_name(j) == name:
            return j
    return None


def monomials_of_degree(width, d):
    """All exponent tuples of total degree d in `width` variables."""
    if d < 0:
        return []
    out = []

    def rec(prefix, remaining, pos):
        if pos == width - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], d, 0)
    return out


def validate_canonical(p):
    """Assert the canonical-form invariants; used by tests."""
    key = p.ring.sort_key()
    seen = set()
    prev = None
    for m, c in p.terms:
        assert c != 0, "zero coefficient stored"
        assert isinstance(c, Fraction)
        assert len(m) == p.ring.width
        assert all(isinstance(e, int) and e >= 0 for e in m)
        assert m not in seen, "duplicate monomial"
        seen.add(m)
        k = key(m)
        if prev is not None:
            assert k < prev, "terms not strictly descending"
        prev = k
    return True


# ---------------------------------------------------------------------------
# text format:  expr := term (('+'|'-') term)*
#               term := coeff ('*' factor)* | factor ('*' factor)*
#               factor := var ('^' nat)? ;  coeff := int | int '/' posint
#               var := 'x' nat | 't'
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<var>x\d+|t)|(?P<num>\d+)|(?P<op>[-+*/^]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if m.lastgroup == "var":
            tokens.append(("var", m.group("var"), m.start("var")))
        elif m.lastgroup == "num":
            tokens.append(("num", m.group("num"), m.start("num")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        acc = {}
        sign = 1
        kind, val, pos = self.peek()
        if kind == "end":
            raise ParseError("empty polynomial expression", pos)
        self._term(acc, sign)
        while True:
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.advance()
                self._term(acc, 1 if val == "+" else -1)
            else:
                raise ParseError(f"expected '+' or '-', found {val!r}", pos)
        return self.ring.from_dict(acc)

    def _term(self, acc, sign):
        coeff = Fraction(sign)
        mono = [0] * self.ring.width
        kind, val, pos = self.peek()
        if kind == "num" or (kind == "op" and val == "-"):
            coeff = coeff * self._coeff()
            kind, val, pos = self.peek()
            while kind == "op" and val == "*":
                self.advance()
                self._factor(mono)
                kind, val, pos = self.peek()
        elif kind == "var":
            self._factor(mono)
            kind, val, pos = self.peek()
            while kind == "op" and val == "*":
                self.advance()
                self._factor(mono)
                kind, val, pos = self.peek()
        else:
            raise ParseError(f"expected a term, found {val!r}", pos)
        m = tuple(mono)
        acc[m] = acc.get(m, 0) + coeff

    def _coeff(self):
        kind, val, pos = self.advance()
        neg = False
        if kind == "op" and val == "-":
            neg = True
            kind, val, pos = self.advance()
        if kind != "num":
            raise ParseError(f"expected an integer, found {val!r}", pos)
        num = int(val)
        kind2, val2, _ = self.peek()
        if kind2 == "op" and val2 == "/":
            self.advance()
            kind3, val3, pos3 = self.advance()
            if kind3 != "num":
                raise ParseError(f"expected a denominator, found {val3!r}", pos3)
            den = int(val3)
            if den == 0:
                raise ParseError("zero denominator", pos3)
            result = Fraction(num, den)
        else:
            result = Fraction(num)
        return -result if neg else result

    def _factor(self, mono):
        kind, val, pos = self.advance()
        if kind != "var":
            raise ParseError(f"expected a variable, found {val!r}", pos)
        idx = self._var_index(val, pos)
        exp = 1
        kind2, val2, _ = self.peek()
        if kind2 == "op" and val2 == "^":
            self.advance()
            kind3, val3, pos3 = self.advance()
            if kind3 != "num":
                raise ParseError(f"expected an exponent, found {val3!r}", pos3)
            exp = int(val3)
            if exp > MAX_EXPONENT:
                raise ParseError(f"exponent {exp} too large", pos3)
        mono[idx] += exp
        if mono[idx] > MAX_EXPONENT:
            raise ParseError("accumulated exponent too large", pos)

    def _var_index(self, name, pos):
        ring = self.ring
        if name == "t":
            if not ring.has_param:
                raise ParseError("variable t not available in this ring", pos)
            return ring.param_index
        i = int(name[1:])
        if i >= ring.num_vars:
            raise ParseError(f"unknown variable {name}", pos)
        return i


def parse(text, ring):
    """Parse polynomial text into canonical form.  parse(format(p)) == p."""
    # a leading '-' must open a signed integer coefficient per the grammar
    return _Parser(text, ring).parse()


def format_polynomial(p):
    """Canonical text: descending terms, explicit '*' and '^'."""
    if not p.terms:
        return "0"
    ring = p.ring
    parts = []
    for k, (m, c) in enumerate(p.terms):
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(ring.var_name(i))
            elif e > 1:
                factors.append(f"{ring.var_name(i)}^{e}")
        mag = abs(c)
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = "*".join([str(mag)] + factors)
        else:
            body = str(mag)
        if k == 0:
            if c > 0:
                parts.append(body)
            elif factors and mag == 1:
                # grammar has no unary minus on a bare monomial
                parts.append(f"-1*{body}")
            else:
                parts.append(f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)
