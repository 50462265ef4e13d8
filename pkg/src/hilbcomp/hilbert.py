"""Hilbert series, Hilbert functions, Hilbert polynomials.

The series of S/I is computed from the initial monomial ideal (grevlex
leading terms of the reduced basis) by the variable-pivot recursion

    HS(M) = HS(M + (x)) + T * HS(M : x)

with pairwise-coprime generator sets as base case.  The numerator Q(T) with
HS = Q/(1-T)^width is exact integer data; cancelling (1-T) factors yields
the Hilbert polynomial, the projective dimension, the degree, and the bound
from which polynomial and function agree.

Includes the reference Hilbert polynomial of a pair of codimension-two
linear subspaces of P^n meeting in codimension four:

    2*C(m+n-2, n-2) - C(m+n-4, n-4),  with C(., a) = 0 for a < 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import HomogeneityError
from .rings import monomials_of_degree


class UniPoly:
    """Univariate polynomial in m with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("UniPoly is immutable")

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, m):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + _coerce(other).scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c):
        return UniPoly([a * Fraction(c) for a in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "m" if mag == 1 else f"{mag}*m"
            else:
                body = f"m^{e}" if mag == 1 else f"{mag}*m^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


def _coerce(v):
    return v if isinstance(v, UniPoly) else UniPoly([v])


UNIPOLY_ZERO = UniPoly()
UNIPOLY_M = UniPoly([0, 1])


def binomial_polynomial(a, offset=0):
    """C(m - offset + a, a) as a polynomial in m; zero when a < 0."""
    if a < 0:
        return UNIPOLY_ZERO
    acc = UniPoly([1])
    for i in range(1, a + 1):
        acc = acc * UniPoly([i - offset, 1])
    return acc.scale(Fraction(1, factorial(a)))


def pair_hilbert_polynomial(n):
    """Hilbert polynomial of two codimension-two linear subspaces of P^n
    meeting along a codimension-four linear subspace."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    return binomial_polynomial(n - 2).scale(2) - binomial_polynomial(n - 4)


def double_structure_hilbert_count(n, k, m):
    """Closed-form value of dim (S/I)_m for the pure double structure with
    degree-k coprime tie polynomials in x_2..x_n."""

    def c(a, b):
        if b < 0 or a < 0:
            return 0
        return comb(a, b)

    return (
        c(n - 2 + m, m)
        + 2 * c(n - 2 + m - 1, m - 1)
        - c(n - 2 + m - 1 - k, m - 1 - k)
    )


# ---------------------------------------------------------------------------
# numerator of the series of a monomial ideal
# ---------------------------------------------------------------------------

def _strip(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def _upadd(p, q):
    n = max(len(p), len(q))
    return _strip(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def _upmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _upshift(p, k):
    return (0,) * k + tuple(p)


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _numerator(gens):
    """Q(T) for S/(monomial ideal); gens minimal, as a sorted tuple."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    width = len(gens[0])
    occupancy = [0] * width
    for g in gens:
        for i, e in enumerate(g):
            if e:
                occupancy[i] += 1
    if max(occupancy) <= 1:
        # pairwise coprime generators form a regular sequence
        q = (1,)
        for g in gens:
            q = _upmul(q, _one_minus_power(sum(g)))
        return _strip(q)
    pivot = max(range(width), key=lambda i: occupancy[i])
    plus = _minimalize(
        [g for g in gens if g[pivot] == 0]
        + [tuple(1 if i == pivot else 0 for i in range(width))]
    )
    colon = _minimalize(
        [
            tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(g))
            for g in gens
        ]
    )
    return _upadd(_numerator(plus), _upshift(_numerator(colon), 1))


def _one_minus_power(d):
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return tuple(out)


@dataclass(frozen=True)
class HilbertData:
    """Exact series and polynomial data for a homogeneous quotient S/I."""

    num_vars: int
    series_numerator: tuple     # Q with HS = Q/(1-T)^num_vars
    reduced_numerator: tuple    # same series with all (1-T) factors cancelled
    denominator_power: int
    hilbert_polynomial: UniPoly
    dimension: int              # projective dimension, -1 for empty
    degree: int
    agreement_bound: int        # HF(m) == HP(m) for every m >= this bound

    def series_coefficient(self, d):
        """dim (S/I)_d read off the power series expansion."""
        if d < 0:
            return 0
        q = self.reduced_numerator
        dp = self.denominator_power
        total = 0
        for j, c in enumerate(q):
            if j > d or c == 0:
                continue
            total += c * comb(d - j + dp - 1, dp - 1) if dp > 0 else (c if j == d else 0)
        return total


def _initial_monomials(I):
    if I.is_zero():
        return ()
    gb = I.groebner_basis()
    return _minimalize([g.lead_monomial() for g in gb.elements])


def hilbert_series(I):
    """HilbertData of S/I for a homogeneous ideal in an x-only ring."""
    if I._hilbert_cache is not None:
        return I._hilbert_cache
    ring = I.ring
    if ring.has_param or ring.num_aux:
        raise ValueError("Hilbert data requires a plain x-variable ring")
    if not I.is_homogeneous():
        raise HomogeneityError("Hilbert series requires a homogeneous ideal")
    width = ring.width
    q = _numerator(_initial_monomials(I))

    reduced = list(q)
    dpow = width
    while reduced and any(reduced) and sum(reduced) == 0:
        # exact synthetic division by (1 - T)
        out = []
        carry = 0
        for c in reduced[:-1]:
            carry = c + carry
            out.append(carry)
        reduced = out
        dpow -= 1
    if not any(reduced):
        data = HilbertData(width, q, (0,), 0, UNIPOLY_ZERO, -1, 0, 0)
        I._set_hilbert(data)
        return data

    reduced = tuple(reduced)
    if dpow == 0:
        hp = UNIPOLY_ZERO
        dimension = -1
        degree = 0
        bound = len(reduced)  # beyond deg(reduced) both sides are zero
    else:
        hp = UNIPOLY_ZERO
        for j, c in enumerate(reduced):
            if c:
                hp = hp + _shifted_binomial(dpow - 1, j).scale(c)
        dimension = dpow - 1
        # the degree of the scheme is the reduced numerator at T=1
        degree = sum(reduced)
        bound = max(0, len(reduced) - 1 - dpow + 1)
    data = HilbertData(width, q, reduced, dpow, hp, dimension, degree, bound)
    I._set_hilbert(data)
    return data


def _shifted_binomial(a, j):
    """C(m - j + a, a) as a polynomial in m."""
    return binomial_polynomial(a, offset=j)


def hilbert_function(I, d):
    """dim (S/I)_d by direct monomial count outside the initial ideal."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    ring = I.ring
    if ring.has_param or ring.num_aux:
        raise ValueError("Hilbert data requires a plain x-variable ring")
    if not I.is_homogeneous():
        raise HomogeneityError("Hilbert function requires a homogeneous ideal")
    lead = _initial_monomials(I)
    count = 0
    for m in monomials_of_degree(ring.width, d):
        if not any(all(x <= y for x, y in zip(g, m)) for g in lead):
            count += 1
    return count
