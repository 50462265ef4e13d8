"""Buchberger's algorithm, normal forms, elimination, and syzygies.

The engine works on integer-primitive term data with an explicit
monomial-order key function, so the same code serves grevlex, lex, and
block elimination orders.  Division is fraction-free: the working
polynomial is scaled by integer pivots and every intermediate is stripped
to its integer content, which keeps coefficient growth bounded; exact
rational results appear only at the boundary (monic basis elements, normal
forms, quotients).

Reduced Groebner bases are canonical for (ideal, order): monic, fully
autoreduced, sorted descending by leading monomial, which makes ideal
equality a tuple comparison downstream.  Pair management uses the
Gebauer-Moeller refinement of Buchberger's first and second criteria; pair
selection is by sugar degree with the order key of the lcm as tie-break.
An optional seed randomizes the processing schedule (the reduced basis must
not depend on it).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import HomogeneityError, RingMismatchError
from .rings import Polynomial, elimination_order, monomials_of_degree


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))

def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))

def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def _neg(key):
    return tuple(-k for k in key)


class _Entry:
    """Primitive-integer basis element: prim == lc * monic form."""

    __slots__ = ("lm", "terms", "lc", "sugar", "vec")

    def __init__(self, lm, terms, lc, sugar, vec=None):
        self.lm = lm
        self.terms = terms      # tuple of (mono, int coeff), descending, lead first
        self.lc = lc            # positive integer lead coefficient
        self.sugar = sugar
        self.vec = vec          # tuple of Polynomials with prim == sum(vec . gens)


def _poly_to_int_dict(p):
    """Clear denominators: returns ({mono: int}, denominator)."""
    den = 1
    for _, c in p.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms}, den


def _content(d):
    g = 0
    for v in d.values():
        g = gcd(g, abs(v))
        if g == 1:
            return 1
    return g


def _sorted_int_terms(d, key):
    return tuple(sorted(d.items(), key=lambda mc: key(mc[0]), reverse=True))


def _reduce_int(work, entries, key, want_quotients=False):
    """Fraction-free full division of an integer term dict by the entries.

    Maintains  current == scale * input - sum_k quotient_k * entries[k].prim
    with everything integral.  Returns (remainder dict with keys produced in
    descending order, scale, quotients or None); no remainder monomial is
    divisible by any entry's lead.
    """
    work = dict(work)
    heap = [(_neg(key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    scale = 1
    quotients = [dict() for _ in entries] if want_quotients else None
    lms = [e.lm for e in entries]
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None or c == 0:
            continue
        for idx, lm in enumerate(lms):
            if _divides(lm, m):
                entry = entries[idx]
                # entry.lc > 0 by construction
                g = gcd(c, entry.lc)
                mult = entry.lc // g
                coef = c // g
                if mult != 1:
                    for k in work:
                        work[k] *= mult
                    for k in remainder:
                        remainder[k] *= mult
                    if want_quotients:
                        for q in quotients:
                            for k in q:
                                q[k] *= mult
                    scale *= mult
                shift = _mono_sub(m, lm)
                for mono, tc in entry.terms[1:]:
                    mm = _mono_mul(mono, shift)
                    prev = work.get(mm)
                    if prev is None:
                        nv = -coef * tc
                        if nv:
                            work[mm] = nv
                            heapq.heappush(heap, (_neg(key(mm)), mm))
                    else:
                        nv = prev - coef * tc
                        if nv:
                            work[mm] = nv
                        else:
                            del work[mm]
                if want_quotients:
                    q = quotients[idx]
                    q[shift] = q.get(shift, 0) + coef
                break
        else:
            remainder[m] = c
    return remainder, scale, quotients


def _int_spoly(e1, e2):
    """Primitive-friendly S-polynomial data of two entries.

    Returns (work dict, denominator) with
    work/den == x^a * monic(e1) - x^b * monic(e2).
    """
    lcm = _mono_lcm(e1.lm, e2.lm)
    s1, s2 = _mono_sub(lcm, e1.lm), _mono_sub(lcm, e2.lm)
    g = gcd(e1.lc, e2.lc)
    c1, c2 = e2.lc // g, e1.lc // g
    acc = {}
    for m, c in e1.terms:
        acc[_mono_mul(m, s1)] = c * c1
    for m, c in e2.terms:
        mm = _mono_mul(m, s2)
        v = acc.get(mm, 0) - c * c2
        if v:
            acc[mm] = v
        else:
            acc.pop(mm, None)
    return acc, (e1.lc * e2.lc) // g, (s1, s2, c1, c2)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with the generators it came from.

    elements are monic and sorted descending by leading monomial in `ring`
    (which carries the order the basis was computed under).  When tracking
    was requested, transform[i] expresses elements[i] as an exact
    combination of generators: elements = transform . generators.
    """

    ring: object
    elements: tuple
    generators: tuple
    transform: tuple = None

    @property
    def order(self):
        return self.ring.order

    def lead_monomials(self):
        return tuple(g.lead_monomial() for g in self.elements)

    def _entries(self):
        cached = getattr(self, "_entry_cache", None)
        if cached is None:
            key = self.ring.sort_key()
            cached = []
            for g in self.elements:
                d, _ = _poly_to_int_dict(g)
                terms = _sorted_int_terms(d, key)
                cached.append(_Entry(terms[0][0], terms, terms[0][1], 0))
            cached = tuple(cached)
            object.__setattr__(self, "_entry_cache", cached)
        return cached

    def reduce(self, f, want_quotients=False):
        """Full normal form of f against this basis, returned in f's ring.

        With want_quotients, also returns the exact monic-basis quotients:
        f == sum_k q_k * elements[k] + remainder.
        """
        if not f.ring.compatible(self.ring):
            raise RingMismatchError("polynomial is not in the basis ring")
        g = f.convert(self.ring)
        key = self.ring.sort_key()
        work, den = _poly_to_int_dict(g)
        rem, scale, quots = _reduce_int(work, self._entries(), key, want_quotients)
        factor = Fraction(1, den * scale)
        result = self.ring.from_dict({m: c * factor for m, c in rem.items()})
        result = result.convert(f.ring)
        if not want_quotients:
            return result
        entries = self._entries()
        out = []
        for q, entry in zip(quots, entries):
            qf = Fraction(entry.lc, den * scale)
            out.append(self.ring.from_dict({m: c * qf for m, c in q.items()}))
        return result, out

    def contains(self, f):
        return self.reduce(f).is_zero()

    def spair_certificate(self):
        """True when every S-pair of the basis reduces to zero."""
        entries = self._entries()
        key = self.ring.sort_key()
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                s, _, _ = _int_spoly(entries[i], entries[j])
                rem, _, _ = _reduce_int(s, entries, key)
                if rem:
                    return False
        return True

    def transform_certificate(self):
        """Exact check that transform . generators == elements."""
        if self.transform is None:
            return False
        for row, g in zip(self.transform, self.elements):
            acc = self.ring.zero
            for coef, gen in zip(row, self.generators):
                acc = acc + coef * gen
            if acc != g:
                return False
        return True


def buchberger(gens, order=None, *, transform=True, seed=None):
    """Reduced Groebner basis of the given nonzero generators.

    The result is independent of the S-pair processing schedule; `seed`
    permutes that schedule for exactly that reason (testing).  With
    `transform=True` each basis element carries its exact expression in the
    original generators.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("generator list must be non-empty")
    ring0 = gens[0].ring
    for g in gens:
        if g.ring != ring0:
            raise RingMismatchError("generators live in different rings")
        if g.is_zero():
            raise ValueError("zero generator")
    if order is None:
        order = ring0.order
    ring = ring0.with_order(order)
    key = ring.sort_key()
    originals = tuple(g.convert(ring) for g in gens)

    rng = random.Random(seed) if seed is not None else None
    basis = []
    pairs = set()

    def add_element(int_dict, sugar, vec):
        content = _content(int_dict)
        if content > 1:
            int_dict = {m: c // content for m, c in int_dict.items()}
            if vec is not None:
                inv = Fraction(1, content)
                vec = tuple(p.scale(inv) for p in vec)
        terms = _sorted_int_terms(int_dict, key)
        if terms[0][1] < 0:
            terms = tuple((m, -c) for m, c in terms)
            if vec is not None:
                vec = tuple(-p for p in vec)
        basis.append(_Entry(terms[0][0], terms, terms[0][1], sugar, vec))
        gm_update(len(basis) - 1)

    def gm_update(new_idx):
        """Gebauer-Moeller pair update: product and chain criteria."""
        lmf = basis[new_idx].lm
        lms = [e.lm for e in basis]
        stale = [
            (i, j)
            for (i, j) in pairs
            if _divides(lmf, _mono_lcm(lms[i], lms[j]))
            and _mono_lcm(lms[i], lms[j]) != _mono_lcm(lms[i], lmf)
            and _mono_lcm(lms[i], lms[j]) != _mono_lcm(lms[j], lmf)
        ]
        for p in stale:
            pairs.discard(p)
        by_lcm = {}
        for i in range(new_idx):
            by_lcm.setdefault(_mono_lcm(lms[i], lmf), []).append(i)
        minimal = []
        for L in sorted(by_lcm, key=key):
            if not any(_divides(M, L) for M in minimal):
                minimal.append(L)
        for L in minimal:
            if not any(
                _mono_lcm(lms[i], lmf) == _mono_mul(lms[i], lmf) for i in by_lcm[L]
            ):
                pairs.add((min(by_lcm[L]), new_idx))

    r = len(originals)
    for i, g in enumerate(originals):
        d, den = _poly_to_int_dict(g)
        vec = None
        if transform:
            vec = tuple(
                ring.constant(den) if k == i else ring.zero for k in range(r)
            )
        add_element(d, g.total_degree(), vec)

    def pair_key(p):
        i, j = p
        lcm = _mono_lcm(basis[i].lm, basis[j].lm)
        deg = sum(lcm)
        sugar = max(
            basis[i].sugar + deg - sum(basis[i].lm),
            basis[j].sugar + deg - sum(basis[j].lm),
        )
        return (sugar,) + key(lcm) + (i, j)

    while pairs:
        if rng is not None:
            chosen = rng.choice(sorted(pairs))
        else:
            chosen = min(pairs, key=pair_key)
        pairs.discard(chosen)
        i, j = chosen
        e1, e2 = basis[i], basis[j]
        s, den, (s1, s2, c1, c2) = _int_spoly(e1, e2)
        if not s:
            continue
        rem, scale, quots = _reduce_int(s, basis, key, want_quotients=transform)
        if not rem:
            continue
        lcm = _mono_lcm(e1.lm, e2.lm)
        deg = sum(lcm)
        sugar = max(
            e1.sugar + deg - sum(e1.lm),
            e2.sugar + deg - sum(e2.lm),
        )
        vec = None
        if transform:
            # remainder == scale * spoly - sum_k quot_k * prim_k, all prim-based
            m1 = ring.from_dict({s1: Fraction(c1 * scale)})
            m2 = ring.from_dict({s2: Fraction(c2 * scale)})
            vec = [m1 * a - m2 * b for a, b in zip(e1.vec, e2.vec)]
            for k, q in enumerate(quots):
                if q:
                    qp = ring.from_dict({m: Fraction(c) for m, c in q.items()})
                    vec = [a - qp * b for a, b in zip(vec, basis[k].vec)]
            vec = tuple(vec)
        add_element(rem, sugar, vec)

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(basis)), key=lambda i: key(basis[i].lm))
    kept = []
    for i in order_idx:
        if not any(_divides(basis[k].lm, basis[i].lm) for k in kept):
            kept.append(i)

    # interreduce tails (leads are untouched: the basis is minimal)
    final = []
    for i in kept:
        others = [basis[k] for k in kept if k != i]
        rem, scale, quots = _reduce_int(
            dict(basis[i].terms), others, key, want_quotients=transform
        )
        vec = None
        if transform:
            vec = [p.scale(scale) for p in basis[i].vec]
            for entry, q in zip(others, quots):
                if q:
                    qp = ring.from_dict({m: Fraction(c) for m, c in q.items()})
                    vec = [a - qp * b for a, b in zip(vec, entry.vec)]
        terms = _sorted_int_terms(rem, key)
        lc = terms[0][1]
        poly = ring.from_dict({m: Fraction(c, lc) for m, c in terms})
        if vec is not None:
            inv = Fraction(1, lc)
            vec = tuple(p.scale(inv) for p in vec)
        final.append((poly, vec))

    final.sort(key=lambda pv: key(pv[0].lead_monomial()), reverse=True)
    elements = tuple(p for p, _ in final)
    matrix = tuple(v for _, v in final) if transform else None
    return GroebnerBasis(ring, elements, originals, matrix)


def normal_form(f, gb):
    """Remainder of full division of f by the basis; f - result lies in <gb>."""
    return gb.reduce(f)


def eliminate_generators(gens, front_vars):
    """Generators of <gens> intersected with the subring avoiding front_vars.

    Returns polynomials in the ring of the input generators.  For a block
    elimination order the front-free elements of the reduced basis are
    themselves the reduced grevlex basis of the elimination ideal.
    """
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    front = tuple(sorted(set(front_vars)))
    if not front:
        return list(gens)
    gb = buchberger(gens, elimination_order(front), transform=False)
    out = []
    for g in gb.elements:
        lm = g.lead_monomial()
        if all(lm[v] == 0 for v in front):
            # an elimination order puts any front-variable monomial above
            # every front-free one, so the whole tail is front-free too
            assert all(m[v] == 0 for v in front for m, _ in g.terms)
            out.append(g.convert(ring))
    return out


def exact_divide(f, g):
    """Exact quotient f/g; raises when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    ring = f.ring
    key = ring.sort_key()
    gd, gden = _poly_to_int_dict(g)
    gterms = _sorted_int_terms(gd, key)
    sign = 1
    if gterms[0][1] < 0:
        gterms = tuple((m, -c) for m, c in gterms)
        sign = -1
    entry = _Entry(gterms[0][0], gterms, gterms[0][1], 0)
    fd, fden = _poly_to_int_dict(f)
    rem, scale, quots = _reduce_int(fd, [entry], key, want_quotients=True)
    if rem:
        raise ValueError("polynomial is not divisible")
    # scale*fden*f == quot * (sign*gden*g)  =>  f/g == quot * sign*gden/(scale*fden)
    qf = Fraction(sign * gden, fden * scale)
    return ring.from_dict({m: c * qf for m, c in quots[0].items()})


@dataclass(frozen=True)
class SyzygyModule:
    """Generating set of the first syzygies of a fixed generator tuple.

    Every row satisfies sum(row[j] * target[j]) == 0 exactly; rows are
    homogeneous with the recorded degree shifts and generate the full
    module (Schreyer construction lifted through the basis transform).
    """

    ring: object
    target: tuple
    generators: tuple
    shifts: tuple

    def verify(self):
        for row in self.generators:
            acc = self.ring.zero
            for s, f in zip(row, self.target):
                acc = acc + s * f
            if not acc.is_zero():
                return False
        return True

    def contains(self, candidate):
        """Degreewise module membership for a homogeneous candidate row."""
        return _module_contains(self.ring, self.target, self.generators, candidate)


def _primitive_row(row):
    """Scale a polynomial tuple to coprime integer coefficients, positive lead."""
    num = 0
    den = 1
    for p in row:
        for _, c in p.terms:
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
    if num == 0:
        return row
    content = Fraction(num, den)
    row = tuple(p.scale(1 / content) for p in row)
    lead = next(p for p in row if not p.is_zero())
    if lead.lead_coeff() < 0:
        row = tuple(-p for p in row)
    return row


def _tuple_shift(row, target):
    degs = set()
    for s, f in zip(row, target):
        if not s.is_zero():
            degs.add(s.total_degree() + f.total_degree())
    if len(degs) != 1:
        raise HomogeneityError("syzygy row is not homogeneous")
    return degs.pop()


def _row_coordinates(ring, target, row, shift):
    """Flatten a degree-`shift` module row into a rational coordinate vector."""
    coords = []
    for s, f in zip(row, target):
        d = shift - f.total_degree()
        monos = monomials_of_degree(ring.width, d)
        lookup = dict(s.terms)
        coords.extend(Fraction(lookup.get(m, 0)) for m in monos)
    return coords


def _module_contains(ring, target, generators, candidate):
    shift = _tuple_shift(candidate, target)
    rows = []
    for gen in generators:
        gshift = _tuple_shift(gen, target)
        step = shift - gshift
        if step < 0:
            continue
        for m in monomials_of_degree(ring.width, step):
            mono = ring.from_dict({m: Fraction(1)})
            shifted = tuple(mono * s for s in gen)
            rows.append(_row_coordinates(ring, target, shifted, shift))
    return linalg.in_row_span(rows, _row_coordinates(ring, target, candidate, shift))


def syzygies(gens):
    """Generating syzygies of (f_1, ..., f_r): Schreyer rows on the reduced
    basis, pulled back through the recorded transform, plus the rows of
    I - B.A that absorb the division of each generator by the basis."""
    gens = list(gens)
    if not gens:
        raise ValueError("generator list must be non-empty")
    for g in gens:
        if not g.is_homogeneous():
            raise HomogeneityError("syzygies require homogeneous generators")
    gb = buchberger(gens, transform=True)
    ring = gb.ring
    elements = gb.elements
    s = len(elements)
    r = len(gens)
    A = gb.transform  # s x r

    # B: each generator written in the basis (r x s)
    B = []
    for g in gb.generators:
        rem, quots = gb.reduce(g, want_quotients=True)
        if not rem.is_zero():
            raise AssertionError("generator failed to reduce to zero against its own basis")
        B.append(tuple(quots))

    rows = []
    entries = gb._entries()
    key = ring.sort_key()
    # Schreyer rows tau_ij mapped through A
    for i in range(s):
        for j in range(i + 1, s):
            e1, e2 = entries[i], entries[j]
            sp, den, (s1, s2, c1, c2) = _int_spoly(e1, e2)
            rem, scale, quots = _reduce_int(sp, entries, key, want_quotients=True)
            if rem:
                raise AssertionError("S-pair of a reduced basis failed to vanish")
            # x^s1*monic_i - x^s2*monic_j == sum_k Q_k*lc_k/(scale*den) * monic_k
            tau = [ring.zero] * s
            tau[i] = tau[i] + ring.from_dict({s1: Fraction(1)})
            tau[j] = tau[j] - ring.from_dict({s2: Fraction(1)})
            for k, q in enumerate(quots):
                if q:
                    qf = Fraction(entries[k].lc, scale * den)
                    tau[k] = tau[k] - ring.from_dict(
                        {m: c * qf for m, c in q.items()}
                    )
            row = []
            for col in range(r):
                acc = ring.zero
                for k in range(s):
                    if tau[k].is_zero() or A[k][col].is_zero():
                        continue
                    acc = acc + tau[k] * A[k][col]
                row.append(acc)
            rows.append(tuple(row))
    # rows of I - B.A
    for i in range(r):
        row = []
        for col in range(r):
            acc = ring.one if col == i else ring.zero
            for k in range(s):
                if not (B[i][k].is_zero() or A[k][col].is_zero()):
                    acc = acc - B[i][k] * A[k][col]
            row.append(acc)
        rows.append(tuple(row))

    target = gb.generators
    cleaned = []
    seen = set()
    for row in rows:
        if all(p.is_zero() for p in row):
            continue
        row = _primitive_row(row)
        if row in seen:
            continue
        seen.add(row)
        cleaned.append(row)

    # graded pruning: keep only rows outside the module span of earlier ones
    cleaned.sort(key=lambda row: _tuple_shift(row, target))
    pruned = []
    for row in cleaned:
        if pruned and _module_contains(ring, target, pruned, row):
            continue
        pruned.append(row)

    module = SyzygyModule(
        ring,
        target,
        tuple(pruned),
        tuple(_tuple_shift(row, target) for row in pruned),
    )
    if not module.verify():
        raise AssertionError("syzygy construction produced an inexact relation")
    return module
