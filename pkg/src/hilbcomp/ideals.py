"""Ideal-level algebra: sums, products, intersections, quotients,
saturations, equality, and random coordinate changes.

An Ideal is a generator list in a fixed ring with a cached reduced Groebner
basis.  Equality means equality of grevlex reduced bases, which is the
canonical representative throughout the package.  Intersections go through
one auxiliary variable u and block elimination; quotients reduce to
intersections with principal ideals; saturation iterates the quotient until
the ascending chain stabilizes.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .errors import HomogeneityError, RingMismatchError
from .groebner import (
    GroebnerBasis,
    buchberger,
    eliminate_generators,
    exact_divide,
)
from .rings import GREVLEX, PolyRing, parse


class Ideal:
    """Finitely generated ideal of a polynomial ring."""

    __slots__ = ("ring", "generators", "_gb_cache", "_hilbert_cache")

    def __init__(self, ring, generators):
        gens = []
        seen = set()
        for g in generators:
            if isinstance(g, str):
                g = parse(g, ring)
            if g.ring != ring:
                raise RingMismatchError("generator not in the ideal's ring")
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_gb_cache", {})
        object.__setattr__(self, "_hilbert_cache", None)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Ideal is immutable")

    def _set_hilbert(self, data):
        object.__setattr__(self, "_hilbert_cache", data)

    def is_zero(self):
        return not self.generators

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def is_x_homogeneous(self):
        return all(g.is_x_homogeneous() for g in self.generators)

    def groebner_basis(self, order=None, transform=False):
        if order is None:
            order = GREVLEX
        cached = self._gb_cache.get((order, True))
        if cached is None and not transform:
            cached = self._gb_cache.get((order, False))
        if cached is not None:
            return cached
        if not self.generators:
            gb = GroebnerBasis(self.ring.with_order(order), (), (), () if transform else None)
        else:
            gb = buchberger(self.generators, order, transform=transform)
        self._gb_cache[(order, transform)] = gb
        return gb

    def canonical_generators(self):
        """Elements of the reduced grevlex basis, in this ideal's ring."""
        return tuple(g.convert(self.ring) for g in self.groebner_basis().elements)

    def canonical(self):
        out = Ideal(self.ring, self.canonical_generators())
        out._gb_cache.update(self._gb_cache)
        return out

    def contains(self, f):
        if self.is_zero():
            return f.is_zero()
        return self.groebner_basis().contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if not self.ring.compatible(other.ring):
            raise RingMismatchError("comparing ideals of different rings")
        mine = tuple(g.terms for g in self.groebner_basis().elements)
        theirs = tuple(g.terms for g in other.groebner_basis().elements)
        return mine == theirs

    __hash__ = None

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inside})"


def irrelevant_ideal(ring):
    """(x_0, ..., x_n) in the given ring."""
    return Ideal(ring, [ring.x(i) for i in range(ring.num_vars)])


def _require_same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


def _with_seeded_gb(ring, reduced_gens):
    """Ideal whose generators are known to be its reduced grevlex basis."""
    out = Ideal(ring, reduced_gens)
    gb_ring = ring.with_order(GREVLEX)
    elements = tuple(g.convert(gb_ring) for g in out.generators)
    out._gb_cache[(GREVLEX, False)] = GroebnerBasis(gb_ring, elements, elements, None)
    return out


def intersect(I, J):
    """the intersection of I and J via u*I + (1-u)*J and elimination of the auxiliary u."""
    _require_same_ring(I, J)
    if I.is_zero():
        return I
    if J.is_zero():
        return J
    ring = I.ring
    ext = ring.with_aux(ring.num_aux + 1)
    u_idx = ext.aux_index(ext.num_aux - 1)
    u = ext.variable(u_idx)
    one_minus_u = ext.one - u
    gens = [u * f.convert(ext) for f in I.generators]
    gens += [one_minus_u * g.convert(ext) for g in J.generators]
    elim = eliminate_generators(gens, [u_idx])
    # the u-free part of the reduced block basis is itself the reduced
    # grevlex basis of the intersection: the block order restricted to
    # u-free monomials is grevlex, and autoreduction is inherited
    return _with_seeded_gb(ring, [p.convert(ring) for p in elim])


def intersect_many(ideals):
    result = None
    for J in ideals:
        result = J if result is None else intersect(result, J)
    return result


def quotient(I, J):
    """(I : J) = {f : f*J inside I}, via (I meet (g))/g per generator g of J."""
    _require_same_ring(I, J)
    if J.is_zero():
        raise ValueError("quotient by the zero ideal")
    if I.is_zero():
        return I
    parts = []
    for g in J.generators:
        K = intersect(I, Ideal(I.ring, [g]))
        parts.append(Ideal(I.ring, [exact_divide(p, g) for p in K.generators]))
    return intersect_many(parts).canonical()


def saturate(I, J):
    """(I : J^infinity), iterating the quotient until the chain stabilizes."""
    _require_same_ring(I, J)
    current = I.canonical()
    while True:
        step = quotient(current, J)
        if step == current:
            return current
        current = step


def ideal_sum(I, J):
    _require_same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I, J):
    _require_same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def eliminate(I, front_vars):
    """Generators of I meet k[variables outside front_vars], as an ideal."""
    front = tuple(sorted(set(front_vars)))
    if not front or I.is_zero():
        return I
    gens = eliminate_generators(list(I.generators), front)
    return Ideal(I.ring, gens).canonical()


def graded_piece_quotient(I, J, d):
    """Brute-force {f of degree d : f.J inside I} as a monomial-coefficient
    nullspace; an independent oracle for quotient computations."""
    from .rings import monomials_of_degree

    ring = I.ring
    gb = I.groebner_basis()
    monos = monomials_of_degree(ring.width, d)
    rows = []
    for g in J.generators:
        cols = []
        targets = {}
        for m in monos:
            prod = gb.reduce(g * ring.from_dict({m: Fraction(1)}))
            col = {}
            for mono, c in prod.terms:
                targets.setdefault(mono, len(targets))
                col[targets[mono]] = c
            cols.append(col)
        height = len(targets)
        for rix in range(height):
            rows.append([cols[cix].get(rix, Fraction(0)) for cix in range(len(monos))])
    if not rows:
        return [tuple(int(i == j) for j in range(len(monos))) for i in range(len(monos))], monos
    return linalg.nullspace(rows, len(monos)), monos


def random_invertible_matrix(ring, seed, attempts=10):
    """Small-integer invertible substitution matrix on the x variables."""
    rng = random.Random(f"linear-change:{seed}")
    nv = ring.num_vars
    for _ in range(attempts):
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(nv)] for _ in range(nv)]
        if linalg.det(m) != 0:
            return m
    raise RuntimeError("failed to sample an invertible matrix")


def random_linear_change(I, seed, matrix=None):
    """Image of I under an invertible linear substitution of the x variables.

    Deterministic for a fixed seed; an explicit matrix overrides sampling.
    """
    if not I.is_x_homogeneous():
        raise HomogeneityError("coordinate changes require homogeneous ideals")
    if matrix is None:
        matrix = random_invertible_matrix(I.ring, seed)
    elif linalg.det(matrix) == 0:
        raise ValueError("substitution matrix is singular")
    return Ideal(I.ring, [g.compose_linear(matrix) for g in I.generators])


# ---------------------------------------------------------------------------
# ideal files: header "ring n=<n> param=<0|1>", one polynomial per line
# ---------------------------------------------------------------------------

def dumps_ideal(I):
    ring = I.ring
    header = f"ring n={ring.num_vars - 1} param={1 if ring.has_param else 0}"
    return "\n".join([header] + [str(g) for g in I.generators]) + "\n"


def loads_ideal(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty ideal file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "ring":
        raise ValueError(f"bad ideal file header: {lines[0]!r}")
    try:
        n = int(header[1].removeprefix("n="))
        param = int(header[2].removeprefix("param="))
    except ValueError:
        raise ValueError(f"bad ideal file header: {lines[0]!r}") from None
    if header[1][:2] != "n=" or header[2][:6] != "param=" or param not in (0, 1):
        raise ValueError(f"bad ideal file header: {lines[0]!r}")
    ring = PolyRing(n + 1, has_param=bool(param))
    return Ideal(ring, [parse(ln, ring) for ln in lines[1:]])


def load_ideal(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads_ideal(fh.read())


def save_ideal(I, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_ideal(I))
