"""Graded cohomology presentations with exact normal forms.

Each graded piece of the ideal is kept as an integer lattice in Hermite
normal form, so ideal membership, ranks and torsion are all exact.  Degrees
in this module are polynomial degrees unless a name says "cohomological".
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import linalg
from .charmap import CharMatrix, normal_form
from .errors import InvalidParameter, InvalidRing, ResourceLimit
from .poly import Poly, monomial_index, monomials

DEFAULT_MAX_DEGREE = 12


class _DegreeTable:
    __slots__ = ("degree", "monomials", "lattice", "quotient_rank", "torsion", "_mod2")

    def __init__(self, degree, mons, lattice):
        self.degree = degree
        self.monomials = mons
        self.lattice = lattice
        self.quotient_rank = len(mons) - len(lattice)
        piv = lattice.pivots().values()
        if all(p == 1 for p in piv):
            self.torsion = []
        else:
            self.torsion = [f for f in linalg.smith_invariants(lattice.basis()) if f > 1]
        self._mod2 = None

    def mod2_basis(self):
        """Reduced row echelon basis (pivot -> bitmask) of the ideal mod 2."""
        if self._mod2 is None:
            rows = {}
            for vec in self.lattice.basis():
                bits = 0
                for i, x in enumerate(vec):
                    if x & 1:
                        bits |= 1 << i
                _insert_bits(rows, bits)
            self._mod2 = rows
        return self._mod2


def _insert_bits(rows, bits):
    while bits:
        low = (bits & -bits).bit_length() - 1
        if low in rows:
            bits ^= rows[low]
        else:
            for p in list(rows):
                if rows[p] >> low & 1:
                    rows[p] ^= bits
            rows[low] = bits
            return


@dataclass(frozen=True)
class HilbertFunction:
    ranks: tuple           # ranks[k] = rank of the cohomological degree 2k piece
    torsion: dict = field(default_factory=dict)   # cohomological degree -> invariant factors

    @property
    def has_torsion(self):
        return bool(self.torsion)


@dataclass(frozen=True)
class PairingReport:
    labels: tuple
    matrix: tuple
    determinant: int
    signature: int


class GradedRingPresentation:
    """Z[generators] / (relations), all generators in cohomological degree 2.

    ``fiber_index`` marks the fiber class of a projective-bundle ring;
    ``facet_classes`` holds the images of the face-ring generators for rings
    presented from a characteristic matrix.
    """

    def __init__(self, generators, relations, fiber_index=None, facet_classes=None,
                 max_degree=DEFAULT_MAX_DEGREE):
        self.generators = tuple(generators)
        g = len(self.generators)
        if len(set(self.generators)) != g:
            raise InvalidParameter("generator names must be distinct")
        rels = []
        for r in relations:
            if r.nvars != g:
                raise InvalidParameter("relation over the wrong number of generators")
            if not r.is_homogeneous():
                raise InvalidParameter(f"relation {r.format(self.generators)} is not homogeneous")
            if r:
                rels.append(r)
        self.relations = tuple(rels)
        if fiber_index is not None and not 0 <= fiber_index < g:
            raise InvalidParameter("fiber index out of range")
        self.fiber_index = fiber_index
        self.facet_classes = tuple(facet_classes) if facet_classes is not None else None
        self.max_degree = max_degree
        self._tables = {}
        self._hilbert = None
        self._fundamental = None

    @property
    def ngens(self):
        return len(self.generators)

    def __repr__(self):
        rels = ", ".join(r.format(self.generators) for r in self.relations)
        return f"Z[{', '.join(self.generators)}]/<{rels}>"

    # per-degree tables ------------------------------------------------------

    def table(self, k):
        if k in self._tables:
            return self._tables[k]
        if k > self.max_degree:
            raise ResourceLimit(f"degree {k} exceeds the precomputation cap {self.max_degree}")
        g = self.ngens
        mons = monomials(g, k)
        lat = linalg.Lattice(len(mons))
        if k > 0:
            prev = self.table(k - 1)
            index = monomial_index(g, k)
            for vec in prev.lattice.basis():
                for i in range(g):
                    row = [0] * len(mons)
                    for m, c in zip(prev.monomials, vec):
                        if c:
                            e = list(m)
                            e[i] += 1
                            row[index[tuple(e)]] = c
                    lat.add(row)
        for r in self.relations:
            if r.degree() == k:
                lat.add(r.to_vector(k))
        t = _DegreeTable(k, mons, lat)
        self._tables[k] = t
        return t

    def hilbert_function(self):
        if self._hilbert is None:
            ranks, torsion = [], {}
            k = 0
            while True:
                t = self.table(k)
                if t.torsion:
                    torsion[2 * k] = list(t.torsion)
                if t.quotient_rank == 0:
                    break
                ranks.append(t.quotient_rank)
                k += 1
            self._hilbert = HilbertFunction(tuple(ranks), torsion)
        return self._hilbert

    def top_degree(self):
        return len(self.hilbert_function().ranks) - 1

    def _vanishes_from(self):
        h = self.hilbert_function()
        return None if h.has_torsion else len(h.ranks)

    # reduction --------------------------------------------------------------

    def _check_poly(self, p):
        if not isinstance(p, Poly) or p.nvars != self.ngens:
            raise InvalidParameter("element is not a polynomial in this ring's generators")

    def normal_form(self, p):
        """Canonical representative; zero exactly when ``p`` lies in the ideal.

        Inhomogeneous input is reduced one graded piece at a time.
        """
        self._check_poly(p)
        zero_from = self._vanishes_from()
        out = Poly.zero(self.ngens)
        for k in sorted({sum(e) for e in p.terms}):
            if zero_from is not None and k >= zero_from:
                continue
            part = p.homogeneous_part(k)
            vec = self.table(k).lattice.reduce(part.to_vector(k))
            out = out + Poly.from_vector(self.ngens, k, vec)
        return out

    def contains(self, p):
        return not self.normal_form(p)

    def normal_form_mod2(self, p):
        """Representative of p in H*(-; Z/2), coefficients in {0, 1}."""
        self._check_poly(p)
        zero_from = self._vanishes_from()
        out = Poly.zero(self.ngens)
        for k in sorted({sum(e) for e in p.terms}):
            if zero_from is not None and k >= zero_from:
                continue
            t = self.table(k)
            vec = p.homogeneous_part(k).to_vector(k)
            bits = 0
            for i, x in enumerate(vec):
                if x & 1:
                    bits |= 1 << i
            for piv, row in sorted(t.mod2_basis().items()):
                if bits >> piv & 1:
                    bits ^= row
            out = out + Poly.from_vector(self.ngens, k, [(bits >> i) & 1 for i in range(len(vec))])
        return out

    # fundamental class ------------------------------------------------------

    def fundamental_functional(self):
        """Primitive integer functional on the top-degree monomials killing the ideal.

        Sign convention: the first monomial in descending graded-lex order on
        which the functional is a unit evaluates to +1 (falling back to the
        first nonzero value when no unit occurs).
        """
        if self._fundamental is None:
            h = self.hilbert_function()
            if h.has_torsion:
                raise InvalidRing(f"ring has torsion in degrees {sorted(h.torsion)}")
            top = len(h.ranks) - 1
            if h.ranks[top] != 1:
                raise InvalidRing(f"top degree piece has rank {h.ranks[top]}, expected 1")
            t = self.table(top)
            (f,) = linalg.rational_nullspace(t.lattice.basis(), len(t.monomials))
            pick = next((x for x in f if abs(x) == 1), None) or next(x for x in f if x)
            if pick < 0:
                f = [-x for x in f]
            self._fundamental = (top, tuple(f))
        return self._fundamental

    def integrate(self, p):
        """Evaluate the top-degree part of ``p`` on the fundamental class."""
        self._check_poly(p)
        top, f = self.fundamental_functional()
        vec = p.homogeneous_part(top).to_vector(top)
        return sum(a * b for a, b in zip(f, vec))

    # misc ---------------------------------------------------------------------

    def gen(self, i):
        return Poly.var(self.ngens, i)

    def parse_linear(self, coeffs):
        return Poly.linear(list(coeffs))

    def canonical_relations(self):
        return tuple(sorted((r.canonical() for r in self.relations),
                            key=lambda r: [(sorted(e), c) for e, c in r.terms_sorted()]))

    def with_fiber(self, index):
        return GradedRingPresentation(self.generators, self.relations, index,
                                      self.facet_classes, self.max_degree)

    def to_json(self):
        out = {"generators": list(self.generators),
               "relations": [r.to_json() for r in self.relations]}
        if self.fiber_index is not None:
            out["fiber_index"] = self.fiber_index
        if self.facet_classes is not None:
            out["facet_classes"] = [c.to_json() for c in self.facet_classes]
        return out

    @classmethod
    def from_json(cls, data):
        gens = [str(g) for g in data["generators"]]
        g = len(gens)
        rels = [Poly.from_json(g, r) for r in data.get("relations", [])]
        facets = data.get("facet_classes")
        facet_polys = [Poly.from_json(g, c) for c in facets] if facets is not None else None
        return cls(gens, rels, data.get("fiber_index"), facet_polys)


# operations ------------------------------------------------------------------

def stanley_reisner_ideal(p):
    """Minimal non-faces as sorted facet tuples (square-free monomials)."""
    p.require_valid()
    out = []
    d = p.num_facets
    for size in range(2, d + 1):
        for s in combinations(range(d), size):
            if p.is_face(s):
                continue
            if all(p.is_face(s[:i] + s[i + 1:]) for i in range(size)):
                out.append(s)
    return out


def sr_monomials(p):
    d = p.num_facets
    return [Poly(d, {tuple(int(i in s) for i in range(d)): 1}) for s in stanley_reisner_ideal(p)]


def linear_ideal(L):
    return [Poly.linear(list(row)) for row in L.entries]


def default_names(n, d):
    return [f"v{j + 1}" for j in range(n, d)]


def present_cohomology(p, L, names=None, max_degree=DEFAULT_MAX_DEGREE):
    """Z[v_1..v_d]/(I_P + J) with v_1..v_n eliminated through the linear forms."""
    if isinstance(L, CharMatrix):
        if L.polytope.vertices != p.vertices:
            raise InvalidParameter("matrix belongs to a different polytope")
    else:
        L = CharMatrix(p, L)
    L = normal_form(L)
    n, d = p.dim, p.num_facets
    names = list(names) if names is not None else default_names(n, d)
    if len(names) != d - n:
        raise InvalidParameter(f"need {d - n} generator names")
    g = d - n
    classes = []
    for i in range(d):
        if i < n:
            classes.append(Poly.linear([-L.entries[i][j] for j in range(n, d)]))
        else:
            classes.append(Poly.var(g, i - n))
    rels = []
    for s in stanley_reisner_ideal(p):
        r = Poly.const(g, 1)
        for i in s:
            r = r * classes[i]
        rels.append(r)
    return GradedRingPresentation(names, rels, facet_classes=classes, max_degree=max_degree)


def normal_form_element(ring, p):
    if not p.is_homogeneous():
        raise InvalidParameter("normal_form_element expects a homogeneous element")
    return ring.normal_form(p)


def hilbert_function(ring):
    return ring.hilbert_function()


def poincare_pairing(ring):
    h = ring.hilbert_function()
    if h.has_torsion:
        raise InvalidRing("pairing needs a torsion-free ring")
    if len(h.ranks) != 3 or h.ranks[2] != 1:
        raise InvalidRing(f"pairing needs top cohomological degree 4 with rank 1, got ranks {list(h.ranks)}")
    if h.ranks[1] != ring.ngens:
        raise InvalidRing("pairing needs the generators to be linearly independent in degree 2")
    g = ring.ngens
    m = tuple(tuple(ring.integrate(ring.gen(i) * ring.gen(j)) for j in range(g)) for i in range(g))
    return PairingReport(ring.generators, m, linalg.det(m), linalg.signature(m))


def signature_p1(ring):
    """(signature, p1 evaluated on the fundamental class = 3 * signature)."""
    rep = poincare_pairing(ring)
    return rep.signature, 3 * rep.signature


def _facet_product(ring, square):
    if ring.facet_classes is None:
        raise InvalidParameter("ring carries no facet classes")
    g = ring.ngens
    total = Poly.const(g, 1)
    top = ring.top_degree()
    for v in ring.facet_classes:
        total = total * (1 + (v * v if square else v))
        # drop pieces above the top degree early; they vanish anyway
        total = Poly(g, {e: c for e, c in total.terms.items() if sum(e) <= top})
    return total


def graded_list(poly, top):
    return [poly.homogeneous_part(k) for k in range(top + 1)]


def total_sw_class(p, L, names=None):
    """Mod 2 reduction of prod(1 + v_i), listed by polynomial degree."""
    ring = p if isinstance(p, GradedRingPresentation) else present_cohomology(p, L, names)
    w = ring.normal_form_mod2(_facet_product(ring, square=False))
    return graded_list(w, ring.top_degree())


def total_pontryagin_class(p, L=None, names=None):
    """prod(1 + v_i^2) reduced in the ring, listed by polynomial degree (p_k sits at 2k)."""
    ring = p if isinstance(p, GradedRingPresentation) else present_cohomology(p, L, names)
    pc = ring.normal_form(_facet_product(ring, square=True))
    return graded_list(pc, ring.top_degree())


def ring_from_relations(generators, relations, **kw):
    """Convenience constructor: relations given as Poly or as {exps: coeff} dicts."""
    g = len(generators)
    rels = [r if isinstance(r, Poly) else Poly(g, r) for r in relations]
    return GradedRingPresentation(generators, rels, **kw)
