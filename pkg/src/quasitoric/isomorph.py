"""Graded ring isomorphisms between degree-2-generated presentations.

A ring map is stored as an integer matrix P whose row i is the image of
source generator i in the target generators.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product as iproduct
from math import gcd

from . import linalg
from .bundles import BundleSpec, projectivization_ring
from .cohomring import GradedRingPresentation, poincare_pairing
from .errors import InvalidParameter, PreconditionError
from .poly import Poly

DEFAULT_BOUND = 3


@dataclass(frozen=True)
class RingMap:
    source: GradedRingPresentation
    target: GradedRingPresentation
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.source.ngens or any(len(r) != self.target.ngens for r in m):
            raise InvalidParameter(
                f"map matrix must be {self.source.ngens} x {self.target.ngens}")

    def image(self, p):
        return p.apply_matrix(self.matrix)

    def compose(self, other):
        """self followed by other."""
        return RingMap(self.source, other.target, linalg.matmul(self.matrix, other.matrix))

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix]}


@dataclass(frozen=True)
class IsoResult:
    ok: bool
    kind: str = None          # None, "NotUnimodular", "RelationNotMapped", "HilbertMismatch"
    message: str = ""
    det: int = None
    images: tuple = ()        # reduced images of the source relations

    def __bool__(self):
        return self.ok

    def to_json(self, target_names=None):
        return {"ok": self.ok, "failure": self.kind, "message": self.message, "det": self.det,
                "reduced_relation_images": [p.to_json() for p in self.images]}


def verify_iso(m):
    src, tgt = m.source, m.target
    if src.ngens != tgt.ngens:
        return IsoResult(False, "NotUnimodular",
                         f"generator counts differ ({src.ngens} vs {tgt.ngens})")
    d = linalg.det(m.matrix)
    if abs(d) != 1:
        return IsoResult(False, "NotUnimodular", f"determinant {d}", d)
    images = []
    for r in src.relations:
        red = tgt.normal_form(m.image(r))
        images.append(red)
        if red:
            return IsoResult(False, "RelationNotMapped",
                             f"relation {r.format(src.generators)} maps to "
                             f"{red.format(tgt.generators)} modulo the target ideal",
                             d, tuple(images))
    h1, h2 = src.hilbert_function(), tgt.hilbert_function()
    if h1 != h2:
        return IsoResult(False, "HilbertMismatch",
                         f"Hilbert functions {list(h1.ranks)} vs {list(h2.ranks)}", d, tuple(images))
    return IsoResult(True, None, "isomorphism", d, tuple(images))


# search ------------------------------------------------------------------------

def _support(p):
    s = set()
    for e in p.terms:
        s.update(i for i, k in enumerate(e) if k)
    return frozenset(s)


def _assignment_order(g, supports):
    """Generator order that lets relations be checked as early as possible."""
    def cost(order):
        pos = {v: k for k, v in enumerate(order)}
        return sum(max((pos[i] for i in s), default=0) for s in supports)
    if g <= 7:
        return list(min(permutations(range(g)), key=lambda o: (cost(o), o)))
    return list(range(g))


def _row_candidates(g, bound):
    out = []
    for row in iproduct(range(-bound, bound + 1), repeat=g):
        h = 0
        for x in row:
            h = gcd(h, x)
        if h == 1:
            out.append(row)
    return out


def _first_positive(row):
    return next(x for x in row if x) > 0


class _Searcher:
    def __init__(self, src, tgt, bound):
        self.src, self.tgt = src, tgt
        self.g = src.ngens
        supports = [_support(r) for r in src.relations]
        self.order = _assignment_order(self.g, supports)
        pos = {v: k for k, v in enumerate(self.order)}
        # relations to check once step k is assigned
        self.checks = [[] for _ in range(self.g)]
        for r, s in zip(src.relations, supports):
            step = max((pos[i] for i in s), default=0)
            self.checks[step].append(r)
        self.cands = _row_candidates(self.g, bound)

    def level_candidates(self, k):
        if self.order[k] == 0:
            return [c for c in self.cands if _first_positive(c)]
        return self.cands

    def _ok(self, rows, k):
        chosen = [rows[self.order[i]] for i in range(k + 1)]
        if linalg.maximal_minor_gcd(chosen) != 1:
            return False
        zero = Poly.zero(self.tgt.ngens)
        images = [Poly.linear(list(r)) if r is not None else zero for r in rows]
        for rel in self.checks[k]:
            if not self.tgt.contains(rel.substitute(images)):
                return False
        return True

    def run(self, first=None):
        found = []
        rows = [None] * self.g

        def dfs(k):
            if k == self.g:
                found.append(tuple(rows))
                return
            gen = self.order[k]
            cands = first if (k == 0 and first is not None) else self.level_candidates(k)
            for c in cands:
                rows[gen] = c
                if self._ok(rows, k):
                    dfs(k + 1)
                rows[gen] = None

        dfs(0)
        return found


def _search_chunk(args):
    src, tgt, bound, chunk = args
    return _Searcher(src, tgt, bound).run(chunk)


def search_iso(r1, r2, bound=DEFAULT_BOUND, jobs=1):
    """Every isomorphism with entries in [-bound, bound], listed once per global sign."""
    if bound < 1:
        raise InvalidParameter(f"bound must be >= 1, got {bound}")
    if r1.ngens != r2.ngens:
        return []
    if r1.hilbert_function() != r2.hilbert_function():
        return []
    s = _Searcher(r1, r2, bound)
    if jobs > 1:
        # warm the per-degree tables once so workers inherit them
        for k in range(len(r2.hilbert_function().ranks) + 1):
            r2.table(k)
        top = s.level_candidates(0)
        chunks = [top[i::jobs] for i in range(jobs)]
        found = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_search_chunk, [(r1, r2, bound, c) for c in chunks]):
                found.extend(part)
    else:
        found = s.run()
    out = []
    for mat in sorted(found):
        m = RingMap(r1, r2, mat)
        if not verify_iso(m):
            raise AssertionError(f"search produced a map that fails verification: {mat}")
        out.append(m)
    return out


# base preservation ---------------------------------------------------------------

@dataclass(frozen=True)
class BasePreservation:
    ok: bool
    fiber_coefficient: int
    violations: tuple = ()     # (source generator, target generator, coefficient)

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"preserved": self.ok, "fiber_coefficient": self.fiber_coefficient,
                "violations": [{"source": s, "target": t, "coefficient": c}
                               for s, t, c in self.violations]}


def base_preservation(m, fiber_source=None, fiber_target=None):
    fs = m.source.fiber_index if fiber_source is None else fiber_source
    ft = m.target.fiber_index if fiber_target is None else fiber_target
    if fs is None or ft is None:
        raise InvalidParameter("both rings need a fiber generator")
    bad = []
    for i, row in enumerate(m.matrix):
        if i != fs and row[ft]:
            bad.append((m.source.generators[i], m.target.generators[ft], row[ft]))
    fc = m.matrix[fs][ft]
    return BasePreservation(not bad and abs(fc) == 1, fc, tuple(bad))


# fiberwise automorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class AutomorphismCandidate:
    epsilon: int
    omega: Poly
    certificate: dict = field(default_factory=dict, compare=False)

    def to_json(self, names=None):
        return {"epsilon": self.epsilon, "omega": self.omega.to_json(),
                "omega_text": self.omega.format(names),
                "certificate": {k: (v.to_json() if isinstance(v, Poly) else v)
                                for k, v in self.certificate.items()}}


def chern_identity(spec, omega):
    """Both sides of (1 - w) prod(1 - w - a_i) = prod(1 + a_i), reduced in the base."""
    g = spec.base.ngens
    one = Poly.const(g, 1)
    lhs = one - omega
    rhs = one
    for a in spec.alphas():
        lhs = lhs * (one - omega - a)
        rhs = rhs * (one + a)
    return spec.base.normal_form(lhs), spec.base.normal_form(rhs)


def _fiber_map(spec, epsilon, omega):
    ring = projectivization_ring(spec)
    g = spec.base.ngens
    matrix = [[int(i == j) for j in range(g + 1)] for i in range(g)]
    matrix.append([omega.coeff(tuple(int(i == j) for i in range(g))) for j in range(g)] + [epsilon])
    return RingMap(ring, ring, matrix)


def fiber_automorphisms(spec):
    """Candidates x0 -> eps * x0 + omega fixing the base ring pointwise."""
    g = spec.base.ngens
    ident = _fiber_map(spec, 1, Poly.zero(g))
    out = [AutomorphismCandidate(1, Poly.zero(g), {"identity": True,
                                                   "ring_map_verified": bool(verify_iso(ident))})]
    n = spec.n
    total = [sum(col) for col in zip(*spec.twists)]
    coeffs = [Fraction(-2 * s, n + 1) for s in total]
    if all(c.denominator == 1 for c in coeffs):
        omega = Poly.linear([int(c) for c in coeffs])
        lhs, rhs = chern_identity(spec, omega)
        if lhs == rhs:
            ok = bool(verify_iso(_fiber_map(spec, -1, omega)))
            out.append(AutomorphismCandidate(-1, omega, {"lhs": lhs, "rhs": rhs,
                                                         "ring_map_verified": ok}))
    return out


# characteristic classes -------------------------------------------------------------

def top_form_sign(m):
    """+1 or -1 when the map carries the source fundamental functional to ±target's, else None."""
    src, tgt = m.source, m.target
    top, f1 = src.fundamental_functional()
    top2, _ = tgt.fundamental_functional()
    if top != top2:
        return None
    from .poly import monomials
    sign = None
    for mon, v in zip(monomials(src.ngens, top), f1):
        w = tgt.integrate(m.image(Poly(src.ngens, {mon: 1})))
        if v == 0 and w == 0:
            continue
        if w == v:
            s = 1
        elif w == -v:
            s = -1
        else:
            return None
        if sign is None:
            sign = s
        elif s != sign:
            return None
    return sign


def pairing_congruence(m, g1=None, g2=None):
    """Sign s with P G2 P^T = s G1 (P rows are generator images), else None."""
    g1 = g1 or poincare_pairing(m.source).matrix
    g2 = g2 or poincare_pairing(m.target).matrix
    p = [list(r) for r in m.matrix]
    lhs = linalg.matmul(linalg.matmul(p, g2), linalg.transpose(p))
    g1 = [list(r) for r in g1]
    if lhs == g1:
        return 1
    if lhs == [[-x for x in r] for r in g1]:
        return -1
    return None


def ring_classes(ring):
    """Class data used by characteristic_class_preservation."""
    from .cohomring import total_pontryagin_class, total_sw_class
    out = {}
    if ring.facet_classes is not None:
        out["w"] = total_sw_class(ring, None)
        out["p"] = total_pontryagin_class(ring)
    h = ring.hilbert_function()
    if len(h.ranks) == 3 and not h.has_torsion:
        out["pairing"] = poincare_pairing(ring).matrix
    return out


def characteristic_class_preservation(m, classes1, classes2):
    if not verify_iso(m):
        raise PreconditionError("map is not a verified isomorphism")
    keys = [k for k in ("w", "p", "pairing") if k in classes1 and k in classes2]
    if not keys:
        raise InvalidParameter("no class data available on both sides")
    tgt = m.target
    report = {}
    if "w" in keys:
        img = tgt.normal_form_mod2(m.image(sum(classes1["w"], Poly.zero(m.source.ngens))))
        want = tgt.normal_form_mod2(sum(classes2["w"], Poly.zero(tgt.ngens)))
        report["w"] = img == want
    if "p" in keys:
        img = tgt.normal_form(m.image(sum(classes1["p"], Poly.zero(m.source.ngens))))
        want = tgt.normal_form(sum(classes2["p"], Poly.zero(tgt.ngens)))
        report["p"] = img == want
    if "pairing" in keys:
        s = pairing_congruence(m, classes1["pairing"], classes2["pairing"])
        report["pairing"] = s is not None
        report["pairing_sign"] = s
    try:
        report["top_form_sign"] = top_form_sign(m)
    except Exception:
        report["top_form_sign"] = None
    return report


def map_from_json(data):
    return [[int(x) for x in r] for r in data["matrix"]]


def bundle_ring_map(s1, s2, matrix):
    return RingMap(projectivization_ring(s1), projectivization_ring(s2), matrix)


__all__ = ["RingMap", "IsoResult", "verify_iso", "search_iso", "base_preservation",
           "BasePreservation", "AutomorphismCandidate", "fiber_automorphisms",
           "characteristic_class_preservation", "pairing_congruence", "top_form_sign",
           "ring_classes", "chern_identity", "map_from_json", "BundleSpec"]
