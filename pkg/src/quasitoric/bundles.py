"""Projectivized Whitney sums C + L_1 + ... + L_n over a quasitoric base.

Row i of a twist matrix holds c_1(L_i) in the base's degree-2 generators.
"""

from dataclasses import dataclass

from .cohomring import GradedRingPresentation
from .errors import InvalidParameter, PreconditionError
from .poly import Poly


def _freeze(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


@dataclass(frozen=True)
class BundleSpec:
    base: GradedRingPresentation
    twists: tuple

    def __post_init__(self):
        t = _freeze(self.twists)
        object.__setattr__(self, "twists", t)
        if not t:
            raise InvalidParameter("a bundle needs at least one nontrivial summand (n >= 1)")
        if any(len(r) != self.base.ngens for r in t):
            raise InvalidParameter(f"twist rows must have {self.base.ngens} entries")

    @property
    def n(self):
        return len(self.twists)

    @classmethod
    def from_summands(cls, base, rows):
        """All n+1 summands given; translate so the first one is trivial."""
        rows = _freeze(rows)
        if len(rows) < 2:
            raise InvalidParameter("need at least two summands")
        first = rows[0]
        return cls(base, [[a - b for a, b in zip(r, first)] for r in rows[1:]])

    def alphas(self):
        return [Poly.linear(list(r)) for r in self.twists]

    def to_json(self):
        return {"base_ring": self.base.to_json(), "twists": [list(r) for r in self.twists]}

    @classmethod
    def from_json(cls, data):
        base = data["base_ring"]
        if not isinstance(base, GradedRingPresentation):
            base = GradedRingPresentation.from_json(base)
        return cls(base, data["twists"])


def total_chern(spec):
    """[c_0, ..., c_n], each reduced in the base ring."""
    g = spec.base.ngens
    c = Poly.const(g, 1)
    for a in spec.alphas():
        c = c * (1 + a)
    c = spec.base.normal_form(c)
    return [c.homogeneous_part(k) for k in range(spec.n + 1)]


def _lift(p, nvars):
    """Embed a polynomial into a ring with extra trailing variables."""
    pad = (0,) * (nvars - p.nvars)
    return Poly(nvars, {e + pad: c for e, c in p.terms.items()})


def fiber_name(base):
    if "x0" not in base.generators:
        return "x0"
    k = 0
    while f"x0_{k}" in base.generators:
        k += 1
    return f"x0_{k}"


def bundle_relation(spec):
    """x0 * prod(x0 + alpha_i) in the base generators followed by x0."""
    g = spec.base.ngens + 1
    x0 = Poly.var(g, g - 1)
    rel = x0
    for a in spec.alphas():
        rel = rel * (x0 + _lift(a, g))
    return rel


def projectivization_ring(spec, name=None):
    """Base ring with the fiber class appended as the last generator."""
    g = spec.base.ngens + 1
    rels = [_lift(r, g) for r in spec.base.relations] + [bundle_relation(spec)]
    gens = list(spec.base.generators) + [name or fiber_name(spec.base)]
    return GradedRingPresentation(gens, rels, fiber_index=g - 1,
                                  max_degree=max(spec.base.max_degree, spec.n + 2))


def relation_coefficients(spec):
    """[c_0, ..., c_n] read off the expanded relation: coefficient of x0^{n+1-k}."""
    rel = bundle_relation(spec)
    g = spec.base.ngens
    out = [Poly.zero(g) for _ in range(spec.n + 1)]
    for e, c in rel.terms.items():
        k = spec.n + 1 - e[-1]
        out[k] = out[k] + Poly(g, {e[:-1]: c})
    return [spec.base.normal_form(p) for p in out]


def normalize_twists(twists):
    """Least representative of {0, a_1, ..., a_n} under translation, negation and reordering."""
    rows = _freeze(twists)
    if not rows:
        return ()
    m = len(rows[0])
    full = [(0,) * m] + list(rows)
    best = None
    for r in full:
        shifted = [tuple(a - b for a, b in zip(x, r)) for x in full]
        for sign in (1, -1):
            cand = sorted(tuple(sign * a for a in x) for x in shifted)
            if best is None or cand < best:
                best = cand
    best.remove((0,) * m)
    return tuple(best)


def same_base(r1, r2):
    return r1.generators == r2.generators and r1.canonical_relations() == r2.canonical_relations()


def chern_isomorphic(s1, s2):
    if not same_base(s1.base, s2.base):
        raise InvalidParameter("specs live over different base rings")
    if s1.n != s2.n:
        raise InvalidParameter(f"ranks differ ({s1.n + 1} vs {s2.n + 1})")
    top = s1.base.top_degree()
    if s1.n + 1 < top:
        raise PreconditionError(
            f"rank {s1.n + 1} is below the base complex dimension {top}; Chern classes do not classify")
    return total_chern(s1) == total_chern(s2)


def translation_companion(spec, r):
    """Tensor with the inverse of L_r (1 <= r <= n).

    Returns the new spec and the generator matrix (rows = images of source
    generators) of the ring map x0 -> x0 - alpha_r, identity on the base.
    """
    if not 1 <= r <= spec.n:
        raise InvalidParameter(f"summand index {r} outside 1..{spec.n}")
    shift = spec.twists[r - 1]
    rows = []
    for i, t in enumerate(spec.twists, start=1):
        if i == r:
            rows.append([-a for a in shift])
        else:
            rows.append([a - b for a, b in zip(t, shift)])
    g = spec.base.ngens
    matrix = [[int(i == j) for j in range(g + 1)] for i in range(g)]
    matrix.append([-a for a in shift] + [1])
    return BundleSpec(spec.base, rows), matrix


def dual_companion(spec):
    """Dual bundle: twists negated, ring map x0 -> -x0."""
    g = spec.base.ngens
    matrix = [[int(i == j) for j in range(g + 1)] for i in range(g)]
    matrix.append([0] * g + [-1])
    return BundleSpec(spec.base, [[-a for a in t] for t in spec.twists]), matrix
