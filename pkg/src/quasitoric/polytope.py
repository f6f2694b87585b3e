"""Simple polytopes stored through their vertex/facet incidences.

A vertex of an n-dimensional simple polytope is recorded as the set of the n
facets meeting there.  Facets are numbered 0..d-1.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidParameter


@dataclass(frozen=True)
class SimplePolytope:
    dim: int
    num_facets: int
    vertices: tuple
    label: str = ""
    # facet indices contributed by each factor of a product, in factor order
    factor_blocks: tuple = field(default=(), compare=False)

    def __post_init__(self):
        verts = tuple(sorted({tuple(sorted(v)) for v in self.vertices}))
        object.__setattr__(self, "vertices", verts)

    def validate(self):
        """List of violated invariants; empty when the polytope is well formed."""
        problems = []
        n, d = self.dim, self.num_facets
        if n < 1:
            problems.append(f"dimension {n} < 1")
        if d < n + 1:
            problems.append(f"only {d} facets for dimension {n} (need at least {n + 1})")
        for v in self.vertices:
            if len(v) != n:
                problems.append(f"vertex {list(v)} has {len(v)} facets, expected {n}")
            if any(not 0 <= i < d for i in v):
                problems.append(f"vertex {list(v)} uses a facet index outside 0..{d - 1}")
        used = {i for v in self.vertices for i in v}
        for i in range(d):
            if i not in used:
                problems.append(f"facet {i} meets no vertex")
        if n >= 1:
            counts = {}
            for v in self.vertices:
                if len(v) != n:
                    continue
                for ridge in combinations(v, n - 1):
                    counts[ridge] = counts.get(ridge, 0) + 1
            for ridge, c in sorted(counts.items()):
                if c != 2:
                    problems.append(f"ridge {list(ridge)} lies in {c} vertices, expected 2")
        return problems

    def is_valid(self):
        return not self.validate()

    def require_valid(self):
        problems = self.validate()
        if problems:
            raise InvalidParameter("invalid polytope: " + "; ".join(problems))

    def is_face(self, facets):
        """True iff the given facets have a common vertex (or the set is empty)."""
        s = set(facets)
        return any(s.issubset(v) for v in self.vertices) if s else True

    def relabel(self, order):
        """Polytope whose facet k is facet ``order[k]`` of this one."""
        if sorted(order) != list(range(self.num_facets)):
            raise InvalidParameter(f"{order} is not a permutation of the facets")
        new_index = {old: new for new, old in enumerate(order)}
        verts = [[new_index[i] for i in v] for v in self.vertices]
        blocks = tuple(tuple(new_index[i] for i in b) for b in self.factor_blocks)
        return SimplePolytope(self.dim, self.num_facets, tuple(map(tuple, verts)),
                              self.label, blocks)


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    maximal_faces: tuple

    def __post_init__(self):
        faces = {tuple(sorted(f)) for f in self.maximal_faces if f}
        maximal = [f for f in faces if not any(f != g and set(f) < set(g) for g in faces)]
        object.__setattr__(self, "maximal_faces", tuple(sorted(maximal)))

    def is_empty(self):
        return not self.maximal_faces

    def faces(self):
        """Every nonempty face, grouped by dimension: {k: sorted list of (k+1)-tuples}."""
        seen = set()
        for f in self.maximal_faces:
            for k in range(1, len(f) + 1):
                seen.update(combinations(f, k))
        out = {}
        for f in seen:
            out.setdefault(len(f) - 1, []).append(f)
        return {k: sorted(v) for k, v in sorted(out.items())}


def build_simplex(n):
    if n < 1:
        raise InvalidParameter(f"simplex dimension must be >= 1, got {n}")
    verts = tuple(combinations(range(n + 1), n))
    return SimplePolytope(n, n + 1, verts, label=f"simplex({n})")


def build_polygon(k):
    """k-gon with facet i adjacent to facets i-1 and i+1 (mod k)."""
    if k < 3:
        raise InvalidParameter(f"a polygon needs at least 3 edges, got {k}")
    verts = tuple((i, (i + 1) % k) for i in range(k))
    return SimplePolytope(2, k, verts, label=f"polygon({k})")


def product(p1, p2):
    """Cartesian product; facets of ``p1`` come first, then those of ``p2`` shifted by d1."""
    d1 = p1.num_facets
    verts = tuple(v1 + tuple(i + d1 for i in v2) for v1 in p1.vertices for v2 in p2.vertices)
    blocks1 = p1.factor_blocks or (tuple(range(d1)),)
    blocks2 = p2.factor_blocks or (tuple(range(p2.num_facets)),)
    blocks = tuple(blocks1) + tuple(tuple(i + d1 for i in b) for b in blocks2)
    label = f"{p1.label or 'P'} x {p2.label or 'Q'}"
    return SimplePolytope(p1.dim + p2.dim, d1 + p2.num_facets, verts, label, blocks)


def nerve_complex(p):
    """Simplicial complex on the facets whose maximal faces are the vertices of ``p``."""
    return SimplicialComplex(p.num_facets, p.vertices)


def full_subcomplex(k, sigma):
    sigma = set(sigma)
    bad = [i for i in sigma if not 0 <= i < k.vertex_count]
    if bad:
        raise InvalidParameter(f"vertex indices {sorted(bad)} outside 0..{k.vertex_count - 1}")
    faces = [tuple(i for i in f if i in sigma) for f in k.maximal_faces]
    return SimplicialComplex(k.vertex_count, tuple(f for f in faces if f))


def validate(p):
    return p.validate()


# JSON ------------------------------------------------------------------------

def polytope_from_json(data):
    kind = data.get("kind")
    if kind == "simplex":
        return build_simplex(int(data["n"]))
    if kind == "polygon":
        return build_polygon(int(data["edges"]))
    if kind == "product":
        factors = data.get("factors") or []
        if len(factors) < 2:
            raise InvalidParameter("a product needs at least two factors")
        out = polytope_from_json(factors[0])
        for f in factors[1:]:
            out = product(out, polytope_from_json(f))
        if "order" in data:
            out = out.relabel([int(i) for i in data["order"]])
        return out
    if kind == "explicit":
        p = SimplePolytope(int(data["dim"]), int(data["num_facets"]),
                           tuple(tuple(int(i) for i in v) for v in data["vertices"]),
                           label=data.get("label", ""))
        return p
    raise InvalidParameter(f"unknown polytope kind {kind!r}")


def polytope_to_json(p):
    return {"kind": "explicit", "dim": p.dim, "num_facets": p.num_facets,
            "vertices": [list(v) for v in p.vertices]}
