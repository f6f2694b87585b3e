"""Bigraded Betti numbers of simple polytopes.

Tables are keyed by (i, j) and hold beta^{-i,2j}.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import InvalidParameter, ResourceLimit
from .homology import reduced_betti_ranks
from .polytope import full_subcomplex, nerve_complex

DEFAULT_FACET_CAP = 16


@dataclass(frozen=True)
class BettiTable:
    entries: dict = field(default_factory=dict)
    dim: int = None
    num_facets: int = None

    def __post_init__(self):
        clean = {(int(i), int(j)): int(v) for (i, j), v in self.entries.items() if v}
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.entries, self.dim, self.num_facets) == (other.entries, other.dim, other.num_facets)

    def __hash__(self):
        return hash((tuple(self.entries.items()), self.dim, self.num_facets))

    def has_metadata(self):
        return self.dim is not None and self.num_facets is not None

    def with_entry(self, key, value):
        entries = dict(self.entries)
        entries[key] = value
        return BettiTable(entries, self.dim, self.num_facets)

    def row(self, i):
        """{j: value} for the homological index i."""
        return {j: v for (ii, j), v in self.entries.items() if ii == i}

    def format(self):
        if not self.entries:
            return "(empty table)"
        imax = max(i for i, _ in self.entries)
        jmax = max(j for _, j in self.entries)
        width = max(3, max(len(str(v)) for v in self.entries.values()) + 1)
        head = "i\\j " + "".join(f"{j:>{width}}" for j in range(jmax + 1))
        lines = [head]
        for i in range(imax + 1):
            cells = "".join(f"{(self[i, j] or '.'):>{width}}" for j in range(jmax + 1))
            lines.append(f"{i:>3} " + cells)
        return "\n".join(lines)

    def to_json(self):
        return {"dim": self.dim, "num_facets": self.num_facets,
                "entries": [{"i": i, "j": j, "value": v} for (i, j), v in self.entries.items()]}

    @classmethod
    def from_json(cls, data):
        entries = {}
        for e in data.get("entries", []):
            key = (int(e["i"]), int(e["j"]))
            entries[key] = entries.get(key, 0) + int(e["value"])
        dim = data.get("dim")
        d = data.get("num_facets")
        return cls(entries, None if dim is None else int(dim), None if d is None else int(d))


def _accumulate(args):
    complex_, subsets = args
    acc = Counter()
    for sigma in subsets:
        j = len(sigma)
        ranks = reduced_betti_ranks(full_subcomplex(complex_, sigma))
        for q, h in enumerate(ranks, start=-1):
            if h:
                acc[(j - q - 1, j)] += h
    return acc


def hochster_table(p, cap=DEFAULT_FACET_CAP, jobs=1):
    """Betti table from the reduced homology of every full subcomplex of the nerve.

    Subsets that are faces of the nerve span a simplex (contractible) and are
    skipped; the empty set contributes the (0, 0) entry by convention.
    """
    p.require_valid()
    d = p.num_facets
    if d > cap:
        raise ResourceLimit(f"polytope has {d} facets, above the Hochster cap of {cap}")
    k = nerve_complex(p)
    work = []
    for size in range(1, d + 1):
        for sigma in combinations(range(d), size):
            if not p.is_face(sigma):
                work.append(sigma)
    total = Counter({(0, 0): 1})
    if jobs > 1 and len(work) > 64:
        chunks = [work[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for acc in pool.map(_accumulate, [(k, c) for c in chunks]):
                total.update(acc)
    else:
        total.update(_accumulate((k, work)))
    return BettiTable(dict(total), p.dim, d)


def simplex_closed_form(n):
    if n < 1:
        raise InvalidParameter(f"simplex dimension must be >= 1, got {n}")
    return BettiTable({(0, 0): 1, (1, n + 1): 1}, n, n + 1)


def polygon_value(m, k):
    """beta^{-(k-1),2k} of the (m+2)-gon for 2 <= k <= m+1."""
    v = Fraction((m + 2) * (k - 1), m + 2 - k) * comb(m, k)
    assert v.denominator == 1
    return int(v)


def polygon_closed_form(m):
    """Table of the (m+2)-gon.  The formula's denominator vanishes at k = m+2,
    which is listed separately as the top entry (m, m+2)."""
    if m < 1:
        raise InvalidParameter(f"polygon parameter m must be >= 1, got {m}")
    entries = {(0, 0): 1, (m, m + 2): 1}
    for k in range(2, m + 2):
        v = polygon_value(m, k)
        if v:
            entries[(k - 1, k)] = v
    return BettiTable(entries, 2, m + 2)


def product_table(t1, t2):
    out = Counter()
    for (i1, j1), v1 in t1.entries.items():
        for (i2, j2), v2 in t2.entries.items():
            out[(i1 + i2, j1 + j2)] += v1 * v2
    dim = t1.dim + t2.dim if t1.has_metadata() and t2.has_metadata() else None
    d = t1.num_facets + t2.num_facets if t1.has_metadata() and t2.has_metadata() else None
    return BettiTable(dict(out), dim, d)


def check_duality(t):
    if not t.has_metadata():
        raise InvalidParameter("duality check needs dim and num_facets")
    n, d = t.dim, t.num_facets
    for (i, j), v in t.entries.items():
        if t[(d - n - i, d - j)] != v:
            return False
    return True


def identify_simplex_polygon_product(t):
    """(n, m) when ``t`` is the table of simplex(n) x polygon(m+2), n, m >= 1; else None.

    The only candidate is read off the metadata: a product of an n-simplex and
    a polygon has dimension n + 2 and d - dim = m + 1.
    """
    if not t.has_metadata():
        return None
    n = t.dim - 2
    m = t.num_facets - t.dim - 1
    if n < 1 or m < 1:
        return None
    expected = product_table(simplex_closed_form(n), polygon_closed_form(m))
    return (n, m) if expected == t else None


def classify_table(t):
    """Tagged recognition including the degenerate single-factor cases.

    Returns ("simplex", n), ("polygon", m), ("simplex_x_polygon", (n, m)) or None.
    """
    if not t.has_metadata():
        return None
    if t.num_facets == t.dim + 1 and t == simplex_closed_form(t.dim):
        return ("simplex", t.dim)
    if t.dim == 2 and t.num_facets >= 3 and t == polygon_closed_form(t.num_facets - 2):
        return ("polygon", t.num_facets - 2)
    pair = identify_simplex_polygon_product(t)
    if pair is not None:
        return ("simplex_x_polygon", pair)
    return None


def minimal_nonface_count_by_degree(t):
    """Row i = 1 of the table: number of minimal non-faces of each size."""
    return t.row(1)
