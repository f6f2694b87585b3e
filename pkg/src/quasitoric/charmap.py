"""Characteristic matrices over simple polytopes.

Column i of a characteristic matrix is the primitive vector attached to
facet i.  Matrices are stored as tuples of integer rows.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from . import linalg
from .errors import InvalidParameter, NotNormalizable, PreconditionError, InvariantViolation
from .polytope import SimplePolytope, build_polygon, build_simplex, product


def _freeze(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


@dataclass(frozen=True)
class CharMatrix:
    polytope: SimplePolytope
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _freeze(self.entries))
        p = self.polytope
        if len(self.entries) != p.dim or any(len(r) != p.num_facets for r in self.entries):
            raise InvalidParameter(
                f"matrix shape {len(self.entries)}x{len(self.entries[0]) if self.entries else 0} "
                f"does not match polytope ({p.dim} x {p.num_facets})")

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    def column(self, i):
        return tuple(r[i] for r in self.entries)

    def submatrix(self, cols):
        return [[r[c] for c in cols] for r in self.entries]

    def to_json(self):
        return matrix_to_json(self.entries)


@dataclass(frozen=True)
class NonsingularResult:
    ok: bool
    vertex: tuple = None
    det: int = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class ProductSplit:
    n1: int
    facets1: tuple
    n2: int
    facets2: tuple

    def __post_init__(self):
        object.__setattr__(self, "facets1", tuple(self.facets1))
        object.__setattr__(self, "facets2", tuple(self.facets2))

    def check(self, p):
        f1, f2 = set(self.facets1), set(self.facets2)
        if f1 & f2 or f1 | f2 != set(range(p.num_facets)):
            raise InvalidParameter("split blocks must partition the facets")
        if self.n1 + self.n2 != p.dim:
            raise InvalidParameter("split dimensions do not add up to the polytope dimension")
        if len(self.facets1) <= self.n1 or len(self.facets2) <= self.n2:
            raise InvalidParameter("each factor needs more facets than its dimension")

    def to_json(self):
        return {"n1": self.n1, "facets1": list(self.facets1),
                "n2": self.n2, "facets2": list(self.facets2)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["n1"]), tuple(data["facets1"]), int(data["n2"]), tuple(data["facets2"]))


@dataclass(frozen=True)
class BundleMatrixData:
    base: tuple      # 2 x (m+2) characteristic matrix of the base, identity block first
    twists: tuple    # n x m
    b: int = 0
    c: int = 0

    @property
    def is_bundle(self):
        return self.b == 0 and self.c == 0


def check_nonsingular(p, matrix):
    """First vertex (in sorted order) whose columns do not have determinant ±1."""
    entries = matrix.entries if isinstance(matrix, CharMatrix) else _freeze(matrix)
    if len(entries) != p.dim or any(len(r) != p.num_facets for r in entries):
        raise InvalidParameter("matrix shape does not match the polytope")
    for v in p.vertices:
        d = linalg.det([[r[c] for c in v] for r in entries])
        if abs(d) != 1:
            return NonsingularResult(False, v, d)
    return NonsingularResult(True)


def is_characteristic(L):
    return check_nonsingular(L.polytope, L).ok


def normal_form(L):
    """(E_n | A^{-1} B) where A is the leading n x n block."""
    n = L.rows
    a = L.submatrix(range(n))
    d = linalg.det(a)
    if abs(d) != 1:
        raise NotNormalizable(d)
    inv = linalg.inverse_unimodular(a)
    return CharMatrix(L.polytope, linalg.matmul(inv, [list(r) for r in L.entries]))


def _canonical_column_signs(rows):
    cols = list(zip(*rows))
    out = []
    for col in cols:
        first = next((x for x in col if x), 0)
        out.append(tuple(-x for x in col) if first < 0 else tuple(col))
    return tuple(zip(*out))


def canonical_form(L):
    """Orbit representative under GL_n(Z) on the left and column sign changes.

    Negating one of the leading columns and renormalising flips the sign of a
    row of the right-hand block, so row signs are enumerated and the least
    column-sign-canonical block is kept.
    """
    nf = normal_form(L)
    n = nf.rows
    block = [list(r[n:]) for r in nf.entries]
    best = None
    for signs in iproduct((1, -1), repeat=n):
        cand = _canonical_column_signs([[s * x for x in r] for s, r in zip(signs, block)])
        if best is None or cand < best:
            best = cand
    return best


def equivalent(L1, L2):
    if L1.polytope.vertices != L2.polytope.vertices or L1.polytope.num_facets != L2.polytope.num_facets:
        raise InvalidParameter("matrices live on different polytopes")
    return canonical_form(L1) == canonical_form(L2)


def _identity_block(entries, cols, rows):
    for k, c in enumerate(cols):
        for r in range(len(entries)):
            want = 1 if r == rows[k] else 0
            if entries[r][c] != want:
                return False
    return True


def in_block_form(L, split):
    split.check(L.polytope)
    e = L.entries
    return (_identity_block(e, split.facets1[:split.n1], list(range(split.n1)))
            and _identity_block(e, split.facets2[:split.n2],
                                list(range(split.n1, split.n1 + split.n2))))


def normalize_for_split(L, split):
    """Left-multiply so the leading facets of each factor carry identity blocks."""
    split.check(L.polytope)
    lead = list(split.facets1[:split.n1]) + list(split.facets2[:split.n2])
    a = L.submatrix(lead)
    d = linalg.det(a)
    if abs(d) != 1:
        raise NotNormalizable(d)
    inv = linalg.inverse_unimodular(a)
    return CharMatrix(L.polytope, linalg.matmul(inv, [list(r) for r in L.entries]))


def factor_polytope(p, facets):
    """Projection of a product polytope onto the factor owning ``facets`` (local order)."""
    local = {f: k for k, f in enumerate(facets)}
    verts = {tuple(sorted(local[i] for i in v if i in local)) for v in p.vertices}
    dims = {len(v) for v in verts}
    if len(dims) != 1:
        raise PreconditionError("facet block is not a product factor")
    return SimplePolytope(dims.pop(), len(facets), tuple(verts))


def extract_factor_matrix(L, split, which):
    if which not in (1, 2):
        raise InvalidParameter("which must be 1 or 2")
    if not in_block_form(L, split):
        raise PreconditionError("matrix is not in block form for this split")
    if which == 1:
        rows, facets = range(split.n1), split.facets1
    else:
        rows, facets = range(split.n1, split.n1 + split.n2), split.facets2
    sub = [[L.entries[r][c] for c in facets] for r in rows]
    out = CharMatrix(factor_polytope(L.polytope, facets), sub)
    if not is_characteristic(out):
        raise InvariantViolation("factor block of a characteristic matrix is singular")
    return out


def bundle_split(n, m):
    """Split of simplex(n) x polygon(m+2) in the facet order used by bundle matrices."""
    facets1 = tuple(range(n)) + (n + 2,)
    facets2 = (n, n + 1) + tuple(range(n + 3, n + m + 3))
    return ProductSplit(n, facets1, 2, facets2)


def bundle_polytope(n, m):
    """simplex(n) x polygon(m+2) with facets ordered: n simplex facets, the two
    polygon facets carrying the base identity block, the last simplex facet,
    then the remaining m polygon facets."""
    p = product(build_simplex(n), build_polygon(m + 2))
    # product order: simplex 0..n, polygon n+1..n+m+2; polygon facets m, m+1
    # (cyclic labels) lead the base matrix, followed by 0..m-1
    poly = [n + 1 + i for i in range(m + 2)]
    order = list(range(n)) + [poly[m], poly[m + 1], n] + poly[:m]
    return p.relabel(order)


def base_polytope(m):
    """polygon(m+2) with the two identity facets first, as in a base matrix."""
    return build_polygon(m + 2).relabel([m, m + 1] + list(range(m)))


def bundle_matrix_data(L, split):
    """Read (base, twists, b, c) off a matrix over simplex(n) x polygon in the
    fiber-first split; the fiber column's top entries are normalised to -1."""
    split.check(L.polytope)
    n = split.n1
    if len(split.facets1) != n + 1 or split.n2 != 2:
        raise PreconditionError("bundle detection needs a simplex fiber block and a polygon base block")
    L = normalize_for_split(L, split)
    e = [list(r) for r in L.entries]
    fib = split.facets1[n]
    for i in range(n):
        v = e[i][fib]
        if abs(v) != 1:
            raise InvariantViolation("fiber column entry is not a unit")
        if v == 1:
            e[i] = [-x for x in e[i]]
            col = split.facets1[i]
            for r in e:
                r[col] = -r[col]
    rest2 = split.facets2[2:]
    twists = tuple(tuple(-e[i][c] for c in rest2) for i in range(n))
    base = tuple(tuple(e[n + r][c] for c in split.facets2) for r in range(2))
    return BundleMatrixData(base, twists, -e[n][fib], -e[n + 1][fib])


def detect_bundle_structure(L, split):
    data = bundle_matrix_data(L, split)
    return data if data.is_bundle else None


def build_bundle_char_matrix(base, twists):
    """Characteristic matrix of P(C + L_1 + ... + L_n) over the base surface."""
    base = [list(r) for r in base]
    if len(base) != 2:
        raise InvalidParameter("base matrix must have two rows")
    k = len(base[0])
    m = k - 2
    if m < 1:
        raise InvalidParameter("base polygon needs at least 3 facets")
    bp = base_polytope(m)
    base_l = CharMatrix(bp, base)
    res = check_nonsingular(bp, base_l)
    if not res.ok:
        raise InvalidParameter(f"base matrix is singular at vertex {list(res.vertex)} (det {res.det})")
    base_l = normal_form(base_l)
    twists = [list(r) for r in twists]
    n = len(twists)
    if n < 1 or any(len(r) != m for r in twists):
        raise InvalidParameter(f"twists must be an n x {m} matrix with n >= 1")
    rows = []
    for i in range(n):
        rows.append([int(i == j) for j in range(n)] + [0, 0, -1] + [-a for a in twists[i]])
    for r in range(2):
        b = base_l.entries[r]
        rows.append([0] * n + [int(r == 0), int(r == 1), 0] + list(b[2:]))
    out = CharMatrix(bundle_polytope(n, m), rows)
    if not is_characteristic(out):
        raise InvariantViolation("bundle matrix failed the non-singularity check")
    return out


# JSON ------------------------------------------------------------------------

def matrix_to_json(rows):
    rows = [list(r) for r in rows]
    return {"rows": len(rows), "cols": len(rows[0]) if rows else 0, "entries": rows}


def matrix_from_json(data):
    if isinstance(data, list):
        return [[int(x) for x in r] for r in data]
    entries = [[int(x) for x in r] for r in data["entries"]]
    if "rows" in data and len(entries) != int(data["rows"]):
        raise InvalidParameter("row count does not match entries")
    if "cols" in data and any(len(r) != int(data["cols"]) for r in entries):
        raise InvalidParameter("column count does not match entries")
    return entries
