"""Exact integer linear algebra.

Everything here works on plain Python ``int`` lists so results never touch
floating point.  Matrices are lists of rows.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def det(matrix):
    """Determinant by Bareiss fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _combine(row, prow, col):
    """Eliminate ``col`` from ``row`` using ``prow``; rows are sparse dicts."""
    a = prow[col]
    b = row[col]
    g = gcd(a, b)
    fa, fb = a // g, b // g
    out = {}
    for c in row.keys() | prow.keys():
        v = fa * row.get(c, 0) - fb * prow.get(c, 0)
        if v:
            out[c] = v
    if out:
        h = 0
        for v in out.values():
            h = gcd(h, v)
            if h == 1:
                break
        if h > 1:
            out = {c: v // h for c, v in out.items()}
    return out


def rank(rows):
    """Rank over the rationals.

    ``rows`` may be dense lists or sparse ``{column: value}`` dicts.  Rows are
    kept primitive after each elimination step, which bounds coefficient
    growth for the ±1 incidence matrices this is mostly used on.
    """
    pivots = {}
    for row in rows:
        if isinstance(row, dict):
            cur = {c: v for c, v in row.items() if v}
        else:
            cur = {c: v for c, v in enumerate(row) if v}
        while cur:
            col = min(cur)
            prow = pivots.get(col)
            if prow is None:
                pivots[col] = cur
                break
            cur = _combine(cur, prow, col)
    return len(pivots)


def inverse_unimodular(matrix):
    """Integer inverse of a square matrix with determinant ±1."""
    n = len(matrix)
    d = det(matrix)
    if abs(d) != 1:
        raise ValueError(f"matrix is not unimodular (det={d})")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    out = []
    for row in aug:
        vals = row[n:]
        assert all(v.denominator == 1 for v in vals)
        out.append([int(v) for v in vals])
    return out


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class Lattice:
    """Integer row lattice kept in Hermite normal form.

    Vectors are added one at a time; the basis spans exactly the integer
    lattice generated by everything added so far (not just its rational
    span).  ``reduce`` returns the canonical coset representative of a vector
    modulo the lattice.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim):
        self.dim = dim
        # pivot column -> row (dense list, pivot entry > 0, zeros left of it)
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def add(self, vec):
        vec = list(vec)
        j = 0
        n = self.dim
        while True:
            while j < n and vec[j] == 0:
                j += 1
            if j == n:
                return
            prow = self.rows.get(j)
            if prow is None:
                if vec[j] < 0:
                    vec = [-x for x in vec]
                self.rows[j] = vec
                self._normalize_from(j)
                return
            a, b = prow[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, prow)]
                continue
            g, s, t = _xgcd(a, b)
            new_pivot = [s * y + t * x for x, y in zip(vec, prow)]
            vec = [(a // g) * x - (b // g) * y for x, y in zip(vec, prow)]
            self.rows[j] = new_pivot
            self._normalize_from(j)

    def _normalize_from(self, j):
        # reducing at column k only touches entries right of k, so sweeping
        # pivots in increasing order restores the Hermite conditions
        for col in sorted(c for c in self.rows if c >= j):
            self._reduce_above(col)

    def _reduce_above(self, j):
        prow = self.rows[j]
        p = prow[j]
        for col, row in self.rows.items():
            if col < j and row[j]:
                q = row[j] // p
                if q:
                    self.rows[col] = [x - q * y for x, y in zip(row, prow)]

    def reduce(self, vec):
        vec = list(vec)
        for j in sorted(self.rows):
            v = vec[j]
            if v:
                prow = self.rows[j]
                q = v // prow[j]
                if q:
                    vec = [x - q * y for x, y in zip(vec, prow)]
        return vec

    def contains(self, vec):
        return not any(self.reduce(vec))

    def basis(self):
        return [self.rows[j] for j in sorted(self.rows)]

    def pivots(self):
        return {j: self.rows[j][j] for j in sorted(self.rows)}


def smith_invariants(rows, ncols=None):
    """Nonzero invariant factors of an integer matrix (Smith normal form diagonal)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    m, n = len(a), len(a[0]) if ncols is None else ncols
    out = []
    t = 0
    while t < min(m, n):
        # pick a nonzero entry of least absolute value in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                # divisibility condition with the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, m):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, n):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        out.append(abs(a[t][t]))
        t += 1
    return out


def rational_nullspace(rows, ncols):
    """Basis of {x : rows . x = 0} over Q, each scaled to a primitive integer vector."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivcols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivcols.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -a[i][fc]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        basis.append([x // g for x in ints])
    return basis


def maximal_minor_gcd(rows):
    """gcd of all k x k minors of a k x n matrix (1 iff extendable to a unimodular matrix)."""
    k = len(rows)
    if k == 0:
        return 1
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), k):
        g = gcd(g, det([[r[c] for c in cols] for r in rows]))
        if g == 1:
            return 1
    return g


def charpoly(matrix):
    """Coefficients [1, c1, ..., cn] of det(tI - A) via Faddeev-LeVerrier."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        am = [[sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += coeffs[-1]
        m = am
        tr = sum(sum(a[i][l] * m[l][i] for l in range(n)) for i in range(n))
        coeffs.append(-tr / k)
    return coeffs


def signature(matrix):
    """Signature of a symmetric integer matrix.

    The characteristic polynomial of a symmetric matrix has only real roots,
    so Descartes' rule of signs counts the positive and negative eigenvalues
    exactly.
    """
    coeffs = charpoly(matrix)
    n = len(matrix)

    def sign_changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    pos = sign_changes(coeffs)
    # p(-t): coefficient of t^(n-k) picks up (-1)^(n-k)
    neg = sign_changes([c * (-1) ** (n - k) for k, c in enumerate(coeffs)])
    return pos - neg
