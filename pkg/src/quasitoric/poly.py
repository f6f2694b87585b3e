"""Sparse integer polynomials in a fixed number of degree-2 generators.

Degrees here are polynomial degrees (sum of exponents); the cohomological
degree of a term is twice that.
"""

from functools import lru_cache
from math import comb


def glex_key(exps):
    """Sort key for graded-lexicographic order (larger key = larger monomial)."""
    return (sum(exps), exps)


@lru_cache(maxsize=None)
def monomials(nvars, degree):
    """All exponent tuples of the given degree, in descending glex order."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def num_monomials(nvars, degree):
    return comb(degree + nvars - 1, nvars - 1) if nvars else int(degree == 0)


class Poly:
    """Immutable polynomial with integer coefficients.

    ``terms`` maps exponent tuples to nonzero integers.  Iteration and
    ``terms_sorted`` yield terms in descending glex order, which is also the
    order used by the JSON encoding.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} has wrong length for {nvars} variables")
                if c:
                    v = clean.get(exps, 0) + c
                    if v:
                        clean[exps] = v
                    else:
                        clean.pop(exps, None)
        self.terms = clean
        self._hash = None

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, coeff=1):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): coeff})

    @classmethod
    def linear(cls, coeffs):
        """Linear form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms)

    # basic protocol ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.format()})"

    def terms_sorted(self):
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def __iter__(self):
        return iter(self.terms_sorted())

    # arithmetic -------------------------------------------------------------

    def _check(self, other):
        if isinstance(other, int):
            return Poly.const(self.nvars, other)
        if other.nvars != self.nvars:
            raise ValueError("polynomials over different generator sets")
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # structure --------------------------------------------------------------

    def degree(self):
        """Top polynomial degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k):
        return Poly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def graded_parts(self):
        """List of homogeneous components indexed by degree."""
        top = self.degree()
        return [self.homogeneous_part(k) for k in range(top + 1)]

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def leading_coeff(self):
        ts = self.terms_sorted()
        return ts[0][1] if ts else 0

    def mod(self, p):
        return Poly(self.nvars, {e: c % p for e, c in self.terms.items()})

    def to_vector(self, degree):
        """Coefficient vector against ``monomials(nvars, degree)``."""
        index = monomial_index(self.nvars, degree)
        v = [0] * len(index)
        for e, c in self.terms.items():
            if sum(e) != degree:
                raise ValueError(f"term {e} is not of degree {degree}")
            v[index[e]] = c
        return v

    @classmethod
    def from_vector(cls, nvars, degree, vec):
        mons = monomials(nvars, degree)
        return cls(nvars, {m: c for m, c in zip(mons, vec) if c})

    def substitute(self, images):
        """Replace generator i by ``images[i]`` (all images share one ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per generator")
        if not images:
            return self
        target = images[0].nvars
        out = Poly.zero(target)
        powers = [{0: Poly.const(target, 1)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def apply_matrix(self, matrix):
        """Substitute x_i -> sum_j matrix[i][j] y_j."""
        return self.substitute([Poly.linear(row) for row in matrix])

    def canonical(self):
        """Representative up to sign: leading coefficient made positive."""
        return -self if self.leading_coeff() < 0 else self

    # formatting -------------------------------------------------------------

    def format(self, names=None):
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms_sorted():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c:+d}*{mono}")
        s = " ".join(parts)
        s = s.replace("+", "+ ").replace("-", "- ")
        if s.startswith("+ "):
            s = s[2:]
        elif s.startswith("- "):
            s = "-" + s[2:]
        return s

    def to_json(self):
        return [{"exps": list(e), "coeff": c} for e, c in self.terms_sorted()]

    @classmethod
    def from_json(cls, nvars, data):
        return cls(nvars, [(tuple(t["exps"]), int(t["coeff"])) for t in data])


@lru_cache(maxsize=None)
def monomial_index(nvars, degree):
    return {m: i for i, m in enumerate(monomials(nvars, degree))}
