"""Random valid inputs for property tests and sweeps."""

import random


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def random_polygon_matrix(rng, k, box=3, tries=2000):
    """2 x k characteristic matrix over the k-gon, identity in the first two columns.

    Columns are drawn one at a time so that cyclically adjacent columns span Z^2.
    """
    vals = range(-box, box + 1)
    for _ in range(tries):
        cols = [(1, 0), (0, 1)]
        ok = True
        for i in range(2, k):
            opts = [(a, b) for a in vals for b in vals
                    if abs(_det2(cols[-1], (a, b))) == 1
                    and (i < k - 1 or abs(_det2((a, b), cols[0])) == 1)]
            if not opts:
                ok = False
                break
            cols.append(rng.choice(opts))
        if ok:
            return [[c[0] for c in cols], [c[1] for c in cols]]
    raise RuntimeError(f"no {k}-gon matrix found in {tries} tries")


def random_twists(rng, n, m, box=3):
    return [[rng.randint(-box, box) for _ in range(m)] for _ in range(n)]


def random_bundle_input(rng, n_max=3, m_max=4, box=3):
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    return random_polygon_matrix(rng, m + 2, box), random_twists(rng, n, m, box)


def make_rng(seed):
    return random.Random(seed)
