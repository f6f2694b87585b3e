"""Reduced simplicial homology ranks over Q."""

from dataclasses import dataclass

from . import linalg
from .errors import InvariantViolation


@dataclass(frozen=True)
class ChainComplexRanks:
    # chain_ranks[k + 1] = number of k-faces, starting at the empty face (k = -1)
    chain_ranks: tuple
    # boundary_ranks[k] = rank of the boundary map from k-chains to (k-1)-chains
    boundary_ranks: tuple

    def reduced_betti(self):
        out = []
        for k in range(-1, len(self.chain_ranks) - 1):
            dim_c = self.chain_ranks[k + 1]
            r_out = self.boundary_ranks[k] if 0 <= k < len(self.boundary_ranks) else 0
            r_in = self.boundary_ranks[k + 1] if k + 1 < len(self.boundary_ranks) else 0
            out.append(dim_c - r_out - r_in)
        return out


def _sparse_boundaries(k):
    faces = k.faces()
    top = max(faces, default=-1)
    layers = [[()]] + [faces[d] for d in range(top + 1)]
    mats = []
    for d in range(top + 1):
        lower = {f: i for i, f in enumerate(layers[d])}
        cols = []
        for face in layers[d + 1]:
            col = {}
            for i in range(len(face)):
                col[lower[face[:i] + face[i + 1:]]] = -1 if i % 2 else 1
            cols.append(col)
        mats.append((len(layers[d]), cols))
    return layers, mats


def boundary_matrices(k):
    """Augmented boundary matrices [d_0, d_1, ...] as dense integer row lists.

    d_0 is the augmentation (one row, a 1 for every vertex).  In d_k the rows
    are the sorted (k-1)-faces and the columns the sorted k-faces.
    """
    _, mats = _sparse_boundaries(k)
    dense = []
    for nrows, cols in mats:
        m = [[0] * len(cols) for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                m[i][j] = v
        dense.append(m)
    return dense


def chain_complex_ranks(k, check=False):
    layers, mats = _sparse_boundaries(k)
    ranks = tuple(linalg.rank(cols) for _, cols in mats)
    if check:
        dense = boundary_matrices(k)
        for a, b in zip(dense, dense[1:]):
            if any(any(row) for row in linalg.matmul(a, b)):
                raise InvariantViolation("boundary of a boundary is nonzero")
    return ChainComplexRanks(tuple(len(layer) for layer in layers), ranks)


def reduced_betti_ranks(k):
    """Reduced Betti numbers [b_{-1}, b_0, b_1, ...]; the empty complex gives [1]."""
    return chain_complex_ranks(k).reduced_betti()


def reduced_euler_characteristic(k):
    counts = [1] + [len(v) for _, v in sorted(k.faces().items())]
    return sum((-1) ** i * c for i, c in enumerate(counts)) * -1
