"""Double cosets P\\G/H as symmetric matrices and the geometric lemma search."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cuspidal_lines import Registry
from .distinction import Status, discrete_series_distinction
from .errors import PreconditionError
from .segments import Segment, jacquet_discrete, segment_dual
from .symmetric_words import Permutation, embed_blockwise


@dataclass(frozen=True, order=True)
class CosetMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.entries)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.entries)

    def is_symmetric(self) -> bool:
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.t) for j in range(self.t))

    def blocks(self) -> list[tuple[int, int]]:
        """Nonzero positions (i, j), 0-based, in the row-major order of M_a."""
        return [(i, j) for i in range(self.t) for j in range(self.t) if self.entries[i][j]]

    def mbar_a(self) -> list[int]:
        return [self.entries[i][j] for i, j in self.blocks()]

    def block_involution(self) -> Permutation:
        """Involution of the blocks of M_a fixing (i,i) and exchanging (i,j) with (j,i)."""
        blocks = self.blocks()
        pos = {b: k for k, b in enumerate(blocks, 1)}
        return Permutation(tuple(pos[(j, i)] for i, j in blocks))

    def w_a(self) -> Permutation:
        return embed_blockwise(self.block_involution(), self.mbar_a())

    def __str__(self):
        return "[" + ", ".join("[" + ",".join(map(str, r)) + "]" for r in self.entries) + "]"


def enumerate_cosets(mbar: Sequence[int]) -> list[CosetMatrix]:
    """Symmetric non-negative integer matrices with row sums mbar, lexicographically."""
    mbar = [int(m) for m in mbar]
    t = len(mbar)
    if t < 1 or any(m < 0 for m in mbar):
        raise PreconditionError("mbar must be a non-empty list of non-negative integers")
    out = []
    mat = [[0] * t for _ in range(t)]
    cells = [(i, j) for i in range(t) for j in range(i, t)]
    left = list(mbar)

    def fill(k):
        if k == len(cells):
            out.append(CosetMatrix(tuple(tuple(r) for r in mat)))
            return
        i, j = cells[k]
        hi = left[i] if j == i else min(left[i], left[j])
        for v in range(hi + 1):
            if j == t - 1 and left[i] != v:
                continue  # row i must be exhausted by its last cell
            left[i] -= v
            if j != i:
                left[j] -= v
            mat[i][j] = mat[j][i] = v
            fill(k + 1)
            mat[i][j] = mat[j][i] = 0
            left[i] += v
            if j != i:
                left[j] += v

    fill(0)
    return sorted(out)


def coset_pieces(sigma: Sequence[Segment], a: CosetMatrix, reg: Registry) -> Optional[dict]:
    """Jacquet pieces delta_{i,j} of each delta_i along row i of a, or None."""
    pieces = {}
    for i, d in enumerate(sigma):
        cols = [j for j in range(a.t) if a.entries[i][j]]
        split = jacquet_discrete(d, [a.entries[i][j] for j in cols], reg)
        if split is None:
            return None
        for j, p in zip(cols, split):
            pieces[(i, j)] = p
    return pieces


def contributes(sigma: Sequence[Segment], a: CosetMatrix, reg: Registry) -> bool:
    pieces = coset_pieces(sigma, a, reg)
    if pieces is None:
        return False
    for (i, j), p in pieces.items():
        if i == j:
            if discrete_series_distinction(p, reg).status is not Status.DISTINGUISHED:
                return False
        elif i < j and pieces[(j, i)] != segment_dual(p, reg):
            return False
    return True


def contributing_cosets(sigma: Sequence[Segment], reg: Registry,
                        mbar: Sequence[int] | None = None) -> list[CosetMatrix]:
    degrees = [d.degree(reg) for d in sigma]
    if mbar is None:
        mbar = degrees
    elif list(mbar) != degrees:
        raise PreconditionError(f"segment degrees {degrees} do not match mbar {list(mbar)}")
    return [a for a in enumerate_cosets(mbar) if contributes(sigma, a, reg)]
