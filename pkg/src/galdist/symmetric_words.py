"""Permutations, block embeddings and the reduced-word lemmas.

Permutations are 1-indexed one-line arrays. ``s(n, k)`` is the simple
transposition (k-1 k); composition ``u * v`` means u after v.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import PreconditionError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise PreconditionError(f"{list(imgs)} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise PreconditionError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.n + 1))

    def inversions(self) -> list[tuple[int, int]]:
        w = self.images
        return [(i + 1, j + 1) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]]

    def length(self) -> int:
        return len(self.inversions())

    def reduced_word(self) -> list[int]:
        """Indices k with self = s_{k_1} s_{k_2} ... (s_k = (k-1 k))."""
        w = list(self.images)
        word = []
        # bubble sort from the right: each swap of positions p, p+1 is w -> w * s_{p+1}
        changed = True
        while changed:
            changed = False
            for p in range(len(w) - 1):
                if w[p] > w[p + 1]:
                    w[p], w[p + 1] = w[p + 1], w[p]
                    word.append(p + 2)
                    changed = True
        return word[::-1]

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"


def s(n: int, k: int) -> Permutation:
    """The simple transposition (k-1 k) in S_n."""
    if not 2 <= k <= n:
        raise PreconditionError(f"s_{k} is not a simple reflection of S_{n}")
    imgs = list(range(1, n + 1))
    imgs[k - 2], imgs[k - 1] = k, k - 1
    return Permutation(tuple(imgs))


def from_word(n: int, word: Sequence[int]) -> Permutation:
    out = Permutation.identity(n)
    for k in word:
        out = out * s(n, k)
    return out


def intervals(sizes: Sequence[int]) -> list[list[int]]:
    out, start = [], 1
    for m in sizes:
        out.append(list(range(start, start + m)))
        start += m
    return out


def embed_blockwise(w: Permutation, mbar: Sequence[int]) -> Permutation:
    """w^mbar: the one-line word is the concatenation I_{w(1)}, ..., I_{w(t)}."""
    if len(mbar) != w.n:
        raise PreconditionError("mbar must have one entry per letter of w")
    blocks = intervals(mbar)
    return Permutation(tuple(x for i in range(1, w.n + 1) for x in blocks[w(i) - 1]))


def exchange(sizes: Sequence[int], pairs: Sequence[tuple[int, int]]) -> Permutation:
    """Involution exchanging blocks i and j (equal sizes) for each pair, order preserving."""
    blocks = intervals(sizes)
    imgs = list(range(1, sum(sizes) + 1))
    for i, j in pairs:
        if len(blocks[i]) != len(blocks[j]):
            raise PreconditionError("exchanged blocks must have equal size")
        for x, y in zip(blocks[i], blocks[j]):
            imgs[x - 1], imgs[y - 1] = y, x
    return Permutation(tuple(imgs))


def swap_adjacent(sizes: Sequence[int], i: int) -> Permutation:
    """Position map moving block i+1 in front of block i (0-based i)."""
    blocks = intervals(sizes)
    x, y = blocks[i], blocks[i + 1]
    imgs = list(range(1, sum(sizes) + 1))
    for p in x:
        imgs[p - 1] = p + len(y)
    for p in y:
        imgs[p - 1] = p - len(x)
    return Permutation(tuple(imgs))


def admissible_root(xi: Permutation, l: int) -> bool:
    """xi(alpha) < 0 and xi(alpha) != -alpha for alpha = e_{l-1} - e_l."""
    if not 2 <= l <= xi.n:
        raise PreconditionError(f"root index {l} out of range 2..{xi.n}")
    hi, lo = xi(l - 1), xi(l)
    return hi > lo and (hi, lo) != (l, l - 1)


# Lemmas BB and AB

def lemma_mu_word(kind: str, a: int, b: int, i: int) -> list[int]:
    """Indices of mu_i, listed in application order (rightmost factor first)."""
    base = a + b + i if kind == "BB" else a + i
    return [base + k for k in range(b, 0, -1)]


def lemma_objects(kind: str, a: int, b: int):
    """(c, w, mu, [mu_1..mu_a]) built from the interval descriptions."""
    if kind not in ("BB", "AB"):
        raise PreconditionError("kind must be BB or AB")
    c = 2 * a + 2 * b
    if kind == "BB":
        sizes = [a, b, b, a]  # A1 A2 B2 B1
        w = exchange(sizes, [(0, 3), (1, 2)])
        mu = swap_adjacent(sizes, 2)
    else:
        sizes = [a, b, a, b]  # A1 A2 B1 B2
        w = exchange(sizes, [(0, 2), (1, 3)])
        mu = swap_adjacent(sizes, 1)
    mus = []
    for i in range(1, a + 1):
        m = Permutation.identity(c)
        for k in lemma_mu_word(kind, a, b, i):
            m = s(c, k) * m
        mus.append(m)
    return c, w, mu, mus


def lemma_cases(kind: str, a: int, b: int) -> list[tuple[int, int, int]]:
    """The (i, r, l) triples for which the lemma asserts admissibility."""
    off = a + b if kind == "BB" else a
    out = []
    for i in range(1, a + 1):
        for r in range(1, b + 1):
            if r >= 2:
                out.append((i, r, off + i + r - 1))
            elif i <= a - 1:
                out.append((i, r, off + i + 1 + b))
    return out


@dataclass
class LemmaReport:
    kind: str
    a: int
    b: int
    ok: bool = True
    failures: list = field(default_factory=list)


def verify_reduction_lemma(kind: str, a: int, b: int) -> LemmaReport:
    if a < 1 or b < 1:
        raise PreconditionError("a and b must be positive")
    c, w, mu, mus = lemma_objects(kind, a, b)
    rep = LemmaReport(kind, a, b)

    prod = Permutation.identity(c)
    for m in mus:
        prod = m * prod
    if prod != mu:
        rep.failures.append(("mu", "product of mu_i differs from mu"))
    lengths = [m.length() for m in mus]
    if not (mu.length() == sum(lengths) == a * b):
        rep.failures.append(("length", mu.length(), sum(lengths), a * b))

    off = a + b if kind == "BB" else a
    for i, r, l in lemma_cases(kind, a, b):
        g = Permutation.identity(c)
        for m in mus[: i - 1]:
            g = m * g
        for k in range(b, r - 1, -1):
            g = s(c, off + i + k) * g
        wir = w.conjugate(g)
        if not admissible_root(wir, l):
            rep.failures.append((i, r))
    rep.ok = not rep.failures
    return rep
