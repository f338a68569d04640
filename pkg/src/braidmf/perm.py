"""Finite permutations with left-to-right composition.

Composition convention (used consistently across the whole package,
including factorization products): ``p * q`` means "apply p first,
then q".  Conjugation is ``p ** g == g.inverse() * p * g``.

Points are 1-based in cycle notation and in the JSON wire format
(an array of 1-based images); internally images are stored 0-based.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class Perm:
    """A permutation of {1..n}, immutable and hashable."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Perm is immutable")

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, i, j, n):
        """The transposition (i j), 1-based points."""
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"bad transposition ({i} {j}) in S_{n}")
        im = list(range(n))
        im[i - 1], im[j - 1] = im[j - 1], im[i - 1]
        return cls(im)

    @classmethod
    def from_cycles(cls, cycles, n):
        """Build from disjoint cycles of 1-based points, e.g. [(1,2),(3,4)]."""
        im = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                im[a - 1] = b - 1
        p = cls(im)
        return p

    def __call__(self, point):
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Perm(other.images[i] for i in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def conjugate(self, g):
        """g^{-1} * self * g."""
        return g.inverse() * self * g

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Disjoint cycles (1-based), fixed points omitted, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_transposition(self):
        return self.cycle_type() == (2,)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        if self.is_identity():
            return f"Perm.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"<{body} deg={self.degree}>"

    def to_json(self):
        """1-based image array, the external wire format."""
        return [i + 1 for i in self.images]

    @classmethod
    def from_json(cls, data):
        return cls(i - 1 for i in data)


# The Klein four-group, kernel of the surjection S4 -> S3.
def klein_group():
    return (
        Perm.identity(4),
        Perm.from_cycles([(1, 2), (3, 4)], 4),
        Perm.from_cycles([(1, 3), (2, 4)], 4),
        Perm.from_cycles([(1, 4), (2, 3)], 4),
    )


@lru_cache(maxsize=None)
def symmetric_group(n):
    """All n! permutations, in lexicographic image order."""
    return tuple(Perm(im) for im in itertools.permutations(range(n)))


# Images of the six transpositions of S4 under the Klein-kernel quotient:
# (12),(34) -> (12);  (13),(24) -> (13);  (14),(23) -> (23).
_S4_TO_S3_TRANSPOSITIONS = {
    frozenset({1, 2}): (1, 2),
    frozenset({3, 4}): (1, 2),
    frozenset({1, 3}): (1, 3),
    frozenset({2, 4}): (1, 3),
    frozenset({1, 4}): (2, 3),
    frozenset({2, 3}): (2, 3),
}


@lru_cache(maxsize=None)
def _quotient_table():
    # The quotient is determined by where transpositions go; every element
    # of S4 is a product of transpositions, so extend multiplicatively.
    table = {Perm.identity(4): Perm.identity(3)}
    frontier = [Perm.identity(4)]
    trans = [
        (Perm.transposition(i, j, 4), Perm.transposition(*_S4_TO_S3_TRANSPOSITIONS[frozenset({i, j})], 3))
        for i in range(1, 5)
        for j in range(i + 1, 5)
    ]
    while frontier:
        nxt = []
        for p in frontier:
            for t4, t3 in trans:
                q = p * t4
                if q not in table:
                    table[q] = table[p] * t3
                    nxt.append(q)
        frontier = nxt
    return table


def quotient_s4_to_s3(p):
    """Image of p in S3 under the surjection S4 -> S3 with Klein kernel."""
    if p.degree != 4:
        raise ValueError(f"expected degree 4, got {p.degree}")
    return _quotient_table()[p]
