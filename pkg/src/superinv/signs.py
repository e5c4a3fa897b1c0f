"""Sign calculus on parity words, and permutations of {1..k}.

Conventions used throughout the package:

* A parity word is a tuple over {0, 1}.
* ``p_sign(x, y)`` is the product of (-1)**(x[i]*y[j]) over all pairs i > j
  (1-based positions, strictly decreasing), the sign picked up when a word
  of parities x is moved across a word of parities y letter by letter.
* ``gamma_sign(x, s)`` is the product of (-1)**(x[s(i)]*x[s(j)]) over the
  inversions i < j, s(i) > s(j); it is the Koszul sign of reordering a
  supercommutative word x1...xk into x_{s(1)}...x_{s(k)}.
* Permutations are stored in one-line image form, 1-based.  Composition
  ``a * b`` applies b first: (a*b)(x) = a(b(x)).  Cycle-notation parsing
  lives only in the CLI layer.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .scalars import Scalar, sign_scalar


def p_exponent(x: Sequence[int], y: Sequence[int]) -> int:
    """Exponent (mod 2) of p(x, y) = prod_{i>j} (-1)^{x_i y_j}."""
    if len(x) != len(y):
        raise ValueError("parity words must have equal length")
    total = 0
    run = 0
    # sum_{i>j} x_i*y_j: accumulate prefix sums of y.
    for i in range(len(x)):
        if i > 0:
            run += y[i - 1]
        if x[i]:
            total += run
    return total & 1


def p_sign(x: Sequence[int], y: Sequence[int]) -> Scalar:
    """The sign p(x, y) as a Scalar (+1 or -1)."""
    return sign_scalar(p_exponent(x, y))


def gamma_exponent(x: Sequence[int], sigma: "Permutation") -> int:
    """Exponent (mod 2) of gamma(x, sigma) over the inversions of sigma."""
    k = len(x)
    if sigma.size != k:
        raise ValueError("parity word length does not match permutation size")
    img = sigma.images
    total = 0
    for i in range(k):
        si = img[i]
        if not x[si - 1]:
            continue
        for j in range(i + 1, k):
            sj = img[j]
            if si > sj and x[sj - 1]:
                total ^= 1
    return total


def gamma_sign(x: Sequence[int], sigma: "Permutation") -> Scalar:
    """The sign gamma(x, sigma) as a Scalar (+1 or -1)."""
    return sign_scalar(gamma_exponent(x, sigma))


class Permutation:
    """A permutation of {1..k} in one-line image form."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (len(images), images))
        self.images = images

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(1, k + 1))

    @classmethod
    def transposition(cls, k: int, a: int, b: int) -> "Permutation":
        img = list(range(1, k + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(img)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], k: int) -> "Permutation":
        """Build from disjoint-or-not cycles, applied rightmost first."""
        result = cls.identity(k)
        for cyc in cycles:
            cyc = list(cyc)
            img = list(range(1, k + 1))
            for pos, a in enumerate(cyc):
                img[a - 1] = cyc[(pos + 1) % len(cyc)]
            result = result * cls(img)
        return result

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (a*b)(x) = a(b(x)): apply b first.
        if self.size != other.size:
            raise ValueError("cannot compose permutations of different sizes")
        a, b = self.images, other.images
        return Permutation(a[b[i] - 1] for i in range(self.size))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def sign(self) -> int:
        sgn = 1
        for cyc in self.cycles():
            if len(cyc) % 2 == 0:
                sgn = -sgn
        return sgn

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            cur = self(start)
            while cur != start:
                cyc.append(cur)
                seen[cur - 1] = True
                cur = self(cur)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def extend(self, k: int) -> "Permutation":
        """Embed into S_k by fixing the new points."""
        if k < self.size:
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.size + 1, k + 1)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def to_json(self):
        return list(self.images)


def symmetric_group(k: int) -> Iterator[Permutation]:
    """All of S_k in lexicographic one-line order."""
    for img in itertools.permutations(range(1, k + 1)):
        yield Permutation(img)
