"""Index bookkeeping for the natural modules of the four matrix families.

Index conventions (all 1-based except the signed q-indices):

* gl(m|n):   indices 1..m+n, even iff i <= m.
* osp(m|2n): indices 1..m+2n, odd iff i <= n or i > m+n; i' = m+2n+1-i;
             epsilon(i) = +1 iff i <= m+n.  The invariant bilinear form is
             B(e_i, e_j) = epsilon(i) * delta(j, i').
* p(n):      indices 1..2n, even iff i <= n; i' = i+n resp. i-n.  The odd
             symmetric form is (e_i, e_j) = delta(j, i').
* q(n):      signed indices {1..n} u {-1..-n}, even iff i > 0; i' = -i.
             The block picture inside gl(n|n) is reached through the fixed
             bijection e_{-i} <-> e_{n+i} (``block_index``).
"""

from __future__ import annotations

FAMILIES = ("gl", "osp", "q", "p")


class SuperSpace:
    """The indexed super vector space a family acts on."""

    __slots__ = ("family", "m", "n", "indices", "dim", "_parity")

    def __init__(self, family: str, m: int, n: int):
        if family not in FAMILIES:
            raise ValueError("unknown family %r" % (family,))
        if m < 0 or n < 0:
            raise ValueError("sizes must be non-negative")
        if family in ("q", "p") and n < 1:
            raise ValueError("family %s requires n >= 1" % family)
        self.family = family
        self.m = m
        self.n = n
        if family == "gl":
            if m + n < 1:
                raise ValueError("gl requires m+n >= 1")
            self.indices = tuple(range(1, m + n + 1))
            self._parity = {i: (0 if i <= m else 1) for i in self.indices}
        elif family == "osp":
            if m + 2 * n < 1:
                raise ValueError("osp requires m+2n >= 1")
            self.indices = tuple(range(1, m + 2 * n + 1))
            self._parity = {
                i: (1 if (i <= n or i > m + n) else 0) for i in self.indices
            }
        elif family == "p":
            self.indices = tuple(range(1, 2 * n + 1))
            self._parity = {i: (0 if i <= n else 1) for i in self.indices}
        else:  # q
            self.indices = tuple(range(1, n + 1)) + tuple(range(-1, -n - 1, -1))
            self._parity = {i: (0 if i > 0 else 1) for i in self.indices}
        self.dim = len(self.indices)

    def parity(self, i: int) -> int:
        return self._parity[i]

    def prime(self, i: int) -> int:
        """The pairing involution i -> i' (undefined for gl)."""
        if self.family == "osp":
            return self.m + 2 * self.n + 1 - i
        if self.family == "p":
            return i + self.n if i <= self.n else i - self.n
        if self.family == "q":
            return -i
        raise ValueError("gl has no pairing involution")

    def epsilon(self, i: int) -> int:
        """The osp form signs: +1 on the first m+n indices, -1 after."""
        if self.family != "osp":
            raise ValueError("epsilon is defined for osp only")
        return 1 if i <= self.m + self.n else -1

    def form(self, i: int, j: int) -> int:
        """The invariant bilinear form B(e_i, e_j) for osp and p."""
        if self.family == "osp":
            return self.epsilon(i) if j == self.prime(i) else 0
        if self.family == "p":
            return 1 if j == self.prime(i) else 0
        raise ValueError("no bilinear form for family %s" % self.family)

    def block_index(self, i: int) -> int:
        """q only: the gl(n|n) block position of a signed index."""
        if self.family != "q":
            raise ValueError("block_index is defined for q only")
        return i if i > 0 else self.n - i

    def word_parity(self, word) -> int:
        return sum(self._parity[i] for i in word) & 1

    def __eq__(self, other):
        return (
            isinstance(other, SuperSpace)
            and (self.family, self.m, self.n) == (other.family, other.m, other.n)
        )

    def __hash__(self):
        return hash((self.family, self.m, self.n))

    def __repr__(self):
        return "SuperSpace(%r, %d, %d)" % (self.family, self.m, self.n)

    def to_json(self):
        return {"family": self.family, "m": self.m, "n": self.n}
