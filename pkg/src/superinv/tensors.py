"""Sparse tensors over End(V)^(x k) and V^(x k), with all Koszul signs.

A ``Tensor`` is a sparse element of End(V)^(x k); its keys are k-tuples of
(row, col) index pairs, so the key ((r1,c1),...,(rk,ck)) stands for the
product word e_{r1 c1} x ... x e_{rk ck} of matrix units.  A
``VectorTensor`` is a sparse element of V^(x k) keyed by k-tuples of
indices.  Zero coefficients are never stored, and k = 0 is legal (the key
is the empty tuple and the element is a scalar).

The product of tensor factors follows the superalgebra rule

    (a1 x b1) . (a2 x b2) = (-1)^{|a2||b1|} (a1 a2) x (b1 b2),

and a Tensor acts on V^(x k) by

    (a1 x...x ak)(v1 x...x vk)
        = (-1)^{sum_s |a_s| (|v1|+...+|v_{s-1}|)} (a1 v1 x...x ak vk),

which makes ``apply(compose(A, B), v) == apply(A, apply(B, v))``.

The symmetric group acts by signed place permutation:
    sigma . (v1 x...x vk)
        = gamma(v, sigma^{-1}) (v_{sigma^{-1}(1)} x...x v_{sigma^{-1}(k)}).
"""

from __future__ import annotations

from .scalars import ONE, Scalar, promote
from .signs import Permutation, gamma_exponent
from .spaces import SuperSpace


class _Sparse:
    """Shared sparse-linear-combination behaviour for both tensor kinds."""

    __slots__ = ("space", "k", "entries")

    def __init__(self, space: SuperSpace, k: int, entries=None):
        self.space = space
        self.k = k
        data = {}
        if entries:
            for key, coeff in entries.items() if hasattr(entries, "items") else entries:
                coeff = promote(coeff)
                if coeff:
                    acc = data.get(key)
                    if acc is None:
                        data[key] = coeff
                    else:
                        acc = acc + coeff
                        if acc:
                            data[key] = acc
                        else:
                            del data[key]
        self.entries = data

    def _check_compatible(self, other):
        if self.space != other.space or self.k != other.k:
            raise ValueError("degree/space mismatch")

    def __add__(self, other):
        self._check_compatible(other)
        data = dict(self.entries)
        for key, coeff in other.entries.items():
            acc = data.get(key)
            if acc is None:
                data[key] = coeff
            else:
                acc = acc + coeff
                if acc:
                    data[key] = acc
                else:
                    del data[key]
        out = object.__new__(type(self))
        out.space, out.k, out.entries = self.space, self.k, data
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(Scalar(-1))

    def scale(self, coeff):
        coeff = promote(coeff)
        out = object.__new__(type(self))
        out.space, out.k = self.space, self.k
        if not coeff:
            out.entries = {}
        else:
            out.entries = {key: c * coeff for key, c in self.entries.items()}
        return out

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.space == other.space
            and self.k == other.k
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.space, self.k, frozenset(self.entries.items())))

    def coefficient(self, key) -> Scalar:
        return self.entries.get(key, Scalar(0))

    def __repr__(self):
        if not self.entries:
            return "%s<0>" % type(self).__name__
        parts = ["%r:%r" % (k, c) for k, c in sorted(self.entries.items())]
        return "%s<%s>" % (type(self).__name__, ", ".join(parts))


class Tensor(_Sparse):
    """Sparse element of End(V)^(x k)."""

    def key_parity(self, key) -> int:
        par = self.space._parity
        return sum(par[r] + par[c] for r, c in key) & 1

    def parity(self):
        """Total parity if homogeneous, else None."""
        parities = {self.key_parity(key) for key in self.entries}
        if not parities:
            return 0
        if len(parities) == 1:
            return parities.pop()
        return None

    def parity_components(self):
        """Split into (even part, odd part)."""
        even, odd = {}, {}
        for key, coeff in self.entries.items():
            (even if self.key_parity(key) == 0 else odd)[key] = coeff
        return Tensor(self.space, self.k, even), Tensor(self.space, self.k, odd)

    def to_json(self):
        entries = []
        for key in sorted(self.entries):
            entries.append(
                {"key": [[r, c] for r, c in key], "coeff": self.entries[key].to_json()}
            )
        return {"k": self.k, "space": self.space.to_json(), "entries": entries}


class VectorTensor(_Sparse):
    """Sparse element of V^(x k)."""

    def key_parity(self, key) -> int:
        return self.space.word_parity(key)

    def to_json(self):
        entries = []
        for key in sorted(self.entries):
            entries.append({"key": list(key), "coeff": self.entries[key].to_json()})
        return {"k": self.k, "space": self.space.to_json(), "entries": entries}


# -- constructors ----------------------------------------------------------


def matrix_unit(space: SuperSpace, i: int, j: int) -> Tensor:
    return Tensor(space, 1, {((i, j),): ONE})


def identity_tensor(space: SuperSpace, k: int) -> Tensor:
    if k == 0:
        return Tensor(space, 0, {(): ONE})
    keys = [()]
    for _ in range(k):
        keys = [key + ((d, d),) for key in keys for d in space.indices]
    return Tensor(space, k, {key: ONE for key in keys})


def basis_vector(space: SuperSpace, word) -> VectorTensor:
    word = tuple(word)
    return VectorTensor(space, len(word), {word: ONE})


# -- the operations --------------------------------------------------------


def compose(a: Tensor, b: Tensor) -> Tensor:
    """The product of a and b in the superalgebra End(V)^(x k)."""
    a._check_compatible(b)
    par = a.space._parity
    out = {}
    for ka, va in a.entries.items():
        apar = tuple((par[r] + par[c]) & 1 for r, c in ka)
        for kb, vb in b.entries.items():
            key = []
            for (ra, ca), (rb, cb) in zip(ka, kb):
                if ca != rb:
                    key = None
                    break
                key.append((ra, cb))
            if key is None:
                continue
            # sign: each b_t crosses a_s for t < s
            exp = 0
            run = 0
            for s in range(a.k):
                if s > 0:
                    rb, cb = kb[s - 1]
                    run ^= (par[rb] + par[cb]) & 1
                if apar[s] and run:
                    exp ^= 1
            coeff = va * vb if not exp else -(va * vb)
            key = tuple(key)
            acc = out.get(key)
            if acc is None:
                if coeff:
                    out[key] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    result = object.__new__(Tensor)
    result.space, result.k, result.entries = a.space, a.k, out
    return result


def apply(a: Tensor, v: VectorTensor) -> VectorTensor:
    """Act with a on v, with the Koszul signs of the module structure."""
    if a.space != v.space or a.k != v.k:
        raise ValueError("degree/space mismatch")
    par = a.space._parity
    out = {}
    for ka, va in a.entries.items():
        apar = tuple((par[r] + par[c]) & 1 for r, c in ka)
        for kv, vv in v.entries.items():
            ok = True
            for (r, c), i in zip(ka, kv):
                if c != i:
                    ok = False
                    break
            if not ok:
                continue
            exp = 0
            run = 0
            for s in range(a.k):
                if s > 0:
                    run ^= par[kv[s - 1]]
                if apar[s] and run:
                    exp ^= 1
            coeff = va * vv if not exp else -(va * vv)
            key = tuple(r for r, _ in ka)
            acc = out.get(key)
            if acc is None:
                if coeff:
                    out[key] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[key] = acc
                else:
                    del out[key]
    result = object.__new__(VectorTensor)
    result.space, result.k, result.entries = v.space, v.k, out
    return result


def supertrace(a: Tensor) -> Scalar:
    """Str on End(V): e_ij -> (-1)^{|i|} delta_ij, extended linearly."""
    if a.k != 1:
        raise ValueError("supertrace requires k = 1")
    total = Scalar(0)
    par = a.space._parity
    for ((r, c),), coeff in a.entries.items():
        if r == c:
            total = total + (coeff if par[r] == 0 else -coeff)
    return total


def partial_supertrace(a: Tensor, pos: int) -> Tensor:
    """Supertrace on the pos-th factor (1-based), identity on the rest."""
    if not 1 <= pos <= a.k:
        raise ValueError("position out of range")
    par = a.space._parity
    out = {}
    for key, coeff in a.entries.items():
        r, c = key[pos - 1]
        if r != c:
            continue
        coeff = coeff if par[r] == 0 else -coeff
        new_key = key[: pos - 1] + key[pos:]
        acc = out.get(new_key)
        if acc is None:
            out[new_key] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[new_key] = acc
            else:
                del out[new_key]
    return Tensor(a.space, a.k - 1, out)


def full_supertrace(a: Tensor) -> Scalar:
    """Str_{1..k}: iterate the partial supertrace over every position."""
    t = a
    while t.k > 0:
        t = partial_supertrace(t, t.k)
    return t.coefficient(())


def supertranspose(a: Tensor) -> Tensor:
    """Slotwise e_ij -> (-1)^{(|i|+|j|)|i|} e_ji; a super anti-automorphism."""
    par = a.space._parity
    out = {}
    for key, coeff in a.entries.items():
        exp = 0
        new_key = []
        for r, c in key:
            exp ^= ((par[r] + par[c]) & par[r]) & 1
            new_key.append((c, r))
        out[tuple(new_key)] = coeff if not exp else -coeff
    return Tensor(a.space, a.k, out)


def permute_word(sigma: Permutation, w):
    """The signed place-permutation action of sigma on a (Vector)Tensor."""
    if sigma.size != w.k:
        raise ValueError("degree mismatch")
    inv = sigma.inverse()
    out = {}
    if isinstance(w, VectorTensor):
        parities = w.space._parity
        slot_parity = lambda slot: parities[slot]
    else:
        parities = w.space._parity
        slot_parity = lambda slot: (parities[slot[0]] + parities[slot[1]]) & 1
    for key, coeff in w.entries.items():
        word_par = tuple(slot_parity(slot) for slot in key)
        exp = gamma_exponent(word_par, inv)
        new_key = tuple(key[inv(t) - 1] for t in range(1, w.k + 1))
        coeff = coeff if not exp else -coeff
        acc = out.get(new_key)
        if acc is None:
            out[new_key] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[new_key] = acc
            else:
                del out[new_key]
    return type(w)(w.space, w.k, out)


def permute_indices(space: SuperSpace, sigma: Permutation, word):
    """sigma . e_word as (new_word, sign exponent); the kernel of permute_word."""
    inv = sigma.inverse()
    par = tuple(space._parity[i] for i in word)
    exp = gamma_exponent(par, inv)
    new_word = tuple(word[inv(t) - 1] for t in range(1, len(word) + 1))
    return new_word, exp


def dense_matrix(a: Tensor):
    """Map each basis word of V^(x k) through a; the independent oracle view.

    Returns a dict basis-word -> VectorTensor so operator identities can be
    checked column by column without going through ``compose``.
    """
    import itertools

    cols = {}
    for word in itertools.product(a.space.indices, repeat=a.k):
        cols[word] = apply(a, basis_vector(a.space, word))
    return cols
