"""
Permutations of {1..n} in one-line notation.

Products use one global convention: ``compose(v, w)`` applies `v` first,
so ``compose(v, w)[i-1] == w[v[i-1]-1]``.  Words ``s_{i1} s_{i2} ...`` are
evaluated left to right with this product.

>>> w = word_to_perm([2, 1], 3)
>>> jones_normal_form(w)
[(2, 1)]
>>> last_strand_factor(w)
((1, 2, 3), 1)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .coeffring import UsageError

__all__ = [
    "Perm", "identity", "perm", "compose", "inverse", "simple", "transposition",
    "word_to_perm", "reduced_word", "length", "last_strand_factor",
    "jones_normal_form", "tail_word", "all_perms", "embed_perm", "fixes_top",
]

# one-line notation: images of 1..n
Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm(images: Iterable[int]) -> Perm:
    """Validate and freeze a one-line permutation."""
    p = tuple(int(i) for i in images)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise UsageError(f"{list(p)} is not a permutation of 1..{len(p)}")
    return p


def compose(v: Perm, w: Perm) -> Perm:
    """The product v*w: apply v first, then w."""
    if len(v) != len(w):
        raise UsageError(f"size mismatch: {len(v)} vs {len(w)}")
    return tuple([w[i - 1] for i in v])


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w, 1):
        out[wi - 1] = i
    return tuple(out)


def simple(i: int, n: int) -> Perm:
    """The adjacent transposition s_i = (i i+1) in S_n."""
    if not 1 <= i < n:
        raise UsageError(f"s_{i} is not a generator of S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def transposition(i: int, k: int, n: int) -> Perm:
    """The transposition (i k) with i < k <= n."""
    if not 1 <= i < k <= n:
        raise UsageError(f"bad transposition ({i} {k}) in S_{n}")
    p = list(range(1, n + 1))
    p[i - 1], p[k - 1] = k, i
    return tuple(p)


def word_to_perm(word: Sequence[int], n: int) -> Perm:
    """Evaluate s_{w[0]} s_{w[1]} ... left to right."""
    p = identity(n)
    for i in word:
        p = compose(p, simple(i, n))
    return p


def length(w: Perm) -> int:
    """Coxeter length = number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def tail_word(n1: int, i: int) -> list[int]:
    """Letters of s_{n1-1} s_{n1-2} ... s_i, the tail ending on strand n1."""
    return list(range(n1 - 1, i - 1, -1))


def last_strand_factor(w: Perm) -> tuple[Perm, Optional[int]]:
    """
    Split w in S_{n+1} as w = w' * (s_n s_{n-1} ... s_i) with w' fixing n+1.

    Returns (w', i), or (w, None) when w already fixes n+1.  `w'` keeps the
    ambient size of `w`.
    """
    n1 = len(w)
    i = w[n1 - 1]
    if i == n1:
        return w, None
    tail = word_to_perm(tail_word(n1, i), n1)
    return compose(w, inverse(tail)), i


def fixes_top(w: Perm) -> bool:
    return w[-1] == len(w) if w else True


@lru_cache(maxsize=None)
def jones_normal_form(w: Perm) -> list[tuple[int, ...]]:
    """
    Descending runs whose product (left to right) is w.

    Each run is (top, top-1, ..., bottom); tops strictly increase from left
    to right.  Obtained by peeling the last strand repeatedly.
    """
    runs = []
    cur = w
    for top in range(len(w), 1, -1):
        sub = cur[:top]
        if sub[-1] != top:
            rest, i = last_strand_factor(sub)
            runs.append(tuple(tail_word(top, i)))
            cur = rest + cur[top:]
    runs.reverse()
    return runs


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    return tuple(i for run in jones_normal_form(w) for i in run)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """S_n sorted lexicographically by one-line notation."""
    return tuple(permutations(range(1, n + 1)))


def embed_perm(w: Perm, n: int) -> Perm:
    """View w in S_k as an element of S_n (n >= k) fixing k+1..n."""
    if n < len(w):
        raise UsageError(f"cannot embed S_{len(w)} into S_{n}")
    return w + tuple(range(len(w) + 1, n + 1))
