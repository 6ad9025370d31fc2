"""Integer partitions, compositions and permutation helpers."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

Partition = tuple[int, ...]


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, largest first."""
    return list(_partitions(n, n if max_part is None else max_part))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        out += [(first,) + rest for rest in _partitions(n - first, first)]
    return tuple(out)


def multiplicities(lam: Sequence[int]) -> dict[int, int]:
    """``m_i``: the number of parts equal to ``i``."""
    return dict(Counter(lam))


def conjugate(lam: Sequence[int]) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def z_lambda(lam: Sequence[int]) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    out = 1
    for part, m in Counter(lam).items():
        out *= part**m * math.factorial(m)
    return out


def class_size(lam: Sequence[int]) -> int:
    return math.factorial(sum(lam)) // z_lambda(lam)


def cycle_type(g: Sequence[int]) -> Partition:
    seen = [False] * len(g)
    lengths = []
    for i in range(len(g)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def permutation_of_type(lam: Sequence[int]) -> tuple[int, ...]:
    """A permutation of ``range(|lam|)`` with consecutive cycles of the given lengths."""
    g = []
    start = 0
    for part in lam:
        g += [start + (k + 1) % part for k in range(part)]
        start += part
    return tuple(g)


def sign(g: Sequence[int]) -> int:
    return -1 if (len(g) - len(cycle_type(g))) % 2 else 1


def compose(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    """``g * h``: apply ``h`` first."""
    return tuple(g[h[i]] for i in range(len(h)))


def inverse(g: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[gi] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    g = list(range(n))
    g[i], g[j] = j, i
    return tuple(g)


def composition_of(S: Iterable[int], n: int) -> tuple[int, ...]:
    """Gaps ``(s_1, s_2 - s_1, ..., n - s_k)`` of a rank set inside ``[n]``."""
    S = sorted(S)
    cuts = [0, *S, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_set(word: Sequence) -> tuple[int, ...]:
    """Positions ``i`` (1-based) with ``word[i-1] > word[i]``."""
    return tuple(i for i in range(1, len(word)) if word[i - 1] > word[i])


def subsets(S: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for r in range(len(S) + 1):
        yield from itertools.combinations(S, r)


def permutations_with_descent_set(n: int, S: Iterable[int]) -> int:
    """Brute-force count of permutations of ``[n]`` with descent set exactly ``S``."""
    S = tuple(sorted(S))
    return sum(1 for w in itertools.permutations(range(n)) if descent_set(w) == S)


def parse_partition_text(text: str) -> Partition:
    parts = tuple(int(t) for t in text.replace("(", "").replace(")", "").split(",") if t.strip())
    return tuple(sorted(parts, reverse=True))


def partition_text(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam))
