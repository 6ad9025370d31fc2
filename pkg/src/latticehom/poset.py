"""Finite bounded graded posets.

Elements live at dense integer indices, sorted by rank and then by a
canonical key.  Every poset also carries an order embedding into bitmasks
(``x <= y`` iff ``mask[x]`` is a subset of ``mask[y]``), which makes
comparability a single integer operation.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Hashable, Iterable, Sequence
from functools import cached_property
from typing import Any

Chain = tuple[int, ...]
Perm = tuple[int, ...]


class PosetError(ValueError):
    """Raised when an input violates a poset precondition."""


class _Sentinel:
    __slots__ = ("name",)

    def __init__(self, name: str) -> None:
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self) -> str:
        return self.name


BOTTOM = _Sentinel("BOTTOM")
TOP = _Sentinel("TOP")


class GradedPoset:
    """A finite bounded graded poset.

    ``keys`` are hashable element identities, ``labels`` their printable
    descriptors.  ``act`` (optional) maps ``(g, key) -> key`` for a
    permutation ``g`` of ``range(degree)``.
    """

    def __init__(
        self,
        keys: Sequence[Hashable],
        labels: Sequence[str],
        rank: Sequence[int],
        covers: Iterable[tuple[int, int]],
        masks: Sequence[int],
        *,
        act: Callable[[Perm, Hashable], Hashable] | None = None,
        degree: int = 0,
    ) -> None:
        self.keys: tuple[Hashable, ...] = tuple(keys)
        self.labels: tuple[str, ...] = tuple(labels)
        self.rank: tuple[int, ...] = tuple(rank)
        self.masks: tuple[int, ...] = tuple(masks)
        self.act = act
        self.degree = degree
        n = len(self.keys)
        if not (len(self.labels) == len(self.rank) == len(self.masks) == n):
            raise PosetError("keys, labels, rank and masks must have equal length")
        up: list[list[int]] = [[] for _ in range(n)]
        down: list[list[int]] = [[] for _ in range(n)]
        for x, y in covers:
            up[x].append(y)
            down[y].append(x)
        self.up: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(u)) for u in up)
        self.down: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(d)) for d in down)
        bottoms = [i for i in range(n) if self.rank[i] == 0]
        if len(bottoms) != 1:
            raise PosetError(f"expected one element of rank 0, found {len(bottoms)}")
        self.bottom = bottoms[0]
        self.height = max(self.rank)
        tops = [i for i in range(n) if self.rank[i] == self.height]
        if len(tops) != 1:
            raise PosetError(f"expected one element of top rank, found {len(tops)}")
        self.top = tops[0]
        self.index: dict[Hashable, int] = {k: i for i, k in enumerate(self.keys)}
        if len(self.index) != n:
            raise PosetError("element keys are not distinct")

    def __len__(self) -> int:
        return len(self.keys)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(elements={len(self)}, rank={self.height})"

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.height + 1)]
        for i, r in enumerate(self.rank):
            out[r].append(i)
        return tuple(tuple(level) for level in out)

    @property
    def covers(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(len(self)) for y in self.up[x]]

    def leq(self, x: int, y: int) -> bool:
        return self.masks[x] & ~self.masks[y] == 0

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def nontrivial_ranks(self) -> tuple[int, ...]:
        return tuple(range(1, self.height))

    def check_rank_set(self, S: Iterable[int]) -> tuple[int, ...]:
        S = tuple(S)
        if any(a >= b for a, b in zip(S, S[1:])):
            raise PosetError(f"rank set {S} is not strictly increasing")
        if S and (S[0] < 1 or S[-1] > self.height - 1):
            raise PosetError(f"rank set {S} is not inside 1..{self.height - 1}")
        return S

    def interval(self, x: int, y: int) -> list[int]:
        if not self.leq(x, y):
            raise PosetError(f"{self.labels[x]} is not below {self.labels[y]}")
        return [
            z
            for r in range(self.rank[x], self.rank[y] + 1)
            for z in self.levels[r]
            if self.leq(x, z) and self.leq(z, y)
        ]

    def above_at_rank(self, x: int, r: int) -> list[int]:
        """Elements of rank ``r`` that lie above ``x``."""
        frontier = {x}
        for _ in range(r - self.rank[x]):
            frontier = {y for z in frontier for y in self.up[z]}
        return sorted(frontier)

    def act_element(self, g: Perm, x: int) -> int:
        if self.act is None:
            raise PosetError("poset carries no group action")
        return self.index[self.act(g, self.keys[x])]

    def fixed_elements(self, g: Perm) -> list[int]:
        if self.act is None:
            raise PosetError("poset carries no group action")
        act, keys = self.act, self.keys
        return [i for i, k in enumerate(keys) if act(g, k) == k]

    def check_action(self, perms: Iterable[Perm]) -> None:
        """Exhaustively check that each permutation preserves rank and covers."""
        cover_set = set(self.covers)
        for g in perms:
            image = [self.act_element(g, x) for x in range(len(self))]
            if sorted(image) != list(range(len(self))):
                raise PosetError(f"{g} does not permute the elements")
            for x in range(len(self)):
                if self.rank[image[x]] != self.rank[x]:
                    raise PosetError(f"{g} does not preserve rank of {self.labels[x]}")
            for x, y in cover_set:
                if (image[x], image[y]) not in cover_set:
                    raise PosetError(f"{g} does not preserve the cover {x}<{y}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "elements": list(self.labels),
                "covers": [list(c) for c in self.covers],
                "rank": list(self.rank),
            }
        )

    @classmethod
    def from_json(cls, text: str | dict[str, Any]) -> GradedPoset:
        data = json.loads(text) if isinstance(text, str) else text
        return from_covers(data["elements"], data["covers"], data.get("rank"))


def from_covers(
    labels: Sequence[str],
    covers: Iterable[Sequence[int]],
    rank: Sequence[int] | None = None,
) -> GradedPoset:
    """Build a poset from labels and cover pairs, checking gradedness."""
    n = len(labels)
    cover_list = [(int(a), int(b)) for a, b in covers]
    up: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in cover_list:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise PosetError(f"bad cover pair {(a, b)}")
        up[a].append(b)
        indeg[b] += 1
    # topological order doubles as an acyclicity check
    order = [i for i in range(n) if indeg[i] == 0]
    deg = indeg[:]
    for x in order:
        for y in up[x]:
            deg[y] -= 1
            if deg[y] == 0:
                order.append(y)
    if len(order) != n:
        raise PosetError("cover relation has a cycle")
    computed = [0] * n
    for x in order:
        for y in up[x]:
            computed[y] = max(computed[y], computed[x] + 1)
    for a, b in cover_list:
        if computed[b] != computed[a] + 1:
            raise PosetError(f"poset is not graded at cover {(a, b)}")
    if rank is not None and list(rank) != computed:
        raise PosetError("given ranks disagree with the cover relation")
    masks = [1 << i for i in range(n)]
    for x in order:
        for y in up[x]:
            masks[y] |= masks[x]
    return GradedPoset(labels, labels, computed, cover_list, masks)


def rank_selected_subposet(P: GradedPoset, S: Iterable[int]) -> GradedPoset:
    """The subposet at ranks ``S``, re-bounded by fresh sentinels.

    The element at the ``i``-th selected rank gets rank ``i``.  Original
    keys are kept, so ``origin`` recovers the index in ``P``.
    """
    S = P.check_rank_set(S)
    middle = [x for r in S for x in P.levels[r]]
    full = 0
    for x in middle:
        full |= P.masks[x]
    full |= P.masks[P.top]
    keys: list[Hashable] = [BOTTOM] + [P.keys[x] for x in middle] + [TOP]
    labels = ["0^"] + [P.labels[x] for x in middle] + ["1^"]
    rank = [0] + [S.index(P.rank[x]) + 1 for x in middle] + [len(S) + 1]
    masks = [0] + [P.masks[x] for x in middle] + [full]
    new = {x: i + 1 for i, x in enumerate(middle)}
    top = len(middle) + 1
    covers: list[tuple[int, int]] = []
    if not S:
        covers.append((0, top))
    else:
        covers += [(0, new[x]) for x in P.levels[S[0]]]
        covers += [(new[x], top) for x in P.levels[S[-1]]]
        for lo, hi in zip(S, S[1:]):
            for x in P.levels[lo]:
                covers += [(new[x], new[y]) for y in P.above_at_rank(x, hi)]
    act = None
    if P.act is not None:
        base = P.act

        def act(g: Perm, key: Hashable) -> Hashable:
            return key if key is BOTTOM or key is TOP else base(g, key)

    Q = GradedPoset(keys, labels, rank, covers, masks, act=act, degree=P.degree)
    Q.origin = (None, *middle, None)  # type: ignore[attr-defined]
    Q.parent = P  # type: ignore[attr-defined]
    Q.selected = S  # type: ignore[attr-defined]
    return Q


def chains_with_rank_set(P: GradedPoset, T: Iterable[int]) -> list[Chain]:
    """All chains of ``P`` whose rank set is exactly ``T``, in lex order."""
    T = P.check_rank_set(T)
    if not T:
        return [()]
    chains: list[Chain] = [(x,) for x in P.levels[T[0]]]
    for r in T[1:]:
        chains = [c + (y,) for c in chains for y in P.above_at_rank(c[-1], r)]
    return chains


def maximal_chains(P: GradedPoset, lo: int | None = None, hi: int | None = None) -> list[Chain]:
    """Saturated chains from ``lo`` to ``hi`` (default the bounds), endpoints excluded."""
    lo = P.bottom if lo is None else lo
    hi = P.top if hi is None else hi
    if not P.leq(lo, hi):
        raise PosetError(f"{P.labels[lo]} is not below {P.labels[hi]}")
    out: list[Chain] = []
    top_mask = P.masks[hi]

    def walk(x: int, acc: list[int]) -> None:
        for y in P.up[x]:
            if y == hi:
                out.append(tuple(acc))
            elif P.masks[y] & ~top_mask == 0:
                acc.append(y)
                walk(y, acc)
                acc.pop()

    if lo == hi:
        return [()]
    walk(lo, [])
    return out


def mobius(P: GradedPoset, x: int, y: int) -> int:
    """Möbius function ``mu(x, y)`` by the defining recursion."""
    elems = P.interval(x, y)
    mu: dict[int, int] = {}
    for z in elems:
        if z == x:
            mu[z] = 1
        else:
            mu[z] = -sum(v for w, v in mu.items() if P.leq(w, z))
    return mu[y]


def chain_is_valid(P: GradedPoset, chain: Sequence[int]) -> bool:
    return all(P.rank[a] < P.rank[b] and P.leq(a, b) for a, b in zip(chain, chain[1:]))
