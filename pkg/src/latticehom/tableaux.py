"""Ribbons, fillings, tabloids, polytabloids and Young symmetrizers.

Ribbon rows are listed bottom to top and boxes are read left to right,
bottom to top.  The last box of each row sits directly below the first box
of the next row.  Young tableaux use English notation: rows top to bottom.
"""

from __future__ import annotations

import itertools
import json
import math
from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any

from .linear import LinComb
from .partitions import Partition, multiplicities, transposition

DEFAULT_GROUPSUM_CAP = 10**7

Tabloid = tuple[frozenset, ...]


class GroupSumCapError(ValueError):
    """A group-algebra expansion would exceed the configured cap."""


# --- shapes and fillings ----------------------------------------------------


@dataclass(frozen=True)
class RibbonShape:
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.rows or any(r < 1 for r in self.rows):
            raise ValueError(f"ribbon rows must be positive, got {self.rows}")

    def __str__(self) -> str:
        return "Rib(" + ",".join(map(str, self.rows)) + ")"

    @property
    def size(self) -> int:
        return sum(self.rows)

    @cached_property
    def row_starts(self) -> tuple[int, ...]:
        """Reading positions of the first box of every row except the bottom one."""
        return tuple(itertools.accumulate(self.rows[:-1]))

    @cached_property
    def row_positions(self) -> tuple[tuple[int, ...], ...]:
        cuts = (0, *self.row_starts, self.size)
        return tuple(tuple(range(a, b)) for a, b in zip(cuts, cuts[1:]))

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Columns as runs of reading positions, each listed bottom to top."""
        starts = set(self.row_starts)
        cols: list[list[int]] = [[0]]
        for p in range(1, self.size):
            if p in starts:
                cols[-1].append(p)
            else:
                cols.append([p])
        return tuple(tuple(c) for c in cols)

    @property
    def boxes_with_box_below(self) -> int:
        return len(self.rows) - 1


def ribbon_of(S: Iterable[int], n: int) -> RibbonShape:
    """``Rib(s_1, s_2 - s_1, ..., n - s_k)``."""
    S = sorted(S)
    if S and (S[0] < 1 or S[-1] >= n):
        raise ValueError(f"rank set {S} must lie inside 1..{n - 1}")
    cuts = [0, *S, n]
    return RibbonShape(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def whitney_ribbon(S: Iterable[int]) -> RibbonShape:
    """The ribbon of ``S`` minus its maximum, inside an interval of rank ``max S``."""
    S = sorted(S)
    return ribbon_of(S[:-1], S[-1])


@dataclass(frozen=True)
class RibbonFilling:
    shape: RibbonShape
    entries: tuple  # reading order

    def __post_init__(self) -> None:
        if len(self.entries) != self.shape.size:
            raise ValueError("filling size does not match its shape")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("filling entries must be distinct")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Hashable]]) -> RibbonFilling:
        """Build from rows listed bottom to top."""
        return cls(RibbonShape(tuple(len(r) for r in rows)), tuple(e for r in rows for e in r))

    @property
    def row_positions(self) -> tuple[tuple[int, ...], ...]:
        return self.shape.row_positions

    @property
    def column_positions(self) -> tuple[tuple[int, ...], ...]:
        return self.shape.columns

    @property
    def rows(self) -> list[tuple]:
        return [tuple(self.entries[p] for p in row) for row in self.shape.row_positions]

    def is_standard(self, key: Callable[[Any], Any] = lambda e: e) -> bool:
        """Rows increase left to right and columns increase top to bottom."""
        starts = set(self.shape.row_starts)
        e = [key(x) for x in self.entries]
        return all((e[p] < e[p - 1]) if p in starts else (e[p - 1] < e[p]) for p in range(1, len(e)))

    def merge_rows(self, i: int) -> RibbonFilling:
        """Append row ``i + 1`` to row ``i`` (rows counted from 1 at the bottom); the reading word is kept."""
        rows = list(self.shape.rows)
        if not 1 <= i < len(rows):
            raise ValueError(f"no rows {i} and {i + 1} to merge")
        rows[i - 1 : i + 1] = [rows[i - 1] + rows[i]]
        return RibbonFilling(RibbonShape(tuple(rows)), self.entries)

    def to_json(self, label: Callable[[Any], str] = str) -> dict[str, Any]:
        return {"shape": list(self.shape.rows), "rows": [[label(e) for e in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: str | dict[str, Any], parse: Callable[[str], Any] = lambda s: s) -> RibbonFilling:
        data = json.loads(data) if isinstance(data, str) else data
        f = cls.from_rows([[parse(x) for x in r] for r in data["rows"]])
        if list(f.shape.rows) != list(data["shape"]):
            raise ValueError("rows do not match the declared shape")
        return f


@dataclass(frozen=True)
class YoungTableau:
    """A filling of a partition shape, rows top to bottom."""

    rows_: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> YoungTableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows_)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(e for r in self.rows_ for e in r)

    @property
    def rows(self) -> list[tuple[int, ...]]:
        return list(self.rows_)

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows_ if len(r) > j) for j in range(len(self.rows_[0]))] if self.rows_ else []

    @cached_property
    def row_positions(self) -> tuple[tuple[int, ...], ...]:
        cuts = list(itertools.accumulate((0, *self.shape)))
        return tuple(tuple(range(a, b)) for a, b in zip(cuts, cuts[1:]))

    @cached_property
    def column_positions(self) -> tuple[tuple[int, ...], ...]:
        pos = self.row_positions
        return tuple(tuple(r[j] for r in pos if len(r) > j) for j in range(len(pos[0]))) if pos else ()

    def is_standard(self) -> bool:
        rows_ok = all(a < b for r in self.rows_ for a, b in zip(r, r[1:]))
        cols_ok = all(a < b for c in self.columns for a, b in zip(c, c[1:]))
        return rows_ok and cols_ok and sorted(self.entries) == list(range(1, len(self.entries) + 1))

    def descent_set(self) -> tuple[int, ...]:
        """``i`` is a descent when ``i + 1`` lies in a lower row than ``i``."""
        row_of = {e: k for k, r in enumerate(self.rows_) for e in r}
        return tuple(i for i in range(1, len(row_of)) if row_of[i + 1] > row_of[i])


def standard_tableaux(shape: Sequence[int], letters: Sequence[int] | None = None) -> list[YoungTableau]:
    """All standard tableaux of ``shape``, filled by ``letters`` (default ``1..n``) in order."""
    shape = tuple(shape)
    n = sum(shape)
    letters = tuple(range(1, n + 1)) if letters is None else tuple(sorted(letters))
    return [YoungTableau.of([[letters[e - 1] for e in r] for r in t]) for t in _syt(shape)]


@lru_cache(maxsize=None)
def _syt(shape: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for i, r in enumerate(shape):
        if r and (i + 1 == len(shape) or shape[i + 1] < r):
            smaller = list(shape)
            smaller[i] -= 1
            inner = tuple(p for p in smaller if p)
            for t in _syt(inner):
                rows = [list(row) for row in t] + [[] for _ in range(len(shape) - len(t))]
                rows[i].append(n)
                out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def syt_count(shape: Sequence[int]) -> int:
    """Hook length formula."""
    shape = tuple(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= r - j + conj[j] - i - 1
    return math.factorial(sum(shape)) // hooks


def syt_count_with_descent_set(lam: Sequence[int], S: Iterable[int]) -> int:
    S = tuple(sorted(S))
    return sum(1 for t in standard_tableaux(lam) if t.descent_set() == S)


# --- tabloids and polytabloids ----------------------------------------------


class TabloidVector(LinComb):
    """Linear combination of tabloids; a tabloid is a tuple of row sets."""


def tabloid_of(F: RibbonFilling | YoungTableau) -> Tabloid:
    return tuple(frozenset(F.entries[p] for p in row) for row in F.row_positions)


def _column_group(columns: Sequence[Sequence[int]]) -> Iterator[tuple[dict[int, int], int]]:
    """Pairs (position map, sign) over the product of symmetric groups on columns."""
    per_col = []
    for col in columns:
        col = list(col)
        per_col.append([(dict(zip(col, perm)), _perm_sign(perm, col)) for perm in itertools.permutations(col)])
    for combo in itertools.product(*per_col):
        mapping: dict[int, int] = {}
        sgn = 1
        for m, s in combo:
            mapping.update(m)
            sgn *= s
        yield mapping, sgn


def _perm_sign(perm: Sequence[int], base: Sequence[int]) -> int:
    pos = {b: i for i, b in enumerate(base)}
    idx = [pos[p] for p in perm]
    inversions = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return -1 if inversions % 2 else 1


def polytabloid(F: RibbonFilling | YoungTableau) -> TabloidVector:
    """Signed sum of the tabloids of all column permutations of ``F``."""
    entries = F.entries
    rows = F.row_positions
    out = TabloidVector()
    for mapping, sgn in _column_group(F.column_positions):
        moved = [entries[mapping.get(p, p)] for p in range(len(entries))]
        out.add_term(tuple(frozenset(moved[p] for p in row) for row in rows), sgn)
    return out


# --- the symmetric group action ---------------------------------------------


def letter_map(g: Sequence[int]) -> Callable[[Any], Any]:
    """Map a letter (1-based int) or a tuple of letters through the permutation ``g``."""

    def f(e: Any) -> Any:
        if isinstance(e, tuple):
            return tuple(sorted(g[i - 1] + 1 for i in e))
        return g[e - 1] + 1

    return f


def act(g: Sequence[int], x: Any, L: Any = None) -> Any:
    """Act by a letter permutation on a filling, tabloid vector or chain vector.

    With a lattice ``L``, filling entries are atom ids and tabloid rows are
    atom-id sets; otherwise entries are letters or tuples of letters.
    """
    if hasattr(x, "acted"):
        return x.acted(g, L)
    f = (lambda a, p=L.atom_perm(tuple(g)): p[a]) if L is not None else letter_map(g)
    if isinstance(x, RibbonFilling):
        return RibbonFilling(x.shape, tuple(f(e) for e in x.entries))
    if isinstance(x, YoungTableau):
        return YoungTableau.of([[f(e) for e in r] for r in x.rows_])
    if isinstance(x, TabloidVector):
        return x.map_keys(lambda t: tuple(frozenset(f(e) for e in row) for row in t))
    raise TypeError(f"cannot act on {type(x).__name__}")


def key_action(x: LinComb, L: Any = None) -> Callable[[tuple[int, ...], Hashable], Hashable]:
    """A function ``(g, key) -> key`` describing how permutations move basis keys of ``x``."""
    if hasattr(x, "key_action"):
        return x.key_action(L)
    if isinstance(x, TabloidVector):
        if L is None:
            def on_tabloid(g: tuple[int, ...], t: Hashable) -> Hashable:
                f = letter_map(g)
                return tuple(frozenset(f(e) for e in row) for row in t)  # type: ignore[union-attr]

            return on_tabloid
        cache: dict[tuple[int, ...], tuple[int, ...]] = {}

        def on_atom_tabloid(g: tuple[int, ...], t: Hashable) -> Hashable:
            p = cache.get(g)
            if p is None:
                p = cache[g] = L.atom_perm(g)
            return tuple(frozenset(p[a] for a in row) for row in t)  # type: ignore[union-attr]

        return on_atom_tabloid
    raise TypeError(f"no action on {type(x).__name__}")


def _symmetrize(v: LinComb, letters: Sequence[int], degree: int, move: Callable, sign: int) -> LinComb:
    """Apply ``sum_{s in Sym(letters)} sign(s)^k s`` using the coset factorization
    ``Sym_k = (e + sum_i (i k)) Sym_{k-1}``."""
    letters = list(letters)
    for k in range(1, len(letters)):
        new = v.scaled(1)
        for i in range(k):
            t = transposition(degree, letters[i] - 1, letters[k] - 1)
            for key, c in v.items():
                new.add_term(move(t, key), sign * c)
        v = new
    return v


def young_symmetrizer_apply(
    T: YoungTableau,
    v: LinComb,
    L: Any = None,
    *,
    degree: int | None = None,
    cap: int = DEFAULT_GROUPSUM_CAP,
) -> LinComb:
    """``b_T a_T v``: row symmetrizer first, then the signed column sum."""
    size = math.prod(math.factorial(len(r)) for r in T.rows) * math.prod(math.factorial(len(c)) for c in T.columns)
    if size > cap:
        raise GroupSumCapError(f"|Row_T|*|Col_T| = {size} exceeds the cap {cap}")
    if degree is None:
        degree = L.degree if L is not None else max(T.entries)
    move = key_action(v, L)
    for row in T.rows:
        v = _symmetrize(v, row, degree, move, 1)
    for col in T.columns:
        v = _symmetrize(v, col, degree, move, -1)
    return v


# --- swappable and ambiguous boxes -------------------------------------------


@dataclass(frozen=True)
class SwapReport:
    swappable_boxes: tuple[int, ...]
    ambiguous_boxes_a: tuple[int, ...]
    ambiguous_boxes_b: tuple[int, ...]

    @property
    def n_swappable(self) -> int:
        return len(self.swappable_boxes)

    @property
    def n_ambiguous(self) -> int:
        return len(self.ambiguous_boxes_a) + len(self.ambiguous_boxes_b)


def swappable_pairs(T: YoungTableau, u: Iterable[Iterable[int]]) -> list[tuple[int, int]]:
    """2-blocks of ``u`` whose letters both sit in the first row of ``T``."""
    first = set(T.rows[0]) if T.rows else set()
    return [tuple(sorted(b)) for b in map(tuple, u) if len(b) == 2 and set(b) <= first]  # type: ignore[misc]


def swappable_analysis(T: YoungTableau, u: Iterable[Iterable[int]], F: RibbonFilling, L: Any = None) -> SwapReport:
    """Classify each box of a chain filling as swappable or ambiguous (type a or b).

    Entries of ``F`` are pairs of letters, or atom ids of the partition lattice ``L``.
    """
    blocks = [tuple(sorted(b)) for b in u]
    block_of = {i: b for b in blocks for i in b}
    pairs = [_as_pair(e, L) for e in F.entries]
    _check_chain_filling(pairs, blocks)
    swap = set(swappable_pairs(T, blocks))
    s, a, b = [], [], []
    for pos, pair in enumerate(pairs):
        if pair in swap:
            s.append(pos)
        elif len(block_of[pair[0]]) > 2:
            a.append(pos)
        else:
            b.append(pos)
    return SwapReport(tuple(s), tuple(a), tuple(b))


def _as_pair(e: Any, L: Any) -> tuple[int, int]:
    if L is None:
        return tuple(sorted(e))  # type: ignore[return-value]
    key = L.keys[L.atoms[e]]
    return next(b for b in key if len(b) == 2)


def _check_chain_filling(pairs: Sequence[tuple[int, int]], blocks: Sequence[tuple[int, ...]]) -> None:
    """The atoms must build ``u`` one merge at a time."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for i, j in pairs:
        a, b = find(i), find(j)
        if a == b:
            raise ValueError(f"atom {i}{j} does not raise rank: not a chain filling")
        parent[a] = b
    got: dict[int, set[int]] = {}
    for i in {x for p in pairs for x in p}:
        got.setdefault(find(i), set()).add(i)
    if sorted(map(sorted, got.values())) != sorted(sorted(b) for b in blocks if len(b) > 1):
        raise ValueError("filling does not build the given set partition")


def column_with_two_swappable(shape: RibbonShape, swappable: Iterable[int]) -> tuple[int, ...] | None:
    s = set(swappable)
    for col in shape.columns:
        if len(s.intersection(col)) >= 2:
            return col
    return None


def sw_statistic(u: Iterable[Iterable[int]], S: Iterable[int]) -> int:
    """The swappable-pair counting statistic of a set partition ``u`` of rank ``max S``."""
    blocks = [tuple(b) for b in u]
    S = sorted(S)
    n = sum(len(b) for b in blocks)
    if n - len(blocks) != S[-1]:
        raise ValueError(f"rank of u is {n - len(blocks)}, expected max S = {S[-1]}")
    m = multiplicities([len(b) for b in blocks])
    size = sum(i * k for i, k in m.items() if i >= 2)
    first = 4 * S[-1] - len(S) + 2 - size
    big = sum(i * k for i, k in m.items() if i >= 3)
    return first - big - (size - first)
