"""Geometric lattices: Boolean lattices, partition lattices, lattices of flats.

A geometric lattice is stored as a :class:`GradedPoset` whose order masks
are atom bitmasks: bit ``i`` of ``masks[x]`` is set when atom ``i`` lies
below ``x``.  Joins are closures of unions of masks.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Hashable, Iterable, Sequence
from functools import lru_cache
from typing import Any

from .poset import GradedPoset, Perm, PosetError, rank_selected_subposet

BOOLEAN_MAX_N = 12
PARTITION_MAX_N = 10
MAX_FLATS = 1 << 16

SetPartition = tuple[tuple[int, ...], ...]


class GuardError(PosetError):
    """A desk-scale size guard was exceeded."""


class MatroidError(ValueError):
    """Matroid axioms fail; ``witness`` holds the offending sets."""

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class GeometricLattice(GradedPoset):
    """A geometric lattice with atoms, closure and an ordering of the atoms."""

    def __init__(
        self,
        keys: Sequence[Hashable],
        labels: Sequence[str],
        rank: Sequence[int],
        covers: Iterable[tuple[int, int]],
        masks: Sequence[int],
        *,
        closure: Callable[[int], int],
        atom_labels: Sequence[str],
        act: Callable[[Perm, Hashable], Hashable] | None = None,
        degree: int = 0,
        atom_order: Sequence[int] | None = None,
        name: str = "",
    ) -> None:
        super().__init__(keys, labels, rank, covers, masks, act=act, degree=degree)
        self.closure = closure
        self.atom_labels: tuple[str, ...] = tuple(atom_labels)
        self.by_mask: dict[int, int] = {m: i for i, m in enumerate(self.masks)}
        self.atoms: tuple[int, ...] = tuple(self.by_mask[1 << a] for a in range(len(self.atom_labels)))
        self.name = name
        self.set_atom_order(atom_order)

    def set_atom_order(self, order: Sequence[int] | None) -> None:
        """Fix the total order on atoms; ``order`` lists atom ids from least to greatest."""
        m = len(self.atom_labels)
        order = tuple(range(m)) if order is None else tuple(order)
        if sorted(order) != list(range(m)):
            raise PosetError("atom order must be a permutation of the atoms")
        self.atom_order = order
        self.atom_pos: tuple[int, ...] = tuple(order.index(a) for a in range(m))

    def with_atom_order(self, order: Sequence[int]) -> GeometricLattice:
        """A shallow copy sharing all structure but using another atom order."""
        twin = object.__new__(GeometricLattice)
        twin.__dict__.update(self.__dict__)
        twin.set_atom_order(order)
        return twin

    @property
    def n_atoms(self) -> int:
        return len(self.atom_labels)

    def atom_id(self, label: str) -> int:
        return self.atom_labels.index(label)

    def element(self, key: Hashable) -> int:
        return self.index[key]

    def join_mask(self, mask: int) -> int:
        return self.by_mask[self.closure(mask)]

    def min_atom(self, mask: int) -> int:
        """The least atom (in the atom order) among the bits of ``mask``."""
        pos = self.atom_pos
        return min(_bits(mask), key=pos.__getitem__)

    def atom_perm(self, g: Perm) -> tuple[int, ...]:
        """The permutation of atoms induced by a permutation of letters."""
        return tuple(self.atoms.index(self.act_element(g, a)) for a in self.atoms)


def join(P: GradedPoset, xs: Iterable[int]) -> int:
    """Least upper bound of a set of elements."""
    xs = list(xs)
    if isinstance(P, GeometricLattice):
        m = 0
        for x in xs:
            m |= P.masks[x]
        return P.join_mask(m)
    need = 0
    for x in xs:
        need |= P.masks[x]
    bounds = [z for z in range(len(P)) if need & ~P.masks[z] == 0]
    least = [z for z in bounds if all(P.leq(z, w) for w in bounds)]
    if len(least) != 1:
        raise PosetError("no unique least upper bound: not a lattice")
    return least[0]


def meet(P: GradedPoset, xs: Iterable[int]) -> int:
    xs = list(xs)
    lower = [z for z in range(len(P)) if all(P.leq(z, x) for x in xs)]
    greatest = [z for z in lower if all(P.leq(w, z) for w in lower)]
    if len(greatest) != 1:
        raise PosetError("no unique greatest lower bound: not a lattice")
    return greatest[0]


def check_geometric(P: GradedPoset) -> None:
    """Exhaustively verify the lattice, atomic and semimodular properties.

    Joins are found from upper-bound sets, not from stored closures, so this
    is independent of how the lattice was built.
    """
    n = len(P)
    atoms = [a for a in range(n) if P.rank[a] == 1]
    upper = [frozenset(z for z in range(n) if P.leq(x, z)) for x in range(n)]
    for x in range(n):
        below = [a for a in atoms if P.leq(a, x)]
        if x != P.bottom and _least(P, upper, below) != x:
            raise PosetError(f"{P.labels[x]} is not a join of atoms")
    for x in range(n):
        for y in range(x + 1, n):
            j = _least(P, upper, [x, y])
            lower = [z for z in range(n) if P.leq(z, x) and P.leq(z, y)]
            m = [z for z in lower if all(P.leq(w, z) for w in lower)]
            if len(m) != 1:
                raise PosetError("meet is not unique")
            if P.rank[x] + P.rank[y] < P.rank[j] + P.rank[m[0]]:
                raise PosetError(f"semimodularity fails at {P.labels[x]}, {P.labels[y]}")


def _least(P: GradedPoset, upper: list[frozenset[int]], xs: list[int]) -> int:
    common = frozenset(range(len(P)))
    for x in xs:
        common &= upper[x]
    least = [z for z in common if common <= upper[z]]
    if len(least) != 1:
        raise PosetError("no unique least upper bound: not a lattice")
    return least[0]


# --- Boolean lattices -------------------------------------------------------


def _subset_label(key: tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, key)) + "}"


def _act_subset(g: Perm, key: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(g[i - 1] + 1 for i in key))


def boolean_lattice(n: int, *, max_n: int = BOOLEAN_MAX_N) -> GeometricLattice:
    """Subsets of ``{1..n}`` ordered by inclusion, with the letter action."""
    if n < 1 or n > max_n:
        raise GuardError(f"boolean_lattice needs 1 <= n <= {max_n}, got {n}")
    keys = sorted(
        (c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)),
        key=lambda c: (len(c), c),
    )
    idx = {k: i for i, k in enumerate(keys)}
    masks = [sum(1 << (i - 1) for i in k) for k in keys]
    covers = [(idx[k], idx[tuple(sorted(k + (j,)))]) for k in keys for j in range(1, n + 1) if j not in k]
    return GeometricLattice(
        keys,
        [_subset_label(k) for k in keys],
        [len(k) for k in keys],
        covers,
        masks,
        closure=lambda m: m,
        atom_labels=[str(i) for i in range(1, n + 1)],
        act=_act_subset,
        degree=n,
        name=f"B_{n}",
    )


# --- partition lattices -----------------------------------------------------


def canonical_partition(blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Sorted blocks with sorted entries, ordered by least element."""
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


def set_partitions(letters: Sequence[int]) -> list[SetPartition]:
    """All set partitions of ``letters`` in canonical form."""
    if not letters:
        return [()]
    first, rest = letters[0], letters[1:]
    out = []
    for p in set_partitions(rest):
        out.append(canonical_partition(((first,),) + p))
        for i in range(len(p)):
            out.append(canonical_partition(p[:i] + ((first,) + p[i],) + p[i + 1 :]))
    return out


def parse_partition(text: str, n: int | None = None) -> SetPartition:
    """Read ``"|128|67|45|3|"`` or ``"|1,2|3|"``; missing letters become singletons."""
    blocks = [b for b in text.strip().strip("|").split("|") if b]
    parsed = [tuple(int(t) for t in b.split(",")) if "," in b else tuple(int(c) for c in b) for b in blocks]
    used = {i for b in parsed for i in b}
    if n is not None:
        parsed += [(i,) for i in range(1, n + 1) if i not in used]
    return canonical_partition(parsed)


def partition_label(key: SetPartition) -> str:
    wide = any(i >= 10 for b in key for i in b)
    sep = "," if wide else ""
    return "|" + "|".join(sep.join(map(str, b)) for b in key) + "|"


def short_partition_label(key: SetPartition) -> str:
    """Label listing only the non-singleton blocks, e.g. ``|12|56|``."""
    big = tuple(b for b in key if len(b) > 1)
    return partition_label(big) if big else "|"


def _act_partition(g: Perm, key: SetPartition) -> SetPartition:
    return canonical_partition([g[i - 1] + 1 for i in b] for b in key)


def _pair_label(i: int, j: int, n: int) -> str:
    return f"{i},{j}" if n >= 10 else f"{i}{j}"


def partition_lattice(n: int, *, max_n: int = PARTITION_MAX_N) -> GeometricLattice:
    """Set partitions of ``{1..n}`` under reverse refinement."""
    if n < 2 or n > max_n:
        raise GuardError(f"partition_lattice needs 2 <= n <= {max_n}, got {n}")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    pair_bit = {p: 1 << k for k, p in enumerate(pairs)}
    keys = sorted(set_partitions(list(range(1, n + 1))), key=lambda p: (-len(p), p))
    idx = {k: i for i, k in enumerate(keys)}

    def mask_of(key: SetPartition) -> int:
        return sum(pair_bit[p] for b in key for p in itertools.combinations(b, 2))

    masks = [mask_of(k) for k in keys]
    covers = []
    for k in keys:
        for a, b in itertools.combinations(range(len(k)), 2):
            merged = canonical_partition(k[:a] + k[a + 1 : b] + k[b + 1 :] + (k[a] + k[b],))
            covers.append((idx[k], idx[merged]))

    @lru_cache(maxsize=None)
    def closure(mask: int) -> int:
        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in _bits(mask):
            i, j = pairs[k]
            parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(1, n + 1):
            groups.setdefault(find(i), []).append(i)
        return mask_of(tuple(tuple(v) for v in groups.values()))

    return GeometricLattice(
        keys,
        [partition_label(k) for k in keys],
        [n - len(k) for k in keys],
        covers,
        masks,
        closure=closure,
        atom_labels=[_pair_label(i, j, n) for i, j in pairs],
        act=_act_partition,
        degree=n,
        name=f"Pi_{n}",
    )


def atom_order(L: GeometricLattice, choice: str | Sequence[str]) -> tuple[int, ...]:
    """Atom ids from least to greatest.

    ``choice`` is ``"natural"``, ``"reverse"``, ``"colex"`` (pair atoms ``ij`` of a
    partition lattice compared by ``j`` first), or atom labels separated by
    commas (semicolons or spaces when labels contain commas).
    """
    m = L.n_atoms
    if isinstance(choice, str):
        if choice == "natural":
            return tuple(range(m))
        if choice == "reverse":
            return tuple(reversed(range(m)))
        if choice == "colex":
            pairs = [tuple(int(t) for t in (lab.split(",") if "," in lab else lab)) for lab in L.atom_labels]
            if any(len(p) != 2 for p in pairs):
                raise PosetError("colex order needs pair atoms")
            return tuple(sorted(range(m), key=lambda a: pairs[a][::-1]))
        sep = ";" if ";" in choice else (" " if " " in choice.strip() else ",")
        choice = [t.strip() for t in choice.split(sep) if t.strip()]
    order = tuple(L.atom_id(lab) for lab in choice)
    if sorted(order) != list(range(m)):
        raise PosetError("atom order must list every atom exactly once")
    return order


def partition_element(L: GeometricLattice, text: str) -> int:
    """Look up an element of a partition lattice from ``"|128|67|"`` notation."""
    return L.index[parse_partition(text, L.degree)]


# --- matroids ---------------------------------------------------------------


class Matroid:
    """A matroid on an ordered ground set, given by bases, circuits or a rank function."""

    def __init__(
        self,
        ground: Sequence[str],
        *,
        bases: Iterable[Iterable[str]] | None = None,
        circuits: Iterable[Iterable[str]] | None = None,
        rank_function: Callable[[frozenset[str]], int] | None = None,
        validate: bool = True,
    ) -> None:
        self.ground: tuple[str, ...] = tuple(str(g) for g in ground)
        if len(set(self.ground)) != len(self.ground):
            raise MatroidError("ground set has repeated labels")
        self._pos = {g: i for i, g in enumerate(self.ground)}
        given = [x is not None for x in (bases, circuits, rank_function)]
        if sum(given) != 1:
            raise MatroidError("give exactly one of bases, circuits, rank_function")
        self._bases: list[int] | None = None
        self._circuits: list[int] | None = None
        self._rank_fn = rank_function
        if bases is not None:
            self._bases = sorted({self._mask(b) for b in bases})
            if validate:
                self._check_bases()
        elif circuits is not None:
            self._circuits = sorted({self._mask(c) for c in circuits})
            if validate:
                self._check_circuits()
        self.rank_of = lru_cache(maxsize=None)(self._rank)

    def _mask(self, subset: Iterable[str]) -> int:
        m = 0
        for e in subset:
            e = str(e)
            if e not in self._pos:
                raise MatroidError(f"unknown ground element {e!r}")
            m |= 1 << self._pos[e]
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ground[i] for i in _bits(mask))

    def _check_bases(self) -> None:
        B = self._bases
        assert B is not None
        if not B:
            raise MatroidError("a matroid needs at least one basis")
        sizes = {bin(b).count("1") for b in B}
        if len(sizes) != 1:
            raise MatroidError("bases are not equicardinal", witness=sizes)
        bset = set(B)
        for b1 in B:
            for b2 in B:
                for x in _bits(b1 & ~b2):
                    if not any((b1 & ~(1 << x)) | (1 << y) in bset for y in _bits(b2 & ~b1)):
                        raise MatroidError(
                            "basis exchange fails",
                            witness=(self.labels_of(b1), self.labels_of(b2)),
                        )

    def _check_circuits(self) -> None:
        C = self._circuits
        assert C is not None
        if 0 in C:
            raise MatroidError("the empty set is not a circuit")
        for c1 in C:
            for c2 in C:
                if c1 != c2 and c1 & c2 == c1:
                    raise MatroidError("circuits are not incomparable", witness=(self.labels_of(c1), self.labels_of(c2)))
        cset = C
        for c1, c2 in itertools.combinations(C, 2):
            for e in _bits(c1 & c2):
                rest = (c1 | c2) & ~(1 << e)
                if not any(c & ~rest == 0 for c in cset):
                    raise MatroidError(
                        "circuit elimination fails",
                        witness=(self.labels_of(c1), self.labels_of(c2)),
                    )

    def _rank(self, mask: int) -> int:
        if self._bases is not None:
            return max(bin(mask & b).count("1") for b in self._bases)
        if self._circuits is not None:
            indep = 0
            for i in _bits(mask):
                trial = indep | (1 << i)
                if not any(c & ~trial == 0 for c in self._circuits):
                    indep = trial
            return bin(indep).count("1")
        assert self._rank_fn is not None
        return self._rank_fn(frozenset(self.labels_of(mask)))

    def rank(self, subset: Iterable[str] | None = None) -> int:
        mask = (1 << len(self.ground)) - 1 if subset is None else self._mask(subset)
        return self.rank_of(mask)

    def closure_mask(self, mask: int) -> int:
        r = self.rank_of(mask)
        for i in range(len(self.ground)):
            if not mask >> i & 1 and self.rank_of(mask | 1 << i) == r:
                mask |= 1 << i
        return mask

    def is_independent_mask(self, mask: int) -> bool:
        return self.rank_of(mask) == bin(mask).count("1")

    def circuits(self) -> list[tuple[str, ...]]:
        """Minimal dependent sets, by brute force when not given."""
        if self._circuits is not None:
            return [self.labels_of(c) for c in self._circuits]
        out: list[int] = []
        for size in range(1, len(self.ground) + 1):
            for combo in itertools.combinations(range(len(self.ground)), size):
                m = sum(1 << i for i in combo)
                if any(c & ~m == 0 for c in out):
                    continue
                if not self.is_independent_mask(m):
                    out.append(m)
        self._circuits = out
        return [self.labels_of(c) for c in out]

    def to_json(self) -> str:
        return json.dumps({"ground": list(self.ground), "circuits": [list(c) for c in self.circuits()]})

    @classmethod
    def from_json(cls, text: str | dict[str, Any]) -> Matroid:
        data = json.loads(text) if isinstance(text, str) else text
        if "vertices" in data:
            return graphic_matroid(data["vertices"], data["edges"])
        ground = data["ground"]
        if "bases" in data:
            return cls(ground, bases=data["bases"])
        if "circuits" in data:
            return cls(ground, circuits=data["circuits"])
        raise MatroidError("matroid JSON needs 'bases' or 'circuits'")


def uniform_matroid(r: int, n: int) -> Matroid:
    ground = [str(i) for i in range(1, n + 1)]
    return Matroid(ground, bases=itertools.combinations(ground, r))


def free_matroid(n: int) -> Matroid:
    ground = [str(i) for i in range(1, n + 1)]
    return Matroid(ground, bases=[ground])


def graphic_matroid(vertices: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Cycle matroid of a graph; edge ``[u, v]`` gets the label ``"uv"``."""
    edges = [tuple(sorted((int(u), int(v)))) for u, v in edges]
    wide = vertices >= 10
    ground = [f"{u},{v}" if wide else f"{u}{v}" for u, v in edges]
    if len(set(ground)) != len(ground):
        raise MatroidError("parallel edges need distinct labels; give an explicit matroid")
    endpoints = dict(zip(ground, edges))

    def rank_fn(subset: frozenset[str]) -> int:
        parent = {v: v for v in range(1, vertices + 1)}

        def find(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        r = 0
        for e in subset:
            u, v = endpoints[e]
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                r += 1
        return r

    return Matroid(ground, rank_function=rank_fn)


def complete_graph_edges(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def lattice_of_flats(m: Matroid, *, max_flats: int = MAX_FLATS) -> GeometricLattice:
    """Closed sets of ``m`` ordered by inclusion; atoms are the parallel classes."""
    bottom = m.closure_mask(0)
    level = {bottom}
    flats: list[tuple[int, int]] = [(0, bottom)]
    ups: dict[int, set[int]] = {}
    r = 0
    while level:
        nxt: set[int] = set()
        for f in level:
            ups[f] = set()
            for i in range(len(m.ground)):
                if not f >> i & 1:
                    g = m.closure_mask(f | 1 << i)
                    ups[f].add(g)
                    nxt.add(g)
        r += 1
        flats += [(r, g) for g in nxt]
        if len(flats) > max_flats:
            raise GuardError(f"more than {max_flats} flats")
        level = nxt
    flats.sort(key=lambda t: (t[0], [m.ground.index(x) for x in m.labels_of(t[1])]))
    atom_flats = [g for rk, g in flats if rk == 1]
    atom_bit = {g: 1 << k for k, g in enumerate(atom_flats)}

    def atom_mask(flat: int) -> int:
        return sum(b for g, b in atom_bit.items() if g & ~flat == 0)

    masks = [atom_mask(g) for _, g in flats]
    idx = {g: i for i, (_, g) in enumerate(flats)}
    covers = [(idx[f], idx[g]) for f, gs in ups.items() for g in gs]
    by_atoms = dict(zip(masks, (g for _, g in flats)))

    def closure(mask: int) -> int:
        if mask in by_atoms:
            return mask
        ground_mask = bottom
        for k in _bits(mask):
            ground_mask |= atom_flats[k]
        return atom_mask(m.closure_mask(ground_mask))

    def label(flat: int) -> str:
        return "{" + ",".join(m.labels_of(flat & ~bottom)) + "}"

    return GeometricLattice(
        [m.labels_of(g) for _, g in flats],
        [label(g) for _, g in flats],
        [rk for rk, _ in flats],
        covers,
        masks,
        closure=closure,
        atom_labels=["/".join(m.labels_of(g & ~bottom)) for g in atom_flats],
        name="flats",
    )


def d_divisible_boolean(n: int, d: int) -> GradedPoset:
    """Subsets of ``{1..n}`` of size divisible by ``d``, as a rank selection of ``B_n``."""
    if d < 1 or n % d:
        raise PosetError(f"d={d} must be a positive divisor of n={n}")
    return rank_selected_subposet(boolean_lattice(n), range(d, n, d))
