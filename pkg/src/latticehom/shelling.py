"""Minimal labelings of geometric lattices and the chain/filling dictionary.

Saturated chains from the bottom are tuples of element indices at ranks
``1..k``; the last entry is the top of the interval.  Label words are tuples
of atom ids, compared through the lattice's atom order.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .lattices import GeometricLattice, _bits
from .poset import Chain, GradedPoset, PosetError, maximal_chains
from .tableaux import RibbonFilling, ribbon_of


class EdgeLabeling(dict):
    """Cover ``(x, y)`` to label; ``key`` turns labels into comparable values."""

    def __init__(self, labels: dict, key: Callable[[Hashable], object] = lambda a: a) -> None:
        super().__init__(labels)
        self.key = key


def minimal_labeling(L: GeometricLattice) -> EdgeLabeling:
    """Label each cover ``x < y`` by the least atom below ``y`` but not ``x``."""
    out = {}
    for x, y in L.covers:
        new = L.masks[y] & ~L.masks[x]
        if not new:
            raise PosetError(f"no new atom on cover {L.labels[x]} < {L.labels[y]}: not atomic")
        out[(x, y)] = L.min_atom(new)
    return EdgeLabeling(out, key=L.atom_pos.__getitem__)


def cover_label(L: GeometricLattice, x: int, y: int) -> int:
    return L.min_atom(L.masks[y] & ~L.masks[x])


@dataclass
class ELReport:
    ok: bool
    intervals_checked: int
    failures: list[tuple[str, str, str]] = field(default_factory=list)


def verify_el_labeling(P: GradedPoset, lab: EdgeLabeling, *, max_failures: int = 10) -> ELReport:
    """Check every interval has exactly one weakly increasing maximal chain, and that it is lex first."""
    key = lab.key
    failures: list[tuple[str, str, str]] = []
    checked = 0
    for x in range(len(P)):
        for y in range(len(P)):
            if x == y or not P.leq(x, y):
                continue
            checked += 1
            words = []
            for c in maximal_chains(P, x, y):
                full = (x, *c, y)
                words.append(tuple(key(lab[(a, b)]) for a, b in zip(full, full[1:])))
            rising = [w for w in words if all(a <= b for a, b in zip(w, w[1:]))]
            if len(rising) != 1:
                failures.append((P.labels[x], P.labels[y], f"{len(rising)} weakly increasing chains"))
            elif min(words) != rising[0] or words.count(rising[0]) != 1:
                failures.append((P.labels[x], P.labels[y], "increasing chain is not lexicographically first"))
            if len(failures) >= max_failures:
                return ELReport(False, checked, failures)
    return ELReport(not failures, checked, failures)


def saturated_chains(L: GradedPoset, top: int | None = None) -> list[Chain]:
    """Saturated chains from the bottom to ``top``, each ending with ``top``."""
    top = L.top if top is None else top
    if top == L.bottom:
        return [()]
    return [c + (top,) for c in maximal_chains(L, L.bottom, top)]


def label_word(L: GeometricLattice, chain: Sequence[int]) -> tuple[int, ...]:
    full = (L.bottom, *chain)
    return tuple(cover_label(L, a, b) for a, b in zip(full, full[1:]))


def f_chain(L: GeometricLattice, word: Sequence[int], top: int | None = None) -> Chain:
    """Chain of prefix joins of an independent atom word."""
    chain = []
    mask = 0
    for k, a in enumerate(word, start=1):
        mask |= 1 << a
        x = L.join_mask(mask)
        if L.rank[x] != k:
            raise PosetError(f"word {word} is dependent at position {k}")
        chain.append(x)
    if top is not None and (chain[-1] if chain else L.bottom) != top:
        raise PosetError("word does not reach the requested top element")
    return tuple(chain)


def f_rib(L: GeometricLattice, chain: Sequence[int], S: Iterable[int]) -> RibbonFilling:
    """Filling of ``Rib(S)`` whose reading word is the label sequence of ``chain``."""
    word = label_word(L, chain)
    return RibbonFilling(ribbon_of(S, len(word)), word)


def f_first(L: GeometricLattice, gamma: Sequence[int], top: int | None = None) -> Chain:
    """Lexicographically first saturated chain through the elements of ``gamma``."""
    top = L.top if top is None else top
    cur = L.bottom
    out = []
    for target in (*gamma, top):
        if not L.leq(cur, target):
            raise PosetError("gamma is not a chain below the top")
        while L.rank[cur] < L.rank[target]:
            a = L.min_atom(L.masks[target] & ~L.masks[cur])
            cur = L.join_mask(L.masks[cur] | 1 << a)
            out.append(cur)
    return tuple(out)


def res_S(P: GradedPoset, chain: Sequence[int], S: Iterable[int]) -> Chain:
    """Restrict a saturated chain (ranks ``1..k``) to the ranks in ``S``."""
    return tuple(chain[s - 1] for s in S)


def descent_positions(L: GeometricLattice, word: Sequence[int]) -> tuple[int, ...]:
    pos = L.atom_pos
    return tuple(i for i in range(1, len(word)) if pos[word[i - 1]] > pos[word[i]])


def is_nbc_independent(L: GeometricLattice, atoms: Iterable[int]) -> bool:
    """Full-rank join, and no outside atom below the join precedes every member."""
    A = set(atoms)
    if not A:
        return True
    mask = sum(1 << a for a in A)
    x = L.join_mask(mask)
    if L.rank[x] != len(A):
        return False
    first = min(L.atom_pos[a] for a in A)
    return all(L.atom_pos[b] > first for b in _bits(L.masks[x] & ~mask))


def has_no_broken_circuit(L: GeometricLattice, atoms: Iterable[int]) -> bool:
    """Independent, and every nonempty subset contains the least atom below its join.

    This is the usual matroid notion; it is stronger than
    :func:`is_nbc_independent`, which only looks at the whole set.
    """
    A = sorted(set(atoms))
    if not is_nbc_independent(L, A):
        return False
    for r in range(1, len(A) + 1):
        for sub in itertools.combinations(A, r):
            x = L.join_mask(sum(1 << a for a in sub))
            if L.min_atom(L.masks[x]) not in sub:
                return False
    return True


def is_nbc_plus(L: GeometricLattice, word: Sequence[int], top: int | None = None) -> bool:
    """An NBC independent full-rank word whose every letter is the least new atom of its prefix."""
    top = L.top if top is None else top
    if len(set(word)) != len(word) or not is_nbc_independent(L, word):
        return False
    mask = sum(1 << a for a in word)
    if L.join_mask(mask) != top:
        return False
    prev = 0
    for a in word:
        cur = L.closure(prev | 1 << a)
        if L.min_atom(cur & ~prev) != a:
            return False
        prev = cur
    return True


def nbc_plus_words(L: GeometricLattice, top: int | None = None) -> set[tuple[int, ...]]:
    """Label words of all saturated chains to ``top``: the image of ``f_rib``."""
    return {label_word(L, c) for c in saturated_chains(L, top)}


def enumerate_standard_nbc_plus_fillings(
    L: GeometricLattice, S: Iterable[int], top: int | None = None
) -> list[RibbonFilling]:
    """Standard NBC+ fillings of ``Rib(S)``: label words with descent set exactly ``S``."""
    S = tuple(sorted(S))
    top = L.top if top is None else top
    r = L.rank[top]
    if S and (S[0] < 1 or S[-1] >= r):
        raise PosetError(f"rank set {S} is not inside 1..{r - 1}")
    shape = ribbon_of(S, r)
    out = []
    for chain in saturated_chains(L, top):
        word = label_word(L, chain)
        if descent_positions(L, word) == S:
            out.append(RibbonFilling(shape, word))
    return out


def filling_label(L: GeometricLattice) -> Callable[[int], str]:
    return L.atom_labels.__getitem__
