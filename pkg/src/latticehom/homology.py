"""Chain vectors on rank-selected order complexes and the ribbon homology bases.

A chain is a tuple of element indices of the ambient lattice at the ranks
of ``S``.  For Whitney homology the last element is the interval top ``u``
and is never deleted by the boundary.
"""

from __future__ import annotations

import itertools
import json
import math
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .lattices import GeometricLattice, _bits
from .linear import Coeff, LinComb, exact_rank, fraction_text, rank_of_vectors
from .poset import Chain, GradedPoset, PosetError, mobius, rank_selected_subposet
from .shelling import (
    descent_positions,
    enumerate_standard_nbc_plus_fillings,
    f_first,
    has_no_broken_circuit,
    label_word,
)
from .tableaux import RibbonFilling, RibbonShape, TabloidVector, polytabloid

BETTI_MAX_CHAINS = 200_000


class ChainVector(LinComb):
    """Linear combination of chains; ``fixed_top`` marks Whitney chains ending at ``u``."""

    def __init__(self, terms: Any = (), *, fixed_top: bool = False) -> None:
        self.fixed_top = fixed_top
        self.filling: RibbonFilling | None = None
        super().__init__(terms)

    def key_action(self, L: GradedPoset) -> Any:
        cache: dict[tuple[int, ...], list[int]] = {}

        def move(g: tuple[int, ...], chain: Hashable) -> Hashable:
            perm = cache.get(g)
            if perm is None:
                perm = cache[g] = [L.act_element(g, x) for x in range(len(L))]
            return tuple(perm[x] for x in chain)  # type: ignore[union-attr]

        return move

    def acted(self, g: Sequence[int], L: GradedPoset) -> ChainVector:
        move = self.key_action(L)
        return self.map_keys(lambda c: move(tuple(g), c))  # type: ignore[return-value]

    def to_json(self, L: GradedPoset, atom_label: Any = None) -> dict[str, Any]:
        out: dict[str, Any] = {}
        if self.filling is not None:
            label = atom_label or (L.atom_labels.__getitem__ if isinstance(L, GeometricLattice) else str)
            out["filling"] = self.filling.to_json(label)
        out["chain_terms"] = [
            {"chain": [L.labels[x] for x in chain], "coeff": fraction_text(c)} for chain, c in sorted(self.items())
        ]
        return out


def chains_below(L: GradedPoset, S: Iterable[int], top: int | None = None) -> list[Chain]:
    """Chains with rank set exactly ``S`` whose elements all lie below ``top``."""
    S = tuple(S)
    top = L.top if top is None else top
    if not S:
        return [()]
    tm = L.masks[top]
    ok = lambda x: L.masks[x] & ~tm == 0  # noqa: E731
    chains: list[Chain] = [(x,) for x in L.levels[S[0]] if ok(x)]
    for r in S[1:]:
        chains = [c + (y,) for c in chains for y in L.above_at_rank(c[-1], r) if ok(y)]
    return chains


def bar_f_chain(v: TabloidVector, L: GeometricLattice, S: Iterable[int], *, whitney: bool = False) -> ChainVector:
    """Send each tabloid to the chain of joins of its row prefixes at the ranks in ``S``.

    For Whitney vectors ``max S`` is the rank of the top ``u`` and the chain
    ends at ``u``; otherwise the last row completes the chain to the top.
    """
    S = tuple(sorted(S))
    out = ChainVector(fixed_top=whitney)
    for tab, c in v.items():
        sizes = list(itertools.accumulate(len(r) for r in tab))
        mask = 0
        chain = []
        for row, size in zip(tab, sizes):
            for a in row:
                mask |= 1 << a
            x = L.join_mask(mask)
            if L.rank[x] != size:
                raise PosetError("tabloid entries are not independent")
            if size in S:
                chain.append(x)
        if [L.rank[x] for x in chain] != list(S):
            raise PosetError(f"tabloid rows do not match the rank set {S}")
        out.add_term(tuple(chain), c)
    return out


def boundary_component(c: ChainVector, i: int) -> ChainVector:
    """The part of the boundary deleting the ``i``-th element (from 1), with sign ``(-1)^(i-1)``."""
    out = ChainVector(fixed_top=c.fixed_top)
    for chain, coeff in c.items():
        k = len(chain) - 1 if c.fixed_top else len(chain)
        if i > k:
            raise ValueError(f"chain of length {len(chain)} has no deletable position {i}")
        out.add_term(chain[: i - 1] + chain[i:], coeff if i % 2 else -coeff)
    return out


def boundary_apply(c: ChainVector) -> ChainVector:
    """Simplicial boundary with sign ``(-1)^(i-1)`` for deleting the ``i``-th element."""
    out = ChainVector(fixed_top=c.fixed_top)
    for chain, coeff in c.items():
        k = len(chain) - 1 if c.fixed_top else len(chain)
        for i in range(k):
            out.add_term(chain[:i] + chain[i + 1 :], -coeff if i % 2 else coeff)
    return out


@dataclass
class BoundaryOperator:
    """The top boundary map of a rank-selected order complex as a sparse matrix."""

    chains: list[Chain]
    faces: list[Chain]
    rows: list[dict[int, int]]

    @classmethod
    def top(cls, L: GradedPoset, S: Sequence[int], top: int | None = None) -> BoundaryOperator:
        chains = chains_below(L, S, top)
        if len(chains) > BETTI_MAX_CHAINS:
            raise PosetError(f"{len(chains)} chains exceed the guard {BETTI_MAX_CHAINS}")
        face_index: dict[Chain, int] = {}
        rows = []
        for chain in chains:
            row: dict[int, int] = {}
            for i in range(len(chain)):
                j = face_index.setdefault(chain[:i] + chain[i + 1 :], len(face_index))
                row[j] = -1 if i % 2 else 1
            rows.append(row)
        return cls(chains, list(face_index), rows)

    def rank(self) -> int:
        return exact_rank(self.rows)


def betti_top(L: GradedPoset, S: Iterable[int], top: int | None = None) -> int:
    """Top reduced Betti number of the order complex of the rank selection at ``S``
    (inside the interval below ``top``), by exact elimination."""
    S = tuple(sorted(S))
    op = BoundaryOperator.top(L, S, top)
    return len(op.chains) - op.rank() if S else 1


def betti_from_mobius(L: GradedPoset, S: Iterable[int]) -> int:
    """``(-1)^(|S|-1) mu`` of the rank-selected poset, valid when homology is concentrated in top degree."""
    S = tuple(sorted(S))
    Q = rank_selected_subposet(L, S)
    return (-1) ** (len(S) - 1) * mobius(Q, Q.bottom, Q.top) if S else 1


def ribbon_basis_beta(L: GeometricLattice, S: Iterable[int]) -> list[ChainVector]:
    """Images of polytabloids of standard NBC+ fillings of ``Rib(S)``."""
    S = tuple(sorted(S))
    out = []
    for F in enumerate_standard_nbc_plus_fillings(L, S):
        v = bar_f_chain(polytabloid(F), L, S)
        v.filling = F
        out.append(v)
    return out


def ribbon_basis_wh(L: GeometricLattice, S: Iterable[int]) -> dict[int, list[ChainVector]]:
    """For each ``u`` of rank ``max S``, the ribbon basis of the interval below ``u``."""
    S = tuple(sorted(S))
    if not S:
        raise PosetError("Whitney homology needs a nonempty rank set")
    inner = S[:-1]
    out: dict[int, list[ChainVector]] = {}
    for u in L.levels[S[-1]]:
        vecs = []
        for F in enumerate_standard_nbc_plus_fillings(L, inner, top=u):
            v = bar_f_chain(polytabloid(F), L, S, whitney=True)
            v.filling = F
            vecs.append(v)
        out[u] = vecs
    return out


def homology_facets(L: GeometricLattice, S: Sequence[int], top: int | None = None) -> list[Chain]:
    """Chains whose lexicographically first extension has descents exactly at ``S``."""
    S = tuple(S)
    top = L.top if top is None else top
    out = []
    for gamma in chains_below(L, S, top):
        if top in gamma:
            continue
        if descent_positions(L, label_word(L, f_first(L, gamma, top))) == S:
            out.append(gamma)
    return out


@dataclass
class BasisReport:
    ok: bool
    count: int
    betti: int
    rank: int
    non_cycles: list[int] = field(default_factory=list)
    incidence_unitriangular: bool = True
    incidence_identity: bool = True
    identity_witness: tuple[int, int] | None = None
    failures: list[str] = field(default_factory=list)


def facet_keys(vectors: Sequence[ChainVector], L: GeometricLattice, S: Iterable[int]) -> list[Chain]:
    """For each basis vector, the chain at ranks ``S`` of its own filling's saturated chain."""
    S = tuple(sorted(S))
    out = []
    for v in vectors:
        if v.filling is None:
            raise ValueError("basis vectors must remember their fillings")
        mask = 0
        chain = []
        for k, a in enumerate(v.filling.entries, start=1):
            mask |= 1 << a
            if k in S:
                chain.append(L.join_mask(mask))
        out.append(tuple(chain))
    return out


def incidence_order(vectors: Sequence[ChainVector], keys: Sequence[Chain]) -> list[int] | None:
    """An order of the vectors making the facet incidence matrix unitriangular, or None.

    Vector ``i`` owns facet ``keys[i]`` with coefficient 1; an edge ``i -> j``
    records that vector ``i`` also meets facet ``keys[j]``.
    """
    if len(set(keys)) != len(keys) or any(v.get(k) != 1 for v, k in zip(vectors, keys)):
        return None
    where = {k: j for j, k in enumerate(keys)}
    succ = [[where[c] for c in v if c in where and where[c] != i] for i, v in enumerate(vectors)]
    indeg = [0] * len(vectors)
    for out in succ:
        for j in out:
            indeg[j] += 1
    order = [i for i, d in enumerate(indeg) if d == 0]
    for i in order:
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
    return order if len(order) == len(vectors) else None


def verify_basis(
    vectors: Sequence[ChainVector],
    L: GeometricLattice,
    S: Iterable[int],
    top: int | None = None,
) -> BasisReport:
    """Check cycles, unitriangular incidence with the homology facets, and exact rank = Betti number.

    Whitney vectors (``fixed_top``) are checked inside the interval below ``top``.
    Whether the incidence matrix is literally the identity is reported too,
    with a witness ``(vector, facet)`` when it is not.
    """
    S = tuple(sorted(S))
    whitney = bool(vectors) and vectors[0].fixed_top
    if whitney:
        top = next(iter(vectors[0]))[-1] if top is None else top
        inner = S[:-1]
    else:
        top = L.top if top is None else top
        inner = S
    failures: list[str] = []
    non_cycles = [i for i, v in enumerate(vectors) if not boundary_apply(v).is_zero()]
    if non_cycles:
        failures.append(f"{len(non_cycles)} vectors are not cycles")
    suffix = (top,) if whitney else ()
    facets = [f + suffix for f in homology_facets(L, inner, top)]
    keys = facet_keys(vectors, L, S) if all(v.filling is not None for v in vectors) else []
    triangular = sorted(keys) == sorted(facets) and incidence_order(vectors, keys) is not None
    if not triangular:
        failures.append("facet incidence matrix is not unitriangular")
    witness = None
    facet_set = set(facets)
    for i, (v, k) in enumerate(zip(vectors, keys)):
        extra = [c for c in v if c in facet_set and c != k]
        if extra:
            witness = (i, facets.index(extra[0]))
            break
    rank = rank_of_vectors(vectors)
    betti = betti_top(L, inner, top)
    if rank != len(vectors):
        failures.append(f"rank {rank} < {len(vectors)} vectors")
    if rank != betti:
        failures.append(f"rank {rank} != Betti number {betti}")
    return BasisReport(
        not failures, len(vectors), betti, rank, non_cycles, triangular, witness is None and triangular, witness, failures
    )


def basis_coordinates(w: ChainVector, vectors: Sequence[ChainVector], keys: Sequence[Chain]) -> list[Coeff]:
    """Coordinates of a cycle ``w`` in a ribbon basis by triangular substitution on the facets."""
    order = incidence_order(vectors, keys)
    if order is None:
        raise ArithmeticError("incidence matrix is not unitriangular")
    coords: list[Coeff] = [0] * len(vectors)
    # facet j collects c_j plus contributions of earlier vectors meeting it
    for j in order:
        c = w.get(keys[j], 0)
        for i in range(len(vectors)):
            if i != j and coords[i]:
                c -= coords[i] * vectors[i].get(keys[j], 0)
        coords[j] = c
    rebuilt = ChainVector(fixed_top=w.fixed_top)
    for c, b in zip(coords, vectors):
        if c:
            rebuilt = rebuilt + b.scaled(c)
    if rebuilt != w:
        raise ArithmeticError("vector is not in the span of the basis")
    return coords


def trace_on_basis(
    vectors: Sequence[ChainVector], L: GeometricLattice, S: Iterable[int], g: Sequence[int]
) -> Coeff:
    """Trace of ``g`` on the span of a ribbon basis, with coordinates solved exactly."""
    keys = facet_keys(vectors, L, S)
    return sum(basis_coordinates(v.acted(g, L), vectors, keys)[i] for i, v in enumerate(vectors))


def export_basis(vectors: Sequence[ChainVector], L: GeometricLattice) -> str:
    return json.dumps([v.to_json(L) for v in vectors], indent=1)


# --- Orlik-Solomon component -------------------------------------------------


def atom_circuits(L: GeometricLattice) -> list[tuple[int, ...]]:
    """Minimal dependent sets of atoms."""
    out: list[int] = []
    for size in range(2, L.height + 2):
        for combo in itertools.combinations(range(L.n_atoms), size):
            m = sum(1 << a for a in combo)
            if any(c & ~m == 0 for c in out):
                continue
            if L.rank[L.join_mask(m)] < size:
                out.append(m)
    return [tuple(_bits(c)) for c in out]


def _wedge(a: Sequence[int], b: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """``e_a ^ e_b`` as (sign, sorted support); sign 0 when they overlap."""
    if set(a) & set(b):
        return 0, ()
    word = list(a) + list(b)
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return (-1 if inv % 2 else 1), tuple(sorted(word))


@dataclass
class OSComponent:
    degree: int
    monomials: list[tuple[int, ...]]
    relations: list[dict[tuple[int, ...], int]]
    dimension: int


def os_component(L: GeometricLattice, i: int) -> OSComponent:
    """Degree ``i`` of the Orlik-Solomon algebra of the matroid of ``L``'s atoms.

    Monomials are no-broken-circuit sets listed in descending atom order.  The
    dimension is computed independently as ``C(m, i)`` minus the rank of the
    degree ``i`` part of the ideal generated by the circuit boundaries.
    """
    if i < 0 or i > L.height:
        raise ValueError(f"degree {i} outside 0..{L.height}")
    pos = L.atom_pos
    monomials = [
        tuple(sorted(A, key=pos.__getitem__, reverse=True))
        for A in itertools.combinations(range(L.n_atoms), i)
        if has_no_broken_circuit(L, A)
    ]
    relations = []
    for C in atom_circuits(L):
        extra = i - len(C) + 1
        if extra < 0:
            continue
        for B in itertools.combinations(range(L.n_atoms), extra):
            rel: dict[tuple[int, ...], int] = {}
            for s, c in enumerate(C):
                sgn, key = _wedge(tuple(a for a in C if a != c), B)
                if sgn:
                    rel[key] = rel.get(key, 0) + (-1) ** s * sgn
            rel = {k: v for k, v in rel.items() if v}
            if rel:
                relations.append(rel)
    index = {A: j for j, A in enumerate(itertools.combinations(range(L.n_atoms), i))}
    r = exact_rank([{index[k]: v for k, v in rel.items()} for rel in relations])
    return OSComponent(i, monomials, relations, math.comb(L.n_atoms, i) - r)


def column_image(L: GeometricLattice, word: Sequence[int]) -> ChainVector:
    """The chain vector of the polytabloid of a single column read bottom to top."""
    F = RibbonFilling(RibbonShape((1,) * len(word)), tuple(word))
    return bar_f_chain(polytabloid(F), L, range(1, len(word) + 1), whitney=True)


@dataclass
class OSRelationReport:
    ok: bool
    circuits_checked: int
    extended_checked: int
    failures: list[tuple[int, ...]] = field(default_factory=list)


def verify_os_relations(L: GeometricLattice, *, extended: bool = True) -> OSRelationReport:
    """Each circuit's alternating sum of column images vanishes.

    With ``extended``, also check ``e_B ^ boundary(e_C)`` for independent ``B``
    such that every term is independent.
    """
    pos = L.atom_pos
    desc = lambda A: tuple(sorted(A, key=pos.__getitem__, reverse=True))  # noqa: E731
    failures: list[tuple[int, ...]] = []
    circuits = atom_circuits(L)
    extended_checked = 0
    for C in circuits:
        C = desc(C)
        total = ChainVector(fixed_top=True)
        for s in range(len(C)):
            total = total + column_image(L, C[:s] + C[s + 1 :]).scaled((-1) ** s)
        if not total.is_zero():
            failures.append(C)
        if not extended:
            continue
        others = [a for a in range(L.n_atoms) if a not in C]
        for k in range(1, L.height - len(C) + 2):
            for B in itertools.combinations(others, k):
                terms = [C[:s] + C[s + 1 :] + desc(B) for s in range(len(C))]
                if not all(L.rank[L.join_mask(sum(1 << a for a in t))] == len(t) for t in terms):
                    continue
                extended_checked += 1
                total = ChainVector(fixed_top=True)
                for s, t in enumerate(terms):
                    total = total + column_image(L, t).scaled((-1) ** s)
                if not total.is_zero():
                    failures.append(C + desc(B))
    return OSRelationReport(not failures, len(circuits), extended_checked, failures)
