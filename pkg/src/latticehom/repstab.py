"""Characters of chain and homology modules, and stability scans.

Characters are computed by counting chains fixed by one permutation per cycle
type.  Elements are generated rank by rank, so only the ranks a rank set
touches are ever built; this keeps the partition family usable at n = 9, 10.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .partitions import Partition, cycle_type, partitions, permutation_of_type, subsets
from .symfunc import (
    ClassFunction,
    IrrepDecomposition,
    SymFunc,
    decompose,
    decomposition_from_symfunc,
    plethysm,
    ribbon_schur,
)

FAMILIES = ("boolean", "partition")
CHARACTER_MAX_N = {"boolean": 12, "partition": 10}


class RankError(ValueError):
    """A rank set or element type does not fit the poset."""


class CharacterGuardError(RankError):
    """``n`` is beyond the size where characters are computed."""


# --- elements by rank -------------------------------------------------------


@dataclass(frozen=True)
class _Element:
    key: tuple
    mask: int  # order embedding: x <= y iff mask(x) is a subset of mask(y)
    type: Partition


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(itertools.combinations(range(n), 2))}


def _set_partitions_with_blocks(n: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of ``0..n-1`` into exactly ``k`` blocks, blocks in order of least element."""

    def rec(i: int, blocks: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if n - i < k - len(blocks):
            return
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    return rec(0, [])


@lru_cache(maxsize=None)
def _elements(family: str, n: int, r: int) -> tuple[_Element, ...]:
    if family == "boolean":
        return tuple(
            _Element(c, sum(1 << i for i in c), (r,)) for c in itertools.combinations(range(n), r)
        )
    if family == "partition":
        idx = _pair_index(n)
        out = []
        for blocks in _set_partitions_with_blocks(n, n - r):
            mask = 0
            for b in blocks:
                for p in itertools.combinations(b, 2):
                    mask |= 1 << idx[p]
            typ = tuple(sorted((len(b) for b in blocks), reverse=True))
            out.append(_Element(blocks, mask, typ))
        return tuple(out)
    raise ValueError(f"unknown family {family!r}")


def _act_key(family: str, g: Sequence[int], key: tuple) -> tuple:
    if family == "boolean":
        return tuple(sorted(g[i] for i in key))
    return tuple(sorted(tuple(sorted(g[i] for i in b)) for b in key))


def height(family: str, n: int) -> int:
    return n if family == "boolean" else n - 1


def _check_family(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise ValueError("n must be positive")
    cap = CHARACTER_MAX_N[family]
    if n > cap:
        raise CharacterGuardError(f"n = {n} exceeds the character guard {cap} for the {family} family")


def is_valid_rank_set(family: str, S: Iterable[int], n: int, *, allow_top: bool = False) -> bool:
    S = tuple(S)
    hi = height(family, n) if allow_top else height(family, n) - 1
    return all(1 <= s <= hi for s in S)


def _rank_set(S: Iterable[int]) -> tuple[int, ...]:
    S = tuple(sorted(set(S)))
    if S and S[0] < 1:
        raise RankError(f"ranks must be positive, got {S}")
    return S


# --- fixed chain counting ---------------------------------------------------


@lru_cache(maxsize=None)
def _fixed(family: str, n: int, rho: Partition, r: int) -> tuple[_Element, ...]:
    g = permutation_of_type(rho)
    return tuple(e for e in _elements(family, n, r) if _act_key(family, g, e.key) == e.key)


@lru_cache(maxsize=None)
def _prefix_counts(family: str, n: int, rho: Partition, T: tuple[int, ...]) -> tuple[tuple[_Element, int], ...]:
    """Fixed elements at rank ``T[-1]`` with the number of fixed chains of rank set ``T`` ending there."""
    level = _fixed(family, n, rho, T[-1])
    if len(T) == 1:
        return tuple((e, 1) for e in level)
    below = [(e.mask, c) for e, c in _prefix_counts(family, n, rho, T[:-1]) if c]
    out = []
    for y in level:
        m = y.mask
        out.append((y, sum(c for xm, c in below if xm & ~m == 0)))
    return tuple(out)


def fixed_chain_count(
    family: str, n: int, rho: Partition, T: Iterable[int], top_type: Partition | None = None
) -> int:
    """Chains with rank set ``T`` fixed by a permutation of cycle type ``rho``.

    With ``top_type`` the element at rank ``max T`` must have that block type.
    """
    T = _rank_set(T)
    if not T:
        return 1
    if T[-1] > height(family, n):
        return 0
    counts = _prefix_counts(family, n, tuple(rho), T)
    if top_type is None:
        return sum(c for _, c in counts)
    return sum(c for e, c in counts if e.type == top_type)


# --- characters --------------------------------------------------------------


def character_alpha(family: str, S: Iterable[int], n: int) -> ClassFunction:
    """Permutation character on chains with rank set ``S``."""
    _check_family(family, n)
    S = _rank_set(S)
    if not is_valid_rank_set(family, S, n):
        raise RankError(f"rank set {S} is not inside the nontrivial ranks of the {family} poset at n = {n}")
    return ClassFunction.from_function(n, lambda rho: fixed_chain_count(family, n, rho, S))


def character_beta(family: str, S: Iterable[int], n: int, *, check: bool = True) -> ClassFunction:
    """Top homology character of the rank selection, by inclusion-exclusion over subsets."""
    _check_family(family, n)
    S = _rank_set(S)
    if not is_valid_rank_set(family, S, n):
        raise RankError(f"rank set {S} is not inside the nontrivial ranks of the {family} poset at n = {n}")

    def value(rho: Partition) -> int:
        return sum((-1) ** (len(S) - len(T)) * fixed_chain_count(family, n, rho, T) for T in subsets(S))

    chi = ClassFunction.from_function(n, value)
    if check:
        decompose(chi)
    return chi


def character_wh(family: str, S: Iterable[int], n: int, *, top_type: Partition | None = None) -> ClassFunction:
    """Whitney homology character, optionally restricted to one element type at rank ``max S``.

    At a permutation ``g`` the trace is the sum over ``g``-fixed ``u`` of the
    Lefschetz number of ``g`` on the rank selection of ``(0, u)``, which is the
    fixed-point form of the induced character from the stabilizer of ``u``.
    """
    _check_family(family, n)
    S = _rank_set(S)
    if not S:
        return ClassFunction.trivial(n)
    if not is_valid_rank_set(family, S, n, allow_top=True):
        raise RankError(f"rank set {S} exceeds the height of the {family} poset at n = {n}")
    top = S[-1]
    if top_type is not None:
        top_type = tuple(top_type)
        if sum(top_type) != n or (family == "partition" and n - len(top_type) != top):
            raise RankError(f"type {top_type} does not have rank {top} in the {family} poset at n = {n}")
    inner = S[:-1]

    def value(rho: Partition) -> int:
        return sum(
            (-1) ** (len(inner) - len(T)) * fixed_chain_count(family, n, rho, (*T, top), top_type)
            for T in subsets(inner)
        )

    return ClassFunction.from_function(n, value)


def _strip_ones(mu: Sequence[int]) -> Partition:
    return tuple(p for p in sorted(mu, reverse=True) if p > 1)


def character_wh_component(S: Iterable[int], mu: Sequence[int], n: int) -> ClassFunction:
    """Whitney homology of the partition lattice restricted to elements of type ``(mu, 1^k)``."""
    core = _strip_ones(mu)
    full = (*core, *(1,) * (n - sum(core)))
    if sum(core) > n:
        raise RankError(f"type {tuple(mu)} does not fit n = {n}")
    return character_wh("partition", S, n, top_type=full)


def essential_rank(mu: Sequence[int]) -> int:
    return sum(mu) - len(mu)


def k_statistic(mu: Sequence[int]) -> int:
    """``sum over parts i >= 4 of (i - 3)``."""
    return sum(p - 3 for p in mu if p >= 4)


def essential_part(S: Iterable[int], mu: Sequence[int], *, check_identity: bool = True) -> IrrepDecomposition:
    """Decomposition of the type-``mu`` Whitney component of ``Pi_{|mu|}``.

    With ``check_identity`` the component at ``n = |mu| + 2`` is compared with
    ``h_2`` times the characteristic of the essential part.
    """
    S = _rank_set(S)
    mu = tuple(sorted(mu, reverse=True))
    if not mu or min(mu) < 2:
        raise RankError(f"type {mu} must be nonempty with all parts at least 2")
    if not S or essential_rank(mu) != S[-1]:
        raise RankError(f"type {mu} has rank {essential_rank(mu)}, but max S = {S[-1] if S else None}")
    m = sum(mu)
    ess = decompose(character_wh_component(S, mu, m))
    if check_identity and m + 2 <= CHARACTER_MAX_N["partition"]:
        lhs = SymFunc.from_character(character_wh_component(S, mu, m + 2))
        rhs = SymFunc.h(2) * SymFunc.from_basis(m, "schur", ess.mults)
        if lhs != rhs:
            raise AssertionError(f"component of type {mu} at n = {m + 2} is not h_2 times its essential part")
    return ess


# --- induced characters ------------------------------------------------------


def induced_character(n: int, subgroup: Sequence[Sequence[int]], chi: Callable[[tuple[int, ...]], Fraction | int]) -> ClassFunction:
    """Induce a class function of an explicit subgroup of ``S_n`` by the coset formula."""
    from .partitions import class_size
    from math import factorial

    sums: dict[Partition, Fraction] = {}
    for h in subgroup:
        rho = cycle_type(h)
        sums[rho] = sums.get(rho, 0) + chi(tuple(h))
    index = Fraction(factorial(n), len(subgroup))
    return ClassFunction.from_function(n, lambda rho: index * sums.get(rho, 0) / class_size(rho))


def wreath_subgroup(i: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """``S_i[S_k]`` on ``i`` consecutive blocks of size ``k``: pairs (element, induced block permutation)."""
    out = []
    for top in itertools.permutations(range(i)):
        for inner in itertools.product(list(itertools.permutations(range(k))), repeat=i):
            g = [0] * (i * k)
            for b in range(i):
                for j in range(k):
                    g[b * k + j] = top[b] * k + inner[b][j]
            out.append((tuple(g), top))
    return out


def essential_part_all_twos(S: Iterable[int]) -> tuple[IrrepDecomposition, IrrepDecomposition]:
    """Essential part of type ``(2^i)`` two ways: induction from ``S_i[S_2]`` and the plethysm ``f[h_2]``."""
    S = _rank_set(S)
    i = S[-1]
    rib = ribbon_schur(S[:-1], i).character()
    pairs = wreath_subgroup(i, 2)
    top_of = dict(pairs)
    induced = induced_character(2 * i, list(top_of), lambda h: rib(cycle_type(top_of[h])))
    via_plethysm = plethysm(ribbon_schur(S[:-1], i), SymFunc.h(2))
    return decompose(induced), decomposition_from_symfunc(via_plethysm)


def stabilizer_induced_wh(family: str, S: Iterable[int], n: int) -> ClassFunction:
    """Whitney homology character via orbit representatives and explicit stabilizers.

    Slow reference implementation (enumerates ``S_n``); intended for ``n <= 6``.
    """
    S = _rank_set(S)
    top, inner = S[-1], S[:-1]
    elems = _elements(family, n, top)
    group = list(itertools.permutations(range(n)))
    seen: set[tuple] = set()
    total = ClassFunction.zero(n)
    for u in elems:
        if u.key in seen:
            continue
        seen.update(_act_key(family, g, u.key) for g in group)
        stab = [g for g in group if _act_key(family, g, u.key) == u.key]
        below = {r: [e for e in _elements(family, n, r) if e.mask & ~u.mask == 0] for r in inner}

        def local(h: tuple[int, ...], below=below) -> int:
            val = 0
            for T in subsets(inner):
                levels = [[e for e in below[r] if _act_key(family, h, e.key) == e.key] for r in T]
                count = sum(
                    1 for c in itertools.product(*levels) if all(a.mask & ~b.mask == 0 for a, b in zip(c, c[1:]))
                )
                val += (-1) ** (len(inner) - len(T)) * count
            return val

        total = total + induced_character(n, stab, local)
    return total


# --- stability ----------------------------------------------------------------


@dataclass
class StabilityReport:
    bound: int
    n_range: tuple[int, int]
    stable_at: int | None
    sharp: bool | None
    witness: dict[str, Any] | None
    verdict: str  # certified | refuted | inconclusive
    reason: str = ""

    def to_json(self) -> dict[str, Any]:
        return asdict(self)


def stability_scan(decs: Mapping[int, IrrepDecomposition | None], predicted_bound: int) -> StabilityReport:
    """Locate where padded multiplicities stop changing and compare with a predicted bound.

    ``None`` entries stand for the zero module (rank set outside the poset).
    """
    ns = sorted(decs)
    lo, hi = ns[0], ns[-1]
    if ns != list(range(lo, hi + 1)):
        raise ValueError("scan range must be consecutive")
    padded = {n: (decs[n].padded().mults if decs[n] is not None else {}) for n in ns}
    stable_at = hi
    while stable_at - 1 >= lo and padded[stable_at - 1] == padded[hi]:
        stable_at -= 1
    b = predicted_bound
    witness = None
    if lo <= b - 1 and b <= hi:
        before, after = padded[b - 1], padded[b]
        for lam in sorted(set(before) | set(after)):
            if before.get(lam, 0) != after.get(lam, 0):
                witness = {
                    "padded": list(lam),
                    "n": b - 1,
                    "mult_before": before.get(lam, 0),
                    "mult_at_bound": after.get(lam, 0),
                }
                break
    short = lo > b - 1 or hi < b + 2
    if short:
        return StabilityReport(b, (lo, hi), stable_at, None, witness, "inconclusive",
                               f"range {lo}..{hi} does not cover {b - 1}..{b + 2}")
    sharp = stable_at == b and witness is not None
    if sharp:
        return StabilityReport(b, (lo, hi), stable_at, True, witness, "certified")
    return StabilityReport(b, (lo, hi), stable_at, False, witness, "refuted",
                           f"multiplicities stop changing at {stable_at}, predicted {b}")


def _scan(make: Callable[[int], ClassFunction | None], n_range: Iterable[int], bound: int) -> tuple[StabilityReport, dict[int, IrrepDecomposition | None]]:
    decs = {}
    for n in n_range:
        chi = make(n)
        decs[n] = None if chi is None else decompose(chi)
    return stability_scan(decs, bound), decs


def beta_bound(family: str, S: Sequence[int], d: int = 1) -> int:
    k = {"boolean": 2, "partition": 4}[family]
    return k * d * max(S) - len(S) + 1


def scan_beta(family: str, S: Iterable[int], n_range: Iterable[int], *, d: int = 1) -> tuple[StabilityReport, dict]:
    """Stability of top homology of rank selections; ``d > 1`` scales ranks (d-divisible Boolean)."""
    S = _rank_set(S)
    ranks = tuple(d * s for s in S)

    def make(n: int) -> ClassFunction | None:
        return character_beta(family, ranks, n) if is_valid_rank_set(family, ranks, n) else None

    return _scan(make, n_range, beta_bound(family, S, d))


def scan_wh(family: str, S: Iterable[int], n_range: Iterable[int]) -> tuple[StabilityReport, dict]:
    S = _rank_set(S)

    def make(n: int) -> ClassFunction | None:
        return character_wh(family, S, n) if is_valid_rank_set(family, S, n) else None

    return _scan(make, n_range, beta_bound(family, S))


def chain_module_stability(family: str, S: Iterable[int], n_range: Iterable[int]) -> tuple[StabilityReport, dict]:
    """Stability of the chain permutation module against ``2 max S`` or ``4 max S``."""
    S = _rank_set(S)

    def make(n: int) -> ClassFunction | None:
        return character_alpha(family, S, n) if is_valid_rank_set(family, S, n) else None

    k = {"boolean": 2, "partition": 4}[family]
    return _scan(make, n_range, k * S[-1])


@dataclass
class ComponentReport:
    S: tuple[int, ...]
    mu: Partition
    essential: dict[str, int]
    max_first_row: int
    max_size_plus_first_row: int
    bound: int
    k_statistic: int
    min_part_bound: Fraction | None
    ok: bool
    scan: StabilityReport | None = None
    monotone: bool | None = None
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        out = asdict(self)
        out["min_part_bound"] = None if self.min_part_bound is None else str(self.min_part_bound)
        return out


def component_bound_check(S: Iterable[int], mu: Sequence[int], n_range: Iterable[int] | None = None) -> ComponentReport:
    """Check the refined bound for one type component through its essential part.

    With ``n_range`` the component itself is scanned: it should stabilize
    exactly at ``max(|lambda| + lambda_1)`` of the essential part, and padded
    multiplicities should never decrease.
    """
    S = _rank_set(S)
    mu = _strip_ones(mu)
    ess = essential_part(S, mu, check_identity=False)
    top = ess.max_size_plus_first_row()
    K = k_statistic(mu)
    bound = 4 * S[-1] - len(S) + 1 - K
    failures = []
    if top > bound:
        failures.append(f"max |lambda| + lambda_1 = {top} exceeds {bound}")
    k = min(mu)
    min_bound = Fraction(2 * k, k - 1) * S[-1]
    if top > min_bound:
        failures.append(f"max |lambda| + lambda_1 = {top} exceeds 2k/(k-1) max S = {min_bound}")
    report = ComponentReport(
        S, mu, {",".join(map(str, lam)): m for lam, m in sorted(ess.mults.items(), reverse=True)},
        ess.max_first_row(), top, bound, K, min_bound, not failures, failures=failures,
    )
    if n_range is not None:
        decs = {n: (decompose(character_wh_component(S, mu, n)) if n >= sum(mu) else None) for n in n_range}
        report.scan = stability_scan(decs, top)
        padded = [decs[n].padded().mults if decs[n] else {} for n in sorted(decs)]
        report.monotone = all(
            a.get(lam, 0) <= b.get(lam, 0) for a, b in zip(padded, padded[1:]) for lam in a
        )
        if not report.monotone:
            failures.append("padded multiplicities decrease")
        if report.scan.verdict == "refuted":
            failures.append(f"component scan: {report.scan.reason}")
        report.ok = not failures
    return report


def types_of_rank(r: int, max_size: int | None = None) -> list[Partition]:
    """Partitions with no part 1 and ``|mu| - l(mu) = r``."""
    out = []
    for ell in range(1, r + 1):
        size = r + ell
        if max_size is not None and size > max_size:
            break
        out.extend(mu for mu in partitions(size) if len(mu) == ell and min(mu) >= 2)
    return out


def stability_report_json(report: StabilityReport) -> str:
    return json.dumps(report.to_json(), indent=1, default=str)
