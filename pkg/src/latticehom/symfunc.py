"""Characters of symmetric groups and symmetric functions of bounded degree.

Symmetric functions are stored in the power-sum basis with exact rational
coefficients; Schur and complete homogeneous coordinates are derived through
the Murnaghan-Nakayama rule.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .partitions import Partition, class_size, cycle_type, partition_text, partitions, z_lambda

DECOMPOSE_MAX_N = 12
PLETHYSM_MAX_DEGREE = 20


class DegreeGuardError(ValueError):
    """A degree or size guard was exceeded."""


class NotACharacterError(ValueError):
    """A class function has a negative or non-integral irreducible multiplicity."""


# --- irreducible characters --------------------------------------------------


@lru_cache(maxsize=None)
def mn_character(lam: Partition, rho: Partition) -> int:
    """``chi^lam(rho)`` by the Murnaghan-Nakayama rule on bead positions."""
    if sum(lam) != sum(rho):
        raise ValueError(f"{lam} and {rho} have different sizes")
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    ell = len(lam)
    beads = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        moved = sorted((target if c == b else c for c in beads), reverse=True)
        mu = tuple(p for p in (moved[i] - (ell - 1 - i) for i in range(ell)) if p > 0)
        total += (-1) ** height * mn_character(mu, rest)
    return total


def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    return {lam: {rho: mn_character(lam, rho) for rho in partitions(n)} for lam in partitions(n)}


def irrep_dimension(lam: Partition) -> int:
    return mn_character(tuple(lam), (1,) * sum(lam))


# --- class functions and decompositions --------------------------------------


@dataclass
class ClassFunction:
    """Values on the cycle types of ``S_n``."""

    n: int
    values: dict[Partition, Fraction | int]

    def __post_init__(self) -> None:
        missing = set(partitions(self.n)) - set(self.values)
        if missing:
            raise ValueError(f"class function undefined on {sorted(missing)}")

    @classmethod
    def from_function(cls, n: int, f: Callable[[Partition], Fraction | int]) -> ClassFunction:
        return cls(n, {rho: f(rho) for rho in partitions(n)})

    @classmethod
    def zero(cls, n: int) -> ClassFunction:
        return cls.from_function(n, lambda rho: 0)

    @classmethod
    def trivial(cls, n: int) -> ClassFunction:
        return cls.from_function(n, lambda rho: 1)

    @classmethod
    def irreducible(cls, lam: Partition) -> ClassFunction:
        return cls.from_function(sum(lam), lambda rho: mn_character(tuple(lam), rho))

    def __call__(self, rho_or_perm: Sequence[int]) -> Fraction | int:
        key = tuple(rho_or_perm)
        if key in self.values:
            return self.values[key]
        return self.values[cycle_type(key)]

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._same(other)
        return ClassFunction(self.n, {r: v + other.values[r] for r, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return self + other.scaled(-1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClassFunction) and self.n == other.n and self.values == other.values

    def scaled(self, c: Fraction | int) -> ClassFunction:
        return ClassFunction(self.n, {r: c * v for r, v in self.values.items()})

    def _same(self, other: ClassFunction) -> None:
        if self.n != other.n:
            raise ValueError("class functions of different degrees")

    @property
    def degree(self) -> Fraction | int:
        return self.values[(1,) * self.n] if self.n else self.values[()]

    def inner(self, other: ClassFunction) -> Fraction:
        self._same(other)
        total = sum(Fraction(self.values[r] * other.values[r], z_lambda(r)) for r in self.values)
        return Fraction(total)

    def is_zero(self) -> bool:
        return not any(self.values.values())


@dataclass
class IrrepDecomposition:
    n: int
    mults: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.mults = {tuple(k): v for k, v in self.mults.items() if v}

    @property
    def dimension(self) -> int:
        return sum(m * irrep_dimension(lam) for lam, m in self.mults.items())

    def padded(self) -> PaddedDecomposition:
        return PaddedDecomposition({lam[1:]: m for lam, m in self.mults.items()})

    def max_first_row(self) -> int:
        return max((lam[0] for lam in self.mults), default=0)

    def max_size_plus_first_row(self) -> int:
        return max((sum(lam) + lam[0] for lam in self.mults), default=0)

    def to_rows(self) -> list[tuple[int, str, int]]:
        return [(self.n, partition_text(lam), m) for lam, m in sorted(self.mults.items(), reverse=True)]

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(["n", "lambda", "mult"])
        w.writerows(self.to_rows())
        return buf.getvalue()

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "mults": [{"lambda": list(lam), "mult": m} for lam, m in sorted(self.mults.items(), reverse=True)]}

    def character(self) -> ClassFunction:
        return ClassFunction.from_function(
            self.n, lambda rho: sum(m * mn_character(lam, rho) for lam, m in self.mults.items())
        )


@dataclass
class PaddedDecomposition:
    """Multiplicities keyed by partitions with their first row removed."""

    mults: dict[Partition, int]

    def repad(self, n: int) -> IrrepDecomposition:
        out = {}
        for bar, m in self.mults.items():
            first = n - sum(bar)
            if bar and first < bar[0]:
                raise ValueError(f"cannot pad {bar} to size {n}")
            out[(first, *bar)] = m
        return IrrepDecomposition(n, out)


def decompose(chi: ClassFunction, *, allow_virtual: bool = False, max_n: int = DECOMPOSE_MAX_N) -> IrrepDecomposition:
    """Irreducible multiplicities by character inner products."""
    if chi.n > max_n:
        raise DegreeGuardError(f"n = {chi.n} exceeds the guard {max_n}")
    mults = {}
    for lam in partitions(chi.n):
        m = chi.inner(ClassFunction.irreducible(lam))
        if m.denominator != 1 or (m < 0 and not allow_virtual):
            raise NotACharacterError(f"multiplicity of {lam} is {m}")
        mults[lam] = int(m)
    return IrrepDecomposition(chi.n, mults)


# --- symmetric functions -----------------------------------------------------


class SymFunc:
    """A homogeneous symmetric function in the power-sum basis."""

    def __init__(self, degree: int, p: Mapping[Partition, Fraction | int] | None = None) -> None:
        self.degree = degree
        self.p: dict[Partition, Fraction] = {}
        for rho, c in (p or {}).items():
            if sum(rho) != degree:
                raise ValueError(f"p_{rho} is not of degree {degree}")
            if c:
                self.p[tuple(rho)] = self.p.get(tuple(rho), Fraction(0)) + Fraction(c)
        self.p = {k: v for k, v in self.p.items() if v}

    def __repr__(self) -> str:
        return f"SymFunc(degree={self.degree}, schur={self.schur()})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymFunc) and self.degree == other.degree and self.p == other.p

    def __add__(self, other: SymFunc) -> SymFunc:
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        out = dict(self.p)
        for k, v in other.p.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.degree, out)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + other.scaled(-1)

    def scaled(self, c: Fraction | int) -> SymFunc:
        return SymFunc(self.degree, {k: c * v for k, v in self.p.items()})

    def __mul__(self, other: SymFunc) -> SymFunc:
        out: dict[Partition, Fraction] = {}
        for a, x in self.p.items():
            for b, y in other.p.items():
                key = tuple(sorted(a + b, reverse=True))
                out[key] = out.get(key, 0) + x * y
        return SymFunc(self.degree + other.degree, out)

    def is_zero(self) -> bool:
        return not self.p

    # constructors
    @classmethod
    def one(cls) -> SymFunc:
        return cls(0, {(): 1})

    @classmethod
    def power(cls, rho: Sequence[int]) -> SymFunc:
        rho = tuple(sorted(rho, reverse=True))
        return cls(sum(rho), {rho: 1})

    @classmethod
    def h(cls, k: int) -> SymFunc:
        return cls(k, {rho: Fraction(1, z_lambda(rho)) for rho in partitions(k)})

    @classmethod
    def e(cls, k: int) -> SymFunc:
        return cls(k, {rho: Fraction((-1) ** (k - len(rho)), z_lambda(rho)) for rho in partitions(k)})

    @classmethod
    def h_product(cls, parts: Iterable[int]) -> SymFunc:
        out = cls.one()
        for k in parts:
            out = out * cls.h(k)
        return out

    @classmethod
    def schur_of(cls, lam: Sequence[int]) -> SymFunc:
        lam = tuple(lam)
        n = sum(lam)
        return cls(n, {rho: Fraction(mn_character(lam, rho), z_lambda(rho)) for rho in partitions(n)})

    @classmethod
    def from_basis(cls, degree: int, basis: str, coeffs: Mapping[Partition, Fraction | int]) -> SymFunc:
        out = cls(degree)
        for lam, c in coeffs.items():
            if basis == "schur":
                term = cls.schur_of(lam)
            elif basis == "homogeneous":
                term = cls.h_product(lam)
            elif basis == "powersum":
                term = cls.power(lam)
            else:
                raise ValueError(f"unknown basis {basis!r}")
            out = out + term.scaled(c)
        return out

    @classmethod
    def from_character(cls, chi: ClassFunction) -> SymFunc:
        """The Frobenius characteristic ``sum chi(rho) p_rho / z_rho``."""
        return cls(chi.n, {rho: Fraction(v) / z_lambda(rho) for rho, v in chi.values.items()})

    # coordinates
    def schur(self) -> dict[Partition, Fraction]:
        out = {}
        for lam in partitions(self.degree):
            c = sum((v * mn_character(lam, rho) for rho, v in self.p.items()), Fraction(0))
            if c:
                out[lam] = c
        return out

    def homogeneous(self) -> dict[Partition, Fraction]:
        """Coordinates in the ``h_lambda`` basis by unitriangularity of Kostka numbers."""
        rest = self.schur()
        out: dict[Partition, Fraction] = {}
        while rest:
            lam = min(rest)
            c = rest[lam]
            out[lam] = c
            for mu, k in SymFunc.h_product(lam).schur().items():
                v = rest.get(mu, 0) - c * k
                if v:
                    rest[mu] = v
                else:
                    rest.pop(mu, None)
        return out

    def powersum(self) -> dict[Partition, Fraction]:
        return dict(self.p)

    def coefficients(self, basis: str) -> dict[Partition, Fraction]:
        return {"schur": self.schur, "homogeneous": self.homogeneous, "powersum": self.powersum}[basis]()

    def character(self) -> ClassFunction:
        return ClassFunction.from_function(self.degree, lambda rho: self.p.get(rho, 0) * z_lambda(rho))

    def to_json(self, basis: str = "schur") -> dict[str, Any]:
        return {
            "degree": self.degree,
            "basis": basis,
            "terms": [
                {"lambda": list(lam), "coeff": f"{c.numerator}/{c.denominator}"}
                for lam, c in sorted(self.coefficients(basis).items(), reverse=True)
            ],
        }

    def adams(self, k: int) -> SymFunc:
        """``p_k[f]``: substitute ``p_j -> p_{jk}``."""
        return SymFunc(self.degree * k, {tuple(k * r for r in rho): c for rho, c in self.p.items()})


def plethysm(f: SymFunc, g: SymFunc, *, max_degree: int = PLETHYSM_MAX_DEGREE) -> SymFunc:
    """``f[g]`` through ``p_k[g] = g(x^k)`` and multiplicativity."""
    if f.degree * g.degree > max_degree:
        raise DegreeGuardError(f"plethysm degree {f.degree * g.degree} exceeds {max_degree}")
    out = SymFunc(f.degree * g.degree)
    adams = {}
    for rho, c in f.p.items():
        term = SymFunc.one()
        for k in rho:
            if k not in adams:
                adams[k] = g.adams(k)
            term = term * adams[k]
        out = out + term.scaled(c)
    return out


def frobenius(d: IrrepDecomposition) -> SymFunc:
    return SymFunc.from_basis(d.n, "schur", d.mults)


def composition_partition(S: Iterable[int], n: int) -> Partition:
    S = sorted(S)
    cuts = [0, *S, n]
    return tuple(sorted((b - a for a, b in zip(cuts, cuts[1:])), reverse=True))


def ribbon_schur(S: Iterable[int], n: int) -> SymFunc:
    """Ribbon Schur function: inclusion-exclusion of ``h`` over subsets of ``S``."""
    from .partitions import subsets

    S = tuple(sorted(S))
    if S and (S[0] < 1 or S[-1] >= n):
        raise ValueError(f"rank set {S} must lie inside 1..{n - 1}")
    out = SymFunc(n)
    for T in subsets(S):
        out = out + SymFunc.h_product(composition_partition(T, n)).scaled((-1) ** (len(S) - len(T)))
    return out


def decomposition_from_symfunc(f: SymFunc, *, allow_virtual: bool = False) -> IrrepDecomposition:
    mults = {}
    for lam, c in f.schur().items():
        if c.denominator != 1 or (c < 0 and not allow_virtual):
            raise NotACharacterError(f"Schur coefficient of {lam} is {c}")
        mults[lam] = int(c)
    return IrrepDecomposition(f.degree, mults)


def class_sizes(n: int) -> dict[Partition, int]:
    return {rho: class_size(rho) for rho in partitions(n)}


def decompositions_to_csv(decs: Iterable[IrrepDecomposition]) -> str:
    return "n,lambda,mult\n" + "".join(d.to_csv(header=False) for d in decs)


def decompositions_to_json(decs: Iterable[IrrepDecomposition]) -> str:
    return json.dumps([d.to_json() for d in decs], indent=1)
