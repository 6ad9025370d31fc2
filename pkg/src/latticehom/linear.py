"""Sparse exact linear algebra over the rationals."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Mapping
from fractions import Fraction
from numbers import Rational

Coeff = int | Fraction


class LinComb(dict):
    """A formal linear combination: a dict from basis keys to nonzero exact coefficients."""

    def __init__(self, terms: Mapping | Iterable = (), **_: object) -> None:
        super().__init__()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            self.add_term(k, c)

    def _like(self, terms: Mapping | Iterable = ()) -> LinComb:
        out = type(self).__new__(type(self))
        out.__dict__.update(self.__dict__)
        LinComb.__init__(out, terms)
        return out

    def add_term(self, key: Hashable, c: Coeff) -> None:
        if not isinstance(c, Rational):
            raise TypeError(f"coefficients must be exact, got {c!r}")
        v = self.get(key, 0) + c
        if v:
            self[key] = v
        else:
            self.pop(key, None)

    def __add__(self, other: LinComb) -> LinComb:  # type: ignore[override]
        out = self._like(self)
        for k, c in other.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: LinComb) -> LinComb:
        return self + other.scaled(-1)

    def __neg__(self) -> LinComb:
        return self.scaled(-1)

    def scaled(self, c: Coeff) -> LinComb:
        return self._like((k, c * v) for k, v in self.items())

    def map_keys(self, fn: Callable[[Hashable], Hashable], sign: Callable[[Hashable], int] | None = None) -> LinComb:
        if sign is None:
            return self._like((fn(k), v) for k, v in self.items())
        return self._like((fn(k), sign(k) * v) for k, v in self.items())

    def is_zero(self) -> bool:
        return not self


def exact_rank(rows: Iterable[Mapping[int, Coeff]]) -> int:
    """Rank over Q of a sparse matrix given as rows ``{column: value}``.

    Echelon form keyed by leading column; pivots are scaled to 1, so integer
    matrices with unit pivots never leave the integers.
    """
    pivots: dict[int, dict[int, Coeff]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                a = r[lead]
                if a != 1:
                    r = {c: _div(v, a) for c, v in r.items()}
                pivots[lead] = r
                break
            f = r[lead]
            for c, v in p.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(pivots)


def _div(v: Coeff, a: Coeff) -> Coeff:
    if a == -1:
        return -v
    q = Fraction(v) / a
    return q.numerator if q.denominator == 1 else q


def rank_of_vectors(vectors: Iterable[Mapping[Hashable, Coeff]]) -> int:
    """Exact rank of a list of sparse vectors with arbitrary hashable keys."""
    index: dict[Hashable, int] = {}
    rows = []
    for v in vectors:
        rows.append({index.setdefault(k, len(index)): c for k, c in v.items()})
    return exact_rank(rows)


def fraction_text(c: Coeff) -> str:
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
