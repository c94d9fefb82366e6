"""Multigraded Betti numbers of symmetric monomial ideals.

The Betti number in homological degree i and multidegree a equals the reduced
homology in degree i - 1 of the upper Koszul complex of a: the subsets F of
the support of a with x^a / x^F still in the ideal.  Only sorted degrees are
computed; the full table follows by symmetry and orbit counting.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .homology import SimplicialComplex, reduced_homology_dims, vertex_cap, ComplexTooLargeError
from .ideals import (
    SymmetricIdeal,
    ZeroIdealError,
    candidate_degrees,
    contains_monomial,
    orbit_size,
    restrict_to_n,
)


@dataclass(frozen=True, order=True)
class BettiRecord:
    """One nonzero multigraded Betti number: (homological degree, sorted degree, rank)."""

    i: int
    degree: tuple[int, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "degree", tuple(self.degree))
        if self.rank < 1:
            raise ValueError("zero entries are never stored")
        if self.i >= sum(1 for e in self.degree if e > 0):
            raise ValueError(
                f"homological degree {self.i} must be below the support size of {self.degree}"
            )


@dataclass(frozen=True)
class BettiSet:
    """Every nonzero multigraded Betti number at one level of the family."""

    n: int
    records: frozenset[BettiRecord]

    def B(self) -> set[BettiRecord]:
        """All records, zero padded degrees included."""
        return set(self.records)

    def F(self) -> set[BettiRecord]:
        """Records whose degree is positive in every coordinate."""
        return {r for r in self.records if r.degree and r.degree[-1] >= 1}

    def positions(self) -> set[tuple[int, tuple[int, ...]]]:
        return {(r.i, r.degree) for r in self.records}

    def graded_positions(self) -> set[tuple[int, int]]:
        """Nonzero (i, j) cells of the graded Betti table, j = total degree - i."""
        return {(r.i, sum(r.degree) - r.i) for r in self.records}

    def sorted_records(self) -> list[BettiRecord]:
        return sorted(self.records)

    @property
    def is_empty(self) -> bool:
        return not self.records


def upper_koszul_complex(gens, a) -> SimplicialComplex:
    """Subsets F of the support of a such that x^a / x^F stays in the ideal.

    Vertex j of the result is the j-th support position of a; positions where
    a vanishes can never appear in a face (the quotient would have a negative
    exponent).  `gens` must be restricted to len(a) variables already.
    """
    a = tuple(a)
    support = [k for k, e in enumerate(a) if e > 0]
    t = len(support)
    cap = vertex_cap()
    if t > cap:
        raise ComplexTooLargeError(f"degree has support {t}, above the vertex cap {cap}")
    faces = []
    for mask in range(1 << t):
        b = list(a)
        for j in range(t):
            if mask >> j & 1:
                b[support[j]] -= 1
        if contains_monomial(gens, b):
            faces.append(mask)
    return SimplicialComplex(t, frozenset(faces))


def betti_at_degree(ideal: SymmetricIdeal, a, gens=None) -> dict[int, int]:
    """Nonzero Betti ranks of the level-len(a) ideal at one exponent vector."""
    a = tuple(a)
    if gens is None:
        gens = restrict_to_n(ideal, len(a))
    return _betti_dims(gens, ideal.characteristic, a)


def _betti_dims(gens, characteristic, a) -> dict[int, int]:
    cx = upper_koszul_complex(gens, a)
    return {i + 1: d for i, d in reduced_homology_dims(cx, characteristic).items()}


def _degree_worker(args):
    gens, characteristic, a = args
    return a, _betti_dims(gens, characteristic, a)


def betti_set(ideal: SymmetricIdeal, n: int, processes: int = 1) -> BettiSet:
    """All nonzero multigraded Betti numbers of the level-n ideal.

    Only sorted degree representatives are stored.  With processes > 1 the
    independent per-degree computations are fanned out to a pool; the result
    is merged deterministically either way.
    """
    cands = candidate_degrees(ideal, n)
    gens = restrict_to_n(ideal, n)
    if processes and processes > 1 and len(cands) > 1:
        payload = tuple(g.parts for g in gens)
        args = [(payload, ideal.characteristic, a) for a in cands]
        with multiprocessing.Pool(processes) as pool:
            results = pool.map(_degree_worker, args)
    else:
        results = [(a, _betti_dims(gens, ideal.characteristic, a)) for a in cands]
    records = []
    for a, dims in results:
        records.extend(BettiRecord(i, a, rank) for i, rank in sorted(dims.items()))
    return BettiSet(n, frozenset(records))


def graded_table(bs: BettiSet) -> dict[tuple[int, int], int]:
    """Total graded Betti numbers, keyed by table cell (i, j) with j = degree - i.

    Each stored sorted record contributes once per member of its orbit, so the
    cell value is the orbit size times the rank, summed over records.
    """
    table: dict[tuple[int, int], int] = {}
    for r in bs.records:
        total = sum(r.degree)
        key = (r.i, total - r.i)
        table[key] = table.get(key, 0) + orbit_size(r.degree, bs.n) * r.rank
    return table


def pd_and_reg(bs: BettiSet) -> tuple[int, int]:
    """Projective dimension and regularity read off the record set."""
    if bs.is_empty:
        raise ZeroIdealError("projective dimension and regularity are undefined for the zero ideal")
    pd = max(r.i for r in bs.records)
    reg = max(sum(r.degree) - r.i for r in bs.records)
    return pd, reg
