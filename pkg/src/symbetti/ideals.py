"""Partitions, symmetric monomial ideals, and candidate multidegree enumeration.

A symmetric monomial ideal is determined by the antichain of partitions whose
permuted monomials generate it.  Membership, orbit counting and the finite set
of sorted exponent vectors that can carry nonzero multigraded Betti numbers
all reduce to componentwise comparisons of sorted sequences.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .homology import validate_characteristic


class ZeroIdealError(ValueError):
    """An operation that needs a nonzero ideal was given the zero ideal."""


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for k, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers: {parts}")
            if k and parts[k - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class Multidegree:
    """An exponent vector of explicit length."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exps):
            raise ValueError(f"exponents must be nonnegative integers: {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return len(self.exponents)

    def sorted_desc(self) -> tuple[int, ...]:
        return tuple(sorted(self.exponents, reverse=True))

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, e in enumerate(self.exponents) if e > 0)

    def total(self) -> int:
        return sum(self.exponents)


def _as_parts(p) -> tuple[int, ...]:
    return p.parts if isinstance(p, Partition) else tuple(p)


def dominates(a: Sequence[int], lam) -> bool:
    """True iff some permuted copy of the monomial with exponents lam divides x^a.

    Both sides are compared sorted descending, with lam zero padded: matching
    the k-th largest part against the k-th largest exponent is optimal, so the
    componentwise test decides divisibility up to permutation.  The caller must
    pass `a` already sorted descending.
    """
    parts = _as_parts(lam)
    if len(parts) > len(a):
        return False
    return all(p <= e for p, e in zip(parts, a))


def minimal_generators(partitions: Iterable) -> set[Partition]:
    """Drop every partition whose monomial lies in the orbit ideal of another."""
    pool = {p if isinstance(p, Partition) else Partition(tuple(p)) for p in partitions}
    return {
        lam
        for lam in pool
        if not any(mu != lam and dominates(lam.parts, mu) for mu in pool)
    }


@dataclass(frozen=True)
class SymmetricIdeal:
    """A monomial ideal fixed by all permutations of the variables.

    `generators` is the minimal antichain of partitions; the constructor
    rejects redundant sets (use minimal_generators first).  The zero ideal is
    the one with no generators.
    """

    generators: frozenset[Partition]
    characteristic: int = 0
    name: str | None = None

    def __post_init__(self):
        gens = frozenset(
            p if isinstance(p, Partition) else Partition(tuple(p)) for p in self.generators
        )
        object.__setattr__(self, "generators", gens)
        validate_characteristic(self.characteristic)
        if minimal_generators(gens) != set(gens):
            raise ValueError("generators are not an antichain; apply minimal_generators")

    @classmethod
    def from_parts(cls, parts: Iterable[Sequence[int]], characteristic: int = 0,
                   name: str | None = None) -> "SymmetricIdeal":
        """Build from raw part lists, minimalizing the generating set."""
        return cls(frozenset(minimal_generators(Partition(tuple(p)) for p in parts)),
                   characteristic, name)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def _require_nonzero(self):
        if self.is_zero:
            raise ZeroIdealError("the zero ideal has no generator statistics")

    @property
    def max_length(self) -> int:
        """Largest generator length; the level from which the tables stabilize."""
        self._require_nonzero()
        return max(g.length for g in self.generators)

    @property
    def min_length(self) -> int:
        """Smallest generator length; one more than the Krull dimension of the quotient."""
        self._require_nonzero()
        return min(g.length for g in self.generators)

    @property
    def min_first_part(self) -> int:
        """Smallest leading part among the generators; drives the regularity slope."""
        self._require_nonzero()
        return min(g.parts[0] for g in self.generators)


def restrict_to_n(ideal: SymmetricIdeal, n: int) -> tuple[Partition, ...]:
    """Generators of the level-n ideal: those of length at most n."""
    return tuple(sorted((g for g in ideal.generators if g.length <= n),
                        key=lambda g: g.parts))


def contains_monomial(gens: Iterable, a: Sequence[int]) -> bool:
    """Membership of x^a in the ideal generated by the given partitions.

    `gens` must already be restricted to the ambient variable count (see
    restrict_to_n); `a` may be unsorted.
    """
    s = sorted(a, reverse=True)
    return any(dominates(s, g) for g in gens)


def orbit_size(a: Sequence[int], n: int | None = None) -> int:
    """Number of distinct rearrangements of the exponent vector a."""
    a = tuple(a)
    if n is None:
        n = len(a)
    elif n != len(a):
        raise ValueError(f"degree has length {len(a)}, expected {n}")
    denom = 1
    for count in Counter(a).values():
        denom *= math.factorial(count)
    return math.factorial(n) // denom


def candidate_degrees(ideal: SymmetricIdeal, n: int,
                      prune_same_support: bool = True) -> list[tuple[int, ...]]:
    """Sorted exponent vectors that can carry a nonzero Betti number at level n.

    Entries are drawn from the generator parts (plus zero), the monomial must
    lie in the ideal, and the repeated-tail shape forced by symmetry is
    enforced: with m the largest generator length, any degree supported on
    t > m positions must repeat its m-th entry through position t.  The
    optional last filter drops degrees where some orbit generator divides
    without shrinking the support (those are always acyclic); disabling it
    only adds harmless acyclic candidates.
    """
    gens = restrict_to_n(ideal, n)
    if not gens:
        return []
    pool = sorted({0} | {p for g in gens for p in g.parts}, reverse=True)
    m = max(g.length for g in gens)
    out = []
    for a in itertools.combinations_with_replacement(pool, n):
        # pool is sorted descending, so each tuple is weakly decreasing
        if not any(dominates(a, g) for g in gens):
            continue
        t = sum(1 for e in a if e > 0)
        if t > m and a[m - 1] > a[t - 1]:
            continue
        if prune_same_support and _divisor_with_same_support(gens, a, t):
            continue
        out.append(a)
    return out


def _divisor_with_same_support(gens, a, t) -> bool:
    # Some permuted generator fits under a with every support entry lowered by
    # at most a_i - 1, i.e. divides x^a without killing any variable.
    interior = tuple(e - 1 for e in a[:t])
    return any(dominates(interior, g) for g in gens)
