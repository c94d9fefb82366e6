"""Independent Tor computation from generator subsets; the cross-check oracle.

The free resolution supported on all subsets of the minimal monomial
generators gives, after tensoring down to the field, one chain complex per
multidegree: subsets whose componentwise lcm equals the degree, graded by
cardinality.  Its homology must agree with the upper Koszul route everywhere,
which is what the verification suite exploits.  This module is written for
falsification power, not speed.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .homology import rank_over_field
from .ideals import SymmetricIdeal, restrict_to_n

GENERATOR_CAP = 20
_STRAND_CAP = 20_000
_MATRIX_CAP = 1_000


class GeneratorCapError(ValueError):
    """Subset enumeration over this many generators was refused."""


def expand_generators(ideal: SymmetricIdeal, n: int) -> tuple[tuple[int, ...], ...]:
    """Minimal monomial generators of the level-n ideal as exponent vectors.

    Distinct rearrangements of an antichain of partitions are automatically
    pairwise indivisible, so no re-minimalization is needed.
    """
    out = set()
    for g in restrict_to_n(ideal, n):
        padded = g.parts + (0,) * (n - g.length)
        out.update(itertools.permutations(padded))
    return tuple(sorted(out))


def _subsets_with_lcm(divisors, a):
    """All subsets of `divisors` (index tuples) whose componentwise max is a.

    Two prunes keep this linear in the output: a branch is abandoned when the
    remaining elements can no longer raise the running lcm to a, and once the
    running lcm reaches a the whole remaining subtree is emitted without any
    further lcm arithmetic (every extension still has lcm a), which also lets
    oversized strands be rejected before they are walked.
    """
    zero = (0,) * len(a)
    count = len(divisors)
    suffix = [zero] * (count + 1)
    for k in range(count - 1, -1, -1):
        suffix[k] = tuple(map(max, suffix[k + 1], divisors[k]))
    found: list[tuple[int, ...]] = []

    def emit_tail(idx, chosen):
        tail = range(idx, count)
        width = count - idx
        base = tuple(chosen)
        if base:
            found.append(base)
        for mask in range(1, 1 << width):
            found.append(base + tuple(idx + j for j in range(width) if mask >> j & 1))

    def grow(idx, lcm, chosen):
        if lcm == a:
            if len(found) + (1 << (count - idx)) > _STRAND_CAP:
                raise GeneratorCapError("degree strand is too large to enumerate")
            emit_tail(idx, chosen)
            return
        if tuple(map(max, lcm, suffix[idx])) != a:
            return
        grow(idx + 1, lcm, chosen)
        chosen.append(idx)
        grow(idx + 1, tuple(map(max, lcm, divisors[idx])), chosen)
        chosen.pop()

    grow(0, zero, [])
    return found


def taylor_strand_tor(generators, a, characteristic=0) -> dict[int, int]:
    """Tor ranks at degree a computed from generator subsets, keyed by degree.

    A subset with k elements sits in homological degree k - 1 (the convention
    for the ideal itself, not its quotient ring, so the output aligns with the
    Betti numbers of the ideal with no shift).  The differential drops one
    element at a time and keeps exactly the terms where the lcm is unchanged.
    """
    a = tuple(a)
    divisors = tuple(sorted(
        g for g in generators
        if len(g) == len(a) and all(x <= y for x, y in zip(g, a))
    ))
    if len(divisors) > GENERATOR_CAP:
        raise GeneratorCapError(
            f"{len(divisors)} generators divide the degree; the cap is {GENERATOR_CAP}"
        )
    by_size: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for s in _subsets_with_lcm(divisors, a):
        by_size[len(s)].append(s)
    if not by_size:
        return {}
    if max(len(g) for g in by_size.values()) > _MATRIX_CAP:
        raise GeneratorCapError("degree strand needs ranks beyond the matrix cap")
    for group in by_size.values():
        group.sort()
    index = {size: {s: k for k, s in enumerate(group)} for size, group in by_size.items()}
    ranks: dict[int, int] = {}
    for size in range(2, max(by_size) + 1):
        cols = by_size.get(size, [])
        lower = index.get(size - 1, {})
        if not cols or not lower:
            continue
        mat = [[0] * len(cols) for _ in range(len(lower))]
        for c, s in enumerate(cols):
            for j in range(len(s)):
                row = lower.get(s[:j] + s[j + 1:])
                if row is not None:
                    mat[row][c] = -1 if j % 2 else 1
        ranks[size] = rank_over_field(mat, characteristic)
    out = {}
    for size, basis in by_size.items():
        h = len(basis) - ranks.get(size, 0) - ranks.get(size + 1, 0)
        if h:
            out[size - 1] = h
    return out


def strand_boundary_matrices(generators, a) -> dict[int, list[list[int]]]:
    """Integer boundary matrices of the degree-a strand, for consistency checks."""
    a = tuple(a)
    divisors = tuple(sorted(
        g for g in generators
        if len(g) == len(a) and all(x <= y for x, y in zip(g, a))
    ))
    if len(divisors) > GENERATOR_CAP:
        raise GeneratorCapError(
            f"{len(divisors)} generators divide the degree; the cap is {GENERATOR_CAP}"
        )
    by_size: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for s in _subsets_with_lcm(divisors, a):
        by_size[len(s)].append(s)
    for group in by_size.values():
        group.sort()
    index = {size: {s: k for k, s in enumerate(group)} for size, group in by_size.items()}
    mats: dict[int, list[list[int]]] = {}
    for size in sorted(by_size):
        if size - 1 not in by_size:
            continue
        cols, lower = by_size[size], index[size - 1]
        mat = [[0] * len(cols) for _ in range(len(lower))]
        for c, s in enumerate(cols):
            for j in range(len(s)):
                row = lower.get(s[:j] + s[j + 1:])
                if row is not None:
                    mat[row][c] = -1 if j % 2 else 1
        mats[size] = mat
    return mats


def scarf_degrees(generators) -> set[tuple[int, tuple[int, ...]]]:
    """Pairs (|S| - 1, lcm S) over subsets S whose lcm no other subset attains.

    For ideals resolved by their unique-lcm subsets (tree ideals, for one)
    these are exactly the nonzero Betti positions; in general they form a
    subset of them.
    """
    gens = tuple(sorted(set(generators)))
    if len(gens) > GENERATOR_CAP:
        raise GeneratorCapError(f"{len(gens)} generators; the cap is {GENERATOR_CAP}")
    if not gens:
        return set()
    n = len(gens[0])
    counts: dict[tuple[int, ...], int] = {}
    sizes: dict[tuple[int, ...], int] = {}

    def walk(idx, lcm, size):
        if idx == len(gens):
            if size:
                seen = counts.get(lcm, 0)
                counts[lcm] = seen + 1
                if not seen:
                    sizes[lcm] = size
            return
        walk(idx + 1, lcm, size)
        walk(idx + 1, tuple(map(max, lcm, gens[idx])), size + 1)

    walk(0, (0,) * n, 0)
    return {(sizes[lcm] - 1, lcm) for lcm, c in counts.items() if c == 1}
