"""Stable shape of the Betti tables across the whole family.

Once the number of variables reaches the largest generator length m, each
all-positive record spawns a new one per extra variable: the homological
degree goes up by one and the smallest entry is repeated once more.  From the
finitely many records at levels 1..m this module produces, for every larger
level, the full position set, the graded table as a union of line segments,
and closed forms for projective dimension and regularity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .betti import BettiRecord, BettiSet, betti_set, pd_and_reg
from .ideals import SymmetricIdeal, ZeroIdealError


class SizeCapError(ValueError):
    """Materializing this many records was refused; use the run-length form."""


@dataclass(frozen=True, order=True)
class CompactDegree:
    """A sorted exponent vector stored as prefix + repeated block + zeros.

    The representation is canonical: trailing prefix entries equal to the
    repeated value are folded into the repeat count, and a repeated value of
    zero is folded into the zero count, so structural equality coincides with
    equality of the expanded vectors.
    """

    prefix: tuple[int, ...] = ()
    repeated_value: int = 0
    repeat_count: int = 0
    zero_count: int = 0

    def __post_init__(self):
        prefix = tuple(self.prefix)
        rep, count, zeros = self.repeated_value, self.repeat_count, self.zero_count
        if count < 0 or zeros < 0 or rep < 0:
            raise ValueError("counts and values must be nonnegative")
        if count == 0:
            rep = 0
        if rep == 0 and count:
            zeros += count
            count = 0
        while count and prefix and prefix[-1] == rep:
            prefix = prefix[:-1]
            count += 1
        if any(e < 1 for e in prefix):
            raise ValueError(f"prefix entries must be positive: {prefix}")
        if any(prefix[k] < prefix[k + 1] for k in range(len(prefix) - 1)):
            raise ValueError(f"prefix must be weakly decreasing: {prefix}")
        if count and prefix and prefix[-1] < rep:
            raise ValueError("repeated value exceeds the last prefix entry")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "repeated_value", rep)
        object.__setattr__(self, "repeat_count", count)
        object.__setattr__(self, "zero_count", zeros)

    @classmethod
    def from_vector(cls, degree) -> "CompactDegree":
        degree = tuple(degree)
        zeros = 0
        while degree and degree[-1] == 0:
            degree = degree[:-1]
            zeros += 1
        return cls(degree, 0, 0, zeros)

    @property
    def length(self) -> int:
        return len(self.prefix) + self.repeat_count + self.zero_count

    def total(self) -> int:
        return sum(self.prefix) + self.repeated_value * self.repeat_count

    def support_size(self) -> int:
        return len(self.prefix) + self.repeat_count

    def expand(self) -> tuple[int, ...]:
        return (self.prefix
                + (self.repeated_value,) * self.repeat_count
                + (0,) * self.zero_count)

    def runs(self) -> list[list[int]]:
        """Run-length encoding [[value, count], ...] without expanding."""
        out: list[list[int]] = []
        for v in self.prefix:
            if out and out[-1][0] == v:
                out[-1][1] += 1
            else:
                out.append([v, 1])
        for v, c in ((self.repeated_value, self.repeat_count), (0, self.zero_count)):
            if not c:
                continue
            if out and out[-1][0] == v:
                out[-1][1] += c
            else:
                out.append([v, c])
        return out


@dataclass(frozen=True, order=True)
class CompactRecord:
    """A Betti record whose degree is stored in run-length form."""

    i: int
    degree: CompactDegree
    rank: int


@dataclass
class SegmentSet:
    """Start-and-slope description of every stabilized graded Betti table.

    From level m on, the nonzero table cells are the base cells (the level
    m - 1 table) together with one segment per start triple (i, j, c): the
    cells (i + k, j + c k) for k = 0 .. n - m.  `rank_sums` keeps the total
    rank behind each collapsed triple.
    """

    base: frozenset[tuple[int, int]]
    starts: frozenset[tuple[int, int, int]]
    m: int
    rank_sums: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def graded_positions(self, n: int) -> set[tuple[int, int]]:
        if n < self.m:
            raise ValueError(f"level {n} is below the stabilization level {self.m}")
        positions = set(self.base)
        for (i, j, c) in self.starts:
            positions.update((i + k, j + c * k) for k in range(n - self.m + 1))
        return positions

    def pd_value(self, n: int) -> int:
        positions = self.graded_positions(n)
        if not positions:
            raise ZeroIdealError("no positions")
        return max(i for i, _ in positions)

    def reg_value(self, n: int) -> int:
        positions = self.graded_positions(n)
        if not positions:
            raise ZeroIdealError("no positions")
        return max(j for _, j in positions)


@dataclass(frozen=True)
class AsymptoticProfile:
    """Closed forms for projective dimension and regularity of the family.

    pd(level n) = n - pd_offset for n >= stabilization_level, and
    reg(level n) = reg_slope * n + reg_intercept for n >= threshold.  The
    Cohen-Macaulay flag is level independent.
    """

    pd_offset: int
    reg_slope: int
    reg_intercept: int
    threshold: int
    cohen_macaulay: bool
    min_first_part: int
    min_length: int
    stabilization_level: int

    def pd_at(self, n: int) -> int:
        return n - self.pd_offset

    def reg_at(self, n: int) -> int:
        return self.reg_slope * n + self.reg_intercept


def extrapolate_full_support(f_records, n: int, m: int | None = None) -> tuple[CompactRecord, ...]:
    """Push the all-positive records from the stabilization level out to n variables.

    Each record (i, (a_1..a_m)) becomes (i + n - m, (a_1..a_{m-1}, a_m repeated
    1 + n - m times)).  Ranks are carried along unchanged; position correctness
    is a theorem, rank correctness is checked separately (rank_stability_report).
    """
    records = sorted(f_records)
    if not records:
        return ()
    lengths = {len(r.degree) for r in records}
    if len(lengths) != 1:
        raise ValueError("records come from different levels")
    level = lengths.pop()
    if m is None:
        m = level
    elif m != level:
        raise ValueError(f"records have length {level}, expected {m}")
    if n < m:
        raise ValueError(f"target level {n} is below the source level {m}")
    if any(r.degree[-1] < 1 for r in records):
        raise ValueError("extrapolation needs all-positive degrees")
    return tuple(
        CompactRecord(r.i + n - m,
                      CompactDegree(r.degree[:-1], r.degree[-1], 1 + n - m, 0),
                      r.rank)
        for r in records
    )


def compose_betti(ideal: SymmetricIdeal, n: int, f_levels=None,
                  processes: int = 1, cap: int = 500_000) -> tuple[CompactRecord, ...]:
    """All nonzero positions of the level-n ideal assembled from levels 1..m.

    Low levels contribute their all-positive records padded with zeros; the
    stabilization level contributes one record per extra repetition of its
    smallest entry.  Ranks are carried from the source records.
    """
    m = ideal.max_length
    if n < m:
        raise ValueError(f"level {n} is below the stabilization level {m}")
    if f_levels is None:
        f_levels = {t: betti_set(ideal, t, processes=processes) for t in range(1, m + 1)}
    f_top = sorted(f_levels[m].F())
    total = (n - m + 1) * len(f_top) + sum(len(f_levels[t].F()) for t in range(1, m))
    if total > cap:
        raise SizeCapError(
            f"{total} records would be materialized (cap {cap}); "
            "use the family description instead"
        )
    out = []
    for t in range(1, m):
        for r in sorted(f_levels[t].F()):
            out.append(CompactRecord(r.i, CompactDegree(r.degree, 0, 0, n - t), r.rank))
    for r in f_top:
        prefix, rep = r.degree[:-1], r.degree[-1]
        for k in range(m, n + 1):
            out.append(CompactRecord(r.i + k - m,
                                     CompactDegree(prefix, rep, 1 + k - m, n - k),
                                     r.rank))
    return tuple(sorted(out))


def segments(ideal: SymmetricIdeal, f_top=None, bs_below=None) -> SegmentSet:
    """Segment description of the graded tables from the stabilization level on.

    Every all-positive record (i, a) at level m starts one segment at cell
    (i, |a| - i) with slope a_m - 1; duplicate triples are collapsed into one
    start but their ranks are accumulated in rank_sums.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no segment description")
    m = ideal.max_length
    if f_top is None:
        f_top = betti_set(ideal, m).F()
    if bs_below is None:
        bs_below = betti_set(ideal, m - 1) if m >= 2 else BettiSet(0, frozenset())
    base = frozenset(bs_below.graded_positions())
    sums: dict[tuple[int, int, int], int] = {}
    for r in f_top:
        triple = (r.i, sum(r.degree) - r.i, r.degree[-1] - 1)
        sums[triple] = sums.get(triple, 0) + r.rank
    return SegmentSet(base, frozenset(sums), m, sums)


def asymptotics(ideal: SymmetricIdeal, seg: SegmentSet | None = None) -> AsymptoticProfile:
    """Closed-form projective dimension and regularity for the whole family."""
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no asymptotic profile")
    m = ideal.max_length
    w = ideal.min_first_part
    r = ideal.min_length
    if seg is None:
        seg = segments(ideal)
    pd_at_m = seg.pd_value(m)
    slope = w - 1
    max_slope = max(c for (_, _, c) in seg.starts)
    if max_slope != slope:
        raise AssertionError(
            f"segment slopes top out at {max_slope}, expected {slope}"
        )
    if slope == 0:
        intercept = seg.reg_value(m)
        threshold = m
    else:
        intercept = max(j - slope * m for (_, j, c) in seg.starts if c == slope)
        threshold = next(
            n for n in itertools.count(m) if seg.reg_value(n) == slope * n + intercept
        )
    return AsymptoticProfile(
        pd_offset=m - pd_at_m,
        reg_slope=slope,
        reg_intercept=intercept,
        threshold=threshold,
        cohen_macaulay=(pd_at_m == m - r),
        min_first_part=w,
        min_length=r,
        stabilization_level=m,
    )


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification pass, with counterexamples when it failed."""

    passed: bool
    counterexamples: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


def check_shift_equivalence(ideal: SymmetricIdeal, n: int,
                            bs_n: BettiSet | None = None,
                            bs_next: BettiSet | None = None) -> CheckReport:
    """Both directions of the one-step shift between consecutive levels.

    For n at or above the stabilization level, a record with an all-positive
    degree ending in a repeated smallest entry b is nonzero exactly when the
    record one homological degree up with one more b appended is nonzero at
    the next level.  Checked as a bijection between the computed record sets.
    """
    m = ideal.max_length
    if n < m:
        raise ValueError(f"level {n} is below the stabilization level {m}")
    if bs_n is None:
        bs_n = betti_set(ideal, n)
    if bs_next is None:
        bs_next = betti_set(ideal, n + 1)
    f_n = {(r.i, r.degree) for r in bs_n.F()}
    f_next = {(r.i, r.degree) for r in bs_next.F()}
    bad = []
    for (i, a) in sorted(f_n):
        target = (i + 1, a + (a[-1],))
        if target not in f_next:
            bad.append(f"missing lift: {(i, a)} should give {target} one level up")
    for (i, a) in sorted(f_next):
        if len(a) >= 2 and a[-1] == a[-2]:
            source = (i - 1, a[:-1])
            if source not in f_n:
                bad.append(f"spurious record {(i, a)}: no source {source} one level down")
    return CheckReport(not bad, tuple(bad))


def check_positive_lift(ideal: SymmetricIdeal, n: int,
                        bs_n: BettiSet | None = None,
                        bs_next: BettiSet | None = None) -> CheckReport:
    """Every all-positive record lifts one level up with some entry 1..min appended."""
    if bs_n is None:
        bs_n = betti_set(ideal, n)
    if bs_next is None:
        bs_next = betti_set(ideal, n + 1)
    f_next = {(r.i, r.degree) for r in bs_next.F()}
    bad = []
    for (i, a) in sorted((r.i, r.degree) for r in bs_n.F()):
        if not any((i + 1, a + (k,)) in f_next for k in range(1, a[-1] + 1)):
            bad.append(f"record {(i, a)} has no lift with appended entry 1..{a[-1]}")
    return CheckReport(not bad, tuple(bad))


def rank_stability_report(ideal: SymmetricIdeal, extra_levels: int = 2,
                          f_levels=None, processes: int = 1) -> CheckReport:
    """Composed tables against direct computation at the first few stable levels.

    Position agreement is required (`passed`); carried ranks are compared as
    well and any disagreements are reported in `notes` rather than failing,
    since rank preservation under the shift is an observation, not a theorem.
    """
    m = ideal.max_length
    if f_levels is None:
        f_levels = {t: betti_set(ideal, t, processes=processes) for t in range(1, m + 1)}
    bad = []
    notes = []
    for n in range(m, m + extra_levels + 1):
        direct = f_levels[m] if n == m else betti_set(ideal, n, processes=processes)
        composed = compose_betti(ideal, n, f_levels=f_levels)
        comp = {(r.i, r.degree.expand()): r.rank for r in composed}
        ref = {(r.i, r.degree): r.rank for r in direct.B()}
        for key in sorted(set(comp) ^ set(ref)):
            side = "composed" if key in comp else "direct"
            bad.append(f"level {n}: position {key} only on the {side} side")
        for key in sorted(set(comp) & set(ref)):
            if comp[key] != ref[key]:
                notes.append(
                    f"level {n}: rank at {key} is {ref[key]} directly, {comp[key]} carried"
                )
    return CheckReport(not bad, tuple(bad), tuple(notes))


def length_two_closed_form(ideal: SymmetricIdeal, n: int) -> frozenset[BettiRecord]:
    """Exact record set for ideals generated by length-two partitions, no homology run.

    Write the generators as (p_1, q_1), ..., (p_t, q_t) with the p's strictly
    decreasing; minimality forces the q's strictly increasing.  A nonzero
    record has sorted degree (a_1, x, ..., x, 0, ..., 0) with a_1 = p_k for
    some k, and the lattice and same-support filters pin x down to three
    families:

    * (i, (p_k, q_k repeated i + 1 times)) for every k, in degree i;
    * (i + 1, (p_k, q_{k+1} repeated i + 1 times)) for consecutive pairs;
    * for k = t only, the pure powers (p_t repeated l + 1 times) in degree l.

    All ranks are one except in the balanced case p_t = q_t, where the two
    constant families coincide and the divisibility complex at (p_t repeated
    i + 2 times) is the codimension-two skeleton of a simplex instead of a
    sphere, giving rank i + 1.  The smallest two-generator example already
    shows this.
    """
    gens = sorted(ideal.generators, key=lambda g: -g.parts[0])
    if not gens:
        raise ZeroIdealError("the zero ideal has no closed form")
    if any(g.length != 2 for g in gens):
        raise ValueError("every generator must have length 2")
    ps = [g.parts[0] for g in gens]
    qs = [g.parts[1] for g in gens]
    if any(ps[k] <= ps[k + 1] for k in range(len(gens) - 1)) or any(
        qs[k] >= qs[k + 1] for k in range(len(gens) - 1)
    ):
        raise AssertionError("antichain generators must interleave strictly")
    if n < 2:
        return frozenset()
    records = []
    last = len(gens) - 1
    for k in range(len(gens)):
        balanced = k == last and ps[k] == qs[k]
        for i in range(n - 1):
            rank = i + 1 if balanced else 1
            records.append(
                BettiRecord(i, (ps[k],) + (qs[k],) * (i + 1) + (0,) * (n - i - 2), rank)
            )
        if k + 1 < len(gens):
            for i in range(n - 1):
                records.append(
                    BettiRecord(i + 1, (ps[k],) + (qs[k + 1],) * (i + 1) + (0,) * (n - i - 2), 1)
                )
    if ps[last] > qs[last]:
        for ell in range(1, n):
            records.append(
                BettiRecord(ell, (ps[last],) * (ell + 1) + (0,) * (n - ell - 1), 1)
            )
    return frozenset(records)
