"""Jet-weight partitions, fibre incidence patterns, and case classification.

A configuration for k-jet verification is a weight vector (k_1, ..., k_r)
with sum k+1 together with the incidence pattern of the r points: which
points share a fibre of the first fibration (blocks tagged by fibre kind)
and which share a fibre of the second.  Points are abstract; two distinct
points lie on at most one common fibre pair, so a block of the A-side and a
block of the B-side meet in at most one point.

Configurations are enumerated up to weight-preserving relabeling of points.
An incidence pattern is encoded as a matrix (rows = A-blocks, columns =
B-blocks, at most one point per cell, entries = weights); representatives
are deduplicated by a deterministic fixpoint normal form under row/column
permutations.  Equal normal forms are always genuinely isomorphic; a few
isomorphic patterns may survive as distinct representatives, which only
makes the checked set larger.

Classification against the threshold (k+1)/2 (exact rational comparison):
a block is heavy when its weight sum strictly exceeds the threshold; the
B-side is additionally tested non-strictly when a heavy A-side block is
present.  On surfaces where (0,1) is not an effective class (even types),
B-blocks never classify as heavy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .surfaces import (
    FULL_A,
    INTERMEDIATE_A,
    SINGULAR_A,
    SurfaceType,
)

# Case labels.
R1 = "R1"
CASE_I = "I"
CASE_IIA = "IIa"
CASE_IIB = "IIb"
CASE_IIIA = "IIIa"
CASE_IIIB = "IIIb"
CASE_IV = "IV"
SING_M_A = "SingM-a"
SING_M_B = "SingM-b"

ALL_LABELS = (R1, CASE_I, CASE_IIA, CASE_IIB, CASE_IIIA, CASE_IIIB, CASE_IV,
              SING_M_A, SING_M_B)

# Labels proved via Kawamata-Viehweg (M nef and big); the rest go through
# Norimatsu (N = M - F ample, F an SNC correction).
KAWAMATA_VIEHWEG_LABELS = frozenset({R1, CASE_I, CASE_IIIA, SING_M_A})
NORIMATSU_LABELS = frozenset({CASE_IIA, CASE_IIB, CASE_IIIB, CASE_IV, SING_M_B})


@dataclass(frozen=True)
class ABlock:
    """Points sharing one fibre of the first fibration, with the fibre's kind."""

    points: tuple[int, ...]
    kind: str
    fibre_coeff: int  # first coordinate of the fibre class: 1, m, or mu

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "kind": self.kind,
            "fibre_coeff": self.fibre_coeff,
        }


@dataclass(frozen=True)
class JetConfiguration:
    k: int
    weights: tuple[int, ...]
    a_blocks: tuple[ABlock, ...]
    b_blocks: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.weights)

    def validate(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        if any(
            self.weights[i] < self.weights[i + 1] for i in range(self.r - 1)
        ):
            raise ValueError("weights must be non-increasing")
        if sum(self.weights) != self.k + 1:
            raise ValueError(
                f"weights must sum to k+1={self.k + 1}, got {sum(self.weights)}"
            )
        pts = set(range(self.r))
        for blocks in (tuple(b.points for b in self.a_blocks), self.b_blocks):
            seen: set[int] = set()
            for blk in blocks:
                if not blk:
                    raise ValueError("empty incidence block")
                if set(blk) & seen:
                    raise ValueError("incidence blocks must be disjoint")
                seen.update(blk)
            if seen != pts:
                raise ValueError("incidence blocks must cover all points")
        for ab in self.a_blocks:
            if ab.kind not in (SINGULAR_A, INTERMEDIATE_A, FULL_A):
                raise ValueError(f"unknown A-block kind {ab.kind!r}")
            if ab.kind == SINGULAR_A and ab.fibre_coeff != 1:
                raise ValueError("singular-A blocks carry fibre class (1,0)")
            if ab.kind != SINGULAR_A and ab.fibre_coeff < 2:
                raise ValueError("non-minimal fibre coefficient must be >= 2")
            for bb in self.b_blocks:
                if len(set(ab.points) & set(bb)) > 1:
                    raise ValueError(
                        "an A-block and a B-block share at most one point"
                    )

    def weight_of(self, points: tuple[int, ...]) -> int:
        return sum(self.weights[i] for i in points)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "weights": list(self.weights),
            "a_blocks": [b.to_json() for b in self.a_blocks],
            "b_blocks": [list(b) for b in self.b_blocks],
        }


def fibre_weight_sum(cfg: JetConfiguration, points: tuple[int, ...]) -> Fraction:
    """Weight sum of a block, as an exact rational for threshold comparison."""
    return Fraction(cfg.weight_of(points))


@dataclass(frozen=True)
class Classification:
    label: str
    heavy_a: int | None = None  # index into cfg.a_blocks
    heavy_b: int | None = None  # index into cfg.b_blocks
    shared_point: int | None = None  # unique point in the heavy pair, if any

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "heavy_a": self.heavy_a,
            "heavy_b": self.heavy_b,
            "shared_point": self.shared_point,
        }


def classify(cfg: JetConfiguration, s: SurfaceType) -> Classification:
    """Assign a configuration to its proof case.  Total and deterministic.

    Requires k >= 2: 1-jet ampleness of (3,3) is certified externally, so
    k = 1 never reaches the case analysis.
    """
    cfg.validate()
    if cfg.k < 2:
        raise ValueError(
            "classification requires k >= 2 (k = 1 is certified externally "
            "via very ampleness of type (3,3))"
        )
    for ab in cfg.a_blocks:
        if ab.kind == INTERMEDIATE_A and ab.fibre_coeff not in s.intermediate_fibre_coeffs:
            raise ValueError(
                f"type {s.type_id} has no intermediate fibre with coefficient "
                f"{ab.fibre_coeff}"
            )
        if ab.kind == FULL_A and ab.fibre_coeff != s.mu:
            raise ValueError(f"full fibre class on type {s.type_id} is ({s.mu},0)")
    if cfg.r == 1:
        return Classification(R1)

    half = Fraction(cfg.k + 1, 2)
    heavy_a_idxs = [
        i for i, ab in enumerate(cfg.a_blocks) if cfg.weight_of(ab.points) > half
    ]
    if len(heavy_a_idxs) > 1:
        raise AssertionError("two disjoint heavy blocks would exceed the total weight")
    heavy_a = heavy_a_idxs[0] if heavy_a_idxs else None

    if not s.has_unit_b_class:
        # (0,1) is not effective: B-fibres have class (0, gamma/mu) with
        # gamma/mu >= 2 and can never become critical, so B-blocks are
        # ignored and the b-variant labels do not occur.
        if heavy_a is None:
            return Classification(CASE_I)
        return Classification(_a_label(cfg.a_blocks[heavy_a].kind, False), heavy_a)

    if heavy_a is None:
        strict_heavy_b = [
            j for j, bb in enumerate(cfg.b_blocks) if cfg.weight_of(bb) > half
        ]
        if len(strict_heavy_b) > 1:
            raise AssertionError("two disjoint heavy B-blocks cannot occur")
        if strict_heavy_b:
            return Classification(CASE_IV, None, strict_heavy_b[0], None)
        return Classification(CASE_I)

    s_points = set(cfg.a_blocks[heavy_a].points)
    weak_heavy_b = [
        j for j, bb in enumerate(cfg.b_blocks) if cfg.weight_of(bb) >= half
    ]
    if not weak_heavy_b:
        return Classification(_a_label(cfg.a_blocks[heavy_a].kind, False), heavy_a)
    sharing = [j for j in weak_heavy_b if s_points & set(cfg.b_blocks[j])]
    if not sharing:
        # sum(S) > (k+1)/2 and sum(T) >= (k+1)/2 force S and T to meet
        raise AssertionError("heavy A- and B-blocks must share a point")
    heavy_b = sharing[0]
    shared = sorted(s_points & set(cfg.b_blocks[heavy_b]))
    if len(shared) != 1:
        raise AssertionError("heavy blocks share exactly one point")
    return Classification(
        _a_label(cfg.a_blocks[heavy_a].kind, True), heavy_a, heavy_b, shared[0]
    )


def _a_label(kind: str, with_heavy_b: bool) -> str:
    if kind == SINGULAR_A:
        return CASE_IIB if with_heavy_b else CASE_IIA
    if kind == INTERMEDIATE_A:
        return SING_M_B if with_heavy_b else SING_M_A
    return CASE_IIIB if with_heavy_b else CASE_IIIA


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def weight_partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive partitions of total, descending lexicographic."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in weight_partitions(total - first, first):
            yield (first,) + rest


def _multiset_block_partitions(ms: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """Partitions of a weight multiset into blocks, as canonical sorted tuples."""
    results: set[tuple[tuple[int, ...], ...]] = set()
    items = sorted(ms, reverse=True)
    blocks: list[list[int]] = []

    def rec(idx: int) -> None:
        if idx == len(items):
            results.add(
                tuple(
                    sorted((tuple(sorted(b, reverse=True)) for b in blocks), reverse=True)
                )
            )
            return
        x = items[idx]
        seen: set[tuple[int, ...]] = set()
        for i, b in enumerate(blocks):
            key = tuple(sorted(b, reverse=True))
            if key in seen:
                continue
            seen.add(key)
            blocks[i] = b + [x]
            rec(idx + 1)
            blocks[i] = b
        blocks.append([x])
        rec(idx + 1)
        blocks.pop()

    rec(0)
    return sorted(results, reverse=True)


def _normal_form(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Fixpoint of row/column descending sorts; key for isomorphism dedup."""
    m = [list(r) for r in rows]
    for _ in range(12):
        m.sort(reverse=True)
        cols = sorted(zip(*m), reverse=True)
        m2 = [list(row) for row in zip(*cols)]
        if m2 == m:
            break
        m = m2
    return tuple(tuple(r) for r in m)


@lru_cache(maxsize=None)
def incidence_structures(weights: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Deduplicated incidence matrices for a non-increasing weight vector.

    Rows are A-blocks, columns are B-blocks; a nonzero entry is the weight of
    the unique point in that cell.  During generation, columns whose current
    content coincides are interchangeable and only one representative is
    extended, which prunes most of the labeled search space.
    """
    out: set[tuple[tuple[int, ...], ...]] = set()
    for ablocks in _multiset_block_partitions(weights):
        points = [(ri, w) for ri, blk in enumerate(ablocks) for w in blk]
        cols: list[tuple[tuple[int, int], ...]] = []
        col_rows: list[set[int]] = []

        def emit() -> None:
            q = len(cols)
            rows = []
            for ri in range(len(ablocks)):
                row = [0] * q
                for ci in range(q):
                    for rj, w in cols[ci]:
                        if rj == ri:
                            row[ci] = w
                rows.append(tuple(row))
            out.add(_normal_form(tuple(rows)))

        def rec(i: int) -> None:
            if i == len(points):
                emit()
                return
            ri, w = points[i]
            seen: set[tuple[tuple[int, int], ...]] = set()
            for ci in range(len(cols)):
                if ri in col_rows[ci] or cols[ci] in seen:
                    continue
                seen.add(cols[ci])
                cols[ci] = cols[ci] + ((ri, w),)
                col_rows[ci].add(ri)
                rec(i + 1)
                col_rows[ci].remove(ri)
                cols[ci] = cols[ci][:-1]
            cols.append(((ri, w),))
            col_rows.append({ri})
            rec(i + 1)
            col_rows.pop()
            cols.pop()

        rec(0)
    return tuple(sorted(out, reverse=True))


def _structure_to_blocks(
    matrix: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Label the points of a matrix: weights non-increasing, then row, then column."""
    cells = [
        (i, j, w)
        for i, row in enumerate(matrix)
        for j, w in enumerate(row)
        if w != 0
    ]
    cells.sort(key=lambda c: (-c[2], c[0], c[1]))
    weights = tuple(c[2] for c in cells)
    index = {(i, j): p for p, (i, j, _) in enumerate(cells)}
    a_blocks = tuple(
        tuple(sorted(index[(i, j)] for j, w in enumerate(row) if w != 0))
        for i, row in enumerate(matrix)
    )
    ncols = len(matrix[0]) if matrix else 0
    b_blocks = tuple(
        tuple(sorted(index[(i, j)] for i, row in enumerate(matrix) if row[j] != 0))
        for j in range(ncols)
    )
    return weights, a_blocks, b_blocks


def enumerate_configurations(
    k: int, s: SurfaceType, r_max: int | None = None
) -> Iterator[JetConfiguration]:
    """All configurations for k on surface type s, in deterministic order.

    Weight vectors are the partitions of k+1 (zero weights never occur); the
    single-point configuration comes first.  Every block is tagged with the
    minimal singular fibre class except a heavy A-side block, which ranges
    over the type's possible fibre kinds: the checks of a block against a
    larger fibre class are implied by the checks against (1,0), so only the
    heavy block's kind can change the outcome.
    """
    if k < 2:
        raise ValueError(
            "enumeration requires k >= 2 (k = 1 is certified externally)"
        )
    if r_max is None:
        r_max = k + 1
    if not 1 <= r_max <= k + 1:
        raise ValueError(f"r_max must be in 1..{k + 1}")

    half = Fraction(k + 1, 2)
    yield JetConfiguration(
        k, (k + 1,), (ABlock((0,), SINGULAR_A, 1),), ((0,),)
    )
    for r in range(2, r_max + 1):
        for weights in weight_partitions(k + 1):
            if len(weights) != r:
                continue
            for matrix in incidence_structures(weights):
                w, a_pts, b_blocks = _structure_to_blocks(matrix)
                heavy = [
                    i
                    for i, pts in enumerate(a_pts)
                    if Fraction(sum(w[p] for p in pts)) > half
                ]
                options: list[tuple[int, str, int]]
                if not heavy:
                    options = [(-1, SINGULAR_A, 1)]
                else:
                    hi = heavy[0]
                    options = [(hi, SINGULAR_A, 1)]
                    options += [
                        (hi, INTERMEDIATE_A, m) for m in s.intermediate_fibre_coeffs
                    ]
                    options.append((hi, FULL_A, s.mu))
                for hidx, kind, coeff in options:
                    a_blocks = tuple(
                        ABlock(pts, kind if i == hidx else SINGULAR_A,
                               coeff if i == hidx else 1)
                        for i, pts in enumerate(a_pts)
                    )
                    yield JetConfiguration(k, w, a_blocks, b_blocks)
