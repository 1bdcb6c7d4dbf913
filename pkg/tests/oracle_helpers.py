"""Independent brute-force oracles used to cross-check the package.

Everything here is deliberately written from first principles, without
reusing the package's enumeration or closed forms, so that agreement is a
real check and not a tautology.
"""

from itertools import product

from hyperjet.configurations import JetConfiguration
from hyperjet.lattice import BlowupClass, DivisorClass, blowup_intersect


def set_partitions(n):
    """All set partitions of range(n)."""
    if n == 0:
        yield []
        return
    parts = [[0]]

    def rec(i):
        if i == n:
            yield [tuple(b) for b in parts]
            return
        for b in parts:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        parts.append([i])
        yield from rec(i + 1)
        parts.pop()

    yield from rec(1)


def labeled_incidence_pairs(r):
    """All (a_partition, b_partition) pairs with pairwise intersections <= 1."""
    for a_part in set_partitions(r):
        for b_part in set_partitions(r):
            if all(
                len(set(ab) & set(bb)) <= 1 for ab in a_part for bb in b_part
            ):
                yield a_part, b_part


def pair_to_matrix(weights, a_part, b_part):
    """Incidence matrix of a labeled pair (rows = a-blocks, cols = b-blocks)."""
    col_of = {}
    for j, bb in enumerate(b_part):
        for p in bb:
            col_of[p] = j
    rows = []
    for ab in a_part:
        row = [0] * len(b_part)
        for p in ab:
            row[col_of[p]] = weights[p]
        rows.append(tuple(row))
    return tuple(rows)


def exact_canonical(matrix):
    """True canonical form under row/column permutations (small matrices only).

    Minimum over all row permutations of the column-sorted matrix; complete,
    unlike the package's fast fixpoint normal form, so it decides isomorphism.
    """
    from itertools import permutations

    rows = [tuple(r) for r in matrix]
    best = None
    for perm in set(permutations(rows)):
        cols = sorted(zip(*perm), reverse=True)
        m = tuple(zip(*cols)) if cols else tuple(() for _ in perm)
        if best is None or m < best:
            best = m
    return best


def labeled_structures_canonicalized(weights):
    """Exact canonical forms of every labeled incidence pair for a weight vector."""
    out = set()
    for a_part, b_part in labeled_incidence_pairs(len(weights)):
        out.add(exact_canonical(pair_to_matrix(weights, a_part, b_part)))
    return out


def naive_bounded_checks(cfg: JetConfiguration, twisted: BlowupClass, strict: bool,
                         box: int = 4, cap: int = 6):
    """Brute-force bounded-regime checks against an explicitly given divisor.

    Enumerates every multiplicity assignment in the full box, filters by the
    genus bound, and evaluates the intersection with the strict transform
    through the blow-up pairing only.
    """
    out = set()
    for alpha in range(1, box + 1):
        for beta in range(1, box + 1):
            budget = 2 * alpha * beta
            for mults in product(range(cap + 1), repeat=cfg.r):
                if not any(mults):
                    continue
                if sum(m * (m - 1) for m in mults) > budget:
                    continue
                value = blowup_intersect(
                    twisted, BlowupClass(DivisorClass(alpha, beta), mults)
                )
                passed = value > 0 if strict else value >= 0
                out.add((alpha, beta, mults, value, passed))
    return out
