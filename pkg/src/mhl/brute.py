"""Brute-force reference computations over small ground sets.

Everything here enumerates subsets directly off the raw independence
predicate. No greedy step, no closure call, no augmenting machinery: this
module is the yardstick the clever code is measured against.
"""

from __future__ import annotations

from itertools import combinations

from .core import MatroidOracle


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def set_to_mask(s) -> int:
    mask = 0
    for e in s:
        mask |= 1 << e
    return mask


class IndependenceTable:
    """All 2^n independence answers of one oracle, indexed by bitmask."""

    def __init__(self, oracle: MatroidOracle):
        self.size = oracle.size
        self.indep = [oracle.is_independent(mask_to_set(m)) for m in range(1 << oracle.size)]

    def rank(self, mask: int) -> int:
        best = 0
        sub = mask
        while True:
            if self.indep[sub]:
                count = bin(sub).count("1")
                if count > best:
                    best = count
            if sub == 0:
                break
            sub = (sub - 1) & mask
        return best

    def rank_of_set(self, s) -> int:
        return self.rank(set_to_mask(s))

    def spans(self, mask: int, e: int) -> bool:
        if mask >> e & 1:
            return True
        return self.rank(mask | 1 << e) == self.rank(mask)

    def closure_of_set(self, s) -> frozenset[int]:
        mask = set_to_mask(s)
        return frozenset(e for e in range(self.size) if self.spans(mask, e))


def max_common_independent_size(tm: IndependenceTable, tn: IndependenceTable) -> int:
    best = 0
    for mask in range(1 << tm.size):
        if tm.indep[mask] and tn.indep[mask]:
            best = max(best, bin(mask).count("1"))
    return best


def min_rank_cut(tm: IndependenceTable, tn: IndependenceTable) -> int:
    """Minimum of rank_M(X) + rank_N(E - X) over all subsets X."""
    full = (1 << tm.size) - 1
    return min(tm.rank(x) + tn.rank(full ^ x) for x in range(1 << tm.size))


def max_matching_size(edges: list[tuple[int, int]]) -> int:
    """Maximum matching of a bipartite edge list by exhaustive search."""
    best = 0
    for k in range(len(edges), 0, -1):
        if k <= best:
            break
        for combo in combinations(range(len(edges)), k):
            lefts = [edges[i][0] for i in combo]
            rights = [edges[i][1] for i in combo]
            if len(set(lefts)) == k and len(set(rights)) == k:
                best = k
                break
    return best
