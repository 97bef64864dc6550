"""Maximum common independent sets, matchability certificates, and the
matroidal Hall-condition scan.

The solver iterates augmenting paths from the empty set. At termination the
set R of elements reachable from the unspanned sources certifies optimality:
rank_M(R) + rank_N(E - R) equals the solution size, and when the pair is not
matchable R witnesses the strict rank gap rank_M(R) < rank_{N.R}(R).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .core import ElementSet, MatroidOracle, check_same_ground
from .errors import PropertyViolation
from .exchange import apply_augmentation, build_exchange_digraph, find_augmenting_path


@dataclass(frozen=True)
class IntersectionRun:
    independent_set: ElementSet
    iterations: int
    terminal_reach: ElementSet


@dataclass(frozen=True)
class Matchable:
    base: ElementSet


@dataclass(frozen=True)
class Blocked:
    blocking_set: ElementSet
    rank_restricted: int
    rank_contracted: int


HallCertificate = Union[Matchable, Blocked]


def solve_intersection(m: MatroidOracle, n: MatroidOracle) -> IntersectionRun:
    """Iterate augmentations from the empty set until no path remains."""
    check_same_ground(m, n)
    current: ElementSet = frozenset()
    iterations = 0
    while True:
        path = find_augmenting_path(m, n, current)
        if path is None:
            break
        current = apply_augmentation(m, n, current, path)
        iterations += 1
    digraph = build_exchange_digraph(m, n, current)
    return IntersectionRun(
        independent_set=current,
        iterations=iterations,
        terminal_reach=digraph.reachable_from(digraph.sources),
    )


def max_common_independent(m: MatroidOracle, n: MatroidOracle) -> ElementSet:
    return solve_intersection(m, n).independent_set


def min_max_certificate(m: MatroidOracle, n: MatroidOracle) -> tuple[int, ElementSet]:
    """Solution size k plus a set X with rank_M(X) + rank_N(E - X) = k."""
    run = solve_intersection(m, n)
    k = len(run.independent_set)
    cut = run.terminal_reach
    if m.rank(cut) + n.rank(m.universe() - cut) != k:
        raise PropertyViolation(
            f"terminal reachable set {sorted(cut)} does not certify size {k}")
    return k, cut


def is_matchable(m: MatroidOracle, n: MatroidOracle) -> HallCertificate:
    """Matchable iff some common independent set is a base of the second
    matroid; on failure the terminal reachable set exhibits the rank gap."""
    run = solve_intersection(m, n)
    n_rank = n.rank(n.universe())
    if len(run.independent_set) == n_rank:
        return Matchable(base=run.independent_set)
    cut = run.terminal_reach
    rank_restricted = m.rank(cut)
    rank_contracted = n_rank - n.rank(m.universe() - cut)
    if not rank_restricted < rank_contracted:
        raise PropertyViolation(
            f"blocked certificate {sorted(cut)} fails the strict rank inequality")
    return Blocked(blocking_set=cut, rank_restricted=rank_restricted,
                   rank_contracted=rank_contracted)


def lex_subsets(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of range(n) in lexicographic order of their sorted tuples."""

    def rec(start: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield prefix
        for e in range(start, n):
            yield from rec(e + 1, prefix + (e,))

    return rec(0, ())


def check_hall(m: MatroidOracle, n: MatroidOracle) -> Optional[ElementSet]:
    """Exhaustive scan for a set X breaking the matroidal Hall condition.

    X is a violation when the restriction of M to X has a base independent in
    N.X while N.X has no base independent in M|X. Both directions reduce to
    the maximum common independent set of the minor pair (M|X, N.X): the
    first holds iff it reaches rank_M(X), the second fails iff it stays below
    rank_{N.X}(X). Subsets with rank_M(X) >= rank_{N.X}(X) can never violate,
    so only the rank-deficient candidates get a minor solve.
    """
    check_same_ground(m, n)
    universe = m.universe()
    n_rank = n.rank(universe)
    for subset in lex_subsets(m.size):
        x = frozenset(subset)
        rank_restricted = m.rank(x)
        rank_contracted = n_rank - n.rank(universe - x)
        if rank_restricted >= rank_contracted:
            continue
        common = max_common_independent(m.restrict(x), n.dot(x))
        if len(common) == rank_restricted:
            return x
    return None


def is_finitely_matchable(m: MatroidOracle, n: MatroidOracle) -> bool:
    """Whether every subset of the ground set is N-spanned by an M-independent
    set.

    On a finite ground set this is equivalent to matchability: pruning an
    M-independent N-spanning set to a maximal N-independent subset leaves an
    M-independent base of N, and conversely a base spans everything.
    """
    return isinstance(is_matchable(m, n), Matchable)
