"""Finite matroids as independence oracles.

Every matroid lives on a dense integer ground set 0..size-1 and is fully
described by a pure independence predicate. Rank, closure, fundamental
circuits and minors are all derived from that predicate; nothing is cached.
Oracles are immutable and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .errors import InputError, NoCircuitError, PreconditionError

ElementSet = frozenset[int]

MINOR_KINDS = ("restrict", "delete", "contract", "dot")


@dataclass(frozen=True)
class GroundSet:
    """Dense ground set {0, ..., size-1}."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise InputError(f"ground size must be non-negative, got {self.size}")

    def __iter__(self):
        return iter(range(self.size))

    def __contains__(self, e) -> bool:
        return isinstance(e, int) and 0 <= e < self.size

    def universe(self) -> ElementSet:
        return frozenset(range(self.size))

    def check_subset(self, S: Iterable[int], what: str = "set") -> ElementSet:
        """Return S as a frozenset after verifying it sits inside the ground set."""
        s = frozenset(S)
        for e in s:
            if e not in self:
                raise InputError(
                    f"{what} contains element {e!r}, outside ground set of size {self.size}"
                )
        return s


class MatroidOracle:
    """Immutable independence oracle over a dense integer ground set.

    The predicate must satisfy the matroid axioms: the empty set is
    independent, independence is closed under subsets, and the finite
    exchange property holds. Construction via build_matroid guarantees
    this for every supported spec family.
    """

    __slots__ = ("ground", "_pred", "description")

    def __init__(self, size: int, predicate: Callable[[ElementSet], bool],
                 description: str = "oracle"):
        object.__setattr__(self, "ground", GroundSet(size))
        object.__setattr__(self, "_pred", predicate)
        object.__setattr__(self, "description", description)

    def __setattr__(self, name, value):
        raise AttributeError("MatroidOracle is immutable")

    def __repr__(self):
        return f"MatroidOracle({self.description}, size={self.size})"

    @property
    def size(self) -> int:
        return self.ground.size

    def universe(self) -> ElementSet:
        return self.ground.universe()

    # -- primitive -------------------------------------------------------

    def is_independent(self, S: Iterable[int]) -> bool:
        return self._pred(self.ground.check_subset(S))

    def _indep(self, S: ElementSet) -> bool:
        """Unchecked predicate call for internal hot paths."""
        return self._pred(S)

    # -- derived quantities ----------------------------------------------

    def greedy_base(self, S: Iterable[int]) -> ElementSet:
        """Maximal independent subset of S, greedy in ascending element order."""
        s = self.ground.check_subset(S)
        picked: set[int] = set()
        for e in sorted(s):
            if self._pred(frozenset(picked | {e})):
                picked.add(e)
        return frozenset(picked)

    def rank(self, S: Iterable[int]) -> int:
        return len(self.greedy_base(S))

    def closure(self, S: Iterable[int]) -> ElementSet:
        """All elements spanned by S: those whose addition does not raise rank."""
        s = self.ground.check_subset(S)
        base = self.greedy_base(s)
        spanned = set(s)
        for e in self.ground:
            if e not in spanned and not self._pred(base | {e}):
                spanned.add(e)
        return frozenset(spanned)

    def loops(self) -> ElementSet:
        return self.closure(frozenset())

    def fundamental_circuit(self, e: int, I: Iterable[int]) -> ElementSet:
        """The unique circuit through e inside I + e.

        Requires I independent, e outside I, and I + e dependent. The circuit
        is e together with those x in I whose removal restores independence.
        """
        i = self.ground.check_subset(I, "independent set")
        if e not in self.ground:
            raise InputError(f"element {e!r} outside ground set of size {self.size}")
        if not self._pred(i):
            raise PreconditionError("fundamental_circuit requires an independent set")
        if e in i:
            raise PreconditionError(f"element {e} already lies in the given set")
        with_e = i | {e}
        if self._pred(with_e):
            raise NoCircuitError(f"{sorted(with_e)} is independent; no circuit through {e}")
        circuit = {e}
        for x in i:
            if self._pred(with_e - {x}):
                circuit.add(x)
        return frozenset(circuit)

    # -- minors ------------------------------------------------------------
    #
    # Minors re-index the kept elements to a dense 0-based range in ascending
    # order, so a pair of minors taken with the same kept set stays aligned.

    def restrict(self, X: Iterable[int]) -> "MatroidOracle":
        keep = sorted(self.ground.check_subset(X, "restriction set"))
        pred = self._pred

        def minor_pred(S: ElementSet, keep=tuple(keep)) -> bool:
            return pred(frozenset(keep[i] for i in S))

        return MatroidOracle(len(keep), minor_pred, f"{self.description}|{keep}")

    def delete(self, X: Iterable[int]) -> "MatroidOracle":
        drop = self.ground.check_subset(X, "deletion set")
        return self.restrict(self.universe() - drop)

    def contract(self, X: Iterable[int]) -> "MatroidOracle":
        gone = self.ground.check_subset(X, "contraction set")
        keep = sorted(self.universe() - gone)
        base = self.greedy_base(gone)
        pred = self._pred

        def minor_pred(S: ElementSet, keep=tuple(keep), base=base) -> bool:
            return pred(frozenset(keep[i] for i in S) | base)

        return MatroidOracle(len(keep), minor_pred, f"{self.description}/{sorted(gone)}")

    def dot(self, X: Iterable[int]) -> "MatroidOracle":
        keep = self.ground.check_subset(X, "minor set")
        return self.contract(self.universe() - keep)

    def minor(self, kind: str, X: Iterable[int]) -> "MatroidOracle":
        if kind not in MINOR_KINDS:
            raise InputError(f"unknown minor kind {kind!r}; expected one of {MINOR_KINDS}")
        return getattr(self, kind)(X)


def check_same_ground(m1: MatroidOracle, m2: MatroidOracle) -> None:
    if m1.size != m2.size:
        raise InputError(f"ground sizes differ: {m1.size} vs {m2.size}")


def direct_sum(m1: MatroidOracle, m2: MatroidOracle) -> MatroidOracle:
    """Disjoint union: m2's elements are shifted up by m1's ground size."""
    cut = m1.size
    p1, p2 = m1._pred, m2._pred

    def pred(S: ElementSet) -> bool:
        left = frozenset(e for e in S if e < cut)
        right = frozenset(e - cut for e in S if e >= cut)
        return p1(left) and p2(right)

    return MatroidOracle(cut + m2.size, pred,
                         f"({m1.description})+({m2.description})")


# -- declarative specs -----------------------------------------------------


@dataclass(frozen=True)
class Uniform:
    size: int
    rank: int


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]


@dataclass(frozen=True)
class Graphic:
    vertices: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LinearGf2:
    columns: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DirectSumSpec:
    left: "MatroidSpec"
    right: "MatroidSpec"


@dataclass(frozen=True)
class MinorSpec:
    base: "MatroidSpec"
    kind: str
    subset: frozenset[int]


MatroidSpec = Union[Uniform, Partition, Graphic, LinearGf2, DirectSumSpec, MinorSpec]


def uniform(size: int, rank: int) -> Uniform:
    return Uniform(size, rank)


def partition(blocks: Iterable[Iterable[int]], capacities: Iterable[int]) -> Partition:
    return Partition(tuple(tuple(b) for b in blocks), tuple(capacities))


def graphic(vertices: int, edges: Iterable[tuple[int, int]]) -> Graphic:
    return Graphic(vertices, tuple((u, v) for u, v in edges))


def linear_gf2(columns: Iterable[Iterable[int]]) -> LinearGf2:
    return LinearGf2(tuple(tuple(c) for c in columns))


def direct_sum_spec(left: MatroidSpec, right: MatroidSpec) -> DirectSumSpec:
    return DirectSumSpec(left, right)


def minor_spec(base: MatroidSpec, kind: str, subset: Iterable[int]) -> MinorSpec:
    return MinorSpec(base, kind, frozenset(subset))


def spec_ground_size(spec: MatroidSpec) -> int:
    """Ground-set size the spec resolves to, without building the oracle."""
    if isinstance(spec, Uniform):
        return spec.size
    if isinstance(spec, Partition):
        return sum(len(b) for b in spec.blocks)
    if isinstance(spec, Graphic):
        return len(spec.edges)
    if isinstance(spec, LinearGf2):
        return len(spec.columns)
    if isinstance(spec, DirectSumSpec):
        return spec_ground_size(spec.left) + spec_ground_size(spec.right)
    if isinstance(spec, MinorSpec):
        if spec.kind in ("restrict", "dot"):
            return len(spec.subset)
        if spec.kind in ("delete", "contract"):
            return spec_ground_size(spec.base) - len(spec.subset)
        raise InputError(f"unknown minor kind {spec.kind!r}; expected one of {MINOR_KINDS}")
    raise InputError(f"unknown matroid spec {spec!r}")


def _build_uniform(spec: Uniform) -> MatroidOracle:
    if spec.size < 0:
        raise InputError(f"uniform matroid needs non-negative size, got {spec.size}")
    if spec.rank < 0:
        raise InputError(f"uniform matroid needs non-negative rank, got {spec.rank}")
    r = spec.rank
    return MatroidOracle(spec.size, lambda S: len(S) <= r,
                         f"uniform({spec.size},{spec.rank})")


def _build_partition(spec: Partition) -> MatroidOracle:
    if len(spec.blocks) != len(spec.capacities):
        raise InputError(
            f"{len(spec.blocks)} blocks but {len(spec.capacities)} capacities")
    size = sum(len(b) for b in spec.blocks)
    block_of: dict[int, int] = {}
    for bi, block in enumerate(spec.blocks):
        for e in block:
            if not isinstance(e, int) or not 0 <= e < size:
                raise InputError(f"block element {e!r} outside dense range 0..{size - 1}")
            if e in block_of:
                raise InputError(f"element {e} appears in more than one block")
            block_of[e] = bi
    for cap in spec.capacities:
        if cap < 0:
            raise InputError(f"negative block capacity {cap}")
    caps = spec.capacities
    nblocks = len(spec.blocks)

    def pred(S: ElementSet) -> bool:
        counts = [0] * nblocks
        for e in S:
            bi = block_of[e]
            counts[bi] += 1
            if counts[bi] > caps[bi]:
                return False
        return True

    return MatroidOracle(size, pred, f"partition({nblocks} blocks)")


def _build_graphic(spec: Graphic) -> MatroidOracle:
    if spec.vertices < 0:
        raise InputError(f"graphic matroid needs non-negative vertex count, got {spec.vertices}")
    for u, v in spec.edges:
        if not 0 <= u < spec.vertices or not 0 <= v < spec.vertices:
            raise InputError(f"edge ({u},{v}) outside vertex range 0..{spec.vertices - 1}")
    edges = spec.edges
    n_vertices = spec.vertices

    def pred(S: ElementSet) -> bool:
        # forest test by union-find; a rejected union means a cycle
        parent = list(range(n_vertices))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in S:
            ru, rv = find(edges[e][0]), find(edges[e][1])
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    return MatroidOracle(len(edges), pred, f"graphic({n_vertices}v,{len(edges)}e)")


def _build_linear_gf2(spec: LinearGf2) -> MatroidOracle:
    rows = len(spec.columns[0]) if spec.columns else 0
    packed = []
    for ci, col in enumerate(spec.columns):
        if len(col) != rows:
            raise InputError(f"column {ci} has {len(col)} rows, expected {rows}")
        word = 0
        for bit in col:
            if bit not in (0, 1):
                raise InputError(f"column {ci} contains non-bit value {bit!r}")
            word = (word << 1) | bit
        packed.append(word)

    def pred(S: ElementSet) -> bool:
        # incremental elimination: reduce each vector against current pivots
        pivots: dict[int, int] = {}
        for e in S:
            v = packed[e]
            while v:
                h = v.bit_length() - 1
                if h in pivots:
                    v ^= pivots[h]
                else:
                    pivots[h] = v
                    break
            if v == 0:
                return False
        return True

    return MatroidOracle(len(packed), pred, f"gf2({rows}x{len(packed)})")


def build_matroid(spec: MatroidSpec) -> MatroidOracle:
    """Build the independence oracle a declarative spec describes."""
    if isinstance(spec, Uniform):
        return _build_uniform(spec)
    if isinstance(spec, Partition):
        return _build_partition(spec)
    if isinstance(spec, Graphic):
        return _build_graphic(spec)
    if isinstance(spec, LinearGf2):
        return _build_linear_gf2(spec)
    if isinstance(spec, DirectSumSpec):
        return direct_sum(build_matroid(spec.left), build_matroid(spec.right))
    if isinstance(spec, MinorSpec):
        base = build_matroid(spec.base)
        if spec.kind not in MINOR_KINDS:
            raise InputError(f"unknown minor kind {spec.kind!r}; expected one of {MINOR_KINDS}")
        base.ground.check_subset(spec.subset, "minor subset")
        return base.minor(spec.kind, spec.subset)
    raise InputError(f"unknown matroid spec {spec!r}")
