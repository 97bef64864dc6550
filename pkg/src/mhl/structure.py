"""Structure lab: class preorder, switching cycles, stable and negligible
sets, and the maximal-directed-family witness regions.

Finite common independent sets are preordered by containment in both spans;
mutual comparability collapses to equality of the span pair, so classes are
keyed by that fingerprint. On a finite class poset every maximal directed
family is the principal down-set of a maximal class, which lets the
transfinite constructions run as plain scans here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .core import ElementSet, MatroidOracle, check_same_ground
from .errors import (CapacityError, InputError, PreconditionError,
                     PropertyViolation, ValidationError)
from .exchange import (ExchangeDigraph, _search_path, build_exchange_digraph,
                       check_common_independent)
from .solver import lex_subsets

ENUMERATION_GUARD = 14


def _check_guard(m: MatroidOracle) -> None:
    if m.size > ENUMERATION_GUARD:
        raise CapacityError(
            f"ground size {m.size} exceeds the enumeration guard {ENUMERATION_GUARD}")


@dataclass(frozen=True)
class ClassFingerprint:
    """Span pair identifying the equivalence class of a common independent set."""

    m_span: ElementSet
    n_span: ElementSet


def fingerprint(m: MatroidOracle, n: MatroidOracle, I: Iterable[int]) -> ClassFingerprint:
    base = check_common_independent(m, n, I)
    return ClassFingerprint(m.closure(base), n.closure(base))


def enumerate_common_independents(m: MatroidOracle, n: MatroidOracle) -> list[ElementSet]:
    """All common independent sets in lexicographic order."""
    check_same_ground(m, n)
    _check_guard(m)
    out = []
    for subset in lex_subsets(m.size):
        s = frozenset(subset)
        if m._indep(s) and n._indep(s):
            out.append(s)
    return out


def preorder_leq(m: MatroidOracle, n: MatroidOracle,
                 I: Iterable[int], J: Iterable[int]) -> bool:
    """Whether I sits inside both spans of J."""
    i = check_common_independent(m, n, I)
    j = check_common_independent(m, n, J)
    return i <= m.closure(j) and i <= n.closure(j)


@dataclass(frozen=True, eq=False)
class ClassPoset:
    """Equivalence classes of common independent sets, ordered by span inclusion.

    Classes are indexed 0..k-1 by the lexicographic order of their canonical
    representatives (the least member). The order relation compares
    fingerprints componentwise, which agrees with the preorder on members.
    """

    fingerprints: tuple[ClassFingerprint, ...]
    representatives: tuple[ElementSet, ...]
    members: tuple[tuple[ElementSet, ...], ...]
    ups: tuple[frozenset[int], ...] = field(repr=False)
    downs: tuple[frozenset[int], ...] = field(repr=False)
    topo: tuple[int, ...] = field(repr=False)

    @property
    def class_count(self) -> int:
        return len(self.fingerprints)

    def leq(self, i: int, j: int) -> bool:
        return j in self.ups[i]

    def up_set(self, i: int) -> frozenset[int]:
        return self.ups[i]

    def down_set(self, i: int) -> frozenset[int]:
        return self.downs[i]

    def maximal_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.class_count) if self.ups[i] == frozenset({i}))

    def minimal_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.class_count) if self.downs[i] == frozenset({i}))

    def topological_order(self) -> tuple[int, ...]:
        return self.topo

    def id_of_fingerprint(self, fp: ClassFingerprint) -> int:
        for i, known in enumerate(self.fingerprints):
            if known == fp:
                return i
        raise InputError(f"fingerprint {fp} does not belong to this poset")

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with i strictly below j and nothing in between."""
        out = []
        for i in range(self.class_count):
            for j in self.ups[i] - {i}:
                between = (self.ups[i] & self.downs[j]) - {i, j}
                if not between:
                    out.append((i, j))
        return sorted(out)


def build_class_poset(m: MatroidOracle, n: MatroidOracle,
                      context: Optional["LabContext"] = None) -> ClassPoset:
    ctx = context if context is not None else LabContext(m, n)
    return ctx.poset()


@dataclass(frozen=True)
class SwitchingCycle:
    """Chordless directed cycle; the walk starts at its least element outside
    the base set and therefore ends inside it."""

    nodes: tuple[int, ...]

    def element_set(self) -> ElementSet:
        return frozenset(self.nodes)


def _cycles_of_digraph(digraph: ExchangeDigraph) -> list[SwitchingCycle]:
    outs = {v: set(ws) for v, ws in digraph.succ.items()}
    has_in: set[int] = {a.head for a in digraph.arcs}
    candidates = sorted(v for v in outs if v in has_in)
    cycles = []
    # arcs strictly alternate between entering and leaving the base set,
    # so every directed cycle has even length
    for size in range(2, len(candidates) + 1, 2):
        for combo in combinations(candidates, size):
            chosen = set(combo)
            succ_in: dict[int, int] = {}
            ok = True
            for v in combo:
                inside = outs[v] & chosen
                if len(inside) != 1:
                    ok = False
                    break
                succ_in[v] = next(iter(inside))
            if not ok or len(set(succ_in.values())) != size:
                continue
            start = min(chosen - digraph.base)
            walk = [start]
            while len(walk) < size:
                nxt = succ_in[walk[-1]]
                if nxt == start:
                    break
                walk.append(nxt)
            if len(walk) == size and succ_in[walk[-1]] == start:
                cycles.append(SwitchingCycle(tuple(walk)))
    cycles.sort(key=lambda c: c.nodes)
    return cycles


def find_switching_cycles(m: MatroidOracle, n: MatroidOracle,
                          I: Iterable[int]) -> list[SwitchingCycle]:
    """All chordless directed cycles of the exchange digraph of I."""
    base = check_common_independent(m, n, I)
    return _cycles_of_digraph(build_exchange_digraph(m, n, base))


def validate_switching_cycle(digraph: ExchangeDigraph, nodes: Sequence[int]) -> None:
    nodes = tuple(nodes)
    if len(nodes) < 2 or len(nodes) % 2 != 0:
        raise ValidationError(f"cycle needs positive even length, got {len(nodes)}")
    if len(set(nodes)) != len(nodes):
        raise ValidationError(f"repeated element in cycle {nodes}")
    for e in nodes:
        if not 0 <= e < digraph.size:
            raise ValidationError(f"element {e!r} outside ground set of size {digraph.size}")
    if nodes[-1] not in digraph.base:
        raise ValidationError(f"cycle must end inside the base set, ends at {nodes[-1]}")
    k = len(nodes)
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            expected = j == (i + 1) % k
            present = digraph.has_arc(nodes[i], nodes[j])
            if present and not expected:
                raise ValidationError(f"chord {nodes[i]}->{nodes[j]}")
            if expected and not present:
                raise ValidationError(f"missing arc {nodes[i]}->{nodes[j]}")


def apply_switching_cycle(m: MatroidOracle, n: MatroidOracle, I: Iterable[int],
                          cycle: SwitchingCycle) -> ElementSet:
    """Symmetric difference of I with a validated switching cycle."""
    base = check_common_independent(m, n, I)
    digraph = build_exchange_digraph(m, n, base)
    validate_switching_cycle(digraph, cycle.nodes)
    result = base ^ cycle.element_set()
    if not (m._indep(result) and n._indep(result)):
        raise PropertyViolation(
            f"switching {sorted(base)} by {cycle.nodes} left a dependent set")
    return result


def switching_component(m: MatroidOracle, n: MatroidOracle, I: Iterable[int],
                        context: Optional["LabContext"] = None) -> set[ElementSet]:
    """Closure of {I} under switching-cycle moves."""
    base = check_common_independent(m, n, I)
    _check_guard(m)
    ctx = context if context is not None else LabContext(m, n)
    seen = {base}
    frontier = [base]
    while frontier:
        current = frontier.pop()
        for cyc in ctx.cycles_of(current):
            neighbor = current ^ cyc.element_set()
            if neighbor not in seen:
                seen.add(neighbor)
                frontier.append(neighbor)
    return seen


def augmentation_closure(m: MatroidOracle, n: MatroidOracle, I: Iterable[int],
                         context: Optional["LabContext"] = None) -> frozenset[int]:
    """Class ids reachable from the class of I by iterated augmentations.

    Ids index the poset returned by build_class_poset for the same pair.
    """
    base = check_common_independent(m, n, I)
    _check_guard(m)
    ctx = context if context is not None else LabContext(m, n)
    start = ctx.class_id_of(base)
    seen = {start}
    frontier = [start]
    while frontier:
        cid = frontier.pop()
        for nid in ctx.aug_neighbor_ids(cid):
            if nid not in seen:
                seen.add(nid)
                frontier.append(nid)
    return frozenset(seen)


def is_stable(m: MatroidOracle, n: MatroidOracle, I: Iterable[int]) -> bool:
    """Whether disjoint extensions that stay M-independent and N-independent
    on their own also stay N-independent together with I. Exhaustive."""
    base = check_common_independent(m, n, I)
    rest = sorted(m.universe() - base)
    for mask in range(1 << len(rest)):
        j = frozenset(rest[i] for i in range(len(rest)) if mask >> i & 1)
        if m._indep(base | j) and n._indep(j) and not n._indep(base | j):
            return False
    return True


def merge_stable(m: MatroidOracle, n: MatroidOracle,
                 family: Sequence[Iterable[int]]) -> ElementSet:
    """Fold the family into one stable set that M-spans every member.

    Walks the family in order, each step extending the accumulator to a
    maximal M-independent subset of its union with the next member.
    """
    sets = []
    for member in family:
        s = check_common_independent(m, n, member)
        if not is_stable(m, n, s):
            raise PreconditionError(f"{sorted(s)} is not stable")
        sets.append(s)
    merged: ElementSet = frozenset()
    for member in sets:
        grown = set(merged)
        for e in sorted(member - merged):
            if m._indep(frozenset(grown | {e})):
                grown.add(e)
        merged = frozenset(grown)
    return merged


def is_negligible(m: MatroidOracle, n: MatroidOracle, G: Iterable[int]) -> bool:
    """Whether the region can always be N-spanned from inside, whatever is
    contracted outside.

    Contracting more is harder and spanning more is harder, so the single
    extreme instance decides every finite one: contract the whole complement
    and span the region minus its N-loops. Candidate spanning sets are pruned
    to the N-independent ones, which keeps the search lossless.
    """
    check_same_ground(m, n)
    region = m.ground.check_subset(G, "candidate negligible set")
    target = region - n.loops()
    outside_base = m.greedy_base(m.universe() - region)
    inside = sorted(region)
    for mask in range(1 << len(inside)):
        t = frozenset(inside[i] for i in range(len(inside)) if mask >> i & 1)
        if not n._indep(t):
            continue
        if not m._indep(t | outside_base):
            continue
        if target <= n.closure(t):
            return True
    return False


def maximal_negligible(m: MatroidOracle, n: MatroidOracle) -> ElementSet:
    """Inclusion-maximal negligible set, lexicographically first among the
    maximal ones."""
    check_same_ground(m, n)
    _check_guard(m)
    negligible = [frozenset(s) for s in lex_subsets(m.size)
                  if is_negligible(m, n, frozenset(s))]
    maximal = [g for g in negligible
               if not any(g < other for other in negligible)]
    return min(maximal, key=lambda s: tuple(sorted(s)))


class LabContext:
    """Memoized per-pair computations backing the lab operations.

    Everything cached is a pure function of the immutable oracle pair, so a
    context can be shared freely across operations and threads.
    """

    def __init__(self, m: MatroidOracle, n: MatroidOracle):
        check_same_ground(m, n)
        self.m = m
        self.n = n
        self._commons: Optional[list[ElementSet]] = None
        self._poset: Optional[ClassPoset] = None
        self._digraphs: dict[ElementSet, ExchangeDigraph] = {}
        self._cycles: dict[ElementSet, list[SwitchingCycle]] = {}
        self._fingerprints: dict[ElementSet, ClassFingerprint] = {}
        self._reach: dict[tuple[int, int], ElementSet] = {}
        self._admits: dict[tuple[int, int], bool] = {}
        self._aug_neighbors: dict[int, frozenset[int]] = {}

    def commons(self) -> list[ElementSet]:
        if self._commons is None:
            self._commons = enumerate_common_independents(self.m, self.n)
        return self._commons

    def digraph_of(self, s: ElementSet) -> ExchangeDigraph:
        got = self._digraphs.get(s)
        if got is None:
            got = build_exchange_digraph(self.m, self.n, s)
            self._digraphs[s] = got
        return got

    def cycles_of(self, s: ElementSet) -> list[SwitchingCycle]:
        got = self._cycles.get(s)
        if got is None:
            got = _cycles_of_digraph(self.digraph_of(s))
            self._cycles[s] = got
        return got

    def fingerprint_of(self, s: ElementSet) -> ClassFingerprint:
        got = self._fingerprints.get(s)
        if got is None:
            got = ClassFingerprint(self.m.closure(s), self.n.closure(s))
            self._fingerprints[s] = got
        return got

    def poset(self) -> ClassPoset:
        if self._poset is not None:
            return self._poset
        _check_guard(self.m)
        groups: dict[ClassFingerprint, list[ElementSet]] = {}
        for s in self.commons():
            groups.setdefault(self.fingerprint_of(s), []).append(s)
        ordered = sorted(groups.items(), key=lambda kv: tuple(sorted(kv[1][0])))
        fps = tuple(fp for fp, _ in ordered)
        ups = []
        downs = []
        count = len(fps)
        for i in range(count):
            ups.append(frozenset(
                j for j in range(count)
                if fps[i].m_span <= fps[j].m_span and fps[i].n_span <= fps[j].n_span))
        for j in range(count):
            downs.append(frozenset(i for i in range(count) if j in ups[i]))
        topo = tuple(sorted(range(count), key=lambda i: (len(downs[i]), i)))
        self._poset = ClassPoset(
            fingerprints=fps,
            representatives=tuple(members[0] for _, members in ordered),
            members=tuple(tuple(members) for _, members in ordered),
            ups=tuple(ups),
            downs=tuple(downs),
            topo=topo,
        )
        return self._poset

    def class_id_of(self, s: ElementSet) -> int:
        return self.poset().id_of_fingerprint(self.fingerprint_of(s))

    def reach(self, cid: int, x: int) -> ElementSet:
        key = (cid, x)
        got = self._reach.get(key)
        if got is None:
            rep = self.poset().representatives[cid]
            got = self.digraph_of(rep).reachable_from({x})
            self._reach[key] = got
        return got

    def admits_augmentation(self, cid: int, x: int) -> bool:
        """Whether an augmenting path starting at x exists for the class."""
        key = (cid, x)
        got = self._admits.get(key)
        if got is None:
            digraph = self.digraph_of(self.poset().representatives[cid])
            if x not in digraph.sources:
                got = False
            else:
                got = _search_path(digraph, frozenset({x}), digraph.sinks) is not None
            self._admits[key] = got
        return got

    def aug_neighbor_ids(self, cid: int) -> frozenset[int]:
        """Classes one augmentation above the given class. For fixed endpoints
        every augmenting path lands in the same class, so one path per
        endpoint pair is enough."""
        got = self._aug_neighbors.get(cid)
        if got is None:
            rep = self.poset().representatives[cid]
            digraph = self.digraph_of(rep)
            ids = set()
            for x in sorted(digraph.sources):
                for y in sorted(digraph.sinks):
                    nodes = _search_path(digraph, frozenset({x}), frozenset({y}))
                    if nodes is not None:
                        ids.add(self.class_id_of(rep ^ frozenset(nodes)))
            got = frozenset(ids)
            self._aug_neighbors[cid] = got
        return got


@dataclass(frozen=True)
class WitnessStructures:
    """Regions extracted from one maximal directed family of classes.

    anchor_sets maps each element never N-spanned by the family to a member
    set above which no augmentation from that element exists; reach_region
    collects everything reachable from those elements; core is its N-spanned
    part, with reach_witnesses recording a reaching source and set for each
    core element; residue is the untouched remainder.
    """

    chosen_class_id: int
    directed_class_ids: frozenset[int]
    anchor_sets: dict[int, ElementSet]
    reach_witnesses: dict[int, tuple[int, ElementSet]]
    reach_region: ElementSet
    core: ElementSet
    residue: ElementSet


def compute_witnesses(m: MatroidOracle, n: MatroidOracle,
                      class_choice: Optional[int] = None,
                      context: Optional["LabContext"] = None) -> WitnessStructures:
    """Materialize the witness regions for one maximal class choice.

    The directed family is the down-set of a maximal class (the
    lexicographically least one by default). Anchors are searched class by
    class in a fixed topological order; a missing anchor is impossible for
    true matroid pairs and raises PropertyViolation.
    """
    check_same_ground(m, n)
    _check_guard(m)
    ctx = context if context is not None else LabContext(m, n)
    poset = ctx.poset()
    maximal = poset.maximal_ids()
    if class_choice is None:
        chosen = maximal[0]
    else:
        if class_choice not in maximal:
            raise InputError(
                f"class {class_choice} is not maximal; choices: {list(maximal)}")
        chosen = class_choice
    family = poset.down_set(chosen)
    family_n_span: ElementSet = frozenset().union(
        *(poset.fingerprints[cid].n_span for cid in family))
    unspanned = sorted(m.universe() - family_n_span)
    topo_family = [cid for cid in poset.topological_order() if cid in family]

    anchor_sets: dict[int, ElementSet] = {}
    anchor_upsets: dict[int, list[int]] = {}
    for x in unspanned:
        for cid in topo_family:
            up_ids = [j for j in topo_family if poset.leq(cid, j)]
            if all(not ctx.admits_augmentation(j, x) for j in up_ids):
                anchor_sets[x] = poset.representatives[cid]
                anchor_upsets[x] = up_ids
                break
        else:
            raise PropertyViolation(
                f"no anchor set found for element {x}; the oracle pair is not "
                f"a matroid pair")

    reach_region: ElementSet = frozenset()
    for x in unspanned:
        for cid in anchor_upsets[x]:
            reach_region |= ctx.reach(cid, x)

    core = reach_region & family_n_span
    residue = m.universe() - reach_region

    reach_witnesses: dict[int, tuple[int, ElementSet]] = {}
    for y in sorted(core):
        for x in unspanned:
            hit = next((cid for cid in anchor_upsets[x] if y in ctx.reach(cid, x)), None)
            if hit is not None:
                reach_witnesses[y] = (x, poset.representatives[hit])
                break
        else:
            raise PropertyViolation(f"core element {y} lost its reachability witness")

    return WitnessStructures(
        chosen_class_id=chosen,
        directed_class_ids=family,
        anchor_sets=anchor_sets,
        reach_witnesses=reach_witnesses,
        reach_region=reach_region,
        core=core,
        residue=residue,
    )
