"""Exchange digraphs and augmenting paths for a matroid pair.

For a common independent set I, the digraph on the ground set has two arc
kinds: "first" arcs run from a spanned outside element x into its M-circuit
inside I, "second" arcs run from the N-circuit of x back out to x. Sources
are the elements not N-spanned by I, sinks the elements not M-spanned.
An augmenting path walks source to sink along arcs with no forward chords;
applying it grows the common independent set by one while keeping both
spans predictable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .core import ElementSet, MatroidOracle, check_same_ground
from .errors import InputError, PreconditionError, PropertyViolation, ValidationError

FIRST = "first"
SECOND = "second"


class Arc(NamedTuple):
    tail: int
    head: int
    kind: str


class AugmentationAudit:
    """Counts every augmentation postcondition check executed in-process."""

    __slots__ = ("checks", "violations")

    def __init__(self):
        self.reset()

    def reset(self):
        self.checks = 0
        self.violations = 0


AUDIT = AugmentationAudit()


@dataclass(frozen=True, eq=False)
class ExchangeDigraph:
    size: int
    base: ElementSet
    arcs: tuple[Arc, ...]
    sources: ElementSet
    sinks: ElementSet
    succ: Mapping[int, tuple[int, ...]]
    arc_pairs: frozenset[tuple[int, int]]

    def out_neighbors(self, x: int) -> tuple[int, ...]:
        return self.succ.get(x, ())

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arc_pairs

    def reachable_from(self, X: Iterable[int]) -> ElementSet:
        """Reflexive-transitive closure of the arc relation from X."""
        start = frozenset(X)
        for e in start:
            if not 0 <= e < self.size:
                raise InputError(f"element {e!r} outside ground set of size {self.size}")
        seen = set(start)
        queue = deque(sorted(start))
        while queue:
            v = queue.popleft()
            for w in self.succ.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)


def check_common_independent(m: MatroidOracle, n: MatroidOracle,
                             I: Iterable[int]) -> ElementSet:
    check_same_ground(m, n)
    i = m.ground.check_subset(I, "common independent set")
    if not m._indep(i):
        raise PreconditionError(f"{sorted(i)} is dependent in the first matroid")
    if not n._indep(i):
        raise PreconditionError(f"{sorted(i)} is dependent in the second matroid")
    return i


def build_exchange_digraph(m: MatroidOracle, n: MatroidOracle,
                           I: Iterable[int]) -> ExchangeDigraph:
    base = check_common_independent(m, n, I)
    m_span = m.closure(base)
    n_span = n.closure(base)
    arcs: list[Arc] = []
    for x in range(m.size):
        if x in base:
            continue
        if x in m_span:
            for y in sorted(m.fundamental_circuit(x, base) - {x}):
                arcs.append(Arc(x, y, FIRST))
        if x in n_span:
            for y in sorted(n.fundamental_circuit(x, base) - {x}):
                arcs.append(Arc(y, x, SECOND))
    succ: dict[int, list[int]] = {}
    for arc in arcs:
        succ.setdefault(arc.tail, []).append(arc.head)
    return ExchangeDigraph(
        size=m.size,
        base=base,
        arcs=tuple(arcs),
        sources=frozenset(range(m.size)) - n_span,
        sinks=frozenset(range(m.size)) - m_span,
        succ={k: tuple(sorted(v)) for k, v in succ.items()},
        arc_pairs=frozenset((a.tail, a.head) for a in arcs),
    )


def reachable_from(digraph: ExchangeDigraph, X: Iterable[int]) -> ElementSet:
    return digraph.reachable_from(X)


@dataclass(frozen=True)
class AugmentingPath:
    """Odd-length sequence of distinct elements from a source to a sink."""

    nodes: tuple[int, ...]

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def sink(self) -> int:
        return self.nodes[-1]

    def element_set(self) -> ElementSet:
        return frozenset(self.nodes)


def validate_augmenting_path(digraph: ExchangeDigraph, nodes: Sequence[int]) -> None:
    """Raise ValidationError unless nodes forms a valid augmenting path."""
    nodes = tuple(nodes)
    if not nodes:
        raise ValidationError("empty path")
    if len(nodes) % 2 == 0:
        raise ValidationError(f"path has even length {len(nodes)}")
    if len(set(nodes)) != len(nodes):
        raise ValidationError(f"repeated element in path {nodes}")
    for e in nodes:
        if not 0 <= e < digraph.size:
            raise ValidationError(f"element {e!r} outside ground set of size {digraph.size}")
    if nodes[0] not in digraph.sources:
        raise ValidationError(f"start {nodes[0]} is already spanned on the source side")
    if nodes[-1] not in digraph.sinks:
        raise ValidationError(f"end {nodes[-1]} is already spanned on the sink side")
    for a, b in zip(nodes, nodes[1:]):
        if not digraph.has_arc(a, b):
            raise ValidationError(f"missing arc {a}->{b}")
    for i in range(len(nodes)):
        for j in range(i + 2, len(nodes)):
            if digraph.has_arc(nodes[i], nodes[j]):
                raise ValidationError(f"jumping arc {nodes[i]}->{nodes[j]}")


def _bfs_layers(adj: Mapping[int, tuple[int, ...]], starts: Iterable[int]) -> dict[int, int]:
    dist = {v: 0 for v in starts}
    queue = deque(sorted(dist))
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _search_path(digraph: ExchangeDigraph, sources: ElementSet,
                 sinks: ElementSet) -> Optional[tuple[int, ...]]:
    """Lexicographically-first shortest directed path between the given sets.

    A shortest source-to-sink path can contain no jumping arc, since the arc
    would shortcut it; the caller still re-validates.
    """
    if not sources or not sinks:
        return None
    d_src = _bfs_layers(digraph.succ, sources)
    hit = [t for t in sinks if t in d_src]
    if not hit:
        return None
    pred: dict[int, list[int]] = {}
    for arc in digraph.arcs:
        pred.setdefault(arc.head, []).append(arc.tail)
    pred_adj = {k: tuple(sorted(v)) for k, v in pred.items()}
    d_snk = _bfs_layers(pred_adj, sinks)
    total = min(d_src[t] for t in hit)
    path = [min(v for v in sources if d_snk.get(v) == total)]
    while len(path) <= total:
        remaining = total - len(path)
        path.append(min(w for w in digraph.out_neighbors(path[-1])
                        if d_snk.get(w) == remaining))
    return tuple(path)


def find_augmenting_path(m: MatroidOracle, n: MatroidOracle, I: Iterable[int],
                         source_filter: Optional[Iterable[int]] = None,
                         target_filter: Optional[Iterable[int]] = None,
                         ) -> Optional[AugmentingPath]:
    """Deterministic augmenting-path search via multi-source BFS.

    Sources may be narrowed to source_filter and sinks to target_filter.
    Returns the lexicographically-first shortest path, or None.
    """
    base = check_common_independent(m, n, I)
    digraph = build_exchange_digraph(m, n, base)
    sources = digraph.sources
    sinks = digraph.sinks
    if source_filter is not None:
        sources &= m.ground.check_subset(source_filter, "source filter")
    if target_filter is not None:
        sinks &= m.ground.check_subset(target_filter, "target filter")
    nodes = _search_path(digraph, sources, sinks)
    if nodes is None:
        return None
    try:
        validate_augmenting_path(digraph, nodes)
    except ValidationError as exc:
        raise PropertyViolation(f"BFS produced an invalid path {nodes}: {exc}") from exc
    return AugmentingPath(nodes)


def apply_augmentation(m: MatroidOracle, n: MatroidOracle, I: Iterable[int],
                       path: AugmentingPath) -> ElementSet:
    """Symmetric difference of I with the path, with both span postconditions
    checked on every call."""
    base = check_common_independent(m, n, I)
    digraph = build_exchange_digraph(m, n, base)
    validate_augmenting_path(digraph, path.nodes)
    result = base ^ path.element_set()
    AUDIT.checks += 1
    ok = (
        len(result) == len(base) + 1
        and m._indep(result)
        and n._indep(result)
        and m.closure(result) == m.closure(base | {path.sink})
        and n.closure(result) == n.closure(base | {path.source})
    )
    if not ok:
        AUDIT.violations += 1
        raise PropertyViolation(
            f"augmentation of {sorted(base)} by {path.nodes} broke a span postcondition")
    return result


def enumerate_augmenting_paths(m: MatroidOracle, n: MatroidOracle,
                               I: Iterable[int]) -> list[AugmentingPath]:
    """Every augmenting path for I, in depth-first lexicographic order."""
    base = check_common_independent(m, n, I)
    return enumerate_paths_in(build_exchange_digraph(m, n, base))


def enumerate_paths_in(digraph: ExchangeDigraph) -> list[AugmentingPath]:
    """Every augmenting path of a prebuilt digraph.

    Sinks have no outgoing arcs and sources no incoming ones, so the search
    only ever extends at non-sink tips; a prefix acquiring a forward chord is
    pruned since no extension can repair it.
    """
    found: list[AugmentingPath] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend():
        tip = path[-1]
        if tip in digraph.sinks:
            found.append(AugmentingPath(tuple(path)))
            return
        for w in digraph.out_neighbors(tip):
            if w in on_path:
                continue
            if any(digraph.has_arc(path[i], w) for i in range(len(path) - 1)):
                continue
            path.append(w)
            on_path.add(w)
            extend()
            path.pop()
            on_path.remove(w)

    for s in sorted(digraph.sources):
        path = [s]
        on_path = {s}
        extend()
    return found


def digraph_to_dot(digraph: ExchangeDigraph,
                   labels: Optional[Sequence[str]] = None) -> str:
    """Graphviz rendering: first arcs solid, second arcs dashed, sources and
    sinks annotated."""

    def name(e: int) -> str:
        return labels[e] if labels is not None else str(e)

    lines = ["digraph exchange {", "  rankdir=LR;"]
    for e in range(digraph.size):
        tags = []
        if e in digraph.sources:
            tags.append("src")
        if e in digraph.sinks:
            tags.append("snk")
        text = name(e) + (f" ({','.join(tags)})" if tags else "")
        shape = "doublecircle" if e in digraph.base else "circle"
        lines.append(f'  n{e} [label="{text}", shape={shape}];')
    for arc in digraph.arcs:
        style = "solid" if arc.kind == FIRST else "dashed"
        lines.append(f"  n{arc.tail} -> n{arc.head} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
