"""Graph algorithms over a net's directed graph and undirected skeleton.

Everything here is deterministic: neighbour iteration is ordered
lexicographically by node name so enumeration results are stable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import BudgetExceeded, StateBudgetExceeded, UnknownNode, WeightOutOfRange
from .net import WorkflowNet


@dataclass(frozen=True)
class PathBudget:
    """Caps for exhaustive path/trail searches.

    ``on_exceed`` selects between raising :class:`BudgetExceeded` and
    saturating (return what was found so far).
    """

    max_nodes: int = 2000
    max_arcs: int = 8000
    max_enumerated_paths: int = 2_000_000
    on_exceed: str = "error"  # "error" | "saturate"

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_arcs <= 0 or self.max_enumerated_paths <= 0:
            raise ValueError("path budget values must be positive")
        if self.on_exceed not in ("error", "saturate"):
            raise ValueError("on_exceed must be 'error' or 'saturate'")


@dataclass(frozen=True)
class LanguageBounds:
    """Caps for bounded language exploration."""

    max_visible_length: int = 12
    max_tokens_per_place: int = 4
    max_states: int = 100_000

    def __post_init__(self):
        if self.max_visible_length <= 0 or self.max_tokens_per_place <= 0 or self.max_states <= 0:
            raise ValueError("language bounds must be positive")


def undirected_skeleton(net: WorkflowNet) -> dict[str, set[str]]:
    """Adjacency of the skeleton obtained by forgetting arc directions.

    Antiparallel arc pairs collapse to a single skeleton edge.
    """
    adj: dict[str, set[str]] = {n: set() for n in net.nodes}
    for u, v in net.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def articulation_points(net: WorkflowNet) -> frozenset[str]:
    """Cut vertices of the undirected skeleton (linear-time Hopcroft-Tarjan)."""
    adj = undirected_skeleton(net)
    order: dict[str, int] = {}
    low: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    cuts: set[str] = set()
    counter = 0

    for root in sorted(adj):
        if root in order:
            continue
        parent[root] = None
        root_children = 0
        stack: list[tuple[str, Iterator[str]]] = [(root, iter(sorted(adj[root])))]
        order[root] = low[root] = counter
        counter += 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in order:
                    parent[nxt] = node
                    if node == root:
                        root_children += 1
                    order[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append((nxt, iter(sorted(adj[nxt]))))
                    advanced = True
                    break
                elif nxt != parent[node]:
                    low[node] = min(low[node], order[nxt])
            if not advanced:
                stack.pop()
                if stack:
                    up, _ = stack[-1]
                    low[up] = min(low[up], low[node])
                    if up != root and low[node] >= order[up]:
                        cuts.add(up)
        if root_children > 1:
            cuts.add(root)
    return frozenset(cuts)


def strongly_connected_components(net: WorkflowNet) -> list[frozenset[str]]:
    """Tarjan's SCC algorithm, iterative, deterministic order."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[frozenset[str]] = []
    counter = 0

    for root in sorted(net.nodes):
        if root in index:
            continue
        work: list[tuple[str, Iterator[str]]] = [(root, iter(sorted(net.postset(root))))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(sorted(net.postset(nxt)))))
                    advanced = True
                    break
                elif nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if not advanced:
                work.pop()
                if work:
                    up, _ = work[-1]
                    low[up] = min(low[up], low[node])
                if low[node] == index[node]:
                    comp = set()
                    while True:
                        member = stack.pop()
                        on_stack.discard(member)
                        comp.add(member)
                        if member == node:
                            break
                    components.append(frozenset(comp))
    return components


def nodes_on_cycles(net: WorkflowNet) -> frozenset[str]:
    """Union of strongly connected components with at least two nodes.

    Self-loops are impossible in a bipartite directed graph, so a node lies
    on a cycle exactly when its SCC is non-trivial.
    """
    out: set[str] = set()
    for comp in strongly_connected_components(net):
        if len(comp) > 1:
            out |= comp
    return frozenset(out)


def simple_paths(
    net: WorkflowNet,
    start: str,
    end: str,
    budget: PathBudget | None = None,
) -> Iterator[tuple[str, ...]]:
    """All directed paths from start to end without repeated nodes.

    Each path has at least one arc; enumeration order is lexicographic by
    node name.
    """
    if start not in net.nodes:
        raise UnknownNode(start)
    if end not in net.nodes:
        raise UnknownNode(end)
    budget = budget or PathBudget()
    emitted = 0
    path = [start]
    on_path = {start}
    stack: list[Iterator[str]] = [iter(sorted(net.postset(start)))]
    while stack:
        it = stack[-1]
        advanced = False
        for nxt in it:
            if nxt in on_path:
                continue
            if nxt == end:
                emitted += 1
                if emitted > budget.max_enumerated_paths:
                    if budget.on_exceed == "error":
                        raise BudgetExceeded("simple paths")
                    return
                yield tuple(path) + (nxt,)
                continue
            path.append(nxt)
            on_path.add(nxt)
            stack.append(iter(sorted(net.postset(nxt))))
            advanced = True
            break
        if not advanced:
            stack.pop()
            dropped = path.pop()
            on_path.discard(dropped)


def max_product_values(
    net: WorkflowNet,
    weights: Mapping[str, Fraction],
) -> dict[tuple[str, str], Fraction]:
    """Maximum path-weight products between every ordered node pair.

    A path weighs the product of the weights of the nodes it visits, each
    interior node counted once (this is what the worked V-value tables
    evaluate: a 2-arc path u,x,v weighs w(u)*w(x)*w(v)).  The value of a
    pair is the maximum over all directed paths with at least one arc, or 0
    when no path exists.  Because all weights lie in (0, 1], products are
    non-increasing along a path and a Dijkstra sweep per source is exact
    (walks never beat simple paths, except that all-1-weight cycles tie
    them, which leaves the maximum unchanged).
    """
    wmap: dict[str, Fraction] = {}
    for node in sorted(net.nodes):
        w = weights.get(node)
        if w is None or not (0 < w <= 1):
            raise WeightOutOfRange(node, w)
        wmap[node] = Fraction(w)

    succ: dict[str, list[str]] = {n: [] for n in net.nodes}
    for u, v in sorted(net.arcs):
        succ[u].append(v)

    values: dict[tuple[str, str], Fraction] = {}
    zero = Fraction(0)
    for u in net.nodes:
        for v in net.nodes:
            values[(u, v)] = zero

    for src in sorted(net.nodes):
        best: dict[str, Fraction] = {}
        done: set[str] = set()
        heap: list[tuple[Fraction, str]] = []
        for v in succ[src]:
            cand = wmap[src] * wmap[v]
            if cand > best.get(v, zero):
                best[v] = cand
                heapq.heappush(heap, (-cand, v))
        while heap:
            neg, node = heapq.heappop(heap)
            prod = -neg
            if node in done or best.get(node, zero) != prod:
                continue
            done.add(node)
            values[(src, node)] = prod
            for v in succ[node]:
                cand = prod * wmap[v]
                if v not in done and cand > best.get(v, zero):
                    best[v] = cand
                    heapq.heappush(heap, (-cand, v))
    return values


def _reachable_arc_count(net: WorkflowNet, start: str, used: set[tuple[str, str]]) -> int:
    """Number of unused arcs reachable from start: an admissible trail bound."""
    seen = {start}
    stack = [start]
    count = 0
    while stack:
        node = stack.pop()
        for nxt in net.postset(node):
            if (node, nxt) in used:
                continue
            count += 1
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return count


def longest_trail(net: WorkflowNet, budget: PathBudget | None = None) -> tuple[str, ...]:
    """Longest source-to-sink way that never reuses an arc.

    Nodes may repeat; the length is the node count of the sequence.  The
    search is exhaustive depth-first over used-arc sets with an optimistic
    reachable-arc bound for pruning.  Among maximal trails the
    lexicographically smallest node sequence wins.
    """
    budget = budget or PathBudget()
    best: list[tuple[str, ...]] = [()]
    steps = 0

    used: set[tuple[str, str]] = set()
    seq = [net.source]

    def consider():
        cand = tuple(seq)
        if len(cand) > len(best[0]) or (len(cand) == len(best[0]) and cand < best[0]):
            best[0] = cand

    def extend(node: str):
        nonlocal steps
        steps += 1
        if steps > budget.max_enumerated_paths:
            raise BudgetExceeded("trails")
        if node == net.sink:
            consider()
        # Successors are explored in lexicographic order, so trails are
        # generated in lexicographic order: a branch that can only tie the
        # best length would produce a lex-greater sequence and may be cut.
        bound = len(seq) + _reachable_arc_count(net, node, used)
        if bound <= len(best[0]):
            return
        for nxt in sorted(net.postset(node)):
            arc = (node, nxt)
            if arc in used:
                continue
            used.add(arc)
            seq.append(nxt)
            extend(nxt)
            seq.pop()
            used.discard(arc)

    try:
        extend(net.source)
    except BudgetExceeded:
        if budget.on_exceed == "error":
            raise
    return best[0]


def bounded_language(
    net: WorkflowNet,
    bounds: LanguageBounds | None = None,
) -> tuple[frozenset[tuple[str, ...]], bool]:
    """Prefix-closed set of visible-label firing sequences, plus a flag.

    Explores the token game from the marking {source: 1}.  Silent firings
    contribute no symbol.  The flag reports whether any exploration was cut
    off (trace length or per-place token caps), i.e. whether the returned
    set may be incomplete.  Exceeding ``max_states`` raises
    :class:`StateBudgetExceeded`.
    """
    bounds = bounds or LanguageBounds()
    place_order = net.sorted_places()
    place_index = {p: i for i, p in enumerate(place_order)}
    trans_order = net.sorted_transitions()
    pre_idx = {t: sorted(place_index[p] for p in net.preset(t)) for t in trans_order}
    post_idx = {t: sorted(place_index[p] for p in net.postset(t)) for t in trans_order}

    initial = tuple(1 if p == net.source else 0 for p in place_order)
    start = (initial, ())
    seen = {start}
    frontier = [start]
    traces: set[tuple[str, ...]] = {()}
    truncated = False

    while frontier:
        marking, trace = frontier.pop()
        for t in trans_order:
            if any(marking[i] < 1 for i in pre_idx[t]):
                continue
            label = net.label(t)
            if label is not None and len(trace) >= bounds.max_visible_length:
                truncated = True
                continue
            next_m = list(marking)
            for i in pre_idx[t]:
                next_m[i] -= 1
            overflow = False
            for i in post_idx[t]:
                next_m[i] += 1
                if next_m[i] > bounds.max_tokens_per_place:
                    overflow = True
            if overflow:
                truncated = True
                continue
            next_trace = trace if label is None else trace + (label,)
            state = (tuple(next_m), next_trace)
            if state in seen:
                continue
            seen.add(state)
            if len(seen) > bounds.max_states:
                raise StateBudgetExceeded(bounds.max_states)
            traces.add(next_trace)
            frontier.append(state)

    return frozenset(traces), truncated
