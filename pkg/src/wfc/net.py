"""Workflow-net data model, validation and structural queries.

A workflow net is a bipartite Petri net with a unique source place, a unique
sink place, and every node on a directed path from source to sink.  Nets are
immutable after validation; all queries are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    DanglingArc,
    DuplicateName,
    MultipleSinks,
    MultipleSources,
    NodeOffPath,
    NoSink,
    NoSource,
    NotBipartite,
    SourceEqualsSink,
    UnknownNode,
)

#: Label value of a silent transition.
TAU = None

Arc = tuple[str, str]


@dataclass(frozen=True)
class WorkflowNet:
    """A validated, immutable labeled workflow net.

    Node identity is the string name; names are unique across places and
    transitions.  ``labels`` maps every transition to a visible label or
    ``None`` for a silent (tau) transition.  Construct instances through
    :func:`validate` so the invariants are guaranteed to hold.
    """

    places: frozenset[str]
    transitions: frozenset[str]
    arcs: frozenset[Arc]
    labels: Mapping[str, str | None]
    source: str
    sink: str
    _pre: dict = field(default_factory=dict, repr=False, compare=False)
    _post: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        pre: dict[str, set[str]] = {n: set() for n in self.places | self.transitions}
        post: dict[str, set[str]] = {n: set() for n in self.places | self.transitions}
        for u, v in self.arcs:
            post[u].add(v)
            pre[v].add(u)
        object.__setattr__(self, "_pre", {n: frozenset(s) for n, s in pre.items()})
        object.__setattr__(self, "_post", {n: frozenset(s) for n, s in post.items()})

    # -- structural queries -------------------------------------------------

    @property
    def nodes(self) -> frozenset[str]:
        return self.places | self.transitions

    def is_place(self, name: str) -> bool:
        return name in self.places

    def is_transition(self, name: str) -> bool:
        return name in self.transitions

    def preset(self, node: str) -> frozenset[str]:
        """All nodes u with an arc u -> node."""
        try:
            return self._pre[node]
        except KeyError:
            raise UnknownNode(node) from None

    def postset(self, node: str) -> frozenset[str]:
        """All nodes v with an arc node -> v."""
        try:
            return self._post[node]
        except KeyError:
            raise UnknownNode(node) from None

    def degree(self, node: str) -> int:
        """|preset| + |postset| of the node."""
        return len(self.preset(node)) + len(self.postset(node))

    def label(self, transition: str) -> str | None:
        if transition not in self.transitions:
            raise UnknownNode(transition)
        return self.labels.get(transition, TAU)

    def visible_labels(self) -> set[str]:
        return {l for l in self.labels.values() if l is not TAU}

    def sorted_places(self) -> list[str]:
        return sorted(self.places)

    def sorted_transitions(self) -> list[str]:
        return sorted(self.transitions)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WorkflowNet):
            return NotImplemented
        return (
            self.places == other.places
            and self.transitions == other.transitions
            and self.arcs == other.arcs
            and dict(self.labels) == dict(other.labels)
            and self.source == other.source
            and self.sink == other.sink
        )

    def __hash__(self) -> int:
        return hash((self.places, self.transitions, self.arcs, self.source, self.sink,
                     tuple(sorted(self.labels.items(), key=lambda kv: kv[0]))))


@dataclass(frozen=True)
class ConnectorClassification:
    """The four connector sets of a net, per arc counts.

    xor-splits/joins are places, and-splits/joins are transitions.  The sets
    are not necessarily disjoint within a node type (a place can be both an
    xor-split and an xor-join).
    """

    s_xor: frozenset[str]
    j_xor: frozenset[str]
    s_and: frozenset[str]
    j_and: frozenset[str]

    @property
    def c_xor(self) -> frozenset[str]:
        return self.s_xor | self.j_xor

    @property
    def c_and(self) -> frozenset[str]:
        return self.s_and | self.j_and

    @property
    def connectors(self) -> frozenset[str]:
        return self.c_xor | self.c_and


def classify_connectors(net: WorkflowNet) -> ConnectorClassification:
    """Compute the xor/and split and join sets from the arc relation."""
    return ConnectorClassification(
        s_xor=frozenset(p for p in net.places if len(net.postset(p)) > 1),
        j_xor=frozenset(p for p in net.places if len(net.preset(p)) > 1),
        s_and=frozenset(t for t in net.transitions if len(net.postset(t)) > 1),
        j_and=frozenset(t for t in net.transitions if len(net.preset(t)) > 1),
    )


def _reachable(start: str, succ: Mapping[str, Iterable[str]]) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        for nxt in succ[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def validate(
    places: Iterable[str],
    transitions: Iterable[str],
    arcs: Iterable[Arc],
    labels: Mapping[str, str | None] | None = None,
    source: str | None = None,
    sink: str | None = None,
) -> WorkflowNet:
    """Validate a raw net description and return an immutable net.

    The source/sink arguments are optional; when given they must agree with
    the unique no-preset/no-postset places found in the arc relation.
    Raises a :class:`~wfc.errors.NetValidationError` subclass naming the
    violating element otherwise.
    """
    place_list = list(places)
    trans_list = list(transitions)
    seen: set[str] = set()
    for name in place_list + trans_list:
        if not name:
            raise DuplicateName(name)
        if name in seen:
            raise DuplicateName(name)
        seen.add(name)

    place_set = frozenset(place_list)
    trans_set = frozenset(trans_list)
    arc_set = frozenset((str(u), str(v)) for u, v in arcs)

    for u, v in sorted(arc_set):
        if u not in seen or v not in seen:
            raise DanglingArc(u, v)
        place_to_trans = u in place_set and v in trans_set
        trans_to_place = u in trans_set and v in place_set
        if not (place_to_trans or trans_to_place):
            raise NotBipartite(u, v)

    pre: dict[str, set[str]] = {n: set() for n in seen}
    post: dict[str, set[str]] = {n: set() for n in seen}
    for u, v in arc_set:
        post[u].add(v)
        pre[v].add(u)

    # fully isolated nodes are reported as off-path, not as extra sources
    isolated = {n for n in seen if not pre[n] and not post[n]}
    no_pre = sorted(p for p in place_set if not pre[p] and p not in isolated)
    no_post = sorted(p for p in place_set if not post[p] and p not in isolated)
    if not no_pre:
        if isolated:
            raise NodeOffPath(sorted(isolated)[0])
        raise NoSource()
    if len(no_pre) > 1:
        raise MultipleSources(no_pre)
    if not no_post:
        if isolated:
            raise NodeOffPath(sorted(isolated)[0])
        raise NoSink()
    if len(no_post) > 1:
        raise MultipleSinks(no_post)
    found_source, found_sink = no_pre[0], no_post[0]
    if found_source == found_sink:
        raise SourceEqualsSink(found_source)
    if source is not None and source != found_source:
        raise MultipleSources(sorted({source, found_source}))
    if sink is not None and sink != found_sink:
        raise MultipleSinks(sorted({sink, found_sink}))

    forward = _reachable(found_source, post)
    backward = _reachable(found_sink, pre)
    on_path = forward & backward
    for node in sorted(seen):
        if node not in on_path:
            raise NodeOffPath(node)

    label_map = {t: TAU for t in trans_set}
    if labels:
        for t, l in labels.items():
            if t not in trans_set:
                raise UnknownNode(t)
            label_map[t] = l if l is not TAU else TAU
    for t, l in label_map.items():
        if l is not TAU and not isinstance(l, str):
            raise DuplicateName(str(l))
        if l == "":
            label_map[t] = TAU

    return WorkflowNet(
        places=place_set,
        transitions=trans_set,
        arcs=arc_set,
        labels=label_map,
        source=found_source,
        sink=found_sink,
    )
