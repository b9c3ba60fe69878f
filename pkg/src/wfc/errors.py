"""Exception types shared across the package."""

from __future__ import annotations


class WfcError(Exception):
    """Base class for all domain errors raised by this package."""


class NetValidationError(WfcError):
    """A candidate net violates the workflow-net invariants."""


class NotBipartite(NetValidationError):
    def __init__(self, source: str, target: str):
        self.source, self.target = source, target
        super().__init__(f"arc ({source}, {target}) does not connect a place with a transition")


class MultipleSources(NetValidationError):
    def __init__(self, places):
        self.places = sorted(places)
        super().__init__(f"more than one place has an empty preset: {self.places}")


class MultipleSinks(NetValidationError):
    def __init__(self, places):
        self.places = sorted(places)
        super().__init__(f"more than one place has an empty postset: {self.places}")


class NoSource(NetValidationError):
    def __init__(self):
        super().__init__("no place has an empty preset")


class NoSink(NetValidationError):
    def __init__(self):
        super().__init__("no place has an empty postset")


class SourceEqualsSink(NetValidationError):
    def __init__(self, place: str):
        self.place = place
        super().__init__(f"place {place!r} is both source and sink")


class NodeOffPath(NetValidationError):
    def __init__(self, node: str):
        self.node = node
        super().__init__(f"node {node!r} lies on no path from the source to the sink")


class DanglingArc(NetValidationError):
    def __init__(self, source: str, target: str):
        self.source, self.target = source, target
        super().__init__(f"arc ({source}, {target}) refers to an undeclared node")


class DuplicateName(NetValidationError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"node name {name!r} is not unique")


class UnknownNode(WfcError):
    def __init__(self, node: str):
        self.node = node
        super().__init__(f"unknown node {node!r}")


class WeightOutOfRange(WfcError):
    def __init__(self, node: str, weight):
        self.node, self.weight = node, weight
        super().__init__(f"weight {weight} for node {node!r} is outside (0, 1]")


class BudgetExceeded(WfcError):
    def __init__(self, what: str):
        super().__init__(f"search budget exceeded while enumerating {what}")


class StateBudgetExceeded(WfcError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"state budget of {limit} markings exceeded")


class ArityTooSmall(WfcError):
    def __init__(self, got: int):
        self.got = got
        super().__init__(f"composition needs at least 2 operands, got {got}")


class NotInjective(WfcError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"relabeling map is not injective at {label!r}")


class UndefinedForNet(WfcError):
    def __init__(self, measure: str, reason: str):
        self.measure, self.reason = measure, reason
        super().__init__(f"measure {measure!r} is undefined for this net: {reason}")


class ParamOutOfRange(WfcError):
    def __init__(self, family: str, message: str):
        self.family = family
        super().__init__(f"family {family!r}: {message}")


class UnknownFixture(WfcError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no fixture named {name!r} in the catalog")


class NetSyntaxError(WfcError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"syntax error{where}: {message}")


class UnsupportedPnml(WfcError):
    def __init__(self, feature: str):
        self.feature = feature
        super().__init__(f"unsupported PNML feature: {feature}")
