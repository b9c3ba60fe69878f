"""Block composition operators, uniform relabeling and permutation checks.

The four operators mirror the process-tree constructors: sequence, parallel,
exclusive choice and iteration.  Operand node names are made disjoint by
deterministic prefixing ("L1.", "L2.", ...); glue nodes carry starred names.
For iteration, operand 1 is the forward (do) body and operands 2..n are redo
bodies.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import ArityTooSmall, NotInjective
from .net import TAU, WorkflowNet, validate


class Operator(Enum):
    SEQ = "seq"
    PAR = "par"
    XOR = "xor"
    LOOP = "loop"

    @classmethod
    def from_string(cls, text: str) -> "Operator":
        for op in cls:
            if op.value == text:
                return op
        raise ValueError(f"unknown operator {text!r}")


OPERATORS = (Operator.SEQ, Operator.PAR, Operator.XOR, Operator.LOOP)


def _fresh_labels(policy: str, count: int, taken: set[str]) -> list[str | None]:
    if policy == "tau":
        return [TAU] * count
    if policy != "fresh":
        raise ValueError(f"unknown fresh_label_policy {policy!r}")
    out: list[str | None] = []
    i = 1
    while len(out) < count:
        cand = f"glue{i}"
        i += 1
        if cand not in taken:
            taken.add(cand)
            out.append(cand)
    return out


def compose(
    op: Operator,
    operands: Sequence[WorkflowNet],
    fresh_label_policy: str = "tau",
) -> WorkflowNet:
    """Combine two or more nets with a block operator; result is validated."""
    n = len(operands)
    if n < 2:
        raise ArityTooSmall(n)

    prefix = [f"L{j + 1}." for j in range(n)]
    places: list[str] = []
    transitions: list[str] = []
    arcs: list[tuple[str, str]] = []
    labels: dict[str, str | None] = {}
    src = [prefix[j] + operands[j].source for j in range(n)]
    snk = [prefix[j] + operands[j].sink for j in range(n)]

    taken: set[str] = set()
    for j, net in enumerate(operands):
        taken |= {l for l in net.labels.values() if l is not TAU}
    for j, net in enumerate(operands):
        places.extend(prefix[j] + p for p in net.sorted_places())
        transitions.extend(prefix[j] + t for t in net.sorted_transitions())
        arcs.extend((prefix[j] + u, prefix[j] + v) for u, v in net.sorted_arcs())
        for t in net.sorted_transitions():
            labels[prefix[j] + t] = net.label(t)

    if op is Operator.SEQ:
        glue = [f"t{j + 1}*" for j in range(n - 1)]
        transitions.extend(glue)
        for j, t in enumerate(glue):
            arcs.append((snk[j], t))
            arcs.append((t, src[j + 1]))
        glue_transitions = glue
    elif op is Operator.PAR:
        places.extend(["pi*", "po*"])
        transitions.extend(["ti*", "to*"])
        arcs.append(("pi*", "ti*"))
        arcs.append(("to*", "po*"))
        for j in range(n):
            arcs.append(("ti*", src[j]))
            arcs.append((snk[j], "to*"))
        glue_transitions = ["ti*", "to*"]
    elif op is Operator.XOR:
        places.extend(["pi*", "po*"])
        tj = [f"t{j + 1}*" for j in range(n)]
        sj = [f"s{j + 1}*" for j in range(n)]
        transitions.extend(tj + sj)
        for j in range(n):
            arcs.append(("pi*", tj[j]))
            arcs.append((tj[j], src[j]))
            arcs.append((snk[j], sj[j]))
            arcs.append((sj[j], "po*"))
        glue_transitions = tj + sj
    elif op is Operator.LOOP:
        places.extend(["pi*", "po*", "p*", "q*"])
        tj = [f"t{j + 1}*" for j in range(n)]
        sj = [f"s{j + 1}*" for j in range(n)]
        transitions.extend(["t*", "s*"] + tj + sj)
        arcs.append(("pi*", "t*"))
        arcs.append(("t*", "p*"))
        arcs.append(("q*", "s*"))
        arcs.append(("s*", "po*"))
        # forward body
        arcs.append(("p*", tj[0]))
        arcs.append((tj[0], src[0]))
        arcs.append((snk[0], sj[0]))
        arcs.append((sj[0], "q*"))
        # redo bodies run back from q* to p*
        for j in range(1, n):
            arcs.append(("q*", sj[j]))
            arcs.append((sj[j], src[j]))
            arcs.append((snk[j], tj[j]))
            arcs.append((tj[j], "p*"))
        glue_transitions = ["t*", "s*"] + tj + sj
    else:  # pragma: no cover
        raise ValueError(op)

    for t, l in zip(glue_transitions, _fresh_labels(fresh_label_policy, len(glue_transitions), taken)):
        labels[t] = l

    return validate(places, transitions, arcs, labels)


def relabel(net: WorkflowNet, mapping: Mapping[str, str]) -> WorkflowNet:
    """Replace visible labels through an injective map; tau is preserved."""
    used = sorted(net.visible_labels())
    images = [mapping.get(l, l) for l in used]
    if len(set(images)) != len(images):
        dupes = [l for l in images if images.count(l) > 1]
        raise NotInjective(dupes[0])
    new_labels = {
        t: (l if l is TAU else mapping.get(l, l)) for t, l in net.labels.items()
    }
    return validate(
        net.sorted_places(), net.sorted_transitions(), net.sorted_arcs(),
        new_labels, net.source, net.sink,
    )


def is_permutation(w1: WorkflowNet, w2: WorkflowNet) -> bool:
    """True iff both nets share the same transitions with identical labels.

    Places and flow may differ arbitrarily; both arguments are already valid
    workflow nets.
    """
    if w1.transitions != w2.transitions:
        return False
    return all(w1.label(t) == w2.label(t) for t in w1.transitions)


def reverse(net: WorkflowNet) -> WorkflowNet:
    """The net with every arc reversed; source and sink swap roles."""
    return validate(
        net.sorted_places(),
        net.sorted_transitions(),
        [(v, u) for u, v in net.sorted_arcs()],
        dict(net.labels),
        net.sink,
        net.source,
    )


def binary(op: Operator, m1: WorkflowNet, m2: WorkflowNet, **kw) -> WorkflowNet:
    """Infix-style shorthand: m1 (+) m2."""
    return compose(op, [m1, m2], **kw)


def chain_labels(nets: Iterable[WorkflowNet]) -> set[str]:
    """Union of visible labels over several nets."""
    out: set[str] = set()
    for net in nets:
        out |= net.visible_labels()
    return out
