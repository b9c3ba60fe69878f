"""Net serialization: native JSON documents, a PNML subset, DOT export."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET

from .errors import NetSyntaxError, UnsupportedPnml
from .net import TAU, WorkflowNet, validate

_REQUIRED_FIELDS = ("name", "places", "transitions", "arcs", "source", "sink")


def net_to_document(net: WorkflowNet, name: str = "net") -> dict:
    """Canonical native document: nodes and arcs in lexicographic order."""
    return {
        "name": name,
        "places": net.sorted_places(),
        "transitions": [
            {"id": t, "label": net.label(t)} for t in net.sorted_transitions()
        ],
        "arcs": [[u, v] for u, v in net.sorted_arcs()],
        "source": net.source,
        "sink": net.sink,
    }


def document_to_net(doc: dict) -> WorkflowNet:
    for field in _REQUIRED_FIELDS:
        if field not in doc:
            raise NetSyntaxError(f"missing field {field!r}")
    if not isinstance(doc["places"], list):
        raise NetSyntaxError("'places' must be a list of strings")
    if not isinstance(doc["transitions"], list):
        raise NetSyntaxError("'transitions' must be a list of objects")
    transitions = []
    labels: dict[str, str | None] = {}
    for entry in doc["transitions"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise NetSyntaxError("transition entries need an 'id'")
        transitions.append(entry["id"])
        labels[entry["id"]] = entry.get("label", TAU)
    arcs = []
    for pair in doc["arcs"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise NetSyntaxError(f"bad arc entry {pair!r}")
        arcs.append((pair[0], pair[1]))
    return validate(doc["places"], transitions, arcs, labels, doc["source"], doc["sink"])


def write_native(net: WorkflowNet, name: str = "net") -> str:
    """Serialize a net to canonical native text (round-trips byte-identically)."""
    return json.dumps(net_to_document(net, name), indent=2, sort_keys=False) + "\n"


def parse_native(text: str) -> WorkflowNet:
    """Parse native text; raises NetSyntaxError or a validation error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetSyntaxError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise NetSyntaxError("document root must be an object")
    return document_to_net(doc)


def _strip_ns(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def parse_pnml_subset(text: str) -> WorkflowNet:
    """Import a single-page PNML net.

    Transition names become labels (absent or empty name means tau); source
    and sink are inferred from empty presets/postsets.  Arc inscriptions
    other than 1 and multi-page documents are rejected explicitly.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise NetSyntaxError(str(exc)) from None

    nets = [el for el in root.iter() if _strip_ns(el.tag) == "net"]
    if not nets:
        raise NetSyntaxError("no <net> element")
    if len(nets) > 1:
        raise UnsupportedPnml("multiple nets")
    net_el = nets[0]
    pages = [el for el in net_el.iter() if _strip_ns(el.tag) == "page"]
    if len(pages) > 1:
        raise UnsupportedPnml("multiple pages")
    scope = pages[0] if pages else net_el

    def element_name(el) -> str | None:
        for child in el:
            if _strip_ns(child.tag) == "name":
                for sub in child.iter():
                    if _strip_ns(sub.tag) == "text":
                        value = (sub.text or "").strip()
                        return value or None
        return None

    places, transitions, arcs = [], [], []
    labels: dict[str, str | None] = {}
    for el in scope.iter():
        tag = _strip_ns(el.tag)
        if tag == "place":
            places.append(el.attrib["id"])
        elif tag == "transition":
            tid = el.attrib["id"]
            transitions.append(tid)
            labels[tid] = element_name(el)
        elif tag == "arc":
            for child in el:
                if _strip_ns(child.tag) == "inscription":
                    for sub in child.iter():
                        if _strip_ns(sub.tag) == "text":
                            if (sub.text or "").strip() not in ("", "1"):
                                raise UnsupportedPnml(f"arc inscription {sub.text!r}")
            arcs.append((el.attrib["source"], el.attrib["target"]))

    return validate(places, transitions, arcs, labels)


def export_dot(net: WorkflowNet, name: str = "net") -> str:
    """Deterministic DOT text: places as circles, transitions as boxes."""
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    for p in net.sorted_places():
        lines.append(f'  "{p}" [shape=circle, label="{p}"];')
    for t in net.sorted_transitions():
        label = net.label(t)
        if label is TAU:
            lines.append(f'  "{t}" [shape=box, style=filled, fillcolor=gray80, label="&tau;"];')
        else:
            lines.append(f'  "{t}" [shape=box, label="{label}"];')
    for u, v in net.sorted_arcs():
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
