"""Edge labelings, verification, and the labeling transforms.

A labeling assigns every edge a nonzero residue mod k (any nonzero
integer when k = 1).  It is c-sum magic when every vertex's incident
labels add up to c.  The transforms here are the building blocks of the
constructions: complementation (label -> k - label), folding a labeling
of a doubled graph back onto the source, and extending a labeled factor
by all-ones on the remaining edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import LabelingError, RegularityError
from .factorization import DoublingMap, check_factor
from .graphs import MultiGraph, regularity


@dataclass(frozen=True)
class EdgeLabeling:
    """Labels keyed by edge id; k = 1 means labels are plain integers."""

    k: int
    labels: dict[int, int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise LabelingError(f"modulus must be >= 1, got {self.k}")


def validate_labels(G: MultiGraph, lab: EdgeLabeling) -> None:
    """Raise LabelingError unless lab covers E(G) exactly with legal values."""
    ids = set(lab.labels)
    expected = set(range(G.m))
    if ids != expected:
        missing = sorted(expected - ids)[:5]
        extra = sorted(ids - expected)[:5]
        raise LabelingError(f"label domain mismatch: missing {missing}, extra {extra}")
    for eid, val in lab.labels.items():
        if not isinstance(val, int):
            raise LabelingError(f"edge {eid}: label {val!r} is not an integer")
        if lab.k == 1:
            if val == 0:
                raise LabelingError(f"edge {eid}: zero label")
        elif not 1 <= val <= lab.k - 1:
            raise LabelingError(f"edge {eid}: label {val} outside 1..{lab.k - 1}")


def _sums(G: MultiGraph, labels: Mapping[int, int], k: int, edge_ids: Iterable[int]) -> list[int]:
    sums = [0] * G.n
    for eid in edge_ids:
        e = G.edges[eid]
        sums[e.u] += labels[eid]
        sums[e.v] += labels[eid]
    if k > 1:
        sums = [s % k for s in sums]
    return sums


def verify(G: MultiGraph, lab: EdgeLabeling) -> int | None:
    """Magic sum c if every vertex sum equals c, else None.

    Raises LabelingError on a malformed labeling (zero, missing, or
    out-of-range label); returns None for a legal labeling whose vertex
    sums are not constant.
    """
    validate_labels(G, lab)
    sums = _sums(G, lab.labels, lab.k, range(G.m))
    if G.n == 0:
        return None
    return sums[0] if len(set(sums)) == 1 else None


def verify_subset(G: MultiGraph, labels: Mapping[int, int], k: int, edge_ids: Iterable[int]) -> int | None:
    """Magic sum of a labeled spanning subgraph given by edge ids."""
    ids = sorted(edge_ids)
    if set(ids) != set(labels):
        raise LabelingError("labels do not match the given edge ids")
    for eid in ids:
        val = labels[eid]
        if val == 0 or (k > 1 and not 1 <= val <= k - 1):
            raise LabelingError(f"edge {eid}: label {val} illegal mod {k}")
    sums = _sums(G, labels, k, ids)
    return sums[0] if len(set(sums)) == 1 else None


def complement(G: MultiGraph, lab: EdgeLabeling) -> EdgeLabeling:
    """Replace every label x by k - x, turning a c-sum into a (k-c)-sum."""
    if lab.k == 1:
        raise LabelingError("complement needs k >= 2")
    if verify(G, lab) is None:
        raise LabelingError("complement input does not verify")
    return EdgeLabeling(lab.k, {eid: lab.k - v for eid, v in lab.labels.items()})


def fold(D: DoublingMap, lab2: EdgeLabeling, divisor: int) -> tuple[EdgeLabeling, int]:
    """Fold a labeling of the doubled graph back onto the source.

    Each source edge receives the sum of its two copies' labels, divided
    by the divisor (1 or 2).  With divisor 1 the magic sum is preserved;
    with divisor 2 the result verifies with a sum s where 2s is the
    doubled sum mod k.  Raises LabelingError when a folded label
    vanishes, a pair sum is odd under divisor 2, or the input does not
    verify.
    """
    if divisor not in (1, 2):
        raise LabelingError(f"divisor must be 1 or 2, got {divisor}")
    c2 = verify(D.doubled, lab2)
    if c2 is None:
        raise LabelingError("doubled labeling does not verify")
    k = lab2.k
    folded: dict[int, int] = {}
    for orig, dup in D.pairs:
        s = lab2.labels[orig] + lab2.labels[dup]
        if divisor == 2:
            if s % 2 != 0:
                raise LabelingError(f"edge pair ({orig}, {dup}): odd sum {s}")
            s //= 2
        if k > 1:
            s %= k
        if s == 0:
            raise LabelingError(f"edge pair ({orig}, {dup}): folded label vanishes")
        folded[orig] = s
    out = EdgeLabeling(k, folded)
    c = verify(D.source, out)
    if c is None:
        raise LabelingError("folded labeling is not magic")
    if divisor == 1 and k > 1 and c != c2 % k:
        raise LabelingError("fold with divisor 1 changed the magic sum")
    if divisor == 2 and k > 1 and (2 * c - c2) % k != 0:
        raise LabelingError("fold with divisor 2 broke the sum relation")
    return out, c


def extend_by_factor(
    G: MultiGraph, factor_edges: Iterable[int], lab_H: Mapping[int, int], k: int
) -> tuple[EdgeLabeling, int]:
    """Label a factor as given and everything else with 1.

    For an r-regular G and an h-factor verifying with sum a, the result
    verifies with a + (r - h) mod k.  Requires k != 2 and 2 <= h <= r
    (h = r is an allowed passthrough).
    """
    if k == 2:
        raise LabelingError("extension by ones needs k != 2")
    r = regularity(G)
    if r is None:
        raise RegularityError("extension needs a regular graph")
    factor = sorted(set(factor_edges))
    degs = [0] * G.n
    for eid in factor:
        e = G.edges[eid]
        degs[e.u] += 1
        degs[e.v] += 1
    h = degs[0] if G.n else 0
    check_factor(G, factor, h)
    if not 2 <= h <= r:
        raise LabelingError(f"factor degree {h} outside 2..{r}")
    alpha = verify_subset(G, dict(lab_H), k, factor)
    if alpha is None:
        raise LabelingError("factor labeling does not verify")
    labels = {eid: 1 for eid in range(G.m)}
    labels.update({eid: lab_H[eid] for eid in factor})
    out = EdgeLabeling(k, labels)
    c = alpha + (r - h)
    if k > 1:
        c %= k
    got = verify(G, out)
    if got != c:
        raise LabelingError(f"extension verified {got}, expected {c}")
    return out, c


# ---------------------------------------------------------------------------
# construction traces


@dataclass(frozen=True)
class TraceStep:
    """One recorded construction step.

    rule names the construction applied, params carries its numeric
    choices, labels (optional) the assignment it produced, and scope
    says which graph those labels live on ("graph" or "doubled").
    """

    rule: str
    params: dict = field(default_factory=dict)
    labels: dict[int, int] | None = None
    scope: str = "graph"

    def to_jsonable(self) -> dict:
        return {
            "labels": None if self.labels is None else {str(i): v for i, v in sorted(self.labels.items())},
            "params": self.params,
            "rule": self.rule,
            "scope": self.scope,
        }


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[TraceStep, ...]

    def to_jsonable(self) -> list[dict]:
        return [s.to_jsonable() for s in self.steps]

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]


def replay_trace(trace: ConstructionTrace) -> dict[int, int] | None:
    """Final edge assignment recorded in a trace, or None if absent.

    Every successful construction ends with a step whose labels are the
    complete assignment on the target graph; replay returns it.
    """
    final = None
    for step in trace.steps:
        if step.scope == "graph" and step.labels is not None:
            final = dict(step.labels)
    return final


def labeling_to_json(lab: EdgeLabeling, c: int, trace: ConstructionTrace | None = None) -> str:
    payload = {
        "c": c,
        "k": lab.k,
        "labels": {str(eid): v for eid, v in sorted(lab.labels.items())},
        "trace": trace.to_jsonable() if trace is not None else [],
    }
    return json.dumps(payload, sort_keys=True) + "\n"


def labeling_from_json(text: str) -> tuple[EdgeLabeling, int, list[dict]]:
    try:
        payload = json.loads(text)
        lab = EdgeLabeling(payload["k"], {int(i): v for i, v in payload["labels"].items()})
        return lab, payload["c"], payload.get("trace", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise LabelingError(f"bad labeling file: {exc}") from None
