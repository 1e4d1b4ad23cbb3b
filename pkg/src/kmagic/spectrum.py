"""Sum spectra: brute-force computation and closed-form prediction.

The sum spectrum of G mod k is the set of residues c admitting a c-sum
k-magic labeling.  brute_force_spectrum decides membership by budgeted
backtracking; predict_spectrum applies the characterization of
completely k-magic regular graphs, falling back to solver-backed
predicates (zero-sum 4-magic status, mod-3 factor existence) where the
characterization demands them.  Disconnected graphs are handled
component by component and the spectra intersected, since a magic
labeling restricts to every component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import KmagicError, RegularityError
from .factors import mod3_factor
from .graphs import MultiGraph, components, find_bridges, regularity, subgraph, two_regular_profile
from .solver import SolverBudget, search_labeling

SYMBOLIC_TAGS = ("Z", "Z*", "2Z", "2Z*")  # * marks "zero excluded"

# Conditions under which a regular graph of degree r and order n >= 3 is
# completely k-magic; cited in provenance strings by number.
CONDITIONS = {
    1: "condition (1): 2-regular with every cycle even, k >= 3",
    2: "condition (2): k >= 5, odd degree r >= 3",
    3: "condition (3): k >= 5, even degree r >= 4, even order",
    4: "condition (4): odd k >= 5, even degree r >= 4, odd order",
    5: "condition (5): k = 4, r >= 3, even order, zero-sum 4-magic",
    6: "condition (6): k = 3 and (r % 3 != 0, or r % 6 == 0, or a mod-3 factor exists)",
}


@dataclass(frozen=True)
class SpectrumSet:
    """A sum spectrum: finite residue set mod k, or symbolic for k = 1."""

    k: int
    residues: frozenset[int] | None = None
    symbolic: str | None = None
    provenance: tuple[str, ...] = ()
    undecided: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if (self.residues is None) == (self.symbolic is None):
            raise KmagicError("exactly one of residues and symbolic must be set")
        if self.symbolic is not None and self.symbolic not in SYMBOLIC_TAGS:
            raise KmagicError(f"unknown symbolic tag {self.symbolic!r}")
        if (self.k == 1) != (self.symbolic is not None):
            raise KmagicError("k = 1 spectra are symbolic, k >= 2 spectra are residue sets")

    def contains(self, c: int) -> bool | None:
        """Membership of c, or None when the solver left c undecided."""
        if self.symbolic is not None:
            even_only = self.symbolic.startswith("2")
            no_zero = self.symbolic.endswith("*")
            if even_only and c % 2 != 0:
                return False
            if no_zero and c == 0:
                return False
            return True
        c %= self.k
        if c in self.undecided:
            return None
        return c in self.residues

    def is_complete(self) -> bool:
        if self.symbolic is not None:
            return self.symbolic == "Z"
        return not self.undecided and self.residues == frozenset(range(self.k))

    def to_json(self) -> str:
        payload: dict = {
            "complete": self.is_complete(),
            "k": self.k,
            "provenance": list(self.provenance),
            "undecided": sorted(self.undecided),
        }
        if self.symbolic is not None:
            payload["symbolic"] = self.symbolic
        else:
            payload["spectrum"] = sorted(self.residues)
        return json.dumps(payload, sort_keys=True) + "\n"


def _require_regular(G: MultiGraph) -> int:
    r = regularity(G)
    if r is None or r < 1:
        raise RegularityError(f"need a regular graph with r >= 1, got r={r}")
    return r


def brute_force_spectrum(G: MultiGraph, k: int, budget: SolverBudget | None = None) -> SpectrumSet:
    """Spectrum by exhaustive backtracking, target sums in increasing order.

    Residues whose search hits the node cap are reported undecided,
    never guessed.
    """
    if k < 2:
        raise RegularityError("brute force needs k >= 2")
    _require_regular(G)
    present = set()
    undecided = set()
    for c in range(k):
        res = search_labeling(G, k, c, budget)
        if res.status == "found":
            present.add(c)
        elif res.status == "undecided":
            undecided.add(c)
    return SpectrumSet(
        k,
        residues=frozenset(present),
        provenance=("solver",),
        undecided=frozenset(undecided),
    )


def zero_sum_4_magic(G: MultiGraph, budget: SolverBudget | None = None) -> tuple[bool | None, str]:
    """Does G admit a 0-sum 4-magic labeling?  (decision, reason).

    Even degree settles it positively.  For odd degree, a vertex whose
    incident edges are all cut edges settles it negatively; otherwise
    the solver decides (None when the budget runs out).
    """
    r = _require_regular(G)
    if r < 3:
        raise RegularityError(f"zero-sum 4-magic test needs r >= 3, got {r}")
    if r % 2 == 0:
        return True, "even degree: pairs of 2-factors labeled to cancel mod 4"
    bridges = find_bridges(G)
    for v in range(G.n):
        if all(eid in bridges for eid in G.incident[v]):
            return False, f"vertex {v} has only cut edges, which blocks zero sums mod 4"
    res = search_labeling(G, 4, 0, budget)
    if res.status == "found":
        return True, "solver found a zero-sum labeling"
    if res.status == "absent":
        return False, "solver exhausted the search space"
    return None, "solver budget exceeded"


def _component_graphs(G: MultiGraph) -> list[MultiGraph]:
    comps = components(G)
    if len(comps) <= 1:
        return [G]
    out = []
    for comp in comps:
        verts = sorted(comp)
        vmap = {v: i for i, v in enumerate(verts)}
        edge_ids = [e.id for e in G.edges if e.u in comp]
        sub, _ = subgraph(G, edge_ids)
        remapped = MultiGraph(
            len(verts),
            tuple(
                type(e)(i, vmap[e.u], vmap[e.v], origin=e.origin)
                for i, e in enumerate(sub.edges)
            ),
        )
        out.append(remapped)
    return out


def _symbolic_for_component(C: MultiGraph) -> tuple[str, str]:
    """Integer-labeling spectrum tag of a connected regular graph."""
    r = _require_regular(C)
    if r == 1:
        return "Z*", "1-regular: each vertex sum is its single label"
    if r == 2:
        if two_regular_profile(C).all_even:
            return "Z", "2-regular, even cycles: alternating integer labels x and c - x"
        return "2Z*", "odd cycle forces a constant label x with sum 2x"
    if C.n % 2 == 0:
        return "Z", f"degree {r} >= 3 and even order admit every integer sum"
    return "2Z", "odd order admits exactly the even integer sums"


def _intersect_symbolic(tags: list[str]) -> str:
    even_only = any(t.startswith("2") for t in tags)
    no_zero = any(t.endswith("*") for t in tags)
    return ("2" if even_only else "") + "Z" + ("*" if no_zero else "")


def _component_spectrum(
    C: MultiGraph, k: int, budget: SolverBudget | None
) -> tuple[set[int], set[int], list[str]]:
    """(residues, undecided, provenance) for one connected component, k >= 3."""
    r = _require_regular(C)
    n = C.n
    full = set(range(k))
    evens = set(range(0, k, 2))
    if r == 1:
        return full - {0}, set(), ["1-regular: spectrum is the nonzero residues"]
    if r == 2:
        if two_regular_profile(C).all_even:
            return full, set(), [CONDITIONS[1]]
        if k % 2 == 1:
            return full - {0}, set(), ["odd cycle, odd k: constant labels reach every nonzero residue"]
        return evens, set(), ["odd cycle, even k: sums 2x cover exactly the even residues"]
    # r >= 3
    if k >= 5:
        if r % 2 == 1:
            return full, set(), [CONDITIONS[2]]
        if n % 2 == 0:
            return full, set(), [CONDITIONS[3]]
        if k % 2 == 1:
            return full, set(), [CONDITIONS[4]]
        return evens, set(), [
            "even k >= 6, even degree, odd order: only even sums are possible and all occur"
        ]
    if k == 4:
        if n % 2 == 1:
            return {0, 2}, set(), [
                "k = 4, odd order: zero-sum holds for the (necessarily even) degree, other sums must be even"
            ]
        if r % 2 == 0:
            return full, set(), [CONDITIONS[5] + "; zero-sum automatic for even degree"]
        decision, reason = zero_sum_4_magic(C, budget)
        if decision is True:
            return full, set(), [CONDITIONS[5] + f"; {reason}"]
        if decision is False:
            return {1, 2, 3}, set(), [
                f"k = 4, odd degree, not zero-sum ({reason}); nonzero residues via constant labels"
            ]
        return {1, 2, 3}, {0}, [f"k = 4: zero-sum status undecided ({reason})"]
    if k == 3:
        if r % 3 != 0 or r % 6 == 0:
            return full, set(), [CONDITIONS[6]]
        factor = mod3_factor(C)
        if factor is not None:
            return full, set(), [CONDITIONS[6] + "; mod-3 factor found"]
        return {0}, set(), [
            "k = 3, r % 6 == 3, no mod-3 factor: only the zero sum survives"
        ]
    raise RegularityError(f"no closed-form prediction for k={k}")


def predict_spectrum(G: MultiGraph, k: int, budget: SolverBudget | None = None) -> SpectrumSet:
    """Spectrum from the characterization, without exhaustive search.

    k = 1 yields a symbolic set over the integers; k = 2 falls back to
    the solver (no closed form is applied); k >= 3 uses the completeness
    conditions plus the bordering exact spectra.
    """
    _require_regular(G)
    comps = _component_graphs(G)
    if k == 1:
        tags = []
        prov = []
        for i, C in enumerate(comps):
            tag, why = _symbolic_for_component(C)
            tags.append(tag)
            prov.append(why if len(comps) == 1 else f"component {i}: {why}")
        return SpectrumSet(1, symbolic=_intersect_symbolic(tags), provenance=tuple(prov))
    if k == 2:
        base = brute_force_spectrum(G, 2, budget)
        return SpectrumSet(
            2,
            residues=base.residues,
            provenance=("k = 2 has no closed-form prediction; solver result",),
            undecided=base.undecided,
        )
    residue_sets = []
    undecided_sets = []
    prov: list[str] = []
    for i, C in enumerate(comps):
        res, und, why = _component_spectrum(C, k, budget)
        residue_sets.append(res)
        undecided_sets.append(und)
        prov.extend(w if len(comps) == 1 else f"component {i}: {w}" for w in why)
    definite = set.intersection(*(rs | us for rs, us in zip(residue_sets, undecided_sets)))
    certain = set.intersection(*residue_sets)
    undecided = definite - certain
    return SpectrumSet(
        k,
        residues=frozenset(certain),
        provenance=tuple(prov),
        undecided=frozenset(undecided),
    )


def is_completely_k_magic(
    G: MultiGraph, k: int, budget: SolverBudget | None = None
) -> tuple[bool | None, tuple[str, ...]]:
    """Decision with provenance; None when a predicate stayed undecided."""
    if k < 2:
        raise RegularityError("completeness is asked for k >= 2")
    if G.n < 3:
        raise RegularityError("completeness is asked for order >= 3")
    if k == 2:
        return False, ("k = 2: the all-ones labeling is the only one, so at most one sum occurs",)
    spec = predict_spectrum(G, k, budget)
    if spec.is_complete():
        return True, spec.provenance
    if spec.undecided and spec.residues | spec.undecided == set(range(k)):
        return None, spec.provenance
    missing = sorted(set(range(k)) - set(spec.residues) - set(spec.undecided))
    return False, spec.provenance + (f"missing sums: {missing}",)


def null_set(G: MultiGraph, kmax: int, budget: SolverBudget | None = None) -> dict[int, bool | None]:
    """For k = 1..kmax: does G admit a zero-sum k-magic labeling?

    Values are True/False, or None where the predicted k = 4 status ran
    out of budget.
    """
    if kmax < 1:
        raise RegularityError("kmax must be >= 1")
    _require_regular(G)
    out: dict[int, bool | None] = {}
    for k in range(1, kmax + 1):
        out[k] = predict_spectrum(G, k, budget).contains(0)
    return out
