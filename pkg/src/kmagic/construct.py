"""Rule-driven construction of c-sum k-magic labelings.

construct() first predicts the spectrum; a c outside it is reported
absent with the excluding rule in the trace.  Otherwise a fixed cascade
of constructions is tried, cheapest first: constant labels, per-cycle
labelings, 2-factorization assignments, the gcd/fold constructions for
odd degree, the 4-regular and factor-extension routes for even degree,
the mod-3 factor rule, parametric doubling searches, and finally the
exact solver.  A rule whose formula goes illegal at a boundary (a label
vanishing mod k) falls through to the next rule and the event is
recorded in the trace.  Every labeling handed back has been re-verified
against the requested sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import FactorError, KmagicError, LabelingError, RegularityError
from .factorization import double_graph, extract_2h_factor, two_factorization
from .factors import f_factor, mod3_factor
from .graphs import MultiGraph, regularity, subgraph, two_regular_profile
from .labelings import (
    ConstructionTrace,
    EdgeLabeling,
    TraceStep,
    extend_by_factor,
    fold,
    verify,
)
from .solver import SolverBudget, search_labeling
from .spectrum import predict_spectrum


@dataclass(frozen=True)
class ConstructResult:
    """Outcome of construct: status in {found, absent, undecided}."""

    status: str
    labeling: EdgeLabeling | None
    c: int | None
    trace: ConstructionTrace


class _Skip(Exception):
    """Rule did not produce a labeling."""


class _NotApplicable(_Skip):
    """Guard failed; not worth a trace entry."""


class _Miss(_Skip):
    """Rule applied but its formula went illegal; recorded in the trace."""


def _norm(c: int, k: int) -> int:
    return c % k if k > 1 else c


def _accept(G, k, c, labels, rule, params, extra_steps=()):
    """Re-verify a candidate assignment and close the trace with it."""
    lab = EdgeLabeling(k, dict(labels))
    try:
        got = verify(G, lab)
    except LabelingError as exc:
        raise _Miss(f"{rule}: {exc}") from None
    if got != _norm(c, k):
        raise _Miss(f"{rule}: verified sum {got}, wanted {_norm(c, k)}")
    steps = list(extra_steps)
    steps.append(TraceStep(rule, dict(params), labels=dict(labels)))
    return lab, steps


# ---------------------------------------------------------------------------
# individual rules


def _rule_constant(G, r, k, c, budget):
    """All edges get one label a with r*a = c; rule (gcd) and friends."""
    if k >= 2:
        for a in range(1, k):
            if (r * a) % k == c % k:
                return _accept(G, k, c, {e: a for e in range(G.m)}, "constant", {"a": a})
        raise _NotApplicable("no constant label fits")
    if c != 0 and c % r == 0:
        a = c // r
        return _accept(G, k, c, {e: a for e in range(G.m)}, "constant", {"a": a})
    raise _NotApplicable("no constant label fits")


def _cycle_labels(G, k, c):
    """Labels for a 2-regular graph: alternate on even cycles, constant
    on odd ones.  Raises when some cycle cannot meet the sum."""
    prof = two_regular_profile(G)
    labels: dict[int, int] = {}
    for verts, eids in prof.cycles:
        if len(eids) % 2 == 0:
            if k == 1:
                x = 1 if c != 1 else 2
                y = c - x
            else:
                cn = c % k
                for x in (1, 2):
                    if x <= k - 1 and (cn - x) % k != 0:
                        break
                else:
                    raise _Miss(f"even cycle: no alternating pair for c={cn} mod {k}")
                y = (cn - x) % k
            for i, eid in enumerate(eids):
                labels[eid] = x if i % 2 == 0 else y
        else:
            if k == 1:
                if c == 0 or c % 2 != 0:
                    raise _Miss(f"odd cycle needs an even nonzero sum, got {c}")
                x = c // 2
            elif k % 2 == 1:
                x = (c * pow(2, -1, k)) % k
                if x == 0:
                    raise _Miss("odd cycle, odd k: zero sum has no nonzero label")
            else:
                if c % 2 != 0:
                    raise _Miss(f"odd cycle, even k: sum {c % k} is odd")
                cn = c % k
                x = (cn // 2) % k
                if x == 0:
                    x = (cn // 2 + k // 2) % k
                if x == 0:
                    raise _Miss("odd cycle: both half-sum labels vanish")
            for eid in eids:
                labels[eid] = x
    return labels


def _rule_cycles(G, r, k, c, budget):
    labels = _cycle_labels(G, k, c)
    return _accept(G, k, c, labels, "cycle-rule", {"c": _norm(c, k)})


def _two_factor_values(rho: int, k: int, c: int) -> list[int] | None:
    """Per-2-factor constants x_i with 2*sum(x_i) = c, all nonzero."""
    if k >= 2:
        cn = c % k
        for a in range(1, k):
            if (2 * a * rho) % k == cn:
                return [a] * rho
        if rho >= 2:
            for b in range(1, k):
                if (2 * (rho - 1) + 2 * b) % k == cn:
                    return [1] * (rho - 1) + [b]
            for b1 in range(1, k):
                for b2 in range(b1, k):
                    if (2 * (rho - 2) + 2 * b1 + 2 * b2) % k == cn:
                        return [1] * (rho - 2) + [b1, b2]
        return None
    if c % 2 != 0:
        return None
    s = c // 2
    if rho == 1:
        return [s] if s != 0 else None
    s2 = s - (rho - 2)
    u, v = (1, s2 - 1) if s2 != 1 else (2, -1)
    if u == 0 or v == 0:
        return None
    return [1] * (rho - 2) + [u, v]


def _rule_two_factor_constants(G, r, k, c, budget):
    """Zero-sum and even-sum workhorse for even degree."""
    parts = two_factorization(G).parts
    values = _two_factor_values(len(parts), k, c)
    if values is None:
        raise _NotApplicable("no 2-factor constants reach the sum")
    labels: dict[int, int] = {}
    for part, x in zip(parts, values):
        for eid in part:
            labels[eid] = x
    return _accept(G, k, c, labels, "two-factor-constants", {"values": values})


def _rule_two_factor_cycle_remainder(G, r, k, c, budget):
    """All but one 2-factor constant, the last labeled by the cycle rule."""
    parts = two_factorization(G).parts
    rho = len(parts)
    if rho < 2:
        raise _NotApplicable("needs at least two 2-factors")
    fillers = range(1, k) if k >= 2 else (1, 2)
    for idx, part in enumerate(parts):
        Hs, idmap = subgraph(G, part)
        for a in fillers:
            t = c - 2 * a * (rho - 1)
            if k > 1:
                t %= k
            try:
                sub_labels = _cycle_labels(Hs, k, t)
            except _Skip:
                continue
            labels = {eid: a for eid in range(G.m) if eid not in part}
            labels.update({idmap[j]: v for j, v in sub_labels.items()})
            return _accept(
                G, k, c, labels,
                "two-factor-cycle-remainder",
                {"cycle_part": idx, "filler": a, "part_sum": t},
            )
    raise _Miss("no 2-factor takes the remaining sum")


def _rule_factor_split(G, r, k, c, budget):
    """An h-factor labeled a against its complement labeled b."""
    for t in range(1, r):
        if (t * G.n) % 2 != 0:
            continue
        F = f_factor(G, t)
        if F is None:
            continue
        if k >= 2:
            for a in range(1, k):
                for b in range(1, k):
                    if (t * a + (r - t) * b) % k == c % k:
                        labels = {e: a if e in F else b for e in range(G.m)}
                        return _accept(
                            G, k, c, labels, "factor-split", {"h": t, "a": a, "b": b}
                        )
        else:
            for b in (1, 2, -1, -2):
                num = c - (r - t) * b
                if num % t != 0:
                    continue
                a = num // t
                if a == 0:
                    continue
                labels = {e: a if e in F else b for e in range(G.m)}
                return _accept(
                    G, k, c, labels, "factor-split", {"h": t, "a": a, "b": b}
                )
    raise _Miss("no factor split reaches the sum")


def _doubling_parts(G):
    """Doubled graph with its 2-factorization, shared by the fold rules."""
    D = double_graph(G)
    tf = two_factorization(D.doubled)
    return D, tf.parts


def _fold_constant_parts(G, k, c, D, groups, divisor, rule, params):
    """Label edge groups of the doubled graph with constants and fold."""
    lab2: dict[int, int] = {}
    for edge_set, value in groups:
        for eid in edge_set:
            lab2[eid] = value
    step = TraceStep(rule, dict(params), labels=dict(lab2), scope="doubled")
    try:
        folded, got = fold(D, EdgeLabeling(k, lab2), divisor)
    except LabelingError as exc:
        raise _Miss(f"{rule}: {exc}") from None
    if got != _norm(c, k):
        raise _Miss(f"{rule}: folded sum {got}, wanted {_norm(c, k)}")
    return _accept(G, k, c, folded.labels, "fold", {"divisor": divisor}, extra_steps=[step])


def _rule_doubling_search(G, r, k, c, budget):
    """Parametric doubling: 2h-factor of the doubled graph labeled a, the
    complement b, folded with divisor 1 or 2.  Tries all (a, b) pairs."""
    D, parts = _doubling_parts(G)
    for h in range(1, r):
        H = frozenset().union(*parts[:h])
        rest = frozenset(range(D.doubled.m)) - H
        if k >= 2:
            cn = c % k
            for divisor in (1, 2):
                for a in range(1, k):
                    for b in range(1, k):
                        if divisor == 1:
                            if (2 * h * a + 2 * (r - h) * b) % k != cn:
                                continue
                        else:
                            if (a - b) % 2 != 0:
                                continue
                            if ((2 * h * a + 2 * (r - h) * b) // 2) % k != cn:
                                continue
                        try:
                            return _fold_constant_parts(
                                G, k, c, D, [(H, a), (rest, b)], divisor,
                                "doubling-parameter-search",
                                {"h": h, "a": a, "b": b, "divisor": divisor},
                            )
                        except _Skip:
                            continue
        else:
            for divisor in (1, 2):
                for b in (1, 2, -1, -2):
                    num = c * divisor - 2 * (r - h) * b
                    if num % (2 * h) != 0:
                        continue
                    a = num // (2 * h)
                    if a == 0 or a == -b:
                        continue
                    if divisor == 2 and (a - b) % 2 != 0:
                        continue
                    try:
                        return _fold_constant_parts(
                            G, k, c, D, [(H, a), (rest, b)], divisor,
                            "doubling-parameter-search",
                            {"h": h, "a": a, "b": b, "divisor": divisor},
                        )
                    except _Skip:
                        continue
    raise _Miss("no doubling parameters reach the sum")


def zero_sum_five_regular(G: MultiGraph, k: int) -> tuple[EdgeLabeling, ConstructionTrace]:
    """Zero-sum labeling of a 5-regular graph by the doubling construction.

    k != 8: the 2-factor of the doubled graph gets k-4, the 8-factor 1,
    folded with divisor 1.  k = 8: the 4-factor gets 2, the 6-factor 4,
    folded with divisor 2.  Requires k >= 5.
    """
    if regularity(G) != 5:
        raise RegularityError("needs a 5-regular graph")
    if k < 5:
        raise LabelingError(f"doubling construction needs k >= 5, got {k}")
    D, parts = _doubling_parts(G)
    if k != 8:
        H = parts[0]
        rest = frozenset().union(*parts[1:])
        groups = [(H, k - 4), (rest, 1)]
        divisor, case = 1, 1
    else:
        H = parts[0] | parts[1]
        rest = frozenset().union(*parts[2:])
        groups = [(H, 2), (rest, 4)]
        divisor, case = 2, 2
    try:
        lab, steps = _fold_constant_parts(
            G, k, 0, D, groups, divisor,
            "five-regular-doubling",
            {"case": case, "factor_label": groups[0][1], "rest_label": groups[1][1]},
        )
    except _Skip as exc:
        raise LabelingError(str(exc)) from None
    return lab, ConstructionTrace(tuple(steps))


def _rule_five_regular(G, r, k, c, budget):
    try:
        lab, trace = zero_sum_five_regular(G, k)
    except (LabelingError, FactorError, RegularityError) as exc:
        raise _Miss(f"five-regular doubling: {exc}") from None
    return lab, list(trace.steps)


def _sub21_main(G, r, k, target):
    """Odd degree, odd k, d = gcd(r, k) >= 3: 2-factor of the doubled
    graph labeled x, the rest (k+b)/2 with b = k/d, folded once."""
    b = k // gcd(r, k)
    x = (b + target) // 2 if (b + target) % 2 == 0 else (b + target + k) // 2
    x %= k
    y = ((k + b) // 2) % k
    if x == 0 or y == 0:
        raise _Miss(f"gcd-fold labels vanish (x={x}, y={y})")
    D, parts = _doubling_parts(G)
    H = parts[0]
    rest = frozenset().union(*parts[1:])
    return _fold_constant_parts(
        G, k, target, D, [(H, x), (rest, y)], 1,
        "odd-regular-gcd-fold", {"b": b, "x": x, "y": y},
    )


def _sub21_threeb(G, r, k):
    """k = 3b boundary: 4-factor split into two 2-factors labeled
    (b+1)/2 and (b-1)/2, the rest b; folds to a b-sum."""
    b = k // gcd(r, k)
    p, q = (b + 1) // 2, (b - 1) // 2
    if q == 0:
        raise _Miss("gcd-fold boundary needs b >= 3")
    D, parts = _doubling_parts(G)
    rest = frozenset().union(*parts[2:])
    return _fold_constant_parts(
        G, k, b % k, D, [(parts[0], p), (parts[1], q), (rest, b)], 1,
        "odd-regular-gcd-fold", {"b": b, "x": p, "y": q, "boundary": "k=3b"},
    )


def _rule_odd_gcd_fold(G, r, k, c, budget):
    """Odd r >= 3, odd k >= 5, gcd(r, k) >= 3, c != 0."""
    d = gcd(r, k)
    b = k // d
    cn = c % k
    if cn not in ((k - b) % k, (k - 2 * b) % k):
        return _sub21_main(G, r, k, cn)
    if k != 3 * b:
        lab, steps = _sub21_main(G, r, k, (k - cn) % k)
        flipped = {eid: k - v for eid, v in lab.labels.items()}
        return _accept(
            G, k, cn, flipped, "complement", {"source_sum": (k - cn) % k},
            extra_steps=steps,
        )
    lab, steps = _sub21_threeb(G, r, k)
    if cn == b % k:
        return lab, steps
    flipped = {eid: k - v for eid, v in lab.labels.items()}
    return _accept(
        G, k, cn, flipped, "complement", {"source_sum": b % k}, extra_steps=steps
    )


def _sub22_even_candidate(G, r, k, target, r0):
    w = (target - 2 * r0) % k
    for L in (w // 2, w // 2 + k // 2):
        L %= k
        if L == 0 or L == k - 1 or (2 * L) % k == 0:
            continue
        D, parts = _doubling_parts(G)
        H = parts[0]
        rest = frozenset().union(*parts[1:])
        try:
            return _fold_constant_parts(
                G, k, target, D, [(H, L), (rest, 1)], 1,
                "odd-regular-even-k-fold", {"L": L, "divisor": 1},
            )
        except _Skip:
            continue
    raise _Miss(f"no divisor-1 label for sum {target}")


def _rule_even_modulus_fold(G, r, k, c, budget):
    """Odd r >= 3, even k >= 6: 2-factor of the doubled graph against
    all-ones, folded with divisor 2 (odd c) or 1 (even c)."""
    cn = c % k
    r0 = (r - 1) % k
    if cn % 2 == 1:
        L = (cn - r0) % k
        D, parts = _doubling_parts(G)
        H = parts[0]
        rest = frozenset().union(*parts[1:])
        return _fold_constant_parts(
            G, k, cn, D, [(H, L), (rest, 1)], 2,
            "odd-regular-even-k-fold", {"L": L, "divisor": 2},
        )
    try:
        return _sub22_even_candidate(G, r, k, cn, r0)
    except _Skip:
        pass
    lab, steps = _sub22_even_candidate(G, r, k, (k - cn) % k, r0)
    flipped = {eid: k - v for eid, v in lab.labels.items()}
    return _accept(
        G, k, cn, flipped, "complement", {"source_sum": (k - cn) % k},
        extra_steps=steps,
    )


def _factor_extension(G, r, k, c, factor_edges, rule, budget):
    """Recurse on a spanning factor, then pad the rest with ones."""
    Hs, idmap = subgraph(G, sorted(factor_edges))
    h = regularity(Hs)
    if h is None or not 2 <= h <= r:
        raise _Miss(f"{rule}: factor is not usable")
    alpha = _norm(c - (r - h), k)
    sub = construct(Hs, k, alpha, budget)
    if sub.status != "found":
        raise _Miss(f"{rule}: inner sum {alpha} not constructed ({sub.status})")
    inner_steps = [
        TraceStep(s.rule, s.params, s.labels, scope="factor") for s in sub.trace.steps
    ]
    lab_H = {idmap[j]: v for j, v in sub.labeling.labels.items()}
    try:
        out, got = extend_by_factor(G, factor_edges, lab_H, k)
    except LabelingError as exc:
        raise _Miss(f"{rule}: {exc}") from None
    if got != _norm(c, k):
        raise _Miss(f"{rule}: extension sum {got}, wanted {_norm(c, k)}")
    return _accept(
        G, k, c, out.labels, rule, {"h": h, "inner_sum": alpha}, extra_steps=inner_steps
    )


def _four_regular_even_order(G, k, c, budget):
    """4-regular, even order, k >= 5: the doubled-graph 3-factor route
    with labels 2c and k-c, plus the half-modulus specials."""
    cn = c % k
    if (2 * cn) % k != 0 and (4 * cn) % k != 0:
        D = double_graph(G)
        F3 = f_factor(D.doubled, 3)
        if F3 is not None:
            rest = frozenset(range(D.doubled.m)) - F3
            a, b = (2 * cn) % k, (k - cn) % k
            return _fold_constant_parts(
                G, k, cn, D, [(F3, a), (rest, b)], 1,
                "four-regular-three-factor-fold", {"a": a, "b": b},
            )
        raise _Miss("doubled graph has no 3-factor")
    if k % 2 == 0 and cn == k // 2:
        dd = k // 2
        parts = two_factorization(G).parts
        if dd % 2 == 0:
            labels = {}
            for eid in parts[0]:
                labels[eid] = dd
            for eid in parts[1]:
                labels[eid] = dd // 2
            return _accept(
                G, k, cn, labels, "four-regular-half-modulus", {"labels": [dd, dd // 2]}
            )
        D = double_graph(G)
        F3 = f_factor(D.doubled, 3)
        if F3 is None:
            raise _Miss("doubled graph has no 3-factor")
        rest = frozenset(range(D.doubled.m)) - F3
        if dd not in (3, 9):
            base, steps = _fold_constant_parts(
                G, k, (k - 1) % k, D, [(F3, k - 2), (rest, 1)], 1,
                "four-regular-half-modulus", {"part": "fold", "labels": [k - 2, 1]},
            )
            combined = {}
            for eid in range(G.m):
                add = dd + 1 if eid in parts[0] else (dd - 1) // 2
                combined[eid] = (base.labels[eid] + add) % k
            return _accept(
                G, k, cn, combined, "four-regular-half-modulus",
                {"added": [dd + 1, (dd - 1) // 2]}, extra_steps=steps,
            )
        x = dd // 3
        base, steps = _fold_constant_parts(
            G, k, (6 * x + 5) % k, D, [(F3, 2 * x), (rest, 1)], 1,
            "four-regular-half-modulus", {"part": "fold", "labels": [2 * x, 1]},
        )
        combined = {eid: (v + 1) % k for eid, v in base.labels.items()}
        return _accept(
            G, k, cn, combined, "four-regular-half-modulus", {"added": 1},
            extra_steps=steps,
        )
    raise _Miss("no 4-regular special applies")


def _rule_even_regular(G, r, k, c, budget):
    """Even r >= 4, k >= 5, even order: explicit 4-regular sub-cases or
    factor-extension recursion per the half-degree's parity."""
    if G.n % 2 != 0:
        raise _NotApplicable("even-degree specials need even order")
    rho = r // 2
    if rho == 2:
        return _four_regular_even_order(G, k, c, budget)
    if rho % 2 == 1:
        F = f_factor(G, rho)
        if F is None:
            raise _Miss(f"no {rho}-factor for the extension")
        return _factor_extension(G, r, k, c, F, "odd-half-factor-extension", budget)
    parts = two_factorization(G).parts
    F = frozenset().union(*parts[:3])
    return _factor_extension(G, r, k, c, F, "six-factor-extension", budget)


def _rule_mod3_factor(G, r, k, c, budget):
    """k = 3, r = 3 mod 6: factor with degrees 1 mod 3 labeled 2 against
    ones gives the 1-sum; its complement the 2-sum."""
    H = mod3_factor(G)
    if H is None:
        raise _Miss("no mod-3 factor")
    cn = c % 3
    labels = {e: 2 if e in H else 1 for e in range(G.m)}
    if cn == 1:
        return _accept(G, 3, cn, labels, "mod3-factor", {"factor_label": 2})
    flipped = {e: 3 - v for e, v in labels.items()}
    return _accept(
        G, 3, cn, flipped, "mod3-factor", {"factor_label": 1, "complemented": True}
    )


def _rule_four_factor_extension(G, r, k, c, budget):
    """k = 3, r = 0 mod 6: recurse on a 4-factor, pad with ones."""
    parts = two_factorization(G).parts
    F = parts[0] | parts[1]
    return _factor_extension(G, r, k, c, F, "four-factor-extension", budget)


# ---------------------------------------------------------------------------
# dispatcher


def _solver_result(G, k, c, budget, pre_steps):
    if k == 1:
        steps = pre_steps + [
            TraceStep("undecided", {"reason": "no exhaustive search over the integers"})
        ]
        return ConstructResult("undecided", None, None, ConstructionTrace(tuple(steps)))
    res = search_labeling(G, k, c, budget)
    if res.status == "found":
        steps = pre_steps + [
            TraceStep("solver", {"nodes": res.nodes}, labels=dict(res.labeling.labels))
        ]
        return ConstructResult(
            "found", res.labeling, c % k, ConstructionTrace(tuple(steps))
        )
    if res.status == "absent":
        steps = pre_steps + [TraceStep("solver-exhausted", {"nodes": res.nodes})]
        return ConstructResult("absent", None, None, ConstructionTrace(tuple(steps)))
    steps = pre_steps + [TraceStep("solver-budget-exceeded", {"nodes": res.nodes})]
    return ConstructResult("undecided", None, None, ConstructionTrace(tuple(steps)))


def _rule_sequence(G, r, k, c):
    """Dispatch order; first entry to succeed wins."""
    cn = _norm(c, k)
    if r == 1:
        return [("constant", _rule_constant)]
    if r == 2:
        return [("cycle-rule", _rule_cycles)]
    rules: list[tuple[str, object]] = [("constant", _rule_constant)]
    if cn == 0:
        if r % 2 == 0:
            rules.append(("two-factor-constants", _rule_two_factor_constants))
        else:
            if r == 5 and k >= 5:
                rules.append(("five-regular-doubling", _rule_five_regular))
            if k not in (2, 4):
                rules.append(("doubling-parameter-search", _rule_doubling_search))
    elif r % 2 == 1:
        if k >= 5 and k % 2 == 1 and gcd(r, k) >= 3:
            rules.append(("odd-regular-gcd-fold", _rule_odd_gcd_fold))
        if k >= 5 and k % 2 == 0:
            rules.append(("odd-regular-even-k-fold", _rule_even_modulus_fold))
        if k == 3 and r % 6 == 3:
            rules.append(("mod3-factor", _rule_mod3_factor))
        rules.append(("factor-split", _rule_factor_split))
        if k != 2:
            rules.append(("doubling-parameter-search", _rule_doubling_search))
    else:
        if k >= 5:
            rules.append(("even-regular-specials", _rule_even_regular))
        if k == 3 and r % 6 == 0:
            rules.append(("four-factor-extension", _rule_four_factor_extension))
        rules.append(("two-factor-constants", _rule_two_factor_constants))
        rules.append(("two-factor-cycle-remainder", _rule_two_factor_cycle_remainder))
        rules.append(("factor-split", _rule_factor_split))
        if k != 2:
            rules.append(("doubling-parameter-search", _rule_doubling_search))
    return rules


def construct(
    G: MultiGraph, k: int, c: int, budget: SolverBudget | None = None
) -> ConstructResult:
    """Build a c-sum k-magic labeling of a regular graph, or explain why not.

    Returns found (labeling, verified sum, trace), absent (trace cites
    the excluding rule or the exhausted search), or undecided (budget).
    """
    if k < 1:
        raise KmagicError(f"modulus must be >= 1, got {k}")
    r = regularity(G)
    if r is None or r < 1:
        raise RegularityError(f"construction needs a regular graph with r >= 1, got r={r}")
    cn = _norm(c, k)
    spec = predict_spectrum(G, k, budget)
    member = spec.contains(cn)
    if member is False:
        step = TraceStep(
            "spectrum-excluded", {"c": cn, "k": k, "why": list(spec.provenance)}
        )
        return ConstructResult("absent", None, None, ConstructionTrace((step,)))
    pre: list[TraceStep] = []
    if member is None:
        pre.append(TraceStep("spectrum-undecided", {"c": cn, "k": k}))
        return _solver_result(G, k, cn, budget, pre)
    for name, fn in _rule_sequence(G, r, k, cn):
        try:
            lab, steps = fn(G, r, k, cn, budget)
        except _NotApplicable:
            continue
        except (_Miss, FactorError) as exc:
            pre.append(TraceStep("fallthrough", {"rule": name, "reason": str(exc)}))
            continue
        return ConstructResult(
            "found", lab, cn, ConstructionTrace(tuple(pre + steps))
        )
    return _solver_result(G, k, cn, budget, pre)
