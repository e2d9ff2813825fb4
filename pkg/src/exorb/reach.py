"""Per-orbit analyses: reachability, strong reachability, graded generation.

For each orbit this computes the centralizer g_e, its derived subalgebra,
whether the representative lies in the derived subalgebra (reachable),
whether the two coincide (strongly reachable), whether g(1)_e generates the
nonnegative-weight part g(>=1)_e, and the dimension and h-weights of the
quotient g_e/[g_e, g_e].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .algebra import (
    LieAlgebra,
    Subspace,
    centralizer,
    derived_subalgebra,
    quotient_with_action,
    subalgebra_closure,
)
from .orbits import NilpotentOrbit, WeightedDynkinDiagram, enumerate_orbits

__all__ = [
    "OrbitAnalysis",
    "analyze",
    "reachable_table",
    "rigid_discrepancy_report",
]


@dataclass(frozen=True)
class OrbitAnalysis:
    """Everything the per-orbit report needs, computed exactly."""

    orbit: NilpotentOrbit
    dim_ge: int
    dim_derived: int
    reachable: bool
    strongly_reachable: bool
    panyushev_generated: bool
    dim_ce: int
    ce_weights: tuple[int, ...]


def _graded_rows(L: LieAlgebra, space: Subspace, labels: tuple[int, ...]):
    """Split a subspace with weight-homogeneous basis rows by weight."""
    weights = L.basis_weights(labels)
    out: dict[int, list] = {}
    for row in space.basis.data:
        ws = {weights[i] for i, c in enumerate(row) if c}
        if len(ws) != 1:
            raise ValueError("basis row mixes weights")
        out.setdefault(ws.pop(), []).append(row)
    return out


def _analyze_full(
    L: LieAlgebra, o: NilpotentOrbit
) -> tuple[OrbitAnalysis, Subspace, Subspace]:
    e, h = o.triple.e, o.triple.h
    ge = centralizer(L, e)
    derived = derived_subalgebra(L, ge)
    reachable = derived.contains(e)
    strongly = derived.dim == ge.dim

    rows_by_weight = _graded_rows(L, ge, o.diagram.labels)
    upper_rows = [r for w, rows in rows_by_weight.items() if w >= 1 for r in rows]
    upper = Subspace.from_rows(L, upper_rows) if upper_rows else Subspace.zero(L)
    if 1 in rows_by_weight:
        gens = Subspace.from_rows(L, rows_by_weight[1]).basis_elements()
    else:
        gens = []
    closure = subalgebra_closure(L, gens, within=upper)
    panyushev = closure.dim == upper.dim

    dim_ce, weights = quotient_with_action(L, ge, derived, h)
    analysis = OrbitAnalysis(
        orbit=o,
        dim_ge=ge.dim,
        dim_derived=derived.dim,
        reachable=reachable,
        strongly_reachable=strongly,
        panyushev_generated=panyushev,
        dim_ce=dim_ce,
        ce_weights=weights,
    )
    return analysis, ge, derived


def analyze(L: LieAlgebra, o: NilpotentOrbit) -> OrbitAnalysis:
    """Full exact report for one orbit."""
    return _analyze_full(L, o)[0]


def reachable_table(
    L: LieAlgebra, seed: int = 1
) -> list[tuple[WeightedDynkinDiagram, bool, bool]]:
    """(diagram, reachable, strongly_reachable) for the reachable orbits only."""
    out = []
    for o in enumerate_orbits(L, seed=seed):
        a = analyze(L, o)
        if a.reachable:
            out.append((o.diagram, a.reachable, a.strongly_reachable))
    return out


def rigid_discrepancy_report(
    L: LieAlgebra,
    rigid_flags: Mapping[tuple[int, ...], bool],
    seed: int = 1,
) -> list[tuple[WeightedDynkinDiagram, int, int]]:
    """Rigid orbits that are not strongly reachable, with their dimension pairs.

    For each reported orbit the derived subalgebra has codimension exactly 1
    in g_e and the representative spans the quotient; both facts are checked
    here and violations raise.
    """
    out = []
    for o in enumerate_orbits(L, seed=seed):
        if o.diagram.labels not in rigid_flags:
            raise ValueError(f"missing rigid flag for diagram {o.diagram}")
        if not rigid_flags[o.diagram.labels]:
            continue
        a, ge, derived = _analyze_full(L, o)
        if a.strongly_reachable:
            continue
        if a.dim_ge - a.dim_derived != 1:
            raise ValueError(f"codimension is not 1 for diagram {o.diagram}")
        spanned = Subspace.from_rows(
            L, list(derived.basis.data) + [o.triple.e.coeffs]
        )
        if spanned.dim != ge.dim or not ge.contains(o.triple.e):
            raise ValueError(
                f"representative does not span the quotient for {o.diagram}"
            )
        out.append((o.diagram, a.dim_ge, a.dim_derived))
    return out
