"""Existence of tropical position/length data for a decorated dual graph.

A graph is tropically feasible when there are vertex positions s_v (strictly
positive exactly on the depth coordinates) and edge lengths lambda_e > 0
with s_head - s_tail = lambda_e * s_e for every edge.  The decision is an
exact rational LP: maximize t subject to those equalities and s >= t,
lambda >= t, t <= 1.  The constraint system is homogeneous, so the optimum
is either 0 (infeasible, with a dual certificate) or 1 (feasible).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .graph import DecoratedDualGraph, StructuralError
from .simplex import solve_lp


@dataclass(frozen=True)
class TropicalWitness:
    """Certificate for feasibility: sparse vertex positions and edge lengths."""

    s: dict[tuple[str, str], Fraction]  # (vertex id, divisor label) -> value, zero entries omitted
    lam: dict[str, Fraction]  # edge id -> positive length

    def s_vector(self, graph: DecoratedDualGraph, vid: str) -> list[Fraction]:
        return [self.s.get((vid, label), Fraction(0)) for label in graph.divisors]


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Dual multipliers proving the feasibility LP is capped at t* = 0."""

    equality_duals: tuple[Fraction, ...]
    inequality_duals: tuple[Fraction, ...]


def _lp_data(graph: DecoratedDualGraph):
    svars = []
    for v in sorted(graph.vertices, key=lambda v: v.id):
        for label in sorted(v.depth, key=graph.divisors.index):
            svars.append((v.id, label))
    lvars = [e.id for e in sorted(graph.edges, key=lambda e: e.id)]
    index = {("s", *sv): i for i, sv in enumerate(svars)}
    index.update({("lam", eid): len(svars) + i for i, eid in enumerate(lvars)})
    t_col = len(svars) + len(lvars)
    return svars, lvars, index, t_col


def tropical_feasibility(graph: DecoratedDualGraph):
    """Return a TropicalWitness, or None with a certificate attached.

    The return value of the infeasible case is None; call
    :func:`tropical_certificate` for the dual proof.
    """
    witness, _ = _decide(graph)
    return witness


def tropical_certificate(graph: DecoratedDualGraph) -> InfeasibilityCertificate | None:
    """Dual certificate of infeasibility, or None when feasible."""
    _, cert = _decide(graph)
    return cert


def _decide(graph: DecoratedDualGraph):
    svars, lvars, index, t_col = _lp_data(graph)
    ncols = t_col + 1
    a_eq, b_eq = [], []
    for e in sorted(graph.edges, key=lambda e: e.id):
        head = graph.vertex(e.v2)
        tail = graph.vertex(e.v1)
        for label, se in zip(graph.divisors, e.contact):
            row = [0] * ncols
            if label in head.depth:
                row[index[("s", e.v2, label)]] += 1
            if label in tail.depth:
                row[index[("s", e.v1, label)]] -= 1
            row[index[("lam", e.id)]] -= se
            if any(row):
                a_eq.append(row)
                b_eq.append(0)
    a_ub, b_ub = [], []
    for key, col in sorted(index.items(), key=lambda kv: kv[1]):
        row = [0] * ncols
        row[t_col] = 1
        row[col] = -1
        a_ub.append(row)
        b_ub.append(0)
    cap = [0] * ncols
    cap[t_col] = 1
    a_ub.append(cap)
    b_ub.append(1)

    c = [0] * ncols
    c[t_col] = 1
    result = solve_lp(c, a_eq, b_eq, a_ub, b_ub, maximize=True)
    assert result.status == "optimal"  # t = 0 with everything zero is always feasible
    if result.value > 0:
        s = {}
        for sv in svars:
            val = result.x[index[("s", *sv)]]
            if val:
                s[sv] = val
        lam = {}
        for e in graph.edges:
            if any(e.contact):
                lam[e.id] = result.x[index[("lam", e.id)]]
            else:
                lam[e.id] = Fraction(1)  # unconstrained length, normalized
        return TropicalWitness(s, lam), None
    n_eq = len(a_eq)
    cert = InfeasibilityCertificate(
        tuple(result.duals[:n_eq]), tuple(result.duals[n_eq:])
    )
    return None, cert


def verify_witness(graph: DecoratedDualGraph, witness: TropicalWitness):
    """Exact check of a witness; returns (ok, list of violated constraints)."""
    violations = []
    vertex_ids = {v.id for v in graph.vertices}
    for (vid, label) in witness.s:
        if vid not in vertex_ids or label not in graph.divisors:
            raise StructuralError(f"witness position indexed by unknown ({vid!r}, {label!r})")
    edge_ids = {e.id for e in graph.edges}
    for eid in witness.lam:
        if eid not in edge_ids:
            raise StructuralError(f"witness length indexed by unknown edge {eid!r}")

    for v in graph.vertices:
        for label in graph.divisors:
            val = witness.s.get((v.id, label), Fraction(0))
            if label in v.depth and val <= 0:
                violations.append(f"s[{v.id},{label}] = {val} is not positive on the depth set")
            if label not in v.depth and val != 0:
                violations.append(f"s[{v.id},{label}] = {val} must vanish outside the depth set")
    for e in graph.edges:
        lam = witness.lam.get(e.id)
        if lam is None:
            violations.append(f"no length for edge {e.id}")
            continue
        if lam <= 0:
            violations.append(f"lambda[{e.id}] = {lam} is not positive")
            continue
        head = witness.s_vector(graph, e.v2)
        tail = witness.s_vector(graph, e.v1)
        for label, h, t, se in zip(graph.divisors, head, tail, e.contact):
            if h - t != lam * se:
                violations.append(
                    f"edge {e.id}, coordinate {label}: {h} - {t} != {lam} * {se}"
                )
    return (not violations), violations


def integralize_witness(witness: TropicalWitness) -> TropicalWitness:
    """Scale a witness by the lcm of all denominators; still a witness."""
    values = list(witness.s.values()) + list(witness.lam.values())
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return TropicalWitness(
        {k: v * scale for k, v in witness.s.items()},
        {k: v * scale for k, v in witness.lam.items()},
    )
