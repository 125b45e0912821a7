"""Consolidated analysis report for a single graph file.

The report is a pure function of the input bytes plus flags: every list is
canonically ordered and the input hash is embedded, so reruns are
byte-identical and diffable.
"""

from __future__ import annotations

import hashlib

from . import __version__
from .cone import DEFAULT_TOL, gluing_equations, sigma_cone, toric_ideal_generators
from .dims import expected_dim_stratum
from .graph import DecoratedDualGraph, GeometryContext, arithmetic_genus, validate_graph
from .lattice import component_count, lattice_summary
from .serialize import SCHEMA_TAG, rational_to_str, witness_to_dict
from .tropical import tropical_certificate, tropical_feasibility


def _label_str(label: tuple) -> str:
    return ":".join(str(p) for p in label)


def validation_to_dict(report) -> dict:
    return {
        "valid": report.valid,
        "violations": [{"code": v.code, "message": v.message} for v in report.violations],
        "warnings": list(report.warnings),
        "tropical_feasible": report.tropical_feasible,
    }


def lattice_to_dict(summary) -> dict:
    return {
        "domain": [_label_str(lab) for lab in summary.domain.labels],
        "target": [_label_str(lab) for lab in summary.target.labels],
        "rho": [list(row) for row in summary.rho],
        "kernel_basis": [list(row) for row in summary.kernel_basis],
        "kernel_dim": len(summary.kernel_basis),
        "image_rank": summary.image_rank,
        "cokernel_free_rank": summary.cokernel_free_rank,
        "cokernel_torsion": list(summary.cokernel_torsion),
        "obstruction_dim": summary.obstruction_dim,
    }


def tropical_to_dict(graph: DecoratedDualGraph) -> dict:
    witness = tropical_feasibility(graph)
    if witness is not None:
        return {"feasible": True, "witness": witness_to_dict(witness)}
    cert = tropical_certificate(graph)
    return {
        "feasible": False,
        "certificate": {
            "equality_duals": [rational_to_str(d) for d in cert.equality_duals],
            "inequality_duals": [rational_to_str(d) for d in cert.inequality_duals],
        },
    }


def cone_to_dict(cone) -> dict:
    return {
        "ambient_dim": cone.ambient_dim,
        "kernel_dim": cone.kernel_dim,
        "extreme_rays": [list(r) for r in cone.extreme_rays],
        "is_strictly_convex": cone.is_strictly_convex,
        "is_top_dimensional_in_kernel": cone.is_top_dimensional_in_kernel,
    }


def binomials_to_dict(system) -> dict:
    return {
        "variables": system.variable_names(),
        "exponents": [list(m) for m in system.exponents],
        "equations": system.rendered(),
    }


def dims_to_dict(report) -> dict:
    return {
        "main_dim": report.main_dim,
        "stratum_dim": report.stratum_dim,
        "prelog_dim": report.prelog_dim,
        "kernel_dim": report.kernel_dim,
        "obstruction_dim": report.obstruction_dim,
        "codim": report.codim,
        "genus": report.genus,
        "marked_points": report.marked_points,
        "c1_total": report.c1_total,
        "inter_total": dict(sorted(report.inter_total.items())),
    }


def build_report(
    graph: DecoratedDualGraph,
    raw_bytes: bytes,
    ctx: GeometryContext | None = None,
    tol: float = DEFAULT_TOL,
) -> dict:
    validation = validate_graph(graph, ctx)
    out = {
        "schema": SCHEMA_TAG,
        "provenance": {
            "input_sha256": hashlib.sha256(raw_bytes).hexdigest(),
            "library_version": __version__,
        },
        "validation": validation_to_dict(validation),
    }
    if validation.violations:
        return out
    summary = lattice_summary(graph)
    out["genus"] = arithmetic_genus(graph)
    out["lattice"] = lattice_to_dict(summary)
    out["component_count"] = component_count(graph)
    out["tropical"] = tropical_to_dict(graph)
    out["cone"] = cone_to_dict(sigma_cone(graph))
    out["gluing"] = binomials_to_dict(gluing_equations(graph))
    out["toric_ideal"] = binomials_to_dict(toric_ideal_generators(graph))
    if ctx is not None:
        out["dims"] = dims_to_dict(expected_dim_stratum(graph, ctx))
    return out
