import cmath
import random

import pytest

from logcone import intlinalg as il
from logcone.cone import (
    ObstructionInput,
    eliminate_unit_entries,
    gluing_equations,
    obstruction_test,
    sigma_cone,
    toric_ideal_generators,
)
from logcone.corpus import corpus_load
from logcone.lattice import build_rho, component_count, lattice_summary
from logcone.tropical import tropical_feasibility

from helpers import random_reorientation, random_witness_graph


def test_sigma_toricex_single_ray():
    cone = sigma_cone(corpus_load("toricex").graph)
    assert cone.extreme_rays == ((1, 1, 2, 2),)
    assert cone.is_strictly_convex
    assert cone.is_top_dimensional_in_kernel


def test_sigma_d1rd22pt_four_rays_with_relation():
    cone = sigma_cone(corpus_load("d1rd22pt").graph)
    rays = sorted(cone.extreme_rays)
    assert len(rays) == 4
    expected = sorted(
        [
            (0, 0, 1, 1, 0, 0, 1),  # lengths on e3,e4 and position on v3
            (1, 0, 0, 1, 1, 0, 1),
            (0, 1, 1, 0, 0, 1, 1),
            (1, 1, 0, 0, 1, 1, 1),
        ]
    )
    assert rays == expected
    # the single relation: the two diagonal pairs sum to the same vector
    short = (0, 0, 1, 1, 0, 0, 1)
    long = (1, 1, 0, 0, 1, 1, 1)
    mid1 = (1, 0, 0, 1, 1, 0, 1)
    mid2 = (0, 1, 1, 0, 0, 1, 1)
    assert [a + b for a, b in zip(short, long)] == [a + b for a, b in zip(mid1, mid2)]


def test_sigma_trivial_graph():
    from logcone.graph import DecoratedDualGraph, VertexData

    g = DecoratedDualGraph((), (VertexData("v", 0, "t", frozenset()),), (), ())
    cone = sigma_cone(g)
    assert cone.kernel_dim == 0
    assert cone.extreme_rays == ()
    assert cone.is_strictly_convex
    assert cone.is_top_dimensional_in_kernel


def test_rays_lie_in_kernel_and_orthant():
    rng = random.Random(41)
    for _ in range(30):
        g = random_witness_graph(rng, legs=False)
        cone = sigma_cone(g)
        _, _, rho = build_rho(g)
        for ray in cone.extreme_rays:
            assert all(x >= 0 for x in ray)
            assert all(v == 0 for v in il.mat_vec(rho, list(ray)))
            assert il.primitive(list(ray)) == list(ray)


def test_convexity_on_feasible_graphs():
    rng = random.Random(42)
    for _ in range(40):
        g = random_witness_graph(rng, legs=False)
        assert tropical_feasibility(g) is not None
        cone = sigma_cone(g)
        assert cone.is_strictly_convex
        assert cone.is_top_dimensional_in_kernel


def test_ray_canonical_order_invariant_under_reorientation():
    rng = random.Random(43)
    for _ in range(25):
        g = random_witness_graph(rng, legs=False)
        assert sigma_cone(g).extreme_rays == sigma_cone(random_reorientation(g, rng)).extreme_rays


def test_gluing_toricex():
    system = gluing_equations(corpus_load("toricex").graph)
    assert sorted(system.rendered()) == [
        "eps_e1^2 = t_v1_1",
        "eps_e1^2 = t_v2_2",
        "eps_e2^2 = t_v1_1",
        "eps_e2^2 = t_v2_2",
    ]


def test_gluing_d1rd22pt_unit_relations():
    g = corpus_load("d1rd22pt").graph
    system = gluing_equations(g)
    assert sorted(system.rendered()) == [
        "eps_e1 = t_v1_1",
        "eps_e2 = t_v2_1",
        "eps_e3 * t_v1_1 = t_v3_1",
        "eps_e4 * t_v2_1 = t_v3_1",
    ]


def test_gluing_empty_for_classical_graph():
    from logcone.graph import DecoratedDualGraph, EdgeData, VertexData

    g = DecoratedDualGraph(
        ("1",),
        (VertexData("a", 0, "t", frozenset()), VertexData("b", 0, "t", frozenset())),
        (EdgeData("e", "a", "b", frozenset(), (0,)),),
        (),
    )
    assert gluing_equations(g).exponents == ()


def test_gluing_exponents_span_image_dual_with_index_component_count():
    rng = random.Random(44)
    for _ in range(30):
        g = random_witness_graph(rng, legs=False)
        glue = [list(m) for m in gluing_equations(g).exponents]
        ideal = [list(m) for m in toric_ideal_generators(g).exponents]
        image_dual = il.hermite_row_basis([row[:] for row in lattice_summary(g).rho])
        if glue:
            assert il.hermite_row_basis(glue) == image_dual
        else:
            assert image_dual == []
        if ideal and image_dual:
            assert il.lattice_index(image_dual, il.hermite_row_basis(ideal)) == component_count(g)


def test_ideal_orthogonal_to_rays():
    rng = random.Random(45)
    for _ in range(25):
        g = random_witness_graph(rng, legs=False)
        system = toric_ideal_generators(g)
        cone = sigma_cone(g)
        for m in system.exponents:
            for r in cone.extreme_rays:
                assert sum(a * b for a, b in zip(m, r)) == 0


def test_ideal_vanishes_on_parametrization():
    rng = random.Random(46)
    for _ in range(10):
        g = random_witness_graph(rng, max_vertices=4, max_edges=4, legs=False)
        summary = lattice_summary(g)
        kernel = [list(r) for r in summary.kernel_basis]
        system = toric_ideal_generators(g)
        for _ in range(50):
            coeffs = [rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1) for _ in kernel]
            point = [
                cmath.exp(sum(c * k[j] for c, k in zip(coeffs, kernel)))
                for j in range(len(summary.domain))
            ]
            for m in system.exponents:
                plus = 1 + 0j
                minus = 1 + 0j
                for x, e in zip(point, m):
                    if e > 0:
                        plus *= x**e
                    elif e < 0:
                        minus *= x ** (-e)
                assert abs(plus - minus) < 1e-8 * max(1.0, abs(plus))


def test_eliminate_unit_entries_d1rd22pt():
    system = toric_ideal_generators(corpus_load("d1rd22pt").graph)
    reduced, labels = eliminate_unit_entries(system)
    assert len(reduced) == 1
    assert sorted(abs(x) for x in reduced[0]) == [1, 1, 1, 1]
    # the surviving relation pairs the four gluing parameters two against two
    vec = reduced[0]
    assert sum(vec) == 0
    assert all(lab[0] == "edge" for lab in labels)


def test_obstruction_all_ones_identity():
    g = corpus_load("toricex").graph
    eta = ObstructionInput({(e.id, lab): 1.0 for e in g.edges for lab in e.depth})
    verdict = obstruction_test(g, eta)
    assert verdict.is_identity


def test_obstruction_exponential_image_is_identity():
    rng = random.Random(47)
    for _ in range(20):
        g = random_witness_graph(rng, legs=False)
        _, tgt, rho = build_rho(g)
        xi = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(len(rho[0]) if rho else 0)]
        values = {}
        for i, lab in enumerate(tgt.labels):
            acc = sum(rho[i][j] * xi[j] for j in range(len(xi)))
            values[(lab[1], lab[2])] = cmath.exp(acc)
        verdict = obstruction_test(g, ObstructionInput(values))
        assert verdict.is_identity, verdict.violations


def test_obstruction_detects_perturbation():
    g = corpus_load("toricex").graph
    _, tgt, rho = build_rho(g)
    characters = il.left_kernel_basis(rho)
    assert characters
    target_idx = next(
        i for m in characters for i, x in enumerate(m) if x != 0
    )
    eta = {(lab[1], lab[2]): 1.0 for lab in tgt.labels}
    key = (tgt.labels[target_idx][1], tgt.labels[target_idx][2])
    eta[key] = 1.01
    verdict = obstruction_test(g, ObstructionInput(eta))
    assert not verdict.is_identity
    assert verdict.violations


def test_obstruction_invariant_under_image_torus_action():
    rng = random.Random(48)
    g = corpus_load("toricex").graph
    _, tgt, rho = build_rho(g)
    base = {(lab[1], lab[2]): 1.01 if i == 0 else 1.0 for i, lab in enumerate(tgt.labels)}
    before = obstruction_test(g, ObstructionInput(base)).is_identity
    xi = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(len(rho[0]))]
    shifted = {}
    for i, lab in enumerate(tgt.labels):
        acc = sum(rho[i][j] * xi[j] for j in range(len(xi)))
        shifted[(lab[1], lab[2])] = base[(lab[1], lab[2])] * cmath.exp(acc)
    after = obstruction_test(g, ObstructionInput(shifted)).is_identity
    assert before == after


def test_obstruction_rejects_bad_input():
    g = corpus_load("toricex").graph
    eta = {(e.id, lab): 1.0 for e in g.edges for lab in e.depth}
    with pytest.raises(ValueError):
        obstruction_test(g, ObstructionInput(dict(eta)), tol=0.0)
    zeroed = dict(eta)
    zeroed[("e1", "1")] = 0.0
    with pytest.raises(ValueError):
        obstruction_test(g, ObstructionInput(zeroed))
    missing = dict(eta)
    del missing[("e1", "1")]
    with pytest.raises(ValueError):
        obstruction_test(g, ObstructionInput(missing))
