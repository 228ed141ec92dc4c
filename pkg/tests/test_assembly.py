import numpy as np
import pytest

from diffkde import (
    BcKind,
    SymTridiagonal,
    assemble_mass,
    assemble_stiffness,
    build_bc_operator,
    build_mesh,
)

from _oracles import operator_dense, tridiag_dense


def test_mass_two_elements():
    mass = assemble_mass(build_mesh(0, 1, 2))
    np.testing.assert_allclose(mass.diag, [1 / 6, 1 / 3, 1 / 6])
    np.testing.assert_allclose(mass.off, [1 / 12, 1 / 12])


@pytest.mark.parametrize("a,b,m", [(0, 1, 2), (0, 10, 5000), (-2.5, 3.5, 17)])
def test_mass_entries_sum_to_domain_length(a, b, m):
    mass = assemble_mass(build_mesh(a, b, m))
    total = mass.diag.sum() + 2 * mass.off.sum()
    np.testing.assert_allclose(total, b - a, rtol=1e-13)


def test_mass_interior_column_sums_are_h():
    mesh = build_mesh(0, 10, 5000)
    mass = assemble_mass(mesh)
    dense = tridiag_dense(mass)
    cols = dense.sum(axis=0)
    np.testing.assert_allclose(cols[1:-1], mesh.h, rtol=1e-14)
    np.testing.assert_allclose(cols[[0, -1]], mesh.h / 2, rtol=1e-14)


def test_stiffness_two_elements():
    k = assemble_stiffness(build_mesh(0, 1, 2))
    np.testing.assert_allclose(k.diag, [2.0, 4.0, 2.0])
    np.testing.assert_allclose(k.off, [-2.0, -2.0])


@pytest.mark.parametrize("m", [1, 2, 4, 64, 5000])
def test_stiffness_annihilates_constants(m):
    mesh = build_mesh(0, 10, m)
    k = assemble_stiffness(mesh)
    residual = k.matvec(np.ones(mesh.n_nodes))
    assert np.max(np.abs(residual)) <= 1e-12 * np.max(np.abs(k.diag))


def test_stiffness_maps_coordinates_to_boundary_difference():
    # Interior rows telescope to zero; boundary rows give -1 and +1.
    mesh = build_mesh(0, 1, 4)
    k = assemble_stiffness(mesh)
    expected = tridiag_dense(k) @ mesh.nodes
    w = np.zeros(5)
    w[0], w[-1] = -1.0, 1.0
    np.testing.assert_allclose(expected, w, atol=1e-14)
    np.testing.assert_allclose(k.matvec(mesh.nodes.copy()), w, atol=1e-14)


def test_neumann_operator_is_plain_stiffness():
    mesh = build_mesh(0, 10, 5000)
    k = assemble_stiffness(mesh)
    op = build_bc_operator(k, mesh, BcKind.NEUMANN)
    assert op.correction_vector is None
    res = op.apply(np.ones(mesh.n_nodes))
    assert np.max(np.abs(res)) <= 1e-12 * np.max(np.abs(k.diag))


def test_conserving_operator_annihilates_coordinates():
    mesh = build_mesh(0, 1, 4)
    op = build_bc_operator(assemble_stiffness(mesh), mesh, BcKind.MEAN_CONSERVING)
    oracle = operator_dense(op) @ mesh.nodes
    np.testing.assert_allclose(oracle, 0.0, atol=1e-13)
    np.testing.assert_allclose(op.apply(mesh.nodes.copy()), 0.0, atol=1e-13)


@pytest.mark.parametrize("m", [1, 2, 4, 64, 5000])
def test_conserving_operator_annihilates_constants(m):
    mesh = build_mesh(0, 10, m)
    op = build_bc_operator(assemble_stiffness(mesh), mesh, BcKind.MEAN_CONSERVING)
    res = op.apply(np.ones(mesh.n_nodes))
    assert np.max(np.abs(res)) <= 1e-10


def test_apply_neumann_constant_vector():
    mesh = build_mesh(0, 1, 2)
    op = build_bc_operator(assemble_stiffness(mesh), mesh, BcKind.NEUMANN)
    np.testing.assert_allclose(op.apply(np.array([1.0, 1.0, 1.0])), 0.0, atol=1e-14)


def test_apply_conserving_two_element_cases():
    mesh = build_mesh(0, 1, 2)
    op = build_bc_operator(assemble_stiffness(mesh), mesh, BcKind.MEAN_CONSERVING)
    dense = operator_dense(op)

    coords = np.array([0.0, 0.5, 1.0])
    np.testing.assert_allclose(dense @ coords, 0.0, atol=1e-14)
    np.testing.assert_allclose(op.apply(coords), 0.0, atol=1e-14)

    e0 = np.array([1.0, 0.0, 0.0])
    np.testing.assert_allclose(dense @ e0, [1.0, -2.0, 1.0], atol=1e-14)
    np.testing.assert_allclose(op.apply(e0), [1.0, -2.0, 1.0], atol=1e-14)


def test_conserving_operator_is_symmetric():
    mesh = build_mesh(0, 10, 64)
    op = build_bc_operator(assemble_stiffness(mesh), mesh, BcKind.MEAN_CONSERVING)
    rng = np.random.default_rng(3)
    norm = np.max(np.abs(op.stiffness.diag))
    for _ in range(10):
        p = rng.standard_normal(mesh.n_nodes)
        q = rng.standard_normal(mesh.n_nodes)
        gap = abs(p @ op.apply(q) - q @ op.apply(p))
        assert gap <= 1e-12 * np.linalg.norm(p) * np.linalg.norm(q) * norm


def test_neumann_coordinate_pairing_identity():
    # x @ K @ u equals u_last - u_first for any u.
    mesh = build_mesh(0, 10, 50)
    k = assemble_stiffness(mesh)
    rng = np.random.default_rng(11)
    for _ in range(10):
        u = rng.standard_normal(mesh.n_nodes)
        np.testing.assert_allclose(
            mesh.nodes @ k.matvec(u), u[-1] - u[0], rtol=1e-10, atol=1e-12
        )


def test_matvec_dimension_mismatch():
    mass = assemble_mass(build_mesh(0, 1, 4))
    with pytest.raises(ValueError, match="length"):
        mass.matvec(np.ones(3))


def test_tridiagonal_shape_validation():
    with pytest.raises(ValueError):
        SymTridiagonal(diag=np.ones(3), off=np.ones(3))


def test_operator_mesh_mismatch():
    k = assemble_stiffness(build_mesh(0, 1, 4))
    with pytest.raises(ValueError, match="does not match"):
        build_bc_operator(k, build_mesh(0, 1, 5), BcKind.NEUMANN)
