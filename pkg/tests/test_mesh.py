import numpy as np
import pytest

from diffkde import OutOfDomainError, build_mesh


def test_reference_partition():
    mesh = build_mesh(0, 10, 5000)
    assert mesh.n_nodes == 5001
    assert mesh.h == 0.002
    assert mesh.nodes[0] == 0.0
    assert mesh.nodes[-1] == 10.0


def test_single_element():
    mesh = build_mesh(0, 1, 1)
    np.testing.assert_array_equal(mesh.nodes, [0.0, 1.0])
    assert mesh.h == 1.0


def test_two_elements():
    mesh = build_mesh(0, 1, 2)
    np.testing.assert_array_equal(mesh.nodes, [0.0, 0.5, 1.0])
    assert mesh.h == 0.5


def test_nodes_uniformly_spaced():
    mesh = build_mesh(-3.0, 7.5, 137)
    gaps = np.diff(mesh.nodes)
    assert np.all(gaps > 0)
    np.testing.assert_allclose(gaps, mesh.h, rtol=1e-15)
    # widths sum to the domain length up to accumulated roundoff
    assert abs(gaps.sum() - 10.5) <= 137 * np.finfo(float).eps * 10.5


def test_domain_order_rejected():
    with pytest.raises(ValueError, match="b > a"):
        build_mesh(1.0, 1.0, 10)
    with pytest.raises(ValueError, match="b > a"):
        build_mesh(2.0, 1.0, 10)


def test_zero_elements_rejected():
    with pytest.raises(ValueError, match="num_elements"):
        build_mesh(0.0, 1.0, 0)


def test_nearest_node_basic():
    mesh = build_mesh(0, 1, 2)
    assert mesh.nearest_node(0.74) == 1


def test_nearest_node_tie_goes_down():
    mesh = build_mesh(0, 1, 2)
    assert mesh.nearest_node(0.25) == 0
    assert mesh.nearest_node(0.75) == 1


def test_nearest_node_right_endpoint():
    mesh = build_mesh(0, 10, 5000)
    assert mesh.nearest_node(10.0) == 5000


def test_nearest_node_out_of_domain():
    mesh = build_mesh(0, 10, 10)
    with pytest.raises(OutOfDomainError):
        mesh.nearest_node(-0.001)
    with pytest.raises(OutOfDomainError):
        mesh.nearest_node(10.001)


@pytest.mark.parametrize("num_elements", [1, 2, 7, 100])
def test_nearest_node_idempotent_on_nodes(num_elements):
    mesh = build_mesh(0.3, 9.1, num_elements)
    recovered = mesh.nearest_nodes(mesh.nodes)
    np.testing.assert_array_equal(recovered, np.arange(mesh.n_nodes))


def test_nodes_are_read_only():
    mesh = build_mesh(0, 1, 4)
    with pytest.raises(ValueError):
        mesh.nodes[0] = 5.0
