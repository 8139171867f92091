import pytest

from pilings.errors import BudgetExceeded
from pilings.extension import ext_conjugate
from pilings.graph import DefiningGraph, example_graph, identity_aut, inversion_aut, validate_aut
from pilings.growth import ext_ball, ext_conj_growth, ext_spot_check, raag_conj_growth
from pilings.oracle import free_abelian_growth, free_group_conj_growth, oracle_ext_conjugate


def burnside_free_group(k, n):
    """Cyclically reduced words of length n up to rotation, via Burnside."""
    from math import gcd

    def cyc_reduced(d):
        # closed non-backtracking walks of length d in the 2k-regular tree quotient
        return (2 * k - 1) ** d + 1 + (k - 1) * (1 + (-1) ** d)

    return sum(cyc_reduced(gcd(n, j)) for j in range(n)) // n


def test_single_vertex():
    assert raag_conj_growth(DefiningGraph.edgeless(1), 8).coefficients == [1] + [2] * 8


def test_free_abelian_rank_two():
    assert raag_conj_growth(DefiningGraph.complete(2), 8).coefficients == [1] + [4 * n for n in range(1, 9)]


def test_free_group_matches_necklaces():
    table = raag_conj_growth(DefiningGraph.edgeless(2), 8)
    assert table.coefficients[:3] == [1, 4, 8]
    assert table.coefficients == free_group_conj_growth(2, 8)
    assert table.coefficients[1:] == [burnside_free_group(2, n) for n in range(1, 9)]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_free_abelian_matches_lattice_count(r):
    assert raag_conj_growth(DefiningGraph.complete(r), 6).coefficients == free_abelian_growth(r, 6)


def test_edgeless_relabel_invariance():
    g = DefiningGraph.edgeless(3)
    h = DefiningGraph.from_edges(["x", "b", "q"])
    assert raag_conj_growth(g, 4).coefficients == raag_conj_growth(h, 4).coefficients


def test_trivial_extension_matches_raag():
    g = example_graph()
    assert ext_conj_growth(g, identity_aut(g), 4).coefficients == raag_conj_growth(g, 4).coefficients


def test_infinite_dihedral():
    g = DefiningGraph.edgeless(1)
    phi = inversion_aut(g, [0])
    table = ext_conj_growth(g, phi, 6)
    # classes: {1}, {a^n, a^-n}, [t], [ta]
    assert table.coefficients == [1, 2, 2, 1, 1, 1, 1]


def test_partition_certified_by_conjugators():
    g = DefiningGraph.edgeless(1)
    phi = inversion_aut(g, [0])
    elements = [x for s in ext_ball(phi, 1) for x in s]
    for a in elements:
        for b in elements:
            assert ext_conjugate(a, b) == (oracle_ext_conjugate(a, b, 8) is not None)


def test_spot_check_small():
    g = DefiningGraph.edgeless(2)
    report = ext_spot_check(inversion_aut(g, [0]), radius=3, sample=60, bound=6, cross_radius=1)
    assert report.ok and report.same_pairs > 0 and report.cross_pairs > 0


def test_partition_property():
    g = example_graph()
    phi = validate_aut(g, [2, 3, 0, 1])
    spheres = ext_ball(phi, 3)
    table = ext_conj_growth(g, phi, 3)
    assert table.ball_size == sum(len(s) for s in spheres)
    assert table.coefficients[0] == 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        raag_conj_growth(DefiningGraph.edgeless(3), 6, budget=100)


def test_output_formats():
    table = raag_conj_growth(DefiningGraph.edgeless(2), 2)
    assert table.to_csv() == "0,1\n1,4\n2,8\n"
    data = table.to_gnuplot()
    assert data.startswith("#") and data.endswith("2 8\n")
