from fractions import Fraction

import pytest

from exorb.algebra import bracket, build_lie_algebra, centralizer
from exorb.orbits import (
    Characteristic,
    NilpotentOrbit,
    WeightedDynkinDiagram,
    characteristic_element,
    complete_triple,
    dynkin_test,
    enumerate_orbits,
    find_representative,
    grading_from_h,
    orbit_dimension,
)


def _partitions(n, cap=None):
    if n == 0:
        yield ()
        return
    cap = cap or n
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _diagram_of_partition(parts):
    """Block weights sorted descending; labels are consecutive differences."""
    weights = []
    for m in parts:
        weights.extend(range(m - 1, -m, -2))
    weights.sort(reverse=True)
    return tuple(weights[i] - weights[i + 1] for i in range(len(weights) - 1))


def _type_a_expected_diagrams(rank):
    out = set()
    for parts in _partitions(rank + 1):
        if set(parts) != {1}:
            out.add(_diagram_of_partition(parts))
    return out


@pytest.mark.parametrize("rank", [2, 3])
def test_type_a_matches_partition_classification(rank):
    L = build_lie_algebra(f"A{rank}")
    orbits = enumerate_orbits(L)
    assert {o.diagram.labels for o in orbits} == _type_a_expected_diagrams(rank)


def test_diagram_validation_and_parsing():
    with pytest.raises(ValueError):
        WeightedDynkinDiagram((0, 3))
    d = WeightedDynkinDiagram.from_string("0,1,0,2")
    assert d.labels == (0, 1, 0, 2)
    assert WeightedDynkinDiagram.from_string("102").labels == (1, 0, 2)
    assert str(d) == "0,1,0,2"


def test_characteristic_realizes_labels():
    L = build_lie_algebra("F4")
    d = WeightedDynkinDiagram((0, 1, 0, 1))
    h = characteristic_element(L, d)
    assert L.cartan_values(h) == tuple(Fraction(v) for v in d.labels)
    assert Characteristic(h).h == h


def test_grading_zero_element_is_single_piece():
    L = build_lie_algebra("G2")
    g = grading_from_h(L, L.zero())
    assert set(g.pieces) == {0}
    assert g.pieces[0].dim == L.dim


def test_grading_dimensions_are_symmetric():
    L = build_lie_algebra("G2")
    h = characteristic_element(L, WeightedDynkinDiagram((1, 0)))
    g = grading_from_h(L, h)
    dims = g.dims()
    assert sum(dims.values()) == L.dim
    assert all(dims[k] == dims[-k] for k in dims)


def test_grading_pieces_multiply_compatibly():
    L = build_lie_algebra("G2")
    h = characteristic_element(L, WeightedDynkinDiagram((0, 2)))
    g = grading_from_h(L, h)
    for j, sj in g.pieces.items():
        for k, sk in g.pieces.items():
            target = g.piece(j + k)
            for a in sj.basis_elements()[:3]:
                for b in sk.basis_elements()[:3]:
                    img = bracket(L, a, b)
                    if img.is_zero():
                        continue
                    assert target is not None and target.contains(img)


def test_grading_rejects_non_integral_action():
    L = build_lie_algebra("G2")
    h = Fraction(1, 2) * L.cartan_element(0)
    with pytest.raises(ValueError):
        grading_from_h(L, h)


def test_dynkin_test_validation_and_edge_cases():
    L = build_lie_algebra("G2")
    with pytest.raises(ValueError):
        dynkin_test(L, WeightedDynkinDiagram((0, 1)), trials=0)
    assert dynkin_test(L, WeightedDynkinDiagram((0, 0)))
    assert not dynkin_test(L, WeightedDynkinDiagram((1, 1)))
    assert not dynkin_test(L, WeightedDynkinDiagram((2, 0)))
    assert dynkin_test(L, WeightedDynkinDiagram((0, 2)))


def test_g2_classification():
    L = build_lie_algebra("G2")
    orbits = enumerate_orbits(L)
    assert [o.diagram.labels for o in orbits] == [
        (0, 1),
        (1, 0),
        (0, 2),
        (2, 2),
    ]


def test_f4_classification_count_and_triples():
    L = build_lie_algebra("F4")
    orbits = enumerate_orbits(L)
    assert len(orbits) == 15
    for o in orbits:
        e, h, f = o.triple.e, o.triple.h, o.triple.f
        assert bracket(L, h, e) == 2 * e
        assert bracket(L, h, f) == -2 * f
        assert bracket(L, e, f) == h


def test_regular_representative_is_sum_of_simple_root_vectors():
    L = build_lie_algebra("G2")
    e = L.root_vector((1, 0)) + L.root_vector((0, 1))
    assert centralizer(L, e).dim == L.rank


def test_find_representative_zero_and_invalid():
    L = build_lie_algebra("G2")
    assert find_representative(L, WeightedDynkinDiagram((0, 0))).is_zero()
    with pytest.raises((ValueError, RuntimeError)):
        find_representative(L, WeightedDynkinDiagram((1, 1)))


def test_representative_lives_in_weight_two_space():
    L = build_lie_algebra("F4")
    d = WeightedDynkinDiagram((0, 2, 0, 0))
    e = find_representative(L, d)
    weights = L.basis_weights(d.labels)
    assert all(weights[i] == 2 for i in e.support())
    g0 = sum(1 for w in weights if w == 0)
    g1 = sum(1 for w in weights if w == 1)
    assert centralizer(L, e).dim == g0 + g1


def test_complete_triple_rank_one_case():
    L = build_lie_algebra("A1")
    e = L.root_vector((1,))
    h = L.coroot_element((1,))
    t = complete_triple(L, h, e)
    assert t.f == L.root_vector((-1,))


def test_complete_triple_rejects_bad_pair():
    L = build_lie_algebra("A2")
    e = L.root_vector((1, 0))
    with pytest.raises(ValueError):
        complete_triple(L, L.cartan_element(1), e)  # [h,e] = -e, not 2e


def test_orbit_dimension_zero_orbit_and_parity():
    L = build_lie_algebra("G2")
    zero = NilpotentOrbit(
        WeightedDynkinDiagram((0, 0)),
        complete_triple(L, L.zero(), L.zero()),
    )
    assert orbit_dimension(L, zero) == 0
    dims = [orbit_dimension(L, o) for o in enumerate_orbits(L)]
    assert dims == [6, 8, 10, 12]
    assert all(d % 2 == 0 and d > 0 for d in dims)


def test_enumeration_is_deterministic():
    L = build_lie_algebra("F4")
    a = enumerate_orbits(L, seed=7)
    b = enumerate_orbits(L, seed=7)
    assert [o.diagram for o in a] == [o.diagram for o in b]
    assert [o.triple.e for o in a] == [o.triple.e for o in b]
    assert [o.triple.f for o in a] == [o.triple.f for o in b]


def test_orbit_label_attachment():
    L = build_lie_algebra("G2")
    o = enumerate_orbits(L)[0]
    assert o.label is None
    named = o.with_label("minimal")
    assert named.label == "minimal" and named.diagram == o.diagram


def test_e8_minimal_diagram_is_accepted():
    L = build_lie_algebra("E8")
    assert dynkin_test(L, WeightedDynkinDiagram((0, 0, 0, 0, 0, 0, 0, 1)))
    assert not dynkin_test(L, WeightedDynkinDiagram((1, 1, 1, 1, 1, 1, 1, 1)))


def test_element_constructor_rejects_floats():
    L = build_lie_algebra("A1")
    with pytest.raises(TypeError):
        L.element({0: 0.5})
    with pytest.raises(TypeError):
        0.5 * L.zero()


def test_rank_one_classification():
    L = build_lie_algebra("A1")
    orbits = enumerate_orbits(L)
    assert [o.diagram.labels for o in orbits] == [(2,)]


def test_e7_grading_cross_check():
    # dim g_e = dim g(0) + dim g(1) = 35 for the 35/33 example orbit
    L = build_lie_algebra("E7")
    h = characteristic_element(L, WeightedDynkinDiagram((0, 0, 0, 1, 0, 1, 0)))
    dims = grading_from_h(L, h).dims()
    assert dims[0] + dims[1] == 35
    assert sum(dims.values()) == L.dim
