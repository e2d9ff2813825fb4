import random
from fractions import Fraction
from itertools import combinations

import pytest

from exorb.algebra import (
    Element,
    Subspace,
    ad_matrix,
    bracket,
    build_lie_algebra,
    centralizer,
    derived_subalgebra,
    quotient_with_action,
    subalgebra_closure,
)
from exorb.linalg import member, rank, rref
from exorb.orbits import characteristic_element, WeightedDynkinDiagram

DIMS = {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


@pytest.mark.parametrize("name,dim", sorted(DIMS.items()))
def test_dimensions(name, dim):
    assert build_lie_algebra(name).dim == dim


def _random_element(L, rng, sparsity=4):
    entries = {
        rng.randrange(L.dim): Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        for _ in range(sparsity)
    }
    return L.element(entries)


def test_bracket_antisymmetric_and_bilinear():
    L = build_lie_algebra("G2")
    rng = random.Random(1)
    for _ in range(30):
        a, b = _random_element(L, rng), _random_element(L, rng)
        assert bracket(L, a, a).is_zero()
        assert bracket(L, a, b) == -1 * bracket(L, b, a)
        c = _random_element(L, rng)
        lhs = bracket(L, a + b, c)
        assert lhs == bracket(L, a, c) + bracket(L, b, c)
        s = Fraction(3, 2)
        assert bracket(L, s * a, c) == s * bracket(L, a, c)


def test_jacobi_exhaustive_g2():
    L = build_lie_algebra("G2")
    basis = [L.basis_element(i) for i in range(L.dim)]
    for i, j, k in combinations(range(L.dim), 3):
        total = (
            bracket(L, basis[i], bracket(L, basis[j], basis[k]))
            + bracket(L, basis[j], bracket(L, basis[k], basis[i]))
            + bracket(L, basis[k], bracket(L, basis[i], basis[j]))
        )
        assert total.is_zero()


def test_cartan_acts_by_weights():
    L = build_lie_algebra("F4")
    rs = L.rs
    for i in range(rs.rank):
        h = L.cartan_element(i)
        for r in rs.positive_roots[:8]:
            x = L.root_vector(r)
            out = bracket(L, h, x)
            assert out == rs.pairing(r.coeffs, i) * x


def test_opposite_root_vectors_give_coroot():
    L = build_lie_algebra("G2")
    for r in L.rs.positive_roots:
        x = L.root_vector(r)
        y = L.root_vector((-r))
        h = bracket(L, x, y)
        assert h == L.coroot_element(r)
        assert bracket(L, h, x) == 2 * x  # <r, r^vee> = 2


def test_bracket_rejects_dimension_mismatch():
    L = build_lie_algebra("A2")
    other = build_lie_algebra("A3")
    with pytest.raises(ValueError):
        bracket(L, L.zero(), other.zero())


def test_ad_matrix_columns_are_bracket_images():
    L = build_lie_algebra("A2")
    rng = random.Random(3)
    a = _random_element(L, rng)
    m = ad_matrix(L, a)
    for j in range(L.dim):
        img = bracket(L, a, L.basis_element(j))
        assert tuple(m.data[i][j] for i in range(L.dim)) == img.coeffs


def test_centralizer_of_zero_is_everything():
    L = build_lie_algebra("G2")
    assert centralizer(L, L.zero()).dim == L.dim


def test_centralizer_is_bracket_closed():
    L = build_lie_algebra("G2")
    rng = random.Random(4)
    for _ in range(5):
        c = centralizer(L, _random_element(L, rng))
        derived_subalgebra(L, c)  # raises if not closed


def test_centralizer_dimensions_on_root_vectors():
    L = build_lie_algebra("G2")
    # long-root vector: minimal orbit, dim 6, so the centralizer has dim 8
    e_long = L.root_vector((3, 2))
    assert centralizer(L, e_long).dim == 8
    e_short = L.root_vector((2, 1))
    assert centralizer(L, e_short).dim == 6


def test_simple_algebra_is_perfect():
    for name in ("A2", "G2"):
        L = build_lie_algebra(name)
        g = Subspace.full(L)
        assert derived_subalgebra(L, g).dim == L.dim


def test_derived_subalgebra_is_an_ideal_of_s():
    L = build_lie_algebra("G2")
    e = L.root_vector((2, 1))
    s = centralizer(L, e)
    d = derived_subalgebra(L, s)
    assert d.dim < s.dim
    for row in d.basis.data:
        assert member(row, s.basis)
    for srow in s.basis.data:
        for drow in d.basis.data:
            img = bracket(L, Element(srow), Element(drow))
            assert member(img.coeffs, d.basis)


def test_derived_subalgebra_rejects_non_subalgebra():
    L = build_lie_algebra("A2")
    # span of two root vectors whose bracket escapes the span
    s = Subspace.from_rows(
        L, [L.root_vector((1, 0)).coeffs, L.root_vector((0, 1)).coeffs]
    )
    with pytest.raises(ValueError):
        derived_subalgebra(L, s)


def test_closure_of_nothing_is_zero():
    L = build_lie_algebra("A2")
    assert subalgebra_closure(L, []).dim == 0


def test_simple_root_vectors_generate_everything():
    L = build_lie_algebra("G2")
    gens = []
    for i in range(L.rank):
        simple = L.rs.positive_roots[:2][i]
        gens.append(L.root_vector(simple))
        gens.append(L.root_vector(-simple))
    assert subalgebra_closure(L, gens).dim == L.dim


def test_closure_respects_within_bound():
    L = build_lie_algebra("G2")
    e = L.root_vector((3, 2))
    c = centralizer(L, e)
    outside = L.root_vector((0, -1))  # [e, y] lands on the root (3,1)
    assert not bracket(L, e, outside).is_zero()
    with pytest.raises(ValueError):
        subalgebra_closure(L, [outside], within=c)


def test_quotient_with_action_trivial_and_errors():
    L = build_lie_algebra("G2")
    e = L.root_vector((2, 1))
    h = characteristic_element(L, WeightedDynkinDiagram((1, 0)))
    s = centralizer(L, e)
    assert quotient_with_action(L, s, s, h) == (0, ())
    t = derived_subalgebra(L, s)
    dim, weights = quotient_with_action(L, s, t, h)
    assert dim == 1 and weights == (2,)
    with pytest.raises(ValueError):
        quotient_with_action(L, t, s, h)  # containment fails
    x = L.root_vector((1, 0))
    with pytest.raises(ValueError):
        quotient_with_action(L, s, t, x)  # not a Cartan element


def test_quotient_rejects_unstable_spaces():
    L = build_lie_algebra("A2")
    h = characteristic_element(L, WeightedDynkinDiagram((2, 2)))
    line = Subspace.from_rows(
        L, [(L.root_vector((1, 0)) + L.cartan_element(0)).coeffs]
    )
    full = Subspace.full(L)
    with pytest.raises(ValueError):
        quotient_with_action(L, full, line, h)


def test_subspace_basis_is_canonical():
    L = build_lie_algebra("G2")
    e = L.root_vector((1, 1))
    c = centralizer(L, e)
    reduced, pivots = rref(c.basis)
    assert reduced == c.basis
    assert len(pivots) == c.dim == rank(c.basis)
