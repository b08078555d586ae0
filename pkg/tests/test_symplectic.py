import random

import pytest
from hypothesis import given, settings, strategies as st

from coisotropic.exact import Matrix, Subspace
from coisotropic.keylemma import KeyLemmaInstance, keylemma_symplectic_space, lattice_Lij
from coisotropic.poly import Polynomial
from coisotropic.symplectic import (
    PolyVarietySample, SingularPointError, SymplecticSpace, filter_weakly_coisotropic_pieces,
    is_coisotropic_linear, is_weakly_coisotropic_at, is_weakly_coisotropic_linear, random_subspace,
    symplectic_complement, tangent_space, weakly_coisotropic_via_lagrangian,
)


def e(n, *idx):
    """Span of 1-indexed standard basis vectors."""
    return Subspace.coordinate(n, [i - 1 for i in idx])


@pytest.fixture
def f4():
    # omega(e1, e3) = omega(e2, e4) = 1, L = span(e3, e4)
    return SymplecticSpace.standard(2)


def test_standard_space_shape(f4):
    assert f4.omega[0, 2] == 1 and f4.omega[1, 3] == 1 and f4.omega[2, 0] == -1
    assert f4.lagrangian == e(4, 3, 4)


def test_invalid_spaces_rejected():
    with pytest.raises(ValueError):
        SymplecticSpace(Matrix([[0, 1], [1, 0]]), e(2, 1))
    with pytest.raises(ValueError):
        SymplecticSpace(Matrix.zeros(2), e(2, 1))
    with pytest.raises(ValueError):
        SymplecticSpace(SymplecticSpace.standard(1).omega, Subspace.full(2))


def test_complement_examples(f4):
    assert symplectic_complement(f4, Subspace.full(4)).dim == 0
    assert symplectic_complement(f4, e(4, 1, 2)) == e(4, 1, 2)
    assert symplectic_complement(f4, e(4, 1, 3)) == e(4, 2, 4)


def test_complement_dimension_mismatch(f4):
    with pytest.raises(ValueError):
        symplectic_complement(f4, e(3, 1))


def test_coisotropic_examples(f4):
    assert is_coisotropic_linear(f4, Subspace.full(4))
    assert is_coisotropic_linear(f4, e(4, 1, 2, 3))
    assert not is_coisotropic_linear(f4, e(4, 3))


def test_weakly_coisotropic_examples(f4):
    assert is_weakly_coisotropic_linear(f4, f4.lagrangian)
    assert is_weakly_coisotropic_linear(f4, e(4, 1, 2))
    assert not is_weakly_coisotropic_linear(f4, e(4, 1, 3))
    for z in (f4.lagrangian, e(4, 1, 2), e(4, 1, 3)):
        assert weakly_coisotropic_via_lagrangian(f4, z) == is_weakly_coisotropic_linear(f4, z)


def test_tangent_space_examples():
    x, y, z = Polynomial.variables(3)
    s = PolyVarietySample([x * x + y * y - z], 3, 1, [(0, 0, 0), (1, 1, 2)])
    assert tangent_space(s, (0, 0, 0)) == e(3, 1, 2)
    assert tangent_space(PolyVarietySample([], 2, 0), (5, 7)) == Subspace.full(2)
    x2, _ = Polynomial.variables(2)
    assert tangent_space(PolyVarietySample([x2], 2, 1), (0, 1)) == e(2, 2)


def test_tangent_space_errors():
    x, y = Polynomial.variables(2)
    cone = PolyVarietySample([x * y], 2, 1, [(0, 0)])
    with pytest.raises(SingularPointError):
        tangent_space(cone, (0, 0))
    with pytest.raises(ValueError):
        tangent_space(cone, (1, 1))
    with pytest.raises(ValueError):
        PolyVarietySample([x * y], 2, 1, [(1, 1)])


def test_weakly_coisotropic_at_examples(f4):
    v = Polynomial.variables(4)
    hyperplane = PolyVarietySample([v[0]], 4, 1, [(0, 1, 2, 3)])
    assert tangent_space(hyperplane, (0, 1, 2, 3)) == e(4, 2, 3, 4)
    assert is_weakly_coisotropic_at(f4, hyperplane, (0, 1, 2, 3))
    # a linear variety cutting a coisotropic subspace passes at every point
    coiso = PolyVarietySample([v[3]], 4, 1)
    assert is_coisotropic_linear(f4, e(4, 1, 2, 3))
    for pt in [(0, 0, 0, 0), (1, -2, 3, 0), (5, 5, 5, 0)]:
        assert is_weakly_coisotropic_at(f4, coiso, pt)


def test_quadric_in_keylemma_configuration():
    """``ad = bc`` inside ``L_11`` for ``n = 2``: tangent test equals the linear test and fails (dim 3 < 4)."""
    inst = KeyLemmaInstance(2)
    space = keylemma_symplectic_space(inst)
    v = Polynomial.variables(8)
    # coordinates (v1_1, v1_2, phi1_1, phi1_2, v2_1, v2_2, phi2_1, phi2_2)
    a, b, c, d = v[0], v[3], v[4], v[7]
    polys = [v[1], v[2], v[5], v[6], a * d - b * c]
    sample = PolyVarietySample(polys, 8, 5, [(1, 0, 0, 2, 3, 0, 0, 6), (0, 0, 0, 1, 0, 0, 0, 0)])
    for pt in sample.points:
        t = tangent_space(sample, pt)
        assert t.dim == 3 and t <= lattice_Lij(inst, 1, 1)
        assert is_weakly_coisotropic_at(space, sample, pt) == is_weakly_coisotropic_linear(space, t)
        assert not is_weakly_coisotropic_at(space, sample, pt)
    with pytest.raises(SingularPointError):
        tangent_space(sample, (0,) * 8)


def test_filter_examples():
    space = SymplecticSpace.standard(2)
    assert filter_weakly_coisotropic_pieces(space, []) == []
    pieces = [e(4, 1, 3), e(4, 1, 2), space.lagrangian]
    assert filter_weakly_coisotropic_pieces(space, pieces) == [pieces[1], pieces[2]]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_random_subspace_properties(m):
    space = SymplecticSpace.standard(m)
    rng = random.Random(100 + m)
    for _ in range(80):
        z = random_subspace(space, rng)
        perp = symplectic_complement(space, z)
        assert z.dim + perp.dim == space.dim
        assert symplectic_complement(space, perp) == z
        co = is_coisotropic_linear(space, z)
        weak = is_weakly_coisotropic_linear(space, z)
        assert weak == weakly_coisotropic_via_lagrangian(space, z)
        if co:
            assert weak
        if weak:
            assert z.dim >= m


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=6, max_size=6), max_size=6),
       st.lists(st.integers(-1, 1), min_size=9, max_size=9))
def test_properties_under_nonstandard_form(vecs, g):
    """Same properties after changing basis so neither omega nor L is standard."""
    base = SymplecticSpace.standard(3)
    t = Matrix([[1, g[0], g[1], 0, 0, 0], [0, 1, g[2], 0, 0, 0], [0, 0, 1, 0, 0, 0],
                [g[3], g[4], 0, 1, 0, 0], [g[5], 0, g[6], 0, 1, 0], [0, g[7], g[8], 0, 0, 1]])
    ti = t.inverse()
    omega = ti.T @ base.omega @ ti
    space = SymplecticSpace(omega, base.lagrangian.image(t))
    z = Subspace(6, vecs)
    perp = symplectic_complement(space, z)
    assert z.dim + perp.dim == 6 and symplectic_complement(space, perp) == z
    weak = is_weakly_coisotropic_linear(space, z)
    assert weak == weakly_coisotropic_via_lagrangian(space, z)
    assert not weak or z.dim >= 3
    assert not is_coisotropic_linear(space, z) or weak
