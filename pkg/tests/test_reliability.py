from fractions import Fraction

import pytest

from shadowcover.corpus import named, random_polytope, random_symmetric_polytope
from shadowcover.linalg import vector
from shadowcover.polytope import apply_linear, embed
from shadowcover.reliability import (
    direction_set,
    enumerate_simplicial,
    facet_direction_set,
    family_valid,
    is_reliable,
    is_simplicial,
    parallelotope_check,
    search_space,
)

F = Fraction


def test_antipodal_pair_is_simplicial():
    fam = is_simplicial([(1, 0), (-1, 0)])
    assert fam is not None and fam.coefficients == vector((1, 1))


def test_pyramid_slant_triple():
    fam = is_simplicial([(1, 0, 1), (-1, 0, 1), (0, 0, -1)])
    assert fam is not None
    assert fam.coefficients == vector((1, 1, 2))


def test_zero_coefficient_dependency_rejected():
    assert is_simplicial([(1, 0), (0, 1), (-1, 0)]) is None


def test_independent_set_rejected():
    assert is_simplicial([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) is None


def test_enumerate_cube_normals_empty(cube3):
    a = facet_direction_set(cube3)
    assert enumerate_simplicial(a, 3) == []


def test_enumerate_pyramid_families(pyramid):
    a = facet_direction_set(pyramid)
    fams = enumerate_simplicial(a, 3)
    assert [f.size for f in fams] == [3, 3]
    for f in fams:
        assert family_valid(a, f)
    assert enumerate_simplicial(a, 4) == []


def test_enumerate_q_directions(q_directions):
    fams5 = enumerate_simplicial(q_directions, 5)
    assert fams5 == []
    fams4 = enumerate_simplicial(q_directions, 4)
    assert fams4
    assert all(f.size == 4 for f in fams4)
    for f in fams4:
        assert family_valid(q_directions, f)
    # the paper-style example family is among them
    dirs = [tuple(int(x) for x in q_directions.directions[i]) for i in fams4[0].members]
    wanted = {(1, 1, 0, 0), (0, 0, 1, 1), (-1, 0, 0, -1), (0, -1, -1, 0)}
    found = [
        {tuple(int(x) for x in q_directions.directions[i]) for i in f.members}
        for f in fams4
    ]
    assert wanted in found


def test_pyramid_reliability(pyramid):
    v1 = is_reliable(pyramid, 1)
    assert not v1.reliable and v1.certificate.size == 3
    assert family_valid(v1.directions, v1.certificate)
    assert is_reliable(pyramid, 2).reliable


def test_simplex_never_reliable():
    for n in (2, 3, 4):
        s = named(f"standard-simplex-{n}")
        for d in range(1, n):
            assert not is_reliable(s, d).reliable


def test_directions_input(q_directions):
    assert is_reliable(q_directions, 3).reliable
    v = is_reliable(q_directions, 2)
    assert not v.reliable and v.certificate.size == 4


def test_reliability_monotone_in_d():
    bodies = [
        named("square-pyramid"),
        named("octahedron"),
        named("hexagonal-prism"),
        random_polytope(5, 3, 7, 4),
        random_polytope(6, 4, 8, 3),
    ]
    for p in bodies:
        prev = False
        for d in range(1, p.dim):
            cur = is_reliable(p, d).reliable
            assert cur or not prev  # once reliable, stays reliable
            prev = cur


def test_scale_invariance_of_directions():
    a = direction_set(3, [(2, 0, 2), (-1, 0, 1), (0, 0, -5)])
    b = direction_set(3, [(1, 0, 1), (-3, 0, 3), (0, 0, -1)])
    va, vb = is_reliable(a, 1), is_reliable(b, 1)
    assert va.reliable == vb.reliable
    assert va.certificate.members == vb.certificate.members


def test_positively_proportional_directions_rejected():
    with pytest.raises(ValueError):
        direction_set(2, [(1, 0), (2, 0)])


def test_d_range_validated(pyramid):
    with pytest.raises(ValueError):
        is_reliable(pyramid, 0)
    with pytest.raises(ValueError):
        is_reliable(pyramid, 3)


def test_parallelotope_examples(cube3, pyramid):
    assert parallelotope_check(cube3)
    assert parallelotope_check(named("sheared-box-3"))
    assert not parallelotope_check(pyramid)
    assert not parallelotope_check(named("octahedron"))
    assert not parallelotope_check(named("hexagonal-prism"))


def test_one_reliable_iff_parallelotope_oracle():
    bodies = [named(n) for n in (
        "cube-2", "cube-3", "cube-4", "sheared-box-2", "sheared-box-3",
        "square-pyramid", "octahedron", "hexagonal-prism", "triangular-prism",
        "standard-simplex-2", "standard-simplex-3", "standard-simplex-4",
        "cross-polytope-4",
    )]
    bodies += [random_polytope(s, 3, 7, 4) for s in range(5)]
    bodies += [random_symmetric_polytope(s, 3, 4, 3) for s in range(5)]
    for p in bodies:
        assert is_reliable(p, 1).reliable == parallelotope_check(p)


def test_reliability_survives_embedding(pyramid):
    e = embed(pyramid, 4)
    assert not is_reliable(e, 1).reliable
    assert is_reliable(e, 2).reliable
    assert is_reliable(e, 3).reliable


def test_reliability_invariant_under_linear_maps(pyramid):
    psi = [(1, 1, 0), (0, 1, 1), (0, 0, 1)]
    img = apply_linear(pyramid, psi)
    for d in (1, 2):
        assert is_reliable(img, d).reliable == is_reliable(pyramid, d).reliable


def test_search_space_counts():
    # families of size m span m-1 dimensions, so m <= rank+1
    assert search_space(12, 4, 5) == 792
    assert search_space(5, 3, 3) == 10 + 5
