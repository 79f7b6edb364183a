"""Graded modules: free modules, kernels, minimal generators, Koszul homology."""

from fractions import Fraction

import pytest

from mmmcoh.algebra import PolynomialAlgebra, exterior_dim
from mmmcoh.forms import DifferentialForms
from mmmcoh.linalg import SparseMatrix, VectorQ
from mmmcoh.modules import (
    FreeGradedModule,
    GradedModule,
    GradedModuleMap,
    direct_sum,
    free_module,
    kernel_module,
    koszul_differential,
    koszul_dim,
    minimal_generators,
    tor_dimension,
    tor_table,
    trivial_module,
)

BOUND = 24


@pytest.fixture(scope="module")
def algebra():
    return PolynomialAlgebra(BOUND)


@pytest.fixture(scope="module")
def rank_one(algebra):
    # the algebra as a module over itself
    return free_module(algebra, [0])


@pytest.fixture(scope="module")
def twisted(algebra):
    # one generator per positive index l, in internal degree 2l
    gens = [2 * l for l in range(1, BOUND // 2 + 1)]
    return free_module(algebra, gens, coh_offset=-1)


def test_free_module_dims_match_forms(algebra, twisted):
    # the twisted module and Omega^1 have identical graded dimensions
    forms = DifferentialForms(algebra)
    for d in range(0, BOUND + 1, 2):
        assert twisted.dim(d) == forms.dim(1, d), d


def test_free_module_frozen_dims(twisted):
    frozen = [1, 2, 4, 7, 12, 19, 30, 45, 67, 97, 139, 195]
    assert [twisted.dim(d) for d in range(2, BOUND + 1, 2)] == frozen


def test_rank_one_free_module_is_the_algebra(algebra, rank_one):
    for d in range(0, BOUND + 1, 2):
        assert rank_one.dim(d) == algebra.hilbert_function(d)


def test_action_commutativity_is_checked(algebra):
    dims = {0: 1, 2: 1, 4: 1}
    # e1 acts as 1, e2 as 5: but then e1(e1 x) = 1 while e2 x = 5 in degree 4,
    # which no consistent module allows only if the two routes disagree --
    # here e1*e1 and e2 are distinct monomials so no constraint is violated.
    actions = {
        (1, 0): SparseMatrix.from_rows([[Fraction(1)]]),
        (1, 2): SparseMatrix.from_rows([[Fraction(1)]]),
        (2, 0): SparseMatrix.from_rows([[Fraction(5)]]),
    }
    GradedModule(algebra, dims, actions).check_action_commutativity()


def test_action_commutation_failure_is_detected(algebra):
    # e2 . e1 = 0 but e1 . e2 = 1 as maps from degree 0 to degree 6
    one = SparseMatrix.from_rows([[Fraction(1)]])
    zero = SparseMatrix.from_rows([[Fraction(0)]])
    dims = {0: 1, 2: 1, 4: 1, 6: 1}
    actions = {
        (1, 0): one,
        (1, 2): one,
        (1, 4): one,
        (2, 0): one,
        (2, 2): zero,
    }
    bad = GradedModule(algebra, dims, actions, check=False)
    with pytest.raises(ValueError):
        bad.check_action_commutativity()


def test_trivial_module_shape(algebra):
    t = trivial_module(algebra)
    assert t.dim(0) == 1
    assert t.dim(2) == 0
    assert t.action(1, 0).rows == 0


def test_direct_sum_dims_and_actions(algebra, rank_one):
    t = trivial_module(algebra)
    s = direct_sum(t, rank_one)
    for d in range(0, BOUND + 1, 2):
        assert s.dim(d) == t.dim(d) + rank_one.dim(d)
    s.check_action_commutativity()
    # block structure: the trivial summand contributes nothing to the action
    act = s.action(1, 0)
    assert act.rows == s.dim(2) and act.cols == s.dim(0)
    assert act.entry(0, 0) == 0  # trivial block
    assert act.entry(0, 1) == 1  # e1 * 1 = e1 in the free block


def test_module_map_shape_validation(algebra, rank_one):
    with pytest.raises(ValueError):
        GradedModuleMap(
            rank_one,
            rank_one,
            degree_shift=0,
            matrices={0: SparseMatrix.zero(3, 3)},
        )


def test_module_map_equivariance_validation(algebra, rank_one):
    # identity in degree 0 but zero in degree 2 cannot commute with e1
    mats = {
        d: SparseMatrix.identity(rank_one.dim(d)) if d == 0 else SparseMatrix.zero(
            rank_one.dim(d), rank_one.dim(d)
        )
        for d in range(0, BOUND + 1, 2)
    }
    with pytest.raises(ValueError):
        GradedModuleMap(rank_one, rank_one, 0, mats)
    GradedModuleMap(rank_one, rank_one, 0, mats, check=False)  # opt-out works


def test_kernel_module_of_multiplication_by_e1(algebra, rank_one):
    # e1: A -> A(+2) is injective, so the kernel vanishes wherever the
    # target slice still fits inside the bound (the top slice maps to 0)
    mats = {d: rank_one.action(1, d) for d in range(0, BOUND - 1, 2)}
    f = GradedModuleMap(rank_one, rank_one, 2, mats)
    ker, incl = kernel_module(f)
    assert all(ker.dim(d) == 0 for d in ker.degrees() if d + 2 <= BOUND)
    assert incl.source is ker


def test_kernel_module_inherits_actions(algebra):
    # quotient-style example: map two copies of A onto one by (x, y) -> x + y;
    # kernel is the antidiagonal copy of A, again free of rank one
    two = free_module(algebra, [0, 0])
    one = free_module(algebra, [0])
    mats = {}
    for d in range(0, BOUND + 1, 2):
        rows = [[Fraction(0)] * two.dim(d) for _ in range(one.dim(d))]
        for (gen, mono), c in two.basis_index(d).items():
            r = one.basis_index(d)[(0, mono)]
            rows[r][c] = Fraction(1)
        mats[d] = SparseMatrix.from_rows(rows) if rows else SparseMatrix.zero(0, two.dim(d))
    f = GradedModuleMap(two, one, 0, mats)
    ker, incl = kernel_module(f)
    ker.check_action_commutativity()
    for d in range(0, BOUND + 1, 2):
        assert ker.dim(d) == algebra.hilbert_function(d)
    # inclusion is equivariant by construction; spot-check one product
    v = VectorQ.unit(ker.dim(0), 0)
    moved = ker.multiply(1, 0, v)
    direct = incl.matrix(2).apply(moved)
    via_big = two.multiply(1, 0, incl.matrix(0).apply(v))
    assert direct == via_big


def test_minimal_generators_of_free_module(algebra, twisted):
    # a free module's minimal generators sit exactly at its generator degrees
    mg = minimal_generators(twisted)
    assert mg.counts == {2 * l: 1 for l in range(1, BOUND // 2 + 1)}
    for d, reps in mg.representatives.items():
        assert len(reps) == 1
        assert reps[0].is_zero() is False


def test_minimal_generator_representatives_are_unit_vectors(algebra, rank_one):
    mg = minimal_generators(rank_one)
    assert mg.counts == {0: 1}
    assert mg.representatives[0][0].to_list() == [Fraction(1)]
    assert mg.total() == 1


# -- Koszul homology -----------------------------------------------------------


def test_koszul_dims(algebra, rank_one):
    for d in range(0, 13, 2):
        assert koszul_dim(rank_one, 0, d) == algebra.hilbert_function(d)
        expected1 = sum(
            exterior_dim(1, k) * algebra.hilbert_function(d - k)
            for k in range(0, d + 1, 2)
        )
        assert koszul_dim(rank_one, 1, d) == expected1


def test_koszul_differential_squares_to_zero(algebra, rank_one):
    for d in range(2, 17, 2):
        for j in range(2, 4):
            d_j = koszul_differential(rank_one, j, d)
            d_j1 = koszul_differential(rank_one, j - 1, d)
            assert (d_j1 @ d_j).nnz() == 0, (j, d)


def test_free_module_has_no_higher_tor(algebra, twisted, rank_one):
    for mod in (rank_one, twisted):
        for j in (1, 2, 3):
            for d in range(0, 15, 2):
                assert tor_dimension(mod, j, d) == 0, (j, d)


def test_tor_zero_of_free_module_counts_generators(algebra, twisted):
    for d in range(2, BOUND + 1, 2):
        assert tor_dimension(twisted, 0, d) == 1  # one generator per even degree


def test_tor_of_trivial_module_is_exterior_algebra(algebra):
    t = trivial_module(algebra)
    for j in range(0, 4):
        for d in range(0, 17, 2):
            assert tor_dimension(t, j, d) == exterior_dim(j, d), (j, d)


def test_tor_frozen_spot_values(algebra):
    t = trivial_module(algebra)
    assert tor_dimension(t, 2, 6) == 1  # e1 ^ e2
    assert tor_dimension(t, 1, 4) == 1  # e2
    assert tor_dimension(t, 0, 0) == 1
    assert tor_dimension(t, 0, 2) == 0


def test_tor_table_matches_pointwise(algebra):
    t = trivial_module(algebra)
    table = tor_table(t, 2, up_to=12)
    for d in range(0, 13, 2):
        assert table.dim(d) == tor_dimension(t, 2, d)


def test_euler_characteristic_of_koszul_complex_vanishes(algebra, rank_one):
    # the Koszul complex of a free module is exact in positive degree, so
    # the alternating sum of slice dimensions minus homology collapses to 0
    for d in (4, 8, 12):
        euler_dims = sum(
            (-1) ** j * koszul_dim(rank_one, j, d) for j in range(0, d // 2 + 2)
        )
        euler_tor = sum(
            (-1) ** j * tor_dimension(rank_one, j, d) for j in range(0, d // 2 + 2)
        )
        assert euler_dims == euler_tor == 0, d


def test_zero_module_from_empty_generator_list(algebra):
    z = free_module(algebra, [])
    assert all(z.dim(d) == 0 for d in range(0, BOUND + 1, 2))
    assert minimal_generators(z).counts == {}


def test_kernel_of_identity_and_zero_maps(algebra, rank_one):
    degrees = list(range(0, BOUND + 1, 2))
    ident = GradedModuleMap(
        rank_one,
        rank_one,
        0,
        {d: SparseMatrix.identity(rank_one.dim(d)) for d in degrees},
    )
    ker, _ = kernel_module(ident)
    assert all(ker.dim(d) == 0 for d in degrees)

    zero = GradedModuleMap(
        rank_one,
        rank_one,
        0,
        {d: SparseMatrix.zero(rank_one.dim(d), rank_one.dim(d)) for d in degrees},
    )
    ker, incl = kernel_module(zero)
    for d in degrees:
        assert ker.dim(d) == rank_one.dim(d)
        assert incl.matrix(d) == SparseMatrix.identity(rank_one.dim(d))


def test_tor_zero_equals_minimal_generators(algebra, twisted, rank_one):
    # two independent computations of the same number, for free and
    # non-free modules alike
    t = trivial_module(algebra)
    for mod in (rank_one, twisted, t):
        mg = minimal_generators(mod, up_to=12)
        for d in range(0, 13, 2):
            assert tor_dimension(mod, 0, d) == mg.counts.get(d, 0), d
