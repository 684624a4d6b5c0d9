#  Copyright 2024 The quivzeta Authors
#  #
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#  #
#      https://www.apache.org/licenses/LICENSE-2.0
#  #
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.


import jax
import pytest

from quivzeta.deployers import Deployer, ResourceCeilingError
from quivzeta.lattices import (
    CountTable,
    LatticeTuple,
    LocalLattice,
    count_invariant_sublattices,
    count_sublattices,
    count_subreps,
    enum_sublattices,
    homothety_ray,
    is_subrep,
    local_hnf,
    m_2,
    m_tilde_1,
    mc_property,
    nu_invariant,
    random_lattice_tuple)
from quivzeta.quivers import (
    builtin_rep,
    cocentral_grading,
    to_submodule_instance)
from quivzeta.verifiers.checks import lattice_tuples


def single(p, rows):
    return LatticeTuple(vertices=('v1',),
                        lattices=(LocalLattice(p=p, rows=rows),))


@pytest.mark.parametrize('n,p,e,expected', [
    (1, 2, 3, 1),
    (2, 2, 1, 3),
    (3, 2, 2, 35),
    (2, 3, 2, 13),
])
def test_sublattice_counts(n, p, e, expected):
    assert count_sublattices(n, p, e) == expected
    assert sum(1 for _ in enum_sublattices(n, p, e)) == expected


def test_enumeration_of_rank_one():
    assert [lattice.rows for lattice in enum_sublattices(1, 2, 3)] == [((8,),)]


def test_enumeration_has_no_duplicates():
    rows = [lattice.rows for lattice in enum_sublattices(3, 2, 3)]
    assert len(rows) == len(set(rows))


def test_local_hnf_normalizes_basis():
    lattice = local_hnf(2, ((0, 2), (2, 0)))
    assert lattice.rows == ((2, 0), (0, 2))
    assert lattice.index_exponent == 2
    with pytest.raises(ValueError):
        local_hnf(2, ((1, 1), (2, 2)))


def test_lattice_membership():
    lattice = LocalLattice(p=2, rows=((2, 1), (0, 2)))
    assert lattice.contains((2, 1))
    assert lattice.contains((0, 2))
    assert not lattice.contains((1, 0))


def test_heisenberg_subrep_test():
    rep = builtin_rep('heisenberg')
    assert not is_subrep(rep, single(2, ((1, 0, 0), (0, 1, 0), (0, 0, 2))))
    assert is_subrep(rep, single(2, ((2, 0, 0), (0, 1, 0), (0, 0, 1))))


def test_subrep_test_rejects_wrong_dimensions():
    rep = builtin_rep('heisenberg')
    with pytest.raises(ValueError):
        is_subrep(rep, single(2, ((1, 0), (0, 1))))


def test_heisenberg_counts():
    table = count_subreps(builtin_rep('heisenberg'), p=2, bound=2)
    assert table.as_list() == [1, 3, 7]


def test_free_rank_one_counts():
    assert count_subreps(builtin_rep('free', n=1), 2, 4).as_list() == \
        [1] * 5


def test_graded_heisenberg_multivariate_counts():
    table = count_subreps(builtin_rep('graded_heisenberg'), p=2, bound=3,
                          mode='multivariate')
    assert table[(0, 0)] == 1
    assert table[(1, 0)] == 3
    assert table[(0, 1)] == 0
    assert table[(2, 0)] == 7
    assert table[(2, 1)] == 1
    assert table.aggregate().as_list()[:2] == [1, 3]


@pytest.mark.parametrize('name,params,p,bound', [
    ('star', {'m': 1, 'a': 3}, 2, 4),
    ('d4', {}, 2, 3),
    ('dual_star', {'m': 2, 'a': 2}, 3, 2),
])
def test_accelerated_counts_agree(name, params, p, bound):
    rep = builtin_rep(name, **params)
    assert count_subreps(rep, p, bound, accelerate=True) == \
        count_subreps(rep, p, bound)


def test_resource_ceiling():
    deployer = Deployer(verbose=False, max_candidates=10)
    with pytest.raises(ResourceCeilingError):
        count_subreps(builtin_rep('heisenberg'), p=2, bound=3,
                      deployer=deployer)


@pytest.mark.parametrize('p,bound', [(4, 2), (2, -1)])
def test_count_rejects_bad_arguments(p, bound):
    with pytest.raises(ValueError):
        count_subreps(builtin_rep('heisenberg'), p=p, bound=bound)


def test_invariant_sublattices():
    assert count_invariant_sublattices([], p=2, bound=3, n=1).as_list() == \
        [1] * 4
    rep = builtin_rep('heisenberg')
    operators = [rep.matrix('f1'), rep.matrix('f2')]
    assert count_invariant_sublattices(operators, p=2, bound=2).as_list() \
        == [1, 3, 7]


def test_submodule_instance_counts_match():
    rep = builtin_rep('star', m=1, a=2)
    operators = to_submodule_instance(rep)
    assert count_invariant_sublattices(
        operators, p=2, bound=3, n=rep.total_rank) == \
        count_subreps(rep, p=2, bound=3)


def test_count_table_serialization():
    table = count_subreps(builtin_rep('heisenberg'), p=2, bound=2)
    data = table.to_dict()
    assert data == {'prime': 2, 'mode': 'univariate',
                    'counts': {'0': 1, '1': 3, '2': 7}}
    assert CountTable.from_dict(data) == table


@pytest.mark.parametrize('rows,descents,jumps,trailing', [
    (((1, 0, 0), (0, 1, 0), (0, 0, 1)), (), (), 0),
    (((4, 0, 0), (0, 2, 0), (0, 0, 1)), (1, 2), (1, 1), 0),
    (((4, 0), (0, 2)), (1,), (1,), 1),
])
def test_nu_invariant(rows, descents, jumps, trailing):
    lattice = LocalLattice(p=2, rows=rows)
    nu = nu_invariant(lattice)
    assert (nu.descents, nu.jumps, nu.trailing) == \
        (descents, jumps, trailing)
    assert nu.index_exponent == lattice.index_exponent


def test_m_2_on_heisenberg():
    rep = builtin_rep('heisenberg')
    grading = cocentral_grading(rep)
    assert m_2(rep, grading,
               single(2, ((1, 0, 0), (0, 1, 0), (0, 0, 4)))) == 2
    assert m_2(rep, grading,
               single(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))) == 0
    with pytest.raises(ValueError):
        m_2(rep, grading, single(2, ((2, 0, 0), (0, 2, 0), (0, 0, 2))))


def test_m_tilde_1_on_graded_heisenberg():
    rep = builtin_rep('graded_heisenberg')
    grading = cocentral_grading(rep)
    lattices = LatticeTuple(
        vertices=('v1', 'v2'),
        lattices=(LocalLattice.standard(2, 2), LocalLattice(2, ((2,),))))
    assert m_tilde_1(rep, grading, lattices) == 1


def test_m_tilde_1_rejects_inhomogeneous_data():
    rep = builtin_rep('fil4')
    lattices = single(2, tuple(
        tuple(int(i == j) for j in range(5)) for i in range(5)))
    with pytest.raises(ValueError):
        m_tilde_1(rep, cocentral_grading(rep), lattices)


@pytest.mark.parametrize('name', ['heisenberg', 'graded_heisenberg'])
def test_delta_invariants_on_small_tuples(name):
    rep = builtin_rep(name)
    grading = cocentral_grading(rep)
    for lattices in lattice_tuples(rep, p=2, bound=2):
        m = m_tilde_1(rep, grading, lattices, check=False)
        assert (m == 0) == is_subrep(rep, lattices)
        assert homothety_ray(rep, grading, lattices, bound=m + 2) == \
            tuple(range(m, m + 3))
        if m == 0:
            assert mc_property(rep, grading, lattices)


def test_random_lattice_tuple_is_seeded():
    rep = builtin_rep('graded_heisenberg')
    first = random_lattice_tuple(jax.random.PRNGKey(0), rep, 3, 2)
    second = random_lattice_tuple(jax.random.PRNGKey(0), rep, 3, 2)
    assert first == second
    assert all(max(lattice.diagonal_exponents, default=0) <= 2
               for lattice in first.lattices)
