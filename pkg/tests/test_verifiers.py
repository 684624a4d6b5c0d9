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


import pytest

from quivzeta.deployers import Deployer
from quivzeta.posets import POSET_CATALOG
from quivzeta.quivers import builtin_rep
from quivzeta.verifiers import Verifier, checks


@pytest.fixture
def deployer():
    return Deployer(verbose=False)


def test_formula_counts(deployer):
    passed, detail = checks.formula_counts(
        deployer, 'graded_heisenberg', {}, p=2, bound=3)
    assert passed
    assert detail['mismatches'] == []


def test_formula_counts_with_symbol(deployer):
    passed, _ = checks.formula_counts(
        deployer, 'elliptic', {'D': 1}, p=3, bound=1)
    assert passed


def test_elliptic_index_square_matches_w1_only(deployer):
    passed, detail = checks.elliptic_index_square(deployer, p=3)
    assert passed
    assert detail['points'] == 4
    assert detail['counts'] == [1, 13, 130]
    assert detail['w1'] == [1, 13, 130]
    assert detail['formula'] == [1, 13, 134]


def test_elliptic_index_square_at_five(deployer):
    passed, detail = checks.elliptic_index_square(deployer, p=5)
    assert passed
    assert detail['counts'] == [1, 31, 806]
    assert detail['formula'][2] - detail['counts'][2] == 8


def test_free_module_totals():
    passed, detail = checks.free_module_totals(n=3, p=2, bound=3)
    assert passed
    assert [row['formula'] for row in detail['totals']] == [1, 7, 35, 155]


def test_submodule_translation(deployer):
    passed, _ = checks.submodule_translation(
        deployer, builtin_rep('d4'), p=2, bound=2)
    assert passed


def test_delta_invariants(deployer):
    passed, detail = checks.delta_invariants(
        deployer, builtin_rep('heisenberg'), p=2, bound=2, n_random=10)
    assert passed, detail
    assert detail['checked'] == 43 + 10


def test_delta_invariants_reject_inhomogeneous(deployer):
    passed, detail = checks.delta_invariants(
        deployer, builtin_rep('fil4'), p=2, bound=1, n_random=0)
    assert not passed
    assert 'inhomogeneous' in detail


def test_stanley_checks(deployer):
    poset = POSET_CATALOG['zigzag']
    assert checks.stanley_triple(deployer, poset, bound=4)[0]
    assert checks.stanley_reciprocity_iff_delta(poset)[0]
    assert checks.delta_calibration(poset)[0]
    assert checks.stanley_reciprocity_iff_delta(
        POSET_CATALOG['non_delta'])[0]


def test_combinatorial_identities():
    assert checks.multinomial_agreement(4)[0]
    assert checks.coxeter_identities(4)[0]
    assert checks.macmahon_identities(3, 8)[0]
    assert checks.elliptic_inversions() == (
        True, {'w1': [1, 6, [9]], 'w2': [1, 7, [9]]})


def test_corollaries():
    assert checks.corollary_agrees('free_nilpotent', d=4)[0]
    assert checks.corollary_agrees('amalgam', c=2, r1=2, r2=0)[0]


def test_homogeneity_is():
    assert checks.homogeneity_is(builtin_rep('fil4'), False)[0]
    assert not checks.homogeneity_is(builtin_rep('m4'), False)[0]


def test_verifier_groups(deployer):
    verifier = Verifier(deployer=deployer, fast=True)
    assert verifier.n_groups == 7
    group = verifier.run_group(6)
    assert group['title'] == 'combinatorics'
    assert group['passed']
    assert all(check['passed'] for check in group['checks'])


def test_verifier_homogeneity_group(deployer):
    group = Verifier(deployer=deployer, fast=True).run_group(7)
    assert group['passed']
    assert any(c['check'] == 'fil4' for c in group['checks'])


def test_failing_check_is_reported(deployer):
    verifier = Verifier(deployer=deployer, fast=True)

    def broken():
        raise ValueError('bad input')

    result = verifier._run_check('broken', broken)
    assert result['passed'] is False
    assert result['detail'] == {'error': 'bad input'}


def test_delta_check_bounds(deployer):
    full = [label for label, _ in
            Verifier(deployer=deployer).delta_checks()]
    fast = [label for label, _ in
            Verifier(deployer=deployer, fast=True).delta_checks()]
    assert 'm4 at p=2, E=3' in full
    assert 'm4 at p=2, E=1' in fast


def test_elliptic_brute_force_runs_against_w1(deployer):
    labels = [label for label, _ in
              Verifier(deployer=deployer, fast=True).brute_force_checks()]
    assert [label for label in labels if 'elliptic' in label] == [
        'elliptic (D=1) at p=3, E=2 against W1',
        'elliptic (D=1) at p=5, E=2 against W1']
