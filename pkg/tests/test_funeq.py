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


import json
from math import comb

import pytest

from quivzeta.arith import parse_rational
from quivzeta.formulas import builtin_formula
from quivzeta.funeq import SymmetryData, predicted_symmetry, verify_funeq
from quivzeta.posets import POSET_CATALOG, hasse_rep, stanley_gf
from quivzeta.quivers import (
    builtin_rep,
    cocentral_grading,
    make_representation)


def test_heisenberg_prediction():
    symmetry = predicted_symmetry(builtin_rep('heisenberg'))
    assert symmetry.as_ratio() == (-1, 3, (5,))


def test_graded_heisenberg_prediction():
    rep = builtin_rep('graded_heisenberg')
    symmetry = predicted_symmetry(rep)
    assert symmetry.as_ratio() == (-1, 1, (4, 1))
    assert symmetry.vertices == ('v1', 'v2')
    assert symmetry.univariate().as_ratio() == (-1, 1, (5,))
    assert predicted_symmetry(rep, grading=cocentral_grading(rep)) == \
        symmetry


@pytest.mark.parametrize('n', [1, 2, 3, 5])
def test_free_module_prediction(n):
    symmetry = predicted_symmetry(builtin_rep('free', n=n))
    assert symmetry.as_ratio() == ((-1) ** n, comb(n, 2), (n,))


def test_prediction_rejects_non_nilpotent():
    rep = make_representation(
        ranks=[('v1', 1)], arrows=[('a', 'v1', 'v1', ((1,),))])
    with pytest.raises(ValueError):
        predicted_symmetry(rep)


@pytest.mark.parametrize('name,params,rep_name,rep_params,observed', [
    ('heisenberg', {}, 'heisenberg', {}, (-1, 3, (5,))),
    ('d4', {}, 'd4', {}, (-1, 1, (8,))),
    ('kron2', {'q_mod_4': 3}, 'kron2', {}, (1, 2, (6,))),
    ('kron2', {'q_mod_4': 1}, 'kron2', {}, (1, 2, (6,))),
    ('star_thin', {'a': 3}, 'star', {'m': 1, 'a': 3}, (-1, 0, (4,))),
    ('dual_star', {'m': 2, 'a': 3}, 'dual_star', {'m': 2, 'a': 3},
     (1, 3, (10,))),
])
def test_formula_satisfies_predicted_equation(
        name, params, rep_name, rep_params, observed):
    report = verify_funeq(builtin_formula(name, **params),
                          predicted_symmetry(builtin_rep(rep_name,
                                                         **rep_params)))
    assert report.holds
    assert report.observed == observed
    assert report.residual is None


def test_graded_heisenberg_in_both_modes():
    fn = builtin_formula('graded_heisenberg')
    symmetry = predicted_symmetry(builtin_rep('graded_heisenberg'))
    assert verify_funeq(fn, symmetry, mode='multivariate').holds
    assert verify_funeq(fn, symmetry, mode='univariate').holds


def test_elliptic_formula_symmetry():
    report = verify_funeq(builtin_formula('elliptic'),
                          predicted_symmetry(builtin_rep('elliptic')))
    assert report.holds
    assert report.observed == (1, 6, (9,))


def test_non_delta_chain_poset_fails():
    poset = POSET_CATALOG['non_delta']
    report = verify_funeq(stanley_gf(poset),
                          predicted_symmetry(hasse_rep(poset)))
    assert not report.holds
    assert report.observed is None
    assert report.residual


def test_wrong_prediction_reports_residual():
    report = verify_funeq(
        parse_rational('1/(1-t)'),
        SymmetryData(sign=-1, q_exponent=0, t_exponents=(2,)))
    assert not report.holds
    assert report.observed == (-1, 0, (1,))
    assert report.residual


def test_verify_rejects_arity_mismatch():
    with pytest.raises(ValueError):
        verify_funeq(builtin_formula('graded_heisenberg'),
                     SymmetryData(sign=-1, q_exponent=1, t_exponents=(5,)),
                     mode='multivariate')
    with pytest.raises(ValueError):
        verify_funeq(parse_rational('1/(1-t)'),
                     SymmetryData(sign=-1, q_exponent=0, t_exponents=(1,)),
                     mode='bivariate')


def test_report_is_json_ready():
    report = verify_funeq(builtin_formula('heisenberg'),
                          predicted_symmetry(builtin_rep('heisenberg')))
    data = json.loads(json.dumps(report.to_dict()))
    assert data['holds'] is True
    assert data['predicted'] == {'sign': -1, 'q_exponent': 3,
                                 't_exponents': [5], 'vertices': ['v1']}


def test_univariate_keeps_vertices():
    data = predicted_symmetry(builtin_rep('graded_heisenberg')).univariate()
    assert data.as_ratio() == (-1, 1, (5,))
    assert data.to_dict()['vertices'] == ['v1', 'v2']
