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

import pytest

from quivzeta.quivers import (
    Arrow,
    Quiver,
    algebra_closure,
    builtin_rep,
    centralizer_series,
    check_homogeneity,
    cocentral_grading,
    delta_shift_exponents,
    load_representation,
    make_representation,
    nilpotency_class,
    parse_representation,
    to_submodule_instance,
    validate_grading)
from quivzeta.quivers.matrix_utils import min_valuation, valuation

JORDAN_3 = ((0, 1, 0), (0, 0, 1), (0, 0, 0))


def loop(matrix):
    return make_representation(
        ranks=[('v1', len(matrix))],
        arrows=[('a', 'v1', 'v1', matrix)],
        name='loop')


@pytest.mark.parametrize('name,params,expected', [
    ('free', {'n': 3}, 1),
    ('heisenberg', {}, 2),
    ('graded_heisenberg', {}, 2),
    ('fil4', {}, 4),
    ('m4', {}, 4),
    ('graded_fil4', {}, 4),
])
def test_nilpotency_class(name, params, expected):
    assert nilpotency_class(builtin_rep(name, **params)) == expected


def test_non_nilpotent_loop_has_no_class():
    rep = loop(((1,),))
    assert nilpotency_class(rep) is None
    with pytest.raises(ValueError):
        centralizer_series(rep)


def test_zero_representation_has_class_zero():
    rep = make_representation(ranks=[('v1', 0)], arrows=[])
    assert nilpotency_class(rep) == 0
    grading = cocentral_grading(rep)
    assert grading.c == 0
    assert grading.layer_ranks == {'v1': ()}


def test_heisenberg_centralizer_series():
    series = centralizer_series(builtin_rep('heisenberg'))
    assert series.c == 2
    assert series.coranks('v1') == (3, 2, 0)
    assert len(series.bases[1]['v1']) == 1
    assert set(series.bases[1]['v1'][0]) <= {-1, 0, 1}
    assert series.bases[1]['v1'][0][2] != 0


def test_graded_heisenberg_centralizer_series():
    series = centralizer_series(builtin_rep('graded_heisenberg'))
    assert series.coranks('v1') == (2, 2, 0)
    assert series.coranks('v2') == (1, 0, 0)


def test_cocentral_grading_layers():
    rep = builtin_rep('heisenberg')
    grading = cocentral_grading(rep)
    assert grading.c == 2
    assert grading.layer_ranks == {'v1': (2, 1)}
    assert grading.delta_exponents('v1') == (1, 1, 0)
    assert grading.bases['v1'] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    validate_grading(rep, grading)

    grading = cocentral_grading(builtin_rep('graded_heisenberg'))
    assert grading.layer_ranks == {'v1': (2, 0), 'v2': (0, 1)}


def test_validate_grading_rejects_wrong_layers():
    rep = builtin_rep('heisenberg')
    grading = cocentral_grading(rep)
    broken = type(grading)(
        c=grading.c, layer_ranks={'v1': (1, 2)}, bases=grading.bases)
    with pytest.raises(ValueError):
        validate_grading(rep, broken)


@pytest.mark.parametrize('name,expected', [
    ('heisenberg', True),
    ('graded_heisenberg', True),
    ('m4', True),
    ('graded_m4', True),
    ('graded_fil4', False),
    ('fil4', False),
])
def test_homogeneity_of_builtins(name, expected):
    rep = builtin_rep(name)
    homogeneous, witness = check_homogeneity(rep, cocentral_grading(rep))
    assert homogeneous is expected
    assert (witness is None) is expected


def test_delta_shift_exponents_of_homogeneous_rep():
    rep = builtin_rep('graded_heisenberg')
    assert delta_shift_exponents(rep, cocentral_grading(rep)) == {1}


def test_homogeneity_rejects_foreign_generators():
    rep = builtin_rep('heisenberg')
    with pytest.raises(ValueError):
        check_homogeneity(rep, cocentral_grading(rep), generators=[JORDAN_3])


def test_algebra_closure_ranks():
    assert algebra_closure([JORDAN_3]).rank == 2
    assert algebra_closure([], n=3).rank == 0
    rep = builtin_rep('heisenberg')
    generators = [rep.matrix('f1'), rep.matrix('f2')]
    assert algebra_closure(generators).rank == 2


def test_algebra_closure_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        algebra_closure([((1, 0), (0, 0))])


def test_submodule_instance_operators():
    assert len(to_submodule_instance(builtin_rep('free', n=1))) == 1
    assert len(to_submodule_instance(builtin_rep('star', m=1, a=2))) == 3
    operators = to_submodule_instance(builtin_rep('heisenberg'))
    assert len(operators) == 3
    assert operators[-1] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_zero_paths():
    rep = builtin_rep('heisenberg')
    assert not rep.zero_paths(1)
    assert rep.zero_paths(2)
    assert len(rep.quiver.paths(2)) == 4


def test_quiver_rejects_unknown_endpoint():
    with pytest.raises(ValueError):
        Quiver(vertices=('v1',), arrows=(Arrow(id='a', tail='v1', head='v2'),))


def test_representation_rejects_bad_shape():
    with pytest.raises(ValueError):
        make_representation(
            ranks=[('v1', 2), ('v2', 1)],
            arrows=[('a', 'v1', 'v2', ((1, 0),))])


@pytest.mark.parametrize('name,params', [
    ('free_nilpotent', {'c': 3, 'd': 2}),
    ('elliptic', {'D': 0}),
    ('star', {'m': 1, 'a': 0}),
    ('amalgam', {'partition': ()}),
    ('nope', {}),
    ('heisenberg', {'x': 1}),
])
def test_builtin_rep_rejects_bad_requests(name, params):
    with pytest.raises(ValueError):
        builtin_rep(name, **params)


def test_free_nilpotent_and_amalgam_ranks():
    assert builtin_rep('free_nilpotent', c=2, d=3).ranks == \
        {'v1': 3, 'v2': 3}
    assert builtin_rep('amalgam', partition=(3, 1)).ranks == \
        {'v1': 3, 'v2': 1, 'v3': 1}


def test_parse_representation_collects_errors():
    data = {
        'vertices': [{'id': 'v1', 'rank': -1}, {'id': 'v2', 'rank': 1}],
        'arrows': [{'id': 'a', 'tail': 'v2', 'head': 'v3',
                    'matrix': [[1]]}]}
    with pytest.raises(ValueError) as err:
        parse_representation(data)
    assert 'rank' in str(err.value)
    assert 'v3' in str(err.value)


def test_load_representation_from_file(tmp_path):
    rep = builtin_rep('d4')
    path = tmp_path / 'd4.json'
    path.write_text(json.dumps(rep.to_dict()))
    loaded = load_representation(str(path))
    assert loaded.ranks == rep.ranks
    assert loaded.to_dict() == rep.to_dict()


@pytest.mark.parametrize('x,p,expected', [
    (24, 2, 3), (-18, 3, 2), (7, 2, 0), (125, 5, 3), (0, 5, None)])
def test_valuation(x, p, expected):
    assert valuation(x, p) == expected


def test_min_valuation_skips_zero_entries():
    assert min_valuation([0, 12, -8], 2) == 2
    assert min_valuation([0, 0], 3) is None
