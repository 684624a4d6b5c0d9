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

from quivzeta.cli import main, parse_params


def run(capsys, *argv):
    code = main(['--quiet', *argv])
    return code, capsys.readouterr()


def test_parse_params():
    assert parse_params(['a=3', 'partition=3,1', 'name=x']) == \
        {'a': 3, 'partition': (3, 1), 'name': 'x'}
    assert parse_params(None) == {}
    with pytest.raises(ValueError):
        parse_params(['a'])


def test_count_heisenberg(capsys, tmp_path):
    out = tmp_path / 'counts.json'
    code, captured = run(capsys, 'count', '--builtin', 'heisenberg',
                         '--prime', '2', '--max-exp', '2',
                         '--json', str(out))
    assert code == 0
    assert '2\t7' in captured.out
    data = json.loads(out.read_text())
    assert data['counts'] == {'0': 1, '1': 3, '2': 7}
    assert data['seed'] == 0


def test_count_multivariate_from_file(capsys, tmp_path):
    rep = tmp_path / 'rep.json'
    rep.write_text(json.dumps({
        'vertices': [{'id': 'v1', 'rank': 1}, {'id': 'v2', 'rank': 1}],
        'arrows': [{'id': 'a', 'tail': 'v1', 'head': 'v2',
                    'matrix': [[1]]}]}))
    code, captured = run(capsys, 'count', '--rep', str(rep), '--prime', '3',
                         '--max-exp', '2', '--multivariate')
    assert code == 0
    assert '(1, 1)\t1' in captured.out
    assert '(0, 1)\t0' in captured.out


@pytest.mark.parametrize('argv', [
    ['count', '--rep', 'missing.json', '--prime', '2', '--max-exp', '1'],
    ['count', '--builtin', 'nope', '--prime', '2', '--max-exp', '1'],
    ['count', '--builtin', 'heisenberg', '--prime', '4', '--max-exp', '1'],
    ['count', '--builtin', 'heisenberg', '--prime', '2', '--max-exp', '3',
     '--max-candidates', '5'],
    ['formula', '--name', 'nope'],
    ['ppart', '--catalog', 'nope'],
])
def test_errors_exit_with_two(capsys, argv):
    code, captured = run(capsys, *argv)
    assert code == 2
    assert captured.err.startswith('error:')


def test_malformed_rep_file(capsys, tmp_path):
    rep = tmp_path / 'rep.json'
    rep.write_text('{"vertices": [')
    code, _ = run(capsys, 'homog', '--rep', str(rep))
    assert code == 2


def test_formula_render(capsys):
    code, captured = run(capsys, 'formula', '--name', 'star_thin',
                         '--params', 'a=3')
    assert code == 0
    assert captured.out.splitlines()[0] == \
        '(1+t^2)/((1-t)(1-t^2)(1-t^3))'


def test_formula_series_at_prime(capsys, tmp_path):
    out = tmp_path / 'series.json'
    code, _ = run(capsys, 'formula', '--name', 'heisenberg', '--series', '2',
                  '--at-q', '2', '--json', str(out))
    assert code == 0
    assert json.loads(out.read_text())['series'] == \
        {'0': 1, '1': 3, '2': 7}


def test_formula_list(capsys):
    code, captured = run(capsys, 'formula', '--list')
    assert code == 0
    assert 'kron2' in captured.out


def test_funeq_from_catalog(capsys):
    code, captured = run(capsys, 'funeq', '--builtin', 'd4')
    assert code == 0
    assert 'holds:     True' in captured.out


def test_funeq_prediction_only(capsys, tmp_path):
    out = tmp_path / 'funeq.json'
    code, captured = run(capsys, 'funeq', '--builtin', 'fil4',
                         '--json', str(out))
    assert code == 0
    assert 'predicted' in captured.out
    assert json.loads(out.read_text())['predicted']['sign'] == -1


def test_funeq_mismatch_exits_with_one(capsys):
    code, captured = run(capsys, 'funeq', '--builtin', 'free',
                         '--params', 'n=2', '--formula', 'heisenberg')
    assert code == 1
    assert 'holds:     False' in captured.out


def test_ppart_catalog_poset(capsys):
    code, captured = run(capsys, 'ppart', '--catalog', 'diamond', '--gf',
                         '--check-delta', '--verify-quiver', '--bound', '4')
    assert code == 0
    assert 'delta-chain: True, delta = 8' in captured.out
    assert 'agree: True' in captured.out


def test_ppart_relabels_file_poset(capsys, tmp_path):
    poset = tmp_path / 'poset.json'
    poset.write_text(json.dumps({'n': 3, 'covers': [[3, 1], [3, 2]]}))
    code, captured = run(capsys, 'ppart', '--poset', str(poset),
                         '--check-delta')
    assert code == 0
    assert 'relabeled as [2, 3, 1]' in captured.out


def test_homog(capsys):
    code, captured = run(capsys, 'homog', '--builtin', 'fil4')
    assert code == 0
    assert 'nilpotency class: 4' in captured.out
    assert 'homogeneous: False' in captured.out

    code, captured = run(capsys, 'homog', '--builtin', 'amalgam',
                         '--params', 'partition=3,1')
    assert code == 0
    assert 'homogeneous: True' in captured.out
