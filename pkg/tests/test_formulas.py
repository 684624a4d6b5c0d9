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


from itertools import combinations, product

import pytest

from quivzeta.arith import parse_rational, render, series_expand
from quivzeta.formulas import (
    FORMULA_CATALOG,
    brute_subgroups,
    builtin_formula,
    corollary_rep,
    corollary_symmetry,
    dual_star_nested,
    elliptic_point_count,
    elliptic_w1,
    formula_rep,
    get_entry,
    iso_exponent,
    kronecker1,
    kronecker1_local,
    macmahon_identity_check,
    star_thin,
    star_v2a_series,
    subgroup_zeta_two_part,
    zeta_free_local)
from quivzeta.funeq import predicted_symmetry
from quivzeta.lattices import count_subreps
from quivzeta.quivers import builtin_rep


def integer_counts(fn, p, bound):
    series = series_expand(fn, bound).evaluate(q=p)
    return [int(series.coefficient((e,))) for e in range(bound + 1)]


def test_free_module_zeta():
    assert zeta_free_local(0) == 1
    assert render(zeta_free_local(1)) == '1/(1-t)'
    assert zeta_free_local(3) == \
        parse_rational('1/((1-t)*(1-q*t)*(1-q^2*t))')
    with pytest.raises(ValueError):
        zeta_free_local(-1)


def test_heisenberg_formulas():
    assert builtin_formula('heisenberg') == \
        parse_rational('1/((1-t)*(1-q*t)*(1-q^2*t^3))')
    assert builtin_formula('graded_heisenberg') == \
        parse_rational('1/((1-t1)*(1-q*t1)*(1-t1^2*t2))')


def test_star_thin():
    assert star_thin(1) == parse_rational('1/(1-t)')
    assert star_thin(2) == parse_rational('1/((1-t)*(1-t^2))')
    assert render(star_thin(3)) == '(1+t^2)/((1-t)(1-t^2)(1-t^3))'
    with pytest.raises(ValueError):
        star_thin(0)


@pytest.mark.parametrize('a,bound', [(1, 10), (2, 10), (5, 12)])
def test_macmahon_identity(a, bound):
    assert macmahon_identity_check(a, bound)


def test_subgroup_zeta_examples():
    assert subgroup_zeta_two_part(1, 0) == \
        parse_rational('1+t').numerator
    assert subgroup_zeta_two_part(1, 1) == \
        parse_rational('1+(1+q)*t+t^2').numerator
    with pytest.raises(ValueError):
        subgroup_zeta_two_part(1, 2)


@pytest.mark.parametrize('p,lambda_1,lambda_2', [
    (2, 1, 0), (2, 1, 1), (2, 2, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2),
])
def test_subgroup_zeta_against_brute_force(p, lambda_1, lambda_2):
    expected = {}
    for (q_exp, t_exp), coeff in \
            subgroup_zeta_two_part(lambda_1, lambda_2).items():
        expected[t_exp] = expected.get(t_exp, 0) + int(coeff) * p ** q_exp
    assert brute_subgroups(p, lambda_1, lambda_2) == dict(sorted(
        expected.items()))


@pytest.mark.parametrize('a', [1, 2, 3, 4])
def test_star_v2_series_matches_closed_form(a):
    assert star_v2a_series(a, 6) == \
        series_expand(builtin_formula('star_v2', a=a), 6)


def test_star_v2_closed_form_limit():
    with pytest.raises(ValueError):
        builtin_formula('star_v2', a=5)


@pytest.mark.parametrize('m,a,p', [(1, 2, 2), (1, 3, 3), (2, 2, 2),
                                   (2, 3, 2)])
def test_dual_star_nested_sum(m, a, p):
    bound = 5
    assert series_expand(builtin_formula('dual_star', m=m, a=a),
                         bound).evaluate(q=p) == \
        dual_star_nested(m, a, p, bound)


@pytest.mark.parametrize('matrix,p,expected', [
    (((1, 0), (0, 1)), 2, (2, 0)),
    (((4, 0), (0, 0)), 2, (1, 2)),
    (((0, 0), (0, 0)), 3, (0, 0)),
    (((3,),), 3, (1, 1)),
    (((3,),), 2, (1, 0)),
])
def test_iso_exponent(matrix, p, expected):
    assert iso_exponent(matrix, p) == expected


def test_kronecker1_local():
    assert kronecker1_local(1, 1, 1, 0) == \
        parse_rational('1/((1-t)*(1-t^2))')
    assert kronecker1_local(1, 1, 0, 0) == parse_rational('1/(1-t)^2')
    assert kronecker1_local(0, 0, 0, 2) == parse_rational('t^2')
    with pytest.raises(ValueError):
        kronecker1_local(1, 1, 2, 0)


@pytest.mark.parametrize('matrix', [
    ((1,),), ((0,),), ((1, 0), (0, 1)), ((1,), (0,)), ((0, 0),)])
def test_kronecker1_against_brute_force(matrix):
    rep = builtin_rep('kronecker', matrices=[matrix])
    bound = 5
    assert count_subreps(rep, p=2, bound=bound).as_list() == \
        integer_counts(kronecker1(matrix, 2), 2, bound)


@pytest.mark.parametrize('D,p,expected', [(1, 3, 4), (1, 5, 8), (1, 7, 8)])
def test_elliptic_point_count(D, p, expected):
    assert elliptic_point_count(D, p) == expected


@pytest.mark.parametrize('D,p', [(1, 2), (3, 3), (1, 9)])
def test_elliptic_point_count_rejects_bad_primes(D, p):
    with pytest.raises(ValueError):
        elliptic_point_count(D, p)


def test_elliptic_formula_uses_point_count():
    entry = get_entry('elliptic')
    assert entry.symbols_at(5) == {'E': 8}
    assert entry.applicable_primes() == (3, 5)
    fn = builtin_formula('elliptic')
    assert [s.name for s in fn.symbols] == ['E']


@pytest.mark.parametrize('p', [3, 5, 7])
def test_elliptic_slices_never_drop_to_rank_one(p):
    # index (p, p) pairs need every 2 x 2 minor of M(b) to vanish mod p
    rep = builtin_rep('elliptic')
    mats = [rep.matrix(arrow.id) for arrow in rep.arrows]
    for b in product(range(p), repeat=3):
        if not any(b):
            continue
        slice_ = [[sum(m[i][k] * b[k] for k in range(3)) for m in mats]
                  for i in range(3)]
        minors = [slice_[i][j] * slice_[k][l] - slice_[i][l] * slice_[k][j]
                  for i, k in combinations(range(3), 2)
                  for j, l in combinations(range(3), 2)]
        assert any(x % p for x in minors)


def test_elliptic_counts_at_index_p_squared():
    counts = count_subreps(builtin_rep('elliptic'), p=3, bound=2).as_list()
    assert counts == [1, 13, 130]
    assert counts == integer_counts(elliptic_w1(), 3, 2)


@pytest.mark.parametrize('name,params', [
    ('free_nilpotent', {'d': 2}),
    ('free_nilpotent', {'d': 3}),
    ('amalgam', {'c': 2, 'r1': 1}),
    ('amalgam', {'c': 2, 'r1': 1, 'r2': 1}),
    ('amalgam', {'c': 3, 'r1': 1}),
])
def test_corollary_exponents_match_prediction(name, params):
    expected = corollary_symmetry(name, **params)
    predicted = predicted_symmetry(corollary_rep(name, **params))
    assert expected.as_ratio() == predicted.univariate().as_ratio()


def test_corollary_rejects_out_of_range():
    with pytest.raises(ValueError):
        corollary_symmetry('free_nilpotent', d=1)
    with pytest.raises(ValueError):
        corollary_symmetry('amalgam', c=1, r1=1)
    with pytest.raises(ValueError):
        corollary_symmetry('filiform')


def test_catalog_entries():
    assert set(FORMULA_CATALOG) == {
        'free', 'heisenberg', 'graded_heisenberg', 'star_thin', 'star_v2',
        'dual_star', 'd4', 'kron2', 'elliptic', 'kronecker1'}
    assert formula_rep('kronecker1') is None
    assert formula_rep('star_thin', a=2).ranks == {'v1': 1, 'v2': 1}
    with pytest.raises(ValueError):
        get_entry('nope')
    with pytest.raises(ValueError):
        builtin_formula('star_thin', b=2)


@pytest.mark.parametrize('name,params,p,bound', [
    ('heisenberg', {}, 3, 3),
    ('star_thin', {'a': 3}, 2, 5),
    ('star_v2', {'a': 2}, 2, 3),
    ('d4', {}, 2, 4),
    ('kron2', {'q_mod_4': 3}, 3, 3),
])
def test_closed_forms_against_brute_force(name, params, p, bound):
    assert count_subreps(formula_rep(name, **params), p=p, bound=bound,
                         accelerate=True).as_list() == \
        integer_counts(builtin_formula(name, **params), p, bound)
