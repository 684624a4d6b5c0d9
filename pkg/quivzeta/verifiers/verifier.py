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
import time
from functools import partial

from ..formulas import FORMULA_CATALOG, builtin_formula
from ..posets import POSET_CATALOG, delta_chain, hasse_rep, stanley_gf
from ..quivers import builtin_rep
from . import checks


def _label(params):
    if not params:
        return ''
    return ' (' + ', '.join(f'{k}={v}' for k, v in params.items()) + ')'


class Verifier:
    """Runs the acceptance groups in a fixed order; `fast` shrinks every
    bound so the whole run stays at desk scale."""
    def __init__(self, deployer, fast=False):
        self._deployer = deployer
        self._fast = fast
        self._groups = [
            ('brute force against closed forms', self.brute_force_checks),
            ('functional equations', self.funeq_checks),
            ('P-partitions and Stanley reciprocity', self.stanley_checks),
            ('enumeration self-checks', self.enumeration_checks),
            ('delta invariants', self.delta_checks),
            ('combinatorics', self.combinatorics_checks),
            ('homogeneity classification', self.homogeneity_checks),
        ]

    def _bound(self, full, fast):
        return fast if self._fast else full

    def brute_force_checks(self):
        cases = [('heisenberg', {}, p, self._bound(4, 3)) for p in (2, 3)]
        cases += [('graded_heisenberg', {}, p, self._bound(5, 3))
                  for p in (2, 3)]
        cases += [('star_thin', {'a': a}, p, self._bound(8, 5))
                  for a in range(1, self._bound(6, 4)) for p in (2, 3)]
        cases += [('star_v2', {'a': a}, p, self._bound(5, 3))
                  for a in range(1, 4) for p in (2, 3)]
        cases += [('dual_star', {'m': m, 'a': a}, p, self._bound(5, 3))
                  for m in (1, 2) for a in (1, 2, 3) for p in (2, 3)]
        cases += [('d4', {}, p, self._bound(6, 4)) for p in (2, 3)]
        for q_mod_4 in (1, 3):
            p = FORMULA_CATALOG['kron2'].applicable_primes(q_mod_4=q_mod_4)[0]
            cases.append(
                ('kron2', {'q_mod_4': q_mod_4}, p, self._bound(5, 3)))
        results = [(f'{name}{_label(params)} at p={p}, E={e}',
                    partial(checks.formula_counts, deployer=self._deployer,
                            name=name, params=params, p=p, bound=e))
                   for name, params, p, e in cases]
        # W2 contributes nothing at t^2; see DESIGN.md
        results += [(f'elliptic (D=1) at p={p}, E=2 against W1',
                     partial(checks.elliptic_index_square,
                             deployer=self._deployer, p=p))
                    for p in (3, 5)]
        return results

    def funeq_checks(self):
        cases = [(f'free n={n}', builtin_formula('free', n=n),
                  builtin_rep('free', n=n), 'univariate')
                 for n in range(1, 6)]
        cases.append(('heisenberg', builtin_formula('heisenberg'),
                      builtin_rep('heisenberg'), 'univariate'))
        for mode in ('multivariate', 'univariate'):
            cases.append((f'graded_heisenberg ({mode})',
                          builtin_formula('graded_heisenberg'),
                          builtin_rep('graded_heisenberg'), mode))
        cases += [(f'dual_star m={m}, a={a}',
                   builtin_formula('dual_star', m=m, a=a),
                   builtin_rep('dual_star', m=m, a=a), 'univariate')
                  for m in range(1, 4) for a in range(1, 5)]
        cases += [(f'star_thin a={a}', builtin_formula('star_thin', a=a),
                   builtin_rep('star', m=1, a=a), 'univariate')
                  for a in range(1, 8)]
        cases += [(f'star_v2 a={a}', builtin_formula('star_v2', a=a),
                   builtin_rep('star', m=2, a=a), 'univariate')
                  for a in range(1, 5)]
        cases.append(('d4', builtin_formula('d4'), builtin_rep('d4'),
                      'univariate'))
        cases += [(f'kron2 q = {r} mod 4', builtin_formula('kron2', q_mod_4=r),
                   builtin_rep('kron2'), 'univariate') for r in (1, 3)]
        cases.append(('elliptic', builtin_formula('elliptic'),
                      builtin_rep('elliptic'), 'univariate'))

        results = [(label, partial(checks.funeq_holds, fn=fn, rep=rep,
                                   mode=mode))
                   for label, fn, rep, mode in cases]
        witness = POSET_CATALOG['non_delta']
        results.append((
            'non-delta-chain poset fails',
            partial(checks.funeq_holds, fn=stanley_gf(witness),
                    rep=hasse_rep(witness), expect_holds=False)))
        results += [(f'corollary free_nilpotent d={d}',
                     partial(checks.corollary_agrees, 'free_nilpotent', d=d))
                    for d in range(2, 5)]
        results += [(f'corollary amalgam c={c}, r1={r1}, r2={r2}',
                     partial(checks.corollary_agrees, 'amalgam',
                             c=c, r1=r1, r2=r2))
                    for c, r1, r2 in ((2, 1, 0), (2, 1, 1), (2, 2, 0),
                                      (3, 1, 0))]
        return results

    def stanley_checks(self):
        bound = self._bound(10, 6)
        results = []
        for name, poset in POSET_CATALOG.items():
            results.append((f'{name}: triple agreement', partial(
                checks.stanley_triple, deployer=self._deployer,
                poset=poset, bound=bound)))
            results.append((f'{name}: reciprocity iff delta-chain', partial(
                checks.stanley_reciprocity_iff_delta, poset)))
            if delta_chain(poset)[0]:
                results.append((f'{name}: delta calibration', partial(
                    checks.delta_calibration, poset)))
        return results

    def enumeration_checks(self):
        bound = self._bound(5, 3)
        results = [(f'free module n={n}, p={p}', partial(
                        checks.free_module_totals, n=n, p=p, bound=bound))
                   for n in range(1, 5) for p in (2, 3)]
        for name, params in (('graded_heisenberg', {}),
                             ('star', {'m': 1, 'a': 3}),
                             ('d4', {})):
            results.append((f'submodule instance of {name}', partial(
                checks.submodule_translation, deployer=self._deployer,
                rep=builtin_rep(name, **params), p=2,
                bound=self._bound(3, 2))))
        return results

    def delta_checks(self):
        n_random = self._bound(1000, 50)
        cases = (('heisenberg', self._bound(4, 2)),
                 ('graded_heisenberg', self._bound(4, 2)),
                 ('m4', self._bound(3, 1)))
        return [(f'{name} at p=2, E={e}', partial(
                    checks.delta_invariants, deployer=self._deployer,
                    rep=builtin_rep(name), p=2, bound=e, n_random=n_random))
                for name, e in cases]

    def combinatorics_checks(self):
        return [
            ('X-multinomials n <= 6',
             partial(checks.multinomial_agreement, 6)),
            ('Coxeter identities n <= 6',
             partial(checks.coxeter_identities, 6)),
            ('MacMahon identity a <= 5', partial(
                checks.macmahon_identities, 5, self._bound(12, 8))),
            ('elliptic inversions', checks.elliptic_inversions),
        ]

    def homogeneity_checks(self):
        cases = [('graded_heisenberg', builtin_rep('graded_heisenberg'),
                  True),
                 ('graded_m4', builtin_rep('graded_m4'), True),
                 ('fil4', builtin_rep('fil4'), False)]
        cases += [(f'free_nilpotent d={d}',
                   builtin_rep('free_nilpotent', c=2, d=d), True)
                  for d in range(2, 5)]
        cases += [(f'amalgam {partition}',
                   builtin_rep('amalgam', partition=partition), True)
                  for partition in ((2,), (2, 1), (2, 2), (3, 1), (3, 3, 1))]
        cases += [(f'hasse {name}', hasse_rep(poset), delta_chain(poset)[0])
                  for name, poset in POSET_CATALOG.items()]
        return [(label, partial(checks.homogeneity_is, rep, expected))
                for label, rep, expected in cases]

    def _run_check(self, label, check):
        start = time.perf_counter()
        try:
            passed, detail = check()
        except ValueError as err:
            passed, detail = False, {'error': str(err)}
        seconds = time.perf_counter() - start
        self._deployer.log_info(
            f'[{"PASS" if passed else "FAIL"}] {label} ({seconds:.2f}s)')
        return {'check': label, 'passed': passed,
                'seconds': round(seconds, 3), 'detail': detail}

    def run_group(self, group_idx):
        title, build = self._groups[group_idx - 1]
        self._deployer.log_info(
            f'fast = {self._fast}', title=f'Group {group_idx}: {title}')
        results = [self._run_check(label, check) for label, check in build()]
        return {'group': group_idx,
                'title': title,
                'passed': all(r['passed'] for r in results),
                'checks': results}

    def run_all(self, report_path=None):
        groups = [self.run_group(k) for k in range(1, len(self._groups) + 1)]
        report = {'seed': self._deployer.seed,
                  'fast': self._fast,
                  'passed': all(g['passed'] for g in groups),
                  'groups': groups}

        summary = '\n'.join(
            f'{g["group"]}. {g["title"]}: '
            f'{sum(c["passed"] for c in g["checks"])}/{len(g["checks"])}'
            for g in groups)
        self._deployer.log_info(summary, title='Verification summary')
        self._deployer.save_outputs(outputs=report, desc='verify')
        if report_path is not None:
            with open(report_path, 'w') as f:
                json.dump(report, f, indent=4)
            self._deployer.log_info(f'Report saved into {report_path}.')
        return report

    @property
    def fast(self):
        return self._fast

    @property
    def n_groups(self):
        return len(self._groups)
