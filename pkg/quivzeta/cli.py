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

"""Command-line entry point: counting runs, the formula catalog,
functional-equation reports, poset experiments and the acceptance suite."""
import argparse
import json
import sys

from .arith import render, series_expand
from .deployers import DEFAULT_MAX_CANDIDATES, Deployer
from .formulas import FORMULA_CATALOG, builtin_formula, formula_rep, get_entry
from .funeq import predicted_symmetry, verify_funeq
from .lattices import count_subreps
from .posets import (
    POSET_CATALOG,
    Poset,
    delta_chain,
    hasse_rep,
    linear_extensions,
    ppartition_count,
    stanley_gf)
from .quivers import (
    builtin_rep,
    check_homogeneity,
    cocentral_grading,
    load_generators,
    load_grading,
    load_representation,
    nilpotency_class)
from .verifiers import Verifier


def parse_params(items):
    """k=v pairs; integer values, comma lists as integer tuples."""
    params = {}
    for item in items or []:
        if '=' not in item:
            raise ValueError(f'Parameter {item!r} must look like key=value.')
        key, value = item.split('=', 1)
        try:
            if ',' in value:
                params[key] = tuple(int(x) for x in value.split(',') if x)
            else:
                params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def _deployer(args):
    return Deployer(
        seed=getattr(args, 'seed', 0),
        n_workers=getattr(args, 'workers', None),
        verbose=not args.quiet,
        workdir=getattr(args, 'workdir', None),
        max_candidates=getattr(args, 'max_candidates', DEFAULT_MAX_CANDIDATES))


def _load_rep(args):
    if args.rep is not None:
        return load_representation(args.rep)
    if args.builtin is not None:
        return builtin_rep(args.builtin, **parse_params(args.params))
    raise ValueError('Pass --rep FILE or --builtin NAME.')


def _dump(data, path):
    if path is not None:
        with open(path, 'w') as f:
            json.dump(data, f, indent=4)


def _ratio_text(ratio):
    if ratio is None:
        return 'not a monomial'
    sign, q_exp, t_exps = ratio
    return f'{"-" if sign < 0 else "+"}q^{q_exp} t^{list(t_exps)}'


def run_count(args):
    deployer = _deployer(args)
    rep = _load_rep(args)
    mode = 'multivariate' if args.multivariate else 'univariate'
    table = count_subreps(
        rep=rep, p=args.prime, bound=args.max_exp, mode=mode,
        deployer=deployer, accelerate=args.accelerate)

    print(f'# {rep.name or "representation"}, p = {args.prime}, '
          f'seed = {deployer.seed}')
    for key, value in table.counts.items():
        print(f'{key}\t{value}')
    _dump({'seed': deployer.seed, **table.to_dict()}, args.json)
    return 0


def run_formula(args):
    if args.list:
        for name, entry in FORMULA_CATALOG.items():
            print(f'{name}\t{entry.defaults}\t{entry.description}')
        return 0
    if args.name is None:
        raise ValueError('Pass --name NAME or --list.')

    entry = get_entry(args.name)
    params = entry.params(**parse_params(args.params))
    fn = builtin_formula(args.name, **params)
    output = {'name': args.name, 'params': params, 'formula': render(fn)}
    print(render(fn))

    if args.series is not None:
        series = series_expand(fn, args.series)
        if args.at_q is not None:
            series = series.evaluate(
                q=args.at_q, symbols=entry.symbols_at(args.at_q, **params))
            output['q'] = args.at_q
        output['series'] = series.to_dict()
        for key, value in output['series'].items():
            print(f'{key}\t{value}')
    _dump(output, args.json)
    return 0


def run_funeq(args):
    params = parse_params(args.params)
    formula = args.formula
    from_catalog = args.builtin in FORMULA_CATALOG and args.rep is None
    if from_catalog and formula is None:
        formula = args.builtin
        rep = formula_rep(formula, **params)
        formula_params = params
    else:
        rep = _load_rep(args)
        formula_params = parse_params(args.formula_params)

    grading = load_grading(args.grading) if args.grading else None
    symmetry = predicted_symmetry(rep, grading=grading)
    print(f'predicted: {_ratio_text(symmetry.as_ratio())} '
          f'(univariate t^{symmetry.t_exponent})')
    if formula is None:
        _dump({'predicted': symmetry.to_dict()}, args.json)
        return 0

    fn = builtin_formula(formula, **formula_params)
    report = verify_funeq(fn, symmetry, mode=args.mode)
    print(f'observed:  {_ratio_text(report.observed)}')
    print(f'holds:     {report.holds}')
    if report.residual is not None:
        print(f'residual:  {report.residual}')
    _dump(report.to_dict(), args.json)
    return 0 if report.holds else 1


def _load_poset(args):
    if args.poset is not None:
        return Poset.load(args.poset)
    if args.catalog is not None:
        if args.catalog not in POSET_CATALOG:
            raise ValueError(
                f'Unknown poset {args.catalog!r}; available: '
                f'{sorted(POSET_CATALOG)}.')
        return POSET_CATALOG[args.catalog]
    raise ValueError('Pass --poset FILE or --catalog NAME.')


def run_ppart(args):
    poset = _load_poset(args)
    output = {'poset': poset.to_dict(),
              'linear_extensions': len(linear_extensions(poset))}
    print(f'n = {poset.n}, covers = {list(poset.covers)}, '
          f'{output["linear_extensions"]} linear extensions')
    if poset.relabeling is not None:
        print(f'relabeled as {list(poset.relabeling)}')

    if args.gf:
        output['stanley_gf'] = render(stanley_gf(poset))
        print(f'G_P(X) = {output["stanley_gf"]}')
    if args.check_delta:
        holds, delta = delta_chain(poset)
        output['delta_chain'] = {'holds': holds, 'delta': delta}
        suffix = f', delta = {delta}' if holds else ''
        print(f'delta-chain: {holds}{suffix}')

    passed = True
    if args.verify_quiver:
        direct = [ppartition_count(poset, m) for m in range(args.bound + 1)]
        counts = count_subreps(
            rep=hasse_rep(poset), p=args.prime, bound=args.bound,
            deployer=_deployer(args)).as_list()
        passed = counts == direct
        output['verify_quiver'] = {
            'prime': args.prime, 'ppartitions': direct, 'quiver': counts,
            'passed': passed}
        print(f'P-partitions: {direct}')
        print(f'quiver (p = {args.prime}): {counts}')
        print(f'agree: {passed}')
    _dump(output, args.json)
    return 0 if passed else 1


def run_homog(args):
    rep = _load_rep(args)
    grading = load_grading(args.grading) if args.grading \
        else cocentral_grading(rep)
    generators = load_generators(args.generators) if args.generators \
        else None
    holds, witness = check_homogeneity(rep, grading, generators=generators)
    output = {'rep': rep.name,
              'nilpotency_class': nilpotency_class(rep),
              'homogeneous': holds,
              'witness': None if witness is None else list(witness),
              'grading': grading.to_dict()}
    print(f'nilpotency class: {output["nilpotency_class"]}')
    print(f'homogeneous: {holds}')
    if witness is not None:
        k, t, h, i, j = witness
        print(f'generator {k} maps layer {i} of {t} into layer {j} of {h}')
    _dump(output, args.json)
    return 0


def run_verify_all(args):
    verifier = Verifier(deployer=_deployer(args), fast=args.fast)
    report = verifier.run_all(report_path=args.report)
    return 0 if report['passed'] else 1


def _add_rep_args(parser):
    parser.add_argument('--rep', help='representation JSON file')
    parser.add_argument('--builtin', help='builtin representation name')
    parser.add_argument('--params', nargs='*', metavar='KEY=VALUE')


def _add_runtime_args(parser):
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--workers', type=int, default=None)
    parser.add_argument('--max-candidates', type=int,
                        default=DEFAULT_MAX_CANDIDATES)
    parser.add_argument('--workdir', default=None)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='quivzeta', description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--quiet', action='store_true',
                        help='only print results')
    subparsers = parser.add_subparsers(dest='command', required=True)

    count = subparsers.add_parser('count', help='brute-force counting')
    _add_rep_args(count)
    _add_runtime_args(count)
    count.add_argument('--prime', type=int, required=True)
    count.add_argument('--max-exp', type=int, required=True)
    count.add_argument('--multivariate', action='store_true')
    count.add_argument('--accelerate', action='store_true')
    count.add_argument('--json', metavar='OUT')
    count.set_defaults(func=run_count)

    formula = subparsers.add_parser('formula', help='closed-form catalog')
    formula.add_argument('--list', action='store_true')
    formula.add_argument('--name')
    formula.add_argument('--params', nargs='*', metavar='KEY=VALUE')
    formula.add_argument('--series', type=int, metavar='B')
    formula.add_argument('--at-q', type=int, metavar='P')
    formula.add_argument('--json', metavar='OUT')
    formula.set_defaults(func=run_formula)

    funeq = subparsers.add_parser('funeq', help='functional equations')
    _add_rep_args(funeq)
    funeq.add_argument('--formula')
    funeq.add_argument('--formula-params', nargs='*', metavar='KEY=VALUE')
    funeq.add_argument('--grading')
    funeq.add_argument('--mode', default='univariate',
                       choices=('univariate', 'multivariate'))
    funeq.add_argument('--json', metavar='OUT')
    funeq.set_defaults(func=run_funeq)

    ppart = subparsers.add_parser('ppart', help='poset experiments')
    ppart.add_argument('--poset', help='poset JSON file')
    ppart.add_argument('--catalog', help='named catalog poset')
    ppart.add_argument('--gf', action='store_true')
    ppart.add_argument('--check-delta', action='store_true')
    ppart.add_argument('--verify-quiver', action='store_true')
    ppart.add_argument('--prime', type=int, default=2)
    ppart.add_argument('--bound', type=int, default=6)
    ppart.add_argument('--json', metavar='OUT')
    _add_runtime_args(ppart)
    ppart.set_defaults(func=run_ppart)

    homog = subparsers.add_parser('homog', help='homogeneity check')
    _add_rep_args(homog)
    homog.add_argument('--grading')
    homog.add_argument('--generators')
    homog.add_argument('--json', metavar='OUT')
    homog.set_defaults(func=run_homog)

    verify = subparsers.add_parser('verify-all', help='acceptance suite')
    verify.add_argument('--fast', action='store_true')
    verify.add_argument('--report', metavar='OUT.json')
    _add_runtime_args(verify)
    verify.set_defaults(func=run_verify_all)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print(f'error: {err}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
