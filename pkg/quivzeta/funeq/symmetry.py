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

from dataclasses import dataclass
from math import comb

from ..arith import RationalFn, invert_qt, monomial_ratio, render
from ..arith.poly_utils import monomial
from ..quivers.centralizer import centralizer_series, validate_grading

MODES = ('univariate', 'multivariate')


@dataclass(frozen=True)
class SymmetryData:
    """W(1/q, 1/t) = sign * q^b * prod_v t_v^(c_v) * W(q, t)."""
    sign: int
    q_exponent: int
    t_exponents: tuple
    vertices: tuple = ()

    @property
    def t_exponent(self):
        return sum(self.t_exponents)

    def univariate(self):
        return SymmetryData(
            sign=self.sign,
            q_exponent=self.q_exponent,
            t_exponents=(self.t_exponent,),
            vertices=self.vertices)

    def as_ratio(self):
        return self.sign, self.q_exponent, tuple(self.t_exponents)

    def to_dict(self):
        data = {'sign': self.sign,
                'q_exponent': self.q_exponent,
                't_exponents': list(self.t_exponents)}
        if self.vertices:
            data['vertices'] = list(self.vertices)
        return data


def predicted_symmetry(rep, grading=None, series=None):
    """Sign (-1)^n, b = sum_v C(n_v, 2) and c_v = sum_{i < c} N_{v,i},
    with the coranks N_{v,i} read from the centralizer series or from the
    layer ranks of a grading."""
    if grading is not None:
        validate_grading(rep, grading)
        c = grading.c

        def corank(v, i):
            return rep.rank(v) - sum(grading.layer_ranks[v][c - i:])
    else:
        if series is None:
            series = centralizer_series(rep)
        c = series.c
        corank = series.corank

    return SymmetryData(
        sign=(-1) ** rep.total_rank,
        q_exponent=sum(comb(rep.rank(v), 2) for v in rep.vertices),
        t_exponents=tuple(sum(corank(v, i) for i in range(c))
                          for v in rep.vertices),
        vertices=tuple(rep.vertices))


@dataclass(frozen=True)
class FunEqReport:
    holds: bool
    mode: str
    predicted: SymmetryData
    observed: tuple
    residual: str = None

    def to_dict(self):
        observed = None
        if self.observed is not None:
            sign, q_exp, t_exps = self.observed
            observed = {'sign': sign, 'q_exponent': q_exp,
                        't_exponents': list(t_exps)}
        return {'holds': self.holds,
                'mode': self.mode,
                'predicted': self.predicted.to_dict(),
                'observed': observed,
                'residual': self.residual}


def _residual(inverted, fn, symmetry):
    """inverted / (sign q^b t^c fn) as a plain ratio."""
    inverted, fn = inverted._unify(fn)
    ring = fn.ring
    exps = (symmetry.q_exponent,) + tuple(symmetry.t_exponents)
    pos = tuple(max(e, 0) for e in exps) + (0,) * len(fn.symbols)
    neg = tuple(max(-e, 0) for e in exps) + (0,) * len(fn.symbols)
    return RationalFn(
        numerator=inverted.numerator * fn.denominator * monomial(ring, neg),
        denominator=symmetry.sign * inverted.denominator * fn.numerator *
        monomial(ring, pos),
        n_t=fn.n_t,
        symbols=fn.symbols,
        t_names=fn.t_names)


def verify_funeq(fn, symmetry, mode='univariate'):
    """Exact check of W(1/q, 1/t) against the predicted monomial multiple
    of W; univariate mode specializes both sides to a single t."""
    if mode not in MODES:
        raise ValueError(f'mode must be one of {MODES}, got {mode!r}.')
    if fn.is_zero:
        raise ValueError('verify_funeq needs a nonzero RationalFn.')
    if mode == 'univariate':
        fn = fn.specialize_univariate()
        symmetry = symmetry.univariate()
    elif fn.n_t != len(symmetry.t_exponents):
        raise ValueError(
            f'Formula has {fn.n_t} t-variables but the symmetry data has '
            f'{len(symmetry.t_exponents)} exponents.')

    inverted = invert_qt(fn)
    observed = monomial_ratio(inverted, fn)
    holds = observed == symmetry.as_ratio()
    residual = None
    if not holds:
        residual = render(_residual(inverted, fn, symmetry))
    return FunEqReport(
        holds=holds,
        mode=mode,
        predicted=symmetry,
        observed=observed,
        residual=residual)
