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

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from ..arith import PowerSeries, RationalFn, one, parse_rational
from ..arith.poly_utils import make_ring, monomial
from ..funeq import SymmetryData
from ..lattices.enum_utils import count_sublattices, enum_sublattices
from ..quivers import builtin_rep
from .number_utils import elliptic_point_count, iso_exponent
from .star_utils import star_thin

N_2_4 = (
    '1-t+3*t^2+q*t^2-t^3+q^2*t^4-q*t^4+t^4+q*t^5-5*q*t^6+q*t^7-3*q^2*t^7'
    '-2*q^3*t^7-5*q*t^8-2*q^3*t^9+q^2*t^9+2*q*t^9-2*q^4*t^10-q^3*t^10'
    '+2*q^2*t^10+5*q^4*t^11-q^4*t^12+3*q^3*t^12+2*q^2*t^12+5*q^4*t^13'
    '-q^4*t^14-q^5*t^15+q^4*t^15-q^3*t^15+q^5*t^16-q^4*t^17-3*q^5*t^17'
    '+q^5*t^18-q^5*t^19')

STAR_V2_FORMULAS = {
    1: '1/((1-t)*(1-q*t))',
    2: '1/((1-t)*(1-t^2)*(1-q*t)*(1-q*t^2))',
    3: '(1+t^2)*(1-q*t^4)/((1-t)*(1-t^2)*(1-t^3)*(1-q*t)*(1-q*t^2)^2'
       '*(1-q*t^3))',
    4: f'({N_2_4})/((1-t)^2*(1-t^3)*(1-t^4)*(1-q*t)*(1-q*t^2)^2'
       f'*(1-q*t^3)^2*(1-q*t^4)*(1-q^3*t^5))',
}

KRON2_FORMULAS = {
    1: '(1+t^2)*(1-t^3)/((1-t)*(1-t^2)*(1-t^4)*(1-q*t)*(1-q*t^3))',
    3: '(1+t^3)/((1-t)*(1-t^4)*(1-q*t)*(1-q*t^3))',
}

ELLIPTIC_DENOMINATOR = \
    '(1-t)*(1-q*t)*(1-q^2*t)*(1-q^2*t^4)*(1-q^2*t^5)*(1-t^6)'
ELLIPTIC_W1_NUMERATOR = '1+(q+1)*(t^4+t^5)+q*t^9'
ELLIPTIC_W2_NUMERATOR = '(1-t^2)*t^2*(1+q*t^5)'


def zeta_free_local(n, t_power=1):
    """prod_{i < n} 1 / (1 - q^i t^t_power)."""
    if n < 0:
        raise ValueError(f'zeta_free_local needs n >= 0, got {n}.')
    if n == 0:
        return one()
    return RationalFn.from_factors(
        numerator=1, factors=[(i, t_power) for i in range(n)])


def heisenberg():
    return RationalFn.from_factors(
        numerator=1, factors=[(0, 1), (1, 1), (2, 3)])


def graded_heisenberg():
    return RationalFn.from_factors(
        numerator=1,
        factors=[(0, (1, 0)), (1, (1, 0)), (0, (2, 1))],
        n_t=2)


def star_v2(a):
    if a not in STAR_V2_FORMULAS:
        raise ValueError(
            f'Closed forms for V_(2,a) exist for a <= 4, got a={a}; use '
            f'star_v2a_series instead.')
    return parse_rational(STAR_V2_FORMULAS[a])


def dual_star(m, a):
    """zeta_{o^m}(a s) * zeta_{o^m}(s)^(a-1)."""
    if m < 0 or a < 1:
        raise ValueError(
            f'dual_star needs m >= 0 and a >= 1, got m={m}, a={a}.')
    return zeta_free_local(m, t_power=a) * zeta_free_local(m) ** (a - 1)


def d4():
    return parse_rational(
        '(1+2*t^3-2*t^4-t^7)/((1-t)^3*(1-t^3)*(1-t^5)*(1-q*t^4))')


def kron2(q_mod_4):
    if q_mod_4 not in KRON2_FORMULAS:
        raise ValueError(
            f'kron2 has branches for q = 1 and q = 3 mod 4, got {q_mod_4}.')
    return parse_rational(KRON2_FORMULAS[q_mod_4])


def elliptic_w1():
    return parse_rational(
        f'({ELLIPTIC_W1_NUMERATOR})/({ELLIPTIC_DENOMINATOR})')


def elliptic_w2():
    return parse_rational(
        f'({ELLIPTIC_W2_NUMERATOR})/({ELLIPTIC_DENOMINATOR}*(1-q*t^2))')


def elliptic(D=1):
    """W1 + E W2 with E = |E(F_q)| a symbol of inversion weight 1; the
    formula itself does not depend on D. Direct counts agree through index
    p and equal the W1 coefficient at p^2; see DESIGN.md."""
    if D == 0:
        raise ValueError('elliptic needs D != 0.')
    return parse_rational(
        f'(({ELLIPTIC_W1_NUMERATOR})*(1-q*t^2)+E*{ELLIPTIC_W2_NUMERATOR})'
        f'/({ELLIPTIC_DENOMINATOR}*(1-q*t^2))',
        symbols=('E',))


def kronecker1_local(n1, n2, i, m):
    """t^m prod_{j <= i} 1/(1 - q^(j-1) t^2) prod_{i < k <= n2}
    1/(1 - q^(k-1) t) prod_{l <= n1} 1/(1 - q^(l-1) t)."""
    if not 0 <= i <= min(n1, n2) or m < 0:
        raise ValueError(
            f'kronecker1_local needs 0 <= i <= min(n1, n2) and m >= 0, got '
            f'n1={n1}, n2={n2}, i={i}, m={m}.')
    factors = [(j - 1, 2) for j in range(1, i + 1)]
    factors += [(k - 1, 1) for k in range(i + 1, n2 + 1)]
    factors += [(l - 1, 1) for l in range(1, n1 + 1)]
    numerator = monomial(make_ring(n_t=1), (0, m))
    if not factors:
        return RationalFn(numerator=numerator)
    return RationalFn.from_factors(numerator=numerator, factors=factors)


def kronecker1(matrix, p):
    """Local zeta at p of the one-arrow Kronecker representation. Direct
    counts agree when the image is saturated and either zero or of full
    rank in the head; see DESIGN.md for the other cases."""
    matrix = tuple(tuple(row) for row in matrix)
    n1 = len(matrix)
    n2 = len(matrix[0]) if matrix else 0
    i, m = iso_exponent(matrix, p)
    return kronecker1_local(n1=n1, n2=n2, i=i, m=m)


def dual_star_nested(m, a, p, bound):
    """Integer series at q = p from the nested sum over the centre lattice
    and, independently for each leaf, its sublattices."""
    leaf = [count_sublattices(m, p, f) for f in range(bound + 1)]
    leaves = [1] + [0] * bound
    for _ in range(a - 1):
        leaves = [sum(leaves[k] * leaf[d - k] for k in range(d + 1))
                  for d in range(bound + 1)]
    coeffs = [0] * (bound + 1)
    for e in range(bound // a + 1):
        n_centre = sum(1 for _ in enum_sublattices(m, p, e))
        for f in range(bound - a * e + 1):
            coeffs[a * e + f] += n_centre * leaves[f]
    return PowerSeries(
        bound=bound, n_t=1, coeffs={(k,): c for k, c in enumerate(coeffs)})


def corollary_symmetry(name, **params):
    """Closed exponent formulas for two graded families: free nilpotent of
    class 2 on d >= 2 generators, and amalgams of type (c^r1, 1^r2)."""
    if name == 'free_nilpotent':
        d = params['d']
        if d < 2:
            raise ValueError(f'The class-2 formula needs d >= 2, got {d}.')
        e = comb(d, 2)
        return SymmetryData(
            sign=(-1) ** (d + e),
            q_exponent=e + comb(e, 2),
            t_exponents=(2 * d + e,))
    if name == 'amalgam':
        c, r1, r2 = params['c'], params['r1'], params.get('r2', 0)
        if c < 2 or r1 < 1 or r2 < 0:
            raise ValueError(
                f'The amalgam formula needs c >= 2, r1 >= 1, r2 >= 0, got '
                f'c={c}, r1={r1}, r2={r2}.')
        return SymmetryData(
            sign=(-1) ** (1 + c * r1 + r2),
            q_exponent=comb(1 + r1 + r2, 2) + (c - 1) * comb(r1, 2),
            t_exponents=(c + comb(c + 1, 2) * r1 + r2,))
    raise ValueError(
        f'No corollary formula for {name!r}; use free_nilpotent or amalgam.')


def corollary_rep(name, **params):
    if name == 'free_nilpotent':
        return builtin_rep('free_nilpotent', c=2, d=params['d'])
    c, r1, r2 = params['c'], params['r1'], params.get('r2', 0)
    return builtin_rep('amalgam', partition=(c,) * r1 + (1,) * r2)


def _kron2_primes(q_mod_4):
    return {1: (5, 13), 3: (3, 7)}[q_mod_4]


def _elliptic_primes(D=1):
    return tuple(p for p in (3, 5, 7, 11, 13) if (2 * D) % p)[:2]


@dataclass(frozen=True)
class FormulaEntry:
    """A catalog formula with the builtin representation it describes, the
    counting mode it is stated in and the primes where it applies."""
    name: str
    build: Callable
    defaults: dict = field(default_factory=dict)
    rep: Callable = None
    mode: str = 'univariate'
    primes: Callable = None
    symbol_values: Callable = None
    description: str = ''

    def params(self, **params):
        unknown = set(params) - set(self.defaults)
        if unknown:
            raise ValueError(
                f'Unknown parameters {sorted(unknown)} for formula '
                f'{self.name}; expected {sorted(self.defaults)}.')
        return {**self.defaults, **params}

    def applicable_primes(self, **params):
        if self.primes is None:
            return (2, 3)
        return self.primes(**self.params(**params))

    def symbols_at(self, p, **params):
        if self.symbol_values is None:
            return {}
        return self.symbol_values(p=p, **self.params(**params))


FORMULA_CATALOG = {entry.name: entry for entry in [
    FormulaEntry(
        name='free',
        build=zeta_free_local,
        defaults={'n': 1},
        rep=lambda n: builtin_rep('free', n=n),
        description='free module of rank n'),
    FormulaEntry(
        name='heisenberg',
        build=heisenberg,
        rep=lambda: builtin_rep('heisenberg'),
        description='ideals of the Heisenberg Lie ring'),
    FormulaEntry(
        name='graded_heisenberg',
        build=graded_heisenberg,
        rep=lambda: builtin_rep('graded_heisenberg'),
        mode='multivariate',
        description='graded ideals of the Heisenberg Lie ring'),
    FormulaEntry(
        name='star_thin',
        build=star_thin,
        defaults={'a': 3},
        rep=lambda a: builtin_rep('star', m=1, a=a),
        description='thin star V_(1,a)'),
    FormulaEntry(
        name='star_v2',
        build=star_v2,
        defaults={'a': 2},
        rep=lambda a: builtin_rep('star', m=2, a=a),
        description='rank-two star V_(2,a), a <= 4'),
    FormulaEntry(
        name='dual_star',
        build=dual_star,
        defaults={'m': 1, 'a': 2},
        rep=lambda m, a: builtin_rep('dual_star', m=m, a=a),
        description='dual star V*_(m,a)'),
    FormulaEntry(
        name='d4',
        build=d4,
        rep=lambda: builtin_rep('d4'),
        description='three lines in the plane'),
    FormulaEntry(
        name='kron2',
        build=kron2,
        defaults={'q_mod_4': 3},
        rep=lambda q_mod_4: builtin_rep('kron2'),
        primes=_kron2_primes,
        description='Kronecker pair (1, J); branch by q mod 4'),
    FormulaEntry(
        name='elliptic',
        build=elliptic,
        defaults={'D': 1},
        rep=lambda D: builtin_rep('elliptic', D=D),
        primes=_elliptic_primes,
        symbol_values=lambda p, D: {'E': elliptic_point_count(D, p)},
        description='Kronecker triple cutting out Y^2 = X^3 - D X'),
    FormulaEntry(
        name='kronecker1',
        build=kronecker1_local,
        defaults={'n1': 1, 'n2': 1, 'i': 1, 'm': 0},
        description='one-arrow Kronecker quiver by image rank and '
                    'isolator exponent'),
]}


def get_entry(name):
    if name not in FORMULA_CATALOG:
        raise ValueError(
            f'Unknown formula {name!r}; available: {sorted(FORMULA_CATALOG)}.')
    return FORMULA_CATALOG[name]


def builtin_formula(name, **params):
    entry = get_entry(name)
    return entry.build(**entry.params(**params))


def formula_rep(name, **params):
    entry = get_entry(name)
    if entry.rep is None:
        return None
    return entry.rep(**entry.params(**params))
