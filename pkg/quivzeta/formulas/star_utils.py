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

from sympy import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from ..arith import PowerSeries, RationalFn, series_expand
from ..arith.poly_utils import make_ring, poly_from_terms
from ..posets.perm_utils import perm_stats, symmetric_group
from .number_utils import subgroup_zeta_two_part


def carlitz_polynomial(n):
    """C_n(x, q): sum of x^des(w) q^maj(w) over S_n."""
    ring = PolyRing(('x', 'q'), ZZ, lex)
    terms = {}
    for word in symmetric_group(n):
        stats = perm_stats(word)
        terms[(stats.des, stats.maj)] = \
            terms.get((stats.des, stats.maj), 0) + 1
    return poly_from_terms(ring, terms)


def star_thin(a):
    """C_{a-1}(t, t) / prod_{i <= a} (1 - t^i)."""
    if a < 1:
        raise ValueError(f'star_thin needs a >= 1, got {a}.')
    terms = {}
    for (des, maj), coeff in carlitz_polynomial(a - 1).items():
        terms[(0, des + maj)] = terms.get((0, des + maj), 0) + int(coeff)
    return RationalFn.from_factors(
        numerator=poly_from_terms(make_ring(n_t=1), terms),
        factors=[(0, i) for i in range(1, a + 1)])


def _truncate(poly, bound):
    return poly.ring.from_dict(
        {exps: c for exps, c in poly.items() if exps[1] <= bound})


def _truncated_power(poly, k, bound):
    result = poly.ring.one
    for _ in range(k):
        result = _truncate(result * poly, bound)
    return result


def macmahon_identity_check(a, bound):
    """sum_r t^r ((1 - t^(r+1)) / (1 - t))^(a-1), summed termwise, against
    the expansion of star_thin(a)."""
    ring = make_ring(n_t=1)
    t = ring.gens[1]
    total = ring.zero
    for r in range(bound + 1):
        block = sum((t ** k for k in range(r + 1)), ring.zero)
        total += t ** r * _truncated_power(block, a - 1, bound - r)
    termwise = PowerSeries.from_poly(_truncate(total, bound), n_t=1,
                                     bound=bound)
    return termwise == series_expand(star_thin(a), bound)


def star_v2a_series(a, bound):
    """Double sum over the elementary divisor type (r0 + r1, r0) of the
    centre lattice, each leaf contributing a two-part subgroup zeta."""
    if a < 1:
        raise ValueError(f'star_v2a_series needs a >= 1, got {a}.')
    ring = make_ring(n_t=1)
    q, t = ring.gens
    total = ring.zero
    for r0 in range(bound // 2 + 1):
        rest = bound - 2 * r0
        total += t ** (2 * r0) * _truncated_power(
            subgroup_zeta_two_part(r0, r0), a - 1, rest)
        for r1 in range(1, rest + 1):
            total += (q ** r1 + q ** (r1 - 1)) * t ** (2 * r0 + r1) * \
                _truncated_power(
                    subgroup_zeta_two_part(r0 + r1, r0), a - 1, rest - r1)
    return PowerSeries.from_poly(_truncate(total, bound), n_t=1, bound=bound)
