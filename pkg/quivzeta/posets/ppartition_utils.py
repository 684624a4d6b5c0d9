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

import logging
from itertools import combinations

from sympy import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from ..arith import RationalFn, gaussian_binomial, invert_qt, monomial_ratio
from ..arith.poly_utils import make_ring, poly_from_terms
from ..quivers import make_representation
from .perm_utils import (
    descent_set,
    inversions,
    perm_stats,
    symmetric_group,
    times_longest)

logger = logging.getLogger(__name__)

DEFAULT_EXTENSION_BOUND = 10
COXETER_BOUND = 8
X_RING = PolyRing(('X',), ZZ, lex)


def linear_extensions(poset, bound=DEFAULT_EXTENSION_BOUND):
    """Linear extensions as one-line words, in lex order."""
    if poset.n > bound:
        raise ValueError(
            f'Poset has {poset.n} elements; linear extensions are enumerated '
            f'up to n = {bound}. Raise `bound` to go further.')
    lower = {x: set(poset.lower_covers(x)) for x in range(1, poset.n + 1)}
    extensions = []

    def extend(prefix, placed):
        if len(prefix) == poset.n:
            extensions.append(tuple(prefix))
            return
        for x in range(1, poset.n + 1):
            if x not in placed and lower[x] <= placed:
                prefix.append(x)
                placed.add(x)
                extend(prefix, placed)
                placed.discard(x)
                prefix.pop()

    extend([], set())
    return extensions


def stanley_gf(poset, bound=DEFAULT_EXTENSION_BOUND):
    """sum over linear extensions of X^maj, over prod_{i <= n} (1 - X^i)."""
    terms = {}
    for word in linear_extensions(poset, bound=bound):
        maj = perm_stats(word).maj
        terms[(0, maj)] = terms.get((0, maj), 0) + 1
    return RationalFn.from_factors(
        numerator=poly_from_terms(make_ring(n_t=1, t_names=('X',)), terms),
        factors=[(0, i) for i in range(1, poset.n + 1)],
        t_names=('X',))


def ppartition_count(poset, m):
    """Order-reversing maps sigma: P -> N_0 with sum m."""
    if m < 0:
        raise ValueError(f'ppartition_count needs m >= 0, got {m}.')
    lower = [poset.lower_covers(x) for x in range(1, poset.n + 1)]
    values = [0] * poset.n

    def place(k, remaining):
        if k == poset.n:
            return int(remaining == 0)
        cap = min([remaining] + [values[i - 1] for i in lower[k]])
        total = 0
        for value in range(cap + 1):
            values[k] = value
            total += place(k + 1, remaining - value)
        return total

    return place(0, m)


def delta_chain(poset):
    """(True, sum of delta(x)) when every principal dual order ideal has
    maximal chains of one length, else (False, None). delta(x) counts the
    elements of a longest chain starting at x."""
    lengths = {}
    for x in range(poset.n, 0, -1):
        above = poset.upper_covers(x)
        if not above:
            lengths[x] = {1}
        else:
            lengths[x] = {1 + l for y in above for l in lengths[y]}
    if any(len(ls) != 1 for ls in lengths.values()):
        return False, None
    return True, sum(max(ls) for ls in lengths.values())


def hasse_rep(poset):
    """Thin representation: rank one at every element, identity arrows
    i -> j along the covers i < j."""
    return make_representation(
        ranks=[(f'v{x}', 1) for x in range(1, poset.n + 1)],
        arrows=[(f'a{i}_{j}', f'v{i}', f'v{j}', ((1,),))
                for i, j in poset.covers],
        name=f'hasse_{poset.n}')


def stanley_reciprocity(poset):
    """(sign, 0, (k,)) when G_P(1/X) = sign X^k G_P(X), else None."""
    gf = stanley_gf(poset)
    return monomial_ratio(invert_qt(gf), gf)


def _check_descent_subset(n, subset):
    subset = tuple(sorted(set(subset)))
    if any(not 1 <= i <= n - 1 for i in subset):
        raise ValueError(
            f'Descent set {list(subset)} must lie in [1, {n - 1}].')
    return subset


def q_multinomial_product(n, subset):
    """[n; i_1, i_2 - i_1, ..., n - i_k]_X as a product of X-binomials."""
    subset = _check_descent_subset(n, subset)
    result = X_RING.one
    for lo, hi in zip(subset, subset[1:] + (n,)):
        result *= gaussian_binomial(hi, lo, X_RING)
    return result


def q_multinomial_sum(n, subset):
    """sum of X^length(w) over w in S_n with Des(w) inside `subset`."""
    subset = set(_check_descent_subset(n, subset))
    terms = {}
    for word in symmetric_group(n):
        if set(descent_set(word)) <= subset:
            length = inversions(word)
            terms[(length,)] = terms.get((length,), 0) + 1
    return poly_from_terms(X_RING, terms)


def q_multinomial_descent(n, subset):
    product = q_multinomial_product(n, subset)
    assert product == q_multinomial_sum(n, subset), (n, subset)
    return product


def coxeter_identity_check(n):
    """Des(w w_0) is the complement of Des(w) and the lengths of w and
    w w_0 add up to C(n, 2), for all of S_n."""
    if n > COXETER_BOUND:
        raise ValueError(
            f'coxeter_identity_check enumerates S_n up to n = '
            f'{COXETER_BOUND}, got {n}.')
    positions = set(range(1, n))
    top = n * (n - 1) // 2
    for word in symmetric_group(n):
        flipped = times_longest(word)
        if set(descent_set(flipped)) != positions - set(descent_set(word)):
            logger.debug(f'descent complement fails at {word}')
            return False
        if inversions(word) + inversions(flipped) != top:
            logger.debug(f'length identity fails at {word}')
            return False
    return True


def all_descent_subsets(n):
    positions = range(1, n)
    return [subset for k in range(n) for subset in combinations(positions, k)]
