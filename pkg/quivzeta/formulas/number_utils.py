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

from itertools import product

from sympy import isprime

from ..arith.poly_utils import make_ring, poly_from_terms
from ..quivers.matrix_utils import elementary_divisors, rank, valuation


def iso_exponent(matrix, p):
    """(rank i, m) where p^m is the p-part of |im(phi)^iso : im(phi)|."""
    matrix = tuple(tuple(row) for row in matrix)
    ncols = len(matrix[0]) if matrix else 0
    i = rank(matrix, ncols)
    m = sum(valuation(d, p) for d in elementary_divisors(matrix, ncols))
    return i, m


def elliptic_point_count(D, p):
    """|E(F_p)| for Y^2 = X^3 - D X, point at infinity included."""
    if not isprime(p):
        raise ValueError(f'{p} is not a prime.')
    if (2 * D) % p == 0:
        raise ValueError(
            f'p = {p} divides 2D = {2 * D}; the curve has bad reduction.')
    squares = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    return 1 + sum(squares.get((x ** 3 - D * x) % p, 0) for x in range(p))


def subgroup_zeta_two_part(lambda_1, lambda_2):
    """Submodules U of o/p^l1 x o/p^l2 weighted by t^(log_q |module : U|),
    as a polynomial in q and t."""
    if not lambda_1 >= lambda_2 >= 0:
        raise ValueError(
            f'Need lambda_1 >= lambda_2 >= 0, got ({lambda_1}, {lambda_2}).')
    terms = {}
    for a in range(lambda_1 + 1):
        for b in range(lambda_2 + 1):
            key = (min(b, lambda_1 - a), a + b)
            terms[key] = terms.get(key, 0) + 1
    return poly_from_terms(make_ring(n_t=1), terms)


def brute_subgroups(p, lambda_1, lambda_2):
    """Subgroup counts of C_{p^l1} x C_{p^l2} by index exponent, found as
    sums of two cyclic subgroups."""
    m1, m2 = p ** lambda_1, p ** lambda_2
    elements = list(product(range(m1), range(m2)))

    def cyclic(g):
        seen, x = set(), (0, 0)
        while True:
            seen.add(x)
            x = ((x[0] + g[0]) % m1, (x[1] + g[1]) % m2)
            if x == (0, 0):
                return frozenset(seen)

    cyclics = {cyclic(g) for g in elements}
    subgroups = set(cyclics)
    for h in cyclics:
        for k in cyclics:
            subgroups.add(frozenset(((a + c) % m1, (b + d) % m2)
                                    for a, b in h for c, d in k))

    total = lambda_1 + lambda_2
    counts = {}
    for group in subgroups:
        j = total - valuation(len(group), p)
        counts[j] = counts.get(j, 0) + 1
    return dict(sorted(counts.items()))
