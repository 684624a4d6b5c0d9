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
from itertools import product

from sympy import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

# IntPoly values are sparse sympy polynomials over ZZ. Their generators are
# ordered (q, t-variables, symbols) under lex, which is the canonical term
# order used for printing.


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Formal quantity such as |E(F_q)| that maps to q^(-w) * itself under
    the inversion q -> 1/q."""
    name: str
    inversion_weight: int = 1

    def __post_init__(self):
        assert self.inversion_weight >= 0


def default_t_names(n_t):
    if n_t == 1:
        return ('t',)
    return tuple(f't{i}' for i in range(1, n_t + 1))


def make_ring(n_t, symbol_names=(), t_names=None):
    if t_names is None:
        t_names = default_t_names(n_t)
    assert len(t_names) == n_t
    return PolyRing(('q',) + tuple(t_names) + tuple(symbol_names), ZZ, lex)


def coefficient_ring(symbol_names=()):
    return PolyRing(('q',) + tuple(symbol_names), ZZ, lex)


def monomial(ring, exps):
    return ring.from_dict({tuple(exps): ZZ(1)})


def poly_from_terms(ring, terms):
    return ring.from_dict(
        {tuple(exps): ZZ(coeff) for exps, coeff in terms.items() if coeff})


def lowest_term(poly):
    exps = min(poly.keys())
    return exps, poly[exps]


def exponent_vectors(n, bound):
    """All vectors of n nonneg ints with total degree <= bound, graded by
    total degree then lex."""
    vectors = [exps for exps in product(range(bound + 1), repeat=n)
               if sum(exps) <= bound]
    return sorted(vectors, key=lambda exps: (sum(exps), exps))


def gaussian_binomial(n, k, ring, var_idx=0):
    """[n choose k] in the generator ring.gens[var_idx]."""
    if k < 0 or k > n:
        return ring.zero
    x = ring.gens[var_idx]
    num, den = ring.one, ring.one
    for i in range(k):
        num *= ring.one - x ** (n - i)
        den *= ring.one - x ** (i + 1)
    return num.exquo(den)
