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

from functools import lru_cache
from itertools import product
from math import prod

from ..arith.poly_utils import exponent_vectors
from .local_lattice import LocalLattice


def compositions(e, n):
    """Weak compositions of e into n parts, in lex order."""
    if n == 0:
        if e == 0:
            yield ()
        return
    if n == 1:
        yield (e,)
        return
    for first in range(e + 1):
        for rest in compositions(e - first, n - 1):
            yield (first,) + rest


def enum_sublattices(n, p, e):
    """Every index-p^e sublattice of Z_p^n exactly once: diagonal
    compositions in lex order, then residues above the diagonal row by
    row."""
    for exps in compositions(e, n):
        diagonal = [p ** a for a in exps]
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for residues in product(*[range(diagonal[j]) for _, j in slots]):
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = diagonal[i]
            for (i, j), x in zip(slots, residues):
                rows[i][j] = x
            yield LocalLattice(p=p, rows=tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def count_sublattices(n, p, e):
    """Number of index-p^e sublattices of Z_p^n."""
    if e < 0:
        return 0
    if n == 0:
        return int(e == 0)
    if n == 1:
        return 1
    return sum(p ** ((n - 1) * j) * count_sublattices(n - 1, p, e - j)
               for j in range(e + 1))


def enumerate_index_vectors(ranks, bound):
    """Index exponent vectors with total at most `bound`; vertices of rank
    zero only admit exponent zero."""
    return [exps for exps in exponent_vectors(len(ranks), bound)
            if all(e == 0 or n > 0 for e, n in zip(exps, ranks))]


def predicted_candidates(ranks, p, bound):
    """Size of the naive product enumeration over all index vectors."""
    return sum(prod(count_sublattices(n, p, e) for n, e in zip(ranks, exps))
               for exps in enumerate_index_vectors(ranks, bound))
