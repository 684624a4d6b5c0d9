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

from .centralizer import validate_grading
from .matrix_utils import (
    block_diagonal,
    express,
    inverse_unimodular,
    is_zero,
    matmul,
    row_hermite)


def _flatten(matrix):
    return tuple(x for row in matrix for x in row)


def _unflatten(vector, n):
    return tuple(tuple(vector[i * n:(i + 1) * n]) for i in range(n))


def _is_nilpotent(matrix, n):
    power = matrix
    for _ in range(n):
        if is_zero(power):
            return True
        power = matmul(power, matrix, n)
    return is_zero(power)


@dataclass(frozen=True)
class EndAlgebra:
    """Integral spanning set of the algebra generated by `generators`, kept
    as Hermite-form rows of flattened n x n matrices."""
    n: int
    basis: tuple
    generators: tuple

    @property
    def matrices(self):
        return tuple(_unflatten(row, self.n) for row in self.basis)

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, matrix):
        return express(_flatten(matrix), self.basis, self.n ** 2) is not None


def algebra_closure(generators, n=None):
    generators = tuple(tuple(tuple(row) for row in g) for g in generators)
    if n is None:
        n = len(generators[0]) if generators else 0
    for k, g in enumerate(generators):
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError(f'Generator {k} is not {n} x {n}.')
        if not _is_nilpotent(g, n):
            raise ValueError(f'Generator {k} is not nilpotent.')

    dim = n * n
    basis = row_hermite([_flatten(g) for g in generators], dim)
    while True:
        grown = False
        matrices = [_unflatten(row, n) for row in basis]
        for x in matrices:
            for y in matrices:
                product = _flatten(matmul(x, y, n))
                if any(product) and express(product, basis, dim) is None:
                    basis = row_hermite(basis + (product,), dim)
                    grown = True
        if not grown:
            break
    return EndAlgebra(n=n, basis=basis, generators=generators)


def arrow_generators(rep):
    return [rep.arrow_extension(arrow.id) for arrow in rep.arrows]


def check_generators(rep, generators):
    """Raises unless `generators` lie in and generate the algebra E spanned
    by the arrow extensions."""
    algebra = algebra_closure(arrow_generators(rep), n=rep.total_rank)
    outside = [k for k, g in enumerate(generators)
               if not algebra.contains(g)]
    if outside:
        raise ValueError(
            f'Generators {outside} do not lie in the endomorphism algebra '
            f'of {rep.name or "the representation"}.')
    generated = algebra_closure(generators, n=rep.total_rank)
    missing = [arrow.id for arrow, e in zip(rep.arrows, algebra.generators)
               if not generated.contains(e)]
    if missing:
        raise ValueError(
            f'Generators do not generate the endomorphism algebra: arrow '
            f'extensions {missing} are not reached.')


def graded_generators(rep, grading, generators):
    """Generators conjugated into the grading basis: B C B^-1."""
    n = rep.total_rank
    basis = block_diagonal([grading.bases[v] for v in rep.vertices])
    basis_inv = inverse_unimodular(basis)
    return [matmul(matmul(basis, g, n), basis_inv, n) for g in generators]


def layer_blocks(rep, grading, matrix):
    """Yields (t, h, i, j, block) for the layer blocks of an n x n matrix in
    grading coordinates."""
    for t in rep.vertices:
        t0 = rep.offsets[t]
        for h in rep.vertices:
            h0 = rep.offsets[h]
            for i, (ti, tj) in enumerate(grading.layer_slices(t), 1):
                for j, (hi, hj) in enumerate(grading.layer_slices(h), 1):
                    block = tuple(matrix[t0 + r][h0 + hi:h0 + hj]
                                  for r in range(ti, tj))
                    yield t, h, i, j, block


def check_homogeneity(rep, grading, generators=None):
    """(True, None) when every generator moves layer i into layer i+1 in the
    grading basis, else (False, (k, t, h, i, j)) for the first nonzero
    forbidden block. The answer is relative to the supplied data."""
    validate_grading(rep, grading)
    if generators is None:
        generators = arrow_generators(rep)
    else:
        check_generators(rep, generators)

    for k, matrix in enumerate(graded_generators(rep, grading, generators)):
        for t, h, i, j, block in layer_blocks(rep, grading, matrix):
            if j != i + 1 and not is_zero(block):
                return False, (k, t, h, i, j)
    return True, None


def delta_shift_exponents(rep, grading, generators=None):
    """Powers of p by which conjugation with delta scales the nonzero layer
    blocks; {1} for homogeneous data."""
    if generators is None:
        generators = arrow_generators(rep)
    shifts = set()
    for matrix in graded_generators(rep, grading, generators):
        for _, _, i, j, block in layer_blocks(rep, grading, matrix):
            if not is_zero(block):
                shifts.add((grading.c - i) - (grading.c - j))
    return shifts
