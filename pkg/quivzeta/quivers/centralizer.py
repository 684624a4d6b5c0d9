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

from .matrix_utils import (
    complement,
    determinant,
    hstack,
    identity,
    left_kernel,
    matmul,
    right_kernel,
    row_hermite,
    transpose)


@dataclass(frozen=True)
class CentralizerSeries:
    """Upper centralizer series: bases[i][v] spans the pure submodule
    Z_{v,i}, for i = 0..c."""
    c: int
    ranks: dict
    bases: tuple

    def corank(self, vertex, i):
        return self.ranks[vertex] - len(self.bases[i][vertex])

    def coranks(self, vertex):
        """N_{v,0}, ..., N_{v,c}."""
        return tuple(self.corank(vertex, i) for i in range(self.c + 1))


@dataclass(frozen=True)
class Grading:
    """Per-vertex layer ranks (n_{v,1}, ..., n_{v,c}) and a unimodular
    basis whose consecutive row blocks span L_{v,1}, ..., L_{v,c}."""
    c: int
    layer_ranks: dict
    bases: dict

    def layer_slices(self, vertex):
        slices, start = [], 0
        for size in self.layer_ranks[vertex]:
            slices.append((start, start + size))
            start += size
        return slices

    def delta_exponents(self, vertex):
        """Exponent c - j of delta on each coordinate of the layer basis."""
        return tuple(self.c - j
                     for j, size in enumerate(self.layer_ranks[vertex], 1)
                     for _ in range(size))

    def to_dict(self):
        return {'c': self.c,
                'vertices': {v: {'layers': list(self.layer_ranks[v]),
                                 'basis': [list(r) for r in self.bases[v]]}
                             for v in self.layer_ranks}}


def image_chain_ranks(rep):
    """Ranks of W_k = span of f_w(L) over paths of length k, until zero."""
    n = rep.total_rank
    images = {v: identity(rep.rank(v)) for v in rep.vertices}
    ranks = [n]
    for _ in range(n + 1):
        if ranks[-1] == 0:
            break
        new_images = {}
        for v in rep.vertices:
            rows = []
            for arrow in rep.quiver.in_arrows(v):
                rows.extend(matmul(
                    images[arrow.tail], rep.matrix(arrow.id), rep.rank(v)))
            new_images[v] = row_hermite(rows, rep.rank(v))
        images = new_images
        ranks.append(sum(len(rows) for rows in images.values()))
    return ranks


def nilpotency_class(rep):
    """Least c with every path of length c acting as zero; None if the
    representation is not nilpotent. The zero representation has c = 0."""
    ranks = image_chain_ranks(rep)
    if ranks[-1] != 0:
        return None
    return len(ranks) - 1


def centralizer_series(rep):
    c = nilpotency_class(rep)
    if c is None:
        raise ValueError(
            f'Representation {rep.name or ""} is not nilpotent; no upper '
            f'centralizer series.')

    bases = [{v: () for v in rep.vertices}]
    for _ in range(c):
        prev = bases[-1]
        current = {}
        for v in rep.vertices:
            blocks, width = [], 0
            for arrow in rep.quiver.out_arrows(v):
                n_head = rep.rank(arrow.head)
                # x F lies in the pure Z_{head} iff it is killed by Z_head^perp
                perp = right_kernel(prev[arrow.head], n_head)
                blocks.append(matmul(
                    rep.matrix(arrow.id), transpose(perp, n_head), len(perp)))
                width += len(perp)
            current[v] = left_kernel(hstack(blocks, rep.rank(v)), width)
        bases.append(current)

    assert all(len(bases[c][v]) == rep.rank(v) for v in rep.vertices)
    return CentralizerSeries(c=c, ranks=rep.ranks, bases=tuple(bases))


def _reduce_modulo(rows, sub):
    """Reduces rows by the echelon rows of `sub` at their pivot columns."""
    reduced = []
    for row in rows:
        row = list(row)
        for s in sub:
            pivot = next(j for j, x in enumerate(s) if x)
            factor = row[pivot] // s[pivot]
            if factor:
                row = [x - factor * y for x, y in zip(row, s)]
        reduced.append(tuple(row))
    return tuple(reduced)


def cocentral_grading(rep, series=None):
    """Grading whose trailing layers span the centralizer series, built by
    iterated Smith normal form complements; deterministic."""
    if series is None:
        series = centralizer_series(rep)
    c = series.c

    layer_ranks, bases = {}, {}
    for v in rep.vertices:
        n_v = rep.rank(v)
        rows, prev = (), ()
        for i in range(1, c + 1):
            z_i = series.bases[i][v]
            comp = complement(sub=prev, basis=z_i, ncols=n_v)
            comp = _reduce_modulo(row_hermite(comp, n_v), prev)
            rows = comp + rows
            prev = z_i
        layer_ranks[v] = tuple(
            len(series.bases[c - j + 1][v]) - len(series.bases[c - j][v])
            for j in range(1, c + 1))
        bases[v] = rows
    return Grading(c=c, layer_ranks=layer_ranks, bases=bases)


def validate_grading(rep, grading, series=None):
    if series is None:
        series = centralizer_series(rep)
    errors = []
    if grading.c != series.c:
        errors.append(
            f'grading has {grading.c} layers but the nilpotency class is '
            f'{series.c}')
    for v in rep.vertices:
        n_v = rep.rank(v)
        if v not in grading.layer_ranks:
            errors.append(f'vertex {v}: missing')
            continue
        sizes = grading.layer_ranks[v]
        basis = grading.bases[v]
        if len(sizes) != grading.c or sum(sizes) != n_v:
            errors.append(
                f'vertex {v}: layer ranks {list(sizes)} must be {grading.c} '
                f'numbers summing to {n_v}')
            continue
        if len(basis) != n_v or any(len(row) != n_v for row in basis):
            errors.append(f'vertex {v}: basis must be {n_v} x {n_v}')
            continue
        if n_v and abs(determinant(basis)) != 1:
            errors.append(f'vertex {v}: basis is not unimodular')
            continue
        if errors or grading.c != series.c:
            continue
        expected = tuple(
            len(series.bases[series.c - j + 1][v]) -
            len(series.bases[series.c - j][v])
            for j in range(1, series.c + 1))
        if tuple(sizes) != expected:
            errors.append(
                f'vertex {v}: layer ranks {list(sizes)} do not match the '
                f'centralizer series, expected {list(expected)}')
            continue
        for i in range(grading.c + 1):
            trailing = basis[n_v - len(series.bases[i][v]):] \
                if series.bases[i][v] else ()
            if row_hermite(trailing, n_v) != row_hermite(
                    series.bases[i][v], n_v):
                errors.append(
                    f'vertex {v}: trailing layers do not span Z_{i}')
                break
    if errors:
        raise ValueError('Invalid grading: ' + '; '.join(errors))
