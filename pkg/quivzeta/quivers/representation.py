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
from functools import cached_property

from .matrix_utils import identity, matmul, zeros, is_zero


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        errors = []
        if len(set(self.vertices)) != len(self.vertices):
            errors.append(f'duplicate vertex ids in {list(self.vertices)}')
        arrow_ids = [arrow.id for arrow in self.arrows]
        if len(set(arrow_ids)) != len(arrow_ids):
            errors.append(f'duplicate arrow ids in {arrow_ids}')
        for arrow in self.arrows:
            for end in ('tail', 'head'):
                if getattr(arrow, end) not in self.vertices:
                    errors.append(
                        f'arrow {arrow.id}: {end} {getattr(arrow, end)!r} '
                        f'is not a vertex')
        if errors:
            raise ValueError('Invalid quiver: ' + '; '.join(errors))

    def index(self, vertex):
        return self.vertices.index(vertex)

    def out_arrows(self, vertex):
        return [arrow for arrow in self.arrows if arrow.tail == vertex]

    def in_arrows(self, vertex):
        return [arrow for arrow in self.arrows if arrow.head == vertex]

    def is_acyclic(self):
        return self.topological_order() is not None

    def topological_order(self):
        """Vertices with every tail before its head, or None on a cycle."""
        indegree = {v: 0 for v in self.vertices}
        for arrow in self.arrows:
            indegree[arrow.head] += 1
        order = []
        ready = [v for v in self.vertices if indegree[v] == 0]
        while ready:
            vertex = ready.pop(0)
            order.append(vertex)
            for arrow in self.out_arrows(vertex):
                indegree[arrow.head] -= 1
                if indegree[arrow.head] == 0:
                    ready.append(arrow.head)
        return tuple(order) if len(order) == len(self.vertices) else None

    def paths(self, length):
        """Paths phi_1...phi_k with tail(phi_i) = head(phi_{i+1})."""
        if length == 0:
            return []
        paths = [(arrow,) for arrow in self.arrows]
        for _ in range(length - 1):
            paths = [path + (arrow,) for path in paths
                     for arrow in self.in_arrows(path[-1].tail)]
        return paths


class Representation:
    """Free modules L_v of rank n_v with integer matrices F_a of shape
    n_tail x n_head, acting on row vectors from the right."""
    def __init__(self, quiver, ranks, matrices, name=None):
        self._quiver = quiver
        self._ranks = {v: int(ranks[v]) for v in quiver.vertices}
        self._matrices = {
            arrow.id: tuple(tuple(int(x) for x in row)
                            for row in matrices[arrow.id])
            for arrow in quiver.arrows}
        self._name = name

        errors = []
        for v, n in self._ranks.items():
            if n < 0:
                errors.append(f'vertex {v}: negative rank {n}')
        for arrow in quiver.arrows:
            matrix = self._matrices[arrow.id]
            n_tail, n_head = self._ranks[arrow.tail], self._ranks[arrow.head]
            if len(matrix) != n_tail or \
                    any(len(row) != n_head for row in matrix):
                errors.append(
                    f'arrow {arrow.id}: matrix must be '
                    f'{n_tail} x {n_head}')
        if errors:
            raise ValueError('Invalid representation: ' + '; '.join(errors))

    def __repr__(self):
        return (f'Representation(name={self._name!r}, '
                f'ranks={self._ranks}, arrows={len(self._quiver.arrows)})')

    @property
    def quiver(self):
        return self._quiver

    @property
    def ranks(self):
        return dict(self._ranks)

    @property
    def name(self):
        return self._name

    @property
    def vertices(self):
        return self._quiver.vertices

    @property
    def arrows(self):
        return self._quiver.arrows

    @property
    def total_rank(self):
        return sum(self._ranks.values())

    def rank(self, vertex):
        return self._ranks[vertex]

    def matrix(self, arrow_id):
        return self._matrices[arrow_id]

    @cached_property
    def offsets(self):
        offsets, offset = {}, 0
        for v in self.vertices:
            offsets[v] = offset
            offset += self._ranks[v]
        return offsets

    def path_matrix(self, path):
        """Matrix F_{phi_k} ... F_{phi_1} of f_w, mapping L_{t(w)} to
        L_{h(w)}."""
        first = path[-1]
        result = identity(self._ranks[first.tail])
        for arrow in reversed(path):
            result = matmul(
                result, self._matrices[arrow.id], self._ranks[arrow.head])
        return result

    def arrow_extension(self, arrow_id):
        """e_a: the n x n matrix of F_a placed in the (tail, head) block."""
        arrow = next(a for a in self.arrows if a.id == arrow_id)
        n = self.total_rank
        rows = [list(row) for row in zeros(n, n)]
        t0, h0 = self.offsets[arrow.tail], self.offsets[arrow.head]
        for i, row in enumerate(self._matrices[arrow_id]):
            for j, x in enumerate(row):
                rows[t0 + i][h0 + j] = x
        return tuple(tuple(row) for row in rows)

    def vertex_projection(self, vertex):
        n = self.total_rank
        start = self.offsets[vertex]
        stop = start + self._ranks[vertex]
        return tuple(tuple(int(i == j and start <= i < stop)
                           for j in range(n)) for i in range(n))

    def zero_paths(self, length):
        return all(is_zero(self.path_matrix(path))
                   for path in self._quiver.paths(length))

    def to_dict(self):
        return {
            'vertices': [{'id': v, 'rank': self._ranks[v]}
                         for v in self.vertices],
            'arrows': [{'id': a.id, 'tail': a.tail, 'head': a.head,
                        'matrix': [list(row) for row in
                                   self._matrices[a.id]]}
                       for a in self.arrows]}


def make_representation(ranks, arrows, name=None):
    """`ranks` is an ordered list of (vertex, rank); `arrows` lists
    (id, tail, head, matrix)."""
    quiver = Quiver(
        vertices=tuple(v for v, _ in ranks),
        arrows=tuple(Arrow(id=a, tail=t, head=h) for a, t, h, _ in arrows))
    return Representation(
        quiver=quiver,
        ranks=dict(ranks),
        matrices={a: m for a, _, _, m in arrows},
        name=name)


def to_submodule_instance(rep):
    """Arrow extensions e_a followed by the vertex projections; their
    invariant sublattices of Z^n are exactly the subrepresentation
    supports."""
    operators = [rep.arrow_extension(arrow.id) for arrow in rep.arrows]
    operators += [rep.vertex_projection(v) for v in rep.vertices
                  if rep.rank(v) > 0]
    return operators
