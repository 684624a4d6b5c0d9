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

from ..quivers.matrix_utils import (
    determinant,
    hstack,
    identity,
    row_hermite,
    valuation,
    vecmat)


@dataclass(frozen=True)
class LocalLattice:
    """Row span over the p-local integers of an upper triangular Hermite
    form with diagonal p^a_1, ..., p^a_n and entry (i, j) reduced modulo
    p^a_j."""
    p: int
    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        assert all(len(row) == n for row in self.rows)
        for i, row in enumerate(self.rows):
            assert all(x == 0 for x in row[:i])
            assert row[i] > 0 and row[i] == self.p ** valuation(row[i], self.p)
            assert all(0 <= row[j] < self.rows[j][j] for j in range(i + 1, n))

    @classmethod
    def standard(cls, p, n):
        return cls(p=p, rows=identity(n))

    @classmethod
    def from_triangular(cls, p, rows):
        """Normalizes an upper triangular basis with p-power diagonal."""
        rows = [list(row) for row in rows]
        for j in range(len(rows)):
            pivot = rows[j][j]
            for i in range(j):
                factor = rows[i][j] // pivot
                if factor:
                    rows[i] = [x - factor * y
                               for x, y in zip(rows[i], rows[j])]
        return cls(p=p, rows=tuple(tuple(row) for row in rows))

    @property
    def n(self):
        return len(self.rows)

    @cached_property
    def diagonal_exponents(self):
        return tuple(valuation(self.rows[i][i], self.p) for i in range(self.n))

    @property
    def index_exponent(self):
        return sum(self.diagonal_exponents)

    @property
    def det(self):
        return self.p ** self.index_exponent

    @cached_property
    def adjugate(self):
        rows, n, det = self.rows, self.n, self.det
        adj = [[0] * n for _ in range(n)]
        for j in range(n):
            adj[j][j] = det // rows[j][j]
            for i in range(j - 1, -1, -1):
                total = sum(rows[i][k] * adj[k][j]
                            for k in range(i + 1, j + 1))
                assert total % rows[i][i] == 0
                adj[i][j] = -(total // rows[i][i])
        return tuple(tuple(row) for row in adj)

    def contains(self, x):
        det = self.det
        return all(v % det == 0 for v in vecmat(x, self.adjugate, self.n))

    def contains_rows(self, rows):
        return all(self.contains(x) for x in rows)

    def to_dict(self):
        return {'p': self.p, 'rows': [list(row) for row in self.rows]}


@dataclass(frozen=True)
class LatticeTuple:
    """One LocalLattice per vertex, in the vertex order of the
    representation."""
    vertices: tuple
    lattices: tuple

    def __post_init__(self):
        assert len(self.vertices) == len(self.lattices)
        assert len({lattice.p for lattice in self.lattices}) <= 1

    @classmethod
    def from_dict(cls, lattices):
        return cls(vertices=tuple(lattices),
                   lattices=tuple(lattices.values()))

    def __getitem__(self, vertex):
        return self.lattices[self.vertices.index(vertex)]

    def items(self):
        return zip(self.vertices, self.lattices)

    @property
    def p(self):
        return self.lattices[0].p if self.lattices else None

    @property
    def index_exponents(self):
        return tuple(lattice.index_exponent for lattice in self.lattices)

    @property
    def index_exponent(self):
        return sum(self.index_exponents)

    def to_dict(self):
        return {v: [list(row) for row in lattice.rows]
                for v, lattice in self.items()}


def local_hnf(p, rows):
    """LocalLattice spanned by a nonsingular integer matrix."""
    n = len(rows)
    det = determinant(rows)
    if det == 0:
        raise ValueError(f'Rows {rows} do not span a full-rank lattice.')
    modulus = p ** valuation(det, p)
    # the p-part of the index is unchanged by adding modulus * Z^n
    stacked = list(rows) + [tuple(modulus * x for x in row)
                            for row in identity(n)]
    return LocalLattice.from_triangular(p, row_hermite(stacked, n))


def local_smith(rows, ncols, p, k):
    """Smith form over Z/p^k: (valuations of the nonzero elementary
    divisors, row transform S mod p^k)."""
    modulus = p ** k
    nrows = len(rows)
    a = [[x % modulus for x in row] for row in rows]
    s = [list(row) for row in identity(nrows)]
    valuations = []
    for r in range(min(nrows, ncols)):
        best = None
        for i in range(r, nrows):
            for j in range(r, ncols):
                if a[i][j]:
                    v = valuation(a[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, i, j = best
        a[r], a[i] = a[i], a[r]
        s[r], s[i] = s[i], s[r]
        for row in a:
            row[r], row[j] = row[j], row[r]

        inverse = pow(a[r][r] // p ** v, -1, modulus)
        for i in range(r + 1, nrows):
            factor = (a[i][r] // p ** v) * inverse % modulus
            if factor:
                a[i] = [(x - factor * y) % modulus for x, y in zip(a[i], a[r])]
                s[i] = [(x - factor * y) % modulus for x, y in zip(s[i], s[r])]
        for j in range(r + 1, ncols):
            factor = (a[r][j] // p ** v) * inverse % modulus
            if factor:
                for row in a:
                    row[j] = (row[j] - factor * row[r]) % modulus
        valuations.append(v)
    return tuple(valuations), tuple(tuple(row) for row in s)


def preimage_lattice(p, n, constraints):
    """Lattice of x in Z_p^n with x G = 0 mod p^k for every (G, k) in
    `constraints`."""
    constraints = [(g, k) for g, k in constraints if g and g[0] and k > 0]
    if not constraints:
        return LocalLattice.standard(p, n)
    top = max(k for _, k in constraints)
    modulus = p ** top
    blocks = [tuple(tuple(x * p ** (top - k) % modulus for x in row)
                    for row in g) for g, k in constraints]
    width = sum(len(g[0]) for g in blocks)
    valuations, s = local_smith(hstack(blocks, n), width, p, top)

    rows = [tuple(p ** (top - valuations[i]) * x for x in row)
            if i < len(valuations) else row for i, row in enumerate(s)]
    rows += [tuple(modulus * x for x in row) for row in identity(n)]
    return LocalLattice.from_triangular(p, row_hermite(rows, n))
