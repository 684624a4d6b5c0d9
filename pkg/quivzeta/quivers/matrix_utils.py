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

from sympy import QQ, ZZ, multiplicity
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (
    hermite_normal_form,
    smith_normal_decomp)

# Matrices are tuples of row tuples of Python ints; vectors are rows and
# maps act by right multiplication.


def to_dm(rows, ncols):
    rows = [[ZZ(int(x)) for x in row] for row in rows]
    return DomainMatrix(rows, (len(rows), ncols), ZZ)


def to_rows(dm):
    return tuple(tuple(int(x) for x in row) for row in dm.to_list())


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(nrows, ncols):
    return tuple((0,) * ncols for _ in range(nrows))


def transpose(rows, ncols):
    return tuple(tuple(row[j] for row in rows) for j in range(ncols))


def matmul(a, b, ncols):
    """a (k x m) times b (m x ncols)."""
    return tuple(
        tuple(sum(x * b[k][j] for k, x in enumerate(row) if x)
              for j in range(ncols))
        for row in a)


def vecmat(x, b, ncols):
    return tuple(sum(xi * b[k][j] for k, xi in enumerate(x) if xi)
                 for j in range(ncols))


def hstack(blocks, nrows):
    return tuple(
        tuple(x for block in blocks for x in block[i]) for i in range(nrows))


def block_diagonal(blocks):
    n = sum(len(block) for block in blocks)
    rows, offset = [], 0
    for block in blocks:
        size = len(block)
        for row in block:
            rows.append(
                (0,) * offset + tuple(row) + (0,) * (n - offset - size))
        offset += size
    return tuple(rows)


def is_zero(rows):
    return all(x == 0 for row in rows for x in row)


def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return to_dm(rows, ncols).convert_to(QQ).rank()


def smith_decomp(rows, ncols):
    """(diagonal, S, T) with S A T = diag, nonneg diagonal, S and T
    unimodular."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return (), identity(nrows), identity(ncols)

    smf, s, t = smith_normal_decomp(to_dm(rows, ncols))
    smf, s, t = to_rows(smf), [list(r) for r in to_rows(s)], to_rows(t)
    diagonal = []
    for i in range(min(nrows, ncols)):
        d = smf[i][i]
        if d < 0:
            s[i] = [-x for x in s[i]]
            d = -d
        diagonal.append(d)
    return tuple(diagonal), tuple(tuple(r) for r in s), t


def elementary_divisors(rows, ncols):
    diagonal, _, _ = smith_decomp(rows, ncols)
    return tuple(d for d in diagonal if d)


def determinant(rows):
    if not rows:
        return 1
    return int(to_dm(rows, len(rows)).det())


def inverse_unimodular(rows):
    n = len(rows)
    if n == 0:
        return ()
    dm = to_dm(rows, n)
    if abs(int(dm.det())) != 1:
        raise ValueError(f'Matrix {rows} is not unimodular.')
    return to_rows(dm.convert_to(QQ).inv().convert_to(ZZ))


def row_hermite(rows, ncols):
    """Row-span Hermite form: echelon rows with positive pivots, entries
    above a pivot reduced modulo it."""
    rows = [row for row in rows if any(row)]
    if not rows or ncols == 0:
        return ()
    # sympy reduces column lattices; reverse coordinates and transpose
    reversed_cols = [[row[ncols - 1 - j] for j in range(ncols)]
                     for row in rows]
    w = to_rows(hermite_normal_form(
        to_dm(transpose(reversed_cols, ncols), len(rows))))
    lower = transpose(w, len(w[0]) if w else 0)
    r = len(lower)
    return tuple(
        tuple(lower[r - 1 - i][ncols - 1 - j] for j in range(ncols))
        for i in range(r))


def left_kernel(rows, ncols):
    """Pure basis (in row Hermite form) of {x : x A = 0}."""
    nrows = len(rows)
    diagonal, s, _ = smith_decomp(rows, ncols)
    r = sum(1 for d in diagonal if d)
    return row_hermite(s[r:], nrows)


def right_kernel(rows, ncols):
    """Columns spanning {y : A y = 0}, returned as rows."""
    return left_kernel(transpose(rows, ncols), len(rows))


def express(x, basis, ncols):
    """Integer coefficients y with y * basis = x, or None."""
    if not basis:
        return () if not any(x) else None
    diagonal, s, t = smith_decomp(basis, ncols)
    xt = vecmat(x, t, ncols)
    z = []
    for i, value in enumerate(xt):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if value:
                return None
            if i < len(basis):
                z.append(0)
        elif value % d:
            return None
        else:
            z.append(value // d)
    z = z[:len(basis)] + [0] * (len(basis) - len(z))
    return vecmat(z, s, ncols=len(basis))


def complement(sub, basis, ncols):
    """Rows completing the pure sublattice `sub` of span(basis) to a basis
    of span(basis); `basis` must itself be a basis."""
    if not sub:
        return tuple(basis)
    coords = [express(x=row, basis=basis, ncols=ncols) for row in sub]
    assert all(c is not None for c in coords)
    _, _, t = smith_decomp(coords, len(basis))
    t_inv = inverse_unimodular(t)
    extra = t_inv[len(sub):]
    return matmul(extra, basis, ncols)


def valuation(x, p):
    """p-adic valuation of a nonzero integer; None for zero."""
    if x == 0:
        return None
    return int(multiplicity(p, abs(int(x))))


def min_valuation(values, p):
    vals = [valuation(x, p) for x in values if x]
    return min(vals) if vals else None
