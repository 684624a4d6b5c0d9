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

from itertools import combinations

from .matrix_utils import identity, is_zero
from .representation import make_representation

# Lie rings are given by structure constants {(i, j): {k: c}} for i < j on
# a basis x_1..x_dim; the operator ad x_a sends v to [v, x_a].
FIL4_BRACKETS = {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1},
                 (2, 3): {5: 1}}
M4_BRACKETS = {(1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {5: 1}}
FILIFORM_LAYERS = ((1, 2), (3,), (4,), (5,))


def bracket(brackets, i, j):
    if i == j:
        return {}
    if i < j:
        return dict(brackets.get((i, j), {}))
    return {k: -c for k, c in brackets.get((j, i), {}).items()}


def adjoint_matrix(dim, brackets, a):
    rows = []
    for i in range(1, dim + 1):
        image = bracket(brackets, i, a)
        rows.append(tuple(image.get(k, 0) for k in range(1, dim + 1)))
    return tuple(rows)


def lie_loop_rep(dim, brackets, adjoints, name=None):
    """Single vertex of rank `dim` with loops ad x_a for a in `adjoints`."""
    return make_representation(
        ranks=[('v1', dim)],
        arrows=[(f'ad{a}', 'v1', 'v1', adjoint_matrix(dim, brackets, a))
                for a in adjoints],
        name=name)


def graded_submodule_rep(operators, decomposition, drop_zero=False,
                         name=None):
    """Graded submodule quiver: one vertex per part of `decomposition`
    (lists of 0-based coordinates) and, for every ordered pair of parts, one
    arrow per operator carrying the corresponding block."""
    ranks = [(f'v{k}', len(part)) for k, part in enumerate(decomposition, 1)]
    arrows = []
    for a, part_a in enumerate(decomposition, 1):
        for b, part_b in enumerate(decomposition, 1):
            for k, op in enumerate(operators, 1):
                block = tuple(tuple(op[r][s] for s in part_b) for r in part_a)
                if drop_zero and is_zero(block):
                    continue
                arrows.append((f'c{k}_{a}{b}', f'v{a}', f'v{b}', block))
    return make_representation(ranks=ranks, arrows=arrows, name=name)


def heisenberg():
    f1 = ((0, 0, 0), (0, 0, -1), (0, 0, 0))
    f2 = ((0, 0, 1), (0, 0, 0), (0, 0, 0))
    return make_representation(
        ranks=[('v1', 3)],
        arrows=[('f1', 'v1', 'v1', f1), ('f2', 'v1', 'v1', f2)],
        name='heisenberg')


def graded_heisenberg():
    return make_representation(
        ranks=[('v1', 2), ('v2', 1)],
        arrows=[('f1', 'v1', 'v2', ((0,), (-1,))),
                ('f2', 'v1', 'v2', ((1,), (0,)))],
        name='graded_heisenberg')


def _filiform(brackets, graded, name):
    if not graded:
        return lie_loop_rep(dim=5, brackets=brackets, adjoints=(1, 2),
                            name=name)
    operators = [adjoint_matrix(5, brackets, a) for a in (1, 2)]
    decomposition = [[x - 1 for x in layer] for layer in FILIFORM_LAYERS]
    return graded_submodule_rep(
        operators=operators, decomposition=decomposition, drop_zero=True,
        name=name)


def fil4():
    return _filiform(FIL4_BRACKETS, graded=False, name='fil4')


def graded_fil4():
    return _filiform(FIL4_BRACKETS, graded=True, name='graded_fil4')


def m4():
    return _filiform(M4_BRACKETS, graded=False, name='m4')


def graded_m4():
    return _filiform(M4_BRACKETS, graded=True, name='graded_m4')


def free_nilpotent(c, d):
    """Graded free nilpotent Lie ring of class c <= 2 on d generators:
    ranks d and C(d, 2), arrows ad x_k sending e_i to e_i ^ e_k."""
    if c not in (1, 2) or d < 1:
        raise ValueError(
            f'free_nilpotent supports class 1 or 2 and d >= 1, got c={c}, '
            f'd={d}; supply higher classes by file.')
    if c == 1:
        return make_representation(
            ranks=[('v1', d)], arrows=[], name=f'free_nilpotent_{c}_{d}')

    pairs = list(combinations(range(d), 2))
    arrows = []
    for k in range(d):
        rows = []
        for i in range(d):
            row = [0] * len(pairs)
            if i < k:
                row[pairs.index((i, k))] = 1
            elif i > k:
                row[pairs.index((k, i))] = -1
            rows.append(tuple(row))
        arrows.append((f'ad{k + 1}', 'v1', 'v2', tuple(rows)))
    return make_representation(
        ranks=[('v1', d), ('v2', len(pairs))],
        arrows=arrows,
        name=f'free_nilpotent_{c}_{d}')


def amalgam(partition):
    """Graded amalgam L_lambda: generators x_0 and x_{i,j}, j <= lambda_i,
    with [x_0, x_{i,j}] = x_{i,j+1}; vertex v_j carries layer j."""
    partition = tuple(sorted((int(x) for x in partition), reverse=True))
    if not partition or partition[-1] < 1:
        raise ValueError(f'amalgam needs a partition of positive parts, '
                         f'got {partition}.')
    c = partition[0]
    layers = [['x0'] + [(i, 1) for i in range(len(partition))]]
    for j in range(2, c + 1):
        layers.append([(i, j) for i, part in enumerate(partition)
                       if part >= j])

    ranks = [(f'v{j}', len(layer)) for j, layer in enumerate(layers, 1)]
    arrows = []
    for j in range(1, c):
        source, target = layers[j - 1], layers[j]
        # ad x_0 sends x_{i,j} to [x_{i,j}, x_0] = -x_{i,j+1}
        rows = []
        for x in source:
            row = [0] * len(target)
            if x != 'x0' and (x[0], j + 1) in target:
                row[target.index((x[0], j + 1))] = -1
            rows.append(tuple(row))
        arrows.append((f'ad0_{j}', f'v{j}', f'v{j + 1}', tuple(rows)))
        if j == 1:
            for i in range(len(partition)):
                rows = []
                for x in source:
                    row = [0] * len(target)
                    if x == 'x0' and (i, 2) in target:
                        row[target.index((i, 2))] = 1
                    rows.append(tuple(row))
                arrows.append((f'ad{i + 1}_1', 'v1', 'v2', tuple(rows)))
    label = ','.join(map(str, partition))
    return make_representation(
        ranks=ranks, arrows=arrows, name=f'amalgam_{label}')


def star(m, a):
    """a vertices of rank m, identity arrows from the centre v1 outward."""
    if m < 0 or a < 1:
        raise ValueError(f'star needs m >= 0 and a >= 1, got m={m}, a={a}.')
    return make_representation(
        ranks=[(f'v{k}', m) for k in range(1, a + 1)],
        arrows=[(f'a{k}', 'v1', f'v{k}', identity(m))
                for k in range(2, a + 1)],
        name=f'star_{m}_{a}')


def dual_star(m, a):
    """a vertices of rank m, identity arrows into the centre v1."""
    if m < 0 or a < 1:
        raise ValueError(
            f'dual_star needs m >= 0 and a >= 1, got m={m}, a={a}.')
    return make_representation(
        ranks=[(f'v{k}', m) for k in range(1, a + 1)],
        arrows=[(f'a{k}', f'v{k}', 'v1', identity(m))
                for k in range(2, a + 1)],
        name=f'dual_star_{m}_{a}')


def d4():
    """Three rank-one leaves mapping onto three distinct lines of Z^2."""
    return make_representation(
        ranks=[('c', 2), ('l1', 1), ('l2', 1), ('l3', 1)],
        arrows=[('a1', 'l1', 'c', ((1, 1),)),
                ('a2', 'l2', 'c', ((0, 1),)),
                ('a3', 'l3', 'c', ((1, 0),))],
        name='d4')


def kronecker(matrices, n1=None, n2=None, name=None):
    """Vertices v1 -> v2 with one arrow per matrix."""
    matrices = [tuple(tuple(row) for row in m) for m in matrices]
    if n1 is None:
        n1 = len(matrices[0])
    if n2 is None:
        n2 = len(matrices[0][0]) if matrices and matrices[0] else 0
    return make_representation(
        ranks=[('v1', n1), ('v2', n2)],
        arrows=[(f'f{k}', 'v1', 'v2', m) for k, m in enumerate(matrices, 1)],
        name=name or f'kronecker_{len(matrices)}')


def kron2():
    return kronecker(
        matrices=[identity(2), ((0, 1), (-1, 0))], name='kron2')


def elliptic(D=1):
    """Three arrows Z^3 -> Z^3 whose matrix of linear forms defines the
    curve Y^2 = X^3 - D X."""
    if D == 0:
        raise ValueError('elliptic needs D != 0.')
    f1 = ((0, 0, D), (1, 0, 0), (0, 1, 0))
    f2 = ((1, 0, 0), (0, 0, 1), (0, 0, 0))
    f3 = ((0, 1, 0), (0, 0, 0), (1, 0, 0))
    return kronecker(matrices=[f1, f2, f3], name=f'elliptic_{D}')


def free_module(n):
    return make_representation(
        ranks=[('v1', n)], arrows=[], name=f'free_{n}')


def hasse(n, covers):
    from ..posets import Poset, hasse_rep
    return hasse_rep(Poset.from_relations(n=n, relations=covers))


BUILTIN_REPS = {
    'heisenberg': heisenberg,
    'graded_heisenberg': graded_heisenberg,
    'fil4': fil4,
    'graded_fil4': graded_fil4,
    'm4': m4,
    'graded_m4': graded_m4,
    'free_nilpotent': free_nilpotent,
    'amalgam': amalgam,
    'star': star,
    'dual_star': dual_star,
    'd4': d4,
    'kron2': kron2,
    'kronecker': kronecker,
    'elliptic': elliptic,
    'free': free_module,
    'hasse': hasse,
    'graded_submodule': graded_submodule_rep,
}


def builtin_rep(name, **params):
    if name not in BUILTIN_REPS:
        raise ValueError(
            f'Unknown builtin representation {name!r}; available: '
            f'{sorted(BUILTIN_REPS)}.')
    try:
        return BUILTIN_REPS[name](**params)
    except TypeError as err:
        raise ValueError(f'Bad parameters for {name}: {err}')
