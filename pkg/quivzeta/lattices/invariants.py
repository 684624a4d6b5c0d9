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

import jax
import numpy as np

from ..quivers.centralizer import validate_grading
from ..quivers.homogeneity import check_homogeneity
from ..quivers.matrix_utils import (
    inverse_unimodular,
    matmul,
    min_valuation,
    smith_decomp,
    valuation)
from .counter import is_subrep
from .local_lattice import LatticeTuple, LocalLattice, local_hnf, local_smith


@dataclass(frozen=True)
class NuInvariant:
    """Elementary divisor type e_1 >= ... >= e_n of a lattice, written as
    the descent set I, the jumps r_i = e_i - e_{i+1} for i in I and the
    trailing exponent r_n = e_n."""
    n: int
    descents: tuple
    jumps: tuple
    trailing: int

    @property
    def exponents(self):
        jumps = dict(zip(self.descents, self.jumps))
        exps, running = [0] * self.n, self.trailing
        for i in range(self.n, 0, -1):
            if i < self.n:
                running += jumps.get(i, 0)
            exps[i - 1] = running
        return tuple(exps)

    @property
    def index_exponent(self):
        return sum(i * r for i, r in zip(self.descents, self.jumps)) + \
            self.n * self.trailing

    @property
    def tau(self):
        return self.exponents[0] if self.n else 0

    @property
    def is_maximal(self):
        return self.trailing == 0

    def elementary_divisors(self, p):
        return tuple(p ** e for e in self.exponents)

    def to_dict(self):
        return {'descents': list(self.descents),
                'jumps': list(self.jumps),
                'trailing': self.trailing}


def nu_invariant(lattice):
    n = lattice.n
    if n == 0:
        return NuInvariant(n=0, descents=(), jumps=(), trailing=0)
    valuations, _ = local_smith(
        lattice.rows, n, lattice.p, lattice.index_exponent + 1)
    assert len(valuations) == n
    exps = sorted(valuations, reverse=True)
    descents = tuple(i for i in range(1, n) if exps[i - 1] > exps[i])
    return NuInvariant(
        n=n,
        descents=descents,
        jumps=tuple(exps[i - 1] - exps[i] for i in descents),
        trailing=exps[-1])


def tau(lattices):
    return max([nu_invariant(lattice).tau for lattice in lattices.lattices],
               default=0)


def is_maximal(lattices):
    """Not all trailing exponents positive, i.e. not p times another
    tuple."""
    nus = [nu_invariant(lattice) for lattice in lattices.lattices
           if lattice.n]
    return not nus or any(nu.is_maximal for nu in nus)


def _cocentral_rows(grading, vertex, lattice):
    return matmul(lattice.rows, inverse_unimodular(grading.bases[vertex]),
                  lattice.n)


def _require_homogeneous(rep, grading):
    homogeneous, witness = check_homogeneity(rep, grading)
    if not homogeneous:
        k, t, h, i, j = witness
        raise ValueError(
            f'{rep.name or "Representation"} is not homogeneous for this '
            f'grading: arrow generator {k} maps layer {i} of {t} into layer '
            f'{j} of {h}.')


def delta_scale(rep, grading, lattices, m):
    """T delta^m: layer j coordinates of every vertex scaled by
    p^(m (c - j)), taken in the grading basis."""
    scaled = []
    for v, lattice in lattices.items():
        if lattice.n == 0 or m == 0:
            scaled.append(lattice)
            continue
        factors = [lattice.p ** (m * d) for d in grading.delta_exponents(v)]
        basis = tuple(tuple(f * x for x in row)
                      for f, row in zip(factors, grading.bases[v]))
        rows = matmul(_cocentral_rows(grading, v, lattice), basis, lattice.n)
        scaled.append(local_hnf(lattice.p, rows))
    return LatticeTuple(vertices=lattices.vertices, lattices=tuple(scaled))


def m_tilde_1_search(rep, grading, lattices, check=True):
    """Least m >= 0 with T delta^m a subrepresentation."""
    if check:
        _require_homogeneous(rep, grading)
    bound = tau(lattices)
    for m in range(bound + 1):
        if is_subrep(rep, delta_scale(rep, grading, lattices, m)):
            return m
    raise AssertionError(
        f'No delta power up to tau = {bound} makes {lattices} a '
        f'subrepresentation.')


def _smith_frame(rows, p):
    """Descending divisor exponents and alpha with rowspan(rows) equal to
    rowspan(D alpha^-1)."""
    n = len(rows)
    diagonal, _, t = smith_decomp(rows, n)
    exps = tuple(valuation(d, p) for d in reversed(diagonal))
    alpha = tuple(tuple(reversed(row)) for row in t)
    return exps, alpha, inverse_unimodular(alpha)


def m_tilde_1_formula(rep, grading, lattices, check=True):
    """tau(M) - m_1(M), where m_1 minimizes tau - e_{h,i} + e_{t,r} +
    v_{ir} over arrows and layer coordinates, v_{ir} being the least
    valuation of alpha_t^-1 C alpha_h over rows rho >= r and columns
    iota <= i, capped at tau(h)."""
    if check:
        _require_homogeneous(rep, grading)
    p = lattices.p
    frames = {v: _smith_frame(_cocentral_rows(grading, v, lattice), p)
              for v, lattice in lattices.items() if lattice.n}

    bound = tau(lattices)
    m_1 = bound
    for arrow in rep.arrows:
        t, h = arrow.tail, arrow.head
        if t not in frames or h not in frames:
            continue
        n_t, n_h = rep.rank(t), rep.rank(h)
        e_t, _, alpha_t_inv = frames[t]
        e_h, alpha_h, _ = frames[h]
        # arrow map in grading coordinates, then in Smith coordinates
        c = matmul(matmul(grading.bases[t], rep.matrix(arrow.id), n_h),
                   inverse_unimodular(grading.bases[h]), n_h)
        x = matmul(matmul(alpha_t_inv, c, n_h), alpha_h, n_h)

        tau_h = e_h[0]
        for r in range(n_t):
            for i in range(n_h):
                v_ir = min_valuation(
                    [x[rho][iota] for rho in range(r, n_t)
                     for iota in range(i + 1)], p)
                v_ir = tau_h if v_ir is None else min(v_ir, tau_h)
                m_1 = min(m_1, bound - e_h[i] + e_t[r] + v_ir)
    return max(0, bound - m_1)


def m_tilde_1(rep, grading, lattices, check=True):
    by_search = m_tilde_1_search(rep, grading, lattices, check=check)
    by_formula = m_tilde_1_formula(rep, grading, lattices, check=False)
    assert by_search == by_formula, (by_search, by_formula)
    return by_search


def m_2(rep, grading, lattices, check=True):
    """Least valuation over the last-layer columns of M B^-1."""
    if check:
        validate_grading(rep, grading)
    if not is_maximal(lattices):
        raise ValueError(
            'm_2 is defined on maximal tuples only; divide the tuple by the '
            'common power of p first.')
    values = []
    for v, lattice in lattices.items():
        n_last = grading.layer_ranks[v][-1] if grading.layer_ranks[v] else 0
        if lattice.n == 0 or n_last == 0:
            continue
        rows = _cocentral_rows(grading, v, lattice)
        value = min_valuation(
            [x for row in rows for x in row[lattice.n - n_last:]],
            lattice.p)
        if value is not None:
            values.append(value)
    return min(values, default=0)


def min_entry_valuation(rep, grading, lattices, m=0):
    """v(M delta^m) in grading coordinates."""
    values = []
    for v, lattice in lattices.items():
        if lattice.n == 0:
            continue
        factors = [lattice.p ** (m * d) for d in grading.delta_exponents(v)]
        rows = _cocentral_rows(grading, v, lattice)
        value = min_valuation(
            [x * f for row in rows for x, f in zip(row, factors)],
            lattice.p)
        if value is not None:
            values.append(value)
    return min(values, default=0)


def mc_property(rep, grading, lattices):
    return min_entry_valuation(rep, grading, lattices) == \
        min_entry_valuation(rep, grading, lattices, m=1)


def homothety_ray(rep, grading, lattices, bound):
    """The m <= bound for which T delta^m is a subrepresentation."""
    return tuple(m for m in range(bound + 1)
                 if is_subrep(rep, delta_scale(rep, grading, lattices, m)))


def random_lattice_tuple(rng, rep, p, max_exp):
    """Seeded Hermite forms with diagonal exponents in [0, max_exp]."""
    lattices = []
    keys = jax.random.split(rng, len(rep.vertices))
    for v, key in zip(rep.vertices, keys):
        n = rep.rank(v)
        exp_key, residue_key = jax.random.split(key)
        exps = np.asarray(jax.random.randint(
            exp_key, shape=(n,), minval=0, maxval=max_exp + 1)).tolist()
        draws = np.asarray(jax.random.randint(
            residue_key, shape=(n, n), minval=0, maxval=2 ** 30)).tolist()
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = p ** exps[i]
            for j in range(i + 1, n):
                rows[i][j] = draws[i][j] % p ** exps[j]
        lattices.append(
            LocalLattice(p=p, rows=tuple(tuple(row) for row in rows)))
    return LatticeTuple(vertices=rep.vertices, lattices=tuple(lattices))
