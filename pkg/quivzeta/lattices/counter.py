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

from dataclasses import dataclass, field
from functools import partial

from sympy import isprime

from ..deployers import Deployer
from ..quivers.matrix_utils import matmul
from ..quivers.representation import make_representation
from .enum_utils import (
    count_sublattices,
    enum_sublattices,
    enumerate_index_vectors,
    predicted_candidates)
from .local_lattice import LocalLattice, preimage_lattice

MODES = ('univariate', 'multivariate')


@dataclass
class CountTable:
    """Subrepresentation counts at one prime, keyed by total index exponent
    (univariate) or by index exponent vector in vertex order."""
    p: int
    mode: str
    counts: dict
    vertices: tuple = field(default=())

    def __post_init__(self):
        assert self.mode in MODES
        zero = 0 if self.mode == 'univariate' else (0,) * len(self.vertices)
        assert self.counts.get(zero, 1) == 1

    def __getitem__(self, key):
        return self.counts.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, CountTable) and self.to_dict() == \
            other.to_dict()

    def aggregate(self):
        if self.mode == 'univariate':
            return self
        counts = {}
        for exps, value in self.counts.items():
            counts[sum(exps)] = counts.get(sum(exps), 0) + value
        return CountTable(p=self.p, mode='univariate',
                          counts=dict(sorted(counts.items())))

    def as_list(self):
        counts = self.aggregate().counts
        return [counts.get(e, 0) for e in range(max(counts) + 1)]

    def to_dict(self):
        if self.mode == 'univariate':
            counts = {str(e): value for e, value in self.counts.items()}
        else:
            counts = {','.join(map(str, exps)): value
                      for exps, value in self.counts.items()}
        data = {'prime': self.p, 'mode': self.mode, 'counts': counts}
        if self.mode == 'multivariate':
            data['vertices'] = list(self.vertices)
        return data

    @classmethod
    def from_dict(cls, data):
        if data['mode'] == 'univariate':
            counts = {int(key): value for key, value in data['counts'].items()}
        else:
            counts = {tuple(int(x) for x in key.split(',')): value
                      for key, value in data['counts'].items()}
        return cls(p=data['prime'], mode=data['mode'], counts=counts,
                   vertices=tuple(data.get('vertices', ())))


def is_subrep(rep, lattices):
    """Every row of M_tail F_a lies in the span of M_head, tested by
    x adj(M_head) = 0 mod det(M_head)."""
    for v, lattice in lattices.items():
        if v not in rep.ranks or lattice.n != rep.rank(v):
            raise ValueError(
                f'Lattice at vertex {v!r} has dimension {lattice.n}, which '
                f'does not match the representation ranks {rep.ranks}.')
    if set(lattices.vertices) != set(rep.vertices):
        raise ValueError(
            f'Lattice tuple covers {list(lattices.vertices)} but the '
            f'representation has vertices {list(rep.vertices)}.')
    for arrow in rep.arrows:
        tail, head = lattices[arrow.tail], lattices[arrow.head]
        images = matmul(tail.rows, rep.matrix(arrow.id), head.n)
        if not head.contains_rows(images):
            return False
    return True


def head_first_order(quiver):
    order = quiver.topological_order()
    if order is None:
        return tuple(quiver.vertices)
    return tuple(reversed(order))


def _arrow_schedule(rep, order):
    """For each position in `order`, the arrows whose endpoints are both
    placed once that vertex is."""
    placed, schedule = set(), []
    for v in order:
        placed.add(v)
        schedule.append([
            arrow for arrow in rep.arrows
            if v in (arrow.tail, arrow.head) and arrow.tail in placed and
            arrow.head in placed])
    return schedule


def _reduced_images(arrow_matrix, head):
    """F adj(M_head) mod det(M_head)."""
    det = head.det
    return tuple(tuple(x % det for x in row)
                 for row in matmul(arrow_matrix, head.adjugate, head.n))


def _count_naive(exps, rep, p, order):
    schedule = _arrow_schedule(rep, order)
    assigned, reduced = {}, {}

    def admissible(arrows):
        for arrow in arrows:
            head = assigned[arrow.head]
            det = head.det
            images = matmul(
                assigned[arrow.tail].rows, reduced[arrow.id], head.n)
            if any(x % det for row in images for x in row):
                return False
        return True

    def extend(k):
        if k == len(order):
            return 1
        v = order[k]
        total = 0
        for lattice in enum_sublattices(rep.rank(v), p, exps[v]):
            assigned[v] = lattice
            for arrow in rep.quiver.in_arrows(v):
                reduced[arrow.id] = _reduced_images(
                    rep.matrix(arrow.id), lattice)
            if admissible(schedule[k]):
                total += extend(k + 1)
        return total

    return extend(0)


def _count_accelerated(exps, rep, p, order):
    # heads are placed before tails, so each new lattice only has to lie in
    # the preimage of its already placed heads
    assigned = {}

    def extend(k):
        if k == len(order):
            return 1
        v = order[k]
        constraints = []
        for arrow in rep.quiver.out_arrows(v):
            head = assigned[arrow.head]
            constraints.append((
                _reduced_images(rep.matrix(arrow.id), head),
                head.index_exponent))
        preimage = preimage_lattice(p, rep.rank(v), constraints)
        relative = exps[v] - preimage.index_exponent
        if relative < 0:
            return 0
        if not rep.quiver.in_arrows(v):
            n_choices = count_sublattices(rep.rank(v), p, relative)
            return n_choices * extend(k + 1) if n_choices else 0

        total = 0
        for sub in enum_sublattices(rep.rank(v), p, relative):
            assigned[v] = LocalLattice.from_triangular(
                p, matmul(sub.rows, preimage.rows, rep.rank(v)))
            total += extend(k + 1)
        return total

    return extend(0)


def count_index_vector(exps, rep, p, order, accelerate=False):
    """Number of subrepresentation supports with the given per-vertex index
    exponents."""
    exps = dict(zip(rep.vertices, exps))
    if accelerate:
        return _count_accelerated(exps=exps, rep=rep, p=p, order=order)
    return _count_naive(exps=exps, rep=rep, p=p, order=order)


class SubrepCounter:
    def __init__(self, deployer, rep, p, accelerate=False):
        if rep.total_rank < 1:
            raise ValueError(
                f'Counting needs total rank at least 1, got {rep.ranks}.')
        if not isprime(p):
            raise ValueError(f'{p} is not a prime.')

        if accelerate and not rep.quiver.is_acyclic():
            deployer.log_info(
                f'{rep.name or "representation"} has oriented cycles; '
                f'falling back to the naive enumeration.')
            accelerate = False

        self._deployer = deployer
        self._rep = rep
        self._p = p
        self._accelerate = accelerate
        self._order = head_first_order(rep.quiver)

    def count(self, bound, mode='univariate'):
        if mode not in MODES:
            raise ValueError(f'mode must be one of {MODES}, got {mode!r}.')
        if bound < 0:
            raise ValueError(f'bound must be nonnegative, got {bound}.')

        ranks = tuple(self._rep.rank(v) for v in self._rep.vertices)
        self._deployer.check_candidates(
            predicted_candidates(ranks=ranks, p=self._p, bound=bound),
            desc=f'{self._rep.name or "count"} at p={self._p}, E={bound}')

        vectors = enumerate_index_vectors(ranks=ranks, bound=bound)
        results = self._deployer.run_work_units(
            fn=partial(count_index_vector,
                       rep=self._rep,
                       p=self._p,
                       order=self._order,
                       accelerate=self._accelerate),
            units=vectors,
            desc=f'Counting {self._rep.name or "subrepresentations"} '
                 f'(p={self._p})')

        table = CountTable(
            p=self._p,
            mode='multivariate',
            counts=dict(zip(vectors, results)),
            vertices=tuple(self._rep.vertices))
        return table if mode == 'multivariate' else table.aggregate()

    @property
    def rep(self):
        return self._rep

    @property
    def p(self):
        return self._p

    @property
    def accelerate(self):
        return self._accelerate


def count_subreps(rep, p, bound, mode='univariate', deployer=None,
                  accelerate=False):
    if deployer is None:
        deployer = Deployer(verbose=False)
    counter = SubrepCounter(
        deployer=deployer, rep=rep, p=p, accelerate=accelerate)
    return counter.count(bound=bound, mode=mode)


def count_invariant_sublattices(operators, p, bound, n=None, deployer=None):
    """Sublattices of Z_p^n of index p^e invariant under every operator,
    for e <= bound."""
    operators = [tuple(tuple(row) for row in op) for op in operators]
    if n is None:
        if not operators:
            raise ValueError('Pass n when the operator list is empty.')
        n = len(operators[0])
    bad = [k for k, op in enumerate(operators)
           if len(op) != n or any(len(row) != n for row in op)]
    if bad:
        raise ValueError(f'Operators {bad} are not {n} x {n} matrices.')

    rep = make_representation(
        ranks=[('v1', n)],
        arrows=[(f'op{k}', 'v1', 'v1', op)
                for k, op in enumerate(operators, 1)],
        name='operators')
    return count_subreps(rep=rep, p=p, bound=bound, deployer=deployer)
