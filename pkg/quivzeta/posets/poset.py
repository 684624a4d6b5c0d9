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

import heapq
import json
from dataclasses import dataclass
from functools import cached_property


def _closure(n, relations):
    """Strict up-sets {j : i < j} of the order generated by `relations`;
    raises on a cycle."""
    succ = {i: set() for i in range(1, n + 1)}
    for i, j in relations:
        succ[i].add(j)
    up = {}
    for i in range(1, n + 1):
        seen, stack = set(), list(succ[i])
        while stack:
            j = stack.pop()
            if j not in seen:
                seen.add(j)
                stack.extend(succ[j])
        if i in seen:
            raise ValueError(f'Relations contain a cycle through {i}.')
        up[i] = frozenset(seen)
    return up


def _reduce(n, up):
    return tuple(sorted(
        (i, j) for i in range(1, n + 1) for j in up[i]
        if not any(j in up[k] for k in up[i])))


@dataclass(frozen=True)
class Poset:
    """Naturally labeled partial order on [n], stored by its covers.
    `relabeling[x - 1]` is the label given to input element x when the
    input was not natural."""
    n: int
    covers: tuple
    relabeling: tuple = None

    def __post_init__(self):
        errors = []
        for i, j in self.covers:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                errors.append(f'cover ({i}, {j}) leaves [1, {self.n}]')
            elif i >= j:
                errors.append(f'cover ({i}, {j}) is not naturally labeled')
        if errors:
            raise ValueError('Invalid poset: ' + '; '.join(errors))
        if _reduce(self.n, _closure(self.n, self.covers)) != \
                tuple(sorted(self.covers)):
            raise ValueError(
                f'Covers {list(self.covers)} are not a Hasse diagram; build '
                f'the poset with Poset.from_relations.')

    @classmethod
    def from_relations(cls, n, relations):
        """Hasse diagram of the order generated by `relations`, relabeled
        by the smallest-first topological order when not natural."""
        relations = [tuple(r) for r in relations]
        bad = [r for r in relations if len(r) != 2 or r[0] == r[1] or
               not all(isinstance(x, int) and 1 <= x <= n for x in r)]
        if bad:
            raise ValueError(
                f'Relations {bad} must be pairs of distinct elements of '
                f'[1, {n}].')
        up = _closure(n, relations)
        covers = _reduce(n, up)
        if all(i < j for i, j in covers):
            return cls(n=n, covers=covers)

        indegree = {x: 0 for x in range(1, n + 1)}
        for _, j in covers:
            indegree[j] += 1
        ready = [x for x in indegree if indegree[x] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            x = heapq.heappop(ready)
            order.append(x)
            for i, j in covers:
                if i == x:
                    indegree[j] -= 1
                    if indegree[j] == 0:
                        heapq.heappush(ready, j)
        label = {x: k for k, x in enumerate(order, 1)}
        return cls(
            n=n,
            covers=tuple(sorted((label[i], label[j]) for i, j in covers)),
            relabeling=tuple(label[x] for x in range(1, n + 1)))

    @classmethod
    def from_dict(cls, data):
        valid = isinstance(data, dict) and isinstance(data.get('n'), int) \
            and data['n'] >= 0 and isinstance(data.get('covers', []), list)
        if not valid:
            raise ValueError(
                'Poset file must look like {"n": 4, "covers": [[1, 3], ...]}.')
        return cls.from_relations(
            n=data['n'], relations=data.get('covers', []))

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.from_dict(json.load(f))

    @cached_property
    def up_sets(self):
        return _closure(self.n, self.covers)

    def less(self, i, j):
        return j in self.up_sets[i]

    def upper_covers(self, x):
        return [j for i, j in self.covers if i == x]

    def lower_covers(self, x):
        return [i for i, j in self.covers if j == x]

    def to_dict(self):
        data = {'n': self.n, 'covers': [list(c) for c in self.covers]}
        if self.relabeling is not None:
            data['relabeling'] = list(self.relabeling)
        return data


def chain(n):
    return Poset(n=n, covers=tuple((i, i + 1) for i in range(1, n)))


def antichain(n):
    return Poset(n=n, covers=())


def star_poset(a):
    """Root 1 below the a - 1 elements 2..a."""
    return Poset(n=a, covers=tuple((1, j) for j in range(2, a + 1)))


def dual_star_poset(a):
    """Elements 1..a-1 below the top a."""
    return Poset(n=a, covers=tuple((i, a) for i in range(1, a)))


POSET_CATALOG = {
    'chain_3': chain(3),
    'chain_5': chain(5),
    'antichain_2': antichain(2),
    'antichain_4': antichain(4),
    'star_3': star_poset(3),
    'star_4': star_poset(4),
    'dual_star_3': dual_star_poset(3),
    'dual_star_4': dual_star_poset(4),
    'vee_5': Poset(n=5, covers=((1, 2), (1, 3), (2, 4), (3, 5))),
    'wedge_5': Poset(n=5, covers=((1, 3), (2, 4), (3, 5), (4, 5))),
    'non_delta': Poset(n=4, covers=((1, 2), (1, 3), (3, 4))),
    'diamond': Poset(n=4, covers=((1, 2), (1, 3), (2, 4), (3, 4))),
    'zigzag': Poset(n=4, covers=((1, 3), (2, 3), (2, 4))),
    'chain_2_plus_1': Poset(n=3, covers=((1, 2),)),
    'pentagon': Poset(n=5, covers=((1, 2), (1, 4), (2, 3), (3, 5), (4, 5))),
    'crown_6': Poset(n=6, covers=((1, 4), (1, 5), (2, 5), (2, 6), (3, 4),
                                  (3, 6))),
}
