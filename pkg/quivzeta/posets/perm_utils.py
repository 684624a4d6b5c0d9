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
from itertools import permutations


@dataclass(frozen=True)
class PermStats:
    """One-line permutation w of [n] with its descent statistics."""
    word: tuple
    descents: tuple
    maj: int
    des: int
    length: int


def descent_set(word):
    return tuple(i for i in range(1, len(word)) if word[i - 1] > word[i])


def inversions(word):
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word))
               if word[i] > word[j])


def perm_stats(word):
    word = tuple(word)
    descents = descent_set(word)
    return PermStats(
        word=word,
        descents=descents,
        maj=sum(descents),
        des=len(descents),
        length=inversions(word))


def symmetric_group(n):
    """S_n in lex order of one-line words."""
    return [tuple(w) for w in permutations(range(1, n + 1))]


def times_longest(word):
    """w w_0 with products composed left to right, so that w_0 replaces
    every value x by n + 1 - x."""
    n = len(word)
    return tuple(n + 1 - x for x in word)
