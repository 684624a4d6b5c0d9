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

import json

from .centralizer import Grading
from .representation import make_representation


def _load(source):
    if isinstance(source, dict):
        return source
    with open(source) as f:
        return json.load(f)


def _is_int_matrix(value):
    return isinstance(value, list) and all(
        isinstance(row, list) and all(
            isinstance(x, int) and not isinstance(x, bool) for x in row)
        for row in value)


def parse_representation(data, name=None):
    errors = []
    vertices = data.get('vertices') if isinstance(data, dict) else None
    arrows = data.get('arrows', []) if isinstance(data, dict) else None
    if not isinstance(vertices, list):
        raise ValueError('Representation file: "vertices" must be a list.')
    if not isinstance(arrows, list):
        raise ValueError('Representation file: "arrows" must be a list.')

    ranks = []
    for k, vertex in enumerate(vertices):
        if not isinstance(vertex, dict) or 'id' not in vertex:
            errors.append(f'vertices[{k}]: missing "id"')
            continue
        rank = vertex.get('rank')
        if not isinstance(rank, int) or rank < 0:
            errors.append(f'vertices[{k}] ({vertex["id"]}): "rank" must be '
                          f'a nonneg integer, got {rank!r}')
            continue
        ranks.append((str(vertex['id']), rank))
    rank_of = dict(ranks)

    parsed_arrows = []
    for k, arrow in enumerate(arrows):
        if not isinstance(arrow, dict):
            errors.append(f'arrows[{k}]: must be an object')
            continue
        missing = [key for key in ('id', 'tail', 'head', 'matrix')
                   if key not in arrow]
        if missing:
            errors.append(f'arrows[{k}]: missing {missing}')
            continue
        label = f'arrows[{k}] ({arrow["id"]})'
        tail, head = str(arrow['tail']), str(arrow['head'])
        for end, vertex in (('tail', tail), ('head', head)):
            if vertex not in rank_of:
                errors.append(f'{label}: unknown {end} vertex {vertex!r}')
        matrix = arrow['matrix']
        if not _is_int_matrix(matrix):
            errors.append(f'{label}: "matrix" must be a list of integer rows')
            continue
        if tail in rank_of and head in rank_of:
            if len(matrix) != rank_of[tail] or \
                    any(len(row) != rank_of[head] for row in matrix):
                errors.append(f'{label}: matrix must be {rank_of[tail]} x '
                              f'{rank_of[head]} (tail rank x head rank)')
        parsed_arrows.append((str(arrow['id']), tail, head, matrix))

    if errors:
        raise ValueError('Invalid representation file: ' + '; '.join(errors))
    return make_representation(ranks=ranks, arrows=parsed_arrows, name=name)


def load_representation(source):
    name = None if isinstance(source, dict) else str(source)
    return parse_representation(_load(source), name=name)


def load_grading(source):
    data = _load(source)
    errors = []
    if not isinstance(data.get('c'), int):
        errors.append('"c" must be an integer')
    vertices = data.get('vertices')
    if not isinstance(vertices, dict):
        errors.append('"vertices" must map vertex ids to layers and basis')
        vertices = {}
    layer_ranks, bases = {}, {}
    for v, entry in vertices.items():
        layers, basis = entry.get('layers'), entry.get('basis')
        if not isinstance(layers, list) or \
                not all(isinstance(x, int) for x in layers):
            errors.append(f'vertex {v}: "layers" must be a list of integers')
        if not _is_int_matrix(basis):
            errors.append(f'vertex {v}: "basis" must be an integer matrix')
        if not errors:
            layer_ranks[v] = tuple(layers)
            bases[v] = tuple(tuple(row) for row in basis)
    if errors:
        raise ValueError('Invalid grading file: ' + '; '.join(errors))
    return Grading(c=data['c'], layer_ranks=layer_ranks, bases=bases)


def load_generators(source):
    data = _load(source) if not isinstance(source, list) else source
    if isinstance(data, dict):
        data = data.get('generators')
    if not isinstance(data, list) or not all(_is_int_matrix(m) for m in data):
        raise ValueError(
            'Invalid generators file: expected a list of integer matrices '
            'or {"generators": [...]}.')
    return [tuple(tuple(row) for row in m) for m in data]
