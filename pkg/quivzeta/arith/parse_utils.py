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

import re

from sympy import Mul, Symbol, expand, fraction, together
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations)

from .poly_utils import FrobeniusSymbol, make_ring
from .rational import RationalFn

TRANSFORMATIONS = standard_transformations + (
    implicit_multiplication_application, convert_xor)


def render_monomial(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f'{name}^{e}')
    return '*'.join(parts)


def render_poly(poly):
    names = [str(s) for s in poly.ring.symbols]
    if poly.is_zero:
        return '0'

    text = ''
    for exps in sorted(poly.keys()):
        coeff = int(poly[exps])
        mono = render_monomial(names, exps)
        if not mono:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f'{abs(coeff)}*{mono}'
        if not text:
            text = body if coeff > 0 else f'-{body}'
        else:
            text += f'+{body}' if coeff > 0 else f'-{body}'
    return text


def _wrap(text):
    return text if re.fullmatch(r'-?[\w^*]+', text) else f'({text})'


def render(fn):
    """Canonical string: expanded numerator over the denominator, which is
    printed as a product of (1-m) factors when the factorization is known."""
    num_text = render_poly(fn.numerator)
    qt_names = [str(s) for s in fn.ring.symbols[:1 + fn.n_t]]

    if fn.factorization is None:
        if fn.denominator == fn.ring.one:
            return num_text
        return f'{_wrap(num_text)}/{_wrap(render_poly(fn.denominator))}'

    mono, factors = fn.factorization
    pieces = []
    mono_text = render_monomial(qt_names, mono)
    if mono_text:
        pieces.append(mono_text)

    grouped = {}
    for f in factors:
        grouped[f] = grouped.get(f, 0) + 1
    for f, mult in grouped.items():
        piece = f'(1-{render_monomial(qt_names, f)})'
        pieces.append(piece if mult == 1 else f'{piece}^{mult}')

    if not pieces:
        return num_text
    den_text = '*'.join(pieces) if mono_text else ''.join(pieces)
    if len(pieces) > 1 or mono_text:
        den_text = f'({den_text})'
    return f'{_wrap(num_text)}/{den_text}'


def parse_rational(text, n_t=None, symbols=(), t_names=None):
    """Parses the grammar produced by `render`; symbols default to weight 1
    and are detected by name when passed as strings."""
    if t_names is not None:
        n_t = len(t_names)
    if n_t is None:
        indices = [int(i) for i in re.findall(r't(\d+)', text)]
        n_t = max(indices) if indices else 1
    symbols = tuple(
        s if isinstance(s, FrobeniusSymbol) else FrobeniusSymbol(name=s)
        for s in symbols)

    ring = make_ring(
        n_t=n_t, symbol_names=[s.name for s in symbols], t_names=t_names)
    names = [str(s) for s in ring.symbols]
    local_dict = {name: Symbol(name) for name in names}
    try:
        expr = parse_expr(
            text, local_dict=local_dict, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError) as err:
        raise ValueError(f'Cannot parse rational function {text!r}: {err}')

    unknown = {str(s) for s in expr.free_symbols} - set(names)
    if unknown:
        raise ValueError(
            f'Unknown variables {sorted(unknown)} in {text!r}; '
            f'expected {names}.')

    num_expr, den_expr = fraction(expr)
    numerator = ring.from_expr(expand(num_expr))

    n_qt = n_t + 1
    mono = [0] * n_qt
    factors = []
    for arg in Mul.make_args(den_expr):
        base, power = arg.as_base_exp()
        base_poly = ring.from_expr(expand(base))
        factor = _as_one_minus_monomial(base_poly, n_qt)
        if len(base_poly) == 1 and base_poly.LC == 1 and \
                not any(base_poly.LM[n_qt:]):
            mono = [m + int(power) * e for m, e in zip(mono, base_poly.LM)]
        elif factor is not None and power.is_Integer and power > 0:
            factors.extend([factor] * int(power))
        else:
            num_expr, den_expr = fraction(together(expr))
            return RationalFn(
                numerator=ring.from_expr(expand(num_expr)),
                denominator=ring.from_expr(expand(den_expr)),
                n_t=n_t,
                symbols=symbols,
                t_names=t_names)

    return RationalFn(
        numerator=numerator,
        n_t=n_t,
        symbols=symbols,
        factorization=(tuple(mono), tuple(factors)),
        t_names=t_names)


def _as_one_minus_monomial(poly, n_qt):
    if len(poly) != 2 or poly.get(poly.ring.zero_monom) != 1:
        return None
    for exps, coeff in poly.items():
        if exps == poly.ring.zero_monom:
            continue
        if coeff != -1 or any(exps[n_qt:]):
            return None
        return tuple(exps[:n_qt])
    return None
