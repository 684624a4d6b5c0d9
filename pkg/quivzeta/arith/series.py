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

from sympy.polys.polyerrors import ExactQuotientFailed

from .poly_utils import coefficient_ring, exponent_vectors


class PowerSeries:
    """Truncated power series in the t-variables.

    Coefficients are polynomials in q and the Frobenius symbols, or plain
    integers once q has been evaluated. Only t-exponent vectors of total
    degree <= bound are stored.
    """
    def __init__(self, bound, n_t, coeffs, coeff_ring=None):
        self._bound = bound
        self._n_t = n_t
        self._coeff_ring = coeff_ring
        self._coeffs = {
            tuple(exps): c for exps, c in coeffs.items()
            if c and sum(exps) <= bound}

    @classmethod
    def from_poly(cls, poly, n_t, bound):
        """Splits an IntPoly over (q, t..., symbols) by t-exponent."""
        symbol_names = [str(s) for s in poly.ring.symbols[1 + n_t:]]
        ring = coefficient_ring(symbol_names)
        coeffs = {}
        for exps, coeff in poly.items():
            t_exps = exps[1:1 + n_t]
            if sum(t_exps) > bound:
                continue
            rest = (exps[0],) + tuple(exps[1 + n_t:])
            coeffs[t_exps] = coeffs.get(t_exps, ring.zero) + \
                ring.from_dict({rest: coeff})
        return cls(bound=bound, n_t=n_t, coeffs=coeffs, coeff_ring=ring)

    @property
    def bound(self):
        return self._bound

    @property
    def n_t(self):
        return self._n_t

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coefficient(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        exps = tuple(exps)
        if exps in self._coeffs:
            return self._coeffs[exps]
        return self._coeff_ring.zero if self._coeff_ring is not None else 0

    def _zero(self):
        return self._coeff_ring.zero if self._coeff_ring is not None else 0

    def _with_ring(self, ring):
        if self._coeff_ring == ring:
            return self
        if self._coeff_ring is None:
            coeffs = {exps: ring(c) for exps, c in self._coeffs.items()}
        else:
            coeffs = {exps: c.set_ring(ring)
                      for exps, c in self._coeffs.items()}
        return PowerSeries(
            bound=self._bound, n_t=self._n_t, coeffs=coeffs, coeff_ring=ring)

    def _unify(self, other):
        """Both series over one coefficient ring holding every symbol."""
        if self._n_t != other.n_t:
            raise ValueError(
                f'Cannot combine series in {self._n_t} and {other.n_t} '
                f't-variables.')
        if self._coeff_ring == other._coeff_ring:
            return self, other
        names = set()
        for ring in (self._coeff_ring, other._coeff_ring):
            if ring is not None:
                names |= {str(s) for s in ring.symbols[1:]}
        ring = coefficient_ring(sorted(names))
        return self._with_ring(ring), other._with_ring(ring)

    def __add__(self, other):
        a, b = self._unify(other)
        coeffs = dict(a.coeffs)
        for exps, c in b.coeffs.items():
            coeffs[exps] = coeffs.get(exps, a._zero()) + c
        return PowerSeries(
            bound=min(a.bound, b.bound), n_t=a.n_t, coeffs=coeffs,
            coeff_ring=a._coeff_ring)

    def __mul__(self, other):
        a, b = self._unify(other)
        bound = min(a.bound, b.bound)
        coeffs = {}
        for exps1, c1 in a.coeffs.items():
            for exps2, c2 in b.coeffs.items():
                exps = tuple(x + y for x, y in zip(exps1, exps2))
                if sum(exps) > bound:
                    continue
                coeffs[exps] = coeffs.get(exps, a._zero()) + c1 * c2
        return PowerSeries(
            bound=bound, n_t=a.n_t, coeffs=coeffs, coeff_ring=a._coeff_ring)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._n_t == other.n_t and self._bound == other.bound and \
            self._coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f'PowerSeries(bound={self._bound}, coeffs={self._coeffs})'

    def evaluate(self, q, symbols=None):
        """Integer coefficients at q = `q` with symbols set from the dict."""
        if self._coeff_ring is None:
            return PowerSeries(
                bound=self._bound, n_t=self._n_t, coeffs=self._coeffs)

        gens = self._coeff_ring.gens
        names = [str(s) for s in self._coeff_ring.symbols]
        substitutions = [(gens[0], q)]
        for name, gen in zip(names[1:], gens[1:]):
            if symbols is None or name not in symbols:
                raise ValueError(f'No value supplied for symbol {name}.')
            substitutions.append((gen, symbols[name]))

        coeffs = {}
        for exps, c in self._coeffs.items():
            value = c.subs(substitutions)
            coeffs[exps] = int(value.coeff(1)) if value else 0
        return PowerSeries(bound=self._bound, n_t=self._n_t, coeffs=coeffs)

    def to_dict(self):
        return {','.join(map(str, exps)): (
            int(c) if self._coeff_ring is None else str(c.as_expr()))
            for exps, c in sorted(self._coeffs.items())}


def _strip_q_power(num, den, n_t):
    """Cancels the q^k of a +-q^k constant term from both sides; raises if
    the numerator is not divisible by it."""
    t0 = {exps: c for exps, c in den.items() if not any(exps[1:1 + n_t])}
    d0 = den.ring.from_dict(t0) if t0 else den.ring.zero
    if len(t0) != 1 or abs(list(t0.values())[0]) != 1 or \
            any(list(t0)[0][1 + n_t:]):
        raise ValueError(
            f'Denominator at t=0 is {d0.as_expr()}; series expansion needs '
            f'+-1 or +-q^k there.')

    k = list(t0)[0][0]
    if k == 0:
        return num, den
    q_k = den.ring.gens[0] ** k
    try:
        return num.exquo(q_k), den.exquo(q_k)
    except ExactQuotientFailed:
        raise ValueError(
            f'Denominator at t=0 is {d0.as_expr()} but q^{k} does not divide '
            f'the whole function; its series would need negative powers of '
            f'q.')


def series_expand(fn, bound):
    """Truncated expansion of a RationalFn to total t-degree `bound`. A
    constant term +-q^k is accepted when q^k divides numerator and
    denominator alike."""
    numerator, denominator = _strip_q_power(
        fn.numerator, fn.denominator, fn.n_t)
    num = PowerSeries.from_poly(numerator, n_t=fn.n_t, bound=bound)
    den = PowerSeries.from_poly(denominator, n_t=fn.n_t, bound=bound)
    zero_exps = (0,) * fn.n_t
    d0 = den.coefficient(zero_exps)

    ring = num._coeff_ring
    den_terms = [(exps, c) for exps, c in den.coeffs.items()
                 if exps != zero_exps]
    coeffs = {}
    for exps in exponent_vectors(fn.n_t, bound):
        acc = num.coefficient(exps)
        for d_exps, d_coeff in den_terms:
            rest = tuple(x - y for x, y in zip(exps, d_exps))
            if min(rest) < 0 or rest not in coeffs:
                continue
            acc = acc - d_coeff * coeffs[rest]
        if acc:
            coeffs[exps] = acc.exquo(d0)
    return PowerSeries(
        bound=bound, n_t=fn.n_t, coeffs=coeffs, coeff_ring=ring)
