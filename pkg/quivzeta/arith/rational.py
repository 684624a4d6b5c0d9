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

from sympy import ZZ
from sympy.polys.rings import PolyElement

from .poly_utils import (
    FrobeniusSymbol,
    make_ring,
    monomial,
    poly_from_terms,
    lowest_term)


class RationalFn:
    """Ratio of integer polynomials in q, t-variables and Frobenius symbols.

    The denominator may carry a factorization `monomial * prod(1 - f)` where
    every f is a monomial in q and the t-variables. Values are not reduced
    to lowest terms; equality is decided by cross-multiplication.
    """
    def __init__(self,
                 numerator,
                 denominator=1,
                 n_t=1,
                 symbols=(),
                 factorization=None,
                 t_names=None):
        symbols = tuple(sorted(symbols, key=lambda s: s.name))
        self._n_t = n_t
        self._symbols = symbols
        self._ring = make_ring(
            n_t=n_t,
            symbol_names=[s.name for s in symbols],
            t_names=t_names)

        num = self._to_ring(numerator)
        if factorization is not None:
            mono, factors = factorization
            mono = tuple(mono)
            factors = tuple(tuple(f) for f in factors)
            assert len(mono) == n_t + 1
            den = self._expand_factorization(mono=mono, factors=factors)
            factorization = (mono, factors)
        else:
            den = self._to_ring(denominator)

        if den.is_zero:
            raise ValueError('RationalFn denominator must be nonzero.')

        if factorization is None:
            content = ZZ.gcd(num.content(), den.content())
            if content != 1:
                num = num.exquo_ground(content)
                den = den.exquo_ground(content)
            if lowest_term(den)[1] < 0:
                num, den = -num, -den

        self._num = num
        self._den = den
        self._factorization = factorization

    @classmethod
    def from_factors(cls,
                     numerator,
                     factors,
                     n_t=1,
                     symbols=(),
                     monomial_exps=None,
                     t_names=None):
        """`factors` lists (q-exponent, t-exponent(s)) pairs, each standing
        for a denominator factor (1 - q^a t^b)."""
        if monomial_exps is None:
            monomial_exps = (0,) * (n_t + 1)
        full_factors = []
        for q_exp, t_exps in factors:
            if isinstance(t_exps, int):
                t_exps = (t_exps,)
            assert len(t_exps) == n_t
            full_factors.append((q_exp,) + tuple(t_exps))
        return cls(
            numerator=numerator,
            n_t=n_t,
            symbols=symbols,
            factorization=(tuple(monomial_exps), tuple(full_factors)),
            t_names=t_names)

    def _to_ring(self, value):
        if not isinstance(value, PolyElement):
            return self._ring(value)
        if value.ring == self._ring:
            return value
        return value.set_ring(self._ring)

    def _expand_factorization(self, mono, factors):
        n_sym = len(self._symbols)
        den = monomial(self._ring, mono + (0,) * n_sym)
        for f in factors:
            if any(e < 0 for e in f) or not any(f):
                raise ValueError(
                    f'Denominator factor exponents {f} must be nonneg '
                    f'and not all zero.')
            den *= self._ring.one - monomial(self._ring, f + (0,) * n_sym)
        return den

    def _layout(self):
        return self._n_t, tuple(
            str(s) for s in self._ring.symbols[:1 + self._n_t])

    def _unify(self, other):
        if isinstance(other, int):
            other = RationalFn(
                numerator=other,
                n_t=self._n_t,
                symbols=self._symbols,
                t_names=self.t_names)
        if self._layout() != other._layout():
            raise ValueError(
                f'Incompatible variables: {self._layout()} vs '
                f'{other._layout()}.')
        symbols = tuple(sorted(
            set(self._symbols) | set(other._symbols), key=lambda s: s.name))
        return self._with_symbols(symbols), other._with_symbols(symbols)

    def _with_symbols(self, symbols):
        if symbols == self._symbols:
            return self
        return RationalFn(
            numerator=self._num,
            denominator=self._den,
            n_t=self._n_t,
            symbols=symbols,
            factorization=self._factorization,
            t_names=self.t_names)

    def _new(self, num, den=None, factorization=None):
        return RationalFn(
            numerator=num,
            denominator=1 if den is None else den,
            n_t=self._n_t,
            symbols=self._symbols,
            factorization=factorization,
            t_names=self.t_names)

    def __mul__(self, other):
        a, b = self._unify(other)
        if a._factorization is not None and b._factorization is not None:
            mono = tuple(x + y for x, y in zip(
                a._factorization[0], b._factorization[0]))
            return a._new(
                num=a._num * b._num,
                factorization=(
                    mono, a._factorization[1] + b._factorization[1]))
        return a._new(num=a._num * b._num, den=a._den * b._den)

    __rmul__ = __mul__

    def __add__(self, other):
        a, b = self._unify(other)
        if a._den == b._den:
            return a._new(
                num=a._num + b._num,
                den=a._den,
                factorization=a._factorization)
        if a._factorization is not None and b._factorization is not None:
            mono = tuple(x + y for x, y in zip(
                a._factorization[0], b._factorization[0]))
            return a._new(
                num=a._num * b._den + b._num * a._den,
                factorization=(
                    mono, a._factorization[1] + b._factorization[1]))
        return a._new(
            num=a._num * b._den + b._num * a._den, den=a._den * b._den)

    __radd__ = __add__

    def __neg__(self):
        return self._new(
            num=-self._num, den=self._den, factorization=self._factorization)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, k):
        assert isinstance(k, int) and k >= 0
        result = self._new(num=1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, (RationalFn, int)):
            return NotImplemented
        a, b = self._unify(other)
        return a._num * b._den == b._num * a._den

    __hash__ = None

    def __repr__(self):
        from .parse_utils import render
        return f'RationalFn({render(self)})'

    def __str__(self):
        from .parse_utils import render
        return render(self)

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    @property
    def factorization(self):
        return self._factorization

    @property
    def n_t(self):
        return self._n_t

    @property
    def symbols(self):
        return self._symbols

    @property
    def ring(self):
        return self._ring

    @property
    def t_names(self):
        return tuple(str(s) for s in self._ring.symbols[1:1 + self._n_t])

    @property
    def is_zero(self):
        return self._num.is_zero

    def invert_qt(self):
        return invert_qt(self)

    def specialize_univariate(self):
        """Sets every t-variable to a single t."""
        if self._n_t == 1:
            return self
        ring = make_ring(n_t=1, symbol_names=[s.name for s in self._symbols])

        def collapse(exps):
            return (exps[0], sum(exps[1:1 + self._n_t])) + \
                tuple(exps[1 + self._n_t:])

        def collapse_poly(poly):
            terms = {}
            for exps, coeff in poly.items():
                key = collapse(exps)
                terms[key] = terms.get(key, 0) + coeff
            return poly_from_terms(ring, terms)

        factorization = None
        if self._factorization is not None:
            mono, factors = self._factorization
            factorization = (
                (mono[0], sum(mono[1:])),
                tuple((f[0], sum(f[1:])) for f in factors))
        return RationalFn(
            numerator=collapse_poly(self._num),
            denominator=collapse_poly(self._den),
            n_t=1,
            symbols=self._symbols,
            factorization=factorization)

    def evaluate_q(self, q_value, symbol_values=None):
        """Substitutes q (and optionally symbols) by integers; the result
        keeps the t-variables and is returned as a pair of polynomials."""
        num, den = self._num, self._den
        gens = self._ring.gens
        substitutions = [(gens[0], q_value)]
        for idx, symbol in enumerate(self._symbols):
            if symbol_values is not None and symbol.name in symbol_values:
                substitutions.append(
                    (gens[1 + self._n_t + idx], symbol_values[symbol.name]))
        return num.subs(substitutions), den.subs(substitutions)


def _weights(fn):
    return [s.inversion_weight for s in fn.symbols]


def _flip(exps, n_t, weights):
    sym_exps = exps[1 + n_t:]
    q_exp = -exps[0] - sum(w * k for w, k in zip(weights, sym_exps))
    return (q_exp,) + tuple(-e for e in exps[1:1 + n_t]) + tuple(sym_exps)


def invert_qt(fn):
    """W(q^-1, t^-1) with each symbol s sent to q^(-w) s, negative powers
    cleared into the denominator."""
    if fn.is_zero:
        raise ValueError('invert_qt needs a nonzero RationalFn.')
    n_t, weights = fn.n_t, _weights(fn)
    n_qt = n_t + 1
    num_terms = {_flip(exps, n_t, weights): coeff
                 for exps, coeff in fn.numerator.items()}

    if fn.factorization is not None:
        # den(1/q, 1/t) = (-1)^k (mono * prod f)^-1 * prod (1 - f)
        mono, factors = fn.factorization
        shift = list(mono)
        for f in factors:
            shift = [s + e for s, e in zip(shift, f)]
        sign = -1 if len(factors) % 2 else 1
        num_terms = {
            tuple(e + s for e, s in zip(exps[:n_qt], shift)) + exps[n_qt:]:
                sign * coeff
            for exps, coeff in num_terms.items()}
        low = [min(exps[i] for exps in num_terms) for i in range(n_qt)]
        low = [min(low[i], 0) for i in range(n_qt)]
        num_terms = {
            tuple(e - l for e, l in zip(exps[:n_qt], low)) + exps[n_qt:]: c
            for exps, c in num_terms.items()}
        new_mono = tuple(-l for l in low)
        return _strip_common_monomial(RationalFn(
            numerator=poly_from_terms(fn.ring, num_terms),
            n_t=n_t,
            symbols=fn.symbols,
            factorization=(new_mono, factors),
            t_names=fn.t_names))

    den_terms = {_flip(exps, n_t, weights): coeff
                 for exps, coeff in fn.denominator.items()}
    all_exps = list(num_terms) + list(den_terms)
    low = [min(exps[i] for exps in all_exps) for i in range(n_qt)]

    def shift(terms):
        return {tuple(e - l for e, l in zip(exps[:n_qt], low)) + exps[n_qt:]: c
                for exps, c in terms.items()}

    return RationalFn(
        numerator=poly_from_terms(fn.ring, shift(num_terms)),
        denominator=poly_from_terms(fn.ring, shift(den_terms)),
        n_t=n_t,
        symbols=fn.symbols,
        t_names=fn.t_names)


def _strip_common_monomial(fn):
    mono, factors = fn.factorization
    n_qt = fn.n_t + 1
    if fn.is_zero:
        return fn
    common = [min([mono[i]] + [exps[i] for exps in fn.numerator.keys()])
              for i in range(n_qt)]
    if not any(common):
        return fn
    num_terms = {
        tuple(e - c for e, c in zip(exps[:n_qt], common)) + exps[n_qt:]: coeff
        for exps, coeff in fn.numerator.items()}
    return RationalFn(
        numerator=poly_from_terms(fn.ring, num_terms),
        n_t=fn.n_t,
        symbols=fn.symbols,
        factorization=(tuple(m - c for m, c in zip(mono, common)), factors),
        t_names=fn.t_names)


def monomial_ratio(fn1, fn2):
    """(sign, q-exponent, t-exponents) when fn1/fn2 is +-1 times a Laurent
    monomial in q and the t-variables, else None."""
    if fn2.is_zero:
        raise ValueError('monomial_ratio needs a nonzero divisor.')
    a, b = fn1._unify(fn2)
    lhs = a.numerator * b.denominator
    rhs = a.denominator * b.numerator
    if lhs.is_zero:
        return None

    lhs_exps, lhs_coeff = lowest_term(lhs)
    rhs_exps, rhs_coeff = lowest_term(rhs)
    if lhs_coeff == rhs_coeff:
        sign = 1
    elif lhs_coeff == -rhs_coeff:
        sign = -1
    else:
        return None

    diff = [x - y for x, y in zip(lhs_exps, rhs_exps)]
    n_qt = a.n_t + 1
    if any(diff[n_qt:]):
        return None

    pos = [max(d, 0) for d in diff]
    neg = [max(-d, 0) for d in diff]
    if lhs * monomial(a.ring, neg) != sign * rhs * monomial(a.ring, pos):
        return None
    return sign, diff[0], tuple(diff[1:n_qt])


def one(n_t=1, symbols=()):
    return RationalFn(numerator=1, n_t=n_t, symbols=symbols)


def symbol(name, inversion_weight=1, n_t=1):
    sym = FrobeniusSymbol(name=name, inversion_weight=inversion_weight)
    ring = make_ring(n_t=n_t, symbol_names=[name])
    return RationalFn(numerator=ring.gens[1 + n_t], n_t=n_t, symbols=(sym,))
