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

from .poly_utils import FrobeniusSymbol, make_ring, gaussian_binomial
from .rational import RationalFn, invert_qt, monomial_ratio, one, symbol
from .series import PowerSeries, series_expand
from .parse_utils import render, render_poly, parse_rational
