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

__version__ = '0.1.0'

from .deployers import Deployer, ResourceCeilingError
from .arith import RationalFn, PowerSeries, invert_qt, series_expand
from .quivers import Representation, builtin_rep, load_representation
from .lattices import count_subreps
from .formulas import builtin_formula
from .funeq import predicted_symmetry, verify_funeq
from .posets import Poset
from .verifiers import Verifier
