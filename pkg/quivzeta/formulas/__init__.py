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

from .number_utils import (
    brute_subgroups,
    elliptic_point_count,
    iso_exponent,
    subgroup_zeta_two_part)
from .star_utils import (
    carlitz_polynomial,
    macmahon_identity_check,
    star_thin,
    star_v2a_series)
from .catalog import (
    FORMULA_CATALOG,
    FormulaEntry,
    builtin_formula,
    corollary_rep,
    corollary_symmetry,
    dual_star_nested,
    elliptic_w1,
    elliptic_w2,
    formula_rep,
    get_entry,
    kronecker1,
    kronecker1_local,
    zeta_free_local)
