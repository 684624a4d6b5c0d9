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

from .perm_utils import (
    PermStats,
    descent_set,
    inversions,
    perm_stats,
    symmetric_group,
    times_longest)
from .poset import (
    POSET_CATALOG,
    Poset,
    antichain,
    chain,
    dual_star_poset,
    star_poset)
from .ppartition_utils import (
    DEFAULT_EXTENSION_BOUND,
    all_descent_subsets,
    coxeter_identity_check,
    delta_chain,
    hasse_rep,
    linear_extensions,
    ppartition_count,
    q_multinomial_descent,
    q_multinomial_product,
    q_multinomial_sum,
    stanley_gf,
    stanley_reciprocity)
