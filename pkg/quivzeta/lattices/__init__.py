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

from .local_lattice import (
    LatticeTuple,
    LocalLattice,
    local_hnf,
    local_smith,
    preimage_lattice)
from .enum_utils import (
    compositions,
    count_sublattices,
    enum_sublattices,
    enumerate_index_vectors,
    predicted_candidates)
from .counter import (
    CountTable,
    SubrepCounter,
    count_invariant_sublattices,
    count_subreps,
    is_subrep)
from .invariants import (
    NuInvariant,
    delta_scale,
    homothety_ray,
    is_maximal,
    m_2,
    m_tilde_1,
    m_tilde_1_formula,
    m_tilde_1_search,
    mc_property,
    min_entry_valuation,
    nu_invariant,
    random_lattice_tuple,
    tau)
