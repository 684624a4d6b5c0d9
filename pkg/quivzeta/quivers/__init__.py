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

from .representation import (
    Arrow,
    Quiver,
    Representation,
    make_representation,
    to_submodule_instance)
from .centralizer import (
    CentralizerSeries,
    Grading,
    centralizer_series,
    cocentral_grading,
    image_chain_ranks,
    nilpotency_class,
    validate_grading)
from .homogeneity import (
    EndAlgebra,
    algebra_closure,
    check_homogeneity,
    delta_shift_exponents,
    graded_generators)
from .builders import BUILTIN_REPS, builtin_rep, graded_submodule_rep
from .io_utils import (
    load_generators,
    load_grading,
    load_representation,
    parse_representation)
