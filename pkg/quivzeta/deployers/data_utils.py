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

from concurrent.futures import ProcessPoolExecutor

import tqdm


def get_work_results(fn, units, n_workers, desc, verbose):
    """Results of fn over work units, in unit order whatever the schedule."""
    units = list(units)
    if n_workers <= 1 or len(units) <= 1:
        return [fn(unit) for unit in tqdm.tqdm(
            units, total=len(units), desc=desc, disable=not verbose)]

    with ProcessPoolExecutor(max_workers=n_workers) as executor:
        return list(tqdm.tqdm(
            executor.map(fn, units),
            total=len(units),
            desc=f'{desc} ({n_workers} workers)',
            disable=not verbose))
