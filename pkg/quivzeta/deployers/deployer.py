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

import os

import jax

from .data_utils import get_work_results
from .log_utils import get_logger, log_info, save_outputs


DEFAULT_MAX_CANDIDATES = 10 ** 8
N_WORKERS_ENV = 'QUIVZETA_N_WORKERS'


class ResourceCeilingError(ValueError):
    pass


class Deployer:
    def __init__(self,
                 seed=0,
                 n_workers=None,
                 verbose=True,
                 workdir=None,
                 max_candidates=DEFAULT_MAX_CANDIDATES):
        if n_workers is None:
            if N_WORKERS_ENV in os.environ:
                n_workers = int(os.environ[N_WORKERS_ENV])
            else:
                n_workers = 1

        if workdir is not None:
            os.makedirs(workdir, exist_ok=True)

        self._seed = seed
        self._n_workers = max(1, n_workers)
        self._verbose = verbose
        self._workdir = workdir
        self._max_candidates = max_candidates
        self._logger = get_logger(verbose=verbose, workdir=workdir)
        self._rng = jax.random.PRNGKey(seed=seed)

        self.log_info(
            f'seed = {seed}, workers = {self._n_workers}, '
            f'max_candidates = {max_candidates:,}')

    def gen_rng(self):
        self._rng, new_rng = jax.random.split(self._rng)
        return new_rng

    def check_candidates(self, n_candidates, desc):
        if n_candidates > self._max_candidates:
            raise ResourceCeilingError(
                f'{desc}: {n_candidates:,} candidate tuples exceed the '
                f'ceiling of {self._max_candidates:,}; lower the bound or '
                f'raise --max-candidates.')

    def run_work_units(self, fn, units, desc):
        return get_work_results(
            fn=fn,
            units=units,
            n_workers=self._n_workers,
            desc=desc,
            verbose=self._verbose)

    def log_info(self, info, title=None):
        log_info(info=info, title=title, logger=self._logger)

    def save_outputs(self, outputs, desc):
        if self._workdir is not None:
            return save_outputs(
                outputs=outputs,
                workdir=self._workdir,
                desc=desc,
                logger=self._logger)

    @property
    def seed(self):
        return self._seed

    @property
    def n_workers(self):
        return self._n_workers

    @property
    def verbose(self):
        return self._verbose

    @property
    def workdir(self):
        return self._workdir

    @property
    def max_candidates(self):
        return self._max_candidates

    @property
    def logger(self):
        return self._logger
