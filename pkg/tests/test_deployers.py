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


import json
import os

import numpy as np
import pytest

from quivzeta.deployers import Deployer, ResourceCeilingError
from quivzeta.deployers.deployer import N_WORKERS_ENV


def square(x):
    return x * x


def test_rng_is_seeded():
    first, second = Deployer(seed=7, verbose=False), \
        Deployer(seed=7, verbose=False)
    a, b = first.gen_rng(), second.gen_rng()
    assert np.array_equal(np.asarray(a), np.asarray(b))
    assert not np.array_equal(np.asarray(a), np.asarray(first.gen_rng()))


def test_work_units_keep_order():
    deployer = Deployer(verbose=False)
    assert deployer.run_work_units(square, [3, 1, 2], desc='squares') == \
        [9, 1, 4]
    assert deployer.run_work_units(square, [], desc='empty') == []


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv(N_WORKERS_ENV, '3')
    assert Deployer(verbose=False).n_workers == 3
    assert Deployer(verbose=False, n_workers=0).n_workers == 1


def test_candidate_ceiling():
    deployer = Deployer(verbose=False, max_candidates=100)
    deployer.check_candidates(100, desc='at the ceiling')
    with pytest.raises(ResourceCeilingError) as err:
        deployer.check_candidates(101, desc='over the ceiling')
    assert isinstance(err.value, ValueError)
    assert '--max-candidates' in str(err.value)


def test_outputs_and_log_go_to_workdir(tmp_path):
    workdir = str(tmp_path / 'run')
    deployer = Deployer(verbose=True, workdir=workdir)
    deployer.log_info('a\nb', title='Banner')
    path = deployer.save_outputs({'counts': [1, 3, 7]}, desc='count')
    with open(path) as f:
        assert json.load(f) == {'counts': [1, 3, 7]}
    assert os.path.exists(os.path.join(workdir, 'log.txt'))


def test_outputs_skipped_without_workdir():
    assert Deployer(verbose=False).save_outputs({}, desc='count') is None
