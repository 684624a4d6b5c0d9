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
import logging
import os

LOGGER_NAME = 'quivzeta'
LOG_FORMAT = logging.Formatter(
    fmt='[%(asctime)s %(levelname)s] %(message)s', datefmt='%H:%M:%S')


def get_logger(verbose, workdir):
    """Console logger, mirrored into workdir/log.txt when a workdir is
    given. Repeated calls replace the handlers of earlier runs."""
    logger = logging.getLogger(LOGGER_NAME)
    logger.handlers.clear()

    handlers = [logging.StreamHandler()]
    if workdir is not None:
        handlers.append(
            logging.FileHandler(filename=os.path.join(workdir, 'log.txt')))
    for handler in handlers:
        handler.setFormatter(LOG_FORMAT)
        logger.addHandler(handler)

    logger.propagate = False
    logger.setLevel(logging.INFO if verbose else logging.WARNING)
    return logger


def log_info(info, title, logger):
    lines = str(info).split('\n')
    if title is None:
        for line in lines:
            logger.info(line)
        return

    width = max([len(line) for line in lines] + [len(title) + 6])
    logger.info('=' * width)
    logger.info(f'== {title} ==')
    for line in lines:
        logger.info(line)
    logger.info('=' * width)


def save_outputs(outputs, workdir, desc, logger):
    path = os.path.join(workdir, f'{desc}.json')
    with open(path, 'w') as f:
        json.dump(outputs, f, indent=2, sort_keys=True)
    logger.info(f'Saved {desc} outputs to {path}.')
    return path
