import json
import logging
import os

from utils.constants import BUDGET_ENV_VAR, CONFIG_FILE

logger = logging.getLogger(__name__)


class Config:

    def __init__(self, file):
        with open(file) as f:
            self._config = json.load(f)
        self.env_name = self._config['env']
        self._env = self._config['envs'][self.env_name]

    def __getitem__(self, item):
        if item in self._env:
            return self._env[item]
        return self._config[item]

    def __contains__(self, item):
        return item in self._env or item in self._config

    def tolerance(self, name: str) -> float:
        return float(self['tolerance'][name])


config = Config(CONFIG_FILE)


def default_budget() -> int:
    """
    Search-node budget for the exact solvers. The environment variable
    overrides the configured value; nothing else is read from the environment.
    """
    override = os.environ.get(BUDGET_ENV_VAR)
    if override:
        try:
            budget = int(override)
        except ValueError:
            logger.warning(f'Ignoring non-integer {BUDGET_ENV_VAR}={override!r}')
        else:
            if budget > 0:
                return budget
            logger.warning(f'Ignoring non-positive {BUDGET_ENV_VAR}={budget}')
    return int(config['solver']['budget'])
