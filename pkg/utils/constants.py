from pathlib import Path

DATA_FOLDER = Path(__file__, '../../data').resolve()
DATASETS_FOLDER = DATA_FOLDER / 'datasets'
CONFIG_FILE = DATA_FOLDER / 'config.json'
REPRO_CLAIMS_FILE = DATA_FOLDER / 'repro_claims.json'

BUDGET_ENV_VAR = 'QCOLOUR_BUDGET'

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
