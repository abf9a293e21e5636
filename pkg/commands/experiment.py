import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from commands.utils.data_classes import ExperimentRecord, ExperimentSummary
from graphs.generators import gnp
from solvers.brute_force import BRUTE_FORCE_LIMIT, brute_force_clique
from solvers.clique import max_clique
from solvers.colouring import chromatic_number
from solvers.results import SearchBudget
from utils.config import config
from utils.errors import BudgetExceeded, UsageError

logger = logging.getLogger(__name__)

MAX_VERTICES = 200

Trial = Tuple[int, int, int, float, float, int, Optional[int],
              Optional[int], bool]


def clique_bound(n: int, p: float) -> float:
    """2 ln n / ln(1/p), the typical clique number of G(n, p)"""
    if not 0.0 < p < 1.0:
        raise UsageError(f'The clique bound needs 0 < p < 1, got {p}')
    return 2 * math.log(n) / math.log(1 / p)


def trial_seeds(seed: int, count: int) -> List[int]:
    """Independent per-trial seeds spawned from one master seed"""
    return [int(child.generate_state(1)[0])
            for child in np.random.SeedSequence(seed).spawn(count)]


def _run_trial(trial: Trial) -> ExperimentRecord:
    (index, seed, n, p, epsilon, chi_cap, budget, chi_budget,
     timings) = trial
    start = time.perf_counter()
    graph = gnp(n, p, seed)
    bound = clique_bound(n, p)
    try:
        omega = max_clique(graph, SearchBudget(budget)).value
    except BudgetExceeded as e:
        logger.warning(f'trial {index}: {e}')
        omega = None

    chi = None
    if n <= chi_cap:
        try:
            chi = chromatic_number(graph, SearchBudget(chi_budget)).value
        except BudgetExceeded as e:
            logger.debug(f'trial {index}: {e}')

    oracle = None
    if omega is not None and n <= BRUTE_FORCE_LIMIT:
        oracle = len(brute_force_clique(graph)) == omega

    elapsed = (time.perf_counter() - start) * 1000 if timings else None
    within = None if omega is None else omega <= (1 + epsilon) * bound
    return ExperimentRecord(index, seed, n, p, omega, chi, bound, within,
                            oracle, elapsed)


def run_gnp_experiment(n_values: Sequence[int], p: Optional[float] = None,
                       trials: Optional[int] = None,
                       seed: Optional[int] = None,
                       epsilon: Optional[float] = None,
                       chi_cap: Optional[int] = None,
                       budget: Optional[int] = None,
                       chi_budget: Optional[int] = None,
                       workers: Optional[int] = None,
                       timings: bool = False
                       ) -> Tuple[List[ExperimentRecord], ExperimentSummary]:
    """
    Sample G(n, p) for every n and trial, compute the exact clique number,
    and count how often it exceeds (1 + epsilon) 2 ln n / ln(1/p). The
    chromatic number is computed only up to chi_cap vertices and only within
    its own budget; past either it is left out. Records come back in trial
    order whatever order the workers finish in.
    """
    settings = config['experiment']
    p = float(settings['p'] if p is None else p)
    trials = int(settings['trials'] if trials is None else trials)
    seed = int(settings['seed'] if seed is None else seed)
    epsilon = float(settings['epsilon'] if epsilon is None else epsilon)
    chi_cap = int(settings['chi_cap'] if chi_cap is None else chi_cap)
    if chi_budget is None:
        chi_budget = int(settings['chi_budget'])

    n_values = list(n_values)
    if not n_values:
        raise UsageError('At least one vertex count is needed')
    if min(n_values) < 2 or max(n_values) > MAX_VERTICES:
        raise UsageError(f'Vertex counts must lie in 2..{MAX_VERTICES}')
    if trials < 1:
        raise UsageError(f'At least one trial is needed, got {trials}')
    if epsilon < 0:
        raise UsageError(f'epsilon must be non-negative, got {epsilon}')
    clique_bound(2, p)

    count = trials * len(n_values)
    seeds = trial_seeds(seed, count)
    jobs = [(i, seeds[i], n_values[i // trials], p, epsilon, chi_cap,
             budget, chi_budget, timings) for i in range(count)]
    logger.info(f'{count} trials of G(n, {p}) for n in {n_values}, '
                f'{config["prng"]} seed {seed}')

    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            records = list(executor.map(_run_trial, jobs))
    else:
        records = [_run_trial(job) for job in jobs]

    decided = [r for r in records if r.within_bound is not None]
    violations = sum(1 for r in decided if not r.within_bound)
    max_omega = {}
    for r in decided:
        max_omega[r.n] = max(max_omega.get(r.n, 0), r.omega)
    summary = ExperimentSummary(
        prng=config['prng'], seed=seed, p=p, epsilon=epsilon, trials=trials,
        n_values=n_values, chi_cap=chi_cap, records=len(records),
        inconclusive=len(records) - len(decided), violations=violations,
        violation_fraction=violations / len(decided) if decided else 0.0,
        max_omega=max_omega)
    logger.info(str(summary))
    return records, summary
