# Licensed to the Apache Software Foundation (ASF) under one or more
# contributor license agreements. See the NOTICE file distributed with
# this work for additional information regarding copyright ownership.
# The ASF licenses this file to You under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance with
# the License. You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Monte Carlo estimate of how many honest drivers the service provider has to observe before
every possible value of one rider block has shown up in a difference, which is the point
where that block is pinned down.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import numpy as np

from pprhs.exceptions import ConfigurationError
from pprhs.harness.config import SUPPORTED_BLOCK_BITS
from pprhs.utils.rng import child_rng

_logger = logging.getLogger(__name__)

# published means, rounded up
PUBLISHED_DRIVER_COUNTS: Dict[int, int] = {1: 3, 2: 9, 3: 22, 4: 55}

CHUNK_TRIALS = 10_000
RELATIVE_TOLERANCE = 0.01


def expected_drivers(l: int) -> Fraction:  # noqa: E741
    """Coupon-collector expectation ``2^l * H(2^l)`` as an exact fraction."""
    if l < 1:
        raise ConfigurationError(f"l must be positive, got {l}")
    base = 1 << l
    return base * sum((Fraction(1, k) for k in range(1, base + 1)), Fraction(0))


@dataclass(frozen=True)
class Table1Row:
    l: int  # noqa: E741
    trials: int
    seed: int
    mean: float
    stderr: float
    analytic: Fraction
    published_value: int

    @property
    def ceiling(self) -> int:
        return math.ceil(self.analytic)

    @property
    def relative_error(self) -> float:
        return abs(self.mean - float(self.analytic)) / float(self.analytic)

    @property
    def within_tolerance(self) -> bool:
        return self.relative_error <= RELATIVE_TOLERANCE

    def to_record(self) -> Dict[str, Any]:
        return {
            "l": self.l,
            "trials": self.trials,
            "seed": self.seed,
            "mean": self.mean,
            "stderr": self.stderr,
            "analytic": float(self.analytic),
            "analytic_exact": str(self.analytic),
            "ceiling": self.ceiling,
            "published_value": self.published_value,
            "relative_error": self.relative_error,
        }


def _chunk_sizes(trials: int) -> List[int]:
    full, rest = divmod(trials, CHUNK_TRIALS)
    return [CHUNK_TRIALS] * full + ([rest] if rest else [])


def _collect_chunk(l: int, trials: int, seed: int, chunk: int) -> np.ndarray:  # noqa: E741
    """
    Drivers needed per trial. Each step draws one uniform block for every trial of the chunk,
    so a chunk consumes its stream identically no matter where it runs.
    """
    rng = child_rng(seed, l, chunk)
    base = 1 << l
    full = (1 << base) - 1
    seen = np.zeros(trials, dtype=np.int64)
    counts = np.zeros(trials, dtype=np.int64)
    pending = np.ones(trials, dtype=bool)
    step = 0
    while pending.any():
        step += 1
        blocks = rng.integers(0, base, size=trials)
        seen |= np.left_shift(np.int64(1), blocks)
        done = pending & (seen == full)
        counts[done] = step
        pending &= ~done
    return counts


def simulate_coverage(l: int, trials: int, seed: int, workers: int = 1) -> np.ndarray:  # noqa: E741
    """Per-trial driver counts in trial order, identical for every ``workers`` value."""
    if l not in SUPPORTED_BLOCK_BITS:
        raise ConfigurationError(f"l must be one of {SUPPORTED_BLOCK_BITS}, got {l}")
    if trials < 1:
        raise ConfigurationError(f"trials must be at least 1, got {trials}")
    sizes = _chunk_sizes(trials)
    args = [(l, size, seed, chunk) for chunk, size in enumerate(sizes)]
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(_collect_chunk, *zip(*args)))
    else:
        parts = [_collect_chunk(*a) for a in args]
    return np.concatenate(parts)


def run_table1(l: int, trials: int, seed: int, workers: int = 1) -> Table1Row:  # noqa: E741
    counts = simulate_coverage(l, trials, seed, workers)
    mean = float(counts.mean())
    stderr = float(counts.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    row = Table1Row(
        l=l,
        trials=trials,
        seed=seed,
        mean=mean,
        stderr=stderr,
        analytic=expected_drivers(l),
        published_value=PUBLISHED_DRIVER_COUNTS[l],
    )
    _logger.info(
        "l=%d: mean %.4f +/- %.4f over %d trials (analytic %.4f)",
        l,
        mean,
        stderr,
        trials,
        float(row.analytic),
    )
    return row


def run_table1_levels(levels: Sequence[int], trials: int, seed: int, workers: int = 1) -> List[Table1Row]:
    return [run_table1(l, trials, seed, workers) for l in levels]  # noqa: E741
