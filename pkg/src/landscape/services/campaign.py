"""Chunked, process-parallel execution of ensemble trials."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Tuple

from landscape.config import config
from landscape.core.ensemble import run_trial_chunk
from landscape.models import EnsembleConfig, TrialRecord

logger = logging.getLogger(__name__)


class CampaignExecutor:
    """Runs trials in chunks across worker processes and merges them by trial index."""

    def __init__(self, max_workers: Optional[int] = None, chunk_size: Optional[int] = None):
        self.max_workers = max(1, max_workers) if max_workers is not None else config.get_threads()
        self.chunk_size = max(1, chunk_size) if chunk_size is not None else config.get_chunk_size()

    def split_chunks(self, trials: int) -> List[Tuple[int, int]]:
        """Half-open trial ranges of at most chunk_size trials."""
        chunk_bounds = []
        for start in range(0, trials, self.chunk_size):
            stop = min(start + self.chunk_size, trials)
            chunk_bounds.append((start, stop))
        return chunk_bounds

    async def run_chunks_concurrent(
        self,
        cfg: EnsembleConfig,
        chunks: List[Tuple[int, int]],
        progress_callback: Optional[Callable[[int], None]] = None,
    ) -> List[List[TrialRecord]]:
        """Run every chunk in the process pool, at most max_workers at a time."""
        loop = asyncio.get_running_loop()
        semaphore = asyncio.Semaphore(self.max_workers)

        with ProcessPoolExecutor(max_workers=self.max_workers) as pool:

            async def run_single_chunk_safe(start: int, stop: int) -> List[TrialRecord]:
                async with semaphore:
                    chunk_records = await loop.run_in_executor(pool, run_trial_chunk, cfg, start, stop)
                    if progress_callback:
                        progress_callback(len(chunk_records))
                    return chunk_records

            tasks = [run_single_chunk_safe(start, stop) for start, stop in chunks]
            results = await asyncio.gather(*tasks)

        return list(results)

    def run(
        self,
        cfg: EnsembleConfig,
        progress_callback: Optional[Callable[[int], None]] = None,
    ) -> List[TrialRecord]:
        """
        Run all trials of a campaign.

        With a single worker the chunks run in this process; otherwise they
        are spread over a process pool. Either way every trial draws from its
        own seed, so the records do not depend on the worker count.

        Args:
            cfg: Campaign parameters
            progress_callback: Called with the number of trials each finished chunk held

        Returns:
            Records sorted by trial index
        """
        chunks = self.split_chunks(cfg.trials)
        logger.debug("campaign: %d trials in %d chunks, %d workers", cfg.trials, len(chunks), self.max_workers)

        all_records: List[TrialRecord] = []
        if self.max_workers == 1 or len(chunks) == 1:
            for start, stop in chunks:
                chunk_records = run_trial_chunk(cfg, start, stop)
                all_records.extend(chunk_records)
                if progress_callback:
                    progress_callback(len(chunk_records))
        else:
            results = asyncio.run(self.run_chunks_concurrent(cfg, chunks, progress_callback))
            for chunk_records in results:
                all_records.extend(chunk_records)

        all_records.sort(key=lambda record: record.trial_index)
        return all_records
