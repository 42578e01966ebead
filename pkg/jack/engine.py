from __future__ import annotations

import asyncio
import logging
from typing import Dict, Iterable, Sequence, Tuple

from errors import UsageError
from hook_tableaux import HookLabel
from jack_graph import build_jack, configure_memo, memo_info, set_store
from memo_store import MemoStore


class Engine:
    """
    Shared state of a CLI run: limits, the node memo and the optional on-disk store
    """

    def __init__(self, config: Dict):
        self.config = config
        self.max_n = config.get('max_n', 12)
        self.max_degree = config.get('max_degree', 20)
        self.unsafe_limits = config.get('unsafe_limits', False)
        self.jobs = max(1, config.get('jobs', 1))
        configure_memo(config.get('memo_size', 4096))
        self.store = None
        if config.get('cache_dir'):
            self.store = MemoStore(config['cache_dir'])
        set_store(self.store)

    def check_limits(self, N: int, degree: int = 0):
        if self.unsafe_limits:
            return
        if N > self.max_n:
            raise UsageError(f'N={N} exceeds the limit {self.max_n}; pass --unsafe-limits to override')
        if degree > self.max_degree:
            raise UsageError(f'degree {degree} exceeds the limit {self.max_degree}; pass --unsafe-limits to override')

    async def prefetch(self, nodes: Iterable[Tuple[Sequence[int], HookLabel]]):
        """
        Builds independent nodes in worker threads, at most `jobs` at a time
        """
        nodes = list(nodes)
        if self.jobs == 1 or len(nodes) < 2:
            return
        semaphore = asyncio.Semaphore(self.jobs)

        async def build(alpha, label):
            async with semaphore:
                await asyncio.to_thread(build_jack, alpha, label)

        logging.debug(f'Prefetching {len(nodes)} nodes with {self.jobs} workers')
        await asyncio.gather(*(build(alpha, label) for alpha, label in nodes))

    def info(self) -> Dict:
        result = {'memo': memo_info(), 'jobs': self.jobs}
        if self.store is not None:
            result['store'] = self.store.info()
        return result
