from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from app.helpers.environment import env

T = TypeVar("T")
R = TypeVar("R")


class SweepService:
    """
    Evaluates independent sweep points on a thread pool. Results come back
    in input order whatever the completion order.
    """

    def __init__(self, jobs: Optional[int] = None):
        self.jobs = max(1, jobs or env().SWEEP_JOBS)

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        if self.jobs == 1 or len(items) < 2:
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(fn, items))
