"""
Pula procesów dla niezależnych zadań (relacje, elementy Omega).
"""

import logging
import multiprocessing
from typing import Callable, Iterable, List, Optional, TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def run_tasks(func: Callable[[T], R], tasks: Iterable[T], jobs: int = 1,
              desc: Optional[str] = None, progress: bool = True) -> List[R]:
    """
    Wyniki w kolejności zadań niezależnie od liczby procesów.
    `func` musi być funkcją modułu (pikowalną) dla jobs > 1.
    """
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        iterator = map(func, tasks)
        return list(tqdm(iterator, total=len(tasks), desc=desc, disable=not progress))
    logging.debug(f"Uruchamianie {len(tasks)} zadań w {jobs} procesach")
    with multiprocessing.Pool(processes=jobs) as pool:
        return list(tqdm(pool.imap(func, tasks), total=len(tasks), desc=desc, disable=not progress))
