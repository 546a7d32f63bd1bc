import hashlib
import time
from contextlib import contextmanager
from typing import Iterable, Iterator

from .logger import logger


def tensor_fingerprint(tensors: Iterable) -> str:
    """
    SHA-256 over the sorted nonzero components of each tensor, in order.
    Components are written as "index=re,im" so the digest depends only on exact values.
    """
    digest = hashlib.sha256()
    for number, tensor in enumerate(tensors):
        digest.update(f"#{number}:{tensor.shape}".encode())
        for index, value in sorted(tensor.nonzero.items()):
            digest.update(f"{index}={value.re},{value.im};".encode())
    return digest.hexdigest()


def combined_fingerprint(parts: Iterable[str]) -> str:
    return hashlib.sha256("|".join(parts).encode()).hexdigest()


class Stopwatch:
    def __init__(self):
        self.seconds = 0.0


@contextmanager
def timed(label: str, check: str = None) -> Iterator[Stopwatch]:
    """Measure the wall time of a block; the result is kept outside report bodies"""
    watch = Stopwatch()
    start = time.perf_counter()
    try:
        yield watch
    finally:
        watch.seconds = time.perf_counter() - start
        logger.debug(f"{label} | Seconds: {watch.seconds:.3f}", check=check)
