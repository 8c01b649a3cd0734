"""Process-wide capacity caps and the sampling seed.

The CLI overrides these from its flags; library callers may assign to the
attributes of ``limits`` directly or use ``override`` as a context manager.
"""

from contextlib import contextmanager
from dataclasses import dataclass

DEFAULT_SEED = 0xC0FFEE


@dataclass
class Limits:
    max_group_order: int = 200_000
    max_normal_subgroups: int = 20_000
    max_congruences: int = 100_000
    seed: int = DEFAULT_SEED


limits = Limits()


@contextmanager
def override(**kwargs):
    saved = {k: getattr(limits, k) for k in kwargs}
    for k, v in kwargs.items():
        if not hasattr(limits, k):
            raise AttributeError(k)
        setattr(limits, k, v)
    try:
        yield limits
    finally:
        for k, v in saved.items():
            setattr(limits, k, v)
