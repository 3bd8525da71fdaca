"""Groebner feature constants and limit configuration"""
from dataclasses import dataclass
from typing import Optional

from discvar.core.config import settings

# Progress is logged at DEBUG every this many S-pairs
PAIR_LOG_INTERVAL = 500

# The clock is read once per this many reduction steps
CLOCK_INTERVAL = 1024

# Powers tried by the exploratory divisibility probe
DIVISIBILITY_POWERS = (2, 4)


@dataclass(frozen=True)
class GroebnerLimits:
    """
    Resource limits for one basis computation.

    max_reduction_steps bounds every single reduction; max_seconds bounds the
    whole computation and is checked inside reductions too. None means no
    time limit.
    """

    max_pairs: int = 200000
    max_coeff_bits: int = 4096
    max_reduction_steps: int = 5_000_000
    max_seconds: Optional[float] = None

    @classmethod
    def from_settings(cls) -> "GroebnerLimits":
        return cls(
            max_pairs=settings.MAX_PAIRS,
            max_coeff_bits=settings.MAX_COEFF_BITS,
            max_reduction_steps=settings.MAX_REDUCTION_STEPS,
            max_seconds=settings.MAX_SECONDS or None,
        )


UNLIMITED = GroebnerLimits(max_pairs=10**12, max_coeff_bits=10**9, max_reduction_steps=10**15)
