"""Small internal helpers."""

import numpy as np


def readonly(a: np.ndarray) -> np.ndarray:
    """Mark an array immutable and return it (shared-read concurrency model)."""
    a.setflags(write=False)
    return a
