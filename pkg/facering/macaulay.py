"""
Macaulay representations, pseudo-powers and M-vectors.
"""
from __future__ import annotations

import dataclasses
import logging
import math
from typing import Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


def macaulay_representation(a: int, i: int) -> Tuple[int, ...]:
    """
    The ``i``-th Macaulay representation of ``a``.

    Returns ``(a_i, a_{i-1}, ..., a_j)`` with ``a_i > a_{i-1} > ... > a_j >= j >= 1``
    and ``a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)``; empty for ``a = 0``.
    """
    if a < 0 or i < 1:
        raise ValueError(f"Macaulay representation needs a >= 0 and i >= 1 (got {a}, {i})")
    result = []
    remainder = a
    k = i
    while remainder > 0 and k >= 1:
        top = k
        while math.comb(top + 1, k) <= remainder:
            top += 1
        result.append(top)
        remainder -= math.comb(top, k)
        k -= 1
    return tuple(result)


def pseudo_power(a: int, i: int) -> int:
    """``a^<i>``: raise every binomial of the representation to ``C(a_k + 1, k + 1)``."""
    representation = macaulay_representation(a, i)
    return sum(
        math.comb(top + 1, i - offset + 1)
        for offset, top in enumerate(representation)
    )


@dataclasses.dataclass
class MVectorResult:
    """Outcome of an M-vector test, with the first violated bound if any."""

    sequence: Tuple[int, ...]
    is_mvector: bool
    failed_at: Optional[int] = None
    bound: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_mvector

    def describe(self) -> str:
        if self.is_mvector:
            return f"{list(self.sequence)} is an M-vector"
        return f"FAIL at i={self.failed_at}: {self.reason}"


def check_mvector(sequence: Sequence[int]) -> MVectorResult:
    """
    Test Macaulay's conditions: ``seq_0 = 1`` and
    ``seq_{i+1} <= seq_i^<i>`` for all ``i >= 1``.
    """
    seq = tuple(int(value) for value in sequence)
    if not seq:
        return MVectorResult(seq, False, 0, None, "empty sequence")
    for idx, value in enumerate(seq):
        if value < 0:
            return MVectorResult(seq, False, idx, None, f"negative entry {value}")
    if seq[0] != 1:
        return MVectorResult(seq, False, 0, 1, f"first entry is {seq[0]}, not 1")
    for i in range(1, len(seq) - 1):
        bound = pseudo_power(seq[i], i)
        if seq[i + 1] > bound:
            return MVectorResult(
                seq, False, i + 1, bound,
                f"{seq[i]}^<{i}> = {bound} < {seq[i + 1]}",
            )
    return MVectorResult(seq, True)


def is_mvector(sequence: Sequence[int]) -> bool:
    return check_mvector(sequence).is_mvector
