"""Run-constrained binary strings and the vertex set of the Fibonacci-run graph.

Strings are plain ``str`` objects over ``'0'``/``'1'``; the leftmost character
is coordinate 1.  The empty string is the null string.
"""

from __future__ import annotations

import os
import re
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .errors import BudgetExceededError, LengthMismatchError, NotRunConstrainedError

__all__ = [
    "DEFAULT_MAX_VERTICES",
    "runs",
    "one_runs",
    "is_run_constrained",
    "is_vertex",
    "validate_vertex",
    "enumerate_vertices",
    "vertex_codes",
    "count_vertices",
    "fibonacci",
    "hamming",
    "to_code",
    "from_code",
    "complement",
]

_RUN_RE = re.compile(r"0+|1+")
_BITS_RE = re.compile(r"[01]*")

DEFAULT_MAX_VERTICES = int(os.environ.get("FIBRUN_MAX_VERTICES", 3_000_000))


def _check_bits(s: str) -> None:
    if not isinstance(s, str) or _BITS_RE.fullmatch(s) is None:
        raise ValueError(f"not a binary string: {s!r}")


def runs(s: str) -> List[Tuple[int, int]]:
    """Maximal-block decomposition of ``s`` as ``(bit, length)`` pairs."""
    _check_bits(s)
    return [(int(m.group()[0]), len(m.group())) for m in _RUN_RE.finditer(s)]


def one_runs(s: str) -> List[Tuple[int, int]]:
    """Half-open ``(start, stop)`` spans (0-based) of the maximal 1-runs of ``s``."""
    return [m.span() for m in re.finditer(r"1+", s)]


def is_run_constrained(s: str) -> bool:
    rl = runs(s)
    for i, (bit, length) in enumerate(rl):
        if bit == 1 and (i + 1 == len(rl) or rl[i + 1][1] <= length):
            return False
    return True


def is_vertex(s: str, n: int) -> bool:
    """True iff ``s`` is a vertex of R_n, i.e. ``len(s) == n`` and ``s + '00'`` is run-constrained."""
    try:
        validate_vertex(s, n)
    except (LengthMismatchError, NotRunConstrainedError):
        return False
    return True


def validate_vertex(s: str, n: int | None = None) -> str:
    """Return ``s`` unchanged or raise a specific :class:`InvalidVertexError`."""
    _check_bits(s)
    if n is not None and len(s) != n:
        raise LengthMismatchError(f"expected length {n}, got {len(s)} for {s!r}")
    if not is_run_constrained(s + "00"):
        bad = _first_violation(s + "00")
        raise NotRunConstrainedError(
            f"{s!r} is not a vertex: the 1-run at coordinate {bad} is not followed "
            "by a strictly longer 0-run"
        )
    return s


def _first_violation(s: str) -> int:
    pos = 1
    rl = runs(s)
    for i, (bit, length) in enumerate(rl):
        if bit == 1 and (i + 1 == len(rl) or rl[i + 1][1] <= length):
            return pos
        pos += length
    return -1


def complement(s: str) -> str:
    return s.translate(str.maketrans("01", "10"))


def to_code(s: str) -> int:
    """Integer code of ``s``; coordinate 1 is the most significant bit."""
    return int(s, 2) if s else 0


def from_code(code: int, n: int) -> str:
    return format(int(code), f"0{n}b") if n else ""


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise LengthMismatchError(f"length mismatch: {len(a)} != {len(b)}")
    _check_bits(a)
    _check_bits(b)
    return (to_code(a) ^ to_code(b)).bit_count()


@lru_cache(maxsize=None)
def _block_sequences(m: int) -> int:
    # strings of length m made of blocks 1^a 0^b with b > a >= 1;
    # a block of total length l admits floor((l - 1) / 2) splits
    if m == 0:
        return 1
    return sum((length - 1) // 2 * _block_sequences(m - length) for length in range(3, m + 1))


def count_vertices(n: int) -> int:
    """Exact number of vertices of R_n.

    A run-constrained string is ``0^z`` followed by blocks ``1^a 0^b`` with
    ``b > a``; every such string of length ``n + 2`` already ends in ``00``, so
    the vertex count is the number of run-constrained strings of length ``n + 2``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for m in range(0, n + 3):  # fill the cache bottom-up, no deep recursion
        _block_sequences(m)
    return sum(_block_sequences(m) for m in range(0, n + 3))


def fibonacci(k: int) -> int:
    """F_k with F_1 = F_2 = 1 (and F_0 = 0)."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def vertex_codes(n: int, max_count: int | None = None) -> np.ndarray:
    """Sorted ``int64`` codes of all vertices of R_n.

    Prefixes are extended level by level and pruned as soon as they cannot be
    completed, so every intermediate array is bounded by the final count.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 62:
        raise BudgetExceededError(f"n={n} does not fit 64-bit vertex codes")
    cap = DEFAULT_MAX_VERTICES if max_count is None else max_count
    total = count_vertices(n)
    if total > cap:
        raise BudgetExceededError(
            f"R_{n} has {total} vertices, above the cap of {cap} "
            "(raise it with FIBRUN_MAX_VERTICES or max_count)"
        )
    code = np.zeros(1, dtype=np.int64)
    run1 = np.zeros(1, dtype=np.int64)  # length of the trailing 1-run
    pend = np.zeros(1, dtype=np.int64)  # last closed 1-run still awaiting its zeros
    zeros = np.zeros(1, dtype=np.int64)  # zeros seen since that run closed
    for i in range(n):
        rest = n - i - 1  # free positions left after this one, before the "00" tail
        # append 0
        c0 = code << 1
        closing = run1 > 0
        p0 = np.where(closing, run1, pend)
        z0 = np.where(closing, 1, zeros + 1)
        r0 = np.zeros_like(run1)
        ok0 = (p0 == 0) | (z0 + rest + 2 > p0)
        # append 1
        can_open = (run1 > 0) | (pend == 0) | (zeros > pend)
        c1 = (code << 1) | 1
        r1 = run1 + 1
        ok1 = can_open & (r1 + 1 <= rest + 2)
        code = np.concatenate([c0[ok0], c1[ok1]])
        run1 = np.concatenate([r0[ok0], r1[ok1]])
        pend = np.concatenate([p0[ok0], np.zeros(int(ok1.sum()), dtype=np.int64)])
        zeros = np.concatenate([z0[ok0], np.zeros(int(ok1.sum()), dtype=np.int64)])
    code.sort()
    if code.size != total:
        raise AssertionError(f"enumeration produced {code.size} vertices, expected {total}")
    return code


def enumerate_vertices(n: int, max_count: int | None = None) -> List[str]:
    """All vertices of R_n in ascending lexicographic order."""
    return [from_code(c, n) for c in vertex_codes(n, max_count).tolist()]
