"""Conjectured diameter, parameter scans, certified lower bounds and tables.

Every decision involving a radical is made with :func:`math.isqrt` on exact
integers.  Lower bounds come only from witness pairs that were built and
re-verified by :mod:`fibrun.constructions`.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from math import isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import printed
from .constructions import (
    ConstructionSpec,
    WitnessPair,
    complete_length,
    construct,
    h_type_pair,
    suffix_shape,
)
from .errors import ConstructionError

log = logging.getLogger(__name__)

__all__ = [
    "BAR1",
    "BAR2",
    "SearchCaps",
    "PInterval",
    "ScanRow",
    "BoundReport",
    "conjectured_diameter",
    "p_of",
    "e_max",
    "e_max_closed_form",
    "m_range",
    "m_range_closed_form",
    "n_limit",
    "scan_row",
    "best_lower_bound",
    "refutation_scan",
    "table",
    "table_csv",
    "table_diff",
    "table3_rows",
    "table3_csv",
    "table3_diff",
    "refutation_diff",
    "corollary45_bound",
    "corollary45_closed_form",
    "corollary45_crosscheck",
    "format_ranges",
    "DEFAULT_CAPS",
    "BARRIER_CAPS",
    "VARIANTS",
]

BAR1 = "Bar1"
BAR2 = "Bar2"
VARIANTS = (BAR1, BAR2)


def _tri(k: int) -> int:
    return k * (k + 1) // 2


@dataclass(frozen=True)
class PInterval:
    p: int

    @property
    def lo(self) -> int:
        return 2 * self.p * self.p + 3 * self.p

    @property
    def hi(self) -> int:
        return 2 * self.p * self.p + 7 * self.p + 4

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi


def conjectured_diameter(n: int) -> int:
    """``n - q`` with ``q`` the largest integer such that ``(4q+3)^2 <= 8n+16``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return n - (isqrt(8 * n + 16) - 3) // 4


def p_of(n: int) -> PInterval:
    """The interval ``2p^2+3p <= n <= 2p^2+7p+4`` holding ``n`` (larger ``p`` at a shared endpoint)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = (isqrt(8 * n + 9) - 3) // 4
    while PInterval(p + 1).lo <= n:
        p += 1
    while PInterval(p).lo > n:
        p -= 1
    return PInterval(p)


def _quad(variant: str, p: int, m: int, e: int) -> int:
    if variant == BAR1:
        return 9 * e * e + (33 + 18 * m) * e + 5 * m * m + 19 * m - 8 * m * p - 8 * p + 22
    if variant == BAR2:
        return 9 * e * e + (27 + 18 * m) * e + 5 * m * m + (13 - 8 * p) * m - 8 * p + 16
    raise ValueError(f"unknown variant {variant!r}")


def e_max(p: int, m: int, variant: str = BAR1) -> int:
    """Largest ``e >= 0`` satisfying the variant's quadratic inequality; 0 when ``e = 1`` fails.

    The left-hand side is increasing in ``e >= 0``, so the search stops at the
    first failure.
    """
    if p < 0 or m < 0:
        raise ValueError("p and m must be non-negative")
    e = 0
    while _quad(variant, p, m, e + 1) <= 0:
        e += 1
    return e


def e_max_closed_form(p: int, m: int, variant: str = BAR1) -> int:
    """The printed closed form for the maximum ``e``, evaluated exactly (may be negative)."""
    if variant == BAR1:
        c, disc = 11, 16 * m * m + (32 * p + 56) * m + 32 * p + 33
    else:
        c, disc = 9, 16 * m * m + (32 * p + 56) * m + 32 * p + 17
    return (isqrt(disc) - 6 * m - c) // 6


def m_range(p: int, variant: str = BAR1, cap: Optional[int] = None) -> range:
    """``{m >= 0 : e_max(p, m) >= 1}`` as a range (empty range if none).

    The condition at ``e = 1`` is a convex quadratic in ``m``, so the set is an
    interval; ``cap`` (default ``4p + 4``) only bounds the scan.
    """
    cap = 4 * p + 4 if cap is None else cap
    ms = [m for m in range(cap + 1) if _quad(variant, p, m, 1) <= 0]
    closed = m_range_closed_form(p, variant)
    found = range(ms[0], ms[-1] + 1) if ms else range(0)
    if list(found) != list(closed):
        log.info("m-range p=%d %s: search %s, closed form %s", p, variant, found, closed)
    return found


def m_range_closed_form(p: int, variant: str = BAR1) -> range:
    if variant == BAR1:
        a, disc = 8 * p - 37, 64 * p * p - 432 * p + 89
    else:
        a, disc = 8 * p - 31, 64 * p * p - 336 * p - 79
    if disc < 0:
        return range(0)
    r = isqrt(disc)
    # ceil((a - sqrt)/10) and floor((a + sqrt)/10)
    lo = -((r - a) // 10)
    hi = (a + r) // 10
    lo = max(lo, 0)
    return range(lo, hi + 1) if hi >= lo else range(0)


def n_limit(q: int, b: int, variant: str = BAR1) -> Optional[int]:
    """Largest feasible ``n`` (Bar1) or the exact ``n`` (Bar2); ``None`` when negative."""
    full = complete_length(q)
    if b <= 0:
        return full
    if variant == BAR1:
        out = full - _tri(3 * b - 1)
    else:
        out = full - _tri(3 * b + 1) - 2
    return out if out >= 0 else None


@dataclass(frozen=True)
class ScanRow:
    p: int
    m: int
    variant: str
    e_max: int
    n: Optional[int]

    def cell(self) -> str:
        return "-" if self.n is None else str(self.n)


def scan_row(p: int, m: int, variant: str) -> ScanRow:
    """One column of the per-``p`` parameter table; ``n`` is clamped or blanked to the ``p`` interval."""
    e = e_max(p, m, variant)
    iv = PInterval(p)
    q = p + m
    if variant == BAR1:
        raw = n_limit(q, m + 2 + e, BAR1)
        n = None if raw is None or raw < iv.lo else min(raw, iv.hi)
    else:
        raw = n_limit(q, m + 1 + e, BAR2)
        n = raw if raw is not None and raw in iv else None
    return ScanRow(p, m, variant, e, n)


# ---------------------------------------------------------------- search


@dataclass(frozen=True)
class SearchCaps:
    """Grid caps for :func:`best_lower_bound`; widening them can only raise bounds."""

    m_factor: int = 4  # m <= m_factor * p (at least min_m)
    min_m: int = 4
    b_extra: int = 4  # b <= 3p + b_extra
    widths: Tuple[int, ...] = (2, 3, 4)
    max_chain: int = 12
    families: Tuple[str, ...] = ("NH-Bar1", "NH-Bar2", "ThickChain")
# the two barrier families the printed Table 3 was derived from
BARRIER_CAPS = SearchCaps(families=("NH-Bar1", "NH-Bar2"))


DEFAULT_CAPS = SearchCaps()


@dataclass
class BoundReport:
    n: int
    p: int
    conjectured: int
    certified: int
    witness: WitnessPair

    @property
    def delta(self) -> int:
        return self.certified - self.conjectured

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "conjectured": self.conjectured,
            "certified": self.certified,
            "delta": self.delta,
            "witness": self.witness.to_dict(),
        }


def _candidates(n: int, p: int, caps: SearchCaps) -> List[Tuple[int, ConstructionSpec]]:
    out = []
    top_m = max(caps.m_factor * p, caps.min_m)
    for q in range(p, p + top_m + 1):
        if complete_length(q) < n:
            continue
        shape = suffix_shape(q, n)
        if shape is None:
            continue
        base = n - q
        k, big = shape.k, shape.first_full
        b_top = min(max((k + 3) // 3, (big - 1) // 3), 3 * p + caps.b_extra)
        for b in range(2, b_top + 1 if "NH-Bar1" in caps.families else 2):
            out.append((base + b - 2, ConstructionSpec("NH-Bar1", n, q, b=b)))
        if "NH-Bar2" in caps.families and k % 3 == 0 and big == k + 3 and k >= 6:
            out.append((base + k // 3 - 1, ConstructionSpec("NH-Bar2", n, q)))
        for w in caps.widths if "ThickChain" in caps.families else ():
            for c in range(2, caps.max_chain + 1):
                for prefix in (False, True):
                    gain = c * w + (1 if prefix else 0) - 2 * w
                    if gain <= 0:
                        continue
                    need = (3 if prefix else 0) + (2 * w + 1) * (c - 1)
                    for join in (True, False):
                        size = need if join else need + 2 * w + 1
                        if size > k:
                            continue
                        out.append(
                            (base + gain, ConstructionSpec("ThickChain", n, q, w=w, c=c, prefix=prefix, join=join))
                        )
    family_rank = {"NH-Bar1": 0, "NH-Bar2": 1, "ThickChain": 2}
    out.sort(key=lambda t: (-t[0], t[1].q, family_rank[t[1].family], t[1].b or 0, t[1].w or 0, t[1].c or 0))
    return out


def best_lower_bound(n: int, caps: SearchCaps = DEFAULT_CAPS) -> BoundReport:
    """Largest certified distance among the implemented families, never below ``n - p``."""
    iv = p_of(n)
    p = iv.p
    best = h_type_pair(p, n)
    for predicted, spec in _candidates(n, p, caps):
        if predicted <= best.certified_distance:
            break
        try:
            found = construct(spec)
        except ConstructionError as exc:
            log.debug("n=%d: %s rejected: %s", n, spec, exc)
            continue
        best = found
    return BoundReport(n=n, p=p, conjectured=conjectured_diameter(n), certified=best.certified_distance, witness=best)


def refutation_scan(lo: int, hi: int, caps: SearchCaps = DEFAULT_CAPS) -> List[int]:
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    return [n for n in range(max(lo, 0), hi + 1) if best_lower_bound(n, caps).delta >= 1]


# ---------------------------------------------------------------- formatting


def format_ranges(values: Iterable[int]) -> str:
    """``[91, 94, 95, 96]`` -> ``"91;94:96"``."""
    vals = sorted(set(values))
    parts = []
    i = 0
    while i < len(vals):
        j = i
        while j + 1 < len(vals) and vals[j + 1] == vals[j] + 1:
            j += 1
        parts.append(str(vals[i]) if i == j else f"{vals[i]}:{vals[j]}")
        i = j + 1
    return ";".join(parts)


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------- tables


def _scan_table(p: int, variant: str) -> List[ScanRow]:
    return [scan_row(p, m, variant) for m in m_range(p, variant)]


def table3_rows(ps: Iterable[int] = range(6, 30), caps: SearchCaps = BARRIER_CAPS) -> Dict[int, dict]:
    """Recomputed rows: for each ``p``, the top gain ``e`` and the ``n`` sets at ``e``, ``e-1``, ``e-2``."""
    rows = {}
    for p in ps:
        iv = PInterval(p)
        deltas = {n: best_lower_bound(n, caps).delta for n in range(iv.lo, iv.hi + 1)}
        e = max(deltas.values())
        levels = [sorted(n for n, d in deltas.items() if d == e - i) for i in range(3)]
        rest = sorted(n for n, d in deltas.items() if d < e - 2)
        rows[p] = {"e": e, "levels": levels, "other": rest, "deltas": deltas}
    return rows


def table(id: int, p: Optional[int] = None, caps: SearchCaps = BARRIER_CAPS):
    """Recomputed table rows.

    ``id`` 1 and 2 give :class:`ScanRow` lists for one ``p`` (default 15);
    ``id`` 3 gives :func:`table3_rows` for one ``p`` or for ``6:29``.  Table 3
    defaults to the two barrier families so it compares like with like; pass
    ``DEFAULT_CAPS`` to fold in the thick chains as well.
    """
    if id in (1, 2):
        return _scan_table(15 if p is None else p, BAR1 if id == 1 else BAR2)
    if id == 3:
        return table3_rows(range(6, 30) if p is None else [p], caps)
    raise ValueError(f"unknown table id {id}")


def table_csv(id: int, p: Optional[int] = None, caps: SearchCaps = BARRIER_CAPS) -> str:
    if id == 3:
        return table3_csv(range(6, 30) if p is None else [p], caps)
    data = table(id, p, caps)
    head = "n_le" if id == 1 else "n_eq"
    return _csv(["m", "e", head], ((r.m, r.e_max, r.cell()) for r in data))


def table3_csv(ps: Iterable[int], caps: SearchCaps = BARRIER_CAPS) -> str:
    return _csv(
        ["p", "e", "n_p_e", "n_p_e_minus_1", "n_p_e_minus_2", "other"],
        (
            (pp, row["e"], *(format_ranges(level) for level in row["levels"]), format_ranges(row["other"]))
            for pp, row in table3_rows(ps, caps).items()
        ),
    )


def table_diff(id: int, p: Optional[int] = None, caps: SearchCaps = BARRIER_CAPS) -> List[str]:
    """Line-oriented diff of the recomputed table against the printed one (empty when identical)."""
    lines: List[str] = []
    if id in (1, 2):
        pp = 15 if p is None else p
        if pp != 15:
            return [f"table{id} p={pp}: no printed table to compare"]
        rows = {r.m: r for r in table(id, pp)}
        ref = printed.TABLE1_P15 if id == 1 else printed.TABLE2_P15
        for m, e, n in ref:
            r = rows.get(m)
            if r is None:
                lines.append(f"table{id} m={m}: printed e={e} n={n}, recomputed absent")
                continue
            if r.e_max != e:
                lines.append(f"table{id} m={m}: e printed={e} recomputed={r.e_max}")
            if r.n != n:
                lines.append(f"table{id} m={m}: n printed={'-' if n is None else n} recomputed={r.cell()}")
        for m in sorted(set(rows) - {m for m, _, _ in ref}):
            lines.append(f"table{id} m={m}: recomputed e={rows[m].e_max} n={rows[m].cell()}, not printed")
        return lines
    return table3_diff(range(6, 30) if p is None else [p], caps)


def table3_diff(ps: Iterable[int], caps: SearchCaps = BARRIER_CAPS) -> List[str]:
    lines: List[str] = []
    for pp, row in table3_rows(ps, caps).items():
        ref = printed.TABLE3.get(pp)
        if ref is None:
            continue
        e, _, sets = ref
        if row["e"] != e:
            lines.append(f"table3 p={pp}: e printed={e} recomputed={row['e']}")
        iv = PInterval(pp)
        for i in range(3):
            got = {n for n, d in row["deltas"].items() if d == e - i}
            want = {n for n in sets[i] if n in iv}
            if got != want:
                extra, missing = sorted(got - want), sorted(want - got)
                lines.append(
                    f"table3 p={pp} level=e-{i}: recomputed-only={format_ranges(extra) or '-'} "
                    f"printed-only={format_ranges(missing) or '-'}"
                )
            outside = sorted(n for n in sets[i] if n not in iv)
            if outside:
                lines.append(f"table3 p={pp} level=e-{i}: printed entries outside the p range: {format_ranges(outside)}")
    return lines


def refutation_diff(found: Iterable[int], lo: int = 90, hi: int = 229) -> List[str]:
    """Recomputed refutation set on ``lo:hi`` against the printed set and the printed ``T1``."""
    got = {n for n in found if lo <= n <= hi}
    want = {n for n in printed.S2_PRINTED if lo <= n <= hi}
    lines = [
        f"recomputed: {format_ranges(got)}",
        f"printed S2: {format_ranges(want)}",
        f"recomputed-only: {format_ranges(got - want) or '-'}",
        f"printed-only: {format_ranges(want - got) or '-'}",
    ]
    t1 = printed.T_SETS[1]
    lines.append(
        f"printed T1 {format_ranges(t1)} vs recomputed p=6 part {format_ranges(n for n in got if n in PInterval(6))}"
    )
    return lines


# ---------------------------------------------------------------- corollary


def corollary45_bound(n: int) -> int:
    """Lower bound read off the printed Table 3 row of ``p_of(n)``."""
    if not 90 <= n <= 1889:
        raise ValueError(f"n={n} outside 90:1889")
    p = p_of(n).p
    e, _, sets = printed.TABLE3[p]
    for i, s in enumerate(sets):
        if n in s:
            return n - p + e - i
    raise ValueError(f"n={n} is not covered by the printed row p={p}")


def corollary45_closed_form(n: int) -> int:
    """The printed closed form ``n - floor(sqrt(81/144 + 5n/18) - 13/12)`` (+1 on ``T``), exactly."""
    if not 90 <= n <= 1889:
        raise ValueError(f"n={n} outside 90:1889")
    # sqrt(81/144 + 5n/18) = sqrt(81 + 40n) / 12
    val = n - (isqrt(81 + 40 * n) - 13) // 12
    return val + 1 if n in printed.T_UNION else val


def corollary45_crosscheck(ns: Iterable[int], caps: SearchCaps = DEFAULT_CAPS) -> List[dict]:
    """Rows where the table bound, the closed form and the recomputed bound do not all agree."""
    out = []
    for n in ns:
        tb, cf = corollary45_bound(n), corollary45_closed_form(n)
        rec = best_lower_bound(n, caps).certified
        if not tb == cf == rec:
            out.append({"n": n, "table": tb, "closed_form": cf, "recomputed": rec})
    return out
