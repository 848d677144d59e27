"""Distance-barriers between two vertices of R_n and the distance they certify.

Columns where both strings carry a 1 split into maximal *common segments*.
Inside a maximal 1-run of one string (the solid side) the other string's 1s
are exactly the common segments lying in that run; when there are two or more
of them they cannot all survive a walk inside R_n, and every one except the
thickest has to be cleared and refilled.  That window is a barrier, its common
segments are the trapped runs and their lengths the thicknesses.

A segment sits in exactly one 1-run of each string, so segments are the edges
of a bipartite graph between the 1-runs of ``u`` and the 1-runs of ``v``.  A
1-run can keep at most one of its segments intact, hence the kept segments
form a matching, and the detour is twice the weight left out of a
maximum-weight matching.  For an isolated barrier (a star) that is
``sum(thicknesses) - max(thicknesses)``; barriers of opposite orientation that
share a segment are priced jointly as one cluster.  Each run's segments are
contiguous left to right, so the matching is a four-state scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import BarrierOverlapError, LengthMismatchError
from .strings import hamming, one_runs, to_code, validate_vertex

__all__ = [
    "Barrier",
    "BarrierCluster",
    "DistanceCertificate",
    "find_barriers",
    "barrier_cost",
    "distance_certified",
    "certified_distance",
    "is_hamming_pair",
]


@dataclass(frozen=True)
class Barrier:
    """One distance-barrier; columns are 1-based and inclusive.

    ``orientation`` names the solid side (``"u"`` or ``"v"``).  ``start``/``end``
    span the barrier factor from its first to its last trapped 1, while
    ``window`` is the solid side's maximal 1-run containing it.
    """

    orientation: str
    start: int
    end: int
    window: Tuple[int, int]
    thicknesses: Tuple[int, ...]
    gaps: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.thicknesses)

    @property
    def thickest(self) -> int:
        return max(self.thicknesses)

    @property
    def kept_index(self) -> int:
        """Position of the trapped run that is never cleared (leftmost maximum)."""
        return self.thicknesses.index(self.thickest)

    @property
    def cost(self) -> int:
        return self.total - self.thickest

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation,
            "start": self.start,
            "end": self.end,
            "window": list(self.window),
            "thicknesses": list(self.thicknesses),
            "gaps": list(self.gaps),
        }


@dataclass(frozen=True)
class BarrierCluster:
    """Barriers whose trapped runs are linked through shared common segments."""

    barriers: Tuple[int, ...]
    weight: int
    kept: int

    @property
    def cost(self) -> int:
        return self.weight - self.kept

    @property
    def coupled(self) -> bool:
        return len(self.barriers) > 1


@dataclass
class DistanceCertificate:
    u: str
    v: str
    hamming: int
    barriers: List[Barrier]
    clusters: List[BarrierCluster] = field(default_factory=list)

    @property
    def cost_per_barrier(self) -> List[Optional[int]]:
        """``C`` for each barrier; ``None`` for barriers priced inside a coupled cluster."""
        out: List[Optional[int]] = [b.cost for b in self.barriers]
        for cl in self.clusters:
            if cl.coupled:
                for i in cl.barriers:
                    out[i] = None
        return out

    @property
    def detour(self) -> int:
        return sum(cl.cost for cl in self.clusters)

    @property
    def certified_distance(self) -> int:
        return self.hamming + 2 * self.detour

    @property
    def coupled(self) -> bool:
        return any(cl.coupled for cl in self.clusters)

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "hamming": self.hamming,
            "barriers": [b.to_dict() for b in self.barriers],
            "certified_distance": self.certified_distance,
        }


def barrier_cost(b: Barrier) -> Tuple[int, int, int]:
    """``(C', M, C)``: total thickness, maximum thickness and their difference."""
    return b.total, b.thickest, b.cost


def _common_segments(u: str, v: str) -> List[Tuple[int, int, int, int]]:
    """Common segments as ``(start, stop, u_run, v_run)`` with 0-based half-open spans."""
    ru, rv = one_runs(u), one_runs(v)
    out = []
    i = j = 0
    while i < len(ru) and j < len(rv):
        lo = max(ru[i][0], rv[j][0])
        hi = min(ru[i][1], rv[j][1])
        if lo < hi:
            out.append((lo, hi, i, j))
        if ru[i][1] <= rv[j][1]:
            i += 1
        else:
            j += 1
    return out


def _matching_keep(weights: Sequence[int], links: Sequence[str]) -> int:
    """Maximum kept weight along one cluster.

    ``links[t]`` says how segment ``t + 1`` relates to segment ``t``: ``"u"`` if
    they share a 1-run of ``u``, ``"v"`` if they share one of ``v``.
    """
    # state: (current u-run already keeps a segment, current v-run already keeps one)
    neg = -1
    best = {(False, False): 0, (True, True): weights[0]}
    for w, link in zip(weights[1:], links):
        carried = {}
        for (fu, fv), val in best.items():
            key = (fu, False) if link == "u" else (False, fv)
            if carried.get(key, neg) < val:
                carried[key] = val
        best = dict(carried)
        free = carried.get((False, False), neg)
        if free >= 0 and best.get((True, True), neg) < free + w:
            best[(True, True)] = free + w
    return max(best.values())


def _clusters(segs) -> List[List[int]]:
    groups: List[List[int]] = []
    for t, seg in enumerate(segs):
        if groups:
            prev = segs[groups[-1][-1]]
            if prev[2] == seg[2] or prev[3] == seg[3]:
                groups[-1].append(t)
                continue
        groups.append([t])
    return groups


def _analyse(u: str, v: str, strict: bool) -> Tuple[List[Barrier], List[BarrierCluster]]:
    if len(u) != len(v):
        raise LengthMismatchError(f"length mismatch: {len(u)} != {len(v)}")
    segs = _common_segments(u, v)
    ru, rv = one_runs(u), one_runs(v)

    # barriers keyed by (orientation, solid run id) -> segment ids
    members: dict = {}
    for t, (_, _, iu, iv) in enumerate(segs):
        members.setdefault(("u", iu), []).append(t)
        members.setdefault(("v", iv), []).append(t)
    raw = []
    for (side, rid), ts in members.items():
        if len(ts) < 2:
            continue
        window = (ru if side == "u" else rv)[rid]
        spans = [segs[t][:2] for t in ts]
        raw.append(
            (
                spans[0][0],
                side,
                Barrier(
                    orientation=side,
                    start=spans[0][0] + 1,
                    end=spans[-1][1],
                    window=(window[0] + 1, window[1]),
                    thicknesses=tuple(b - a for a, b in spans),
                    gaps=tuple(spans[k + 1][0] - spans[k][1] for k in range(len(spans) - 1)),
                ),
                ts,
            )
        )
    raw.sort(key=lambda r: (r[0], r[1]))
    barriers = [r[2] for r in raw]
    seg_owner: dict = {}
    for bi, r in enumerate(raw):
        for t in r[3]:
            seg_owner.setdefault(t, []).append(bi)

    clusters: List[BarrierCluster] = []
    for group in _clusters(segs):
        owners = sorted({bi for t in group for bi in seg_owner.get(t, ())})
        if not owners:
            continue
        if strict and len(owners) > 1:
            raise BarrierOverlapError(
                "barriers of opposite orientation share a column: "
                + ", ".join(f"{barriers[i].orientation}{list(barriers[i].window)}" for i in owners),
                windows=[barriers[i].window for i in owners],
            )
        weights = [segs[t][1] - segs[t][0] for t in group]
        links = ["u" if segs[a][2] == segs[b][2] else "v" for a, b in zip(group, group[1:])]
        clusters.append(
            BarrierCluster(barriers=tuple(owners), weight=sum(weights), kept=_matching_keep(weights, links))
        )
    return barriers, clusters


def find_barriers(u: str, v: str, strict: bool = False) -> List[Barrier]:
    """All distance-barriers between ``u`` and ``v``, ordered left to right.

    With ``strict=True`` barriers of opposite orientation that share a column
    raise :class:`BarrierOverlapError` instead of being priced jointly.
    """
    return _analyse(u, v, strict)[0]


def distance_certified(u: str, v: str, strict: bool = False, validate: bool = True) -> DistanceCertificate:
    if validate:
        validate_vertex(u, len(v))
        validate_vertex(v, len(u))
    barriers, clusters = _analyse(u, v, strict)
    return DistanceCertificate(u=u, v=v, hamming=hamming(u, v), barriers=barriers, clusters=clusters)


def is_hamming_pair(u: str, v: str) -> bool:
    """True iff no distance-barrier separates ``u`` and ``v``."""
    return not find_barriers(u, v)


def certified_distance(u: str, v: str) -> int:
    """Certified distance only, on integer codes; no validation, no certificate.

    Bit order is reversed relative to the string, which the matching does not
    care about.
    """
    a, b = to_code(u), to_code(v)
    common = a & b
    dist = (a ^ b).bit_count()
    if not common:
        return dist
    detour = 0
    weights: List[int] = []
    links: List[str] = []
    prev_end = -1
    while common:
        low = common & -common
        lo = low.bit_length() - 1
        shifted = common >> lo
        width = ((shifted + 1) & ~shifted).bit_length() - 1
        if weights:
            gap = ((1 << (lo - prev_end)) - 1) << prev_end
            if a & gap == gap:
                links.append("u")
            elif b & gap == gap:
                links.append("v")
            else:
                detour += sum(weights) - _matching_keep(weights, links)
                weights, links = [], []
        weights.append(width)
        prev_end = lo + width
        common &= ~(((1 << width) - 1) << lo)
    detour += sum(weights) - _matching_keep(weights, links)
    return dist + 2 * detour
