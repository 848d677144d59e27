"""Witness pairs: H-type pairs and the barrier-planting families built on them.

Every constructor assembles a candidate pair, then re-derives everything from
first principles: both strings must be vertices, the barrier detector must
find exactly the planted barrier, and the certified distance must agree with
the closed-form gain of the family.  Nothing is emitted on disagreement.

Layout of a suffix of the complete H-type pair ending with ``q``: the string
that starts with zeros (the *zero side*) reads ``0^k 1^N 0^{N+1} ... `` up to
the run of length ``2q+2``, then the run of length ``q+1``, then ``0^q`` shared
with its partner.  The partner is the complement on all but the shared tail.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .barriers import Barrier, DistanceCertificate, distance_certified
from .errors import ConstructionError
from .strings import complement, is_vertex

log = logging.getLogger(__name__)

__all__ = [
    "FAMILIES",
    "complete_length",
    "complete_h_pair",
    "SuffixShape",
    "suffix_shape",
    "ConstructionSpec",
    "WitnessPair",
    "h_type_pair",
    "nh_bar1_pair",
    "nh_bar2_pair",
    "thick_chain_pair",
    "construct",
    "lemma310_gain",
    "barrier_gain",
]

FAMILIES = ("H", "NH-Bar1", "NH-Bar2", "ThickChain")


def complete_length(q: int) -> int:
    return 2 * q * q + 7 * q + 4


def _tri(k: int) -> int:
    return k * (k + 1) // 2


def p_interval_of(n: int) -> int:
    """Largest ``p`` with ``2p^2 + 3p <= n`` (local copy to avoid importing bounds)."""
    p = 0
    while 2 * (p + 1) ** 2 + 3 * (p + 1) <= n:
        p += 1
    return p


def complete_h_pair(q: int) -> Tuple[str, str]:
    if q < 0:
        raise ValueError("q must be non-negative")
    mu = "".join(("1" if j % 2 else "0") * j for j in range(1, 2 * q + 3))
    mu += "1" * (q + 1)
    nu = complement(mu)
    return mu + "0" * q, nu + "0" * q


def _body(after, q: int) -> str:
    return _alternate(after) + "0" * q


def _alternate(lengths, first: str = "1") -> str:
    out, bit = [], first
    for length in lengths:
        out.append(bit * length)
        bit = "0" if bit == "1" else "1"
    return "".join(out)


@dataclass(frozen=True)
class SuffixShape:
    """Run geometry of the length-``n`` suffix of the complete H-type pair ending with ``q``.

    ``after`` lists the zero side's runs following its partial first run, the
    first of them a 1-run; ``zero_side`` says whether that side is the suffix
    of the string starting ``1 0^2 1^3 ...`` (``"mu"``) or of its partner.
    """

    q: int
    n: int
    k: int
    after: Tuple[int, ...]
    zero_side: str

    @property
    def first_full(self) -> int:
        return self.after[0]

    @property
    def t(self) -> int:
        return (self.first_full - 1) // 3

    @property
    def s(self) -> int:
        return (self.first_full - 1) % 3

    def zero_string(self) -> str:
        return "0" * self.k + _body(self.after, self.q)


def suffix_shape(q: int, n: int) -> Optional[SuffixShape]:
    """Geometry of the suffix cut, or ``None`` when the cut falls inside the common tail."""
    full = complete_length(q)
    if not 0 <= n <= full:
        raise ConstructionError(f"n={n} outside 0:{full} for H-type strings ending with {q}")
    drop = full - n
    if drop >= _tri(2 * q + 2) + q + 1:
        return None
    if drop >= _tri(2 * q + 2):
        return None  # cut inside the (q+1)-run: no alternating body left
    j = 1
    while _tri(j) <= drop:
        j += 1
    k = _tri(j) - drop
    after = tuple(range(j + 1, 2 * q + 3)) + (q + 1,)
    zero_side = "nu" if j % 2 else "mu"
    return SuffixShape(q=q, n=n, k=k, after=after, zero_side=zero_side)


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    n: int
    q: int
    b: Optional[int] = None
    w: Optional[int] = None
    c: Optional[int] = None
    prefix: bool = False
    join: bool = True

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")

    @property
    def p(self) -> int:
        return p_interval_of(self.n)

    @property
    def m(self) -> int:
        return self.q - self.p

    @property
    def shape(self) -> Optional[SuffixShape]:
        return suffix_shape(self.q, self.n)

    def params(self) -> dict:
        shape = self.shape
        return {
            "p": self.p,
            "m": self.m,
            "b": self.b,
            "k": shape.k if shape else None,
            "s": shape.s if shape else None,
            "t": shape.t if shape else None,
            "w": self.w,
            "c": self.c,
        }


@dataclass
class WitnessPair:
    u: str
    v: str
    spec: ConstructionSpec
    certificate: DistanceCertificate
    case: str = ""
    planted: Optional[Barrier] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def certified_distance(self) -> int:
        return self.certificate.certified_distance

    @property
    def e(self) -> int:
        return self.certified_distance - (self.n - self.spec.p)

    def to_dict(self) -> dict:
        return {
            "family": self.spec.family,
            "params": self.spec.params(),
            "u": self.u,
            "v": self.v,
            "hamming": self.certificate.hamming,
            "certified_distance": self.certified_distance,
            "e": self.e,
        }


def h_type_pair(q: int, n: int) -> WitnessPair:
    """Length-``n`` suffixes of the complete H-type pair ending with ``q``."""
    full = complete_length(q)
    if n > full:
        raise ConstructionError(f"n={n} exceeds the complete length {full} for q={q}")
    if n < q:
        raise ConstructionError(f"n={n} is shorter than the shared tail 0^{q}")
    mu, nu = complete_h_pair(q)
    u, v = mu[full - n :], nu[full - n :]
    cert = distance_certified(u, v)
    if cert.barriers or cert.certified_distance != n - q:
        raise ConstructionError(f"H-type pair q={q}, n={n} failed validation")
    return WitnessPair(u=u, v=v, spec=ConstructionSpec("H", n, q), certificate=cert, case="suffix")


def _partner(alpha: str, window: Tuple[int, int], q: int) -> str:
    """Solid side: 1s across ``window`` (0-based half-open), complement elsewhere, shared ``0^q`` tail."""
    n = len(alpha)
    body = complement(alpha[: n - q])
    lo, hi = window
    return body[:lo] + "1" * (hi - lo) + body[hi:] + "0" * q


def barrier_gain(b: Barrier) -> int:
    """Gain ``C' - 2M`` of one barrier over the H-type pair it was planted in."""
    return b.total - 2 * b.thickest


def _finish(
    spec: ConstructionSpec,
    alpha: str,
    window: Tuple[int, int],
    case: str,
    expected: Tuple[int, ...],
    predicted: int,
) -> WitnessPair:
    n, q = spec.n, spec.q
    if len(alpha) != n:
        raise ConstructionError(f"{spec.family}/{case}: built length {len(alpha)} != {n}")
    beta = _partner(alpha, window, q)
    if not (is_vertex(alpha, n) and is_vertex(beta, n)):
        raise ConstructionError(f"{spec.family}/{case}: constructed strings are not vertices of R_{n}")
    cert = distance_certified(alpha, beta, validate=False)
    if len(cert.barriers) != 1:
        raise ConstructionError(f"{spec.family}/{case}: expected one barrier, found {len(cert.barriers)}")
    bar = cert.barriers[0]
    if bar.orientation != "v" or bar.thicknesses != expected:
        raise ConstructionError(
            f"{spec.family}/{case}: planted barrier {expected} detected as {bar.thicknesses}"
        )
    if cert.certified_distance != predicted:
        raise ConstructionError(
            f"{spec.family}/{case}: certified {cert.certified_distance} != closed form {predicted}"
        )
    return WitnessPair(u=alpha, v=beta, spec=spec, certificate=cert, case=case, planted=bar)


def _shape_or_fail(spec: ConstructionSpec) -> SuffixShape:
    shape = spec.shape
    if shape is None:
        raise ConstructionError(f"q={spec.q}, n={spec.n}: suffix has no alternating body")
    return shape


def _bar1_layout(shape: SuffixShape, b: int) -> Tuple[str, Tuple[int, int], str]:
    """Zero-side rewrite planting ``(100)^{b-1}1`` under a solid window, by position of the cut."""
    k, after = shape.k, list(shape.after)
    big = after[0]
    if 3 * b <= k:
        return "0" * (k - 3 * b) + "100" * b + _body(after, shape.q), (0, k), "prefix"
    if k == 3 * b - 1:
        return "11000" + "100" * (b - 2) + _body(after, shape.q), (1, k + 1), "shifted"
    if 3 * b - 4 < k < 3 * b - 1:
        return "0" * (k - 3 * b + 3) + "100" * (b - 1) + _body(after, shape.q), (0, k + 1), "extend"
    # k <= 3b - 4: rebuild the first runs as 3b, 3b+1, ..., 3b+i-1 and one absorbing run
    slack = big - 3 * b
    if slack < 1:
        raise ConstructionError(f"k={k}, b={b}: first full run {big} too short to relayout")
    need = 3 * b - 3 - k
    level = max(0, -(-need // slack) - 1)
    if level + 1 >= len(after):
        raise ConstructionError(f"k={k}, b={b}: needs {level + 2} runs after the cut, have {len(after)}")
    rebuilt = [3 * b + j for j in range(level)]
    absorb = k + sum(after[: level + 1]) - (3 * b - 3) - sum(rebuilt)
    runs = rebuilt + [absorb] + after[level + 1 :]
    return "100" * (b - 1) + _body(runs, shape.q), (0, 3 * b - 2), f"relayout{level}"


def nh_bar1_pair(spec: ConstructionSpec) -> WitnessPair:
    """Plant the barrier ``(111)^{b-1}1 / (100)^{b-1}1`` into an H-type suffix."""
    b = spec.b
    if b is None or b < 2:
        raise ConstructionError("NH-Bar1 needs b >= 2")
    shape = _shape_or_fail(spec)
    alpha, window, case = _bar1_layout(shape, b)
    return _finish(spec, alpha, window, case, (1,) * b, spec.n - spec.q + b - 2)


def nh_bar2_pair(spec: ConstructionSpec) -> WitnessPair:
    """Suffix ``0^{3t} 1^{3t+3} ...``: plant ``(111)^t 1 / (100)^t 1`` (``t + 1`` barriers)."""
    shape = _shape_or_fail(spec)
    k, big = shape.k, shape.first_full
    if k % 3 or big != k + 3:
        raise ConstructionError(f"NH-Bar2 needs a suffix 0^(3t) 1^(3t+3); got k={k}, next run {big}")
    t = k // 3
    if t < 2:
        raise ConstructionError(f"NH-Bar2 needs t >= 2, got t={t}")
    if spec.b is not None and spec.b != t:
        raise ConstructionError(f"NH-Bar2 with b={spec.b} does not match the suffix (t={t})")
    alpha = "100" * t + _body(shape.after, shape.q)
    return _finish(spec, alpha, (0, 3 * t + 1), "bar2", (1,) * (t + 1), spec.n - spec.q + t - 1)


def thick_chain_pair(spec: ConstructionSpec) -> WitnessPair:
    """Chain of ``c`` trapped runs of thickness ``w`` (optionally after one of thickness 1).

    With ``join`` the last trapped run is the head of the zero side's first
    full run and the solid window reaches ``w`` columns into it; otherwise the
    whole chain sits inside the partial first run.
    """
    w, c = spec.w, spec.c
    if w is None or c is None or w < 1 or c < 2:
        raise ConstructionError("ThickChain needs w >= 1 and c >= 2")
    shape = _shape_or_fail(spec)
    k = shape.k
    block = "1" * w + "0" * (w + 1)
    planted = ("100" if spec.prefix else "") + block * (c - 1 if spec.join else c)
    if len(planted) > k:
        raise ConstructionError(f"template of length {len(planted)} does not fit the partial run k={k}")
    alpha = "0" * (k - len(planted)) + planted + _body(shape.after, shape.q)
    window = (0, k + w) if spec.join else (0, k)
    expected = ((1,) if spec.prefix else ()) + (w,) * c
    gain = sum(expected) - 2 * max(expected)
    return _finish(spec, alpha, window, "join" if spec.join else "inner", expected, spec.n - spec.q + gain)


def construct(spec: ConstructionSpec) -> WitnessPair:
    if spec.family == "H":
        return h_type_pair(spec.q, spec.n)
    if spec.family == "NH-Bar1":
        return nh_bar1_pair(spec)
    if spec.family == "NH-Bar2":
        return nh_bar2_pair(spec)
    return thick_chain_pair(spec)


def lemma310_gain(cert: DistanceCertificate, base: WitnessPair) -> int:
    """Total ``C' - 2M`` over ``cert``'s barriers, checked against the base H-type distance."""
    gain = sum(barrier_gain(b) for b in cert.barriers)
    base_distance = base.certified_distance
    if cert.certified_distance != base_distance + gain:
        raise AssertionError(
            f"gain {gain} over base distance {base_distance} does not reproduce "
            f"certified distance {cert.certified_distance}"
        )
    return gain
