"""Transcriptions of the printed tables and sets, kept verbatim as data.

These values are only ever diffed against recomputation; nothing downstream
trusts them.  Obvious typesetting debris (a stray ``8`` after ``T7``, a stray
``m`` after ``629:695``) is dropped, and each such cleanup is listed in
``TRANSCRIPTION_NOTES`` so the diff report can cite it.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, List, Optional, Tuple


def span(a: int, b: int) -> FrozenSet[int]:
    return frozenset(range(a, b + 1))


def _set(*parts) -> FrozenSet[int]:
    out = set()
    for part in parts:
        if isinstance(part, tuple):
            out |= span(*part)
        else:
            out.add(part)
    return frozenset(out)


# m -> e, n(<=) for p = 15, Bar1 variant
TABLE1_P15: List[Tuple[int, int, int]] = list(
    zip(
        range(18),
        [1, 2, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1],
        [523, 523, 548, 502, 508, 509, 505, 496, 559, 559, 559, 548, 523, 559, 559, 559, 547, 506],
    )
)

# m -> e, n(=) for p = 15, Bar2 variant; None stands for the printed "-"
TABLE2_P15: List[Tuple[int, int, Optional[int]]] = list(
    zip(
        range(19),
        [2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1],
        [502, 535, 509, 523, 532, 536, 535, 529, 518, 502, None, None, None, 541, 509, None, None, None, 520],
    )
)

# Table 3: p -> (e, label, [set at n-p+e, set at n-p+e-1, set at n-p+e-2])
_T = {
    1: _set(91, 93, 94),
    2: _set((119, 124), 131, 136),
    3: _set((152, 170), 172, 178, 181, 184, 185),
    4: _set(230, 232, 238, 239, 241),
    5: _set((275, 284), 230, 232, 238, 239, 241),
    6: _set((324, 352), 356, 361, 367, 370, 373, 374),
    7: _set(436, 446, 451),
    8: _set((495, 509), 518, 523, 529, 532, 535, 536),
    9: _set((560, 598), 604, 607, 617, 619, 625, 626),
    10: _set(703, 706, 716, 718, 724, 725, 727),
    11: _set((779, 799), 806, 815, 820, 826, 829, 832, 833),
    12: _set((860, 910), 916, 931, 941, 945),
    13: _set(946),
    14: _set(1040, 1049, 1054, 1060, 1063, 1066, 1067),
    15: _set((1127, 1153), 1157, 1171, 1174, 1192, 1193, 1195),
    16: _set((1224, 1286), 1288, 1292, 1306, 1309, 1319, 1321),
    17: _set(1327, 1328, 1330),
    18: _set(1438, 1445, 1454, 1459, 1465, 1468, 1471, 1472),
    19: _set((1539, 1573), 1591, 1606, 1616, 1621),
    20: _set((1652, 1727), 1732, 1744, 1751, 1760, 1765),
    21: _set(1771, 1774, 1777, 1778),
}
T_SETS: Dict[int, FrozenSet[int]] = _T
T_UNION: FrozenSet[int] = frozenset().union(*_T.values())

TABLE3: Dict[int, Tuple[int, Optional[int], List[FrozenSet[int]]]] = {
    6: (1, 1, [_T[1], span(90, 118) - _T[1], frozenset()]),
    7: (1, 2, [_T[2], span(125, 151) - _T[2], frozenset()]),
    8: (1, 3, [_T[3], span(171, 188) - _T[3], frozenset()]),
    9: (1, None, [span(189, 223), span(224, 229), frozenset()]),
    10: (2, 4, [_T[4], span(230, 274) - _T[4], frozenset()]),
    11: (2, 5, [_T[5], span(285, 323) - _T[5], frozenset()]),
    12: (2, 6, [_T[6], span(353, 376) - _T[6], frozenset()]),
    13: (2, None, [span(377, 427), span(428, 433), frozenset()]),
    14: (3, 7, [_T[7], span(434, 494) - _T[7], frozenset()]),
    15: (3, 8, [_T[8], span(510, 559) - _T[8], frozenset()]),
    16: (3, 9, [_T[9], span(599, 628) - _T[9], frozenset()]),
    17: (3, None, [span(629, 695), span(696, 701), frozenset()]),
    18: (4, 10, [_T[10], span(702, 778) - _T[10], frozenset()]),
    19: (4, 11, [_T[11], span(800, 859) - _T[11], frozenset()]),
    20: (4, 12, [_T[12], span(911, 944) - _T[12], frozenset()]),
    21: (5, 13, [_T[13], span(945, 1028) - _T[13], span(1029, 1033)]),
    22: (5, 14, [_T[14], span(1034, 1126) - _T[14], frozenset()]),
    23: (5, 15, [_T[15], span(1154, 1223) - _T[15], frozenset()]),
    24: (5, 16, [_T[16], span(1287, 1324) - _T[16], frozenset()]),
    25: (6, 17, [_T[17], span(1325, 1426) - _T[17], span(1427, 1429)]),
    26: (6, 18, [_T[18], span(1430, 1538) - _T[18], frozenset()]),
    27: (6, 19, [_T[19], span(1574, 1651) - _T[19], frozenset()]),
    28: (6, 20, [_T[20], span(1728, 1768) - _T[20], frozenset()]),
    29: (7, 21, [_T[21], span(1769, 1888) - _T[21], _set(1889)]),
}

S2_PRINTED: FrozenSet[int] = _set(91, 94, 95, (119, 124), 131, 136, (152, 170), 172, 178, 181, 184, 185, (189, 223))
S1_PRINTED_FROM = 230

TRANSCRIPTION_NOTES = [
    "table3 p=11: T5 printed as 275:284 plus {230,232,238,239,241}, a copy of T4 outside the p=11 range",
    "table3 p=14: stray '8' after (=T7) dropped",
    "table3 p=17: stray 'm' after 629:695 dropped",
    "table3 p=20: T12 lists 945, which lies in the p=21 range",
    "table3 p=6: T1 printed as {91,93,94}; the refutation set lists 91,94,95",
]
