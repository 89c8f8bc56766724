"""Printed data for the degree-7 form: construction lists and numeric ledger.

Each construction entry is ``(name, expression, printed_order, printed_label)``.
``printed_label`` is the name on the printed ``ord(...)`` line when it differs
from the entry's own name (a typo in the source); ``None`` otherwise.
Levels missing from the printed expression are written without ``^r`` and
are inferred from the printed order when the expression is evaluated.
"""

from __future__ import annotations

D = 7

SECTION3 = [
    ("t", "t", 7, None),
    # degree 2
    ("dv1", "[t,t]^4", 6, None),
    ("dv2", "[t,t]^6", 2, None),
    ("dv3", "[t,t]^2", 10, "dv2"),
    # degree 3
    ("tr1", "[t,dv1]^4", 5, None),
    ("tr2", "[t,dv3]", 15, None),
    ("tr3", "[t,dv3]^3", 11, None),
    ("tr4", "[t,dv3]^4", 9, None),
    ("tr5", "[t,dv3]^5", 7, None),
    ("tr6", "[t,dv3]^7", 3, None),
    # degree 4
    ("ch1", "[t,tr5]^7", 0, None),
    ("ch2", "[t,tr3]^7", 4, None),
    ("ch3", "[t,tr3]^2", 14, None),
    ("ch4", "[t,tr3]^4", 10, None),
    ("ch5", "[t,tr3]^5", 8, "tr5"),
    ("ch6", "[t,tr1]^2", 8, "tr6"),
    ("ch7", "[t,tr1]^3", 6, None),
    ("ch8", "[t,tr1]^4", 4, "ch6"),
    # degree 5
    ("pt1", "[t,ch6]^5", 5, None),
    ("pt2", "[t,ch6]^6", 3, None),
    ("pt3", "[t,ch7]^2", 9, None),
    ("pt4", "[t,ch7]^3", 7, None),
    ("pt5", "[t,ch7]^5", 3, None),
    ("pt6", "[t,ch6]^3", 9, None),
    ("pt7", "[t,ch4]^2", 13, None),
    ("pt8", "[t,ch4]^5", 7, "pt6"),
    ("pt9", "[t,dv1^2]^7", 5, None),
    ("pt10", "[t,dv1*dv2]^7", 1, None),
    # degree 6
    ("sh1", "[t,pt5]^5", 6, None),
    ("sh2", "[t,pt7]^6", 8, None),
    ("sh3", "[t,pt4]^5", 4, None),
    ("sh4", "[t,pt4]^6", 2, None),
    ("sh5", "[t,pt3]^2", 12, None),
    ("sh6", "[t,pt3]^4", 8, None),
    ("sh7", "[t,pt4]^4", 6, None),
    ("sh8", "[t,tr1*dv1]^7", 4, "sh6"),
    ("sh9", "[t,tr1*dv2]^6", 2, None),
    ("sh10", "[t,tr6*dv1]^7", 2, None),
    # degree 7
    ("si1", "[t,sh5]^4", 11, None),
    ("si2", "[t,sh7]^4", 5, None),
    ("si3", "[t,tr1^2]^7", 3, None),
    ("si4", "[t,sh1]^3", 7, None),
    ("si5", "[t,ch7*dv1]^7", 5, None),
    ("si6", "[t,ch7*dv2]^7", 1, None),
    ("si7", "[t,tr6^2]^4", 5, None),
    ("si8", "[t,tr6^2]^6", 1, "si6"),
    ("si9", "[t,tr6*tr1]^6", 3, None),
    ("si10", "[t,tr6*tr1]^7", 1, None),
    ("si11", "[t,tr1^2]^6", 5, None),
    ("si12", "[t,sh10]", 7, None),
    # degree 8
    ("vi1", "[t,si7]^3", 6, None),
    ("vi2", "[t,si7]^4", 4, None),
    ("vi3", "[t,ch8*tr6]^7", 0, None),
    ("vi4", "[t,ch8*tr1]^6", 4, None),
    ("vi5", "[t,ch8*tr1]^7", 2, None),
    ("vi6", "[t,ch7*tr6]^7", 2, None),
    ("vi7", "[t,ch7*tr1]^7", 4, None),
    ("vi8", "[t,ch8*tr6]^6", 2, "vi6"),
    ("vi9", "[t,tr6*dv2^2]^7", 0, None),
    ("vi10", "[t,si4]^2", 10, None),
    ("vi11", "[t,si12]^4", 6, None),
    ("vi12", "[t,si11]^3", 6, None),
    ("vi13", "[t,pt9*dv2]^7", 0, None),
    # degree 9
    ("de1", "[t,sh3*dv1]^7", 3, None),
    ("de2", "[t,ch7*ch8]^7", 3, None),
    ("de3", "[t,pt5*tr6]^5", 3, None),
    ("de4", "[t,pt5*tr1]^6", 3, None),
    ("de5", "[t,pt5*tr1]^7", 1, None),
    ("de6", "[t,sh9*dv1]^7", 1, None),
    ("de7", "[t,sh10*dv1]^7", 1, None),
    ("de8", "[t,sh10*dv2]^3", 5, "de6"),
    ("de9", "[t,vi5]^2", 5, None),
    ("de10", "[t,vi2]^4", 3, None),
    ("de11", "[t,vi11]^2", 9, None),
    # degree 10
    ("des1", "[t,sh9*tr1]^6", 2, None),
    ("des2", "[t,sh4*tr6]^4", 4, None),
    ("des3", "[t,sh4*tr1]^6", 2, None),
    ("des4", "[t,sh1*tr1]^7", 4, None),
    ("des5", "[t,sh3*tr6]^5", 4, None),
    ("des6", "[t,de9]^2", 8, None),
    ("des7", "[t,tr6^3]^7", 2, None),
    ("des8", "[t,sh10*tr1]^6", 2, "des6"),
    ("des9", "[t,pt1*ch7]^7", 4, None),
    # degree 11
    ("odn1", "[t,vi2*dv1]^7", 3, None),
    ("odn2", "[t,vi2*dv2]^6", 1, None),
    ("odn3", "[t,vi4*dv2]^6", 1, None),
    ("odn4", "[t,vi5*dv1]^7", 1, None),
    ("odn5", "[t,vi6*dv1]^7", 1, None),
    ("odn6", "[t,vi2*dv2]^5", 3, None),
    ("odn7", "[t,des6]^4", 7, None),
    ("odn8", "[t,des6]^6", 3, "odn6"),
    ("odn9", "[t,vi1*dv2]^7", 1, None),
    # degree 12
    ("dvan1", "[t,sh1*pt2]^7", 2, None),
    ("dvan2", "[t,sh1*pt5]^7", 2, None),
    ("dvan3", "[sh9,sh10]^2", 0, None),
    ("dvan4", "[t,odn7]^6", 2, None),
    ("dvan5", "[t,de8*dv2]^6", 2, None),
    ("dvan6", "[sh10,sh10]^2", 0, None),
    ("dvan7", "[t,de9*dv2]^6", 2, None),
    ("dvan8", "[t,de10*dv1]^7", 2, "dvan6"),
    ("dvan9", "[t,odn7]^4", 6, None),
    ("dvan10", "[sh1,sh1]^2", 0, None),
    ("dvan11", "[sh4,sh4]^2", 0, None),
    ("dvan12", "[sh4,sh9]^2", 0, None),
    ("dvan13", "[sh4,sh2]^2", 0, None),
    # degree 13
    ("tryn1", "[t,dvan9]^6", 1, None),
    ("tryn2", "[t,vi1*ch7]^7", 5, None),
    ("tryn3", "[t,vi2*ch8]^7", 1, None),
    ("tryn4", "[t,vi2*ch2]^7", 1, None),
    ("tryn5", "[t,vi1*ch8]^7", 3, None),
    ("tryn6", "[t,vi5*ch2]^6", 1, None),
    ("tryn7", "[t,vi8*ch8]^6", 1, None),
    ("tryn8", "[t,vi8*ch7]^7", 1, "tryn6"),
    ("tryn9", "[t,vi4*ch8]^7", 1, None),
]

# Orders here are those of the cell the text places each generator in.
SECTION4 = [
    ("chot1", "[si8,si10]", 0, None),
    ("chot2", "[si6,si10]", 0, None),
    ("chot3", "[si6,si8]", 0, None),
    ("chot4", "[si3,si9]^3", 0, None),
    ("chot5", "[sh10,vi2]", 4, None),
    ("chot6", "[sh9,vi2]", 4, None),
    ("ptn1", "[de10,sh9]^2", 1, None),
    ("ptn2", "[de10,sh4]^2", 1, None),
    ("ptn3", "[de3,sh9]^2", 1, None),
    ("ptn4", "[de10,sh10]", 3, None),
    ("shis1", "[vi2,vi4]^4", 0, None),
    ("shis2", "[vi4,vi7]^4", 0, None),
    ("shis3", "[vi5,vi2]^2", 2, None),
    ("shis4", "[vi8,vi2]^2", 2, None),
    ("shis5", "[des7,sh10]", 2, None),
    ("simn1", "[de3,vi5]^2", 1, None),
    ("simn2", "[si8,des7]", 1, None),
    ("vis1", "[de4,de3]^3", 0, None),
    ("vis2", "[de4,de10]^3", 0, None),
    ("vis3", "[de5,de6]", 0, None),
    ("vis4", "[de1,de10]^3", 0, None),
    ("vis5", "[de2,de3]^3", 0, None),
    ("vis6", "[de2,de10]^3", 0, None),
    ("vis7", "[de3,de10]^3", 0, None),
    ("vis8", "[de6,de7]", 0, None),
    ("vis9", "[de8,de9]^5", 0, None),
    ("devn", "[de7,des7]", 1, None),
    ("dvad", "[des7,des7]^2", 0, None),
    ("dvdv1", "[odn6,odn1]^3", 0, None),
    ("dvdv2", "[odn8,odn1]^3", 0, None),
    ("dvtr", "[tryn4,des7]", 1, None),
    ("dvsh", "[tryn4,tryn3]", 0, None),
]

# (h, alpha) in another author's notation: no construction available here
OPAQUE = [("trd", 30, 0)]

# printed counts of generators per degree, degrees 2..13
SECTION3_CARDINALITIES = {2: 3, 3: 6, 4: 8, 5: 10, 6: 10, 7: 12, 8: 13, 9: 11, 10: 9, 11: 9, 12: 13, 13: 9}

# dim C_{i,j} printed in the text
CS_LEDGER = {
    (14, 2): 30, (14, 4): 37, (15, 1): 20, (15, 3): 42, (16, 2): 33,
    (17, 1): 31, (18, 2): 63, (19, 1): 46, (23, 1): 85, (25, 1): 114,
}

# (sigma_{i,j}, dim S_{i,j}) printed in the text
SIGMA_LEDGER = {
    (14, 2): (36, 6), (14, 4): (60, 25), (15, 1): (17, 0), (15, 3): (61, 20),
    (16, 2): (39, 9), (17, 1): (29, 0), (18, 2): (105, 42), (19, 1): (57, 12),
    (23, 1): (142, 58), (25, 1): (228, 114),
}

DELTA_LEDGER = {
    (14, 2): 0, (14, 4): 2, (15, 1): 3, (15, 3): 1, (16, 2): 3,
    (17, 1): 2, (18, 2): 0, (19, 1): 1, (23, 1): 1, (25, 1): 0,
}

# delta_i totals for degrees 14..30
DEGREE_TOTALS = {14: 6, 15: 4, 16: 5, 17: 2, 18: 9, 19: 1, 20: 1, 21: 0, 22: 2, 23: 1,
                 24: 0, 25: 0, 26: 1, 27: 0, 28: 0, 29: 0, 30: 1}

# c_d for small d
SMALL_TOTALS = {1: 0, 2: 2, 3: 4, 4: 5, 5: 23, 6: 26}

C7 = 147

# degree of the last generator for small d (classical values); a registry
# complete through this degree holds a full minimal system
DEGREE_BOUNDS = {1: 1, 2: 2, 3: 4, 4: 3, 5: 18, 6: 15, 7: 30}

# appendix table exactly as printed: degree -> {order: count}
APPENDIX_AS_PRINTED = {
    1: {6: 1},
    2: {2: 1, 6: 1, 10: 1},
    3: {3: 1, 5: 1, 7: 1, 9: 1, 11: 1, 15: 1},
    4: {0: 1, 4: 2, 6: 1, 8: 2, 10: 1, 14: 1},
    5: {1: 1, 3: 2, 5: 2, 7: 2, 9: 2, 13: 1},
    6: {2: 3, 4: 2, 6: 2, 8: 2, 12: 1},
    7: {1: 3, 3: 2, 5: 4, 7: 2, 11: 1},
    8: {0: 3, 2: 3, 4: 3, 6: 3, 10: 1},
    9: {1: 3, 3: 5, 5: 2, 9: 1},
    10: {2: 4, 4: 4, 8: 1},
    11: {1: 5, 3: 3, 7: 1},
    12: {0: 6, 2: 6, 6: 1},
    13: {1: 7, 3: 1, 5: 1},
    14: {0: 4, 4: 2},
    15: {1: 3, 3: 1},
    16: {0: 2, 2: 3},
    17: {1: 2},
    18: {0: 9},
    19: {1: 1},
    20: {0: 1},
    22: {0: 2},
    23: {1: 1},
    25: {1: 1},
    26: {0: 1},
    30: {0: 1},
}


def expected_table() -> dict[tuple[int, int], int]:
    """The d = 7 distribution implied by the construction lists and the text.

    Degrees 1..13 come from the printed orders of the listed generators;
    14..30 from the cells the text assigns to each named generator plus the
    opaque degree-30 invariant.  Differs from the printed appendix only in
    the two cells noted in the decisions ledger.
    """
    from collections import Counter

    table: Counter = Counter()
    for name, expr, order, _ in SECTION3:
        table[(_degree_of(name), order)] += 1
    for name, expr, order, _ in SECTION4:
        table[(_degree_of(name), order)] += 1
    for name, degree, order in OPAQUE:
        table[(degree, order)] += 1
    return dict(table)


_PREFIX_DEGREE = {
    "t": 1, "dv": 2, "tr": 3, "ch": 4, "pt": 5, "sh": 6, "si": 7, "vi": 8, "de": 9,
    "des": 10, "odn": 11, "dvan": 12, "tryn": 13, "chot": 14, "ptn": 15, "shis": 16,
    "simn": 17, "vis": 18, "devn": 19, "dvad": 20, "dvdv": 22, "dvtr": 23, "dvsh": 26, "trd": 30,
}


def _degree_of(name: str) -> int:
    prefix = name.rstrip("0123456789")
    return _PREFIX_DEGREE[prefix]


def printed_degree(name: str) -> int:
    return _degree_of(name)
