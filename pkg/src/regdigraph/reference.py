"""Published counts for 2-regular digraphs with loops and multiarcs.

Unlabeled classes by component count (OEIS A306892/A006372), labeled
graphs by component count (A307804), rooted class counts, and the three
filtered sequences.  Each row lists ``c = 1..n`` (or ``r = 0..``) in order.
"""

UNLABELED = {
    1: [1],
    2: [2, 1],
    3: [5, 2, 1],
    4: [14, 8, 2, 1],
    5: [50, 24, 8, 2, 1],
    6: [265, 93, 28, 8, 2, 1],
    7: [1601, 435, 108, 28, 8, 2, 1],
    8: [11984, 2486, 507, 113, 28, 8, 2, 1],
    9: [101884, 17211, 2811, 527, 113, 28, 8, 2, 1],
}
UNLABELED_TOTAL = {0: 1, 1: 1, 2: 3, 3: 8, 4: 25, 5: 85, 6: 397, 7: 2183, 8: 15129, 9: 122585}

LABELED = {
    1: [1],
    2: [2, 1],
    3: [14, 6, 1],
    4: [201, 68, 12, 1],
    5: [4704, 1285, 200, 20, 1],
    6: [160890, 36214, 4815, 460, 30, 1],
    7: [7538040, 1422288, 160594, 13755, 910, 42, 1],
}
LABELED_TOTAL = {0: 1, 1: 1, 2: 3, 3: 21, 4: 282, 5: 6210, 6: 202410, 7: 9135630}

# rows 7 and 8 are printed only up to r = 6
ROOTED = {
    1: [1, 1],
    2: [3, 3, 3],
    3: [8, 13, 13, 8],
    4: [25, 58, 88, 58, 25],
    5: [85, 310, 588, 588, 310, 85],
    6: [397, 1909, 4626, 6035, 4626, 1909, 397],
    7: [2183, 13843, 40417, 66471, 66471, 40417, 13843],
    8: [15129, 114821, 395324, 782257, 975715, 782257, 395324],
}

# no multiarcs, n = 2..5
NO_MULTIARCS = {2: 1, 3: 3, 4: 8, 5: 27}
# neither multiarcs nor loops, n = 3..6
SIMPLE_LOOPLESS = {3: 1, 4: 2, 5: 5, 6: 23}
# no loops, multiarcs allowed, n = 2..6
LOOPLESS = {2: 1, 3: 2, 4: 6, 5: 15, 6: 68}

# cycle index text -> number of classes on 3 nodes carrying it
CYCLE_INDICES_N3 = {
    "(t1^3)/1": 1,
    "(t1^3+t1t2)/2": 3,
    "(t1^3+2t3)/3": 2,
    "(t1^3+3t1t2+2t3)/6": 2,
}
