"""Reference coefficient vectors and counts for the five solids.

Used by the `verify` command and the test suite. The exact vectors for
the 6- and 12-edge solids are reproduced independently by both the
subset-lattice engine and the exhaustive oracle; the 30-edge exhaustive
vectors were computed once with the oracle over all 2^30 configurations
(the tests marked `long` re-derive them from scratch).
"""

EXACT_FIRST_MOMENT_COEFFS = {
    "tetrahedron": (1, 3, 6, 0, -21, 21, -6),
    "cube": (1, 3, 6, 12, 9, 12, -81, -75, 69, 473, -777, 447, -91),
    "octahedron": (1, 4, 12, 20, -14, -196, 12, 1316, -2815, 2824, -1564, 464, -58),
}

EXACT_SECOND_MOMENT_COEFFS = {
    "tetrahedron": (1, 9, 36, 30, -171, 153, -42),
}

# Default path-length cutoffs for the 30-edge solids (the graph radius).
LOWER_BOUND_CUTOFFS = {"dodecahedron": 5, "icosahedron": 3}

LOWER_BOUND_FIRST_MOMENT_COEFFS = {
    "dodecahedron": (
        1, 3, 6, 12, 24, 30, -24, -30, -36, 3, -6, 42, -6, 18, -21, 14,
        0, -6, -9, 0, 0, 6, 0, 0, -1, 0, 0, 0, 0, 0, 0,
    ),
    "icosahedron": (
        1, 5, 20, 60, -90, -75, 0, 190, -10, -80, -60, 10, -5, 120, -35,
        -88, 35, 40, -35, 10, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ),
}

EXHAUSTIVE_FIRST_MOMENT_COEFFS = {
    "dodecahedron": (
        1, 3, 6, 12, 24, 30, 54, 84, 12, 51, -345, -1140, -2028, -1764,
        1851, 18008, 19713, 18726, -140342, -149328, 230859, 425521,
        422895, -2082738, -1683049, 10797633, -15709215, 11929310,
        -5221260, 1255968, -129532,
    ),
    "icosahedron": (
        1, 5, 20, 60, 140, 195, -505, -4930, -16000, 18075, 268440,
        253950, -3632540, -2500590, 47690300, -64023218, -338970600,
        1847209820, -4808572770, 8453408880, -11046328786, 11178795035,
        -8931013535, 5673136300, -2860443445, 1133477400, -346083650,
        78699570, -12566530, 1258440, -59520,
    ),
}

EXHAUSTIVE_SECOND_MOMENT_COEFFS = {
    "dodecahedron": (
        1, 9, 36, 114, 324, 666, 1452, 2898, 3492, 5793, -999, -25398,
        -76938, -136476, -96489, 500994, 1090665, 2035332, -4352568,
        -9865170, 3449439, 20889831, 42876819, -95115132, -166675473,
        645252831, -843317829, 604735668, -254747160, 59573880, -6010212,
    ),
    "icosahedron": (
        1, 15, 120, 640, 2550, 7395, 7995, -64920, -443610, -531385,
        5550660, 18503280, -75902130, -231756450, 1351045590, -192814364,
        -15229359450, 62892040410, -148568655280, 247298888070,
        -311569430088, 307014502925, -240299473605, 150162734220,
        -74704420375, 29272484910, -8853194160, 1996850290, -316599810,
        31508820, -1482120,
    ),
}

PATH_COUNTS_BY_DISTANCE = {
    "tetrahedron": (5,),
    "cube": (15, 16, 18),
    "octahedron": (26, 28),
}

TETRAHEDRON_PAIR_EVENTS = 10
