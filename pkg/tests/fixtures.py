"""Frozen reference grids used as golden fixtures across the test suite."""

# 4x4 magic square: rows, columns and both main diagonals sum to 30,
# but its broken diagonals do not.
MAGIC_4 = [
    [0, 10, 15, 5],
    [7, 13, 8, 2],
    [9, 3, 6, 12],
    [14, 4, 1, 11],
]

# 5x5 pandiagonal magic square, every line sum 60.
MAGIC_5 = [
    [13, 19, 20, 1, 7],
    [21, 2, 8, 14, 15],
    [9, 10, 16, 22, 3],
    [17, 23, 4, 5, 11],
    [0, 6, 12, 18, 24],
]

# A few broken diagonals of MAGIC_5, spelled out for the line enumerator tests.
MAGIC_5_BROKEN_DIAGONALS = [
    {21, 10, 4, 18, 7},
    {9, 23, 12, 15, 1},
    {17, 6, 3, 14, 20},
    {11, 22, 8, 19, 0},
]

# 3x3 latin square that is not diagonal (zeros down the main diagonal).
LATIN_3 = [
    [0, 1, 2],
    [2, 0, 1],
    [1, 2, 0],
]

# 4x4 diagonal latin square that is not pandiagonal.
DIAGONAL_4 = [
    [0, 1, 2, 3],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
    [1, 0, 3, 2],
]

# 5x5 pandiagonal latin square.
PANDIAGONAL_5A = [
    [3, 4, 0, 1, 2],
    [1, 2, 3, 4, 0],
    [4, 0, 1, 2, 3],
    [2, 3, 4, 0, 1],
    [0, 1, 2, 3, 4],
]

# PANDIAGONAL_5A with every symbol advanced by one (mod 5).
PANDIAGONAL_5B = [
    [4, 0, 1, 2, 3],
    [2, 3, 4, 0, 1],
    [0, 1, 2, 3, 4],
    [3, 4, 0, 1, 2],
    [1, 2, 3, 4, 0],
]

# Plane k=2 of the order-11 cube built from coefficients (1, 2, 7).
CUBE_SLICE_K2 = [
    [3, 5, 7, 9, 0, 2, 4, 6, 8, 10, 1],
    [4, 6, 8, 10, 1, 3, 5, 7, 9, 0, 2],
    [5, 7, 9, 0, 2, 4, 6, 8, 10, 1, 3],
    [6, 8, 10, 1, 3, 5, 7, 9, 0, 2, 4],
    [7, 9, 0, 2, 4, 6, 8, 10, 1, 3, 5],
    [8, 10, 1, 3, 5, 7, 9, 0, 2, 4, 6],
    [9, 0, 2, 4, 6, 8, 10, 1, 3, 5, 7],
    [10, 1, 3, 5, 7, 9, 0, 2, 4, 6, 8],
    [0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9],
    [1, 3, 5, 7, 9, 0, 2, 4, 6, 8, 10],
    [2, 4, 6, 8, 10, 1, 3, 5, 7, 9, 0],
]

# Diagonal plane i=j of the same cube.
CUBE_SLICE_DIAG = [
    [0, 7, 3, 10, 6, 2, 9, 5, 1, 8, 4],
    [3, 10, 6, 2, 9, 5, 1, 8, 4, 0, 7],
    [6, 2, 9, 5, 1, 8, 4, 0, 7, 3, 10],
    [9, 5, 1, 8, 4, 0, 7, 3, 10, 6, 2],
    [1, 8, 4, 0, 7, 3, 10, 6, 2, 9, 5],
    [4, 0, 7, 3, 10, 6, 2, 9, 5, 1, 8],
    [7, 3, 10, 6, 2, 9, 5, 1, 8, 4, 0],
    [10, 6, 2, 9, 5, 1, 8, 4, 0, 7, 3],
    [2, 9, 5, 1, 8, 4, 0, 7, 3, 10, 6],
    [5, 1, 8, 4, 0, 7, 3, 10, 6, 2, 9],
    [8, 4, 0, 7, 3, 10, 6, 2, 9, 5, 1],
]

# Plane i=2, j+k=16 of the order-17 hypercube built from (1, 2, 4, 9).
HYPERCUBE_SLICE = [
    [0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8],
    [2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10],
    [4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12],
    [6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14],
    [8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16],
    [10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1],
    [12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3],
    [14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5],
    [16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7],
    [1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9],
    [3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11],
    [5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13],
    [7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15],
    [9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0],
    [11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2],
    [13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4],
    [15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6],
]

# Canonical feasible triples known for order 11 (plus swaps of the last two).
KNOWN_TRIPLES_11 = [
    (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 2, 7), (1, 5, 8), (1, 6, 8),
    (1, 4, 2), (1, 5, 2), (1, 6, 2), (1, 7, 2), (1, 8, 5), (1, 8, 6),
]

# Canonical feasible quadruples known for order 17.
KNOWN_QUADS_17 = [
    (1, 2, 4, 8), (1, 2, 4, 9), (1, 2, 13, 8), (1, 2, 13, 9),
]
