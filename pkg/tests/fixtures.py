"""Hand-transcribed reference data and values frozen from the oracles.

Strings are parsed and re-rendered before comparison, so term order here is free.
"""

# k = 3 liftable fields, components (U1, V1, V2, W1, W2)
K3_FIELDS = {
    "xi1_1": ["4*U1^2", "-3*U1*V1 + 3*V2*W1", "-5*U1*V2 - 3*W2", "6*U1*W1", "-3*V1*W1 + 2*U1*W2"],
    "xi1_2": ["0", "-3*U1*V2 - 3*W2", "3*V1", "0", "-3*V2*W1"],
    "xi2_1": ["6*U1", "-3*V1", "-6*V2", "9*W1", "0"],
    "xi2_2": ["-9*W1", "2*U1*V2", "-3*V1", "2*U1^2", "6*V2*W1 + 2*U1*V1"],
    "xi3_1": ["9*V1", "-6*V2^2", "0", "9*W2 + 3*U1*V2", "3*V1*V2"],
    "xi3_2": ["-9*W2 - 3*U1*V2", "-3*V1*V2", "0", "3*U1*V1", "6*V2*W2 + 3*V1^2"],
    "xi_e": ["2*U1", "2*V1", "V2", "3*W1", "3*W2"],
}

# k = 2 (Whitney umbrella), components (V1, W1, W2); lowerables on (v1, y)
K2_FIELDS = [
    ["W2", "0", "V1*W1"],
    ["-V1", "2*W1", "0"],
    ["0", "2*W2", "V1^2"],
    ["V1", "2*W1", "2*W2"],
]
K2_LOWERABLES = [
    ["v1*y", "0"],
    ["-v1", "y"],
    ["0", "v1"],
    ["v1", "y"],
]
# generated field = scalar * listed field, for (family 1, family 2, family 3, Euler)
K2_SCALARS = [-2, 2, 2, 1]
K2_JACOBIAN = [["1", "0"], ["0", "2*y"], ["y", "v1"]]

# k = 3 image equation, computed once and cross-checked by the resultant oracle
K3_IMAGE = (
    "-U1^2*V2^2*W2 - U1*V1^2*W2 + U1*V1*V2^2*W1 - 2*U1*V2*W2^2 + V1^3*W1"
    " + 3*V1*V2*W1*W2 + V2^3*W1^2 - W2^3"
)
IMAGE_TERM_COUNTS = {2: 2, 3: 8, 4: 44, 5: 299, 6: 2372}

# leading terms off the tabulated ranges, (coeff, variable, position)
UNTABULATED_LT = {
    3: {"xi1_2": (-3, "W2", 2), "xi2_2": (-9, "W1", 1)},
    4: {"xi1_3": (-4, "W2", 3), "xi2_3": (-16, "W1", 2)},
    5: {"xi1_4": (-5, "W2", 4), "xi2_4": (-25, "W1", 3)},
    6: {"xi1_5": (-6, "W2", 5), "xi2_5": (-36, "W1", 4)},
}

# graded slice dimensions from delta = -max degree upward
K2_SLICES = [0, 0, 3, 4, 9, 11, 18, 21, 30]  # delta = -2..6
K3_SLICES = [0, 0, 0, 3, 6, 13, 24, 40]  # delta = -3..4

# linear-parts matrix of h = U1 + V2 at k = 3 (rows: generators then h)
K3_U1_V2_MATRIX = [
    [0, 0, 0, 0, -3],
    [0, 3, 0, 0, 0],
    [6, 0, -6, 0, 0],
    [0, -3, 0, -9, 0],
    [0, 9, 0, 0, 0],
    [0, 0, 0, 0, -9],
    [2, 0, 1, 0, 0],
    [1, 0, 1, 0, 0],
]
