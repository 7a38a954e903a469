"""Hand-checked candidate matrices and their exact angle values.

Each matrix stores signed symbol codes off the diagonal (0 means an
orthogonal pair) and 0 on the diagonal, the layout the canonization
and solving machinery expects.  The exact values that realize each
pattern as a rank-d Gram matrix live next to it in SOLVED_VALUES, in
the quadratic fields the eliminants single out.
"""

from fractions import Fraction

from .quadratic import QuadExt

PENTAGON_5 = (
    (0, 1, 1, 2, 2),
    (1, 0, 2, 1, 2),
    (1, 2, 0, 2, 1),
    (2, 1, 2, 0, 1),
    (2, 2, 1, 1, 0),
)

DODECAHEDRON_10 = (
    (0, 1, 1, 1, 1, 1, 1, 2, 2, 2),
    (1, 0, 1, -1, -1, 2, -2, 1, -1, 2),
    (1, 1, 0, 2, -2, -1, -1, -1, 1, 2),
    (1, -1, 2, 0, -1, -2, 1, -1, 2, 1),
    (1, -1, -2, -1, 0, 1, 2, 2, 1, -1),
    (1, 2, -1, -2, 1, 0, -1, 2, -1, 1),
    (1, -2, -1, 1, 2, -1, 0, 1, 2, -1),
    (2, 1, -1, -1, 2, 2, 1, 0, 1, 1),
    (2, -1, 1, 2, 1, -1, 2, 1, 0, 1),
    (2, 2, 2, 1, -1, 1, -1, 1, 1, 0),
)

TRUNCATED_CUBE_12 = (
    (0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3),
    (1, 0, 2, 3, 3, 1, 2, 2, 3, 1, 1, 2),
    (1, 2, 0, 3, -1, 3, -2, -3, 1, 2, -2, 1),
    (1, 3, 3, 0, 2, 2, 1, 3, 2, 1, 2, 1),
    (1, 3, -1, 2, 0, -2, 3, 1, -3, 2, 1, -2),
    (2, 1, 3, 2, -2, 0, -3, -2, 1, 3, -1, 1),
    (2, 2, -2, 1, 3, -3, 0, 1, -2, 3, 1, -1),
    (2, 2, -3, 3, 1, -2, 1, 0, -1, 1, 3, -2),
    (2, 3, 1, 2, -3, 1, -2, -1, 0, 1, -2, 3),
    (3, 1, 2, 1, 2, 3, 3, 1, 1, 0, 2, 2),
    (3, 1, -2, 2, 1, -1, 1, 3, -2, 2, 0, -3),
    (3, 2, 1, 1, -2, 1, -1, -2, 3, 2, -3, 0),
)

ICOSIDODECAHEDRON_15 = (
    (0, 0, 0, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3),
    (0, 0, 0, 2, 3, 1, 2, 3, 1, -2, -3, -1, -2, -3, -1),
    (0, 0, 0, 3, 1, 2, -3, -1, -2, 3, 1, 2, -3, -1, -2),
    (1, 2, 3, 0, 0, 0, 3, -1, -2, 1, -2, 3, -2, -3, 1),
    (2, 3, 1, 0, 0, 0, -1, 2, 3, -2, 3, -1, -3, -1, 2),
    (3, 1, 2, 0, 0, 0, -2, 3, 1, 3, -1, 2, 1, 2, -3),
    (1, 2, -3, 3, -1, -2, 0, 0, 0, -2, -3, 1, 1, -2, 3),
    (2, 3, -1, -1, 2, 3, 0, 0, 0, -3, -1, 2, -2, 3, -1),
    (3, 1, -2, -2, 3, 1, 0, 0, 0, 1, 2, -3, 3, -1, 2),
    (1, -2, 3, 1, -2, 3, -2, -3, 1, 0, 0, 0, 3, -1, -2),
    (2, -3, 1, -2, 3, -1, -3, -1, 2, 0, 0, 0, -1, 2, 3),
    (3, -1, 2, 3, -1, 2, 1, 2, -3, 0, 0, 0, -2, 3, 1),
    (1, -2, -3, -2, -3, 1, 1, -2, 3, 3, -1, -2, 0, 0, 0),
    (2, -3, -1, -3, -1, 2, -2, 3, -1, -1, 2, 3, 0, 0, 0),
    (3, -1, -2, 1, 2, -3, 3, -1, 2, -2, 3, 1, 0, 0, 0),
)

PETERSEN_10 = (
    (0, 1, 1, 1, 1, 1, 1, 2, 2, 2),
    (1, 0, 1, 1, 1, 2, 2, 1, 1, 2),
    (1, 1, 0, 1, 2, 1, 2, 1, 2, 1),
    (1, 1, 1, 0, 2, 2, 1, 2, 1, 1),
    (1, 1, 2, 2, 0, 1, 1, 1, 1, 2),
    (1, 2, 1, 2, 1, 0, 1, 1, 2, 1),
    (1, 2, 2, 1, 1, 1, 0, 2, 1, 1),
    (2, 1, 1, 2, 1, 1, 2, 0, 1, 1),
    (2, 1, 2, 1, 1, 2, 1, 1, 0, 1),
    (2, 2, 1, 1, 2, 1, 1, 1, 1, 0),
)

TWENTY_R5 = (
    (0, 1, 1, 1, 1, 1, -2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 2, 2, 2, 2),
    (1, 0, 1, 2, 2, 1, 2, -2, 2, 1, 1, 2, 1, 1, 2, 2, 1, 1, -1, -2),
    (1, 1, 0, 1, 2, 2, 2, 2, -2, 2, 1, 1, 1, 1, 1, -2, 1, -2, -2, -1),
    (1, 2, 1, 0, 1, 2, 2, 1, 2, -2, 2, 1, 1, 2, 1, 2, -2, -1, 1, -2),
    (1, 2, 2, 1, 0, 1, 2, 1, 1, 2, -2, 2, 1, -2, 2, 1, -1, -2, 1, 1),
    (1, 1, 2, 2, 1, 0, 2, 2, 1, 1, 2, -2, 1, 2, -2, 1, -2, 1, -2, 1),
    (-2, 2, 2, 2, 2, 2, 0, 1, 1, 1, 1, 1, 1, -1, -1, -1, -2, -2, -2, -2),
    (2, -2, 2, 1, 1, 2, 1, 0, 1, 2, 2, 1, 1, -1, -2, -2, -1, -1, 1, 2),
    (2, 2, -2, 2, 1, 1, 1, 1, 0, 1, 2, 2, 1, -1, -1, 2, -1, 2, 2, 1),
    (2, 1, 2, -2, 2, 1, 1, 2, 1, 0, 1, 2, 1, -2, -1, -2, 2, 1, -1, 2),
    (2, 1, 1, 2, -2, 2, 1, 2, 2, 1, 0, 1, 1, 2, -2, -1, 1, 2, -1, -1),
    (2, 2, 1, 1, 2, -2, 1, 1, 2, 2, 1, 0, 1, -2, 2, -1, 2, -1, 2, -1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, -2, -2, 2, -2, -2, 2, 2),
    (1, 1, 1, 2, -2, 2, -1, -1, -1, -2, 2, -2, -2, 0, 1, 1, 1, 2, -2, -2),
    (1, 2, 1, 1, 2, -2, -1, -2, -1, -1, -2, 2, -2, 1, 0, 1, 2, -1, 1, -2),
    (1, 2, -2, 2, 1, 1, -1, -2, 2, -2, -1, -1, 2, 1, 1, 0, -2, 1, 2, 1),
    (2, 1, 1, -2, -1, -2, -2, -1, -1, 2, 1, 2, -2, 1, 2, -2, 0, 2, -1, -1),
    (2, 1, -2, -1, -2, 1, -2, -1, 2, 1, 2, -1, -2, 2, -1, 1, 2, 0, -1, 1),
    (2, -1, -2, 1, 1, -2, -2, 1, 2, -1, -1, 2, 2, -2, 1, 2, -1, -1, 0, 2),
    (2, -2, -1, -2, 1, 1, -2, 2, 1, 2, -1, -1, 2, -2, -2, 1, -1, 1, 2, 0),
)

TWENTYFOUR_R6 = (
    (0, 1, 1, 1, 1, 1, -2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (1, 0, 1, 2, 2, 1, 2, -2, 2, 1, 1, 2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, -2, -2),
    (1, 1, 0, 1, 2, 2, 2, 2, -2, 2, 1, 1, 1, 1, 1, 1, 2, 2, 1, 1, -2, -2, 2, 2),
    (1, 2, 1, 0, 1, 2, 2, 1, 2, -2, 2, 1, 1, 1, 2, 2, -2, -2, 1, 1, 2, 2, 1, 1),
    (1, 2, 2, 1, 0, 1, 2, 1, 1, 2, -2, 2, 1, 1, -2, -2, 2, 2, 2, 2, 1, 1, 1, 1),
    (1, 1, 2, 2, 1, 0, 2, 2, 1, 1, 2, -2, 1, 1, 2, 2, 1, 1, -2, -2, 1, 1, 2, 2),
    (-2, 2, 2, 2, 2, 2, 0, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1),
    (2, -2, 2, 1, 1, 2, 1, 0, 1, 2, 2, 1, 1, 1, -1, -1, -1, -1, -2, -2, -2, -2, 2, 2),
    (2, 2, -2, 2, 1, 1, 1, 1, 0, 1, 2, 2, 1, 1, -1, -1, -2, -2, -1, -1, 2, 2, -2, -2),
    (2, 1, 2, -2, 2, 1, 1, 2, 1, 0, 1, 2, 1, 1, -2, -2, 2, 2, -1, -1, -2, -2, -1, -1),
    (2, 1, 1, 2, -2, 2, 1, 2, 2, 1, 0, 1, 1, 1, 2, 2, -2, -2, -2, -2, -1, -1, -1, -1),
    (2, 2, 1, 1, 2, -2, 1, 1, 2, 2, 1, 0, 1, 1, -2, -2, -1, -1, 2, 2, -1, -1, -2, -2),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1),
    (1, 1, 1, 2, -2, 2, -1, -1, -1, -2, 2, -2, 1, 2, 0, 2, 1, -2, 1, -2, 2, -1, 2, -1),
    (1, 1, 1, 2, -2, 2, -1, -1, -1, -2, 2, -2, 2, 1, 2, 0, -2, 1, -2, 1, -1, 2, -1, 2),
    (1, 1, 2, -2, 2, 1, -1, -1, -2, 2, -2, -1, 1, 2, 1, -2, 0, 2, 2, -1, 1, -2, 2, -1),
    (1, 1, 2, -2, 2, 1, -1, -1, -2, 2, -2, -1, 2, 1, -2, 1, 2, 0, -1, 2, -2, 1, -1, 2),
    (1, 2, 1, 1, 2, -2, -1, -2, -1, -1, -2, 2, 1, 2, 1, -2, 2, -1, 0, 2, 2, -1, 1, -2),
    (1, 2, 1, 1, 2, -2, -1, -2, -1, -1, -2, 2, 2, 1, -2, 1, -1, 2, 2, 0, -1, 2, -2, 1),
    (1, 2, -2, 2, 1, 1, -1, -2, 2, -2, -1, -1, 1, 2, 2, -1, 1, -2, 2, -1, 0, 2, 1, -2),
    (1, 2, -2, 2, 1, 1, -1, -2, 2, -2, -1, -1, 2, 1, -1, 2, -2, 1, -1, 2, 2, 0, -2, 1),
    (1, -2, 2, 1, 1, 2, -1, 2, -2, -1, -1, -2, 1, 2, 2, -1, 2, -1, 1, -2, 1, -2, 0, 2),
    (1, -2, 2, 1, 1, 2, -1, 2, -2, -1, -1, -2, 2, 1, -1, 2, -1, 2, -2, 1, -2, 1, 2, 0),
)

TWENTYSEVEN_R6 = (
    (0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4),
    (1, 0, 1, 2, 2, 1, 1, 2, 2, 3, 3, 3, 4, 4, 4, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4),
    (1, 1, 0, 2, 2, 2, 2, 1, 1, 3, 3, 3, 4, 4, 4, 4, 4, 4, 3, 3, 3, 4, 4, 4, 4, 4, 4),
    (1, 2, 2, 0, 1, 1, 2, 1, 2, 4, 4, 4, 3, 3, 3, 4, 4, 4, 4, 4, 4, 3, 3, 3, 4, 4, 4),
    (1, 2, 2, 1, 0, 2, 1, 2, 1, 4, 4, 4, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3),
    (2, 1, 2, 1, 2, 0, 1, 1, 2, 4, 4, 4, 4, 4, 4, 3, 3, 3, 4, 4, 4, 3, 3, 3, 4, 4, 4),
    (2, 1, 2, 2, 1, 1, 0, 2, 1, 4, 4, 4, 4, 4, 4, 3, 3, 3, 4, 4, 4, 4, 4, 4, 3, 3, 3),
    (2, 2, 1, 1, 2, 1, 2, 0, 1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 4, 4, 4),
    (2, 2, 1, 2, 1, 2, 1, 1, 0, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3, 4, 4, 4, 3, 3, 3),
    (3, 3, 3, 4, 4, 4, 4, 4, 4, 0, 1, 1, 3, 4, 4, 3, 4, 4, 3, 4, 4, 1, 2, 2, 1, 2, 2),
    (3, 3, 3, 4, 4, 4, 4, 4, 4, 1, 0, 1, 4, 3, 4, 4, 3, 4, 4, 3, 4, 2, 1, 2, 2, 1, 2),
    (3, 3, 3, 4, 4, 4, 4, 4, 4, 1, 1, 0, 4, 4, 3, 4, 4, 3, 4, 4, 3, 2, 2, 1, 2, 2, 1),
    (3, 4, 4, 3, 3, 4, 4, 4, 4, 3, 4, 4, 0, 1, 1, 1, 2, 2, 1, 2, 2, 3, 4, 4, 3, 4, 4),
    (3, 4, 4, 3, 3, 4, 4, 4, 4, 4, 3, 4, 1, 0, 1, 2, 1, 2, 2, 1, 2, 4, 3, 4, 4, 3, 4),
    (3, 4, 4, 3, 3, 4, 4, 4, 4, 4, 4, 3, 1, 1, 0, 2, 2, 1, 2, 2, 1, 4, 4, 3, 4, 4, 3),
    (4, 3, 4, 4, 4, 3, 3, 4, 4, 3, 4, 4, 1, 2, 2, 0, 1, 1, 1, 2, 2, 3, 4, 4, 3, 4, 4),
    (4, 3, 4, 4, 4, 3, 3, 4, 4, 4, 3, 4, 2, 1, 2, 1, 0, 1, 2, 1, 2, 4, 3, 4, 4, 3, 4),
    (4, 3, 4, 4, 4, 3, 3, 4, 4, 4, 4, 3, 2, 2, 1, 1, 1, 0, 2, 2, 1, 4, 4, 3, 4, 4, 3),
    (4, 4, 3, 4, 4, 4, 4, 3, 3, 3, 4, 4, 1, 2, 2, 1, 2, 2, 0, 1, 1, 3, 4, 4, 3, 4, 4),
    (4, 4, 3, 4, 4, 4, 4, 3, 3, 4, 3, 4, 2, 1, 2, 2, 1, 2, 1, 0, 1, 4, 3, 4, 4, 3, 4),
    (4, 4, 3, 4, 4, 4, 4, 3, 3, 4, 4, 3, 2, 2, 1, 2, 2, 1, 1, 1, 0, 4, 4, 3, 4, 4, 3),
    (4, 4, 4, 3, 4, 3, 4, 3, 4, 1, 2, 2, 3, 4, 4, 3, 4, 4, 3, 4, 4, 0, 1, 1, 1, 2, 2),
    (4, 4, 4, 3, 4, 3, 4, 3, 4, 2, 1, 2, 4, 3, 4, 4, 3, 4, 4, 3, 4, 1, 0, 1, 2, 1, 2),
    (4, 4, 4, 3, 4, 3, 4, 3, 4, 2, 2, 1, 4, 4, 3, 4, 4, 3, 4, 4, 3, 1, 1, 0, 2, 2, 1),
    (4, 4, 4, 4, 3, 4, 3, 4, 3, 1, 2, 2, 3, 4, 4, 3, 4, 4, 3, 4, 4, 1, 2, 2, 0, 1, 1),
    (4, 4, 4, 4, 3, 4, 3, 4, 3, 2, 1, 2, 4, 3, 4, 4, 3, 4, 4, 3, 4, 2, 1, 2, 1, 0, 1),
    (4, 4, 4, 4, 3, 4, 3, 4, 3, 2, 2, 1, 4, 4, 3, 4, 4, 3, 4, 4, 3, 2, 2, 1, 1, 1, 0),
)

# The twelve-line patterns in R^4 sit inside the twenty-line pattern;
# the top-left block is exactly the smaller candidate matrix.
TWELVE_R4 = tuple(row[:12] for row in TWENTY_R5[:12])

_R2 = QuadExt.sqrt(2)
_R5 = QuadExt.sqrt(5)


def _values():
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    return {
        "pentagon-5": {1: (_R5 - 1) / 4, 2: (-_R5 - 1) / 4},
        "dodecahedron-10": {1: Fraction(1, 3), 2: _R5 / 3},
        "truncated-cube-12": {
            1: (4 * _R2 - 7) / 17, 2: (2 * _R2 + 5) / 17, 3: (-8 * _R2 - 3) / 17,
        },
        "rhombicuboctahedron-12": {
            1: (-4 * _R2 - 7) / 17, 2: (-2 * _R2 + 5) / 17, 3: (8 * _R2 - 3) / 17,
        },
        "icosidodecahedron-15": {1: (1 + _R5) / 4, 2: (1 - _R5) / 4, 3: half},
        "twelve-r4-a": {1: (3 - 2 * _R5) / 11, 2: (4 + _R5) / 11},
        "twelve-r4-b": {1: (3 + 2 * _R5) / 11, 2: (4 - _R5) / 11},
        "twenty-r5": {1: (3 - 2 * _R5) / 11, 2: (4 + _R5) / 11},
        "twentyfour-r6": {1: (3 - 2 * _R5) / 11, 2: (4 + _R5) / 11},
        "twentyseven-r6-a": {1: quarter, 2: -half, 3: -half, 4: quarter},
        "twentyseven-r6-b": {1: quarter, 2: -half, 3: half, 4: -quarter},
        "petersen-code-10": {1: Fraction(1, 6), 2: Fraction(-2, 3)},
    }


SOLVED = {
    "pentagon-5": (PENTAGON_5, 2),
    "dodecahedron-10": (DODECAHEDRON_10, 3),
    "truncated-cube-12": (TRUNCATED_CUBE_12, 3),
    "rhombicuboctahedron-12": (TRUNCATED_CUBE_12, 3),
    "icosidodecahedron-15": (ICOSIDODECAHEDRON_15, 3),
    "twelve-r4-a": (TWELVE_R4, 4),
    "twelve-r4-b": (TWELVE_R4, 4),
    "twenty-r5": (TWENTY_R5, 5),
    "twentyfour-r6": (TWENTYFOUR_R6, 6),
    "twentyseven-r6-a": (TWENTYSEVEN_R6, 6),
    "twentyseven-r6-b": (TWENTYSEVEN_R6, 6),
    "petersen-code-10": (PETERSEN_10, 4),
}


def solved_instances():
    """(pattern, expected rank, symbol values) for every solved pattern."""
    vals = _values()
    return {name: (C, d, vals[name]) for name, (C, d) in SOLVED.items()}
