"""Reference values the reproduction harness compares against."""

from fractions import Fraction

# forms that are plain Delta powers: (i, j) -> Delta exponent
DELTA_POWERS = {(1, 1): 2, (2, 1): 4, (3, 1): 6, (4, 1): 8, (5, 5): 10}

# (delta_exp, e4_exp, coeff) of f at (i, j) = (25, 29)
F25_29 = ((50, 0, 1), (42, 24, 4), (41, 27, 3))

# exact E4-divisibility of L_2 Delta^(50-m) E4^(3m) mod 5, m = 0..9
E4_ORDERS_I25 = (25, 3, 7, 9, 13, 15, 19, 21, 25, 27)

# i = 1250: extra terms beyond Delta^2500, mod 5, by range of j
I1250_ROWS = (
    ((626, 675), ((2300, 600, 3),)),
    ((676, 725), ((2300, 600, 3), (2275, 675, 1))),
    ((726, 735), ((2300, 600, 3), (2275, 675, 1), (2260, 720, 1))),
    ((736, 745), ((2300, 600, 3), (2275, 675, 1), (2260, 720, 1), (2255, 735, 2))),
    ((746, 747), ((2300, 600, 3), (2275, 675, 1), (2260, 720, 1), (2255, 735, 2), (2252, 744, 1))),
    (
        (748, 749),
        ((2300, 600, 3), (2275, 675, 1), (2260, 720, 1), (2255, 735, 2), (2252, 744, 1), (2251, 747, 2)),
    ),
)

DELTA_Q = (Fraction(1, 4), 6, 6, 24, 6, 36, 24)
EPS_Q = (Fraction(1, 16), -1, 7, -28, 71, -126, 196)

# Eisenstein series at level 2: (parity, coefficients of mu^k eps^(deg-k), k ascending)
EISENSTEIN_11 = (1, (1, 7, 1))
EISENSTEIN_13 = (0, (1, 4, 9, 12))
EISENSTEIN_677 = (0, (
    1, 550, 441, 302, 155, 455, 445, 482, 457, 655, 216, 95,
    136, 394, 100, 79, 414, 316, 100, 137, 587, 455, 429, 513,
    183, 316, 570, 273, 208, 412, 656, 673, 360, 308, 488, 394,
    187, 134, 596, 305, 375, 276, 384, 478, 145, 628, 246, 550,
    469, 81, 400, 455, 352, 580, 78, 101, 508, 525, 149, 404,
    297, 324, 249, 429, 199, 350, 148, 415, 251, 583, 330, 203,
    618, 467, 437, 24, 449, 459, 415, 159, 169, 393, 580, 71,
    550, 127, 606, 97, 284, 508, 518, 262, 218, 228, 653, 240,
    210, 59, 474, 347, 94, 426, 262, 529, 327, 478, 248, 428,
    353, 380, 273, 528, 152, 169, 576, 599, 97, 325, 222, 277,
    596, 208, 127, 431, 49, 532, 199, 293, 401, 302, 372, 81,
    543, 490, 283, 189, 369, 317, 4, 21, 265, 469, 404, 107,
    361, 494, 164, 248, 222, 90, 540, 577, 361, 263, 598, 577,
    283, 541, 582, 461, 22, 220, 195, 232, 222, 522, 375, 236,
    127, 676,
))

ENUM_5_25 = tuple(j for j in range(1, 26) if j != 5)
