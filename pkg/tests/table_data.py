"""Frozen regression data: the exact group moment tables and invariants.

A1_MOMENTS[name] = (M2, M4, ..., M16); A2_MOMENTS[name] = (M1, ..., M9);
INVARIANTS[name] = (d, c, z1, z2, component_group).
"""

A1_MOMENTS = {
    "C1": (4, 44, 580, 8092, 116304, 1703636, 25288120, 379061020),
    "C2": (4, 36, 400, 4956, 65904, 919116, 13236080, 194789660),
    "C3": (4, 36, 400, 4900, 63504, 854216, 11806652, 166685220),
    "C4": (4, 36, 400, 4900, 63504, 853776, 11778624, 165640540),
    "C6": (4, 36, 400, 4900, 63504, 853776, 11778624, 165636900),
    "J(C1)": (2, 22, 290, 4046, 58152, 851818, 12644060, 189530510),
    "J(C2)": (2, 18, 200, 2478, 32952, 459558, 6618040, 97394830),
    "J(C3)": (2, 18, 200, 2450, 31752, 427108, 5903326, 83342610),
    "J(C4)": (2, 18, 200, 2450, 31752, 426888, 5889312, 82820270),
    "J(C6)": (2, 18, 200, 2450, 31752, 426888, 5889312, 82818450),
    "D": (1, 4, 34, 364, 4269, 52844, 679172, 8976188),
    "U(2)": (2, 12, 100, 980, 10584, 121968, 1472328, 18404100),
    "N(U(2))": (1, 6, 50, 490, 5292, 60984, 736164, 9202050),
    "F": (4, 36, 400, 4900, 63504, 853776, 11778624, 165636900),
    "F_a": (3, 21, 210, 2485, 31878, 427350, 5891028, 82824885),
    "F_c": (2, 18, 200, 2450, 31752, 426888, 5889312, 82818450),
    "F_{ab}": (2, 18, 200, 2450, 31752, 426888, 5889312, 82818450),
    "F_{ac}": (1, 9, 100, 1225, 15876, 213444, 2944656, 41409225),
    "F_{a,b}": (2, 12, 110, 1260, 16002, 213906, 2946372, 41415660),
    "F_{ab,c}": (1, 9, 100, 1225, 15876, 213444, 2944656, 41409225),
    "F_{a,b,c}": (1, 6, 55, 630, 8001, 106953, 1473186, 20707830),
    "G_{1,3}": (3, 20, 175, 1764, 19404, 226512, 2760615, 34763300),
    "N(G_{1,3})": (2, 11, 90, 889, 9723, 113322, 1380522, 17382365),
    "G_{3,3}": (2, 10, 70, 588, 5544, 56628, 613470, 6952660),
    "N(G_{3,3})": (1, 5, 35, 294, 2772, 28314, 306735, 3476330),
    "USp(4)": (1, 3, 14, 84, 594, 4719, 40898, 379236),
}

A2_MOMENTS = {
    "C1": (2, 8, 38, 196, 1052, 5774, 32146, 180772, 1024256),
    "C2": (2, 8, 32, 148, 712, 3614, 18916, 101700, 557384),
    "C3": (2, 8, 32, 148, 712, 3584, 18496, 97444, 521264),
    "C4": (2, 8, 32, 148, 712, 3584, 18496, 97444, 521096),
    "C6": (2, 8, 32, 148, 712, 3584, 18496, 97444, 521096),
    "J(C1)": (2, 6, 23, 106, 542, 2919, 16137, 90514, 512384),
    "J(C2)": (2, 6, 20, 82, 372, 1839, 9522, 50978, 278948),
    "J(C3)": (2, 6, 20, 82, 372, 1824, 9312, 48850, 260888),
    "J(C4)": (2, 6, 20, 82, 372, 1824, 9312, 48850, 260804),
    "J(C6)": (2, 6, 20, 82, 372, 1824, 9312, 48850, 260804),
    "D": (1, 2, 5, 16, 62, 272, 1283, 6316, 31952),
    "U(2)": (1, 4, 11, 44, 172, 752, 3383, 15892, 76532),
    "N(U(2))": (1, 3, 7, 25, 91, 386, 1709, 7981, 38329),
    "F": (2, 8, 32, 148, 712, 3584, 18496, 97444, 521096),
    "F_a": (2, 6, 20, 82, 372, 1824, 9312, 48850, 260804),
    "F_c": (1, 5, 16, 77, 356, 1802, 9248, 48757, 260548),
    "F_{ab}": (2, 6, 20, 82, 372, 1824, 9312, 48850, 260804),
    "F_{ac}": (1, 3, 10, 41, 186, 912, 4656, 24425, 130402),
    "F_{a,b}": (2, 5, 14, 49, 202, 944, 4720, 24553, 130658),
    "F_{ab,c}": (1, 4, 10, 44, 186, 922, 4656, 24460, 130402),
    "F_{a,b,c}": (1, 3, 7, 26, 101, 477, 2360, 12294, 65329),
    "G_{1,3}": (2, 6, 20, 76, 312, 1364, 6232, 29460, 142952),
    "N(G_{1,3})": (2, 5, 14, 46, 172, 714, 3180, 14858, 71732),
    "G_{3,3}": (2, 5, 14, 44, 152, 569, 2270, 9524, 41576),
    "N(G_{3,3})": (1, 3, 7, 23, 76, 287, 1135, 4769, 20788),
    "USp(4)": (1, 2, 4, 10, 27, 82, 268, 940, 3476),
}

INVARIANTS = {
    "C1": (1, 1, 0, [0, 0, 0, 0, 0], "C1"),
    "C2": (1, 2, 0, [0, 0, 0, 0, 0], "C2"),
    "C3": (1, 3, 0, [0, 0, 0, 0, 0], "C3"),
    "C4": (1, 4, 0, [0, 0, 0, 0, 0], "C4"),
    "C6": (1, 6, 0, [0, 0, 0, 0, 0], "C6"),
    "J(C1)": (1, 2, 1, [0, 0, 0, 0, 1], "D1"),
    "J(C2)": (1, 4, 2, [0, 0, 0, 0, 2], "D2"),
    "J(C3)": (1, 6, 3, [0, 0, 0, 0, 3], "D3"),
    "J(C4)": (1, 8, 4, [0, 0, 0, 0, 4], "D4"),
    "J(C6)": (1, 12, 6, [0, 0, 0, 0, 6], "D6"),
    "D": (3, 1, 0, [0, 0, 0, 0, 0], "C1"),
    "U(2)": (4, 1, 0, [0, 0, 0, 0, 0], "C1"),
    "N(U(2))": (4, 2, 1, [0, 0, 0, 0, 0], "C2"),
    "F": (2, 1, 0, [0, 0, 0, 0, 0], "C1"),
    "F_a": (2, 2, 0, [0, 0, 0, 0, 1], "C2"),
    "F_c": (2, 2, 1, [0, 0, 0, 0, 0], "C2"),
    "F_{ab}": (2, 2, 1, [0, 0, 0, 0, 1], "C2"),
    "F_{ac}": (2, 4, 3, [0, 0, 2, 0, 1], "C4"),
    "F_{a,b}": (2, 4, 1, [0, 0, 0, 0, 3], "D2"),
    "F_{ab,c}": (2, 4, 3, [0, 0, 0, 0, 1], "D2"),
    "F_{a,b,c}": (2, 8, 5, [0, 0, 2, 0, 3], "D4"),
    "G_{1,3}": (4, 1, 0, [0, 0, 0, 0, 0], "C1"),
    "N(G_{1,3})": (4, 2, 0, [0, 0, 0, 0, 1], "C2"),
    "G_{3,3}": (6, 1, 0, [0, 0, 0, 0, 0], "C1"),
    "N(G_{3,3})": (6, 2, 1, [0, 0, 0, 0, 0], "C2"),
    "USp(4)": (10, 1, 0, [0, 0, 0, 0, 0], "C1"),
}

# Printed b_p tables of the three twisted CM forms, primes up to 97
BP_576_4_QUARTIC = {5: 4, 13: -18, 17: -104, 29: 284, 37: -214, 41: -472,
                    53: 572, 61: -830, 73: -1098, 89: 176, 97: -594}
BP_576_3_QUARTIC = {5: -8, 13: -10, 17: 16, 29: 40, 37: -70, 41: -80,
                    53: -56, 61: -22, 73: 110, 89: 160, 97: -130}
BP_576_4_SEXTIC = {7: 17, 13: -89, 19: -107, 31: 308, 37: 433, 43: 520,
                   61: 901, 67: -1007, 73: -271, 79: 503, 97: 1853}

# Reference moment-statistic rows (the regression targets at desk scale):
# values as printed, in the emit_table cell layout.
ROW_MFSUM_C1_16 = ["3.968", "43.330", "567.235", "7865.66", "112441.4", "1639111",
                   "1.991", "7.926", "37.448", "192.185", "1026.865", "5613.14", "31134.8"]
ROW_MFSUM_JC1_16 = ["1.977", "21.592", "282.664", "3919.60", "56031.6", "816799",
                    "1.995", "5.956", "22.675", "103.796", "527.759", "2829.24", "15579.2"]
ROW_ECPROD_C3_16 = ["3.957", "35.065", "382.912", "4605.55", "58579.1", "773226",
                    "1.982", "7.886", "31.201", "142.825", "678.826", "3375.60", "17201.8"]
ROW_USP4_10 = ["1.038", "2.956", "11.783", "56.21", "304.9", "1800",
               "0.999", "2.002", "3.826", "9.221", "22.507", "61.02", "170.2"]
ROW_USP4_13_A1 = ["0.974", "2.833", "12.281", "65.88", "404.0", "2717"]
