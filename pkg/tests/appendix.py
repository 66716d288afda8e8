"""Appendix tables: (p, x, y, z, A, B, C) rows for the first, second and third kinds."""

FIRST = [
    (3, 1, 4, 12, 8, 15, 17),
    (5, 2, 4, 20, 8, 6, 10),
    (5, 2, 5, 10, 20, 21, 29),
    (7, 2, 15, 210, 60, 221, 229),
    (7, 2, 16, 112, 32, 126, 130),
    (7, 2, 18, 63, 18, 80, 82),
    (7, 2, 21, 42, 84, 437, 445),
    (7, 3, 6, 14, 4, 3, 5),
    (11, 3, 34, 1122, 204, 1147, 1165),
    (11, 3, 36, 396, 72, 429, 435),
    (11, 3, 42, 154, 28, 195, 197),
    (11, 3, 44, 132, 264, 1927, 1945),
    (11, 4, 9, 396, 72, 65, 97),
    (11, 4, 11, 44, 88, 105, 137),
    (11, 4, 12, 33, 6, 8, 10),
    (13, 4, 18, 468, 72, 154, 170),
    (13, 4, 20, 130, 20, 48, 52),
    (13, 4, 26, 52, 104, 330, 346),
    (13, 5, 10, 130, 20, 15, 25),
    (17, 5, 30, 510, 60, 175, 185),
    (17, 5, 34, 170, 340, 1131, 1181),
    (17, 6, 15, 510, 60, 63, 87),
    (17, 6, 17, 102, 204, 253, 325),
]

SECOND = [
    (3, 1, 4, 12, 24, 143, 145),
    (5, 2, 4, 20, 40, 198, 202),
    (5, 2, 5, 10, 10, 24, 26),
    (7, 2, 15, 210, 210, 11024, 11026),
    (7, 2, 16, 112, 224, 6270, 6274),
    (7, 2, 18, 63, 252, 3965, 3973),
    (7, 2, 21, 42, 42, 440, 442),
    (7, 3, 6, 14, 84, 187, 205),
    (11, 3, 34, 1122, 748, 139875, 139877),
    (11, 3, 36, 396, 792, 52269, 52275),
    (11, 3, 42, 154, 924, 23707, 23725),
    (11, 3, 44, 132, 88, 1935, 1937),
    (11, 4, 9, 396, 198, 9800, 9802),
    (11, 4, 11, 44, 22, 120, 122),
    (11, 4, 12, 33, 264, 1073, 1105),
    (13, 4, 18, 468, 468, 27376, 27380),
    (13, 4, 20, 130, 520, 8442, 8458),
    (13, 4, 26, 52, 52, 336, 340),
    (13, 5, 10, 130, 260, 3375, 3385),
    (17, 5, 30, 510, 1020, 52015, 52025),
    (17, 5, 34, 170, 68, 1155, 1157),
    (17, 6, 15, 510, 510, 21672, 21678),
    (17, 6, 17, 102, 34, 288, 290),
]

THIRD = [
    (3, 1, 4, 12, 6, 8, 10),
    (5, 2, 4, 20, 20, 48, 52),
    (5, 2, 5, 10, 20, 15, 25),
    (7, 2, 15, 210, 28, 195, 197),
    (7, 2, 16, 112, 28, 96, 100),
    (7, 2, 18, 63, 28, 45, 53),
    (7, 2, 21, 42, 28, 21, 35),
    (7, 3, 6, 14, 42, 40, 58),
    (11, 3, 34, 1122, 66, 1088, 1090),
    (11, 3, 36, 396, 66, 360, 366),
    (11, 3, 42, 154, 66, 112, 130),
    (11, 3, 44, 132, 66, 88, 110),
    (11, 4, 9, 396, 88, 1935, 1937),
    (11, 4, 11, 44, 88, 165, 187),
    (11, 4, 12, 33, 88, 105, 137),
    (13, 4, 18, 468, 104, 1350, 1354),
    (13, 4, 20, 130, 104, 330, 346),
    (13, 4, 26, 52, 104, 78, 130),
    (13, 5, 10, 130, 130, 840, 850),
    (17, 5, 30, 510, 170, 1440, 1450),
    (17, 5, 34, 170, 170, 408, 442),
    (17, 6, 15, 510, 204, 3465, 3471),
    (17, 6, 17, 102, 204, 595, 629),
]

TABLES = {"first": FIRST, "second": SECOND, "third": THIRD}
