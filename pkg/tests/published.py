"""Published values: 2012 GP1-GP3 rankings/scores and season NS tables."""

N = None  # absent

F1_NS = {
    "drivers": [0.2561, 0.2136, 0.1913, 0.2270, 0.2065, 0.2140, 0.2188, 0.2157, 0.2436, 0.2270, 0.2092],
    "constructors_m1": [0.2456, 0.1924, 0.1616, 0.2722, 0.2218, 0.2632, 0.2559, 0.2772, 0.2562, 0.2413, 0.2455],
    "constructors_m2": [0.4052, 0.3421, 0.3106, 0.2350, 0.2143, 0.2179, 0.1886, 0.2596, 0.3652, 0.2715, 0.2376],
}
FOOTBALL_NS = {
    "laliga": [0.0615, 0.0593, 0.0546, 0.0613, 0.0435, 0.0589, 0.0688, 0.0600, 0.0757, 0.0440, 0.0595],
    "premier": [0.0514, 0.0656, 0.0597, 0.0563, 0.0589, 0.0550, 0.0489, 0.0643, 0.0583, 0.0461, 0.0515],
}


# the 2012 grid rows: driver -> positions in 2012 GP1..GP3 (None = did not start/finish)
GRID_2012 = {
    "vettel": (2, 11, 5), "alonso": (5, 1, 9), "raikkonen": (7, 5, 14),
    "hamilton": (3, 3, 3), "button": (1, 14, 2), "webber": (4, 4, 4),
    "massa": (N, 15, 13), "grosjean": (N, N, 6), "rosberg": (12, 13, 1),
    "perez": (8, 2, 11), "hulkenberg": (N, 9, 15), "kobayashi": (6, N, 10),
    "schumacher": (N, 10, N), "di_resta": (10, 7, 12), "maldonado": (13, 19, 8),
    "senna": (16, 6, 7), "vergne": (11, 8, 16), "ricciardo": (9, 12, 17),
    "petrov": (N, 16, 18), "glock": (14, 17, 19), "pic": (15, 20, 20),
    "kovalainen": (N, 18, 23), "dambrosio": (N, N, N), "karthikeyan": (N, 22, 22),
    "de_la_rosa": (N, 21, 21),
}

TEAMS = [
    "red_bull", "ferrari", "mclaren", "lotus", "mercedes", "sauber",
    "force_india", "williams", "toro_rosso", "caterham", "marussia", "hrt",
]
# the published constructor table: score, Method 1 and Method 2 columns for GP1..GP3, in TEAMS order
SCORES = [
    (30, 10, 40, 6, 0, 12, 1, 0, 2, 0, 0, 0),
    (12, 25, 15, 10, 1, 18, 8, 8, 4, 0, 0, 0),
    (22, 2, 33, 8, 25, 1, 0, 10, 0, 0, 0, 0),
]
METHOD1 = [
    (2, 4, 1, 5, 8, 3, 7, 8, 6, 8, 8, 8),
    (4, 1, 3, 5, 8, 2, 6, 6, 7, 8, 8, 8),  # as printed; see test_constructor_table_gp2
    (3, 6, 1, 5, 2, 7, 8, 4, 8, 8, 8, 8),
]
METHOD2 = [
    (2, 4, 1, 5, N, 3, 7, N, 6, N, N, N),
    (4, 1, 3, 5, 8, 2, 6, 6, 7, N, N, N),
    (3, 6, 1, 5, 2, 7, N, 4, N, N, N, N),
]
