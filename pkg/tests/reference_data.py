"""Reference values (figures, the two-box table, worked examples) used as regression goldens.

Tableaux use the compact notation of ``str(SetValuedTableau)``: rows joined by
``/``, braces for cells with more than one letter, ``.`` for inner boxes.
Edges are ``(source, target, i, kind)``.
"""

O, K = "ordinary", "K"

# -- crystal of shape (2,1), n = 3 ---------------------------------------------------

SSYT_COMPONENT_EDGES = {
    ("11/2", "12/2", 1, O), ("11/3", "12/3", 1, O), ("12/3", "22/3", 1, O), ("13/3", "23/3", 1, O),
    ("11/2", "11/3", 2, O), ("12/2", "13/2", 2, O), ("13/2", "13/3", 2, O), ("22/3", "23/3", 2, O),
}

# Components with positive excess, as drawn; the last one is a single node.
FIGURE1_COMPONENTS = [
    {("1{1,2}/3", "{1,2}2/3", 1, O), ("{1,2}2/3", "{1,2}3/3", 2, O)},
    {("11/{2,3}", "12/{2,3}", 1, O), ("12/{2,3}", "13/{2,3}", 2, O)},
    {
        ("1{1,2}/2", "1{1,3}/2", 2, O), ("1{1,3}/2", "1{1,3}/3", 2, O), ("1{1,3}/2", "1{2,3}/2", 1, O),
        ("1{2,3}/2", "1{2,3}/3", 2, O), ("1{1,3}/3", "1{2,3}/3", 1, O), ("1{2,3}/3", "2{2,3}/3", 1, O),
    },
    {("1{1,2}/{2,3}", "1{1,3}/{2,3}", 2, O), ("1{1,3}/{2,3}", "1{2,3}/{2,3}", 1, O)},
    {("1{1,2,3}/2", "1{1,2,3}/3", 2, O), ("1{1,2,3}/3", "{1,2}{2,3}/3", 1, O)},
    set(),
]
FIGURE1_ISOLATED = "1{1,2,3}/{2,3}"

# -- K-crystals -----------------------------------------------------------------------

FIGURE2_EDGES = {
    ("11", "12", 1, O), ("12", "22", 1, O), ("12", "13", 2, O), ("13", "23", 1, O),
    ("22", "23", 2, O), ("23", "33", 2, O),
    ("1{1,2}", "{1,2}2", 1, O), ("{1,2}2", "{1,2}3", 2, O), ("{1,2}3", "{1,3}3", 2, O),
    ("{1,3}3", "{2,3}3", 1, O), ("1{1,2}", "1{1,3}", 2, O), ("1{1,3}", "1{2,3}", 1, O),
    ("1{2,3}", "2{2,3}", 1, O), ("2{2,3}", "{2,3}3", 2, O),
    ("1{1,2,3}", "{1,2}{2,3}", 1, O), ("{1,2}{2,3}", "{1,2,3}3", 2, O),
    ("11", "1{1,2}", 1, K), ("1{1,2}", "1{1,2,3}", 2, K), ("12", "1{2,3}", 2, K),
    ("{1,2}2", "{1,2}{2,3}", 2, K), ("22", "2{2,3}", 2, K), ("13", "{1,2}3", 1, K),
    ("1{1,3}", "1{1,2,3}", 1, K), ("{1,3}3", "{1,2,3}3", 1, K),
}

FIGURE3_EDGES = {
    ("1/2", "1/3", 2, O), ("1/3", "1/4", 3, O), ("1/3", "2/3", 1, O), ("1/4", "2/4", 1, O),
    ("2/3", "2/4", 3, O), ("2/4", "3/4", 2, O),
    ("1/{2,3}", "1/{2,4}", 3, O), ("1/{2,4}", "1/{3,4}", 2, O), ("1/{3,4}", "2/{3,4}", 1, O),
    ("{1,2}/3", "{1,2}/4", 3, O), ("{1,2}/4", "{1,3}/4", 2, O), ("{1,3}/4", "{2,3}/4", 1, O),
    ("1/2", "1/{2,3}", 2, K), ("1/3", "{1,2}/3", 1, K), ("1/3", "1/{3,4}", 3, K),
    ("1/{2,3}", "1/{2,3,4}", 3, K), ("1/4", "{1,2}/4", 1, K), ("{1,2}/4", "{1,2,3}/4", 2, K),
    ("2/3", "2/{3,4}", 3, K), ("2/4", "{2,3}/4", 2, K), ("{1,3}/4", "{1,2,3}/4", 1, K),
    ("1/{2,4}", "1/{2,3,4}", 2, K), ("{1,2}/3", "{1,2}/{3,4}", 3, K), ("1/{3,4}", "{1,2}/{3,4}", 1, K),
}

# -- polynomials ----------------------------------------------------------------------

APPENDIX_A = [
    ("DL(x1^3*x2, 1, q)", "q*x1^3*x2^2 + q*x1^2*x2^3 + x1^3*x2 + x1^2*x2^2 + x1*x2^3"),
    ("DL(x1^3*x2, 2, q)", "q*x1^3*x2*x3 + x1^3*x2 + x1^3*x3"),
    ("DL(x1^3*x2, 3, q)", "x1^3*x2"),
    (
        "DL(x1^2*x2, [2,1], q)",
        "q^2*x1^2*x2^2*x3 + q^2*x1^2*x2*x3^2 + q*x1^2*x2^2 + 2*q*x1^2*x2*x3"
        " + q*x1*x2^2*x3 + q*x1^2*x3^2 + q*x1*x2*x3^2 + x1^2*x2 + x1*x2^2"
        " + x1^2*x3 + x1*x2*x3 + x1*x3^2",
    ),
    (
        "DL(x1^2*x2, [1,2], q)",
        "q^2*x1^2*x2^2*x3 + q*x1^2*x2^2 + 2*q*x1^2*x2*x3 + 2*q*x1*x2^2*x3"
        " + x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3",
    ),
]

# (beta power, exponent vector, coefficient)
G21_THREE_VARIABLES = [
    (3, (2, 2, 2), 1),
    (2, (2, 2, 1), 2), (2, (2, 1, 2), 2), (2, (1, 2, 2), 2),
    (1, (2, 2, 0), 1), (1, (2, 1, 1), 3), (1, (1, 2, 1), 3), (1, (2, 0, 2), 1), (1, (1, 1, 2), 3), (1, (0, 2, 2), 1),
    (0, (2, 1, 0), 1), (0, (1, 2, 0), 1), (0, (2, 0, 1), 1), (0, (1, 1, 1), 2), (0, (0, 2, 1), 1),
    (0, (1, 0, 2), 1), (0, (0, 1, 2), 1),
]

# -- two-box K-jeu de taquin (n = 3) --------------------------------------------------

TABLE1_SUBSETS = ["1", "2", "3", "12", "13", "23", "123"]
TABLE1 = [
    ["11", "12", "13", "1{1,2}", "1{1,3}", "1{2,3}", "1{1,2,3}"],
    ["1/2", "22", "23", "12/2", "13/2", "2{2,3}", "1{2,3}/2"],
    ["1/3", "2/3", "33", "{1,2}/3", "13/3", "23/3", "{1,2}3/3"],
    ["11/2", "{1,2}2", "{1,2}3", "1{1,2}/2", "1{1,3}/2", "{1,2}{2,3}", "1{1,2,3}/2"],
    ["11/3", "12/3", "{1,3}3", "1{1,2}/3", "1{1,3}/3", "1{2,3}/3", "1{1,2,3}/3"],
    ["1/{2,3}", "22/3", "{2,3}3", "12/{2,3}", "13/{2,3}", "2{2,3}/3", "1{2,3}/{2,3}"],
    ["11/{2,3}", "{1,2}2/3", "{1,2,3}3", "1{1,2}/{2,3}", "1{1,3}/{2,3}", "{1,2}{2,3}/3", "1{1,2,3}/{2,3}"],
]

# Worked rectification: (T, n, U, m, trace of (moving letter, layered tableau), result).
# Barred letters print with a combining macron.
B = "̄"
WORKED_RECTIFICATION = (
    "..22/.{1,2}/1", 2, "1{1,3}/{2,3}", 3,
    [
        ("start", f"1{B}{{1{B},3{B}}}22/{{2{B},3{B}}}{{1,2}}/1"),
        (f"3{B}", f"1{B}{{1{B},1}}22/{{2{B},1}}{{3{B},2}}/3{B}"),
        (f"3{B}", f"1{B}{{1{B},1}}22/{{2{B},1}}{{2,3{B}}}/3{B}"),
        (f"2{B}", f"1{B}{{1{B},1}}22/{{1,2{B}}}{{2,3{B}}}/3{B}"),
        (f"2{B}", f"1{B}{{1{B},1}}22/{{1,2}}{{2{B},3{B}}}/3{B}"),
        (f"1{B}", f"1{{1,1{B}}}22/{{1{B},2}}{{2{B},3{B}}}/3{B}"),
        (f"1{B}", f"1{{1,2}}21{B}/{{2,1{B}}}{{2{B},3{B}}}/3{B}"),
    ],
    "1{1,2}2/2",
)

# Non-confluence: the same skew tableau under two rectification orders (alphabet of size 2).
NON_CONFLUENCE = ("./{1,2}", 2, [("1", "1/2"), ("{1,2}", "{1,2}")])

# Larger shape: naive box-by-box slides versus rectification by the given order.
GENERAL_SHAPE = ("..{1,2}/{1,2}2", 2, "1{2,3}", 3, "112/22", "1{1,2}2/2")

# -- Hecke insertion ---------------------------------------------------------------------

# (top row, bottom row, P rows, Q)
HECKE_EXAMPLES = [
    ("1 2 2 2 3 3 4", "1 4 3 2 4 3 4", [[1, 3, 4], [2, 4], [3], [4]], "122/23/3/4"),
    ("1 1 2", "2 1 1", [[1, 2]], "1{1,2}"),
    ("1 2 2", "2 2 1", [[1, 2]], "{1,2}2"),
    ("1 1 2 2", "2 1 2 1", [[1, 2], [2]], "1{1,2}/2"),
    ("1 1 1 2 2 2", "3 2 1 3 2 1", [[1, 2, 3], [2, 3]], "11{1,2}/22"),
    ("1 1 1 1 2 2 2 2", "8 7 2 1 8 7 2 1", [[1, 2, 7, 8], [2, 7, 8]], "111{1,2}/222"),
    ("1 1 1 1 2 2 2 2", "8 7 3 1 8 7 2 1", [[1, 2, 3, 7, 8], [2, 7, 8]], "11112/222"),
    ("1 1 2 2 2 3", "2 1 3 2 1 1", [[1, 2, 3], [2, 3]], "11{2,3}/22"),
    ("1 1 2 2 3 3", "3 2 3 1 2 1", [[1, 2, 3], [2, 3]], "11{2,3}/23"),
    ("1 1 1 2 2 2 2 2 3 3", "3 2 1 7 6 4 3 1 3 2", [[1, 2, 3, 6, 7], [2, 3, 4]], "1112{2,3}/22{2,3}"),
    ("1 1 1 2 2 2 2 3 3 3", "3 2 1 7 6 4 1 4 3 2", [[1, 2, 3, 6, 7], [2, 3, 4]], "111{2,3}3/22{2,3}"),
    ("1 1 1 2 2 2 3 3 3 3", "7 3 2 7 6 1 6 4 3 2", [[1, 2, 3, 6, 7], [2, 3, 4]], "111{2,3}3/2{2,3}3"),
    ("1 1 1 2 2 3 3 3 3 3", "7 3 2 7 1 7 6 4 3 2", [[1, 2, 3, 6, 7], [2, 3, 4]], "111{2,3}3/{2,3}33"),
]

# The displayed insertion tableau for this array has second row 2 7 8; the array
# inserts to 2 6 8 (see the typo test).
HECKE_TYPO = ("1 1 1 1 2 2 2 2", "8 7 2 1 8 6 2 1", [[1, 2, 6, 7, 8], [2, 6, 8]], [[1, 2, 6, 7, 8], [2, 7, 8]], "11112/222")

# Crystal operators transported to arrays: (array, i, f_i array).
HECKE_CRYSTAL = [
    (("1 1 2", "2 1 1"), 1, ("1 2 2", "2 2 1")),
    (("1 1 2 2 2 3", "2 1 3 2 1 1"), 2, ("1 1 2 2 3 3", "3 2 3 1 2 1")),
]

# -- uncrowding and the single-row map ----------------------------------------------------

SINGLE_ROW_311_EDGES = {
    ("[1,1,{1,2,3}]", "[1,{1,2},{2,3}]", 1),
    ("[1,{1,2},{2,3}]", "[1,{1,2,3},3]", 2),
    ("[1,{1,2},{2,3}]", "[{1,2},2,{2,3}]", 1),
    ("[{1,2},2,{2,3}]", "[{1,2},{2,3},3]", 2),
    ("[1,{1,2,3},3]", "[{1,2},{2,3},3]", 1),
    ("[{1,2},{2,3},3]", "[{1,2,3},3,3]", 2),
}
