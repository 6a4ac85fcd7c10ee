#!/usr/bin/env python3
"""Regenerate the bundled corpus files under src/pcf_unify/data/.

The formulas are classical and algorithmically-discovered pi / e / zeta(3) /
Catalan results collected from the arXiv sources cited per record.  Keeping
the transcription in one script makes the JSON reproducible and reviewable.
"""

import json
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "pcf_unify" / "data"


def series(id_, term, start, value=None, source="", constant="pi"):
    rec = {
        "id": id_,
        "constant": constant,
        "kind": "series",
        "payload": {"term": term},
        "start_index": start,
        "source": source,
    }
    if value:
        rec["declared_value"] = value
    return rec


def pcf(id_, a, b, value=None, source="", constant="pi"):
    rec = {
        "id": id_,
        "constant": constant,
        "kind": "pcf",
        "payload": {"a": a, "b": b},
        "source": source,
    }
    if value:
        rec["declared_value"] = value
    return rec


# ---- the five canonicalization showcase series -------------------------------------

TABLE1 = [
    series(
        "t1.1",
        "factorial(n) / (rising_factorial(3/2, n) * 2^n)",
        0,
        "pi/2",
        "arXiv:1806.03346",
    ),
    series("t1.2", "2^n / (n * binom(2n, n))", 1, "pi/2", "arXiv:2010.05610"),
    series("t1.3", "(-1)^n / (2n+1)", 0, "pi/4", "arXiv:2404.15210"),
    series(
        "t1.4", "(-1)^(n+1) / (n(n+1)(2n+1))", 1, "pi - 3", "arXiv:2206.07174"
    ),
    series(
        "t1.5",
        "4^n (12n-5) / ((2n-1) * binom(4n, 2n))",
        1,
        "(3 pi + 4)/2",
        "arXiv:2204.08275",
    ),
]

# ---- formulas unified by the pi field (cluster tables) ------------------------------

UNIFIED = [
    # (1,1,2), delta = -0.2
    pcf("t2.01", "2n+5", "n(n+4)", "8/(3 pi - 8)", "arXiv:1907.00205"),
    pcf("t2.02", "2n+1", "n^2", "4/pi", "arXiv:1907.00205"),
    pcf("t2.03", "2n+3", "n(n+2)", "4/(pi - 2)", "arXiv:1907.00205"),
    pcf(
        "t2.04",
        "-2(4n+3)(6n^2+9n+2)",
        "-n^2 (2n+1)^2 (4n-3)(4n+5)",
        "10/(pi - 4)",
        "arXiv:2308.11829",
    ),
    # (3,1,1), delta = -0.45
    series(
        "t2.05",
        "(-4)^n (7n-1) binom(2n,n) / (n (2n-1) binom(3n,n) binom(6n,3n))",
        1,
        "-pi/4",
        "arXiv:1407.8465",
    ),
    # (2,1,1), delta = -0.48
    series(
        "t2.06",
        "(-2)^n (6n-1) / (n (2n-1) binom(4n,2n))",
        1,
        "pi/2",
        "arXiv:2204.08275",
    ),
    series(
        "t2.07",
        "(-2)^n (30n-7) / binom(4n,2n)",
        0,
        "-32/3 - pi/2",
        "arXiv:2204.08275",
    ),
    series(
        "t2.08",
        "(-2)^n n (126n+29) / binom(4n,2n)",
        1,
        "50/3 + 11 pi/2",
        "arXiv:2204.08275",
    ),
    # (1,0,0), delta = -0.65
    pcf("t2.09", "3n+5", "-n(2n-1)", "48/(-320 + 105 pi)", "arXiv:1907.00205"),
    pcf("t2.10", "3(n+3)", "-(n+3)(2n-1)", "(32 - 15 pi)/(-96 + 30 pi)", "arXiv:1907.00205"),
    pcf("t2.11", "3n+4", "-n(2n-1)", "12/(-44 + 15 pi)", "arXiv:1907.00205"),
    pcf("t2.12", "3n+7", "-(n+2)(2n-1)", "(32 - 6 pi)/(-64 + 21 pi)", "arXiv:1907.00205"),
    pcf("t2.13", "3n+5", "-(n+1)(2n-1)", "(4 - 3 pi)/(-20 + 6 pi)", "arXiv:1907.00205"),
    pcf("t2.14", "3n+5", "-n(2n+1)", "-4/(-48 + 15 pi)", "arXiv:1907.00205"),
    pcf("t2.15", "3n+7", "-(n+3)(2n-1)", "3 + 9 pi/8", "arXiv:1907.00205"),
    pcf("t2.16", "3n+8", "-(n+3)(2n-1)", "-9 pi/(-32 + 9 pi)", "arXiv:1907.00205"),
    pcf("t2.17", "3(n+1)", "-n(2n-1)", "4/(-8 + 3 pi)", "arXiv:1907.00205"),
    pcf("t2.18", "3(n+2)", "-(n+2)(2n-1)", "8/(-8 + 3 pi)", "arXiv:1907.00205"),
    pcf("t2.19", "3n+4", "-n(2n+1)", "-2/(-10 + 3 pi)", "arXiv:1907.00205"),
    pcf("t2.20", "3n+4", "-(n+1)(2n-1)", "-pi/(-4 + pi)", "arXiv:1907.00205"),
    series(
        "t2.21a",
        "factorial(n) / (rising_factorial(3/2, n) * 2^n)",
        0,
        "pi/2",
        "arXiv:0707.2124",
    ),
    series(
        "t2.21b",
        "2^(n+1) / ((2n+1) * binom(2n,n))",
        0,
        "pi",
        "arXiv:1806.03346",
    ),
    series("t2.21c", "2^n / (n * binom(2n,n))", 1, "pi/2", "arXiv:2010.05610"),
    pcf("t2.22", "3n+5", "-(n+2)(2n-1)", "(2 pi + 8)/pi", "arXiv:1907.00205"),
    pcf("t2.23", "3n+5", "-n(2n+3)", "6/(-8 + 3 pi)", "arXiv:1907.00205"),
    pcf("t2.24", "3(n+1)", "-n(2n+1)", "-2/(-4 + pi)", "arXiv:1907.00205"),
    pcf("t2.25", "3(n+1)", "-(n+1)(2n-1)", "1 + pi/2", "arXiv:1907.00205"),
    pcf("t2.26", "3n+1", "-n(2n-1)", "2/pi", "arXiv:1907.00205"),
    pcf("t2.27", "3(n+2)", "-(n+3)(2n-1)", "(15 pi + 48)/(8 + 3 pi)", "arXiv:1907.00205"),
    pcf("t2.28", "3n+4", "-(n+2)(2n-1)", "(12 + 4 pi)/(pi + 4)", "arXiv:1907.00205"),
    series(
        "t2.29",
        "4^n (12n-5) / ((2n-1) * binom(4n,2n))",
        1,
        "3 pi/2 + 2",
        "arXiv:2204.08275",
    ),
    pcf("t2.30", "3n+2", "-(n+1)(2n-1)", "(pi + 4)/(2 + pi)", "arXiv:1907.00205"),
    pcf("t2.31", "3n+5", "-(n+3)(2n-1)", "(84 + 27 pi)/(6 pi + 20)", "arXiv:1907.00205"),
    pcf(
        "t2.32",
        "3n^2 + 9n + 5",
        "-(n+1)^2 (n+3)(2n-1)",
        "3(2 pi + 7)/(5 + 2 pi)",
        "arXiv:Arnold_BenDavid2024",
    ),
    # (-1,3,3), delta = -0.91
    series(
        "t2.34",
        "16^n (22n^2 - 17n + 3) binom(4n,2n) / (n (4n-3)(4n-1) binom(3n,n) binom(6n,3n))",
        1,
        "2 pi",
        "arXiv:2310.03699",
    ),
    # (1,1,1), delta = -1
    pcf("t2.35", "10", "(2n-1)^2", "(5 pi + 16)/pi", "arXiv:1806.03346"),
    series(
        "t2.36",
        "36 (-1)^n / ((4n^2+5) ((2n+2)^2+5) (-2n + (2n+1)^3 - 1))",
        1,
        "7/9 - pi/4",
        "arXiv:2405.11134",
    ),
    series(
        "t2.37",
        "(-1)^(n-1) / (n (2n+1)(2n+2)(2n+3)(4n-2))",
        1,
        "5/36 - pi/24",
        "arXiv:1806.03346",
    ),
    series(
        "t2.38",
        "(-1)^n / ((2n+1)(2n+2)(2n+3)(2n+4)(2n+5))",
        2,
        "11/84 - pi/24",
        "arXiv:1806.03346",
    ),
    pcf("t2.39", "6", "(2n-1)^2", "3 + pi", "arXiv:1806.03346"),
    series(
        "t2.40",
        "(-1)^(n+1) / (n(n+1)(2n+1))",
        1,
        "pi - 3",
        "arXiv:1601.03180",
    ),
    series(
        "t2.41",
        "(-1)^(n-1) / ((2n-1)(2n+1)(2n+3))",
        1,
        "pi/8 - 1/3",
        "arXiv:1806.03346",
    ),
    series(
        "t2.42a",
        "(-1)^n / ((2n+2)(2n+3)) + (-1)^n / ((2n+1)(2n+2))",
        0,
        "pi/2 - 1",
        "arXiv:1806.03346",
    ),
    series(
        "t2.42b",
        "(-1)^n / ((2n-1)(2n+1))",
        1,
        "1/2 - pi/4",
        "arXiv:1906.09629",
    ),
    series("t2.43", "(-1)^n / (2n+1)", 0, "pi/4", "arXiv:2404.15210"),
    # (0,0,1), delta = -1.00
    pcf("t2.44", "1", "n(n+1)", "2/(-2 + pi)", "arXiv:1806.03346"),
    pcf("t2.45", "2", "n^2", "-2/(-4 + pi)", "arXiv:1806.03346"),
    series(
        "t2.46a",
        "2^(-4n-4) binom(2n,n) binom(2n+2,n+1) / ((n+1)(2n+1))",
        0,
        "2/pi - 1/2",
        "arXiv:2111.10998",
    ),
    series(
        "t2.46b",
        "4^(-2n) binom(2n,n)^2 / (n+1)^2",
        0,
        "16/pi - 4",
        "arXiv:2204.04535",
    ),
    series(
        "t2.47",
        "16^n / (n^2 (2n+1)^2 binom(2n,n)^2)",
        1,
        "4 pi - 12",
        "arXiv:1708.04269",
    ),
    series(
        "t2.48",
        "rising_factorial(1/2, n)^2 / factorial(n+1)^2",
        1,
        "16/pi - 5",
        "arXiv:1804.08210",
    ),
]

# ---- additional clustered-but-not-yet-field-attached formulas -----------------------

COLLECTED = [
    series(
        "xf.01",
        "(-1)^n (21460n + 1123) rising_factorial(1/4,n) rising_factorial(1/2,n) "
        "rising_factorial(3/4,n) / (factorial(n)^3 * 882^(2n+1))",
        0,
        "4/pi",
        "arXiv:1610.04839",
    ),
    series(
        "xf.02",
        "binom(2n,n)^2 binom(4n,2n) (1424799848n^2 + 1533506502n + 108685699)"
        " / ((n+1)(2n-1)(4n-1) * (-199148544)^n)",
        0,
        "341446000/pi",
        "arXiv:1911.05456",
    ),
    series(
        "xf.03",
        "binom(2n,n+1)^2 binom(4n,2n) (2475740800n^2 + 4950772932n + 2475031103) / (-82944)^n",
        0,
        "-2238840/pi",
        "arXiv:2110.03651",
    ),
    series(
        "xf.04",
        "n^3 binom(2n,n)^2 binom(4n,2n) (2428400n^2 - 5044368n + 2584321) / (-82944)^n",
        0,
        "243/(5 pi)",
        "arXiv:2110.03651",
    ),
    series(
        "xf.05",
        "(42n^2 + 81n + 38) binom(2n,n)^3 / ((n+1)^3 * 4096^n)",
        0,
        "-512 + 1728/pi",
        "arXiv:1911.05456",
    ),
    series(
        "xf.06",
        "binom(2n,n)^3 (420n^2 + 992n + 551) / ((n+1)^2 (2n-1) * 4096^n)",
        0,
        "-1728/pi",
        "arXiv:1911.05456",
    ),
    series(
        "xf.07",
        "binom(2n,n)^3 (56n^2 + 118n + 61) / ((n+1)^2 * 4096^n)",
        0,
        "192/pi",
        "arXiv:1911.05456",
    ),
    series(
        "xf.08",
        "binom(2n,n)^3 (2n+1)(6n+1)(14n-3) / ((2n-1)^2 * 4096^n)",
        0,
        "-8/pi",
        "arXiv:2212.09965",
    ),
    series(
        "xf.09",
        "(42n+5) factorial(2n)^3 / (factorial(n)^6 * 2^(12n))",
        0,
        "16/pi",
        "arXiv:0807.0872",
    ),
    series(
        "xf.10",
        "n^2 binom(2n,n)^3 (78162n^2 + 145175n + 64431) / ((n+1)^3 * 4096^n)",
        0,
        None,
        "arXiv:2110.03651",
    ),
    series(
        "xf.11",
        "n (210n^2 - 5n + 1) binom(2n,n)^3 / 4096^n",
        0,
        "4/(3 pi)",
        "arXiv:2110.03651",
    ),
    series(
        "xf.12",
        "n^2 (504n^2 - 314n - 11) binom(2n,n)^3 / 4096^n",
        0,
        "4/(3 pi)",
        "arXiv:2110.03651",
    ),
    series(
        "xf.13",
        "n^3 binom(2n,n)^3 (198n^2 - 425n + 210) / 4096^n",
        0,
        "-1/(21 pi)",
        "arXiv:2110.03651",
    ),
    series(
        "xf.14",
        "binom(2n,n)^2 binom(3n,n) (1524n^2 + 899n + 263) / ((n+1)(2n-1)(3n-1) * 1458^n)",
        0,
        "3375/(4 pi)",
        "arXiv:1911.05456",
    ),
    series(
        "xf.15",
        "(15n+2) factorial(2n) factorial(3n) / (factorial(n)^5 * 1458^n)",
        0,
        "27/(4 pi)",
        "arXiv:0807.0872",
    ),
    series(
        "xf.16",
        "3 binom(2n,n) / ((2n+1) * 2^(4n))",
        0,
        "pi",
        "arXiv:0807.0872",
    ),
    series(
        "xf.17",
        "-2 (6n+5) binom(2n,n) / ((2n-1)(2n+1)(2n+3) * 16^n)",
        0,
        "1/pi",
        "arXiv:0807.0872",
    ),
    series(
        "xf.18",
        "(-1)^n (1/(4n+3) + 2/(4n+2) + 2/(4n+1)) / 4^n",
        0,
        "pi",
        "arXiv:0807.0872",
    ),
    series(
        "xf.19",
        "(-1/(4(8n+7)) - 1/(2(8n+6)) - 1/(2(8n+5)) + 1/(8n+3) + 2/(8n+2) + 2/(8n+1)) / 16^n",
        0,
        "pi",
        "arXiv:1906.09629",
    ),
    series(
        "xf.20",
        "n (6n-1) binom(2n,n)^3 / ((2n-1)^3 * 256^n)",
        0,
        "1/(2 pi)",
        "arXiv:2203.16047",
    ),
    series(
        "xf.21",
        "(12n^2 - 1) binom(2n,n)^3 / ((2n-1)^2 * 256^n)",
        0,
        "2/pi",
        "arXiv:1808.04717",
    ),
    series(
        "xf.22",
        "n^2 binom(2n,n)^3 / ((2n-3)(2n-1) * 256^n)",
        0,
        "pi",
        "arXiv:2212.09965",
    ),
    series(
        "xf.23",
        "(6n+1) binom(2n,n)^3 / 2^(8n)",
        0,
        "4/pi",
        "arXiv:0708.3307",
    ),
    series(
        "xf.24",
        "(n^2+1) binom(2n,n)^3 (192n^2 - 626n - 103) / 256^n",
        0,
        "-1373/(3 pi)",
        "arXiv:2110.03651",
    ),
    series(
        "xf.25",
        "(8n^2 - 2n - 1) binom(2n,n)^2 binom(4n,2n) / ((n+1)(2n-1)(4n-1) * (-1024)^n)",
        0,
        "-16/pi",
        "arXiv:1911.05456",
    ),
    series(
        "xf.26",
        "(40n^2 - 2n - 1) binom(2n,n)^2 binom(4n,2n) / ((2n-1)(4n-1) * (-1024)^n)",
        0,
        "-4/pi",
        "arXiv:1911.05456",
    ),
    series(
        "xf.27",
        "(20n+3) binom(2n,n)^2 binom(4n,2n) / (-1024)^n",
        0,
        "8/pi",
        "arXiv:0704.2438",
    ),
    series(
        "xf.28",
        "(1903n^2 + 114n + 41) binom(2n,n)^2 binom(4n,2n) / ((n+1)(2n-1)(4n-1) * 648^n)",
        0,
        "343/(2 pi)",
        "arXiv:1911.05456",
    ),
    series(
        "xf.29",
        "(7n+1) binom(2n,n)^2 binom(4n,2n) / 648^n",
        0,
        "9/(2 pi)",
        "arXiv:1104.3856",
    ),
    series(
        "xf.30",
        "(4n-1) binom(2n,n)^3 / ((2n-1)^3 * (-64)^n)",
        0,
        "2/pi",
        "arXiv:1808.04717",
    ),
    series(
        "xf.31",
        "(4n+1) binom(2n,n)^3 / ((n+1)(2n-1) * (-64)^n)",
        0,
        "-4/pi",
        "arXiv:2105.05567",
    ),
    series(
        "xf.32",
        "1 / ((2n-1)(2n+1)(4n-1)(4n+1))",
        1,
        "-1/2 + pi/6",
        "arXiv:2203.09465",
    ),
    series(
        "xf.33",
        "3 / (n(n+1)(4n+1)(4n+3))",
        1,
        "19/3 - 2 pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.34",
        "(25n-3) / (2^n * binom(3n,n))",
        0,
        "pi/2",
        "arXiv:2206.07174",
    ),
    series(
        "xf.35",
        "(2n+1)(3n+1)(14n+11) binom(2n,n) / ((2n-1)(4n+1)^2 (4n+3) binom(4n,2n)^2)",
        1,
        "1/pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.36",
        "(-1)^n (1/(64(10n+9)) - 1/(16(10n+7)) - 1/(16(10n+5)) - 1/(10n+3) + 4/(10n+1) "
        "- 1/(64(4n+3)) - 1/(2(4n+1))) / 2^(10n)",
        0,
        "pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.37",
        "(28n^2 + 10n + 1) binom(2n,n)^5 / ((6n+1) binom(3n,n) binom(6n,3n) * (-64)^n)",
        0,
        "3/pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.38",
        "(-1/(8n+6) - 1/(8n+5) - 2/(8n+4) + 4/(8n+1)) / 16^n",
        0,
        "pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.39",
        "(-1/(8n+7) + 4/(8n+4) + 4/(8n+3) + 8/(8n+2)) / 16^n",
        0,
        "2 pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.40",
        "rising_factorial(1/6,n) rising_factorial(1/3,n) rising_factorial(2/3,n) "
        "rising_factorial(5/6,n) (133n^2 + 79n + 6) / "
        "((2n+1) rising_factorial(1/2,n) factorial(n)^3 * (5/3)^(6n))",
        0,
        "625/(32 pi)",
        "arXiv:2206.07174",
    ),
    series(
        "xf.41",
        "rising_factorial(1/10,n) rising_factorial(3/10,n) rising_factorial(7/10,n) "
        "rising_factorial(9/10,n) (2100n^2 + 1160n + 63) / "
        "((2n+1) rising_factorial(1/2,n) rising_factorial(1,n)^3 * 2^(6n))",
        0,
        "200/pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.42",
        "(-16)^n (40n^2 - 12n - 1) binom(2n,n) / (n (2n-1)^2 (4n+1) binom(4n,2n)^2)",
        1,
        "8 - 4 pi",
        "arXiv:2206.07174",
    ),
    series(
        "xf.43",
        "binom(4n,2n) binom(6n,3n) binom(6n,4n) (25 - 108n^2) / ((6n-5)^2 * 2^(8n) * 3^(6n))",
        0,
        "3/(5 pi)",
        "arXiv:2206.07174",
    ),
    series(
        "xf.44",
        "(-1)^(n-1) / ((2n-1)(2n+1)(2n+3)(2n+5)(2n+7))",
        1,
        "pi/96 - 2/63",
        "arXiv:2206.07174",
    ),
    series(
        "xf.45",
        "(-1)^(n-1) / ((2n-1)(2n+1)(2n+3)(2n+5))",
        1,
        "pi/24 - 11/90",
        "arXiv:2206.07174",
    ),
    series(
        "xf.46",
        "1 / (n(2n-1)(4n-3))",
        1,
        "pi/3",
        "arXiv:2206.07174",
    ),
]

# ---- other constants: the published equivalent pairs --------------------------------

OTHER = [
    series("z3.def", "1/n^3", 1, None, "classical", constant="zeta3"),
    series("z3.fast", "1/(n^3 (n^2 - 1))", 2, None, "arXiv:kummer1837", constant="zeta3"),
    pcf("cat.a", "8n^2+8n+7", "-16n^4", None, "arXiv:catalan", constant="catalan"),
    pcf("cat.b", "8n^2+12n+5", "-16n^3(n+1)", None, "arXiv:catalan", constant="catalan"),
    pcf("e.a", "n^2+6n+7", "-n^2(n+3)", None, "arXiv:1907.00205", constant="e"),
    pcf("e.b", "n^2+3n+3", "-n^2(n+2)", None, "arXiv:1907.00205", constant="e"),
]


def main():
    mini = {"schema_version": 1, "formulas": TABLE1}
    full = {"schema_version": 1, "formulas": UNIFIED + COLLECTED}
    other = {"schema_version": 1, "formulas": OTHER}
    (DATA / "corpus_table1.json").write_text(json.dumps(mini, indent=2) + "\n")
    (DATA / "corpus_pi.json").write_text(json.dumps(full, indent=2) + "\n")
    (DATA / "corpus_other.json").write_text(json.dumps(other, indent=2) + "\n")
    print(
        f"wrote {len(TABLE1)} + {len(UNIFIED + COLLECTED)} + {len(OTHER)} records"
    )


if __name__ == "__main__":
    main()
