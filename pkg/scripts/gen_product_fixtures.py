#!/usr/bin/env python3
"""Regenerate the high-precision fixtures for the trigonometric product checks.

Evaluates both sides of the three product identities with mpmath at 50
digits, records lhs/rhs rounded to double precision, and records whether the
identity holds at the reference tolerance.  The pass/fail column is the
empirical validity map the double-precision implementation must reproduce.

Writes src/lerchsum/data/product_fixtures.json; rerun only when the fixture
point set changes.
"""

import json
import pathlib

import mpmath as mp

mp.mp.dps = 50

TOL = 1e-10

EX2_POINTS = [0, "0.1", "0.25", "-0.35", "0.5",
              ("0.3", "1.0"), ("0.1", "0.2"), ("-0.2", "0.5"),
              ("0.4", "-0.3"), ("0.15", "0.05")]
EX3_POINTS = [0, "0.02", "0.05", "-0.07", "0.1",
              ("0.05", "0.2"), ("-0.03", "0.15"), ("0.08", "-0.1"),
              ("0.12", "0.3"), ("0.02", "-0.25")]
EX4_POINTS = [("0.3", "0", "0.3", "0"),          # m = r: both sides collapse to 1
              ("0.4", "0", "0.1", "0"),
              ("0.4", "1.2", "0.1", "0.9"),
              ("0.2", "2.0", "0.1", "2.0"),
              ("-0.3", "0.5", "0.2", "-0.4"),
              ("0.7", "0", "-0.2", "0"),
              ("0.1", "0.1", "0.1", "0.1"),      # m = r again, complex
              ("1.0", "0", "0.4", "0"),
              ("0.25", "0.6", "0.8", "-0.3"),
              ("0.15", "-0.35", "0.6", "0.2")]


def _mpc(spec):
    if isinstance(spec, tuple):
        return mp.mpc(mp.mpf(spec[0]), mp.mpf(spec[1]))
    return mp.mpc(mp.mpf(spec))


def ex2(x, n, q):
    lhs = mp.mpc(1)
    for p in range(n):
        th = mp.pi * p * q / n
        lhs *= mp.cos(th + x / 2) ** 3 / mp.cos(th + x / 4) ** 2 / mp.cos(th + x)
    rhs = mp.cos(n * x / 2) ** 3 / mp.cos(n * x / 4) ** 2 / mp.cos(n * x)
    return lhs, rhs


def ex3(x, n, q):
    lhs = mp.mpc(1)
    for p in range(n):
        th = mp.pi * p * q / n
        ratio = mp.cos(th + x / 2) / mp.cos(th + x)
        lhs *= mp.e ** (4 * mp.tan(th + x) - 4 * mp.tan(th + x / 2)) * ratio ** (2j * mp.pi)
    ratio = mp.cos(n * x / 2) / mp.cos(n * x)
    rhs = ratio ** (2j * mp.pi) * mp.e ** (4 * n * mp.tan(n * x / 2) / mp.cos(n * x))
    return lhs, rhs


def ex4(m, r, n, q):
    lhs = mp.mpc(1)
    for p in range(n):
        th = mp.pi * p * q / n
        lhs *= mp.cos(m + th) / mp.cos(th + r)
    rhs = mp.e ** (1j * (n - 1) * (m - r)) * mp.cos(m * n) / mp.cos(n * r)
    return lhs, rhs


def passes(lhs, rhs):
    abs_res = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    if scale >= 1:
        return bool(abs_res / scale < TOL)
    return bool(abs_res < TOL)


def pair(val):
    c = complex(val)
    return [c.real, c.imag]


def main():
    cases = []
    for n in (3, 5):
        for spec in EX2_POINTS:
            x = _mpc(spec)
            lhs, rhs = ex2(x, n, 1)
            cases.append({"identity": "product_ex2", "n": n, "q": 1,
                          "params": {"x": pair(x)},
                          "lhs": pair(lhs), "rhs": pair(rhs), "pass": passes(lhs, rhs)})
        for spec in EX3_POINTS:
            x = _mpc(spec)
            lhs, rhs = ex3(x, n, 1)
            cases.append({"identity": "product_ex3", "n": n, "q": 1,
                          "params": {"x": pair(x)},
                          "lhs": pair(lhs), "rhs": pair(rhs), "pass": passes(lhs, rhs)})
        for msp in EX4_POINTS:
            m = _mpc((msp[0], msp[1]))
            r = _mpc((msp[2], msp[3]))
            lhs, rhs = ex4(m, r, n, 1)
            cases.append({"identity": "product_ex4", "n": n, "q": 1,
                          "params": {"m": pair(m), "r": pair(r)},
                          "lhs": pair(lhs), "rhs": pair(rhs), "pass": passes(lhs, rhs)})

    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "lerchsum" / "data" / "product_fixtures.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"schema": "lerchsum-fixtures/1", "tol": TOL, "cases": cases}, indent=1))
    npass = sum(c["pass"] for c in cases)
    print(f"wrote {len(cases)} cases ({npass} pass) to {out}")


if __name__ == "__main__":
    main()
