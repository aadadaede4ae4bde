#!/usr/bin/env python3
"""Integration checks for the quartic CLI: JSON-lines schema, exit codes,
and determinism of the payloads (runtime_ms excluded)."""

import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
failures = 0


def run(*args, expect_code=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, expected {expect_code}")
        print(proc.stderr[:500])
        failures += 1
    return proc


def lines(proc):
    return [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]


def strip_runtime(objs):
    out = []
    for o in objs:
        o = dict(o)
        o.pop("runtime_ms", None)
        out.append(o)
    return out


def check(cond, label):
    global failures
    if not cond:
        print(f"FAIL {label}")
        failures += 1


# solve: classical pairs and the square-a route
r = lines(run("solve", "3", "2"))[0]
check(r["status"] == "ok", "solve 3 2 status")
sols = [(s["X"], s["Y"]) for s in r["result"]["solutions"]]
check(sols == [("1", "1"), ("3", "11")], "solve 3 2 solutions")
check(r["result"]["reduction"]["status"] == "family", "solve 3 2 reduction")
check(r["result"]["reduction"]["t"] == "2", "solve 3 2 t")

r = lines(run("solve", "2", "1", "--x-max", "100000"))[0]
sols = [(s["X"], s["Y"]) for s in r["result"]["solutions"]]
check(sols == [("1", "1"), ("13", "239")], "solve 2 1 solutions")

r = lines(run("solve", "4", "3"))[0]
check(r["result"]["reduction"]["status"] == "a_is_square", "solve 4 3 a_is_square")

# family: single t and a range; every line is one JSON object
r = lines(run("family", "--t", "6"))[0]
check(r["result"]["v3_square"] is True and r["result"]["m"] == "2", "family 6 parameterization")
check(len(r["result"]["solutions"]) == 2, "family 6 count")

range_proc = run("family", "--t-from", "1", "--t-to", "30", "--x-max", "2000")
rows = lines(range_proc)
check(len(rows) == 30, "family range line count")
check([row["result"]["t"] for row in rows] == [str(t) for t in range(1, 31)],
      "family range ordering")
two = [int(row["result"]["t"]) for row in rows if len(row["result"]["solutions"]) == 2]
check(two == [1, 2, 6, 12, 20, 30], "family range two-solution set")

# determinism: identical payloads modulo runtime_ms
again = lines(run("family", "--t-from", "1", "--t-to", "30", "--x-max", "2000"))
check(strip_runtime(rows) == strip_runtime(again), "family range determinism")

# pade: all four check groups in one invocation
r = lines(run("pade", "--verify-order", "--tables", "--ledger", "--det", "--r-max", "5"))[0]
check(r["status"] == "ok", "pade status")
check(len(r["result"]["verify_order"]) == 10, "pade order entries")
check(r["result"]["verify_order"][0]["leading"] == "5/128", "pade order leading")
check(len(r["result"]["tables"]) == 5, "pade tables")
ledger = r["result"]["ledger"]
check(len(ledger) == 9, "pade ledger count")
check(all(e["coeff_matches"] for e in ledger), "pade ledger coefficients")
check(sum(0 if e["exponent_matches"] else 1 for e in ledger) == 1, "pade ledger one flag")
check(ledger[7]["computed"]["y_exp"] == 9 and ledger[7]["printed"]["y_exp"] == 7,
      "pade ledger flagged entry")
check(r["result"]["det"][0] == {"r": 1, "h": 0, "k": 2, "c": "-3/16"}, "pade det spot")

# gap: certified chain at t = 205; t below the threshold is a failure (exit 2)
r = lines(run("gap", "--t", "205", "--r-max", "6"))[0]
check(r["status"] == "ok" and r["result"]["all_certified"] is True, "gap 205 certified")
check(len(r["result"]["steps"]) == 6, "gap 205 steps")
run("gap", "--t", "100", expect_code=2)

# roots
r = lines(run("roots", "--t", "205"))[0]
check(len(r["result"]["brackets"]) == 4, "roots brackets")
check(r["result"]["pairwise_disjoint"] is True, "roots disjoint")
check(r["result"]["brackets"][2]["lo"]["q_sqrt_t"] == "0", "roots beta3 rational")

# sequences
r = lines(run("sequences", "--t", "2", "--k-max", "3"))[0]
check(r["result"]["invariants_ok"] is True, "sequences invariants")
check(r["result"]["odd"][3]["V"] == "881", "sequences V7 at t=2")

# scan
r = lines(run("scan-v7v11", "--t-from", "1", "--t-to", "300"))[0]
check(r["result"]["count"] == 1 and r["result"]["hits"][0]["t"] == 1, "scan hit at t=1")

# --out writes the same payload to a file; --pretty emits valid JSON
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "out.jsonl")
    run("solve", "3", "2", "--out", path)
    with open(path) as fh:
        file_obj = json.loads(fh.read())
    check(strip_runtime([file_obj]) == strip_runtime(lines(run("solve", "3", "2"))),
          "--out payload")
pretty = run("--pretty", "solve", "3", "2")
check(json.loads(pretty.stdout)["status"] == "ok", "--pretty parses")

# usage errors exit 1
run("family", expect_code=1)
run("solve", "0", "2", expect_code=1)
run("nonsense", expect_code=1)

print("CLI CHECKS:", "FAIL" if failures else "PASS", f"({failures} failures)")
sys.exit(1 if failures else 0)
