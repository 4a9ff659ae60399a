#!/usr/bin/env python3
"""End-to-end checks of the lolab command line interface.

Usage: cli_checks.py /path/to/lolab
Exercises exit codes, output schemas, determinism and config round trips.
"""

import json
import math
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1]
failures = []


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, input=stdin)


def check(name, cond, detail=""):
    tag = "ok" if cond else "FAIL"
    print(f"[{tag}] {name} {detail}")
    if not cond:
        failures.append(name)


def main():
    axis_angles = f"0,{math.pi/2},{math.pi/2},{math.pi/2}"

    # usage errors exit 2
    check("unknown flag", run("exact", "--angles", "0", "--r2", "1", "--bogus").returncode == 2)
    check("missing r2", run("exact", "--angles", "0").returncode == 2)
    check("missing seed for mc", run("mc", "--angles", "0", "--r2", "1", "--samples", "10").returncode == 2)
    check("missing seed for search", run("search", "--n", "2", "--r2", "2").returncode == 2)
    check("unknown subcommand", run("frobnicate").returncode == 2)
    check("input and angles exclusive",
          run("exact", "--angles", "0", "--input", "x.json", "--r2", "1").returncode == 2)
    check("help exits 0", run("--help").returncode == 0)

    # computation errors exit 1
    check("capacity error", run("exact", "--angles", ",".join(["0"] * 41), "--r2", "1").returncode == 1)
    check("missing file", run("exact", "--input", "/nonexistent.json", "--r2", "1").returncode == 1)

    # exact on the counterexample configuration below sqrt(2)
    with tempfile.TemporaryDirectory() as td:
        cfg_path = os.path.join(td, "cfg.json")
        with open(cfg_path, "w") as f:
            json.dump({"rational": {"scale": 1, "pairs": [[1, 0], [0, 1], [0, 1], [0, 1]]}}, f)
        r = run("exact", "--input", cfg_path, "--r2", "1.9")
        check("counterexample exit 0", r.returncode == 0)
        doc = json.loads(r.stdout)
        check("counterexample prob_upper 0", doc["prob_upper"] == 0 and doc["exact_mode"] is True)

        r2 = run("exact", "--input", cfg_path, "--r2", "2")
        doc2 = json.loads(r2.stdout)
        check("boundary mass exact", doc2["count_inside"] == 12 and doc2["prob_lower"] == 0.75)

        # write/read round trip via the search best configuration
        out_path = os.path.join(td, "search.json")
        r3 = run("search", "--n", "3", "--r2", "2", "--seed", "5", "--iterations", "50",
                 "--restarts", "3", "--output", out_path)
        check("search with output file", r3.returncode == 0)
        with open(out_path) as f:
            rep = json.load(f)
        angles = rep["entries"][0]["searched_angles"]
        r4 = run("exact", "--angles", ",".join(repr(a) for a in angles), "--r2", "2")
        doc4 = json.loads(r4.stdout)
        check("round trip reproduces the searched probability",
              doc4["prob_upper"] == rep["entries"][0]["searched_probability"],
              f'{doc4["prob_upper"]} vs {rep["entries"][0]["searched_probability"]}')

    # byte-identical determinism for seeded subcommands
    a = run("mc", "--angles", axis_angles, "--r2", "2", "--samples", "20000", "--seed", "9")
    b = run("mc", "--angles", axis_angles, "--r2", "2", "--samples", "20000", "--seed", "9")
    check("mc determinism", a.returncode == 0 and a.stdout == b.stdout)
    doc = json.loads(a.stdout)
    check("mc schema", doc["generator"] == "splitmix64-counter" and 0 <= doc["ci_low"] <= doc["ci_high"] <= 1)

    s1 = run("search", "--n", "4", "--r2", "2", "--seed", "1", "--iterations", "100", "--restarts", "5")
    s2 = run("search", "--n", "4", "--r2", "2", "--seed", "1", "--iterations", "100", "--restarts", "5")
    check("search determinism", s1.returncode == 0 and s1.stdout == s2.stdout)

    # threads must not change results
    t1 = run("exact", "--angles", axis_angles, "--r2", "2", "--threads", "1")
    t4 = run("exact", "--angles", axis_angles, "--r2", "2", "--threads", "4")
    check("thread independence", t1.stdout == t4.stdout)

    # q subcommand: exact and mc agree on the single-vector collision mass
    qe = json.loads(run("q", "--angles", "0", "--r2", "1").stdout)
    qm = json.loads(run("q", "--angles", "0", "--r2", "1", "--samples", "50000", "--seed", "3").stdout)
    check("q exact value", qe["prob_lower"] == 0.5 and qe["method"] == "exact")
    check("q mc covers", qm["ci_low"] <= 0.5 <= qm["ci_high"])

    # certify emits a sound certificate and exits 0
    c = run("certify", "--angles", axis_angles)
    check("certify exit 0", c.returncode == 0)
    cert = json.loads(c.stdout)
    check("certify soundness flag", cert["crosscheck"]["sound"] is True)
    check("certify trace populated", len(cert["trace"]) > 0 and cert["bound"] > 0)

    # certify on a large configuration takes the mc cross-check path
    big = run("certify", "--angles", ",".join(["0.1"] * 30))
    check("certify mc crosscheck", big.returncode == 0 and
          json.loads(big.stdout)["crosscheck"]["method"] == "mc")

    # axis csv has the documented columns and 5 data rows at n = 4
    ax = run("axis", "--n", "4", "--r2", "2", "--format", "csv")
    lines = ax.stdout.strip().splitlines()
    check("axis csv shape", lines[0] == "n,t,probability_num,probability_den,scaled" and len(lines) == 6)
    check("axis csv row", lines[2].startswith("4,1,3,4,"))

    # pipeline document carries the stage reports
    p = json.loads(run("pipeline", "--angles", "0,2,4").stdout)
    check("pipeline stages", "classification" in p and "reduce_to_even" in p and "plan" in p)

    # lemmas runner reports zero violations
    lm = json.loads(run("lemmas", "--trials", "2000", "--seed", "7").stdout)
    check("lemma suites clean", lm["total_violations"] == 0 and len(lm["suites"]) >= 7)

    print(f"\n{len(failures)} failures")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
