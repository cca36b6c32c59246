#!/usr/bin/env python3
"""CLI integration checks: outputs, exit codes, determinism and the JSON schema.

usage: test_cli.py <waring executable> <report.schema.json>
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

EXE, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH) as fh:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(fh))

failures = []


def run(args, stdin=None):
    return subprocess.run([EXE, *args], input=stdin, capture_output=True, text=True, timeout=600)


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def report(args, stdin=None, code=0):
    """Run with --output json twice, validate, and return the parsed envelope."""
    first = run([*args, "--output", "json"], stdin)
    check(code is None or first.returncode == code, f"{args}: exit {first.returncode}, want {code}: {first.stderr}")
    second = run([*args, "--output", "json"], stdin)
    check(first.stdout == second.stdout, f"{args}: output is not deterministic")
    try:
        doc = json.loads(first.stdout)
    except json.JSONDecodeError:
        check(False, f"{args}: not JSON: {first.stdout[:200]}")
        return {}
    errors = list(VALIDATOR.iter_errors(doc))
    check(not errors, f"{args}: schema: {errors[0].message if errors else ''}")
    return doc


with tempfile.TemporaryDirectory() as tmp:
    rank1 = os.path.join(tmp, "rank1.json")
    with open(rank1, "w") as fh:
        json.dump({"rank_one_sum": [{"factors": [[1, 2, 3], [0, 1, -1], ["1/2", 1, 4]]}]}, fh)
    rank2 = os.path.join(tmp, "rank2.json")
    with open(rank2, "w") as fh:
        json.dump({"rank_one_sum": [{"factors": [[1, 0], [1, 0], [1, 0]]},
                                    {"factors": [[0, 1], [0, 1], [0, 1]], "coeff": "3"}]}, fh)
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as fh:
        fh.write('{"shape": [2, 2], "entries": [1, 2, 3]}')

    # ranks
    r = report(["rank", "binary", "--form", "x0*x1^2"])
    check(r["result"]["rank"] == 3, "rank binary x0*x1^2 != 3")
    check(r["result"]["witness"] == "y0^2", "witness of x0*x1^2")
    check(report(["rank", "monomial", "--exponents", "1,1,1"])["result"]["rank"] == 4, "monomial 1,1,1")
    check(report(["rank", "quadratic", "--form", "x0^2+x1^2", "--vars", "2"])["result"]["rank"] == 2,
          "quadratic x0^2+x1^2")
    check("rank: 3" in run(["rank", "binary", "--form", "x0*x1^2"]).stdout, "text output of rank")

    # apolarity
    h = report(["hilbert", "--random", "--vars", "3", "--degree", "4"])
    check(h["result"]["hf"] == [1, 3, 6, 3, 1, 0], "generic ternary quartic HF")
    check(report(["hilbert", "--form", "x0^3", "--vars", "2"])["result"]["hf"] == [1, 1, 1, 1, 0],
          "HF of x0^3")
    check(report(["hilbert", "--random", "--vars", "2", "--degree", "3", "--seed", "5"])["result"]["hf"]
          == [1, 2, 2, 1, 0], "generic binary cubic HF")
    check(report(["perp", "--form", "x0*x1^2", "--t", "2"])["result"]["basis"] == ["y0^2"], "perp")
    c = report(["catalecticant", "--form", "x0*x1^2", "--t", "1"])
    check(c["result"]["matrix"] == [["0", "0"], ["0", "2"], ["1", "0"]], "catalecticant")
    d = report(["decompose-check", "--form", "x0^2*x1", "--points", "1:1;-1:1;0:1"])
    check(d["result"] == {"feasible": True, "coefficients": ["1/6", "1/6", "-1/3"]}, "decompose")
    d = report(["decompose-check", "--form", "x0*x1^2", "--points", "1:1;1:-1"])
    check(d["result"] == {"feasible": False}, "decompose infeasible")

    # secant varieties
    v = report(["secant-dim", "veronese", "--n", "2", "--d", "4", "--s", "5"])
    check(v["result"]["computed_dim"] == 13 and v["result"]["defect"] == 1, "veronese (2,4,5)")
    check(v["provenance"]["certified"], "veronese (2,4,5) certified")
    s = report(["secant-dim", "segre", "--dims", "3,3,3", "--s", "7"])
    check(s["result"]["computed_dim"] == 63 and s["result"]["defect"] == 0, "segre 3,3,3 s=7")
    s = report(["secant-dim", "segre", "--dims", "1,1,1,1", "--s", "3"])
    check(s["result"]["expected_dim"] == 14, "segre 1,1,1,1 s=3 expected dim")
    m = report(["secant-dim", "veronese", "--n", "2", "--d", "2", "--s", "2", "--arithmetic", "modular"])
    check(m["result"]["computed_dim"] == 4, "modular veronese (2,2,2)")
    check(m["provenance"]["arithmetic_mode"] == "modular", "modular provenance")
    check(report(["ah-g", "--n", "4", "--d", "3"])["result"]["g"] == 8, "g(4,3)")
    seeded = [run(["secant-dim", "veronese", "--n", "3", "--d", "3", "--s", "4", "--seed", str(k),
                   "--trials", "2", "--output", "json"]).stdout for k in (1, 2)]
    check(json.loads(seeded[0])["provenance"]["seed"] == 1, "seed echoed in provenance")

    # tensors
    check(report(["tensor", "strassen-expand"])["result"] == {"terms": 9216, "degree": 9},
          "strassen-expand")
    check(report(["tensor", "mlrank", "--file", rank1])["result"]["multilinear_rank"] == [1, 1, 1],
          "mlrank rank1.json")
    matmul = run(["tensor", "matmul", "--n", "2"])
    check(matmul.returncode == 0, "tensor matmul")
    piped = run(["tensor", "mlrank"], stdin=matmul.stdout)
    check(piped.stdout.strip() == "[4,4,4]", f"matmul | mlrank printed {piped.stdout!r}")
    env = report(["tensor", "matmul", "--n", "2"])
    check(report(["tensor", "mlrank"], stdin=json.dumps(env))["result"]["multilinear_rank"] == [4, 4, 4],
          "mlrank reads a JSON report on stdin")
    f = report(["tensor", "flatten", "--file", rank2, "--modes", "1,2"])
    check(f["result"]["rows"] == 4 and f["result"]["rank"] == 2, "flatten modes 1,2")
    check(report(["tensor", "minors", "--file", rank2, "--r", "1"])["result"]["minors_vanish"] is False,
          "minors r=1 on a rank-2 tensor")
    st = report(["tensor", "strassen", "--file", rank1])
    check(st["result"]["rank"] == 2 and st["result"]["det"] == "0", "strassen on rank one")

    # usage and input errors
    for args, stdin in [
        (["rank", "binary", "--form", "x0 + x1^2"], None),
        (["rank", "binary", "--form", "x0*x1*x2"], None),
        (["rank", "monomial", "--exponents", "0,0"], None),
        (["rank", "monomial", "--exponents", "a,b"], None),
        (["hilbert", "--form", "x0 x1"], None),
        (["hilbert", "--form", "x0^2 - x0^2", "--vars", "1"], None),
        (["hilbert"], None),
        (["catalecticant", "--form", "x0^2", "--t", "3"], None),
        (["decompose-check", "--form", "x0^3", "--points", "1:1;2:2"], None),
        (["decompose-check", "--form", "x0^3", "--points", "1:1:1"], None),
        (["secant-dim", "veronese", "--n", "0", "--d", "2", "--s", "1"], None),
        (["secant-dim", "segre", "--dims", "1,1", "--s", "2", "--arithmetic", "modular", "--modulus", "10"], None),
        (["tensor", "mlrank", "--file", bad], None),
        (["tensor", "mlrank"], "not json"),
        (["tensor", "mlrank", "--file", os.path.join(tmp, "missing.json")], None),
        (["tensor", "strassen", "--file", rank2], None),
        (["tensor", "flatten", "--file", rank2, "--modes", "4"], None),
        (["tensor", "flatten", "--file", rank2, "--modes", "0"], None),
        (["bogus"], None),
        ([], None),
        (["rank"], None),
        (["--output", "xml", "ah-g", "--n", "1", "--d", "1"], None),
        (["--arithmetic", "fast", "ah-g", "--n", "1", "--d", "1"], None),
    ]:
        p = run(args, stdin)
        check(p.returncode == 2, f"{args}: exit {p.returncode}, want 2")
        check(p.stderr.strip() != "", f"{args}: no message on stderr")
        check(p.stdout == "", f"{args}: wrote to stdout on error")
    check(run(["--help"]).returncode == 0, "--help exits 0")
    check(run(["ah-g", "--n", "2", "--d", "4", "--seed", "3"]).returncode == 0, "global flag after subcommand")

    # fixtures
    listed = report(["paper-fixtures", "--list"])
    names = listed["result"]["fixtures"]
    check(len(names) > 30 and all(isinstance(n, str) for n in names), "--list prints names only")
    exact = report(["paper-fixtures"], code=None)
    modular = report(["paper-fixtures", "--arithmetic", "modular"], code=None)
    for doc, mode in ((exact, "exact"), (modular, "modular")):
        rows = doc["result"]["fixtures"]
        failed = [row["name"] for row in rows if not row["passed"]]
        check(len(rows) == len(names), f"{mode}: every fixture ran")
        check(doc["result"]["failed"] == len(failed), f"{mode}: failure count")
        code = run(["paper-fixtures", "--arithmetic", mode]).returncode
        check(code == (1 if failed else 0), f"{mode}: exit {code} with {len(failed)} failures")
        print(f"paper-fixtures ({mode}): {len(rows) - len(failed)} passed, failed: {failed}")
    exact_failed = {r["name"] for r in exact["result"]["fixtures"] if not r["passed"]}
    modular_failed = {r["name"] for r in modular["result"]["fixtures"] if not r["passed"]}
    check(exact_failed == modular_failed, "modular arithmetic changes fixture outcomes")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
