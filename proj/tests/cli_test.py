"""End-to-end checks of the hfi command line: exit codes, output, JSON schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

HFI, CORPUS, DATA, SCHEMA = sys.argv[1:5]
failures = []


def run(*args):
    return subprocess.run([HFI, *args], capture_output=True, text=True, timeout=120)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def corpus(name):
    return os.path.join(CORPUS, name)


with open(SCHEMA) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)


def check_json(args, code):
    r = run("--json", *args)
    expect(r.returncode == code, f"{args}: exit {r.returncode}, wanted {code}")
    try:
        doc = json.loads(r.stdout)
    except json.JSONDecodeError as e:
        expect(False, f"{args}: bad JSON ({e})")
        return None
    errs = list(validator.iter_errors(doc))
    expect(not errs, f"{args}: schema: {errs[0].message if errs else ''}")
    return doc


with tempfile.TemporaryDirectory() as tmp:
    broken = os.path.join(tmp, "broken.prf")
    with open(broken, "w") as f:
        f.write("(sig (const c) (pred P 1))\n(proof1 (lem (P c))\n")
    unknown = os.path.join(tmp, "unknown.prf")
    with open(unknown, "w") as f:
        f.write("(sig (const c) (pred P 1))\n(proof1 (foo (P c)))\n")

    # check
    for name in sorted(os.listdir(CORPUS)):
        if name.endswith(".prf"):
            r = run("check", corpus(name))
            expect(r.returncode == 0, f"check {name}: exit {r.returncode} {r.stderr}")
    r = run("check", os.path.join(DATA, "bad_eigenvariable.prf"))
    expect(r.returncode == 1, f"check bad_eigenvariable: exit {r.returncode}")
    expect("eigenvariable a" in r.stderr and "root" in r.stderr, f"check bad_eigenvariable: {r.stderr!r}")
    r = run("check", broken)
    expect(r.returncode == 2, f"check broken: exit {r.returncode}")
    expect("2:" in r.stderr, f"check broken: no position in {r.stderr!r}")
    r = run("check", unknown)
    expect(r.returncode == 2 and "lem" in r.stderr and "nex" in r.stderr, f"check unknown rule: {r.stderr!r}")
    r = run("check", os.path.join(tmp, "missing.prf"))
    expect(r.returncode == 2, f"check missing file: exit {r.returncode}")

    # translate
    out = os.path.join(tmp, "id1.prf")
    r = run("translate", corpus("two_sided_id.prf"), "-o", out)
    expect(r.returncode == 0, f"translate: exit {r.returncode}")
    with open(out) as f:
        body = f.read()
    expect("(proof1" in body and "(lem" in body, f"translate body: {body!r}")
    r = run("check", out)
    expect(r.returncode == 0, f"check translated: {r.stderr}")
    for name in ["two_sided_orl.prf", "two_sided_quantifiers.prf", "two_sided_excluded_middle.prf"]:
        out = os.path.join(tmp, name)
        expect(run("translate", corpus(name), "-o", out).returncode == 0, f"translate {name}")
        expect(run("check", out).returncode == 0, f"recheck {name}")

    # interpret
    r = run("interpret", corpus("x1_excluded_middle.prf"), "1")
    expect(r.returncode == 0 and "type:" in r.stdout, f"interpret: {r.stdout!r}")
    r = run("interpret", corpus("x1_excluded_middle.prf"), "2")
    expect(r.returncode == 2, f"interpret out of range: exit {r.returncode}")

    # verify
    for name in sorted(os.listdir(CORPUS)):
        if name.endswith(".prf"):
            r = run("verify", corpus(name))
            expect(r.returncode == 0 and r.stdout.startswith("PASS"), f"verify {name}: {r.stdout!r}")

    # extract
    r = run("extract", corpus("x1_excluded_middle.prf"))
    expect(r.returncode == 0, f"extract X1: exit {r.returncode}")
    expect("witnesses: c\n" in r.stdout and "VERIFIED" in r.stdout, f"extract X1: {r.stdout!r}")
    r = run("extract", corpus("x2_two_witnesses.prf"), "--emit-realizer")
    expect(r.returncode == 0 and "f(c)" in r.stdout and "realizer:" in r.stdout, f"extract X2: {r.stdout!r}")
    r = run("extract", corpus("x5_negex.prf"))
    expect(r.returncode == 2, f"extract non-goal: exit {r.returncode}")
    r = run("--fuel", "3", "extract", corpus("x2_two_witnesses.prf"))
    expect(r.returncode == 1 and "step budget" in r.stderr, f"extract low fuel: {r.returncode} {r.stderr!r}")

    # bad command line
    expect(run().returncode == 2, "no subcommand")
    expect(run("frobnicate").returncode == 2, "unknown subcommand")

    # JSON output against the schema
    check_json(["check", corpus("x1_excluded_middle.prf")], 0)
    check_json(["check", corpus("two_sided_orl.prf")], 0)
    doc = check_json(["translate", corpus("two_sided_id.prf")], 0)
    if doc:
        expect(doc["endSequent"] == ["¬P(c)", "P(c)"], f"translate json: {doc['endSequent']}")
    check_json(["interpret", corpus("x3_cut.prf"), "1"], 0)
    check_json(["verify", corpus("x2_two_witnesses.prf")], 0)
    doc = check_json(["extract", corpus("x1_excluded_middle.prf"), "--emit-realizer"], 0)
    if doc:
        expect(doc["witnesses"] == ["c"] and doc["verified"], f"extract json: {doc}")
    check_json(["fuzz", "--seed", "3", "--count", "5", "--corpus", CORPUS], 0)
    check_json(["check", broken], 2)
    check_json(["check", os.path.join(DATA, "bad_eigenvariable.prf")], 1)
    check_json(["extract", corpus("x5_negex.prf")], 2)

    # fuzz is seed-deterministic
    a = run("fuzz", "--seed", "9", "--count", "10", "--json")
    b = run("fuzz", "--seed", "9", "--count", "10", "--json")
    expect(a.returncode == 0 and a.stdout == b.stdout, "fuzz determinism")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
