"""CLI contract cases: exit codes, key output fields and determinism."""

import json
import os
import subprocess
import sys

BIN = sys.argv[1]
DATA = sys.argv[2]
failures = []


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, env=full_env)


def data(name):
    return os.path.join(DATA, name)


def case(name, args, code, fields=None, stderr=None, stdin=None, env=None):
    r = run(*args, stdin=stdin, env=env)
    ok = r.returncode == code
    if ok and fields:
        doc = json.loads(r.stdout)
        for key, value in fields.items():
            ok = ok and doc.get(key) == value
    if ok and stderr:
        ok = stderr in r.stderr
    print(("PASS " if ok else "FAIL ") + name)
    if not ok:
        failures.append(name)
        print("  exit", r.returncode, "stdout", r.stdout[:400], "stderr", r.stderr[:400])


case("lct-braid g=5", ["lct-braid", "--g", "5"], 0, {"lct": "2/5"})
case("lct-braid g=1", ["lct-braid", "--g", "1"], 2)
case("lct-braid g over cap", ["lct-braid", "--g", "14"], 3)
case("lct-arrangement three lines", ["lct-arrangement", "--file", data("tri.json")], 0, {"lct": "2/3"})
case("lct-arrangement stdin", ["lct-arrangement", "--file", "-"], 0, {"lct": "2/3"},
     stdin=open(data("tri.json")).read())
case("lct-arrangement bad field", ["lct-arrangement", "--file", data("bad_field.json")], 2, stderr="forms[1]")
case("lct-arrangement malformed", ["lct-arrangement", "--file", data("truncated.json")], 2)
case("lct-arrangement missing file", ["lct-arrangement", "--file", data("absent.json")], 2)
case("lct-arrangement flat cap", ["lct-arrangement", "--file", data("tri.json")], 3,
     env={"KSTAB_MAX_FLATS": "1"})
case("gamma-p1 k=3", ["gamma-p1", "--k", "3"], 0, {"gamma_k": "6/7"})
case("gamma-p1 k-max=4", ["gamma-p1", "--k-max", "4"], 0, {"verdict": "semistable_not_stable", "gamma": "1"})
case("gamma-p1 k=0", ["gamma-p1", "--k", "0"], 2)
case("gamma-p1 k over cap", ["gamma-p1", "--k", "9"], 2, stderr="k <= 6")
case("df point s=1", ["df", "--flag", data("point.json"), "--s", "1"], 0, {"DF": "1/2", "DF0": "2"})
case("df point s=2", ["df", "--flag", data("point.json"), "--s", "2"], 0, {"DF0": "0"})
case("df trivial flag", ["df", "--flag", data("trivial.json")], 2)
case("df grid too small", ["df", "--flag", data("point.json"), "--k-max", "10"], 3, stderr="--k-max")
case("df bad s", ["df", "--flag", data("point.json"), "--s", "1/0"], 2)
case("check-summation", ["check-summation", "--file", data("summation.json")], 0, {"holds": True})
case("multiplier-ideal", ["multiplier-ideal", "--file", data("product.json")], 0, {"text": "(x, y)"})
case("unknown flag", ["lct-braid", "--g", "3", "--bogus"], 2)
case("no subcommand", [], 2)

r = run("--format", "text", "lct-braid", "--g", "4")
ok = r.returncode == 0 and "lct: 1/2" in r.stdout
print(("PASS " if ok else "FAIL ") + "text format")
if not ok:
    failures.append("text format")

first = run("verify", "--seed", "42")
second = run("verify", "--seed", "42")
ok = first.returncode == 0 and first.stdout == second.stdout and json.loads(first.stdout)["all_passed"]
print(("PASS " if ok else "FAIL ") + "verify deterministic and green")
if not ok:
    failures.append("verify")

quick = run("verify", "--quick", "--timings")
ok = quick.returncode == 0 and all("runtime_ms" in c for c in json.loads(quick.stdout)["criteria"])
print(("PASS " if ok else "FAIL ") + "verify quick with timings")
if not ok:
    failures.append("verify quick")

sys.exit(1 if failures else 0)
