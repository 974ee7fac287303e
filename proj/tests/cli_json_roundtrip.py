"""CLI contract checks: JSON output parses and re-serializes idempotently,
and exit codes follow the documented mapping."""

import json
import subprocess
import sys

BIN = sys.argv[1]


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def check_roundtrip(args):
    out = run(*args, "--json")
    assert out.returncode == 0, f"{args}: rc={out.returncode} stderr={out.stderr}"
    parsed = json.loads(out.stdout)
    dumped = json.dumps(parsed, indent=2)
    assert json.loads(dumped) == parsed, f"{args}: JSON round trip not idempotent"
    return parsed


factor = check_roundtrip(["factor", "-p", "3", "-s", "4", "-m", "4"])
assert factor["case"] == "p3-order16-exact4"
# big coefficients are decimal strings, constant term first
assert factor["expanded"][0] == "143625038763673570640625"

periods = check_roundtrip(["periods", "-p", "3", "-s", "2", "-e", "2"])
assert [e["value"] for e in periods["reduced_periods"]] == ["3", "-3"]

spectral = check_roundtrip(["periods", "-p", "3", "-s", "4", "-m", "4"])
assert all("closed_form" in e for e in spectral["reduced_periods"])
assert sum(e["multiplicity"] for e in spectral["spectrum"]) == 16

check_roundtrip(["partitions", "-p", "5", "-k", "4", "--form", "sum-of-squares"])
check_roundtrip(["code", "-p", "3", "-l", "1", "-s", "4", "-N", "16"])
check_roundtrip(["verify", "--instance", "p=3,s=2,m=3"])

# exit codes: 2 invalid input, 3 budget exceeded
assert run("periods", "-p", "7", "-s", "2", "-m", "3").returncode == 2
assert run("factor", "-p", "3", "-s", "4", "-m", "5").returncode == 2
assert run("periods", "-p", "3", "-s", "64", "-e", "2").returncode == 3

print("cli json round trip: ok")
