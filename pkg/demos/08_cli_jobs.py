"""The batch command line.

Every job is a JSON file; every answer is deterministic JSON carrying the
verification trace.  Exit codes: 0 success, 1 a hypothesis / corona
condition / frequency split failed (with a structured verdict), 2 parse
or validation error, 3 internal error.
"""

import json
import pathlib
import subprocess
import sys

DATA = pathlib.Path(__file__).parent / "data"
REPO = pathlib.Path(__file__).resolve().parents[1]


def run(command, name):
    proc = subprocess.run(
        [sys.executable, "-m", "whfactor.cli", command, "--input", str(DATA / name)],
        capture_output=True,
        cwd=REPO,
    )
    print(f"$ whfactor {command} --input demos/data/{name}   (exit {proc.returncode})")
    doc = json.loads(proc.stdout)
    return proc.returncode, doc


print("== maximal minors ==")
_, doc = run("minors", "minors.json")
print("subsets:", doc["result"]["subsets"])
print("values (real parts):", [v["re"] for v in doc["result"]["values"]])

print()
print("== matrix factorization with verification trace ==")
_, doc = run("wh-matrix", "wh_matrix_rh.json")
print("partial indices:", doc["result"]["factorization"]["partial_indices"])
print("all verification checks pass:", doc["result"]["verify"]["all_pass"])

print()
print("== a guarded failure: symbol vanishing on the line ==")
code, doc = run("wh-scalar", "wh_scalar_singular.json")
print("status:", doc["status"], "| witness:", doc["result"]["witness"])

print()
print("== the spectral-gap refusal through the CLI ==")
code, doc = run("ap-factor", "ap_gap.json")
print("status:", doc["status"],
      "| offending frequencies:", doc["result"]["detail"]["offending_frequencies"])

print()
print("== determinism ==")
first = subprocess.run(
    [sys.executable, "-m", "whfactor.cli", "report", "--input",
     str(DATA / "report_unitary.json")],
    capture_output=True, cwd=REPO,
).stdout
second = subprocess.run(
    [sys.executable, "-m", "whfactor.cli", "report", "--input",
     str(DATA / "report_unitary.json")],
    capture_output=True, cwd=REPO,
).stdout
print("two runs byte-identical:", first == second)
