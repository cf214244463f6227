"""Exit-code, schema, and determinism checks for the command-line driver."""

import json
import subprocess
import sys

BIN = sys.argv[1]
failures = 0


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def check(name, cond):
    global failures
    print(("PASS  " if cond else "FAIL  ") + name)
    if not cond:
        failures += 1


# quasi-shuffle of the worked example: 13 lines, deterministic
first = run("shuffle", "2,0/1,3", "0,2/1,0")
second = run("shuffle", "2,0/1,3", "0,2/1,0")
check("shuffle exits 0", first.returncode == 0)
check("shuffle prints 13 outcomes", len(first.stdout.splitlines()) == 13)
check("shuffle output is deterministic", first.stdout == second.stdout)

single = run("shuffle", "-", "1/0")
check("empty operand gives one outcome", single.stdout.strip() == "1/0")

# usage errors exit 2
check("parse failure exits 2", run("shuffle", "1,0/1", "1/0").returncode == 2)
check("bad subcommand exits 2", run("frobnicate").returncode == 2)
check("guarded computation exits 2 without --force",
      run("hilbert", "dq", "7").returncode == 2)
check("missing argument exits 2", run("shuffle", "1/0").returncode == 2)

# verification pass/fail contract
check("verify kernel 3 exits 0", run("verify", "kernel", "3").returncode == 0)
check("verify over guard exits 2", run("verify", "duality", "9").returncode == 2)

# hilbert dq: matrix plus verdict, exit 0 on match
dq = run("hilbert", "dq", "3")
check("hilbert dq 3 exits 0", dq.returncode == 0)
check("hilbert dq 3 prints the table",
      dq.stdout == "2\n2 2\n1 2 2\nconjecture-1: MATCH\n")

# stable JSON schema
js = json.loads(run("hilbert", "dq", "2", "--json").stdout)
check("json has the documented keys",
      set(js) == {"command", "params", "status", "payload"})
payload = js["payload"]
check("hilbert json payload schema",
      set(payload) == {"n", "convention", "rows", "bidegrees", "conjecture-1"}
      and payload["convention"] == "cartesian"
      and payload["rows"] == [[1], [1, 1]]
      and sorted(payload["bidegrees"]) == [[0, 0, 1], [0, 1, 1], [0, 2, 0],
                                           [1, 0, 1], [1, 1, 0], [2, 0, 0]])
check("json status reports the verdict", js["status"] == "pass")

sh = json.loads(run("shuffle", "1/0", "0/1", "--json").stdout)
check("shuffle json payload", sh["payload"] == ["1/1", "0,1/1,0", "1,0/0,1"])

mult = json.loads(run("mult", "1/0", "1/0", "--json").stdout)
check("mult json carries multiplicities",
      dict((k, v) for k, v in mult["payload"]) == {"1,1/0,0": "2", "2/0": "1"})

runi = run("hilbert", "runi", "2")
check("hilbert runi 2 matches psi",
      runi.returncode == 0 and "psi: MATCH" in runi.stdout)

rdiag = run("hilbert", "rdiag", "2")
check("hilbert rdiag 2 prints the table",
      rdiag.stdout == "1\n0 1\n0 1 1\n1 0 0 1\n")

exp = run("expand", "1,0/0,1", "2")
check("expand prints the polynomial", exp.stdout.strip() == "x1*y2")

# flags may appear anywhere
anywhere = run("--json", "shuffle", "1/0", "0/1")
check("flags before the subcommand work",
      anywhere.returncode == 0 and json.loads(anywhere.stdout)["command"] == "shuffle")

# stdout carries no timing; timing goes to stderr
check("timing is on stderr only", "time:" not in dq.stdout and "time:" in dq.stderr)

print("cli checks:", "all passed" if failures == 0 else f"{failures} failed")
sys.exit(0 if failures == 0 else 1)
