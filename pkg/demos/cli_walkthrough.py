"""
The command line surface
========================

Everything prints deterministic JSON (or a bare number), so outputs
can be piped, diffed, and archived.
"""

import json
import subprocess
import sys


def torsionkit(*argv, stdin=None, expect=0):
    proc = subprocess.run(
        [sys.executable, "-m", "torsionkit.cli", *argv],
        capture_output=True,
        text=True,
        input=stdin,
    )
    assert proc.returncode == expect, proc.stderr
    shown = (a.replace("\n", "\\n") if len(a) < 40 else "'...'" for a in argv)
    print("$ torsionkit", " ".join(shown))
    print(proc.stdout if expect == 0 else proc.stderr, end="")
    return proc.stdout


rotation = "[[0, -1], [1, 0]]"

# Decide and certify. Matrices can be inline JSON, a file path, or '-'.
torsionkit("decide", rotation)
cert = torsionkit("certificate", rotation)

# Verify reads the certificate from a file or stdin.
torsionkit("verify", rotation, "--certificate", "-", stdin=cert)

# Tampered certificates are rejected with a reason, still exit 0:
# the tool successfully produced a verdict about the certificate.
bad = json.loads(cert)
bad["period"] = 3
torsionkit("verify", rotation, "--certificate", "-", stdin=json.dumps(bad))

# Plain text input, one row per line.
torsionkit("decide", "--format", "text", "1/2 0\n0 1/3", expect=0)

# Number theory helpers answer with bare values.
torsionkit("totient", "100")
torsionkit("ell", "10")
torsionkit("bound", "4")
torsionkit("maxperiod", "8")
torsionkit("cyclotomic", "12")

# Parse errors exit 2 with a message on stderr.
torsionkit("decide", "[[1, 2], [3]]", expect=2)
