"""Drive the command-line interface: synthesize, save, verify."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

poly = "[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2]"
target = [["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]
cmd = [sys.executable, "-m", "mlimage"]

with tempfile.TemporaryDirectory() as tmp:
    tpath = Path(tmp, "target.json")
    tpath.write_text(json.dumps(target))
    out = subprocess.run(cmd + ["synthesize", "--poly", poly, "--target", f"@{tpath}"], capture_output=True, text=True)
    print("synthesize exit", out.returncode, "|", out.stderr.strip())
    rpath = Path(tmp, "report.json")
    rpath.write_text(out.stdout)
    check = subprocess.run(
        cmd + ["verify", "--poly", poly, "--witnesses", f"@{rpath}", "--target", f"@{tpath}"],
        capture_output=True,
        text=True,
    )
    print("verify exit", check.returncode, check.stdout.strip())
    bad = subprocess.run(cmd + ["synthesize", "--poly", poly, "--target", '[["1","0"],["0","-1"]]'], capture_output=True, text=True)
    print("n = 2 exit", bad.returncode, bad.stdout.strip())
