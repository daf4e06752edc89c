"""Feed exported LP files to HiGHS and compare the optimum with the exact solver."""
import os
import re
import subprocess
import sys

import highspy

acp, work = sys.argv[1], sys.argv[2]
os.makedirs(work, exist_ok=True)

graphs = {"BW": 1, "A_": 2, "Dhc": 3, "C~": 4, "IheA@GUAo": None, "Dh{": None}
failures = 0
for g6, expected in graphs.items():
    solved = subprocess.run([acp, "solve", g6], capture_output=True, text=True, check=True).stdout
    eta = int(re.search(r" eta=(\d+)", solved).group(1))
    if expected is not None and eta != expected:
        print(f"{g6}: solver says {eta}, expected {expected}")
        failures += 1
    for flags in ([], ["--valid"], ["--symmetry"], ["--valid", "--symmetry"]):
        path = os.path.join(work, f"highs_{len(flags)}_{'v' if '--valid' in flags else ''}.lp")
        subprocess.run([acp, "export-lp", g6, "-o", path] + flags, capture_output=True, check=True)
        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        if h.readModel(path) != highspy.HighsStatus.kOk:
            print(f"{g6} {flags}: HiGHS could not read {path}")
            failures += 1
            continue
        h.run()
        value = round(h.getInfo().objective_function_value)
        status = "ok" if value == eta else "MISMATCH"
        print(f"{g6} {' '.join(flags) or 'base'}: highs={value} eta={eta} {status}")
        failures += value != eta
sys.exit(1 if failures else 0)
