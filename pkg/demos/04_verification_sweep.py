#!/usr/bin/env python3
"""Run the full verification sweep at a desk-friendly size and print it.

Three families of checks: the unique-minimum property over every fiber up
to the size cap, the three-way agreement of the fixed-space dimension
computations, and the structural invariants of all ten exceptional tables.
"""

from weyl2uni.verify import SweepConfig, run_all

cfg = SweepConfig(max_nu=20, max_rank=6)
report = run_all(cfg)
print(report.text())

if not report.passed:
    raise SystemExit(1)

print()
print("Larger sweeps: the acceptance suite pushes the caps to 30 (symplectic)")
print("and 25 (orthogonal); see tests/test_acceptance.py or run")
print("  weyl2uni verify --all --max-nu 25")
