#!/usr/bin/env python3
"""Print the GL2 Satake images for the trivial-type and Steinberg-type weights."""

import sys

from hecke_satake.suites import gl2_example

q = int(sys.argv[1]) if len(sys.argv) > 1 else 3
ex = gl2_example(q)
for key, label in [("S_T_St_triv", "S(T_z^{St,triv})"), ("S_T_triv_St", "S(T_z^{triv,St})"),
                   ("composition", "S(composite)  ")]:
    got, want = ex[key]
    print(f"{label} = {got}    expected {want}    {'ok' if got == want else 'MISMATCH'}")
