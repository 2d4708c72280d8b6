#!/usr/bin/env python3
"""Look for a pair of Levi elements on which the Levi embedding fails to be multiplicative.

The embedding is multiplicative on J-positive elements; this shows that the
restriction matters by exhibiting a pair where one factor is not J-positive.
"""

import sys

from hecke_satake.hecke import hecke_algebra
from hecke_satake.rootdata import preset

name = sys.argv[1] if len(sys.argv) > 1 else "A2sc"
q = int(sys.argv[2]) if len(sys.argv) > 2 else 3
H = hecke_algebra(preset(name, q))
J = [0]
pair = H.iota_counterexample(J)
if pair is None:
    print(f"{name} q={q} J={J}: no counterexample in the search window")
else:
    x, y = pair
    print(f"{name} q={q} J={J}")
    print("  x =", H.G.to_json(x))
    print("  y =", H.G.to_json(y))
    print("  iota(T_x T_y) != T_x T_y")
