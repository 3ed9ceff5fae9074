"""Maps between continua can be pinned at points; Cantor maps only at
regions.

For Peano continua, a continuous surjection can interpolate any finite set
of point constraints f(x_i) = y_i.  The realization here: hold the value
constant on the flanks, and between consecutive waypoints run a linear
approach, a full sweep of the target (triangle wave for the interval, a
space-filling curve for the square), and a linear return.  Pins hold as
exact rational equalities; sweep values come back as certified enclosures.

Run:  python demos/waypoint_pinning.py
"""

from fractions import Fraction as F

from primchaos import (
    evaluate_waypoint,
    evaluate_waypoint_exact,
    hilbert_enclosure,
    verify_waypoint_surjection,
    waypoint_map,
    waypoint_surjection,
)
from primchaos.geometry import rational_str, region_doc
from primchaos.surject import sweep_segments

# --- pinning two points of the square ---------------------------------------

print("=== [0,1] onto the square, pinned at two points ===")
wmap = waypoint_map([(F(1, 4), (F(0), F(0))), (F(3, 4), (F(1), F(1)))],
                    "square")
ws = waypoint_surjection(wmap)
for x, y in wmap.waypoints:
    got = evaluate_waypoint_exact(ws, x)
    print(f"  f({rational_str(x)}) = {tuple(rational_str(c) for c in got)} "
          f"(pinned exactly: {got == y})")

print("piecewise structure:")
for lo, hi, kind, _ in ws.pieces:
    print(f"  [{rational_str(lo)}, {rational_str(hi)}]: {kind}")

lo, hi = sweep_segments(ws)[0]
t = lo + (hi - lo) / 3
print(f"a sweep-interior parameter t = {rational_str(t)} evaluates to "
      f"enclosures that shrink with depth:")
for depth in (2, 4, 8):
    print(f"  depth {depth}: {region_doc(evaluate_waypoint(ws, t, depth))}")

rep = verify_waypoint_surjection(ws, resolution=8)
print(f"pins exact + sweeps cover the square at 2^-8: {rep.all_passed}")

# --- the space-filling quadrants behind square sweeps ------------------------

print("=== space-filling curve quadrants ===")
print("depth-1 parameter quarters map to the four quadrants, corner to corner:")
for j in range(4):
    cell = (F(j, 4), F(j + 1, 4))
    box = hilbert_enclosure(cell)
    print(f"  t in [{rational_str(cell[0])}, {rational_str(cell[1])}] "
          f"-> {region_doc(box)}")

# --- interval target: the sweep is a triangle wave --------------------------

print("=== [0,1] onto [0,1] with one pin ===")
ws1 = waypoint_surjection(waypoint_map([(F(1, 2), (F(0),))], "interval"))
print(f"  f(1/2) = {rational_str(evaluate_waypoint_exact(ws1, F(1, 2))[0])}")
lo, hi = sweep_segments(ws1)[0]
mid = lo + (hi - lo) / 2
print(f"  sweep peak f({rational_str(mid)}) = "
      f"{rational_str(evaluate_waypoint_exact(ws1, mid)[0])}")
print(f"  verification: {verify_waypoint_surjection(ws1, 8).all_passed}")

print("done: point constraints realized with exact equality.")
