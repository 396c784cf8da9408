"""
Canonical tilings and their height functions
============================================

For every valid type there is a canonical periodic tiling built from a
threshold rule on one linear functional.  Each tiling carries an integer
height: walking along a kept edge raises it by 1, crossing a removed edge
drops it by 2, and on lattice translates of the origin a closed formula
gives the value directly.
"""

import os

from lozenge import (
    canonical_tiling,
    canonicalize,
    height_at,
    height_function,
    lattice_height,
    render_ascii,
    render_svg,
    sources_and_sinks,
)

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "out")
os.makedirs(OUT, exist_ok=True)

matrix = canonicalize([[6, 4], [0, 2]])
tiling = canonical_tiling(matrix, (2, 2, 8))

print("letter grid (top row is the upper edge of the fundamental domain):")
print(render_ascii(tiling))

height = height_function(tiling)
for point in ((6, 0), (4, 2), (6, 6), (5, 1), (0, 0)):
    print(f"h{point} = {height_at(height, point)}")

# points of the periodicity lattice do not need the tiling at all
assert lattice_height((2, 2, 8), (6, 0), matrix) == height_at(height, (6, 0))

sources, sinks = sources_and_sinks(tiling)
reps = tiling.quotient.reps
print("sources:", sorted(reps[i] for i in sources))
print("sinks:  ", sorted(reps[i] for i in sinks))

target = os.path.join(OUT, "canonical_2_2_8.svg")
with open(target, "w") as handle:
    handle.write(render_svg(tiling))
print(f"wrote {target} (blue: U, orange: V, green: W)")
