"""
Flips connect all tilings of the same positive type
===================================================

Where three pairwise different lozenges meet they can be rotated into the
opposite configuration: a flip.  Flips preserve the type, and any two
tilings of the same all-positive type are connected by a flip sequence
found greedily from their height difference.
"""

from lozenge import (
    canonical_tiling,
    canonicalize,
    flip,
    flip_class,
    flip_connect,
    render_ascii,
    sources_and_sinks,
)

matrix = canonicalize([[6, 4], [0, 2]])
start = canonical_tiling(matrix, (4, 4, 4))

sources, sinks = sources_and_sinks(start)
print(f"type (4,4,4): {len(sources)} sources, {len(sinks)} sinks")

# walk three flips away from the canonical tiling
current = start
for _ in range(3):
    x = min(sources_and_sinks(current)[0])
    current = flip(current, x)
    print(f"flipped at coset {x} = {current.quotient.reps[x]}")
print()
print(render_ascii(current))

# recover a route back, then replay it to double-check
sequence = flip_connect(current, start)
print(f"route back to the canonical tiling: {len(sequence.steps)} flips")
for k, coset in enumerate(sequence.steps):
    print(f"  step {k}: flip at coset {coset}")
assert sequence.replay() == start

# the whole flip class of a small example
small = canonicalize([[3, 2], [0, 1]])
tilings = flip_class(canonical_tiling(small, (1, 1, 1)))
print(f"\nflip class of type (1,1,1) on the order-3 quotient: {len(tilings)} tilings")
for t in tilings:
    print(" ", "".join(t.letters))
