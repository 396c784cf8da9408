"""
Valid letter-count triples and the simplex picture
==================================================

A periodic tiling with quotient of size n uses each lozenge orientation a
fixed number of times: its type (g1, g2, g3), a triple summing to n.  Only
triples satisfying a divisibility condition occur.  Plotting them inside the
triangle of all triples shows a sublattice pattern.
"""

import os

from lozenge import canonicalize, render_simplex_svg, valid_types

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "out")
os.makedirs(OUT, exist_ok=True)

matrix = canonicalize([[6, 4], [0, 2]])
print(f"quotient size n = {matrix.n}")

# the types with every entry positive are the ones that admit flips
print("positive types: ", [t.triple() for t in valid_types(matrix)])
print("boundary types:", [
    t.triple() for t in valid_types(matrix, include_boundary=True) if not t.positive
])

target = os.path.join(OUT, "simplex_12.svg")
with open(target, "w") as handle:
    handle.write(render_simplex_svg(matrix))
print(f"wrote {target} (red: positive, grey: boundary)")

# a quotient where the valid set is not symmetric under permuting the axes
skew = canonicalize([[4, 3], [0, 1]])
print(f"\nquotient size n = {skew.n}")
print("all valid types:", [t.triple() for t in valid_types(skew, include_boundary=True)])
