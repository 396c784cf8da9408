"""
Which abelian subgroups admit a higher preprojective cut
========================================================

A finite abelian subgroup of SL3 given by diagonal generators determines a
periodic quotient of the triangular lattice.  A cut of all-positive type
exists unless the group is the Klein four-group or one of the coordinate
characters is trivial.
"""

from lozenge import (
    admits_cut_group_form,
    admits_cut_matrix_form,
    has_trivial_character,
    is_klein_four,
    parse_group,
)

CASES = [
    "1/3(1,1,1)",              # cyclic of order 3, the smallest interesting case
    "1/2(1,1,0); 1/6(1,4,1)",  # order 12, a rich supply of cuts
    "1/2(1,1,0); 1/2(1,0,1)",  # the Klein four-group, famously cutless
    "1/5(0,1,4)",              # embeds into SL1 x SL2, also cutless
    "1/4(1,1,2)",              # cyclic of order 4: same order as Klein, but fine
]

for text in CASES:
    group = parse_group(text)
    print(f"generators {text}")
    print(f"  |G| = {group.order}, periodicity matrix rows {group.matrix.rows()}")
    if is_klein_four(group):
        print("  -> Klein four-group, no cut")
    elif has_trivial_character(group):
        print("  -> a coordinate character is trivial, no cut")
    else:
        print("  -> admits a cut of all-positive type")
    # the lattice-side test must agree with the group-side test
    assert admits_cut_group_form(group) == admits_cut_matrix_form(group.matrix)
    print()
