"""Print the Betti tables of the 2 x n and 3 x n grid graphs."""

from cutcomplex.harness import emit_table

print(emit_table("G2n", range(1, 9), range(2, 9), "text"))
print(emit_table("G3n", range(1, 12), range(3, 7), "text"))
