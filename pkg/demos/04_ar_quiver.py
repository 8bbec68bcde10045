"""Auslander-Reiten quivers of Dynkin quivers by knitting.

Starting from the projectives, each mesh determines the translate of a
vertex by additivity of dimension vectors; for a Dynkin quiver the process
enumerates every indecomposable exactly once (one per positive root).
"""

from quivergrass import Quiver, linear_quiver
from quivergrass.ardynkin import classify, coxeter_matrix, knit, tau_dim

for quiver in (linear_quiver(4),
               Quiver(4, [(1, 4), (2, 4), (3, 4)]),          # D4 star
               Quiver(6, [(1, 2), (2, 3), (3, 4), (4, 5), (6, 3)])):  # E6
    print(quiver, "->", classify(quiver).name)

ar = knit(linear_quiver(4))
print("\nA4 has", len(ar.vertices), "indecomposables:")
for idx, dim in enumerate(ar.vertices):
    marks = []
    if idx in ar.projectives:
        marks.append("projective")
    if idx in ar.injectives:
        marks.append("injective")
    print(f"  [{idx}] {dim} {' '.join(marks)}")
print("irreducible maps:", sorted(ar.arrows))
print("translate:", {k: v for k, v in sorted(ar.tau.items())},
      "(vertex -> its translate)")

print("\nCoxeter matrix of A4 (acts as the translate on dimension vectors):")
for row in coxeter_matrix(linear_quiver(4)):
    print("  ", row)
print("tau of (0,1,1,0):", tau_dim(linear_quiver(4), (0, 1, 1, 0)))
