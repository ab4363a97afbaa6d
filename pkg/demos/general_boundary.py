"""Statistics relative to an arbitrary lower boundary.

The demarcation path sits between the boundary and the path; the marking
path runs diagonally between them wherever it can.  The unmarked east steps
form the statistic, which agrees with the bijection of the lattice path
matroid.
"""

from stdcomplexes.core import format_face
from stdcomplexes.latpath import LatticePath, demarcation, lpm, marking_path, statistic
from stdcomplexes.render import render_ascii
from stdcomplexes.stdcomplex import lambda_of_basis

C = "n n n e e e n e e n e n n e n n n e e e e"
L = "e e e n e e e n n e n e e n n n n e e n n"

print("C           ", C)
print("L           ", L)
print("demarcation ", demarcation(C, L))
mar = marking_path(C, L)
print("marking     ", mar)
print("marked east steps:", sorted(mar.marked))
st = statistic(C, L)
print("statistic:", format_face(st))
print()
print(render_ascii(C, L))
print()

# The same face comes out of the matroid bijection with C as upper boundary.
M = lpm(C, L)
B = LatticePath(C.replace(" ", "")).east_set
print(f"M[C, L] has {len(M.bases)} bases")
print("bijection at E(C):", format_face(lambda_of_basis(M, B)))
