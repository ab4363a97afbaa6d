"""The canonical bijection from bases to faces.

Each basis is sent to a face inside it, and every face is hit once.
"""

from stdcomplexes.core import format_face
from stdcomplexes.matroid import transversal
from stdcomplexes.stdcomplex import lambda_of_basis, lambda_table

M = transversal([{1, 2, 3}, {2, 4, 5}, {3, 5}])
T = lambda_table(M)

print(f"transversal matroid on {list(M.groundset)} with {len(M.bases)} bases")
for B, F in T.sorted_items():
    print(f"  {format_face(B):>9} -> {format_face(F)}")

print("injective:", T.is_injective())
print("each face inside its basis:", all(F <= B for B, F in T.items()))

# One value can be computed without building the table.
B = frozenset({1, 4, 5})
print(f"single lookup at {format_face(B)}:", format_face(lambda_of_basis(M, B)))
