"""Statistics of lattice paths above the lowest boundary.

A scan, a hook placement and the marking path all pick out the same east
steps, and raising a path step by step keeps the statistic fixed.
"""

from stdcomplexes.latpath import (
    hook_placement,
    marking_path,
    path_from_statistic,
    raise_path,
    statistic,
    statistic_trivial_scan,
    trivial_lower,
    trivial_marking_path,
)
from stdcomplexes.render import render_ascii

C = "e n e n e e n e n e e n e n n e e n"
print("C =", C)
print("scan:     ", sorted(statistic_trivial_scan(C)))
print("hooks:    ", sorted(hook_placement(C)))
print("marking:  ", sorted(statistic(C)))
print("marking path:", trivial_marking_path(C))
print("marked east steps:", sorted(marking_path(C, trivial_lower(18, 10)).marked))
print()
print(render_ascii(C, "e" * 10 + "n" * 8))
print()

J = statistic(C)
print(f"every path of length 18 with statistic {sorted(J)}:")
family = {d: path_from_statistic(J, 18, d) for d in range(19)}
for d, P in family.items():
    if P is not None:
        print(f"  d={d:2d}  {P.word}")

P = family[7]
while True:
    try:
        Q = raise_path(P)
    except ValueError:
        break
    print(f"  raise {P.word} -> {Q.word}")
    P = Q
