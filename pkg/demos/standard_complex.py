"""Lex standard complex of a small uniform matroid, three ways.

The deletion-contraction recursion, the slice recursion on the basis
configuration and the linear-algebra oracle all give the same six faces.
"""

from stdcomplexes.core import f_vector, format_complex
from stdcomplexes.matroid import basis_configuration, dual, uniform
from stdcomplexes.oracle import standard_complex
from stdcomplexes.stdcomplex import (
    lex_standard_complex_config,
    lex_standard_complex_matroid,
    mapping_cone_decomposition,
)

M = uniform(4, 2)
V = basis_configuration(M)

by_minors = lex_standard_complex_matroid(M)
by_slices = lex_standard_complex_config(V)
by_oracle = standard_complex(V, "lex")

print("bases of U(2,4):", [sorted(B) for B in M.sorted_bases()])
print("deletion-contraction:", format_complex(by_minors))
print("slicing the points:  ", format_complex(by_slices))
print("oracle:              ", format_complex(by_oracle))
print("f-vector:", f_vector(by_minors))
assert by_minors == by_slices == by_oracle

# The complex only sees the basis count, so the dual gives the same answer.
print("dual has the same complex:", lex_standard_complex_matroid(dual(M)) == by_minors)

# The recursion glues two minors along their common part with a cone.
mc = mapping_cone_decomposition(M)
print(f"split at {mc.apex}:")
print("  deletion     ", format_complex(mc.deletion))
print("  contraction  ", format_complex(mc.contraction))
print("  intersection ", format_complex(mc.intersection))
print("  reassembled  ", format_complex(mc.assemble()))

# A graded order gives a different complex on some point sets.
from stdcomplexes.core import PointConfig

W = PointConfig((1, 2, 3), [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 1)])
print("lex  :", format_complex(standard_complex(W, "lex")))
print("grlex:", format_complex(standard_complex(W, "grlex")))
