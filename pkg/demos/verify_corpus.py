"""Run the invariant checks on a small corpus and print a report.

The command line ``stdcomplexes verify`` does the same on the default
corpus; this keeps to sizes that finish in a few seconds.
"""

from stdcomplexes import corpus as cp
from stdcomplexes.stdcomplex import LexCache

spec = cp.CorpusSpec(
    families=[
        {"family": "uniform", "max_n": 5},
        {"family": "lattice_path", "max_n": 5},
        {"family": "transversal", "count": 20, "max_n": 6, "seed": 7},
    ]
)
corpus = cp.build_corpus(spec)
ms = corpus.matroids
cache = LexCache()
print(f"{len(ms)} matroids after closing under duals and minors")

checks = {
    "oracle equivalence": cp.check_oracle_equivalence(ms, cache),
    "cardinality and subcomplex": cp.check_cardinality_subcomplex(ms, cache),
    "duality": cp.check_duality(ms, cache),
    "bijection axioms": cp.check_lambda_axioms(ms, cache),
    "mapping cone": cp.check_mapping_cone(ms, cache),
    "statistic = bijection (n <= 7)": cp.check_statistic_lambda(7, cache),
    "reflection": cp.check_reflection(7, ns=range(2, 7), per_n=20),
}
for name, bad in checks.items():
    print(f"{'PASS' if not bad else 'FAIL'}  {name}")
    for line in bad[:5]:
        print("      ", line)
