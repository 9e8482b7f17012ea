"""Random rad^2 = 0 algebras: classification, the simple-top construction,
and a small search among infinite-type algebras for all-rigid samples."""
from collections import Counter

from tautilt.modrep import is_projective, simple
from tautilt.taurig import classify_algebra, construct_from_simple, generate_corpus, hunt_counterexample

algs = generate_corpus(seed=5, max_vertices=4, max_arrows=5, count=40)
profiles = [classify_algebra(a) for a in algs]
print("finite type:", sum(p.rep_finite for p in profiles), "of", len(algs))
print("gorenstein :", sum(p.gorenstein for p in profiles))
print("gldim      :", Counter(str(p.gldim) for p in profiles))

cases = Counter()
for a in algs:
    for v in range(a.n):
        if not is_projective(simple(a, v)):
            out = construct_from_simple(a, v)
            cases[out.case] += 1
            assert out.case == "2a" or (out.indecomposable and out.rigid)
print("construction cases:", dict(cases))

report = hunt_counterexample(seed=3, count=12, max_vertices=3, max_arrows=5, dim_bound=8)
for e in report.entries:
    if not e.rep_finite:
        rigid = sum(s.rigid for s in e.samples)
        arrows = [line.split()[2:] for line in e.algebra.splitlines() if line.startswith("arrow")]
        print(f"infinite type, {rigid}/{len(e.samples)} samples rigid:", " ".join("->".join(x) for x in arrows))
# a candidate is only evidence: samples come from tau-orbits of projectives and
# injectives, which over a hereditary algebra are rigid anyway
print("candidates (all samples rigid):", len(report.candidates))
