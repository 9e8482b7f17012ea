"""The separated quiver and the functor F, and Gabriel counting.

A rad^2 = 0 algebra is of finite type exactly when its separated quiver is a
union of Dynkin diagrams; indecomposables then match positive roots.
"""
from importlib import resources

from tautilt import F_apply, G_reconstruct, all_indecomposables, is_isomorphic, load_algebra, separated_quiver
from tautilt.algebra import dynkin_type
from tautilt.stablefun import hom_dim_identity, positive_roots
from tautilt.taurig import module_name

a = load_algebra(resources.files("tautilt") / "fixtures" / "ex52.alg")
gamma = separated_quiver(a)
comps = dynkin_type(gamma.quiver)
print("separated quiver components:", [(c.vertices, c.kind) for c in comps])
roots = sum(len(positive_roots(gamma.quiver, c)) for c in comps)
# the simples at the primed vertices v' = n + v are the only roots missed by F
print("positive roots over all components:", roots, "| minus", a.n, "primed simples:", roots - a.n)

mods = all_indecomposables(a)
print("indecomposables:", len(mods))
for m in mods:
    fm = F_apply(m)
    back = G_reconstruct(fm, a)
    print(f"  {module_name(m):6s} dims {m.dims}  F -> {fm.dims}  G F = id: {is_isomorphic(back, m)}")

# dim Hom(M, N) = dim Hom(M, rN) + dim Hom(FM, FN)
pairs = [hom_dim_identity(m, n) for m in mods for n in mods]
print("hom identity holds on", sum(l == r for l, r in pairs), "of", len(pairs), "pairs;",
      "total dim Hom =", sum(l for l, _ in pairs))

for kind in ("A4", "D5", "E6", "E7", "E8"):
    print(kind, "has", len(positive_roots(kind)), "positive roots")
