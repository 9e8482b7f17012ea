"""Walk through the three bundled example algebras.

Run with ``python3 demos/worked_examples.py``.
"""
from importlib import resources

from tautilt import (
    all_indecomposables,
    common_summand,
    injective,
    is_isomorphic,
    is_tau_rigid,
    load_algebra,
    min_presentation,
    simple,
    tau,
    tau_tilting_all,
)
from tautilt.modrep import global_dimension
from tautilt.taurig import module_name

fixtures = resources.files("tautilt") / "fixtures"

# 4-cycle with rad^2 = 0: self-injective, every indecomposable is tau-rigid
a = load_algebra(fixtures / "ex51.alg")
mods = all_indecomposables(a)
print("ex51:", len(mods), "indecomposables,", sum(is_tau_rigid(m).rigid for m in mods), "tau-rigid")
for t in tau_tilting_all(a):
    print("   ", " + ".join(module_name(r) for r in t.summands))

# finite global dimension; tau moves the simples around
a = load_algebra(fixtures / "ex52.alg")
print("ex52: gldim", global_dimension(a))
print("   tau S3 = S4:", is_isomorphic(tau(simple(a, 2)), simple(a, 3)))
print("   tau I3 = S3:", is_isomorphic(tau(injective(a, 2)), simple(a, 2)))

# I3 shares P2 between P0 and P1, so it cannot be tau-rigid
a = load_algebra(fixtures / "ex53.alg")
i3 = injective(a, 2)
pres = min_presentation(i3)
print("ex53: presentation of I3:",
      " + ".join(f"P{v + 1}" for v in pres.p1_vertices), "->",
      " + ".join(f"P{v + 1}" for v in pres.p0_vertices))
v = is_tau_rigid(i3)
print("   I3 tau-rigid:", v.rigid, "| witness I3 -> tau I3 nonzero:", not v.witness.is_zero())
print("   common summand:", module_name(common_summand(i3)))
print("   tau I3 =", module_name(tau(i3)), "tau-rigid:", is_tau_rigid(tau(i3)).rigid)
print("   tau^2 I3 =", module_name(tau(tau(i3))))
