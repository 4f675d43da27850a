"""For single-class groups, solve c - tau = db and show that [c] has order two.

Usage: python3 scripts/cohomology_demo.py [TYPE ...]
"""
import sys

from coxquandle import AdjointModel, CoxeterGroup, catalog
from coxquandle import adjoint as ad


def demo(name):
    g = CoxeterGroup(catalog(name))
    model = AdjointModel(g)
    if model.rank != 1:
        print(f"{name}: c(W) = {model.rank}, parity cocycle undefined")
        return
    T = g.enumerate()
    c = ad.cocycle_table(model, T)
    zero = ad.zero_table(model, T)
    b = ad.coboundary_solve(T, c, ad.tau_table(model, T))
    half = T.lengths() // 2
    print(f"{name}: |W| = {len(T)}")
    print(f"  c - tau = db solvable: {b is not None}; b = floor(l/2): {bool((b[:, 0] == half).all())}")
    print(f"  c a coboundary: {ad.coboundary_solve(T, c, zero) is not None}")
    print(f"  2c a coboundary: {ad.coboundary_solve(T, ad.scaled(c, 2), zero) is not None}")
    for w in T.elements[: min(8, len(T))]:
        print(f"    b({g.format(w) or '1'}) = {int(b[T.idx(w), 0])}")


if __name__ == "__main__":
    for name in sys.argv[1:] or ["A2", "A3", "H3", "I2(5)", "B2"]:
        demo(name)
