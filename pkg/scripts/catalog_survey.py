"""Print structure invariants for a range of catalog types.

Usage: python3 scripts/catalog_survey.py [TYPE ...]
"""
import sys
import time

from coxquandle import AdjointModel, CoxeterGroup, catalog, reflections, w_abelianization
from coxquandle.adjoint import commutator_check
from coxquandle.errors import ResourceCapExceeded
from coxquandle.rootsys import build_root_system

DEFAULT = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "E6", "E7", "E8",
           "F4", "G2", "H3", "H4", "I2(5)", "I2(6)", "A1xA1", "A2xB2", "tilde-A1", "tilde-A2"]


def survey(name):
    t0 = time.perf_counter()
    g = CoxeterGroup(catalog(name))
    row = {"type": name, "c": g.odd.count, "W_Ab": w_abelianization(g.matrix).describe()}
    if not g.finite:
        row.update(order="inf", Q="inf", roots="inf", derived="-")
    else:
        row["order"] = g.order()
        row["Q"] = len(reflections(g))
        row["roots"] = len(build_root_system(g))
        try:
            if g.order() > 2000:
                raise ResourceCapExceeded("skipped")
            row["derived"] = commutator_check(AdjointModel(g)).data["commutator_order"]
        except ResourceCapExceeded:
            row["derived"] = "-"
    row["sec"] = f"{time.perf_counter() - t0:.2f}"
    return row


def main(names):
    cols = ["type", "order", "Q", "roots", "c", "W_Ab", "derived", "sec"]
    rows = [survey(n) for n in names]
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    print("  ".join(c.ljust(widths[c]) for c in cols))
    for r in rows:
        print("  ".join(str(r[c]).ljust(widths[c]) for c in cols))


if __name__ == "__main__":
    main(sys.argv[1:] or DEFAULT)
