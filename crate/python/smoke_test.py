#!/usr/bin/env python3
"""Smoke test for the schubert_csm_py extension module.

Builds nothing itself: expects the extension to be compiled already with

    cargo build --release -p schubert-csm-py

and loads it straight out of the cargo target directory.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    repo = Path(__file__).resolve().parent.parent
    candidates = [
        repo / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libschubert_csm_py.so", "schubert_csm_py.so", "libschubert_csm_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "extension not found; run `cargo build --release -p schubert-csm-py` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="schubert_csm_py_"))
    shutil.copy2(built, stage / "schubert_csm_py.so")
    sys.path.insert(0, str(stage))
    import schubert_csm_py

    return schubert_csm_py


def main():
    mod = load_module()

    a3 = mod.RootSystem("A", 3)
    assert a3.rank == 3
    assert a3.num_positive_roots == 6
    assert a3.weyl_order == 24

    w0 = a3.longest_element()
    assert w0.length == 6
    assert w0.permutation() == [4, 3, 2, 1]

    # Open-cell CSM class of Fl(4): 24 strictly positive coefficients,
    # e.g. 6 on the cell of the permutation 2143.
    cell = a3.csm_cell(w0)
    assert len(cell) == 24
    assert all(c > 0 for c in cell.values())
    key_2143 = a3.element("2143").word_str()
    assert cell[key_2143] == 6
    assert cell[a3.identity().word_str()] == 1

    # Push-forward to the Grassmannian G(2,4): coefficients 1,3,4,4,4,1.
    pushed = a3.pushforward(w0, [1, 3])
    grass = {
        "3412": 1,
        "2413": 3,
        "1423": 4,
        "2314": 4,
        "1324": 4,
        "1234": 1,
    }
    assert len(pushed) == 6
    for perm, coeff in grass.items():
        assert pushed[a3.element(perm).word_str()] == coeff

    # Variety class: sum of cell classes over the Bruhat interval; for the
    # commuting word s1 s3 the coefficients are powers of two.
    w_2143 = a3.element("1,3")
    assert w_2143.permutation() == [2, 1, 4, 3]
    variety = a3.csm_variety(w_2143)
    assert sorted(variety.values()) == [1, 2, 2, 4]
    assert variety[a3.identity().word_str()] == 4

    # Equivariant class in Fl(3): leading coefficient of the open cell is
    # the product over the three positive roots.
    a2 = mod.RootSystem("A", 2)
    equi = a2.csm_cell_equivariant(a2.longest_element())
    assert equi[a2.identity().word_str()] == "1"
    top = equi[a2.longest_element().word_str()]
    assert top == "1 + 2*a1 + 2*a2 + a1^2 + 3*a1*a2 + a2^2 + a1^2*a2 + a1*a2^2"

    # Positivity sweeps and the operator-identity suite.
    report = a3.verify_positivity()
    assert report["all_positive"] and report["cells"] == 24

    equi_report = a2.verify_positivity(equivariant=True)
    assert equi_report["all_positive"]

    g2 = mod.RootSystem("G", 2)
    idents = g2.verify_identities(samples=50)
    assert idents["all_hold"]

    # Group arithmetic round-trips.
    s1, s3 = a3.simple(1), a3.simple(3)
    prod = s1 * s3
    assert prod.length == 2
    assert prod.inverse() == prod
    assert a3.bruhat_leq(s1, w0)
    assert len(a3.elements(max_length=2)) == 1 + 3 + 5

    print("schubert_csm_py smoke test: OK")


if __name__ == "__main__":
    main()
