#!/usr/bin/env python3
"""Walk one perturbed lift of F_5[C_2] to Z/625 and print what happens.

Shows the obstruction supports per level, the reconciliation against the
canonical lift, and the lifted triangular R-matrix.
"""

import numpy as np

from hopflift import hopfcore as hc
from hopflift import lifting as lf
from hopflift import tensorcalc as tc
from hopflift.coeffring import make_ring


def main():
    F5 = make_ring(5)
    C2 = hc.generate("C2", F5)
    print(f"base: {C2}  semisimple={hc.is_semisimple(C2)} cosemisimple={hc.is_cosemisimple(C2)}")

    perturbed = lf.lift(C2, 4, "perturbed:7")
    for rec in perturbed.transcript:
        print(
            f"  level {rec['level']}: obstruction support {rec['obstruction_support']:3d}, "
            f"corrected={rec['correction_applied']}, {rec['seconds']:.3f}s"
        )
    print(f"lifted: {perturbed.current}")
    print(f"mul tensor over Z/625:\n{perturbed.current.mul.coeffs[..., 0]}")

    canonical = lf.lift(C2, 4, "canonical")
    eta = lf.reconcile(canonical, perturbed)
    print(f"reconciling isomorphism eta (== id mod 5):\n{eta.coeffs[..., 0]}")

    R1 = tc.MultiMap(F5, 0, 2, 2, 2, np.array([3, 3, 3, 2], dtype=np.int64).reshape(4, 1)[:, :, None])
    lifted_r = lf.lift_rmatrix(C2, R1, perturbed)
    print(f"lifted R-matrix coefficients: {lifted_r.R.coeffs[:, 0, 0].tolist()}")
    print(f"quasitriangular={lifted_r.quasitriangular} triangular={lifted_r.triangular}")

    u, fixed, square = hc.drinfeld_u(perturbed.current, lifted_r.R)
    print(f"Drinfeld element u = {u[:, 0].tolist()}, S(u)=u: {fixed}, u^2=1: {square}")


if __name__ == "__main__":
    main()
