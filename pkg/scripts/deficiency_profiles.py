#!/usr/bin/env python3
"""Print ideal-deficiency profiles for a gallery of constructed curves.

Shows, for each curve, the ledger m, a_m, u, h1 up to the regularity, the
regularity itself, and the quadric-count classification when applicable.

Usage: python3 scripts/deficiency_profiles.py [--p 10007] [--seed 5]
"""

import argparse
import sys

from hypersurfaces import cohomology, varieties
from hypersurfaces.exactcore import PrimeField


def gallery(p: int, seed: int):
    gf = PrimeField(p)
    yield varieties.rational_normal_curve(4, gf)
    yield varieties.elliptic_normal_curve(3, p)
    yield varieties.hyperelliptic_g2_curve(3, p)
    yield varieties.multisecant_projection(4, 3, 0, p, seed=seed)
    yield varieties.multisecant_projection(4, 4, 0, p, seed=seed)
    yield varieties.multisecant_projection(4, 4, 1, p, seed=seed)
    yield varieties.multisecant_projection(5, 5, 2, p, seed=seed)
    yield varieties.scroll_section_curve(1, 3, 5, gf, seed=seed)  # d = 2c+1
    yield varieties.project_from_general_point(
        varieties.rational_normal_curve(6, gf), seed=seed
    )


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=10007)
    ap.add_argument("--seed", type=int, default=5)
    args = ap.parse_args()
    for v in gallery(args.p, args.seed):
        prof = cohomology.deficiency_profile(v)
        print(f"== {v.label}  (c={v.c}, d={v.d}, g={v.g})")
        print(f"   reg = {prof.reg}  linearly_normal = {prof.linearly_normal}")
        print("   " + cohomology.profile_csv(prof).replace("\n", "\n   ").rstrip())
        try:
            cls = cohomology.classify_a2_curve(v)
            print(f"   rank k = {cls.k}: {cls.case} "
                  f"(identity_ok={cls.h1_identity_ok}, consistent={cls.witness_consistent})")
        except ValueError as err:
            print(f"   classification: {err}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
