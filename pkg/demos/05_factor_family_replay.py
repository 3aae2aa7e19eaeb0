"""Replaying the finiteness pipeline on symbolic factor families.

Builds a family of chief-factor descriptors for PGL(2,7) with growing
composition lengths, feeds it through the replay, and compares the
resulting witness with the brute-force lattice value.  Also runs the
bundled mixed cyclic/PSL2 descriptor file (the same file works with
``pzeta replay demos/data/mixed_factors.json``).

Run:  python demos/05_factor_family_replay.py
"""

import json
from pathlib import Path

from pzeta import (
    FactorDescriptor,
    FactorKind,
    descriptor_from_supplement_poly,
    make_psl2,
    odd_supplement_indices,
    replay_finiteness_argument,
    supplement_zeta,
)

spec = make_psl2(7, "pgl")
poly = supplement_zeta(spec)
kind = FactorKind.psl2(7, "pgl")
family = [descriptor_from_supplement_poly(i, kind, i, poly) for i in range(1, 21)]

report = replay_finiteness_argument(family)
print(f"family: 20 copies of {spec.name} with composition lengths 1..20")
print("replay witness w        =", report.witness)
print("lattice brute force w   =", odd_supplement_indices(spec).minimum)
print("contributing ids        =", list(report.i_star))
print("beta =", report.beta, " c_beta =", report.c_beta,
      "(negative)" if report.c_beta_negative else "")
print("finiteness condition (i) holds on the window:", report.sml.condition_i_holds)

data_file = Path(__file__).parent / "data" / "mixed_factors.json"
factors = [
    FactorDescriptor.from_json_dict(d)
    for d in json.loads(data_file.read_text())["factors"]
]
mixed = replay_finiteness_argument(factors)
print(f"\nmixed file ({data_file.name}): q = {mixed.q}, w = {mixed.witness}, "
      f"I* = {list(mixed.i_star)}")
for s in mixed.factor_summaries:
    print("  ", s)
