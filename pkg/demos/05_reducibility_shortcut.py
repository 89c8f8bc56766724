"""A reducibility shortcut that does not hold.

The rule "[t, f g]^i is reducible for i <= min(d, max(ord f, ord g))"
would let a search skip candidates. [t, t*t]^3 is a nonzero element of
C_{3,15}, a cell with no products at all, so it cannot be reducible.
For [t, dv1*dv3]^i the exact span test gives mixed answers.
"""
from __future__ import annotations

from covforge.discover import CellEngine, replay_paper_constructions
from covforge.sl2 import SemiInvariant
from covforge.transvect import semitransvectant_direct

reg, _ = replay_paper_constructions()
small = reg.truncated(4)
ctx = reg.ctx
t = SemiInvariant.base(ctx)
eng = CellEngine(small)

s = semitransvectant_direct(ctx, t, t * t, 3)
print(f"[t,t*t]^3 has order {s.order}; products in its cell: {len(eng.vectors(3, 15))}")

m = reg["dv1"].semi * reg["dv3"].semi
for i in range(8):
    s = semitransvectant_direct(ctx, t, m, i)
    if s is None:
        print(f"[t,dv1*dv3]^{i} = 0")
    else:
        print(f"[t,dv1*dv3]^{i}: order {s.order}, reducible {eng.in_span_exact(5, s.order, [], s)}")
