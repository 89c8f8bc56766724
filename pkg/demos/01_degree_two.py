"""The degree-2 semitransvectants of the binary septic.

[t,t]^r vanishes for odd r and gives the three quadratic semi-invariants
for r = 2, 4, 6. Each is checked against the classical route through the
reconstructed covariant.
"""
from __future__ import annotations

from covforge import context, kappa_inverse, semitransvectant, semitransvectant_direct
from covforge.poly import to_text
from covforge.sl2 import SemiInvariant

ctx = context(7)
t = SemiInvariant.base(ctx)

print("the form itself:", to_text(kappa_inverse(ctx, ctx.R.var("t"))))
for r in range(8):
    s = semitransvectant_direct(ctx, t, t, r)
    if s is None:
        print(f"[t,t]^{r} = 0")
        continue
    classical = semitransvectant(ctx, t, t, r)
    print(f"[t,t]^{r} = {to_text(s.poly)}   order {s.order}, classical path agrees: {s.core == classical.core}")
