"""Self-orthogonality comes in two flavors, and they disagree.

The symplectic form is alternating, so every single word is isotropic and
self-orthogonality is cheap to come by.  The Euclidean form is not, and a
code can pass the symplectic test while failing the Euclidean one.  The
classic witness: words free on a coordinate pair.
"""

from symhex.codes import (
    HzWord,
    build,
    euclidean_inner,
    flags,
    is_euclidean_self_orthogonal,
    symplectic_inner,
)
from symhex.gf import LinearCode
from symhex.ring import RingId

ca = LinearCode(2, [[1, 0, 0, 0], [0, 1, 0, 0]])
cb = LinearCode(3, [[1, 0, 0, 0], [0, 1, 0, 0]])
code = build(RingId.H23, ca, cb)

print(f"length-4 code with {code.size} words, supported on the first two coordinates")
for name, value in flags(code).items():
    print(f"  {name:>4}: {'yes' if value else 'no'}")
print()

w = HzWord.from_symbols(RingId.H23, "a000")
print(f"symplectic <a000, a000> = {symplectic_inner(w, w).symbol}   (alternating: always 0)")
print(f"Euclidean  <a000, a000> = {euclidean_inner(w, w).symbol}   (a*a = a in H23)")
print(f"Euclidean self-orthogonal? {is_euclidean_self_orthogonal(code)}")
print()

# a gallery of length-2 codes and their predicate profiles
print(f"{'ca':>5} {'cb':>5}   so   sd  qsd nice  lcd")
gallery = [
    (LinearCode(2, [[1, 1]]), LinearCode(3, [[1, 1]])),
    (LinearCode(2, [[1, 1]]), LinearCode.full(3, 2)),
    (LinearCode(2, [[1, 1]]), LinearCode.zero(3, 2)),
    (LinearCode.zero(2, 2), LinearCode(3, [[1, 2]])),
    (LinearCode.full(2, 2), LinearCode.zero(3, 2)),
]
for ca, cb in gallery:
    c = build(RingId.H23, ca, cb)
    fl = flags(c)
    row = " ".join(f"{'x' if fl[k] else '.':>4}" for k in ("so", "sd", "qsd", "nice", "lcd"))
    ca_s = "full" if ca.is_full() else "0" if ca.is_zero() else "".join(map(str, ca.gen[0]))
    cb_s = "full" if cb.is_full() else "0" if cb.is_zero() else "".join(map(str, cb.gen[0]))
    print(f"{ca_s:>5} {cb_s:>5} {row}")
