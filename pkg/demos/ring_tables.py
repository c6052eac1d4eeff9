"""A tour of the two order-six rings.

Both rings live on the same six elements {0, a, b, c, d, e} with the same
addition; only multiplication distinguishes them.  Neither has a unit,
which is the whole point: linear algebra over them has to be rebuilt from
the (F_2, F_3) component decomposition that this package uses everywhere.
"""

from symhex.ring import (
    ELEMENTS,
    RingId,
    add,
    addition_table,
    compose,
    decompose,
    mul,
    multiplication_table,
)


def show(table, title):
    print(title)
    print("    " + "  ".join(el.symbol for el in ELEMENTS))
    for el, row in zip(ELEMENTS, table):
        print(f"  {el.symbol} " + "  ".join(v.symbol for v in row))
    print()


show(addition_table(), "addition (shared by both rings)")
for ring in (RingId.H23, RingId.H32):
    show(multiplication_table(ring), f"multiplication in {ring}")

# every element is a pair: a binary part and a ternary part
print("element  (x mod 2, y mod 3)")
for el in ELEMENTS:
    print(f"   {el.symbol}     {decompose(el)}")
print()

# multiplication projects onto one component and kills the other
x, y = compose(1, 2), compose(1, 1)   # e and c
print(f"e * c in H23 = {mul(RingId.H23, x, y).symbol}   (binary parts multiply)")
print(f"e * c in H32 = {mul(RingId.H32, x, y).symbol}   (ternary parts multiply)")
print()

# no unit exists in either ring
for ring in (RingId.H23, RingId.H32):
    units = [u for u in ELEMENTS if all(mul(ring, u, v) == v for v in ELEMENTS)]
    print(f"{ring}: elements acting as a unit: {[u.symbol for u in units] or 'none'}")
