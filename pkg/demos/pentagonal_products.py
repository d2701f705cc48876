"""Multiple pentagonal number theorems: a product of Euler products as a sum over Z^n.

Run with ``python3 demos/pentagonal_products.py``.  The last lines show why
the lattice sum must be bilateral: the one-sided half misses terms.
"""
from bcbailey.identities import euler
from bcbailey.identities import multiple

ORDER = 20
W = 2 * ORDER


def coeffs(s):
    return [int(s.coeff(2 * k)) for k in range(ORDER + 1)]


for n, k in [(1, 2), (2, 1), (2, 2), (3, 1)]:
    prod = multiple.epnt_lhs(n, k, W)
    total = multiple.epnt_rhs(n, k, W)
    T = multiple.epnt_cert(n, k).radius(n, W)
    print(f"n={n} k={k}  lattice radius {T}")
    print("  product", coeffs(prod))
    print("  sum    ", coeffs(total))

print("\n(q;q)_oo      ", coeffs(euler(W)))
print("one-sided half", coeffs(multiple.epnt_unilateral(W)))
