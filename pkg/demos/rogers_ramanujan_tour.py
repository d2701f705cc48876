"""Rogers-Ramanujan series in one and several variables, coefficient by coefficient.

Run with ``python3 demos/rogers_ramanujan_tour.py``.
"""
from bcbailey.identities import gis_lhs, gis_rhs, rr_product
from bcbailey.identities import multiple

ORDER = 15  # powers of q
W = 2 * ORDER  # the library works in sqrtq


def coeffs(s, upto=ORDER):
    return [int(s.coeff(2 * k)) for k in range(upto + 1)]


print("One variable, sum over m of q^{m^2}/(q)_m against 1/((q;q^5)(q^4;q^5)):")
print("  sum    ", coeffs(gis_lhs(0, W)))
print("  product", coeffs(rr_product(0, W)))

print("\nShifted sums q^{m(m+d)}/(q)_m against the Schur-polynomial theta combination:")
for d in (-1, 3):
    print(f"  d={d:2d} sum    ", coeffs(gis_lhs(d, W), 10))
    print(f"       product", coeffs(gis_rhs(d, W), 10))

for n in (2, 3):
    s = multiple.rr_orthant_sum(n, 0, W)
    det = multiple.theta_det_rhs("dn", n, 0, W)
    mult = multiple.rr_multilateral(n, 0, W)
    print(f"\nn={n}: orthant sum, theta determinant and multilateral sum")
    for name, series in (("orthant", s), ("theta det", det), ("multilateral", mult)):
        print(f"  {name:13s}", coeffs(series))
    print("  all equal:", (s - det).truncate(W).is_zero() and (s - mult).truncate(W).is_zero())
