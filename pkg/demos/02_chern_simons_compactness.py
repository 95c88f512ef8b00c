"""Exact Chern-Simons arithmetic and the compactness test.

For Sigma(p, q, k*p*q - 1) the minimal Chern-Simons difference tau and the
relative Pontryagin number p1 are the same closed-form rational
1/(p*q*(k*p*q - 1)).  A moduli space over an assembled end stays compact
when p1 < 4 (no bubbling) and p1 is below tau of every boundary piece and
the lens-space bound (no breaking).  Everything here is a Fraction, so each
claimed inequality is exact.
"""

from knotcert import (
    H1Data,
    compactness_check,
    count_reducibles,
    lens_cs_lower_bound,
    parity_obstruction,
    pontryagin_number,
    tau_brieskorn_family,
)

print("tau and p1 on the surgery family (identical closed forms):")
for p, q, k in [(2, 3, 1), (2, 3, 2), (2, 5, 1), (3, 5, 2)]:
    tau = tau_brieskorn_family(p, q, k).value
    p1 = pontryagin_number(p, q, k)
    bound = lens_cs_lower_bound(p, q, k)
    print(f"  (p,q,k)=({p},{q},{k}):  tau = p1 = {tau},  lens bound = {bound}")

print()
print("A compactness report (terminal carries the bundle, boundary breaks):")
report = compactness_check(boundary=[(2, 3, 1), (2, 3, 2)], terminal=(2, 5, 2))
print(report)

print()
print("Swapping roles makes the breaking test fail:")
report = compactness_check(boundary=[(2, 5, 2)], terminal=(2, 3, 1))
print(report)

print()
print("Reducible-connection counts and the boundary-parity obstruction:")
for t, beta in [(3, 0), (1, 0), (8, 2), (4, 1)]:
    h = H1Data(t, beta)
    fired = parity_obstruction(h)
    print(f"  T={t}, beta={beta}: count = {count_reducibles(h)}, obstruction fires: {fired}")
