"""Weil heights and the explicit bound cases
==========================================

Heights of projective points with exact gcd normalization over Z and Z[i],
the archimedean estimate fed by embedding values, and the two explicit
bound regimes for principally polarized abelian surfaces with potentially
good reduction everywhere.
"""
import math

import siegel_runge as sr

print("Weil heights (natural log, max-norm)")
print("-" * 50)
for coords in ([1, 1], [2, 4, 8], [3, 5], [6, 10]):
    print(f"  h{tuple(coords)} = {sr.weil_height_rational(coords):.10f}")
print(f"  h(1 : i)     = {sr.weil_height_gaussian([1, 1j]):.10f}   (units)")
print(f"  h(1+i : 2)   = {sr.weil_height_gaussian([1 + 1j, 2]):.10f}   (= log(2)/2)")
print(f"  h(2 : 4 : 8) = {sr.weil_height_gaussian([2, 4, 8]):.10f}   (agrees with Q)")

print()
print("archimedean estimate from embedding values")
print("-" * 50)
p = sr.psi(sr.SiegelPoint(1j, 0, 1j))
print(f"  one real place, degree 1:    {sr.archimedean_height_estimate([p], 1):.10f}")
print(f"  one complex place, degree 2: {sr.archimedean_height_estimate([p], 2):.10f}")

print()
print("bound case (a): K rational or imaginary quadratic, s_P < 4")
print("-" * 50)
for s_p in (0, 3, 4):
    rep = sr.bound_case_a(s_p, "rational")
    if rep.condition_holds:
        print(f"  s_P = {s_p}: h(psi(P)) <= {rep.h_psi_bound}, h_F <= {rep.h_faltings_bound}")
    else:
        print(f"  s_P = {s_p}: condition fails, no bound")

print()
print("bound case (b): tube parameter t, s_P + #archimedean < 10")
print("-" * 50)
for t in (math.sqrt(3) / 2, 1.0, 2.0):
    rep = sr.bound_case_b(3, 1, t)
    print(f"  t = {t:.4f}: h(psi(P)) <= {rep.h_psi_bound:.4f}, "
          f"h_F <= {rep.h_faltings_bound:.4f}")
rep = sr.bound_case_b(9, 1, 1.0)
print(f"  s_P = 9, one place: holds = {rep.condition_holds} (9 + 1 is not < 10)")
