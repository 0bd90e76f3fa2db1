"""Theta constants with characteristics
=====================================

Evaluate genus-2 theta constants with rigorous truncation control: the 16
half-integral characteristics split into 10 even and 6 odd, the odd series
vanish identically, and diagonal period matrices factor into products of
one-variable series.
"""
import numpy as np

import siegel_runge as sr

print("characteristics")
print("-" * 50)
evens = sr.even_characteristics()
odds = sr.odd_characteristics()
print(f"even ({len(evens)}):", " ".join(str(m) for m in evens))
print(f"odd  ({len(odds)}):", " ".join(str(m) for m in odds))

# A point of H2: tau = [[tau1, tau2], [tau2, tau4]], Im(tau) positive definite.
tau = sr.SiegelPoint(0.13 + 1.02j, 0.21 + 0.25j, -0.04 + 1.31j)

print()
print("values at a generic point, absolute error <= 1e-10")
print("-" * 50)
for m in evens:
    tv = sr.theta_constant(m, tau, 1e-10)
    print(f"  Theta_{m}(tau) = {tv.value: .10f}   (bound {tv.error_bound:.1e})")

print()
print("odd characteristics vanish identically")
print("-" * 50)
for m in odds:
    tv = sr.theta_constant(m, tau, 1e-12)
    print(f"  |Theta_{m}(tau)| = {abs(tv.value):.2e}")

# The truncation radius comes from a proven tail bound: the discarded terms
# are dominated by a geometric series in the smallest eigenvalue of Im(tau).
print()
print("truncation radius as a function of accuracy (y_min = 1)")
print("-" * 50)
for tol in (1e-6, 1e-9, 1e-12):
    print(f"  tol = {tol:.0e}:  box radius {sr.truncation_radius(1.0, tol)}")

print()
print("diagonal matrices factor: Theta_m(diag(w1, w2)) = theta(w1) * theta(w2)")
print("-" * 50)
diag = sr.SiegelPoint(0.3 + 0.9j, 0.0, -0.1 + 1.4j)


def theta_1d(a_bit, b_bit, w, radius=30):
    ns = np.arange(-radius, radius + 1)
    v = ns + a_bit / 2.0
    return np.sum((-1.0) ** ((ns * b_bit) % 2) * np.exp(1j * np.pi * v * v * w))


worst = 0.0
for m in sr.all_characteristics():
    product = theta_1d(m.bits[0], m.bits[2], diag.tau1) * theta_1d(m.bits[1], m.bits[3], diag.tau4)
    worst = max(worst, abs(sr.theta_constant(m, diag, 1e-11).value - product))
print(f"  max |genus-2 value - product of 1-d series| over all 16: {worst:.2e}")
