#!/usr/bin/env python3
"""Independent oracle for the frozen expected values in the C++ tests.

Direct integer substitution (no polynomial expansion) plus brute-force
enumeration. Run it to regenerate the constants asserted in tests/.
"""
import itertools
import math


def bindings(x, y, z):
    return dict(r=x - y, s=y + z, t=z + x, u=x + y + z, v=y - z - x, w=x - y - z)


def abc(x, y, z, n):
    b = bindings(x, y, z)
    r, s, t, u, v, w = (b[k] for k in "rstuvw")
    xy, yz, zx = (x * y) ** (n - 2), (y * z) ** (n - 2), (z * x) ** (n - 2)
    A = r**2 * (u**4 - 1) * xy - s**2 * (v**4 - 1) * yz - t**2 * (w**4 - 1) * zx
    B = 2 * (r * u) ** 2 * xy - 2 * (s * v) ** 2 * yz - 2 * (t * w) ** 2 * zx
    C = r**2 * (u**4 + 1) * xy - s**2 * (v**4 + 1) * yz - t**2 * (w**4 + 1) * zx
    Q = r**2 * xy - s**2 * yz - t**2 * zx
    M = (r * u) ** 2 * xy - (s * v) ** 2 * yz - (t * w) ** 2 * zx
    P = (r * u * u) ** 2 * xy - (s * v * v) ** 2 * yz - (t * w * w) ** 2 * zx
    lhs = (8 * r * s * t) ** 2 * (x * y * z) ** (n - 2) * (x**n + y**n - z**n)
    cons = (4 * r * s * t) ** 2 * (x * y * z) ** (n - 2) * (x**n + y**n - z**n)
    return dict(A=A, B=B, C=C, Q=Q, M=M, P=P, lhs=lhs, rhs=A * A + B * B - C * C,
                residual=M * M - P * Q, consistency=cons)


def represent(A, B, C):
    bound = math.isqrt(abs(C)) + 2
    for p in range(1, bound + 1):
        for q in range(1, p):
            if p * p - q * q == A and 2 * p * q == B and p * p + q * q == C:
                return (p, q)
    return None


def triples(c_max):
    for c in range(1, c_max + 1):
        for a in range(1, c):
            for b in range(1, c):
                if a * a + b * b == c * c:
                    yield (a, b, c)


if __name__ == "__main__":
    print("n=3 (1,2,3):", abc(1, 2, 3, 3))
    print("n=4 (0,1,1):", abc(0, 1, 1, 4)["lhs"], abc(0, 1, 1, 4)["rhs"])
    print("represent (3,4,5):", represent(3, 4, 5))
    print("represent (9,12,15):", represent(9, 12, 15))
    print("represent (4,3,5):", represent(4, 3, 5))
    for cm in (15, 100):
        bad = [t for t in triples(cm) if represent(*t) is None]
        print(f"c_max={cm}: {len(list(triples(cm)))} triples, {len(bad)} unrepresentable")
    prim_even = [t for t in triples(100) if math.gcd(t[0], t[1]) == 1 and t[1] % 2 == 0]
    print("primitive even-B up to 100 unrepresentable:",
          [t for t in prim_even if represent(*t) is None], "of", len(prim_even))
