#!/usr/bin/env python3
"""Independent big-integer oracle for values frozen into the C++ test suites.

Everything here uses plain Python integers and brute force; nothing is shared
with the C++ implementation.
"""
import itertools
import sys


def v(m, x):
    assert x > 0
    k = 0
    while x % m == 0:
        x //= m
        k += 1
    return k


def conjecture(m, n_max):
    bad = []
    for n in range(1, n_max + 1):
        x = (m - 1) ** n - 1
        if m ** (2 * v(m, x)) > x:
            bad.append(n)
    return bad


def side_key(t1, t2):
    return tuple(sorted([t1, t2]))


def canonical(t):
    a, b, c, d, e, f, g, h = t
    left = side_key((a, b), (c, d))
    right = side_key((e, f), (g, h))
    lo, hi = sorted([left, right])
    return lo[0] + lo[1] + hi[0] + hi[1]


def normalize(t):
    m2 = min(t[0], t[2], t[4], t[6])
    m3 = min(t[1], t[3], t[5], t[7])
    return tuple(x - (m2 if i % 2 == 0 else m3) for i, x in enumerate(t))


def holds(t):
    a, b, c, d, e, f, g, h = t
    return 2**a * 3**b + 2**c * 3**d == 2**e * 3**f + 2**g * 3**h


def master(bound):
    out = set()
    raw = 0
    for t in itertools.product(range(bound + 1), repeat=8):
        if holds(t):
            raw += 1
            out.add(canonical(normalize(t)))
    return raw, sorted(out)


def main():
    print("modpow(2,6,27) =", pow(2, 6, 27))
    print("v_5(4^10-1) =", v(5, 4**10 - 1), "v_9(8^6-1) =", v(9, 8**6 - 1),
          "v_9(8^2-1) =", v(9, 63))
    print("remark:", [(m, ((m - 1) ** m - 1) % (m * m) == 0) for m in range(4, 21, 2)])
    # 3^b + 3^d = 2^e + 2^g, b >= d, e >= g
    sols = sorted({(max(b, d), min(b, d), max(e, g), min(e, g))
                   for b, d, e, g in itertools.product(range(4), repeat=4)
                   if 3**b + 3**d == 2**e + 2**g})
    print("3b3d bound 3:", sols)
    for bound in (0, 1, 2):
        raw, out = master(bound)
        print(f"master bound {bound}: raw={raw} canonical={len(out)} {out}")
    if "--slow" in sys.argv:
        raw, out = master(3)
        print(f"master bound 3: raw={raw} canonical={len(out)}")
        print(out)
    print("conjecture m=4 n<=100:", conjecture(4, 100))
    print("conjecture m=6 n<=100:", conjecture(6, 100))
    if "--slow" in sys.argv:
        for m in range(4, 21, 2):
            bad = conjecture(m, 10000)
            print(f"conjecture m={m} n<=10000: violations={bad} N={bad[-1] + 1 if bad else 1}")


if __name__ == "__main__":
    main()
