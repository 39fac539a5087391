#!/usr/bin/env python3
"""Independent Fraction-based recomputation of the plane-pi construction.

Prints the quantities that the C++ tests freeze as expected values. Run as a
ctest to make sure the frozen numbers still match this second route.
"""
import math
import sys
from fractions import Fraction as Fr


def basis(dim, i):
    return [Fr(int(k == i)) for k in range(dim)]


def centroid(pts):
    return [sum(c) / len(pts) for c in zip(*pts)]


def sub(p, q):
    return [a - b for a, b in zip(p, q)]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def sq(p, q):
    d = sub(p, q)
    return dot(d, d)


def scene(n):
    amb = n + 2
    e = [basis(amb, i) for i in range(amb)]
    A, C = e[0], e[n + 1]
    B = centroid(e[1:n + 1])
    F = centroid(e[0:n + 1])
    E = centroid(e[1:n + 2])
    D = centroid(e)
    G = [2 * b - x for b, x in zip(B, E)]
    # H: B + t(D-B) = E + s(F-E); solve 2x2 normal equations with Cramer.
    u, w, r = sub(D, B), sub(E, F), sub(E, B)
    a11, a12, a22 = dot(u, u), dot(u, w), dot(w, w)
    b1, b2 = dot(u, r), dot(w, r)
    det = a11 * a22 - a12 * a12
    t = (b1 * a22 - a12 * b2) / det
    s = (a11 * b2 - a12 * b1) / det
    H = [b + t * x for b, x in zip(B, u)]
    return dict(A=A, B=B, C=C, D=D, E=E, F=F, G=G, H=H, t=t, s=s)


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def main():
    sc = scene(2)
    for k in "ABCDEFGH":
        print(k, fmt(sc[k]))
    print("t", sc["t"], "s", sc["s"])
    B, C, F, E, D = sc["B"], sc["C"], sc["F"], sc["E"], sc["D"]
    print("dot(F-B,C-B)", dot(sub(F, B), sub(C, B)))
    print("sq(E,B)", sq(E, B))
    print("|CD|^2", sq(C, D), "|DF|^2", sq(D, F))
    cw = dot(sub(B, F), sub(C, B)) ** 2 / (dot(sub(B, F), sub(B, F)) * dot(sub(C, B), sub(C, B)))
    print("cos_sq(B-F,C-B)", cw)
    # altitude lengths and well-built ratios in the standard embedding
    for n in (1, 2, 3):
        e = [basis(n + 1, i) for i in range(n + 1)]
        foot = centroid(e[1:])
        O = centroid(e)
        print("n", n, "alt_sq", sq(e[0], foot), "ratio", sq(e[0], O) / sq(O, foot))
    O = centroid([basis(4, i) for i in range(4)])
    print("central n=3", dot(sub(basis(4, 0), O), sub(basis(4, 1), O)), sq(basis(4, 0), O))
    for n in range(2, 9):
        dih = math.degrees(math.acos(1 / n))
        cen = math.degrees(math.acos(-1 / n))
        print(f"{n},1/{n},{dih:.6f},-1/{n},{cen:.6f}")
    ok = sc["H"] == [Fr(1, 6), Fr(1, 3), Fr(1, 3), Fr(1, 6)] and sc["t"] == Fr(2, 3) and sc["s"] == Fr(1, 2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
