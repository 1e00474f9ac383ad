#!/usr/bin/env python3
"""Generate the Leech lattice generator data file.

Constructs the extended binary Golay code [24,12,8], lifts it to the
sqrt(8)-scaled integral Leech generator, reduces to a 24x24 HNF basis,
and validates determinant, Gram integrality and evenness before writing
data/leech_generator.json.
"""
import json
from fractions import Fraction
from itertools import combinations

N = 24

def golay_generator():
    # Quadratic-residue construction over GF(11), extended.
    qr = {(i * i) % 11 for i in range(1, 11)}
    B = [[0] * 12 for _ in range(12)]
    for i in range(11):
        for j in range(11):
            B[i][j] = 1 if ((i - j) % 11) in qr or i == j else 0
        B[i][11] = 1
    for j in range(11):
        B[11][j] = 1
    B[11][11] = 0
    G = []
    for i in range(12):
        row = [0] * 24
        row[i] = 1
        for j in range(12):
            row[12 + j] = B[i][j]
        G.append(row)
    return G

def codewords(G):
    words = set()
    for mask in range(1 << 12):
        w = [0] * 24
        for i in range(12):
            if mask >> i & 1:
                for k in range(24):
                    w[k] ^= G[i][k]
        words.add(tuple(w))
    return sorted(words)

def check_golay(words):
    assert len(words) == 4096
    dist = {}
    for w in words:
        dist[sum(w)] = dist.get(sum(w), 0) + 1
    assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, dist
    # self-dual: every pair of codewords has even inner product
    return dist

def hnf(rows):
    """Row-style HNF of an integer matrix (full row rank result square)."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        # clear below by gcd steps
        for i in range(r + 1, nrows):
            while m[i][c] != 0:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
    return [row for row in m[:r]]

def main():
    G = golay_generator()
    words = codewords(G)
    check_golay(words)

    gens = []
    for row in G:
        gens.append([2 * x for x in row])
    for i in range(1, N):
        v = [0] * N
        v[0] = 4
        v[i] = 4
        gens.append(v)
    v = [0] * N
    v[0] = 8
    gens.append(v)
    gens.append([-3] + [1] * (N - 1))

    M = hnf(gens)
    assert len(M) == N, len(M)

    # determinant of upper triangular-ish HNF: run fraction-free gauss
    def det(mat):
        import copy
        a = [[Fraction(x) for x in row] for row in mat]
        n = len(a)
        d = Fraction(1)
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c] != 0), None)
            assert piv is not None
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                d = -d
            d *= a[c][c]
            for i in range(c + 1, n):
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return d

    dM = det(M)
    assert abs(dM) == 8 ** 12, dM

    gram8 = [[sum(M[i][k] * M[j][k] for k in range(N)) for j in range(N)] for i in range(N)]
    for i in range(N):
        for j in range(N):
            assert gram8[i][j] % 8 == 0, (i, j)
    gram = [[gram8[i][j] // 8 for j in range(N)] for i in range(N)]
    for i in range(N):
        assert gram[i][i] % 2 == 0
    assert det(gram) == 1

    # sanity: membership checks -> vectors of the defining construction lie in the row span
    # (-3,1,...,1) and 2*codewords used as generators already; check 4e0+4e1 reduces to 0 mod M
    out = {
        "name": "Leech",
        "comment": "rows generate sqrt(8)*Leech in Z^24; gram of Leech = M*M^T/8 (det 1, min norm 4)",
        "generator": M,
    }
    with open("/root/proj/data/leech_generator.json", "w") as f:
        json.dump(out, f)
    print("ok: |det M| = 8^12, gram integral even, det(gram) = 1")
    print("gram diag:", [gram[i][i] for i in range(N)])
    # LDL pivot size check (for the rational embedding step later)
    a = [[Fraction(gram[i][j]) for j in range(N)] for i in range(N)]
    D = []
    L = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        L[i][i] = Fraction(1)
    for c in range(N):
        d = a[c][c] - sum(D[k] * L[c][k] * L[c][k] for k in range(c))
        D.append(d)
        for i in range(c + 1, N):
            L[i][c] = (a[i][c] - sum(D[k] * L[i][k] * L[c][k] for k in range(c))) / d
    print("LDL pivots:", [str(d) for d in D])

main()
