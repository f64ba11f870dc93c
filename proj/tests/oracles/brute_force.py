#!/usr/bin/env python3
"""Brute-force reference counts for the C++ test suite.

Independent of the C++ code: elements are found by breadth-first search over
words, deduplicated by exact evaluation in the reflection representation, and
full commutativity is decided by closing each reduced word under all braid
moves and looking for a braid factor. Ball sizes are cross-checked against
Bott's formula for the Poincare series of an affine Weyl group.

Run:  python3 tests/oracles/brute_force.py
"""
from collections import deque


def ctilde(rank):
    m = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 1
    for i in range(rank - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    m[0][1] = m[1][0] = 4
    m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 4
    return m


def btype(rank):
    m = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 1
    for i in range(rank - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    m[0][1] = m[1][0] = 4
    return m


# a + b*sqrt2 as tuples
def qmul(x, y):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def qadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def coef(mst):
    # 2 B(a_s, a_t) = -2 cos(pi/m)
    return {1: (2, 0), 2: (0, 0), 3: (-1, 0), 4: (0, -1)}[mst]


def act(m, s, vec):
    # reflection s applied to a vector in simple-root coordinates
    r = len(m)
    c = (0, 0)
    for j in range(r):
        c = qadd(c, qmul(coef(m[s][j]), vec[j]))
    out = list(vec)
    out[s] = (out[s][0] - c[0], out[s][1] - c[1])
    return tuple(out)


def evaluate(m, word):
    # image of each simple root: columns of the matrix; key = tuple of columns
    r = len(m)
    cols = []
    for j in range(r):
        v = tuple((1, 0) if k == j else (0, 0) for k in range(r))
        for s in reversed(word):
            v = act(m, s, v)
        cols.append(v)
    return tuple(cols)


def ball(m, radius):
    """length -> list of (key, one reduced word) via BFS on words."""
    r = len(m)
    seen = {evaluate(m, ()): ()}
    levels = [[()]]
    for _ in range(radius):
        nxt = []
        for w in levels[-1]:
            for s in range(r):
                if w and w[-1] == s:
                    continue
                w2 = w + (s,)
                k = evaluate(m, w2)
                if k not in seen:
                    seen[k] = w2
                    nxt.append(w2)
        if not nxt:
            break
        levels.append(nxt)
    return levels


def braid_closure(m, word):
    r = len(m)
    start = tuple(word)
    seen = {start}
    q = deque([start])
    while q:
        w = q.popleft()
        # commutations and braid moves starting at position i
        for i in range(len(w) - 1):
            s, t = w[i], w[i + 1]
            if s == t:
                continue
            k = m[s][t]
            if i + k > len(w):
                continue
            seg = w[i:i + k]
            alt = tuple(s if j % 2 == 0 else t for j in range(k))
            if seg == alt:
                other = tuple(t if j % 2 == 0 else s for j in range(k))
                w2 = w[:i] + other + w[i + k:]
                if w2 not in seen:
                    seen.add(w2)
                    q.append(w2)
    return seen


def has_braid_factor(m, w):
    for i in range(len(w) - 1):
        s, t = w[i], w[i + 1]
        if s == t:
            continue
        k = m[s][t]
        if k < 3 or i + k > len(w):
            continue
        if w[i:i + k] == tuple(s if j % 2 == 0 else t for j in range(k)):
            return True
    return False


def is_fc(m, word):
    return not any(has_braid_factor(m, w) for w in braid_closure(m, word))


def bott_ctilde(n, upto):
    # C~_n affine Weyl group, finite part B_n with exponents 1,3,...,2n-1
    # P(q) = prod_i (1 - q^{e_i + 1}) / ((1 - q)(1 - q^{e_i}))
    series = [1] + [0] * upto

    def mul(a, b):
        out = [0] * (upto + 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if i + j > upto:
                    break
                out[i + j] += x * y
        return out

    def geometric(step):
        return [1 if k % step == 0 else 0 for k in range(upto + 1)]

    for i in range(1, n + 1):
        e = 2 * i - 1
        num = [0] * (upto + 1)
        num[0] = 1
        if e + 1 <= upto:
            num[e + 1] = -1
        series = mul(series, num)
        series = mul(series, geometric(1))
        series = mul(series, geometric(e))
    return series


def main():
    for rank, radius in ((3, 6), (3, 12), (4, 12)):
        m = ctilde(rank)
        levels = ball(m, radius)
        counts = [len(l) for l in levels]
        bott = bott_ctilde(rank - 1, radius)
        assert counts == bott, (counts, bott)
        fc = [sum(1 for w in l if is_fc(m, w)) for l in levels]
        print(f"C~ rank {rank} radius {radius}: ball per length {counts}"
              f" total {sum(counts)}")
        print(f"   FC per length {fc} total {sum(fc)}")

    m = btype(2)
    levels = ball(m, 10)
    fc = [w for l in levels for w in l if is_fc(m, w)]
    print("B2 elements", sum(len(l) for l in levels), "FC", sorted(fc, key=lambda w: (len(w), w)))

    # left descents of s1 t s1 in C~2 via all reduced words
    m = ctilde(3)
    words = braid_closure(m, (1, 0, 1))
    print("reduced words of s1 t s1:", sorted(words), "left descents", sorted({w[0] for w in words}))
    words = braid_closure(m, (1, 0, 1, 0))
    print("reduced words of s1 t s1 t:", sorted(words))

    # FC counts in C~2 up to length 10 and 8 (used by several tests)
    levels = ball(m, 10)
    fc10 = [sum(1 for w in l if is_fc(m, w)) for l in levels]
    print("C~2 FC per length up to 10:", fc10, "total", sum(fc10),
          "total l<=8:", sum(fc10[:9]), "total l<=6 (all):", sum(len(l) for l in levels[:7]))


if __name__ == "__main__":
    main()
