"""Pure-Python versions of the hot loops; same API as ``_speedups``.

A simplicial complex on vertices 1..n is encoded as an int whose bit ``F``
is set iff the face with vertex bitmask ``F`` belongs to it (vertex ``i`` is
bit ``i - 1``).
"""
from itertools import product


def delta_mask(gens, alpha):
    """Face mask of the degree-``alpha`` complex of the ideal with ``gens``."""
    n = len(alpha)
    full = (1 << n) - 1
    neg = 0
    for i, x in enumerate(alpha):
        if x < 0:
            neg |= 1 << i
    exceed = []
    for g in gens:
        m = 0
        for i in range(n):
            if g[i] > alpha[i]:
                m |= 1 << i
        exceed.append(m)
    mask = 0
    for face in range(full + 1):
        if face & neg:
            continue
        allowed = full & ~(face | neg)
        for m in exceed:
            if not m & allowed:
                break
        else:
            mask |= 1 << face
    return mask


def delta_masks_box(gens, lows, highs):
    """``[(alpha, delta_mask(gens, alpha))]`` over the box ``lows..highs`` inclusive."""
    axes = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    return [(alpha, delta_mask(gens, alpha)) for alpha in product(*axes)]


def enumerate_s(a):
    """Lattice points of the finite set carrying H^1, sorted lexicographically."""
    a1, a2, a3, a4, a5, a6 = a
    pts = []
    for y1 in range(a1):
        for y2 in range(a1 - y1):
            for y3 in range(a6):
                if y1 + y3 < a2 or y2 + y3 < a4:
                    continue
                for y4 in range(a6 - y3):
                    if y1 + y4 >= a3 and y2 + y4 >= a5:
                        pts.append((y1, y2, y3, y4))
    return pts
