"""Independent reference computations used to check the library."""

import itertools

from gqc import vec_to_polyvec
from gqc.linalg import nullspace


def codewords(field, G, n):
    """All F_q-combinations of the rows of G (small codes only)."""
    seen = set()
    for coeffs in itertools.product(range(field.q), repeat=len(G)):
        c = [0] * n
        for a, row in zip(coeffs, G):
            if a:
                for j, x in enumerate(row):
                    if x:
                        c[j] = field.add(c[j], field.mul(a, x))
        seen.add(tuple(c))
    return seen


def minimal_diagonal_degrees(field, H, profile):
    """deg g_ii by exhaustive search over the code with parity checks H.

    g_ii has least degree among i-th components of closure elements that
    vanish in components 1..i-1; if no codeword qualifies, X_i does.
    """
    G = nullspace(field, H, profile.n)
    words = [vec_to_polyvec(list(c), profile) for c in codewords(field, G, profile.n)]
    degs = []
    for i, l in enumerate(profile.lengths):
        best = l
        for w in words:
            if all(not w[j] for j in range(i)) and w[i]:
                best = min(best, int(w[i].deg))
        degs.append(best)
    return degs
