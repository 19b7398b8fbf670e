"""Small independent oracles shared by the unit and acceptance tests."""
from tamegl.algkernel import LaurentPoly


def cech_oracle(n):
    """Weight-by-weight Cech complex C0 = O(U_X) + O(U_Y) -> C1 = O(U_XY) for O(n).

    In torus weight w the only monomial is X^i Y^j with i + j = n, i - j = w.
    It lies in O(U_Y) iff i >= 0 and in O(U_X) iff j >= 0; O(U_XY) always has it.
    """
    h0, h1 = {}, {}
    for w in range(-abs(n) - 4, abs(n) + 5):
        if (n + w) % 2:
            continue
        i, j = (n + w) // 2, (n - w) // 2
        c0 = (i >= 0) + (j >= 0)
        rank = 1 if c0 else 0
        if c0 - rank:
            h0[w] = c0 - rank
        if 1 - rank:
            h1[w] = 1 - rank
    return LaurentPoly(h0), LaurentPoly(h1)
