"""Formal derivative of a basis-domain polynomial.

In characteristic 2 the derivative of each basis polynomial X_i
collapses to a sum of lower basis polynomials scaled by the constants
W'_l, so the derivative of sum d_i X_i is again basis-domain:

    out[j] = sum over l not in bits(j), j + 2^l < h  of  W'_l * d[j + 2^l]

derivative_direct() computes that straight, costing up to lg(h)
multiplications per coefficient.  derivative_fast() folds the W'_l
factors into the subset products B_i precomputed in BasisTables:
scaling the inputs by B_i first makes every inner sum factor-free, and
one multiply by 1/B_j finishes each output, for at most 2h
multiplications total.  Both produce identical output.

Coefficients at or beyond the vector length are treated as zero, which
is the only sound reading for a polynomial of degree below h.
"""

from __future__ import annotations

from .basis import BasisTables
from .transform import CoeffVec, OpCounter


def derivative_direct(bt: BasisTables, coeffs: CoeffVec) -> CoeffVec:
    """Derivative by the direct per-coefficient formula."""
    d = coeffs.data
    h = len(d)
    levels = h.bit_length() - 1
    mul = bt.ft.mul
    w_prime = bt.w_prime
    out = [0] * h
    for j in range(h):
        acc = 0
        for l in range(levels):
            if j >> l & 1:
                continue
            src = j + (1 << l)
            if src < h and d[src]:
                acc ^= mul(w_prime[l], d[src])
        out[j] = acc
    return CoeffVec(out)


def derivative_fast(bt: BasisTables, coeffs: CoeffVec,
                    ops: OpCounter | None = None) -> CoeffVec:
    """Derivative via pre/post scaling; at most 2h multiplications."""
    d = coeffs.data
    h = len(d)
    levels = h.bit_length() - 1
    mul = bt.ft.mul
    b_prod = bt.b_prod
    b_inv = bt.b_prod_inv

    scaled = [mul(di, b_prod[i]) for i, di in enumerate(d)]
    if ops is not None:
        ops.muls += h

    out = [0] * h
    for j in range(h):
        acc = 0
        terms = 0
        for l in range(levels):
            if j >> l & 1:
                continue
            src = j + (1 << l)
            if src < h:
                acc ^= scaled[src]
                terms += 1
        if ops is not None and terms > 1:
            ops.adds += terms - 1
        if acc:
            out[j] = mul(acc, b_inv[j])
            if ops is not None:
                ops.muls += 1
    return CoeffVec(out)


def w_prime_const(bt: BasisTables, l: int) -> int:
    """The constant derivative W'_l of the normalized level-l factor."""
    return bt.w_prime[l]
