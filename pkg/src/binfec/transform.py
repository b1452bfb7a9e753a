"""The h-point basis transform, its inverse, and polynomial operations.

forward() maps basis-domain coefficients (d_0, ..., d_{h-1}) to the h
evaluations of sum d_i X_i at the points indexed c ^ shift for
c = 0..h-1.  It runs lg(h) in-place butterfly levels; at level i each
pair (u, v) at stride 2^i becomes

    u' = u + f * v,   v' = u' + v,

where f is the precomputed normalized factor for the pair's block
combined with the shift.  When the block's evaluation point is the zero
element (block start == shift) the multiplication vanishes structurally
and u passes through untouched.  inverse() runs the levels in the
opposite order with the reformulated pair (v = u' + v', u = u' + f*v).

Every operation is exact; OpCounter instrumentation counts the field
additions and multiplications the butterfly schedule executes, which
for h-point transforms is

    shift outside the point set:  h lg h adds, (h/2) lg h muls
    shift zero:                   h lg h - h + 1 adds, (h/2) lg h - h + 1 muls
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import BasisTables


@dataclass
class CoeffVec:
    """Basis-domain coefficients; length must be a power of two."""

    data: list[int]

    def __len__(self) -> int:
        return len(self.data)


@dataclass
class EvalVec:
    """Evaluations at points indexed c ^ shift, c = 0..h-1."""

    data: list[int]
    shift: int = 0

    def __len__(self) -> int:
        return len(self.data)


@dataclass
class OpCounter:
    """Running totals of field additions and multiplications."""

    adds: int = 0
    muls: int = 0


def _check_size(bt: BasisTables, h: int, shift: int) -> None:
    if h < 1 or h & (h - 1):
        raise ValueError(f"transform size must be a power of two, got {h}")
    if h > bt.max_h:
        raise ValueError(f"transform size {h} exceeds table capacity {bt.max_h}")
    if not 0 <= shift < bt.ft.order:
        raise ValueError(f"shift {shift} outside field of size {bt.ft.order}")


def forward(bt: BasisTables, coeffs: CoeffVec, shift: int = 0,
            ops: OpCounter | None = None) -> EvalVec:
    """Transform coefficients into evaluations at points c ^ shift."""
    h = len(coeffs.data)
    _check_size(bt, h, shift)
    a = list(coeffs.data)
    _forward_inplace(bt, a, shift, ops)
    return EvalVec(a, shift)


def inverse(bt: BasisTables, evals: EvalVec,
            ops: OpCounter | None = None) -> CoeffVec:
    """Recover the coefficients whose forward transform is `evals`."""
    h = len(evals.data)
    _check_size(bt, h, evals.shift)
    a = list(evals.data)
    _inverse_inplace(bt, a, evals.shift, ops)
    return CoeffVec(a)


def forward_counted(bt: BasisTables, coeffs: CoeffVec,
                    shift: int = 0) -> tuple[EvalVec, OpCounter]:
    """forward() plus exact counts of the field operations executed."""
    ops = OpCounter()
    return forward(bt, coeffs, shift, ops), ops


def inverse_counted(bt: BasisTables, evals: EvalVec) -> tuple[CoeffVec, OpCounter]:
    """inverse() plus exact counts of the field operations executed."""
    ops = OpCounter()
    return inverse(bt, evals, ops), ops


def _forward_inplace(bt: BasisTables, a: list[int], shift: int,
                     ops: OpCounter | None) -> None:
    h = len(a)
    ft = bt.ft
    exp, log, m = ft.exp, ft.log, ft.mult_order
    levels = h.bit_length() - 1
    for i in range(levels - 1, -1, -1):
        half = 1 << i
        step = half << 1
        hat = bt.w_hat[i]
        hat_shift = bt.eval_w_hat(i, shift) if shift else 0
        # The evaluation point of a block is zero only where the block
        # start equals the shift; only there the multiply is skipped.
        zero_c = shift if shift < h and not shift & (step - 1) else -1
        for c in range(0, h, step):
            if c == zero_c:
                for j in range(c, c + half):
                    a[j + half] ^= a[j]
                if ops is not None:
                    ops.adds += half
                continue
            f = hat[c >> (i + 1)] ^ hat_shift
            if f:
                lf = log[f]
                for j in range(c, c + half):
                    v = a[j + half]
                    if v:
                        u = a[j] ^ exp[(log[v] + lf) % m]
                        a[j] = u
                    else:
                        u = a[j]
                    a[j + half] = u ^ v
            else:
                # zero factor: products vanish, u passes through
                for j in range(c, c + half):
                    a[j + half] ^= a[j]
            if ops is not None:
                ops.adds += 2 * half
                ops.muls += half


def _inverse_inplace(bt: BasisTables, a: list[int], shift: int,
                     ops: OpCounter | None) -> None:
    h = len(a)
    ft = bt.ft
    exp, log, m = ft.exp, ft.log, ft.mult_order
    levels = h.bit_length() - 1
    for i in range(levels):
        half = 1 << i
        step = half << 1
        hat = bt.w_hat[i]
        hat_shift = bt.eval_w_hat(i, shift) if shift else 0
        zero_c = shift if shift < h and not shift & (step - 1) else -1
        for c in range(0, h, step):
            if c == zero_c:
                for j in range(c, c + half):
                    a[j + half] ^= a[j]
                if ops is not None:
                    ops.adds += half
                continue
            f = hat[c >> (i + 1)] ^ hat_shift
            if f:
                lf = log[f]
                for j in range(c, c + half):
                    v = a[j] ^ a[j + half]
                    a[j + half] = v
                    if v:
                        a[j] ^= exp[(log[v] + lf) % m]
            else:
                for j in range(c, c + half):
                    a[j + half] ^= a[j]
            if ops is not None:
                ops.adds += 2 * half
                ops.muls += half


def degree(coeffs: CoeffVec) -> int | None:
    """Largest index with a nonzero coefficient; None for the zero vector.

    Valid because the i-th basis polynomial has degree exactly i.
    """
    for j in range(len(coeffs.data) - 1, -1, -1):
        if coeffs.data[j]:
            return j
    return None


def poly_mul(bt: BasisTables, a: CoeffVec, b: CoeffVec) -> CoeffVec:
    """Product of two basis-domain polynomials, returned at twice the size.

    Both inputs are zero-extended to 2h, transformed, multiplied
    pointwise, and inverse-transformed.  Exact whenever the product
    degree fits, which holds for any pair of size-h inputs.
    """
    h = len(a.data)
    if len(b.data) != h:
        raise ValueError("poly_mul operands must have equal length")
    h2 = 2 * h
    if h2 > bt.max_h:
        raise ValueError(f"product size {h2} exceeds table capacity {bt.max_h}")
    ea = forward(bt, CoeffVec(a.data + [0] * h), 0)
    eb = forward(bt, CoeffVec(b.data + [0] * h), 0)
    mul = bt.ft.mul
    prod = EvalVec([mul(x, y) for x, y in zip(ea.data, eb.data)], 0)
    return inverse(bt, prod)
