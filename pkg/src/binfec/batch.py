"""Whole-file codec: every stripe of a file encoded or decoded at once.

Stripes are independent codewords that share one butterfly schedule, so
the shard CLI processes them as columns of a (stripes x n) numpy matrix
instead of looping the scalar codec per stripe.  Each butterfly level
applies the same block factors as the scalar transform, just to column
slices; the arithmetic and the results are identical symbol for symbol
(tests pin this against the scalar path).  Output ordering is
deterministic: row s is always stripe s.
"""

from __future__ import annotations

import numpy as np

from .basis import BasisTables
from .rs import CodeParams, TooManyErasuresError
from .walsh import locator_values


class BatchCodec:
    """Matrix encoder/decoder for one (CodeParams, BasisTables) pair."""

    def __init__(self, cp: CodeParams, bt: BasisTables):
        if bt.ft.r != cp.r:
            raise ValueError(f"basis tables built for r={bt.ft.r}, code needs r={cp.r}")
        if bt.max_h < cp.n:
            raise ValueError(f"basis tables capacity {bt.max_h} below n={cp.n}")
        self.cp = cp
        self.bt = bt
        self.ft = bt.ft
        self._m = bt.ft.mult_order
        self._exp = np.asarray(bt.ft.exp, dtype=np.uint16)
        self._log = np.asarray(bt.ft.log, dtype=np.int64)
        n = cp.n
        levels = n.bit_length() - 1
        # Column index pairs for the derivative: at level l, dst columns
        # with bit l clear pull from dst + 2^l.
        self._deriv_dst = []
        for l in range(levels):
            js = np.arange(n)
            js = js[((js >> l) & 1 == 0) & (js + (1 << l) < n)]
            self._deriv_dst.append(js)
        self._b_prod = np.asarray(bt.b_prod[:n], dtype=np.uint16)
        self._b_inv = np.asarray(bt.b_prod_inv[:n], dtype=np.uint16)

    # -- field helpers on matrices --------------------------------------

    def _mul_scalar(self, v: np.ndarray, f: int) -> np.ndarray:
        """Elementwise v * f for one field scalar f."""
        if f == 0:
            return np.zeros_like(v)
        out = self._exp[(self._log[v] + self.ft.log[f]) % self._m]
        out[v == 0] = 0
        return out

    def _mul_row(self, a: np.ndarray, row: np.ndarray) -> np.ndarray:
        """Elementwise a[s, j] * row[j] with zero handling."""
        out = self._exp[(self._log[a] + self._log[row]) % self._m]
        out[(a == 0) | (row == 0)] = 0
        return out

    # -- transforms on matrices (columns = codeword positions) ----------

    def _forward_inplace(self, a: np.ndarray, shift: int) -> None:
        h = a.shape[1]
        bt = self.bt
        for i in range((h.bit_length() - 1) - 1, -1, -1):
            half = 1 << i
            step = half << 1
            hat = bt.w_hat[i]
            hat_shift = bt.eval_w_hat(i, shift) if shift else 0
            zero_c = shift if shift < h and not shift & (step - 1) else -1
            for c in range(0, h, step):
                u = a[:, c:c + half]
                v = a[:, c + half:c + step]
                if c != zero_c:
                    f = hat[c >> (i + 1)] ^ hat_shift
                    if f:
                        u ^= self._mul_scalar(v, f)
                v ^= u

    def _inverse_inplace(self, a: np.ndarray, shift: int) -> None:
        h = a.shape[1]
        bt = self.bt
        for i in range(h.bit_length() - 1):
            half = 1 << i
            step = half << 1
            hat = bt.w_hat[i]
            hat_shift = bt.eval_w_hat(i, shift) if shift else 0
            zero_c = shift if shift < h and not shift & (step - 1) else -1
            for c in range(0, h, step):
                u = a[:, c:c + half]
                v = a[:, c + half:c + step]
                v ^= u
                if c != zero_c:
                    f = hat[c >> (i + 1)] ^ hat_shift
                    if f:
                        u ^= self._mul_scalar(v, f)

    def _derivative(self, a: np.ndarray) -> np.ndarray:
        scaled = self._mul_row(a, self._b_prod)
        acc = np.zeros_like(a)
        for l, js in enumerate(self._deriv_dst):
            acc[:, js] ^= scaled[:, js + (1 << l)]
        return self._mul_row(acc, self._b_inv)

    # -- public API ------------------------------------------------------

    def encode(self, messages: np.ndarray) -> np.ndarray:
        """Encode a (stripes x k) message matrix into (stripes x n)."""
        cp = self.cp
        s, width = messages.shape
        if width != cp.k:
            raise ValueError(f"message width {width} != k={cp.k}")
        coeffs = messages.astype(np.uint16, copy=True)
        self._inverse_inplace(coeffs, 0)
        out = np.empty((s, cp.n), dtype=np.uint16)
        out[:, :cp.k] = messages
        for i in range(1, cp.n // cp.k):
            block = coeffs.copy()
            self._forward_inplace(block, i * cp.k)
            out[:, i * cp.k:(i + 1) * cp.k] = block
        return out

    def decode(self, received: np.ndarray, erased: set[int]) -> np.ndarray:
        """Recover the (stripes x k) messages; erased columns are ignored."""
        cp = self.cp
        n, k = cp.n, cp.k
        if received.shape[1] != n:
            raise ValueError(f"received width {received.shape[1]} != n={n}")
        if not erased:
            return received[:, :k].astype(np.uint16, copy=True)
        if len(erased) > n - k:
            raise TooManyErasuresError(
                f"{len(erased)} erasures exceed repair capacity {n - k}")

        loc = locator_values(self.ft, erased)
        pi_row = np.zeros(n, dtype=np.uint16)
        for j, pi in loc.pi_bar.items():
            pi_row[j] = pi

        phi = self._mul_row(received.astype(np.uint16, copy=False), pi_row)
        self._inverse_inplace(phi, 0)
        dcoeffs = self._derivative(phi)
        self._forward_inplace(dcoeffs, 0)

        out = received[:, :k].astype(np.uint16, copy=True)
        for j in sorted(erased):
            if j < k:
                out[:, j] = self._mul_scalar(dcoeffs[:, j],
                                             self.ft.inv(loc.pi_prime[j]))
        return out
