"""Erasure-locator evaluation via Walsh-Hadamard transforms.

The locator polynomial of an erasure set E is the product of (x + e)
over the erased elements e.  Its value at every field point, and the
value of its formal derivative at every erased point, share one
formula in the log domain: a convolution of the erasure indicator with
the discrete-log table, indexed by XOR.  The Walsh-Hadamard transform
diagonalizes XOR-convolution, so both sets of values come out of two
length-2^r transforms over the integers mod 2^r - 1 plus pointwise
work.  Because 2^r is congruent to 1 modulo 2^r - 1, the transform is
its own inverse and no normalization step exists.

The log table's transform depends only on the field, so it is computed
once per FieldTables and cached.
"""

from __future__ import annotations

import weakref
from collections.abc import Iterable
from dataclasses import dataclass

from .field import FieldTables

# ResidueVec: a list of ints in [0, modulus), transformed in place.
ResidueVec = list[int]


@dataclass
class LocatorValues:
    """Locator values split by position class.

    pi_bar[j] is the locator value at j for every surviving position;
    pi_prime[j] is the locator's formal derivative at j for every
    erased position.  Both are nonzero for distinct erasures.
    """

    pi_bar: dict[int, int]
    pi_prime: dict[int, int]


def fwht(data: ResidueVec, modulus: int) -> ResidueVec:
    """In-place Walsh-Hadamard transform over Z_modulus.

    Length must be a power of two; each butterfly maps (a, b) to
    (a + b, a - b) reduced into [0, modulus).
    """
    n = len(data)
    if n & (n - 1):
        raise ValueError(f"length must be a power of two, got {n}")
    half = 1
    while half < n:
        step = half << 1
        for c in range(0, n, step):
            for j in range(c, c + half):
                x = data[j]
                y = data[j + half]
                data[j] = (x + y) % modulus
                data[j + half] = (x - y) % modulus
        half = step
    return data


_fwht_log_cache: "weakref.WeakKeyDictionary[FieldTables, list[int]]" = (
    weakref.WeakKeyDictionary()
)


def _fwht_of_log(ft: FieldTables) -> list[int]:
    cached = _fwht_log_cache.get(ft)
    if cached is None:
        cached = fwht(list(ft.log), ft.mult_order)
        _fwht_log_cache[ft] = cached
    return cached


def locator_values(ft: FieldTables, erasures: Iterable[int]) -> LocatorValues:
    """Locator values for an erasure set, all positions at once.

    Never forms the locator polynomial itself: works entirely in the
    log domain, where products over erased elements become sums.  The
    erased positions contribute log(0) = 0 to their own entry, which is
    exactly what turns that entry into the derivative value.
    """
    positions = list(erasures)
    erased = set(positions)
    if not erased:
        raise ValueError("erasure set must not be empty")
    if len(erased) != len(positions):
        raise ValueError("duplicate erasure positions")
    n = ft.order
    if len(erased) > n - 1:
        raise ValueError("erasure set must leave at least one survivor")
    for e in erased:
        if not 0 <= e < n:
            raise ValueError(f"erasure position {e} outside field of size {n}")

    m = ft.mult_order
    indicator = [0] * n
    for e in erased:
        indicator[e] = 1
    fwht(indicator, m)
    flog = _fwht_of_log(ft)
    mixed = [(a * b) % m for a, b in zip(indicator, flog)]
    fwht(mixed, m)

    exp = ft.exp
    pi_bar: dict[int, int] = {}
    pi_prime: dict[int, int] = {}
    for j in range(n):
        if j in erased:
            pi_prime[j] = exp[mixed[j]]
        else:
            pi_bar[j] = exp[mixed[j]]
    return LocatorValues(pi_bar, pi_prime)
