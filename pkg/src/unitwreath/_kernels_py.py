"""Pure-Python GF(2) convolution kernel.

Algebra elements are int bitsets over the group's element index.  The
product toggles one output bit per (support, support) pair via the Cayley
table, which is the hot loop of every unit-group closure.
"""

from __future__ import annotations

IMPL = "python"


def bit_indices(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


class Convolver:
    """GF(2) convolution over a fixed multiplication table."""

    def __init__(self, table: list[list[int]]):
        self.order = len(table)
        self._rows = [list(row) for row in table]

    def convolve(self, ubits: int, vbits: int) -> int:
        v_idx = bit_indices(vbits)
        acc = 0
        rows = self._rows
        while ubits:
            low = ubits & -ubits
            row = rows[low.bit_length() - 1]
            for j in v_idx:
                acc ^= 1 << row[j]
            ubits ^= low
        return acc
