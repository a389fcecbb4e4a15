"""Small bitmask helpers shared by the graph and oracle code."""

from __future__ import annotations

_TABLE_BITS = 12
_TABLE = [tuple(i for i in range(_TABLE_BITS) if m >> i & 1) for m in range(1 << _TABLE_BITS)]


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask < 4096:
        return _TABLE[mask]
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m

