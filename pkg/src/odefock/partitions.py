"""Partitions and the vertical-strip moves used by the Pieri rule.

A partition is stored dense, as a tuple of weakly decreasing positive parts
with trailing zeros stripped.  Strip enumeration returns results in a fixed
canonical order (lexicographic descending) so downstream expansions are
deterministic.
"""

from itertools import combinations

from .errors import NotWeaklyDecreasing


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 0:
                raise NotWeaklyDecreasing(f"negative part in {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"{parts!r} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    def length(self):
        return len(self)

    def weight(self):
        return sum(self)

    def part(self, k):
        """k-th part, 0-indexed, zero beyond the stored length."""
        return self[k] if 0 <= k < len(self) else 0

    def __str__(self):
        return ",".join(str(p) for p in self) if self else "0"

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text):
        """Inverse of str(): "3,2,1" -> (3,2,1), "0" -> ()."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        return cls(int(piece) for piece in text.split(","))


EMPTY = Partition()


def make_partition(parts):
    """Normal form of a part list; rejects out-of-order input."""
    return Partition(parts)


def add_vertical_strip(lam, i, r):
    """All partitions obtained from lam by adding a vertical strip of size i
    within the first r rows.  Empty when i > r or i < 0 is rejected upstream.
    """
    if i < 0:
        raise ValueError("strip size must be non-negative")
    if i > r or lam.length() > r:
        return []
    padded = tuple(lam.part(k) for k in range(r))
    out = []
    for rows in combinations(range(r), i):
        grown = list(padded)
        for k in rows:
            grown[k] += 1
        if all(a >= b for a, b in zip(grown, grown[1:])):
            out.append(Partition(grown))
    out.sort(reverse=True)
    return out


def remove_vertical_strip(lam, i):
    """All partitions obtained from lam by removing a vertical strip of size i
    (each part lowered by at most one).  Empty when no strip exists.
    """
    if i < 0:
        raise ValueError("strip size must be non-negative")
    if i > len(lam):
        return []
    out = []
    for rows in combinations(range(len(lam)), i):
        shrunk = list(lam)
        for k in rows:
            shrunk[k] -= 1
        if all(a >= b for a, b in zip(shrunk, shrunk[1:])):
            out.append(Partition(shrunk))
    out.sort(reverse=True)
    return out


def partitions_up_to(max_weight, max_length=None):
    """All partitions of weight <= max_weight (and length <= max_length),
    in a deterministic order.  Enumeration helper for the verification suites.
    """
    found = [EMPTY]
    def grow(prefix, remaining, cap):
        for p in range(min(cap, remaining), 0, -1):
            cand = prefix + [p]
            if max_length is None or len(cand) <= max_length:
                found.append(Partition(cand))
                grow(cand, remaining - p, p)
    grow([], max_weight, max_weight)
    found.sort()
    return found
