from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ChowDescriptor:
    """Names the Chow variety of effective p-cycles of degree d in P^n."""

    p: int
    d: int
    n: int

    def __post_init__(self):
        if not 0 <= self.p <= self.n:
            raise ValueError(f"need 0 <= p <= n, got p={self.p}, n={self.n}")
        if self.d < 0:
            raise ValueError(f"degree must be >= 0, got {self.d}")

    def __str__(self):
        return f"C_{{{self.p},{self.d}}}(P^{self.n})"
