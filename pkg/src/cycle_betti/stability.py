"""Homotopy stability ranges and checkable stability certificates.

Complex suspension C(p, d, n) -> C(p+1, d, n+1) is an isomorphism on pi_k
for k <= 2p + 1, and the linear inclusion C(p, d, n) -> C(p, d, n+1) is an
isomorphism on pi_k for k <= 2(n - p).  A certificate is a finite chain of
such steps after which both bounds exceed k, so every further step is
admissible and pi_k agrees with the stable limit D(d).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

from .descriptor import ChowDescriptor

__all__ = [
    "IsoRanges",
    "RangeViolation",
    "OutOfRange",
    "BoundShortfall",
    "StepKind",
    "Step",
    "StabilityCertificate",
    "Verification",
    "LowHomotopy",
    "iso_ranges",
    "codim_bound",
    "certify_stability",
    "verify_certificate",
    "low_homotopy",
    "suspension_bound",
    "inclusion_bound",
]

DEFAULT_MARGIN = 2


class RangeViolation(ValueError):
    """A degree lies outside the range where the stable comparison holds."""


def suspension_bound(p: int) -> int:
    return 2 * p + 1


def inclusion_bound(p: int, n: int) -> int:
    return 2 * (n - p)


@dataclass(frozen=True)
class IsoRanges:
    suspension_max_k: int
    inclusion_max_k: int

    @property
    def stable_max_k(self) -> int:
        return min(self.suspension_max_k, self.inclusion_max_k)


def iso_ranges(p: int, n: int) -> IsoRanges:
    if p < 0 or p > n:
        raise ValueError(f"need 0 <= p <= n, got p={p}, n={n}")
    return IsoRanges(suspension_bound(p), inclusion_bound(p, n))


def codim_bound(p: int, e: int) -> int:
    """Lower bound C(p+e+1, e) on the complex codimension of the bad divisor locus."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if e < 1:
        raise ValueError(f"divisor degree must be >= 1, got {e}")
    return comb(p + e + 1, e)


class StepKind(str, enum.Enum):
    SUSPENSION = "suspension"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Step:
    kind: StepKind
    source: tuple[int, int]  # (p, n)
    target: tuple[int, int]
    bound_used: int


@dataclass(frozen=True)
class StabilityCertificate:
    start: ChowDescriptor
    k: int
    steps: tuple[Step, ...]

    @property
    def conclusion(self) -> str:
        s = self.start
        return f"pi_{self.k}(C_{{{s.p},{s.d}}}(P^{s.n})) = pi_{self.k}(D({s.d}))"


@dataclass(frozen=True)
class BoundShortfall:
    which_bound: StepKind
    needed: int
    have: int
    # smallest increase of p (suspension) or of n (inclusion) that admits k
    increase: int


class OutOfRange(RangeViolation):
    def __init__(self, desc: ChowDescriptor, k: int, shortfalls: list[BoundShortfall]):
        self.desc = desc
        self.k = k
        self.shortfalls = shortfalls
        parts = ", ".join(
            f"{s.which_bound.value} bound {s.have} < {s.needed}" for s in shortfalls
        )
        super().__init__(f"no certificate for k={k} on {desc}: {parts}")


def _apply(kind: StepKind, p: int, n: int) -> Step:
    if kind is StepKind.SUSPENSION:
        return Step(kind, (p, n), (p + 1, n + 1), suspension_bound(p))
    return Step(kind, (p, n), (p, n + 1), inclusion_bound(p, n))


def certify_stability(
    desc: ChowDescriptor, k: int, margin: int = DEFAULT_MARGIN
) -> StabilityCertificate:
    """Build a certificate that pi_k of ``desc`` equals pi_k of the stable space.

    Steps alternate, starting with whichever bound is tighter (suspension on
    a tie), and continue ``margin`` steps past the point where both bounds
    strictly exceed k.  Raises :class:`OutOfRange` when k is outside
    min(2p+1, 2(n-p)).
    """
    if k < 0:
        raise ValueError(f"homotopy degree must be >= 0, got {k}")
    if desc.d < 1:
        raise ValueError("stability certificates need degree d >= 1")
    if margin < 0:
        raise ValueError("margin must be >= 0")
    p, n = desc.p, desc.n
    ranges = iso_ranges(p, n)
    shortfalls = []
    if k > ranges.suspension_max_k:
        shortfalls.append(
            BoundShortfall(StepKind.SUSPENSION, k, ranges.suspension_max_k, k // 2 - p)
        )
    if k > ranges.inclusion_max_k:
        shortfalls.append(
            BoundShortfall(StepKind.INCLUSION, k, ranges.inclusion_max_k, (k + 1) // 2 - (n - p))
        )
    if shortfalls:
        raise OutOfRange(desc, k, shortfalls)

    if ranges.suspension_max_k <= ranges.inclusion_max_k:
        kind = StepKind.SUSPENSION
    else:
        kind = StepKind.INCLUSION
    steps: list[Step] = []
    beyond = 0
    while True:
        clear = suspension_bound(p) > k and inclusion_bound(p, n) > k
        kinds = {s.kind for s in steps}
        if clear and beyond >= margin and len(kinds) == 2:
            break
        if clear:
            beyond += 1
        step = _apply(kind, p, n)
        steps.append(step)
        p, n = step.target
        kind = StepKind.INCLUSION if kind is StepKind.SUSPENSION else StepKind.SUSPENSION
    return StabilityCertificate(desc, k, tuple(steps))


@dataclass(frozen=True)
class Verification:
    ok: bool
    step: int | None = None
    message: str = "ok"

    def __bool__(self):
        return self.ok


def verify_certificate(cert: StabilityCertificate) -> Verification:
    """Re-check a certificate from scratch, reporting the first failing step."""
    start, k = cert.start, cert.k
    if start.d < 1:
        return Verification(False, None, "degree must be >= 1")
    if not cert.steps:
        return Verification(False, None, "empty step list")
    here = (start.p, start.n)
    for i, step in enumerate(cert.steps):
        if step.source != here:
            return Verification(False, i, f"step starts at {step.source}, chain is at {here}")
        p, n = step.source
        if step.kind is StepKind.SUSPENSION:
            target, bound = (p + 1, n + 1), suspension_bound(p)
        elif step.kind is StepKind.INCLUSION:
            target, bound = (p, n + 1), inclusion_bound(p, n)
        else:
            return Verification(False, i, f"unknown step kind {step.kind!r}")
        if step.target != target:
            return Verification(False, i, f"{step.kind.value} must land on {target}")
        if step.bound_used != bound:
            return Verification(False, i, f"recorded bound {step.bound_used}, actual {bound}")
        if k > bound:
            return Verification(False, i, f"k={k} exceeds {step.kind.value} bound {bound}")
        here = target
    if k < 0 or k > min(suspension_bound(start.p), inclusion_bound(start.p, start.n)):
        return Verification(False, None, f"k={k} outside the stable range of the start")
    if {s.kind for s in cert.steps} != set(StepKind):
        return Verification(False, None, "certificate must use both suspension and inclusion")
    p, n = here
    if not (suspension_bound(p) > k and inclusion_bound(p, n) > k):
        return Verification(False, len(cert.steps) - 1, "final bounds do not strictly exceed k")
    return Verification(True)


class LowHomotopy(str, enum.Enum):
    TRIVIAL = "trivial"
    INFINITE_CYCLIC = "infinite-cyclic"
    POINT_SPACE = "point-space"


def low_homotopy(desc: ChowDescriptor, k: int) -> LowHomotopy:
    """pi_0, pi_1, pi_2 of a Chow variety; higher k is not covered."""
    if k < 0 or k > 2:
        raise ValueError(f"only k in 0..2 is known in general, got {k}")
    if k < 2:
        return LowHomotopy.TRIVIAL
    if desc.n == desc.p or desc.d == 0:
        return LowHomotopy.POINT_SPACE
    return LowHomotopy.INFINITE_CYCLIC
