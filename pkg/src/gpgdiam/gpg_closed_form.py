"""Closed-form GPG diameters: case dispatch, the per-case formulas, upper bounds.

Every formula is exact integer arithmetic. The dispatch assigns exactly one
case tag per (n, s); tags whose formula pins the diameter outright are
preferred over the quotient<=remainder formula (which leaves the +1/+2 gap
open), and anything not covered by a formula falls back to the distance
engine plus the gap classifier, so the dispatch is total.

The three parity cases with an odd ring size are only applied from n = 9
upward even where their nominal ranges start lower: rings of size 5 and 7
always have gap 1, which contradicts the gap-2 values those formulas
produce at (5,2), (7,2) and (7,3). Those three instances route to Fallback
and get their (verified) values from the distance engine instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .circulant_distance import circulant_diameter
from .core_graphs import DerivedCase, GpgParams, derive_case, normalize_s
from .epsilon_classifier import classify_epsilon


class CaseKind(str, enum.Enum):
    GAMMA_ZERO = "GammaZero"
    EVEN_ODD = "EvenOdd"
    EVEN_EVEN = "EvenEven"
    ODD_ODD = "OddOdd"
    ODD_EVEN = "OddEven"
    LAMBDA_LE_GAMMA = "LambdaLeGamma"
    SPECIAL_4P = "Special4p"
    FALLBACK = "Fallback"


@dataclass(frozen=True)
class CaseTag:
    kind: CaseKind
    derived: DerivedCase


@dataclass(frozen=True)
class PValues:
    """Auxiliary floor expressions for the quotient<=remainder case."""

    p0: int
    p1: int
    p2: int
    p3: int
    e1: int


@dataclass(frozen=True)
class DiameterResult:
    d_circulant: int
    d_gpg: int
    epsilon: int
    method: CaseTag
    witnesses: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.epsilon not in (1, 2):
            raise ValueError(f"epsilon must be 1 or 2, got {self.epsilon}")
        if self.d_gpg != self.d_circulant + self.epsilon:
            raise ValueError(
                f"inconsistent result: d_gpg={self.d_gpg}, "
                f"d_circulant={self.d_circulant}, epsilon={self.epsilon}"
            )


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def classify_case(n: int, s: int) -> CaseTag:
    """Assign the unique formula case for normalized valid (n, s)."""
    GpgParams(n, s)
    d = derive_case(n, s)
    kind = CaseKind.FALLBACK
    if d.gamma == 0:
        kind = CaseKind.GAMMA_ZERO
    elif n % 4 == 0 and s == n // 2 - 1 and n // 4 > 2:
        kind = CaseKind.SPECIAL_4P
    elif d.lam > d.gamma:
        # Parity formulas; odd ring sizes only from 9 up (size-5 and size-7
        # rings always have gap 1, which these formulas contradict).
        if n % 2 == 0 and s % 2 == 1 and n >= 10 and s >= 3:
            kind = CaseKind.EVEN_ODD
        elif n % 2 == 0 and s % 2 == 0 and n >= 8 and s >= 4:
            kind = CaseKind.EVEN_EVEN
        elif n % 2 == 1 and s % 2 == 1 and n >= 9 and s >= 3:
            kind = CaseKind.ODD_ODD
        elif n % 2 == 1 and s % 2 == 0 and n >= 9:
            kind = CaseKind.ODD_EVEN
    elif d.b is not None and d.b > 0 and d.b <= d.a * d.lam + 1:
        kind = CaseKind.LAMBDA_LE_GAMMA
    return CaseTag(kind=kind, derived=d)


def p_values(d: DerivedCase) -> PValues:
    if d.gamma <= 0 or d.b is None or d.b <= 0:
        raise ValueError(
            f"p-values need gamma > 0 and b > 0, got gamma={d.gamma}, b={d.b}"
        )
    p0 = (d.lam + d.gamma) // 2
    p1 = (d.gamma - d.b + (d.a + 1) * d.lam + 1) // 2
    p2 = (d.gamma + d.b + (d.a - 1) * d.lam + 1) // 2
    p3 = (d.b + d.a * d.lam + 1) // 2
    e1 = min(max(p1, p3), max(p0, p2))
    return PValues(p0=p0, p1=p1, p2=p2, p3=p3, e1=e1)


def diameter_gamma0(lam: int, s: int) -> int:
    """Ring size a multiple of the skip: D = floor((lam + s + 3) / 2)."""
    if lam < 3:
        raise ValueError(f"need lam >= 3, got {lam}")
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    return (lam + s + 3) // 2


def diameter_even_odd(n: int, s: int) -> int:
    d = derive_case(n, s)
    if n % 2 or s % 2 == 0 or n < 10 or s < 3 or not d.lam > d.gamma > 0:
        raise ValueError(f"even-ring/odd-skip formula does not apply to (n={n}, s={s})")
    trim = min(_ceil_half(d.gamma), _ceil_half(s - d.gamma + 1)) - 3
    return _ceil_half(d.lam) + (s - 1) // 2 - trim


def diameter_even_even(n: int, s: int) -> int:
    d = derive_case(n, s)
    if n % 2 or s % 2 or n < 8 or s < 4 or not d.lam > d.gamma > 0:
        raise ValueError(f"even-ring/even-skip formula does not apply to (n={n}, s={s})")
    # gamma == s//2 must take the ceil(lam/2) branch: the two branches agree
    # there for even lam but the floor branch is one short for odd lam
    # (BFS check at (14,4): 5, floor branch gives 4).
    if d.gamma <= s // 2:
        return _ceil_half(d.lam) + (s - d.gamma) // 2 + 2
    return d.lam // 2 + d.gamma // 2 + 2


def diameter_odd_odd(n: int, s: int) -> int:
    d = derive_case(n, s)
    if n % 2 == 0 or s % 2 == 0 or n < 9 or s < 3 or not d.lam > d.gamma > 0:
        raise ValueError(f"odd-ring/odd-skip formula does not apply to (n={n}, s={s})")
    trim = min(_ceil_half(d.gamma + 1), _ceil_half(s - d.gamma + 2)) - 3
    return _ceil_half(d.lam) + (s - 1) // 2 - trim


def diameter_odd_even(n: int, s: int) -> int:
    d = derive_case(n, s)
    if n % 2 == 0 or s % 2 or n < 9 or not d.lam > d.gamma > 0:
        raise ValueError(f"odd-ring/even-skip formula does not apply to (n={n}, s={s})")
    if d.gamma in (1, s - 1):
        return _ceil_half(d.lam) + (s + 2) // 2
    # gamma == s//2 must take the floor(lam/2) branch: the two branches agree
    # there for odd lam but the last branch is one short for even lam
    # (BFS check at (27,6): 6, last branch gives 5).
    if 3 <= d.gamma <= s // 2:
        return d.lam // 2 + (s - d.gamma + 5) // 2
    return _ceil_half(d.lam) + (d.gamma + 3) // 2


def diameter_lambda_le_gamma(n: int, s: int, epsilon: int) -> int:
    """Quotient <= remainder case; the gap must be supplied by the classifier."""
    if epsilon not in (1, 2):
        raise ValueError(f"epsilon must be 1 or 2, got {epsilon}")
    d = derive_case(n, s)
    if d.gamma == 0 or d.lam > d.gamma:
        raise ValueError(f"need lam <= gamma > 0, got (n={n}, s={s})")
    if d.b is None or d.b == 0 or d.b > d.a * d.lam + 1:
        raise ValueError(f"need 0 < b <= a*lam + 1, got b={d.b} at (n={n}, s={s})")
    pv = p_values(d)
    if pv.p1 == pv.p2 and ((d.gamma + d.b) * (d.a * d.lam - d.lam + 1)) % 2 == 1:
        return pv.p1 - 1 + epsilon
    return pv.e1 + epsilon


def diameter_special_4p(p: int) -> int:
    """The (4p, 2p-1) family: D = p + 1, valid for p > 2."""
    if p <= 2:
        raise ValueError(f"need p > 2, got p={p}")
    return p + 1


def upper_bound_circulant(n: int, s: int) -> int:
    """D(C_n(1,s)) <= floor(floor(n/2)/s) + ceil(s/2)."""
    s = normalize_s(n, s)
    return (n // 2) // s + _ceil_half(s)


def upper_bound_gpg(n: int, s: int) -> int:
    """Best of the three known circulant bounds, plus 2 for the spoke hops."""
    s = normalize_s(n, s)
    d = derive_case(n, s)
    bound = min(
        max(d.lam + 1, d.gamma - 2, s - d.gamma - 1),
        (n + 2) // 4,
        upper_bound_circulant(n, s),
    )
    return bound + 2


def gpg_diameter(n: int, s: int) -> DiameterResult:
    """Exact D(GPG(n,s)) with provenance: formula when a case applies,
    distance engine + gap classifier otherwise."""
    s = normalize_s(n, s)
    tag = classify_case(n, s)
    d = tag.derived
    circ = circulant_diameter(n, s)
    kind = tag.kind
    if kind is CaseKind.GAMMA_ZERO:
        d_gpg = diameter_gamma0(d.lam, s)
    elif kind is CaseKind.SPECIAL_4P:
        d_gpg = diameter_special_4p(n // 4)
    elif kind is CaseKind.EVEN_ODD:
        d_gpg = diameter_even_odd(n, s)
    elif kind is CaseKind.EVEN_EVEN:
        d_gpg = diameter_even_even(n, s)
    elif kind is CaseKind.ODD_ODD:
        d_gpg = diameter_odd_odd(n, s)
    elif kind is CaseKind.ODD_EVEN:
        d_gpg = diameter_odd_even(n, s)
    elif kind is CaseKind.LAMBDA_LE_GAMMA:
        verdict = classify_epsilon(n, s)
        d_gpg = diameter_lambda_le_gamma(n, s, verdict.epsilon)
    else:
        verdict = classify_epsilon(n, s)
        d_gpg = circ.value + verdict.epsilon
    return DiameterResult(
        d_circulant=circ.value,
        d_gpg=d_gpg,
        epsilon=d_gpg - circ.value,
        method=tag,
        witnesses=(circ.endpoints,),
    )
