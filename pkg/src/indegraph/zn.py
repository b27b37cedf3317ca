"""Number theory for the additive group Z_n.

Everything downstream hangs off the additive order of a residue,
o(a) = n / gcd(a, n). Grouping Z_n by order yields one class of size
phi(d) per divisor d of n; those classes are the parts of the
independent graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

INVOLUTION = "involution"
UNIT = "unit"
NEITHER = "neither"


def check_modulus(n: int) -> None:
    """Reject anything below the smallest supported modulus."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")


def check_residue(a: int, n: int) -> None:
    check_modulus(n)
    if not 0 <= a < n:
        raise ValueError(f"residue {a} out of range [0, {n})")


@lru_cache(maxsize=None)
def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division.

    Adequate for n up to around 10**12; beyond that the isqrt(n) scan
    starts to hurt.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    factors: dict[int, int] = {}
    rest = n
    while rest % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        rest //= 2
    p = 3
    while p <= isqrt(rest):
        while rest % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rest //= p
        p += 2
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Count of residues in [1, n] coprime to n."""
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def element_order(a: int, n: int) -> int:
    """Additive order of a mod n, the least k >= 1 with k*a = 0 (mod n)."""
    check_residue(a, n)
    return n // gcd(a, n)


def classify_residue(a: int, n: int) -> str:
    """Case label used by the claimed degree formulas.

    Involutions take precedence over units, so at n = 2 the residue 1
    (which is both) lands in the involution case.
    """
    check_residue(a, n)
    if (2 * a) % n == 0:
        return INVOLUTION
    if gcd(a, n) == 1:
        return UNIT
    return NEITHER


@dataclass(frozen=True)
class SpecialSets:
    """Units, additive involutions, and everything else in Z_n.

    The three sets partition Z_n for n >= 3; at n = 2 the residue 1 is
    both a unit and an involution, flagged by overlap_flag.
    """

    n: int
    units: frozenset[int]
    involutions: frozenset[int]
    neither: frozenset[int]
    overlap_flag: bool


def special_sets(n: int) -> SpecialSets:
    check_modulus(n)
    units = frozenset(a for a in range(n) if gcd(a, n) == 1)
    involutions = frozenset(a for a in range(n) if (2 * a) % n == 0)
    neither = frozenset(range(n)) - units - involutions
    return SpecialSets(n, units, involutions, neither, bool(units & involutions))


@dataclass(frozen=True)
class OrderDecomposition:
    """Partition of Z_n into order classes, keyed by divisor of n."""

    n: int
    classes: dict[int, tuple[int, ...]]


def order_decomposition(n: int) -> OrderDecomposition:
    check_modulus(n)
    classes: dict[int, list[int]] = {d: [] for d in divisors(n)}
    for a in range(n):
        classes[n // gcd(a, n)].append(a)
    return OrderDecomposition(n, {d: tuple(v) for d, v in classes.items()})
