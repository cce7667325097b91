"""Admissible multiplicity pairs and the derived geometric constants.

An isoparametric hypersurface of the unit sphere has g distinct principal
curvatures cot(theta_alpha), theta_alpha = theta_1 + (alpha-1)*pi/g, with
multiplicities m_alpha satisfying m_alpha = m_{alpha+2}.  Everything the rest
of the package consumes about a family (dimension, the minimal hypersurface's
angle, focal dimensions, which (m1, m2) occur at all) lives here.

The g=4 admissible catalog is the union of three classification families,
taken as data:

* homogeneous pairs (1,k), (2,2k-1), (4,4k-1), (2,2), (4,5), (6,9);
* Clifford-construction pairs (m, k*delta(m)-m-1), both entries positive;
* the exceptional pair (7, 8).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidPairError, UnsupportedCaseError
from .exact import Surd

SCHEMA_VERSION = 1

_DELTA_TABLE = (1, 2, 4, 4, 8, 8, 8, 8)


def delta(m: int) -> int:
    """Dimension delta(m) of an irreducible module of the Clifford algebra C_{m-1}.

    delta(1..8) = 1, 2, 4, 4, 8, 8, 8, 8 and delta(m+8) = 16*delta(m).
    """
    if m < 1:
        raise ValueError(f"delta(m) requires m >= 1, got {m}")
    q, r = divmod(m - 1, 8)
    return _DELTA_TABLE[r] * 16**q


@dataclass(frozen=True)
class MultiplicityPair:
    """Curvature multiplicities (m1, m2) of a g-family, validated on construction."""

    g: int
    m1: int
    m2: int

    def __post_init__(self):
        if self.g not in (1, 2, 3, 4, 6):
            raise InvalidPairError(f"g must be in {{1,2,3,4,6}}, got {self.g}")
        if self.m1 < 1 or self.m2 < 1:
            raise InvalidPairError(f"multiplicities must be positive, got ({self.m1}, {self.m2})")
        if self.g % 2 == 1 and self.m1 != self.m2:
            raise InvalidPairError(f"odd g={self.g} forces m1 = m2, got ({self.m1}, {self.m2})")
        if self.g == 4 and self.m1 % 2 == 0 and self.m2 % 2 == 0 and (self.m1, self.m2) != (2, 2):
            raise InvalidPairError(
                f"g=4 multiplicities cannot both be even except (2,2), got ({self.m1}, {self.m2})"
            )

    @property
    def total(self) -> int:
        return self.m1 + self.m2

    def swapped(self) -> "MultiplicityPair":
        return MultiplicityPair(self.g, self.m2, self.m1)


def pair_g4(m1: int, m2: int) -> MultiplicityPair:
    return MultiplicityPair(4, m1, m2)


def hypersurface_dimension(pair: MultiplicityPair) -> int:
    """Dimension n of the hypersurface: (g/2)(m1+m2) for even g, g*m1 for odd g."""
    if pair.g % 2 == 0:
        return (pair.g // 2) * (pair.m1 + pair.m2)
    return pair.g * pair.m1


@dataclass(frozen=True)
class MinimalAngle:
    """Angle theta_1 of the minimal hypersurface in its family.

    ``sin_squared`` is the exact surd value of sin^2(theta_1); ``theta`` is
    its float angle.  Minimality means the mean curvature sum
    sum_alpha m_alpha cot(theta_alpha) vanishes.
    """

    theta: float
    sin_squared: Surd


def minimal_angle(pair: MultiplicityPair) -> MinimalAngle:
    """Solve the zero-mean-curvature condition for even g.

    For even g the condition m1*cot(g*theta/2) = m2*tan(g*theta/2) gives
    tan^2(g*theta_1/2) = m1/m2.  Closed surd forms:

    * g=2: sin^2 = m1/(m1+m2);
    * g=4: sin^2 = (1 - sqrt(m2/(m1+m2)))/2;
    * g=6 (m1=m2): theta_1 = pi/12, sin^2 = (2 - sqrt(3))/4.
    """
    g, m1, m2 = pair.g, pair.m1, pair.m2
    if g % 2 == 1:
        raise UnsupportedCaseError(f"minimal angle surd is only provided for even g, got g={g}")
    theta = (2.0 / g) * math.atan(math.sqrt(m1 / m2))
    s = m1 + m2
    if g == 2:
        sin_sq = Surd(Fraction(m1, s), Fraction(0), 1)
    elif g == 4:
        sin_sq = Surd(Fraction(1, 2), Fraction(-1, 2 * s), m2 * s)
    else:
        if m1 != m2:
            raise UnsupportedCaseError("g=6 with m1 != m2 has no quadratic-surd angle (and is not realizable)")
        sin_sq = Surd(Fraction(1, 2), Fraction(-1, 4), 3)
    return MinimalAngle(theta, sin_sq)


def principal_angles(pair: MultiplicityPair, theta1: float | None = None) -> tuple[float, ...]:
    """theta_alpha = theta_1 + (alpha-1)*pi/g for alpha = 1..g."""
    if theta1 is None:
        theta1 = _default_theta1(pair)
    return tuple(theta1 + (a - 1) * math.pi / pair.g for a in range(1, pair.g + 1))


def _default_theta1(pair: MultiplicityPair) -> float:
    if pair.g % 2 == 0:
        return minimal_angle(pair).theta
    # odd g: m1 = m2, so n*H = m1*g*cot(g*theta) vanishes at theta = pi/(2g)
    return math.pi / (2 * pair.g)


def mean_curvature_sum(pair: MultiplicityPair, theta1: float) -> float:
    """n*H at angle theta1: sum over alpha of m_alpha * cot(theta_alpha)."""
    total = 0.0
    for a, th in enumerate(principal_angles(pair, theta1), start=1):
        m_alpha = pair.m1 if a % 2 == 1 else pair.m2
        total += m_alpha / math.tan(th)
    return total


@dataclass(frozen=True)
class FamilyGeometry:
    """Dimensions, angles and codimensions derived from a multiplicity pair."""

    pair: MultiplicityPair
    n: int
    theta1: float
    theta_alpha: tuple[float, ...]
    dim_M1: int
    dim_M2: int
    codim_M1: int
    codim_M2: int


def family_geometry(pair: MultiplicityPair) -> FamilyGeometry:
    n = hypersurface_dimension(pair)
    theta1 = _default_theta1(pair)
    return FamilyGeometry(
        pair=pair,
        n=n,
        theta1=theta1,
        theta_alpha=principal_angles(pair, theta1),
        dim_M1=n - pair.m1,
        dim_M2=n - pair.m2,
        codim_M1=pair.m1 + 1,
        codim_M2=pair.m2 + 1,
    )


def focal_dimensions(pair: MultiplicityPair) -> tuple[int, int]:
    """(dim M1, dim M2) = (m1 + 2*m2, 2*m1 + m2) for g=4."""
    if pair.g != 4:
        raise UnsupportedCaseError(f"focal dimension formula is for g=4, got g={pair.g}")
    return pair.m1 + 2 * pair.m2, 2 * pair.m1 + pair.m2


def clifford_multiplier(m1: int, m2: int) -> int | None:
    """k such that (m1, m2) = (m1, k*delta(m1) - m1 - 1), or None.

    Tests the *oriented* pair; (m1, m2) and (m2, m1) are distinct families
    whose focal submanifolds interchange.
    """
    if m1 < 1 or m2 < 1:
        return None
    d = delta(m1)
    total = m1 + m2 + 1
    return total // d if total % d == 0 else None


def is_ot_fkm(m1: int, m2: int) -> bool:
    """True if (m1, m2), in this orientation, arises from a Clifford system."""
    return clifford_multiplier(m1, m2) is not None


def admissible_pairs(max_sum: int) -> tuple[MultiplicityPair, ...]:
    """All admissible g=4 pairs with m1 + m2 <= max_sum, normalized m1 <= m2.

    Union of the homogeneous list, the Clifford-construction pairs and (7,8);
    deduplicated and sorted by (m1+m2, m1).
    """
    if max_sum < 2:
        raise ValueError(f"max_sum must be >= 2, got {max_sum}")
    found: set[tuple[int, int]] = set()

    def add(a: int, b: int):
        if a >= 1 and b >= 1 and a + b <= max_sum:
            found.add((min(a, b), max(a, b)))

    for k in range(1, max_sum + 1):
        add(1, k)
        add(2, 2 * k - 1)
        add(4, 4 * k - 1)
    add(2, 2)
    add(4, 5)
    add(6, 9)
    add(7, 8)
    for m in range(1, max_sum):
        d = delta(m)
        for k in range(1, (max_sum + 1) // d + 1):
            m2 = k * d - m - 1
            if m2 >= 1:
                add(m, m2)
    return tuple(
        pair_g4(a, b) for a, b in sorted(found, key=lambda ab: (ab[0] + ab[1], ab[0], ab[1]))
    )


# -- known first-eigenvalue facts (catalog data, not computed) ---------------


@dataclass(frozen=True)
class KnownEigenvalueFact:
    """A recorded first-eigenvalue fact for a closed-form manifold.

    ``lambda1``/``multiplicity`` are ints where the value is absolute, or a
    formula string in the catalog parameters; multiplicity None = unknown.
    """

    manifold: str
    lambda1: int | str
    multiplicity: int | str | None
    dimension: int | str
    ambient_sphere: int | str
    note: str


KNOWN_EIGENVALUE_FACTS: tuple[KnownEigenvalueFact, ...] = (
    KnownEigenvalueFact(
        "focal-g2-sphere", "p", "p+1", "p", "p+q+1",
        "g=2 focal submanifolds are unit spheres S^p(1), S^q(1); lambda1 = dim",
    ),
    KnownEigenvalueFact(
        "veronese-RP2", 2, None, 2, 4,
        "Veronese RP^2, metric scaled to Gaussian curvature 1/3; lambda1 = dim",
    ),
    KnownEigenvalueFact(
        "veronese-CP2", 4, None, 4, 7,
        "Veronese CP^2, sectional curvature in [1/3, 4/3]; lambda1 = dim",
    ),
    KnownEigenvalueFact(
        "veronese-HP2", 8, None, 8, 13,
        "Veronese HP^2, sectional curvature in [1/3, 4/3]; lambda1 = dim",
    ),
    KnownEigenvalueFact(
        "veronese-OP2", 16, None, 16, 25,
        "Veronese OP^2, sectional curvature in [1/3, 4/3]; lambda1 = dim",
    ),
    KnownEigenvalueFact(
        "quotient-(1,k)", "min(4, k+2)", None, "k+2", "2k+3",
        "M2 of the (1,k) Clifford family: (S^1 x S^{k+1}) / (antipodal x antipodal)",
    ),
    KnownEigenvalueFact(
        "hypersurface", "n", "n+2", "n", "n+1",
        "closed minimal isoparametric hypersurface; lambda1 = n",
    ),
)


def known_eigenvalue_facts() -> tuple[KnownEigenvalueFact, ...]:
    return KNOWN_EIGENVALUE_FACTS


# -- JSON export --------------------------------------------------------------


def sin2_theta1_triplet(pair: MultiplicityPair) -> dict:
    """sin^2(theta_1) of a g=4 pair as {num, den, surd}: (num - sqrt(surd)) / den."""
    surd = minimal_angle(pair).sin_squared
    a, c, d = surd.rational, -surd.coef, surd.radicand
    den = a.denominator * c.denominator // gcd(a.denominator, c.denominator)
    num = int(a * den)
    k = int(c * den)
    radicand = k * k * d
    while True:
        g0 = gcd(num, den)
        best = next((g for g in range(g0, 1, -1) if g0 % g == 0 and radicand % (g * g) == 0), 1)
        if best == 1:
            break
        num, den, radicand = num // best, den // best, radicand // (best * best)
    return {"num": num, "den": den, "surd": radicand}


def catalog_entries(max_sum: int) -> list[dict]:
    entries = []
    for pair in admissible_pairs(max_sum):
        dim1, dim2 = focal_dimensions(pair)
        entries.append(
            {
                "g": pair.g,
                "m1": pair.m1,
                "m2": pair.m2,
                "n": hypersurface_dimension(pair),
                "dim_M1": dim1,
                "dim_M2": dim2,
                "sin2_theta1": sin2_theta1_triplet(pair),
            }
        )
    return entries


def catalog_json(max_sum: int) -> str:
    return json.dumps(
        {"schema_version": SCHEMA_VERSION, "pairs": catalog_entries(max_sum)}, indent=2
    )
