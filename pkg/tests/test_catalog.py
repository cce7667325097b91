import json
import math
from fractions import Fraction

import pytest

from isospectra import catalog
from isospectra.catalog import MultiplicityPair, pair_g4
from isospectra.errors import InvalidPairError, UnsupportedCaseError


# -- validation ------------------------------------------------------------------


def test_pair_validation():
    with pytest.raises(InvalidPairError, match="g must be"):
        MultiplicityPair(5, 1, 1)
    with pytest.raises(InvalidPairError, match="positive"):
        MultiplicityPair(4, 0, 3)
    with pytest.raises(InvalidPairError, match="odd g"):
        MultiplicityPair(3, 1, 2)
    with pytest.raises(InvalidPairError, match="both be even"):
        MultiplicityPair(4, 4, 6)
    assert pair_g4(2, 2).total == 4  # the one both-even exception
    assert MultiplicityPair(1, 3, 3).g == 1


# -- dimension --------------------------------------------------------------------


def test_dimension_examples():
    assert catalog.hypersurface_dimension(pair_g4(2, 2)) == 8
    assert catalog.hypersurface_dimension(pair_g4(4, 5)) == 18
    for k in (1, 2, 5):
        assert catalog.hypersurface_dimension(MultiplicityPair(1, k, k)) == k
    assert catalog.hypersurface_dimension(MultiplicityPair(3, 2, 2)) == 6
    assert catalog.hypersurface_dimension(MultiplicityPair(6, 2, 2)) == 12


# -- delta table -------------------------------------------------------------------


def test_delta_table_and_periodicity():
    assert [catalog.delta(m) for m in range(1, 9)] == [1, 2, 4, 4, 8, 8, 8, 8]
    assert catalog.delta(9) == 16
    for m in range(1, 25):
        assert catalog.delta(m + 8) == 16 * catalog.delta(m)
    values = [catalog.delta(m) for m in range(1, 25)]
    assert values == sorted(values)  # nondecreasing
    with pytest.raises(ValueError):
        catalog.delta(0)
    with pytest.raises(ValueError):
        catalog.delta(-3)


# -- minimal angle ------------------------------------------------------------------


def test_minimal_angle_g4_closed_forms():
    ma = catalog.minimal_angle(pair_g4(2, 2))
    assert math.isclose(float(ma.sin_squared), (2 - math.sqrt(2)) / 4, rel_tol=1e-15)
    assert math.isclose(float(ma.sin_squared), 0.1464466, abs_tol=5e-8)
    ma = catalog.minimal_angle(pair_g4(4, 5))
    assert math.isclose(float(ma.sin_squared), (3 - math.sqrt(5)) / 6, rel_tol=1e-15)
    assert math.isclose(float(ma.sin_squared), 0.1273220, abs_tol=5e-8)


def test_minimal_angle_g2_tan_squared():
    # tan^2(theta1) = m1/m2; symmetric pair -> theta1 = pi/4
    ma = catalog.minimal_angle(MultiplicityPair(2, 3, 3))
    assert math.isclose(ma.theta, math.pi / 4, rel_tol=1e-15)
    for p, q in [(1, 2), (3, 5), (7, 2)]:
        ma = catalog.minimal_angle(MultiplicityPair(2, p, q))
        assert math.isclose(math.tan(ma.theta) ** 2, p / q, rel_tol=1e-13)
        assert ma.sin_squared.rational == Fraction(p, p + q)


def test_minimal_angle_zero_mean_curvature():
    for pair in catalog.admissible_pairs(40):
        ma = catalog.minimal_angle(pair)
        n = catalog.hypersurface_dimension(pair)
        assert abs(catalog.mean_curvature_sum(pair, ma.theta)) < 1e-12 * max(1, n)
        # sin^2 from the surd matches the angle
        assert math.isclose(math.sin(ma.theta) ** 2, float(ma.sin_squared), rel_tol=1e-13)


def test_minimal_angle_g6():
    ma = catalog.minimal_angle(MultiplicityPair(6, 2, 2))
    assert math.isclose(ma.theta, math.pi / 12, rel_tol=1e-15)
    assert math.isclose(float(ma.sin_squared), (2 - math.sqrt(3)) / 4, rel_tol=1e-15)
    assert abs(catalog.mean_curvature_sum(MultiplicityPair(6, 2, 2), ma.theta)) < 1e-12


def test_minimal_angle_odd_g_unsupported():
    with pytest.raises(UnsupportedCaseError):
        catalog.minimal_angle(MultiplicityPair(3, 4, 4))
    with pytest.raises(UnsupportedCaseError):
        catalog.minimal_angle(MultiplicityPair(1, 5, 5))


# -- admissible pairs ----------------------------------------------------------------


def _oracle_admissible(max_sum):
    """Independent enumeration of the three generating families."""
    out = set()
    # homogeneous
    for k in range(1, max_sum):
        for a, b in [(1, k), (2, 2 * k - 1), (4, 4 * k - 1)]:
            if b >= 1 and a + b <= max_sum:
                out.add((min(a, b), max(a, b)))
    for a, b in [(2, 2), (4, 5), (6, 9), (7, 8)]:
        if a + b <= max_sum:
            out.add((a, b))
    # Clifford construction: (m, k delta(m) - m - 1)
    deltas = {1: 1, 2: 2, 3: 4, 4: 4, 5: 8, 6: 8, 7: 8, 8: 8}
    for m in range(9, max_sum + 1):
        deltas[m] = 16 * deltas[m - 8]
    for m in range(1, max_sum):
        k = 1
        while k * deltas[m] - m - 1 <= max_sum:
            b = k * deltas[m] - m - 1
            if b >= 1 and m + b <= max_sum:
                out.add((min(m, b), max(m, b)))
            k += 1
    return out


def test_admissible_pairs_bound_4():
    pairs = [(p.m1, p.m2) for p in catalog.admissible_pairs(4)]
    assert set(pairs) == {(1, 1), (1, 2), (2, 2), (1, 3)}


def test_admissible_pairs_membership():
    pairs = {(p.m1, p.m2) for p in catalog.admissible_pairs(15)}
    assert (7, 8) in pairs
    assert (4, 5) in pairs
    assert (6, 9) in pairs
    assert (3, 4) in pairs  # Clifford (3, 4k-4) at k=2, also homogeneous (4,3)


def test_admissible_pairs_match_oracle():
    for bound in (4, 10, 33, 64):
        got = {(p.m1, p.m2) for p in catalog.admissible_pairs(bound)}
        assert got == _oracle_admissible(bound)


def test_admissible_pairs_sorted_and_valid():
    pairs = catalog.admissible_pairs(64)
    keys = [(p.total, p.m1, p.m2) for p in pairs]
    assert keys == sorted(keys)
    for p in pairs:
        assert p.m1 <= p.m2
        assert p.g == 4  # constructing MultiplicityPair re-validates
    with pytest.raises(ValueError):
        catalog.admissible_pairs(1)


# -- focal dimensions ------------------------------------------------------------------


def test_focal_dimensions():
    assert catalog.focal_dimensions(pair_g4(4, 5)) == (14, 13)
    assert catalog.focal_dimensions(pair_g4(7, 8)) == (23, 22)
    assert catalog.focal_dimensions(pair_g4(1, 1)) == (3, 3)
    for pair in catalog.admissible_pairs(40):
        n = catalog.hypersurface_dimension(pair)
        d1, d2 = catalog.focal_dimensions(pair)
        assert d1 == n - pair.m1 and d2 == n - pair.m2
    with pytest.raises(UnsupportedCaseError):
        catalog.focal_dimensions(MultiplicityPair(2, 1, 1))


def test_family_geometry():
    geo = catalog.family_geometry(pair_g4(4, 5))
    assert geo.n == 18 and geo.dim_M1 == 14 and geo.dim_M2 == 13
    assert geo.codim_M1 == 5 and geo.codim_M2 == 6
    assert len(geo.theta_alpha) == 4
    diffs = [b - a for a, b in zip(geo.theta_alpha, geo.theta_alpha[1:])]
    for d in diffs:
        assert math.isclose(d, math.pi / 4, rel_tol=1e-15)
    assert 0 < geo.theta_alpha[0] and geo.theta_alpha[-1] < math.pi


# -- known facts and export --------------------------------------------------------------


def test_known_eigenvalue_facts():
    facts = catalog.known_eigenvalue_facts()
    ids = {f.manifold for f in facts}
    assert {"focal-g2-sphere", "veronese-RP2", "veronese-CP2", "veronese-HP2",
            "veronese-OP2", "quotient-(1,k)", "hypersurface"} <= ids
    for f in facts:
        if isinstance(f.lambda1, int):
            assert f.lambda1 > 0
    rp2 = next(f for f in facts if f.manifold == "veronese-RP2")
    assert rp2.lambda1 == 2 and rp2.dimension == 2 and rp2.ambient_sphere == 4
    op2 = next(f for f in facts if f.manifold == "veronese-OP2")
    assert op2.lambda1 == 16


def test_sin2_theta1_triplet_values():
    assert catalog.sin2_theta1_triplet(pair_g4(2, 2)) == {"num": 2, "den": 4, "surd": 2}
    assert catalog.sin2_theta1_triplet(pair_g4(4, 5)) == {"num": 3, "den": 6, "surd": 5}
    # (1, 8): (3 - sqrt 8)/6
    assert catalog.sin2_theta1_triplet(pair_g4(1, 8)) == {"num": 3, "den": 6, "surd": 8}
    for pair in catalog.admissible_pairs(30):
        t = catalog.sin2_theta1_triplet(pair)
        val = (t["num"] - math.sqrt(t["surd"])) / t["den"]
        assert math.isclose(val, float(catalog.minimal_angle(pair).sin_squared), rel_tol=1e-14)


def test_catalog_json_schema():
    data = json.loads(catalog.catalog_json(10))
    assert data["schema_version"] == 1
    entry = data["pairs"][0]
    assert set(entry) == {"g", "m1", "m2", "n", "dim_M1", "dim_M2", "sin2_theta1"}
    assert entry["g"] == 4
    assert set(entry["sin2_theta1"]) == {"num", "den", "surd"}
