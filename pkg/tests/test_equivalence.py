"""Tests for automorphisms, transforms, and the frozen orbit witnesses."""

import random
from fractions import Fraction

import pytest

from superbialg.scalars import Ring
from superbialg.algebra import builtin
from superbialg.bialgebra import (case_a, case_b, cybe_status, family,
                                  osp_r_a, osp_r_b)
from superbialg.equivalence import (e2_automorphism,
                                    osp_automorphism, transform,
                                    verify_orbit_claims)


@pytest.fixture(scope="module")
def osp():
    return builtin("osp12")


class TestOspAutomorphism:
    def test_identity(self, osp):
        phi = osp_automorphism(1, 0, 0, 1)
        assert phi.is_structure_preserving()
        assert transform(phi, family("osp-r2")) == family("osp-r2")

    def test_symbolic_structure_preservation(self):
        ring = Ring([(v, "commuting") for v in "abcd"],
                    relations=[("a*d-b*c-1", "a*d")])
        phi = osp_automorphism(*(ring.var(v) for v in "abcd"), ring=ring)
        assert phi.is_structure_preserving()

    def test_determinant_enforced(self):
        with pytest.raises(ValueError):
            osp_automorphism(1, 0, 0, 2)

    def test_wrong_symbolic_determinant_fails(self):
        # with ad - bc = k != 1 the boson block stops preserving the bracket
        ring = Ring([(v, "commuting") for v in "abcd"],
                    relations=[("a*d-b*c-2", "a*d")])
        with pytest.raises(ValueError):
            osp_automorphism(*(ring.var(v) for v in "abcd"), ring=ring)


class TestE2Automorphisms:
    def test_all_generators_preserve_structure(self):
        assert e2_automorphism("flip").is_structure_preserving()
        assert e2_automorphism("shift", 2, Fraction(1, 3)).is_structure_preserving()
        assert e2_automorphism("scale", 3, -2).is_structure_preserving()

    def test_scale_rejects_zero(self):
        with pytest.raises(ValueError):
            e2_automorphism("scale", 0, 1)

    def test_flip_involution(self):
        flip = e2_automorphism("flip")
        composed = flip.compose(flip)
        d = case_a(1, 0, 5)
        assert transform(composed, d) == d


class TestTransform:
    def test_functoriality_on_r_matrices(self, osp):
        rng = random.Random(5)
        for _ in range(10):
            while True:
                a, b, c = (Fraction(rng.randint(-3, 3)) for _ in range(3))
                if a != 0:
                    break
            # solve ad - bc = 1 for d
            d = (1 + b * c) / a
            phi = osp_automorphism(a, b, c, d)
            psi = osp_automorphism(1, rng.randint(-2, 2), 0, 1)
            r = osp_r_a(rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-2, 2))
            assert transform(phi.compose(psi), r) == transform(phi, transform(psi, r))

    def test_functoriality_on_cobrackets(self):
        phi = e2_automorphism("scale", Fraction(1, 2), 3)
        psi = e2_automorphism("shift", 1, -2)
        d = case_b(4, 9, 0, 0)
        assert transform(phi.compose(psi), d) == transform(phi, transform(psi, d))

    def test_coboundary_commutes_with_transform(self, osp):
        from superbialg.bialgebra import coboundary_delta
        phi = osp_automorphism(1, 1, 0, 1)
        r = osp_r_a(1, 2, 1)
        lhs = transform(phi, coboundary_delta(osp, r))
        rhs = coboundary_delta(osp, transform(phi, r))
        assert lhs == rhs

    def test_case_a_scale_parameter_law(self):
        # a -> a alpha^2, b -> b beta^2, c -> c alpha^2 beta^2, m -> m alpha beta
        phi = e2_automorphism("scale", 2, 3)
        moved = transform(phi, case_a(1, 1, 1, branch=1))
        assert moved == case_a(4, 9, 36, branch=1)

    def test_case_b_flip_parameter_law(self):
        flip = e2_automorphism("flip")
        assert transform(flip, case_b(2, 3, 5, 7)) == case_b(3, 2, 5, -7)

    def test_cybe_status_preserved(self, osp):
        phi = osp_automorphism(2, 3, 1, 2)
        for r in (osp_r_a(1, 1, 1), osp_r_b(2, 3), family("osp-r3", t=1)):
            assert cybe_status(osp, r) == cybe_status(osp, transform(phi, r))


class TestOrbitClaims:
    def test_all_claims_pass(self):
        results = verify_orbit_claims()
        failures = [(cid, detail) for cid, _, ok, detail in results if not ok]
        assert not failures, failures

    def test_claim_count(self):
        assert len(verify_orbit_claims()) == 13
