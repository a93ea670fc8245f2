"""Tests for superalgebra construction, validation, and the file format."""

from fractions import Fraction

import pytest

from superbialg.scalars import Ring
from superbialg.algebra import (SuperLieAlgebra, AlgebraError, builtin,
                                bracket, parse_algebra_text,
                                render_algebra_text)
from superbialg.claims import data_path


@pytest.fixture(scope="module")
def e2():
    return builtin("super_e2")


@pytest.fixture(scope="module")
def osp():
    return builtin("osp12")


class TestBuiltins:
    def test_both_validate(self, e2, osp):
        assert e2.validate().passed
        assert osp.validate().passed

    def test_basis_orders(self, e2, osp):
        assert e2.basis == ("H", "P+", "P-", "D+", "D-")
        assert osp.basis == ("H", "X+", "X-", "V+", "V-")
        assert e2.grades == (0, 0, 0, 1, 1)

    def test_e2_table(self, e2):
        # [H, P+] = P+, [P+, P-] = 0, {D+, D+} = P+
        i = e2.index
        assert e2.c[i["H"]][i["P+"]][i["P+"]] == 1
        assert all(v.is_zero() for v in e2.c[i["P+"]][i["P-"]])
        assert e2.c[i["D+"]][i["D+"]][i["P+"]] == 1

    def test_osp_table(self, osp):
        i = osp.index
        assert osp.c[i["X+"]][i["X-"]][i["H"]] == 2
        assert osp.c[i["X+"]][i["V-"]][i["V+"]] == 1
        assert osp.c[i["V+"]][i["V-"]][i["H"]] == Fraction(-1, 2)

    def test_antisymmetric_completion(self, osp):
        i = osp.index
        # odd-odd pairs are symmetric: {V-, V+} = {V+, V-}
        assert osp.c[i["V-"]][i["V+"]][i["H"]] == Fraction(-1, 2)
        # even-even antisymmetric: [X-, X+] = -2H
        assert osp.c[i["X-"]][i["X+"]][i["H"]] == -2


class TestBracket:
    def test_h_pplus(self, e2):
        out = bracket(e2, e2.element("H"), e2.element("P+"))
        assert out == e2.element("P+")

    def test_odd_odd(self, osp):
        out = bracket(osp, osp.element("V+"), osp.element("V-"))
        assert out.coeffs[(0,)] == Fraction(-1, 2)

    def test_koszul_rule_with_odd_coefficients(self, e2):
        # [xi D+, eta D-] = -xi eta {D+, D-} = 0
        ring = Ring([("xi", "grassmann"), ("eta", "grassmann")])
        x = e2.element("D+", ring=ring, coeff=ring.var("xi"))
        y = e2.element("D-", ring=ring, coeff=ring.var("eta"))
        assert bracket(e2, x, y).is_zero()
        # and [xi D+, eta D+] = -xi eta {D+, D+} = -xi*eta P+
        y2 = e2.element("D+", ring=ring, coeff=ring.var("eta"))
        out = bracket(e2, x, y2)
        assert out.coeffs[(1,)] == -(ring.var("xi") * ring.var("eta"))

    def test_grading_respected(self, osp):
        for i in range(osp.dim):
            for j in range(osp.dim):
                out = bracket(osp, osp.element(osp.basis[i]),
                              osp.element(osp.basis[j]))
                for (k,), v in out.coeffs.items():
                    assert (osp.grades[i] + osp.grades[j]) % 2 == osp.grades[k]

    def test_even_square_vanishes(self, osp):
        for name in ("H", "X+", "X-"):
            assert bracket(osp, osp.element(name), osp.element(name)).is_zero()


class TestValidation:
    def test_mutated_table_fails_jacobi(self):
        # {D+,D+} = P- instead of P+ breaks the (H, D+, D+) Jacobi triple
        half = Fraction(1, 2)
        mutated = SuperLieAlgebra(
            "mutated",
            [("H", "even"), ("P+", "even"), ("P-", "even"),
             ("D+", "odd"), ("D-", "odd")],
            {
                ("H", "P+"): [(1, "P+")],
                ("H", "P-"): [(-1, "P-")],
                ("H", "D+"): [(half, "D+")],
                ("H", "D-"): [(-half, "D-")],
                ("D+", "D+"): [(1, "P-")],
                ("D-", "D-"): [(1, "P-")],
            },
        )
        report = mutated.validate()
        assert not report.passed
        assert report.jacobi_failures
        assert any(set(entry[:3]) <= {"H", "D+"}
                   for entry in report.jacobi_failures)

    def test_abelian_validates(self):
        abelian = SuperLieAlgebra(
            "abelian", [("X", "even"), ("T", "odd")], {})
        assert abelian.validate().passed


class TestFileFormat:
    def test_bundled_files_match_builtins(self, e2, osp):
        for name, ref in (("super_e2", e2), ("osp12", osp)):
            parsed = parse_algebra_text(data_path(f"{name}.alg").read_text())
            assert parsed.basis == ref.basis
            assert parsed.grades == ref.grades
            n = ref.dim
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        assert parsed.c[i][j][k] == ref.c[i][j][k]

    def test_round_trip(self, osp):
        text = render_algebra_text(osp)
        again = parse_algebra_text(text)
        assert render_algebra_text(again) == text

    def test_random_solvable_round_trip(self):
        import random
        rng = random.Random(7)
        for _ in range(5):
            weights = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
            algebra = SuperLieAlgebra(
                "solvable",
                [("H", "even"), ("X", "even"), ("Y", "even"), ("Q", "odd")],
                {
                    ("H", "X"): [(weights[0], "X")],
                    ("H", "Y"): [(weights[1], "Y")],
                    ("H", "Q"): [(weights[2], "Q")],
                },
            )
            assert algebra.validate().passed
            text = render_algebra_text(algebra)
            assert render_algebra_text(parse_algebra_text(text)) == text

    def test_duplicate_basis_rejected(self):
        bad = """\
[algebra] name = bad
basis = H:even H:odd
[brackets]
"""
        with pytest.raises(ValueError):
            parse_algebra_text(bad)

    def test_axiom_failure_aborts(self):
        # [H,X] = X, [H,Y] = Y, [X,Y] = H violates the Jacobi identity
        bad = """\
[algebra] name = bad
basis = H:even X:even Y:even
[brackets]
H X = 1 X
H Y = 1 Y
X Y = 1 H
"""
        with pytest.raises(AlgebraError):
            parse_algebra_text(bad)

    def test_pair_order_enforced(self):
        bad = """\
[algebra] name = bad
basis = H:even X:even
[brackets]
X H = 1 X
"""
        with pytest.raises(ValueError):
            parse_algebra_text(bad)
