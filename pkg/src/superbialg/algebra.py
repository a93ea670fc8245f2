"""Finite-dimensional Lie superalgebras from graded bases and structure
constants, with axiom validation and the two built-in algebras."""

from __future__ import annotations

from fractions import Fraction

from .scalars import Ring, RingMismatchError
from . import tensors

EVEN = 0
ODD = 1


class AlgebraError(ValueError):
    """An algebra definition violates the superalgebra axioms."""

    def __init__(self, report):
        super().__init__(report.render())
        self.report = report


class AlgebraReport:
    """Axiom check results: every violated identity, not only the first."""

    def __init__(self):
        self.grading_failures = []       # (i, j, k, residual)
        self.antisymmetry_failures = []  # (i, j, k, residual)
        self.jacobi_failures = []        # (i, j, l, m, residual)

    @property
    def passed(self):
        return not (self.grading_failures or self.antisymmetry_failures
                    or self.jacobi_failures)

    def render(self):
        if self.passed:
            return "all axioms hold"
        lines = []
        for i, j, k, res in self.grading_failures:
            lines.append(f"grading violated at c[{i}][{j}]^[{k}]: {res}")
        for i, j, k, res in self.antisymmetry_failures:
            lines.append(f"graded antisymmetry violated at ({i},{j})^{k}: {res}")
        for i, j, l, m, res in self.jacobi_failures:
            lines.append(f"super-Jacobi violated at ({i},{j},{l}) -> {m}: {res}")
        return "\n".join(lines)


class SuperLieAlgebra:
    """Graded basis plus a dense structure-constant tensor c_ij^k.

    `basis` is an ordered list of (name, grade) with grade "even"/"odd" (or
    0/1).  `brackets` maps a pair of basis names (i <= j in basis order) to a
    list of (coefficient, basis name) pairs; the graded-antisymmetric
    completion is filled in automatically.  Coefficients live in `ring`
    (rational constants unless an explicitly parametric algebra is built).
    """

    def __init__(self, name, basis, brackets, ring=None):
        self.name = name
        self.ring = ring if ring is not None else Ring([])
        names = []
        grades = []
        for bname, grade in basis:
            if isinstance(grade, str):
                grade = {"even": EVEN, "odd": ODD}[grade]
            names.append(bname)
            grades.append(grade)
        if len(set(names)) != len(names):
            raise ValueError("duplicate basis name")
        self.basis = tuple(names)
        self.grades = tuple(grades)
        n = len(names)
        self.dim = n
        self.index = {bname: i for i, bname in enumerate(names)}
        zero = self.ring.zero()
        c = [[[zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for (iname, jname), rhs in brackets.items():
            i, j = self.index[iname], self.index[jname]
            for coeff, kname in rhs:
                k = self.index[kname]
                value = self.ring.coerce(coeff)
                c[i][j][k] = c[i][j][k] + value
                if i != j:
                    zij = self.z(i, j)
                    c[j][i][k] = c[j][i][k] - zij * value
        self.c = c

    def grade(self, i):
        return self.grades[i]

    def z(self, i, j):
        """Koszul sign (-1)^{|i||j|} for basis indices."""
        return -1 if (self.grades[i] and self.grades[j]) else 1

    def bracket_indices(self, i, j):
        """Nonzero structure constants of [g_i, g_j] as (k, coefficient)."""
        return [(k, v) for k, v in enumerate(self.c[i][j]) if not v.is_zero()]

    # -- axioms ---------------------------------------------------------

    def validate(self):
        report = AlgebraReport()
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = self.c[i][j][k]
                    if v.is_zero():
                        continue
                    if (self.grades[i] + self.grades[j]) % 2 != self.grades[k]:
                        report.grading_failures.append(
                            (self.basis[i], self.basis[j], self.basis[k], v.render()))
        for i in range(n):
            for j in range(i, n):
                zij = self.z(i, j)
                for k in range(n):
                    res = self.c[i][j][k] + zij * self.c[j][i][k]
                    if not res.is_zero():
                        report.antisymmetry_failures.append(
                            (self.basis[i], self.basis[j], self.basis[k], res.render()))
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    for m in range(n):
                        res = self.ring.zero()
                        for k in range(n):
                            res = res + self.c[i][j][k] * self.c[k][l][m] * self.z(i, l)
                            res = res + self.c[j][l][k] * self.c[k][i][m] * self.z(j, i)
                            res = res + self.c[l][i][k] * self.c[k][j][m] * self.z(l, j)
                        if not res.is_zero():
                            report.jacobi_failures.append(
                                (self.basis[i], self.basis[j], self.basis[l],
                                 self.basis[m], res.render()))
        return report

    # -- elements --------------------------------------------------------

    def element(self, name, ring=None, coeff=1):
        """Basis element as a rank-1 tensor, optionally over a larger ring."""
        ring = ring if ring is not None else self.ring
        return tensors.GradedTensor(self, 1, {(self.index[name],): ring.coerce(coeff)}, ring)

    def __repr__(self):
        return f"SuperLieAlgebra({self.name}, dim={self.dim})"


def validate(algebra):
    return algebra.validate()


def bracket(algebra, x, y):
    """Graded bracket of two rank-1 tensors with scalar coefficients.

    Coefficients may be odd; the Koszul rule
    [f x, g y] = (-1)^{|g||x|} f g [x, y] applies for homogeneous scalars.
    """
    if x.algebra is not algebra or y.algebra is not algebra:
        raise RingMismatchError("elements of a different algebra")
    if x.rank != 1 or y.rank != 1:
        raise ValueError("bracket is defined on rank-1 elements")
    ring = x.ring
    out = {}
    for (i,), f in x.coeffs.items():
        for (j,), g in y.coeffs.items():
            for g_even_odd in g.homogeneous_parts():
                if g_even_odd.is_zero():
                    continue
                sign = -1 if (g_even_odd.parity() and algebra.grades[i]) else 1
                coeff = sign * (f * g_even_odd)
                if coeff.is_zero():
                    continue
                for k, cval in algebra.bracket_indices(i, j):
                    key = (k,)
                    acc = out.get(key, ring.zero()) + coeff * cval.convert(ring)
                    out[key] = acc
    out = {k: v for k, v in out.items() if not v.is_zero()}
    return tensors.GradedTensor(algebra, 1, out, ring)


# -- built-in algebras --------------------------------------------------

_BUILTIN_CACHE = {}


def builtin(name, fresh=False):
    """The two built-in algebras, with basis orders (H,P+,P-,D+,D-) and
    (H,X+,X-,V+,V-).  Cached: repeated calls return the same object, so
    tensors built anywhere in the package share one algebra instance."""
    if not fresh and name in _BUILTIN_CACHE:
        return _BUILTIN_CACHE[name]
    algebra = _build_builtin(name)
    if not fresh:
        _BUILTIN_CACHE[name] = algebra
    return algebra


def _build_builtin(name):
    half = Fraction(1, 2)
    if name == "super_e2":
        return SuperLieAlgebra(
            "super_e2",
            [("H", "even"), ("P+", "even"), ("P-", "even"),
             ("D+", "odd"), ("D-", "odd")],
            {
                ("H", "P+"): [(1, "P+")],
                ("H", "P-"): [(-1, "P-")],
                ("H", "D+"): [(half, "D+")],
                ("H", "D-"): [(-half, "D-")],
                ("D+", "D+"): [(1, "P+")],
                ("D-", "D-"): [(1, "P-")],
            },
        )
    if name == "osp12":
        return SuperLieAlgebra(
            "osp12",
            [("H", "even"), ("X+", "even"), ("X-", "even"),
             ("V+", "odd"), ("V-", "odd")],
            {
                ("H", "X+"): [(1, "X+")],
                ("H", "X-"): [(-1, "X-")],
                ("H", "V+"): [(half, "V+")],
                ("H", "V-"): [(-half, "V-")],
                ("X+", "X-"): [(2, "H")],
                ("V+", "V-"): [(-half, "H")],
                ("V+", "V+"): [(half, "X+")],
                ("V-", "V-"): [(-half, "X-")],
                ("X+", "V-"): [(1, "V+")],
                ("X-", "V+"): [(1, "V-")],
            },
        )
    raise KeyError(f"unknown builtin algebra {name!r}")


# -- file format ----------------------------------------------------------
#
# [algebra] name = super_e2
# basis = H:even P+:even P-:even D+:odd D-:odd
# [brackets]            # omitted pairs are zero; only i<=j pairs listed
# H P+ = 1 P+
# D+ D+ = 1 P+

def parse_algebra_text(text, validate=True):
    name = None
    basis = []
    brackets = {}
    section = None
    index = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[algebra]"):
            section = "algebra"
            rest = line[len("[algebra]"):].strip()
            if rest:
                key, _, value = rest.partition("=")
                if key.strip() != "name":
                    raise ValueError(f"line {lineno}: expected 'name = ...'")
                name = value.strip()
            continue
        if line == "[brackets]":
            section = "brackets"
            continue
        if section == "algebra":
            key, _, value = line.partition("=")
            key = key.strip()
            if key == "name":
                name = value.strip()
            elif key == "basis":
                for token in value.split():
                    bname, _, grade = token.partition(":")
                    if grade not in ("even", "odd"):
                        raise ValueError(
                            f"line {lineno}: bad grade in {token!r}")
                    if bname in index:
                        raise ValueError(
                            f"line {lineno}: duplicate basis name {bname!r}")
                    index[bname] = len(basis)
                    basis.append((bname, grade))
            else:
                raise ValueError(f"line {lineno}: unknown key {key!r}")
        elif section == "brackets":
            lhs, _, rhs = line.partition("=")
            parts = lhs.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'I J = ...'")
            iname, jname = parts
            for bname in (iname, jname):
                if bname not in index:
                    raise ValueError(f"line {lineno}: unknown basis name {bname!r}")
            if index[iname] > index[jname]:
                raise ValueError(
                    f"line {lineno}: list only pairs with i <= j in basis order")
            if (iname, jname) in brackets:
                raise ValueError(f"line {lineno}: duplicate pair {iname} {jname}")
            tokens = rhs.split()
            if len(tokens) % 2 != 0 or not tokens:
                raise ValueError(
                    f"line {lineno}: right-hand side must be rational/name pairs")
            rhs_pairs = []
            for pos in range(0, len(tokens), 2):
                coeff = Fraction(tokens[pos])
                kname = tokens[pos + 1]
                if kname not in index:
                    raise ValueError(f"line {lineno}: unknown basis name {kname!r}")
                rhs_pairs.append((coeff, kname))
            brackets[(iname, jname)] = rhs_pairs
        else:
            raise ValueError(f"line {lineno}: content outside any section")
    if name is None or not basis:
        raise ValueError("missing [algebra] header or basis")
    algebra = SuperLieAlgebra(name, basis, brackets)
    if validate:
        report = algebra.validate()
        if not report.passed:
            raise AlgebraError(report)
    return algebra


def parse_algebra_file(path, validate=True):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read(), validate=validate)


def render_algebra_text(algebra):
    lines = [f"[algebra] name = {algebra.name}"]
    grade_names = {EVEN: "even", ODD: "odd"}
    lines.append("basis = " + " ".join(
        f"{n}:{grade_names[g]}" for n, g in zip(algebra.basis, algebra.grades)))
    lines.append("[brackets]")
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            entries = algebra.bracket_indices(i, j)
            if not entries:
                continue
            rhs = " ".join(
                f"{v.as_fraction()} {algebra.basis[k]}" for k, v in entries)
            lines.append(f"{algebra.basis[i]} {algebra.basis[j]} = {rhs}")
    return "\n".join(lines) + "\n"
