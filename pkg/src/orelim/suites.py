"""Verification suites: lists of CheckReport in a fixed order."""

from __future__ import annotations

from fractions import Fraction

from .exactpoly import format_rational
from .infmat.checks import CHECKS, check
from .jacobi import DegenerateParameters, identity_sides
from .oresystem import (
    OreElem, OrePoly, ad_E, eq_infty_c0, eq_infty_c1, eq_infty_residual, eq_table,
    first_N_implies_all, rep_factorization_check, rep_row_residual, second_form,
    system_residual, top_form, degree_one_combination, ore_identity_residual,
    recursion_residual,
)
from .report import FAIL, PASS, SKIPPED_DEGENERATE, CheckReport, Witness, timed

DEFAULT_DEPTH = {"matrix": 8, "jacobi": 12, "ore": 5}
SUITES = ("matrix", "jacobi", "ore", "full")

PARAMETER_SAMPLE = tuple(Fraction(v) for v in
                         ("-4", "-7/2", "-3", "-2", "-1", "-1/2", "0", "1/2", "1", "2", "3"))
DEFAULT_C = tuple(Fraction(v) for v in ("0", "1", "2", "1/2", "-1"))
LEMMA_MAX = 12


def run_matrix(depth: int) -> list[CheckReport]:
    return [check(name, n) for name in CHECKS for n in range(1, depth + 1)]


# -- jacobi -------------------------------------------------------------

def _jacobi_points(name, depth):
    if name == "symmetry":
        for n in range(depth + 1):
            for a in PARAMETER_SAMPLE:
                for b in PARAMETER_SAMPLE:
                    yield n, a, b, None
    elif name == "u0_bridge":
        for i in range(1, depth + 1):
            for d in range(depth - i + 1):
                yield d, Fraction(0), Fraction(0), i
    else:
        top = min(depth, LEMMA_MAX) if name.startswith("lemma") else depth
        for n in range(top + 1):
            for a in PARAMETER_SAMPLE:
                yield n, a, a, None


def _point_params(n, a, b, aux):
    out = {"n": n, "alpha": format_rational(a), "beta": format_rational(b)}
    if aux is not None:
        out["i"] = aux
    return out


def run_jacobi(depth: int) -> list[CheckReport]:
    from .jacobi import IDENTITIES
    reports = []
    for name in IDENTITIES:
        skipped = []
        witness = detail = None
        count = 0
        with timed() as elapsed:
            for n, a, b, aux in _jacobi_points(name, depth):
                try:
                    lhs, rhs = identity_sides(name, n, a, b, aux)
                except DegenerateParameters as exc:
                    skipped.append((n, a, b, aux, str(exc)))
                    continue
                count += 1
                if lhs != rhs and witness is None:
                    witness = Witness(n, aux or 0, lhs.to_string(), rhs.to_string())
                    detail = f"alpha={format_rational(a)}, beta={format_rational(b)}"
        params = {"depth": depth, "points": count}
        reports.append(CheckReport(f"jacobi.{name}", params, FAIL if witness else PASS,
                                   witness, elapsed[0], detail or ""))
        for n, a, b, aux, why in skipped:
            reports.append(CheckReport(f"jacobi.{name}", _point_params(n, a, b, aux),
                                       SKIPPED_DEGENERATE, None, 0.0, why))
    return reports


# -- ore ----------------------------------------------------------------

class _First:
    """Collects the first failure of a named ore check."""

    def __init__(self, name, params):
        self.name, self.params = name, params
        self.witness = None
        self.detail = ""
        self.elapsed = 0.0

    def note(self, residual, i, j, p, expected="0"):
        if self.witness is None and residual:
            self.witness = Witness(i, j, expected, str(residual))
            self.detail = f"p = {p}"

    def report(self):
        return CheckReport(self.name, self.params, FAIL if self.witness else PASS,
                           self.witness, self.elapsed, self.detail)


def sweep_monomials(c, bound: int = 3):
    for a in range(bound + 1):
        for b in range(bound + 1):
            for d in range(bound + 1):
                yield OrePoly.monomial(c, a, b, d)


def _dense(c, bound: int):
    """A polynomial using every E^a H^b t^d with distinct coefficients."""
    acc = OrePoly(c)
    for k, m in enumerate(sweep_monomials(c, bound)):
        acc = acc + m * Fraction(k + 1, 3)
    return acc


def ore_equation_checks(c, depth: int, bound: int = 3) -> list[CheckReport]:
    """eq^0 = system, eq^n = 0, recursion, and the eq^infty displays, over monomials."""
    base = {"c": format_rational(c), "depth": depth, "exponents": bound}
    names = ["eq_k0_is_system", "eq_kn_vanishes", "recursion", "eq_infty_display"]
    if c in (0, 1):
        names.append("eq_infty_corollary")
    checks = {k: _First(f"ore.{k}", base) for k in names}
    with timed() as elapsed:
        for p in sweep_monomials(c, bound):
            table = eq_table(p, depth + 1)
            for n in range(1, depth + 1):
                checks["eq_k0_is_system"].note(table[n, 0] - system_residual(p, n), n, 0, p)
                checks["eq_kn_vanishes"].note(table[n, n], n, n, p)
                for k in range(1, n):
                    checks["recursion"].note(recursion_residual(p, n, k, table), n, k, p)
            for n in range(depth + 1):
                inf = eq_infty_residual(p, n)
                checks["eq_infty_display"].note(inf - table[n + 1, n], n + 1, n, p)
                if c == 0:
                    checks["eq_infty_corollary"].note(eq_infty_c0(p, n) - inf, n + 1, n, p)
                elif c == 1:
                    checks["eq_infty_corollary"].note(eq_infty_c1(p, n) - inf, n + 1, n, p)
    out = []
    for k in names:
        checks[k].elapsed = elapsed[0] / len(names)
        out.append(checks[k].report())
    return out


def triangularity_check(c, depth: int, bound: int = 3) -> CheckReport:
    """Changing p_j with j < n leaves eq_infty_residual(p, n) unchanged."""
    chk = _First("ore.triangularity", {"c": format_rational(c), "depth": depth, "exponents": bound})
    with timed() as elapsed:
        p = _dense(c, bound) + OrePoly.monomial(c, 1, 1, bound + 2)
        ref = {n: eq_infty_residual(p, n) for n in range(depth + 1)}
        for q in sweep_monomials(c, bound):
            j = q.degree
            for n in range(j + 1, depth + 1):
                changed = eq_infty_residual(p + q * Fraction(-5, 7), n)
                chk.note(changed - ref[n], n, j, q)
    chk.elapsed = elapsed[0]
    return chk.report()


def degree_form_check(c, bound: int = 3) -> CheckReport:
    """eq_infty at n = N, N - 1 matches the top-coefficient forms; vanishes beyond N."""
    chk = _First("ore.degree_forms", {"c": format_rational(c), "exponents": bound})
    with timed() as elapsed:
        polys = list(sweep_monomials(c, bound))
        polys.append(_dense(c, bound))
        for p in polys:
            N = p.degree
            chk.note(eq_infty_residual(p, N) - top_form(p), N + 1, N, p)
            if N >= 1:
                chk.note(eq_infty_residual(p, N - 1) - second_form(p), N, N - 1, p)
            for n in (N + 1, N + 2):
                chk.note(eq_infty_residual(p, n), n + 1, n, p)
    chk.elapsed = elapsed[0]
    return chk.report()


def identity_check(c, depth: int, bound: int = 3) -> CheckReport:
    chk = _First("ore.identities", {"c": format_rational(c), "depth": depth, "exponents": bound})
    with timed() as elapsed:
        for p in sweep_monomials(c, bound):
            chk.note(ore_identity_residual("id1", p), 1, 0, p)
            for n in range(1, depth + 1):
                chk.note(ore_identity_residual("id2", p, n), 2, n, p)
        for n in range(depth + 1):
            for m in range(depth + 1):
                chk.note(ore_identity_residual("id3", c, n, m), n, m, f"E^{n} H^{m}")
        for p in sweep_monomials(c, 1):
            chk.note(degree_one_combination(p), 3, 0, p)
    chk.elapsed = elapsed[0]
    return chk.report()


def kernel_check(c, bound: int = 3) -> CheckReport:
    """A t-constant p0 = E^a H^b solves the system iff ad_E(p0) = 0."""
    chk = _First("ore.constant_kernel", {"c": format_rational(c), "exponents": bound})
    with timed() as elapsed:
        for a in range(bound + 1):
            for b in range(bound + 1):
                p0 = OreElem.monomial(c, a, b)
                in_kernel = not ad_E(p0)
                p = OrePoly.constant(p0)
                solves = all(not system_residual(p, n) for n in range(1, bound + 2))
                if in_kernel != solves and chk.witness is None:
                    chk.witness = Witness(a, b, str(in_kernel), str(solves))
                    chk.detail = f"p0 = {p0}"
    chk.elapsed = elapsed[0]
    return chk.report()


def first_n_family(c, extra: int = 4):
    """E^m f(t) for m <= 3 and f a product of (t - r) factors, plus kernel elements E^a."""
    from .exactpoly import Poly
    polys = []
    for deg in range(5):
        f = Poly.const(1)
        for r in range(deg):
            f = f * Poly((-r, 1))
        for m in range(4):
            polys.append(OrePoly.from_scalar_poly(c, f) * OreElem.E(c, m))
            polys.append(OrePoly.from_scalar_poly(c, f + Poly.monomial(deg, 2) + 3) * OreElem.E(c, m))
    for a in range(4):
        polys.append(OrePoly.constant(OreElem.E(c, a)))
    return polys


def first_n_check(c, extra: int = 4) -> list[CheckReport]:
    out = []
    for p in first_n_family(c, extra):
        r = first_N_implies_all(p, extra)
        r.parameters["p"] = str(p)
        out.append(r)
    return out


def representation_checks(c, depth: int, d: int = 2, bound: int = 3) -> list[CheckReport]:
    out = []
    n_max = min(depth, 3)
    for basis in ("monomial", "pochhammer"):
        chk = _First(f"ore.rep_row.{basis}",
                     {"c": format_rational(c), "depth": n_max, "exponents": bound})
        with timed() as elapsed:
            for p in sweep_monomials(c, bound):
                for n in range(1, n_max + 1):
                    chk.note(rep_row_residual(p, n, basis), n, 0, p)
        chk.elapsed = elapsed[0]
        out.append(chk.report())
        for n in range(1, n_max + 1):
            out.append(rep_factorization_check(n, d, basis, c))
    return out


def run_ore(depth: int, c_values=DEFAULT_C) -> list[CheckReport]:
    reports = []
    for c in c_values:
        c = Fraction(c)
        reports += ore_equation_checks(c, depth)
        reports.append(triangularity_check(c, depth))
        reports.append(degree_form_check(c))
        reports.append(identity_check(c, depth))
        reports.append(kernel_check(c))
        if c == 2:
            reports += first_n_check(c)
        reports += representation_checks(c, depth)
    return reports


def run_suite(suite: str, depth: int | None = None, c_values=DEFAULT_C) -> list[CheckReport]:
    if suite == "full":
        return (run_suite("matrix", depth) + run_suite("jacobi", depth)
                + run_suite("ore", depth, c_values))
    if suite not in DEFAULT_DEPTH:
        raise ValueError(f"unknown suite {suite!r}")
    depth = depth or DEFAULT_DEPTH[suite]
    if suite == "matrix":
        return run_matrix(depth)
    if suite == "jacobi":
        return run_jacobi(depth)
    return run_ore(depth, c_values)
