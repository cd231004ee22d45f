"""Characteristic polynomial, f-vector, real-rootedness test, bound checkers.

Two independent routes to the characteristic polynomial are kept permanently:
an explicit Moebius recursion over the intersection lattice, and the closed
formula in n, h and f3.  The real-rootedness verdict is computed both from
three integer relations (with exact floor/ceil handling of square roots via
integer-sqrt bracketing) and from the discriminant of the cubic factor; the
two verdicts are asserted to agree on every evaluation.

Every checker accepts plain combinatorial data (n, h-vector, t-vector,
f-vector), so catalogue rows without known normal vectors can be verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Mapping

from .arrangement import Arrangement


class NegativeRadicand(ValueError):
    """The square-root argument n^2+n-2-3h is negative (h too large)."""


# -- exact floor/ceil of (a +- sqrt(s)) / d ------------------------------------


def floor_add_sqrt(a: int, s: int, d: int) -> int:
    """floor((a + sqrt(s)) / d) for integers a, s >= 0, d > 0, exactly.

    For integer k, k <= (a + sqrt(s))/d would need an integer in the interval
    (a + isqrt(s), a + sqrt(s)], which is empty, so the integer square root
    already decides the floor.
    """
    if s < 0:
        raise NegativeRadicand(s)
    return (a + isqrt(s)) // d


def ceil_sub_sqrt(a: int, s: int, d: int) -> int:
    """ceil((a - sqrt(s)) / d) for integers a, s >= 0, d > 0, exactly."""
    if s < 0:
        raise NegativeRadicand(s)
    return -((isqrt(s) - a) // d)


def floor_add_sqrt_interval(a: int, s: int, d: int) -> int:
    """Independent oracle for floor_add_sqrt via rational interval refinement."""
    if s < 0:
        raise NegativeRadicand(s)
    r = isqrt(s)
    if r * r == s:
        return (a + r) // d
    lo, hi = Fraction(r), Fraction(r + 1)
    while (a + lo) // d != (a + hi) // d:
        mid = (lo + hi) / 2
        if mid * mid <= s:
            lo = mid
        else:
            hi = mid
    return (a + lo) // d


def ceil_sub_sqrt_interval(a: int, s: int, d: int) -> int:
    """Independent oracle for ceil_sub_sqrt via rational interval refinement."""
    if s < 0:
        raise NegativeRadicand(s)
    r = isqrt(s)
    if r * r == s:
        return -((r - a) // d)
    lo, hi = Fraction(r), Fraction(r + 1)
    while -((lo - a) // d) != -((hi - a) // d):
        mid = (lo + hi) / 2
        if mid * mid <= s:
            lo = mid
        else:
            hi = mid
    return -((lo - a) // d)


def geq_minus_sqrt(lhs: int, a: int, s: int, d: int) -> bool:
    """Decide lhs >= (a - sqrt(s)) / d exactly (s >= 0, d > 0)."""
    if s < 0:
        raise NegativeRadicand(s)
    m = a - d * lhs
    if m <= 0:
        return True
    return m * m <= s


# -- characteristic polynomial ---------------------------------------------------


@dataclass(frozen=True)
class ReducedCubic:
    """The cubic factor t^3 + p t^2 + q t + r of the characteristic polynomial."""

    p: int
    q: int
    r: int

    def discriminant(self) -> int:
        p, q, r = self.p, self.q, self.r
        return 18 * p * q * r - 4 * p**3 * r + p * p * q * q - 4 * q**3 - 27 * r * r

    def coefficients(self) -> tuple[int, int, int, int]:
        return (1, self.p, self.q, self.r)


@dataclass(frozen=True)
class CharPoly:
    """Monic integer quartic, stored by descending coefficients."""

    coefficients: tuple[int, int, int, int, int]

    def __call__(self, t: int) -> int:
        value = 0
        for c in self.coefficients:
            value = value * t + c
        return value

    @classmethod
    def from_invariants(cls, n: int, h: int, f3: int) -> "CharPoly":
        return cls((1, -n, h, n - f3, f3 - 1 - h))

    def reduced_cubic(self) -> ReducedCubic:
        """Divide by (t - 1); the remainder must vanish."""
        c4, c3, c2, c1, c0 = self.coefficients
        p = c3 + c4
        q = c2 + p
        r = c1 + q
        if c0 + r != 0:
            raise ValueError("1 is not a root, cannot split off (t - 1)")
        return ReducedCubic(p, q, r)

    def integer_roots(self) -> tuple[int, ...]:
        """All integer roots with multiplicity, found by divisor trial."""
        coeffs = list(self.coefficients)
        roots = []
        while len(coeffs) > 1:
            constant = coeffs[-1]
            if constant == 0:
                root = 0
            else:
                root = None
                limit = abs(constant)
                d = 1
                while d * d <= limit:
                    if limit % d == 0:
                        for cand in (d, -d, limit // d, -(limit // d)):
                            value = 0
                            for c in coeffs:
                                value = value * cand + c
                            if value == 0:
                                root = cand
                                break
                    if root is not None:
                        break
                    d += 1
                if root is None:
                    break
            # synthetic division by (t - root)
            out = [coeffs[0]]
            for c in coeffs[1:-1]:
                out.append(c + out[-1] * root)
            coeffs = out
            roots.append(root)
        return tuple(sorted(roots))


def char_poly_formula(n: int, h: int, f3: int) -> CharPoly:
    """Closed form (t-1)(t^3 + (1-n)t^2 + (h+1-n)t + (h+1-f3)), expanded."""
    if n < 1 or f3 < 1:
        raise ValueError("need n >= 1 and f3 >= 1")
    return CharPoly.from_invariants(n, h, f3)


def _mu_data(arrangement: Arrangement):
    """Moebius values plus per-vertex incident-line tallies, cached."""
    cache = arrangement._cache
    if "mu" in cache:
        return cache["mu"]
    lines = arrangement.lines()
    vertices = arrangement.vertices()
    line_info = [(flat.mask, flat.weight - 1) for flat in lines]
    vertex_mu = []
    vertex_line_count = []
    for v in vertices:
        vmask = v.mask
        incident = 0
        mu_sum = 0
        for lmask, lmu in line_info:
            if lmask & vmask == lmask:
                incident += 1
                mu_sum += lmu
        vertex_line_count.append(incident)
        vertex_mu.append(-(1 - v.weight + mu_sum))
    data = (line_info, vertex_mu, vertex_line_count)
    cache["mu"] = data
    return data


def char_poly_moebius(arrangement: Arrangement) -> CharPoly:
    """Characteristic polynomial by Moebius recursion over all flats."""
    line_info, vertex_mu, _ = _mu_data(arrangement)
    c2 = sum(mu for _, mu in line_info)
    c1 = sum(vertex_mu)
    c0 = -(1 - arrangement.n + c2 + c1)
    return CharPoly((1, -arrangement.n, c2, c1, c0))


def f_vector(arrangement: Arrangement) -> tuple[int, int, int, int]:
    """Cell counts of the induced decomposition of projective 3-space.

    f0 = vertices; f1 sums, over the lines, the marked points on each
    (a projective line with k points carries k arcs); f2 sums the projective
    chamber counts of the restrictions; f3 comes from the characteristic
    polynomial at -1.
    """
    cache = arrangement._cache
    if "f_vector" in cache:
        return cache["f_vector"]
    _, _, vertex_line_count = _mu_data(arrangement)
    f0 = len(arrangement.vertices())
    f1 = sum(vertex_line_count)
    f2 = sum(
        arrangement.restriction(h).projective_chamber_count()
        for h in range(arrangement.n)
    )
    chi = char_poly_moebius(arrangement)
    value = chi(-1)
    if value <= 0 or value % 2:
        raise AssertionError("chi(-1) must be a positive even integer")
    f3 = value // 2
    result = (f0, f1, f2, f3)
    cache["f_vector"] = result
    return result


# -- combinatorial data records ---------------------------------------------------


def positional(vector: Mapping[int, int], start: int) -> tuple[int, ...]:
    """Dense tuple form of a weight -> count map, beginning at `start`."""
    if not vector:
        return ()
    top = max(vector)
    return tuple(vector.get(i, 0) for i in range(start, top + 1))


@dataclass(frozen=True)
class ArrangementData:
    """Bare combinatorial record: size, h-vector, t-vector, f-vector."""

    n: int
    h: Mapping[int, int]
    t: Mapping[int, int]
    f: tuple[int, int, int, int]

    @classmethod
    def from_arrangement(cls, arrangement: Arrangement) -> "ArrangementData":
        return cls(
            n=arrangement.n,
            h=arrangement.h_vector(),
            t=arrangement.t_vector(),
            f=f_vector(arrangement),
        )

    @property
    def h_total(self) -> int:
        """The weighted line count sum_i (i-1) h_i."""
        return sum((i - 1) * c for i, c in self.h.items())

    @property
    def g1(self) -> int:
        return sum(self.h.values())

    @property
    def m(self) -> int:
        return max(self.t)

    @property
    def weighted_vertex_sum(self) -> int:
        return sum(i * c for i, c in self.t.items())

    @property
    def simply_laced(self) -> bool:
        return all(i <= 3 for i, c in self.h.items() if c)

    def truncated_h(self) -> int:
        """The variant of h summed only over line weights below m."""
        return sum((i - 1) * c for i, c in self.h.items() if i <= self.m - 1)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named exact comparison."""

    name: str
    holds: bool
    lhs: object
    rhs: object
    tight: bool = False

    def __str__(self):
        status = "holds" if self.holds else "FAILS"
        extra = ", tight" if self.tight else ""
        return f"{self.name}: {status} (lhs={self.lhs}, rhs={self.rhs}{extra})"


@dataclass(frozen=True)
class RealRootReport:
    """Verdict of the splitting test plus the three supporting relations."""

    real_rooted: bool
    discriminant: int
    line_weight_cap: CheckResult
    chamber_count_cap: CheckResult
    chamber_count_floor: CheckResult

    @property
    def checks(self):
        return (self.line_weight_cap, self.chamber_count_cap, self.chamber_count_floor)


def real_roots_test(n: int, h: int, f3: int) -> RealRootReport:
    """Exact test whether the characteristic polynomial has only real roots.

    Evaluates the three integer relations bounding h and f3 and, separately,
    the discriminant of the cubic factor; the two verdicts must agree, and
    that agreement is asserted on every call.
    """
    cubic = char_poly_formula(n, h, f3).reduced_cubic()
    disc = cubic.discriminant()

    cap1 = (n * n + n - 2) // 3
    r1 = CheckResult("line_weight_cap", h <= cap1, h, cap1, tight=h == cap1)
    radicand = n * n + n - 2 - 3 * h
    if radicand < 0:
        r2 = CheckResult("chamber_count_cap", False, f3, None)
        r3 = CheckResult("chamber_count_floor", False, f3, None)
        verdict = False
    else:
        a = (9 * n + 18) * h + 20 + 12 * n - 2 * n**3 - 3 * n * n
        s = 4 * radicand**3
        cap2 = floor_add_sqrt(a, s, 27)
        floor3 = ceil_sub_sqrt(a, s, 27)
        r2 = CheckResult("chamber_count_cap", f3 <= cap2, f3, cap2, tight=f3 == cap2)
        r3 = CheckResult("chamber_count_floor", f3 >= floor3, f3, floor3, tight=f3 == floor3)
        verdict = r1.holds and r2.holds and r3.holds
    if verdict != (disc >= 0):
        raise AssertionError(
            f"relation verdict {verdict} disagrees with discriminant {disc} "
            f"for n={n}, h={h}, f3={f3}"
        )
    return RealRootReport(verdict, disc, r1, r2, r3)


# -- individual bound checkers ---------------------------------------------------


def check_pair_count(data: ArrangementData) -> CheckResult:
    """Every unordered hyperplane pair meets in exactly one line."""
    lhs = sum(comb(i, 2) * c for i, c in data.h.items())
    rhs = comb(data.n, 2)
    return CheckResult("pair_count", lhs == rhs, lhs, rhs, tight=lhs == rhs)


def check_euler(data: ArrangementData) -> CheckResult:
    f0, f1, f2, f3 = data.f
    lhs = f0 - f1 + f2 - f3
    return CheckResult("euler_characteristic", lhs == 0, lhs, 0, tight=True)


def check_facet_pairing(data: ArrangementData) -> CheckResult:
    """f2 = 2 f3: every chamber simplicial by facet counting."""
    lhs, rhs = data.f[2], 2 * data.f[3]
    return CheckResult("facet_pairing", lhs == rhs, lhs, rhs, tight=lhs == rhs)


def check_chamber_cube_cap(n: int, f3: int) -> CheckResult:
    rhs = Fraction((n + 2) ** 3, 27)
    return CheckResult("chamber_cube_cap", f3 <= rhs, f3, rhs, tight=f3 == rhs)


def check_heavy_line_quota(data: ArrangementData) -> CheckResult:
    """Lower bound on the weighted count of lines of weight at least three."""
    lhs = sum((i - 1) * (i - 2) * c for i, c in data.h.items() if i >= 3)
    rhs = Fraction((data.n - 4) * (data.n - 1), 3)
    return CheckResult("heavy_line_quota", lhs >= rhs, lhs, rhs, tight=lhs == rhs)


def check_cube_growth_conjecture(n: int, f3: int) -> CheckResult:
    """Conjectured chamber bound (1 + (n-1)/3)^3; for rank 4 this coincides
    with the proven cube bound, and that coincidence is asserted."""
    rhs = (1 + Fraction(n - 1, 3)) ** 3
    assert rhs == Fraction((n + 2) ** 3, 27)
    return CheckResult("cube_growth_conjecture", f3 <= rhs, f3, rhs, tight=f3 == rhs)


def check_vertex_sum_identity(data: ArrangementData) -> CheckResult:
    """For simplicial arrangements, f3 + n equals the weighted vertex sum."""
    lhs = data.f[3] + data.n
    rhs = data.weighted_vertex_sum
    return CheckResult("vertex_sum_identity", lhs == rhs, lhs, rhs, tight=lhs == rhs)


def check_vertex_sum_bounds(data: ArrangementData) -> list[CheckResult]:
    """Simplicial rephrasing of the chamber bounds via the weighted vertex sum.

    Uses the truncated h (line weights below m); when some h_i with i >= m is
    positive the truncation differs from the full h and both are recorded.
    """
    n = data.n
    h = data.truncated_h()
    sit = data.weighted_vertex_sum
    out = []
    radicand = n * n + n - 2 - 3 * h
    if radicand >= 0:
        a = (9 * n + 18) * h + 20 + 39 * n - 2 * n**3 - 3 * n * n
        s = 4 * radicand**3
        cap = floor_add_sqrt(a, s, 27)
        floor_ = ceil_sub_sqrt(a, s, 27)
        out.append(CheckResult("vertex_sum_cap", sit <= cap, sit, cap, tight=sit == cap))
        out.append(
            CheckResult("vertex_sum_floor", sit >= floor_, sit, floor_, tight=sit == floor_)
        )
    else:
        out.append(CheckResult("vertex_sum_cap", False, sit, None))
        out.append(CheckResult("vertex_sum_floor", False, sit, None))
    cube = Fraction((n + 2) ** 3, 27) + n
    out.append(CheckResult("vertex_sum_cube_cap", sit <= cube, sit, cube, tight=sit == cube))
    return out


def check_edge_supply(data: ArrangementData) -> CheckResult:
    """Each line of weight i carries at least (n-i)/(m-i) edges; summed over
    lines this bounds the weighted vertex sum from below."""
    n, m = data.n, data.m
    rhs = n + sum(
        Fraction(i * (n - i), 3 * (m - i)) * data.h.get(i, 0) for i in range(2, m)
    )
    lhs = data.weighted_vertex_sum
    return CheckResult("edge_supply", lhs >= rhs, lhs, rhs, tight=lhs == rhs)


def check_double_line_dominance(h: Mapping[int, int]) -> CheckResult:
    """Strictly more double lines than all heavier lines combined."""
    lhs = h.get(2, 0)
    rhs = sum(c for i, c in h.items() if i >= 3)
    return CheckResult("double_line_dominance", lhs > rhs, lhs, rhs, tight=lhs == rhs + 1)


def check_multiplicity_window(
    m: int, *, simplicial: bool, simply_laced: bool, irreducible: bool
) -> list[CheckResult]:
    out = []
    if simplicial and simply_laced:
        out.append(CheckResult("multiplicity_cap", m <= 7, m, 7, tight=m == 7))
    if simplicial and irreducible:
        out.append(CheckResult("multiplicity_floor", m >= 6, m, 6, tight=m == 6))
    return out


def check_simply_laced_bounds(
    data: ArrangementData, *, simplicial: bool, grunbaum_shephard: bool
) -> list[CheckResult]:
    """Bound suite for simply laced arrangements with real-rooted polynomial."""
    n = data.n
    h2 = data.h.get(2, 0)
    h3 = data.h.get(3, 0)
    f3 = data.f[3]
    out = [
        CheckResult("sl_double_line_cap", h2 <= 2 * n - 2, h2, 2 * n - 2, tight=h2 == 2 * n - 2),
        CheckResult(
            "sl_triple_line_floor",
            h3 >= Fraction((n - 4) * (n - 1), 6),
            h3,
            Fraction((n - 4) * (n - 1), 6),
            tight=h3 == Fraction((n - 4) * (n - 1), 6),
        ),
    ]
    cube = Fraction((n + 2) ** 3, 27)
    out.append(CheckResult("sl_chamber_cap", f3 <= cube, f3, cube, tight=f3 == cube))
    base = 2 * n - 2 - h2
    if base >= 0:
        a = n**3 + 6 * n + 20 + 3 * h2 * (n + 2)
        s = 4 * base**3
        holds = geq_minus_sqrt(27 * f3, a, s, 1)
        tight = (a - 27 * f3) ** 2 == s and a - 27 * f3 >= 0
        out.append(CheckResult("sl_chamber_floor", holds, f3, f"({a} - sqrt({s}))/27", tight=tight))
    else:
        out.append(CheckResult("sl_chamber_floor", False, f3, None))
    if simplicial:
        out.append(CheckResult("sl_size_cap", n <= 119, n, 119, tight=n == 119))
    if grunbaum_shephard:
        out.append(CheckResult("sl_size_cap_gs", n <= 15, n, 15, tight=n == 15))
    return out


@dataclass(frozen=True)
class CheckOutcome:
    """One line of a verification report: a named check with a status."""

    name: str
    status: str  # "pass" | "fail" | "skip"
    result: CheckResult | None = None
    note: str = ""


def _outcome(result: CheckResult, note: str = "") -> CheckOutcome:
    return CheckOutcome(result.name, "pass" if result.holds else "fail", result, note)


def run_data_checks(
    data: ArrangementData,
    *,
    simplicial: bool = True,
    irreducible: bool = True,
) -> list[CheckOutcome]:
    """Run every data-only checker against one combinatorial record."""
    out = [
        _outcome(check_pair_count(data)),
        _outcome(check_euler(data)),
        _outcome(check_facet_pairing(data)),
    ]
    report = real_roots_test(data.n, data.h_total, data.f[3])
    for res in report.checks:
        out.append(_outcome(res))
    disc = CheckResult(
        "cubic_discriminant", report.discriminant >= 0, report.discriminant, 0,
        tight=report.discriminant == 0,
    )
    out.append(_outcome(disc))
    if report.real_rooted:
        out.append(_outcome(check_chamber_cube_cap(data.n, data.f[3])))
        out.append(_outcome(check_heavy_line_quota(data)))
        out.append(_outcome(check_cube_growth_conjecture(data.n, data.f[3])))
    else:
        for name in ("chamber_cube_cap", "heavy_line_quota", "cube_growth_conjecture"):
            out.append(CheckOutcome(name, "skip", note="polynomial is not real-rooted"))
    out.append(_outcome(check_double_line_dominance(data.h)))
    if simplicial:
        out.append(_outcome(check_vertex_sum_identity(data)))
        trunc_note = ""
        if data.truncated_h() != data.h_total:
            trunc_note = (
                f"truncated h {data.truncated_h()} differs from full h {data.h_total}"
            )
        if report.real_rooted:
            for res in check_vertex_sum_bounds(data):
                out.append(_outcome(res, trunc_note))
        else:
            for name in ("vertex_sum_cap", "vertex_sum_floor", "vertex_sum_cube_cap"):
                out.append(
                    CheckOutcome(name, "skip", note="polynomial is not real-rooted")
                )
        out.append(_outcome(check_edge_supply(data)))
    else:
        for name in ("vertex_sum_identity", "vertex_sum_cap", "vertex_sum_floor",
                     "vertex_sum_cube_cap", "edge_supply"):
            out.append(CheckOutcome(name, "skip", note="not simplicial"))
    for res in check_multiplicity_window(
        data.m,
        simplicial=simplicial,
        simply_laced=data.simply_laced,
        irreducible=irreducible,
    ):
        out.append(_outcome(res))
    if data.simply_laced and report.real_rooted:
        gs = check_double_line_dominance(data.h).holds
        for res in check_simply_laced_bounds(
            data, simplicial=simplicial, grunbaum_shephard=gs
        ):
            out.append(_outcome(res))
    return out
