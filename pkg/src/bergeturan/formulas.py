"""Exact evaluators for the Turan-type formulas and inequality verification.

Every bound is computed in exact integer or rational arithmetic; no
floating point enters any verification path.  Evaluators outside their
stated parameter range raise OutsideTheoremRange, except the headline
disjoint-path formula which always evaluates (it also counts the
construction's edges) and carries a hypothesis flag instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .core import FormulaParams
from .errors import GridOutsideHypotheses, OutsideTheoremRange, ParamsOutOfRange


def erdos_gallai_bound(n: int, ell: int) -> Fraction:
    """Classical bound on graph edges avoiding a path with ell edges:
    (ell-1)/2 * n."""
    if n < 1 or ell < 1:
        raise ParamsOutOfRange(f"need n, ell >= 1, got n={n}, ell={ell}")
    return Fraction(ell - 1, 2) * n


@dataclass(frozen=True)
class KplGraphResult:
    value: int
    threshold_n0: int
    valid: bool


def kpl_graph_turan(n: int, k: int, ell: int) -> KplGraphResult:
    """Graph (r = 2) Turan number of k disjoint paths with ell edges, with
    the explicit order threshold above which the formula is exact."""
    if k < 2 or ell < 3:
        raise ParamsOutOfRange(f"need k >= 2 and ell >= 3, got k={k}, ell={ell}")
    half_floor = (ell + 1) // 2
    half_ceil = (ell + 2) // 2
    core = k * half_floor - 1
    c_ell = 1 if ell % 2 == 0 else 0
    value = core * (n - core) + comb(core, 2) + c_ell
    threshold = 2 * (ell + 1) + 2 * k * (ell + 1) * (half_ceil + 1) * comb(ell + 1, half_floor)
    return KplGraphResult(value=value, threshold_n0=threshold, valid=n >= threshold)


@dataclass(frozen=True)
class PathBoundResult:
    value: Fraction
    case: str  # "short-path" (r >= ell > 2) or "long-path" (ell >= r+1 > 3)


def berge_path_bound(n: int, r: int, ell: int) -> PathBoundResult:
    """Turan bound for a single Berge path with ell edges.

    Short paths (r >= ell > 2) give n*(ell-1)/(r+1), sharp when r+1 | n;
    long paths (ell >= r+1 > 3) give (n/ell)*C(ell, r), sharp when ell | n.
    The short-path case is routed first, so r = ell lands there.
    """
    if n < 1:
        raise ParamsOutOfRange(f"need n >= 1, got {n}")
    if r >= ell > 2:
        return PathBoundResult(Fraction(n * (ell - 1), r + 1), "short-path")
    if ell >= r + 1 > 3:
        return PathBoundResult(Fraction(n, ell) * comb(ell, r), "long-path")
    raise OutsideTheoremRange(f"(n={n}, r={r}, ell={ell}) fits neither path-bound case")


@dataclass(frozen=True)
class ConnectedPathResult:
    value: int
    large_n_required: bool  # exactness is only stated above an unspecified order


def connected_berge_path_turan(n: int, r: int, ell: int) -> ConnectedPathResult:
    """Turan number of a Berge path with ell edges over connected hosts,
    for ell >= 2r+13 >= 18 and sufficiently large n (threshold unknown)."""
    if not (ell >= 2 * r + 13 >= 18):
        raise OutsideTheoremRange(f"need ell >= 2r+13 >= 18, got r={r}, ell={ell}")
    if n < 1:
        raise ParamsOutOfRange(f"need n >= 1, got {n}")
    lp = (ell + 1) // 2
    ind = 1 if ell % 2 == 0 else 0
    value = comb(lp - 1, r - 1) * (n - lp + 1) + comb(lp - 1, r) + ind * comb(lp - 1, r - 2)
    return ConnectedPathResult(value=value, large_n_required=True)


@dataclass(frozen=True)
class TwoPathResult:
    value: Fraction
    case: str  # "path-plus-edge" (second length 1) or "two-paths"
    binomial_part: int
    path_bound_part: Fraction


def two_path_turan(n: int, r: int, ell1: int, ell2: int) -> TwoPathResult:
    """Turan number of two disjoint Berge paths (second possibly a single
    edge), as the maximum of the single-path bound and a binomial expression.

    Cases: ell2 = 1 with ell1 odd >= 2r+11, or ell1 >= ell2 >= r+6 both odd
    with r >= 3.  Exact for sufficiently large n.
    """
    if r < 3:
        raise OutsideTheoremRange(f"need r >= 3, got {r}")
    if ell2 == 1:
        if ell1 % 2 == 0 or ell1 < 2 * r + 11:
            raise OutsideTheoremRange(f"single-edge case needs odd ell1 >= 2r+11, got {ell1}")
        s = (ell1 + 1) // 2
        binom = comb(s, r - 1) * (n - (ell1 - 1) // 2) + comb(s, r)
        case = "path-plus-edge"
    else:
        if ell1 % 2 == 0 or ell2 % 2 == 0 or not ell1 >= ell2 >= r + 6:
            raise OutsideTheoremRange(
                f"two-path case needs odd ell1 >= ell2 >= r+6, got ({ell1}, {ell2})"
            )
        s = (ell1 + ell2) // 2
        binom = comb(s, r - 1) * (n - s) + comb(s, r)
        case = "two-paths"
    path_part = berge_path_bound(n, r, ell1).value
    return TwoPathResult(max(Fraction(binom), path_part), case, binom, path_part)


@dataclass(frozen=True)
class KplBergeResult:
    value: int
    hypothesis_ok: bool
    hypothesis_failures: tuple[str, ...]
    large_n_required: bool


def berge_kpl_turan(p: FormulaParams) -> KplBergeResult:
    """Headline formula for k disjoint Berge paths with ell edges:

        C(k*ell'-1, r-1)*(n-k*ell'+1) + C(k*ell'-1, r) + [ell even]*C(k*ell'-1, r-2)

    Always evaluates (it is also the core construction's edge count); the
    flag records whether k >= 2, r >= 3, ell' >= r and 2*ell' >= r+7 hold,
    the range in which the formula is the exact Turan number for large n.
    """
    core = p.core_size
    value = (
        comb(core, p.r - 1) * (p.n - core)
        + comb(core, p.r)
        + p.parity_indicator * comb(core, p.r - 2)
    )
    failures = []
    if p.k < 2:
        failures.append("k >= 2")
    if p.r < 3:
        failures.append("r >= 3")
    if p.ell_prime < p.r:
        failures.append("ell' >= r")
    if 2 * p.ell_prime < p.r + 7:
        failures.append("2*ell' >= r+7")
    return KplBergeResult(value, not failures, tuple(failures), True)


@dataclass(frozen=True)
class ConjectureReport:
    """Right-hand sides of the concluding conjectures, evaluated exactly as
    printed, with the printed-text quirks surfaced instead of silently
    repaired."""

    forest_value: int
    forest_indicator: int
    uniform_value: int | None
    notes: tuple[str, ...]


_UNIFORM_NOTES = (
    "uniform-case formula as printed multiplies by (n - k*ell') rather than the "
    "construction count's (n - k*ell' + 1)",
    "uniform-case parity indicator as printed tracks r, not the path length",
)
_FOREST_NOTE = (
    "forest formula's last binomial as printed uses the sum of full lengths, "
    "not the sum of half lengths used elsewhere"
)


def conjecture_values(n: int, r: int, ell_list) -> ConjectureReport:
    """Evaluate the conjectured linear-forest Turan value
    f(n, ell_i, r) = C(S-1, r-1)*(n-S+1) + C(S-1, r) + I*C(T-1, r-2), where
    S sums the half lengths, T sums the full lengths and I = 1 exactly when
    some ell_i is even.  For a uniform list the uniform-case conjecture is
    evaluated as printed alongside."""
    ells = list(ell_list)
    if len(ells) < 2 or any(e < 3 for e in ells):
        raise ParamsOutOfRange(f"need k >= 2 paths of length >= 3, got {ells}")
    s = sum((e + 1) // 2 for e in ells)
    t = sum(ells)
    indicator = 1 if any(e % 2 == 0 for e in ells) else 0
    forest = comb(s - 1, r - 1) * (n - s + 1) + comb(s - 1, r) + indicator * comb(t - 1, r - 2)
    uniform = None
    notes = [_FOREST_NOTE]
    if len(set(ells)) == 1:
        k = len(ells)
        lp = (ells[0] + 1) // 2
        core = k * lp - 1
        ind_r = 1 if r % 2 == 0 else 0
        uniform = comb(core, r - 1) * (n - k * lp) + comb(core, r) + ind_r * comb(core, r - 2)
        notes.extend(_UNIFORM_NOTES)
    return ConjectureReport(forest, indicator, uniform, tuple(notes))


# --- inequality verification ------------------------------------------------


def _i1_sides(r, L):
    lhs = Fraction(comb(2 * L - 1, r - 1))
    rhs = Fraction(comb(2 * L, r) + 2 * comb(2 * L, r - 1) + comb(2 * L, r - 2), 2 * L)
    return lhs, rhs


def _i2_sides(r, k, l):
    lhs = comb(k * l - 1, r - 1) - Fraction(comb(k * l - 1, r - 2), 2)
    rhs = Fraction(comb((k - 1) * l, r - 1) + 1)
    return lhs, rhs


def _i3_sides(r, k, l):
    lhs = Fraction(sum(comb((k - 1) * l - 1, r - t - 1) for t in range(1, r - 1)), 2) \
        - l + comb(l - 1, r - 2)
    return lhs, Fraction(0)


def _i4_sides(r, k, l):
    lhs = Fraction(comb(k * l - 1, r - 1))
    rhs = Fraction(comb((k - 1) * l - 1, r - 1) + comb(k * l - 1, r - 2))
    return lhs, rhs


def _i5_sides(r, k, l):
    L = (l + 1) // 2
    cap = Fraction(comb(k * L - 1, r - 1))
    inner = max(
        cap - Fraction(comb(k * L - 1, r - 2), 2) + Fraction(1, 2),
        Fraction(comb(l, r), l) + Fraction(5, 2),
    )
    # stated as max{...} < cap; slack is cap - max
    return cap, inner


@dataclass(frozen=True)
class Lemma:
    lemma_id: str
    statement: str
    params: tuple[str, ...]
    strict: bool
    hypotheses: object  # callable(point) -> bool
    sides: object  # callable(point) -> (lhs, rhs)
    slack_of: object  # callable(lhs, rhs) -> Fraction


LEMMAS: dict[str, Lemma] = {
    "I1": Lemma(
        "I1",
        "C(2L-1, r-1) > (C(2L, r) + 2*C(2L, r-1) + C(2L, r-2)) / (2L)   [L >= r >= 3]",
        ("r", "L"),
        True,
        lambda r, L: L >= r >= 3,
        lambda r, L: _i1_sides(r, L),
        lambda lhs, rhs: lhs - rhs,
    ),
    "I2": Lemma(
        "I2",
        "C(kl-1, r-1) - C(kl-1, r-2)/2 >= C((k-1)l, r-1) + 1   [k >= 2, l >= r >= 3]",
        ("r", "k", "l"),
        False,
        lambda r, k, l: k >= 2 and l >= r >= 3,
        lambda r, k, l: _i2_sides(r, k, l),
        lambda lhs, rhs: lhs - rhs,
    ),
    "I3": Lemma(
        "I3",
        "sum_{t=1}^{r-2} C((k-1)l-1, r-t-1)/2 - l + C(l-1, r-2) > 0   [k >= 3, l >= r >= 3]",
        ("r", "k", "l"),
        True,
        lambda r, k, l: k >= 3 and l >= r >= 3,
        lambda r, k, l: _i3_sides(r, k, l),
        lambda lhs, rhs: lhs - rhs,
    ),
    "I4": Lemma(
        "I4",
        "C(kl-1, r-1) > C((k-1)l-1, r-1) + C(kl-1, r-2)   [k >= 2, l >= r >= 3]",
        ("r", "k", "l"),
        True,
        lambda r, k, l: k >= 2 and l >= r >= 3,
        lambda r, k, l: _i4_sides(r, k, l),
        lambda lhs, rhs: lhs - rhs,
    ),
    "I5": Lemma(
        "I5",
        "max{C(kL-1, r-1) - C(kL-1, r-2)/2 + 1/2, C(l, r)/l + 5/2} < C(kL-1, r-1)"
        "   [k >= 2, l >= 5, L = floor((l+1)/2) >= r >= 3]",
        ("r", "k", "l"),
        True,
        lambda r, k, l: k >= 2 and l >= 5 and (l + 1) // 2 >= r >= 3,
        lambda r, k, l: _i5_sides(r, k, l),
        lambda lhs, rhs: lhs - rhs,  # lhs is the cap, rhs the max; slack = cap - max
    ),
}


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    grid: tuple[tuple[int, ...], ...]
    violations: tuple[tuple[int, ...], ...]
    margin_min: Fraction | None
    strict: bool
    rows: tuple[tuple[tuple[int, ...], Fraction, Fraction, Fraction], ...] = field(repr=False)

    @property
    def holds(self) -> bool:
        return not self.violations


def default_grid(lemma_id: str, r_max: int = 8, k_max: int = 6, l_max: int = 30):
    """Default verification grid: r in 3..r_max, k up to k_max from each
    inequality's minimum, length parameter up to l_max, filtered by the
    stated hypotheses."""
    lemma = LEMMAS[lemma_id]
    points = []
    if lemma.params == ("r", "L"):
        for r in range(3, r_max + 1):
            for L in range(r, l_max + 1):
                points.append((r, L))
    else:
        k_min = 3 if lemma_id == "I3" else 2
        for r in range(3, r_max + 1):
            for k in range(k_min, k_max + 1):
                l_min = 5 if lemma_id == "I5" else r
                for l in range(l_min, l_max + 1):
                    if lemma.hypotheses(r, k, l):
                        points.append((r, k, l))
    return tuple(points)


def verify_lemma(lemma_id: str, grid=None) -> LemmaReport:
    """Check one inequality over a grid in exact rational arithmetic.

    Reports every violating parameter tuple and the minimum slack observed;
    a caller-supplied grid must lie inside the stated hypotheses.
    """
    if lemma_id not in LEMMAS:
        raise ParamsOutOfRange(f"unknown lemma id {lemma_id!r}; expected one of {sorted(LEMMAS)}")
    lemma = LEMMAS[lemma_id]
    if grid is None:
        grid = default_grid(lemma_id)
    else:
        grid = tuple(tuple(pt) for pt in grid)
        for pt in grid:
            if len(pt) != len(lemma.params) or not lemma.hypotheses(*pt):
                raise GridOutsideHypotheses(f"{lemma_id} hypotheses exclude point {pt}")
    rows = []
    violations = []
    margin = None
    for pt in grid:
        lhs, rhs = lemma.sides(*pt)
        slack = lemma.slack_of(lhs, rhs)
        rows.append((pt, lhs, rhs, slack))
        failed = slack <= 0 if lemma.strict else slack < 0
        if failed:
            violations.append(pt)
        if margin is None or slack < margin:
            margin = slack
    return LemmaReport(
        lemma_id=lemma_id,
        grid=grid,
        violations=tuple(sorted(violations)),
        margin_min=margin,
        strict=lemma.strict,
        rows=tuple(rows),
    )
