"""Moments, coefficient shape and desk-scale scans of block-count distributions.

All moments are exact :class:`~fractions.Fraction` values.  Floats appear only
in scan reports, where slopes and reference constants are compared.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx

from .engine import cached_cycle_polynomial, engine_limit
from .errors import ParameterError, ResourceGuardError
from .families import closed_form_coefficient
from .graph import LabeledGraph, family as family_graph, make_family, parse_family
from .poly import Poly, cycle_full, fib, harmonic, lucas, path_fib, rising_factorial, sturm_real_rooted

EULER_GAMMA = 0.5772156649015329
PHI = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class MomentSummary:
    mean: Fraction
    variance: Fraction
    support: tuple[int, int]
    total: int


def moments_from_polynomial(p: Poly) -> MomentSummary:
    """Mean p'(1)/p(1) and variance p''(1)/p(1) + mean - mean^2."""
    if not p:
        raise ParameterError("moments of the zero polynomial")
    total = p(1)
    if total <= 0:
        raise ParameterError(f"moments need p(1) > 0, got {total}")
    d1 = p.derivative()
    mean = Fraction(d1(1), total)
    variance = Fraction(d1.derivative()(1), total) + mean - mean * mean
    return MomentSummary(mean, variance, p.support, total)


def render_fraction(q: Fraction, digits: int = 12) -> dict:
    """Exact "p/q" string beside a decimal rendering with ``digits`` significant digits."""
    return {"exact": f"{q.numerator}/{q.denominator}", "decimal": f"{float(q):.{digits}g}"}


# ---------------------------------------------------------------------------
# printed moment formulas
# ---------------------------------------------------------------------------

def _path_block(m: int) -> tuple[Fraction, Fraction]:
    f, el = fib(m + 1), lucas(m + 1)
    a = m * el - f
    mean_part = Fraction(a, 5 * f)
    var = Fraction(5 * m * (m + 1) * f * f - a * a - 5 * a * f, 25 * f * f)
    return mean_part, var


def stated_moment_formula(family: str, n: int, r: int = 1, variant: str = "printed", **opts) -> tuple[Fraction, Fraction]:
    """(mean, variance) as given by a family's stated moment formula.

    ``family`` and ``variant``:

    * ``path``: r + (mL_{m+1} - F_{m+1}) / (5F_{m+1}) with m = n - r and the
      matching variance expression.
    * ``cycle`` (r >= 2): r + mF_m/L_m, m(m-1)/5 + 6mF_m/(5L_m) - (mF_m/L_m)^2.
    * ``complete``: ``"printed"`` H_{n-1} - H_{r-1} + r with sum (1/i - 1/i^2);
      ``"corrected"`` r + H_n - H_r with sum i/(i+1)^2, i = r..n-1.
    * ``complement_path``: r + sum_{j=r}^{n-2} 1/j, sum_{j=r}^{n-2} (j-1)/j^2.
    * ``star`` (n leaves, center restricted): ``"printed"`` r + (n-r+1)/(n-r+2);
      ``"with_singletons"`` adds n - r; ``"unrestricted"`` gives (r+1, 0);
      variance (n-r+1)/(n-r+2)^2 except in the unrestricted reading.
    * ``double_star`` with keyword ``k`` (first star order; n is the total order),
      ``r1``, ``r2``: ``"center"`` or ``"unrestricted"``.
    """
    if family == "path":
        m = n - r
        if m < 0 or r < 1:
            raise ParameterError(f"path moments need 1 <= r <= n (n={n}, r={r})")
        mean_part, var = _path_block(m)
        return r + mean_part, var
    if family == "cycle":
        m = n - r
        if r < 2 or m < 0:
            raise ParameterError(f"cycle moments need 2 <= r <= n (n={n}, r={r})")
        ratio = Fraction(m * fib(m), lucas(m))
        var = Fraction(m * (m - 1), 5) + Fraction(6 * m * fib(m), 5 * lucas(m)) - ratio * ratio
        return r + ratio, var
    if family == "complete":
        if not 1 <= r <= n:
            raise ParameterError(f"complete moments need 1 <= r <= n (n={n}, r={r})")
        if variant == "printed":
            mean = harmonic(n - 1) - harmonic(r - 1) + r
            var = sum((Fraction(1, i) - Fraction(1, i * i) for i in range(r, n)), Fraction(0))
        elif variant == "corrected":
            mean = r + harmonic(n) - harmonic(r)
            var = sum((Fraction(i, (i + 1) ** 2) for i in range(r, n)), Fraction(0))
        else:
            raise ParameterError(f"unknown complete-moment variant {variant!r}")
        return mean, var
    if family == "complement_path":
        if not 1 <= r <= n:
            raise ParameterError(f"complement_path moments need 1 <= r <= n (n={n}, r={r})")
        mean = r + sum((Fraction(1, j) for j in range(r, n - 1)), Fraction(0))
        var = sum((Fraction(j - 1, j * j) for j in range(r, n - 1)), Fraction(0))
        return mean, var
    if family == "star":
        if variant == "unrestricted":
            return Fraction(r + 1), Fraction(0)
        if not 1 <= r <= n + 1:
            raise ParameterError(f"star moments need 1 <= r <= n+1 (n={n}, r={r})")
        var = Fraction(n - r + 1, (n - r + 2) ** 2)
        mean = r + Fraction(n - r + 1, n - r + 2)
        if variant == "with_singletons":
            mean += n - r
        elif variant != "printed":
            raise ParameterError(f"unknown star-moment variant {variant!r}")
        return mean, var
    if family == "double_star":
        if variant == "unrestricted":
            return Fraction(r + 2), Fraction(0)
        k, r1, r2 = opts["k"], opts["r1"], opts["r2"]
        a, b = k - r1, n - k - r2
        mean = r + 2 + Fraction(a, a + 1) + Fraction(b, b + 1)
        var = Fraction(a, (a + 1) ** 2) + Fraction(b, (b + 1) ** 2)
        return mean, var
    raise ParameterError(f"no stated moment formula for family {family!r}")


# ---------------------------------------------------------------------------
# shape
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShapeVerdict:
    log_concave: bool
    unimodal: bool
    real_rooted: bool
    first_violation: int | None = None
    internal_zeros: bool = False

    def consistent(self) -> bool:
        """Real-rootedness implies log-concavity implies unimodality."""
        return (not self.real_rooted or self.log_concave) and (not self.log_concave or self.unimodal)


def shape_analysis(p: Poly) -> ShapeVerdict:
    """Log-concavity, unimodality and real-rootedness of the coefficient sequence.

    Both sequence tests run over the support [k_min, k_max].  A zero strictly
    inside the support breaks log-concavity at that index.
    ``first_violation`` is the lowest index failing log-concavity, else the
    lowest index failing unimodality.
    """
    if not p:
        raise ParameterError("shape of the zero polynomial")
    lo, hi = p.support
    a = [p[k] for k in range(lo, hi + 1)]
    internal_zeros = any(c == 0 for c in a)

    lc_fail = None
    for i in range(1, len(a) - 1):
        if a[i] * a[i] < a[i - 1] * a[i + 1] or a[i] == 0:
            lc_fail = lo + i
            break

    uni_fail = None
    i = 0
    while i + 1 < len(a) and a[i] <= a[i + 1]:
        i += 1
    while i + 1 < len(a):
        if a[i] < a[i + 1]:
            uni_fail = lo + i + 1
            break
        i += 1

    rooted = sturm_real_rooted(p).real_rooted
    first = lc_fail if lc_fail is not None else uni_fail
    return ShapeVerdict(lc_fail is None, uni_fail is None, rooted, first, internal_zeros)


# ---------------------------------------------------------------------------
# asymptotic scans
# ---------------------------------------------------------------------------

# stated constants; linear families give a slope in n, logarithmic ones a
# coefficient of ln n (the complete graph's offsets depend on r, see below)
CLAIMED_CONSTANTS = {
    "path": {"mean_slope": {"1/(phi+2)": 1 / (PHI + 2), "1/sqrt(5)": 1 / math.sqrt(5)},
             "variance_slope": {"1/(5 sqrt(5))": 1 / (5 * math.sqrt(5))}},
    "cycle": {"mean_slope": {"1/sqrt(5)": 1 / math.sqrt(5)},
              "variance_slope": {"1/(5 sqrt(5))": 1 / (5 * math.sqrt(5))}},
    "complement_path": {"mean_log_coefficient": {"1": 1.0}, "variance_log_coefficient": {"1": 1.0}},
}


def family_polynomial(family: str, n: int, r: int) -> tuple[Poly, str]:
    """Ground-truth polynomial for scanning, with a note on how it was obtained.

    Path, complete and unrestricted cycle use closed forms that the claim
    registry confirms against the engine; restricted cycles (r >= 2) use the
    confirmed coefficient formula; everything else goes through the engine.
    """
    if family == "path":
        r_eff = max(r, 1)
        return path_fib(n - r_eff + 1).shift(r_eff - 1), "closed form x^{r-1} f_{n-r+1}"
    if family == "complete":
        return rising_factorial(r, n), "rising factorial"
    if family == "cycle":
        if r <= 1:
            return cycle_full(n), "2x + sum (n/k) C(k, n-k) x^k"
        return Poly(closed_form_coefficient("cycle", n, k, r) if k >= r else 0 for k in range(n + 1)), \
            "C(k-r+2, n-k)"
    g = make_family(parse_family(f"{family}:{n}", r))
    if g.n > engine_limit(None):
        raise ResourceGuardError(f"{family}:{n} has {g.n} vertices, above the engine limit")
    return cached_cycle_polynomial(g), "engine"


@dataclass
class ScanReport:
    family: str
    r: int
    n_values: list[int]
    means: list[Fraction]
    variances: list[Fraction]
    source: str
    trend: str
    fitted: dict[str, float] = field(default_factory=dict)
    limit: dict[str, float] = field(default_factory=dict)
    claimed: dict[str, dict[str, float]] = field(default_factory=dict)
    verdicts: dict[str, str] = field(default_factory=dict)
    variance_strictly_increasing: bool = False
    harmonic_mean_exact: bool | None = None

    def to_dict(self, digits: int = 12) -> dict:
        return {
            "family": self.family,
            "r": self.r,
            "source": self.source,
            "trend": self.trend,
            "points": [
                {"n": n, "mean": render_fraction(m, digits), "variance": render_fraction(v, digits)}
                for n, m, v in zip(self.n_values, self.means, self.variances)
            ],
            "fitted": {k: f"{v:.{digits}g}" for k, v in self.fitted.items()},
            "limit": {k: f"{v:.{digits}g}" for k, v in self.limit.items()},
            "claimed": {k: {name: f"{c:.{digits}g}" for name, c in d.items()} for k, d in self.claimed.items()},
            "verdicts": self.verdicts,
            "variance_strictly_increasing": self.variance_strictly_increasing,
            "harmonic_mean_exact": self.harmonic_mean_exact,
        }


def _least_squares_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    k = len(xs)
    mx, my = sum(xs) / k, sum(ys) / k
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def asymptotic_scan(family: str, n_values: Iterable[int], r: int = 1, band: float = 0.01) -> ScanReport:
    """Exact moments over ``n_values`` with slope or offset estimates.

    Linear families (path, cycle) report a least-squares slope over the range
    and the last increment as the limiting estimate.  Logarithmic families
    (complete, complement_path) report mean - ln n and variance - ln n at the
    top of the range (extrapolated in 1/n), and the complete graph also checks mean = r + H_n - H_r.
    A claimed constant gets ``"agrees"`` when within ``band`` of the estimate.
    """
    ns = sorted(set(n_values))
    if len(ns) < 3:
        raise ParameterError("a scan needs at least three values of n")
    if family not in ("path", "cycle", "complete", "complement_path"):
        raise ParameterError(f"no scalable formula for family {family!r}")
    means, variances, source = [], [], ""
    for n in ns:
        p, source = family_polynomial(family, n, r)
        mom = moments_from_polynomial(p)
        means.append(mom.mean)
        variances.append(mom.variance)

    trend = "linear" if family in ("path", "cycle") else "logarithmic"
    report = ScanReport(family, r, ns, means, variances, source, trend)
    report.variance_strictly_increasing = all(a < b for a, b in zip(variances, variances[1:]))
    fm = [float(m) for m in means]
    fv = [float(v) for v in variances]
    if trend == "linear":
        report.fitted = {"mean_slope": _least_squares_slope(ns, fm), "variance_slope": _least_squares_slope(ns, fv)}
        top, below = ns[-1], ns[-2]
        span = top - below
        report.limit = {"mean_slope": (fm[-1] - fm[-2]) / span, "variance_slope": (fv[-1] - fv[-2]) / span}
    else:
        logs = [math.log(n) for n in ns]
        report.fitted = {"mean_log_coefficient": _least_squares_slope(logs, fm),
                         "variance_log_coefficient": _least_squares_slope(logs, fv)}
        # offsets behave like L + a/n; two top points eliminate a
        n1, n2 = ns[-2], ns[-1]

        def offset(vals):
            o1, o2 = vals[-2] - logs[-2], vals[-1] - logs[-1]
            return (n2 * o2 - n1 * o1) / (n2 - n1)

        report.limit = {"mean_offset": offset(fm), "variance_offset": offset(fv),
                        "mean_log_coefficient": (fm[-1] - fm[-2]) / (logs[-1] - logs[-2]),
                        "variance_log_coefficient": (fv[-1] - fv[-2]) / (logs[-1] - logs[-2])}
    if family == "complete":
        r_eff = max(r, 1)
        report.harmonic_mean_exact = all(m == r_eff + harmonic(n) - harmonic(r_eff) for n, m in zip(ns, means))
    claimed = dict(CLAIMED_CONSTANTS.get(family, {}))
    if family == "complete":
        # mean ~ ln(n-r) + gamma + r, variance ~ ln(n-r) + gamma - pi^2/6
        claimed = {"mean_offset": {"gamma + r": EULER_GAMMA + r},
                   "variance_offset": {"gamma - pi^2/6": EULER_GAMMA - math.pi ** 2 / 6}}
    report.claimed = claimed
    for quantity, constants in claimed.items():
        measured = report.limit.get(quantity, report.fitted.get(quantity))
        for name, value in constants.items():
            report.verdicts[f"{quantity}={name}"] = "agrees" if abs(measured - value) <= band else "disagrees"
    return report


# ---------------------------------------------------------------------------
# conjecture scans
# ---------------------------------------------------------------------------

def _nx_graph(g: LabeledGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def default_corpus(max_n: int = 9) -> list[tuple[str, LabeledGraph]]:
    """Every family member with at most ``max_n`` vertices, by name."""
    specs = []
    for n in range(1, max_n + 1):
        specs += [f"path:{n}", f"complete:{n}", f"star:{n}", f"complement_path:{n}", f"empty:{n}"]
        if n >= 3:
            specs += [f"cycle:{n}", f"complement_cycle:{n}"]
        if 3 <= n - 1:
            specs.append(f"wheel:{n - 1}")
        if n >= 2:
            specs.append(f"fan:{n - 1}")
        for k in range(1, n):
            if k <= n - k:
                specs.append(f"double_star:{k},{n - k}")
            specs.append(f"lollipop:{k},{n - k}")
            if k >= 3:
                specs.append(f"tadpole:{k},{n - k}")
        if n % 2 == 0:
            specs.append(f"barbell:{n // 2}")
        for a in range(1, n // 2 + 1):
            specs.append(f"complete_bipartite:{a},{n - a}")
    return [(s, family_graph(s)) for s in specs]


@dataclass
class ConjectureScan:
    rows: list[dict]
    weak_monotone_failures: list[dict]
    strict_monotone_failures: list[dict]
    shape_failures: list[dict]
    restriction_invariant: list[dict]

    def to_dict(self) -> dict:
        return {
            "graphs": len(self.rows),
            "rows": self.rows,
            "weak_monotone_failures": self.weak_monotone_failures,
            "strict_monotone_failures": self.strict_monotone_failures,
            "shape_failures": self.shape_failures,
            "restriction_invariant": self.restriction_invariant,
        }


def conjecture_scan(corpus: Sequence[tuple[str, LabeledGraph]]) -> ConjectureScan:
    """Shape verdicts, r-monotonicity and restriction-invariant graphs over a corpus.

    A shape failure is any polynomial that is not log-concave or not
    unimodal; its witness is the coefficient window around the first failing
    index.  Weak monotonicity coeff_{r+1}[k] <= coeff_r[k] is expected everywhere;
    strict decrease in r for 1 <= r <= k (among nonzero entries) is scanned
    and the first failing (k, r) recorded.  Restriction-invariant pairs are
    (graph, r >= 2) with C_r = C_1.
    """
    rows, weak, strict, shape_bad, invariant = [], [], [], [], []
    for name, g in corpus:
        base = g.with_r(0)
        polys = [cached_cycle_polynomial(base.with_r(r)) for r in range(g.n + 1)]
        p = polys[0]
        verdict = shape_analysis(p)
        h = _nx_graph(g)
        planar = nx.check_planarity(h)[0]
        chordal = nx.is_chordal(h) if g.n else True
        row = {"graph": name, "n": g.n, "planar": planar, "chordal": chordal,
               "log_concave": verdict.log_concave, "unimodal": verdict.unimodal,
               "real_rooted": verdict.real_rooted}
        rows.append(row)
        if not (verdict.log_concave and verdict.unimodal and verdict.consistent()):
            k = verdict.first_violation
            window = [p[j] for j in (k - 1, k, k + 1)] if k is not None else []
            shape_bad.append({"graph": name, "first_violation": k, "coefficients": window, **row})
        for r in range(1, g.n):
            for k in range(g.n + 1):
                if polys[r + 1][k] > polys[r][k]:
                    weak.append({"graph": name, "k": k, "r": r, "coeff_r": polys[r][k], "coeff_r+1": polys[r + 1][k]})
        first_strict = None
        for k in range(1, g.n + 1):
            seq = [polys[r][k] for r in range(1, k + 1)]
            for r in range(1, k):
                if seq[r - 1] and not seq[r] < seq[r - 1]:
                    first_strict = {"graph": name, "k": k, "r": r, "coeff_r": seq[r - 1], "coeff_r+1": seq[r]}
                    break
            if first_strict:
                break
        if first_strict:
            strict.append(first_strict)
        for r in range(2, g.n + 1):
            if polys[r] == polys[1]:
                invariant.append({"graph": name, "r": r})
    return ConjectureScan(rows, weak, strict, shape_bad, invariant)
