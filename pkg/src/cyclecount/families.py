"""Closed forms for named families, evaluated exactly as stated.

Nothing here is ground truth.  Each function returns what a formula *says*;
:mod:`cyclecount.claims` decides whether it is right by comparing against the
engine or the oracle.  Size conventions follow :func:`cyclecount.graph.make_family`:
``star`` is sized by vertex count, ``wheel``/``fan`` by rim length (one extra
hub vertex), ``double_star:k,m`` by the vertex counts of its two stars.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import ParameterError
from .poly import (
    Poly,
    binomial,
    cycle_full,
    cycle_matching,
    fib,
    lucas,
    path_fib,
    poly_product,
    rising_factorial,
)

LUCAS_VARIANTS = {"full": cycle_full, "matching": cycle_matching}


def _lucas_poly(variant: str, m: int) -> Poly:
    try:
        return LUCAS_VARIANTS[variant](m)
    except KeyError:
        raise ParameterError(f"unknown cycle-polynomial variant {variant!r}") from None


def _require(cond: bool, message: str):
    if not cond:
        raise ParameterError(message)


def _hub_sum(n: int, k: int, r: int) -> int:
    # sum_{l=2}^{n-k+1} C(k, n-l-k-r+2), shared by the wheel and fan forms
    return sum(binomial(k, n - ell - k - r + 2) for ell in range(2, n - k + 2))


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------

def broder_recurrence_table(n_max: int, r: int) -> dict[int, list[int]]:
    """Rows ``n = r..n_max`` of T(n,k) = T(n-1,k-1) + (n-1) T(n-1,k).

    The base row n = r is a single 1 at k = r.  Row n is a dense coefficient
    list of length n+1.
    """
    _require(0 <= r <= n_max, f"need 0 <= r <= n_max, got r={r}, n_max={n_max}")
    table = {r: [0] * r + [1]}
    for n in range(r + 1, n_max + 1):
        prev = table[n - 1] + [0]
        row = [0] * (n + 1)
        for k in range(n + 1):
            row[k] = (prev[k - 1] if k else 0) + (n - 1) * prev[k]
        table[n] = row
    return table


def closed_form_coefficient(family: str, n: int, k: int, r: int) -> int:
    """Coefficient of x^k in C_r(family_n, x) according to its closed form.

    ``cycle`` with r >= 2 uses C(k-r+2, n-k); with r <= 1 it uses the
    unrestricted form (2 at k = 1, (n/k) C(k, n-k) above).  ``star`` is sized
    by vertex count N and reads 1 at k = N, N-r at k = N-1, 0 elsewhere.
    """
    r_eff = max(r, 1)
    if family == "path":
        _require(n >= 1 and 1 <= r_eff <= k <= n, f"path needs 1 <= r <= k <= n (n={n}, k={k}, r={r})")
        return binomial(k - r_eff + 1, n - k)
    if family == "cycle":
        _require(n >= 3 and 1 <= k <= n and r <= k, f"cycle needs n >= 3, r <= k <= n (n={n}, k={k}, r={r})")
        if r >= 2:
            return binomial(k - r + 2, n - k)
        if k == 1:
            return 2
        return _exact_ratio(n * binomial(k, n - k), k)
    if family == "complete":
        _require(0 <= r <= k <= n, f"complete needs r <= k <= n (n={n}, k={k}, r={r})")
        return broder_recurrence_table(n, r)[n][k]
    if family == "star":
        _require(n >= 1 and 1 <= r_eff <= k <= n, f"star needs 1 <= r <= k <= N (N={n}, k={k}, r={r})")
        if k == n:
            return 1
        if k == n - 1:
            return n - r_eff
        return 0
    if family == "wheel":
        _require(n >= 3 and 1 <= r <= k <= n + 1, f"wheel needs n >= 3, 1 <= r <= k <= n+1 (n={n}, k={k}, r={r})")
        return (n * binomial(k - r, n - k) + (n - r) * binomial(k - r + 1, n - k)
                + 2 * binomial(k - r + 2, n - k + 1) + (n - r + 1) * _hub_sum(n, k, r))
    if family == "fan":
        _require(n >= 1 and 1 <= r <= k <= n + 1, f"fan needs 1 <= r <= k <= n+1 (n={n}, k={k}, r={r})")
        return (binomial(k - r + 1, n - k + 1) + (n + r - 1) * binomial(k - r, n - k)
                + (n - r + 1) * _hub_sum(n, k, r))
    raise ParameterError(f"no closed-form coefficient for family {family!r}")


def _exact_ratio(num: int, den: int) -> int | Fraction:
    # integer when it divides, otherwise the exact rational the formula produces
    return num // den if num % den == 0 else Fraction(num, den)


def path_table_coefficient(n: int, k: int) -> int:
    """Unrestricted path entry C(k, n-k)."""
    return binomial(k, n - k)


def cycle_table_coefficient(n: int, k: int) -> int:
    """Unrestricted cycle entry C(k, n-k) + C(k-1, n-k-1) for k > 1, and 2 at k = 1."""
    _require(n >= 3 and 1 <= k <= n, f"cycle table needs n >= 3, 1 <= k <= n (n={n}, k={k})")
    if k == 1:
        return 2
    return binomial(k, n - k) + binomial(k - 1, n - k - 1)


def kaplansky_circular(n: int, m: int) -> int:
    """n/(n-m) C(n-m, m): m pairwise non-adjacent edges of C_n."""
    _require(n >= 3 and 0 <= m <= n // 2, f"need n >= 3 and 0 <= m <= n/2 (n={n}, m={m})")
    return _exact_ratio(n * binomial(n - m, m), n - m)


def tadpole_coefficient_expansion(n: int, m: int, k: int) -> int:
    """The binomial double-sum expansion of the tadpole coefficient at x^k."""
    first = sum(binomial(i, m - i) * (binomial(k - i - 1, n - k + i) + 2 * binomial(k - i - 1, n - k + i - 1))
                for i in range(0, m + 1))
    second = sum(binomial(j, m - 1 - j) * binomial(k - j - 1, n - k + j) for j in range(0, m))
    return first + second


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def closed_form_polynomial(family: str, n: int, r: int = 1, variant: str | None = None) -> Poly:
    """C_r(family_n, x) from its product / Fibonacci / Lucas closed form.

    Families and variants:

    * ``path``: x^{r-1} f_{n-r+1}.
    * ``complete``: x^r (x+r)...(x+n-1).
    * ``complement_path``: x^r prod_{i=r-1}^{top} (x+i) with ``top = n-3``
      (variant ``"printed"``, default) or ``n-2`` (``"corrected"``).
    * ``cycle_consecutive``: x^{r-1} f_{n-r+1}.
    * ``cycle_periodic``: x^{r-1} l_{n-r} with l the ``"matching"`` (default)
      or ``"full"`` cycle polynomial.
    * ``star`` (N vertices): x^N + (N-r) x^{N-1}, r read as 1 when 0.
    * ``cycle``: 2x + sum_{k>=2} (n/k) C(k, n-k) x^k (unrestricted).
    """
    r_eff = max(r, 1)
    if family == "path":
        _require(1 <= r_eff <= n, f"path needs 1 <= r <= n (n={n}, r={r})")
        return path_fib(n - r_eff + 1).shift(r_eff - 1)
    if family == "complete":
        _require(0 <= r <= n, f"complete needs 0 <= r <= n (n={n}, r={r})")
        return rising_factorial(r, n)
    if family == "complement_path":
        _require(1 <= r_eff <= n, f"complement_path needs 1 <= r <= n (n={n}, r={r})")
        top = {"printed": n - 3, "corrected": n - 2, None: n - 3}.get(variant)
        if top is None:
            raise ParameterError(f"unknown complement_path variant {variant!r}")
        return poly_product(Poly([i, 1]) for i in range(r_eff - 1, top + 1)).shift(r_eff)
    if family == "cycle_consecutive":
        _require(n >= r >= 2, f"consecutive-restricted cycle needs n >= r >= 2 (n={n}, r={r})")
        return path_fib(n - r + 1).shift(r - 1)
    if family == "cycle_periodic":
        _require(r >= 1 and n - r >= 3, f"periodic cycle form needs r >= 1 and n-r >= 3 (n={n}, r={r})")
        return _lucas_poly(variant or "matching", n - r).shift(r - 1)
    if family == "star":
        _require(n >= 1 and r_eff <= n, f"star needs 1 <= r <= N (N={n}, r={r})")
        return Poly.monomial(n) + Poly.monomial(n - 1, n - r_eff)
    if family == "cycle":
        _require(n >= 3, f"cycle needs n >= 3, got {n}")
        return cycle_full(n)
    if family in ("wheel", "fan"):
        _require(n >= 1 and r >= 1, f"{family} needs r >= 1")
        return Poly(closed_form_coefficient(family, n, k, r) if k >= r else 0 for k in range(n + 2))
    raise ParameterError(f"no closed-form polynomial for family {family!r}")


def consecutive_cycle_recurrence(n: int, r: int) -> Poly:
    """Run C(n) = x C(n-1) + x C(n-2) from x^r at n = r and x^{r+1} + 2x^r at n = r+1."""
    _require(n >= r >= 2, f"need n >= r >= 2 (n={n}, r={r})")
    a = Poly.monomial(r)
    b = Poly.monomial(r + 1) + Poly.monomial(r, 2)
    if n == r:
        return a
    for _ in range(n - r - 1):
        a, b = b, (b + a).shift(1)
    return b


def path_restricted_recurrence(n: int, r: int) -> Poly:
    """Run C(n) = x C(n-1) + x C(n-2) from x^r at n = r and x^{r+1} + x^r at n = r+1."""
    _require(1 <= r <= n, f"need 1 <= r <= n (n={n}, r={r})")
    a = Poly.monomial(r)
    b = Poly.monomial(r + 1) + Poly.monomial(r)
    if n == r:
        return a
    for _ in range(n - r - 1):
        a, b = b, (b + a).shift(1)
    return b


def path_restricted_expanded(n: int, r: int) -> Poly:
    """sum_{j=0}^{floor((n-r+1)/2)} C(n-r+1-j, j) x^{n-j}."""
    _require(1 <= r <= n, f"need 1 <= r <= n (n={n}, r={r})")
    top = n - r + 1
    out = [0] * (n + 1)
    for j in range(top // 2 + 1):
        out[n - j] += binomial(top - j, j)
    return Poly(out)


def composite_identity_polynomial(kind: str, *sizes: int, variant: str = "full") -> Poly:
    """Bridge-decomposition closed forms.

    * ``tadpole(n, m)``: l_n f_m + x f_{n-1} f_{m-1} with l chosen by ``variant``.
    * ``lollipop(n, m)``: x^{(n-1)} [(x+n-1) f_m + x f_{m-1}] (rising factorial).
    * ``barbell(n)``: C(K_n)^2 + x C(K_{n-1})^2.
    * ``barbell_factored(n)``: (x^{(n-1)})^2 (x^2 + (2n-1)x + (n-1)^2).
    * ``double_star(k, m, r1, r2)``: (x^k + (k-r1)x^{k-1})(x^m + (m-r2)x^{m-1})
      + x (x^{k-1} + (k-r1-1)x^{k-2})(x^{m-1} + (m-r2-1)x^{m-2}).
    """
    if kind == "tadpole":
        n, m = _arity(kind, sizes, 2)
        _require(n >= 3 and m >= 1, f"tadpole needs n >= 3, m >= 1, got {sizes}")
        return _lucas_poly(variant, n) * path_fib(m) + (path_fib(n - 1) * path_fib(m - 1)).shift(1)
    if kind == "lollipop":
        n, m = _arity(kind, sizes, 2)
        _require(n >= 1 and m >= 1, f"lollipop needs n, m >= 1, got {sizes}")
        head = rising_factorial(0, n - 1)
        return head * (Poly([n - 1, 1]) * path_fib(m) + path_fib(m - 1).shift(1))
    if kind == "barbell":
        (n,) = _arity(kind, sizes, 1)
        _require(n >= 1, f"barbell needs n >= 1, got {n}")
        full, minor = rising_factorial(0, n), rising_factorial(0, n - 1)
        return full * full + (minor * minor).shift(1)
    if kind == "barbell_factored":
        (n,) = _arity(kind, sizes, 1)
        _require(n >= 1, f"barbell needs n >= 1, got {n}")
        minor = rising_factorial(0, n - 1)
        return minor * minor * Poly([(n - 1) ** 2, 2 * n - 1, 1])
    if kind == "double_star":
        k, m, r1, r2 = _arity(kind, sizes, 4)
        _require(k >= 2 and m >= 2, f"double_star form needs star orders >= 2, got {sizes}")

        def star(order: int, restricted: int) -> Poly:
            return Poly.monomial(order) + Poly.monomial(order - 1, order - restricted)

        # the bridge term's stars each lose one leaf but keep their restricted count
        left = Poly.monomial(k - 1) + Poly.monomial(k - 2, k - r1 - 1)
        right = Poly.monomial(m - 1) + Poly.monomial(m - 2, m - r2 - 1)
        return star(k, r1) * star(m, r2) + (left * right).shift(1)
    raise ParameterError(f"unknown composite kind {kind!r}")


def _arity(kind: str, sizes: tuple, count: int) -> tuple:
    if len(sizes) != count:
        raise ParameterError(f"{kind} takes {count} parameters, got {len(sizes)}")
    return sizes


# ---------------------------------------------------------------------------
# totals
# ---------------------------------------------------------------------------

def totals_claim(family: str, n: int, r: int = 1, variant: str = "printed") -> int:
    """C_r(family_n, 1) according to the stated Fibonacci / Lucas / factorial total.

    ``path`` with ``variant="corrected"`` gives F_{n-r+2}; ``cycle`` with r >= 2
    gives F_{n-r+3} and with r <= 1 gives L_n + 1 (``"corrected"``: L_n + 2).
    """
    r_eff = max(r, 1)
    if family == "path":
        _require(1 <= r_eff <= n, f"path needs 1 <= r <= n (n={n}, r={r})")
        if r <= 1 and variant == "unrestricted":
            return fib(n + 1)
        return fib(n - r_eff + (2 if variant == "corrected" else 1))
    if family == "cycle":
        _require(n >= 3, f"cycle needs n >= 3, got {n}")
        if r >= 2:
            return fib(n - r + 3)
        return lucas(n) + (2 if variant == "corrected" else 1)
    if family == "cycle_consecutive":
        _require(n >= r >= 2, f"need n >= r >= 2 (n={n}, r={r})")
        return fib(n - r + 2)
    if family == "cycle_periodic":
        _require(n - r >= 0 and r >= 1, f"need 1 <= r <= n (n={n}, r={r})")
        return lucas(n - r)
    if family == "complete":
        _require(0 <= r <= n, f"complete needs 0 <= r <= n (n={n}, r={r})")
        return math.factorial(n) // math.factorial(r)
    if family == "star":
        # N = n vertices, i.e. n-1 leaves: (n-1) - r + 2
        _require(n >= 1 and 1 <= r_eff <= n, f"star needs 1 <= r <= N (N={n}, r={r})")
        return n - r_eff + 1
    if family == "wheel":
        _require(n >= 3 and 1 <= r <= n + 1, f"wheel needs n >= 3, 1 <= r <= n+1 (n={n}, r={r})")
        _require(n - r + 1 >= 0, "wheel total needs r <= n+1")
        return (fib(n - r + 3) + fib(n - r + 2) + (n + 1) * fib(n - r + 1)
                + (n - r + 1) * (fib(n - r + 1) - 1))
    if family == "fan":
        _require(n >= 1 and 1 <= r <= n, f"fan total needs 1 <= r <= n (n={n}, r={r})")
        return (fib(n - r + 2) + fib(n - r + 1) + (n + 1) * fib(n - r)
                + (n - r + 1) * (fib(n - r) - 1))
    raise ParameterError(f"no stated total for family {family!r}")
