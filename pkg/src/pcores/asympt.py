"""Circle-method asymptotics for p-core counts and identity verification.

Contents: the Dedekind-sum exponential sums over reduced residues, the
per-denominator singular-series terms, two asymptotic estimates (truncated
singular series and exact divisor sum over the leading constant), the
leading constant by six independent formulas, character sums of Bernoulli
and cotangent type, class numbers three ways, and machine checks of the
identities tying all of these together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import (bernoulli_poly, dedekind_sum, divisors, is_prime,
                    legendre_symbol, ramanujan_sum, sawtooth)
from .precision import (DEFAULT_PRECISION, PrecisionConfig, SnappedInteger,
                        VerificationError, snap_integer, to_mpf)
from .series import eta_quotient_value, pcore_count
from .special import cot_derivative, hurwitz_zeta, hurwitz_zeta_neg

# Exact count attached to approximation reports only below this n.
_EXACT_CUTOFF = 20000


def _require_p(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")


def _shift(p: int) -> int:
    # (p^2 - 1)/24 is an integer for every prime p >= 5
    return (p * p - 1) // 24


def exp_sum(p: int, k: int, n: int,
            config: PrecisionConfig = DEFAULT_PRECISION) -> SnappedInteger:
    """Exponential sum over reduced residues h mod k with Dedekind-sum phases.

    Each phase is the exact rational
        theta_h = (s(h,k) - p*s(p*h mod k, k))/2 - h*n/k,
    summed as e^(2*pi*i*theta_h) at working precision and snapped to an
    integer (the imaginary part is folded into the snap residual).  k = 1
    contributes the single term 1.  Denominators divisible by p are
    rejected.
    """
    _require_p(p)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k % p == 0:
        raise ValueError("denominators divisible by p are excluded")
    ctx = config.context()
    terms = []
    for h in range(k):
        if gcd(h, k) != 1:
            continue
        theta = (dedekind_sum(h, k) - p * dedekind_sum(p * h % k, k)) / 2 \
            - Fraction(h * n, k)
        terms.append(ctx.expjpi(to_mpf(ctx, 2 * (theta % 1))))
    total = ctx.fsum(terms)
    return snap_integer(total, config, label=f"exponential sum (k={k}, n={n})")


def singular_term(p: int, k: int, n: int,
                  config: PrecisionConfig = DEFAULT_PRECISION):
    """Contribution of denominator k to the singular-series estimate:

        (2*pi/k)^((p-1)/2) * p^(-p/2) * A * (n + (p^2-1)/24)^((p-3)/2)
            / ((p-3)/2)!

    where A is the snapped exponential sum for (k, n).
    """
    amplitude = exp_sum(p, k, n, config).nearest
    ctx = config.context()
    if amplitude == 0:
        return ctx.mpf(0)
    half = (p - 1) // 2
    shifted = n + _shift(p)
    value = (2 * ctx.pi / k) ** half
    value *= ctx.power(p, -to_mpf(ctx, Fraction(p, 2)))
    value *= amplitude
    value *= ctx.mpf(shifted) ** (half - 1)
    return value / math.factorial(half - 1)


@dataclass
class ApproxReport:
    """An asymptotic estimate next to the exact count, when available."""

    p: int
    n: int
    method: str
    estimate: object
    kmax: int | None = None
    exact: int | None = None
    relative_error: float | None = None
    divisor_sum: int | None = None
    constant: int | None = None


def _attach_exact(report: ApproxReport, config: PrecisionConfig) -> None:
    if report.n > _EXACT_CUTOFF:
        return
    report.exact = pcore_count(report.p, report.n)
    if report.exact:
        ctx = config.context()
        gap = abs(ctx.convert(report.estimate) - report.exact)
        report.relative_error = float(gap / report.exact)


def approx_singular_series(p: int, n: int, kmax: int,
                           config: PrecisionConfig = DEFAULT_PRECISION,
                           with_exact: bool = True) -> ApproxReport:
    """Truncated singular series: sum of singular_term over k <= kmax, p∤k.

    Terms are accumulated in ascending k so results are reproducible for a
    given precision config.
    """
    _require_p(p)
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    ctx = config.context()
    total = ctx.mpf(0)
    for k in range(1, kmax + 1):
        if k % p:
            total += singular_term(p, k, n, config)
    report = ApproxReport(p=p, n=n, method="singular", estimate=total, kmax=kmax)
    if with_exact:
        _attach_exact(report, config)
    return report


def approx_divisor_sum(p: int, n: int,
                       config: PrecisionConfig = DEFAULT_PRECISION,
                       with_exact: bool = True) -> ApproxReport:
    """Closed-form estimate: the exact character-twisted divisor sum

        D = sum over d | (n + (p^2-1)/24) of (d|p) * ((n+(p^2-1)/24)/d)^((p-3)/2)

    divided by the integer leading constant."""
    _require_p(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    shifted = n + _shift(p)
    e = (p - 3) // 2
    total = 0
    for d in divisors(shifted):
        total += legendre_symbol(d, p) * (shifted // d) ** e
    constant = leading_constant_report(p, config).consensus
    ctx = config.context()
    estimate = to_mpf(ctx, Fraction(total, constant))
    report = ApproxReport(p=p, n=n, method="divisor", estimate=estimate,
                          divisor_sum=total, constant=constant)
    if with_exact:
        _attach_exact(report, config)
    return report


# ---------------------------------------------------------------------------
# the leading constant, six ways

VARIANTS = ("i", "ii", "iii", "iv", "v", "vi")


def leading_constant(p: int, variant: str,
                     config: PrecisionConfig = DEFAULT_PRECISION):
    """One formula for the leading constant of the divisor-sum estimate.

    i    sqrt(p) * ((p-3)/2)! * (2*pi)^(-(p-1)/2) * sum_j (j|p) zeta((p-1)/2, j/p)
    ii   (1/2) * (-2|p) * p^((p-1)/2) * sum_j (j|p) zeta(-(p-3)/2, j/p)   [exact]
    iii  -(-1|p) * sqrt(p) * 2^(-(p+1)/2) * sum_j (j|p) cot^((p-3)/2)(pi*j/p)
    iv   -(-2|p) * p^((p-1)/2)/(p-1) * sum_j (j|p) B_((p-1)/2)(j/p)       [exact]
    v    sqrt(p) * 2^(-(p-1)/2) * half-range sum of cot^((p-3)/2) at j^2/p
    vi   Bernoulli half-range companion of v                               [exact]

    Variants v and vi exist only for p = 3 mod 4.  Numeric variants return
    working-precision values, exact ones return Fractions; signs are the
    formulas' own and are reconciled by leading_constant_report.
    """
    _require_p(p)
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    half = (p - 1) // 2
    r = half - 1  # = (p-3)/2
    ctx = config.context()
    if variant == "i":
        total = ctx.fsum(legendre_symbol(j, p)
                         * hurwitz_zeta(half, Fraction(j, p), config)
                         for j in range(1, p))
        return ctx.sqrt(p) * ctx.factorial(r) / (2 * ctx.pi) ** half * total
    if variant == "ii":
        total = sum(legendre_symbol(j, p) * hurwitz_zeta_neg(r, Fraction(j, p))
                    for j in range(1, p))
        return Fraction(legendre_symbol(-2, p), 2) * p ** half * total
    if variant == "iii":
        return cotangent_char_sum_raw(r, p, config)
    if variant == "iv":
        total = sum(legendre_symbol(j, p) * bernoulli_poly(half, Fraction(j, p))
                    for j in range(1, p))
        return -legendre_symbol(-2, p) * Fraction(p ** half, p - 1) * total
    if p % 4 != 3:
        raise ValueError("variants v and vi require p = 3 mod 4")
    if variant == "v":
        total = ctx.fsum(cot_derivative(r, Fraction(j * j % p, p), config)
                         for j in range(1, half + 1))
        return ctx.sqrt(p) / 2 ** (r + 1) * total
    total = sum(bernoulli_poly(r + 1, Fraction(j * j % p, p))
                for j in range(1, half + 1))
    sign = -((-1) ** ((r + 1) // 2)) * legendre_symbol(-1, p)
    return sign * Fraction(p ** (r + 1), r + 1) * total


@dataclass
class CpReport:
    """All applicable leading-constant formulas reconciled to one integer."""

    p: int
    values: dict
    signs: dict
    residuals: dict
    consensus: int
    tolerance: float


def leading_constant_report(p: int,
                            config: PrecisionConfig = DEFAULT_PRECISION) -> CpReport:
    """Evaluate every applicable variant and reconcile.

    The exact Bernoulli variant fixes the magnitude, the Hurwitz-zeta
    variant fixes the sign, and every variant must agree in absolute value
    to relative error 10^-(decimal_digits/2); disagreement raises
    VerificationError.  The consensus is asserted to be a positive integer.
    """
    _require_p(p)
    names = ["i", "ii", "iii", "iv"] + (["v", "vi"] if p % 4 == 3 else [])
    values = {v: leading_constant(p, v, config) for v in names}
    exact = values["iv"]
    if exact.denominator != 1:
        raise VerificationError(
            f"exact leading-constant formula for p={p} gave non-integer {exact}")
    magnitude = abs(int(exact))
    sign = 1 if values["i"] > 0 else -1
    consensus = sign * magnitude
    if consensus <= 0:
        raise VerificationError(
            f"leading constant for p={p} not positive: {consensus}")
    tolerance = 10.0 ** -(config.decimal_digits // 2)
    residuals = {}
    signs = {}
    for name, value in values.items():
        signs[name] = 1 if value > 0 else -1
        residuals[name] = float(abs(abs(value) - magnitude)) / magnitude
        if residuals[name] > tolerance:
            raise VerificationError(
                f"variant {name} for p={p} off consensus {magnitude} by "
                f"relative {residuals[name]:.3e}")
    return CpReport(p=p, values=values, signs=signs, residuals=residuals,
                    consensus=consensus, tolerance=tolerance)


# ---------------------------------------------------------------------------
# character sums and class numbers

def bernoulli_char_sum(r: int, p: int) -> Fraction:
    """Exact (-1)^floor((r-1)/2) * p^(r+1)/(2(r+1)) * sum_j (j|p) B_(r+1)(j/p)."""
    if r < 1:
        raise ValueError("r must be >= 1 (the sawtooth sum covers r = 0)")
    _require_p(p)
    total = sum(legendre_symbol(j, p) * bernoulli_poly(r + 1, Fraction(j, p))
                for j in range(1, p))
    return (-1) ** ((r - 1) // 2) * Fraction(p ** (r + 1), 2 * (r + 1)) * total


def cotangent_char_sum_raw(r: int, p: int,
                           config: PrecisionConfig = DEFAULT_PRECISION):
    """-(-1|p) * sqrt(p) * 2^-(r+2) * sum_j (j|p) cot^(r)(pi*j/p), unsnapped."""
    if r < 1:
        raise ValueError("r must be >= 1")
    _require_p(p)
    ctx = config.context()
    total = ctx.fsum(legendre_symbol(j, p)
                     * cot_derivative(r, Fraction(j, p), config)
                     for j in range(1, p))
    return -legendre_symbol(-1, p) * ctx.sqrt(p) * total / 2 ** (r + 2)


def cotangent_char_sum(r: int, p: int,
                       config: PrecisionConfig = DEFAULT_PRECISION) -> SnappedInteger:
    """The cotangent character sum snapped to its integer value."""
    raw = cotangent_char_sum_raw(r, p, config)
    return snap_integer(raw, config, label=f"cotangent sum (r={r}, p={p})")


def quadratic_sawtooth_sum(p: int) -> Fraction:
    """Exact sum of ((j^2/p)) over j = 1..p-1; an integer for p = 3 mod 4,
    zero by symmetry for p = 1 mod 4."""
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    return sum((sawtooth(Fraction(j * j, p)) for j in range(1, p)), Fraction(0))


CLASS_NUMBER_METHODS = ("dirichlet", "sawtooth", "cotangent")


def class_number(p: int, method: str = "all",
                 config: PrecisionConfig = DEFAULT_PRECISION) -> int:
    """h(-p) for a prime p = 3 mod 4, p >= 7, by one of three routes:

    dirichlet   -(1/p) * sum_j j*(j|p)                       [exact]
    sawtooth    -sum_j ((j^2/p))                              [exact]
    cotangent   (1/sqrt(p)) * half-range sum of cot(pi*j^2/p) [snapped]

    method="all" runs every route and requires agreement.
    """
    _require_p(p)
    if p % 4 != 3 or p < 7:
        raise ValueError("class_number requires a prime p = 3 mod 4, p >= 7")
    if method not in CLASS_NUMBER_METHODS + ("all",):
        raise ValueError(f"unknown method {method!r}")

    def by_dirichlet() -> int:
        total = sum(j * legendre_symbol(j, p) for j in range(1, p))
        value = Fraction(-total, p)
        if value.denominator != 1:
            raise VerificationError(f"weighted character sum for p={p} "
                                    f"not divisible by p: {value}")
        return int(value)

    def by_sawtooth() -> int:
        value = -quadratic_sawtooth_sum(p)
        if value.denominator != 1:
            raise VerificationError(f"sawtooth sum for p={p} not an integer: {value}")
        return int(value)

    def by_cotangent() -> int:
        ctx = config.context()
        total = ctx.fsum(cot_derivative(0, Fraction(j * j % p, p), config)
                         for j in range(1, (p - 1) // 2 + 1))
        return snap_integer(total / ctx.sqrt(p), config,
                            label=f"cotangent class number (p={p})").nearest

    routes = {"dirichlet": by_dirichlet, "sawtooth": by_sawtooth,
              "cotangent": by_cotangent}
    if method != "all":
        return routes[method]()
    results = {name: fn() for name, fn in routes.items()}
    if len(set(results.values())) != 1:
        raise VerificationError(f"class-number methods disagree for p={p}: {results}")
    return results["dirichlet"]


# ---------------------------------------------------------------------------
# identity verification sweeps

@dataclass
class ConjectureReport:
    """Result of an exhaustive parameter sweep of one identity."""

    name: str
    parameters: dict
    checked: int
    counterexamples: list
    worst_residual: float

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_ramanujan_identity(p: int, kmax: int, nmax: int,
                              config: PrecisionConfig = DEFAULT_PRECISION) -> ConjectureReport:
    """Check exp_sum(p,k,n) = (k|p) * c_k(n + (p^2-1)/24) over a full sweep."""
    _require_p(p)
    shift = _shift(p)
    counterexamples = []
    worst = 0.0
    checked = 0
    for k in range(1, kmax + 1):
        if k % p == 0:
            continue
        eps = legendre_symbol(k, p)
        for n in range(nmax + 1):
            snapped = exp_sum(p, k, n, config)
            expected = eps * ramanujan_sum(k, n + shift)
            checked += 1
            worst = max(worst, snapped.residual)
            if snapped.nearest != expected:
                counterexamples.append(
                    {"k": k, "n": n, "sum": snapped.nearest, "expected": expected})
    return ConjectureReport(
        name="ramanujan-identity",
        parameters={"p": p, "kmax": kmax, "nmax": nmax},
        checked=checked, counterexamples=counterexamples, worst_residual=worst)


def verify_dedekind_parity(p: int, kmax: int) -> ConjectureReport:
    """Check, in exact arithmetic, that for every k coprime to p and every
    h coprime to k,

        p*s(p*h mod k, k) - s(h,k) - (p^2-1)*h/(12k)

    is an integer whose parity is even exactly when (k|p) = 1."""
    _require_p(p)
    counterexamples = []
    checked = 0
    for k in range(1, kmax + 1):
        if k % p == 0:
            continue
        even_expected = legendre_symbol(k, p) == 1
        for h in range(k):
            if gcd(h, k) != 1:
                continue
            delta = p * dedekind_sum(p * h % k, k) - dedekind_sum(h, k) \
                - Fraction((p * p - 1) * h, 12 * k)
            checked += 1
            if delta.denominator != 1:
                counterexamples.append(
                    {"k": k, "h": h, "reason": "non-integer", "delta": str(delta)})
            elif (delta.numerator % 2 == 0) != even_expected:
                counterexamples.append(
                    {"k": k, "h": h, "reason": "parity", "delta": delta.numerator})
    return ConjectureReport(
        name="dedekind-parity", parameters={"p": p, "kmax": kmax},
        checked=checked, counterexamples=counterexamples, worst_residual=0.0)


@dataclass
class DirichletSeriesReport:
    """Partial Dirichlet series against its closed form, with a tail bound."""

    p: int
    s: int
    n: int
    kmax: int
    partial_sum: object
    closed_form: object
    deviation: float
    tail_bound: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def verify_dirichlet_series(p: int, s: int, n: int, kmax: int,
                            config: PrecisionConfig = DEFAULT_PRECISION) -> DirichletSeriesReport:
    """Check sum_k (k|p) c_k(n) / k^(1+s) against

        p^(1+s) * sum_{d|n} (d|p) d^-s / sum_j (j|p) zeta(1+s, j/p)

    to within the rigorous tail bound sigma(n) * kmax^-s / s plus 10^-20."""
    _require_p(p)
    if s < 2:
        raise ValueError("s must be >= 2 for absolute convergence headroom")
    if n < 1:
        raise ValueError("n must be >= 1")
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    ctx = config.context()
    terms = []
    for k in range(1, kmax + 1):
        if k % p == 0:
            continue
        c = ramanujan_sum(k, n)
        if c == 0:
            continue
        terms.append(legendre_symbol(k, p) * c * ctx.mpf(k) ** (-(1 + s)))
    partial = ctx.fsum(terms)
    dsum = ctx.fsum(legendre_symbol(d, p) * ctx.mpf(d) ** (-s)
                    for d in divisors(n))
    denom = ctx.fsum(legendre_symbol(j, p)
                     * hurwitz_zeta(1 + s, Fraction(j, p), config)
                     for j in range(1, p))
    closed = ctx.mpf(p) ** (1 + s) * dsum / denom
    sigma = sum(divisors(n))
    tail = sigma * float(kmax) ** (-s) / s
    deviation = float(abs(partial - closed))
    return DirichletSeriesReport(
        p=p, s=s, n=n, kmax=kmax, partial_sum=partial, closed_form=closed,
        deviation=deviation, tail_bound=tail, tolerance=tail + 1e-20)


@dataclass(frozen=True)
class TransformCase:
    """One instance of the modular transformation check.

    The left side samples the p-core product f at e^(2*pi*i*h/k - t); the
    right side pairs the reciprocal-argument product H at
    e^(2*pi*i*B/k - 4*pi^2/(k^2*p*t)) with the closed-form prefactor, where
    B*p*h = -1 mod k.
    """

    p: int
    h: int
    k: int
    t: float
    factors: int = 400

    def __post_init__(self) -> None:
        _require_p(self.p)
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0 <= self.h < self.k:
            raise ValueError("need 0 <= h < k")
        if gcd(self.h, self.k) != 1:
            raise ValueError("need gcd(h,k) = 1")
        if self.k % self.p == 0:
            raise ValueError("need gcd(p,k) = 1")
        if not self.t > 0:
            raise ValueError("t must be positive")
        if self.factors < 1:
            raise ValueError("factors must be >= 1")


@dataclass
class TransformReport:
    """Both sides of the transformation and how close they came."""

    case: TransformCase
    lhs: object
    rhs: object
    relative_deviation: float
    alt_exponent_deviation: float
    truncation_bound: float
    exponent: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return (self.relative_deviation <= self.tolerance
                and self.truncation_bound <= self.tolerance)


def verify_eta_transform(case: TransformCase,
                         config: PrecisionConfig = DEFAULT_PRECISION,
                         tolerance: float = 1e-12) -> TransformReport:
    """Evaluate both sides of the modular transformation numerically.

    The power of t in the prefactor is -(p-1)/2; the report also carries
    the deviation under the opposite-sign reading so the resolution of
    that ambiguity stays on the record.
    """
    p, h, k = case.p, case.h, case.k
    ctx = config.context()
    t = ctx.mpf(case.t)
    half = (p - 1) // 2

    x = ctx.expjpi(to_mpf(ctx, Fraction(2 * h, k))) * ctx.exp(-t)
    lhs_value = eta_quotient_value(p, x, case.factors, "f", config)

    b = 0 if k == 1 else (-pow(p * h % k, -1, k)) % k
    y = ctx.expjpi(to_mpf(ctx, Fraction(2 * b, k))) \
        * ctx.exp(-4 * ctx.pi ** 2 / (k * k * p * t))
    rhs_value = eta_quotient_value(p, y, case.factors, "H", config)

    prefactor = (2 * ctx.pi / k) ** half
    prefactor *= legendre_symbol(k, p)
    prefactor *= ctx.power(p, -to_mpf(ctx, Fraction(p, 2)))
    prefactor *= t ** (-half)
    phase = ctx.exp((p * p - 1) * t / 24) \
        * ctx.expjpi(-to_mpf(ctx, Fraction((p * p - 1) * h, 12 * k) % 2))
    rhs = prefactor * phase * rhs_value.value
    lhs = lhs_value.value

    scale = float(abs(lhs))
    deviation = float(abs(lhs - rhs)) / scale
    alt = rhs * t ** (p - 1)  # the opposite exponent reading, t^(+(p-1)/2)
    alt_deviation = float(abs(lhs - alt)) / scale
    trunc = lhs_value.truncation_bound + rhs_value.truncation_bound
    return TransformReport(case=case, lhs=lhs, rhs=rhs,
                           relative_deviation=deviation,
                           alt_exponent_deviation=alt_deviation,
                           truncation_bound=trunc, exponent=-half,
                           tolerance=tolerance)


@dataclass
class TrigIdentityReport:
    """Cotangent side vs Bernoulli side of the quadratic-argument identity."""

    r: int
    p: int
    lhs: SnappedInteger
    rhs: Fraction
    magnitude_match: bool
    relative_sign: int

    @property
    def passed(self) -> bool:
        return self.magnitude_match


def verify_quadratic_trig_identity(r: int, p: int,
                                   config: PrecisionConfig = DEFAULT_PRECISION) -> TrigIdentityReport:
    """Compare sqrt(p) * 2^-(r+1) * sum_{j<=(p-1)/2} cot^(r)(pi*(j^2 mod p)/p)
    against the exact Bernoulli companion sum.

    Coherent domain: p = 3 mod 4, even r >= 2, gcd(p, r+1) = 1.  The two
    sides are asserted equal in absolute value (the cotangent side must
    snap to an integer); their empirical relative sign is recorded rather
    than assumed.
    """
    if r < 2 or r % 2:
        raise ValueError("r must be even and >= 2")
    _require_p(p)
    if p % 4 != 3:
        raise ValueError("the identity is coherent only for p = 3 mod 4")
    if gcd(p, r + 1) != 1:
        raise ValueError("need gcd(p, r+1) = 1")
    ctx = config.context()
    half = (p - 1) // 2
    raw = ctx.sqrt(p) / 2 ** (r + 1) * ctx.fsum(
        cot_derivative(r, Fraction(j * j % p, p), config)
        for j in range(1, half + 1))
    lhs = snap_integer(raw, config, label=f"cotangent side (r={r}, p={p})")
    total = sum(bernoulli_poly(r + 1, Fraction(j * j % p, p))
                for j in range(1, half + 1))
    sign = -((-1) ** ((r + 1) // 2)) * legendre_symbol(-1, p)
    rhs = sign * Fraction(p ** (r + 1), r + 1) * total
    magnitude_match = rhs.denominator == 1 and abs(lhs.nearest) == abs(rhs)
    lhs_sign = 1 if lhs.nearest > 0 else (-1 if lhs.nearest < 0 else 0)
    rhs_sign = 1 if rhs > 0 else (-1 if rhs < 0 else 0)
    return TrigIdentityReport(r=r, p=p, lhs=lhs, rhs=rhs,
                              magnitude_match=magnitude_match,
                              relative_sign=lhs_sign * rhs_sign)


@dataclass
class DivisibilityRow:
    r: int
    value: Fraction
    is_integer: bool
    is_zero: bool
    exempt: bool
    coprime: bool
    divisible: bool | None


@dataclass
class DivisibilityReport:
    """Integrality and divisibility pattern of the Bernoulli character sums.

    Expected pattern: on nonzero integer entries with gcd(p, r+1) = 1 the
    value is divisible by p except on the residue class
    r = (p-3)/2 mod (p-1); the first non-integer value appears at
    r = p(p-1)/2 - 1.
    """

    p: int
    rmax: int
    rows: list = field(default_factory=list)
    first_non_integer: int | None = None
    expected_first_non_integer: int = 0
    divisibility_holds: bool = True
    first_failure_holds: bool | None = None

    @property
    def passed(self) -> bool:
        return self.divisibility_holds and self.first_failure_holds is not False


def divisibility_scan(p: int, rmax: int) -> DivisibilityReport:
    _require_p(p)
    if rmax < 1:
        raise ValueError("rmax must be >= 1")
    exempt_residue = ((p - 3) // 2) % (p - 1)
    report = DivisibilityReport(
        p=p, rmax=rmax, expected_first_non_integer=p * (p - 1) // 2 - 1)
    for r in range(1, rmax + 1):
        value = bernoulli_char_sum(r, p)
        is_integer = value.denominator == 1
        row = DivisibilityRow(
            r=r, value=value, is_integer=is_integer, is_zero=value == 0,
            exempt=r % (p - 1) == exempt_residue,
            coprime=gcd(p, r + 1) == 1,
            divisible=value.numerator % p == 0 if is_integer else None)
        report.rows.append(row)
        if not is_integer and report.first_non_integer is None:
            report.first_non_integer = r
        if (is_integer and not row.is_zero and row.coprime and not row.exempt
                and not row.divisible):
            report.divisibility_holds = False
    if rmax >= report.expected_first_non_integer:
        report.first_failure_holds = (
            report.first_non_integer == report.expected_first_non_integer)
    return report
