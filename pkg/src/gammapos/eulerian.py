"""The Eulerian polynomial families and their q-level identity checks.

Every family polynomial here is produced by its defining summation over the
symmetric group (or over derangements), so the values are brute-force ground
truth.  The verification operations then test the structural identities:
gamma expansions against constrained-class inversion polynomials, binomial
symmetries, and the q-exponential generating functions.

The derangement family needs one correction.  With the gamma coefficients
gamma0_{n,k} summing q^inv over permutations with no double, initial, or
final descents and k descents, small cases force the expansion

    D_n(q,t) = sum_k gamma0_{n,k}(q) t^(k+1) (1+t)^(n-2-2k),    n >= 2,

rather than the exponent patterns t^k (1+t)^(n-2k) or t^k (1+t)^(n-2-2k);
``verify_gamma_theorem`` reports all three so the failing forms stay visible
as negative controls.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import comb

from .errors import ResourceLimitError, ValidationError
from .exactpoly import (
    QDIV,
    GammaVector,
    IntPoly1,
    QTPoly,
    QTRPoly,
    TruncSeries,
    gamma_contract,
    is_b_unimodal,
    is_palindromic,
    q_binomial,
)
from .permstat import (
    DEFAULT_ENUMERATION_BOUND,
    binomial_eulerian_gamma_class,
    class_inv_poly,
    class_size,
    derangement_gamma_class,
    descent_class_check,
    eulerian_gamma_class,
    max_prefix_class,
)
from .reports import Report, combine


class FamilyTag(enum.Enum):
    EULERIAN_T = "eulerian-t"
    EULERIAN_QT = "eulerian-qt"
    EULERIAN_QTR = "eulerian-qtr"
    BINOMIAL_EULERIAN_T = "binomial-eulerian-t"
    BINOMIAL_EULERIAN_QT = "binomial-eulerian-qt"
    DERANGEMENT_QT = "derangement-qt"


def _check_bound(n: int, bound: int):
    if n < 0:
        raise ValidationError("n must be nonnegative")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds the enumeration bound {bound}")


@lru_cache(maxsize=None)
def _qtr_counts(n: int):
    """Counts of (maj - exc, exc, fix) over S_n, one sweep."""
    acc: dict[tuple[int, int, int], int] = {}
    for p in _itertools_permutations(range(1, n + 1)):
        maj = 0
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                maj += i + 1
        exc = 0
        fix = 0
        for i, v in enumerate(p):
            if v > i + 1:
                exc += 1
            elif v == i + 1:
                fix += 1
        key = (maj - exc, exc, fix)
        acc[key] = acc.get(key, 0) + 1
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _des_counts(n: int):
    counts: dict[int, int] = {}
    for p in _itertools_permutations(range(1, n + 1)):
        d = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
        counts[d] = counts.get(d, 0) + 1
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1)) if counts else ()


def eulerian_poly(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> IntPoly1:
    """Classical Eulerian polynomial: sum of t^des over S_n."""
    _check_bound(n, bound)
    return IntPoly1(_des_counts(n))


def q_eulerian_fix(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> QTRPoly:
    """Sum of q^(maj-exc) t^exc r^fix over S_n."""
    _check_bound(n, bound)
    return QTRPoly({key: c for key, c in _qtr_counts(n)})


@lru_cache(maxsize=None)
def _q_eulerian(n: int) -> QTPoly:
    return QTRPoly({key: c for key, c in _qtr_counts(n)}).specialize_r(1)


def q_eulerian(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> QTPoly:
    """Sum of q^(maj-exc) t^exc over S_n; the q-analog of the Eulerian
    polynomial."""
    _check_bound(n, bound)
    return _q_eulerian(n)


def q_eulerian_number(n: int, j: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> IntPoly1:
    """Coefficient of t^j in the q-Eulerian polynomial (zero outside range)."""
    return q_eulerian(n, bound).t_coeff(j)


def binomial_eulerian_poly(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> IntPoly1:
    """1 + t * sum_m C(n, m) A_m(t), computed at the integer level."""
    _check_bound(n, bound)
    total = IntPoly1.one()
    for m in range(1, n + 1):
        total = total + (eulerian_poly(m, bound) * comb(n, m)).shifted(1)
    return total


@lru_cache(maxsize=None)
def _q_binomial_eulerian(n: int) -> QTPoly:
    total = QTPoly.one()
    for m in range(1, n + 1):
        total = total + (_q_eulerian(m) * q_binomial(n, m)).t_shifted(1)
    return total


def q_binomial_eulerian(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> QTPoly:
    """1 + t * sum_m qbinom(n, m) A_m(q, t)."""
    _check_bound(n, bound)
    return _q_binomial_eulerian(n)


def derangement_poly(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> QTPoly:
    """Sum of q^(maj-exc) t^exc over fixed-point-free permutations."""
    _check_bound(n, bound)
    return q_eulerian_fix(n, bound).specialize_r(0)


# ---------------------------------------------------------------------------
# Gamma expansions
# ---------------------------------------------------------------------------

def _gamma_vector_from_classes(n: int, kmax: int, class_fn, bound: int,
                               q_level: bool) -> tuple:
    gammas = []
    for k in range(kmax + 1):
        poly = class_inv_poly(class_fn(n, k), bound)
        gammas.append(poly if q_level else poly(1))
    return tuple(gammas)


def verify_gamma_theorem(family: FamilyTag, n: int,
                         bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """Check a family polynomial against its gamma expansion.

    The gamma coefficients come from the matching permutation class via
    ``class_inv_poly`` (their cardinalities at the t level), so the two
    sides are computed by genuinely different routes.
    """
    family = FamilyTag(family)
    params = {"family": family.value, "n": n}

    if family in (FamilyTag.EULERIAN_T, FamilyTag.EULERIAN_QT):
        if n < 1:
            raise ValidationError("the Eulerian gamma expansion needs n >= 1")
        d = n - 1
        q_level = family is FamilyTag.EULERIAN_QT
        target = q_eulerian(n, bound) if q_level else eulerian_poly(n, bound)
        gammas = _gamma_vector_from_classes(n, d // 2, eulerian_gamma_class,
                                            bound, q_level)
    elif family in (FamilyTag.BINOMIAL_EULERIAN_T, FamilyTag.BINOMIAL_EULERIAN_QT):
        if n < 1:
            raise ValidationError("the binomial-Eulerian gamma expansion needs n >= 1")
        d = n
        q_level = family is FamilyTag.BINOMIAL_EULERIAN_QT
        target = (q_binomial_eulerian(n, bound) if q_level
                  else binomial_eulerian_poly(n, bound))
        gammas = _gamma_vector_from_classes(n, d // 2,
                                            binomial_eulerian_gamma_class,
                                            bound, q_level)
    elif family is FamilyTag.DERANGEMENT_QT:
        return _verify_derangement_gamma(n, bound)
    else:
        raise ValidationError(f"no gamma expansion is defined for {family.value}")

    contracted = gamma_contract(GammaVector(d, gammas))
    ok = contracted == target
    return Report(
        identity="gamma-expansion",
        parameters=params,
        status="pass" if ok else "fail",
        lhs=_render(target),
        rhs=_render(contracted),
        gamma_vector=_render_gammas(gammas),
    )


def _verify_derangement_gamma(n: int, bound: int) -> Report:
    if n < 2:
        raise ValidationError("the derangement gamma expansion needs n >= 2")
    target = derangement_poly(n, bound)
    d = n - 2

    gammas = _gamma_vector_from_classes(n, d // 2, derangement_gamma_class,
                                        bound, q_level=True)
    shifted = gamma_contract(GammaVector(d, gammas)) if d >= 0 else QTPoly.zero()
    corrected = shifted.t_shifted(1) if isinstance(shifted, QTPoly) else QTPoly.zero()
    ok = corrected == target

    # The two exponent patterns that fail on small cases, kept as negative
    # controls: t^k (1+t)^(n-2k) with k <= floor(n/2), and
    # t^k (1+t)^(n-2-2k) with k <= floor(n-2)/2.
    alternates = {}
    wide = QTPoly.zero()
    for k in range(n // 2 + 1):
        g = class_inv_poly(derangement_gamma_class(n, k), bound)
        if g:
            wide = wide + (QTPoly([1, 1]) ** (n - 2 * k)) * g * QTPoly.t_power(k)
    alternates["t^k (1+t)^(n-2k)"] = bool(wide == target)
    alternates["t^k (1+t)^(n-2-2k)"] = bool(shifted == target)

    return Report(
        identity="gamma-expansion",
        parameters={"family": FamilyTag.DERANGEMENT_QT.value, "n": n},
        status="pass" if ok else "fail",
        lhs=target.to_text(),
        rhs=corrected.to_text(),
        gamma_vector=_render_gammas(gammas),
        detail={"expansion": "t^(k+1) (1+t)^(n-2-2k)",
                "alternate_forms": alternates},
    )


def _render(p) -> str:
    if isinstance(p, IntPoly1):
        return p.to_text("t")
    return p.to_text()


def _render_gammas(gammas) -> list[str]:
    return [g.to_text("q") if isinstance(g, IntPoly1) else str(g) for g in gammas]


# ---------------------------------------------------------------------------
# Binomial symmetry (Chung-Graham-Knuth)
# ---------------------------------------------------------------------------

def verify_cgk(r: int, s: int, q_level: bool = False,
               bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """Symmetry sum_m binom(r+s, m) a_{m, r-1} = sum_m binom(r+s, m) a_{m, s-1},
    at the integer or q-binomial level."""
    if r < 1 or s < 1:
        raise ValidationError("r and s must be >= 1")
    total = r + s
    _check_bound(total, bound)
    if q_level:
        lhs = IntPoly1.zero()
        rhs = IntPoly1.zero()
        for m in range(1, total + 1):
            b = q_binomial(total, m)
            lhs = lhs + b * q_eulerian_number(m, r - 1, bound)
            rhs = rhs + b * q_eulerian_number(m, s - 1, bound)
        ok = lhs == rhs
        return Report("cgk-symmetry", {"r": r, "s": s, "level": "q"},
                      "pass" if ok else "fail", lhs.to_text("q"), rhs.to_text("q"))
    lhs_n = sum(comb(total, m) * eulerian_poly(m, bound).coeff(r - 1)
                for m in range(1, total + 1))
    rhs_n = sum(comb(total, m) * eulerian_poly(m, bound).coeff(s - 1)
                for m in range(1, total + 1))
    return Report("cgk-symmetry", {"r": r, "s": s, "level": "integer"},
                  "pass" if lhs_n == rhs_n else "fail", str(lhs_n), str(rhs_n))


# ---------------------------------------------------------------------------
# q-exponential generating functions
# ---------------------------------------------------------------------------

EXPQ_IDENTITIES = ("q-eulerian", "q-fix-eulerian", "q-derangement",
                   "q-binomial-eulerian")


def _series_qt(order: int, coeff_fn) -> TruncSeries:
    return TruncSeries.build(order, coeff_fn, QDIV)


def verify_expq_identity(which: str, order: int,
                         bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """Verify a q-exponential generating function by cross-multiplication.

    All four identities have the shape (series) * (exp_q(tz) - t exp_q(z)) =
    (1-t) * (simple series); both sides are expanded in the divided
    convention, where coefficient n stands for the coefficient of
    z^n / [n]_q!, so the comparison is between polynomials.
    """
    if which not in EXPQ_IDENTITIES:
        raise ValidationError(f"unknown identity {which!r}; pick from {EXPQ_IDENTITIES}")
    _check_bound(order, bound)
    n_range = range(order + 1)

    if which == "q-fix-eulerian":
        denom = _series_qt(order, lambda n: QTRPoly.from_qt(
            QTPoly.t_power(n) - QTPoly([IntPoly1.zero(), IntPoly1.one()])))
        family = _series_qt(order, lambda n: q_eulerian_fix(n, bound))
        one_minus_t = QTRPoly.from_qt(QTPoly([1, -1]))
        rhs = _series_qt(order, lambda n: QTRPoly.monomial(r=n)).scale(one_minus_t)
        lhs = family * denom
    else:
        t = QTPoly([0, 1])
        denom = _series_qt(order, lambda n: QTPoly.t_power(n) - t)
        one_minus_t = QTPoly([1, -1])
        if which == "q-eulerian":
            family = _series_qt(order, lambda n: q_eulerian(n, bound))
            rhs = _series_qt(order, lambda n: QTPoly.one()).scale(one_minus_t)
        elif which == "q-derangement":
            family = _series_qt(order, lambda n: derangement_poly(n, bound))
            rhs = _series_qt(order, lambda n: QTPoly.one() if n == 0
                             else QTPoly.zero()).scale(one_minus_t)
        else:
            family = _series_qt(order, lambda n: q_binomial_eulerian(n, bound))
            expz = _series_qt(order, lambda n: QTPoly.one())
            exptz = _series_qt(order, lambda n: QTPoly.t_power(n))
            rhs = (expz * exptz).scale(one_minus_t)
        lhs = family * denom

    mismatch = next((n for n in n_range if lhs.coeff(n) != rhs.coeff(n)), None)
    ok = mismatch is None
    detail = None if ok else {"first_mismatch_degree": mismatch}
    return Report("expq-generating-function", {"which": which, "order": order},
                  "pass" if ok else "fail",
                  lhs.coeff(mismatch or 0).to_text(),
                  rhs.coeff(mismatch or 0).to_text(),
                  detail=detail)


# ---------------------------------------------------------------------------
# Binomial-convolution identities
# ---------------------------------------------------------------------------

def verify_binomial_identities(n: int,
                               bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """Two binomial convolutions for the binomial-Eulerian polynomial:
    sum_m qbinom(n,m) A_m(q,t) t^(n-m) and sum_m qbinom(n,m) A_m(q,t,t)."""
    _check_bound(n, bound)
    target = q_binomial_eulerian(n, bound)
    first = QTPoly.zero()
    second = QTPoly.zero()
    for m in range(n + 1):
        b = q_binomial(n, m)
        first = first + (q_eulerian(m, bound) * b).t_shifted(n - m)
        second = second + q_eulerian_fix(m, bound).r_to_t() * b
    checks = {
        "shifted-convolution": first == target,
        "fixed-point-substitution": second == target,
    }
    return combine("binomial-eulerian-convolutions", {"n": n}, checks,
                   lhs=target.to_text(),
                   rhs=first.to_text() if not checks["shifted-convolution"]
                   else second.to_text())


def verify_worpitzky(n: int, cutoff: int,
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """A_n(t) = (1-t)^(n+1) * sum_k (k+1)^n t^k, compared modulo t^(cutoff+1)."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    if cutoff < n:
        raise ValidationError("cutoff must be at least n")
    _check_bound(n, bound)
    power_sum = IntPoly1(tuple((k + 1) ** n for k in range(cutoff + 1)))
    product = (IntPoly1((1, -1)) ** (n + 1)) * power_sum
    truncated = IntPoly1(product.coeffs[:cutoff + 1])
    target = eulerian_poly(n, bound)
    ok = truncated == target
    return Report("worpitzky", {"n": n, "cutoff": cutoff},
                  "pass" if ok else "fail", target.to_text("t"),
                  truncated.to_text("t"))


# ---------------------------------------------------------------------------
# Aggregate property suites
# ---------------------------------------------------------------------------

def verify_poly_properties(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """Palindromicity, q-unimodality, and gamma q-positivity for the three
    q-families at one n."""
    _check_bound(n, bound)
    checks = {}
    if n >= 1:
        a = q_eulerian(n, bound)
        checks["eulerian-palindromic"] = is_palindromic(a, n - 1)
        checks["eulerian-q-unimodal"] = is_b_unimodal(a)
        checks["eulerian-gamma-q-positive"] = (
            verify_gamma_theorem(FamilyTag.EULERIAN_QT, n, bound).passed
            and GammaVector(n - 1, _gamma_vector_from_classes(
                n, (n - 1) // 2, eulerian_gamma_class, bound, True)).is_nonnegative())
        b = q_binomial_eulerian(n, bound)
        checks["binomial-palindromic"] = is_palindromic(b, n)
        checks["binomial-q-unimodal"] = is_b_unimodal(b)
        checks["binomial-gamma-q-positive"] = (
            verify_gamma_theorem(FamilyTag.BINOMIAL_EULERIAN_QT, n, bound).passed
            and GammaVector(n, _gamma_vector_from_classes(
                n, n // 2, binomial_eulerian_gamma_class, bound, True)).is_nonnegative())
    if n >= 2:
        dpoly = derangement_poly(n, bound)
        checks["derangement-shifted-palindromic"] = is_palindromic(
            dpoly.t_shifted(-1), n - 2)
        checks["derangement-q-unimodal"] = is_b_unimodal(dpoly)
        rep = verify_gamma_theorem(FamilyTag.DERANGEMENT_QT, n, bound)
        checks["derangement-gamma-q-positive"] = rep.passed and GammaVector(
            n - 2, _gamma_vector_from_classes(
                n, (n - 2) // 2, derangement_gamma_class, bound, True)).is_nonnegative()
    return combine("q-family-properties", {"n": n}, checks)


def verify_prw_cardinality(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """For every k, the no-double-descent class with k descents in S_n has
    the same size as the increasing-prefix class with k descents in
    S_(n+1)."""
    _check_bound(n + 1, bound)
    mismatch = {}
    for k in range(n // 2 + 1):
        lhs = class_size(binomial_eulerian_gamma_class(n, k), bound)
        rhs = class_size(max_prefix_class(n + 1, k), bound)
        if lhs != rhs:
            mismatch[k] = (lhs, rhs)
    ok = not mismatch
    return Report("prefix-class-cardinality", {"n": n},
                  "pass" if ok else "fail",
                  detail=None if ok else {"mismatches": {
                      str(k): list(v) for k, v in mismatch.items()}})


def verify_descent_classes(n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """inv and maj-of-inverse are equidistributed on every descent class."""
    _check_bound(n, bound)
    failures = []
    for mask in range(1 << max(n - 1, 0)):
        J = [i + 1 for i in range(n - 1) if mask >> i & 1]
        _, _, ok = descent_class_check(n, J, bound)
        if not ok:
            failures.append(J)
    return Report("descent-class-equidistribution", {"n": n},
                  "pass" if not failures else "fail",
                  detail=None if not failures else {"failing_sets": failures})
