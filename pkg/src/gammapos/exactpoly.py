"""Exact polynomial and truncated-series arithmetic.

Everything in this module is integer-exact: coefficients are Python ints, so
there is no overflow and no floating point anywhere.  The module also houses
the palindromicity test, the expansion of palindromic polynomials in the
basis ``t^k (1+t)^(d-2k)``, and the b-unimodality check shared by the
numeric, q-polynomial, and symmetric-function layers.

Conventions:

* ``IntPoly1`` is a dense polynomial in one anonymous variable (rendered as
  ``q`` or ``t`` depending on context).
* ``QTPoly`` is a polynomial in ``t`` whose coefficients are ``IntPoly1``
  values in ``q``.  Multiplying a ``QTPoly`` by an ``IntPoly1`` therefore
  scales every t-coefficient by a polynomial in ``q``.
* ``QTRPoly`` is a sparse polynomial in ``q``, ``t``, ``r``.
* ``TruncSeries`` is a power series in ``z`` truncated at a fixed order.
  Under the ``qdiv`` convention the stored coefficient of ``z^n`` stands for
  the coefficient of ``z^n / [n]_q!``, so products carry q-binomial weights
  and every intermediate value stays a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from .errors import (
    DegreeBoundError,
    InternalConsistencyError,
    PalindromicityError,
    ValidationError,
)


class IntPoly1:
    """Dense univariate polynomial over arbitrary-precision integers.

    Trailing zero coefficients are trimmed, so the zero polynomial stores an
    empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = tuple(int(c) for c in coeffs)
        end = len(cs)
        while end and cs[end - 1] == 0:
            end -= 1
        self.coeffs = cs[:end]

    @classmethod
    def zero(cls) -> "IntPoly1":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly1":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPoly1":
        if exponent < 0:
            raise ValidationError("monomial exponent must be nonnegative")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def shifted(self, k: int) -> "IntPoly1":
        """Multiply by x^k; negative k demands the low coefficients vanish."""
        if k >= 0:
            return IntPoly1((0,) * k + self.coeffs)
        if any(self.coeffs[:-k]):
            raise ValidationError("cannot shift down: low coefficients are nonzero")
        return IntPoly1(self.coeffs[-k:])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly1((other,))
        if not isinstance(other, IntPoly1):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly1((other,))
        if not isinstance(other, IntPoly1):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly1(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly1(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly1((other,))
        if not isinstance(other, IntPoly1):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly1(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly1):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly1()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPoly1(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValidationError("negative powers are not defined")
        result = IntPoly1.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def poly_in_t(self, coeffs) -> "QTPoly":
        """Build a t-polynomial whose coefficients live in this ring."""
        return QTPoly(coeffs)

    def to_text(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            elif j == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{j}" if mag == 1 else f"{mag}*{var}^{j}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPoly1":
        return cls(int(c) for c in data)

    def __repr__(self):
        return f"IntPoly1({self.to_text('x')!r})"


def q_int(n: int) -> IntPoly1:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValidationError("q-integer needs n >= 0")
    return IntPoly1((1,) * n)


def q_factorial(n: int) -> IntPoly1:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    out = IntPoly1.one()
    for j in range(1, n + 1):
        out = out * q_int(j)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntPoly1:
    """Gaussian binomial coefficient, zero outside 0 <= k <= n.

    Computed by the Pascal-type recurrence so no polynomial division is
    needed; the result equals [n]_q! / ([k]_q! [n-k]_q!).
    """
    if k < 0 or n < 0 or k > n:
        return IntPoly1.zero()
    if k == 0 or k == n:
        return IntPoly1.one()
    return q_binomial(n - 1, k - 1) + IntPoly1.monomial(k) * q_binomial(n - 1, k)


class QTPoly:
    """Polynomial in t with ``IntPoly1`` coefficients in q.

    The constructor accepts ints alongside ``IntPoly1`` values and trims
    trailing zero coefficients.  ``QTPoly([1, -1])`` is ``1 - t``.
    """

    __slots__ = ("t_coeffs",)

    def __init__(self, t_coeffs: Iterable = ()):
        cs = [c if isinstance(c, IntPoly1) else IntPoly1((c,)) for c in t_coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.t_coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "QTPoly":
        return cls()

    @classmethod
    def one(cls) -> "QTPoly":
        return cls((1,))

    @classmethod
    def t_power(cls, j: int, coeff=1) -> "QTPoly":
        return cls((0,) * j + (coeff,))

    @property
    def t_degree(self) -> int:
        return len(self.t_coeffs) - 1

    def t_coeff(self, j: int) -> IntPoly1:
        if 0 <= j < len(self.t_coeffs):
            return self.t_coeffs[j]
        return IntPoly1.zero()

    def __bool__(self) -> bool:
        return bool(self.t_coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntPoly1)):
            other = QTPoly((other,))
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.t_coeffs == other.t_coeffs

    def __hash__(self):
        return hash(self.t_coeffs)

    def __add__(self, other):
        if isinstance(other, (int, IntPoly1)):
            other = QTPoly((other,))
        if not isinstance(other, QTPoly):
            return NotImplemented
        a, b = self.t_coeffs, other.t_coeffs
        if len(a) < len(b):
            a, b = b, a
        return QTPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return QTPoly(tuple(-c for c in self.t_coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, IntPoly1)):
            other = QTPoly((other,))
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly1)):
            return QTPoly(tuple(c * other for c in self.t_coeffs))
        if not isinstance(other, QTPoly):
            return NotImplemented
        if not self.t_coeffs or not other.t_coeffs:
            return QTPoly()
        out = [IntPoly1.zero()] * (len(self.t_coeffs) + len(other.t_coeffs) - 1)
        for i, c in enumerate(self.t_coeffs):
            if c:
                for j, d in enumerate(other.t_coeffs):
                    out[i + j] = out[i + j] + c * d
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValidationError("negative powers are not defined")
        result = QTPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def at_q1(self) -> IntPoly1:
        """Evaluate q := 1, giving an integer polynomial in t."""
        return IntPoly1(tuple(c(1) for c in self.t_coeffs))

    def t_shifted(self, k: int) -> "QTPoly":
        """Multiply by t^k; negative k demands the low t-coefficients vanish."""
        if k >= 0:
            return QTPoly((IntPoly1.zero(),) * k + self.t_coeffs)
        if any(self.t_coeffs[:-k]):
            raise ValidationError("cannot shift down: low t-coefficients are nonzero")
        return QTPoly(self.t_coeffs[-k:])

    def to_text(self) -> str:
        if not self.t_coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.t_coeffs):
            if not c:
                continue
            nonzero = [(i, v) for i, v in enumerate(c.coeffs) if v]
            tpart = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if len(nonzero) == 1:
                i, v = nonzero[0]
                mag = abs(v)
                qpart = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
                factors = [s for s in ((str(mag) if (mag != 1 or (not qpart and not tpart)) else ""), qpart, tpart) if s]
                body = "*".join(factors)
                negative = v < 0
            else:
                inner = c.to_text("q")
                body = f"({inner})*{tpart}" if tpart else (f"({inner})" if parts or self.t_degree > 0 else inner)
                negative = False
            if not parts:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def to_json(self) -> list[list[str]]:
        """Nested arrays of decimal strings; outer index t, inner index q."""
        return [c.to_json() for c in self.t_coeffs]

    @classmethod
    def from_json(cls, data) -> "QTPoly":
        return cls(IntPoly1.from_json(c) for c in data)

    def __repr__(self):
        return f"QTPoly({self.to_text()!r})"


class QTRPoly:
    """Sparse polynomial in q, t, r with integer coefficients.

    Terms are keyed by ``(q_exp, t_exp, r_exp)``.  Multiplication accepts
    ints, ``IntPoly1`` (a polynomial in q), ``QTPoly``, and ``QTRPoly``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict[tuple[int, int, int], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                qe, te, re = (int(x) for x in key)
                if qe < 0 or te < 0 or re < 0:
                    raise ValidationError("exponents must be nonnegative")
                c = int(c)
                if c:
                    k = (qe, te, re)
                    out[k] = out.get(k, 0) + c
                    if not out[k]:
                        del out[k]
        self.terms = out

    @classmethod
    def zero(cls) -> "QTRPoly":
        return cls()

    @classmethod
    def one(cls) -> "QTRPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, r: int = 0, coeff: int = 1) -> "QTRPoly":
        return cls({(q, t, r): coeff})

    @classmethod
    def from_qt(cls, p: QTPoly) -> "QTRPoly":
        terms = {}
        for j, c in enumerate(p.t_coeffs):
            for i, v in enumerate(c.coeffs):
                if v:
                    terms[(i, j, 0)] = v
        return cls(terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly1, QTPoly)):
            other = _coerce_qtr(other)
        if not isinstance(other, QTRPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce_qtr(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        result = QTRPoly()
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = QTRPoly()
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other):
        other = _coerce_qtr(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            result = QTRPoly()
            if other:
                result.terms = {k: c * other for k, c in self.terms.items()}
            return result
        other = _coerce_qtr(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int, int], int] = {}
        for (q1, t1, r1), c1 in self.terms.items():
            for (q2, t2, r2), c2 in other.terms.items():
                k = (q1 + q2, t1 + t2, r1 + r2)
                out[k] = out.get(k, 0) + c1 * c2
        result = QTRPoly()
        result.terms = {k: c for k, c in out.items() if c}
        return result

    __rmul__ = __mul__

    def specialize_r(self, value: int) -> QTPoly:
        """Substitute an integer for r, collapsing to a (q, t) polynomial."""
        acc: dict[tuple[int, int], int] = {}
        for (qe, te, re), c in self.terms.items():
            k = (qe, te)
            acc[k] = acc.get(k, 0) + c * value**re
        return _qt_from_pairs(acc)

    def r_to_t(self) -> QTPoly:
        """Substitute r := t, folding the r-exponent into the t-exponent."""
        acc: dict[tuple[int, int], int] = {}
        for (qe, te, re), c in self.terms.items():
            k = (qe, te + re)
            acc[k] = acc.get(k, 0) + c
        return _qt_from_pairs(acc)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (qe, te, re) in sorted(self.terms, key=lambda k: (k[1], k[2], k[0])):
            c = self.terms[(qe, te, re)]
            mag = abs(c)
            factors = []
            if mag != 1 or (qe == te == re == 0):
                factors.append(str(mag))
            for exp, var in ((qe, "q"), (te, "t"), (re, "r")):
                if exp == 1:
                    factors.append(var)
                elif exp > 1:
                    factors.append(f"{var}^{exp}")
            body = "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_json(self) -> list[list]:
        return [[qe, te, re, str(self.terms[(qe, te, re)])]
                for (qe, te, re) in sorted(self.terms)]

    @classmethod
    def from_json(cls, data) -> "QTRPoly":
        return cls(((qe, te, re), int(c)) for qe, te, re, c in data)

    def __repr__(self):
        return f"QTRPoly({self.to_text()!r})"


def _coerce_qtr(value):
    if isinstance(value, QTRPoly):
        return value
    if isinstance(value, int):
        return QTRPoly({(0, 0, 0): value})
    if isinstance(value, IntPoly1):
        return QTRPoly({(i, 0, 0): c for i, c in enumerate(value.coeffs) if c})
    if isinstance(value, QTPoly):
        return QTRPoly.from_qt(value)
    return None


def _qt_from_pairs(acc: dict[tuple[int, int], int]) -> QTPoly:
    acc = {k: c for k, c in acc.items() if c}
    if not acc:
        return QTPoly.zero()
    tmax = max(t for _, t in acc)
    cols: list[dict[int, int]] = [dict() for _ in range(tmax + 1)]
    for (qe, te), c in acc.items():
        cols[te][qe] = c
    out = []
    for col in cols:
        if col:
            qmax = max(col)
            out.append(IntPoly1(tuple(col.get(i, 0) for i in range(qmax + 1))))
        else:
            out.append(IntPoly1.zero())
    return QTPoly(out)


# ---------------------------------------------------------------------------
# Palindromicity, gamma basis, unimodality
# ---------------------------------------------------------------------------

def _t_coeff_list(p) -> list:
    """t-coefficients of a polynomial in t over any supported ring."""
    if isinstance(p, IntPoly1):
        return list(p.coeffs)
    if isinstance(p, QTPoly):
        return list(p.t_coeffs)
    tc = getattr(p, "t_coeffs", None)
    if tc is None:
        raise ValidationError(f"not a polynomial in t: {type(p).__name__}")
    return list(tc)


def _zero_like(coeffs: list):
    return coeffs[0] * 0 if coeffs else 0


def is_palindromic(p, d: int) -> bool:
    """True iff the coefficient of t^j equals that of t^(d-j) for all j.

    Coefficients above the degree are treated as zero.  A bound d below the
    actual degree raises ``DegreeBoundError``.
    """
    cs = _t_coeff_list(p)
    if d < len(cs) - 1:
        raise DegreeBoundError(f"degree bound {d} below degree {len(cs) - 1}")
    zero = _zero_like(cs)
    padded = cs + [zero] * (d + 1 - len(cs))
    return all(padded[j] == padded[d - j] for j in range((d + 2) // 2))


@dataclass(frozen=True)
class GammaVector:
    """Coefficients of a palindromic polynomial in the basis t^k (1+t)^(d-2k).

    ``gammas`` has exactly floor(d/2) + 1 entries; entries live in the
    coefficient ring of the source polynomial (ints, q-polynomials, or
    symmetric polynomials).
    """

    degree_bound: int
    gammas: tuple

    def __post_init__(self):
        if self.degree_bound < 0:
            raise ValidationError("degree bound must be nonnegative")
        expected = self.degree_bound // 2 + 1
        if len(self.gammas) != expected:
            raise ValidationError(
                f"need {expected} gamma entries for degree bound {self.degree_bound}, "
                f"got {len(self.gammas)}")

    def contract(self):
        return gamma_contract(self)

    def is_nonnegative(self, positive: Callable | None = None) -> bool:
        pred = positive if positive is not None else _default_positive
        return all(pred(g) for g in self.gammas)

    def entries_json(self) -> list:
        out = []
        for g in self.gammas:
            if isinstance(g, int):
                out.append(str(g))
            elif isinstance(g, IntPoly1):
                out.append(g.to_json())
            else:
                out.append(g.to_json())
        return out

    def entries_text(self, var: str = "q") -> list[str]:
        return [g.to_text(var) if isinstance(g, IntPoly1)
                else (str(g) if isinstance(g, int) else g.to_text())
                for g in self.gammas]


def _default_positive(c) -> bool:
    if isinstance(c, int):
        return c >= 0
    if isinstance(c, IntPoly1):
        return c.is_nonnegative()
    raise ValidationError("no default positivity test for this ring; pass one")


def gamma_expand(p, d: int) -> GammaVector:
    """Expand a palindromic polynomial in the basis t^k (1+t)^(d-2k).

    The expansion is computed by peeling: gamma_k is the coefficient of t^k
    in the residual, whose multiple of t^k (1+t)^(d-2k) is then subtracted.
    Non-palindromic input raises ``PalindromicityError``; a nonzero residual
    after the last step (impossible for palindromic input) raises
    ``InternalConsistencyError``.
    """
    if not is_palindromic(p, d):
        raise PalindromicityError(f"not palindromic with center {d}/2")
    cs = _t_coeff_list(p)
    zero = _zero_like(cs)
    residual = cs + [zero] * (d + 1 - len(cs))
    gammas = []
    for k in range(d // 2 + 1):
        g = residual[k]
        gammas.append(g)
        if g:
            e = d - 2 * k
            for i in range(e + 1):
                residual[k + i] = residual[k + i] - g * comb(e, i)
    if any(residual):
        raise InternalConsistencyError("nonzero residual after gamma peeling")
    return GammaVector(d, tuple(gammas))


def gamma_contract(g: GammaVector):
    """Rebuild sum_k gamma_k t^k (1+t)^(d-2k) from a gamma vector.

    The polynomial class is inferred from the ring of the entries: ints give
    an ``IntPoly1`` in t, ``IntPoly1`` entries give a ``QTPoly``, and any
    other ring must provide a ``poly_in_t`` method (symmetric polynomials
    do).
    """
    d = g.degree_bound
    coeffs: list = [0] * (d + 1)
    for k, gam in enumerate(g.gammas):
        if not gam:
            continue
        e = d - 2 * k
        for i in range(e + 1):
            coeffs[k + i] = coeffs[k + i] + gam * comb(e, i)
    sample = next((x for x in g.gammas if not isinstance(x, int)), None)
    if sample is None:
        return IntPoly1(coeffs)
    if isinstance(sample, IntPoly1):
        return QTPoly(coeffs)
    return sample.poly_in_t(coeffs)


def is_b_unimodal(p, positive: Callable | None = None) -> bool:
    """Check b-unimodality of the t-coefficient sequence of ``p``.

    ``positive`` is the b-positivity predicate on coefficient differences
    (defaults: ints are compared with 0, q-polynomials ask for nonnegative
    coefficients).  True iff successive differences are b-positive up to some
    peak and b-negative afterwards.
    """
    pred = positive if positive is not None else _default_positive
    cs = _t_coeff_list(p)
    if len(cs) <= 1:
        return True
    diffs = [cs[i + 1] - cs[i] for i in range(len(cs) - 1)]
    i = 0
    while i < len(diffs) and pred(diffs[i]):
        i += 1
    return all(pred(-d) for d in diffs[i:])


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------

PLAIN = "plain"
QDIV = "qdiv"


@dataclass(frozen=True)
class TruncSeries:
    """Power series in z truncated at ``order``, with exact coefficients.

    ``convention`` is ``"plain"`` (ordinary Cauchy products) or ``"qdiv"``
    (coefficient n stands for the coefficient of z^n / [n]_q!, so products
    use q-binomial weights).  Coefficients may be ``QTPoly``, ``QTRPoly``,
    or any ring with ``+`` and ``*``.
    """

    order: int
    coeffs: tuple
    convention: str = PLAIN

    def __post_init__(self):
        if self.order < 0:
            raise ValidationError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValidationError("need order + 1 coefficients")
        if self.convention not in (PLAIN, QDIV):
            raise ValidationError(f"unknown convention {self.convention!r}")

    @classmethod
    def build(cls, order: int, coeff_fn: Callable[[int], object],
              convention: str = PLAIN) -> "TruncSeries":
        return cls(order, tuple(coeff_fn(n) for n in range(order + 1)), convention)

    def coeff(self, n: int):
        return self.coeffs[n]

    def _require_compatible(self, other: "TruncSeries"):
        if self.order != other.order or self.convention != other.convention:
            raise ValidationError("series orders/conventions do not match")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._require_compatible(other)
        return TruncSeries(self.order,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                           self.convention)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._require_compatible(other)
        return TruncSeries(self.order,
                           tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
                           self.convention)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._require_compatible(other)
        out = []
        for n in range(self.order + 1):
            acc = None
            for i in range(n + 1):
                term = self.coeffs[i] * other.coeffs[n - i]
                if self.convention == QDIV:
                    term = term * q_binomial(n, i)
                acc = term if acc is None else acc + term
            out.append(acc)
        return TruncSeries(self.order, tuple(out), self.convention)

    def scale(self, factor) -> "TruncSeries":
        return TruncSeries(self.order, tuple(c * factor for c in self.coeffs),
                           self.convention)
