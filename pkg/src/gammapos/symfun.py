"""Truncated symmetric-function arithmetic and its identity checks.

Symmetric polynomials live in a fixed number of variables ``m`` with exact
integer coefficients, stored sparsely by exponent vector.  With ``m >= n``
distinct symmetric functions of degree ``n`` stay distinct, so every check
below demands enough variables before trusting an equality.

The module provides:

* complete homogeneous generators and Schur polynomials (by the branching
  rule over the last variable, which is exactly a Gelfand-Tsetlin /
  semistandard-tableau dynamic program);
* ribbon Schur functions as descent-class word sums, with a position-by-
  position DP and an explicit word loop kept as its oracle;
* the symmetric Eulerian, binomial-Eulerian, and derangement families by
  convolution recurrences, cross-checkable against their generating
  functions;
* Schur expansion by Kostka-triangular elimination and the exact stable
  principal specialization whose numerators are the q-families.

The derangement family uses the corrected gamma exponents
``t^(k+1) (1+t)^(n-2-2k)`` for n >= 2, matching the q level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .errors import (
    InternalConsistencyError,
    NotSymmetricError,
    ResourceLimitError,
    ValidationError,
)
from .exactpoly import (
    IntPoly1,
    QTPoly,
    TruncSeries,
    is_b_unimodal,
    is_palindromic,
    q_int,
)
from .permstat import DEFAULT_ENUMERATION_BOUND, descent_class_check
from .reports import Report, combine

# When enabled, SymPoly constructors verify full symmetry of the term map.
CHECK_SYMMETRY = False

_WORD_LOOP_LIMIT = 2_000_000


class SymPoly:
    """Symmetric polynomial in m variables with integer coefficients.

    ``terms`` maps exponent vectors of length m to nonzero ints.  The
    constructor only checks symmetry when ``CHECK_SYMMETRY`` (or the
    ``check`` argument) is set, since most values are symmetric by
    construction.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None, check: bool | None = None):
        if m < 0:
            raise ValidationError("number of variables must be nonnegative")
        self.m = m
        out: dict[tuple[int, ...], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, c in items:
                key = tuple(int(e) for e in exps)
                if len(key) != m or any(e < 0 for e in key):
                    raise ValidationError(f"bad exponent vector {key} for m={m}")
                c = int(c)
                if c:
                    out[key] = out.get(key, 0) + c
                    if not out[key]:
                        del out[key]
        self.terms = out
        if check if check is not None else CHECK_SYMMETRY:
            self._assert_symmetric()

    def _assert_symmetric(self):
        from math import factorial
        groups: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
        for exps, c in self.terms.items():
            groups.setdefault(tuple(sorted(exps, reverse=True)), {})[exps] = c
        for signature, members in groups.items():
            coeffs = set(members.values())
            counts: dict[int, int] = {}
            for e in signature:
                counts[e] = counts.get(e, 0) + 1
            orbit = factorial(self.m)
            for mult in counts.values():
                orbit //= factorial(mult)
            if len(coeffs) != 1 or len(members) != orbit:
                raise ValidationError(
                    f"terms are not symmetric around signature {signature}")

    @classmethod
    def zero(cls, m: int) -> "SymPoly":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "SymPoly":
        return cls(m, {(0,) * m: 1})

    @classmethod
    def constant(cls, m: int, c: int) -> "SymPoly":
        return cls(m, {(0,) * m: c})

    def _require_same_vars(self, other: "SymPoly"):
        if self.m != other.m:
            raise ValidationError("mixed numbers of variables")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SymPoly.constant(self.m, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = SymPoly.constant(self.m, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._require_same_vars(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
            if not out[k]:
                del out[k]
        result = SymPoly(self.m)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = SymPoly(self.m)
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other):
        if isinstance(other, int):
            other = SymPoly.constant(self.m, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            result = SymPoly(self.m)
            if other:
                result.terms = {k: c * other for k, c in self.terms.items()}
            return result
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._require_same_vars(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        result = SymPoly(self.m)
        result.terms = {k: c for k, c in out.items() if c}
        return result

    __rmul__ = __mul__

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, n: int) -> bool:
        return all(sum(e) == n for e in self.terms)

    def coeff(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def permute_variables(self, perm) -> "SymPoly":
        """Relabel variables: variable i receives old variable perm[i]."""
        result = SymPoly(self.m)
        out: dict[tuple[int, ...], int] = {}
        for exps, c in self.terms.items():
            key = tuple(exps[perm[i]] for i in range(self.m))
            out[key] = out.get(key, 0) + c
        result.terms = {k: c for k, c in out.items() if c}
        return result

    def principal_eval(self) -> IntPoly1:
        """Substitute x_i := q^(i-1), exactly."""
        acc: dict[int, int] = {}
        for exps, c in self.terms.items():
            p = sum(e * i for i, e in enumerate(exps))
            acc[p] = acc.get(p, 0) + c
        if not acc:
            return IntPoly1.zero()
        top = max(acc)
        return IntPoly1(tuple(acc.get(i, 0) for i in range(top + 1)))

    def poly_in_t(self, coeffs) -> "SymPolyT":
        """Build a t-polynomial over this ring (ints become constants)."""
        return SymPolyT(self.m, coeffs)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(self.terms[e])}
                for e in sorted(self.terms)]

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mag = abs(c)
            factors = [] if mag == 1 else [str(mag)]
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            body = "*".join(factors) if factors else "1"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"SymPoly(m={self.m}, {self.to_text()!r})"


class SymPolyT:
    """Polynomial in t whose coefficients are ``SymPoly`` values.

    Multiplying by an ``IntPoly1`` treats it as a polynomial in t (used for
    factors like t[j]_t); multiplying by a ``SymPoly`` or int scales every
    coefficient.
    """

    __slots__ = ("m", "t_coeffs")

    def __init__(self, m: int, t_coeffs=()):
        self.m = m
        cs = []
        for c in t_coeffs:
            if isinstance(c, int):
                c = SymPoly.constant(m, c)
            if not isinstance(c, SymPoly):
                raise ValidationError("coefficients must be SymPoly or int")
            if c.m != m:
                raise ValidationError("mixed numbers of variables")
            cs.append(c)
        while cs and not cs[-1]:
            cs.pop()
        self.t_coeffs = tuple(cs)

    @classmethod
    def zero(cls, m: int) -> "SymPolyT":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "SymPolyT":
        return cls(m, (1,))

    @property
    def t_degree(self) -> int:
        return len(self.t_coeffs) - 1

    def t_coeff(self, j: int) -> SymPoly:
        if 0 <= j < len(self.t_coeffs):
            return self.t_coeffs[j]
        return SymPoly.zero(self.m)

    def __bool__(self):
        return bool(self.t_coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, SymPoly)):
            other = SymPolyT(self.m, (other,))
        if not isinstance(other, SymPolyT):
            return NotImplemented
        return self.m == other.m and self.t_coeffs == other.t_coeffs

    def __hash__(self):
        return hash((self.m, self.t_coeffs))

    def __add__(self, other):
        if isinstance(other, (int, SymPoly)):
            other = SymPolyT(self.m, (other,))
        if not isinstance(other, SymPolyT):
            return NotImplemented
        if self.m != other.m:
            raise ValidationError("mixed numbers of variables")
        a, b = self.t_coeffs, other.t_coeffs
        if len(a) < len(b):
            a, b = b, a
        return SymPolyT(self.m, tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return SymPolyT(self.m, tuple(-c for c in self.t_coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, SymPoly)):
            other = SymPolyT(self.m, (other,))
        if not isinstance(other, SymPolyT):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, SymPoly)):
            return SymPolyT(self.m, tuple(c * other for c in self.t_coeffs))
        if isinstance(other, IntPoly1):
            out = [SymPoly.zero(self.m)] * (len(self.t_coeffs) + max(other.degree, 0))
            for j, c in enumerate(self.t_coeffs):
                for i, v in enumerate(other.coeffs):
                    if v:
                        out[j + i] = out[j + i] + c * v
            return SymPolyT(self.m, out)
        if not isinstance(other, SymPolyT):
            return NotImplemented
        if self.m != other.m:
            raise ValidationError("mixed numbers of variables")
        if not self.t_coeffs or not other.t_coeffs:
            return SymPolyT(self.m)
        out = [SymPoly.zero(self.m)] * (len(self.t_coeffs) + len(other.t_coeffs) - 1)
        for i, c in enumerate(self.t_coeffs):
            if c:
                for j, d in enumerate(other.t_coeffs):
                    out[i + j] = out[i + j] + c * d
        return SymPolyT(self.m, out)

    __rmul__ = __mul__

    def t_shifted(self, k: int) -> "SymPolyT":
        if k >= 0:
            return SymPolyT(self.m, (SymPoly.zero(self.m),) * k + self.t_coeffs)
        if any(self.t_coeffs[:-k]):
            raise ValidationError("cannot shift down: low t-coefficients are nonzero")
        return SymPolyT(self.m, self.t_coeffs[-k:])

    def to_json(self) -> list:
        return [c.to_json() for c in self.t_coeffs]

    def to_text(self) -> str:
        if not self.t_coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.t_coeffs):
            if not c:
                continue
            tpart = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            body = f"({c.to_text()})"
            parts.append(f"{body}*{tpart}" if tpart else body)
        return " + ".join(parts)

    def __repr__(self):
        return f"SymPolyT(m={self.m}, {self.to_text()!r})"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def complete_homogeneous(n: int, m: int) -> SymPoly:
    """Sum of all degree-n monomials in m variables (h_0 = 1)."""
    if n < 0:
        raise ValidationError("degree must be nonnegative")
    if m < 1:
        raise ValidationError("need at least one variable")
    terms: dict[tuple[int, ...], int] = {}
    for combo in combinations_with_replacement(range(m), n):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = 1
    return SymPoly(m, terms)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in decreasing lexicographic order."""

    def gen(rest, maxp):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxp), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n)) if n >= 0 else ()


def _interlacings(shape):
    if not shape:
        yield ()
        return
    ranges = [range((shape[i + 1] if i + 1 < len(shape) else 0), shape[i] + 1)
              for i in range(len(shape))]
    for combo in product(*ranges):
        end = len(combo)
        while end and combo[end - 1] == 0:
            end -= 1
        yield combo[:end]


@lru_cache(maxsize=None)
def _schur_terms(shape: tuple, m: int):
    # Branching over the last variable: strip off a horizontal strip, which
    # is the semistandard filling rule one row of entries at a time.
    if m == 0:
        return {(): 1} if not shape else {}
    out: dict[tuple[int, ...], int] = {}
    total = sum(shape)
    for mu in _interlacings(shape):
        strip = total - sum(mu)
        for exps, c in _schur_terms(tuple(mu), m - 1).items():
            key = exps + (strip,)
            out[key] = out.get(key, 0) + c
    return out


def schur_polynomial(shape, m: int) -> SymPoly:
    """Schur polynomial of a straight shape in m variables."""
    shape = tuple(int(x) for x in shape if int(x) != 0)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or any(
            x < 0 for x in shape):
        raise ValidationError(f"not a partition: {shape}")
    return SymPoly(m, _schur_terms(shape, m))


# ---------------------------------------------------------------------------
# Ribbons
# ---------------------------------------------------------------------------

RIBBON_VARIANTS = ("eulerian", "binomial", "derangement")


@dataclass(frozen=True)
class Ribbon:
    """A ribbon (skew hook) of size n, encoded by the descent set of its
    reading words.  Columns of size 2 sit at the descent positions, so the
    descent set never contains two consecutive positions when all columns
    have size at most 2."""

    n: int
    descents: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("ribbon size must be >= 1")
        if any(not (1 <= s <= self.n - 1) for s in self.descents):
            raise ValidationError("descents must lie in 1..n-1")


def ribbons(n: int, k: int, variant: str) -> tuple[Ribbon, ...]:
    """The ribbons of size n with k columns of size 2, restricted per
    variant: ``eulerian`` keeps the last column of size 1, ``binomial`` has
    no edge restriction, ``derangement`` keeps both first and last columns
    of size 1."""
    if variant not in RIBBON_VARIANTS:
        raise ValidationError(f"unknown ribbon variant {variant!r}")
    if n < 1 or k < 0:
        raise ValidationError("need n >= 1 and k >= 0")
    lo = 2 if variant == "derangement" else 1
    hi = n - 2 if variant in ("eulerian", "derangement") else n - 1
    allowed = range(lo, hi + 1)
    out = []
    for S in combinations(allowed, k):
        if all(S[i] + 1 < S[i + 1] for i in range(len(S) - 1)):
            out.append(Ribbon(n, frozenset(S)))
    return tuple(out)


def ribbon_schur(ribbon: Ribbon, m: int, method: str = "dp") -> SymPoly:
    """Sum of x_w over length-n words on {1..m} whose descent set is exactly
    the ribbon's descent set.

    The default route is a position-by-position DP whose state is the last
    letter; ``method="loop"`` enumerates all m^n words as the oracle.
    """
    if m < 1:
        raise ValidationError("need at least one variable")
    n, S = ribbon.n, ribbon.descents
    if method == "loop":
        if m ** n > _WORD_LOOP_LIMIT:
            raise ResourceLimitError(f"{m}^{n} words exceed the loop limit")
        terms: dict[tuple[int, ...], int] = {}
        for w in product(range(1, m + 1), repeat=n):
            des = {i + 1 for i in range(n - 1) if w[i] > w[i + 1]}
            if des == S:
                exps = [0] * m
                for letter in w:
                    exps[letter - 1] += 1
                key = tuple(exps)
                terms[key] = terms.get(key, 0) + 1
        return SymPoly(m, terms)
    if method != "dp":
        raise ValidationError(f"unknown method {method!r}")

    unit = [tuple(1 if i == ell else 0 for i in range(m)) for ell in range(m)]
    states: list[dict[tuple[int, ...], int]] = [{unit[ell]: 1} for ell in range(m)]
    for pos in range(2, n + 1):
        want_descent = (pos - 1) in S
        new: list[dict[tuple[int, ...], int]] = [dict() for _ in range(m)]
        for prev in range(m):
            bucket = states[prev]
            if not bucket:
                continue
            nexts = range(0, prev) if want_descent else range(prev, m)
            for cur in nexts:
                dst = new[cur]
                delta = unit[cur]
                for exps, c in bucket.items():
                    key = tuple(a + b for a, b in zip(exps, delta))
                    dst[key] = dst.get(key, 0) + c
        states = new
    total: dict[tuple[int, ...], int] = {}
    for bucket in states:
        for exps, c in bucket.items():
            total[exps] = total.get(exps, 0) + c
    return SymPoly(m, total)


def ribbon_maj_poly(ribbon: Ribbon, bound: int = DEFAULT_ENUMERATION_BOUND) -> IntPoly1:
    """Major-index generating polynomial of the standard fillings of the
    ribbon, computed through the reading-word descent class and
    cross-checked against the inversion polynomial of the same class."""
    _inv_poly, maj_poly, ok = descent_class_check(ribbon.n, ribbon.descents, bound)
    if not ok:
        raise InternalConsistencyError(
            "inv and maj-of-inverse disagreed on a descent class")
    return maj_poly


def gamma_symmetric(n: int, k: int, variant: str, m: int) -> SymPoly:
    """Sum of ribbon Schur functions over the chosen ribbon class."""
    total = SymPoly.zero(m)
    for r in ribbons(n, k, variant):
        total = total + ribbon_schur(r, m)
    return total


# ---------------------------------------------------------------------------
# The symmetric families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _eulerian_symmetric(n: int, m: int) -> SymPolyT:
    if n == 0:
        return SymPolyT.one(m)
    total = SymPolyT(m, (complete_homogeneous(n, m),))
    for k in range(n - 1):
        factor = q_int(n - k - 1).shifted(1)  # t [n-k-1]_t, a polynomial in t
        total = total + _eulerian_symmetric(k, m) * complete_homogeneous(n - k, m) * factor
    return total


def eulerian_symmetric(n: int, m: int) -> SymPolyT:
    """Symmetric analog of the q-Eulerian polynomial, by the convolution
    recurrence with base case 1."""
    if n < 0 or m < 1:
        raise ValidationError("need n >= 0 and m >= 1")
    return _eulerian_symmetric(n, m)


@lru_cache(maxsize=None)
def _binomial_eulerian_symmetric(n: int, m: int) -> SymPolyT:
    total = SymPolyT(m, (complete_homogeneous(n, m),))
    for j in range(1, n + 1):
        total = total + (_eulerian_symmetric(j, m)
                         * complete_homogeneous(n - j, m)).t_shifted(1)
    return total


def binomial_eulerian_symmetric(n: int, m: int) -> SymPolyT:
    """h_n + t * sum_j h_(n-j) * (symmetric Eulerian)_j."""
    if n < 0 or m < 1:
        raise ValidationError("need n >= 0 and m >= 1")
    return _binomial_eulerian_symmetric(n, m)


@lru_cache(maxsize=None)
def _derangement_symmetric(n: int, m: int) -> SymPolyT:
    if n == 0:
        return SymPolyT.one(m)
    total = SymPolyT.zero(m)
    for k in range(2, n + 1):
        factor = q_int(k - 1).shifted(1)  # t [k-1]_t
        total = total + _derangement_symmetric(n - k, m) * complete_homogeneous(k, m) * factor
    return total


def derangement_symmetric(n: int, m: int) -> SymPolyT:
    """Symmetric analog of the derangement polynomial: coefficient of z^n in
    the geometric series over t [k-1]_t h_k z^k."""
    if n < 0 or m < 1:
        raise ValidationError("need n >= 0 and m >= 1")
    return _derangement_symmetric(n, m)


SYM_FAMILIES = ("eulerian", "binomial-eulerian", "derangement")


def _sym_family(which: str, n: int, m: int) -> SymPolyT:
    if which == "eulerian":
        return eulerian_symmetric(n, m)
    if which == "binomial-eulerian":
        return binomial_eulerian_symmetric(n, m)
    if which == "derangement":
        return derangement_symmetric(n, m)
    raise ValidationError(f"unknown family {which!r}; pick from {SYM_FAMILIES}")


# ---------------------------------------------------------------------------
# Schur expansion and principal specialization
# ---------------------------------------------------------------------------

def _expand_homogeneous(terms: dict, n: int, m: int) -> dict:
    residual = dict(terms)
    out: dict[tuple[int, ...], int] = {}
    for lam in partitions(n):
        key = lam + (0,) * (m - len(lam))
        c = residual.get(key, 0)
        if c:
            out[lam] = c
            for exps, v in _schur_terms(lam, m).items():
                k2 = exps
                residual[k2] = residual.get(k2, 0) - c * v
                if not residual[k2]:
                    del residual[k2]
    if residual:
        raise NotSymmetricError("nonzero residual: input is not symmetric")
    return out


def schur_expand(p, n: int, m: int) -> dict[tuple[int, ...], IntPoly1]:
    """Expand a (t-polynomial of) degree-n symmetric polynomial(s) in the
    Schur basis, mapping partitions to t-polynomials.

    Requires m >= n so distinct symmetric functions cannot alias; smaller m
    raises ``ValidationError`` rather than silently collapsing.
    """
    if m < n:
        raise ValidationError(f"need m >= n, got m={m} < n={n}")
    if isinstance(p, SymPoly):
        p = SymPolyT(p.m, (p,))
    if not isinstance(p, SymPolyT):
        raise ValidationError("expected SymPoly or SymPolyT")
    if p.m != m:
        raise ValidationError("polynomial has a different number of variables")
    acc: dict[tuple[int, ...], dict[int, int]] = {}
    for j, c in enumerate(p.t_coeffs):
        if not c:
            continue
        if not c.is_homogeneous(n):
            raise ValidationError(f"t^{j} coefficient is not homogeneous of degree {n}")
        for lam, v in _expand_homogeneous(c.terms, n, m).items():
            acc.setdefault(lam, {})[j] = v
    out = {}
    for lam, col in acc.items():
        top = max(col)
        out[lam] = IntPoly1(tuple(col.get(i, 0) for i in range(top + 1)))
    return out


def schur_expansion_json(expansion: dict[tuple[int, ...], IntPoly1]) -> list[dict]:
    return [{"partition": list(lam), "t_poly": expansion[lam].to_json()}
            for lam in sorted(expansion)]


def schur_positive(p) -> bool:
    """True iff every homogeneous component expands with nonnegative Schur
    coefficients.  Needs at least as many variables as the degree."""
    if isinstance(p, SymPolyT):
        return all(schur_positive(c) for c in p.t_coeffs)
    if not p:
        return True
    by_degree: dict[int, dict] = {}
    for exps, c in p.terms.items():
        by_degree.setdefault(sum(exps), {})[exps] = c
    for d, terms in by_degree.items():
        if p.m < d:
            raise ValidationError(f"need m >= {d} to test Schur positivity")
        if any(v < 0 for v in _expand_homogeneous(terms, d, p.m).values()):
            return False
    return True


@lru_cache(maxsize=None)
def syt_maj_poly(shape: tuple) -> IntPoly1:
    """Sum of q^maj over standard fillings of a straight shape, by direct
    enumeration (the placement order of 1..n is the tableau)."""
    shape = tuple(x for x in shape if x)
    n = sum(shape)
    if not shape:
        return IntPoly1.one()
    counts: dict[int, int] = {}
    rows = len(shape)

    def rec(fill, prev_row, entry, maj):
        if entry > n:
            counts[maj] = counts.get(maj, 0) + 1
            return
        for r in range(rows):
            if fill[r] < shape[r] and (r == 0 or fill[r - 1] > fill[r]):
                contribution = entry - 1 if (prev_row is not None and r > prev_row) else 0
                rec(fill[:r] + (fill[r] + 1,) + fill[r + 1:], r, entry + 1,
                    maj + contribution)

    rec((0,) * rows, None, 1, 0)
    return IntPoly1(tuple(counts.get(i, 0) for i in range(max(counts) + 1)))


@dataclass(frozen=True)
class PrincipalSpecialization:
    """Numerator over the denominator (1-q)(1-q^2)...(1-q^order)."""

    numerator: QTPoly
    denominator_order: int


def principal_specialization(expansion: dict, n: int) -> PrincipalSpecialization:
    """Exact stable principal specialization of a degree-n Schur expansion.

    Every Schur function of a size-n shape specializes to its standard-
    filling maj polynomial over (1-q)...(1-q^n), so the result is the
    t-polynomial of those numerators over the common denominator.
    """
    cols: dict[int, IntPoly1] = {}
    for lam, tpoly in expansion.items():
        if sum(lam) != n:
            raise ValidationError("expansion mixes degrees")
        f = syt_maj_poly(tuple(lam))
        for j, c in enumerate(tpoly.coeffs):
            if c:
                cols[j] = cols.get(j, IntPoly1.zero()) + f * c
    if not cols:
        return PrincipalSpecialization(QTPoly.zero(), n)
    top = max(cols)
    numerator = QTPoly([cols.get(j, IntPoly1.zero()) for j in range(top + 1)])
    return PrincipalSpecialization(numerator, n)


# ---------------------------------------------------------------------------
# Word sums (no-double-descent classes)
# ---------------------------------------------------------------------------

def _ndd_word_sums(n: int, m: int, method: str):
    """Per descent count k: (words with no double descents and a weakly
    rising final step, all no-double-descent words), as term dicts."""
    nofinal: dict[int, dict] = {}
    allwords: dict[int, dict] = {}

    def add(target, k, exps, c=1):
        bucket = target.setdefault(k, {})
        bucket[exps] = bucket.get(exps, 0) + c

    if method == "loop":
        if m ** n > _WORD_LOOP_LIMIT:
            raise ResourceLimitError(f"{m}^{n} words exceed the loop limit")
        for w in product(range(1, m + 1), repeat=n):
            des = [i + 1 for i in range(n - 1) if w[i] > w[i + 1]]
            if any(des[i] + 1 == des[i + 1] for i in range(len(des) - 1)):
                continue
            exps = [0] * m
            for letter in w:
                exps[letter - 1] += 1
            exps = tuple(exps)
            k = len(des)
            add(allwords, k, exps)
            if not des or des[-1] != n - 1:
                add(nofinal, k, exps)
        return nofinal, allwords

    if method != "dp":
        raise ValidationError(f"unknown method {method!r}")
    unit = [tuple(1 if i == ell else 0 for i in range(m)) for ell in range(m)]
    # state: (last letter, last step was a descent, k) -> exponent counts
    states: dict[tuple[int, bool, int], dict] = {
        (ell, False, 0): {unit[ell]: 1} for ell in range(m)}
    for _pos in range(2, n + 1):
        new: dict[tuple[int, bool, int], dict] = {}
        for (prev, was_desc, k), bucket in states.items():
            for cur in range(m):
                desc = cur < prev
                if desc and was_desc:
                    continue
                key = (cur, desc, k + 1 if desc else k)
                dst = new.setdefault(key, {})
                delta = unit[cur]
                for exps, c in bucket.items():
                    ek = tuple(a + b for a, b in zip(exps, delta))
                    dst[ek] = dst.get(ek, 0) + c
        states = new
    for (last, was_desc, k), bucket in states.items():
        for exps, c in bucket.items():
            add(allwords, k, exps, c)
            if not was_desc:
                add(nofinal, k, exps, c)
    return nofinal, allwords


def _contract_word_sums(buckets: dict[int, dict], d: int, m: int) -> SymPolyT:
    total = SymPolyT.zero(m)
    for k, terms in sorted(buckets.items()):
        sp = SymPoly(m, terms)
        if not sp:
            continue
        exponent = d - 2 * k
        if exponent < 0:
            raise InternalConsistencyError(
                f"descent count {k} too large for degree bound {d}")
        tfactor = (IntPoly1((1, 1)) ** exponent).shifted(k)
        total = total + SymPolyT(m, (sp,)) * tfactor
    return total


# ---------------------------------------------------------------------------
# Verifications
# ---------------------------------------------------------------------------

def verify_sym_gamma(which: str, n: int, m: int) -> Report:
    """Check a symmetric family against its ribbon gamma expansion."""
    params = {"which": which, "n": n, "m": m}
    if which == "eulerian":
        if n < 1:
            raise ValidationError("need n >= 1")
        target = eulerian_symmetric(n, m)
        d = n - 1
        contracted = SymPolyT.zero(m)
        for k in range(d // 2 + 1):
            g = gamma_symmetric(n, k, "eulerian", m)
            contracted = contracted + SymPolyT(m, (g,)) * (
                IntPoly1((1, 1)) ** (d - 2 * k)).shifted(k)
    elif which == "binomial-eulerian":
        if n < 1:
            raise ValidationError("need n >= 1")
        target = binomial_eulerian_symmetric(n, m)
        d = n
        contracted = SymPolyT.zero(m)
        for k in range(d // 2 + 1):
            g = gamma_symmetric(n, k, "binomial", m)
            contracted = contracted + SymPolyT(m, (g,)) * (
                IntPoly1((1, 1)) ** (d - 2 * k)).shifted(k)
    elif which == "derangement":
        if n < 2:
            raise ValidationError("the derangement expansion needs n >= 2")
        target = derangement_symmetric(n, m)
        contracted = SymPolyT.zero(m)
        for k in range((n - 2) // 2 + 1):
            g = gamma_symmetric(n, k, "derangement", m)
            contracted = contracted + SymPolyT(m, (g,)) * (
                IntPoly1((1, 1)) ** (n - 2 - 2 * k)).shifted(k + 1)
    else:
        raise ValidationError(f"unknown family {which!r}")

    ok = contracted == target
    mismatch = None
    if not ok:
        mismatch = next(j for j in range(max(target.t_degree, contracted.t_degree) + 1)
                        if target.t_coeff(j) != contracted.t_coeff(j))
    return Report("sym-gamma-expansion", params, "pass" if ok else "fail",
                  lhs=None if ok else target.t_coeff(mismatch).to_text(),
                  rhs=None if ok else contracted.t_coeff(mismatch).to_text(),
                  detail=None if ok else {"first_mismatch_t_degree": mismatch})


def verify_gessel_words(n: int, m: int, method: str = "dp") -> Report:
    """Word-sum route to the symmetric Eulerian and binomial-Eulerian
    families: no-double-descent words contracted over their descent count
    must reproduce both recurrences."""
    if n < 1 or m < 1:
        raise ValidationError("need n >= 1 and m >= 1")
    nofinal, allwords = _ndd_word_sums(n, m, method)
    w_eulerian = _contract_word_sums(nofinal, n - 1, m)
    w_binomial = _contract_word_sums(allwords, n, m)
    checks = {
        "eulerian-word-sum": w_eulerian == eulerian_symmetric(n, m),
        "binomial-word-sum": w_binomial == binomial_eulerian_symmetric(n, m),
    }
    return combine("gessel-word-sums", {"n": n, "m": m, "method": method}, checks)


def _geometric_mod(step: int, mod: int) -> IntPoly1:
    coeffs = [0] * mod
    for i in range(0, mod, step):
        coeffs[i] = 1
    return IntPoly1(coeffs)


def _mod_q(p: IntPoly1, mod: int) -> IntPoly1:
    return IntPoly1(p.coeffs[:mod])


def verify_ps_theorems(n: int, m: int | None = None,
                       bound: int = DEFAULT_ENUMERATION_BOUND) -> Report:
    """Stable principal specialization of the symmetric families gives the
    q-families over (1-q)...(1-q^n); checked exactly on numerators and again
    modulo q^m through the finite substitution x_i := q^(i-1)."""
    from .eulerian import q_binomial_eulerian, q_eulerian

    if m is None:
        m = n
    if n < 1:
        raise ValidationError("n must be >= 1")
    checks = {}
    qe = q_eulerian(n, bound)
    qbe = q_binomial_eulerian(n, bound)
    pairs = (
        ("eulerian", eulerian_symmetric(n, m), qe),
        ("binomial-eulerian", binomial_eulerian_symmetric(n, m), qbe),
    )
    for name, sym, qpoly in pairs:
        ps = principal_specialization(schur_expand(sym, n, m), n)
        checks[f"{name}-numerator"] = ps.numerator == qpoly
        checks[f"{name}-denominator-order"] = ps.denominator_order == n
        # Finite substitution agrees with the exact specialization mod q^m:
        # every monomial using a variable beyond x_m contributes q^m or more.
        inv = IntPoly1.one()
        for i in range(1, n + 1):
            inv = _mod_q(inv * _geometric_mod(i, m), m)
        modular_ok = True
        for j in range(max(sym.t_degree, ps.numerator.t_degree) + 1):
            finite = _mod_q(sym.t_coeff(j).principal_eval(), m)
            series = _mod_q(ps.numerator.t_coeff(j) * inv, m)
            if finite != series:
                modular_ok = False
                break
        checks[f"{name}-modular-route"] = modular_ok
    return combine("principal-specialization", {"n": n, "m": m}, checks)


def verify_sym_cgk(r: int, s: int, m: int) -> Report:
    """Symmetric binomial symmetry: sum_j h_(r+s-j) * (t^(r-1) coefficient
    of the j-th symmetric Eulerian) is unchanged under swapping r and s."""
    if r < 1 or s < 1:
        raise ValidationError("r and s must be >= 1")
    total = r + s
    if m < total:
        raise ValidationError(f"need m >= r+s = {total}")
    lhs = SymPoly.zero(m)
    rhs = SymPoly.zero(m)
    for j in range(1, total + 1):
        h = complete_homogeneous(total - j, m)
        lhs = lhs + h * eulerian_symmetric(j, m).t_coeff(r - 1)
        rhs = rhs + h * eulerian_symmetric(j, m).t_coeff(s - 1)
    ok = lhs == rhs
    return Report("sym-cgk-symmetry", {"r": r, "s": s, "m": m},
                  "pass" if ok else "fail",
                  lhs=None if ok else lhs.to_text(),
                  rhs=None if ok else rhs.to_text())


def verify_procesi_identity(n: int, m: int | None = None) -> Report:
    """h_n [n+1]_t + sum_j t [n-j]_t h_(n-j) * (symmetric Eulerian)_j equals
    the binomial-Eulerian symmetric polynomial."""
    if m is None:
        m = n
    if n < 1:
        raise ValidationError("need n >= 1")
    if m < n:
        raise ValidationError(f"need m >= n = {n}")
    lhs = SymPolyT(m, (complete_homogeneous(n, m),)) * q_int(n + 1)
    for j in range(1, n):
        factor = q_int(n - j).shifted(1)
        lhs = lhs + _eulerian_symmetric(j, m) * complete_homogeneous(n - j, m) * factor
    rhs = binomial_eulerian_symmetric(n, m)
    ok = lhs == rhs
    return Report("stellohedron-cohomology-recurrence", {"n": n, "m": m},
                  "pass" if ok else "fail",
                  lhs=None if ok else lhs.to_text(),
                  rhs=None if ok else rhs.to_text())


def verify_sym_generating_functions(order: int, m: int) -> Report:
    """Cross-multiplied generating-function checks for all three symmetric
    families, including the alternative geometric-series forms."""
    if order < 0 or m < 1:
        raise ValidationError("need order >= 0 and m >= 1")
    one_t = SymPolyT.one(m)
    zero_t = SymPolyT.zero(m)
    t_poly = IntPoly1((0, 1))

    def h_series(scale_t: bool) -> TruncSeries:
        def coeff(k):
            h = SymPolyT(m, (complete_homogeneous(k, m),))
            return h * IntPoly1.monomial(k) if scale_t else h
        return TruncSeries.build(order, coeff)

    H = h_series(False)
    Htz = h_series(True)
    tH = H.scale(t_poly)
    denom = Htz - tH
    one_minus_t = IntPoly1((1, -1))

    QS = TruncSeries.build(order, lambda k: _eulerian_symmetric(k, m))
    QTS = TruncSeries.build(order, lambda k: _binomial_eulerian_symmetric(k, m))
    Q0S = TruncSeries.build(order, lambda k: _derangement_symmetric(k, m))
    ONE = TruncSeries.build(order, lambda k: one_t if k == 0 else zero_t)

    geom = TruncSeries.build(order, lambda k: zero_t if k < 2 else SymPolyT(
        m, (complete_homogeneous(k, m),)) * q_int(k - 1).shifted(1))
    rising = TruncSeries.build(order, lambda k: zero_t if k == 0 else SymPolyT(
        m, (complete_homogeneous(k, m),)) * q_int(k))

    checks = {
        "eulerian-gf": denom * QS == H.scale(one_minus_t),
        "eulerian-geometric-form": (ONE - geom) * (QS - ONE) == rising,
        "binomial-gf": denom * QTS == (H * Htz).scale(one_minus_t),
        "derangement-gf": denom * Q0S == ONE.scale(one_minus_t),
        "derangement-geometric-form": (ONE - geom) * Q0S == ONE,
    }
    shifted = all(
        _binomial_eulerian_symmetric(k, m) == sum(
            (_eulerian_symmetric(j, m) * complete_homogeneous(k - j, m)
             * IntPoly1.monomial(k - j) for j in range(k + 1)),
            SymPolyT.zero(m))
        for k in range(order + 1))
    checks["binomial-shifted-convolution"] = shifted
    return combine("sym-generating-functions", {"order": order, "m": m}, checks)


def verify_sym_properties(n: int, m: int) -> Report:
    """Palindromicity, Schur positivity, Schur unimodality, and
    Schur-positive gamma vectors for the three symmetric families."""
    if n < 1 or m < n:
        raise ValidationError("need 1 <= n <= m")
    checks = {}
    Q = eulerian_symmetric(n, m)
    QT = binomial_eulerian_symmetric(n, m)
    checks["eulerian-palindromic"] = is_palindromic(Q, n - 1)
    checks["binomial-palindromic"] = is_palindromic(QT, n)
    checks["eulerian-schur-positive"] = schur_positive(Q)
    checks["binomial-schur-positive"] = schur_positive(QT)
    checks["eulerian-schur-unimodal"] = is_b_unimodal(Q, schur_positive)
    checks["binomial-schur-unimodal"] = is_b_unimodal(QT, schur_positive)
    checks["eulerian-gamma-schur-positive"] = all(
        schur_positive(gamma_symmetric(n, k, "eulerian", m))
        for k in range((n - 1) // 2 + 1))
    checks["binomial-gamma-schur-positive"] = all(
        schur_positive(gamma_symmetric(n, k, "binomial", m))
        for k in range(n // 2 + 1))
    if n >= 2:
        Q0 = derangement_symmetric(n, m)
        checks["derangement-shifted-palindromic"] = is_palindromic(
            Q0.t_shifted(-1), n - 2)
        checks["derangement-schur-positive"] = schur_positive(Q0)
        checks["derangement-schur-unimodal"] = is_b_unimodal(Q0, schur_positive)
        checks["derangement-gamma-schur-positive"] = all(
            schur_positive(gamma_symmetric(n, k, "derangement", m))
            for k in range((n - 2) // 2 + 1))
    return combine("sym-family-properties", {"n": n, "m": m}, checks)
