"""Permutations, descent statistics, and constrained permutation classes.

Classes are enumerated by filtering the full symmetric group, so the
enumeration itself doubles as the brute-force oracle for every identity
built on top of it.  The enumeration bound (default 9, i.e. 362880
permutations) keeps runtimes at desk scale; larger requests raise
``ResourceLimitError`` rather than silently running long.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations

from .errors import ResourceLimitError, ValidationError
from .exactpoly import IntPoly1

DEFAULT_ENUMERATION_BOUND = 9


class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValidationError(f"not a permutation of 1..{n}: {imgs}")
        self.images = imgs

    @property
    def n(self) -> int:
        return len(self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def one_line(self) -> str:
        """Digit string for n <= 9, comma-separated above that."""
        if self.n <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    @classmethod
    def from_one_line(cls, text: str) -> "Permutation":
        text = text.strip()
        if not text:
            raise ValidationError("empty one-line permutation")
        if "," in text:
            parts = text.split(",")
        else:
            if not text.isdigit():
                raise ValidationError(f"malformed one-line permutation: {text!r}")
            parts = list(text)
        return cls(int(p) for p in parts)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.one_line()!r})"


@dataclass(frozen=True)
class StatRecord:
    """The six statistics of one permutation."""

    des_set: frozenset[int]
    des: int
    maj: int
    exc: int
    inv: int
    fix: int


def _stat_tuple(p: tuple[int, ...]):
    """(descent positions, maj, exc, inv, fix) for a one-line tuple."""
    n = len(p)
    des_positions = []
    maj = 0
    for i in range(n - 1):
        if p[i] > p[i + 1]:
            des_positions.append(i + 1)
            maj += i + 1
    exc = 0
    fix = 0
    inv = 0
    for i in range(n):
        v = p[i]
        if v > i + 1:
            exc += 1
        elif v == i + 1:
            fix += 1
        for j in range(i + 1, n):
            if v > p[j]:
                inv += 1
    return tuple(des_positions), maj, exc, inv, fix


def stats(perm: Permutation) -> StatRecord:
    """Compute descents, maj, exc, inv, and fix for a permutation."""
    if not isinstance(perm, Permutation):
        perm = Permutation(perm)
    des_positions, maj, exc, inv, fix = _stat_tuple(perm.images)
    return StatRecord(frozenset(des_positions), len(des_positions), maj, exc, inv, fix)


def has_double_descent(des_set) -> bool:
    """True iff positions i and i+1 are both descents for some i."""
    return any(i + 1 in des_set for i in des_set)


def has_initial_descent(des_set) -> bool:
    return 1 in des_set


def has_final_descent(des_set, n: int) -> bool:
    return n - 1 in des_set


@dataclass(frozen=True)
class ClassSpec:
    """A constrained permutation class inside S_n.

    All flags are independently toggleable; ``des_equals`` pins the descent
    number.  ``increasing_prefix_to_max`` demands sigma(1) < ... <
    sigma(m) = n for some m >= 1, i.e. the one-line word rises strictly
    until it hits the maximum value.
    """

    n: int
    no_double_descent: bool = False
    no_initial_descent: bool = False
    no_final_descent: bool = False
    des_equals: int | None = None
    increasing_prefix_to_max: bool = False
    derangements_only: bool = False


def eulerian_gamma_class(n: int, k: int) -> ClassSpec:
    """No double descents, no final descent, exactly k descents."""
    return ClassSpec(n, no_double_descent=True, no_final_descent=True, des_equals=k)


def binomial_eulerian_gamma_class(n: int, k: int) -> ClassSpec:
    """No double descents, exactly k descents."""
    return ClassSpec(n, no_double_descent=True, des_equals=k)


def derangement_gamma_class(n: int, k: int) -> ClassSpec:
    """No double, initial, or final descents; exactly k descents."""
    return ClassSpec(n, no_double_descent=True, no_initial_descent=True,
                     no_final_descent=True, des_equals=k)


def max_prefix_class(n: int, k: int) -> ClassSpec:
    """No double descents, no final descent, increasing prefix up to the
    maximum, exactly k descents.  For the cardinality identity the caller
    builds this in S_(n+1)."""
    return ClassSpec(n, no_double_descent=True, no_final_descent=True,
                     des_equals=k, increasing_prefix_to_max=True)


def _check_bound(n: int, bound: int):
    if n < 0:
        raise ValidationError("n must be nonnegative")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds the enumeration bound {bound}")


def _prefix_rises_to_max(p: tuple[int, ...]) -> bool:
    n = len(p)
    if n == 0:
        return True
    for i, v in enumerate(p):
        if v == n:
            return True
        if i + 1 < len(p) and p[i] > p[i + 1]:
            return False
    return False


def _matches(spec: ClassSpec, p: tuple[int, ...], des_positions, fix: int) -> bool:
    des_set = des_positions
    if spec.des_equals is not None and len(des_set) != spec.des_equals:
        return False
    if spec.no_double_descent and any(des_set[i] + 1 == des_set[i + 1]
                                      for i in range(len(des_set) - 1)):
        return False
    if spec.no_initial_descent and des_set and des_set[0] == 1:
        return False
    if spec.no_final_descent and des_set and des_set[-1] == spec.n - 1:
        return False
    if spec.derangements_only and fix != 0:
        return False
    if spec.increasing_prefix_to_max and not _prefix_rises_to_max(p):
        return False
    return True


def enumerate_class(spec: ClassSpec, bound: int = DEFAULT_ENUMERATION_BOUND):
    """All members of the class, in lexicographic one-line order."""
    _check_bound(spec.n, bound)
    out = []
    for p in _itertools_permutations(range(1, spec.n + 1)):
        des_positions, _maj, _exc, _inv, fix = _stat_tuple(p)
        if _matches(spec, p, des_positions, fix):
            out.append(Permutation(p))
    return tuple(out)


@lru_cache(maxsize=None)
def _class_inv_buckets(n, no_dd, no_id, no_fd, prefix, derang):
    """For each descent count k, the q^inv coefficient vector over the class
    with the given flags.  One sweep of S_n serves every k."""
    buckets: list[dict[int, int]] = [dict() for _ in range(n + 1)]
    base = ClassSpec(n, no_double_descent=no_dd, no_initial_descent=no_id,
                     no_final_descent=no_fd, increasing_prefix_to_max=prefix,
                     derangements_only=derang)
    for p in _itertools_permutations(range(1, n + 1)):
        des_positions, _maj, _exc, inv, fix = _stat_tuple(p)
        if _matches(base, p, des_positions, fix):
            b = buckets[len(des_positions)]
            b[inv] = b.get(inv, 0) + 1
    out = []
    for b in buckets:
        if b:
            top = max(b)
            out.append(tuple(b.get(i, 0) for i in range(top + 1)))
        else:
            out.append(())
    return tuple(out)


def class_inv_poly(spec: ClassSpec, bound: int = DEFAULT_ENUMERATION_BOUND) -> IntPoly1:
    """Sum of q^inv over the class."""
    _check_bound(spec.n, bound)
    buckets = _class_inv_buckets(spec.n, spec.no_double_descent,
                                 spec.no_initial_descent, spec.no_final_descent,
                                 spec.increasing_prefix_to_max,
                                 spec.derangements_only)
    if spec.des_equals is not None:
        if not 0 <= spec.des_equals <= spec.n:
            return IntPoly1.zero()
        return IntPoly1(buckets[spec.des_equals])
    total = IntPoly1.zero()
    for b in buckets:
        total = total + IntPoly1(b)
    return total


def class_size(spec: ClassSpec, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    return class_inv_poly(spec, bound)(1)


def derangements(n: int, bound: int = DEFAULT_ENUMERATION_BOUND):
    """All fixed-point-free permutations of {1..n}, lexicographically."""
    _check_bound(n, bound)
    out = []
    for p in _itertools_permutations(range(1, n + 1)):
        if all(p[i] != i + 1 for i in range(n)):
            out.append(Permutation(p))
    return tuple(out)


@lru_cache(maxsize=None)
def _descent_class_tables(n):
    """descent set -> (q^inv coefficients, q^maj(inverse) coefficients)."""
    tables: dict[tuple[int, ...], tuple[dict[int, int], dict[int, int]]] = {}
    for p in _itertools_permutations(range(1, n + 1)):
        des_positions, _maj, _exc, inv, _fix = _stat_tuple(p)
        inv_images = [0] * n
        for i, v in enumerate(p):
            inv_images[v - 1] = i + 1
        maj_inverse = sum(i + 1 for i in range(n - 1)
                          if inv_images[i] > inv_images[i + 1])
        by_inv, by_maj = tables.setdefault(des_positions, (dict(), dict()))
        by_inv[inv] = by_inv.get(inv, 0) + 1
        by_maj[maj_inverse] = by_maj.get(maj_inverse, 0) + 1
    frozen = {}
    for key, (by_inv, by_maj) in tables.items():
        frozen[key] = (
            tuple(by_inv.get(i, 0) for i in range(max(by_inv) + 1)),
            tuple(by_maj.get(i, 0) for i in range(max(by_maj) + 1)),
        )
    return frozen


def descent_class_check(n: int, des_set, bound: int = DEFAULT_ENUMERATION_BOUND):
    """(sum of q^inv, sum of q^maj(sigma^-1), equal?) over {Des(sigma) = J}.

    Equality is the Foata-Schutzenberger equidistribution on descent
    classes, so the boolean is expected to be True.
    """
    _check_bound(n, bound)
    J = sorted(set(int(j) for j in des_set))
    if any(j < 1 or j > n - 1 for j in J):
        raise ValidationError(f"descent set {J} not inside 1..{n - 1}")
    tables = _descent_class_tables(n)
    entry = tables.get(tuple(J))
    if entry is None:
        return IntPoly1.zero(), IntPoly1.zero(), True
    inv_poly, maj_poly = IntPoly1(entry[0]), IntPoly1(entry[1])
    return inv_poly, maj_poly, inv_poly == maj_poly
