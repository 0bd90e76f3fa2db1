"""Combinatorics of the tubular Runge condition.

The geometric input is reduced to incidence data: r ample divisors, plus the
family of index subsets whose common intersection is nonempty and not
contained in the excluded closed set Y.  From it come the two integers

* m   -- largest number of divisors with nonempty common intersection
         (the Y-empty reading of the data), and
* m_Y -- largest number whose common intersection escapes Y,

and the finiteness condition m_Y * |S| < r.  The Siegel specializations for
even level n are closed formulas: n^4/2 + 2 divisors and m_Y = n^2 - 3, with
an exact incidence witness available at n = 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError

__all__ = [
    "DivisorIncidence",
    "RungeVerdict",
    "m_value",
    "m_y_value",
    "runge_condition",
    "siegel_divisor_count",
    "siegel_m_y",
    "siegel_runge_condition",
    "siegel_incidence",
]

_MAX_LEVEL = 20


@dataclass(frozen=True)
class DivisorIncidence:
    """Incidence data for r divisors.

    ``outside_y`` lists subsets of {1..r} whose intersection is nonempty and
    not contained in Y.  The family is normalized on construction to its
    antichain of maximal subsets (smaller subsets are implied by downward
    closure).  Every divisor must appear in some subset: a divisor contained
    in Y is outside the supported setup and rejected.
    """

    r: int
    outside_y: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInputError("divisor count r must be at least 1")
        sets = {frozenset(int(i) for i in s) for s in self.outside_y}
        sets.discard(frozenset())
        for s in sets:
            if not all(1 <= i <= self.r for i in s):
                raise InvalidInputError(f"subset {sorted(s)} uses indices outside 1..{self.r}")
        maximal = [s for s in sets if not any(s < t for t in sets)]
        covered = frozenset().union(*maximal) if maximal else frozenset()
        missing = [i for i in range(1, self.r + 1) if i not in covered]
        if missing:
            raise InvalidInputError(
                f"divisors {missing} appear in no subset (contained in Y); unsupported"
            )
        maximal.sort(key=lambda s: (len(s), sorted(s)))
        object.__setattr__(self, "outside_y", tuple(maximal))

    @classmethod
    def from_subsets(cls, r: int, subsets) -> "DivisorIncidence":
        return cls(r, tuple(frozenset(s) for s in subsets))


def m_value(incidence: DivisorIncidence) -> int:
    """Largest number of divisors with nonempty common intersection.

    Reads the incidence data with Y empty, i.e. the listed subsets are
    exactly those with nonempty intersection.
    """
    return max(len(s) for s in incidence.outside_y)


def m_y_value(incidence: DivisorIncidence) -> int:
    """Largest number of divisors whose common intersection is not inside Y.

    Always at most the Y-empty value, with equality when Y is empty.
    """
    return max(len(s) for s in incidence.outside_y)


@dataclass(frozen=True)
class RungeVerdict:
    """One evaluation of the condition m_used * s < r."""

    m_used: int
    s: int
    r: int
    holds: bool

    def to_json(self) -> dict:
        return {"holds": self.holds, "m": self.m_used, "s": self.s, "r": self.r}


def runge_condition(m_y: int, s: int, r: int) -> RungeVerdict:
    """The strict inequality m_Y * |S| < r as a verdict record."""
    if m_y < 1 or s < 1 or r < 1:
        raise InvalidInputError("m_y, s and r must all be at least 1")
    return RungeVerdict(m_used=m_y, s=s, r=r, holds=m_y * s < r)


def _check_level(n: int) -> int:
    n = int(n)
    if n < 2 or n % 2 != 0 or n > _MAX_LEVEL:
        raise InvalidInputError(f"level must be even with 2 <= n <= {_MAX_LEVEL}, got {n}")
    return n


def siegel_divisor_count(n: int) -> int:
    """Number of distinct theta divisors at even level n: n^4/2 + 2.

    Counts orbits of (a, b) in (Z/n)^4 under negation, minus the six classes
    of 2-torsion points that always lie on the theta divisor.
    """
    n = _check_level(n)
    return n**4 // 2 + 2


def siegel_m_y(n: int) -> int:
    """The tube-adjusted intersection number at even level n: n^2 - 3."""
    n = _check_level(n)
    return n * n - 3


def siegel_runge_condition(n: int, s_l: int) -> RungeVerdict:
    """The level-n condition (n^2 - 3) s_L < n^4/2 + 2."""
    if s_l < 1:
        raise InvalidInputError("s_l must be at least 1")
    return runge_condition(siegel_m_y(n), s_l, siegel_divisor_count(n))


def siegel_incidence(n: int = 2) -> DivisorIncidence:
    """Incidence witness at level 2: ten divisors, pairwise intersections
    all inside the boundary, so the maximal outside-Y subsets are the
    singletons and m_Y = 1."""
    if n != 2:
        raise InvalidInputError("an incidence witness is only available at level 2")
    return DivisorIncidence.from_subsets(10, [{i} for i in range(1, 11)])
