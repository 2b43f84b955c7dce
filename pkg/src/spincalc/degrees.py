"""Sets of self-mapping degrees, represented as bounded partial knowledge.

D(M) always contains 0 (constant map) and 1 (identity).  We track a
finite set of degrees known to be realized, an upper bound on the whole
set, and whether the two coincide exactly.
"""

from __future__ import annotations

from dataclasses import dataclass


def _integer_nth_root(x: int, n: int) -> int:
    """Floor of the nonnegative n-th root."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x in (0, 1):
        return x
    r = int(round(x ** (1.0 / n)))
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


@dataclass(frozen=True)
class UpperBound:
    """One of the closed-form supersets a degree set can be confined to."""

    kind: str  # "all" | "signed_unit" | "nonnegative_unit" | "perfect_powers" | "unknown"
    exponent: int | None = None  # for perfect_powers only

    def contains(self, d: int) -> bool:
        if self.kind in ("all", "unknown"):
            return True
        if self.kind == "signed_unit":
            return d in (-1, 0, 1)
        if self.kind == "nonnegative_unit":
            return d in (0, 1)
        if self.kind == "perfect_powers":
            n = self.exponent
            assert n is not None
            if d == 0:
                return True
            if d < 0:
                return n % 2 == 1 and _integer_nth_root(-d, n) ** n == -d
            return _integer_nth_root(d, n) ** n == d
        raise ValueError(f"unknown upper bound kind {self.kind!r}")

    def intersect(self, other: "UpperBound") -> "UpperBound":
        """The tighter of the two bounds (bounds only ever shrink)."""
        order = {"unknown": 0, "all": 1, "perfect_powers": 2, "signed_unit": 3, "nonnegative_unit": 4}
        a, b = (self, other) if order[self.kind] >= order[other.kind] else (other, self)
        # a is at least as tight; the pairs arising in practice are nested
        return a

    def describe(self) -> str:
        if self.kind == "all":
            return "Z (all integers)"
        if self.kind == "signed_unit":
            return "{-1, 0, 1}"
        if self.kind == "nonnegative_unit":
            return "{0, 1}"
        if self.kind == "perfect_powers":
            return f"{{k^{self.exponent} | k in Z}}"
        return "unknown"


ALL_INTEGERS = UpperBound("all")
SIGNED_UNIT = UpperBound("signed_unit")
NONNEGATIVE_UNIT = UpperBound("nonnegative_unit")
UNKNOWN_BOUND = UpperBound("unknown")


def perfect_powers(exponent: int) -> UpperBound:
    return UpperBound("perfect_powers", exponent)


@dataclass(frozen=True)
class DegreeSet:
    """Partial knowledge of D(M).

    ``exact`` means D(M) is exactly the set denoted by ``upper_bound``.
    ``known_subset`` is a finite set of degrees proven realizable and
    always contains {0, 1}.
    """

    known_subset: frozenset[int] = frozenset({0, 1})
    upper_bound: UpperBound = UNKNOWN_BOUND
    exact: bool = False
    rules: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not {0, 1} <= self.known_subset:
            raise ValueError("known_subset must contain 0 and 1")
        if self.upper_bound.kind != "unknown":
            for d in self.known_subset:
                if not self.upper_bound.contains(d):
                    raise ValueError(f"known degree {d} outside upper bound")
        if self.exact and self.upper_bound.kind == "unknown":
            raise ValueError("an exact degree set needs a concrete bound")

    def contains_minus_one(self) -> bool:
        """True when -1 is proven to be a realized degree."""
        return -1 in self.known_subset or (self.exact and self.upper_bound.contains(-1))

    def to_json(self) -> dict:
        return {
            "known": sorted(self.known_subset),
            "upper_bound": self.upper_bound.describe(),
            "exact": self.exact,
            "rules": list(self.rules),
        }

    def describe(self) -> str:
        if self.exact:
            return self.upper_bound.describe()
        if self.upper_bound.kind == "unknown":
            return f"contains {sorted(self.known_subset)}; no upper bound known"
        return f"contains {sorted(self.known_subset)}; contained in {self.upper_bound.describe()}"


def exact_set(bound: UpperBound, rules: tuple[str, ...] = ()) -> DegreeSet:
    """D(M) known exactly: seed the known subset with small witnesses."""
    known = {d for d in range(-3, 4) if bound.contains(d)} | {0, 1}
    return DegreeSet(frozenset(known), bound, exact=True, rules=rules)
