"""Graded abelian groups and the homological toolkit built on them.

A ``GradedGroup`` is a sparse map degree -> AbGroup with a declared top
degree (the ambient dimension when it houses the homology of a closed
manifold).  Trivial entries are pruned so equality is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbGroup, TRIVIAL, Z, free


@dataclass(frozen=True)
class GradedGroup:
    top_degree: int
    entries: tuple[tuple[int, AbGroup], ...] = ()

    def __post_init__(self) -> None:
        if self.top_degree < 0:
            raise ValueError("top_degree must be nonnegative")
        seen = set()
        for deg, g in self.entries:
            if deg < 0 or deg > self.top_degree:
                raise ValueError(f"degree {deg} outside [0, {self.top_degree}]")
            if deg in seen:
                raise ValueError(f"duplicate degree {deg}")
            if g.is_trivial:
                raise ValueError(f"trivial group stored at degree {deg}")
            seen.add(deg)
        degs = [d for d, _ in self.entries]
        if degs != sorted(degs):
            raise ValueError("entries must be sorted by degree")

    @classmethod
    def from_dict(cls, groups: dict[int, AbGroup], top_degree: int) -> "GradedGroup":
        items = tuple(sorted((d, g) for d, g in groups.items() if not g.is_trivial))
        return cls(top_degree, items)

    @classmethod
    def from_list(cls, groups: list[AbGroup], top_degree: int | None = None) -> "GradedGroup":
        """Build from a dense list indexed by degree."""
        top = top_degree if top_degree is not None else max(len(groups) - 1, 0)
        return cls.from_dict(dict(enumerate(groups)), top)

    def group(self, degree: int) -> AbGroup:
        for d, g in self.entries:
            if d == degree:
                return g
        return TRIVIAL

    def degrees(self) -> list[int]:
        return [d for d, _ in self.entries]

    def as_dict(self) -> dict[int, AbGroup]:
        return dict(self.entries)

    # -- toolkit ------------------------------------------------------------

    def reduced(self) -> "GradedGroup":
        """Drop the degree-0 Z of a connected space."""
        if self.group(0) != Z:
            raise ValueError(f"degree-0 group is {self.group(0)}, expected Z")
        return GradedGroup(self.top_degree, tuple((d, g) for d, g in self.entries if d != 0))

    def shift(self, r: int, new_top: int) -> "GradedGroup":
        """Move every group up by r degrees."""
        if r < 1:
            raise ValueError("shift amount must be positive")
        if new_top < self.top_degree + r:
            raise ValueError(
                f"new_top {new_top} too small for top {self.top_degree} shifted by {r}"
            )
        return GradedGroup(new_top, tuple((d + r, g) for d, g in self.entries))

    def with_top(self, new_top: int) -> "GradedGroup":
        return GradedGroup.from_dict(self.as_dict(), new_top)

    def euler_characteristic(self) -> int:
        """Alternating sum of free ranks; torsion contributes nothing."""
        return sum((-1) ** d * g.rank for d, g in self.entries)

    def direct_sum(self, other: "GradedGroup", top_degree: int | None = None) -> "GradedGroup":
        """Degreewise direct sum."""
        top = top_degree if top_degree is not None else max(self.top_degree, other.top_degree)
        out: dict[int, AbGroup] = dict(self.entries)
        for d, g in other.entries:
            out[d] = out.get(d, TRIVIAL).direct_sum(g)
        return GradedGroup.from_dict(out, top)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "top": self.top_degree,
            "groups": {str(d): g.to_json() for d, g in self.entries},
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedGroup":
        groups = {int(d): AbGroup.from_json(g) for d, g in data["groups"].items()}
        return cls.from_dict(groups, int(data["top"]))

    def __str__(self) -> str:
        """Case-display rendering, grouping degrees by their group."""
        if not self.entries:
            return "0 for all i"
        by_group: dict[AbGroup, list[int]] = {}
        for d, g in self.entries:
            by_group.setdefault(g, []).append(d)
        lines = []
        for g, degs in sorted(by_group.items(), key=lambda kv: kv[1][0]):
            lines.append(f"{g}, for i = {', '.join(map(str, degs))}")
        lines.append("0, otherwise")
        return "\n".join(lines)


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    failing_degree: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_poincare_duality(h: GradedGroup, n: int) -> DualityReport:
    """Duality test for the homology of a closed oriented n-manifold.

    Free ranks must match across i <-> n-i; torsion must match across
    i <-> n-i-1 (the torsion linking convention).  Degree 0 and n must
    both be Z.
    """
    if h.top_degree != n:
        return DualityReport(False, None, f"top degree {h.top_degree} != dimension {n}")
    if h.group(0) != Z or h.group(n) != Z:
        return DualityReport(
            False, 0, f"H_0 = {h.group(0)}, H_{n} = {h.group(n)}; both must be Z"
        )
    for i in range(n + 1):
        if h.group(i).rank != h.group(n - i).rank:
            return DualityReport(
                False, i,
                f"free rank of H_{i} is {h.group(i).rank} but H_{n - i} has {h.group(n - i).rank}",
            )
        j = n - i - 1
        if 0 <= j <= n and h.group(i).torsion() != h.group(j).torsion():
            return DualityReport(
                False, i,
                f"torsion of H_{i} is {h.group(i).torsion()} but H_{j} has {h.group(j).torsion()}",
            )
    return DualityReport(True)


def cohomology_from_homology(h: GradedGroup, n: int) -> GradedGroup:
    """Integral cohomology via H^i = Z^rank(H_i) + Tor(H_{i-1})."""
    out: dict[int, AbGroup] = {}
    for i in range(n + 1):
        g = free(h.group(i).rank)
        if i >= 1:
            g = g.direct_sum(h.group(i - 1).torsion())
        out[i] = g
    return GradedGroup.from_dict(out, n)


def homology_from_cohomology(c: GradedGroup, n: int) -> GradedGroup:
    """Inverse conversion: H_i = Z^rank(H^i) + Tor(H^{i+1}).

    Torsion in H^0 or H^1 has no homological preimage (it would need
    torsion below degree 0, or a non-free H_0) and is rejected.
    """
    for i in (0, 1):
        if not c.group(i).torsion().is_trivial:
            raise ValueError(f"cohomology has torsion at degree {i}; no valid homology preimage")
    out: dict[int, AbGroup] = {}
    for i in range(n + 1):
        g = free(c.group(i).rank)
        if i + 1 <= n:
            g = g.direct_sum(c.group(i + 1).torsion())
        out[i] = g
    return GradedGroup.from_dict(out, n)
