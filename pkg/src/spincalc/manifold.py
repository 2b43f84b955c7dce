"""Manifold descriptors: the semantic objects flowing through the calculus.

A descriptor records everything the engine knows about a closed
connected oriented manifold: dimension, exact integral homology, a
structural tag for the fundamental group, a conservative connectivity
bound, axiomatized facts, and the construction expression it came from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .abelian import Z
from .degrees import DegreeSet
from .graded import GradedGroup, check_poincare_duality, cohomology_from_homology


# -- fundamental group tags --------------------------------------------------


class Pi1Tag:
    """Structural tag for a fundamental group (not the group itself)."""

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Trivial(Pi1Tag):
    def describe(self) -> str:
        return "1"


@dataclass(frozen=True)
class FreeAbelian(Pi1Tag):
    rank: int

    def describe(self) -> str:
        return "Z" if self.rank == 1 else f"Z^{self.rank}"


@dataclass(frozen=True)
class FiniteCyclic(Pi1Tag):
    order: int

    def describe(self) -> str:
        return f"Z_{self.order}"


@dataclass(frozen=True)
class HyperbolicThreeManifoldGroup(Pi1Tag):
    """Fundamental group of a fixed closed hyperbolic 3-manifold generator."""

    generator_id: int

    def describe(self) -> str:
        return f"pi_1(hyperbolic 3-manifold #{self.generator_id})"


@dataclass(frozen=True)
class SurfaceGroup(Pi1Tag):
    genus: int

    def describe(self) -> str:
        return f"pi_1(Sigma_{self.genus})"


@dataclass(frozen=True)
class FreeProduct(Pi1Tag):
    parts: tuple[Pi1Tag, ...]

    def describe(self) -> str:
        return " * ".join(p.describe() for p in self.parts)


@dataclass(frozen=True)
class DirectProduct(Pi1Tag):
    parts: tuple[Pi1Tag, ...]

    def describe(self) -> str:
        return " x ".join(f"({p.describe()})" if isinstance(p, (FreeProduct, DirectProduct)) else p.describe() for p in self.parts)


@dataclass(frozen=True)
class UnknownGroup(Pi1Tag):
    def describe(self) -> str:
        return "?"


def _combine(kind: type, parts: list[Pi1Tag]) -> Pi1Tag:
    """Flatten nested products of the same kind and absorb trivial factors."""
    flat: list[Pi1Tag] = []
    for p in parts:
        if isinstance(p, Trivial):
            continue
        if isinstance(p, kind):
            flat.extend(p.parts)  # type: ignore[attr-defined]
        else:
            flat.append(p)
    if not flat:
        return Trivial()
    if len(flat) == 1:
        return flat[0]
    return kind(tuple(flat))


def free_product(*parts: Pi1Tag) -> Pi1Tag:
    return _combine(FreeProduct, list(parts))


def direct_product(*parts: Pi1Tag) -> Pi1Tag:
    return _combine(DirectProduct, list(parts))


# -- axiomatized facts --------------------------------------------------------


class AxiomFact:
    """A property taken on faith at generator construction or by assertion."""

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Hyperbolic(AxiomFact):
    def describe(self) -> str:
        return "admits a closed real hyperbolic metric"


@dataclass(frozen=True)
class OddOrderIsometryGroup(AxiomFact):
    def describe(self) -> str:
        return "full isometry group has odd order"


@dataclass(frozen=True)
class ExternallyProvenStronglyChiral(AxiomFact):
    citation: str

    def describe(self) -> str:
        return f"strongly chiral by external result: {self.citation}"


@dataclass(frozen=True)
class KnownDegreeSet(AxiomFact):
    degrees: DegreeSet

    def describe(self) -> str:
        return f"degree set known: {self.degrees.describe()}"


# -- the descriptor -----------------------------------------------------------


class InvalidDescriptor(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldDescriptor:
    expr: Any  # ConstructionExpr; typed loosely to avoid an import cycle
    dim: int
    homology: GradedGroup
    pi1: Pi1Tag
    connectivity: int
    facts: frozenset[AxiomFact] = frozenset()

    def cohomology(self) -> GradedGroup:
        return cohomology_from_homology(self.homology, self.dim)

    def has_fact(self, kind: type) -> bool:
        return any(isinstance(f, kind) for f in self.facts)

    def get_fact(self, kind: type) -> AxiomFact | None:
        for f in self.facts:
            if isinstance(f, kind):
                return f
        return None

    def with_fact(self, fact: AxiomFact) -> "ManifoldDescriptor":
        """Explicit user assertion of an axiomatized fact."""
        return ManifoldDescriptor(
            self.expr, self.dim, self.homology, self.pi1, self.connectivity,
            self.facts | {fact},
        )

    def is_rational_homology_sphere(self) -> bool:
        """All intermediate groups torsion (free ranks vanish for 0 < i < n)."""
        return all(
            self.homology.group(i).rank == 0 for i in range(1, self.dim)
        )

    def to_json(self) -> dict:
        return {
            "expr": str(self.expr),
            "dim": self.dim,
            "homology": self.homology.to_json(),
            "pi1": self.pi1.describe(),
            "connectivity": self.connectivity,
            "facts": sorted(f.describe() for f in self.facts),
        }


def make_descriptor(
    expr: Any,
    dim: int,
    homology: GradedGroup,
    pi1: Pi1Tag,
    connectivity: int,
    facts: frozenset[AxiomFact] = frozenset(),
) -> ManifoldDescriptor:
    """Validated construction: closed connected oriented invariants enforced."""
    if dim < 1:
        raise InvalidDescriptor(f"dimension {dim} < 1")
    if homology.top_degree != dim:
        raise InvalidDescriptor("homology top degree does not match dimension")
    if homology.group(0) != Z or homology.group(dim) != Z:
        raise InvalidDescriptor("H_0 and H_dim must both be Z")
    report = check_poincare_duality(homology, dim)
    if not report:
        raise InvalidDescriptor(f"duality fails: {report.message}")
    if isinstance(pi1, Trivial) and not homology.group(1).is_trivial:
        raise InvalidDescriptor("trivial pi_1 forces trivial H_1")
    for i in range(1, connectivity + 1):
        if not homology.group(i).is_trivial:
            raise InvalidDescriptor(f"connectivity {connectivity} but H_{i} nontrivial")
    if connectivity >= 1 and not isinstance(pi1, Trivial):
        raise InvalidDescriptor("connectivity >= 1 requires trivial pi_1")
    return ManifoldDescriptor(expr, dim, homology, pi1, connectivity, facts)


def homological_connectivity(homology: GradedGroup, pi1: Pi1Tag) -> int:
    """Largest c with trivial reduced homology up to degree c.

    For simply connected spaces homology connectivity equals homotopy
    connectivity (Hurewicz); otherwise pi_1 caps the bound at 0.
    """
    if not isinstance(pi1, Trivial):
        return 0
    c = 0
    for i in range(1, homology.top_degree + 1):
        if homology.group(i).is_trivial:
            c = i
        else:
            break
    return c


# -- rules on descriptors ------------------------------------------------------


def punctured_homology(m: ManifoldDescriptor) -> GradedGroup:
    """Homology of the manifold minus an open top-dimensional disk.

    Removing the disk kills exactly the orientation class: H_i is
    unchanged for i <= dim-1 and trivial at the top.
    """
    return GradedGroup(
        m.dim, tuple((d, g) for d, g in m.homology.entries if d < m.dim)
    )


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


def validate_realizability(m: ManifoldDescriptor) -> list[Violation]:
    """Cross-checks that a descriptor can belong to an actual manifold.

    Violations are returned as data; an empty list means no obstruction
    fired.
    """
    out: list[Violation] = []

    # dimension 4k+1: the torsion pairing in the middle is antisymmetric,
    # which rules out a cyclic middle torsion group of order > 2
    if m.dim % 4 == 1 and m.dim >= 5:
        k = (m.dim - 1) // 2
        torsion = m.cohomology().group(k + 1).torsion()
        q = torsion.is_cyclic_of_order()
        if q is not None and q > 2:
            out.append(Violation(
                "middle-torsion-cyclic",
                f"dimension {m.dim} = 2({k})+1 with k even cannot have "
                f"Tor H^{k + 1} = Z_{q} (q > 2)",
            ))

    if m.has_fact(Hyperbolic) and m.dim % 2 == 0:
        chi = m.homology.euler_characteristic()
        if chi == 0 or (chi > 0) != (m.dim // 2 % 2 == 0):
            out.append(Violation(
                "euler-sign",
                f"closed hyperbolic manifolds of dimension {m.dim} need "
                f"(-1)^{m.dim // 2} * chi > 0, but chi = {chi}",
            ))

    if m.has_fact(Hyperbolic) and m.dim % 4 == 2 and m.is_rational_homology_sphere():
        out.append(Violation(
            "hyperbolic-qhs-dim-4k+2",
            f"no hyperbolic rational homology sphere exists in dimension {m.dim} "
            "(its Euler characteristic 2 has the wrong sign)",
        ))

    return out
