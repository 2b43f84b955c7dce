"""Generators and combinators of the manifold calculus.

Every operation returns a validated :class:`ManifoldDescriptor`.  The
construction expression is carried along as provenance and is what the
degree-set rewrite rules later pattern-match on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abelian import AbGroup, Z, cyclic, free
from .degrees import ALL_INTEGERS, exact_set
from .graded import GradedGroup, homology_from_cohomology
from .manifold import (
    FiniteCyclic,
    FreeAbelian,
    Hyperbolic,
    HyperbolicThreeManifoldGroup,
    KnownDegreeSet,
    ManifoldDescriptor,
    OddOrderIsometryGroup,
    SurfaceGroup,
    Trivial,
    direct_product,
    free_product,
    homological_connectivity,
    make_descriptor,
    punctured_homology,
)
from .residues import is_prime


# -- construction expressions --------------------------------------------------


class ConstructionExpr:
    """AST node; leaves are generators, internal nodes combinators."""


@dataclass(frozen=True)
class Sphere(ConstructionExpr):
    n: int

    def __str__(self) -> str:
        return f"S({self.n})"


@dataclass(frozen=True)
class CP(ConstructionExpr):
    n: int

    def __str__(self) -> str:
        return f"CP({self.n})"


@dataclass(frozen=True)
class Surface(ConstructionExpr):
    genus: int

    def __str__(self) -> str:
        return f"Sigma({self.genus})"


@dataclass(frozen=True)
class Lens(ConstructionExpr):
    p: int
    dim: int

    def __str__(self) -> str:
        return f"L({self.p},{self.dim})"


@dataclass(frozen=True)
class DehnRHS(ConstructionExpr):
    p: int

    def __str__(self) -> str:
        return f"N({self.p})"


@dataclass(frozen=True)
class IHS3(ConstructionExpr):
    def __str__(self) -> str:
        return "IHS3"


@dataclass(frozen=True)
class Bundle(ConstructionExpr):
    m: int
    d: int

    def __str__(self) -> str:
        return f"E({self.m},{self.d})"


@dataclass(frozen=True)
class Spin(ConstructionExpr):
    r: int
    child: ConstructionExpr

    def __str__(self) -> str:
        return f"spin({self.r},{self.child})"


@dataclass(frozen=True)
class CSum(ConstructionExpr):
    left: ConstructionExpr
    right: ConstructionExpr

    def __str__(self) -> str:
        return f"csum({self.left},{self.right})"


@dataclass(frozen=True)
class Prod(ConstructionExpr):
    left: ConstructionExpr
    right: ConstructionExpr

    def __str__(self) -> str:
        return f"prod({self.left},{self.right})"


# Fresh ids for hyperbolic generators: each call models a different
# manifold from an infinite family, so two calls are never assumed
# homeomorphic.
_generator_ids = itertools.count(1)


# -- generators -----------------------------------------------------------------


def sphere(n: int) -> ManifoldDescriptor:
    if n < 1:
        raise ValueError(f"sphere dimension must be >= 1, got {n}")
    if n == 1:
        homology = GradedGroup.from_dict({0: Z, 1: Z}, 1)
        pi1 = FreeAbelian(1)
    else:
        homology = GradedGroup.from_dict({0: Z, n: Z}, n)
        pi1 = Trivial()
    return make_descriptor(
        Sphere(n), n, homology, pi1,
        homological_connectivity(homology, pi1),
        frozenset({KnownDegreeSet(exact_set(ALL_INTEGERS, ("sphere",)))}),
    )


def cp(n: int) -> ManifoldDescriptor:
    """Complex projective n-space: Z in every even degree up to 2n."""
    if n < 1:
        raise ValueError(f"CP index must be >= 1, got {n}")
    homology = GradedGroup.from_dict({2 * i: Z for i in range(n + 1)}, 2 * n)
    pi1 = Trivial()
    return make_descriptor(CP(n), 2 * n, homology, pi1, homological_connectivity(homology, pi1))


def surface(genus: int) -> ManifoldDescriptor:
    if genus < 2:
        raise ValueError(f"surface genus must be >= 2, got {genus}")
    homology = GradedGroup.from_dict({0: Z, 1: free(2 * genus), 2: Z}, 2)
    return make_descriptor(Surface(genus), 2, homology, SurfaceGroup(genus), 0)


def lens(p: int, dim: int) -> ManifoldDescriptor:
    """Lens space S^dim / Z_p: Z_p torsion in every odd degree below the top."""
    if p < 2:
        raise ValueError(f"lens order must be >= 2, got {p}")
    if dim < 3 or dim % 2 == 0:
        raise ValueError(f"lens dimension must be odd and >= 3, got {dim}")
    groups: dict[int, AbGroup] = {0: Z, dim: Z}
    for i in range(1, dim - 1, 2):
        groups[i] = cyclic(p)
    homology = GradedGroup.from_dict(groups, dim)
    return make_descriptor(Lens(p, dim), dim, homology, FiniteCyclic(p), 0)


def dehn_rhs(p: int) -> ManifoldDescriptor:
    """A hyperbolic rational homology 3-sphere with H_1 = Z_2p.

    Existence is axiomatized (surgery on a hyperbolic knot complement);
    the descriptor also records that the isometry group can be taken of
    odd order.
    """
    if not is_prime(p):
        raise ValueError(f"Dehn-filling parameter must be prime, got {p}")
    homology = GradedGroup.from_dict({0: Z, 1: cyclic(2 * p), 3: Z}, 3)
    return make_descriptor(
        DehnRHS(p), 3, homology,
        HyperbolicThreeManifoldGroup(next(_generator_ids)), 0,
        frozenset({Hyperbolic(), OddOrderIsometryGroup()}),
    )


def ihs3() -> ManifoldDescriptor:
    """A closed hyperbolic integral homology 3-sphere (axiomatized)."""
    homology = GradedGroup.from_dict({0: Z, 3: Z}, 3)
    return make_descriptor(
        IHS3(), 3, homology,
        HyperbolicThreeManifoldGroup(next(_generator_ids)), 0,
        frozenset({Hyperbolic()}),
    )


def bundle(m: int, d: int) -> ManifoldDescriptor:
    """Sphere bundle S^{2m+1} -> E -> S^{2m+2} with Euler number 2d.

    The Gysin sequence leaves a single torsion group Z_{2|d|} in
    cohomology degree 2m+2; dimension is 4m+3.
    """
    if m < 0:
        raise ValueError(f"bundle index must be >= 0, got {m}")
    if d == 0:
        raise ValueError("Euler multiple must be nonzero (use prod for the trivial bundle)")
    dim = 4 * m + 3
    cohomology = GradedGroup.from_dict(
        {0: Z, 2 * m + 2: cyclic(2 * abs(d)), dim: Z}, dim
    )
    homology = homology_from_cohomology(cohomology, dim)
    pi1: Trivial | FiniteCyclic = Trivial() if m >= 1 else FiniteCyclic(2 * abs(d))
    return make_descriptor(
        Bundle(m, d), dim, homology, pi1, homological_connectivity(homology, pi1)
    )


# -- combinators -----------------------------------------------------------------


def spin(r: int, m: ManifoldDescriptor) -> ManifoldDescriptor:
    """The r-spin: boundary of (M minus an open disk) x D^{r+1}.

    Homology is punctured homology plus the r-shifted reduced homology;
    pi_1 is preserved in dimension >= 3.  Dimension-2 inputs with
    nontrivial pi_1 are handled by the explicit surface rewrite into a
    connected sum of S^{r+1} x S^1 summands (the generic pi_1 rule fails
    there).
    """
    if r < 1:
        raise ValueError(f"spin radius must be >= 1, got {r}")
    if m.dim < 2:
        raise ValueError(f"cannot spin a manifold of dimension {m.dim}")
    if m.dim == 2 and not isinstance(m.pi1, Trivial):
        return _spin_dim2(r, m)
    new_dim = m.dim + r
    homology = punctured_homology(m).with_top(new_dim).direct_sum(
        m.homology.reduced().shift(r, new_dim)
    )
    return make_descriptor(
        Spin(r, m.expr), new_dim, homology, m.pi1,
        homological_connectivity(homology, m.pi1),
    )


def _spin_dim2(r: int, m: ManifoldDescriptor) -> ManifoldDescriptor:
    """Rewrite sigma_r of a genus-g surface as a sum of 2g sphere products."""
    if isinstance(m.expr, Surface):
        genus = m.expr.genus
    elif m.expr == Prod(Sphere(1), Sphere(1)):
        genus = 1
    else:
        raise ValueError(
            f"spin of a 2-manifold is only defined for surfaces, got {m.expr}"
        )
    out = product(sphere(r + 1), sphere(1))
    for _ in range(2 * genus - 1):
        out = connected_sum(out, product(sphere(r + 1), sphere(1)))
    return out


def connected_sum(a: ManifoldDescriptor, b: ManifoldDescriptor) -> ManifoldDescriptor:
    if a.dim != b.dim:
        raise ValueError(f"connected sum needs equal dimensions, got {a.dim} and {b.dim}")
    if a.dim < 3:
        raise ValueError(f"connected sum needs dimension >= 3, got {a.dim}")
    n = a.dim
    groups: dict[int, AbGroup] = {0: Z, n: Z}
    for i in range(1, n):
        groups[i] = a.homology.group(i).direct_sum(b.homology.group(i))
    homology = GradedGroup.from_dict(groups, n)
    pi1 = free_product(a.pi1, b.pi1)
    return make_descriptor(
        CSum(a.expr, b.expr), n, homology, pi1,
        homological_connectivity(homology, pi1),
    )


def product(a: ManifoldDescriptor, b: ManifoldDescriptor) -> ManifoldDescriptor:
    """Cartesian product; homology by the integral Kunneth formula."""
    n = a.dim + b.dim
    groups: dict[int, AbGroup] = {}
    for k in range(n + 1):
        g = AbGroup(0)
        for i in range(k + 1):
            g = g.direct_sum(a.homology.group(i).tensor(b.homology.group(k - i)))
        for i in range(k):
            g = g.direct_sum(a.homology.group(i).tor(b.homology.group(k - 1 - i)))
        groups[k] = g
    homology = GradedGroup.from_dict(groups, n)
    pi1 = direct_product(a.pi1, b.pi1)
    return make_descriptor(
        Prod(a.expr, b.expr), n, homology, pi1,
        homological_connectivity(homology, pi1),
    )


def iterated_spin(radii: list[int], m: ManifoldDescriptor) -> ManifoldDescriptor:
    """sigma_{r_1} sigma_{r_2} ... sigma_{r_k}(M): innermost spin is r_k."""
    if m.dim < 3:
        raise ValueError("iterated spin needs dimension >= 3")
    out = m
    for r in reversed(radii):
        out = spin(r, out)
    return out


# -- named pipelines ---------------------------------------------------------------


def _check_pipeline_params(m: int, p: int) -> None:
    if m < 0:
        raise ValueError(f"pipeline index must be >= 0, got {m}")
    if not is_prime(p) or p % 4 != 3:
        raise ValueError(f"pipeline prime must be = 3 (mod 4), got {p}")


def pipeline_main(m: int, p: int) -> ManifoldDescriptor:
    """Strongly chiral rational homology (4m+3)-sphere with hyperbolic pi_1.

    Connected sum of the sphere bundle E_m with the 4m-spin of a
    hyperbolic rational homology 3-sphere; torsion Z_2p sits in degrees
    1, 2m+1 and 4m+1.
    """
    _check_pipeline_params(m, p)
    if m == 0:
        return dehn_rhs(p)
    return connected_sum(bundle(m, p), spin(4 * m, dehn_rhs(p)))


def pipeline_main2(m: int, p: int) -> ManifoldDescriptor:
    """Variant spinning an integral homology 3-sphere instead.

    The only intermediate homology is Z_2p in degree 2m+1; pi_1 is the
    hyperbolic group of the spun generator (fixed only in dimension >= 7).
    """
    _check_pipeline_params(m, p)
    if m == 0:
        return dehn_rhs(p)
    return connected_sum(bundle(m, p), spin(4 * m, ihs3()))
