"""Chirality certification and degree-set inference.

Two analysis queries run over a descriptor: does the manifold admit a
self-map of degree -1 (strong chirality), and what is known about the
full set of self-mapping degrees.  Both are pure functions of the
descriptor; traces record which rule produced each conclusion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import (
    CP,
    CSum,
    ConstructionExpr,
    Prod,
    Sphere,
    Spin,
    Surface,
)
from .degrees import (
    ALL_INTEGERS,
    NONNEGATIVE_UNIT,
    SIGNED_UNIT,
    DegreeSet,
    exact_set,
    perfect_powers,
)
from .manifold import (
    ExternallyProvenStronglyChiral,
    Hyperbolic,
    KnownDegreeSet,
    ManifoldDescriptor,
    OddOrderIsometryGroup,
)
from .residues import minus_one_is_square_mod

PROVEN_STRONGLY_CHIRAL = "proven_strongly_chiral"
ADMITS_DEGREE_MINUS_ONE = "admits_degree_minus_one"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ChiralityVerdict:
    kind: str
    trace: tuple[str, ...]

    @property
    def is_strongly_chiral(self) -> bool:
        return self.kind == PROVEN_STRONGLY_CHIRAL

    def to_json(self) -> dict:
        return {"verdict": self.kind, "trace": list(self.trace)}

    def describe(self) -> str:
        names = {
            PROVEN_STRONGLY_CHIRAL: "proven strongly chiral",
            ADMITS_DEGREE_MINUS_ONE: "admits a self-map of degree -1",
            INCONCLUSIVE: "inconclusive",
        }
        lines = [names[self.kind]]
        lines.extend(f"  - {step}" for step in self.trace)
        return "\n".join(lines)


# -- strong chirality ---------------------------------------------------------


def _linking_obstruction(m: ManifoldDescriptor) -> tuple[str, ...] | None:
    """Torsion-linking obstruction to degree -1, when applicable.

    In dimension 4k+3 the middle torsion pairing is symmetric and scales
    with the mapping degree; a cyclic Tor H^{middle} = Z_q with -1 a
    non-residue mod q therefore forbids degree -1.
    """
    if m.dim % 4 != 3:
        return None
    k = (m.dim - 1) // 2
    torsion = m.cohomology().group(k + 1).torsion()
    q = torsion.is_cyclic_of_order()
    if q is None:
        return None
    if minus_one_is_square_mod(q):
        return None
    return (
        f"dimension {m.dim} = 2k+1 with k = {k} odd: torsion linking pairing applies",
        f"Tor H^{k + 1} = Z_{q} is cyclic",
        f"-1 is not a square mod {q}: no self-map of degree -1 exists",
    )


def _chirality_certificate(m: ManifoldDescriptor) -> tuple[str, ...] | None:
    """A proof of strong chirality, from homology or a recorded fact."""
    trace = _linking_obstruction(m)
    if trace is not None:
        return trace
    fact = m.get_fact(ExternallyProvenStronglyChiral)
    if fact is not None:
        return (f"recorded fact: {fact.describe()}",)
    return None


def chirality_verdict(m: ManifoldDescriptor) -> ChiralityVerdict:
    cert = _chirality_certificate(m)
    ds = degree_set(m)
    if cert is not None and ds.contains_minus_one():
        raise ValueError(
            "contradictory analysis: a chirality certificate and a degree -1 "
            f"witness both apply to {m.expr}"
        )
    if cert is not None:
        return ChiralityVerdict(PROVEN_STRONGLY_CHIRAL, cert)
    if ds.contains_minus_one():
        return ChiralityVerdict(
            ADMITS_DEGREE_MINUS_ONE,
            (f"degree set {ds.describe()} realizes -1 (rules: {', '.join(ds.rules)})",),
        )
    return ChiralityVerdict(INCONCLUSIVE, tuple(_blockers(m)))


def _blockers(m: ManifoldDescriptor) -> list[str]:
    out = []
    if m.dim % 4 != 3:
        out.append(f"dimension {m.dim} is not of the form 4k+3; torsion linking test inapplicable")
    else:
        k = (m.dim - 1) // 2
        torsion = m.cohomology().group(k + 1).torsion()
        q = torsion.is_cyclic_of_order()
        if q is None:
            out.append(f"Tor H^{k + 1} = {torsion} is not cyclic of order >= 2")
        else:
            out.append(f"-1 is a square mod {q}, so the torsion linking test is silent")
    out.append("no externally proven chirality fact recorded")
    out.append("degree-set engine does not realize -1")
    return out


# -- degree sets ---------------------------------------------------------------


def _rewrite(e: ConstructionExpr) -> ConstructionExpr:
    """Normalize spins of known forms so classification rules can fire."""
    if isinstance(e, CP) and e.n == 1:
        return Sphere(2)
    if isinstance(e, CSum):
        return CSum(_rewrite(e.left), _rewrite(e.right))
    if isinstance(e, Prod):
        return Prod(_rewrite(e.left), _rewrite(e.right))
    if isinstance(e, Spin):
        child = _rewrite(e.child)
        if isinstance(child, Sphere):
            return Sphere(child.n + e.r)
        if isinstance(child, CSum):
            # spins distribute over connected sums
            return CSum(_rewrite(Spin(e.r, child.left)), _rewrite(Spin(e.r, child.right)))
        if isinstance(child, Surface):
            return _sphere_product_sum(child.genus, e.r)
        if isinstance(child, CP):
            return _rewrite(Prod(CP(child.n - 1), Sphere(e.r + 2)))
        if (
            isinstance(child, Prod)
            and isinstance(child.left, Sphere)
            and isinstance(child.right, Sphere)
        ):
            n, k = child.left.n, child.right.n
            return CSum(
                Prod(Sphere(n + e.r), Sphere(k)),
                Prod(Sphere(n), Sphere(k + e.r)),
            )
        return Spin(e.r, child)
    return e


def _sphere_product_sum(genus: int, r: int) -> ConstructionExpr:
    summand: ConstructionExpr = Prod(Sphere(r + 1), Sphere(1))
    out = summand
    for _ in range(2 * genus - 1):
        out = CSum(out, summand)
    return out


def _is_sphere_product(e: ConstructionExpr) -> bool:
    if isinstance(e, Sphere):
        return True
    if isinstance(e, Prod):
        return _is_sphere_product(e.left) and _is_sphere_product(e.right)
    return False


def _is_sphere_product_sum(e: ConstructionExpr) -> bool:
    """Sphere, product of spheres, or connected sum of such, under any spins."""
    if isinstance(e, CSum):
        return _is_sphere_product_sum(e.left) and _is_sphere_product_sum(e.right)
    if isinstance(e, Spin):
        return _is_sphere_product_sum(e.child)
    return _is_sphere_product(e)


def degree_set(m: ManifoldDescriptor) -> DegreeSet:
    """Infer D(M) from the construction expression and recorded facts."""
    expr = m.expr

    # the spin of CP^n as a whole has degree set Z, even though no rule
    # covers its rewritten product form; this fires before rewriting
    if isinstance(expr, Spin) and isinstance(expr.child, CP) and expr.child.n >= 2:
        return exact_set(ALL_INTEGERS, ("spin-of-complex-projective",))

    e = _rewrite(expr)
    if _is_sphere_product_sum(e):
        return exact_set(ALL_INTEGERS, ("sphere-product-sum",))
    if isinstance(e, Surface):
        return exact_set(SIGNED_UNIT, ("hyperbolic-surface",))
    if isinstance(e, CP) and e.n >= 2:
        return exact_set(perfect_powers(e.n), ("complex-projective",))

    known: set[int] = {0, 1}
    upper = DegreeSet().upper_bound
    exact = False
    rules: list[str] = []

    fact = m.get_fact(KnownDegreeSet)
    if fact is not None:
        ds = fact.degrees
        known |= ds.known_subset
        upper = upper.intersect(ds.upper_bound)
        exact = exact or ds.exact
        rules.append("recorded-degree-set")

    if m.has_fact(Hyperbolic):
        if m.has_fact(OddOrderIsometryGroup) and m.dim == 3:
            # nonzero degree forces an isometry up to homotopy; odd-order
            # isometry groups leave only the identity's degree
            return exact_set(NONNEGATIVE_UNIT, ("hyperbolic-odd-isometry",))
        upper = upper.intersect(SIGNED_UNIT)
        rules.append("positive-simplicial-volume")

    if upper == SIGNED_UNIT and _chirality_certificate(m) is not None:
        upper = NONNEGATIVE_UNIT
        known.discard(-1)
        rules.append("chirality-removes-minus-one")

    if not rules:
        return DegreeSet(frozenset({0, 1}), rules=("no-rule-matched",))
    return DegreeSet(frozenset(known), upper, exact=exact, rules=tuple(rules))
