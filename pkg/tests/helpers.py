"""Independent oracles and the randomized construction corpus.

Everything here deliberately avoids the code paths it is used to check:
group isomorphism is decided by element counting, Kunneth expansion is
done directly on lists of cyclic orders.
"""

from __future__ import annotations

import random
from math import gcd, lcm, prod

from spincalc.construct import (
    CP,
    Bundle,
    CSum,
    ConstructionExpr,
    DehnRHS,
    IHS3,
    Lens,
    Prod,
    Sphere,
    Spin,
    Surface,
)
from spincalc.dsl import evaluate


# -- brute-force isomorphism of finite abelian groups -------------------------


def elements_of_order_dividing(cyclic_orders: list[int], d: int) -> int:
    """Count x with d*x = 0 in the direct sum of the given cyclic groups."""
    return prod(gcd(d, n) for n in cyclic_orders)


def same_finite_group(orders_a: list[int], orders_b: list[int]) -> bool:
    """Isomorphism test by counting d-torsion elements.

    Counts for arbitrary d are determined by the divisors of the group
    exponent (gcd(d, n) = gcd(gcd(d, e), n) whenever n | e), so checking
    those suffices.
    """
    if prod(orders_a) != prod(orders_b):
        return False
    exponent = lcm(1, *orders_a, *orders_b)
    divisors = [d for d in range(1, exponent + 1) if exponent % d == 0]
    return all(
        elements_of_order_dividing(orders_a, d) == elements_of_order_dividing(orders_b, d)
        for d in divisors
    )


# -- brute-force Kunneth expansion ---------------------------------------------


def kunneth_orders(
    a: dict[int, tuple[int, list[int]]],
    b: dict[int, tuple[int, list[int]]],
    k: int,
) -> tuple[int, list[int]]:
    """Degree-k homology of a product, as (free rank, cyclic orders).

    Inputs map degree -> (rank, cyclic orders).  Works directly with gcds
    on the order lists, independent of the AbGroup arithmetic.
    """
    rank = 0
    orders: list[int] = []
    for i in range(k + 1):
        ra, ta = a.get(i, (0, []))
        rb, tb = b.get(k - i, (0, []))
        rank += ra * rb
        orders += tb * ra + ta * rb
        orders += [gcd(m, n) for m in ta for n in tb]
    for i in range(k):
        _, ta = a.get(i, (0, []))
        _, tb = b.get(k - 1 - i, (0, []))
        orders += [gcd(m, n) for m in ta for n in tb]
    return rank, [n for n in orders if n > 1]


def graded_as_orders(descriptor) -> dict[int, tuple[int, list[int]]]:
    return {
        d: (g.rank, list(g.factors)) for d, g in descriptor.homology.entries
    }


# -- randomized construction corpus ---------------------------------------------


def random_expr(rng: random.Random, depth: int) -> ConstructionExpr:
    """A construction expression that is valid by construction.

    Products are throttled (nested products multiply torsion summand
    counts combinatorially), spins and sums are not.
    """
    if depth <= 0 or rng.random() < 0.45:
        return _random_leaf(rng)
    kind = rng.choice(["spin", "spin", "csum", "csum", "prod"])
    if kind == "spin":
        child = random_expr(rng, depth - 1)
        if _dim_of(child) < 2:
            child = Sphere(rng.randint(3, 6))
        return Spin(rng.randint(1, 4), child)
    if kind == "prod":
        return Prod(random_expr(rng, depth - 2), random_expr(rng, depth - 2))
    left = random_expr(rng, depth - 1)
    n = _dim_of(left)
    if n < 3:
        left = Sphere(n := rng.randint(3, 7))
    return CSum(left, _random_expr_of_dim(rng, n, depth - 1))


def _random_leaf(rng: random.Random) -> ConstructionExpr:
    roll = rng.randint(0, 6)
    if roll == 0:
        return Sphere(rng.randint(1, 6))
    if roll == 1:
        return CP(rng.randint(1, 2))
    if roll == 2:
        return Surface(rng.randint(2, 3))
    if roll == 3:
        return Lens(rng.choice([2, 3, 5, 7]), rng.choice([3, 5]))
    if roll == 4:
        return DehnRHS(rng.choice([3, 5, 7, 11, 13]))
    if roll == 5:
        return IHS3()
    return Bundle(rng.randint(0, 1), rng.choice([1, 2, 3, 7, -5]))


def _random_expr_of_dim(rng: random.Random, n: int, depth: int) -> ConstructionExpr:
    options = [lambda: Sphere(n)]
    if n % 2 == 1 and n >= 3:
        options.append(lambda: Lens(rng.choice([2, 3, 5, 7]), n))
    if n > 3:
        options.append(lambda: Spin(n - 3, rng.choice([DehnRHS(7), IHS3(), Sphere(3)])))
    if n >= 2:
        options.append(lambda: Prod(Sphere(a := rng.randint(1, n - 1)), Sphere(n - a)))
    if n % 4 == 3:
        options.append(lambda: Bundle((n - 3) // 4, rng.choice([1, 3, 7])))
    if depth > 0:
        options.append(lambda: CSum(_random_expr_of_dim(rng, n, 0), _random_expr_of_dim(rng, n, 0)))
    return rng.choice(options)()


def _dim_of(e: ConstructionExpr) -> int:
    if isinstance(e, Sphere):
        return e.n
    if isinstance(e, CP):
        return 2 * e.n
    if isinstance(e, Surface):
        return 2
    if isinstance(e, Lens):
        return e.dim
    if isinstance(e, (DehnRHS, IHS3)):
        return 3
    if isinstance(e, Bundle):
        return 4 * e.m + 3
    if isinstance(e, Spin):
        return _dim_of(e.child) + e.r
    if isinstance(e, CSum):
        return _dim_of(e.left)
    if isinstance(e, Prod):
        return _dim_of(e.left) + _dim_of(e.right)
    raise TypeError(e)


def corpus(seed: int, size: int, depth: int = 5):
    """Deterministic list of (expr, descriptor) pairs."""
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        expr = random_expr(rng, depth)
        out.append((expr, evaluate(expr)))
    return out
