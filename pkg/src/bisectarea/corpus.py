"""Seeded random inputs shared by the reproduction report and the test suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .trianglecore import InvalidTriangle, Triangle


def random_triangle(rng: random.Random, lo: float = 0.1, hi: float = 1.0) -> Triangle:
    """Sides uniform on [lo, hi], rejection-sampled until they form a triangle."""
    while True:
        try:
            return Triangle(rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))
        except InvalidTriangle:
            pass


def random_bisector_triple(rng: random.Random, lo: float = 0.1, hi: float = 10.0) -> tuple[float, float, float]:
    """Log-uniform positive triple on [lo, hi]."""
    a, b = math.log(lo), math.log(hi)
    return tuple(math.exp(rng.uniform(a, b)) for _ in range(3))


def random_rational_triple(rng: random.Random, max_term: int = 30) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(rng.randint(1, max_term), rng.randint(1, max_term)) for _ in range(3))


def triangles(seed: int, n: int) -> list[Triangle]:
    rng = random.Random(seed)
    return [random_triangle(rng) for _ in range(n)]


def bisector_triples(seed: int, n: int) -> list[tuple[float, float, float]]:
    rng = random.Random(seed)
    return [random_bisector_triple(rng) for _ in range(n)]


def rational_triples(seed: int, n: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    rng = random.Random(seed)
    return [random_rational_triple(rng) for _ in range(n)]
