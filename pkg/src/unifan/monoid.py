"""Affine submonoids of the nonnegative class lattice: membership,
irreducible elements, and the freeness test."""

from __future__ import annotations

from dataclasses import dataclass

from .classgroup import ClassTable
from .linalg import DegenerateGenerator, IntVec, q_independent, solve_nonneg


@dataclass(frozen=True)
class ClassMonoid:
    """Submonoid of (Z>=0)^k generated by ray classes.

    Duplicate class vectors are collapsed to one generator each (the monoid
    is generated by a set of elements); `sources` keeps the originating ray
    indices per distinct generator.
    """

    ambient_rank: int
    generators: tuple[IntVec, ...]
    sources: tuple[tuple[int, ...], ...]


def gamma_of_rayset(classes: ClassTable, ray_indices) -> ClassMonoid:
    """The monoid generated by the classes of the given rays."""
    by_vector: dict[IntVec, list[int]] = {}
    for ray in sorted(ray_indices):
        vec = classes.class_of(ray)
        if all(x == 0 for x in vec):
            raise DegenerateGenerator(f"ray {ray} has zero class")
        by_vector.setdefault(vec, []).append(ray)
    gens = tuple(sorted(by_vector))
    return ClassMonoid(
        ambient_rank=classes.k,
        generators=gens,
        sources=tuple(tuple(by_vector[g]) for g in gens),
    )


def contains(monoid: ClassMonoid, vector) -> bool:
    """Monoid membership; the zero vector always belongs."""
    vector = tuple(int(x) for x in vector)
    if any(x < 0 for x in vector):
        raise ValueError("membership is only defined for nonnegative vectors")
    if all(x == 0 for x in vector):
        return True
    if not monoid.generators:
        return False
    return solve_nonneg(vector, monoid.generators) is not None


def irreducibles(monoid: ClassMonoid) -> list[IntVec]:
    """Generators that are not sums of two or more generators.

    A generator g is reducible exactly when g - h is a nonzero monoid
    element for some generator h; finitely generated submonoids of the
    nonnegative lattice decompose into their irreducibles.
    """
    out = []
    for g in monoid.generators:
        reducible = False
        for h in monoid.generators:
            rest = tuple(a - b for a, b in zip(g, h))
            if any(x < 0 for x in rest) or all(x == 0 for x in rest):
                continue
            if contains(monoid, rest):
                reducible = True
                break
        if not reducible:
            out.append(g)
    return out


def is_free(monoid: ClassMonoid) -> bool:
    """True iff the irreducible elements are Q-linearly independent."""
    return q_independent(irreducibles(monoid))
