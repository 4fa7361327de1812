"""Demazure roots, the defining vector of the maximal unipotent subgroup,
and the precedence order on rays."""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import count

from .classgroup import ClassTable
from .fan import Fan
from .linalg import IntVec, LinearSystem, lattice_points
from .radiance import BilateralStructure


@dataclass(frozen=True)
class DemazureRoot:
    """A character pairing to -1 with exactly one ray and >= 0 with the rest.

    `in_u` is None until a defining vector has been chosen; unipotent roots
    always end up in the maximal unipotent subgroup, semisimple ones only
    when they pair positively with the chosen vector.
    """

    e: IntVec
    distinguished_ray: int
    semisimple: bool
    in_u: bool | None = None

    @property
    def kind(self) -> str:
        return "semisimple" if self.semisimple else "unipotent"


@dataclass(frozen=True)
class UnipotentChoice:
    """Lattice vector with strictly decreasing negative coordinates in the
    positive-ray basis, pairing nonzero with every semisimple root."""

    v: IntVec
    basis_coordinates: tuple[int, ...]


@dataclass(frozen=True)
class PrecedenceRelation:
    """Strict partial order on rays: equal-class pairs ordered negative
    before positive, positives among themselves by basis position."""

    pairs: frozenset[tuple[int, int]]

    def precedes(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs


def enumerate_roots(fan: Fan) -> list[DemazureRoot]:
    """All Demazure roots of a complete fan, sorted by (ray, e).

    For each ray the root set is the bounded lattice slice pairing to -1
    with that ray and nonnegatively with all others.
    """
    n = fan.dim
    found: list[tuple[int, IntVec]] = []
    for rho in range(fan.num_rays):
        system = LinearSystem.make(
            n,
            equalities=[(fan.ray_vector(rho), -1)],
            inequalities=[
                (fan.ray_vector(other), 0)
                for other in range(fan.num_rays)
                if other != rho
            ],
        )
        for e in lattice_points(system):
            found.append((rho, e))
    all_e = {e for _, e in found}
    roots = [
        DemazureRoot(e=e, distinguished_ray=rho, semisimple=tuple(-x for x in e) in all_e)
        for rho, e in sorted(found)
    ]
    return roots


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def choose_v(fan: Fan, bilateral: BilateralStructure, roots) -> UnipotentChoice:
    """Deterministic choice of the vector defining the unipotent subgroup.

    Tries coordinates (-1, -c, -c^2, ...) in the positive-ray basis for
    c = 2, 3, ...; the chain of strictly decreasing negatives is automatic
    and each rejected c kills a nonzero polynomial, so the search ends.
    """
    n = fan.dim
    basis_vectors = [fan.ray_vector(i) for i in bilateral.positive]
    semisimple = [r for r in roots if r.semisimple]
    for c in count(2):
        coords = tuple(-(c**i) for i in range(n))
        v = tuple(
            sum(coords[i] * basis_vectors[i][t] for i in range(n)) for t in range(n)
        )
        if all(_dot(r.e, v) != 0 for r in semisimple):
            return UnipotentChoice(v=v, basis_coordinates=coords)
    raise AssertionError("unreachable")


def mark_membership(roots, choice: UnipotentChoice) -> list[DemazureRoot]:
    """Fill the in_u flag: unipotent roots always, semisimple ones when they
    pair positively with the chosen vector."""
    out = []
    for r in roots:
        in_u = True if not r.semisimple else _dot(r.e, choice.v) > 0
        out.append(replace(r, in_u=in_u))
    return out


def compute_precedence(
    bilateral: BilateralStructure, classes: ClassTable
) -> PrecedenceRelation:
    """Pairs (a, b) with a preceding b: equal classes, a negative and b
    positive, or both positive with a earlier in the basis order."""
    position = {ray: pos for pos, ray in enumerate(bilateral.positive)}
    negatives = set(bilateral.negative)
    by_class: dict[IntVec, list[int]] = {}
    for ray in list(bilateral.positive) + list(bilateral.negative):
        by_class.setdefault(classes.class_of(ray), []).append(ray)
    pairs = set()
    for carriers in by_class.values():
        negs = [r for r in carriers if r in negatives]
        pos = sorted((r for r in carriers if r not in negatives), key=position.get)
        for tau in negs:
            for eps in pos:
                pairs.add((tau, eps))
        for i in range(len(pos)):
            for j in range(i + 1, len(pos)):
                pairs.add((pos[i], pos[j]))
    return PrecedenceRelation(pairs=frozenset(pairs))
