"""Fan data model, structural validation, and completeness testing."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .linalg import IntVec, LinearSystem, feasible, rational_rank


class FanError(Exception):
    """Base class for fan validation failures."""


class NonPrimitiveRay(FanError):
    pass


class DuplicateRay(FanError):
    pass


class NonSimplicialCone(FanError):
    pass


class FanConditionViolated(FanError):
    pass


class NotComplete(FanError):
    pass


@dataclass(frozen=True)
class Ray:
    index: int
    primitive: IntVec


@dataclass(frozen=True, order=True)
class Cone:
    """A cone of a simplicial fan, stored as its sorted ray-index set."""

    ray_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ray_indices)

    def __contains__(self, ray_index: int) -> bool:
        return ray_index in self.ray_indices

    def __iter__(self):
        return iter(self.ray_indices)


def _sort_key(cone: Cone):
    return (len(cone.ray_indices), cone.ray_indices)


@dataclass(frozen=True)
class Fan:
    """A validated simplicial fan; geometry always derives from `rays`."""

    dim: int
    rays: tuple[Ray, ...]
    max_cones: tuple[Cone, ...]
    all_cones: tuple[Cone, ...]
    cone_set: frozenset = field(repr=False, default=frozenset())

    @property
    def num_rays(self) -> int:
        return len(self.rays)

    def ray_vector(self, i: int) -> IntVec:
        return self.rays[i].primitive

    def ray_vectors(self) -> list[IntVec]:
        return [r.primitive for r in self.rays]

    def has_cone(self, ray_indices) -> bool:
        return tuple(sorted(ray_indices)) in self.cone_set

    def cone(self, ray_indices) -> Cone:
        key = tuple(sorted(ray_indices))
        if key not in self.cone_set:
            raise KeyError(f"{key} is not a cone of the fan")
        return Cone(key)


def _pairwise_intersection_ok(fan_dim, rays, c1: Cone, c2: Cone) -> bool:
    """Exact test that cone(c1) meet cone(c2) equals the cone on common rays.

    A point of both cones that needs a positive weight outside the common
    ray set would witness a violation; the normalized system below is
    feasible exactly when such a point exists.
    """
    common = set(c1.ray_indices) & set(c2.ray_indices)
    vars1 = list(c1.ray_indices)
    vars2 = list(c2.ray_indices)
    num = len(vars1) + len(vars2)
    equalities = []
    for coord in range(fan_dim):
        vec = [rays[i][coord] for i in vars1] + [-rays[j][coord] for j in vars2]
        equalities.append((tuple(vec), 0))
    norm = [1 if i not in common else 0 for i in vars1] + [
        1 if j not in common else 0 for j in vars2
    ]
    equalities.append((tuple(norm), 1))
    nonneg = []
    for pos in range(num):
        vec = [0] * num
        vec[pos] = 1
        nonneg.append((tuple(vec), 0))
    system = LinearSystem.make(num, equalities=equalities, inequalities=nonneg)
    return not feasible(system)


def validate_fan(dim, rays, max_cones, require_complete: bool = False) -> Fan:
    """Validate raw fan data and derive the full face list.

    Checks ray primitivity and distinctness, simpliciality of every cone,
    and the pairwise-intersection axiom (exact rational feasibility); with
    require_complete, also demands a complete fan.
    """
    if dim < 1:
        raise ValueError("fan dimension must be positive")
    ray_vecs = []
    for i, raw in enumerate(rays):
        vec = tuple(int(x) for x in raw)
        if len(vec) != dim:
            raise ValueError(f"ray {i} has dimension {len(vec)}, expected {dim}")
        g = 0
        for x in vec:
            g = gcd(g, abs(x))
        if g != 1:
            raise NonPrimitiveRay(f"ray {i} = {vec} is not a primitive vector")
        ray_vecs.append(vec)
    seen = {}
    for i, vec in enumerate(ray_vecs):
        if vec in seen:
            raise DuplicateRay(f"rays {seen[vec]} and {i} coincide: {vec}")
        seen[vec] = i

    cones = []
    for raw in max_cones:
        idx = tuple(sorted(set(int(i) for i in raw)))
        if len(idx) != len(set(raw)):
            raise ValueError(f"repeated ray index in cone {tuple(raw)}")
        if any(i < 0 or i >= len(ray_vecs) for i in idx):
            raise ValueError(f"ray index out of range in cone {idx}")
        if rational_rank([ray_vecs[i] for i in idx]) != len(idx):
            raise NonSimplicialCone(
                f"rays {idx} are linearly dependent; cone is not simplicial"
            )
        cones.append(Cone(idx))

    # Normalize the maximal list: drop duplicates and faces of other cones.
    cones = sorted(set(cones), key=_sort_key)
    maximal = [
        c
        for c in cones
        if not any(
            c is not other and set(c.ray_indices) < set(other.ray_indices)
            for other in cones
        )
    ]

    used = {i for c in maximal for i in c.ray_indices}
    missing = sorted(set(range(len(ray_vecs))) - used)
    if missing:
        raise FanConditionViolated(f"rays {missing} belong to no maximal cone")

    faces = {()}
    for c in maximal:
        for size in range(1, len(c.ray_indices) + 1):
            faces.update(combinations(c.ray_indices, size))
    all_cones = tuple(sorted((Cone(f) for f in faces), key=_sort_key))

    for c1, c2 in combinations(maximal, 2):
        if not _pairwise_intersection_ok(dim, ray_vecs, c1, c2):
            raise FanConditionViolated(
                f"cones {c1.ray_indices} and {c2.ray_indices} overlap beyond a common face"
            )

    fan = Fan(
        dim=dim,
        rays=tuple(Ray(i, v) for i, v in enumerate(ray_vecs)),
        max_cones=tuple(maximal),
        all_cones=all_cones,
        cone_set=frozenset(c.ray_indices for c in all_cones),
    )
    if require_complete and not is_complete(fan):
        raise NotComplete("the fan does not cover the ambient space")
    return fan


def is_complete(fan: Fan) -> bool:
    """Completeness via the ridge-pairing criterion.

    A validated simplicial fan covers the ambient space exactly when all
    maximal cones are full-dimensional, every ridge lies in exactly two of
    them, and the ridge-adjacency graph is connected.
    """
    n = fan.dim
    if not fan.max_cones:
        return False
    if any(len(c) != n for c in fan.max_cones):
        return False
    ridge_owners: dict[tuple, list[int]] = {}
    for ci, cone in enumerate(fan.max_cones):
        for ridge in combinations(cone.ray_indices, n - 1):
            ridge_owners.setdefault(ridge, []).append(ci)
    if any(len(owners) != 2 for owners in ridge_owners.values()):
        return False
    adjacency = {ci: set() for ci in range(len(fan.max_cones))}
    for a, b in ridge_owners.values():
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adjacency[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(fan.max_cones)


def cones_with_rayset(fan: Fan, ray_indices) -> list[Cone]:
    """All fan cones containing the given rays, sorted by size then lex."""
    wanted = set(ray_indices)
    return [c for c in fan.all_cones if wanted <= set(c.ray_indices)]
