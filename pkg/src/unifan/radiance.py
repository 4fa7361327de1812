"""Detection of the bilateral structure: a ray basis with all other rays
in the closed negative orthant."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .fan import Fan
from .linalg import IntMat, NotUnimodular, invert_unimodular


@dataclass(frozen=True)
class BilateralStructure:
    """Ordered positive rays forming a lattice basis, the negative rays, and
    the dual basis (rows pair to the Kronecker delta against the positive
    primitives)."""

    positive: tuple[int, ...]
    negative: tuple[int, ...]
    dual_basis: IntMat

    def coordinates(self, vector) -> tuple[int, ...]:
        """Coordinates of a lattice vector in the positive-ray basis."""
        return self.dual_basis.mul_vec(vector)


def iter_bilateral_structures(fan: Fan) -> Iterator[BilateralStructure]:
    """Yield every bilateral structure, candidates in lexicographic index order."""
    n = fan.dim
    indices = range(fan.num_rays)
    for combo in combinations(indices, n):
        basis = IntMat.from_rows([fan.ray_vector(i) for i in combo])
        try:
            dual = invert_unimodular(basis.transpose())
        except NotUnimodular:
            continue
        others = [i for i in indices if i not in combo]
        if all(
            all(c <= 0 for c in dual.mul_vec(fan.ray_vector(i))) for i in others
        ):
            yield BilateralStructure(
                positive=combo, negative=tuple(others), dual_basis=dual
            )


def find_bilateral(fan: Fan) -> BilateralStructure | None:
    """First bilateral structure in the fixed search order, or None.

    The positive rays are ordered by ascending input index; that ordering is
    the convention all downstream orderings build on, so the first witness
    makes every report reproducible from the input file alone.
    """
    return next(iter_bilateral_structures(fan), None)
