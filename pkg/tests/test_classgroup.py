import pytest

from unifan.classgroup import class_group, radiant_classes
from unifan.fan import validate_fan
from unifan.radiance import find_bilateral

from conftest import RADIANT_FIXTURES, family


class TestClassGroup:
    def test_weighted_112(self, p112):
        info = class_group(p112)
        assert info.free_rank == 1
        assert info.torsion_invariants == ()

    def test_hirzebruch(self, f2):
        info = class_group(f2)
        assert info.free_rank == 2
        assert info.torsion_invariants == ()

    def test_p1xp1(self, p1xp1):
        assert class_group(p1xp1).free_rank == 2

    def test_del_pezzo(self, dp6):
        assert class_group(dp6).free_rank == 4

    def test_torsion_example(self):
        # complete surface fan whose ray matrix has second invariant factor 2
        fan = validate_fan(
            2, [(1, 0), (-1, 2), (-1, -2)], [[0, 1], [1, 2], [2, 0]],
            require_complete=True,
        )
        info = class_group(fan)
        assert info.free_rank == 1
        assert info.torsion_invariants == (2,)

    def test_rank_formula(self):
        fan = family("wps:1,1,2,4")
        info = class_group(fan)
        assert info.free_rank == fan.num_rays - fan.dim
        assert info.torsion_invariants == ()


class TestRadiantClasses:
    def test_hirzebruch_two_classes(self, f2):
        table = radiant_classes(f2, find_bilateral(f2))
        assert table.class_of(0) == (1, 0)
        assert table.class_of(2) == (1, 0)
        assert table.class_of(1) == (2, 1)
        assert table.class_of(3) == (0, 1)
        assert table.class_of(0) == table.class_of(2)
        e2 = table.class_of(1)
        assert tuple(2 * a + b for a, b in zip(table.class_of(2), table.class_of(3))) == e2

    def test_weighted_112(self, p112):
        table = radiant_classes(p112, find_bilateral(p112))
        assert table.class_of(2) == (1,)
        assert table.class_of(0) == (1,)
        assert table.class_of(1) == (2,)

    def test_p1xp1_units(self, p1xp1):
        table = radiant_classes(p1xp1, find_bilateral(p1xp1))
        assert table.class_of(0) == table.class_of(2) == (1, 0)
        assert table.class_of(1) == table.class_of(3) == (0, 1)

    @pytest.mark.parametrize("spec", sorted(RADIANT_FIXTURES.values()))
    def test_defining_relations(self, spec):
        # sum over rays of <m, n_rho> * class(rho) vanishes for unit characters m
        fan = family(spec)
        table = radiant_classes(fan, find_bilateral(fan))
        for coord in range(fan.dim):
            total = [0] * table.k
            for ray in fan.rays:
                for t in range(table.k):
                    total[t] += ray.primitive[coord] * table.class_of(ray.index)[t]
            assert not any(total)

    @pytest.mark.parametrize("spec", sorted(RADIANT_FIXTURES.values()))
    def test_free_rank_equals_negative_count(self, spec):
        fan = family(spec)
        bilateral = find_bilateral(fan)
        assert class_group(fan).free_rank == len(bilateral.negative)

    @pytest.mark.parametrize("spec", sorted(RADIANT_FIXTURES.values()))
    def test_entries_nonnegative(self, spec):
        fan = family(spec)
        table = radiant_classes(fan, find_bilateral(fan))
        assert all(x >= 0 for cls in table.classes for x in cls)
