import random

import pytest

from almax.homology import (
    AbelianGroup,
    IntegerChainComplex,
    IntMatrix,
    homology,
    nonzero_groups,
    smith_normal_form,
)
from helpers import snf_minor_gcd

# boundary of the projective-plane cell structure: T0 -> r0+r2, T1 -> -r1+r2, T2 -> r0-r1
RP2_BOUNDARY = [
    [1, 0, 1],
    [0, -1, -1],
    [1, 1, 0],
]


class TestAbelianGroup:
    def test_render(self):
        assert AbelianGroup().render() == "0"
        assert AbelianGroup(1).render() == "Z"
        assert AbelianGroup(3, (2,)).render() == "Z^3 + Z/2"
        assert AbelianGroup(0, (2, 4)).render() == "Z/2 + Z/4"

    def test_divisibility_enforced(self):
        with pytest.raises(ValueError):
            AbelianGroup(0, (4, 2))
        with pytest.raises(ValueError):
            AbelianGroup(0, (1,))

    def test_canonical_equality(self):
        assert AbelianGroup(1, (2,)) == AbelianGroup(1, (2,))
        assert AbelianGroup(1) != AbelianGroup(0, (2,))


class TestSmithNormalForm:
    def test_single_entry(self):
        assert smith_normal_form([[2]]) == (2,)

    def test_identity(self):
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (1, 1, 1)

    def test_rp2_boundary(self):
        assert smith_normal_form(RP2_BOUNDARY) == (1, 1, 2)

    def test_empty_and_zero(self):
        assert smith_normal_form([]) == ()
        assert smith_normal_form([[0, 0], [0, 0]]) == ()
        assert smith_normal_form(IntMatrix(0, 5)) == ()

    def test_divisibility_chain_and_sign(self):
        factors = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
        assert all(f > 0 for f in factors)
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0

    def test_matches_minor_gcd_oracle_on_random_matrices(self):
        rng = random.Random(20240811)
        for trial in range(120):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 4)
            dense = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
            assert smith_normal_form(dense) == snf_minor_gcd(dense), dense

    def test_sparse_path_agrees_with_dense(self):
        # large enough to take the unit-pivot reduction path
        rng = random.Random(7)
        size = 80
        entries = {}
        for _ in range(400):
            entries[(rng.randrange(size), rng.randrange(size))] = rng.choice([-1, 1, 1, 2])
        big = IntMatrix(size, size, entries)
        from almax.homology import _dense_invariant_factors

        assert smith_normal_form(big) == tuple(_dense_invariant_factors(big.to_rows()))


class TestIntMatrix:
    def test_compose(self):
        a = IntMatrix.from_rows([[1, 2], [0, 1]])
        b = IntMatrix.from_rows([[1, 0], [3, 1]])
        assert a.compose(b).to_rows() == [[7, 2], [3, 1]]

    def test_entries_accumulate(self):
        m = IntMatrix(2, 2)
        m.add(0, 0, 1)
        m.add(0, 0, -1)
        assert m.is_zero()

    def test_shape_checked(self):
        m = IntMatrix(2, 2)
        with pytest.raises(IndexError):
            m.add(2, 0, 1)


def make_complex(ranks, dense_boundaries, step=1):
    boundaries = {k: IntMatrix.from_rows(rows) for k, rows in dense_boundaries.items()}
    return IntegerChainComplex(ranks=ranks, boundaries=boundaries, step=step)


class TestHomology:
    def test_rp2_complex(self):
        # 0 -> Z^3 -> Z^3 -> 0 with the determinant +-2 boundary
        cx = make_complex({2: 3, 1: 3, 0: 0}, {2: RP2_BOUNDARY})
        groups = homology(cx)
        assert groups[2] == AbelianGroup()
        assert groups[1] == AbelianGroup(0, (2,))
        assert groups[0] == AbelianGroup()

    def test_zero_complex(self):
        cx = make_complex({1: 0, 0: 0}, {})
        assert all(g.is_trivial for g in homology(cx).values())

    def test_composition_checked(self):
        bad = make_complex({2: 1, 1: 1, 0: 1}, {2: [[1]], 1: [[1]]})
        with pytest.raises(ValueError):
            homology(bad)

    def test_step_two(self):
        cx = make_complex({3: 1, 1: 1}, {3: [[2]]}, step=2)
        groups = homology(cx)
        assert groups[3] == AbelianGroup()
        assert groups[1] == AbelianGroup(0, (2,))

    def test_euler_characteristic(self):
        rng = random.Random(3)
        # random valid complex: C_1 --M--> C_0, no relation to check beyond ranks
        m = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)]
        cx = make_complex({1: 4, 0: 3}, {1: m})
        groups = homology(cx)
        euler_chain = 4 - 3
        euler_homology = groups[1].free_rank - groups[0].free_rank
        assert euler_chain == euler_homology

    def test_invariance_under_basis_permutation_and_signs(self):
        rng = random.Random(11)
        base = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(4)]
        reference = homology(make_complex({1: 5, 0: 4}, {1: base}))
        for seed in range(5):
            r = random.Random(seed)
            rows = list(range(4))
            cols = list(range(5))
            r.shuffle(rows)
            r.shuffle(cols)
            signs_r = [r.choice((1, -1)) for _ in rows]
            signs_c = [r.choice((1, -1)) for _ in cols]
            shuffled = [
                [signs_r[i] * signs_c[j] * base[rows[i]][cols[j]] for j in range(5)]
                for i in range(4)
            ]
            assert homology(make_complex({1: 5, 0: 4}, {1: shuffled})) == reference

    def test_nonzero_groups_filter(self):
        groups = {0: AbelianGroup(), 1: AbelianGroup(2)}
        assert nonzero_groups(groups) == {1: AbelianGroup(2)}
