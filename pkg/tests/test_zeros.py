"""Minimal zero enumeration: supports, coordinates, minimality."""

import random
from fractions import Fraction

import pytest

from copocert.errors import NotCopositiveError
from copocert.linalg import SymMatrix, eval_quadratic, horn_matrix
from copocert.zeros import Zero, minimal_zeros, pair_zero, zeros_with_support

from oracles import random_positive_diagonal, random_symmetric

F = Fraction


def supports_of(zero_list):
    return sorted(z.sorted_support() for z in zero_list.zeros)


class TestZeroType:
    def test_from_coordinates_normalizes(self):
        z = Zero.from_coordinates((F(2), F(2), F(0)))
        assert z.coordinates == (F(1, 2), F(1, 2), F(0))
        assert z.support == frozenset({0, 1})

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Zero.from_coordinates((F(1), F(-1)))

    def test_rejects_zero_vector(self):
        with pytest.raises(ValueError):
            Zero.from_coordinates((F(0), F(0)))

    def test_pair_zero(self):
        z = pair_zero(0, 2, 4)
        assert z.coordinates == (F(1, 2), F(0), F(1, 2), F(0))
        assert z.sorted_support() == (0, 2)

    def test_pair_zero_validates(self):
        with pytest.raises(IndexError):
            pair_zero(2, 2, 4)


class TestMinimalZeros:
    def test_pair_instance(self):
        A = SymMatrix.from_rows([[1, -1], [-1, 1]])
        zl = minimal_zeros(A)
        assert len(zl) == 1
        assert zl.zeros[0].coordinates == (F(1, 2), F(1, 2))
        assert zl.zeros[0].sorted_support() == (0, 1)

    def test_horn_cycle(self):
        zl = minimal_zeros(horn_matrix())
        assert supports_of(zl) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        for z in zl.zeros:
            i, j = z.sorted_support()
            assert z.coordinates[i] == z.coordinates[j] == F(1, 2)

    def test_no_zeros_identity_and_all_ones(self):
        for n in (1, 2, 3):
            assert len(minimal_zeros(SymMatrix.identity(n))) == 0
            assert len(minimal_zeros(SymMatrix.all_ones(n))) == 0

    def test_rank_one_mixed_sign(self):
        A = SymMatrix.rank_one((F(1), F(-2), F(1)))
        zl = minimal_zeros(A)
        assert supports_of(zl) == [(0, 1), (1, 2)]
        coords = {z.sorted_support(): z.coordinates for z in zl.zeros}
        assert coords[(0, 1)] == (F(2, 3), F(1, 3), F(0))
        assert coords[(1, 2)] == (F(0), F(1, 3), F(2, 3))

    def test_singleton_support(self):
        A = SymMatrix.from_rows([[1, 0], [0, 0]])
        zl = minimal_zeros(A)
        assert supports_of(zl) == [(1,)]
        assert zl.zeros[0].coordinates == (F(0), F(1))

    def test_zero_matrix_has_singleton_zeros(self):
        A = SymMatrix.from_rows([[0, 0], [0, 0]])
        assert supports_of(minimal_zeros(A)) == [(0,), (1,)]

    def test_triple_support(self):
        # PSD with one-dimensional kernel spanned by the all-ones vector
        A = SymMatrix.from_rows([[1, F(-1, 2), F(-1, 2)],
                                 [F(-1, 2), 1, F(-1, 2)],
                                 [F(-1, 2), F(-1, 2), 1]])
        zl = minimal_zeros(A)
        assert supports_of(zl) == [(0, 1, 2)]
        assert zl.zeros[0].coordinates == (F(1, 3), F(1, 3), F(1, 3))

    def test_gate_rejects_noncopositive(self):
        with pytest.raises(NotCopositiveError) as err:
            minimal_zeros(SymMatrix.from_rows([[0, -1], [-1, 0]]))
        assert err.value.violator is not None

    def test_certified_skips_gate(self):
        A = horn_matrix()
        assert supports_of(minimal_zeros(A, certified_copositive=True)) == \
            supports_of(minimal_zeros(A))

    def test_antichain_and_invariants(self):
        rng = random.Random(59)
        interesting = 0
        for _ in range(40):
            n = rng.randint(2, 4)
            A = random_symmetric(rng, n, diag_range=(0, 4))
            try:
                zl = minimal_zeros(A)
            except NotCopositiveError:
                continue
            if len(zl):
                interesting += 1
            seen = set()
            for z in zl.zeros:
                assert eval_quadratic(A, z.coordinates) == 0
                assert all((A.apply(z.coordinates))[k] >= 0 for k in range(n))
                assert sum(z.coordinates) == 1
                assert z.support == frozenset(
                    i for i, c in enumerate(z.coordinates) if c > 0)
                assert z.support not in seen
                seen.add(z.support)
            for a in zl.zeros:
                for b in zl.zeros:
                    if a is not b:
                        assert not a.support < b.support
        assert interesting > 0

    def test_scaling_transports_supports(self):
        rng = random.Random(61)
        A = horn_matrix()
        d = random_positive_diagonal(rng, 5)
        B = SymMatrix.from_rows(
            [[d[i] * A.get(i, j) * d[j] for j in range(5)] for i in range(5)])
        assert supports_of(minimal_zeros(B)) == supports_of(minimal_zeros(A))


class TestZerosWithSupport:
    def test_present_support(self):
        z = zeros_with_support(horn_matrix(), (0, 1))
        assert z is not None and z.coordinates == (F(1, 2), F(1, 2), 0, 0, 0)

    def test_absent_support(self):
        assert zeros_with_support(horn_matrix(), (0, 2)) is None

    def test_non_minimal_support_still_answers(self):
        # the query is per-support and does not impose minimality
        A = SymMatrix.from_rows([[0, 0], [0, 0]])
        z = zeros_with_support(A, (0, 1))
        assert z is not None and z.sorted_support() == (0, 1)

    def test_validates_support(self):
        with pytest.raises(ValueError):
            zeros_with_support(horn_matrix(), ())
        with pytest.raises(ValueError):
            zeros_with_support(horn_matrix(), (0, 9))

    def test_copositivity_check_flag(self):
        with pytest.raises(NotCopositiveError):
            zeros_with_support(SymMatrix.from_rows([[0, -1], [-1, 0]]),
                               (0, 1), check_copositive=True)
