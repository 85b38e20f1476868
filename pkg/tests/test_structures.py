import numpy as np
import pytest

from biquandles.core import Permutation, associated_quandle, biquandle_of_quandle
from biquandles.errors import DomainError, MalformedInput
from biquandles.groups import cyclic_group, symmetric_group
from biquandles.group_constructions import (
    alexander_biquandle,
    conj_quandle,
    dihedral_quandle,
    trivial_quandle,
    wada_biquandle,
)
from biquandles.structures import (
    BiquandleStructure,
    biquandle_from_structure,
    constant_structure,
    inverse_inner_structure,
    structure_of_biquandle,
    validate_structure,
)


def corpus_biquandles():
    return [
        biquandle_of_quandle(trivial_quandle(1)),
        biquandle_of_quandle(dihedral_quandle(3)),
        biquandle_of_quandle(conj_quandle(symmetric_group(3))),
        wada_biquandle(cyclic_group(3)),
        wada_biquandle(cyclic_group(5)),
        wada_biquandle(symmetric_group(3)),
        alexander_biquandle(5, 3, 2),
        alexander_biquandle(7, 2, 5),
        alexander_biquandle(10, 3, 7),
        biquandle_from_structure(inverse_inner_structure(dihedral_quandle(5))),
        union_biquandle_constant_r5_pair(),
    ]


def union_biquandle_constant_r5_pair():
    from biquandles.combinators import union_biquandle_constant

    r5 = dihedral_quandle(5)
    return union_biquandle_constant(r5, r5, Permutation.identity(5), Permutation.identity(5))


class TestValidate:
    def test_constant_family_valid(self):
        r3 = dihedral_quandle(3)
        for f in (Permutation.identity(3), Permutation((1, 0, 2)), Permutation((1, 2, 0))):
            rep = validate_structure(r3, tuple(f for _ in range(3)))
            assert rep.passed

    def test_inverse_inner_valid_on_several_bases(self):
        for q in (dihedral_quandle(3), dihedral_quandle(5), conj_quandle(symmetric_group(3))):
            s = inverse_inner_structure(q)
            assert validate_structure(q, s.betas).passed

    def test_translations_on_takasaki_z3(self):
        base = dihedral_quandle(3)
        betas = tuple(Permutation(tuple((np.arange(3) + x) % 3)) for x in range(3))
        assert validate_structure(base, betas).passed
        assert biquandle_from_structure(BiquandleStructure(base, betas)) == wada_biquandle(cyclic_group(3))

    def test_non_automorphism_rejected(self):
        r4 = dihedral_quandle(4)
        rep = validate_structure(r4, tuple(Permutation((1, 0, 2, 3)) for _ in range(4)))
        assert rep.violations[0][0] == "beta-not-automorphism"

    def test_diagonal_condition_rejected(self):
        # over T_2 the pair (id, swap) fails the diagonal bijection
        t2 = trivial_quandle(2)
        rep = validate_structure(t2, (Permutation.identity(2), Permutation((1, 0))))
        assert ("structure-2", (0, 1)) in rep.violations

    def test_length_mismatch(self):
        with pytest.raises(MalformedInput):
            validate_structure(trivial_quandle(2), (Permutation.identity(2),))


class TestConstantStructure:
    def test_requires_automorphism(self):
        with pytest.raises(DomainError):
            constant_structure(dihedral_quandle(4), Permutation((1, 0, 2, 3)))

    def test_embeds_trivially(self):
        q = dihedral_quandle(5)
        s = constant_structure(q, Permutation.identity(5))
        assert biquandle_from_structure(s) == biquandle_of_quandle(q)

    def test_affine_double_on_r5(self):
        q = dihedral_quandle(5)
        f = Permutation(tuple((2 * x) % 5 for x in range(5)))
        b = biquandle_from_structure(constant_structure(q, f))
        assert associated_quandle(b) == q


class TestRoundTrips:
    @pytest.mark.parametrize("b", corpus_biquandles())
    def test_structure_roundtrip(self, b):
        s = structure_of_biquandle(b)
        assert biquandle_from_structure(s) == b

    @pytest.mark.parametrize("b", corpus_biquandles())
    def test_associated_quandle_is_base(self, b):
        s = structure_of_biquandle(b)
        assert s.base == associated_quandle(b)

    def test_inverse_inner_gives_projection_under(self):
        q = dihedral_quandle(3)
        b = biquandle_from_structure(inverse_inner_structure(q))
        assert np.array_equal(b.under, trivial_quandle(3).table)

    def test_alexander_structure_is_constant_multiplier(self):
        s = structure_of_biquandle(alexander_biquandle(5, 3, 2))
        mult3 = Permutation(tuple((3 * x) % 5 for x in range(5)))
        assert all(b == mult3 for b in s.betas)

    def test_embedded_gives_constant_identity(self):
        s = structure_of_biquandle(biquandle_of_quandle(dihedral_quandle(5)))
        assert all(b.is_identity() for b in s.betas)


class TestJson:
    def test_roundtrip(self):
        s = structure_of_biquandle(wada_biquandle(cyclic_group(3)))
        assert BiquandleStructure.from_json(s.to_json()).betas == s.betas
