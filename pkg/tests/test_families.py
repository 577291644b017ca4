import random
from fractions import Fraction

import pytest

import msu
from conftest import equilateral, from_coords, pair, random_space

Z = msu.validate_space([[0, 1, Fraction(3, 2)], [1, 0, 2], [Fraction(3, 2), 2, 0]])
TRI = msu.validate_space([[0, 1, 2], [1, 0, 3], [2, 3, 0]])


def test_quasiorder_examples():
    qo = msu.embed_quasiorder(msu.SpaceFamily((pair(1), pair(2))))
    assert qo.relation == ((True, False), (False, True))
    qo = msu.embed_quasiorder(msu.SpaceFamily((pair(1), TRI)))
    assert qo.relation[0][1] and not qo.relation[1][0]
    qo = msu.embed_quasiorder(msu.SpaceFamily((pair(1),)))
    assert qo.relation == ((True,),)


def test_quotient_poset_collapse_and_maximal():
    double = msu.SpaceFamily((pair(1), pair(1)))
    po = msu.quotient_poset(msu.embed_quasiorder(double))
    assert po.classes == ((0, 1),) and po.maximal == (0,)

    fam = msu.SpaceFamily((pair(1), pair(2), TRI))
    po = msu.quotient_poset(msu.embed_quasiorder(fam))
    assert po.classes == ((0,), (1,), (2,))
    assert [po.classes[c][0] for c in po.maximal] == [2]

    anti = msu.SpaceFamily((pair(1), pair(2), pair(3)))
    po = msu.quotient_poset(msu.embed_quasiorder(anti))
    assert len(po.maximal) == 3


def test_quotient_poset_rejects_broken_relation():
    broken = msu.EmbedQuasiOrder(((True, True, False), (False, True, True), (False, False, True)))
    with pytest.raises(msu.TransitivityError):
        msu.quotient_poset(broken)


def test_maximal_representatives():
    fam = msu.SpaceFamily((pair(1), pair(2), TRI))
    assert msu.maximal_representatives(fam) == [2]


def test_minimal_universal_subclass_examples():
    point = msu.validate_space([[0]])
    fam = msu.SpaceFamily((point, pair(1), pair(2), equilateral(3)))
    sub = msu.minimal_universal_subclass(fam)
    mats = sorted(s.matrix for s in sub.members)
    assert mats == sorted([equilateral(3).matrix, pair(2).matrix])

    assert msu.minimal_universal_subclass(msu.SpaceFamily((pair(1),))).members[0].matrix == pair(1).matrix

    dup = msu.minimal_universal_subclass(msu.SpaceFamily((pair(1), pair(1))))
    assert len(dup.members) == 1

    with pytest.raises(msu.EmptyFamilyError):
        msu.minimal_universal_subclass(msu.SpaceFamily(()))


def test_is_universal_space_examples():
    assert msu.is_universal_space(msu.SpaceFamily((pair(1), pair(2))), Z)
    assert not msu.is_universal_space(msu.SpaceFamily((pair(2),)), pair(1))
    assert msu.is_universal_space(msu.SpaceFamily(()), pair(1))


def test_is_minimal_universal_space_examples():
    fam = msu.SpaceFamily((pair(1), pair(2)))
    rep = msu.is_minimal_universal_space(fam, Z)
    assert rep.minimal and rep.failing_point is None and rep.failing_member is None

    slack = from_coords([0, 1, 2, 4])  # duplicated gaps leave removable points
    rep = msu.is_minimal_universal_space(fam, slack)
    assert not rep.minimal and rep.failing_point is not None

    rep = msu.is_minimal_universal_space(msu.SpaceFamily((pair(3),)), pair(1))
    assert not rep.minimal and rep.failing_member == 0

    rep = msu.is_minimal_universal_space(msu.SpaceFamily((equilateral(3),)), equilateral(3))
    assert rep.minimal


def test_nonexistence_condition_i_always_false():
    rng = random.Random(5)
    fams = [
        msu.SpaceFamily((pair(1), pair(2), TRI, equilateral(3))),
        msu.SpaceFamily((pair(1),)),
        msu.SpaceFamily((pair(1), pair(2))),
    ]
    for _ in range(10):
        members = tuple(random_space(rng, rng.randint(1, 4)) for _ in range(rng.randint(1, 4)))
        fams.append(msu.SpaceFamily(members))
    for fam in fams:
        holds, witness = msu.nonexistence_condition_i(fam)
        assert holds is False and witness is None


def test_subclass_is_universal_and_irredundant():
    rng = random.Random(17)
    for _ in range(20):
        base = [random_space(rng, rng.randint(2, 4)) for _ in range(rng.randint(1, 3))]
        members = list(base)
        for s in base:
            if s.n > 2 and rng.random() < 0.7:
                keep = tuple(sorted(rng.sample(range(s.n), s.n - 1)))
                members.append(s.restrict(keep))
        rng.shuffle(members)
        fam = msu.SpaceFamily(tuple(members))
        sub = msu.minimal_universal_subclass(fam)
        for m in fam.members:
            assert any(msu.embeds(m, a) for a in sub.members)
        for drop in range(len(sub.members)):
            rest = [a for t, a in enumerate(sub.members) if t != drop]
            assert any(not any(msu.embeds(m, a) for a in rest) for m in fam.members)
        for i, a in enumerate(sub.members):
            for b in sub.members[i + 1 :]:
                assert msu.compare(a, b) is msu.Comparability.INCOMPARABLE
