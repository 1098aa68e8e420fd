import pytest

from fembed.verdict import Outcome, TriVerdict, tri_and

YES, NO, UNKNOWN = TriVerdict.yes(1), TriVerdict.no("cert"), TriVerdict.unknown("horizon")


def test_constructors():
    assert YES.is_yes and YES.definite and YES.as_bool() is True
    assert NO.is_no and NO.definite and NO.as_bool() is False
    assert UNKNOWN.is_unknown and not UNKNOWN.definite and UNKNOWN.as_bool() is None
    assert TriVerdict.of_bool(None, reason="r").is_unknown
    assert TriVerdict.of_bool(True, 3).witness == 3


def test_no_implicit_truth_value():
    with pytest.raises(TypeError):
        bool(YES)


def test_str():
    assert str(TriVerdict.no(reason="gap")) == "No (gap)"
    assert str(Outcome.UNKNOWN) == "Unknown"


@pytest.mark.parametrize("left, right, expected", [
    (YES, TriVerdict.yes(2), Outcome.YES),
    (YES, NO, Outcome.NO),
    (NO, UNKNOWN, Outcome.NO),
    (UNKNOWN, NO, Outcome.NO),
    (UNKNOWN, YES, Outcome.UNKNOWN),
])
def test_kleene_and(left, right, expected):
    assert tri_and(left, right).outcome is expected


def test_and_keeps_witnesses():
    assert tri_and(YES, TriVerdict.yes(2)).witness == (1, 2)
    assert tri_and(YES, NO).witness == "cert"
