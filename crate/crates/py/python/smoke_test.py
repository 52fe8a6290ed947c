"""Smoke test for the installed pyqhermite extension."""

import json

import pyqhermite


def test_first_terms():
    h = pyqhermite.family("new_qhermite", 4)
    assert h[4] == "(2+q)s^2-(3+2q+q^2)sx^2+x^4"
    assert "new_qhermite" in pyqhermite.family_names()


def test_family_json_schema():
    terms = json.loads(pyqhermite.family_json("new_qhermite", 2))[2]["terms"]
    assert terms == [
        {"x": 0, "s": 1, "coef": {"num": [-1], "den": [1]}},
        {"x": 2, "s": 0, "coef": {"num": [1], "den": [1]}},
    ]


def test_oracle():
    assert pyqhermite.crossing_polynomial(6, 0) == [5, 6, 3, 1]
    try:
        pyqhermite.crossing_polynomial(15, 0)
    except ValueError as e:
        assert "14" in str(e)
    else:
        raise AssertionError("cap not enforced")


def test_continued_fractions():
    assert pyqhermite.moments("T", 1) == ["1", "x"]
    assert pyqhermite.sfraction("T", 1) == ["x"]
    assert pyqhermite.hankel("newH", 2) == "-s"


def test_verify():
    reports = pyqhermite.verify(["matrix_inverse", "specializations"], max_n=6)
    assert [r.name for r in reports] == ["matrix_inverse", "specializations"]
    assert all(r.passed and r.witness is None for r in reports)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
    print("pyqhermite smoke test passed")
