"""Smoke test for the altgt_py extension module.

Build it first with `pip install --no-build-isolation -e crates/python`.
"""

import json
import sys

import altgt_py as ag


def main() -> int:
    lam = ag.Partition("2,2")
    assert lam.is_self_conjugate()
    assert lam.size == 4
    assert lam.tableaux() == ["12/34", "13/24"]

    label = ag.AltLabel("4,1,1")
    assert label.dim == 10
    assert len(label.geodesics()) == 10

    basis, rows = ag.yor_matrix("2,1", 1)
    assert basis == ["12/3", "13/2"]
    assert rows == [["1", "0"], ["0", "-1"]]

    table = ag.assoc_table("2,1")
    assert table == [("12/3", "i", "13/2"), ("13/2", "-i", "12/3")]

    first = ag.gt_basis("2,1^+", normalize=True, rule_name="first")
    assert len(first) == 1
    assert first[0].path == "2;2,1^+"
    assert str(first[0]) == "1/2*sqrt(2)*v[12/3] + 1/2*i*sqrt(2)*v[13/2]"
    doc = json.loads(first[0].to_json())
    assert [step["partition"] for step in doc["path"]] == [[2], [2, 1]]
    assert [term["tableau"] for term in doc["terms"]] == [[[1, 2], [3]], [[1, 3], [2]]]

    assert len(ag.gt_basis("4,1,1")) == 10

    ok, text = ag.verify(5)
    assert ok, text
    broken, _ = ag.verify(4, suite="yor", inject="column-sign")
    assert not broken

    try:
        ag.Partition("3,x")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed partition accepted")

    print("python smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
