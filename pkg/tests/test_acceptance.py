"""The ten acceptance criteria, each an exhaustive or seeded sweep from ccminor.verify.

Run directly (``python tests/test_acceptance.py``) or under pytest; either way one
PASS/FAIL line is printed per criterion.
"""

import os
import sys

import pytest

from ccminor.verify import run_suite

CRITERIA = [
    (1, "lemma41", "cycle contraction keeps 2-edge-connectivity"),
    (2, "lemma32", "cycle contraction keeps 3-edge-connectivity"),
    (3, "bonds", "parallel cycles and bonds through an edge"),
    (4, "thm61", "3-connected taxonomy for every edge pair"),
    (5, "duality", "induced subgraphs versus cc-minors of the dual"),
    (6, "thm52", "edge-connectivity classes against brute force"),
    (7, "witness", "weighted tree witnesses"),
    (8, "roundtrip", "tree decomposition round trip"),
    (9, "template", "template extraction round trip"),
    (10, "oracle", "cc-minor oracle against naive search"),
]

JOBS = int(os.environ.get("CCMINOR_JOBS", os.cpu_count() or 1))


def _line(num, desc, res):
    return f"criterion {num:2d} {'PASS' if res.ok else 'FAIL'}  {desc}  ({res.line()})"


@pytest.mark.parametrize("num,suite,desc", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(num, suite, desc):
    res = run_suite(suite, jobs=JOBS)
    line = _line(num, desc, res)
    print(line)
    try:
        from conftest import ACCEPTANCE_LINES
        ACCEPTANCE_LINES.append(line)
    except ImportError:
        pass
    assert res.ok, "\n".join(res.failures[:5])


if __name__ == "__main__":
    bad = 0
    for num, suite, desc in CRITERIA:
        res = run_suite(suite, jobs=JOBS)
        print(_line(num, desc, res), flush=True)
        bad += not res.ok
    sys.exit(1 if bad else 0)
