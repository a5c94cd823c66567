"""Acceptance gate: one test per criterion, one PASS/FAIL line each.

The Weil-pairing criterion is a documented expected failure: its
"nontrivial pairing for every family" clause cannot hold, because any
family whose complementary root subset has exponents summing to 0 mod 2g+1
has pairing value exactly 1 in every field.  All other clauses of that
criterion (route agreement, root-of-unity order, Weierstrass-point
independence) are still checked and pass.
"""

import time

import pytest

from hyptorsion import acceptance


def _param(name, fn):
    marks = []
    if name in acceptance.EXPECTED_FAIL:
        marks.append(pytest.mark.xfail(strict=True,
                                       reason=acceptance.EXPECTED_FAIL[name]))
    return pytest.param(name, fn, id=name, marks=marks)


@pytest.mark.parametrize("name,fn",
                         [_param(name, fn) for name, fn in acceptance.CRITERIA])
def test_criterion(name, fn, capsys):
    start = time.monotonic()
    ok, detail = fn()
    secs = time.monotonic() - start
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {name} ({secs:.2f}s): {detail}")
    assert ok, detail
