"""Acceptance gate: one check per criterion, exact values and pinned time budgets.

Run directly (``python3 tests/test_acceptance.py``) for a pass/fail line per
criterion, or through pytest, where the same lines appear in the summary.
"""

import sys

import pytest

from posetao import enumeration, verify

# criterion number -> wall-clock budget in seconds
BUDGET = {1: 1.0, 2: 1.0, 3: 1.0, 4: 60.0, 5: 30.0, 6: 300.0, 7: 600.0, 8: 300.0, 9: None, 10: 1.0, 11: None}

LINES: list[str] = []


def _checks():
    return {
        1: lambda: verify.check_lambda_formulas(a_max=4096, k_max=12),
        2: lambda: verify.check_x_identity(a_max=4096, k_max=12),
        3: lambda: verify.check_x_via_max(a_max=512, confirmed=enumeration.confirmed_lambda_h(7, 8)),
        4: lambda: verify.check_constructions(lambda_max=8, x_max=6),
        5: lambda: verify.check_boolean(m_max=4, witness_max=6),
        6: lambda: verify.check_all_posets(n_max=6, multipartite_max=16),
        7: lambda: verify.check_acyclic_family(n_max=7),
        8: lambda: verify.check_oracle_equivalence(count=1000, n_max=12, poset_n_max=6),
        9: lambda: verify.check_basic_bounds(poset_n_max=6),
        10: lambda: verify.check_planar(copies_max=3),
        11: lambda: verify.check_structure_lemmas(n_max=6),
    }


def _judge(number, result):
    failures = list(result.failures)
    budget = BUDGET[number]
    if budget is not None and result.seconds >= budget:
        failures.append(f"took {result.seconds:.2f}s, budget {budget:.0f}s")
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number:2d}: {status}  {result.title} [{result.seconds:.2f}s]"
    if failures:
        line += "  -- " + "; ".join(failures[:3])
    return line, failures


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number):
    result = _checks()[number]()
    line, failures = _judge(number, result)
    LINES.append(line)
    print(line)
    assert not failures, line


if __name__ == "__main__":
    ok = True
    for number, check in _checks().items():
        line, failures = _judge(number, check())
        ok &= not failures
        print(line)
    sys.exit(0 if ok else 1)
