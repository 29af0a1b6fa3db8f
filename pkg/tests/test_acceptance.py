"""Acceptance suite: the eight certified criteria, one pass/fail line each.

Each test prints its own PASS/FAIL line (visible with -s or on failure) and
asserts the criterion plus its runtime budget.
"""

from weylkit import acceptance


def _check(rec, budget=None):
    line = f"{'PASS' if rec['passed'] else 'FAIL'} {rec['name']}: {rec['detail']} ({rec['seconds']}s)"
    print(line)
    assert rec["passed"], line
    if budget is not None:
        assert rec["seconds"] <= budget, f"{rec['name']} exceeded {budget}s budget"


def test_criterion_1_dominant_orbit_dimension_identity():
    _check(acceptance.criterion_1(seed=0), budget=1)


def test_criterion_2_convolution_fiber_additivity():
    _check(acceptance.criterion_2(seed=0), budget=5)


def test_criterion_3_fixed_component_examples():
    _check(acceptance.criterion_3(seed=0), budget=1)


def test_criterion_4_multiplicity_oracle_agreement():
    _check(acceptance.criterion_4(seed=0), budget=30)


def test_criterion_5_microstalk_monoidality():
    _check(acceptance.criterion_5(seed=0), budget=10)


def test_criterion_6_no_separating_affine_root():
    _check(acceptance.criterion_6(seed=0), budget=10)


def test_criterion_7_bimodule_verification():
    _check(acceptance.criterion_7(seed=0), budget=300)


def test_criterion_8_determinism_and_runtime():
    _check(acceptance.criterion_8(seed=0), budget=300)
