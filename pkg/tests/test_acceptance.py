"""The acceptance battery: one test per criterion, one pass/fail line each.

Criterion 2 is expected to fail on exactly one grid point: with the cyclic
group of order three permuting all three colors and T equal to the whole
color set, the subposet labeling admits closed intervals with no strictly
increasing maximal chain (and others with several).  The labeling genuinely
is not an EL-labeling there; see tests/test_labeling.py for the focused
counterexample.  The criterion is asserted as stated rather than weakened.
"""

from sdowling import acceptance


def _check(criterion_fn):
    result = criterion_fn()
    print()
    print(result.line())
    for failure in result.failures[:10]:
        print(f"    {failure}")
    assert result.passed, result.line()


def test_criterion_1_el_labeling_full_posets():
    _check(acceptance.criterion_1)


def test_criterion_2_el_labeling_subposets():
    _check(acceptance.criterion_2)


def test_criterion_3_sphere_counts():
    _check(acceptance.criterion_3)


def test_criterion_4_tree_counts():
    _check(acceptance.criterion_4)


def test_criterion_5_bijection_round_trips():
    _check(acceptance.criterion_5)


def test_criterion_6_homology_wedge_profiles():
    _check(acceptance.criterion_6)


def test_criterion_7_counterexample_homology():
    _check(acceptance.criterion_7)


def test_criterion_8_closure_operator_reduction():
    _check(acceptance.criterion_8)


def test_criterion_9_characteristic_polynomial():
    _check(acceptance.criterion_9)


def test_criterion_10_moebius_chain_duality():
    _check(acceptance.criterion_10)
