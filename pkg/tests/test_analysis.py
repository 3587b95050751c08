"""Reports, the crossing-number bound, properness, family, catalog."""

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotoid_casson.analysis import (
    INCONCLUSIVE,
    PROPER_BY_C,
    PROPER_BY_CH,
    crossing_lower_bound,
    evaluate_catalog,
    full_report,
    generate_family,
    load_catalog,
    odd_conjecture_experiment,
    properness_certificate,
    reports_match_up_to_switch,
    summary_table,
)
from knotoid_casson.codes import parse_knotoid_code, serialize, switch_all
from knotoid_casson.fixtures import (
    FIVE_NINETEEN_TEXT,
    FOUR_SIX_TEXT,
    TWO_ONE_TEXT,
    five_nineteen,
    four_six,
    named_fixtures,
    two_one,
)
from knotoid_casson.homology import ModuleElement, Subgroup
from knotoid_casson.planar import NonRealizableError, all_loop_classes
from knotoid_casson.skew import CassonValues, casson_pm, skew_pairs

from support import canonical_relabel, code_strategy, random_realizable_code


def cyc(j, coeff=1):
    return ModuleElement.single(Subgroup.cyclic(j), coeff)


def test_bound_examples():
    assert crossing_lower_bound(cyc(1), ModuleElement.zero()) == 2
    assert crossing_lower_bound(ModuleElement.zero(), ModuleElement.zero()) == 0
    four = cyc(1, 3) + cyc(2)
    assert four.norm() == 4
    assert crossing_lower_bound(four, ModuleElement.zero()) == 4


@given(st.integers(0, 200))
def test_bound_minimality(target):
    e = cyc(1, target)
    n = crossing_lower_bound(e, ModuleElement.zero())
    assert n * n // 4 >= target
    if n:
        assert (n - 1) * (n - 1) // 4 < target


def test_properness_fixture_values():
    assert properness_certificate(CassonValues(1, 0), cyc(1), ModuleElement.zero()) == PROPER_BY_C
    assert properness_certificate(CassonValues(0, 0), ModuleElement.zero(), ModuleElement.zero()) == INCONCLUSIVE


def test_properness_synthetic_row():
    # C+ = C- = 2 with both refinements 2*<1>: only the second criterion fires
    cert = properness_certificate(CassonValues(2, 2), cyc(1, 2), cyc(1, 2))
    assert cert == PROPER_BY_CH


def test_properness_trivial_subgroup_terms_stay_inconclusive():
    cert = properness_certificate(CassonValues(2, 2), cyc(0, 2), cyc(0, 2))
    assert cert == INCONCLUSIVE


def test_properness_virtual_skips_homological_check():
    assert properness_certificate(CassonValues(1, 1), None, None) == INCONCLUSIVE
    assert properness_certificate(CassonValues(1, 0), None, None) == PROPER_BY_C


def test_family_first_member_is_the_two_crossing_fixture():
    assert canonical_relabel(generate_family(1)) == canonical_relabel(two_one())


def test_family_second_member_word():
    assert serialize(generate_family(2)) == (
        "Ox1 Ux2 Ox3 Ux4 Ux1 Ox2 Ux3 Ox4 ; x1=+1 x2=+1 x3=+1 x4=+1"
    )


def test_family_third_member_shape():
    code = generate_family(3)
    assert len(code.word) == 12
    assert set(code.signs.values()) == {1}


def test_family_rejects_nonpositive():
    with pytest.raises(ValueError):
        generate_family(0)


def test_family_counts_and_sharpness():
    for j in range(1, 9):
        code = generate_family(j)
        upper, lower = skew_pairs(code)
        assert len(upper) == j * (j + 1) // 2
        assert len(lower) == j * (j - 1) // 2
        assert all(p.sign == 1 for p in upper + lower)
        report = full_report(code, f"D_{j}")
        assert report.norm_sum == (2 * j) ** 2 // 4


def test_full_report_two_one():
    r = full_report(two_one(), "2_1")
    assert (r.c_plus, r.c_minus) == (1, 0)
    assert r.ch_plus == cyc(1)
    assert r.ch_minus == ModuleElement.zero()
    assert r.norm_sum == 1
    assert r.crossing_lower_bound == 2
    assert r.properness == PROPER_BY_C
    assert r.diagram_crossings == 2
    assert not r.is_virtual


def test_full_report_four_six():
    r = full_report(four_six(), "4_6")
    assert (r.c_plus, r.c_minus) == (1, 0)
    assert r.ch_plus == cyc(2)
    assert r.ch_minus == ModuleElement.zero()
    assert r.properness == PROPER_BY_C


def test_full_report_five_nineteen():
    r = full_report(five_nineteen(), "5_19")
    assert (r.c_plus, r.c_minus) == (0, 0)
    assert r.ch_plus == ModuleElement.zero()
    assert r.ch_minus == ModuleElement.zero()
    assert r.norm_sum == 0
    assert r.crossing_lower_bound == 0
    assert r.properness == INCONCLUSIVE


def test_full_report_virtual():
    r = full_report(parse_knotoid_code("Oa Ub Ua Ob ; a=+1 b=-1"), "virtual-2")
    assert r.is_virtual
    assert r.ch_plus is None and r.ch_minus is None
    assert r.norm_sum is None and r.crossing_lower_bound is None
    assert (r.c_plus, r.c_minus) == (-1, 0)
    assert r.properness == PROPER_BY_C
    assert r.to_json_dict()["ch_plus"] == "virtual"


def test_reports_match_up_to_switch():
    base = full_report(two_one(), "2_1")
    switched = full_report(switch_all(two_one()), "2_1-switched")
    assert (switched.c_plus, switched.c_minus) == (0, 1)
    assert reports_match_up_to_switch(base, switched)
    assert reports_match_up_to_switch(base, base)
    assert not reports_match_up_to_switch(base, full_report(four_six(), "4_6"))


def test_odd_conjecture_experiment_reports_both_sides():
    sides = odd_conjecture_experiment(full_report(five_nineteen(), "5_19"))
    assert sides == {"lhs": 1, "rhs": 6, "diagram_crossings": 5}
    virt = odd_conjecture_experiment(full_report(parse_knotoid_code("Oa Ub Ua Ob ; a=+1 b=-1")))
    assert virt["lhs"] is None


@given(code_strategy())
def test_pair_count_bounded_by_split(code):
    upper, lower = skew_pairs(code)
    n_plus = sum(1 for lab, (o, u) in code.positions().items() if o < u)
    n_minus = code.n_crossings - n_plus
    assert len(upper) + len(lower) <= n_plus * n_minus


def test_norm_inequality_on_random_realizable_codes():
    rng = random.Random(87)
    for _ in range(60):
        code = random_realizable_code(rng, rng.randrange(0, 8))
        r = full_report(code)
        n = code.n_crossings
        assert r.norm_sum <= n * n // 4


# --- catalog -----------------------------------------------------------------


def _write_catalog(tmp_path):
    (tmp_path / "2_1.knd").write_text("name 2_1\n" + TWO_ONE_TEXT + "\n")
    (tmp_path / "4_6.knd").write_text(FOUR_SIX_TEXT + "\n")
    (tmp_path / "more.knd").write_text(
        FIVE_NINETEEN_TEXT + "\n---\nname D_2\n" + serialize(generate_family(2)) + "\n"
    )
    return tmp_path


def test_load_catalog_names(tmp_path):
    entries = load_catalog(_write_catalog(tmp_path))
    assert [name for name, _ in entries] == ["2_1", "4_6", "more.0", "D_2"]


def test_evaluate_catalog_writes_reports(tmp_path):
    catalog = tmp_path / "codes"
    catalog.mkdir()
    _write_catalog(catalog)
    out = tmp_path / "reports"
    reports = evaluate_catalog(catalog, out)
    assert [r.name for r in reports] == ["2_1", "4_6", "more.0", "D_2"]
    payload = json.loads((out / "2_1.json").read_text())
    assert payload["c_plus"] == 1 and payload["ch_plus"] == "1*<1>"
    summary = (out / "summary.txt").read_text()
    assert "2_1" in summary and "1*<2>" in summary


def test_summary_table_layout():
    table = summary_table([full_report(two_one(), "2_1"), full_report(four_six(), "4_6")])
    lines = table.splitlines()
    assert lines[0].split() == ["name", "C+", "C-", "CH+", "CH-"]
    assert lines[2].split() == ["2_1", "1", "0", "1*<1>", "0"]
    assert lines[3].split() == ["4_6", "1", "0", "1*<2>", "0"]


def test_catalog_rejects_multiknotoid_entries(tmp_path):
    (tmp_path / "bad.knd").write_text("segment: Ob\ncircle: Ub\n; b=+1\n")
    with pytest.raises(Exception):
        load_catalog(tmp_path)


def test_shipped_fixture_catalog(tmp_path):
    from pathlib import Path

    shipped = Path(__file__).parent.parent / "fixtures"
    entries = dict(load_catalog(shipped))
    assert {"2_1", "4_6", "5_19", "D_2", "D_3"} <= set(entries)
    assert entries["2_1"] == two_one()
    assert entries["D_2"] == generate_family(2)
    reports = evaluate_catalog(shipped, tmp_path / "out")
    by_name = {r.name: r for r in reports}
    assert by_name["4_6"].ch_plus == cyc(2)
    assert by_name["D_3"].norm_sum == 9
