"""
集成测试：命令行子命令、输出与退出码
"""

import json

import pytest

from swalg.cli import main
from swalg.cli.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, parse_n_range
from swalg.cli.report import expected_cl, expected_heights, zcl_lower_bound


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_n_range():
    assert parse_n_range("16") == [16]
    assert parse_n_range("14..17") == [14, 15, 16, 17]


def test_no_command_is_usage_error(capsys):
    code, out, _ = _run(capsys)
    assert code == EXIT_USAGE
    assert "swalg" in out


def test_bad_arguments(capsys, cache_dir):
    assert _run(capsys, "height", "--n", "abc")[0] == EXIT_USAGE
    assert _run(capsys, "height", "--n", "17..14")[0] == EXIT_USAGE
    assert _run(capsys, "gb", "--n", "5", "--k", "4")[0] == EXIT_USAGE
    assert _run(capsys, "zcl", "--n", "14", "--witness", "1,2")[0] == EXIT_USAGE


def test_gb_writes_cache_and_verifies(capsys, cache_dir):
    code, out, _ = _run(capsys, "gb", "--n", "16", "--k", "4", "--verify-known", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['verify_known'] == 'match'
    assert payload['order'] == ["w4", "w2", "w3"]
    assert (cache_dir / "gb_n16_k4_w4w2w3_v1.json").exists()


def test_gb_outside_known_family(capsys, cache_dir):
    code, out, _ = _run(capsys, "gb", "--n", "13", "--k", "4", "--verify-known", "--json")
    assert code == EXIT_OK
    assert json.loads(out)['verify_known'] == 'not-applicable'


def test_gb_no_cache(capsys, cache_dir):
    code, _, _ = _run(capsys, "gb", "--n", "8", "--k", "3", "--no-cache")
    assert code == EXIT_OK
    assert not cache_dir.exists()


def test_nf(capsys, cache_dir):
    code, out, _ = _run(capsys, "nf", "--n", "15", "--poly", "w4^7", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['normal_form'] == "0"
    assert payload['in_ideal'] is True

    code, out, _ = _run(capsys, "nf", "--n", "8", "--k", "3", "--poly", "w2^3")
    assert code == EXIT_OK
    assert out.strip().endswith("= w3^2")


def test_nf_syntax_error(capsys, cache_dir):
    code, _, err = _run(capsys, "nf", "--n", "8", "--k", "3", "--poly", "w9^2")
    assert code == EXIT_USAGE
    assert "错误" in err
    assert _run(capsys, "nf", "--n", "8", "--k", "3", "--poly", "05")[0] == EXIT_USAGE
    assert _run(capsys, "nf", "--n", "8", "--k", "3", "--poly", "w2^70000")[0] == EXIT_USAGE


def test_identities(capsys):
    code, out, _ = _run(capsys, "identities", "--id", "b,e", "--t-max", "5", "--json")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert [r['identity_id'] for r in reports] == ["b", "e"]
    assert all(r['t_range'] == [3, 5] for r in reports)


def test_identities_print_one_line_per_instance(capsys):
    code, out, _ = _run(capsys, "identities", "--id", "b,d", "--t-max", "4")
    assert code == EXIT_OK
    lines = [line.split() for line in out.splitlines() if "PASS" in line or "FAIL" in line]
    assert [(cols[0], cols[1], cols[2]) for cols in lines] == [
        ("b", "3", "PASS"), ("b", "4", "PASS"),
        ("d", "2", "PASS"), ("d", "3", "PASS"), ("d", "4", "PASS"),
    ]
    assert all(float(cols[3]) >= 0 for cols in lines)


def test_identities_unknown_id(capsys):
    assert _run(capsys, "identities", "--id", "q")[0] == EXIT_USAGE


def test_identities_bad_range(capsys):
    assert _run(capsys, "identities", "--t-min", "6", "--t-max", "4")[0] == EXIT_USAGE


def test_height_check(capsys, cache_dir):
    code, out, _ = _run(capsys, "height", "--n", "14..17", "--check")
    assert code == EXIT_OK
    assert "✗" not in out


def test_cl_json(capsys, cache_dir):
    code, out, _ = _run(capsys, "cl", "--n", "16", "--json", "--check")
    assert code == EXIT_OK
    payload = json.loads(out)[0]
    assert payload['cl'] == 15
    assert payload['heights'] == {"w2": 12, "w3": 6, "w4": 7}


def test_zcl_witness(capsys, cache_dir):
    code, out, _ = _run(capsys, "zcl", "--n", "15", "--witness", "15,5,3", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['nonzero'] is True
    assert len(payload['witness_term']) == 2

    code, out, _ = _run(capsys, "zcl", "--n", "14", "--witness", "15,5,3", "--json")
    assert code == EXIT_OK
    assert json.loads(out)['nonzero'] is False


def test_zcl_exact(capsys, cache_dir):
    code, out, _ = _run(capsys, "zcl", "--n", "9", "--exact", "--check", "--json")
    assert code == EXIT_OK
    assert json.loads(out)['zcl'] == 8


def test_zcl_budget_exceeded(capsys, cache_dir):
    code, out, _ = _run(capsys, "zcl", "--n", "16", "--max-steps", "50", "--json")
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)['zcl_lower_bound'] >= 15


def test_report_check(capsys, cache_dir):
    code, out, _ = _run(capsys, "report", "--n", "8..9", "--check")
    assert code == EXIT_OK
    assert "paper-cited bound, not computed" in out


def test_report_json(capsys, cache_dir):
    code, out, _ = _run(capsys, "report", "--n", "8", "--json")
    assert code == EXIT_OK
    row = json.loads(out)[0]
    assert row['cl'] == 5 and row['zcl'] == 8
    assert row['zcl_status'] == 'exact'
    assert row['cited'] == {'cat_lower': 6, 'zcl_G_lower': 9, 'tc_lower': 10,
                            'note': "paper-cited bound, not computed"}


def test_config_file(capsys, cache_dir, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("output: json\n", encoding='utf-8')
    code, out, _ = _run(capsys, "--config", str(config), "nf", "--n", "8", "--k", "3", "--poly", "w3^3")
    assert code == EXIT_OK
    assert json.loads(out)['in_ideal'] is True

    assert _run(capsys, "--config", str(tmp_path / "nope.yaml"), "height", "--n", "8")[0] == EXIT_USAGE


@pytest.mark.parametrize("n,expected", [
    (8, {'w2': 4, 'w3': 2, 'w4': 3}),
    (14, {'w2': 12, 'w3': 6, 'w4': 5}),
    (33, {'w2': 28, 'w3': 14, 'w4': 15}),
    (12, None),
])
def test_expected_heights(n, expected):
    assert expected_heights(n) == expected


def test_expected_cl_and_bound():
    assert [expected_cl(n) for n in (8, 9, 16, 17, 32, 14)] == [5, 5, 15, 15, 35, None]
    assert zcl_lower_bound(14) is None
    assert zcl_lower_bound(15) == 23
    assert zcl_lower_bound(30) == 51
