import json

from io import StringIO

import pytest

from django.core.management import CommandError, call_command

from src.apps.families.services.catalog import THEOREM1_FIXTURE


def run_command(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().splitlines()


def test_count_range_matches_golden(golden_lines):
    assert run_command("count", "--range", "9..30") == golden_lines("counts_9_30.txt")


def test_count_by_order():
    assert run_command("count", "--n", "9", "--by-order") == [
        "Triangle 18",
        "Square 10",
        "Starone 3",
        "Startwo 1",
        "Starthree 1",
        "Asterisk 10",
        "Diamond 9",
        "There are 52 solutions",
    ]


def test_count_without_memo():
    assert run_command("count", "--n", "12", "--no-memo") == ["There are 362 solutions"]


def test_count_writes_to_a_file(tmp_path):
    target = tmp_path / "counts.txt"
    assert run_command("count", "--range", "9..10", "--out", str(target)) == []
    assert target.read_text(encoding="utf-8") == "(9,52)\n(10,100)\n"


def test_failed_command_leaves_out_file_untouched(tmp_path):
    target = tmp_path / "solutions.txt"
    with pytest.raises(CommandError):
        run_command("enumerate", "--n", "8", "--out", str(target))
    assert not target.exists()

    target.write_text("previous run\n", encoding="utf-8")
    with pytest.raises(CommandError):
        run_command("enumerate", "--n", "8", "--out", str(target))
    assert target.read_text(encoding="utf-8") == "previous run\n"


def test_count_beyond_the_limit_fails():
    with pytest.raises(CommandError) as excinfo:
        run_command("count", "--n", "41")
    assert excinfo.value.returncode == 1


def test_enumerate_text(golden_lines):
    assert run_command("enumerate", "--n", "10") == [*golden_lines("enumeration_n10.txt"), "There are 100 solutions"]


def test_enumerate_parallel_json():
    payload = json.loads("\n".join(run_command("enumerate", "--n", "9", "--format", "json", "--threads", "4")))
    assert payload["count"] == 52


def test_enumerate_out_of_range():
    with pytest.raises(CommandError) as excinfo:
        run_command("enumerate", "--n", "8")
    assert excinfo.value.returncode == 1


def test_verify_accepts_enumeration_output(tmp_path):
    source = tmp_path / "solutions.json"
    source.write_text(json.dumps({"prime": 3, "solutions": [[2, 3, 6], [2, 3, 9, 27, 81, 243, 729, 2187, 4374]]}))
    summary = json.loads("\n".join(run_command("verify", "--file", str(source), "--padic")))
    assert (summary["total"], summary["passed"], summary["failed"]) == (2, 2, 0)
    assert len(summary["padic"]) == 2


def test_verify_fails_on_a_bad_candidate(tmp_path):
    source = tmp_path / "solutions.json"
    source.write_text(json.dumps([[2, 3, 7], [2, 4, 4]]))
    with pytest.raises(CommandError) as excinfo:
        run_command("verify", "--file", str(source))
    assert excinfo.value.returncode == 1
    assert "2 of 2" in str(excinfo.value)


def test_verify_allows_repeats(tmp_path):
    source = tmp_path / "solutions.json"
    source.write_text(json.dumps([[2, 4, 4]]))
    summary = json.loads("\n".join(run_command("verify", "--file", str(source), "--allow-repeats")))
    assert summary["passed"] == 1


def test_verify_missing_file(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        run_command("verify", "--file", str(tmp_path / "absent.json"))
    assert "file_missing" in str(excinfo.value)


def test_oracle_matches_the_enumerator():
    lines = run_command("oracle", "--n", "9")
    assert lines[-2:] == ["There are 52 solutions", "reference: 52 solutions, match"]


def test_oracle_json_verdict():
    verdict = json.loads("\n".join(run_command("oracle", "--n", "9", "--prime", "7", "--format", "json")))
    assert verdict["matches"]
    assert verdict["found"] == [[2, 4, 7, 14, 49, 98, 343, 686, 1372]]


def test_oracle_without_reference():
    lines = run_command("oracle", "--n", "3", "--cap", "1")
    assert lines == ["{2,3,6}", "There are 1 solutions", "reference: unavailable"]


def test_oracle_general():
    assert run_command("oracle", "--n", "3", "--general") == ["{2,3,6}", "{2,4,4}", "{3,3,3}", "There are 3 solutions"]


def test_oracle_resource_limit(settings):
    settings.EGYPTIAN_SEARCH = {**settings.EGYPTIAN_SEARCH, "ORACLE_NODE_BUDGET": 10}
    with pytest.raises(CommandError) as excinfo:
        run_command("oracle", "--n", "9")
    assert excinfo.value.returncode == 3


def test_families_for_nine():
    lines = run_command("families", "--n", "9")
    assert lines[0] == "U_9 {2,4,5,25,125,625,3125,15625,62500}"
    assert lines[1] == "V_9 {2,4,7,14,49,98,343,686,1372}"
    assert lines[-1] == "total 54"


def test_families_for_even_n():
    lines = run_command("families", "--n", "10")
    assert lines[1] == "V_10 none"
    assert lines[-1] == "total 101"


def test_families_catalog_round_trips_the_fixture():
    fixture = run_command("families", "--catalog")
    data = [line for line in THEOREM1_FIXTURE.read_text(encoding="utf-8").splitlines() if line and line[0] != "#"]
    assert fixture == data


def test_bounds():
    assert run_command("bounds", "--n", "9") == [
        "n=9 d_min=(3,2) lower=43 count=52 upper(n-3)=4425 upper(n-4)=1212 holds"
    ]
    assert len(run_command("bounds", "--range", "9..12")) == 4


def test_expand_fraction():
    assert run_command("expand", "--fraction", "4/5") == ["{2,4,20}"]


def test_expand_value():
    assert run_command("expand", "--value", "4", "--identity", "four-term") == ["{5,40,60,120}"]


def test_expand_solution_term():
    lines = run_command("expand", "--solution", "2,4,4", "--identity", "four-term", "--index", "1")
    assert lines == ["{2,5,40,60,120,4}"]


def test_expand_requires_an_identity():
    with pytest.raises(CommandError) as excinfo:
        run_command("expand", "--value", "4")
    assert "missing_identity" in str(excinfo.value)


def test_structure_text():
    assert run_command("structure", "--values", "2,3,6") == ["d=(1,2,5)", "r=(3,2,1)"]


def test_structure_json():
    structure = json.loads(run_command("structure", "--values", "{3,3,3}", "--format", "json")[0])
    assert structure == {"n": 3, "d": [2, 2, 2], "r": [1, 1, 1]}


def test_structure_rejects_a_non_solution():
    with pytest.raises(CommandError):
        run_command("structure", "--values", "2,3,7")
