import argparse

import pytest

from src.apps.cli.services.arguments import parse_fraction, parse_int_list, parse_range, positive_int
from src.apps.cli.services.runner import run


def test_unknown_subcommand(capsys):
    assert run(["bogus"]) == 2
    assert capsys.readouterr().err.startswith("usage: egyptian-kn {count,")


def test_missing_subcommand():
    assert run([]) == 2


def test_successful_run(capsys):
    assert run(["count", "--range", "9..11"]) == 0
    assert capsys.readouterr().out == "(9,52)\n(10,100)\n(11,190)\n"


def test_bad_flag_exits_with_usage_error():
    assert run(["count", "--n", "nine"]) == 2


def test_domain_error_exit_code():
    assert run(["enumerate", "--n", "5"]) == 1


def test_resource_limit_exit_code(settings):
    settings.EGYPTIAN_SEARCH = {**settings.EGYPTIAN_SEARCH, "ORACLE_NODE_BUDGET": 10}
    assert run(["oracle", "--n", "9"]) == 3


def test_parse_range():
    assert parse_range("9..30") == (9, 30)
    for raw in ("9-30", "30..9", "a..b"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_range(raw)


def test_parse_int_list():
    assert parse_int_list("{2,3,6}") == (2, 3, 6)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_int_list("2,0,6")


def test_scalar_converters():
    assert parse_fraction("4/5").numerator == 4
    assert positive_int("3") == 3
    with pytest.raises(argparse.ArgumentTypeError):
        parse_fraction("1/0")
    with pytest.raises(argparse.ArgumentTypeError):
        positive_int("0")
