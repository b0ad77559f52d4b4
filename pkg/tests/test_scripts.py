import runpy
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    return runpy.run_path(str(SCRIPTS / name), run_name="not_main")


def test_reproduce_tables(capsys):
    load("reproduce_tables.py")["main"](["--rule", "1101010000", "--skip-chain"])
    out = capsys.readouterr().out
    assert "1101010000" in out and "{1: 1, 15: 1, 30: 8}" in out


def test_critical_plot_data(capsys):
    load("critical_plot_data.py")["main"](["--max", "10"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,iota,c_of_n,c_star"
    assert lines[10] == "10,1,4,30"


def test_monotonicity_experiment(capsys):
    assert load("monotonicity_experiment.py")["main"](["--n-max", "6"]) == 0
    assert capsys.readouterr().out.strip().endswith("holds")


@pytest.mark.parametrize("name", ["reproduce_tables.py", "critical_plot_data.py", "monotonicity_experiment.py"])
def test_scripts_have_help(name, capsys):
    with pytest.raises(SystemExit) as exc:
        load(name)["main"](["--help"])
    assert exc.value.code == 0
