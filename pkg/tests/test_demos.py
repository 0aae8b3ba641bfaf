import pathlib
import runpy

import pytest

DEMOS = pathlib.Path(__file__).resolve().parent.parent / "demos"
QUICK = ["plot_invariants.py", "plot_families.py", "plot_sequences.py"]


@pytest.mark.parametrize("name", QUICK)
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out.strip()
