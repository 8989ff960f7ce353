import runpy
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).parent.parent / "scripts"


def load(name):
    return runpy.run_path(str(SCRIPTS / f"{name}.py"), run_name="scripts")


def test_count_table_checks_out(capsys):
    assert load("medad_count_table")["main"](["--max-ports", "8", "--check"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("monads,dyads,triads")
    assert "2,1,0,4,1,1" in "\n".join(out)


def test_count_table_rejects_large_cap(capsys):
    assert load("medad_count_table")["main"](["--max-ports", "11", "--check"]) == 2


@pytest.mark.parametrize("medad,counts", [("D(M,M)", "monads=6 dyads=3 triads=4 bonds=12"), ("M(M)", "monads=6 dyads=0 triads=4 bonds=9")])
def test_pipeline(capsys, tmp_path, medad, counts):
    assert load("triad_join_pipeline")["main"](["--medad", medad, "--out-dir", str(tmp_path)]) == 0
    assert counts in capsys.readouterr().out
    assert (tmp_path / "joined.dot").exists()


def test_render_figures(tmp_path, capsys):
    assert load("render_figures")["main"](["--out-dir", str(tmp_path)]) == 0
    golden = Path(__file__).parent / "golden"
    for name in ("monad_pair", "dyad_medad", "triad_medad", "grouped_arm"):
        assert (tmp_path / f"{name}.dot").read_text(encoding="utf-8") == (golden / f"{name}.dot").read_text(encoding="utf-8")
