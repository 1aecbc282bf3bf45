import pytest

from src.errors import ParseError
from src.portfolio import load_return_path, load_return_paths, path_filename, run_execution, save_return_path


def test_return_path_csv_is_bit_exact(tmp_path, fixture_model):
    path = run_execution(fixture_model, 120, 2**63 + 5, execution_index=7)
    target = save_return_path(path, tmp_path / path_filename(7), ["tool=qalloc"])
    text = target.read_text(encoding="utf-8")
    assert text.startswith("# tool=qalloc\n")
    assert "month,us_equity,intl_equity,global_bonds\n" in text

    back = load_return_path(target)
    assert back.names == path.names
    assert back.seed == path.seed and back.execution_index == 7
    assert back.returns.tobytes() == path.returns.tobytes()


def test_directory_is_loaded_in_execution_order(tmp_path, fixture_model):
    for idx in (2, 0, 1):
        save_return_path(run_execution(fixture_model, 12, idx, idx), tmp_path / path_filename(idx))
    paths = load_return_paths(tmp_path)
    assert [p.execution_index for p in paths] == [0, 1, 2]


def test_missing_or_bad_files(tmp_path):
    with pytest.raises(ParseError):
        load_return_path(tmp_path / "nope.csv")
    with pytest.raises(ParseError):
        load_return_paths(tmp_path)
    bad = tmp_path / "bad.csv"
    bad.write_text("t,a\n0,0.1\n", encoding="utf-8")
    with pytest.raises(ParseError):
        load_return_path(bad)
