import json

import pandas as pd
import pytest

from bws_core.exceptions import ConfigError
from bws_core.pipeline.changepoints import CHANGEPOINT_COLUMNS
from bws_core.schemas import ChangePointRow, FitReport, FitResult, TimeSeries, WfParams
from bws_core.storage import (
    load_word_sets,
    read_counts_csv,
    read_fit_report,
    read_json,
    read_series_csv,
    series_frame,
    write_csv,
    write_json,
)


class TestReaders:
    def test_series_sorted_and_labelled(self, tmp_path):
        path = tmp_path / "made.csv"
        path.write_text("# config: {}\ntime,frequency,tokens\n3,0.4,120\n1,0.2,100\n2,0.3,110\n")
        series = read_series_csv(path)
        assert series.label == "made"
        assert list(series.times) == [1.0, 2.0, 3.0]
        assert list(series.tokens) == [100, 110, 120]

    def test_tokens_optional(self, tmp_path):
        path = tmp_path / "bare.csv"
        path.write_text("time,frequency\n0,0.5\n1,0.6\n")
        assert read_series_csv(path, label="x").tokens is None

    def test_missing_column(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("time,freq\n0,0.5\n")
        with pytest.raises(ConfigError, match="frequency"):
            read_series_csv(path)

    def test_counts(self, tmp_path):
        path = tmp_path / "dexar.csv"
        path.write_text("year,count_focal,count_other\n1801,3,1\n1800,5,0\n")
        counts = read_counts_csv(path)
        assert counts.word == "dexar"
        assert {r.year: r.total for r in counts.rows} == {1800: 5, 1801: 4}

    def test_counts_duplicate_years(self, tmp_path):
        path = tmp_path / "twice.csv"
        path.write_text("year,count_focal,count_other\n1800,3,1\n1800,5,0\n")
        with pytest.raises(ValueError):
            read_counts_csv(path)


class TestWriters:
    def test_config_line_precedes_the_table(self, tmp_path):
        series = TimeSeries.from_arrays([0, 1], [0.25, 0.5], label="s")
        path = tmp_path / "out" / "series.csv"
        text = write_csv(series_frame(series), path, {"seed": 3, "popsize": 100.0})
        first, header = text.splitlines()[:2]
        assert json.loads(first.removeprefix("# config: ")) == {"popsize": 100.0, "seed": 3}
        assert header == "time,frequency"
        assert read_series_csv(path).frequencies.tolist() == [0.25, 0.5]

    def test_stdout(self, capsys):
        write_csv(pd.DataFrame({"a": [1]}))
        assert capsys.readouterr().out == "a\n1\n"

    def test_json_uses_lambda(self, tmp_path):
        result = FitResult(
            label="w",
            sel_fit=WfParams(popsize=900.0, selstrength=0.02),
            drift_fit=WfParams(popsize=800.0),
            loglik_sel=-10.0,
            loglik_drift=-12.5,
            likelihood_ratio=5.0,
            p_value=0.02,
            generation_time=2.0,
        )
        path = tmp_path / "fits.json"
        text = write_json(FitReport(results=[result]), path)
        assert '"lambda": 5.0' in text
        back = read_json(path, FitReport)
        assert back.results[0].likelihood_ratio == 5.0
        assert back.results[0].sel_fit == result.sel_fit


class TestStoredTables:
    def test_verb_fits(self, fixtures_dir):
        report = read_fit_report(fixtures_dir / "verb_fits_10yr.csv")
        by_label = {r.label: r for r in report.results}
        assert set(by_label) == {"wake", "grow", "blow", "dive"}
        assert by_label["wake"].bin_width == 10
        assert by_label["wake"].sel_fit.selstrength == pytest.approx(0.025)
        assert by_label["grow"].drift_fit.popsize == 184000
        assert by_label["blow"].p_value == pytest.approx(0.81)

    def test_change_point_table(self, fixtures_dir):
        frame = pd.read_csv(fixtures_dir / "spanish_changepoints.csv", comment="#")
        rows = {
            s: [ChangePointRow(**r) for r in group[CHANGEPOINT_COLUMNS].to_dict(orient="records")]
            for s, group in frame.groupby("set")
        }
        assert sorted(rows) == ["A", "B", "C", "D1", "D2"]
        assert [r.split_time for r in rows["B"]] == [1825, 1810, 1840]
        assert all(r.p_value < 0.05 for group in rows.values() for r in group)
        assert rows["D2"][0].selstrength_before > 0 > rows["D2"][0].selstrength_after


class TestManifest:
    def test_shipped_word_sets(self, manifest_path):
        sets = load_word_sets(manifest_path)
        assert {k: len(v.words) for k, v in sets.items()} == {"A": 20, "B": 26, "C": 16, "D1": 25, "D2": 16}
        assert sets["B"].paths["dexar"].replace("\\", "/").endswith("counts/dexar.csv")
        assert "opcion" in sets["D1"].words and "razon" in sets["D1"].words

    def test_explicit_paths(self, tmp_path):
        manifest = tmp_path / "sets.yml"
        manifest.write_text(
            "counts_dir: data\n"
            "sets:\n"
            "  S:\n"
            "    words: [uno, {word: dos, path: elsewhere/dos.csv}]\n"
        )
        sets = load_word_sets(manifest)
        assert sets["S"].paths == {
            "uno": str(tmp_path / "data" / "uno.csv"),
            "dos": str(tmp_path / "elsewhere" / "dos.csv"),
        }
        assert sets["S"].description == ""

    def test_sets_required(self, tmp_path):
        manifest = tmp_path / "empty.yml"
        manifest.write_text("counts_dir: data\n")
        with pytest.raises(ConfigError, match="sets"):
            load_word_sets(manifest)

    def test_invalid_yaml(self, tmp_path):
        manifest = tmp_path / "broken.yml"
        manifest.write_text("sets: [unclosed\n")
        with pytest.raises(ConfigError):
            load_word_sets(manifest)
