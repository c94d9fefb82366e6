import io
import json

import pytest

from symbetti import (
    BettiSet,
    IdealFileError,
    betti_set,
    betti_set_from_payload,
    betti_set_payload,
    graded_table,
    main,
    parse_ideal_text,
    segment_set_from_payload,
    segment_set_payload,
    segments,
)
from symbetti.cli import (
    EXIT_CAP,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_VERIFY,
    degree_from_runs,
    degree_runs,
    render_graded_table,
)


def write_ideal(tmp_path, payload, name="ideal.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


class TestParse:
    def test_basic(self):
        ideal = parse_ideal_text('{"generators": [[5,1],[2,2]], "characteristic": 0}')
        assert ideal.max_length == 2
        assert ideal.min_first_part == 2
        assert ideal.min_length == 2

    def test_redundant_generator_warns(self):
        warnings = []
        ideal = parse_ideal_text(
            '{"generators": [[2,2],[5,1],[5,2]]}', warn=warnings.append)
        assert len(ideal.generators) == 2
        assert any("[5, 2]" in w for w in warnings)

    def test_not_weakly_decreasing(self):
        with pytest.raises(IdealFileError) as err:
            parse_ideal_text('{"generators": [[1,2]]}')
        assert err.value.code == "bad-partition"

    def test_bad_characteristic(self):
        with pytest.raises(IdealFileError) as err:
            parse_ideal_text('{"generators": [[2,1]], "characteristic": 6}')
        assert err.value.code == "bad-characteristic"

    def test_malformed_document(self):
        with pytest.raises(IdealFileError) as err:
            parse_ideal_text("{nope")
        assert err.value.code == "malformed-document"
        with pytest.raises(IdealFileError) as err:
            parse_ideal_text('{"nothing": 1}')
        assert err.value.code == "malformed-document"


class TestRoundTrip:
    def test_betti_set_payload(self, ideal_j, bs):
        original = bs(ideal_j, 3)
        assert betti_set_from_payload(
            json.loads(json.dumps(betti_set_payload(original)))) == original

    def test_segment_set_payload(self, ideal_j, bs):
        seg = segments(ideal_j, f_top=bs(ideal_j, 2).F(), bs_below=bs(ideal_j, 1))
        assert segment_set_from_payload(
            json.loads(json.dumps(segment_set_payload(seg)))) == seg

    def test_degree_runs(self):
        degree = (5, 2, 2, 2, 0, 0)
        assert degree_runs(degree) == [[5, 1], [2, 3], [0, 2]]
        assert degree_from_runs(degree_runs(degree)) == degree


class TestRenderTable:
    def test_convention_row_j_column_i(self, ideal_j, bs):
        text = render_graded_table(graded_table(bs(ideal_j, 2)))
        lines = text.splitlines()
        assert lines[0].split() == ["0", "1"]
        rows = {line.split(":")[0].strip(): line.split(":")[1].split()
                for line in lines[1:]}
        assert rows["4"] == ["1", "."]
        assert rows["6"] == ["2", "2"]
        assert rows["5"] == [".", "."]


class TestCommands:
    def test_betti_text(self, tmp_path, ideal_j):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["betti", "--ideal", path, "--n", "2", "--parallel", "1"])
        assert code == EXIT_OK
        assert "pd = 1, reg = 6" in out

    def test_betti_multigraded_json(self, tmp_path, ideal_j, bs):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["betti", "--ideal", path, "--n", "3",
                         "--multigraded", "--parallel", "1"])
        assert code == EXIT_OK
        payload = json.loads(out)
        assert betti_set_from_payload(payload) == bs(ideal_j, 3)
        assert {(e["i"], e["j"]): e["beta"] for e in payload["table"]} == \
            graded_table(bs(ideal_j, 3))

    def test_characteristic_override(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["betti", "--ideal", path, "--n", "2", "--parallel", "1",
                         "--characteristic", "3", "--format", "json"])
        assert code == EXIT_OK

    def test_segments_text(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["segments", "--ideal", path, "--parallel", "1"])
        assert code == EXIT_OK
        assert "(0, 4, 1)" in out and "(0, 6, 0)" in out and "(1, 6, 1)" in out
        assert "L((0,4), 1, n-2)" in out

    def test_asymptotics_text(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["asymptotics", "--ideal", path, "--parallel", "1"])
        assert code == EXIT_OK
        assert "pd(I_n) = n - 1 (n >= 2)" in out
        assert "reg(I_n) = n + 4 (n >= 2)" in out
        assert "CM: false" in out

    def test_asymptotics_constant_regularity(self, tmp_path):
        path = write_ideal(
            tmp_path, {"generators": [[1, 1, 1, 1], [2, 2, 2], [3, 3], [4]]})
        code, out = run(["asymptotics", "--ideal", path, "--parallel", "1"])
        assert code == EXIT_OK
        assert "reg(I_n) = 7 (n >= 4)" in out and "CM: true" in out

    def test_extrapolate_materialized(self, tmp_path):
        path = write_ideal(
            tmp_path, {"generators": [[1, 1, 1, 1], [2, 2, 2], [3, 3], [4]]})
        code, out = run(["extrapolate", "--ideal", path, "--n", "8",
                         "--parallel", "1", "--no-rank-check"])
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["record_count"] == 47
        assert len(payload["records"]) == 47
        assert len(payload["families"]) == 8

    def test_extrapolate_huge_level_uses_families(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["extrapolate", "--ideal", path, "--n", "1000000",
                         "--parallel", "1", "--no-rank-check"])
        assert code == EXIT_OK
        payload = json.loads(out)
        assert "records" not in payload
        assert payload["record_count"] == 3 * (10 ** 6 - 1)
        assert payload["f_records"][0]["degree_rle"][-1][1] >= 10 ** 6 - 2

    def test_extrapolate_rank_check_downgrades(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["extrapolate", "--ideal", path, "--n", "5", "--parallel", "1"])
        assert code == EXIT_OK
        payload = json.loads(out)
        assert "rank_warnings" in payload
        assert all("rank" not in e for e in payload["records"])

    def test_verify_passes(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": [[5, 1], [2, 2]]})
        code, out = run(["verify", "--ideal", path, "--max-n", "4", "--parallel", "1"])
        assert code == EXIT_OK
        assert "all checks passed" in out
        assert "FAIL" not in out

    def test_verify_reports_characteristic_dependence(self, tmp_path):
        path = write_ideal(tmp_path, {
            "generators": [
                [5, 4, 4, 2, 2, 1], [5, 4, 4, 3, 1, 1], [5, 5, 3, 3, 1, 1],
                [5, 5, 3, 3, 2], [5, 5, 4, 2, 2], [6, 4, 3, 2, 2, 1],
                [6, 4, 3, 3, 2], [6, 4, 4, 3, 1], [6, 5, 3, 2, 1, 1],
                [6, 5, 4, 2, 1]]})
        code, out = run(["verify", "--ideal", path, "--max-n", "6", "--parallel", "1"])
        assert code == EXIT_OK
        assert "beta_{2,(6, 5, 4, 3, 2, 1)} = 0 at characteristic 0 and 1 at characteristic 2" in out

    def test_exit_codes(self, tmp_path):
        bad = write_ideal(tmp_path, {"generators": [[1, 2]]}, name="bad.json")
        code, _ = run(["betti", "--ideal", bad, "--n", "2", "--parallel", "1"])
        assert code == EXIT_INPUT

        missing = str(tmp_path / "missing.json")
        code, _ = run(["betti", "--ideal", missing, "--n", "2", "--parallel", "1"])
        assert code == EXIT_INPUT

    def test_size_cap_exit(self, tmp_path, monkeypatch):
        monkeypatch.setenv("SYMBETTI_MAX_VERTICES", "4")
        path = write_ideal(tmp_path, {"generators": [[1, 1, 1, 1, 1, 1]]})
        code, _ = run(["betti", "--ideal", path, "--n", "6", "--parallel", "1"])
        assert code == EXIT_CAP

    def test_zero_ideal_asymptotics_is_input_error(self, tmp_path):
        path = write_ideal(tmp_path, {"generators": []})
        code, _ = run(["asymptotics", "--ideal", path, "--parallel", "1"])
        assert code == EXIT_INPUT

    def test_verify_failure_exit_code(self, tmp_path, monkeypatch):
        # simulate a broken backend so the suite reports a failure
        import symbetti.cli as cli

        path = write_ideal(tmp_path, {"generators": [[2, 1]]})
        monkeypatch.setattr(cli, "euler_characteristic_check",
                            lambda cx, field=0: False)
        code, out = run(["verify", "--ideal", path, "--max-n", "3", "--parallel", "1"])
        assert code == EXIT_VERIFY
        assert "FAIL" in out
