"""Command-line interface: parsing diagnostics, reports, exit codes."""

from fractions import Fraction

import pytest

from copocert.census import run_census, write_records
from copocert.cli import main, parse_matrix_file
from copocert.errors import MatrixFormatError
from copocert.linalg import SymMatrix, eval_quadratic, horn_matrix

F = Fraction


def machine_block(out: str) -> dict:
    lines = out.splitlines()
    body = lines[lines.index("[machine]") + 1:lines.index("[human]")]
    parsed = {}
    for line in body:
        key, _, value = line.partition("=")
        parsed[key] = value
    return parsed


def records_section(out: str) -> list:
    lines = out.splitlines()
    return lines[lines.index("[records]") + 1:]


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


PAIR = SymMatrix.from_rows([[1, -1], [-1, 1]])


class TestParseMatrixFile:
    def test_roundtrip(self, write_matrix):
        path = write_matrix("2\n1 -1/2\n-1/2 3\n")
        A = parse_matrix_file(path)
        assert A.rows() == [[1, F(-1, 2)], [F(-1, 2), 3]]

    def test_comments_and_blank_lines(self, write_matrix):
        path = write_matrix("# header\n\n2\n# rows\n0 1\n\n1 0\n")
        assert parse_matrix_file(path).rows() == [[0, 1], [1, 0]]

    def test_signed_entries(self, write_matrix):
        path = write_matrix("2\n+1 -1/2\n-1/2 1\n")
        assert parse_matrix_file(path).get(0, 1) == F(-1, 2)

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatrixFormatError) as exc:
            parse_matrix_file(str(tmp_path / "absent.txt"))
        assert exc.value.line == 0 and exc.value.column == 0

    def test_empty_file(self, write_matrix):
        path = write_matrix("# only comments\n")
        with pytest.raises(MatrixFormatError, match="no data lines"):
            parse_matrix_file(path)

    def test_order_line_extra_tokens(self, write_matrix):
        path = write_matrix("2 2\n1 0\n0 1\n")
        with pytest.raises(MatrixFormatError) as exc:
            parse_matrix_file(path)
        assert (exc.value.line, exc.value.column) == (1, 3)

    @pytest.mark.parametrize("tok", ["x", "0", "-1", "2.0"])
    def test_order_must_be_positive_integer(self, write_matrix, tok):
        path = write_matrix(f"{tok}\n1\n")
        with pytest.raises(MatrixFormatError, match="positive integer"):
            parse_matrix_file(path)

    def test_too_few_rows(self, write_matrix):
        path = write_matrix("3\n1 0 0\n0 1 0\n")
        with pytest.raises(MatrixFormatError, match="expected 3 matrix rows"):
            parse_matrix_file(path)

    def test_too_many_rows(self, write_matrix):
        path = write_matrix("1\n1\n2\n")
        with pytest.raises(MatrixFormatError) as exc:
            parse_matrix_file(path)
        assert "unexpected content" in str(exc.value)
        assert exc.value.line == 3

    def test_short_row(self, write_matrix):
        path = write_matrix("2\n1 0\n0\n")
        with pytest.raises(MatrixFormatError, match="has 1 entries, expected 2"):
            parse_matrix_file(path)

    def test_negative_denominator_rejected(self, write_matrix):
        path = write_matrix("1\n1/-2\n")
        with pytest.raises(MatrixFormatError) as exc:
            parse_matrix_file(path)
        assert "not an integer or p/q rational" in str(exc.value)
        assert (exc.value.line, exc.value.column) == (2, 1)

    def test_zero_denominator(self, write_matrix):
        path = write_matrix("1\n1/0\n")
        with pytest.raises(MatrixFormatError, match="zero denominator"):
            parse_matrix_file(path)

    def test_asymmetric_points_at_lower_entry(self, write_matrix):
        path = write_matrix("2\n1 2\n3 1\n")
        with pytest.raises(MatrixFormatError) as exc:
            parse_matrix_file(path)
        assert "asymmetric" in str(exc.value)
        assert (exc.value.line, exc.value.column) == (3, 1)


class TestCheck:
    def test_copositive(self, capsys, write_matrix):
        path = write_matrix(SymMatrix.identity(2))
        code, out = run(capsys, ["check", path])
        mach = machine_block(out)
        assert code == 0
        assert mach["copositive"] == "yes"
        assert mach["simplex_minimum"] == "1/2"
        assert "violator" not in mach

    def test_not_copositive(self, capsys, write_matrix):
        A = SymMatrix.from_rows([[0, -1], [-1, 0]])
        path = write_matrix(A)
        code, out = run(capsys, ["check", path])
        mach = machine_block(out)
        assert code == 1
        assert mach["copositive"] == "no"
        violator = tuple(F(t) for t in mach["violator"].split(","))
        assert all(c >= 0 for c in violator) and any(violator)
        assert eval_quadratic(A, violator) == F(mach["simplex_minimum"]) < 0

    def test_parse_error_exit_two(self, capsys, write_matrix):
        path = write_matrix("2\n1 2\n3 1\n")
        code, out = run(capsys, ["check", path])
        mach = machine_block(out)
        assert code == 2
        assert mach["error"] == "ParseError"
        assert (mach["line"], mach["column"]) == ("3", "1")


class TestZeros:
    def test_pair_zero(self, capsys, write_matrix):
        code, out = run(capsys, ["zeros", write_matrix(PAIR)])
        mach = machine_block(out)
        assert code == 0
        assert mach["zero_count"] == "1"
        assert mach["zero_1"] == "1/2,1/2"
        assert mach["support_1"] == "1,2"

    def test_no_zeros(self, capsys, write_matrix):
        code, out = run(capsys, ["zeros", write_matrix(SymMatrix.identity(3))])
        mach = machine_block(out)
        assert code == 0 and mach["zero_count"] == "0"
        assert "no zeros" in out

    def test_not_copositive_exit_one(self, capsys, write_matrix):
        path = write_matrix(SymMatrix.from_rows([[1, -2], [-2, 1]]))
        code, out = run(capsys, ["zeros", path])
        mach = machine_block(out)
        assert code == 1
        assert mach["error"] == "NotCopositive"
        assert "violator" in mach


class TestExtremal:
    def test_extremal(self, capsys, write_matrix):
        code, out = run(capsys, ["extremal", write_matrix(PAIR)])
        mach = machine_block(out)
        assert code == 0
        assert mach["extremal"] == "yes" and mach["nullity"] == "1"

    def test_not_extremal(self, capsys, write_matrix):
        code, out = run(capsys,
                        ["extremal", write_matrix(SymMatrix.identity(2))])
        mach = machine_block(out)
        assert code == 1
        assert mach["extremal"] == "no"

    def test_horn(self, capsys, write_matrix):
        code, out = run(capsys, ["extremal", write_matrix(horn_matrix())])
        mach = machine_block(out)
        assert code == 0
        assert mach["zero_count"] == "5" and mach["nullity"] == "1"


class TestGraph:
    def test_pair_matrix(self, capsys, write_matrix):
        code, out = run(capsys, ["graph", write_matrix(PAIR)])
        mach = machine_block(out)
        assert code == 0
        assert mach["vertices"] == "3" and mach["edges"] == "2"
        assert mach["components"] == "1" and mach["bipartite"] == "1"
        assert mach["dimension"] == "1"
        assert mach["pattern"] == "1,-1;-1,1"

    def test_dot_output(self, capsys, write_matrix, tmp_path):
        dot_path = str(tmp_path / "graph.dot")
        code, out = run(capsys,
                        ["graph", write_matrix(PAIR), "--dot", dot_path])
        assert code == 0
        assert machine_block(out)["dot"] == dot_path
        text = open(dot_path).read()
        assert text.startswith("graph ") and text.endswith("}\n")
        assert '"X1_2" -- "X2_2"' in text or '"X2_2" -- "X1_2"' in text

    def test_identity_dimension(self, capsys, write_matrix):
        code, out = run(capsys, ["graph", write_matrix(SymMatrix.identity(2))])
        mach = machine_block(out)
        assert code == 0
        assert mach["edges"] == "0" and mach["dimension"] == "3"
        assert "pattern" not in mach

    def test_non_unit_diagonal_exit_one(self, capsys, write_matrix):
        path = write_matrix(SymMatrix.from_rows([[2, -1], [-1, 1]]))
        code, out = run(capsys, ["graph", path])
        assert code == 1
        assert machine_block(out)["error"] == "NotUnitDiagonal"

    def test_wide_support_exit_one(self, capsys, write_matrix):
        A = SymMatrix.from_rows([
            [1, F(-1, 2), F(-1, 2)],
            [F(-1, 2), 1, F(-1, 2)],
            [F(-1, 2), F(-1, 2), 1]])
        code, out = run(capsys, ["graph", write_matrix(A)])
        assert code == 1
        assert machine_block(out)["error"] == "SupportCardinalityNotTwo"


class TestNormalize:
    def test_explicit(self, capsys, write_matrix):
        A = SymMatrix.from_rows([[1, -2, 1], [-2, 4, -2], [1, -2, 1]])
        code, out = run(capsys, ["normalize", write_matrix(A)])
        mach = machine_block(out)
        assert code == 0
        assert mach["pattern"] == "1,-1,1;-1,1,-1;1,-1,1"
        assert mach["explicit"] == "yes"
        assert mach["scaling"] == "1,2,1"

    def test_implicit(self, capsys, write_matrix):
        A = SymMatrix.from_rows([[2, 0], [0, 3]])
        code, out = run(capsys, ["normalize", write_matrix(A)])
        mach = machine_block(out)
        assert code == 0
        assert mach["pattern"] == "1,0;0,1"
        assert mach["explicit"] == "no"
        assert "scaling" not in mach

    def test_condition_fails(self, capsys, write_matrix):
        path = write_matrix(SymMatrix.from_rows([[1, 2], [2, 1]]))
        code, out = run(capsys, ["normalize", path])
        assert code == 1
        assert machine_block(out)["error"] == "ScalingConditionFails"


class TestCensusCommand:
    def test_stdout_records(self, capsys):
        code, out = run(capsys, ["census", "-n", "2"])
        mach = machine_block(out)
        assert code == 0
        assert mach["classes"] == "3" and mach["copositive"] == "3"
        assert mach["extremal"] == "1" and mach["pair_supports_ok"] == "yes"
        assert records_section(out) == [
            "2 -1 1 1 1,2 1", "2 0 1 0 - 1", "2 1 1 0 - 1"]

    def test_output_file(self, capsys, tmp_path):
        out_path = str(tmp_path / "census3.txt")
        code, out = run(capsys, ["census", "-n", "3", "-o", out_path])
        mach = machine_block(out)
        assert code == 0
        assert mach["output"] == out_path
        assert "[records]" not in out
        expected = str(tmp_path / "expected.txt")
        write_records(run_census(3), expected)
        assert open(out_path).read() == open(expected).read()
        assert not (tmp_path / "census3.txt.checkpoint").exists()

    def test_budget_guard_exit_three(self, capsys, monkeypatch):
        monkeypatch.setenv("COPOCERT_MAX_CANDIDATES", "10")
        code, out = run(capsys, ["census", "-n", "3"])
        assert code == 3
        assert machine_block(out)["error"] == "ResourceGuard"

    def test_resume_requires_output(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["census", "-n", "2", "--resume"])
        assert exc.value.code == 2


class TestVerify:
    def test_equivalent_scaled(self, capsys, write_matrix):
        A = SymMatrix.from_rows([[1, -2, 1], [-2, 4, -2], [1, -2, 1]])
        code, out = run(capsys, ["verify", write_matrix(A)])
        mach = machine_block(out)
        assert code == 0
        assert mach["pair_supports"] == "yes"
        assert mach["pattern"] == "1,-1,1;-1,1,-1;1,-1,1"
        assert mach["scaling"] == "1,2,1"
        assert mach["pattern_nullity"] == "1"
        assert mach["scaled_extremal_pattern"] == "yes"
        assert mach["equivalent"] == "yes"

    def test_both_predicates_false(self, capsys, write_matrix):
        path = write_matrix(SymMatrix.from_rows([[1, 0], [0, 0]]))
        code, out = run(capsys, ["verify", path])
        mach = machine_block(out)
        assert code == 0
        assert mach["pair_supports"] == "no"
        assert mach["scaled_extremal_pattern"] == "no"
        assert mach["equivalent"] == "yes"
        assert "pattern" not in mach

    def test_not_extremal_exit_one(self, capsys, write_matrix):
        code, out = run(capsys, ["verify", write_matrix(SymMatrix.identity(3))])
        mach = machine_block(out)
        assert code == 1
        assert mach["error"] == "NotExtremalInput"

    def test_horn(self, capsys, write_matrix):
        code, out = run(capsys, ["verify", write_matrix(horn_matrix())])
        mach = machine_block(out)
        assert code == 0
        assert mach["supports"] == "1,2;1,5;2,3;3,4;4,5"
        assert mach["equivalent"] == "yes"


class TestDeterminism:
    def test_repeat_runs_byte_identical(self, capsys, write_matrix):
        path = write_matrix(horn_matrix())
        outputs = []
        for _ in range(2):
            main(["verify", path])
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
