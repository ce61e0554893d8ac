# tests/test_07_cli.py
from motzkin import cli
from motzkin.verify_suites import SuiteReport
from motzkin.weight_numeric import QuadratureError


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- seq & transform ---

def test_seq_prints_recurrence_prefix(capsys):
    code, out, _ = run(capsys, "seq", "--b", "1", "--h", "1", "--k", "-1", "--terms", "8")
    assert code == 0
    assert out == "1,1,2,3,5,8,13,21\n"


def test_seq_accepts_fractions(capsys):
    code, out, _ = run(capsys, "seq", "--b", "1/2", "--h", "1", "--k", "1/4", "--terms", "3")
    assert code == 0
    assert out == "1,1/2,1/4\n"


def test_negative_fraction_flags(capsys):
    code, out, _ = run(capsys, "seq", "--b", "1", "--h", "1", "--k", "-1/2", "--terms", "3")
    assert code == 0
    assert out == "1,1,3/2\n"
    code, out, _ = run(capsys, "moments", "--h=-1/2", "--k", "-3/4", "--n", "2")
    assert code == 0
    assert out == "1,-1/2,-1/2\n"


def test_transform_pipeline(capsys):
    code, out, _ = run(capsys, "transform", "--input", "1,0,-1,0,1,0", "--pipe", "invert:1")
    assert code == 0
    assert out == "1,1,0,-1,-1,0\n"
    code, out, _ = run(capsys, "transform", "--input", "1,1,2,4,9,21", "--pipe", "binomial:1|eta|eta")
    assert out == "1,2,5,14,42,132\n"


def test_transform_rejects_bad_sequences(capsys):
    code, _, err = run(capsys, "transform", "--input", "2,1", "--pipe", "eta")
    assert code == 1
    assert "a0 must be 1" in err
    code, _, err = run(capsys, "transform", "--input", "1,x", "--pipe", "eta")
    assert code == 1
    code, _, err = run(capsys, "transform", "--input", "1,1", "--pipe", "revert")
    assert code == 1
    assert "unknown stage" in err


# --- moments & paths ---

def test_moments_all_routes_agree(capsys):
    code, out, _ = run(capsys, "moments", "--h", "1", "--k", "1", "--n", "6", "--method", "all")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    assert all(line.split()[-1] == "1,1,2,4,9,21,51" for line in lines[:6])
    assert [line.split()[0] for line in lines[:6]] == ["gf", "cfrac", "closed", "recur", "lagrange", "paths"]
    assert lines[6] == "AGREE"


def test_moments_single_method(capsys):
    code, out, _ = run(capsys, "moments", "--h", "1", "--k", "2", "--n", "3", "--method", "closed")
    assert code == 0
    assert out == "1,1,3,7\n"


def test_moments_reject_k_zero(capsys):
    code, _, err = run(capsys, "moments", "--h", "1", "--k", "0", "--n", "4")
    assert code == 1
    assert "k = 0" in err


def test_moments_paths_past_bound_is_an_error(capsys):
    code, _, err = run(capsys, "moments", "--h", "1", "--k", "1", "--n", "40", "--method", "paths")
    assert code == 1
    assert "analytic route" in err


def test_paths_listing(capsys):
    code, out, _ = run(capsys, "paths", "--n", "3", "--h", "1", "--k", "1", "--list")
    assert code == 0
    lines = out.splitlines()
    assert sorted(lines[:4]) == ["HHH h^3", "HUD h*k", "UDH h*k", "UHD h*k"]
    assert lines[4] == "total: 4"


def test_paths_total_only(capsys):
    code, out, _ = run(capsys, "paths", "--n", "3", "--h", "1", "--k", "2")
    assert code == 0
    assert out == "7\n"


# --- verify ---

def test_verify_catalan(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "catalan")
    assert code == 0
    assert "m=0..100: 101 pass" in out.splitlines()


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(suite, grid):
        report = SuiteReport(suite.value)
        report.check("demo", "case 0", False)
        return report

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, _ = run(capsys, "verify", "--suite", "group")
    assert code == 2
    assert "FAILED demo: case 0" in out


def test_verify_moments_on_default_grid(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "moments")
    assert code == 0
    assert out.splitlines()[-1] == "moments: 299 pass, 0 fail"


def test_verify_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "catalan")
    _, second, _ = run(capsys, "verify", "--suite", "catalan")
    assert first == second


# --- weight ---

def test_weight_csv(capsys):
    code, out, _ = run(capsys, "weight", "--h", "0", "--k", "1", "--samples", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,omega"
    assert len(lines) == 6
    assert lines[3] == "0,0.318309886184"


def test_weight_with_quadrature_rows(capsys):
    code, out, _ = run(capsys, "weight", "--h", "1", "--k", "1", "--samples", "3", "--quad", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[4] == "n,quad,exact,rel_error"
    assert [line.split(",")[2] for line in lines[5:]] == ["1", "1", "2", "4", "9"]


def test_weight_rejects_non_positive_k(capsys):
    code, _, err = run(capsys, "weight", "--h", "0", "--k", "0")
    assert code == 1
    assert "k > 0" in err


def test_weight_quadrature_failure_exit_code(capsys, monkeypatch):
    def broken(n, spec):
        raise QuadratureError("did not converge", 1.0, 0.5)

    monkeypatch.setattr(cli, "quad_moment", broken)
    code, _, err = run(capsys, "weight", "--h", "0", "--k", "1", "--samples", "3", "--quad", "2")
    assert code == 3
    assert "did not converge" in err


# --- usage errors ---

def test_usage_errors_exit_with_one(capsys):
    assert run(capsys, "moments", "--h", "1.5", "--k", "1")[0] == 1
    assert run(capsys, "moments", "--h", "1", "--k", "1", "--bogus")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys)[0] == 1
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert "invalid choice" in err
