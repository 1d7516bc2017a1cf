"""收敛实验配置、结果汇总、报告渲染与命令行测试"""

import json
import math

import numpy as np
import pytest
import yaml

import run_experiments
from src.benchmark import (
    CellResult,
    ConvergenceCollector,
    ConvergenceReport,
    ConvergenceRow,
    ExperimentConfig,
    build_example,
    convergence_rates,
    indicator_open_unit,
    max_norm_difference,
    run_convergence_study,
)
from src.experiments import registry
from src.report import render_report
from src.stepper import run_scheme
from src.utils import save_report_json
from src.utils.error_messages import ErrorMessages
from src.utils.exceptions import ConfigError, ParameterError, require

CSV_HEADER = "example,scheme,k,N,error,rate"


def small_config(**overrides):
    values = dict(example="c", k_list=[2, 3], N_list=[8, 16], M=8)
    values.update(overrides)
    return ExperimentConfig.from_values(**values)


def grid_report(orders=(2, 3, 4, 5, 6), steps=(40, 80, 160, 320)):
    rows = []
    for k in orders:
        errors = [2.0 ** -k * (40.0 / N) ** k for N in steps]
        for N, error, rate in zip(steps, errors, convergence_rates(errors)):
            rows.append(ConvergenceRow("a", "corrected", 1.7, 0.3, k, N, error, rate))
    return ConvergenceReport(rows=rows)


# ============ 算例 ============

def test_example_a_at_origin():
    problem = build_example("a", 4, 2)
    assert problem.g0[1] == 1.0
    assert problem.is_homogeneous
    assert not np.any(problem.f_derivs0[0])


def test_example_b_forcing_and_derivatives():
    nodes = np.array([-0.5, 0.0, 0.5])
    problem = build_example("b", 4, 6, nodes=nodes)
    np.testing.assert_array_equal(problem.g0, 0.0)
    np.testing.assert_array_equal(problem.f_derivs0[0], [1.0, 1.0, 2.0])
    np.testing.assert_array_equal(problem.f_derivs0[1], [5.0, 5.0, 10.0])
    np.testing.assert_array_equal(problem.f_derivs0[4], [120.0, 120.0, 240.0])
    assert len(problem.f_derivs0) == 5
    np.testing.assert_allclose(problem.f(1.0), [32.0, 32.0, 64.0])


def test_example_c_second_derivative():
    problem = build_example("c", 4, 4, nodes=np.array([-0.5, 0.5]))
    np.testing.assert_array_equal(problem.f_derivs0[2], [-1.0, -2.0])
    np.testing.assert_array_equal(problem.f_derivs0[1], [0.0, 0.0])
    np.testing.assert_allclose(problem.f(0.0), [1.0, 2.0])


def test_example_nodes_default_to_chebyshev():
    assert build_example("b", 4, 3).f_derivs0[1].tolist() == [10.0, 5.0, 5.0]


def test_indicator_is_open_interval():
    np.testing.assert_array_equal(indicator_open_unit([-0.5, 0.0, 0.5, 1.0]), [0.0, 0.0, 1.0, 0.0])


def test_unknown_example_rejected():
    with pytest.raises(ParameterError):
        build_example("d", 8, 2)


# ============ 速率与汇总 ============

@pytest.mark.parametrize("k", range(1, 7))
def test_rate_recovers_synthetic_order(k):
    errors = [3.0 * N ** -k for N in (40, 80, 160, 320)]
    rates = convergence_rates(errors)
    assert math.isnan(rates[0])
    np.testing.assert_allclose(rates[1:], k, atol=1e-12)


def test_rate_undefined_for_non_positive_errors():
    rates = convergence_rates([1e-3, 0.0, math.nan])
    assert all(math.isnan(r) for r in rates)
    assert convergence_rates([]) == []


def test_max_norm_difference():
    assert max_norm_difference([1.0, -2.0], [0.5, 1.0]) == 3.0


def test_collector_marks_failed_cells():
    config = small_config(example="a", k_list=[3], N_list=[8, 16])
    collector = ConvergenceCollector(config)
    collector.add_result(CellResult(k=3, N=8, final=np.zeros(7)))
    collector.add_result(CellResult(k=3, N=16, success=False, error_message="boom"))
    collector.add_result(CellResult(k=3, N=32, final=np.full(7, 1e-3)))

    rows = collector.build_rows()
    assert [row.N for row in rows] == [8, 16]
    assert all(row.status == "failed" for row in rows)
    assert rows[0].message == "N=16: boom"
    assert rows[1].message == "boom"
    assert all(math.isnan(row.error) and math.isnan(row.rate) for row in rows)


def test_collector_against_exact_reference():
    config = small_config(example="mode", backend="sine", reference="exact", k_list=[1], N_list=[8, 16])
    collector = ConvergenceCollector(config, reference=np.ones(7))
    collector.add_result(CellResult(k=1, N=8, final=np.full(7, 1.2)))
    collector.add_result(CellResult(k=1, N=16, final=np.full(7, 1.05)))
    rows = collector.build_rows()
    assert rows[0].error == pytest.approx(0.2)
    assert rows[1].rate == pytest.approx(2.0)


# ============ 配置 ============

@pytest.mark.parametrize("values", [
    dict(N_list=[40, 100]),
    dict(k_list=[3], N_list=[2, 4]),
    dict(k_list=[7]),
    dict(k_list=[]),
    dict(backend="sine"),
    dict(reference="exact"),
    dict(gamma=1.2),
    dict(alpha=1.0),
    dict(M=3),
    dict(workers=0),
    dict(example="d"),
    dict(unknown=1),
])
def test_config_validation(values):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_values(**values)


def test_config_error_names_the_field():
    with pytest.raises(ConfigError, match="workers"):
        ExperimentConfig.from_values(workers=0)
    with pytest.raises(ConfigError, match="N_list"):
        ExperimentConfig.from_values(N_list=[40, 100])


def test_invalid_value_message_formats_field_name():
    message = ErrorMessages.get("CONFIG_INVALID_VALUE", lang="en", name="scheme", value="explicit")
    assert message == "Invalid value for configuration key 'scheme': explicit"
    with pytest.raises(ParameterError, match="scheme"):
        require(False, "CONFIG_INVALID_VALUE", name="scheme", value="explicit")
    require(True, "CONFIG_INVALID_VALUE", name="scheme", value="corrected")


def test_config_defaults_and_step_counts():
    config = ExperimentConfig.from_values(alpha=None, scheme=None)
    assert config.alpha == 1.7
    assert config.scheme == "corrected"
    assert config.step_counts == [40, 80, 160, 320, 640]
    exact = ExperimentConfig.from_values(example="mode", backend="sine", reference="exact")
    assert exact.step_counts == [40, 80, 160, 320]
    assert config.echo()["k_list"] == [2, 3, 4, 5, 6]


# ============ 实验运行 ============

def test_study_is_deterministic():
    first = run_convergence_study(small_config())
    second = run_convergence_study(small_config())
    threaded = run_convergence_study(small_config(workers=2))
    assert render_report(first, "csv") == render_report(second, "csv")
    assert render_report(first, "csv") == render_report(threaded, "csv")
    assert first.to_dict() == second.to_dict()
    assert len(first.rows) == 4
    assert not first.has_failures


def test_linear_algebra_failure_marks_cells_failed(monkeypatch):
    real_run_scheme = run_scheme

    def failing_run_scheme(problem, op, scheme, k, N):
        if k == 3:
            raise np.linalg.LinAlgError("singular matrix")
        return real_run_scheme(problem, op, scheme, k, N)

    monkeypatch.setattr("src.benchmark.runner.run_scheme", failing_run_scheme)
    report = run_convergence_study(small_config())
    assert [row.status for row in report.rows_for(2)] == ["ok", "ok"]
    failed = report.rows_for(3)
    assert all(row.status == "failed" for row in failed)
    assert "singular matrix" in failed[-1].message
    assert len(report.failed) == 2


def test_study_against_exact_reference():
    config = ExperimentConfig.from_values(example="mode", backend="sine", reference="exact", M=8,
                                          k_list=[1, 2], N_list=[40, 80, 160, 320])
    report = run_convergence_study(config)
    assert report.row(1, 320).rate == pytest.approx(1.0, abs=0.2)
    assert report.row(2, 320).rate == pytest.approx(2.0, abs=0.2)
    assert report.metadata["config"]["reference"] == "exact"


# ============ 报告 ============

def test_render_empty_report():
    empty = ConvergenceReport()
    assert render_report(empty, "csv") == CSV_HEADER + "\n"
    assert render_report(empty, "markdown") == "| k | Rate |\n|---------|---------|\n"


def test_render_one_row():
    report = ConvergenceReport(rows=[ConvergenceRow("a", "corrected", 1.7, 0.3, 2, 40, 2.1453e-06, math.nan)])
    lines = render_report(report, "csv").splitlines()
    assert lines == [CSV_HEADER, "a,corrected,2,40,2.1453e-06,nan"]

    markdown = render_report(report, "md")
    table_rows = [line for line in markdown.splitlines() if line.startswith("| ")]
    assert len(table_rows) == 2
    assert "| 2 | 2.1453e-06 | — |" in markdown


def test_render_full_grid():
    report = grid_report()
    lines = render_report(report, "csv").splitlines()
    assert len(lines) == 21
    assert lines[2].endswith(",2.0000e+00")

    markdown = render_report(report, "markdown")
    assert "### 算例 a · corrected · (α, γ) = (1.7, 0.3)" in markdown
    assert "| k | N=40 | N=80 | N=160 | N=320 | Rate |" in markdown
    assert "| 4 |" in markdown and "4.0000 |" in markdown


def test_render_failure_notes():
    row = ConvergenceRow("b", "standard", 1.3, 0.7, 6, 40, math.nan, math.nan, status="failed", message="blow-up")
    markdown = render_report(ConvergenceReport(rows=[row]), "markdown")
    assert "- k=6, N=40: blow-up" in markdown


def test_render_unknown_format():
    with pytest.raises(ParameterError):
        render_report(ConvergenceReport(), "html")


def test_report_json_round_trip(tmp_path):
    report = grid_report(orders=(2,))
    report.metadata["config"] = {"example": "a"}
    path = save_report_json(report, tmp_path / "out" / "report.json")
    data = json.loads(open(path, encoding="utf-8").read())
    assert data["summary"] == {"row_count": 4, "failed_count": 0}
    assert data["rows"][0]["rate"] is None
    assert "numpy" in data["environment"]

    restored = ConvergenceReport.from_dict(data)
    assert math.isnan(restored.rows[0].rate)
    assert restored.rows[3].error == report.rows[3].error


def test_combined_report_keeps_run_metadata():
    parts = [grid_report(orders=(2,)), grid_report(orders=(3,))]
    parts[0].metadata["config"] = {"alpha": 1.7}
    merged = ConvergenceReport.combine(parts, case="corrected_a")
    assert len(merged.rows) == 8
    assert merged.metadata["case"] == "corrected_a"
    assert merged.metadata["runs"][0] == {"config": {"alpha": 1.7}}


# ============ 研究用例 ============

def test_registered_cases():
    assert registry.count_cases() == 6
    assert registry.get_categories() == ["corrected", "standard", "oracle"]
    configs = registry.get_case("corrected_a").expand(M=8, N_list=None)
    assert [(c.alpha, c.gamma) for c in configs] == [(1.7, 0.3), (1.3, 0.7)]
    assert all(c.M == 8 and c.N_list == [40, 80, 160, 320] for c in configs)


def test_eigenmode_case_uses_exact_reference():
    configs = registry.get_case("eigenmode_exact").expand()
    assert len(configs) == 4
    assert all(c.backend == "sine" and c.reference == "exact" for c in configs)


def test_unknown_case_rejected():
    with pytest.raises(ParameterError):
        registry.get_case("table_9")


# ============ 命令行 ============

def test_cli_weights(capsys):
    assert run_experiments.main(["weights", "--order", "2", "--gamma", "0.5", "--count", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "j,b_j,q_j"
    assert len(lines) == 5


def test_cli_study_csv(capsys):
    code = run_experiments.main(["study", "--example", "a", "--orders", "2", "--nsteps", "8,16",
                                 "--mgrid", "8", "--format", "csv"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3


def test_cli_config_file_with_override(tmp_path, capsys):
    config_path = tmp_path / "study.yaml"
    config_path.write_text(yaml.safe_dump({
        "example": "c", "mgrid": 8, "orders": [2], "nsteps": [8, 16], "format": "csv",
    }), encoding="utf-8")
    code = run_experiments.main(["study", "--config", str(config_path), "--orders", "3"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()[1:]
    assert [line.split(",")[2] for line in lines] == ["3", "3"]


def test_cli_solve_dump(tmp_path):
    path = tmp_path / "final.csv"
    code = run_experiments.main(["solve", "--example", "a", "--order", "2", "--nsteps", "8",
                                 "--mgrid", "8", "--dump-solution", str(path)])
    assert code == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,G_T"
    assert len(lines) == 8


def test_cli_cases(capsys):
    assert run_experiments.main(["cases"]) == 0
    assert "corrected_a" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["study", "--nsteps", "40,100"],
    ["study", "--case", "table_9"],
    ["solve", "--order", "7", "--mgrid", "8"],
    ["solve", "--order", "0", "--mgrid", "8"],
    ["solve", "--nsteps", "0", "--mgrid", "8"],
    ["weights", "--order", "0"],
])
def test_cli_bad_parameters_exit_one(argv):
    assert run_experiments.main(argv) == 1


def test_cli_unparsable_argument_exits_one():
    with pytest.raises(SystemExit) as excinfo:
        run_experiments.main(["solve", "--order", "x"])
    assert excinfo.value.code == 1
