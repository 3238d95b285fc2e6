import pytest
from qsufficiency import ResidualCheck, ResidualChecks


def test_residual_check_comparisons():
    assert ResidualCheck("small residual", 1e-12, 1e-8).passes
    assert not ResidualCheck("large residual", 1e-3, 1e-8).passes
    assert ResidualCheck("positive", 0.5, 1e-10, comparison="min").passes
    assert not ResidualCheck("nan", float("nan"), 1.0).passes
    assert not ResidualCheck("forced", 0, 1, passes=False).passes
    with pytest.raises(ValueError):
        ResidualCheck("bad", 0, 1, comparison="between")


def test_residual_checks_summary():
    checks = ResidualChecks(title="algebra checks")
    checks.add("star closed", 1e-15, 1e-8)
    checks.add("mult closed", 0.3, 1e-8, message="XZ is not a member")
    assert len(checks) == 2
    assert not checks.all_checks_pass()
    assert len(checks.filter("failing")) == 1
    assert len(checks.filter("passing")) == 1
    assert checks.max_residual() == 0.3
    assert checks.text_summary_message() == "FAILURE: 1 algebra checks out of 2 failed"
    text = checks.to_text()
    assert "XZ is not a member" in text
    assert "✔PASS" in text
    with pytest.raises(KeyError):
        checks["unknown"]


def test_residual_checks_extend_with_prefix():
    inner = ResidualChecks()
    inner.add("unital", 0, 1e-9)
    outer = ResidualChecks()
    outer.extend(inner, prefix="alpha")
    assert outer["alpha: unital"].passes
    assert outer.all_checks_pass()
    assert outer.text_summary_message().startswith("SUCCESS")
    assert outer.to_list() == [
        {"check": "alpha: unital", "value": 0.0, "tol": 1e-9, "pass": True}
    ]
