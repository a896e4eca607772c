"""
End-to-end runs over the bundled problem files: the library calls and the
command line must agree.
"""

import io

import pytest

from pvring import build_chain, certify_extension, check_consistency, counterexample_two_derivations, find_constants
from pvring.cli.main import EXIT_CHECK_FAILED, EXIT_OK, main
from pvring.cli.problem import load_problem, parse_problem
from pvring.fixtures import fixture_path
from pvring.groebner import eliminate, groebner, ideals_equal
from pvring.prolong import CERTIFIED, NOT_ATTEMPTED


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_trivial_delta_pipeline():
    """Test chain, extension certificates, consistency and constants on trivial_delta.pv"""
    problem = load_problem(str(fixture_path("trivial_delta.pv")))
    report = build_chain(problem.system, problem.seeds, depth=2, config=problem.config)
    assert report.passed

    for level in range(2):
        assert certify_extension(report.ideal(level), report.ideal(level + 1))
    cert = check_consistency(report.ideal(2), problem.config)
    assert not cert.trivial
    assert cert.hypothesis_ok

    constants = find_constants(report.ideal(1), problem.system, degree_bound=1, config=problem.config)
    assert len(constants.solutions) == 2
    assert not constants.new_constants

    assert run("chain", fixture_path("trivial_delta.pv"), "--depth", 2) == (EXIT_OK, report.to_text())
    assert run("constants", fixture_path("trivial_delta.pv"), "--level", 1, "--degree-bound", 1) == (
        EXIT_OK,
        constants.to_text(),
    )


def test_mixed_systems():
    """Test the integrable and the perturbed mixed system"""
    mixed = load_problem(str(fixture_path("mixed.pv")))
    perturbed = load_problem(str(fixture_path("mixed_perturbed.pv")))
    assert mixed.dfield.check_commutation().passed
    assert mixed.system.check_integrability().passed
    assert not perturbed.system.check_integrability().passed

    report = build_chain(mixed.system, mixed.seeds, depth=1, config=mixed.config)
    assert report.passed
    assert all(level.ideal.is_zero() for level in report.levels)


@pytest.mark.parametrize(
    "name, status",
    [("trivial_delta.pv", CERTIFIED), ("shift_t.pv", NOT_ATTEMPTED), ("mixed.pv", NOT_ATTEMPTED)],
)
def test_depth_three_chains(name, status):
    """Test that every level of the depth-3 chain of a bundled system passes"""
    problem = load_problem(fixture_path(name))
    report = build_chain(problem.system, problem.seeds, depth=3, config=problem.config)
    assert report.failure is None
    assert [lvl.level for lvl in report.levels] == [0, 1, 2, 3]
    for lvl in report.levels:
        assert lvl.passed
        if lvl.level == 0:
            assert lvl.elimination_ok is None
            assert lvl.partial_ok is None
        else:
            assert lvl.elimination_ok
            assert lvl.partial_ok
        assert lvl.saturation_ok
        assert lvl.sigma_delta_closed_ok
        assert lvl.consistency_ok
        assert lvl.maximality_status == status
    assert report.passed


def test_constants_at_depth_three():
    """Test that the depth-3 quotient of delta(y) = 0 has no constants outside K"""
    problem = load_problem(fixture_path("trivial_delta.pv"))
    report = build_chain(problem.system, problem.seeds, depth=3, config=problem.config)
    constants = find_constants(report.ideal(3), problem.system, degree_bound=3, config=problem.config)
    assert len(constants.solutions) == 4
    assert constants.outside_base == ()
    assert not constants.new_constants
    assert run("constants", fixture_path("trivial_delta.pv"), "--level", 3, "--degree-bound", 3) == (
        EXIT_OK,
        constants.to_text(),
    )


def test_inconsistent_seed_from_text(tmp_path):
    """Test that sigma(y) = t y with y = 1 is rejected end to end"""
    text = fixture_path("shift_t.pv").read_text(encoding="utf-8") + "\n[seed 0]\nX[1,1] - 1\n"
    problem = parse_problem(text)
    report = build_chain(problem.system, problem.seeds, depth=1, config=problem.config)
    assert not report.passed

    path = tmp_path / "shift_seeded.pv"
    path.write_text(text, encoding="utf-8")
    code, output = run("chain", path, "--depth", 1)
    assert code == EXIT_CHECK_FAILED
    assert "failure: level 0: the seed relations generate the unit ideal\n" in output
    assert output == report.to_text()


def test_counterexample_matches_cli():
    """Test that the command prints the library certificate"""
    cert = counterexample_two_derivations()
    assert cert.trivial
    assert cert.witness.replay()
    assert run("counterexample") == (EXIT_OK, cert.to_text())


def test_kernel_ideals_match_cli():
    """Test the ideal commands against direct calls"""
    problem = load_problem(str(fixture_path("kernel.pv")))
    for name in ("I", "J", "T"):
        basis = groebner(problem.ideal(name).presentation)
        assert run("groebner", fixture_path("kernel.pv"), "--ideal", name) == (EXIT_OK, basis.to_text() + "\n")

    lex = problem.ideal("L").presentation
    yz = eliminate(lex, ["y", "z"])
    assert ideals_equal(yz, eliminate(yz, ["y", "z"]))
    code, output = run("eliminate", fixture_path("kernel.pv"), "--ideal", "L", "--keep", "y,z")
    assert code == EXIT_OK
    assert output == yz.to_text() + "\n"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
