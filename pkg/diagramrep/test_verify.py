"""Tests for the oracles and the suite registry."""

from unittest.mock import patch

import pytest

from . import utils, verify
from .config import Settings
from .diagrams import Family, Partition
from .errors import ShapeMismatchError, SizeGuardError
from .formats import parse_partition as parse
from .semiring import BOOLEAN, INTEGER, TROPICAL, integer_mod
from .verify import IntertwineQuery, Rep, VerificationReport


class TestReport:
    def test_check_counts_cases_and_failures(self):
        report = VerificationReport("demo")
        assert report.check(True, "fine")
        assert not report.check(False, "broken", "a")
        assert report.cases == 2
        assert report.failure_count == 1
        assert report.failures[0].case == 2
        assert report.status == "fail"

    def test_failures_are_capped(self):
        report = VerificationReport("demo")
        for _ in range(verify.MAX_RECORDED_FAILURES + 5):
            report.check(False, "broken")
        assert report.failure_count == verify.MAX_RECORDED_FAILURES + 5
        assert len(report.failures) == verify.MAX_RECORDED_FAILURES

    def test_absorb(self):
        outer, inner = VerificationReport("outer"), VerificationReport("inner")
        outer.check(True, "fine")
        inner.check(False, "broken")
        inner.notes.append("note")
        outer.absorb(inner)
        assert outer.cases == 2
        assert outer.failures[0].case == 2
        assert outer.failures[0].message == "inner: broken"
        assert outer.notes == ["inner: note"]

    def test_inapplicable_status_and_dict(self):
        report = VerificationReport("demo", seed=3, inapplicable="needs characteristic 0")
        assert report.status == "inapplicable"
        assert not report.passed
        data = report.to_dict()
        assert data["status"] == "inapplicable"
        assert data["seed"] == 3


class TestIntertwining:
    def test_figure_example(self):
        a, b = parse(verify.FIGURE_A), parse(verify.FIGURE_B)
        q = IntertwineQuery(a, b, 0b1111, utils.mask_of([1, 4, 5]))
        assert verify.intertwining_sets(q) == [utils.mask_of([3, 4, 5]), utils.full_mask(6)]
        assert verify.z_zero(a, b, q.X, q.Y) == utils.mask_of([3, 4, 5])

    def test_no_sets_when_not_joined(self):
        a, b = parse(verify.FIGURE_A), parse(verify.FIGURE_B)
        assert verify.intertwining_sets(IntertwineQuery(a, b, utils.mask_of([1]), 0)) == []

    def test_query_validation(self):
        with pytest.raises(ShapeMismatchError):
            IntertwineQuery(Partition.identity(2), Partition.identity(3), 0, 0)
        with pytest.raises(ShapeMismatchError):
            IntertwineQuery(Partition.identity(2), Partition.identity(2), 0b100, 0)

    def test_guard(self):
        q = IntertwineQuery(Partition.identity(3), Partition.identity(3), 0, 0)
        with pytest.raises(SizeGuardError):
            verify.intertwining_sets(q, guard=2)

    def test_count_formula_on_small_pairs(self):
        pairs = verify._all_pairs(1) + [(parse(verify.FIGURE_A), parse(verify.FIGURE_B))]
        report = verify.check_count_formula(pairs)
        assert report.passed, report.failures

    def test_descriptions_of_ones_agree(self):
        assert verify.check_lemma_ones(1, 2).passed


class TestHomomorphism:
    @pytest.mark.parametrize("semiring", [BOOLEAN, TROPICAL], ids=lambda s: s.name)
    def test_phi_over_idempotent_semirings(self, semiring):
        report = verify.check_homomorphism(Rep.PHI, Family.PARTITION, range(3), semiring, random_cases=20, random_sizes=range(4))
        assert report.passed, report.failures
        assert not report.notes

    def test_phi_over_integers_fails_with_a_note(self):
        report = verify.check_homomorphism(Rep.PHI, Family.PARTITION, range(2), INTEGER)
        assert report.status == "fail"
        assert "not idempotent" in report.notes[0]

    def test_rho_refuses_boolean(self):
        report = verify.check_homomorphism(Rep.RHO, Family.PARTITION, range(2), BOOLEAN, max_twist=1)
        assert report.status == "inapplicable"

    def test_rho_over_integers(self):
        report = verify.check_homomorphism(Rep.RHO, Family.PARTITION, range(2), INTEGER, max_twist=2)
        assert report.passed, report.failures

    def test_rho_d(self):
        report = verify.check_homomorphism(Rep.RHO_D, Family.PARTITION, range(2), integer_mod(4), d=1, max_twist=2)
        assert report.passed, report.failures

    def test_reduced_and_mu(self):
        for kind in (Rep.ODD, Rep.EVEN):
            assert verify.check_homomorphism(kind, Family.BRAUER, range(3), BOOLEAN).passed
        assert verify.check_homomorphism(Rep.MU, Family.TEMPERLEY_LIEB, range(4), BOOLEAN).passed


class TestFaithful:
    def test_phi_is_injective(self):
        assert verify.check_faithful(Rep.PHI, Family.PARTITION, 2, 2).passed

    def test_odd_map_is_injective_on_odd_sizes(self):
        assert verify.check_faithful(Rep.ODD, Family.BRAUER, 3, 1).passed

    @pytest.mark.parametrize("kind", [Rep.ODD, Rep.EVEN])
    def test_kernels_match_the_prediction(self, kind):
        report = verify.check_faithful(kind, Family.BRAUER, 4, 4, kernel=True)
        assert report.passed, report.failures
        assert report.notes

    def test_even_map_is_not_injective_on_even_sizes(self):
        assert not verify.check_faithful(Rep.EVEN, Family.BRAUER, 4, 4).passed


class TestOrbits:
    def test_partition_monoid_is_transitive(self):
        assert verify.orbits(Family.PARTITION, 2) == [[0, 1, 2, 3]]

    def test_brauer_monoid_splits_by_parity(self):
        assert verify.orbits(Family.BRAUER, 2) == [[0, 3], [1, 2]]
        assert verify.check_orbits(Family.BRAUER, 3).passed

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            verify.orbits(Family.PARTITION, 5)


class TestTriples:
    def test_composition_table(self):
        table = verify.composition_table(Family.PARTITION, 1)
        assert table.product[(1, 1, 1)].shape == (2, 2)
        assert table.triple_count(1, 1, 1, 1) == 8
        assert verify.composition_table(Family.PARTITION, 1) is table

    def test_twisting_identity(self):
        report = verify.check_twisting_identity(max_exhaustive=2, random_cases=50, random_max_size=4, seed=1)
        assert report.passed, report.failures
        assert report.cases > 50

    def test_associativity(self):
        report = verify.check_associativity(max_exhaustive=2, random_cases=50, random_max_size=4, seed=1)
        assert report.passed, report.failures

    def test_brauer_triples_respect_parity(self):
        report = verify.check_associativity(max_exhaustive=2, random_cases=20, seed=2, family=Family.BRAUER)
        assert report.passed, report.failures


@pytest.mark.parametrize(
    "check",
    [
        verify.check_figure1,
        verify.check_eq_p2,
        verify.check_order_correspondence,
        lambda: verify.check_laws(max_size=1, regular_max=2),
        lambda: verify.check_enumeration(max_total=6, materialize_up_to=5),
        lambda: verify.check_generators(max_total=6, max_n=4),
        lambda: verify.check_linear(random_cases=10),
        lambda: verify.check_decomposition(random_seeds=3, max_m=2),
    ],
    ids=["figure1", "eq-p2", "order", "laws", "enumeration", "generators", "linear", "decomposition"],
)
def test_fixture_checks_pass(check):
    report = check()
    assert report.passed, report.failures


def test_generators_record_the_convention():
    report = verify.check_generators(max_total=4, max_n=4)
    assert any("I_{2^(n-i-1)}" in note for note in report.notes)


class TestRegistry:
    def test_every_suite_is_registered(self):
        assert set(verify.SUITES) >= {"figure1", "twisting", "associativity", "partition-rep", "twisted-rep", "decomposition"}

    def test_unknown_suite(self):
        with pytest.raises(KeyError, match="Unknown suite"):
            verify.run_suite("nope", Settings())
        with pytest.raises(KeyError):
            verify.run_suites(["figure1", "nope"], Settings())

    def test_runs_in_registry_order(self):
        reports = verify.run_suites(["eq-p2", "figure1"], Settings(seed=5))
        assert [r.suite for r in reports] == ["figure1", "eq-p2"]
        assert all(r.passed and r.seed == 5 for r in reports)

    @pytest.mark.parametrize(
        "suite, semiring",
        [("brauer", "int"), ("partition-rep", "nat"), ("temperley-lieb", "rational"), ("twisted-rep", "boolean")],
    )
    def test_suites_outside_their_hypothesis_are_inapplicable(self, suite, semiring):
        report = verify.run_suite(suite, Settings(), semiring)
        assert report.status == "inapplicable"
        assert report.cases == 0

    def test_jobs_use_a_process_pool(self):
        expected = [VerificationReport("figure1"), VerificationReport("eq-p2")]
        with patch("diagramrep.verify.ProcessPoolExecutor") as pool_cls:
            pool = pool_cls.return_value.__enter__.return_value
            pool.map.return_value = iter(expected)
            reports = verify.run_suites(["figure1", "eq-p2"], Settings(), jobs=2)
        pool_cls.assert_called_once_with(max_workers=2)
        assert reports == expected
