import itertools

import numpy as np
from django.test import SimpleTestCase

from oracle_app.algorithms import (
    Hadamard,
    classical_order,
    continued_fraction_denominators,
    default_grover_iterations,
    deutsch_jozsa,
    execute_schedule,
    factors_from_order,
    gf2_nullspace,
    grover_closed_form,
    grover_search,
    qft_check,
    qft_schedule,
    shor_order_finding,
    simon_orthogonality_mass,
    simon_run,
)
from oracle_app.boolfn import TruthTable, make_balanced, make_constant, make_grover_marker, make_simon_function
from oracle_app.exceptions import ArithmeticDomainError, PromiseError, ResourceLimitError, WidthError
from oracle_app.simulator import StateVector, apply_qft, basis_state, norm
from oracle_app.spectrum import CouplingSet


def _random_state(n, seed):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector(n, v / np.linalg.norm(v))


class DeutschJozsaTests(SimpleTestCase):
    def test_constants(self):
        for n in range(1, 7):
            for bit in (0, 1):
                result = deutsch_jozsa(make_constant(n, bit))
                self.assertEqual(result.verdict, 'Constant')
                self.assertAlmostEqual(result.prob_zero, 1.0, delta=1e-9)
                self.assertFalse(result.reduced)
                self.assertEqual(result.resources.nonzero_terms, 0)

    def test_every_balanced_three_bit_table(self):
        for ones in itertools.combinations(range(8), 4):
            values = np.zeros(8, dtype=np.int64)
            values[list(ones)] = 1
            tt = TruthTable(3, 1, values)
            for reduce in (True, False):
                result = deutsch_jozsa(tt, reduce=reduce)
                self.assertEqual(result.verdict, 'Balanced')
                self.assertLess(result.prob_zero, 1e-9)
                self.assertEqual(result.reduced, reduce)
            self.assertLessEqual(deutsch_jozsa(tt).resources.max_order, 2)

    def test_single_bit_balanced(self):
        result = deutsch_jozsa(TruthTable(1, 1, np.array([1, 0])))
        self.assertEqual(result.verdict, 'Balanced')
        self.assertFalse(result.reduced)

    def test_larger_balanced(self):
        result = deutsch_jozsa(make_balanced(8, seed=5))
        self.assertEqual(result.verdict, 'Balanced')
        self.assertLessEqual(result.resources.max_order, 7)

    def test_promise(self):
        with self.assertRaises(PromiseError):
            deutsch_jozsa(make_grover_marker(3, 1))


class GroverTests(SimpleTestCase):
    def test_matches_closed_form(self):
        for n in range(2, 11):
            t = (5 * n) % (1 << n)
            run = grover_search(n, t)
            self.assertEqual(run.iterations, default_grover_iterations(n))
            self.assertAlmostEqual(run.success_prob, run.closed_form_prob, delta=1e-9)
            self.assertAlmostEqual(run.norm, 1.0, delta=1e-9)

    def test_spot_values(self):
        self.assertAlmostEqual(grover_search(2, 3, iterations=1).success_prob, 1.0, delta=1e-12)
        run = grover_search(3, 6)
        self.assertEqual(run.iterations, 2)
        self.assertAlmostEqual(run.success_prob, 0.9453, delta=5e-5)

    def test_explicit_iterations(self):
        for k in range(0, 6):
            run = grover_search(4, 11, iterations=k)
            self.assertAlmostEqual(run.success_prob, grover_closed_form(4, k), delta=1e-9)
        self.assertAlmostEqual(grover_search(5, 0, iterations=0).success_prob, 1 / 32, delta=1e-12)

    def test_iteration_sweep(self):
        for n in range(2, 11):
            t = (3 * n + 1) % (1 << n)
            for k in range(3 * default_grover_iterations(n) + 1):
                run = grover_search(n, t, iterations=k)
                self.assertAlmostEqual(
                    run.success_prob, grover_closed_form(n, k), delta=1e-9, msg=f"n={n} k={k}"
                )
                self.assertAlmostEqual(run.norm, 1.0, delta=1e-9)

    def test_bad_arguments(self):
        with self.assertRaises(WidthError):
            grover_search(3, 8)
        with self.assertRaises(WidthError):
            grover_search(3, 1, iterations=-1)
        with self.assertRaises(ResourceLimitError):
            grover_search(21, 0)


class SimonTests(SimpleTestCase):
    def test_gf2_nullspace(self):
        self.assertEqual(gf2_nullspace([0b011, 0b110], 3), [0b111])
        self.assertEqual(gf2_nullspace([], 2), [1, 2])
        self.assertEqual(gf2_nullspace([1], 2), [2])
        self.assertEqual(gf2_nullspace([0b01, 0b10], 2), [])

    def test_nullspace_is_orthogonal(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            n = int(rng.integers(2, 9))
            rows = [int(r) for r in rng.integers(0, 1 << n, size=int(rng.integers(1, n)))]
            for s in gf2_nullspace(rows, n):
                for r in rows:
                    self.assertEqual(bin(r & s).count('1') % 2, 0)

    def test_no_mass_on_odd_outcomes(self):
        rng = np.random.default_rng(11)
        for n in range(2, 9):
            s = int(rng.integers(1, 1 << n))
            tt = make_simon_function(n, n, s, seed=n)
            self.assertLess(simon_orthogonality_mass(tt, s), 1e-12)

    def test_recovers_hidden_mask(self):
        for n in (3, 4, 5):
            hits = 0
            for trial in range(20):
                s = 1 + (7 * trial + n) % ((1 << n) - 1)
                tt = make_simon_function(n, 2 * n, s, seed=trial)
                run = simon_run(tt, s_true=s, seed=trial)
                self.assertEqual(run.orthogonality_violations, 0)
                self.assertTrue(all(y != 0 for y in run.samples))
                self.assertLessEqual(run.rounds, 50 * (n - 1))
                hits += run.recovered_s == s
            self.assertGreaterEqual(hits, 18, f"n={n}")

    def test_recovers_mask_with_n_output_bits(self):
        for n in range(2, 9):
            rng = np.random.default_rng(100 + n)
            hits = 0
            for trial in range(100):
                s = int(rng.integers(1, 1 << n))
                tt = make_simon_function(n, n, s, seed=trial)
                hits += simon_run(tt, s_true=s, seed=trial).recovered_s == s
            self.assertGreaterEqual(hits, 95, f"n={n}")

    def test_seeded_runs_repeat(self):
        tt = make_simon_function(4, 6, 0b1010, seed=1)
        self.assertEqual(simon_run(tt, seed=4), simon_run(tt, seed=4))

    def test_budget_stops_sampling(self):
        tt = make_simon_function(5, 10, 0b10011, seed=0)
        run = simon_run(tt, max_samples=1, seed=0)
        self.assertEqual(run.rounds, 1)
        self.assertIsNone(run.recovered_s)


class ShorTests(SimpleTestCase):
    def test_classical_order(self):
        self.assertEqual(classical_order(7, 15), 4)
        self.assertEqual(classical_order(2, 21), 6)
        self.assertEqual(classical_order(2, 15), 4)
        self.assertEqual(classical_order(1, 15), 1)
        with self.assertRaises(ArithmeticDomainError):
            classical_order(3, 15)

    def test_continued_fractions(self):
        self.assertEqual(continued_fraction_denominators(192, 256, 15), [1, 4])
        self.assertEqual(continued_fraction_denominators(0, 256, 15), [1])
        self.assertEqual(continued_fraction_denominators(85, 256, 15), [1, 3])
        self.assertEqual(continued_fraction_denominators(128, 256, 15), [1, 2])
        with self.assertRaises(ArithmeticDomainError):
            continued_fraction_denominators(256, 256, 15)

    def test_factors_from_order(self):
        self.assertEqual(factors_from_order(7, 15, 4), (3, 5))
        self.assertIsNone(factors_from_order(7, 15, 3))
        self.assertIsNone(factors_from_order(7, 15, None))
        # a^(r/2) = -1 mod N gives no factor
        self.assertIsNone(factors_from_order(14, 15, 2))

    def test_pipeline_finds_order(self):
        run = shor_order_finding(7, 15, shots=10000, seed=5)
        self.assertEqual(run.n, 8)
        self.assertEqual(run.classical_order, 4)
        self.assertEqual(run.order, 4)
        self.assertEqual(tuple(run.factors), (3, 5))
        self.assertEqual(sum(run.measurements.values()), 10000)
        for candidate in run.order_candidates:
            if candidate.verified:
                self.assertEqual(candidate.r, 4)
        self.assertTrue(0.0 < run.empirical_success_rate <= 1.0)
        self.assertGreater(run.gap_count, 0)

    def test_modexp_source(self):
        run = shor_order_finding(2, 21, shots=2000, seed=1, phase_source='modexp')
        self.assertEqual(run.n, 9)
        self.assertEqual(run.phase_source, 'modexp')
        self.assertEqual(run.classical_order, 6)
        if run.order is not None:
            self.assertEqual(run.order % 6, 0)

    def test_seeded_runs_repeat(self):
        a = shor_order_finding(7, 15, shots=300, seed=2)
        b = shor_order_finding(7, 15, shots=300, seed=2)
        self.assertEqual(a.measurements, b.measurements)

    def test_domain(self):
        with self.assertRaises(ArithmeticDomainError):
            shor_order_finding(5, 15)
        with self.assertRaises(ArithmeticDomainError):
            shor_order_finding(7, 15, phase_source='exact')
        with self.assertRaises(ResourceLimitError):
            shor_order_finding(2, 25)


class QFTScheduleTests(SimpleTestCase):
    def test_schedule_shape(self):
        for n in range(1, 7):
            steps = qft_schedule(n)
            self.assertEqual(sum(isinstance(s, Hadamard) for s in steps), n)
            self.assertEqual(sum(isinstance(s, CouplingSet) for s in steps), n - 1)
            self.assertEqual(steps[0], Hadamard(1))
            self.assertEqual(steps[-1], Hadamard(n))

    def test_schedule_matches_dense_transform(self):
        for n in range(1, 9):
            report = qft_check(n)
            self.assertTrue(report.matches, f"n={n}: {report.max_error}")
            self.assertLess(report.max_error, 1e-9)
            self.assertEqual(report.hadamards, n)
            self.assertEqual(report.coupling_sets, n - 1)
            self.assertEqual(report.evolutions, n)
            self.assertLessEqual(report.resources.max_order, 2)

    def test_random_states_above_exhaustive_size(self):
        self.assertTrue(qft_check(9, seed=3).matches)

    def test_raw_schedule_is_input_reversed(self):
        n = 5
        sv = _random_state(n, seed=6)
        raw = execute_schedule(sv, qft_schedule(n), bit_reversal=False)
        np.testing.assert_allclose(raw.amplitudes, apply_qft(sv, bit_reversal=False).amplitudes, atol=1e-9)
        self.assertAlmostEqual(norm(raw), 1.0, delta=1e-9)

    def test_literal_coefficient_note(self):
        self.assertTrue(any('literal CPS' in note for note in qft_check(3).notes))
        self.assertEqual(qft_check(1).notes, [])

    def test_literal_stage_note(self):
        notes = qft_check(3).notes
        self.assertEqual(len(notes), 2)
        self.assertTrue(any(note.startswith("literal per-stage coupling sets miss") for note in notes))

    def test_schedule_width_limit(self):
        with self.assertRaises(ResourceLimitError):
            qft_schedule(13)

    def test_unknown_step(self):
        with self.assertRaises(TypeError):
            execute_schedule(basis_state(2, 0), ['H'])
