import math

import numpy as np
from django.test import SimpleTestCase

from oracle_app.algorithms import qft_schedule
from oracle_app.evolution import (
    circle_distance,
    global_phase_free_error,
    phases_of,
    phases_of_naive,
    resources,
    schedule_resources,
    verify,
)
from oracle_app.exceptions import ResourceLimitError, WidthError
from oracle_app.spectrum import (
    CouplingSet,
    PhaseVector,
    compile_phase_function,
    cps_couplings,
    grover_couplings,
)


def _random_couplings(n, seed):
    rng = np.random.default_rng(seed)
    theta = rng.uniform(-math.pi, math.pi, size=1 << n)
    theta[0] = 0.0
    return CouplingSet(n, float(rng.uniform(-math.pi, math.pi)), theta)


class PhasesTests(SimpleTestCase):
    def test_transform_matches_direct_sum(self):
        for n in range(1, 11):
            cs = _random_couplings(n, seed=n)
            np.testing.assert_allclose(
                phases_of(cs).phases, phases_of_naive(cs).phases, rtol=0, atol=1e-12
            )

    def test_naive_is_capped(self):
        with self.assertRaises(ResourceLimitError):
            phases_of_naive(CouplingSet.zero(13))

    def test_zero_couplings(self):
        np.testing.assert_array_equal(phases_of(CouplingSet.zero(3)).phases, np.zeros(8))


class VerifyTests(SimpleTestCase):
    def test_exact_pass(self):
        p = PhaseVector(3, np.linspace(-2, 2, 8))
        report = verify(compile_phase_function(p), p)
        self.assertTrue(report.exact_pass)
        self.assertLess(report.max_circle_error, 1e-12)
        self.assertEqual(report.notes, [])

    def test_equal_modulo_two_pi(self):
        cs = grover_couplings(2, 3)
        shifted = phases_of(cs).phases.copy()
        shifted[1] += 2 * math.pi
        report = verify(cs, PhaseVector(2, shifted))
        self.assertTrue(report.exact_pass)
        self.assertIn('modulo 2pi', report.notes[0])

    def test_failure_names_worst_input(self):
        cs = grover_couplings(2, 3)
        target = phases_of(cs).phases.copy()
        target[2] += 0.5
        report = verify(cs, PhaseVector(2, target))
        self.assertFalse(report.exact_pass)
        self.assertAlmostEqual(report.max_circle_error, 0.5, places=9)
        self.assertIn('x=2', report.notes[-1])

    def test_tolerance_argument(self):
        cs = grover_couplings(2, 3)
        target = phases_of(cs).phases + 1e-6
        self.assertFalse(verify(cs, PhaseVector(2, target)).exact_pass)
        self.assertTrue(verify(cs, PhaseVector(2, target), tol=1e-5).exact_pass)

    def test_width_mismatch(self):
        with self.assertRaises(WidthError):
            verify(CouplingSet.zero(2), PhaseVector(3, np.zeros(8)))

    def test_circle_distance(self):
        d = circle_distance([0.0, 0.1, math.pi], [2 * math.pi - 0.1, 0.1 + 4 * math.pi, -math.pi])
        np.testing.assert_allclose(d, [0.1, 0.0, 0.0], atol=1e-12)
        self.assertLessEqual(circle_distance(0.0, math.pi), math.pi)

    def test_global_phase_free_error(self):
        cs = cps_couplings(1, 2, 2)
        target = PhaseVector(2, phases_of(cs).phases + 1.3)
        self.assertLess(global_phase_free_error(cs, target), 1e-12)


class ResourceTests(SimpleTestCase):
    def test_full_structure(self):
        report = resources(grover_couplings(4, 9))
        self.assertEqual(report.nonzero_terms, 15)
        self.assertEqual(report.max_order, 4)
        self.assertEqual(report.per_order, {1: 4, 2: 6, 3: 4, 4: 1})
        self.assertEqual(report.evolutions, 1)

    def test_threshold(self):
        cs = CouplingSet.from_terms(3, 0.0, {1: 1e-3, 6: 0.5})
        self.assertEqual(resources(cs).per_order, {1: 1, 2: 1})
        self.assertEqual(resources(cs, threshold=1e-2).per_order, {2: 1})

    def test_empty(self):
        report = resources(CouplingSet.zero(3))
        self.assertEqual((report.nonzero_terms, report.max_order), (0, 0))

    def test_qft_schedule_structure(self):
        n = 4
        sets = [s for s in qft_schedule(n) if isinstance(s, CouplingSet)]
        report = schedule_resources(n, sets)
        self.assertEqual(report.per_order, {1: 4, 2: 6})
        self.assertEqual(report.max_order, 2)
        self.assertEqual(report.evolutions, n)
