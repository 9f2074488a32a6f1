# -*- coding: utf-8 -*-

from .context import seplas

import itertools
import math
import unittest
from fractions import Fraction

import mpmath
from scipy.stats import chisquare

from seplas.las import (KEYS, alt_profile, alt_profile_bruteforce, moment_table,
                        profile_matrix, verify_structure)
from seplas.perm import (Permutation, SEPARABLE_AVOIDED, contains_pattern,
                         enumerate_separable, is_separable)
from seplas.sampler import RandomStream, mc_stats, sample_separable
from seplas.schroder import (ASYMPTOTIC_KINDS, CONSTANTS, asymptotic_ratio,
                             leading_constant_estimate, refined_residual, schroder_numbers)
from seplas.series import build_catalog, exact_moments, verify_identities


N_LIST = [250, 500, 1000, 2000]


class EnumerationTestSuite(unittest.TestCase):
    """Exhaustive checks against the pattern-avoidance definition."""

    def test_pattern_filter_counts(self):
        patterns = [Permutation(q) for q in SEPARABLE_AVOIDED]
        for n in range(1, 9):
            avoiding = set()
            for values in itertools.permutations(range(1, n + 1)):
                p = Permutation(values)
                if not any(contains_pattern(p, q) for q in patterns):
                    avoiding.add(p)
            self.assertEqual(len(avoiding), schroder_numbers(n)[-1])
            self.assertEqual(set(enumerate_separable(n)), avoiding)

    def test_profiles_on_all_of_s7(self):
        for values in itertools.permutations(range(1, 8)):
            p = Permutation(values)
            self.assertEqual(alt_profile(p), alt_profile_bruteforce(p), str(p))

    def test_structure_to_eight(self):
        for n in range(3, 9):
            failed = [row['identity'] for row in verify_structure(n)
                      if row['status'] != 'pass']
            self.assertEqual(failed, [], 'n={}'.format(n))


class GeneratingFunctionTestSuite(unittest.TestCase):
    """The order 2048 catalog and the limits it implies."""

    @classmethod
    def setUpClass(cls):
        cls.catalog = build_catalog(2048)

    def test_catalog_matches_enumeration(self):
        s = [0] + schroder_numbers(8)
        for n in range(1, 9):
            table = moment_table(n)
            self.assertEqual(self.catalog['G_pm'][n], s[n] * table.c['pm'])
            self.assertEqual(self.catalog['G_mm'][n], s[n] * table.c['mm'])
            self.assertEqual(self.catalog['H_pm'][n], s[n] * table.C['pm'])
            self.assertEqual(self.catalog['H_mm'][n], s[n] * table.C['mm'])

    def test_integral_coefficients(self):
        for name in ('s', 'G_pm', 'G_mm', 'H_pm', 'H_mm'):
            self.assertEqual(self.catalog[name].den, 1, name)

    def test_mean_differences(self):
        a = seplas.schroder.coeff_sequence('a', 500)
        for n in range(2, 501):
            self.assertEqual(self.catalog['G_pm'][n], a[n - 1] - a[n - 2], n)

    def test_mean_limits(self):
        with mpmath.workprec(256):
            slope = CONSTANTS.mean_slope.to_mpf()
            shift_pm = CONSTANTS.mean_shift_pm.to_mpf()
            shift_mm = CONSTANTS.mean_shift_mm.to_mpf()
            for n, tolerance in ((500, 0.005), (2000, 0.002)):
                moments = exact_moments(n, self.catalog)
                mean_pm = mpmath.mpf(moments.mean_pm.numerator) / moments.mean_pm.denominator
                c_mm = mpmath.mpf(moments.c_mm.numerator) / moments.c_mm.denominator
                self.assertLess(abs(mean_pm - slope * n - shift_pm), tolerance, n)
                self.assertLess(abs(c_mm - slope * n - shift_mm), tolerance, n)

    def test_conditional_translation(self):
        s = self.catalog['s']
        with mpmath.workprec(256):
            target = CONSTANTS.translation.to_mpf()
            for n, tolerance in ((500, 0.001), (2000, 0.0002)):
                moments = exact_moments(n, self.catalog)
                self.assertEqual(moments.translation, s[n - 1] / s[n])
                gap = mpmath.mpf(moments.translation.numerator) / moments.translation.denominator
                self.assertLess(abs(gap - target), tolerance, n)

    def test_variance_slopes(self):
        deviations = []
        with mpmath.workprec(256):
            target = CONSTANTS.variance_slope.to_mpf()
            for n in N_LIST:
                var_pm = exact_moments(n, self.catalog).var_pm
                ratio = mpmath.mpf(var_pm.numerator) / var_pm.denominator / n
                deviations.append(abs(ratio - target))
        self.assertEqual(deviations, sorted(deviations, reverse=True))
        self.assertLess(deviations[-1], 0.01)

    def test_identities_to_order_64(self):
        rows = verify_identities(64)
        self.assertEqual([row['identity'] for row in rows if row['status'] == 'fail'], [])
        printed = [row for row in rows if row['status'] in ('agree', 'differ')]
        self.assertEqual([row['first_difference'] for row in printed], [2, 2])


class AsymptoticsTestSuite(unittest.TestCase):
    """Exact sequences against their asymptotic expansions."""

    def test_lead_ratios(self):
        for kind in ASYMPTOTIC_KINDS:
            if kind.endswith('_lead'):
                self.assertLess(abs(asymptotic_ratio(kind, 2000, 256) - 1), 0.002, kind)

    def test_refined_residuals_shrink(self):
        for family in ('s', 'a', 'b', 'alpha'):
            residuals = [abs(refined_residual(family, n, 256)) for n in N_LIST]
            self.assertEqual(residuals, sorted(residuals, reverse=True), family)
            self.assertLess(residuals[-1], 0.01, family)

    def test_leading_constant(self):
        with mpmath.workprec(256):
            estimate = leading_constant_estimate(2000, 256)
            self.assertLess(abs(estimate - mpmath.mpf(2) ** (-mpmath.mpf(3) / 4)), 0.001)
            self.assertGreater(abs(estimate - mpmath.mpf(1) / 2), 0.09)


class SamplingTestSuite(unittest.TestCase):
    """Uniformity and Monte Carlo agreement of the sampler."""

    def chi_square(self, n, per_cell, seed):
        cells = {p: 0 for p in enumerate_separable(n)}
        stream = RandomStream(seed)
        draws = per_cell * len(cells)
        for _ in range(draws):
            cells[sample_separable(n, stream)] += 1
        return chisquare(list(cells.values())), len(cells)

    def test_chi_square(self):
        for n, seed, bound in ((5, 1, 135), (6, 2, 520)):
            result, _ = self.chi_square(n, 1000, seed)
            self.assertLess(result.statistic, bound, n)

    def test_total_variation(self):
        stream = RandomStream(4)
        draws = 1000000
        for n in range(2, 7):
            counts = {p: 0 for p in enumerate_separable(n)}
            for _ in range(draws):
                counts[sample_separable(n, stream)] += 1
            uniform = Fraction(1, len(counts))
            distance = sum(abs(Fraction(c, draws) - uniform) for c in counts.values()) / 2
            self.assertLess(distance, Fraction(1, 100), n)

    def test_reproducible(self):
        first = [sample_separable(300, RandomStream(77)) for _ in range(3)]
        again = [sample_separable(300, RandomStream(77)) for _ in range(3)]
        self.assertEqual(first, again)

        stream = RandomStream(8)
        for _ in range(10000):
            self.assertTrue(is_separable(sample_separable(30, stream)))

    def test_parity_on_samples(self):
        stream = RandomStream(15)
        for _ in range(100):
            batch = [sample_separable(100, stream).values for _ in range(1000)]
            profiles = profile_matrix(batch)
            self.assertTrue((profiles[:, [1, 4]] % 2 == 0).all())
            self.assertTrue((profiles[:, [2, 3]] % 2 == 1).all())

    def test_separable_mean_and_variance(self):
        estimate = mc_stats(1000, 10000, 20240611, workers=2)
        exact = exact_moments(1000, build_catalog(2048))
        self.assertLess(abs(estimate.mean['pm'] - float(exact.mean_pm)),
                        3 * estimate.stderr['pm'])
        self.assertLess(abs(estimate.variance['pm'] / 1000 - 0.2218), 0.0222)
        # the unconditional flavor means coincide exactly
        self.assertLess(abs(estimate.mean['pp'] - estimate.mean['pm']),
                        3 * (estimate.stderr['pp'] + estimate.stderr['pm']))
        self.assertLess(abs(estimate.mean['overall'] / 1000 - (2 - math.sqrt(2))), 0.005)
        for key in ('pp', 'mm'):
            self.assertLess(abs(estimate.variance[key] / 1000 - 0.2218), 0.0222, key)
        self.assertEqual(estimate.to_dict(), mc_stats(1000, 10000, 20240611, workers=2).to_dict())

    def test_uniform_baseline(self):
        estimate = mc_stats(10000, 10000, 1, ensemble='uniform')
        self.assertLess(abs(estimate.mean['overall'] / 10000 - 2 / 3), 0.001)
        self.assertLess(abs(estimate.variance['overall'] / 10000 - 8 / 45), 0.02)
        self.assertEqual(set(estimate.mean), set(KEYS))


if __name__ == '__main__':
    unittest.main()
