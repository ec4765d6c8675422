import os
from unittest import mock

from django.test import SimpleTestCase, override_settings

from sieves.forms import RunConfig, RunConfigForm


def make_form(required=(), **data):
    return RunConfigForm(data, required=required)


class RunConfigFormTest(SimpleTestCase):

    def test_defaults(self):
        form = make_form(n=1000)
        self.assertTrue(form.is_valid(), form.errors)
        config = form.to_config('primes')
        self.assertEqual(config.command, 'primes')
        self.assertEqual(config.n_max, 1000)
        self.assertEqual(config.checkpoints, (1000,))
        self.assertEqual(config.output_format, 'csv')
        self.assertIsNone(config.half_gap)

    def test_checkpoints(self):
        form = make_form(n=100, checkpoints='20, 100')
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.to_config('pairs').checkpoints, (20, 100))

    def test_bad_checkpoints(self):
        for raw in ('100,20', '20,20', 'a,b', '20,200'):
            form = make_form(n=100, checkpoints=raw)
            self.assertFalse(form.is_valid(), raw)
            self.assertIn('checkpoints', form.errors)

    def test_auto_checkpoints(self):
        form = make_form(n=10 ** 5, auto=True)
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.to_config('pairs').checkpoints, (1000, 10000, 100000))

    def test_gap(self):
        form = make_form(n=100, gap=6)
        self.assertTrue(form.is_valid(), form.errors)
        config = form.to_config('pairs')
        self.assertEqual(config.half_gap, 3)
        self.assertEqual(config.gap, 6)

        form = make_form(n=100, gap=3)
        self.assertFalse(form.is_valid())
        self.assertIn('even', form.errors_text())

    def test_bounds(self):
        self.assertFalse(make_form(n=1).is_valid())
        self.assertFalse(make_form(n=10, k=0).is_valid())
        self.assertFalse(make_form(n=10, threads=0).is_valid())
        self.assertFalse(make_form(n=10, format='xml').is_valid())

    def test_required(self):
        form = make_form(required=('n', 'k'), n=10)
        self.assertFalse(form.is_valid())
        self.assertIn('k', form.errors)

    @override_settings(SIEVE_THREADS=2)
    def test_thread_priority(self):
        with mock.patch.dict(os.environ, {'PDFSIEVE_THREADS': '6'}):
            self.assertEqual(self.threads(threads=3), 3)
            self.assertEqual(self.threads(), 6)
        with mock.patch.dict(os.environ, {'PDFSIEVE_THREADS': ''}):
            self.assertEqual(self.threads(), 2)
        with mock.patch.dict(os.environ, {'PDFSIEVE_THREADS': 'many'}):
            self.assertFalse(make_form(n=10).is_valid())

    def threads(self, **data):
        form = make_form(n=10, **data)
        self.assertTrue(form.is_valid(), form.errors)
        return form.to_config('primes').threads

    def test_config_dict(self):
        config = RunConfig('density', n_max=10, k=1, checkpoints=(10,))
        self.assertEqual(config.as_dict()['checkpoints'], [10])
        self.assertEqual(config.as_dict()['command'], 'density')
