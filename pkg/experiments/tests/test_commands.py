import csv
import io
import json
import logging
import math
from pathlib import Path

import pandas as pd
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from pandas.testing import assert_frame_equal

from experiments.figures import FIGURES
from experiments.runconfig import read_config_file

from .factories import RunPayloadFactory

GOLDEN_DIR = Path(__file__).resolve().parent / 'golden'


def run(command, **options):
    out = io.StringIO()
    call_command(command, stdout=out, **options)
    return out.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestList:
    def test_plain_listing(self):
        lines = run('list').splitlines()
        assert len(lines) == 3
        assert [line.split()[0] for line in lines] == ['diffusion', 'gasdyn', 'kdv']

    def test_json_listing(self):
        records = [json.loads(line) for line in run('list', json=True).splitlines()]
        assert [r['name'] for r in records] == ['diffusion', 'gasdyn', 'kdv']
        assert records[2]['reference'] == 'second_order'
        assert records[0]['psi'] == ['identity', 'log']


class TestSolve:
    def test_csv_to_stdout(self):
        table = rows(run('solve', **RunPayloadFactory()))
        assert list(table[0]) == ['t', 'ham_value', 'reference_value', 'abs_error']
        assert len(table) == 6
        for row in table:
            ham, ref = float(row['ham_value']), float(row['reference_value'])
            assert float(row['abs_error']) == abs(ham - ref)

    def test_collapsed_time_range(self):
        table = rows(run('solve', problem='diffusion', alpha=0.9, n_points=101, probe_x=0.1,
                         t_min=0.0, t_max=0.0))
        assert len(table) == 1
        assert float(table[0]['ham_value']) == pytest.approx(math.cos(0.1 * math.pi), abs=1e-7)

    def test_output_is_deterministic(self, tmp_path):
        first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
        run('solve', **RunPayloadFactory(output_path=str(first)))
        run('solve', **RunPayloadFactory(output_path=str(second)))
        assert first.read_bytes() == second.read_bytes()
        assert b'\r' not in first.read_bytes()

    def test_config_file_and_overrides(self, tmp_path):
        config = tmp_path / 'run.env'
        run('solve', write_config=str(config), **RunPayloadFactory())
        assert read_config_file(config)['problem'] == 'gasdyn'
        table = rows(run('solve', config=str(config), n_samples=2))
        assert len(table) == 2

    @pytest.mark.parametrize('overrides', [
        {'alpha': 1.5},
        {'probe_x': 5.0},
        {'t_min': -1.0},
        {'n_points': 3},
    ])
    def test_invalid_configuration_exits_with_one(self, overrides):
        with pytest.raises(CommandError) as excinfo:
            run('solve', **RunPayloadFactory(**overrides))
        assert excinfo.value.returncode == 1
        assert '\n' not in str(excinfo.value)

    def test_missing_config_file_exits_with_one(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run('solve', config=str(tmp_path / 'absent.env'))
        assert excinfo.value.returncode == 1

    def test_numerical_failure_exits_with_two(self):
        with pytest.raises(CommandError) as excinfo:
            run('solve', problem='diffusion', alpha=0.5, n_points=41, m_terms=1, ml_max_terms=1,
                t_max=0.5, n_samples=3)
        assert excinfo.value.returncode == 2

    def test_numerical_failure_reaches_the_console_once(self, caplog):
        caplog.set_level(logging.DEBUG)
        with pytest.raises(CommandError):
            run('solve', problem='diffusion', alpha=0.5, n_points=41, m_terms=1, ml_max_terms=1,
                probe_x=0.5, t_max=0.5, n_samples=3)
        assert any('did not converge' in r.getMessage() or 'stalled' in r.getMessage()
                   for r in caplog.records)
        assert not [r for r in caplog.records if r.levelno >= logging.WARNING]


class TestSweeps:
    def test_hbar_sweep(self):
        table = rows(run('hsweep', hbar_values=[-1.0, -0.6], **RunPayloadFactory()))
        assert 'ham_value[hbar=-0.6]' in table[0]
        assert len(table) == 6

    def test_single_hbar_matches_solve(self):
        payload = RunPayloadFactory()
        solved = rows(run('solve', **payload))
        swept = rows(run('hsweep', hbar_values=[-1.0], **payload))
        assert [r['ham_value'] for r in solved] == [r['ham_value[hbar=-1.0]'] for r in swept]

    def test_zero_hbar_rejected(self):
        with pytest.raises(CommandError) as excinfo:
            run('hsweep', hbar_values=[-1.0, 0.0], **RunPayloadFactory())
        assert excinfo.value.returncode == 1

    def test_alpha_table(self):
        table = rows(run('alpha_table', alpha_values=[0.999, 0.9, 0.5], problem='diffusion',
                         probe_x=0.1, n_samples=5, ml_max_terms=800))
        assert list(table[0]) == [
            't', 'reference_value[alpha=0.999]', 'reference_value[alpha=0.9]',
            'reference_value[alpha=0.5]',
        ]
        assert len(table) == 5

    def test_empty_alpha_table(self):
        assert run('alpha_table', problem='kdv') == 't\n'

    def test_alpha_out_of_range(self):
        with pytest.raises(CommandError) as excinfo:
            run('alpha_table', alpha_values=[1.5], problem='kdv')
        assert excinfo.value.returncode == 1


class TestDiagnose:
    def test_report(self):
        text = run('diagnose', **RunPayloadFactory(m_terms=2))
        assert 'u_0 = ' in text and 'u_2 = ' in text
        assert '|u_1| / |u_0|' in text
        assert 'max |residual|' in text


@pytest.mark.integration
class TestFigures:
    def test_selected_presets(self, tmp_path):
        out = run('figures', output_dir=str(tmp_path), only=['fig7', 'fig8'],
                  n_points=101, n_samples=5)
        assert 'fig7' in out and 'fig8' in out
        fig7 = rows((tmp_path / 'fig7.csv').read_text())
        assert 'ham_value[hbar=-2.0]' in fig7[0]
        fig8 = rows((tmp_path / 'fig8.csv').read_text())
        assert list(fig8[0]) == [
            't', 'reference_value[alpha=0.999]', 'reference_value[alpha=0.8]',
            'reference_value[alpha=0.6]',
        ]

    @pytest.mark.parametrize('name', sorted(FIGURES))
    def test_matches_golden_curves(self, tmp_path, name):
        # Golden files hold the closed-form curves at n_samples=5; on 401 nodes the
        # finite-difference error stays far below the tolerance.
        run('figures', output_dir=str(tmp_path), only=[name], n_points=401, n_samples=5)
        actual = pd.read_csv(tmp_path / f'{name}.csv')
        expected = pd.read_csv(GOLDEN_DIR / f'{name}.csv')
        assert list(actual.columns) == list(expected.columns)
        assert_frame_equal(
            actual, expected, check_dtype=False, check_exact=False, rtol=1e-7, atol=1e-8
        )
