import numpy as np
import pytest

from experiments.runconfig import RunConfig, read_config_file, write_config_file
from experiments.serializers import RunConfigSerializer
from fracham.exceptions import ConfigurationError
from ham.config import StepForm

from .factories import RunPayloadFactory


def build(**overrides):
    serializer = RunConfigSerializer(data=RunPayloadFactory(**overrides))
    assert serializer.is_valid(), serializer.errors
    return serializer.save()


def test_round_trip(tmp_path):
    run = build(alpha=0.7123456789012345, hbar=-0.3, ml_max_terms=500,
                step_form=StepForm.GENERAL, output_path=str(tmp_path / 'out.csv'))
    path = write_config_file(run, tmp_path / 'run.env')
    serializer = RunConfigSerializer(data=read_config_file(path))
    assert serializer.is_valid(), serializer.errors
    assert serializer.save() == run


def test_file_is_flat_key_value(tmp_path):
    path = write_config_file(build(), tmp_path / 'run.env')
    lines = path.read_text().splitlines()
    assert 'problem=gasdyn' in lines
    assert 'alpha=0.8' in lines
    # Unset optionals are left out.
    assert not any(line.startswith('ml_max_terms=') for line in lines)


def test_unknown_key(tmp_path):
    path = tmp_path / 'run.env'
    path.write_text('problem=kdv\nbeta=2\n')
    with pytest.raises(ConfigurationError):
        read_config_file(path)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError):
        read_config_file(tmp_path / 'absent.env')


def test_t_samples():
    run = build(t_min=0.0, t_max=0.5, n_samples=6)
    assert run.t_samples() == pytest.approx(np.linspace(0.0, 0.5, 6))
    collapsed = build(t_min=0.0, t_max=0.0)
    assert list(collapsed.t_samples()) == [0.0]


def test_to_ham_config():
    cfg = build(m_terms=4).to_ham_config()
    assert cfg.m_terms == 4
    assert cfg.grid.n_points == 81
    assert cfg.psi.label == 'identity'
    assert isinstance(build(), RunConfig)
