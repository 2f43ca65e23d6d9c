import math

from rest_framework import serializers

from fracham.conf import ham_setting
from fracham.exceptions import FracHamError
from fracseries.grid import MIN_GRID_POINTS
from ham.config import StepForm
from problems.definitions import ProblemName, get_problem
from special.psi import PsiKind

from .runconfig import STDOUT, RunConfig, default_t_max

BUILTIN_PSI = (
    (PsiKind.IDENTITY.value, PsiKind.IDENTITY.label),
    (PsiKind.LOGARITHM.value, PsiKind.LOGARITHM.label),
)

DEFAULT_TERMINAL = {
    PsiKind.IDENTITY.value: 0.0,
    PsiKind.LOGARITHM.value: 1.0,
}

FLOAT_FIELDS = ('alpha', 'a', 'hbar', 'x_min', 'x_max', 'probe_x', 't_min', 't_max')


class RunConfigSerializer(serializers.Serializer):
    """
    Validates raw CLI and config-file values into a RunConfig.

    Fields left out fall back to the problem's domain and probe, the psi's
    natural terminal and the solver defaults in HAM_SETTINGS.
    """

    problem = serializers.ChoiceField(choices=ProblemName.choices)
    alpha = serializers.FloatField(required=False)
    psi = serializers.ChoiceField(choices=BUILTIN_PSI, default=PsiKind.IDENTITY.value)
    a = serializers.FloatField(required=False)
    hbar = serializers.FloatField(required=False)
    m_terms = serializers.IntegerField(min_value=0, required=False)
    x_min = serializers.FloatField(required=False)
    x_max = serializers.FloatField(required=False)
    n_points = serializers.IntegerField(min_value=MIN_GRID_POINTS, required=False)
    probe_x = serializers.FloatField(required=False)
    t_min = serializers.FloatField(required=False)
    t_max = serializers.FloatField(required=False)
    n_samples = serializers.IntegerField(min_value=1, required=False)
    output_path = serializers.CharField(default=STDOUT)
    step_form = serializers.ChoiceField(choices=StepForm.choices, default=StepForm.APPLICATION)
    ml_max_terms = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate_alpha(self, value):
        if not 0 < value < 1:
            raise serializers.ValidationError('alpha must lie strictly inside (0, 1)')
        return value

    def validate_hbar(self, value):
        if value == 0:
            raise serializers.ValidationError('hbar must be non-zero')
        return value

    def validate(self, attrs):
        for name in FLOAT_FIELDS:
            if name in attrs and not math.isfinite(attrs[name]):
                raise serializers.ValidationError({name: 'must be a finite number'})

        problem = get_problem(attrs['problem'])
        psi = attrs.get('psi', PsiKind.IDENTITY.value)
        attrs['psi'] = psi
        attrs.setdefault('alpha', float(ham_setting('ALPHA_NEAR_ONE', 0.999)))
        attrs.setdefault('hbar', float(ham_setting('DEFAULT_HBAR', -1.0)))
        attrs.setdefault('m_terms', int(ham_setting('DEFAULT_TERMS', 3)))
        attrs.setdefault('a', DEFAULT_TERMINAL[psi])
        attrs.setdefault('x_min', problem.x_range[0])
        attrs.setdefault('x_max', problem.x_range[1])
        attrs.setdefault('n_points', int(ham_setting('DEFAULT_N_POINTS', 401)))
        attrs.setdefault('probe_x', problem.probe_x)
        attrs.setdefault('t_min', attrs['a'])
        attrs.setdefault('t_max', default_t_max(psi, attrs['t_min']))
        attrs.setdefault('n_samples', int(ham_setting('T_SAMPLES', 31)))
        attrs.setdefault('ml_max_terms', None)

        if psi == PsiKind.LOGARITHM and attrs['a'] <= 0:
            raise serializers.ValidationError({'a': 'psi=log needs a > 0'})
        if attrs['x_max'] <= attrs['x_min']:
            raise serializers.ValidationError({'x_max': 'must exceed x_min'})
        if not attrs['x_min'] <= attrs['probe_x'] <= attrs['x_max']:
            raise serializers.ValidationError(
                {'probe_x': f"must lie in [{attrs['x_min']}, {attrs['x_max']}]"}
            )
        if attrs['t_min'] < attrs['a']:
            raise serializers.ValidationError({'t_min': 'must not precede a'})
        if attrs['t_max'] < attrs['t_min']:
            raise serializers.ValidationError({'t_max': 'must not precede t_min'})

        run = RunConfig(**attrs)
        try:
            run.to_ham_config()
        except FracHamError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs

    def create(self, validated_data):
        return RunConfig(**validated_data)
