from django.conf import settings
from rest_framework import serializers

from codemorph.apps.gateway.exceptions import ConfigError
from codemorph.apps.gateway.models import GenerationConfig, GenerationResult, Outcome


class GenerationConfigSerializer(serializers.Serializer):
    endpoint_url = serializers.URLField()
    model_name = serializers.CharField()
    temperature = serializers.FloatField(min_value=0)
    top_k = serializers.IntegerField(min_value=1)
    top_p = serializers.FloatField(max_value=1)
    seed = serializers.IntegerField()
    max_retries = serializers.IntegerField(min_value=0)
    timeout_s = serializers.FloatField()

    def validate_top_p(self, value):
        if value <= 0:
            raise serializers.ValidationError('top_p must be in (0, 1]')
        return value

    def validate_timeout_s(self, value):
        if value <= 0:
            raise serializers.ValidationError('timeout_s must be positive')
        return value

    def create(self, validated_data):
        return GenerationConfig(**validated_data)


def validate_config(data):
    """
    Validate a GenerationConfig (or a dict of its fields).

    :raise ConfigError: with the serializer's error map
    :return: GenerationConfig
    """
    if isinstance(data, GenerationConfig):
        data = data.as_dict()
    serializer = GenerationConfigSerializer(data=data)
    if not serializer.is_valid():
        raise ConfigError('invalid generation config', errors=serializer.errors)
    return serializer.save()


def generation_config(**overrides):
    """ settings defaults, overridden by non-None keyword arguments. """
    data = {
        'endpoint_url': settings.CODEMORPH_ENDPOINT,
        'model_name': settings.CODEMORPH_MODEL,
        **settings.CODEMORPH_GENERATION,
    }
    data.update({key: value for key, value in overrides.items() if value is not None})
    return validate_config(data)


class GenerationResultSerializer(serializers.Serializer):
    """ cached generations under ``workspace/generations`` """
    code_text = serializers.CharField(allow_blank=True, trim_whitespace=False)
    raw_response = serializers.CharField(allow_blank=True, trim_whitespace=False)
    attempts = serializers.IntegerField(min_value=1)
    elapsed_s = serializers.FloatField(min_value=0)
    generated_line_count = serializers.IntegerField(min_value=0)
    outcome = serializers.ChoiceField(choices=[o.value for o in Outcome])
    diagnoses = serializers.ListField(child=serializers.ChoiceField(
        choices=[o.value for o in Outcome]))
    seeds = serializers.ListField(child=serializers.IntegerField())
    raw_responses = serializers.ListField(
        child=serializers.CharField(allow_blank=True, trim_whitespace=False))

    def to_representation(self, instance):
        return {
            'code_text': instance.code_text,
            'raw_response': instance.raw_response,
            'attempts': instance.attempts,
            'elapsed_s': instance.elapsed_s,
            'generated_line_count': instance.generated_line_count,
            'outcome': instance.outcome.value,
            'diagnoses': [d.value for d in instance.diagnoses],
            'seeds': list(instance.seeds),
            'raw_responses': list(instance.raw_responses),
        }

    def create(self, validated_data):
        return GenerationResult(
            **{**validated_data,
               'outcome': Outcome(validated_data['outcome']),
               'diagnoses': tuple(Outcome(d) for d in validated_data['diagnoses']),
               'seeds': tuple(validated_data['seeds']),
               'raw_responses': tuple(validated_data['raw_responses'])})
