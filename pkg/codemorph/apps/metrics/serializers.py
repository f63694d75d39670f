from rest_framework import serializers

from codemorph.apps.metrics.models import DetectorReport, Verdict


class DetectorReportSerializer(serializers.Serializer):
    variant_id = serializers.CharField()
    run_index = serializers.IntegerField(min_value=1)
    # zero is accepted here and rejected by detector_rate as ZeroDetectors
    detectors_total = serializers.IntegerField(min_value=0)
    detectors_flagged = serializers.IntegerField(min_value=0)

    def validate(self, data):
        if data['detectors_flagged'] > data['detectors_total']:
            raise serializers.ValidationError('detectors_flagged exceeds detectors_total')
        return data

    def create(self, validated_data):
        return DetectorReport(**validated_data)


class TraceCallSerializer(serializers.Serializer):
    seq = serializers.IntegerField()
    call = serializers.CharField()


class VerdictSerializer(serializers.Serializer):
    variant_id = serializers.CharField()
    verdict = serializers.CharField()

    def validate_verdict(self, value):
        try:
            return Verdict(value.strip().lower())
        except ValueError:
            raise serializers.ValidationError(
                f'expected one of {", ".join(v.value for v in Verdict)}')
