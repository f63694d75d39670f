import json
import re
from pathlib import Path

from rest_framework import serializers

from codemorph.apps.extractor.exceptions import UnsupportedLanguage
from codemorph.apps.extractor.models import Language
from codemorph.apps.strategies.exceptions import UnknownStrategy
from codemorph.apps.strategies.catalog import parse_strategy_id
from codemorph.apps.variants.exceptions import ManifestError
from codemorph.apps.variants.models import (
    Checkpoint, CompileStatus, ManifestFile, MergeStatus, ProjectManifest, VariantRecord)


class ManifestFileSerializer(serializers.Serializer):
    path = serializers.CharField()
    language = serializers.CharField(required=False, allow_blank=True)

    def validate(self, data):
        try:
            if data.get('language'):
                language = Language.from_label(data['language'])
            else:
                language = Language.from_path(data['path'])
        except UnsupportedLanguage as e:
            raise serializers.ValidationError({'language': str(e)})
        return {'path': Path(data['path']).as_posix(), 'language': language.value}


class ManifestSerializer(serializers.Serializer):
    root = serializers.CharField()
    files = ManifestFileSerializer(many=True, allow_empty=False)
    build_command = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    build_ok_pattern = serializers.CharField(allow_null=True, allow_blank=True, default=None)
    variant_output_glob = serializers.CharField()
    strategies = serializers.ListField(child=serializers.CharField(), default=list)
    exclude = serializers.ListField(child=serializers.CharField(), default=list)
    selection_override = serializers.DictField(child=serializers.IntegerField(min_value=0),
                                               default=dict)

    def validate_build_ok_pattern(self, value):
        if not value:
            return None
        try:
            re.compile(value)
        except re.error as e:
            raise serializers.ValidationError(f'invalid regex: {e}')
        return value

    def validate_strategies(self, value):
        try:
            return [parse_strategy_id(token) for token in value]
        except UnknownStrategy as e:
            raise serializers.ValidationError(str(e))

    def validate(self, data):
        paths = [f['path'] for f in data['files']]
        duplicates = sorted({p for p in paths if paths.count(p) > 1})
        if duplicates:
            raise serializers.ValidationError({'files': f'listed twice: {", ".join(duplicates)}'})
        unknown = sorted(set(data['selection_override']) - set(paths))
        if unknown:
            raise serializers.ValidationError(
                {'selection_override': f'not in files: {", ".join(unknown)}'})
        return data


def load_manifest(path):
    """
    Read and validate a manifest file; ``root`` is relative to the manifest.

    :raise ManifestError: unreadable JSON or a failed validation
    :return: ProjectManifest
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ManifestError(f'cannot read manifest {path}: {e}', path=str(path))
    serializer = ManifestSerializer(data=data)
    if not serializer.is_valid():
        raise ManifestError(f'invalid manifest {path}', path=str(path), errors=serializer.errors)
    data = serializer.validated_data
    root = (path.parent / data['root']).resolve()
    if not root.is_dir():
        raise ManifestError(f'manifest root {root} is not a directory', path=str(path))
    for entry in data['files']:
        if not (root / entry['path']).is_file():
            raise ManifestError(f'{entry["path"]} not found under {root}', path=str(path))
    return ProjectManifest(
        root=root,
        files=tuple(ManifestFile(**entry) for entry in data['files']),
        build_command=tuple(data['build_command']),
        build_ok_pattern=data['build_ok_pattern'],
        variant_output_glob=data['variant_output_glob'],
        strategies=tuple(data['strategies']),
        exclude=tuple(data['exclude']),
        selection_override=dict(data['selection_override']),
    )


class VariantRecordSerializer(serializers.Serializer):
    variant_id = serializers.CharField()
    strategy = serializers.CharField()
    file = serializers.CharField()
    prefix_t = serializers.IntegerField(min_value=1)
    function = serializers.CharField()
    generation = serializers.DictField()
    merge_status = serializers.ChoiceField(choices=[s.value for s in MergeStatus])
    compile_status = serializers.ChoiceField(choices=[s.value for s in CompileStatus])
    artifact_path = serializers.CharField(allow_null=True, default=None)
    edit_lines = serializers.IntegerField(min_value=0)
    man_hours = serializers.FloatField(min_value=0)
    generation_seconds = serializers.FloatField(min_value=0, default=0.0)
    checkpoint_at = serializers.CharField(allow_null=True, default=None)
    resumed_at = serializers.CharField(allow_null=True, default=None)
    created_at = serializers.CharField()
    modified_at = serializers.CharField()

    def validate(self, data):
        compiled = data['compile_status'] != CompileStatus.FAILED_AWAITING_HUMAN
        if compiled != bool(data['artifact_path']):
            raise serializers.ValidationError(
                'artifact_path must be present exactly when the variant compiled')
        return data

    def create(self, validated_data):
        return VariantRecord(**validated_data)


class CheckpointSerializer(serializers.Serializer):
    file = serializers.CharField()
    prefix_t = serializers.IntegerField(min_value=1)
    strategy = serializers.CharField()
    build_stdout_path = serializers.CharField()
    build_stderr_path = serializers.CharField()
    merged_path = serializers.CharField()
    function = serializers.CharField()
    region_names = serializers.ListField(child=serializers.CharField())
    generation = serializers.DictField()
    merge_status = serializers.ChoiceField(choices=[s.value for s in MergeStatus])
    generation_seconds = serializers.FloatField(min_value=0, default=0.0)
    pending_strategies = serializers.ListField(child=serializers.CharField(), default=list)
    created_at = serializers.CharField()

    def create(self, validated_data):
        return Checkpoint(**validated_data)
