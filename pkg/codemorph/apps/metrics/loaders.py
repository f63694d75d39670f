import json
import logging
from collections import defaultdict
from pathlib import Path

from codemorph.apps.base.serializers import read_jsonl
from codemorph.apps.metrics.exceptions import MetricsInputError
from codemorph.apps.metrics.models import CallTrace
from codemorph.apps.metrics.serializers import (
    DetectorReportSerializer, TraceCallSerializer, VerdictSerializer)

logger = logging.getLogger(__name__)

TRACE_SUFFIXES = ('.jsonl', '.txt')


def _read_text(path):
    try:
        return path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise MetricsInputError(f'cannot read {path}: {e}', path=str(path))


def _first_char(path):
    for line in _read_text(path).splitlines():
        if line.strip():
            return line.strip()[0]
    return ''


def load_trace(path, program_id=None):
    """
    Read a call trace: JSON Lines of ``{seq, call}`` (ordered by seq) or plain
    text with one call per line.
    """
    path = Path(path)
    if not path.exists():
        raise MetricsInputError(f'{path} does not exist', path=str(path))
    program_id = program_id or path.stem
    if path.suffix == '.jsonl' or _first_char(path) == '{':
        rows = read_jsonl(path, TraceCallSerializer)
        calls = [row['call'] for row in sorted(rows, key=lambda row: row['seq'])]
    else:
        calls = [line for line in _read_text(path).splitlines() if line.strip()]
    return CallTrace.from_calls(program_id, calls)


def load_traces(directory):
    """
    Variant traces under ``directory``; a trace's path without its suffix is
    the variant id, e.g. ``optimization/src/main.c/2.jsonl``.

    :return: dict variant id -> CallTrace
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise MetricsInputError(f'{directory} is not a directory', path=str(directory))
    traces = {}
    for path in sorted(directory.rglob('*')):
        if path.is_file() and path.suffix in TRACE_SUFFIXES:
            program_id = path.relative_to(directory).with_suffix('').as_posix()
            traces[program_id] = load_trace(path, program_id)
    logger.debug(f'loaded {len(traces)} traces from {directory}')
    return traces


def load_reports(path):
    """ :return: dict variant id -> list of DetectorReport ordered by run """
    grouped = defaultdict(list)
    for row in read_jsonl(path, DetectorReportSerializer):
        report = DetectorReportSerializer().create(dict(row))
        grouped[report.variant_id].append(report)
    for reports in grouped.values():
        reports.sort(key=lambda report: report.run_index)
    return dict(grouped)


def load_verdicts(path):
    """
    Read classifier verdicts: a JSON object ``{variant_id: verdict}`` or JSON
    Lines of ``{variant_id, verdict}``.

    :return: dict variant id -> Verdict
    """
    path = Path(path)
    if not path.exists():
        raise MetricsInputError(f'{path} does not exist', path=str(path))
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError:
        data = None
    if isinstance(data, dict) and 'variant_id' not in data:
        rows = [{'variant_id': key, 'verdict': value} for key, value in data.items()]
    else:
        rows = read_jsonl(path)

    verdicts = {}
    for row in rows:
        serializer = VerdictSerializer(data=row)
        if not serializer.is_valid():
            raise MetricsInputError(f'{path}: invalid verdict', path=str(path),
                                    errors=serializer.errors)
        verdicts[serializer.validated_data['variant_id']] = serializer.validated_data['verdict']
    return verdicts
