import json
import logging

import pytest
from django.core.management import CommandError

from codemorph.apps.base.exceptions import CodemorphError
from codemorph.apps.base.logging import JsonLinesFormatter
from codemorph.apps.base.models import hours_between, timestamp
from codemorph.apps.base.serializers import RecordFileError, append_jsonl, read_jsonl, write_json
from codemorph.apps.metrics.serializers import TraceCallSerializer
from codemorph.cli import diagnostic


def test_timestamp():
    assert timestamp('2024-05-01T11:00:00+02:00') == '2024-05-01T09:00:00+00:00'
    assert timestamp().endswith('+00:00')


def test_hours_between():
    assert hours_between('2024-05-01T09:00:00+00:00', '2024-05-01T09:18:00+00:00') == 0.3
    assert hours_between('2024-05-01T10:00:00+00:00', '2024-05-01T09:00:00+00:00') == -1


def test_jsonl_round_trip(tmp_path):
    path = tmp_path / 'rows' / 'calls.jsonl'
    append_jsonl(path, {'seq': 1, 'call': 'open'})
    append_jsonl(path, {'seq': 2, 'call': 'close'})

    assert read_jsonl(path) == [{'seq': 1, 'call': 'open'}, {'seq': 2, 'call': 'close'}]
    assert [row['call'] for row in read_jsonl(path, TraceCallSerializer)] == ['open', 'close']


def test_read_jsonl_errors(tmp_path):
    with pytest.raises(RecordFileError):
        read_jsonl(tmp_path / 'missing.jsonl')

    path = tmp_path / 'broken.jsonl'
    path.write_text('{"seq": 1, "call": "open"}\n{"seq": \n')
    with pytest.raises(RecordFileError) as excinfo:
        read_jsonl(path)
    assert excinfo.value.details['line'] == 2

    path.write_text('{"seq": "first", "call": "open"}\n')
    with pytest.raises(RecordFileError) as excinfo:
        read_jsonl(path, TraceCallSerializer)
    assert 'seq' in excinfo.value.details['errors']

    path.write_bytes(b'{"seq": 1, "call": "r\xe9ad"}\n')
    with pytest.raises(RecordFileError) as excinfo:
        read_jsonl(path)
    assert excinfo.value.details == {'path': str(path)}


def test_write_json(tmp_path):
    path = tmp_path / 'state' / 'state.json'

    write_json(path, {'b': 1, 'a': 'caf\udce9'})

    assert path.read_text() == '{\n  "a": "caf\\udce9",\n  "b": 1\n}\n'


def test_diagnostic():
    class Broken(CodemorphError):
        code = 'broken'

    try:
        try:
            raise Broken('no luck', file='src/a.c')
        except CodemorphError as e:
            raise CommandError(str(e), returncode=e.returncode) from e
    except CommandError as error:
        line = diagnostic('mutate', error)

    assert '\n' not in line
    assert json.loads(line) == {'level': 'error', 'command': 'mutate', 'error': 'Broken',
                                'code': 'broken', 'message': 'no luck', 'file': 'src/a.c'}
    assert json.loads(diagnostic('plan', CommandError('Error: bad flag')))['message'] == (
        'Error: bad flag')


def test_json_lines_formatter():
    record = logging.LogRecord('codemorph.apps.variants', logging.WARNING, __file__, 1,
                               'build in %s failed', ('shadow/quality',), None)

    assert json.loads(JsonLinesFormatter().format(record)) == {
        'level': 'warning', 'logger': 'codemorph.apps.variants',
        'message': 'build in shadow/quality failed'}
