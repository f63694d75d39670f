import json
import logging
from pathlib import Path

from codemorph.apps.base.exceptions import CodemorphError

logger = logging.getLogger(__name__)


class RecordFileError(CodemorphError):
    code = 'record_file_error'


def append_jsonl(path, payload):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('a', encoding='utf-8') as handle:
        handle.write(json.dumps(payload, sort_keys=True) + '\n')


def read_jsonl(path, serializer_class=None):
    """
    Read a JSON Lines file, validating each object with a DRF serializer.

    :param path: file to read; blank lines are skipped
    :param serializer_class: optional Serializer subclass
    :return: list of dicts (``validated_data`` when a serializer is given)
    """
    rows = []
    path = Path(path)
    if not path.exists():
        raise RecordFileError(f'{path} does not exist', path=str(path))
    try:
        lines = path.read_text(encoding='utf-8').splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise RecordFileError(f'cannot read {path}: {e}', path=str(path))
    for number, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise RecordFileError(f'{path}:{number}: {e.msg}', path=str(path), line=number)
        if serializer_class is not None:
            serializer = serializer_class(data=data)
            if not serializer.is_valid():
                raise RecordFileError(f'{path}:{number}: invalid record',
                                      path=str(path), line=number, errors=serializer.errors)
            data = serializer.validated_data
        rows.append(data)
    logger.debug(f'read {len(rows)} rows from {path}')
    return rows


def write_json(path, payload):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + '\n',
                    encoding='utf-8')
