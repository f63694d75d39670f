import json
import shutil
from pathlib import Path

import pytest

from codemorph.apps.extractor.models import Language, SourceFile
from codemorph.apps.extractor.parsing import parse_file

APPS_DIR = Path(__file__).parent / 'codemorph' / 'apps'
VARIANT_FIXTURES = APPS_DIR / 'variants' / 'fixtures'


@pytest.fixture
def parse():
    def _parse(text, language='c', path='<test>'):
        return parse_file(SourceFile.from_text(text, Language(language), path=path))
    return _parse


@pytest.fixture
def toy_project(tmp_path):
    """ the two-file C project, copied so runs can't touch the fixture """
    root = tmp_path / 'toy'
    shutil.copytree(VARIANT_FIXTURES / 'toy_project', root)
    return root


@pytest.fixture
def write_transcript():
    def _write(directory, strategy, name, *responses):
        path = Path(directory) / strategy / f'{name}.json'
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(list(responses)), encoding='utf-8')
        return path
    return _write
