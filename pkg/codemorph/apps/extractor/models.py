from dataclasses import dataclass, field
from codemorph._compat import StrEnum
from functools import cached_property
from pathlib import Path, PurePath

from codemorph.apps.extractor.exceptions import UnsupportedLanguage

# lossless for any byte sequence; undecodable bytes become lone surrogates
ENCODING = 'utf-8'
ERRORS = 'surrogateescape'


class Language(StrEnum):
    C = 'c'
    CPP = 'cpp'

    @classmethod
    def from_label(cls, label):
        key = str(label).strip().lower()
        aliases = {
            'c': cls.C,
            'cpp': cls.CPP,
            'c++': cls.CPP,
            'cxx': cls.CPP,
            'cc': cls.CPP,
        }
        try:
            return aliases[key]
        except KeyError:
            raise UnsupportedLanguage(f'unsupported language: {label!r}', language=str(label))

    @classmethod
    def from_path(cls, path):
        suffix = PurePath(path).suffix.lower()
        if suffix in ('.c', '.h'):
            return cls.C
        if suffix in ('.cpp', '.cc', '.cxx', '.hpp', '.hh', '.hxx', '.c++'):
            return cls.CPP
        raise UnsupportedLanguage(f'cannot infer language of {path}', language=suffix)


def decode(data):
    return data.decode(ENCODING, ERRORS)


def encode(text):
    return text.encode(ENCODING, ERRORS)


@dataclass(frozen=True)
class SourceFile:
    path: PurePath
    language: Language
    text: str
    lossy: bool = False

    @cached_property
    def data(self):
        return encode(self.text)

    @classmethod
    def from_bytes(cls, path, language, data):
        try:
            text, lossy = data.decode(ENCODING), False
        except UnicodeDecodeError:
            text, lossy = decode(data), True
        return cls(path=PurePath(path), language=language, text=text, lossy=lossy)

    @classmethod
    def from_text(cls, text, language, path='<memory>'):
        return cls(path=PurePath(path), language=language, text=text)


class SegmentKind(StrEnum):
    HEADER = 'header'
    GLOBAL = 'global'
    FUNCTION = 'function'
    RESIDUE = 'residue'


@dataclass(frozen=True)
class Segment:
    kind: SegmentKind
    start: int
    end: int
    text: str
    # names a global declaration introduces, for collision checks
    symbols: tuple = ()


@dataclass(frozen=True)
class FunctionDef:
    name: str
    qualified_signature: str
    body_span: tuple
    body_text: str
    ordinal: int
    enclosure: str = ''

    @property
    def prototype(self):
        return f'{self.qualified_signature};'


@dataclass(frozen=True)
class FileContext:
    file: SourceFile
    segments: tuple
    functions: tuple = field(default=())

    @property
    def headers(self):
        return [s.text.rstrip() for s in self.segments if s.kind == SegmentKind.HEADER]

    @property
    def globals(self):
        return [s.text.rstrip() for s in self.segments if s.kind == SegmentKind.GLOBAL]

    @property
    def language(self):
        return self.file.language

    @property
    def symbols(self):
        names = {f.name for f in self.functions}
        for segment in self.segments:
            names.update(segment.symbols)
        return names

    def function(self, name, signature=None):
        """
        Find a function by name; the signature disambiguates C++ overloads.

        :return: FunctionDef or None
        """
        matches = [f for f in self.functions if f.name == name]
        if signature is not None and len(matches) > 1:
            exact = [f for f in matches if _squash(f.qualified_signature) == _squash(signature)]
            matches = exact or matches
        return matches[0] if matches else None

    def owns(self, function):
        return any(f == function for f in self.functions)


def _squash(text):
    return ' '.join(text.split())


def read_source(path, language=None):
    path = Path(path)
    language = Language.from_path(path) if language is None else Language.from_label(language)
    return SourceFile.from_bytes(path, language, path.read_bytes())
