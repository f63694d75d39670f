"""
Splice transformed functions back into their file.

Only the target functions' bytes change; new headers go after the last
original include, helper prototypes after the leading globals block and helper
definitions right before the first function definition.
"""
import logging
import re
import textwrap
from pathlib import Path

from codemorph.apps.extractor.models import SegmentKind, SourceFile, encode
from codemorph.apps.extractor.parsing import parse_file, reconstruct
from codemorph.apps.merger.exceptions import HelperCollision, NameMismatch, TargetNotFound
from codemorph.apps.merger.models import MergedFile, Provenance, TransformedFunction

logger = logging.getLogger(__name__)

INCLUDE = re.compile(r'^\s*#\s*include\s*[<"]\s*([^>"]*?)\s*[>"]')


def header_key(line):
    """ `#include"x.h"`, `#include <x.h>` and `# include "x.h"` share a key. """
    match = INCLUDE.match(line)
    if match:
        return match.group(1)
    return ' '.join(line.split())


def _squash(text):
    return ' '.join(text.split())


def extract_new_headers(replacement_text, existing_headers):
    """
    Strip the include lines heading a replacement and keep the unseen ones.

    :param replacement_text: code block from the model
    :param existing_headers: header lines already in the file
    :return: (stripped_text, new_headers)
    """
    lines = replacement_text.splitlines(keepends=True)
    harvested = []
    i = 0
    while i < len(lines) and (not lines[i].strip() or INCLUDE.match(lines[i])):
        if lines[i].strip():
            harvested.append(lines[i].strip())
        i += 1
    return ''.join(lines[i:]), _dedup(harvested, existing_headers)


def _dedup(candidates, existing):
    seen = {header_key(header) for header in existing}
    fresh = []
    for header in candidates:
        key = header_key(header)
        if key in seen:
            continue
        seen.add(key)
        fresh.append(header)
    return fresh


def build_transformed(ctx, original, code_text, siblings=(), with_helpers=True):
    """
    Interpret a generated code block for one target function.

    :param ctx: FileContext the target lives in
    :param original: FunctionDef being replaced
    :param code_text: code block from the model (or the original body)
    :param siblings: names of other targets generated by the same prompt
    :param with_helpers: attach the block's helper functions to this target
    :return: TransformedFunction
    """
    stripped, new_headers = extract_new_headers(code_text, ctx.headers)
    stripped = textwrap.dedent(stripped).strip('\n')
    parsed = parse_file(SourceFile.from_text(stripped, ctx.language, path=f'<{original.name}>'))
    new_headers = new_headers + _dedup(parsed.headers, ctx.headers + new_headers)

    candidates = [f for f in parsed.functions if f.name == original.name]
    if not candidates:
        raise NameMismatch(
            f'generated code does not define {original.name}',
            expected=original.name, found=[f.name for f in parsed.functions])
    target = parsed.function(original.name, original.qualified_signature)

    existing_names = ctx.symbols
    helpers = []
    if with_helpers:
        for function in parsed.functions:
            if function.name == original.name or function.name in siblings:
                continue
            if function.name in existing_names:
                raise HelperCollision(f'helper {function.name} collides with an existing symbol',
                                      symbol=function.name)
            helpers.append(function)

    defined = {f.name for f in parsed.functions} | {f.name for f in ctx.functions}
    known_globals = {_squash(text) for text in ctx.globals}
    extras = []
    for segment in parsed.segments:
        if segment.kind != SegmentKind.GLOBAL:
            continue
        text = segment.text.strip()
        if _squash(text) in known_globals:
            continue
        if segment.symbols and set(segment.symbols) <= defined:
            # prototypes of functions that exist or are being added
            continue
        clash = set(segment.symbols) & existing_names
        if clash:
            raise HelperCollision(f'generated code redeclares {", ".join(sorted(clash))}',
                                  symbol=sorted(clash)[0])
        if with_helpers:
            extras.append(text)

    return TransformedFunction(
        original=original,
        replacement_text=target.body_text,
        new_headers=tuple(new_headers),
        helper_functions=tuple((f.prototype, f.body_text) for f in helpers),
        extra_declarations=tuple(extras),
        helper_names=tuple(f.name for f in helpers),
    )


def merge(ctx, transformed):
    """
    Rebuild the file with each transformed function spliced over its original.

    :param ctx: FileContext as returned by parse_file
    :param transformed: TransformedFunctions for functions of ``ctx``
    :return: MergedFile
    """
    by_ordinal = {}
    for item in transformed:
        if not ctx.owns(item.original):
            raise TargetNotFound(f'{item.original.name} is not a function of {ctx.file.path}',
                                 function=item.original.name)
        by_ordinal[item.original.ordinal] = item
    provenance = {f.ordinal: (Provenance.TRANSFORMED if f.ordinal in by_ordinal
                              else Provenance.ORIGINAL) for f in ctx.functions}
    if not by_ordinal:
        return MergedFile(text=reconstruct(ctx), modified_ordinals=frozenset(),
                          provenance=provenance)

    items = [by_ordinal[ordinal] for ordinal in sorted(by_ordinal)]
    new_headers = _dedup([h for item in items for h in item.new_headers], ctx.headers)
    helper_names, prototypes, definitions = [], [], []
    declarations = []
    for item in items:
        for name, (prototype, definition) in zip(item.helper_names, item.helper_functions):
            if name in helper_names or name in ctx.symbols:
                raise HelperCollision(f'helper {name} is defined twice', symbol=name)
            helper_names.append(name)
            prototypes.append(prototype)
            definitions.append(definition)
        declarations.extend(d for d in item.extra_declarations if d not in declarations)
    head_block = declarations + prototypes

    segments = ctx.segments
    kinds = [segment.kind for segment in segments]
    last_header = max((i for i, k in enumerate(kinds) if k == SegmentKind.HEADER), default=None)
    first_function = kinds.index(SegmentKind.FUNCTION)
    anchor = max((i for i, k in enumerate(kinds[:first_function]) if k == SegmentKind.GLOBAL),
                 default=last_header)

    out = []
    if last_header is None and new_headers:
        out.append(''.join(f'{header}\n' for header in new_headers) + '\n')
    if anchor is None and head_block:
        out.append('\n'.join(head_block) + '\n\n')

    ordinal = 0
    for index, segment in enumerate(segments):
        text = segment.text
        if segment.kind == SegmentKind.FUNCTION:
            ordinal += 1
            if index == first_function and definitions:
                out.append(''.join(f'{definition}\n\n' for definition in definitions))
            if ordinal in by_ordinal:
                text = by_ordinal[ordinal].replacement_text
        out.append(text)
        tail = text
        if index == last_header and new_headers:
            block = ''.join(f'{header}\n' for header in new_headers)
            out.append(block if tail.endswith('\n') else '\n' + block)
            tail = block
        if index == anchor and head_block:
            block = '\n'.join(head_block)
            out.append(f'{block}\n' if tail.endswith('\n') else f'\n{block}')

    return MergedFile(
        text=''.join(out),
        modified_ordinals=frozenset(by_ordinal),
        provenance=provenance,
        new_headers=tuple(new_headers),
        helper_names=tuple(helper_names),
        target_names=tuple(item.original.name for item in items),
    )


def write_merged(merged, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode(merged.text))
    logger.info(f'merged {len(merged.modified_ordinals)} function(s) into {path}')
    return path
