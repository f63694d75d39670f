"""
Split a C/C++ translation unit into headers, globals and top-level function
definitions, keeping enough position data to rebuild the file byte for byte.
"""
import logging

import tree_sitter_c
import tree_sitter_cpp
from tree_sitter import Language as Grammar, Parser

from codemorph.apps.extractor.exceptions import ParseFailure, UnsupportedLanguage
from codemorph.apps.extractor.models import (
    FileContext, FunctionDef, Language, Segment, SegmentKind, decode)

logger = logging.getLogger(__name__)

GRAMMARS = {
    Language.C: Grammar(tree_sitter_c.language()),
    Language.CPP: Grammar(tree_sitter_cpp.language()),
}

# nodes we descend into when they hold function definitions
CONTAINERS = {
    'preproc_ifdef', 'preproc_if', 'preproc_else', 'preproc_elif', 'preproc_elifdef',
    'linkage_specification', 'namespace_definition', 'declaration_list',
}
PREPROC_CONTAINERS = {'preproc_ifdef', 'preproc_if', 'preproc_else', 'preproc_elif',
                      'preproc_elifdef'}
# fields that belong to a container's opening line rather than its items
HEAD_FIELDS = ('name', 'condition', 'value')
NAME_TYPES = {'identifier', 'field_identifier', 'qualified_identifier', 'type_identifier',
              'operator_name', 'destructor_name', 'namespace_identifier'}


def grammar_for(language):
    try:
        return GRAMMARS[Language(language)]
    except (KeyError, ValueError):
        raise UnsupportedLanguage(f'unsupported language: {language!r}', language=str(language))


def parse_tree(data, language):
    """ parse raw bytes; a fresh Parser per call keeps this thread-safe. """
    parser = Parser(grammar_for(language))
    tree = parser.parse(data)
    if tree is None or tree.root_node is None:
        raise ParseFailure('parser produced no tree')
    return tree


def parse_file(src):
    """
    Extract headers, globals and top-level function definitions from a file.

    :param src: SourceFile
    :return: FileContext whose segments cover every byte of ``src.data``
    """
    data = src.data
    tree = parse_tree(data, src.language)
    root = tree.root_node
    if root.has_error:
        logger.warning(f'{src.path}: parse tree contains error nodes')

    items = []
    _collect(root, data, '', items)
    items.sort(key=lambda item: item[1])

    segments = []
    functions = []
    cursor = 0
    for kind, start, end, node, enclosure in items:
        if start < cursor or end <= start:
            continue
        if start > cursor:
            segments.append(_segment(SegmentKind.RESIDUE, cursor, start, data))
        if kind == SegmentKind.FUNCTION:
            function = _function(node, data, len(functions) + 1, enclosure)
            functions.append(function)
            segments.append(_segment(kind, start, end, data))
        else:
            symbols = tuple(_symbols(node, data)) if node is not None else ()
            segments.append(_segment(kind, start, end, data, symbols))
        cursor = end
    if cursor < len(data):
        segments.append(_segment(SegmentKind.RESIDUE, cursor, len(data), data))

    return FileContext(file=src, segments=tuple(segments), functions=tuple(functions))


def reconstruct(ctx):
    return ''.join(segment.text for segment in ctx.segments)


def count_function_nodes(data, language):
    """ function definitions, templated or not, reachable without entering a function or class """
    def walk(node):
        return sum(1 if _definition(child) is not None
                   else walk(child) if child.type in CONTAINERS
                   else 0
                   for child in node.children)

    return walk(parse_tree(data, language).root_node)


def _segment(kind, start, end, data, symbols=()):
    return Segment(kind=kind, start=start, end=end, text=decode(data[start:end]), symbols=symbols)


def _collect(node, data, enclosure, items):
    heads = {_key(node.child_by_field_name(f)) for f in HEAD_FIELDS} - {None}
    run = None

    def flush():
        nonlocal run
        if run is not None:
            items.append((SegmentKind.GLOBAL, run[0], run[1], None, enclosure))
            run = None

    for child in node.children:
        if child.start_byte == child.end_byte:
            # zero-width MISSING nodes
            continue
        if child.type == 'comment':
            flush()
        elif _definition(child) is not None:
            flush()
            items.append((SegmentKind.FUNCTION, child.start_byte, child.end_byte, child, enclosure))
        elif child.type in CONTAINERS and _holds_function(child):
            flush()
            _collect(child, data, _enclosure(child, data, enclosure), items)
        elif not child.is_named or _key(child) in heads:
            # opening/closing lines of a container: `#ifdef X`, `namespace n {`, `}`
            run = [child.start_byte, child.end_byte] if run is None else [run[0], child.end_byte]
        elif child.type == 'preproc_include':
            flush()
            items.append((SegmentKind.HEADER, child.start_byte, child.end_byte, child, enclosure))
        else:
            flush()
            items.append((SegmentKind.GLOBAL, child.start_byte, child.end_byte, child, enclosure))
    flush()


def _key(node):
    if node is None:
        return None
    return node.start_byte, node.end_byte, node.type


def _definition(node):
    """ the function_definition of a plain or templated function, else None """
    if node.type == 'function_definition':
        return node
    if node.type == 'template_declaration':
        inner = next((c for c in node.named_children
                      if c.type in ('function_definition', 'template_declaration')), None)
        return _definition(inner) if inner is not None else None
    return None


def _holds_function(node):
    if _definition(node) is not None:
        return True
    if node.type in CONTAINERS:
        return any(_holds_function(child) for child in node.children)
    return False


def _enclosure(node, data, outer):
    if node.type == 'linkage_specification':
        value = node.child_by_field_name('value')
        inner = f'extern {_text(value, data)}' if value is not None else 'extern'
    elif node.type == 'namespace_definition':
        name = node.child_by_field_name('name')
        inner = f'namespace {_text(name, data)}' if name is not None else 'anonymous namespace'
    elif node.type in PREPROC_CONTAINERS:
        inner = 'preprocessor conditional'
    else:
        return outer
    if outer and outer != inner:
        return f'{outer} > {inner}'
    return inner


def _text(node, data):
    return decode(data[node.start_byte:node.end_byte])


def _function(node, data, ordinal, enclosure):
    # a template's span starts at `template <...>`
    definition = _definition(node)
    body = definition.child_by_field_name('body')
    declarator = _function_declarator(definition.child_by_field_name('declarator'))
    signature_end = body.start_byte if body is not None else node.end_byte
    name_node = _declarator_name(declarator) if declarator is not None else None
    if name_node is not None:
        name = _text(name_node, data)
    else:
        # macro-heavy signatures the grammar could not resolve
        head = decode(data[node.start_byte:signature_end])
        name = head.split('(')[0].split()[-1] if head.split('(')[0].split() else f'anonymous_{ordinal}'
    return FunctionDef(
        name=' '.join(name.split()),
        qualified_signature=decode(data[node.start_byte:signature_end]).strip(),
        body_span=(node.start_byte, node.end_byte),
        body_text=_text(node, data),
        ordinal=ordinal,
        enclosure=enclosure,
    )


def _function_declarator(node):
    if node is None:
        return None
    if node.type == 'function_declarator':
        return node
    for child in node.named_children:
        if child.type in ('parameter_list', 'compound_statement'):
            continue
        found = _function_declarator(child)
        if found is not None:
            return found
    return None


def _symbols(node, data):
    if node.type in ('preproc_def', 'preproc_function_def'):
        name = node.child_by_field_name('name')
        if name is not None:
            yield _text(name, data)
        return
    if node.type in ('struct_specifier', 'class_specifier', 'union_specifier', 'enum_specifier'):
        name = node.child_by_field_name('name')
        if name is not None:
            yield _text(name, data)
        return
    type_node = node.child_by_field_name('type')
    if type_node is not None and type_node.type in ('struct_specifier', 'class_specifier',
                                                    'union_specifier', 'enum_specifier'):
        yield from _symbols(type_node, data)
    for declarator in node.children_by_field_name('declarator'):
        name = _declarator_name(declarator)
        if name is not None:
            yield _text(name, data)


def _declarator_name(node):
    while node is not None and node.type not in NAME_TYPES:
        inner = node.child_by_field_name('declarator')
        if inner is None:
            inner = next((c for c in node.named_children if c.type != 'parameter_list'), None)
        node = inner
    return node
