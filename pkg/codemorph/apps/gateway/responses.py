import logging
import re

from codemorph.apps.gateway.models import Outcome

logger = logging.getLogger(__name__)

OPENING_FENCE = re.compile(r'^\s*```\s*([\w+#.\-]*)\s*$')
CLOSING_FENCE = re.compile(r'^\s*```\s*$')

LANGUAGE_TAGS = {
    'c': {'c'},
    'cpp': {'cpp', 'c++', 'cxx', 'cc', 'cplusplus'},
}


def fenced_blocks(raw):
    """
    Split a response into fenced blocks.

    :return: (list of (tag, body), terminated) where terminated is False when
        the last fence opens but never closes
    """
    blocks = []
    lines = raw.splitlines()
    i = 0
    while i < len(lines):
        opening = OPENING_FENCE.match(lines[i])
        if not opening:
            i += 1
            continue
        j = i + 1
        while j < len(lines) and not CLOSING_FENCE.match(lines[j]):
            j += 1
        if j == len(lines):
            return blocks, False
        blocks.append((opening.group(1).lower(), _trim(lines[i + 1:j])))
        i = j + 1
    return blocks, True


def _trim(lines):
    while lines and not lines[0].strip():
        lines = lines[1:]
    while lines and not lines[-1].strip():
        lines = lines[:-1]
    return '\n'.join(lines)


def parse_response(raw, language):
    """
    Pull the generated code out of a model response.

    Blocks tagged with the file's language win and are concatenated in order;
    an untagged block is the fallback.

    :param raw: response text
    :param language: Language (or its value)
    :return: (code_text or None, Outcome)
    """
    blocks, terminated = fenced_blocks(raw or '')
    if not terminated:
        return None, Outcome.MALFORMED_FORMAT
    if not blocks:
        return None, Outcome.DESCRIBED_NOT_CODED

    tags = LANGUAGE_TAGS.get(str(language), {str(language)})
    tagged = [body for tag, body in blocks if tag in tags]
    if len(tagged) > 1:
        logger.warning(f'response carries {len(tagged)} {language} blocks; concatenating them')
    if tagged:
        code = '\n\n'.join(tagged)
    else:
        untagged = [body for tag, body in blocks if not tag]
        code = untagged[0] if untagged else ''

    if not code.strip():
        return None, Outcome.MALFORMED_FORMAT
    return code, Outcome.OK
