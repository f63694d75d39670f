import logging
import math
import random
from fractions import Fraction

from codemorph.apps.extractor.models import read_source
from codemorph.apps.extractor.parsing import parse_file
from codemorph.apps.variants.models import Derivation, ModificationPlan, PlannedFile

logger = logging.getLogger(__name__)

# (upper bound inclusive, share of the file's functions to modify)
BRACKETS = (
    (9, Fraction(1)),
    (20, Fraction(60, 100)),
    (40, Fraction(30, 100)),
    (70, Fraction(20, 100)),
)
LARGE_FILE_SHARE = Fraction(15, 100)


def select_functions(total):
    """
    How many leading functions of a file to modify, rounded up.

    >>> select_functions(61)
    13
    """
    if total <= 0:
        return 0
    share = next((share for bound, share in BRACKETS if total <= bound), LARGE_FILE_SHARE)
    return min(total, math.ceil(total * share))


def load_contexts(manifest):
    """ parse the pristine copy of every non-excluded manifest file """
    return [parse_file(read_source(manifest.root / entry.path, entry.language))
            for entry in manifest.eligible_files]


def plan(manifest, contexts, shuffle_ties=False, seed=None, prefix=None):
    """
    Order files by ascending function count and pick each file's prefix length.

    :param manifest: ProjectManifest
    :param contexts: FileContexts aligned with ``manifest.eligible_files``
    :param shuffle_ties: break count ties with a seeded shuffle instead of
        manifest order
    :param seed: shuffle seed
    :param prefix: optional cap on every file's prefix length
    :return: ModificationPlan
    """
    entries = list(zip(manifest.eligible_files, contexts))
    rng = random.Random(seed)
    tie_keys = [rng.random() if shuffle_ties else index for index in range(len(entries))]
    order = sorted(range(len(entries)),
                   key=lambda index: (len(entries[index][1].functions), tie_keys[index]))

    files = []
    for index in order:
        entry, ctx = entries[index]
        total = len(ctx.functions)
        if entry.path in manifest.selection_override:
            count = min(total, manifest.selection_override[entry.path])
        else:
            count = select_functions(total)
        if prefix is not None:
            count = min(count, prefix)
        files.append(PlannedFile(
            path=entry.path,
            language=entry.language,
            function_count=total,
            ordinals=tuple(range(1, count + 1)),
            function_names=tuple(f.name for f in ctx.functions[:count]),
        ))
        logger.debug(f'{entry.path}: modifying {count} of {total} functions')

    derivation = (Derivation.MANUAL if manifest.selection_override
                  else Derivation.ASCENDING_FUNCTION_COUNT)
    return ModificationPlan(files=tuple(files), derivation=derivation)
