import logging
import math
from pathlib import Path

from django.conf import settings

from codemorph.apps.prompts import templates
from codemorph.apps.prompts.exceptions import ContextOverflow, EmptyTargets, ForeignTarget
from codemorph.apps.prompts.models import PromptBundle

logger = logging.getLogger(__name__)

SECTION_JOIN = '\n\n'


def estimate_tokens(text):
    return math.ceil(len(text.encode('utf-8', 'surrogateescape')) / 4)


def display_names(targets):
    return ', '.join(f'{target.name}()' for target in targets)


def gen_prompt(strategy, targets, ctx, context_window=None):
    """
    Compose the system and user prompt that asks for one variant of each target.

    :param strategy: StrategySpec
    :param targets: FunctionDefs of ``ctx``, any order
    :param ctx: FileContext the targets were extracted from
    :param context_window: token limit; defaults to settings.CODEMORPH_CONTEXT_WINDOW
    :return: PromptBundle
    """
    if not targets:
        raise EmptyTargets('gen_prompt needs at least one target function')
    targets = sorted(targets, key=lambda target: target.ordinal)
    for target in targets:
        if not ctx.owns(target):
            raise ForeignTarget(f'{target.name} does not belong to {ctx.file.path}',
                                function=target.name, path=str(ctx.file.path))

    language_name = ctx.language.value
    fields = {
        'num_functions': len(targets),
        'language_name': language_name,
        'function_names': display_names(targets),
    }
    p_intro = templates.INTRO.format(**fields)
    p_strat = strategy.fragment
    p_pres = templates.PRESERVE.format(**fields)
    p_addit = templates.ADDITIONAL.format(example_code=templates.EXAMPLE_CODE[language_name],
                                          **fields)
    code_parts = ['\n'.join(ctx.headers), '\n'.join(ctx.globals)]
    code_parts += [target.body_text for target in targets]
    p_code = templates.CODE.format(code=SECTION_JOIN.join(part for part in code_parts if part))

    user_text = SECTION_JOIN.join([p_intro, p_strat, p_pres, p_addit, p_code])
    system_text = templates.SYSTEM
    bundle = PromptBundle(
        system_text=system_text,
        user_text=user_text,
        target_names=tuple(target.name for target in targets),
        strategy=strategy.id,
        token_estimate=estimate_tokens(system_text) + estimate_tokens(user_text),
        language=language_name,
    )

    limit = settings.CODEMORPH_CONTEXT_WINDOW if context_window is None else context_window
    if bundle.token_estimate > limit:
        raise ContextOverflow(
            f'prompt for {display_names(targets)} needs ~{bundle.token_estimate} tokens '
            f'(window {limit})', tokens=bundle.token_estimate, window=limit)
    return bundle


def write_audit(bundle, workspace, file_label, ordinal):
    """ persist the rendered prompt under prompts/<file>/<strategy>/<ordinal>.txt """
    path = Path(workspace) / 'prompts' / file_label / bundle.strategy / f'{ordinal}.txt'
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(bundle.render(), encoding='utf-8', errors='surrogateescape')
    logger.debug(f'prompt for {bundle.target_names} written to {path}')
    return path
