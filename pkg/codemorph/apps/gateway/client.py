import logging
import time

from codemorph.apps.gateway.models import GenerationResult, Outcome, line_count
from codemorph.apps.gateway.responses import parse_response
from codemorph.apps.gateway.serializers import validate_config
from codemorph.apps.gateway.transports import HttpTransport

logger = logging.getLogger(__name__)


def build_payload(bundle, cfg, seed):
    return {
        'model': cfg.model_name,
        'messages': bundle.messages,
        'options': cfg.options(seed),
        'stream': False,
    }


def transform_function(bundle, cfg, original, transport=None):
    """
    Ask the model for a variant, retrying content failures with a new seed.

    Attempt ``n`` (0-based) uses ``cfg.seed + n``. After ``cfg.max_retries``
    failed retries the original code is returned with outcome REVERTED.

    :param bundle: PromptBundle
    :param cfg: GenerationConfig
    :param original: FunctionDef, or a sequence of them for batched prompts
    :param transport: object with ``complete(bundle, payload, attempt)``;
        defaults to an HttpTransport on ``cfg.endpoint_url``
    :return: GenerationResult
    """
    cfg = validate_config(cfg)
    if transport is None:
        transport = HttpTransport(cfg.endpoint_url, cfg.timeout_s)
    originals = list(original) if isinstance(original, (list, tuple)) else [original]

    started = time.monotonic()
    diagnoses, seeds, raws = [], [], []
    for attempt in range(cfg.max_retries + 1):
        seed = cfg.seed + attempt
        completion = transport.complete(bundle, build_payload(bundle, cfg, seed), attempt)
        seeds.append(seed)
        raws.append(completion.text)
        if completion.truncated:
            code, diagnosis = None, Outcome.MALFORMED_FORMAT
        else:
            code, diagnosis = parse_response(completion.text, bundle.language)
        diagnoses.append(diagnosis)
        if code is not None:
            return GenerationResult(
                code_text=code,
                raw_response=completion.text,
                attempts=attempt + 1,
                elapsed_s=time.monotonic() - started,
                generated_line_count=line_count(code),
                outcome=Outcome.OK,
                diagnoses=tuple(diagnoses),
                seeds=tuple(seeds),
                raw_responses=tuple(raws),
            )
        logger.info(f'{", ".join(bundle.target_names)}: attempt {attempt + 1} gave '
                    f'{diagnosis.value}')

    logger.warning(f'{", ".join(bundle.target_names)}: reverted to the original after '
                   f'{len(raws)} attempts')
    code = '\n\n'.join(f.body_text for f in originals)
    return GenerationResult(
        code_text=code,
        raw_response=raws[-1],
        attempts=len(raws),
        elapsed_s=time.monotonic() - started,
        generated_line_count=line_count(code),
        outcome=Outcome.REVERTED,
        diagnoses=tuple(diagnoses),
        seeds=tuple(seeds),
        raw_responses=tuple(raws),
    )
