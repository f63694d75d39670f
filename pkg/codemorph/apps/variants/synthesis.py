"""
Incremental variant synthesis.

For every planned file the leading functions are transformed one at a time:
prefix ``t`` is merged on top of the accepted file of prefix ``t - 1``, built,
and recorded. A failing build halts the run at a checkpoint; ``resume``
rebuilds the human-fixed shadow tree and carries on from there.
"""
import logging

from django.conf import settings

from codemorph.apps.base.models import hours_between, timestamp
from codemorph.apps.extractor.models import Language, SourceFile, encode, read_source
from codemorph.apps.extractor.parsing import parse_file
from codemorph.apps.gateway.client import transform_function
from codemorph.apps.merger.exceptions import HelperCollision, NameMismatch, TargetNotFound
from codemorph.apps.merger.merge import build_transformed, merge, write_merged
from codemorph.apps.merger.models import TransformedFunction
from codemorph.apps.metrics.formulas import line_edit_count
from codemorph.apps.prompts.builder import gen_prompt, write_audit
from codemorph.apps.prompts.exceptions import ContextOverflow
from codemorph.apps.strategies.catalog import get_strategy
from codemorph.apps.variants.builds import collect_artifacts, run_build
from codemorph.apps.variants.exceptions import AwaitingHuman, NegativeDuration, WorkspaceDirty
from codemorph.apps.variants.models import (
    Checkpoint, CompileStatus, MergeStatus, VariantRecord, variant_id)

logger = logging.getLogger(__name__)


def record_man_hours(record, start, end, override=None):
    """
    Book the human time spent on a checkpoint.

    :param start: checkpoint timestamp
    :param end: resume timestamp
    :param override: operator-entered hours; replaces the wall-clock value
    """
    if override is not None:
        if override < 0:
            raise NegativeDuration(f'man-hours cannot be negative: {override}', hours=override)
        record.man_hours = float(override)
    else:
        hours = hours_between(start, end)
        if hours < 0:
            raise NegativeDuration(f'resume at {end} precedes checkpoint at {start}',
                                   start=str(start), end=str(end))
        record.man_hours += hours
    record.touch()
    return record


def run_strategies(manifest, plan, strategies, cfg, workspace, transport=None,
                   batch_size=None):
    """ synthesize each strategy in turn; a checkpoint remembers the ones left over """
    strategies = list(strategies)
    records = []
    for index, strategy in enumerate(strategies):
        records += synthesize(manifest, plan, strategy, cfg, workspace, transport=transport,
                              batch_size=batch_size, pending=strategies[index + 1:])
    return records


def synthesize(manifest, plan, strategy, cfg, workspace, transport=None, batch_size=None,
               pending=()):
    """
    Produce the compiled variants of one strategy, prefix by prefix.

    Steps already accepted in ``workspace`` are skipped, so calling this again
    after a resume continues where the run stopped.

    :param manifest: ProjectManifest
    :param plan: ModificationPlan
    :param strategy: strategy id or alias
    :param cfg: GenerationConfig
    :param workspace: Workspace
    :param transport: gateway transport
    :param batch_size: functions per prompt; settings.CODEMORPH_BATCH_SIZE by default
    :param pending: strategies to run after this one, stored in a checkpoint
    :raise AwaitingHuman: a build failed; CHECKPOINT.json describes where
    :return: list of VariantRecord appended by this call
    """
    spec = get_strategy(strategy)
    if workspace.has_checkpoint():
        raise WorkspaceDirty(f'{workspace.root} has a pending checkpoint; fix the build and resume',
                             workspace=str(workspace.root))
    step = _Stepper(manifest, spec, cfg, workspace, transport,
                    batch_size or settings.CODEMORPH_BATCH_SIZE, pending)
    records = []
    for planned in plan.files:
        records += step.run_file(planned)
    logger.info(f'{spec.id}: {len(records)} new variant(s)')
    return records


def resume(manifest, workspace, man_hours=None):
    """
    Rebuild the shadow tree after a human fix and record the fixed variant.

    :param man_hours: operator-entered hours, replacing the wall-clock figure
    :raise WorkspaceDirty: no checkpoint to resume
    :raise AwaitingHuman: the build still fails
    :return: (VariantRecord, Checkpoint)
    """
    checkpoint = workspace.read_checkpoint()
    shadow = workspace.shadow_root(checkpoint.strategy)
    label, prefix_t = checkpoint.file, checkpoint.prefix_t
    outcome = run_build(manifest, shadow, workspace.build_dir(checkpoint.strategy, label, prefix_t))
    if not outcome.ok:
        raise AwaitingHuman(f'{label} t={prefix_t} still fails to build ({outcome.reason})',
                            **_halt_details(workspace, checkpoint, outcome))

    language = _language_of(manifest, label)
    merged_data = (workspace.root / checkpoint.merged_path).read_bytes()
    generated = parse_file(SourceFile.from_bytes(label, language, merged_data))
    fixed = parse_file(read_source(shadow / label, language))
    edit_lines = sum(line_edit_count(_region(generated, name), _region(fixed, name))
                     for name in checkpoint.region_names)

    resumed_at = timestamp()
    copied = collect_artifacts(outcome, shadow,
                               workspace.variant_dir(checkpoint.strategy, label, prefix_t))
    record = VariantRecord(
        variant_id=variant_id(checkpoint.strategy, label, prefix_t),
        strategy=checkpoint.strategy,
        file=label,
        prefix_t=prefix_t,
        function=checkpoint.function,
        generation=checkpoint.generation,
        merge_status=checkpoint.merge_status,
        compile_status=CompileStatus.OK_AFTER_HUMAN_FIX.value,
        artifact_path=workspace.relative(copied[0]),
        edit_lines=edit_lines,
        generation_seconds=checkpoint.generation_seconds,
        checkpoint_at=checkpoint.created_at,
        resumed_at=resumed_at,
    )
    record_man_hours(record, checkpoint.created_at, resumed_at, override=man_hours)
    workspace.append_record(record)
    workspace.accept(checkpoint.strategy, label, prefix_t)
    workspace.clear_checkpoint()
    return record, checkpoint


def _language_of(manifest, label):
    for entry in manifest.files:
        if entry.path == label:
            return Language(entry.language)
    return Language.from_path(label)


def _region(ctx, name):
    function = ctx.function(name)
    return function.body_text if function is not None else ''


def _halt_details(workspace, checkpoint, outcome):
    return {
        'workspace': str(workspace.root),
        'strategy': checkpoint.strategy,
        'file': checkpoint.file,
        'prefix_t': checkpoint.prefix_t,
        'build_stderr_path': workspace.relative(outcome.stderr_path),
    }


class _Stepper(object):
    """ one strategy's walk over the plan """

    def __init__(self, manifest, spec, cfg, workspace, transport, batch_size, pending):
        self.manifest = manifest
        self.spec = spec
        self.cfg = cfg
        self.workspace = workspace
        self.transport = transport
        self.batch_size = max(1, batch_size)
        self.pending = list(pending)
        self.shadow = workspace.ensure_shadow(spec.id, manifest.root)

    def run_file(self, planned):
        accepted = self.workspace.accepted(self.spec.id, planned.path)
        if accepted >= planned.prefix_length:
            return []
        base = self._base_context(planned)
        records = []
        for prefix_t in range(accepted + 1, planned.prefix_length + 1):
            records.append(self._step(planned, base, prefix_t))
        return records

    def _base_context(self, planned):
        """ the file as it stood before its first transformation; prompts quote it """
        snapshot = self.workspace.base_snapshot_path(self.spec.id, planned.path)
        if not snapshot.exists():
            snapshot.parent.mkdir(parents=True, exist_ok=True)
            snapshot.write_bytes((self.shadow / planned.path).read_bytes())
        return parse_file(SourceFile.from_bytes(planned.path, Language(planned.language),
                                                snapshot.read_bytes()))

    def _generate(self, planned, base, prefix_t):
        cached = self.workspace.load_generation(self.spec.id, planned.path, prefix_t)
        if cached is not None:
            return cached
        first = ((prefix_t - 1) // self.batch_size) * self.batch_size + 1
        ordinals = list(range(first, min(first + self.batch_size, planned.prefix_length + 1)))
        targets = [base.functions[ordinal - 1] for ordinal in ordinals]
        try:
            groups = [(ordinals, targets, gen_prompt(self.spec, targets, base))]
        except ContextOverflow:
            if len(targets) == 1:
                raise
            logger.warning(f'{planned.path}: batch {ordinals} overflows the context window; '
                           f'prompting one function at a time')
            groups = [([ordinal], [target], gen_prompt(self.spec, [target], base))
                      for ordinal, target in zip(ordinals, targets)]

        for group_ordinals, group_targets, bundle in groups:
            result = transform_function(bundle, self.cfg, group_targets, transport=self.transport)
            names = [target.name for target in group_targets]
            for position, ordinal in enumerate(group_ordinals):
                write_audit(bundle, self.workspace.root, planned.path, ordinal)
                self.workspace.save_generation(self.spec.id, planned.path, ordinal, result,
                                               names, lead=position == 0)
        return self.workspace.load_generation(self.spec.id, planned.path, prefix_t)

    def _step(self, planned, base, prefix_t):
        strategy, label = self.spec.id, planned.path
        function = base.functions[prefix_t - 1]
        result, batch, lead = self._generate(planned, base, prefix_t)

        shadow_file = self.shadow / label
        current = parse_file(read_source(shadow_file, planned.language))
        target = current.function(function.name, function.qualified_signature)
        if target is None:
            raise TargetNotFound(f'{function.name} is no longer defined in {label}',
                                 function=function.name, file=label)

        merge_status = MergeStatus.MERGED
        try:
            transformed = build_transformed(current, target, result.code_text,
                                            siblings=set(batch) - {function.name},
                                            with_helpers=lead)
        except (NameMismatch, HelperCollision) as e:
            logger.warning(f'{label}: keeping the original {function.name}: {e}')
            merge_status = (MergeStatus.NAME_MISMATCH_REVERTED if isinstance(e, NameMismatch)
                            else MergeStatus.HELPER_COLLISION_REVERTED)
            transformed = TransformedFunction(original=target, replacement_text=target.body_text)
        merged = merge(current, [transformed])

        build_dir = self.workspace.build_dir(strategy, label, prefix_t)
        build_dir.mkdir(parents=True, exist_ok=True)
        merged_path = build_dir / f'merged{shadow_file.suffix}'
        merged_path.write_bytes(encode(merged.text))
        write_merged(merged, shadow_file)

        outcome = run_build(self.manifest, self.shadow, build_dir)
        generation_seconds = result.elapsed_s if lead else 0.0
        if not outcome.ok:
            checkpoint = Checkpoint(
                file=label,
                prefix_t=prefix_t,
                strategy=strategy,
                build_stdout_path=self.workspace.relative(outcome.stdout_path),
                build_stderr_path=self.workspace.relative(outcome.stderr_path),
                merged_path=self.workspace.relative(merged_path),
                function=function.name,
                region_names=list(merged.region_names),
                generation=result.summary(),
                merge_status=merge_status.value,
                generation_seconds=generation_seconds,
                pending_strategies=self.pending,
            )
            self.workspace.write_checkpoint(checkpoint)
            raise AwaitingHuman(
                f'{label} t={prefix_t} ({function.name}) failed to build ({outcome.reason}); '
                f'fix {self.workspace.relative(shadow_file)} and run resume',
                **_halt_details(self.workspace, checkpoint, outcome))

        copied = collect_artifacts(outcome, self.shadow,
                                   self.workspace.variant_dir(strategy, label, prefix_t))
        record = VariantRecord(
            variant_id=variant_id(strategy, label, prefix_t),
            strategy=strategy,
            file=label,
            prefix_t=prefix_t,
            function=function.name,
            generation=result.summary(),
            merge_status=merge_status.value,
            compile_status=CompileStatus.OK.value,
            artifact_path=self.workspace.relative(copied[0]),
            generation_seconds=generation_seconds,
        )
        self.workspace.append_record(record)
        self.workspace.accept(strategy, label, prefix_t)
        return record
