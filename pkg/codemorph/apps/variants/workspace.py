"""
On-disk layout of a synthesis workspace.

    shadow/<strategy>/             working copy of the project, one per strategy
    prompts/<file>/<strategy>/     rendered prompts
    transcripts/                   recorded model responses
    generations/<strategy>/<file>/ cached generations and the file's base snapshot
    builds/<strategy>/<file>/<t>/  build logs and the merged text fed to the build
    variants/<strategy>/<file>/<t>/ collected artifacts
    CHECKPOINT.json  records.jsonl  state.json  .lock
"""
import json
import logging
import os
import shutil
from contextlib import contextmanager
from pathlib import Path

import psutil

from codemorph.apps.base.serializers import append_jsonl, read_jsonl, write_json
from codemorph.apps.gateway.serializers import GenerationResultSerializer
from codemorph.apps.variants.exceptions import WorkspaceDirty, WorkspaceLocked
from codemorph.apps.variants.models import Derivation, ModificationPlan, PlannedFile
from codemorph.apps.variants.serializers import CheckpointSerializer, VariantRecordSerializer

logger = logging.getLogger(__name__)


class Workspace(object):

    def __init__(self, root):
        self.root = Path(root).resolve()

    @property
    def checkpoint_path(self):
        return self.root / 'CHECKPOINT.json'

    @property
    def records_path(self):
        return self.root / 'records.jsonl'

    @property
    def state_path(self):
        return self.root / 'state.json'

    @property
    def lock_path(self):
        return self.root / '.lock'

    @property
    def transcripts_dir(self):
        return self.root / 'transcripts'

    def shadow_root(self, strategy):
        return self.root / 'shadow' / strategy

    def generation_path(self, strategy, file_label, ordinal):
        return self.root / 'generations' / strategy / file_label / f'{ordinal}.json'

    def base_snapshot_path(self, strategy, file_label):
        return self.root / 'generations' / strategy / file_label / 'base.src'

    def build_dir(self, strategy, file_label, prefix_t):
        return self.root / 'builds' / strategy / file_label / str(prefix_t)

    def variant_dir(self, strategy, file_label, prefix_t):
        return self.root / 'variants' / strategy / file_label / str(prefix_t)

    def relative(self, path):
        return Path(path).resolve().relative_to(self.root).as_posix()

    def lock_owner(self):
        """ pid recorded in the lock file, or None when unreadable """
        try:
            return int(self.lock_path.read_text().strip())
        except (OSError, ValueError):
            return None

    def _clear_stale_lock(self):
        pid = self.lock_owner()
        if pid is not None and psutil.pid_exists(pid):
            return False
        logger.warning(f'removing stale lock {self.lock_path} (pid {pid})')
        self.lock_path.unlink(missing_ok=True)
        return True

    @contextmanager
    def lock(self):
        self.root.mkdir(parents=True, exist_ok=True)
        flags = os.O_CREAT | os.O_EXCL | os.O_WRONLY
        try:
            fd = os.open(self.lock_path, flags)
        except FileExistsError:
            if not self._clear_stale_lock():
                raise WorkspaceLocked(f'{self.root} is in use by pid {self.lock_owner()}',
                                      workspace=str(self.root))
            try:
                fd = os.open(self.lock_path, flags)
            except FileExistsError:
                raise WorkspaceLocked(f'{self.root} is in use by another run ({self.lock_path})',
                                      workspace=str(self.root))
        try:
            os.write(fd, str(os.getpid()).encode())
            os.close(fd)
            yield self
        finally:
            self.lock_path.unlink(missing_ok=True)

    def ensure_shadow(self, strategy, pristine_root):
        shadow = self.shadow_root(strategy)
        if not shadow.exists():
            pristine_root = Path(pristine_root).resolve()

            def skip_workspace(directory, names):
                return [name for name in names if (Path(directory) / name).resolve() == self.root]

            shutil.copytree(pristine_root, shadow, symlinks=True,
                            ignore=skip_workspace if self.root.is_relative_to(pristine_root)
                            else None)
            logger.info(f'initialised shadow tree {shadow}')
        return shadow

    # state.json: accepted prefix per strategy and file

    def load_state(self):
        if not self.state_path.exists():
            return {'strategies': {}}
        return json.loads(self.state_path.read_text(encoding='utf-8'))

    def accepted(self, strategy, file_label):
        return self.load_state()['strategies'].get(strategy, {}).get(file_label, 0)

    def accept(self, strategy, file_label, prefix_t):
        state = self.load_state()
        state['strategies'].setdefault(strategy, {})[file_label] = prefix_t
        write_json(self.state_path, state)

    # checkpoint

    def has_checkpoint(self):
        return self.checkpoint_path.exists()

    def write_checkpoint(self, checkpoint):
        write_json(self.checkpoint_path, checkpoint.as_dict())
        logger.warning(f'checkpoint written: {checkpoint.strategy} {checkpoint.file} '
                       f't={checkpoint.prefix_t}')

    def read_checkpoint(self):
        if not self.has_checkpoint():
            raise WorkspaceDirty(f'no checkpoint in {self.root}; nothing to resume',
                                 workspace=str(self.root))
        serializer = CheckpointSerializer(
            data=json.loads(self.checkpoint_path.read_text(encoding='utf-8')))
        if not serializer.is_valid():
            raise WorkspaceDirty(f'unreadable checkpoint {self.checkpoint_path}',
                                 errors=serializer.errors)
        return serializer.save()

    def clear_checkpoint(self):
        self.checkpoint_path.unlink(missing_ok=True)

    # records

    def append_record(self, record):
        append_jsonl(self.records_path, record.as_dict())
        logger.info(f'recorded {record.variant_id} ({record.compile_status})')

    def records(self):
        if not self.records_path.exists():
            return []
        return [VariantRecordSerializer().create(dict(row))
                for row in read_jsonl(self.records_path, VariantRecordSerializer)]

    # generation cache

    def load_generation(self, strategy, file_label, ordinal):
        path = self.generation_path(strategy, file_label, ordinal)
        if not path.exists():
            return None
        data = json.loads(path.read_text(encoding='utf-8'))
        serializer = GenerationResultSerializer(data=data['result'])
        if not serializer.is_valid():
            logger.warning(f'discarding invalid cached generation {path}')
            return None
        return serializer.save(), data['batch'], data['lead']

    def save_generation(self, strategy, file_label, ordinal, result, batch, lead):
        write_json(self.generation_path(strategy, file_label, ordinal), {
            'result': GenerationResultSerializer(result).data,
            'batch': list(batch),
            'lead': lead,
        })

    # plan.json: the plan a run was started with, reused by resume

    @property
    def plan_path(self):
        return self.root / 'plan.json'

    def save_plan(self, modification_plan):
        write_json(self.plan_path, modification_plan.as_dict())

    def load_plan(self):
        if not self.plan_path.exists():
            raise WorkspaceDirty(f'no plan in {self.root}; start with mutate',
                                 workspace=str(self.root))
        data = json.loads(self.plan_path.read_text(encoding='utf-8'))
        return ModificationPlan(
            files=tuple(PlannedFile(path=f['path'],
                                    language=f['language'],
                                    function_count=f['function_count'],
                                    ordinals=tuple(range(1, f['modify'] + 1)),
                                    function_names=tuple(f['functions']))
                        for f in data['files']),
            derivation=Derivation(data['derivation']),
        )
