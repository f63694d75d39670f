import logging
import re
import shutil
import subprocess
from dataclasses import dataclass

from django.conf import settings

from codemorph.apps.extractor.models import decode
from codemorph.apps.variants.exceptions import BuildToolMissing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BuildOutcome:
    ok: bool
    returncode: int
    stdout_path: object
    stderr_path: object
    artifacts: tuple = ()
    reason: str = ''


def run_build(manifest, cwd, log_dir, timeout=None):
    """
    Run the project's build command in ``cwd`` and capture its output.

    Success is exit status 0, a match of ``build_ok_pattern`` (when set) and at
    least one file matching ``variant_output_glob``.

    :return: BuildOutcome
    """
    timeout = settings.CODEMORPH_BUILD_TIMEOUT if timeout is None else timeout
    log_dir.mkdir(parents=True, exist_ok=True)
    stdout_path, stderr_path = log_dir / 'stdout.log', log_dir / 'stderr.log'
    try:
        completed = subprocess.run(list(manifest.build_command), cwd=cwd,
                                   capture_output=True, timeout=timeout)
        returncode, stdout, stderr = completed.returncode, completed.stdout, completed.stderr
    except (FileNotFoundError, PermissionError) as e:
        raise BuildToolMissing(f'cannot run {manifest.build_command[0]}: {e}',
                               command=list(manifest.build_command))
    except subprocess.TimeoutExpired as e:
        returncode, stdout, stderr = -1, e.stdout or b'', (e.stderr or b'') + (
            f'\nbuild timed out after {timeout}s\n'.encode())
    stdout_path.write_bytes(stdout)
    stderr_path.write_bytes(stderr)

    artifacts = tuple(sorted(p for p in cwd.glob(manifest.variant_output_glob) if p.is_file()))
    if returncode != 0:
        reason = f'exit status {returncode}'
    elif manifest.build_ok_pattern and not re.search(manifest.build_ok_pattern,
                                                     decode(stdout + b'\n' + stderr),
                                                     re.MULTILINE):
        reason = 'build_ok_pattern not found in the build output'
    elif not artifacts:
        reason = f'nothing matches {manifest.variant_output_glob}'
    else:
        reason = ''
    if reason:
        logger.warning(f'build in {cwd} failed: {reason}')
    return BuildOutcome(ok=not reason, returncode=returncode, stdout_path=stdout_path,
                        stderr_path=stderr_path, artifacts=artifacts, reason=reason)


def collect_artifacts(outcome, shadow_root, destination):
    """ copy the build's artifacts, keeping their paths relative to the shadow root """
    copied = []
    for artifact in outcome.artifacts:
        target = destination / artifact.relative_to(shadow_root)
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(artifact, target)
        copied.append(target)
    return copied
