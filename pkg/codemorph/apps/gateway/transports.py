import json
import logging
import re
from pathlib import Path

import requests
from requests.adapters import HTTPAdapter
from urllib3.util.retry import Retry

from codemorph.apps.gateway.exceptions import TransportError
from codemorph.apps.gateway.models import Completion

logger = logging.getLogger(__name__)


def transcript_name(bundle):
    return '+'.join(re.sub(r'[^\w.+-]', '_', name) for name in bundle.target_names)


def _load_transcript(path):
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
        responses = data['responses'] if isinstance(data, dict) else data
    except (OSError, UnicodeDecodeError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise TransportError(f'unreadable transcript {path}: {e!r}', path=str(path))
    if not isinstance(responses, list):
        raise TransportError(f'transcript {path} holds no response list', path=str(path))
    return responses


def _completion(entry):
    if isinstance(entry, dict):
        return Completion(text=entry.get('content', ''), truncated=bool(entry.get('truncated')))
    return Completion(text=str(entry))


class HttpTransport(object):
    """
    POSTs chat bodies to an Ollama-style endpoint.

    Connection-level failures are retried by the session; anything still
    failing surfaces as TransportError. With ``record_dir`` every response is
    also appended to ``<record_dir>/<digest>.json`` so the run can be replayed.
    """

    def __init__(self, endpoint_url, timeout_s, record_dir=None, session=None, retries=3):
        self.endpoint_url = endpoint_url
        self.timeout_s = timeout_s
        self.record_dir = Path(record_dir) if record_dir else None
        self.session = session or requests.Session()
        retry = Retry(total=retries, backoff_factor=0.5,
                      status_forcelist=(429, 500, 502, 503, 504),
                      allowed_methods=frozenset({'POST'}), raise_on_status=False)
        self.session.mount('http://', HTTPAdapter(max_retries=retry))
        self.session.mount('https://', HTTPAdapter(max_retries=retry))

    def complete(self, bundle, payload, attempt):
        try:
            response = self.session.post(self.endpoint_url, json=payload, timeout=self.timeout_s)
            response.raise_for_status()
            body = response.json()
        except (requests.RequestException, ValueError) as e:
            raise TransportError(f'{self.endpoint_url}: {e}', endpoint=self.endpoint_url)

        completion = self._parse_body(body)
        if self.record_dir is not None:
            self._record(bundle, attempt, completion)
        return completion

    def _parse_body(self, body):
        try:
            if 'message' in body:
                # ollama /api/chat
                return Completion(text=body['message']['content'],
                                  truncated=body.get('done_reason') == 'length')
            if 'choices' in body:
                choice = body['choices'][0]
                return Completion(text=choice['message']['content'],
                                  truncated=choice.get('finish_reason') == 'length')
            if 'response' in body:
                return Completion(text=body['response'],
                                  truncated=body.get('done_reason') == 'length')
        except (KeyError, IndexError, TypeError):
            pass
        raise TransportError(f'{self.endpoint_url}: unrecognised response body',
                             endpoint=self.endpoint_url)

    def _record(self, bundle, attempt, completion):
        path = self.record_dir / f'{bundle.digest}.json'
        responses = _load_transcript(path) if path.exists() else []
        responses = responses[:attempt] + [None] * (attempt - len(responses))
        responses.append({'content': completion.text, 'truncated': completion.truncated})
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({'digest': bundle.digest,
                                    'targets': list(bundle.target_names),
                                    'strategy': bundle.strategy,
                                    'responses': responses}, indent=2), encoding='utf-8')


class ReplayTransport(object):
    """
    Serves canned responses: attempt ``n`` gets the n-th entry of the transcript
    ``<directory>/<digest>.json``, or ``<directory>/<strategy>/<function>.json``
    when no digest-keyed file exists.
    """

    def __init__(self, directory):
        self.directory = Path(directory)

    def transcript_path(self, bundle):
        candidates = [
            self.directory / f'{bundle.digest}.json',
            self.directory / bundle.strategy / f'{transcript_name(bundle)}.json',
        ]
        for path in candidates:
            if path.exists():
                return path
        raise TransportError(f'no transcript for {", ".join(bundle.target_names)} '
                             f'({bundle.strategy}) in {self.directory}',
                             digest=bundle.digest)

    def complete(self, bundle, payload, attempt):
        path = self.transcript_path(bundle)
        responses = _load_transcript(path)
        if attempt >= len(responses) or responses[attempt] is None:
            raise TransportError(f'{path} has no response for attempt {attempt + 1}',
                                 path=str(path))
        logger.debug(f'replaying attempt {attempt + 1} from {path}')
        return _completion(responses[attempt])


def transport_for(cfg, replay=None, record_dir=None):
    """ replay transcripts from ``replay`` when given, else talk to cfg.endpoint_url """
    if replay is not None:
        if not Path(replay).is_dir():
            raise TransportError(f'replay directory {replay} does not exist', path=str(replay))
        return ReplayTransport(replay)
    return HttpTransport(cfg.endpoint_url, cfg.timeout_s, record_dir=record_dir)
