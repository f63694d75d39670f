import json

import pytest
import requests

from codemorph.apps.gateway.client import build_payload, transform_function
from codemorph.apps.gateway.exceptions import ConfigError, TransportError
from codemorph.apps.gateway.models import Completion, GenerationConfig, Outcome
from codemorph.apps.gateway.responses import parse_response
from codemorph.apps.gateway.serializers import (
    GenerationResultSerializer, generation_config, validate_config)
from codemorph.apps.gateway.transports import HttpTransport, ReplayTransport, transport_for
from codemorph.apps.prompts.builder import gen_prompt
from codemorph.apps.strategies.catalog import get_strategy

SOURCE = 'int twice(int x)\n{\n    return x + x;\n}\n\nint thrice(int x)\n{\n    return 3 * x;\n}\n'
VARIANT = '```c\nint twice(int x)\n{\n    return x << 1;\n}\n```'
PROSE = 'The function twice doubles its argument by adding it to itself.'
UNTERMINATED = '```c\nint twice(int x)\n{\n    return x << 1;\n'


class ScriptedTransport(object):

    def __init__(self, *responses):
        self.responses = list(responses)
        self.payloads = []

    def complete(self, bundle, payload, attempt):
        self.payloads.append(payload)
        response = self.responses[attempt]
        return response if isinstance(response, Completion) else Completion(response)


@pytest.fixture
def cfg():
    return GenerationConfig(endpoint_url='http://localhost:11434/api/chat', model_name='test',
                            seed=100)


@pytest.fixture
def twice(parse):
    ctx = parse(SOURCE)
    function = ctx.function('twice')
    return function, gen_prompt(get_strategy('optimization'), [function], ctx)


def test_ok_on_first_attempt(cfg, twice):
    function, bundle = twice
    transport = ScriptedTransport('Here you go:\n' + VARIANT)

    result = transform_function(bundle, cfg, function, transport=transport)

    assert result.outcome == Outcome.OK
    assert result.attempts == 1
    assert result.code_text == 'int twice(int x)\n{\n    return x << 1;\n}'
    assert result.generated_line_count == 4
    assert result.seeds == (100,)
    assert result.elapsed_s >= 0


def test_prose_six_times_reverts(cfg, twice):
    function, bundle = twice
    transport = ScriptedTransport(*[PROSE] * 6)

    result = transform_function(bundle, cfg, function, transport=transport)

    assert result.outcome == Outcome.REVERTED
    assert result.reverted
    assert result.attempts == 6
    assert result.code_text == function.body_text
    assert result.diagnoses == (Outcome.DESCRIBED_NOT_CODED,) * 6
    assert result.seeds == (100, 101, 102, 103, 104, 105)
    assert [p['options']['seed'] for p in transport.payloads] == list(result.seeds)


def test_malformed_twice_then_valid(cfg, twice):
    function, bundle = twice
    transport = ScriptedTransport(UNTERMINATED, '```c\n\n```', VARIANT)

    result = transform_function(bundle, cfg, function, transport=transport)

    assert result.outcome == Outcome.OK
    assert result.attempts == 3
    assert result.diagnoses == (Outcome.MALFORMED_FORMAT, Outcome.MALFORMED_FORMAT, Outcome.OK)
    assert result.raw_responses[-1] == VARIANT


def test_truncated_completion_is_malformed(cfg, twice):
    function, bundle = twice
    transport = ScriptedTransport(Completion(VARIANT, truncated=True), VARIANT)

    result = transform_function(bundle, cfg, function, transport=transport)

    assert result.attempts == 2
    assert result.diagnoses[0] == Outcome.MALFORMED_FORMAT


def test_no_retries(cfg, twice):
    function, bundle = twice
    cfg = GenerationConfig(**{**cfg.as_dict(), 'max_retries': 0})

    result = transform_function(bundle, cfg, function, transport=ScriptedTransport(PROSE))

    assert result.outcome == Outcome.REVERTED
    assert result.attempts == 1


def test_batch_revert_joins_original_bodies(cfg, parse):
    ctx = parse(SOURCE)
    bundle = gen_prompt(get_strategy('quality'), list(ctx.functions), ctx)
    cfg = GenerationConfig(**{**cfg.as_dict(), 'max_retries': 1})

    result = transform_function(bundle, cfg, list(ctx.functions),
                                transport=ScriptedTransport(PROSE, PROSE))

    assert result.code_text == ctx.functions[0].body_text + '\n\n' + ctx.functions[1].body_text


def test_payload_shape(cfg, twice):
    _, bundle = twice

    payload = build_payload(bundle, cfg, 7)

    assert payload == {
        'model': 'test',
        'messages': [{'role': 'system', 'content': bundle.system_text},
                     {'role': 'user', 'content': bundle.user_text}],
        'options': {'temperature': 0.8, 'top_k': 40, 'top_p': 0.9, 'seed': 7},
        'stream': False,
    }


def test_parse_response():
    assert parse_response('intro\n```cpp\nint f();\n```\noutro', 'cpp') == ('int f();', Outcome.OK)
    assert parse_response('```CPP\nint f();\n```', 'cpp') == ('int f();', Outcome.OK)
    assert parse_response('```c++\nint f();\n```', 'cpp') == ('int f();', Outcome.OK)
    assert parse_response(PROSE, 'c') == (None, Outcome.DESCRIBED_NOT_CODED)
    assert parse_response('', 'c') == (None, Outcome.DESCRIBED_NOT_CODED)
    assert parse_response(UNTERMINATED, 'c') == (None, Outcome.MALFORMED_FORMAT)


def test_parse_response_fallbacks():
    # untagged fence when no block carries the language
    assert parse_response('```\nint f();\n```', 'c') == ('int f();', Outcome.OK)
    # tagged blocks beat untagged ones and are concatenated in order
    raw = '```\nuntagged\n```\n```c\nint a;\n```\ntext\n```c\nint b;\n```'
    assert parse_response(raw, 'c') == ('int a;\n\nint b;', Outcome.OK)
    # a block in another language only
    assert parse_response('```python\nprint(1)\n```', 'c') == (None, Outcome.MALFORMED_FORMAT)


def test_config_validation(cfg):
    assert validate_config(cfg) == cfg
    for field, value in [('temperature', -0.1), ('top_p', 0), ('top_p', 1.5), ('top_k', 0),
                         ('max_retries', -1), ('endpoint_url', 'not a url')]:
        with pytest.raises(ConfigError) as excinfo:
            validate_config({**cfg.as_dict(), field: value})
        assert field in excinfo.value.details['errors']


def test_generation_config_defaults(settings):
    settings.CODEMORPH_ENDPOINT = 'http://models.internal:8080/api/chat'

    cfg = generation_config(seed=None, model_name='other')

    assert cfg.endpoint_url == 'http://models.internal:8080/api/chat'
    assert cfg.model_name == 'other'
    assert cfg.seed == 0
    assert (cfg.temperature, cfg.top_k, cfg.top_p, cfg.max_retries) == (0.8, 40, 0.9, 5)


def test_generation_result_serializer(cfg, twice):
    function, bundle = twice
    result = transform_function(bundle, cfg, function, transport=ScriptedTransport(PROSE, VARIANT))

    serializer = GenerationResultSerializer(data=json.loads(json.dumps(
        GenerationResultSerializer(result).data)))

    assert serializer.is_valid(), serializer.errors
    assert serializer.save() == result


class FakeResponse(object):

    def __init__(self, body, status=200):
        self.body = body
        self.status_code = status

    def raise_for_status(self):
        if self.status_code >= 400:
            raise requests.HTTPError(f'{self.status_code} error')

    def json(self):
        return self.body


def http_transport(monkeypatch, body, record_dir=None, status=200):
    session = requests.Session()
    calls = []

    def post(url, json=None, timeout=None):
        calls.append((url, json, timeout))
        return FakeResponse(body, status)

    monkeypatch.setattr(session, 'post', post)
    return HttpTransport('http://localhost:11434/api/chat', 5.0, record_dir=record_dir,
                         session=session), calls


def test_http_transport_bodies(monkeypatch, cfg, twice):
    _, bundle = twice
    payload = build_payload(bundle, cfg, 1)

    transport, calls = http_transport(monkeypatch, {'message': {'content': VARIANT},
                                                    'done_reason': 'stop'})
    assert transport.complete(bundle, payload, 0) == Completion(VARIANT)
    assert calls == [('http://localhost:11434/api/chat', payload, 5.0)]

    transport, _ = http_transport(monkeypatch, {'choices': [{'message': {'content': 'x'},
                                                             'finish_reason': 'length'}]})
    assert transport.complete(bundle, payload, 0) == Completion('x', truncated=True)

    transport, _ = http_transport(monkeypatch, {'response': 'y'})
    assert transport.complete(bundle, payload, 0) == Completion('y')


def test_http_transport_errors(monkeypatch, cfg, twice):
    _, bundle = twice
    payload = build_payload(bundle, cfg, 1)

    transport, _ = http_transport(monkeypatch, {}, status=500)
    with pytest.raises(TransportError):
        transport.complete(bundle, payload, 0)

    transport, _ = http_transport(monkeypatch, {'unexpected': True})
    with pytest.raises(TransportError):
        transport.complete(bundle, payload, 0)


def test_recorded_transcripts_replay(monkeypatch, cfg, twice, tmp_path):
    function, bundle = twice
    transport, _ = http_transport(monkeypatch, {'message': {'content': PROSE}}, record_dir=tmp_path)
    transport.complete(bundle, build_payload(bundle, cfg, 100), 0)
    transport.session.post = lambda url, json=None, timeout=None: FakeResponse(
        {'message': {'content': VARIANT}})
    transport.complete(bundle, build_payload(bundle, cfg, 101), 1)

    recorded = json.loads((tmp_path / f'{bundle.digest}.json').read_text())
    assert [r['content'] for r in recorded['responses']] == [PROSE, VARIANT]

    result = transform_function(bundle, cfg, function, transport=ReplayTransport(tmp_path))
    assert result.outcome == Outcome.OK
    assert result.attempts == 2


def test_replay_falls_back_to_strategy_and_name(cfg, twice, tmp_path, write_transcript):
    function, bundle = twice
    write_transcript(tmp_path, 'optimization', 'twice', VARIANT)

    replay = ReplayTransport(tmp_path)

    assert replay.transcript_path(bundle) == tmp_path / 'optimization' / 'twice.json'
    assert transform_function(bundle, cfg, function, transport=replay).attempts == 1


def test_replay_errors(cfg, twice, tmp_path, write_transcript):
    function, bundle = twice

    with pytest.raises(TransportError):
        transform_function(bundle, cfg, function, transport=ReplayTransport(tmp_path))

    write_transcript(tmp_path, 'optimization', 'twice', PROSE)
    with pytest.raises(TransportError):
        transform_function(bundle, cfg, function, transport=ReplayTransport(tmp_path))

    with pytest.raises(TransportError):
        transport_for(cfg, replay=tmp_path / 'missing')
    assert isinstance(transport_for(cfg, replay=tmp_path), ReplayTransport)
    assert isinstance(transport_for(cfg), HttpTransport)
