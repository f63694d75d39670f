import pytest

from codemorph.apps.strategies.catalog import (
    CATALOG, get_strategy, list_strategies, parse_strategy_id)
from codemorph.apps.strategies.exceptions import UnknownStrategy
from codemorph.apps.strategies.models import StrategyId


def test_catalog_has_six_distinct_fragments():
    assert len(CATALOG) == 6
    assert set(CATALOG) == set(StrategyId)
    assert len({spec.fragment for spec in CATALOG.values()}) == 6
    for spec in CATALOG.values():
        assert '{' not in spec.fragment


def test_fragment_heads():
    assert get_strategy('optimization').fragment.startswith('1. Remove code redundancies.')
    assert get_strategy('reusability').fragment.startswith('Make the code reusable by dividing')
    assert get_strategy('quality').fragment.startswith('1. Check error handling and edge cases.')
    assert get_strategy('windows_api').fragment.endswith(
        '4. Ensure that the functionality remains the same after the replacement.')


def test_parse_is_case_insensitive():
    assert parse_strategy_id('security') == 'security'
    assert parse_strategy_id('Security') == 'security'
    assert parse_strategy_id('  SECURITY ') == 'security'
    assert parse_strategy_id('Windows-API') == 'windows_api'
    assert parse_strategy_id('winapi') == 'windows_api'
    assert parse_strategy_id('code-quality') == 'quality'
    assert parse_strategy_id('reliability') == 'quality'


def test_id_round_trip():
    for strategy_id in StrategyId:
        spec = get_strategy(strategy_id)
        assert parse_strategy_id(spec.id) == strategy_id.value
        assert get_strategy(str(spec)) is spec


def test_unknown_strategy():
    with pytest.raises(UnknownStrategy) as excinfo:
        parse_strategy_id('teleportation')
    assert excinfo.value.details == {'strategy': 'teleportation'}


def test_custom_strategies(settings):
    settings.CODEMORPH_CUSTOM_STRATEGIES = {'Plain C99': '1. Rewrite the code in portable C99.'}

    spec = get_strategy('plain c99')
    assert spec.id == 'plain_c99'
    assert spec.builtin is False
    assert spec.fragment == '1. Rewrite the code in portable C99.'
    assert [s.id for s in list_strategies()][-1] == 'plain_c99'
    assert len(list_strategies()) == 7


def test_list_strategies_in_catalog_order():
    assert [s.id for s in list_strategies()] == [
        'optimization', 'quality', 'reusability', 'security', 'obfuscation', 'windows_api']
