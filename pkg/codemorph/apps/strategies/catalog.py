import re

from django.conf import settings

from codemorph.apps.strategies.exceptions import UnknownStrategy
from codemorph.apps.strategies.models import StrategyId, StrategySpec

OPTIMIZATION = """1. Remove code redundancies.
2. Identify performance bottlenecks and fix them.
3. Simplify the code's logic or structure and optimize data structures and algorithms if applicable.
4. Use language-specific features or modern libraries if applicable."""

QUALITY = """1. Check error handling and edge cases.
2. Follow coding practices and style guidelines.
3. Add proper documentation to classes and functions, and comments for complex parts."""

REUSABILITY = """Make the code reusable by dividing supplied functions into smaller function blocks if and where applicable. The smaller functions should be called inside the respective supplied functions as needed."""

SECURITY = """1. Identify security vulnerabilities and fix them.
2. If the function you are modifying contains cryptographic operations, change the cryptographic library used for those operations. If no cryptographic operations are present, no changes are necessary.
3. Follow secure coding standards and guidelines."""

OBFUSCATION = """1. Change the given function's and LOCAL variable's names to meaningless, hard-to-understand strings which are not real words. DO NOT redefine or rename global variables (given to you) and names of functions that are called inside the given function ( might be defined elsewhere ) under any circumstances.
However if the given function name is any of `main`, `wmain`, `WinMain`, `wWinMain`, `DllMain`, `_tWinMain`, `_tmain` do not change it's name, only change the local variable's names inside the function.
2. Add unnecessary jump instructions, loops, and conditional statements inside the functions.
3. Add unnecessary functions and call those functions inside the original functions.
4. Add anti-debugging techniques to the code.
5. If there are loops/conditional statements in the code change them to their equivalent alternatives and make them more difficult to follow.
6. Incorporate code to the variants that activates under very rare and obscure cases without altering core functionality, making the rare code hard to detect during testing."""

WINDOWS_API = """1. Identify all Windows API function calls in the given functions.
2. If there are such function calls, replace each identified Windows API function call with an alternative Windows API function call or sequence of calls that achieves the same task.
3. If applicable, use indirect methods or wrappers around the Windows API calls to achieve the same functionality.
4. Ensure that the functionality remains the same after the replacement."""

CATALOG = {
    StrategyId.OPTIMIZATION: StrategySpec(StrategyId.OPTIMIZATION.value, 'Code Optimization',
                                          OPTIMIZATION),
    StrategyId.QUALITY: StrategySpec(StrategyId.QUALITY.value, 'Code Quality and Reliability',
                                     QUALITY),
    StrategyId.REUSABILITY: StrategySpec(StrategyId.REUSABILITY.value, 'Code Reusability',
                                         REUSABILITY),
    StrategyId.SECURITY: StrategySpec(StrategyId.SECURITY.value, 'Code Security', SECURITY),
    StrategyId.OBFUSCATION: StrategySpec(StrategyId.OBFUSCATION.value, 'Code Obfuscation',
                                         OBFUSCATION),
    StrategyId.WINDOWS_API: StrategySpec(StrategyId.WINDOWS_API.value,
                                         'Windows API-Specific Transformation', WINDOWS_API),
}

ALIASES = {
    'optimisation': StrategyId.OPTIMIZATION,
    'optimize': StrategyId.OPTIMIZATION,
    'code_quality': StrategyId.QUALITY,
    'reliability': StrategyId.QUALITY,
    'reuse': StrategyId.REUSABILITY,
    'windows': StrategyId.WINDOWS_API,
    'windowsapi': StrategyId.WINDOWS_API,
    'winapi': StrategyId.WINDOWS_API,
}


def _canonical(token):
    return re.sub(r'[\s\-]+', '_', str(token).strip().lower())


def custom_strategies():
    return {
        _canonical(name): StrategySpec(_canonical(name), str(name), fragment, builtin=False)
        for name, fragment in getattr(settings, 'CODEMORPH_CUSTOM_STRATEGIES', {}).items()
    }


def parse_strategy_id(token):
    """
    Canonicalise a CLI/config token to a strategy id, case-insensitively.

    :param token: e.g. "Security", "windows-api", or a custom strategy name
    :return: str id
    """
    key = _canonical(token)
    try:
        return StrategyId(key).value
    except ValueError:
        pass
    if key in ALIASES:
        return ALIASES[key].value
    if key in custom_strategies():
        return key
    raise UnknownStrategy(f'unknown strategy: {token!r}', strategy=str(token))


def get_strategy(strategy_id):
    key = parse_strategy_id(strategy_id)
    try:
        return CATALOG[StrategyId(key)]
    except ValueError:
        return custom_strategies()[key]


def list_strategies():
    return list(CATALOG.values()) + list(custom_strategies().values())
