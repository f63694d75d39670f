import hashlib
from dataclasses import dataclass


@dataclass(frozen=True)
class PromptBundle:
    system_text: str
    user_text: str
    target_names: tuple
    strategy: str
    token_estimate: int
    language: str

    def render(self):
        """ audit/golden form: system prompt, blank line, user prompt. """
        return f'{self.system_text}\n\n{self.user_text}\n'

    @property
    def digest(self):
        blob = f'{self.system_text}\0{self.user_text}'.encode('utf-8', 'surrogateescape')
        return hashlib.sha256(blob).hexdigest()[:24]

    @property
    def messages(self):
        return [
            {'role': 'system', 'content': self.system_text},
            {'role': 'user', 'content': self.user_text},
        ]
