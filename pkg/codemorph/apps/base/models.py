from dataclasses import dataclass, field

import arrow


def timestamp(moment=None):
    """
    ISO-8601 UTC timestamp.

    :param moment: anything arrow understands; defaults to now
    :return: str
    """
    moment = arrow.utcnow() if moment is None else arrow.get(moment)
    return moment.to('UTC').isoformat()


def hours_between(start, end):
    return (arrow.get(end) - arrow.get(start)).total_seconds() / 3600


@dataclass(kw_only=True)
class AbstractRecord:
    created_at: str = field(default_factory=timestamp)
    modified_at: str = field(default_factory=timestamp)

    def touch(self):
        self.modified_at = timestamp()
