import json
import logging


class JsonLinesFormatter(logging.Formatter):
    """ one JSON object per record, so logs compose with CLI diagnostics. """

    def format(self, record):
        payload = {
            'level': record.levelname.lower(),
            'logger': record.name,
            'message': record.getMessage(),
        }
        if record.exc_info:
            payload['traceback'] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)
