import json
import logging
import sys


class Console:
    """Buffered output sink for command results.

    Lines are collected and written to the stream in one chunk on flush, so a
    command's output appears whole even when it fails halfway.
    """

    def __init__(self, stream=None):
        self.stream = stream if stream is not None else sys.stdout
        self._buffer = []

    def append_to_console(self, text):
        self._buffer.append(text)
        logging.debug(f"console: {text}")

    def append_json(self, document):
        self.append_to_console(json.dumps(document, ensure_ascii=False))

    def flush_buffer(self):
        if not self._buffer:
            return
        try:
            chunk = "\n".join(self._buffer)
            self._buffer.clear()
            self.stream.write(chunk + "\n")
            self.stream.flush()
        except Exception as e:
            logging.error(f"Error flushing console buffer: {str(e)}")
