import logging
import sys

import cli

if __name__ == '__main__':
    # stdout carries results only; log records go to stderr
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format='%(asctime)s - %(levelname)s - %(message)s')
    sys.exit(cli.run(sys.argv[1:]))
