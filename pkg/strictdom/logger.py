"""Module-level leveled logger.

Everything goes to stderr: stdout belongs to the reports the command line
front-end prints.
"""
import sys
import warnings

from strictdom.utils import colorize

DEBUG = 10
INFO = 20
WARN = 30
ERROR = 40
DISABLED = 50

MIN_LEVEL = WARN

def set_level(level):
    """
    Set logging threshold on current logger.
    """
    global MIN_LEVEL
    MIN_LEVEL = level

def level_from_verbosity(count):
    """Map a count of -v flags to a threshold: 0 -> WARN, 1 -> INFO, 2+ -> DEBUG."""
    if count <= 0:
        return WARN
    return INFO if count == 1 else DEBUG

def debug(msg, *args):
    if MIN_LEVEL <= DEBUG:
        print('%s: %s' % ('DEBUG', msg % args), file=sys.stderr)

def info(msg, *args):
    if MIN_LEVEL <= INFO:
        print('%s: %s' % ('INFO', msg % args), file=sys.stderr)

def warn(msg, *args):
    if MIN_LEVEL <= WARN:
        warnings.warn(colorize('%s: %s' % ('WARN', msg % args), 'yellow'))

def error(msg, *args):
    if MIN_LEVEL <= ERROR:
        print(colorize('%s: %s' % ('ERROR', msg % args), 'red'), file=sys.stderr)
