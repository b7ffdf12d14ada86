"""Common utilities: terminal colors, seeding, exact numerals and JSON
helpers. These are not intended as API functions.
"""

# No import-time dependencies beyond the standard library here: the logger
# imports this package before anything else is loaded.
from .colorize import colorize
