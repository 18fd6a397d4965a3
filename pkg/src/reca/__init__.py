"""Card-deck expression compiler and threaded-code interpreter.

A complete small programming system in the style of early minicomputer
conversational compilers: an operator language over a float32 value
stack, compiled one pass into threaded code and executed immediately or
bound to single-character subroutine names.
"""

from . import decks
from .charset import CharsetError
from .iosys import MESSAGES, EndOfInput
from .numio import f32, format_number, parse_text
from .session import Session, SessionConfig, run_deck

__all__ = [
    "CharsetError",
    "EndOfInput",
    "MESSAGES",
    "Session",
    "SessionConfig",
    "decks",
    "f32",
    "format_number",
    "parse_text",
    "run_deck",
]

__version__ = "0.1.0"
