"""Session state and the monitor / compile / execute cycle.

A session owns the program store, the dispatch tables, the value stack,
the ten variables, the constant pool, and the shared card reader and line
writer.  Definitions, variables, and stack contents persist across the
programs of one session; the store grows until erased.

The cycle runs forever: scan cards for a program, compile it, run it if
its name is blank, and go round again.  A compile diagnostic discards the
partial program (the store cursor snaps back) but keeps earlier
definitions.  The terminate command, or simply running out of cards, ends
the session.
"""

from dataclasses import dataclass, field

from . import compiler, interpreter, tables
from .iosys import PAGE_EJECT, CardReader, EndOfInput, LineWriter
from .store import ProgramStore


@dataclass
class SessionConfig:
    width: int = 120          # line-printer width, 80 or 120
    echo: bool = True         # startup listing of source characters
    max_steps: int | None = None
    listing_always: bool = False
    strict_charset: bool = False


class Session:
    def __init__(self, cards=None, keyboard=None, config=None, on_line=None):
        """cards/keyboard are callables or iterables yielding source lines
        for the card and keyboard units; on_line, if given, sees each
        completed output line as (unit, text)."""
        cfg = config or SessionConfig()
        self.config = cfg
        sources = {}
        if cards is not None:
            sources[2] = self._as_source(cards)
        if keyboard is not None:
            sources[6] = self._as_source(keyboard)
        self.reader = CardReader(sources, strict=cfg.strict_charset)
        self.writer = LineWriter(self._sink, widths={3: cfg.width})
        self.on_line = on_line
        self.output = []          # lines written to printer units
        self.punch = []           # lines written to the card punch
        self.store = ProgramStore()
        self.compile_code = tables.compile_table()
        self.exec_code = tables.exec_table()
        self.frames = []          # open parenthesis levels during compile
        self.stack = [0.0] * (interpreter.STACK_LIMIT + 2)
        self.stack_top = 1
        self.variables = [0.0] * 11   # slots 1..10
        self.constants = [0.0] * 31   # slots 1..30
        self.constants_used = 0
        self.constants_committed = 0
        self.input_unit = 2 if cards is not None else 6
        self.output_unit = 3
        self.iac = 0              # last character read or emitted by name
        self.error_flag = 1
        self.errors_emitted = False
        self.cancelled = False
        self.max_steps = cfg.max_steps
        self.listing_always = cfg.listing_always
        self._echo_default = cfg.echo

    @staticmethod
    def _as_source(lines):
        if callable(lines):
            return lines
        it = iter(lines)

        def pull():
            return next(it, None)

        return pull

    # character and line plumbing shared by all phases

    def _sink(self, unit, text):
        if unit == 2:
            self.punch.append(text)
        else:
            self.output.append(text)
        if self.on_line:
            self.on_line(unit, text)

    def read_char(self):
        w = self.reader.read(self.input_unit)
        self.iac = w
        return w

    def put_char(self, word):
        self.writer.put(word, self.output_unit)

    def read_echo(self):
        w = self.read_char()
        self.put_char(w)
        return w

    def flush(self):
        self.writer.flush(self.output_unit)

    def emit_line(self, text):
        self.writer.emit_text(text, self.output_unit)

    def page_eject(self):
        self.writer.emit_text(PAGE_EJECT, self.output_unit)

    def diagnose(self, code):
        self.error_flag = code
        self.errors_emitted = True
        self.writer.emit_message(code, self.output_unit)

    # the top-level cycle

    def cycle(self):
        """One monitor / compile / execute round.  Returns False when the
        session is over."""
        try:
            while True:
                self.store.ilc = self.store.ilc0
                self.writer.echo = self._echo_default
                compiler.monitor(self)
                outcome = compiler.compile_program(self)
                if outcome == compiler.IMMEDIATE:
                    break
                # diagnostic: partial program dropped, try the next cards
            interpreter.execute(self)
            self.stack_top = 1
            return True
        except (compiler.Terminated, EndOfInput):
            self.flush()
            return False

    def run(self):
        """Cycle until the deck ends; returns a process-style status."""
        while self.cycle():
            pass
        return 1 if self.errors_emitted else 0


def run_deck(deck, config=None, on_line=None):
    """Run a deck (a string or an iterable of source lines); returns
    (session, status)."""
    lines = deck.splitlines() if isinstance(deck, str) else list(deck)
    sess = Session(cards=lines, config=config, on_line=on_line)
    status = sess.run()
    return sess, status
