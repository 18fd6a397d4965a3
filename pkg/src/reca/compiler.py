"""Monitor and one-pass compiler.

The monitor scans cards for a control line: a leading C echoes the card
as commentary, a leading * introduces command letters (I O T E N S), and
any card is abandoned the moment a left parenthesis appears, which starts
compilation.

The compiler translates the parenthesized expression directly into
threaded code in the program store, resolving forward branches through
backpatch chains.  A program ends at the level-zero right parenthesis,
followed by three name characters: a blank first character executes the
program immediately, otherwise the name is bound as a subroutine; an L in
the third position prints the object-code listing.
"""

from . import charset, numio, tables
from .store import RECURSIVE_MARK
from .tables import DECLARED_RECURSIVE, Subroutine

_MONITOR = tables.monitor_table()

# compile outcomes
CONTINUE = 0
IMMEDIATE = 1
DEFINED = 2

# diagnostic codes
EXCESS_NESTING = -1
STORE_OVERFLOW = -2
BAD_ARGUMENT = -6
BAD_LEVEL_ZERO = -7
BAD_COUNTER = -8
BAD_UNIT = -9
CONSTANT_EXCESS = -10
BAD_NUMBER = -11
RESERVED_OP = -15


class Terminated(Exception):
    """The monitor saw the terminate command."""


def monitor(sess):
    """Scan cards until compilation starts; returns when ( is consumed."""
    sess.error_flag = 1
    while True:
        sess.reader.force_refill()
        w = sess.read_echo()
        if w == charset.LETTER_C:
            for _ in range(79):
                sess.read_echo()
            sess.flush()
            continue
        if w == charset.STAR:
            break
        # not a control card: drop the partial echo and try the next card
        sess.writer.clear()
    while True:
        w = sess.read_char()
        if w == charset.LPAREN:
            _begin_program(sess)
            return
        sess.put_char(w)
        command = _MONITOR[charset.class_code(w)]
        if command == 0:
            continue
        arg = sess.read_char()
        if arg == charset.LPAREN:
            _begin_program(sess)
            return
        sess.put_char(arg)
        code = charset.class_code(arg)
        if command == tables.MON_INPUT:
            if code in (51, 55):  # glyphs 2 and 6
                sess.input_unit = code - 49
            else:
                sess.diagnose(BAD_UNIT)
        elif command == tables.MON_OUTPUT:
            if 50 <= code <= 52:  # glyphs 1..3
                sess.output_unit = code - 49
            else:
                sess.diagnose(BAD_UNIT)
        elif command == tables.MON_TERMINATE:
            sess.flush()
            raise Terminated
        elif command == tables.MON_ERASE:
            sess.store.ilc = 1
            sess.compile_code = tables.compile_table()
            sess.exec_code = tables.exec_table()
            sess.constants_used = 0
            sess.constants_committed = 0
        elif command == tables.MON_RECURSIVE:
            if sess.compile_code[code] == tables.QUOTE_PREFIX:
                w2 = sess.read_char()
                sess.put_char(w2)
                code = tables.quote_extend(charset.class_code(w2))
            sess.compile_code[code] = tables.PREDICATE
            sess.exec_code[code] = DECLARED_RECURSIVE
        elif command == tables.MON_SUPPRESS:
            sess.writer.echo = False


def _begin_program(sess):
    """Left parenthesis at level zero: open the program frame."""
    sess.put_char(charset.LPAREN)
    sess.flush()
    st = sess.store
    st.ilc0 = st.ilc
    st.emit(0)
    sess.frames = [[st.ilc, 0, 0]]  # [loop target, false chain, true chain]


def compile_program(sess):
    """Compile until the program completes or a diagnostic aborts it.

    Returns IMMEDIATE when the finished program should run now, DEFINED
    when it was bound to a name, or a negative diagnostic code.
    """
    st = sess.store
    while True:
        if st.ilc > 495:
            return _abort(sess, STORE_OVERFLOW)
        code = charset.class_code(sess.read_echo())
        while True:
            cls = sess.compile_code[code]
            if cls == tables.QUOTE_PREFIX:
                code = tables.quote_extend(charset.class_code(sess.read_echo()))
                continue
            break
        if cls == tables.IGNORE:
            continue
        if cls == tables.OPEN:
            if len(sess.frames) >= 10:
                return _abort(sess, EXCESS_NESTING)
            sess.frames.append([st.ilc, 0, 0])
        elif cls == tables.CLOSE:
            outcome = _close_paren(sess)
            if outcome == CONTINUE:
                continue
            if outcome < 0:
                return _abort(sess, outcome)
            return outcome
        elif cls == tables.SEQUENT:
            frame = sess.frames[-1]
            st.cells[st.ilc] = frame[2]
            frame[2] = st.ilc
            st.ilc += 1
            st.fill_chain(frame[1], st.ilc)
            frame[1] = 0
        elif cls == tables.REPEAT:
            frame = sess.frames[-1]
            st.cells[st.ilc] = frame[0]
            st.ilc += 1
            st.fill_chain(frame[1], st.ilc)
            frame[1] = 0
        elif cls == tables.OPERATOR:
            st.emit(-code)
        elif cls == tables.OPERATOR_NUM:
            err = _emit_atom(sess, code, n_args=1, numeric=True, link=False)
            if err:
                return _abort(sess, err)
        elif cls == tables.PREDICATE:
            _emit_atom(sess, code, n_args=0, numeric=False, link=True)
        elif cls == tables.CHAR_PRED:
            _emit_atom(sess, code, n_args=1, numeric=False, link=True)
        elif cls == tables.COUNTER:
            err = _compile_counter(sess, code)
            if err:
                return _abort(sess, err)
        elif cls == tables.CONSTANT:
            err = _compile_constant(sess, code)
            if err:
                return _abort(sess, err)
        elif cls == tables.COMMENT:
            while sess.read_echo() != charset.QUOTE:
                pass
        elif cls == tables.STRING:
            err = _compile_string(sess, code)
            if err:
                return _abort(sess, err)
        else:  # RESERVED
            return _abort(sess, RESERVED_OP)


def _abort(sess, code):
    sess.diagnose(code)
    sess.flush()
    if sess.output_unit == 3:
        sess.page_eject()
    return code


def _close_paren(sess):
    st = sess.store
    frames = sess.frames
    if len(frames) > 1:
        # thread this exit into the enclosing frame's false chain
        parent = frames[-2]
        st.cells[st.ilc] = parent[1]
        parent[1] = st.ilc
    st.ilc += 1
    frame = frames.pop()
    st.fill_chain(frame[1], st.ilc)
    st.fill_chain(frame[2], st.ilc)
    if frames:
        return CONTINUE
    # level zero: seal the program and read the three name characters
    st.cells[st.ilc - 1] = 0
    st.cells[st.ilc] = st.ilc0
    name1 = charset.class_code(sess.read_echo())
    name2 = tables.quote_extend(charset.class_code(sess.read_echo()))
    name3 = sess.read_echo()
    sess.flush()
    if name3 == charset.LETTER_L or sess.listing_always:
        for line in st.dump_listing(st.ilc0, st.ilc):
            sess.emit_line(line)
    st.ilc += 1
    if name1 == 1:  # blank name: run it now
        sess.constants_used = sess.constants_committed
        sess.writer.echo = True
        return IMMEDIATE
    if sess.compile_code[name1] == tables.QUOTE_PREFIX:
        name1 = name2
    sess.compile_code[name1] = tables.PREDICATE
    recursive = sess.exec_code[name1] is DECLARED_RECURSIVE
    sess.exec_code[name1] = Subroutine(st.ilc0, recursive)
    if recursive:
        st.cells[st.ilc0] = RECURSIVE_MARK
    sess.constants_committed = sess.constants_used
    st.ilc0 = st.ilc
    st.emit(0)
    sess.frames = [[st.ilc, 0, 0]]
    # a further program must follow on this or a later card
    while True:
        w = sess.read_char()
        if w == charset.LPAREN:
            sess.put_char(w)
            return CONTINUE
        if w != charset.BLANK:
            return BAD_LEVEL_ZERO


def _emit_atom(sess, code, n_args, numeric, link):
    """Emit an operator cell, its argument cells, and an optional link."""
    st = sess.store
    st.emit(-code)
    for _ in range(n_args):
        w = sess.read_echo()
        if numeric:
            c = charset.class_code(w)
            if not 49 <= c <= 58:
                return BAD_ARGUMENT
            if c == 49:
                c += 10  # the glyph 0 selects slot ten
            st.emit(c - 49)
        else:
            st.emit(w)
    if link:
        frame = sess.frames[-1]
        st.cells[st.ilc] = frame[1]
        frame[1] = st.ilc
        st.ilc += 1
    return 0


def _compile_counter(sess, code):
    """$n$ becomes [op, -n, -n, link]; the middle cell is the live count."""
    st = sess.store
    st.emit(-code)
    n = numio.parse_number(sess, numio.ECHO_INT)
    if n <= 0:
        return BAD_COUNTER
    st.emit(-n)
    st.emit(-n)
    frame = sess.frames[-1]
    st.cells[st.ilc] = frame[1]
    frame[1] = st.ilc
    st.ilc += 1
    return 0


def _compile_constant(sess, code):
    """'/number' becomes [op, pool slot]; the value goes to the pool."""
    st = sess.store
    st.emit(-code)
    value = numio.parse_number(sess, numio.ECHO_FLOAT)
    while sess.iac == charset.BLANK:
        sess.read_echo()
    if sess.iac != charset.QUOTE:
        return BAD_NUMBER
    sess.constants_used += 1
    st.emit(sess.constants_used)
    if sess.constants_used > len(sess.constants) - 1:
        return CONSTANT_EXCESS
    sess.constants[sess.constants_used] = value
    return 0


def _compile_string(sess, code):
    """"text' becomes [op, length, the characters verbatim]."""
    st = sess.store
    st.emit(-code)
    count_cell = st.ilc
    st.ilc += 1
    n = 0
    while True:
        w = sess.read_echo()
        if w == charset.QUOTE:
            st.cells[count_cell] = n
            return 0
        st.emit(w)
        n += 1
        if st.ilc > 496:
            return STORE_OVERFLOW
