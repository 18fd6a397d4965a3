"""Threaded-code interpreter.

Execution walks the program store from the entry cell of the most recent
program.  Negative cells invoke operations, positive cells are jumps (or
inline arguments consumed by the preceding operation), and a zero cell
returns through the entry of the enclosing program.  Nonrecursive calls
store the return address in the callee's entry cell; recursive callees
carry a sentinel in the entry and use a pushdown return stack instead.

All arithmetic is float32.  The loop is deliberately flat: operation
dispatch happens a couple of hundred thousand times a second in the
larger demo programs, so everything hot is a local.
"""

import math
import struct

from . import charset, numio
from .iosys import ARITHMETIC_FAULT, INTERRUPT_NOTICE
from .store import RECURSIVE_MARK
from .tables import DECLARED_RECURSIVE

# diagnostic codes
DEEP_RECURSION = -3
STACK_EMPTY = -4
STACK_OVERFLOW = -5
BAD_DATUM = -11
UNDEFINED_RECURSIVE = -12
UNDEFINED_CALL = -13

STACK_LIMIT = 200
RECURSION_LIMIT = 100
NEAR_ZERO = numio.f32(5.0e-6)
_INF = float("inf")

_pack = struct.pack
_unpack = struct.unpack


def _read_datum(sess):
    """Runtime numeric input: blanks, then '/number' ; None on bad shape."""
    while True:
        w = sess.read_char()
        if w != charset.BLANK:
            break
    if w != charset.QUOTE:
        return None
    if sess.read_char() != charset.SLASH:
        return None
    value = numio.parse_number(sess, numio.SILENT_FLOAT)
    while sess.iac == charset.BLANK:
        sess.read_char()
    if sess.iac != charset.QUOTE:
        return None
    return value


def execute(sess):
    """Run the most recently compiled program; returns the diagnostic code
    (0 for a clean finish)."""
    st = sess.store
    prog = st.cells
    xeq = sess.exec_code
    pdl = sess.stack
    save = sess.variables
    const = sess.constants
    ilc0 = st.ilc0
    im = sess.stack_top
    iret = [0] * (RECURSION_LIMIT + 2)
    irec = 1
    ixl = ilc0 + 1
    steps = 0
    budget = sess.max_steps if sess.max_steps is not None else float("inf")
    error = 0
    pack = _pack
    unpack = _unpack
    cos, sin, exp, sqrt, log, atan, tanh, pow_ = (
        math.cos, math.sin, math.exp, math.sqrt, math.log, math.atan, math.tanh,
        math.pow,
    )
    try:
        while True:
            if ixl == ilc0:
                break
            cell = prog[ixl]
            if cell < 0:
                ix = -cell
                ixl += 1
                steps += 1
                if sess.cancelled or steps > budget:
                    sess.cancelled = False
                    sess.emit_line(INTERRUPT_NOTICE)
                    break
                b = xeq[ix]
                if type(b) is int:
                    if b == 0:
                        error = UNDEFINED_CALL
                        break
                    if b <= 13:  # unary and tests
                        if im <= 1:
                            error = STACK_EMPTY
                            break
                        a = pdl[im - 1]
                        if b == 6:  # branch unless negative
                            if a < 0:
                                ixl += 1
                        elif b == 9:  # store to variable, value kept
                            save[prog[ixl]] = a
                            ixl += 1
                        elif b == 7:
                            numio.format_scientific(sess, a)
                        elif b == 13:  # branch unless near zero
                            if (a if a >= 0 else -a) <= NEAR_ZERO:
                                ixl += 1
                        elif b == 5:
                            pdl[im - 1] = -a
                        elif b == 1:
                            pdl[im - 1] = a if a >= 0 else -a
                        elif b == 12:
                            pdl[im - 1] = unpack("f", pack("f", sin(a)))[0]
                        elif b == 2:
                            pdl[im - 1] = unpack("f", pack("f", cos(a)))[0]
                        elif b == 3:
                            a = unpack("f", pack("f", exp(a)))[0]
                            if a == _INF:
                                raise OverflowError("float32 range exceeded")
                            pdl[im - 1] = a
                        elif b == 8:
                            pdl[im - 1] = unpack("f", pack("f", sqrt(a)))[0]
                        elif b == 11:
                            pdl[im - 1] = unpack("f", pack("f", log(a)))[0]
                        elif b == 10:
                            pdl[im - 1] = unpack("f", pack("f", atan(a)))[0]
                        else:  # 4
                            pdl[im - 1] = unpack("f", pack("f", tanh(a)))[0]
                    elif b <= 19:  # binary
                        if im <= 2:
                            error = STACK_EMPTY
                            break
                        im -= 1
                        y = pdl[im]
                        if b == 18:  # branch unless top two nearly equal
                            im += 1
                            d = pdl[im - 1] - pdl[im - 2]
                            if (d if d >= 0 else -d) <= NEAR_ZERO:
                                ixl += 1
                        else:
                            x = pdl[im - 1]
                            if b == 17:
                                r = x * y
                            elif b == 15:
                                r = x + y
                            elif b == 16:
                                r = x - y
                            elif b == 19:
                                r = x / y
                            else:  # 14: power, ValueError on a bad domain
                                r = pow_(x, y)
                            r = unpack("f", pack("f", r))[0]
                            # packing saturates silently, so range-check here
                            if not -3.5e38 < r < 3.5e38:
                                raise OverflowError("float32 range exceeded")
                            pdl[im - 1] = r
                    elif b <= 23:  # operations that push
                        if im > STACK_LIMIT:
                            error = STACK_OVERFLOW
                            break
                        im += 1
                        if b == 21:  # variable fetch
                            pdl[im - 1] = save[prog[ixl]]
                            ixl += 1
                        elif b == 20:  # constant fetch
                            pdl[im - 1] = const[prog[ixl]]
                            ixl += 1
                        elif b == 23:  # duplicate the value below
                            if im <= 2:
                                error = STACK_EMPTY
                                break
                            pdl[im - 1] = pdl[im - 2]
                        else:  # 22: numeric input
                            value = _read_datum(sess)
                            if value is None:
                                error = BAD_DATUM
                                break
                            pdl[im - 1] = value
                    elif b == 29:  # counter
                        ixl += 1
                        k = prog[ixl]
                        if k < 0:
                            prog[ixl] = k + 1
                            ixl += 2  # still counting: skip the false link
                        else:
                            prog[ixl] = prog[ixl - 1]  # reload and fall false
                            ixl += 1
                    elif b == 26:  # emit stored string
                        n = prog[ixl]
                        for _ in range(n):
                            ixl += 1
                            sess.iac = prog[ixl]
                            sess.put_char(sess.iac)
                        ixl += 1
                    elif b == 27:  # branch if last character matches
                        if sess.iac == prog[ixl]:
                            ixl += 2
                        else:
                            ixl += 1
                    elif b == 24:
                        sess.read_char()
                    elif b == 25:
                        sess.put_char(sess.iac)
                    elif b == 28:
                        sess.flush()
                    elif b == 30:
                        if im > 1:
                            im -= 1
                elif b is DECLARED_RECURSIVE:
                    error = UNDEFINED_RECURSIVE
                    break
                else:  # call a defined subroutine
                    entry = b.entry
                    if b.recursive:
                        if irec > RECURSION_LIMIT:
                            error = DEEP_RECURSION
                            break
                        iret[irec] = ixl + 1
                        irec += 1
                    else:
                        prog[entry] = ixl + 1
                    ixl = entry + 1
            elif cell > 0:  # jump
                ixl = cell
                if ixl >= RECURSIVE_MARK:
                    irec -= 1
                    ixl = iret[irec]
            else:  # return through the program entry
                ixl = prog[ixl + 1]
                if ixl == ilc0:
                    break
                if prog[ixl] >= RECURSIVE_MARK:
                    irec -= 1
                    ixl = iret[irec] - 1
                else:
                    ixl = prog[ixl] - 1
    except (ValueError, ZeroDivisionError, OverflowError):
        sess.emit_line(ARITHMETIC_FAULT)
        sess.errors_emitted = True
        sess.error_flag = -21
    if error < 0:
        sess.diagnose(error)
    sess.stack_top = im
    sess.flush()
    if sess.output_unit == 3:
        sess.page_eject()
    return error
