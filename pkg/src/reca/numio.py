"""Numeric conversion between card characters and 32-bit floats.

All runtime arithmetic is IEEE single precision: every intermediate value
is rounded through float32 so results are reproducible bit for bit.  The
parser consumes characters from the session's reader and leaves the
terminating character latched in sess.iac without consuming it into the
token.  The formatter writes the fixed 13-character scientific form
[blank][sign]d.dddddE[sign]dd through the session's line buffer.
"""

import struct

from . import charset

_pack = struct.pack
_unpack = struct.unpack


def f32(x):
    """Round a Python float to the nearest IEEE single precision value."""
    return _unpack("f", _pack("f", x))[0]


ROUND_HALF_DIGIT = f32(5.0e-6)  # rounding bias added before digit extraction

# parse modes
SILENT_FLOAT = 0
ECHO_FLOAT = 1
ECHO_INT = 2


def parse_number(sess, mode):
    """Read one number from the session input; return its value.

    mode SILENT_FLOAT parses a float without echoing, ECHO_FLOAT echoes
    while parsing, ECHO_INT parses an integer (always echoed).  The first
    character after the token stays latched in sess.iac.

    Accepted float shape: blanks, optional sign (- + &), digits with at
    most one point, optional exponent E[sign]digits.  Anything else ends
    the token; an empty token is zero.
    """
    if mode == ECHO_INT:
        return _parse_int(sess)
    writer = sess.writer
    saved_echo = writer.echo
    if mode == SILENT_FLOAT:
        writer.echo = False
    try:
        return _parse_float(sess)
    finally:
        writer.echo = saved_echo


def _read(sess):
    w = sess.read_char()
    sess.put_char(w)
    return w


def _parse_float(sess):
    sign = 1.0
    exp_sign = 1
    exponent = 0
    frac = 0  # 0 until a point is seen, then counts characters past it
    value = 0.0
    w = _read(sess)
    while w == charset.BLANK:
        w = _read(sess)
    if w == charset.MINUS:
        sign = -1.0
        w = _read(sess)
    elif w in (charset.PLUS, charset.AMPERSAND):
        w = _read(sess)
    while True:
        if frac > 0:
            frac += 1
        elif w == charset.DOT:
            frac += 1
            w = _read(sess)
            continue
        if w == charset.LETTER_E:
            w = _read(sess)
            if w == charset.MINUS:
                exp_sign = -1
                w = _read(sess)
            elif w in (charset.PLUS, charset.AMPERSAND):
                w = _read(sess)
            while charset.is_digit_word(w):
                exponent = 10 * exponent + charset.digit_value(w)
                w = _read(sess)
            break
        if charset.is_digit_word(w):
            value = f32(value * 10.0 + charset.digit_value(w))
            w = _read(sess)
            continue
        break
    if frac > 0:
        frac -= 2  # point and terminator were both counted
    exponent = exp_sign * exponent - frac
    try:
        scale = f32(10.0 ** exponent)
    except OverflowError:
        scale = float("inf")  # out of range; arithmetic on it faults later
    return f32(sign * value * scale)


def _parse_int(sess):
    sign = 1
    value = 0
    w = _read(sess)
    while w == charset.BLANK:
        w = _read(sess)
    if w == charset.MINUS:
        sign = -1
        w = _read(sess)
    elif w in (charset.PLUS, charset.AMPERSAND):
        w = _read(sess)
    while charset.is_digit_word(w):
        value = 10 * value + charset.digit_value(w)
        w = _read(sess)
    return sign * value


def format_scientific(sess, value):
    """Append a float to the output line as [blank][sign]d.dddddE[sign]dd.

    The mantissa is normalized by repeated float32 multiplies into [1, 10)
    (overshoot then divide back, so the rounding trail matches the
    original fixed sequence), biased by half the last digit, and its six
    digits peeled off by repeated scale-and-truncate.
    """
    if value - value != 0:  # infinity or nan would never normalize
        raise OverflowError("value is not representable")
    # leave room for a full field on the line
    if len(sess.writer.buffer) > 107:
        sess.flush()
    put = sess.put_char
    k = 0
    sign = charset.MINUS if value < 0 else charset.BLANK
    put(charset.BLANK)
    v = value if value >= 0 else -value
    if v > 0:
        while v < 10.0:
            v = f32(v * 10.0)
            k -= 1
        while v >= 10.0:
            v = f32(v * 0.1)
            k += 1
    v = f32(v + ROUND_HALF_DIGIT)
    if v >= 10.0:
        # rounding carried into a new leading digit
        v = f32(v * 0.1)
        k += 1
    put(sign)
    n = int(v)
    put(charset.digit_word(n))
    put(charset.DOT)
    for _ in range(5):
        v = f32(10.0 * f32(v - n))
        n = int(v)
        put(charset.digit_word(n))
    put(charset.LETTER_E)
    if k < 0:
        put(charset.MINUS)
        k = -k
    else:
        put(charset.BLANK)
    if k > 99:
        # unreachable for float32 magnitudes, kept as a hard stop
        raise OverflowError("exponent does not fit in two digits")
    put(charset.digit_word(k // 10))
    put(charset.digit_word(k % 10))


def format_number(value):
    """Standalone formatting helper: the 13-character field as a string."""
    from .session import Session

    sess = Session(cards=iter(()))
    format_scientific(sess, f32(value))
    text = charset.decode_words(sess.writer.buffer)
    sess.writer.clear()
    return text


def parse_text(text, mode=ECHO_FLOAT):
    """Standalone parsing helper: (value, terminator character)."""
    from .session import Session

    sess = Session(cards=iter([text]))
    value = parse_number(sess, mode)
    return value, charset.char_of(sess.iac)
