"""Compute pi by Simpson's rule over 4 / (1 + x^2) on [0, 1].

Three definitions build on each other: Y evaluates the integrand, a
second program walks the quadrature nodes accumulating the weighted sum
(defined recursively so it can call itself for the half-step points),
and the immediate main program scales by h/3 and prints the result with
a string label.  The expected output line is PI= 3.14159E 00.
"""

from reca import decks
from reca.session import run_deck

if __name__ == "__main__":
    sess, status = run_deck(decks.SIMPSON_PI)
    for line in sess.output:
        if line != "\f":
            print(line)
    raise SystemExit(status)
