"""Plot the implicit curve (x^2 + y^2)^5 = (8(x^2 - y^2)xy)^2.

Two nested counters sweep a 50 x 74 grid over [-2, 2] x [-2, 2].  At
each grid point the program evaluates the difference of the two sides
on the value stack and prints '*' where it is negative (inside a petal)
and a blank elsewhere, flushing one grid row per line.  The result is
an eight-petal rose drawn entirely with character output.
"""

from reca import decks
from reca.session import run_deck

if __name__ == "__main__":
    sess, status = run_deck(decks.ROSE_CURVE)
    for line in sess.output:
        if line != "\f":
            print(line)
    raise SystemExit(status)
