"""Tabulate y = sin(3x) * exp(-0.3x) for x = 0, 0.15, ..., 7.5.

A single immediate program keeps x in variable 1, prints x and y on one
line per step, and repeats 51 times under a counter.  All arithmetic is
float32, so the printed x column drifts in the sixth digit exactly the
way repeated single-precision accumulation should.
"""

from reca import decks
from reca.session import run_deck

if __name__ == "__main__":
    sess, status = run_deck(decks.DAMPED_OSCILLATION)
    for line in sess.output:
        if line != "\f":
            print(line)
    raise SystemExit(status)
