"""Recursive factorial, defined as a subroutine and driven by a counter.

The deck declares 'R recursive, defines it (n <= 0 gives 1, otherwise
n * (n-1)!), and then runs an immediate program that prints n and n!
for n = 1..10.  The definition carries a listing request, so the
threaded object code is printed as well: each operation is a negative
cell, each branch target a positive one.
"""

from reca import decks
from reca.session import run_deck

if __name__ == "__main__":
    for card in decks.FACTORIAL:
        print("card |", card)
    print()
    sess, status = run_deck(decks.FACTORIAL)
    for line in sess.output:
        if line != "\f":
            print(line)
    raise SystemExit(status)
