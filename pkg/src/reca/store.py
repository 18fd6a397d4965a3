"""Threaded program store.

Compiled programs live in one array of 500 signed words, 1-indexed like
the machine it models.  Cell meanings:

* negative      - operator: call the routine bound to class code -cell
* 0             - program entry cell (also: not-yet-linked chain end)
* positive 2000 - marks a recursive entry; return address is popped
* other positive- jump target, or an inline argument cell skipped by its
                  operator

Forward references are kept as chains: each pending jump cell holds the
address of the previous pending cell (0 ends the chain) until the target
is known and the whole chain is filled in one sweep.
"""

CAPACITY = 500
RECURSIVE_MARK = 2000


class ProgramStore:
    def __init__(self):
        # index 0 unused; a little headroom past CAPACITY for the cells a
        # compile step may write before the next capacity check fires
        self.cells = [0] * (CAPACITY + 8)
        self.ilc = 1    # next free cell
        self.ilc0 = 1   # entry cell of the program being compiled

    def emit(self, value):
        """Store value at the next free cell and return its address."""
        addr = self.ilc
        self.cells[addr] = value
        self.ilc += 1
        return addr

    def fill_chain(self, head, target):
        """Resolve a forward-reference chain to point at target."""
        cells = self.cells
        while head != 0:
            following = cells[head]
            cells[head] = target
            head = following

    def dump_listing(self, first, last):
        """Cells first..last inclusive as lines of 11 width-7 integers."""
        values = self.cells[first:last + 1]
        return [
            "".join(f"{v:7d}" for v in values[i:i + 11])
            for i in range(0, len(values), 11)
        ]

    def check_integrity(self, first, last):
        """Sanity-check a compiled region of argument-free code.

        first is the entry cell, last the cell holding the entry address.
        Every positive cell below the recursion mark must point inside the
        occupied store, and the only zero cells are the entry and the
        false-exit cell just before the terminal.  Raises AssertionError
        with a description on violation.
        """
        cells = self.cells
        assert cells[first] in (0, RECURSIVE_MARK), \
            f"cell {first}: entry is {cells[first]}"
        assert cells[last] == first, \
            f"cell {last}: terminal points at {cells[last]}, not {first}"
        assert cells[last - 1] == 0, \
            f"cell {last - 1}: false exit not zero"
        for addr in range(first + 1, last):
            v = cells[addr]
            if v == 0 and addr != last - 1:
                raise AssertionError(f"cell {addr}: unresolved chain link")
            if 0 < v < RECURSIVE_MARK and not first < v <= last:
                raise AssertionError(f"cell {addr}: jump to {v} outside program")
