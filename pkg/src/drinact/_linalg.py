"""Incremental linear algebra over F_q.

LinearCombiner tracks the span of a growing family of vectors and, when a
newly added vector is dependent, reports the combination over the previously
added ones.  That single primitive covers every linear solve in the package:
solving M z = b is "add the columns of M, then add b and read the combo",
and finding the first linear relation in a sequence is "add until a combo
comes back".

Vectors over F_2 are ints (bit i = coordinate i); over odd q they are
sequences of residues, all of the same length.
"""

from __future__ import annotations


class LinearCombiner:
    """Echelonized span with dependency extraction.

    add(vec) returns None when vec is independent of everything added so
    far (vec then joins the span), or a list c of length equal to the number
    of previous adds with vec = sum(c[i] * v_i).  Dependent vectors never
    join the span, so they cannot appear in later combinations.
    """

    __slots__ = ("q", "_rows", "_count")

    def __init__(self, q: int):
        self.q = q
        self._rows = {}  # pivot index -> (vector, representation over added vectors)
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec):
        if self.q == 2:
            return self._add2(vec)
        return self._addq(vec)

    def _add2(self, vec: int):
        rows = self._rows
        r = vec
        rep = 0
        while r:
            p = r.bit_length() - 1
            hit = rows.get(p)
            if hit is None:
                break
            r ^= hit[0]
            rep ^= hit[1]
        idx = self._count
        self._count = idx + 1
        if r == 0:
            return [(rep >> i) & 1 for i in range(idx)]
        rows[r.bit_length() - 1] = (r, rep | (1 << idx))
        return None

    def _addq(self, vec):
        q = self.q
        rows = self._rows
        r = list(vec)
        rep: dict[int, int] = {}
        while True:
            p = len(r) - 1
            while p >= 0 and r[p] == 0:
                p -= 1
            if p < 0 or p not in rows:
                break
            row, rrep = rows[p]
            c = r[p]  # row is normalized with row[p] == 1
            for i in range(p + 1):
                r[i] = (r[i] - c * row[i]) % q
            for i, coef in rrep.items():
                rep[i] = (rep.get(i, 0) + c * coef) % q
        idx = self._count
        self._count = idx + 1
        if p < 0:
            return [rep.get(i, 0) % q for i in range(idx)]
        inv = pow(r[p], -1, q)
        row = [(inv * x) % q for x in r]
        rrep = {i: (-inv * coef) % q for i, coef in rep.items() if coef}
        rrep[idx] = inv
        rows[p] = (row, rrep)
        return None
