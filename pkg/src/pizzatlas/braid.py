"""Exact algebra of SL(2,Z) and its braid-group cover Br3.

A pizza piece carries a matrix in SL(2,Z) together with an integer
recording the abelianization of its braid lift.  The pair determines the
braid element uniquely (the kernel of Br3 -> SL(2,Z) is the double full
twist, which abelianizes to 12), so we never manipulate braid words
beyond reading them in.

Matrices are row-major 4-tuples (a, b, c, d).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

MAT_ID = (1, 0, 0, 1)

# Images of the standard braid generators.
GEN_A = (1, 1, 0, 1)
GEN_B = (1, 0, -1, 1)


def mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_det(m):
    return m[0] * m[3] - m[1] * m[2]


def mat_inv(m):
    """Inverse of a determinant-one matrix."""
    if mat_det(m) != 1:
        raise ValueError("not in SL(2,Z): %r" % (m,))
    a, b, c, d = m
    return (d, -b, -c, a)


def mat_apply(m, v):
    a, b, c, d = m
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def chi(m) -> int:
    """Abelianization character SL(2,Z) -> Z/12.

    Closed form in the matrix entries; the result is reduced to 0..11.
    """
    if mat_det(m) != 1:
        raise ValueError("not in SL(2,Z): %r" % (m,))
    a, b, c, d = m
    val = (1 - c * c) * (b * d + 3 * (c - 1) * d + c + 3) + c * (a + d - 3)
    return val % 12


class BraidElt(NamedTuple):
    """Element of Br3 stored as (SL(2,Z) matrix, abelianization)."""

    mat: tuple
    ab: int

    def __mul__(self, other: "BraidElt") -> "BraidElt":
        return BraidElt(mat_mul(self.mat, other.mat), self.ab + other.ab)

    def inverse(self) -> "BraidElt":
        return BraidElt(mat_inv(self.mat), -self.ab)

    def check(self) -> "BraidElt":
        if chi(self.mat) != self.ab % 12:
            raise ValueError("abelianization %d incompatible with matrix %r"
                             % (self.ab, self.mat))
        return self


BRAID_ID = BraidElt(MAT_ID, 0)

_GEN_TABLE = {
    "A": BraidElt(GEN_A, 1),
    "B": BraidElt(GEN_B, 1),
    "A-": BraidElt(mat_inv(GEN_A), -1),
    "B-": BraidElt(mat_inv(GEN_B), -1),
}


def parse_braid_word(word: str) -> list:
    """Split e.g. 'B-B-AB' into ['B-', 'B-', 'A', 'B']."""
    out = []
    i = 0
    while i < len(word):
        ch = word[i]
        if ch not in "AB":
            raise ValueError("bad braid letter %r in %r" % (ch, word))
        if i + 1 < len(word) and word[i + 1] == "-":
            out.append(ch + "-")
            i += 2
        else:
            out.append(ch)
            i += 1
    return out


def braid_from_word(word) -> BraidElt:
    """Product of generator images; A and B abelianize to +1.

    `word` is a string like 'BABA' or 'B-AB' (minus marks an inverse), or
    an iterable of such letters.
    """
    letters = parse_braid_word(word) if isinstance(word, str) else list(word)
    result = BRAID_ID
    for letter in letters:
        result = result * _GEN_TABLE[letter]
    return result


def braid_mul(x: BraidElt, y: BraidElt) -> BraidElt:
    return x * y


def braid_prod(elts: Iterable[BraidElt]) -> BraidElt:
    result = BRAID_ID
    for e in elts:
        result = result * e
    return result


def backwards(x: BraidElt) -> BraidElt:
    """The same piece read backwards: conjugated inverse matrix, same ab.

    Reflecting a piece across the y-axis reverses its braid word.  Each
    generator g satisfies J g^-1 J = g with J = diag(1,-1), so the
    reversed word's matrix is J M^-1 J, and reversal fixes the generator
    counts, hence ab.
    """
    a, b, c, d = mat_inv(x.mat)
    return BraidElt((a, -b, -c, d), x.ab)


def is_valid_pizza_product(seq: Iterable[BraidElt]) -> bool:
    """True iff the pieces multiply to the identity with one full twist.

    A gluable single-layer pizza must have matrix product I and
    abelianizations summing to exactly 12.
    """
    p = braid_prod(seq)
    return p.mat == MAT_ID and p.ab == 12
