"""Kac-Moody Weyl groups acting on the root lattice.

Elements are integer matrices in the simple-root basis; the geometric
representation is faithful, so matrix equality is group equality and
infinite groups are safe to handle.  Convention, frozen against the G2
positive-root string {b, a, a+b, a+2b, a+3b, 2a+3b} (b short):

    a[i][j] = <alpha_j, alpha_i-vee>,   s_i(alpha_j) = alpha_j - a[i][j] alpha_i.

Coroots transform contragrediently; we carry (root, coroot) pairs so that
reflections and pairings stay exact in infinite type.
"""

from __future__ import annotations


class GCM:
    """Generalized Cartan matrix with the usual integrality constraints."""

    def __init__(self, rows):
        a = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(a)
        for i in range(n):
            if len(a[i]) != n:
                raise ValueError("matrix not square")
            if a[i][i] != 2:
                raise ValueError("diagonal entry must be 2")
            for j in range(n):
                if i != j:
                    if a[i][j] > 0:
                        raise ValueError("off-diagonal entries must be <= 0")
                    if (a[i][j] == 0) != (a[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")
        self.a = a
        self.n = n

    def __eq__(self, other):
        return isinstance(other, GCM) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return "GCM(%r)" % (self.a,)

    def is_simply_laced(self):
        return all(self.a[i][j] in (0, -1)
                   for i in range(self.n) for j in range(self.n) if i != j)


def gcm_a(n):
    """Type A_n path."""
    return GCM([[2 if i == j else (-1 if abs(i - j) == 1 else 0)
                 for j in range(n)] for i in range(n)])


def gcm_b2():
    """B2 with node 0 the short root."""
    return GCM([[2, -2], [-1, 2]])


def gcm_g2():
    """G2 with node 0 the short root."""
    return GCM([[2, -3], [-1, 2]])


def gcm_d4():
    """D4 star; node 0 is the hub."""
    return GCM([[2, -1, -1, -1], [-1, 2, 0, 0], [-1, 0, 2, 0], [-1, 0, 0, 2]])


def gcm_affine_a(n):
    """Affine A~_n on n+1 nodes arranged in a cycle (n >= 1)."""
    m = n + 1
    if n == 1:
        return GCM([[2, -2], [-2, 2]])
    rows = [[2 if i == j else 0 for j in range(m)] for i in range(m)]
    for i in range(m):
        j = (i + 1) % m
        rows[i][j] = rows[j][i] = -1
    return GCM(rows)


def gcm_rank2(p, q):
    """Rank-2 matrix [[2,-p],[-q,2]]."""
    return GCM([[2, -p], [-q, 2]])


def gcm_direct_sum(*gcms):
    """Block-diagonal GCM of a product group."""
    n = sum(g.n for g in gcms)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for g in gcms:
        for i in range(g.n):
            for j in range(g.n):
                rows[off + i][off + j] = g.a[i][j]
        off += g.n
    return GCM(rows)


GCM_PRESETS = {
    "A1": lambda: gcm_a(1), "A2": lambda: gcm_a(2), "A3": lambda: gcm_a(3),
    "A4": lambda: gcm_a(4), "B2": gcm_b2, "G2": gcm_g2, "D4": gcm_d4,
    "affA1": lambda: gcm_affine_a(1), "affA2": lambda: gcm_affine_a(2),
    "affA3": lambda: gcm_affine_a(3),
    "A1x4": lambda: gcm_direct_sum(*(gcm_a(1) for _ in range(4))),
    "A3xA1": lambda: gcm_direct_sum(gcm_a(3), gcm_a(1)),
}


def _vec_sign(v):
    """+1 for positive root vectors, -1 for negative, 0 for mixed/zero."""
    pos = any(x > 0 for x in v)
    neg = any(x < 0 for x in v)
    if pos and not neg:
        return 1
    if neg and not pos:
        return -1
    return 0


def height(v):
    return sum(v)


class CoxeterGroup:
    """Weyl group of a GCM in its crystallographic action."""

    def __init__(self, gcm: GCM):
        self.gcm = gcm
        self.n = gcm.n
        self.identity = tuple(tuple(1 if i == j else 0 for j in range(self.n))
                              for i in range(self.n))
        # column j of s_i is s_i(alpha_j) = alpha_j - a[i][j] alpha_i
        self.simple = []
        for i in range(self.n):
            cols = []
            for j in range(self.n):
                col = [1 if r == j else 0 for r in range(self.n)]
                col[i] -= gcm.a[i][j]
                cols.append(col)
            self.simple.append(tuple(tuple(cols[j][r] for j in range(self.n))
                                     for r in range(self.n)))
        self._len_cache = {self.identity: 0}
        self._root_cache = []  # (max_height, {root: coroot})
        self._finite = None

    # -- basic matrix action ------------------------------------------------

    def mul(self, w1, w2):
        n = self.n
        return tuple(tuple(sum(w1[i][k] * w2[k][j] for k in range(n))
                           for j in range(n)) for i in range(n))

    def act(self, w, v):
        n = self.n
        return tuple(sum(w[i][j] * v[j] for j in range(n)) for i in range(n))

    def from_word(self, word):
        w = self.identity
        for i in word:
            w = self.mul(w, self.simple[i])
        return w

    def inverse(self, w):
        word = self.word(w)
        return self.from_word(tuple(reversed(word)))

    # -- length, descents, words ---------------------------------------------

    def column(self, w, j):
        return tuple(w[i][j] for i in range(self.n))

    def right_descents(self, w):
        out = set()
        for i in range(self.n):
            if _vec_sign(self.column(w, i)) < 0:
                out.add(i)
        return out

    def length(self, w):
        cached = self._len_cache.get(w)
        if cached is not None:
            return cached
        path = []
        x = w
        while x not in self._len_cache:
            path.append(x)
            i = min(self.right_descents(x))
            x = self.mul(x, self.simple[i])
        base = self._len_cache[x]
        for y in reversed(path):
            base += 1
            self._len_cache[y] = base
        return self._len_cache[w]

    def word(self, w):
        """A reduced word, peeling the least right descent each step."""
        out = []
        x = w
        while x != self.identity:
            i = min(self.right_descents(x))
            out.append(i)
            x = self.mul(x, self.simple[i])
        return tuple(reversed(out))

    # -- roots and reflections -----------------------------------------------

    def pair(self, v, coroot):
        """<v, coroot> for v in root coordinates, coroot in coroot coords."""
        a = self.gcm.a
        return sum(coroot[i] * a[i][j] * v[j]
                   for i in range(self.n) for j in range(self.n))

    def positive_real_roots(self, max_height):
        """All positive real roots of height <= max_height, with coroots.

        Returns a dict root -> coroot; both in simple(-co)root coordinates.
        Imaginary roots never enter: the set is the simple-reflection
        closure of the simple roots.
        """
        if self._root_cache and self._root_cache[0] >= max_height:
            return {r: c for r, c in self._root_cache[1].items()
                    if height(r) <= max_height}
        a = self.gcm.a
        n = self.n
        roots = {}
        frontier = []
        for i in range(n):
            alpha = tuple(1 if j == i else 0 for j in range(n))
            roots[alpha] = alpha
            frontier.append((alpha, alpha))
        while frontier:
            new = []
            for root, coroot in frontier:
                for i in range(n):
                    p = sum(a[i][j] * root[j] for j in range(n))
                    r2 = list(root)
                    r2[i] -= p
                    r2 = tuple(r2)
                    if _vec_sign(r2) < 0 or height(r2) > max_height:
                        continue
                    if r2 in roots:
                        continue
                    q = sum(coroot[j] * a[j][i] for j in range(n))
                    c2 = list(coroot)
                    c2[i] -= q
                    c2 = tuple(c2)
                    roots[r2] = c2
                    new.append((r2, c2))
            frontier = new
        self._root_cache = [max_height, dict(roots)]
        return roots

    def coroot(self, root):
        h = height(root)
        table = self.positive_real_roots(max(h, 1))
        co = table.get(tuple(root))
        if co is None:
            raise ValueError("not a positive real root: %r" % (root,))
        return co

    def reflection(self, root):
        """Matrix of the reflection in a positive real root."""
        root = tuple(root)
        co = self.coroot(root)  # raises on imaginary input
        n = self.n
        cols = []
        for j in range(n):
            alpha_j = tuple(1 if r == j else 0 for r in range(n))
            k = self.pair(alpha_j, co)
            cols.append(tuple((1 if r == j else 0) - k * root[r]
                              for r in range(n)))
        return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))

    def is_cover_up(self, w, root):
        r = self.reflection(root)
        return self.length(self.mul(w, r)) == self.length(w) + 1

    # -- Bruhat order ----------------------------------------------------------

    def bruhat_leq(self, v, w):
        lv, lw = self.length(v), self.length(w)
        if lv > lw:
            return False
        if lv == lw:
            return v == w
        i = min(self.right_descents(w))
        s = self.simple[i]
        ws = self.mul(w, s)
        vs = self.mul(v, s)
        if self.length(vs) < lv:
            return self.bruhat_leq(vs, ws)
        return self.bruhat_leq(v, ws)

    def elements_up_to_length(self, max_len):
        """BFS by length; valid in infinite groups thanks to the cap."""
        layers = [{self.identity}]
        seen = {self.identity}
        for _ in range(max_len):
            nxt = set()
            for w in layers[-1]:
                for s in self.simple:
                    ws = self.mul(w, s)
                    if ws not in seen and self.length(ws) == self.length(w) + 1:
                        nxt.add(ws)
                        seen.add(ws)
            if not nxt:
                break
            layers.append(nxt)
        return layers

    def covers_up(self, w, roots=None):
        """Upper covers w < wr among the supplied positive roots.

        For finite groups pass roots=None to use every positive root.
        """
        if roots is None:
            roots = list(self.positive_real_roots(10 ** 6).keys()) \
                if self.is_finite() else None
            if roots is None:
                raise ValueError("cover enumeration needs a root list here")
        out = []
        for root in roots:
            wr = self.mul(w, self.reflection(root))
            if self.length(wr) == self.length(w) + 1:
                out.append((root, wr))
        return out

    def is_finite(self):
        # the root closure of a finite Weyl group dies out well below any
        # generous height bound; an infinite one keeps producing roots
        if self._finite is None:
            bound = 64
            roots = self.positive_real_roots(bound)
            self._finite = all(height(r) < bound - 1 for r in roots)
        return self._finite


def diamond_violation(group: CoxeterGroup, w, alpha, beta, roots=None):
    """Detect the forbidden cover configuration below a common element.

    alpha, beta and alpha+beta must all be roots.  True iff all of
    w r_alpha, w r_beta, w r_{alpha+beta} cover w while two of them admit
    a common upper cover; the diamond property of Bruhat order says this
    never happens, so scans are expected to come back empty.
    """
    gamma = tuple(x + y for x, y in zip(alpha, beta))
    triple = []
    for root in (alpha, beta, gamma):
        wr = group.mul(w, group.reflection(root))
        if group.length(wr) != group.length(w) + 1:
            return False
        triple.append(wr)
    cover_sets = []
    for u in triple:
        cover_sets.append({x for _, x in group.covers_up(u, roots)})
    for i in range(3):
        for j in range(i + 1, 3):
            if cover_sets[i] & cover_sets[j]:
                return True
    return False


# Roots forced negative by a pair of covers in a rank-2 subsystem, written
# in (alpha, beta) coordinates with beta the short root.
_FORCED = {
    "A2": ((1, 0),),
    "B2": ((1, 0), (1, 1)),
    "G2": ((1, 0), (1, 1), (2, 3), (1, 2)),
}


def forced_negatives(rank2_type: str):
    """Roots sent negative when w is covered by both ws_beta and the long cover.

    For A2 the second cover is ws_{alpha+beta}; for B2, ws_{alpha+2 beta};
    for G2, ws_{alpha+3 beta}.  The unique such w also sends each listed
    root to a negative root, which is the pruning fact used downstream.
    """
    try:
        return _FORCED[rank2_type]
    except KeyError:
        raise ValueError("rank2 type must be A2, B2 or G2") from None
