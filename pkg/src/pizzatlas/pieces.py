"""The catalog of pizza pieces.

Every piece is a Richardson quadrilateral from a rank-2 group, stored in
standard position: the pizza center at the origin, the bottom spoke along
the negative x-axis, and the edges at the bottom-left corner forming the
standard basis.  Edge lengths are not rigid; each piece carries a
two-parameter family of shapes (the choice of dominant weight in the
rank-2 group), recorded as linear forms in nonnegative c = (c1, c2) with
both entries >= 1 for an honest quadrilateral.

Vertices in counterclockwise poset order: center, SW (bottom spoke foot),
NW (outer corner), NE (other spoke foot).  Walking center->SW->NW->NE
traverses the quadrilateral clockwise in the plane.

The transition matrix of a piece maps the frame at its SW corner to the
frame the next piece is glued in; the first column is always minus the
primitive direction of the NE spoke, which is what makes consecutive
pieces share a spoke ray when matrices are accumulated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .braid import (BraidElt, backwards as braid_backwards, braid_from_word,
                    chi, parse_braid_word)
from .coxeter import CoxeterGroup, GCM, gcm_rank2, height

EDGE_NAMES = ("bottom", "sw_rim", "top_rim", "ne")


def _form_eval(form, c):
    return form[0] * c[0] + form[1] * c[1]


@dataclass(frozen=True)
class Piece:
    """One oriented catalog piece."""

    name: str
    matrix: tuple          # SL(2,Z) transition matrix, row-major 4-tuple
    ab: int                # abelianization of the braid lift
    word: str              # braid word, table convention
    edge_forms: tuple      # 4 linear forms in (c1, c2): bottom, sw, top, ne
    top_dir: tuple         # primitive direction NW -> NE
    ne_dir: tuple          # primitive direction center -> NE
    smooth: bool
    backwards_name: str
    richardson: tuple | None  # (gcm rows, v word, w word) for forward pieces
    simply_laced: bool     # realizable inside a symmetric GCM

    @property
    def braid(self):
        return BraidElt(self.matrix, self.ab)

    @property
    def nutrition(self):
        return Fraction(self.ab, 12)

    def lengths(self, c=(1, 1)):
        return tuple(_form_eval(f, c) for f in self.edge_forms)

    def vertices(self, c=(1, 1)):
        """Quadrilateral [center, SW, NW, NE] at weight c."""
        bottom, sw, top, _ = self.lengths(c)
        p_sw = (-bottom, 0)
        p_nw = (-bottom, sw)
        p_ne = (p_nw[0] + top * self.top_dir[0], p_nw[1] + top * self.top_dir[1])
        return ((0, 0), p_sw, p_nw, p_ne)

    def spoke_constraint(self):
        """Relation between bottom length s and NE length t.

        Returns (mode, k): 'free' means any s,t >= 1; 'up' means
        t >= k*s + 1; 'down' means s >= k*t + 1.
        """
        (b1, b2), _, _, (n1, n2) = (self.edge_forms[0], self.edge_forms[1],
                                    self.edge_forms[2], self.edge_forms[3])
        if (b1, b2) == (0, 1) and (n1, n2) == (1, 0):
            return ("free", 0)
        if (b1, b2) == (1, 0) and (n1, n2) == (0, 1):
            return ("free", 0)
        if (b1, b2) == (0, 1):           # t = c1 + k*s
            return ("up", n2)
        if (n1, n2) == (0, 1):           # s = c1 + k*t
            return ("down", b2)
        raise AssertionError("unrecognized edge forms %r" % (self.edge_forms,))


def _mat_cols(c1, c2):
    return (c1[0], c2[0], c1[1], c2[1])


def _solve_unimodular(src1, dst1, src2, dst2):
    """The integer matrix T with T src1 = dst1, T src2 = dst2."""
    det = src1[0] * src2[1] - src1[1] * src2[0]
    if det == 0:
        raise ValueError("sources are collinear")
    # T = [dst1 dst2] * [src1 src2]^-1
    inv = (src2[1], -src2[0], -src1[1], src1[0])  # adjugate
    m = _mat_cols(dst1, dst2)
    t = (m[0] * inv[0] + m[1] * inv[2], m[0] * inv[1] + m[1] * inv[3],
         m[2] * inv[0] + m[3] * inv[2], m[2] * inv[1] + m[3] * inv[3])
    if any(x % det for x in t):
        raise ValueError("no integral solution")
    return tuple(x // det for x in t)


def _primitive(v):
    from math import gcd
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise ValueError("zero vector")
    return (v[0] // g, v[1] // g)


_FWD_SPECS = []  # (name, family, param, ab, word, richardson, simply_laced)

# X^{s1 s2}_e in the rank-2 group [[2,-j],[-1,2]]; smooth Schubert surfaces.
_KM_DATA = {
    1: ("A2", 4, "BABA"), 2: ("B2", 5, "BBABA"), 3: ("G2", 6, "BBBABA"),
}
for _j in range(1, 10):
    _name, _ab, _word = _KM_DATA.get(_j, ("KM%d" % _j, _j + 3,
                                          "B" * _j + "ABA"))
    _FWD_SPECS.append((_name, "schubert", _j, _ab, _word,
                       ([[2, -_j], [-1, 2]], (), (0, 1)), True))

_FWD_SPECS.append(("A1xA1", "product", 0, 3, "ABA",
                   ([[2, 0], [0, 2]], (), (0, 1)), True))

# Opposite Richardsons X^{w0}_{v}; k is the off-diagonal of the group.
_FWD_SPECS.append(("A2opp", "opposite", 1, 2, "AB",
                   ([[2, -1], [-1, 2]], (0,), (0, 1, 0)), True))
_FWD_SPECS.append(("B2opp", "opposite", 2, 1, "B-AB",
                   ([[2, -2], [-1, 2]], (1, 0), (0, 1, 0, 1)), False))
_FWD_SPECS.append(("G2opp", "opposite", 3, 0, "B-B-AB",
                   ([[2, -3], [-1, 2]], (1, 0, 1, 0), (0, 1, 0, 1, 0, 1)),
                   False))

# Singular Richardsons in B2 and G2.
_FWD_SPECS.append(("B2sing", "sing", 2, 3, "BBA",
                   ([[2, -2], [-1, 2]], (0,), (0, 1, 0)), False))
_FWD_SPECS.append(("G2short", "sing", 3, 4, "BBBA",
                   ([[2, -3], [-1, 2]], (0,), (0, 1, 0)), False))
_FWD_SPECS.append(("G2long", "long", 3, 2, "BBAB-",
                   ([[2, -3], [-1, 2]], (0, 1, 0), (0, 1, 0, 1, 0)), False))


def _fwd_geometry(family, k):
    """edge forms (bottom, sw, top, ne), top_dir, ne_dir, matrix."""
    if family == "product":
        return (((0, 1), (1, 0), (0, 1), (1, 0)), (1, 0), (0, 1),
                (0, 1, -1, 0))
    if family == "schubert":
        return (((0, 1), (1, k), (0, 1), (1, 0)), (1, -k), (0, 1),
                (0, 1, -1, -k))
    if family == "opposite":
        return (((0, 1), (1, 0), (0, 1), (1, k)), (1, k), (0, 1),
                (0, 1, -1, k))
    if family == "sing":
        # SW rim carries the k-dependent root string; for k = 2 the
        # corner root is a+b, for k = 3 it is 2a+b (a the spoke label)
        sw_form = (1, 2) if k == 2 else (2, 3)
        return (((1, 1), sw_form, (1, 0), (0, 1)), (1, -(k - 1)), (-1, k),
                (1, 1, -k, -(k - 1)))
    if family == "long":
        return (((1, 2), (1, 3), (1, 0), (0, 1)), (1, -1), (-2, 3),
                (2, 1, -3, -1))
    raise AssertionError(family)


def _backwards_piece(p: Piece, bname: str) -> Piece:
    """Reflect a forward piece across the y-axis and re-standardize."""
    b = braid_backwards(p.braid)
    verts = p.vertices((1, 1))
    j = lambda v: (-v[0], v[1])
    # new bottom spoke is the reflected NE spoke; new SW rim is the
    # reflected top rim, reversed
    u = _solve_unimodular(j(p.ne_dir), (-1, 0),
                          j((-p.top_dir[0], -p.top_dir[1])), (0, 1))
    def umap(v):
        return (u[0] * v[0] + u[1] * v[1], u[2] * v[0] + u[3] * v[1])
    ne2 = umap(j(verts[1]))            # old SW becomes the new NE
    nw2 = umap(j(verts[2]))
    ne_dir = _primitive(ne2)
    top_dir = _primitive((ne2[0] - nw2[0], ne2[1] - nw2[1]))
    bf, sf, tf, nf = p.edge_forms
    piece = Piece(
        name=bname, matrix=b.mat, ab=b.ab,
        word="".join(reversed(parse_braid_word(p.word))),
        edge_forms=(nf, tf, sf, bf), top_dir=top_dir, ne_dir=ne_dir,
        smooth=p.smooth, backwards_name=p.name, richardson=None,
        simply_laced=p.simply_laced)
    # the reflected piece must glue by its own matrix
    assert (-piece.matrix[0], -piece.matrix[2]) == piece.ne_dir, piece
    return piece


def _build_catalog():
    pieces = {}
    for name, family, k, ab, word, rich, slaced in _FWD_SPECS:
        forms, top_dir, ne_dir, matrix = _fwd_geometry(family, k)
        elt = braid_from_word(word)
        if elt.mat != matrix or elt.ab != ab:
            raise AssertionError("braid table mismatch for %s" % name)
        if chi(matrix) != ab % 12:
            raise AssertionError("chi mismatch for %s" % name)
        smooth = family in ("product", "schubert", "opposite")
        bname = name if name == "A1xA1" else name + "b"
        p = Piece(name=name, matrix=matrix, ab=ab, word=word,
                  edge_forms=forms, top_dir=top_dir, ne_dir=ne_dir,
                  smooth=smooth, backwards_name=bname,
                  richardson=(tuple(tuple(r) for r in rich[0]),
                              tuple(rich[1]), tuple(rich[2])),
                  simply_laced=slaced)
        assert (-matrix[0], -matrix[2]) == ne_dir, name
        pieces[name] = p
        if bname != name:
            pieces[bname] = _backwards_piece(p, bname)
    return pieces


CATALOG = _build_catalog()

SIMPLY_LACED_CORE = ("A1xA1", "A2", "A2b", "A2opp", "A2oppb", "B2", "B2b")
# Pieces whose quadrilateral occurs in a symmetric generalized Cartan
# matrix; this is the set the classification of symmetric-type pizzas
# ranges over (the core list plus the G2-matrix Schubert piece).
SIMPLY_LACED_ENUM = SIMPLY_LACED_CORE + ("G2", "G2b")

FULL_ORDER = (
    "A1xA1",
    "A2", "A2b", "A2opp", "A2oppb",
    "B2", "B2b", "B2opp", "B2oppb", "B2sing", "B2singb",
    "G2", "G2b", "G2opp", "G2oppb", "G2short", "G2shortb",
    "G2long", "G2longb",
    "KM4", "KM4b", "KM5", "KM5b", "KM6", "KM6b",
    "KM7", "KM7b", "KM8", "KM8b", "KM9", "KM9b",
)


def all_pieces(mode="full"):
    """Catalog slices: 'simply_laced' (7), 'simply_laced_enum' (9), 'full'."""
    if mode == "simply_laced":
        return [CATALOG[n] for n in SIMPLY_LACED_CORE]
    if mode == "simply_laced_enum":
        return [CATALOG[n] for n in SIMPLY_LACED_ENUM]
    if mode == "full":
        return [CATALOG[n] for n in FULL_ORDER]
    raise ValueError("unknown mode %r" % (mode,))


def km_piece(k: int) -> Piece:
    """The Schubert piece of the group [[2,-k],[-1,2]], any k >= 1.

    For k <= 3 this is the A2/B2/G2 piece; k >= 10 is returned but can
    never sit in a pizza (its nutrition alone exceeds a whole one).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    name = {1: "A2", 2: "B2", 3: "G2"}.get(k, "KM%d" % k)
    if name in CATALOG:
        return CATALOG[name]
    forms, top_dir, ne_dir, matrix = _fwd_geometry("schubert", k)
    word = "B" * k + "ABA"
    return Piece(name=name, matrix=matrix, ab=k + 3, word=word,
                 edge_forms=forms, top_dir=top_dir, ne_dir=ne_dir,
                 smooth=True, backwards_name=name + "b",
                 richardson=(((2, -k), (-1, 2)), (), (0, 1)),
                 simply_laced=True)


# -- independent construction from the rank-2 Richardson data ---------------

def richardson_quadrilateral(gcm, v_word, w_word, weight=(1, 1)):
    """Moment quadrilateral of X^w_v from the rank-2 group, raw coordinates.

    Vertices are u(rho_c) - v(rho_c) for the four elements u of [v, w],
    written in the simple-root basis; edge lattice lengths equal the
    heights of the coroots of the right-multiplication labels.  Returns
    (vertices, edge_data) where vertices = (center, m1, m2, top) and
    edge_data maps vertex pairs to their right label roots.
    """
    if not isinstance(gcm, GCM):
        gcm = GCM(gcm)
    if gcm.n != 2:
        raise ValueError("rank-2 data required")
    group = CoxeterGroup(gcm)
    v = group.from_word(v_word)
    w = group.from_word(w_word)
    lv, lw = group.length(v), group.length(w)
    if lw != lv + 2:
        raise ValueError("interval must have height 2")
    if not group.bruhat_leq(v, w):
        raise ValueError("v must lie below w in Bruhat order")
    roots = group.positive_real_roots(max(8, 2 * (lw + 2)))
    middles = []
    for root, coroot in roots.items():
        u = group.mul(v, group.reflection(root))
        if group.length(u) == lv + 1 and group.bruhat_leq(u, w):
            middles.append((root, coroot, u))
    if len(middles) != 2:
        raise AssertionError("interval is not a diamond: %d middles"
                             % len(middles))

    def moment_step(u, root, coroot):
        # u(rho) - u s_gamma(rho) = <rho_c, coroot> * u(root)
        scale = weight[0] * coroot[0] + weight[1] * coroot[1]
        direction = group.act(u, root)
        return tuple(-scale * x for x in direction)

    center = (0, 0)
    out_verts = [center]
    edges = {}
    tops = []
    for root, coroot, u in middles:
        pos = moment_step(v, root, coroot)
        out_verts.append(pos)
        edges[(center, pos)] = root
        # continue to the top corner
        s_delta = group.mul(group.inverse(u), w)
        delta = None
        for r2, c2 in roots.items():
            if group.reflection(r2) == s_delta:
                delta = (r2, c2)
                break
        if delta is None:
            raise AssertionError("top edge is not a reflection step")
        step = moment_step(u, delta[0], delta[1])
        top = (pos[0] + step[0], pos[1] + step[1])
        edges[(pos, top)] = delta[0]
        tops.append(top)
    if tops[0] != tops[1]:
        raise AssertionError("interval does not close up")
    return (center, out_verts[1], out_verts[2], tops[0]), edges


def quad_equivalent(quad_a, quad_b):
    """GL(2,Z) + translation equivalence of two labeled quadrilaterals."""
    def edge_vecs(q):
        c, m1, m2, t = q
        return [(m1[0] - c[0], m1[1] - c[1]), (m2[0] - c[0], m2[1] - c[1]),
                (t[0] - m1[0], t[1] - m1[1]), (t[0] - m2[0], t[1] - m2[1])]
    ea, eb = edge_vecs(quad_a), edge_vecs(quad_b)
    for swap in (False, True):
        fb = [eb[1], eb[0], eb[3], eb[2]] if swap else eb
        try:
            t = _solve_unimodular(ea[0], fb[0], ea[1], fb[1])
        except ValueError:
            continue
        if abs(t[0] * t[3] - t[1] * t[2]) != 1:
            continue
        def tmap(v):
            return (t[0] * v[0] + t[1] * v[1], t[2] * v[0] + t[3] * v[1])
        if tmap(ea[2]) == tuple(fb[2]) and tmap(ea[3]) == tuple(fb[3]):
            return True
    return False


def piece_as_dict(p: Piece):
    return {
        "name": p.name, "matrix": list(p.matrix), "ab": p.ab, "word": p.word,
        "edge_forms": [list(f) for f in p.edge_forms],
        "top_dir": list(p.top_dir), "ne_dir": list(p.ne_dir),
        "smooth": p.smooth, "backwards": p.backwards_name,
        "vertices": [list(v) for v in p.vertices((1, 1))],
        "richardson": None if p.richardson is None else {
            "gcm": [list(r) for r in p.richardson[0]],
            "v": list(p.richardson[1]), "w": list(p.richardson[2])},
        "simply_laced": p.simply_laced,
    }


def dump_catalog_json():
    return json.dumps({"schema": 1,
                       "pieces": [piece_as_dict(CATALOG[n])
                                  for n in FULL_ORDER]},
                      indent=1, sort_keys=True)


def load_catalog_json():
    ref = resources.files("pizzatlas").joinpath("data/catalog.json")
    return json.loads(ref.read_text())
