"""Weyl groups (products of symmetric and hyperoctahedral groups), parabolic
subgroups, minimal coset representatives, partitionings and the
orbit/refinement/crossing data built from them.

Elements of a :class:`WeylGroup` are tuples with one entry per factor.  A
type ``"A"`` entry is a permutation of ``1..n`` in one-line form; a type
``"B"`` entry is a signed permutation, one-line with entries in ``±1..±n``.
Composition is ``(u*v)(k) = u(v(k))`` and the generator ``s_n`` of a type B
factor changes the sign of the last index.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .quiver import (
    DimVector, InvolutionData, IsotropicVectorComposition, Quiver, QuiverError, VectorComposition,
)


# ----------------------------------------------------------------------
# single-factor helpers
# ----------------------------------------------------------------------

def _apply(p: tuple, k: int) -> int:
    """Image of the signed letter k under the (signed) one-line permutation p."""
    return p[k - 1] if k > 0 else -p[-k - 1]


def perm_compose(u: tuple, v: tuple) -> tuple:
    return tuple(_apply(u, x) for x in v)


def perm_inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for k, x in enumerate(p, start=1):
        out[abs(x) - 1] = k if x > 0 else -k
    return tuple(out)


def simple_reflection(kind: str, n: int, j: int) -> tuple:
    p = list(range(1, n + 1))
    if kind == "B" and j == n:
        p[n - 1] = -n
    else:
        if not 1 <= j < n:
            raise QuiverError(f"no simple reflection s_{j} in a rank {n} factor of type {kind}")
        p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


@lru_cache(maxsize=1 << 16)
def factor_length(kind: str, p: tuple) -> int:
    """Number of positive roots sent to negative roots."""
    n = len(p)
    count = 0
    for k in range(n):
        a = p[k]
        if kind == "B" and a < 0:
            count += 1
        for l in range(k + 1, n):
            b = p[l]
            if kind == "A":
                count += a > b
                continue
            # x_k - x_l  and  x_k + x_l
            if abs(a) < abs(b):
                count += (a < 0) * 2
            else:
                count += (b > 0) + (b < 0)
    return count


def factor_right_descent(kind: str, p: tuple, j: int) -> bool:
    n = len(p)
    if kind == "B" and j == n:
        return p[n - 1] < 0
    a, b = p[j - 1], p[j]
    if kind == "A":
        return a > b
    return (abs(a) < abs(b) and a < 0) or (abs(b) < abs(a) and b > 0)


def factor_generators(kind: str, n: int) -> range:
    return range(1, n + 1) if kind == "B" else range(1, n)


# ----------------------------------------------------------------------
# products of Weyl groups
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class WeylGroup:
    """Direct product of factors ``(label, kind, rank)``."""

    factors: tuple

    @property
    def kinds(self):
        return tuple(f[1] for f in self.factors)

    @property
    def ranks(self):
        return tuple(f[2] for f in self.factors)

    def identity(self) -> tuple:
        return tuple(tuple(range(1, n + 1)) for n in self.ranks)

    def mul(self, u: tuple, v: tuple) -> tuple:
        return tuple(perm_compose(a, b) for a, b in zip(u, v))

    def inverse(self, w: tuple) -> tuple:
        return tuple(perm_inverse(a) for a in w)

    def simple(self, f: int, j: int) -> tuple:
        w = list(self.identity())
        w[f] = simple_reflection(self.kinds[f], self.ranks[f], j)
        return tuple(w)

    def generators(self) -> list:
        return [(f, j) for f, (_, kind, n) in enumerate(self.factors) for j in factor_generators(kind, n)]

    def length(self, w: tuple) -> int:
        return sum(factor_length(k, p) for k, p in zip(self.kinds, w))

    def right_descents(self, w: tuple) -> set:
        return {(f, j) for (f, j) in self.generators() if factor_right_descent(self.kinds[f], w[f], j)}

    def left_descents(self, w: tuple) -> set:
        return self.right_descents(self.inverse(w))

    def from_word(self, word: Sequence) -> tuple:
        """Product s_{word[0]} s_{word[1]} ... of generators (f, j)."""
        w = self.identity()
        for f, j in word:
            w = self.mul(w, self.simple(f, j))
        return w

    def reduced_word(self, w: tuple) -> list:
        """Canonical reduced word: strip the smallest left descent repeatedly."""
        word = []
        while True:
            desc = sorted(self.left_descents(w))
            if not desc:
                return word
            f, j = desc[0]
            word.append((f, j))
            w = self.mul(self.simple(f, j), w)

    def one_line(self, w: tuple) -> tuple:
        return tuple(x for p in w for x in p)

    def sort_key(self, w: tuple):
        return (self.length(w), self.one_line(w))

    # -- parabolic subgroups ---------------------------------------------
    def parabolic_elements(self, J: frozenset) -> list:
        return _parabolic_elements(self, frozenset(J))

    def elements(self) -> list:
        return self.parabolic_elements(frozenset(self.generators()))

    def order(self) -> int:
        total = 1
        for kind, n in zip(self.kinds, self.ranks):
            m = 1
            for k in range(2, n + 1):
                m *= k
            total *= m * (2 ** n if kind == "B" else 1)
        return total

    def longest(self, J: frozenset) -> tuple:
        return max(self.parabolic_elements(J), key=self.length)

    def min_coset_reps(self, J_big: frozenset, J_small: frozenset) -> list:
        """[W_big / W_small]^min: elements of W_big without right descents in J_small."""
        return _min_coset_reps(self, frozenset(J_big), frozenset(J_small))

    def longest_min_coset_rep(self, J_big: frozenset, J_small: frozenset) -> tuple:
        return self.mul(self.longest(J_big), self.longest(J_small))

    def is_min_double_coset_rep(self, w: tuple, J_left: frozenset, J_right: frozenset) -> bool:
        return not (self.left_descents(w) & set(J_left)) and not (self.right_descents(w) & set(J_right))

    def min_double_coset_reps(self, J_left: frozenset, J_right: frozenset) -> list:
        """Minimal representatives of W_left \\ W / W_right, sorted by (length, one-line)."""
        per_factor = []
        for f, (_, kind, n) in enumerate(self.factors):
            jl = frozenset(j for (g, j) in J_left if g == f)
            jr = frozenset(j for (g, j) in J_right if g == f)
            if kind == "A":
                reps = _grid_reps(n, _blocks_from_J(n, jl), _blocks_from_J(n, jr))
            else:
                reps = _brute_reps_B(n, jl, jr)
            per_factor.append([(factor_length(kind, p), p) for p in reps])
        # a tuple of factor tuples compares like its one-line concatenation
        keyed = [(0, ())]
        for factor in per_factor:
            keyed = [(l + lf, w + (p,)) for l, w in keyed for lf, p in factor]
        keyed.sort()
        return [w for _, w in keyed]

    # -- action on polynomials -------------------------------------------
    def variable_map(self, w: tuple, layout: Sequence[Sequence[int]]):
        """Signed permutation of ring variables; layout[f][k-1] is the
        variable index carrying letter k of factor f."""
        nv = sum(len(v) for v in layout)
        return _variable_map(w, layout, nv)


def _variable_map(w, layout, nv_total=None):
    target, sign = {}, {}
    for p, vars_ in zip(w, layout):
        for k, x in enumerate(p, start=1):
            v = vars_[k - 1]
            target[v] = vars_[abs(x) - 1]
            sign[v] = 1 if x > 0 else -1
    return target, sign


@lru_cache(maxsize=None)
def _parabolic_elements(G: WeylGroup, J: frozenset) -> list:
    per_factor = []
    for f, (_, kind, n) in enumerate(G.factors):
        jf = sorted(j for (g, j) in J if g == f)
        per_factor.append(_factor_parabolic(kind, n, tuple(jf)))
    return [tuple(c) for c in itertools.product(*per_factor)]


@lru_cache(maxsize=None)
def _factor_parabolic(kind: str, n: int, J: tuple) -> list:
    """All elements of the standard parabolic subgroup generated by J."""
    blocks = _blocks_from_J(n, frozenset(j for j in J if not (kind == "B" and j == n)))
    signed_last = kind == "B" and n in J
    choices = []
    for bi, (start, size) in enumerate(blocks):
        letters = list(range(start, start + size))
        is_signed = signed_last and bi == len(blocks) - 1
        opts = []
        for perm in itertools.permutations(letters):
            if is_signed:
                for signs in itertools.product((1, -1), repeat=size):
                    opts.append(tuple(s * x for s, x in zip(signs, perm)))
            else:
                opts.append(perm)
        choices.append(opts)
    return [tuple(x for part in c for x in part) for c in itertools.product(*choices)]


def _blocks_from_J(n: int, J: frozenset) -> list:
    """Consecutive blocks (start, size) of 1..n joined by the generators in J."""
    blocks, start = [], 1
    for k in range(1, n + 1):
        if k == n or k not in J:
            blocks.append((start, k - start + 1))
            start = k + 1
    return blocks


@lru_cache(maxsize=None)
def _min_coset_reps(G: WeylGroup, J_big: frozenset, J_small: frozenset) -> list:
    if not J_small <= J_big:
        raise QuiverError("coset representatives need a parabolic subgroup of the big group")
    reps = [w for w in G.parabolic_elements(J_big) if not (G.right_descents(w) & J_small)]
    return sorted(reps, key=G.sort_key)


def _grid_reps(n: int, left: list, right: list) -> list:
    """Type A minimal double coset reps from contingency tables."""
    return list(_grid_reps_cached(n, tuple(left), tuple(right)))


@lru_cache(maxsize=4096)
def _grid_reps_cached(n: int, left: tuple, right: tuple) -> tuple:
    # Column s of a table M lists, row by row, how many letters of left block
    # r go to right block s; the minimal rep sends right block s to those
    # letters in increasing order, taking a contiguous run from each left block.
    starts = [start for start, _ in left]
    reps = []
    for M in _tables([s for _, s in left], [s for _, s in right]):
        offset = list(starts)
        w = []
        for s in range(len(right)):
            for r, row in enumerate(M):
                m = row[s]
                if m:
                    w.extend(range(offset[r], offset[r] + m))
                    offset[r] += m
        reps.append(tuple(w))
    return tuple(reps)


def _tables(rows: list, cols: list):
    """Nonnegative integer matrices with the given row and column sums."""
    if len(rows) <= 1:
        if rows or not any(cols):
            yield [tuple(cols)] if rows else []
        return
    for row in _bounded_rows(rows[0], tuple(cols)):
        rest = [c - x for c, x in zip(cols, row)]
        for M in _tables(rows[1:], rest):
            yield [row] + M


@lru_cache(maxsize=1 << 14)
def _bounded_rows(total: int, caps: tuple) -> tuple:
    """Tuples x with sum total and 0 <= x[s] <= caps[s]."""
    if len(caps) == 1:
        return ((total,),) if total <= caps[0] else ()
    room = sum(caps[1:])
    out = []
    for x in range(max(0, total - room), min(total, caps[0]) + 1):
        out.extend((x,) + tail for tail in _bounded_rows(total - x, caps[1:]))
    return tuple(out)


def _brute_reps_B(n: int, jl: frozenset, jr: frozenset) -> list:
    """Type B minimal double coset reps: the elements with no left descent in
    jl and no right descent in jr."""
    lmask = sum(1 << j for j in jl)
    rmask = sum(1 << j for j in jr)
    return [w for w, ld, rd in _descent_masks_B(n) if not (ld & lmask) and not (rd & rmask)]


@lru_cache(maxsize=8)
def _descent_masks_B(n: int) -> list:
    """(w, left descent bitmask, right descent bitmask) for every w in B_n."""
    G = WeylGroup((("", "B", n),))
    out = []
    for w in G.elements():
        ld = sum(1 << j for _, j in G.left_descents(w))
        rd = sum(1 << j for _, j in G.right_descents(w))
        out.append((w[0], ld, rd))
    return out


def brute_force_double_cosets(G: WeylGroup, J_left: frozenset, J_right: frozenset) -> list:
    """Partition W into double cosets by explicit multiplication; return the
    minimal-length element of each coset (an independent oracle).

    Left cosets w W_right are the classes of W under right multiplication by
    the generators in J_right; double cosets are the classes of those under
    left multiplication by the generators in J_left.
    """
    elems, left_tab, _ = _multiplication_tables(G)
    label, coset_rep = _left_cosets(G, frozenset(J_right))
    moves = [label[left_tab[g][coset_rep]] for g in sorted(J_left)]
    smallest = np.unique(_class_minimum(len(coset_rep), moves))
    return [elems[i] for i in coset_rep[smallest]]


def _class_minimum(n: int, moves: list) -> np.ndarray:
    """For each node 0..n-1 the smallest node of its class under the given
    involutions (index arrays), by min-label propagation."""
    lab = np.arange(n)
    while True:
        new = lab
        for m in moves:
            new = np.minimum(new, new[m])
        new = new[new]
        if np.array_equal(new, lab):
            return lab
        lab = new


@lru_cache(maxsize=8)
def _multiplication_tables(G: WeylGroup):
    """Elements sorted by (length, one-line) and, per generator g, the index
    arrays of w -> s_g w and w -> w s_g."""
    elems = sorted(G.elements(), key=G.sort_key)
    index = {w: i for i, w in enumerate(elems)}
    left, right = {}, {}
    for g in G.generators():
        s = G.simple(*g)
        left[g] = np.array([index[G.mul(s, w)] for w in elems])
        right[g] = np.array([index[G.mul(w, s)] for w in elems])
    return elems, left, right


@lru_cache(maxsize=256)
def _left_cosets(G: WeylGroup, J_right: frozenset):
    """(coset number of each element, smallest element of each coset).

    Elements are indexed in sorted order and cosets are numbered in the order
    of their smallest elements.
    """
    elems, _, right_tab = _multiplication_tables(G)
    smallest = _class_minimum(len(elems), [right_tab[g] for g in sorted(J_right)])
    reps, label = np.unique(smallest, return_inverse=True)
    return label, reps


# ----------------------------------------------------------------------
# Weyl groups attached to dimension vectors and compositions
# ----------------------------------------------------------------------

def weyl_group(q: Quiver, c: DimVector) -> WeylGroup:
    return WeylGroup(tuple((v, "A", c[k]) for k, v in enumerate(q.vertices)))


def theta_weyl_group(inv: InvolutionData, c: DimVector) -> WeylGroup:
    """Factors for + vertices (type A) and theta-fixed vertices (type B)."""
    factors = []
    for k, v in enumerate(inv.quiver.vertices):
        kind = inv.kind(v)
        if kind == "+":
            factors.append((v, "A", c[k]))
        elif kind == "0":
            factors.append((v, "B", c[k] // 2))
    return WeylGroup(tuple(factors))


def _J_from_sizes(f: int, sizes: Sequence[int]) -> set:
    J, pos = set(), 0
    for s in sizes:
        J.update((f, pos + t) for t in range(1, s))
        pos += s
    return J


def parabolic(q: Quiver, d: VectorComposition) -> frozenset:
    """Simple reflections generating W_d inside W_c."""
    J = set()
    for k in range(q.n):
        J |= _J_from_sizes(k, [p[k] for p in d.parts])
    return frozenset(J)


def theta_block_sizes(inv: InvolutionData, d: IsotropicVectorComposition, k: int) -> list:
    """Block sizes at + vertex k: d_1..d_l, d_inf, then theta images reversed."""
    tk = inv.theta_vertex_index(k)
    return ([p[k] for p in d.finite] + [d.inf[k]] + [p[tk] for p in reversed(d.finite)])


def theta_parabolic(inv: InvolutionData, d: IsotropicVectorComposition) -> frozenset:
    J = set()
    f = 0
    for k, v in enumerate(inv.quiver.vertices):
        kind = inv.kind(v)
        if kind == "+":
            J |= _J_from_sizes(f, theta_block_sizes(inv, d, k))
            f += 1
        elif kind == "0":
            sizes = [p[k] for p in d.finite]
            m = d.inf[k] // 2
            J |= _J_from_sizes(f, sizes + [m])
            if m:
                J.add((f, sum(sizes) + m))
            f += 1
    return frozenset(J)


# ----------------------------------------------------------------------
# partitionings
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Partitioning:
    """Ordered blocks of slots ``(vertex index, k)``; each block sorted."""

    blocks: tuple

    def __post_init__(self):
        if any(not b for b in self.blocks):
            raise QuiverError("partitioning blocks must be nonempty")
        slots = [s for b in self.blocks for s in b]
        if len(set(slots)) != len(slots):
            raise QuiverError("partitioning blocks must be disjoint")

    def __len__(self):
        return len(self.blocks)

    @property
    def slots(self) -> frozenset:
        return frozenset(s for b in self.blocks for s in b)

    def block_of(self) -> dict:
        return {s: r for r, b in enumerate(self.blocks) for s in b}


def make_partitioning(blocks: Sequence[Sequence]) -> Partitioning:
    return Partitioning(tuple(tuple(sorted(b)) for b in blocks))


def slot_set(c: DimVector) -> list:
    return [(k, j) for k in range(len(c)) for j in range(1, c[k] + 1)]


def P(d: VectorComposition) -> Partitioning:
    """The standard partitioning of a vector composition."""
    blocks = []
    offsets = [0] * d.nverts
    for part in d.parts:
        block = []
        for k in range(d.nverts):
            block += [(k, offsets[k] + t) for t in range(1, part[k] + 1)]
            offsets[k] += part[k]
        blocks.append(tuple(block))
    return Partitioning(tuple(blocks))


def C(lam: Partitioning, nverts: int) -> VectorComposition:
    parts = []
    for b in lam.blocks:
        e = [0] * nverts
        for k, _ in b:
            e[k] += 1
        parts.append(DimVector(tuple(e)))
    return VectorComposition(tuple(parts))


def ordered_intersection(lam: Partitioning, mu: Partitioning) -> Partitioning:
    if lam.slots != mu.slots:
        raise QuiverError("partitionings live on different slot sets")
    blocks = []
    for a in lam.blocks:
        sa = set(a)
        for b in mu.blocks:
            inter = sa.intersection(b)
            if inter:
                blocks.append(tuple(sorted(inter)))
    return Partitioning(tuple(blocks))


def format_partitioning(lam: Partitioning, q: Quiver | None = None) -> str:
    """Bracket notation; slots print as k (one vertex) or k(vertex)."""
    out = []
    for b in lam.blocks:
        if q is None or q.n == 1:
            items = [str(j) for _, j in b]
        else:
            items = [f"{j}({q.vertices[k]})" for k, j in b]
        out.append("[" + ",".join(items) + "]")
    return "".join(out)


class SlotAction:
    """How a Weyl group acts on the slot set N_c."""

    def __init__(self, G: WeylGroup, c: DimVector, inv: InvolutionData | None = None):
        self.G, self.c, self.inv = G, c, inv
        self.vertex_of_factor = []
        names = inv.quiver.vertices if inv is not None else None
        for label, _, _ in G.factors:
            self.vertex_of_factor.append(
                names.index(label) if names is not None else None)

    def act_slot_maps(self, w: tuple) -> dict:
        c = self.c
        image = {}
        if self.inv is None:
            for f, p in enumerate(w):
                for j in range(1, len(p) + 1):
                    image[(f, j)] = (f, p[j - 1])
            return image
        inv = self.inv
        for f, p in enumerate(w):
            k = self.vertex_of_factor[f]
            kind = self.G.kinds[f]
            n = c[k]
            if kind == "A":
                tk = inv.theta_vertex_index(k)
                for j in range(1, n + 1):
                    image[(k, j)] = (k, p[j - 1])
                    image[(tk, n + 1 - j)] = (tk, n + 1 - p[j - 1])
            else:
                m = len(p)
                for j in range(1, m + 1):
                    x = p[j - 1]
                    if x > 0:
                        image[(k, j)], image[(k, n + 1 - j)] = (k, x), (k, n + 1 - x)
                    else:
                        image[(k, j)], image[(k, n + 1 - j)] = (k, n + 1 + x), (k, -x)
                if n % 2:
                    image[(k, m + 1)] = (k, m + 1)
        return image

    def act(self, w: tuple, lam: Partitioning) -> Partitioning:
        image = self.act_slot_maps(w)
        return make_partitioning([[image.get(s, s) for s in b] for b in lam.blocks])


# ----------------------------------------------------------------------
# orbit, refinement and crossing data (ordinary)
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RefinementDatum:
    e: object
    d: object
    w: tuple
    e_hat: object
    d_hat: object
    u: tuple        # (signed) permutation of block labels, one-line
    lam_mu: Partitioning
    mu_lam: Partitioning
    isotropic: bool = False


@dataclass(frozen=True)
class CrossingDatum:
    refinement: RefinementDatum
    word: tuple          # (j_1, ..., j_k): u = s_{j_k} ... s_{j_1}
    sequence: tuple      # (e^0, e^1, ..., e^{2k})


def _label_perm_group(n: int, signed: bool) -> WeylGroup:
    return WeylGroup((("", "B" if signed else "A", n),))


def refinement_datum(q: Quiver, c: DimVector, e: VectorComposition, d: VectorComposition,
                     w: tuple) -> RefinementDatum:
    G = weyl_group(q, c)
    if not G.is_min_double_coset_rep(w, parabolic(q, e), parabolic(q, d)):
        raise QuiverError("w is not a minimal double coset representative")
    lam = P(e)
    mu = SlotAction(G, c).act(w, P(d))
    lm, ml = ordered_intersection(lam, mu), ordered_intersection(mu, lam)
    where = {b: r for r, b in enumerate(ml.blocks, start=1)}
    u = tuple(where[b] for b in lm.blocks)
    return RefinementDatum(e, d, w, C(lm, q.n), C(ml, q.n), u, lm, ml)


def crossing_datum(rd: RefinementDatum, inv: InvolutionData | None = None,
                   word: Sequence[int] | None = None) -> CrossingDatum:
    """word gives (j_k, ..., j_1) as read left to right in u = s_{j_k}...s_{j_1};
    by default the canonical reduced word of u is used."""
    n = len(rd.u)
    G = _label_perm_group(n, rd.isotropic)
    if word is None:
        word = [j for _, j in G.reduced_word((rd.u,))]
    else:
        word = list(word)
        if G.from_word([(0, j) for j in word]) != (rd.u,) or len(word) != G.length((rd.u,)):
            raise QuiverError("word is not a reduced word for u")
    js = tuple(reversed(word))
    seq = [rd.e_hat]
    cur = rd.e_hat
    for j in js:
        if rd.isotropic:
            seq.append(inv.theta_wedge_at(cur, j))
            cur = inv.theta_swap(cur, j)
        else:
            seq.append(cur.wedge_at(j))
            cur = cur.swap(j)
        seq.append(cur)
    if cur != rd.d_hat:
        raise QuiverError("crossing datum does not end at d-hat")
    return CrossingDatum(rd, js, tuple(seq))


def check_utilde(q: Quiver, c: DimVector, cd: CrossingDatum, inv: InvolutionData | None = None):
    """Return (u_tilde, lengths of the w_l)."""
    if cd.refinement.isotropic:
        G = theta_weyl_group(inv, c)
        par = lambda x: theta_parabolic(inv, x)
    else:
        G = weyl_group(q, c)
        par = lambda x: parabolic(q, x)
    ut = G.identity()
    lengths = []
    seq = cd.sequence
    for l in range(1, len(cd.word) + 1):
        wl = G.longest_min_coset_rep(par(seq[2 * l - 1]), par(seq[2 * l]))
        lengths.append(G.length(wl))
        ut = G.mul(ut, wl)
    return ut, lengths


# ----------------------------------------------------------------------
# isotropic variants
# ----------------------------------------------------------------------

def D_composition(inv: InvolutionData, d: IsotropicVectorComposition) -> VectorComposition:
    """(d_1,...,d_l, d_inf, theta d_l, ..., theta d_1) with a zero d_inf dropped."""
    parts = list(d.finite)
    if not d.inf.is_zero():
        parts.append(d.inf)
    parts += [inv.theta(p) for p in reversed(d.finite)]
    if not parts:
        raise QuiverError("empty isotropic composition")
    return VectorComposition(tuple(parts))


def theta_P(inv: InvolutionData, d: IsotropicVectorComposition) -> Partitioning:
    return P(D_composition(inv, d))


def theta_C(inv: InvolutionData, nu: Partitioning) -> IsotropicVectorComposition:
    comp = C(nu, inv.quiver.n)
    n = len(comp)
    m = n // 2
    inf = comp.parts[m] if n % 2 else DimVector.zero(inv.quiver.n)
    return inv.check_iso(IsotropicVectorComposition(comp.parts[:m], inf))


def is_isotropic_partitioning(inv: InvolutionData, c: DimVector, nu: Partitioning) -> bool:
    n = len(nu)
    for r, b in enumerate(nu.blocks):
        mirror = sorted(_slot_theta(inv, c, s) for s in b)
        if tuple(mirror) != nu.blocks[n - 1 - r]:
            return False
    return True


def _slot_theta(inv: InvolutionData, c: DimVector, s: tuple) -> tuple:
    k, j = s
    tk = inv.theta_vertex_index(k)
    return (tk, c[k] + 1 - j)


def theta_refinement_datum(inv: InvolutionData, c: DimVector, e: IsotropicVectorComposition,
                           d: IsotropicVectorComposition, w: tuple) -> RefinementDatum:
    G = theta_weyl_group(inv, c)
    if not G.is_min_double_coset_rep(w, theta_parabolic(inv, e), theta_parabolic(inv, d)):
        raise QuiverError("w is not a minimal double coset representative")
    lam = theta_P(inv, e)
    mu = SlotAction(G, c, inv).act(w, theta_P(inv, d))
    lm, ml = ordered_intersection(lam, mu), ordered_intersection(mu, lam)
    n = len(lm)
    m = n // 2
    where = {b: r for r, b in enumerate(ml.blocks, start=1)}
    u = []
    for k in range(m):
        p = where[lm.blocks[k]]
        u.append(p if p <= m else -(n + 1 - p))
    return RefinementDatum(e, d, w, theta_C(inv, lm), theta_C(inv, ml), tuple(u), lm, ml, True)
