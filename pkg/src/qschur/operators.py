"""Weyl group actions on polynomial rings, Demazure operators, symmetrizers
and the Euler-type classes S, E, theta-S, theta-E and the root products.

A :class:`Layout` ties a Weyl group to the variables of a polynomial ring.
Every slot ``(vertex, k)`` of the standard flag carries a weight, a linear
form in the ring variables.  In the ordinary setting slot ``(i, k)`` has
weight ``x_k(i)``.  In the theta setting the ring only has variables for
``+`` vertices and the first half of the slots at theta-fixed vertices; the
remaining slots carry the negated weights of their theta-partners.  All
Euler classes below are products of weight differences, which is how the
ordinary, the finitely refining and the two-block theta formulas share one
implementation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import DivisionError, InvariantViolation, Polynomial, PolyRing, exact_divide
from .quiver import (
    DimVector, InvolutionData, IsotropicVectorComposition, Quiver, QuiverError, VectorComposition,
)
from .weyl import (
    WeylGroup, _blocks_from_J, parabolic, theta_parabolic, theta_weyl_group, weyl_group,
)


# ----------------------------------------------------------------------
# layouts
# ----------------------------------------------------------------------

class Layout:
    """Weyl group W acting on the ring P_c (ordinary) or theta P_c."""

    def __init__(self, q: Quiver, c: DimVector, inv: InvolutionData | None = None):
        self.q, self.c, self.inv = q, c, inv
        variables, factor_vars, factors = [], [], []
        self.var_start = {}
        for k, v in enumerate(q.vertices):
            if inv is None or inv.kind(v) == "+":
                n = c[k]
            elif inv.kind(v) == "0":
                n = c[k] // 2
            else:
                continue
            self.var_start[k] = len(variables)
            factor_vars.append(tuple(range(len(variables), len(variables) + n)))
            variables += [(v, j) for j in range(1, n + 1)]
        self.ring = PolyRing(tuple(variables))
        self.factor_vars = tuple(factor_vars)
        self.G = weyl_group(q, c) if inv is None else theta_weyl_group(inv, c)
        self.is_theta = inv is not None

    def __repr__(self):
        return f"Layout({self.q.format_dim(self.c)}, theta={self.is_theta})"

    # -- variables and weights -------------------------------------------
    def x(self, k: int, j: int) -> Polynomial:
        """x_j at vertex index k (j is 1-based)."""
        return self.ring.gen(self.var_start[k] + j - 1)

    def slot_weight(self, k: int, j: int) -> Polynomial:
        if not self.is_theta:
            return self.x(k, j)
        inv = self.inv
        v = self.q.vertices[k]
        n = self.c[k]
        kind = inv.kind(v)
        if kind == "+":
            return self.x(k, j)
        if kind == "-":
            return -self.x(inv.theta_vertex_index(k), n + 1 - j)
        half = n // 2
        if j <= half:
            return self.x(k, j)
        if j > n - half:
            return -self.x(k, n + 1 - j)
        return self.ring.zero()

    def sigma(self, k: int) -> int:
        return self.inv.sigma[self.q.vertices[k]]

    # -- groups --------------------------------------------------------
    def parabolic(self, d) -> frozenset:
        if isinstance(d, IsotropicVectorComposition):
            return theta_parabolic(self.inv, d)
        return parabolic(self.q, d)

    def full(self) -> frozenset:
        return frozenset(self.G.generators())

    def vertex_of_factor(self, f: int) -> int:
        return self.q.vertex_index(self.G.factors[f][0])

    def variable_map(self, w: tuple):
        n = self.ring.nvars
        target, sign = list(range(n)), [1] * n
        for p, vars_ in zip(w, self.factor_vars):
            for k, x in enumerate(p, start=1):
                v = vars_[k - 1]
                target[v] = vars_[abs(x) - 1]
                sign[v] = 1 if x > 0 else -1
        return target, sign

    def act(self, w: tuple, f: Polynomial) -> Polynomial:
        target, sign = self.variable_map(w)
        return f.signed_permute(target, sign)

    def simple_map(self, f: int, j: int):
        return self.variable_map(self.G.simple(f, j))

    def parabolic_blocks(self, J: frozenset) -> list:
        """Blocks (kind, variable indices) of the parabolic subgroup W_J."""
        out = []
        for f, (_, kind, n) in enumerate(self.G.factors):
            jf = frozenset(j for (g, j) in J if g == f)
            signed = kind == "B" and n in jf
            blocks = _blocks_from_J(n, frozenset(j for j in jf if not (kind == "B" and j == n)))
            for bi, (start, size) in enumerate(blocks):
                if size == 0:
                    continue
                vars_ = self.factor_vars[f][start - 1:start - 1 + size]
                out.append(("B" if signed and bi == len(blocks) - 1 else "A", vars_, f))
        return out

    # -- roots ---------------------------------------------------------
    def short_root_scale(self, f: int):
        """Scale of the roots x_k at a theta-fixed factor: 1, 2 or None (none)."""
        k = self.vertex_of_factor(f)
        if self.sigma(k) == -1:
            return 2
        return 1 if self.c[k] % 2 else None

    def positive_roots(self, J: frozenset) -> list:
        roots = []
        g = self.ring.gen
        for kind, vars_, f in self.parabolic_blocks(J):
            for a, b in itertools.combinations(vars_, 2):
                roots.append(g(a) - g(b))
                if kind == "B":
                    roots.append(g(a) + g(b))
            if kind == "B":
                scale = self.short_root_scale(f)
                if scale is not None:
                    roots += [g(a).scale(scale) for a in vars_]
        return roots

    def simple_root(self, f: int, j: int) -> Polynomial:
        kind, n = self.G.kinds[f], self.G.ranks[f]
        vars_ = self.factor_vars[f]
        g = self.ring.gen
        if kind == "B" and j == n:
            scale = self.short_root_scale(f)
            if scale is None:
                raise QuiverError("no simple root for the sign generator at an even orthogonal vertex")
            return g(vars_[n - 1]).scale(scale)
        return g(vars_[j - 1]) - g(vars_[j])


@lru_cache(maxsize=None)
def ordinary_layout(q: Quiver, c: DimVector) -> Layout:
    return Layout(q, c)


@lru_cache(maxsize=None)
def theta_layout(inv: InvolutionData, c: DimVector) -> Layout:
    inv.check_total(c)
    return Layout(inv.quiver, c, inv)


def layout_for(q_or_inv, c: DimVector) -> Layout:
    if isinstance(q_or_inv, InvolutionData):
        return theta_layout(q_or_inv, c)
    return ordinary_layout(q_or_inv, c)


# ----------------------------------------------------------------------
# actions and Demazure operators
# ----------------------------------------------------------------------

def act(layout: Layout, w: tuple, f: Polynomial) -> Polynomial:
    return layout.act(w, f)


def demazure_simple(layout: Layout, f_idx: int, j: int, f: Polynomial) -> Polynomial:
    """(f - s_j f) / alpha_j for the simple reflection s_j of factor f_idx."""
    target, sign = layout.simple_map(f_idx, j)
    num = f - f.signed_permute(target, sign)
    return exact_divide(num, layout.simple_root(f_idx, j))


def demazure_word(layout: Layout, word: Sequence, f: Polynomial) -> Polynomial:
    """Delta_{j_1} o ... o Delta_{j_k} for word = [(f, j_1), ..., (f, j_k)]."""
    for f_idx, j in reversed(list(word)):
        f = demazure_simple(layout, f_idx, j, f)
    return f


def _canonical_linear(p: Polynomial):
    """Write a linear form as scalar * canonical (first coefficient 1)."""
    items = sorted(((m.index(1), c) for m, c in p.terms.items()))
    lead = items[0][1]
    key = tuple((v, Fraction(c) / lead) for v, c in items)
    return lead, key


def _product_of_roots(layout: Layout, roots: Sequence[Polynomial]) -> Polynomial:
    result = layout.ring.one()
    for r in roots:
        result = result * r
    return result


@lru_cache(maxsize=None)
def _parabolic_signs(layout: Layout, J: frozenset) -> tuple:
    """Elements w of W_J with the sign w(blacktriangle_J) / blacktriangle_J."""
    roots = layout.positive_roots(J)
    canon = {}
    for r in roots:
        lead, key = _canonical_linear(r)
        canon[key] = lead
    out = []
    for w in layout.G.parabolic_elements(J):
        target, sign = layout.variable_map(w)
        s = 1
        for r in roots:
            lead, key = _canonical_linear(r.signed_permute(target, sign))
            if key not in canon:
                raise InvariantViolation("root system is not stable under its Weyl group")
            if (lead > 0) != (canon[key] > 0):
                s = -s
        out.append((w, s))
    return tuple(out)


def blacktriangle(layout: Layout, J: frozenset | None = None) -> Polynomial:
    return _product_of_roots(layout, layout.positive_roots(layout.full() if J is None else J))


def theta_r(layout: Layout, J: frozenset) -> int:
    """Number of positive roots of W_c outside W_J."""
    return len(layout.positive_roots(layout.full())) - len(layout.positive_roots(J))


def divide_by_roots(num: Polynomial, roots: Sequence[Polynomial]) -> Polynomial:
    for r in roots:
        try:
            num = exact_divide(num, r)
        except DivisionError:
            raise InvariantViolation(f"denominator {r} does not clear") from None
    return num


def demazure_sum(layout: Layout, J: frozenset, f: Polynomial) -> Polynomial:
    """sum_{w in W_J} w(f / blacktriangle_J), as an exact polynomial."""
    num = layout.ring.zero()
    for w, s in _parabolic_signs(layout, J):
        t = layout.act(w, f)
        num = num + t if s > 0 else num - t
    return divide_by_roots(num, layout.positive_roots(J))


# ----------------------------------------------------------------------
# symmetrizers
# ----------------------------------------------------------------------

def symmetrize(maps: Sequence, num: Polynomial, denom: Sequence[Polynomial]) -> Polynomial:
    """sum over the variable maps (target, sign) of w(num / prod(denom)).

    The rational intermediate is brought to the common denominator formed by
    the least common multiple of the images of the root factors; the final
    division must be exact, otherwise InvariantViolation is raised.
    """
    ring = num.ring
    if not denom:
        total = ring.zero()
        for target, sign in maps:
            total = total + num.signed_permute(target, sign)
        return total
    images = []
    lcm: dict = {}
    forms: dict = {}
    for target, sign in maps:
        scal = Fraction(1)
        mult: dict = {}
        for r in denom:
            lead, key = _canonical_linear(r.signed_permute(target, sign))
            scal *= lead
            mult[key] = mult.get(key, 0) + 1
            if key not in forms:
                forms[key] = ring.linear({v: c for v, c in key})
        for key, m in mult.items():
            lcm[key] = max(lcm.get(key, 0), m)
        images.append((target, sign, scal, mult))
    total = ring.zero()
    cofactor_cache: dict = {}
    for target, sign, scal, mult in images:
        missing = tuple(sorted((key, lcm[key] - mult.get(key, 0)) for key in lcm if lcm[key] - mult.get(key, 0)))
        cof = cofactor_cache.get(missing)
        if cof is None:
            cof = ring.one()
            for key, m in missing:
                cof = cof * forms[key] ** m
            cofactor_cache[missing] = cof
        term = num.signed_permute(target, sign) * cof
        total = total + term.scale(Fraction(1) / scal)
    divisors = [forms[key] for key, m in sorted(lcm.items()) for _ in range(m)]
    return divide_by_roots(total, divisors)


def shuffle_maps(ring: PolyRing, groups: Sequence) -> list:
    """A transversal of a Young-type subgroup given as groups of
    (variable list, sub-block sizes).  Each map sends the sub-blocks of each
    group to every ordered set partition of the group's variables."""
    per_group = []
    for vars_, sizes in groups:
        vars_ = list(vars_)
        opts = []
        for assignment in _set_partitions(list(range(len(vars_))), list(sizes)):
            mapping = {}
            pos = 0
            for size, chosen in zip(sizes, assignment):
                for t, idx in enumerate(chosen):
                    mapping[vars_[pos + t]] = vars_[idx]
                pos += size
            opts.append(mapping)
        per_group.append(opts)
    n = ring.nvars
    maps = []
    for combo in itertools.product(*per_group):
        target = list(range(n))
        for mapping in combo:
            for a, b in mapping.items():
                target[a] = b
        maps.append((target, [1] * n))
    return maps


def _set_partitions(items: list, sizes: list):
    if not sizes:
        if not items:
            yield []
        return
    for chosen in itertools.combinations(items, sizes[0]):
        rest = [x for x in items if x not in chosen]
        for tail in _set_partitions(rest, sizes[1:]):
            yield [chosen] + tail


def coset_maps(layout: Layout, J_big: frozenset, J_small: frozenset) -> list:
    """Variable maps of the minimal coset representatives [W_big / W_small]."""
    return [layout.variable_map(w) for w in layout.G.min_coset_reps(J_big, J_small)]


# ----------------------------------------------------------------------
# Euler classes from slot weights
# ----------------------------------------------------------------------

def flag_blocks(layout: Layout, parts: Sequence[DimVector], start: dict | None = None) -> list:
    """Weights of the consecutive blocks parts[0], parts[1], ... at every
    vertex, starting after `start[k]` slots (default 0)."""
    n = layout.q.n
    offset = [0 if start is None else start.get(k, 0) for k in range(n)]
    out = []
    for p in parts:
        block = {}
        for k in range(n):
            block[k] = [layout.slot_weight(k, offset[k] + t) for t in range(1, p[k] + 1)]
            offset[k] += p[k]
        out.append(block)
    return out


def _pair_factors(U: Sequence[Polynomial], W: Sequence[Polynomial]) -> list:
    return [w - u for u in U for w in W]


def relative_factors(q: Quiver, blocks: list, beta: Sequence[int], kind: str) -> list:
    """Linear factors of S^e_d (kind 'S') or E^e_d (kind 'E') where the
    d-blocks are grouped into e-parts by beta."""
    groups, pos = [], 0
    for b in beta:
        groups.append(range(pos, pos + b))
        pos += b
    out = []
    for grp in groups:
        for r, rr in itertools.combinations(grp, 2):
            if kind == "S":
                for k in range(q.n):
                    out += _pair_factors(blocks[r][k], blocks[rr][k])
            else:
                for a in q.arrows:
                    i, j = q.vertex_index(a.src), q.vertex_index(a.tgt)
                    out += _pair_factors(blocks[r][i], blocks[rr][j])
    return out


def _composition_beta(d: VectorComposition, e: VectorComposition | None):
    if e is None:
        return (len(d),)
    beta = d.refines(e)
    if beta is None:
        raise DivisionError("the first composition does not refine the second")
    return beta


def class_S_factors(q: Quiver, c: DimVector, d: VectorComposition, e: VectorComposition | None = None) -> list:
    layout = ordinary_layout(q, c)
    return relative_factors(q, flag_blocks(layout, d.parts), _composition_beta(d, e), "S")


def class_E_factors(q: Quiver, c: DimVector, d: VectorComposition, e: VectorComposition | None = None) -> list:
    layout = ordinary_layout(q, c)
    return relative_factors(q, flag_blocks(layout, d.parts), _composition_beta(d, e), "E")


def class_S(q: Quiver, c: DimVector, d: VectorComposition) -> Polynomial:
    return _product_of_roots(ordinary_layout(q, c), class_S_factors(q, c, d))


def class_E(q: Quiver, c: DimVector, d: VectorComposition) -> Polynomial:
    return _product_of_roots(ordinary_layout(q, c), class_E_factors(q, c, d))


def class_S_rel(q: Quiver, c: DimVector, d: VectorComposition, e: VectorComposition) -> Polynomial:
    """S^e_d = S_d / S_e by exact division."""
    return exact_divide(class_S(q, c, d), class_S(q, c, e))


def class_E_rel(q: Quiver, c: DimVector, d: VectorComposition, e: VectorComposition) -> Polynomial:
    return exact_divide(class_E(q, c, d), class_E(q, c, e))


# ----------------------------------------------------------------------
# theta classes for two-block data
# ----------------------------------------------------------------------

@dataclass
class TwoBlock:
    """Weights of the blocks A, B, A* at every vertex for d = (a, b) placed
    after `offset` leading variables per vertex."""

    A: dict
    B: dict
    Astar: dict


def two_block_weights(layout: Layout, a: DimVector, b: DimVector, offset: dict | None = None) -> TwoBlock:
    inv = layout.inv
    q = layout.q
    offset = offset or {}
    A, B, As = {}, {}, {}
    for k, v in enumerate(q.vertices):
        kind = inv.kind(v)
        off = offset.get(k, 0)
        if kind == "+":
            tk = inv.theta_vertex_index(k)
            A[k] = [layout.x(k, off + t) for t in range(1, a[k] + 1)]
            B[k] = [layout.x(k, off + a[k] + t) for t in range(1, b[k] + 1)]
            As[k] = [layout.x(k, off + a[k] + b[k] + t) for t in range(1, a[tk] + 1)]
        elif kind == "0":
            A[k] = [layout.x(k, off + t) for t in range(1, a[k] + 1)]
            half = [layout.x(k, off + a[k] + t) for t in range(1, b[k] // 2 + 1)]
            B[k] = half + [-x for x in half] + ([layout.ring.zero()] if b[k] % 2 else [])
            As[k] = [-x for x in A[k]]
    for k, v in enumerate(q.vertices):
        if inv.kind(v) == "-":
            u = inv.theta_vertex_index(k)
            A[k] = [-x for x in As[u]]
            B[k] = [-x for x in B[u]]
            As[k] = [-x for x in A[u]]
    return TwoBlock(A, B, As)


def _half_pairs(ys: Sequence[Polynomial], diagonal: bool) -> list:
    out = []
    for p in range(len(ys)):
        for r in range(p if diagonal else p + 1, len(ys)):
            out.append(-ys[p] - ys[r])
    return out


def theta_S_factors(layout: Layout, a: DimVector, b: DimVector, offset: dict | None = None) -> list:
    tb = two_block_weights(layout, a, b, offset)
    inv = layout.inv
    out = []
    for k, v in enumerate(layout.q.vertices):
        kind = inv.kind(v)
        if kind == "+":
            out += _pair_factors(tb.A[k], tb.B[k])
            out += _pair_factors(tb.A[k], tb.Astar[k])
            out += _pair_factors(tb.B[k], tb.Astar[k])
        elif kind == "0":
            out += _pair_factors(tb.A[k], tb.B[k])
            out += _half_pairs(tb.A[k], diagonal=inv.sigma[v] == -1)
    return out


def theta_E_factors(layout: Layout, a: DimVector, b: DimVector, offset: dict | None = None) -> list:
    tb = two_block_weights(layout, a, b, offset)
    inv = layout.inv
    q = layout.q
    out = []
    for arrow in q.arrows:
        kind = inv.arrow_kind[arrow.name]
        if kind == "-":
            continue
        i, j = q.vertex_index(arrow.src), q.vertex_index(arrow.tgt)
        if kind == "+":
            out += _pair_factors(tb.A[i], tb.B[j])
            out += _pair_factors(tb.A[i], tb.Astar[j])
            out += _pair_factors(tb.B[i], tb.Astar[j])
        else:
            # theta-fixed arrow theta(j) -> j: pairs inside A(theta j) -> A*(j)
            out += _pair_factors(tb.A[i], tb.B[j])
            eps = inv.sigma[arrow.src] * inv.varsigma[arrow.name]
            out += _half_pairs(tb.A[i], diagonal=eps == 1)
    return out


def class_theta_S(inv: InvolutionData, c: DimVector, a: DimVector, b: DimVector) -> Polynomial:
    layout = theta_layout(inv, c)
    _check_two_block(inv, c, a, b)
    return _product_of_roots(layout, theta_S_factors(layout, a, b))


def class_theta_E(inv: InvolutionData, c: DimVector, a: DimVector, b: DimVector) -> Polynomial:
    layout = theta_layout(inv, c)
    _check_two_block(inv, c, a, b)
    return _product_of_roots(layout, theta_E_factors(layout, a, b))


def _check_two_block(inv: InvolutionData, c: DimVector, a: DimVector, b: DimVector):
    if inv.D(a) + b != c:
        raise QuiverError("two-block datum must satisfy D(a) + b = c")
    inv.check_iso(IsotropicVectorComposition((a,) if not a.is_zero() else (), b))


# ----------------------------------------------------------------------
# invariants
# ----------------------------------------------------------------------

def is_invariant(layout: Layout, J: frozenset, f: Polynomial) -> bool:
    for (fi, j) in J:
        target, sign = layout.simple_map(fi, j)
        if f.signed_permute(target, sign) != f:
            return False
    return True


def _block_exponents(kind: str, size: int, deg: int) -> list:
    """Weakly decreasing exponent tuples of the given total degree (even parts for B)."""
    out = []
    step = 2 if kind == "B" else 1
    if deg % step:
        return out

    def rec(remaining, maxpart, slots, acc):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for p in range(min(remaining, maxpart), -1, -step):
            if p % step:
                continue
            rec(remaining - p, p, slots - 1, acc + [p])

    rec(deg, deg, size, [])
    return out


def _orbit_sum(ring: PolyRing, kind_vars: Sequence, exps: Sequence[tuple]) -> Polynomial:
    per_block = []
    for (kind, vars_), e in zip(kind_vars, exps):
        per_block.append(sorted(set(itertools.permutations(e))))
    terms = {}
    for combo in itertools.product(*per_block):
        m = [0] * ring.nvars
        for (kind, vars_), perm in zip(kind_vars, combo):
            for v, x in zip(vars_, perm):
                m[v] = x
        terms[tuple(m)] = 1
    return Polynomial(ring, terms)


def invariant_basis(layout: Layout, J: frozenset, degree: int, exact_degree: bool = False) -> list:
    """Orbit sums of monomials under W_J, graded, up to (or exactly at) degree."""
    blocks = [(kind, vars_) for kind, vars_, _ in layout.parabolic_blocks(J)]
    covered = {v for _, vars_ in blocks for v in vars_}
    blocks += [("A", (v,)) for v in range(layout.ring.nvars) if v not in covered]
    out = []
    degrees = [degree] if exact_degree else range(degree + 1)
    for deg in degrees:
        for split in _compositions_weak(deg, len(blocks)):
            choices = [_block_exponents(kind, len(vars_), dd) for (kind, vars_), dd in zip(blocks, split)]
            for exps in itertools.product(*choices):
                out.append(_orbit_sum(layout.ring, blocks, exps))
    return out


def _compositions_weak(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions_weak(total - first, parts - 1):
            yield (first,) + rest


def hilbert_series(layout: Layout, J: frozenset, degree: int) -> list:
    """Graded dimensions of the W_J-invariants, degrees 0..degree."""
    blocks = [(kind, len(vars_)) for kind, vars_, _ in layout.parabolic_blocks(J)]
    covered = sum(size for _, size in blocks)
    blocks += [("A", 1)] * (layout.ring.nvars - covered)
    # generating function product; count partitions per block
    series = [1] + [0] * degree
    for kind, size in blocks:
        block = [len(_block_exponents(kind, size, dd)) for dd in range(degree + 1)]
        series = [sum(series[i] * block[n - i] for i in range(n + 1)) for n in range(degree + 1)]
    return series


def find_demazure_preimage_of_one(layout: Layout, J: frozenset) -> Polynomial:
    """A polynomial h with demazure_sum(J, h) == 1, found by a bounded search
    over monomials of degree equal to the number of positive roots of W_J."""
    N = len(layout.positive_roots(J))
    n = layout.ring.nvars
    for exps in _compositions_weak(N, n):
        m = Polynomial(layout.ring, {exps: 1})
        val = demazure_sum(layout, J, m).constant_value()
        if val:
            return m.scale(Fraction(1) / Fraction(val))
    raise InvariantViolation("no monomial h with demazure_sum(h) a nonzero constant")


# ----------------------------------------------------------------------
# relative Demazure operators
# ----------------------------------------------------------------------

def relative_r(layout: Layout, J_big: frozenset, J_small: frozenset) -> int:
    """Number of positive roots of W_big that are not roots of W_small."""
    return len(layout.positive_roots(J_big)) - len(layout.positive_roots(J_small))


def relative_demazure(layout: Layout, J_big: frozenset, J_small: frozenset, f: Polynomial) -> Polynomial:
    """Delta along the canonical reduced word of the longest minimal coset
    representative of W_big / W_small."""
    G = layout.G
    w = G.longest_min_coset_rep(J_big, J_small)
    return demazure_word(layout, G.reduced_word(w), f)
