"""The quiver Schur algebra and its mixed (theta) version acting on graded
spaces of partially symmetric polynomials.

The realization follows the polynomial representation: merges symmetrize
``E/S * f`` over minimal coset representatives, splits are inclusions,
polynomials act by multiplication and idempotents project.  A
:class:`GradedElement` is a finitely supported map from compositions of a
fixed dimension vector to polynomials.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .operators import (
    Layout, coset_maps, flag_blocks, invariant_basis, is_invariant, layout_for,
    relative_factors, shuffle_maps, symmetrize, theta_E_factors, theta_S_factors, theta_layout,
)
from .poly import InvariantViolation, Polynomial, norm_coeff, parse_polynomial
from .quiver import (
    DimVector, InvolutionData, IsotropicVectorComposition, Quiver, QuiverError, VectorComposition,
    dim_sum,
)
from .weyl import (
    crossing_datum, refinement_datum, theta_refinement_datum,
)

Composition = Union[VectorComposition, IsotropicVectorComposition]


# ----------------------------------------------------------------------
# settings
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Setting:
    """A quiver (ordinary case) or a quiver with involution (theta case)
    together with the total dimension vector c."""

    quiver: Quiver
    c: DimVector
    inv: InvolutionData | None = None

    @staticmethod
    def ordinary(q: Quiver, c) -> "Setting":
        return Setting(q, q.dim(c))

    @staticmethod
    def theta(inv: InvolutionData, c) -> "Setting":
        c = inv.quiver.dim(c)
        inv.check_total(c)
        return Setting(inv.quiver, c, inv)

    @property
    def is_theta(self) -> bool:
        return self.inv is not None

    @property
    def layout(self) -> Layout:
        return layout_for(self.inv if self.inv is not None else self.quiver, self.c)

    @property
    def ring(self):
        return self.layout.ring

    def total(self, d: Composition) -> DimVector:
        if isinstance(d, IsotropicVectorComposition):
            return self.inv.iso_total(d)
        return d.total

    def check(self, d: Composition) -> Composition:
        if self.is_theta != isinstance(d, IsotropicVectorComposition):
            raise QuiverError("composition type does not match the setting")
        if self.is_theta:
            self.inv.check_iso(d)
        if self.total(d) != self.c:
            raise QuiverError(f"{self.quiver.format_comp(d)} is not a composition of {self.quiver.format_dim(self.c)}")
        return d

    def parse_comp(self, text: str) -> Composition:
        return self.check(self.quiver.parse_comp(text))

    def fmt(self, d: Composition) -> str:
        return self.quiver.format_comp(d)

    def compositions(self) -> list:
        if self.is_theta:
            return iso_compositions(self.inv, self.c)
        return vector_compositions(self.quiver, self.c)

    def basis(self, d: Composition, degree: int) -> list:
        lay = self.layout
        return invariant_basis(lay, lay.parabolic(d), degree)


def vector_compositions(q: Quiver, c: DimVector) -> list:
    """All vector compositions of c, sorted by length then lexicographically."""
    out = []

    def rec(rest: DimVector, acc):
        if rest.is_zero():
            if acc:
                out.append(VectorComposition(tuple(acc)))
            return
        for part in itertools.product(*[range(r + 1) for r in rest]):
            p = DimVector(tuple(part))
            if p.is_zero():
                continue
            rec(rest - p, acc + [p])

    rec(c, [])
    return sorted(out, key=lambda d: (len(d), [p.entries for p in d.parts]))


def iso_compositions(inv: InvolutionData, c: DimVector) -> list:
    """All isotropic vector compositions with theta-total c."""
    q = inv.quiver
    out = []

    def rec(rest: DimVector, acc):
        # choose the infinity part = rest, if admissible
        try:
            out.append(inv.check_iso(IsotropicVectorComposition(tuple(acc), rest)))
        except QuiverError:
            pass
        for part in itertools.product(*[range(r + 1) for r in rest]):
            p = DimVector(tuple(part))
            if p.is_zero():
                continue
            dp = inv.D(p)
            if all(x <= r for x, r in zip(dp, rest)):
                rec(rest - dp, acc + [p])

    rec(c, [])
    return sorted(out, key=lambda d: (len(d), [p.entries for p in d.finite], d.inf.entries))


# ----------------------------------------------------------------------
# graded elements
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GradedElement:
    """Finitely supported map composition -> polynomial (zeros dropped)."""

    components: dict = field(default_factory=dict)

    @staticmethod
    def of(d: Composition, f: Polynomial) -> "GradedElement":
        return GradedElement({d: f} if f else {})

    @staticmethod
    def from_items(items) -> "GradedElement":
        comps = {}
        for d, f in items:
            g = comps.get(d)
            g = f if g is None else g + f
            if g:
                comps[d] = g
            else:
                comps.pop(d, None)
        return GradedElement(comps)

    def __add__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement.from_items(list(self.components.items()) + list(other.components.items()))

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + other.scale(-1)

    def scale(self, c) -> "GradedElement":
        return GradedElement.from_items((d, f.scale(c)) for d, f in self.components.items())

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def get(self, d: Composition):
        return self.components.get(d)

    def to_json(self, setting: Setting) -> str:
        data = {setting.fmt(d): f.to_text() for d, f in sorted(
            self.components.items(), key=lambda kv: setting.fmt(kv[0]))}
        return json.dumps(data, sort_keys=True)

    @staticmethod
    def from_json(setting: Setting, text: str) -> "GradedElement":
        data = json.loads(text)
        return GradedElement.from_items(
            (setting.parse_comp(k), parse_polynomial(setting.ring, v)) for k, v in data.items())


def check_element(setting: Setting, x: GradedElement):
    lay = setting.layout
    for d, f in x.components.items():
        setting.check(d)
        if not is_invariant(lay, lay.parabolic(d), f):
            raise InvariantViolation(f"component at {setting.fmt(d)} is not invariant")


# ----------------------------------------------------------------------
# elementary operators on single components
# ----------------------------------------------------------------------

def _cancel(num: list, den: list):
    """Cancel common linear factors (up to scalars) between num and den."""
    from .operators import _canonical_linear
    scalar = Fraction(1)
    pool: dict = {}
    for r in num:
        lead, key = _canonical_linear(r)
        pool.setdefault(key, []).append((lead, r))
    rest_den = []
    for r in den:
        lead, key = _canonical_linear(r)
        if pool.get(key):
            nlead, _ = pool[key].pop()
            scalar *= Fraction(nlead) / Fraction(lead)
        else:
            rest_den.append(r)
    rest_num = [r for items in pool.values() for _, r in items]
    return scalar, rest_num, rest_den


def _times(f: Polynomial, factors: Sequence[Polynomial]) -> Polynomial:
    for r in factors:
        f = f * r
    return f


def _var_index(p: Polynomial) -> int:
    (m,) = p.terms
    return m.index(1)


def merge_polynomial(setting: Setting, d: VectorComposition, e: VectorComposition, f: Polynomial) -> Polynomial:
    """The merge formula sym(E^e_d / S^e_d * f) on one component (ordinary)."""
    beta = d.refines(e)
    if beta is None:
        raise QuiverError(f"{setting.fmt(d)} does not refine {setting.fmt(e)}")
    return _finite_merge(setting.layout, tuple(d.parts), tuple(beta), f)


def _finite_merge(lay: Layout, parts: tuple, beta: tuple, f: Polynomial) -> Polynomial:
    if all(b == 1 for b in beta):
        return f
    scalar, E, S, maps = _merge_data(lay, parts, beta)
    return symmetrize(maps, f * E, S).scale(scalar)


@lru_cache(maxsize=4096)
def _merge_data(lay: Layout, parts: tuple, beta: tuple):
    """(scalar, product of uncancelled E factors, S factors, shuffle maps)."""
    q = lay.q
    blocks = flag_blocks(lay, parts)
    E = relative_factors(q, blocks, beta, "E")
    S = relative_factors(q, blocks, beta, "S")
    scalar, E, S = _cancel(E, S)
    groups = []
    pos = 0
    for b in beta:
        for k in range(q.n):
            grp = [blocks[r][k] for r in range(pos, pos + b)]
            sizes = [len(x) for x in grp]
            if sum(sizes) and len([s for s in sizes if s]) > 1:
                vars_ = [_var_index(w) for x in grp for w in x]
                groups.append((vars_, sizes))
        pos += b
    maps = shuffle_maps(lay.ring, groups)
    return scalar, _times(lay.ring.one(), E), tuple(S), maps


def theta_merge_polynomial(setting: Setting, d: IsotropicVectorComposition, e: IsotropicVectorComposition,
                           f: Polynomial) -> Polynomial:
    """theta merge d -> e: a finitely refining merge followed, if needed, by
    one two-block merge into the infinity part."""
    inv = setting.inv
    beta = inv.theta_refines(d, e)
    if beta is None:
        raise QuiverError(f"{setting.fmt(d)} does not refine {setting.fmt(e)}")
    lay = setting.layout
    q = setting.quiver
    t = beta[-1] - 1
    fin_beta = tuple(beta[:-1]) + ((t,) if t else ())
    # step 1: merge of the finite parts, infinity part untouched
    f = _finite_merge(lay, tuple(d.finite), tuple(fin_beta), f) if d.finite else f
    if not t:
        return f
    # step 2: the last finite part of the grouped composition joins the infinity part
    mid = [dim_sum(d.finite[pos:pos + b], q.n) for pos, b in _groups(fin_beta)]
    lead, a = mid[:-1], mid[-1]
    return _two_block_merge(setting, lead, a, d.inf, f)


def _groups(beta):
    pos = 0
    for b in beta:
        yield pos, b
        pos += b


def _two_block_merge(setting: Setting, lead: Sequence[DimVector], a: DimVector, b: DimVector,
                     f: Polynomial) -> Polynomial:
    inv = setting.inv
    lay = setting.layout
    q = setting.quiver
    offset = {}
    for k in range(q.n):
        offset[k] = sum(p[k] for p in lead)
    sub_c = inv.D(a) + b
    sub = theta_layout(inv, sub_c)
    J_big = sub.full()
    J_small = sub.parabolic(IsotropicVectorComposition((a,), b))
    maps = []
    for target, sign in coset_maps(sub, J_big, J_small):
        big_t, big_s = list(range(lay.ring.nvars)), [1] * lay.ring.nvars
        for v in range(sub.ring.nvars):
            vert, j = sub.ring.variables[v]
            k = q.vertex_index(vert)
            src = lay.var_start[k] + offset[k] + j - 1
            tv, tj = sub.ring.variables[target[v]]
            big_t[src] = lay.var_start[k] + offset[k] + tj - 1
            big_s[src] = sign[v]
        maps.append((big_t, big_s))
    E = theta_E_factors(lay, a, b, offset)
    S = theta_S_factors(lay, a, b, offset)
    scalar, E, S = _cancel(E, S)
    return symmetrize(maps, _times(f, E), S).scale(scalar)


# ----------------------------------------------------------------------
# operators on graded elements
# ----------------------------------------------------------------------

def apply_merge(setting: Setting, d: Composition, e: Composition, x: GradedElement) -> GradedElement:
    setting.check(d), setting.check(e)
    f = x.get(d)
    if f is None:
        return GradedElement()
    if setting.is_theta:
        return GradedElement.of(e, theta_merge_polynomial(setting, d, e, f))
    return GradedElement.of(e, merge_polynomial(setting, d, e, f))


def _refines(setting: Setting, d: Composition, e: Composition) -> bool:
    if setting.is_theta:
        return setting.inv.theta_refines(d, e) is not None
    return d.refines(e) is not None


def apply_split(setting: Setting, e: Composition, d: Composition, x: GradedElement) -> GradedElement:
    """Inclusion of the e-component into the d-slot (d refines e)."""
    setting.check(d), setting.check(e)
    if not _refines(setting, d, e):
        raise QuiverError(f"{setting.fmt(d)} does not refine {setting.fmt(e)}")
    f = x.get(e)
    return GradedElement() if f is None else GradedElement.of(d, f)


def apply_idempotent(setting: Setting, d: Composition, x: GradedElement) -> GradedElement:
    f = x.get(d)
    return GradedElement() if f is None else GradedElement.of(d, f)


def apply_poly(setting: Setting, d: Composition, g: Polynomial, x: GradedElement) -> GradedElement:
    lay = setting.layout
    if not is_invariant(lay, lay.parabolic(d), g):
        raise InvariantViolation(f"{g} is not invariant for {setting.fmt(d)}")
    f = x.get(d)
    return GradedElement() if f is None else GradedElement.of(d, f * g)


def crossing_target(setting: Setting, d: Composition, k: int) -> Composition:
    if setting.is_theta:
        return setting.inv.theta_swap(d, k)
    return d.swap(k)


def crossing_middle(setting: Setting, d: Composition, k: int) -> Composition:
    if setting.is_theta:
        return setting.inv.theta_wedge_at(d, k)
    return d.wedge_at(k)


def apply_crossing(setting: Setting, d: Composition, k: int, x: GradedElement) -> GradedElement:
    """split_{wedge_k d}^{s_k d} o merge_d^{wedge_k d}."""
    mid = crossing_middle(setting, d, k)
    y = apply_merge(setting, d, mid, apply_idempotent(setting, d, x))
    return apply_split(setting, mid, crossing_target(setting, d, k), y)


# ----------------------------------------------------------------------
# words
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Idem:
    d: object

    @property
    def source(self):
        return self.d

    @property
    def target(self):
        return self.d


@dataclass(frozen=True)
class Merge:
    d: object
    e: object

    @property
    def source(self):
        return self.d

    @property
    def target(self):
        return self.e


@dataclass(frozen=True)
class Split:
    e: object
    d: object

    @property
    def source(self):
        return self.e

    @property
    def target(self):
        return self.d


@dataclass(frozen=True)
class Cup:
    d: object
    g: Polynomial

    @property
    def source(self):
        return self.d

    @property
    def target(self):
        return self.d


@dataclass(frozen=True)
class Cross:
    d: object
    k: int
    target_comp: object = None

    @property
    def source(self):
        return self.d

    @property
    def target(self):
        return self.target_comp


@dataclass(frozen=True)
class SchurWord:
    """g_1 * g_2 * ... * g_n; the rightmost generator acts first."""

    gens: tuple

    def __post_init__(self):
        for left, right in zip(self.gens, self.gens[1:]):
            if left.source != right.target:
                raise QuiverError("generators in the word do not compose")

    @property
    def source(self):
        return self.gens[-1].source

    @property
    def target(self):
        return self.gens[0].target

    def __mul__(self, other: "SchurWord") -> "SchurWord":
        return SchurWord(self.gens + other.gens)


def word(setting: Setting, *gens) -> SchurWord:
    fixed = []
    for g in gens:
        if isinstance(g, Cross) and g.target_comp is None:
            g = Cross(g.d, g.k, crossing_target(setting, g.d, g.k))
        fixed.append(g)
    return SchurWord(tuple(fixed))


def apply_generator(setting: Setting, g, x: GradedElement) -> GradedElement:
    if isinstance(g, Idem):
        return apply_idempotent(setting, g.d, x)
    if isinstance(g, Merge):
        return apply_merge(setting, g.d, g.e, x)
    if isinstance(g, Split):
        return apply_split(setting, g.e, g.d, x)
    if isinstance(g, Cup):
        return apply_poly(setting, g.d, g.g, x)
    if isinstance(g, Cross):
        return apply_crossing(setting, g.d, g.k, x)
    raise TypeError(f"unknown generator {g!r}")


def apply_word(setting: Setting, w: SchurWord, x: GradedElement) -> GradedElement:
    x = apply_idempotent(setting, w.source, x)
    for g in reversed(w.gens):
        x = apply_generator(setting, g, x)
    return x


def format_word(setting: Setting, w: SchurWord) -> str:
    out = []
    for g in w.gens:
        if isinstance(g, Idem):
            out.append(f"e[{setting.fmt(g.d)}]")
        elif isinstance(g, Merge):
            out.append(f"merge[{setting.fmt(g.d)}->{setting.fmt(g.e)}]")
        elif isinstance(g, Split):
            out.append(f"split[{setting.fmt(g.e)}->{setting.fmt(g.d)}]")
        elif isinstance(g, Cup):
            out.append(f"cup[{setting.fmt(g.d)}; {g.g.to_text()}]")
        elif isinstance(g, Cross):
            out.append(f"cross[{setting.fmt(g.d)}; {g.k}]")
    return " * ".join(out)


def _split_top_level(text: str, sep: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    return out


def parse_word(setting: Setting, text: str) -> SchurWord:
    gens = []
    for token in _split_top_level(text, "*"):
        name, _, rest = token.partition("[")
        if not rest.endswith("]"):
            raise QuiverError(f"malformed generator {token!r}")
        body = rest[:-1]
        name = name.strip()
        if name in ("merge", "split"):
            src, tgt = body.split("->")
            a, b = setting.parse_comp(src), setting.parse_comp(tgt)
            gens.append(Merge(a, b) if name == "merge" else Split(a, b))
        elif name == "e":
            gens.append(Idem(setting.parse_comp(body)))
        elif name in ("cup", "cross"):
            comp, _, arg = body.partition(";")
            d = setting.parse_comp(comp)
            if name == "cup":
                gens.append(Cup(d, parse_polynomial(setting.ring, arg)))
            else:
                gens.append(Cross(d, int(arg)))
        else:
            raise QuiverError(f"unknown generator {name!r}")
    return word(setting, *gens)


# ----------------------------------------------------------------------
# operator identities
# ----------------------------------------------------------------------

def default_degree(setting: Setting) -> int:
    return max(6, 2 * setting.c.total)


def operator_counterexample(setting: Setting, w1, w2, degree: int | None = None):
    """First basis input on which the two words differ, or None.

    A word may be a SchurWord or a list of (coefficient, SchurWord) pairs
    (a linear combination); combinations must share one source.
    """
    if degree is None:
        degree = default_degree(setting)
    terms1, terms2 = _as_combination(w1), _as_combination(w2)
    sources = {w.source for _, w in terms1 + terms2}
    for d in sorted(sources, key=setting.fmt):
        for f in setting.basis(d, degree):
            x = GradedElement.of(d, f)
            a = _apply_combination(setting, terms1, x)
            b = _apply_combination(setting, terms2, x)
            if a != b:
                return d, f, a, b
    return None


def _as_combination(w):
    if isinstance(w, SchurWord):
        return [(1, w)]
    return list(w)


def _apply_combination(setting: Setting, terms, x: GradedElement) -> GradedElement:
    total = GradedElement()
    for coef, w in terms:
        if w.source in x.components:
            total = total + apply_word(setting, w, x).scale(coef)
    return total


def operator_equal(setting: Setting, w1, w2, degree: int | None = None) -> bool:
    return operator_counterexample(setting, w1, w2, degree) is None


# ----------------------------------------------------------------------
# operator matrices and exact rank
# ----------------------------------------------------------------------

@dataclass
class OperatorMatrix:
    """Columns are operators, rows (source, input index, target, monomial)."""

    row_labels: list
    column_labels: list
    rows: list  # list of lists of Fractions

    def rank(self) -> int:
        return exact_rank(self.rows)


def operator_matrix(setting: Setting, words: Sequence[SchurWord], degree: int,
                    labels: Sequence | None = None) -> OperatorMatrix:
    columns: list = []
    keys: dict = {}
    inputs: dict = {}
    for w in words:
        d = w.source
        if d not in inputs:
            inputs[d] = setting.basis(d, degree)
        col = {}
        for idx, f in enumerate(inputs[d]):
            y = apply_word(setting, w, GradedElement.of(d, f))
            for e, g in y.components.items():
                for m, cf in g.terms.items():
                    key = (setting.fmt(d), idx, setting.fmt(e), m)
                    keys.setdefault(key, len(keys))
                    col[keys[key]] = cf
        columns.append(col)
    row_labels = sorted(keys, key=keys.get)
    rows = [[col.get(r, 0) for col in columns] for r in range(len(row_labels))]
    return OperatorMatrix(row_labels, list(labels) if labels else [format_word(setting, w) for w in words], rows)


_RANK_PRIME = (1 << 61) - 1


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals.

    The rank modulo a large prime never exceeds the rational rank, so a
    modular rank equal to the smaller matrix dimension is conclusive.  In
    every other case the rank is recomputed by fraction-free elimination.
    """
    mat = _integer_rows(rows)
    if not mat:
        return 0
    bound = min(len(mat), len(mat[0]))
    if _modular_rank(mat, _RANK_PRIME) == bound:
        return bound
    return _bareiss_rank(mat)


def _integer_rows(rows: Sequence[Sequence]) -> list:
    mat = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        mat.append([int(x * den) for x in r])
    return mat


def _modular_rank(mat: list, p: int) -> int:
    rows = [[x % p for x in r] for r in mat]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            a = rows[i][col]
            if a:
                rows[i] = [(x - a * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
    return rank


def _bareiss_rank(mat: list) -> int:
    mat = [list(r) for r in mat]
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            a = mat[i][col]
            if a:
                mat[i] = [(p * x - a * y) // prev for x, y in zip(mat[i], mat[rank])]
            else:
                mat[i] = [(p * x) // prev for x in mat[i]]
        prev = p
        rank += 1
    return rank


# ----------------------------------------------------------------------
# Bott-Samelson elements
# ----------------------------------------------------------------------

def bott_samelson_element(setting: Setting, cd, cup: Polynomial) -> SchurWord:
    """merge_{e^0}^{e} * cross_{e^2}^{j_1} * ... * cross_{e^{2k}}^{j_k} * cup * split_d^{e^{2k}}."""
    rd = cd.refinement
    seq = cd.sequence
    lay = setting.layout
    top = seq[-1]
    if not is_invariant(lay, lay.parabolic(top), cup):
        raise InvariantViolation("cup polynomial is not invariant for the last composition")
    gens = [Merge(seq[0], rd.e)]
    for l, j in enumerate(cd.word, start=1):
        gens.append(Cross(seq[2 * l], j, seq[2 * l - 2]))
    gens.append(Cup(top, cup))
    gens.append(Split(rd.d, top))
    return SchurWord(tuple(gens))


def orbit_data(setting: Setting) -> list:
    """All (e, d, w) with w a minimal double coset representative."""
    lay = setting.layout
    G = lay.G
    out = []
    comps = setting.compositions()
    for e in comps:
        for d in comps:
            for w in G.min_double_coset_reps(lay.parabolic(e), lay.parabolic(d)):
                out.append((e, d, w))
    return out


def crossing_data_for(setting: Setting, e, d, w):
    if setting.is_theta:
        rd = theta_refinement_datum(setting.inv, setting.c, e, d, w)
        return crossing_datum(rd, setting.inv)
    rd = refinement_datum(setting.quiver, setting.c, e, d, w)
    return crossing_datum(rd)


def bott_samelson_words(setting: Setting, degree: int) -> list:
    words = []
    for e, d, w in orbit_data(setting):
        cd = crossing_data_for(setting, e, d, w)
        for g in setting.basis(cd.sequence[-1], degree):
            words.append(bott_samelson_element(setting, cd, g))
    return words


@dataclass
class BasisReport:
    count: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.count == self.rank


def basis_independence_check(setting: Setting, degree: int) -> BasisReport:
    words = bott_samelson_words(setting, degree)
    # operators between different (d, e) pairs have disjoint supports,
    # so the rank is the sum over the blocks
    by_pair: dict = {}
    for w in words:
        by_pair.setdefault((w.source, w.target), []).append(w)
    rank = 0
    for ws in by_pair.values():
        rank += operator_matrix(setting, ws, degree).rank()
    return BasisReport(len(words), rank)
