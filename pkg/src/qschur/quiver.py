"""Quivers, involutions with duality structure, dimension vectors and
(isotropic) vector compositions."""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class QuiverError(ValueError):
    """Structural problem: unknown names, malformed input, bad arguments."""


# ----------------------------------------------------------------------
# dimension vectors and compositions
# ----------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class DimVector:
    """Dimension vector, entries aligned with the quiver's vertex order."""

    entries: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise QuiverError(f"negative entry in dimension vector {self.entries}")

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    @staticmethod
    def zero(n: int) -> "DimVector":
        return DimVector((0,) * n)


def dim_sum(parts: Iterable[DimVector], n: int) -> DimVector:
    total = DimVector.zero(n)
    for p in parts:
        total = total + p
    return total


def _check_composition(beta: Sequence[int], length: int):
    if any(b <= 0 for b in beta) or sum(beta) != length:
        raise QuiverError(f"{tuple(beta)} is not a composition of {length}")


@dataclass(frozen=True)
class VectorComposition:
    """Ordered tuple of nonzero dimension vectors."""

    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise QuiverError("a vector composition needs at least one part")
        if any(p.is_zero() for p in self.parts):
            raise QuiverError("vector composition parts must be nonzero")

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    @property
    def nverts(self) -> int:
        return len(self.parts[0])

    @property
    def total(self) -> DimVector:
        return dim_sum(self.parts, self.nverts)

    def wedge(self, beta: Sequence[int]) -> "VectorComposition":
        """Coarsen by adding consecutive groups of parts of sizes beta."""
        _check_composition(beta, len(self))
        out, pos = [], 0
        for b in beta:
            out.append(dim_sum(self.parts[pos:pos + b], self.nverts))
            pos += b
        return VectorComposition(tuple(out))

    def wedge_at(self, k: int) -> "VectorComposition":
        """Merge parts k and k+1 (1-based)."""
        if not 1 <= k < len(self):
            raise QuiverError(f"cannot merge at position {k} of a length {len(self)} composition")
        return self.wedge((1,) * (k - 1) + (2,) + (1,) * (len(self) - k - 1))

    def swap(self, k: int) -> "VectorComposition":
        """The action of s_k: exchange parts k and k+1 (1-based)."""
        p = list(self.parts)
        p[k - 1], p[k] = p[k], p[k - 1]
        return VectorComposition(tuple(p))

    def concat(self, other: "VectorComposition") -> "VectorComposition":
        return VectorComposition(self.parts + other.parts)

    def refines(self, coarse: "VectorComposition"):
        """Return beta with coarse == self.wedge(beta), or None."""
        return _find_beta(self.parts, coarse.parts, self.nverts)


def _find_beta(fine: Sequence[DimVector], coarse: Sequence[DimVector], n: int):
    beta, pos = [], 0
    for target in coarse:
        acc, count = DimVector.zero(n), 0
        while pos < len(fine) and (acc.is_zero() or acc != target):
            acc = acc + fine[pos]
            pos += 1
            count += 1
            if any(a > t for a, t in zip(acc, target)):
                return None
        if acc != target:
            return None
        beta.append(count)
    if pos != len(fine):
        return None
    return tuple(beta)


@dataclass(frozen=True)
class IsotropicVectorComposition:
    """Finite parts plus a theta-fixed infinity part (validated by InvolutionData)."""

    finite: tuple
    inf: DimVector

    def __post_init__(self):
        if any(p.is_zero() for p in self.finite):
            raise QuiverError("finite parts of an isotropic composition must be nonzero")

    def __len__(self):
        return len(self.finite)

    @property
    def nverts(self) -> int:
        return len(self.inf)


# ----------------------------------------------------------------------
# quivers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex names")
        names = set()
        for a in self.arrows:
            if a.src not in self.vertices or a.tgt not in self.vertices:
                raise QuiverError(f"arrow {a.name} uses an undeclared vertex")
            if a.name in names:
                raise QuiverError(f"duplicate arrow name {a.name}")
            names.add(a.name)

    @staticmethod
    def build(vertices: Sequence, arrows: Sequence[tuple] = ()) -> "Quiver":
        return Quiver(tuple(str(v) for v in vertices),
                      tuple(Arrow(str(n), str(s), str(t)) for n, s, t in arrows))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v) -> int:
        try:
            return self.vertices.index(str(v))
        except ValueError:
            raise QuiverError(f"unknown vertex {v!r}") from None

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise QuiverError(f"unknown arrow {name!r}")

    def arrow_count(self, i, j) -> int:
        i, j = str(i), str(j)
        return sum(1 for a in self.arrows if a.src == i and a.tgt == j)

    def arrow_matrix(self) -> list:
        return [[self.arrow_count(i, j) for j in self.vertices] for i in self.vertices]

    # -- dimension vectors ----------------------------------------------
    def dim(self, spec) -> DimVector:
        """Build a dimension vector from an int (one vertex), a sequence, a
        mapping vertex -> int, or a DimVector."""
        if isinstance(spec, DimVector):
            if len(spec) != self.n:
                raise QuiverError("dimension vector has the wrong length")
            return spec
        if isinstance(spec, int):
            if self.n != 1:
                raise QuiverError("integer dimension vectors need a one-vertex quiver")
            return DimVector((spec,))
        if isinstance(spec, dict):
            entries = [0] * self.n
            for v, k in spec.items():
                entries[self.vertex_index(v)] = int(k)
            return DimVector(tuple(entries))
        if isinstance(spec, str):
            return self.parse_dim(spec)
        spec = tuple(int(k) for k in spec)
        if len(spec) != self.n:
            raise QuiverError("dimension vector has the wrong length")
        return DimVector(spec)

    def comp(self, *parts) -> VectorComposition:
        return VectorComposition(tuple(self.dim(p) for p in parts))

    def format_dim(self, c: DimVector) -> str:
        if self.n == 1:
            return str(c[0])
        return "[" + ",".join(str(k) for k in c) + "]"

    def dim_dict(self, c: DimVector) -> dict:
        return {v: k for v, k in zip(self.vertices, c)}

    def parse_dim(self, text: str) -> DimVector:
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            return self.dim([int(t) for t in text[1:-1].split(",") if t.strip()])
        if re.fullmatch(r"\d+", text) and self.n == 1:
            return DimVector((int(text),))
        # linear combination of vertex names, e.g. 2i1+i3
        entries = [0] * self.n
        for term in text.replace(" ", "").split("+"):
            m = re.fullmatch(r"(\d*)\*?(.+)", term)
            if not m:
                raise QuiverError(f"cannot parse dimension vector {text!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            entries[self.vertex_index(m.group(2))] += coef
        return DimVector(tuple(entries))

    def format_comp(self, d) -> str:
        if isinstance(d, IsotropicVectorComposition):
            return "(" + ",".join(self.format_dim(p) for p in d.finite) + "|" + self.format_dim(d.inf) + ")"
        return "(" + ",".join(self.format_dim(p) for p in d.parts) + ")"

    def parse_comp(self, text: str):
        """Parse "(1,1)", "([1,0],[0,1])" or the isotropic form "(1|2)"."""
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise QuiverError(f"composition must be parenthesized: {text!r}")
        body = text[1:-1]
        iso = "|" in body
        fin_text, inf_text = body.split("|", 1) if iso else (body, None)
        parts = [self.parse_dim(t) for t in _split_top(fin_text)]
        if iso:
            return IsotropicVectorComposition(tuple(parts), self.parse_dim(inf_text))
        return VectorComposition(tuple(parts))


def _split_top(text: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return [t for t in out if t.strip()]


# ----------------------------------------------------------------------
# involutions and duality structures
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class InvolutionData:
    quiver: Quiver
    vertex_map: dict
    arrow_map: dict
    sigma: dict
    varsigma: dict
    vertex_kind: dict = field(init=False, compare=False, hash=False)
    arrow_kind: dict = field(init=False, compare=False, hash=False)

    def __post_init__(self):
        q = self.quiver
        for m, name in ((self.vertex_map, "vertex map"), (self.sigma, "sigma")):
            for k, v in m.items():
                if k not in q.vertices or (name == "vertex map" and v not in q.vertices):
                    raise QuiverError(f"{name} mentions an unknown vertex")
            if set(m) != set(q.vertices):
                raise QuiverError(f"{name} must be defined on every vertex")
        names = [a.name for a in q.arrows]
        for m, name in ((self.arrow_map, "arrow map"), (self.varsigma, "varsigma")):
            for k, v in m.items():
                if k not in names or (name == "arrow map" and v not in names):
                    raise QuiverError(f"{name} mentions an unknown arrow")
            if set(m) != set(names):
                raise QuiverError(f"{name} must be defined on every arrow")
        for m, name in ((self.sigma, "sigma"), (self.varsigma, "varsigma")):
            if any(v not in (1, -1) for v in m.values()):
                raise QuiverError(f"{name} values must be +1 or -1")
        object.__setattr__(self, "vertex_kind", _tag(q.vertices, self.vertex_map))
        object.__setattr__(self, "arrow_kind", _tag(names, self.arrow_map))

    def __hash__(self):
        return hash((self.quiver, tuple(sorted(self.vertex_map.items())),
                     tuple(sorted(self.arrow_map.items())), tuple(sorted(self.sigma.items())),
                     tuple(sorted(self.varsigma.items()))))

    @staticmethod
    def build(q: Quiver, vertex_map=None, arrow_map=None, sigma=1, varsigma=1) -> "InvolutionData":
        vm = {v: v for v in q.vertices} if vertex_map is None else {str(k): str(v) for k, v in vertex_map.items()}
        am = {a.name: a.name for a in q.arrows} if arrow_map is None else dict(arrow_map)
        sg = {v: sigma for v in q.vertices} if isinstance(sigma, int) else {str(k): v for k, v in sigma.items()}
        vs = {a.name: varsigma for a in q.arrows} if isinstance(varsigma, int) else dict(varsigma)
        return InvolutionData(q, vm, am, sg, vs)

    # -- vertex classes --------------------------------------------------
    def kind(self, v) -> str:
        """'+', '0' (theta-fixed) or '-'."""
        return self.vertex_kind[str(v)]

    def theta_vertex_index(self, k: int) -> int:
        return self.quiver.vertex_index(self.vertex_map[self.quiver.vertices[k]])

    def theta(self, c: DimVector) -> DimVector:
        q = self.quiver
        out = [0] * q.n
        for k, v in enumerate(q.vertices):
            out[q.vertex_index(self.vertex_map[v])] = c[k]
        return DimVector(tuple(out))

    def D(self, c: DimVector) -> DimVector:
        return c + self.theta(c)

    def is_fixed_dim(self, c: DimVector) -> bool:
        return self.theta(c) == c

    # -- isotropic compositions -----------------------------------------
    def check_iso(self, d: IsotropicVectorComposition) -> IsotropicVectorComposition:
        if not self.is_fixed_dim(d.inf):
            raise QuiverError("infinity part must be theta-invariant")
        for k, v in enumerate(self.quiver.vertices):
            if self.kind(v) == "0" and self.sigma[v] == -1 and d.inf[k] % 2:
                raise QuiverError(f"infinity part must be even at symplectic vertex {v}")
        return d

    def iso(self, finite: Sequence, inf) -> IsotropicVectorComposition:
        q = self.quiver
        return self.check_iso(IsotropicVectorComposition(tuple(q.dim(p) for p in finite), q.dim(inf)))

    def iso_total(self, d: IsotropicVectorComposition) -> DimVector:
        total = d.inf
        for p in d.finite:
            total = total + self.D(p)
        return total

    def check_total(self, c: DimVector) -> DimVector:
        if not self.is_fixed_dim(c):
            raise QuiverError("dimension vector must be theta-invariant")
        for k, v in enumerate(self.quiver.vertices):
            if self.kind(v) == "0" and self.sigma[v] == -1 and c[k] % 2:
                raise QuiverError(f"dimension must be even at symplectic vertex {v}")
        return c

    def theta_wedge(self, d: IsotropicVectorComposition, beta: Sequence[int]) -> IsotropicVectorComposition:
        """Coarsen: groups of beta, the last group folding into the infinity part."""
        _check_composition(beta, len(d) + 1)
        n = d.nverts
        out, pos = [], 0
        for b in beta[:-1]:
            out.append(dim_sum(d.finite[pos:pos + b], n))
            pos += b
        inf = d.inf
        for p in d.finite[pos:]:
            inf = inf + self.D(p)
        return self.check_iso(IsotropicVectorComposition(tuple(out), inf))

    def theta_wedge_at(self, d: IsotropicVectorComposition, k: int) -> IsotropicVectorComposition:
        ell = len(d)
        if not 1 <= k <= ell:
            raise QuiverError(f"cannot merge at position {k}")
        return self.theta_wedge(d, (1,) * (k - 1) + (2,) + (1,) * (ell - k))

    def theta_swap(self, d: IsotropicVectorComposition, k: int) -> IsotropicVectorComposition:
        """The action of s_k; s_ell replaces the last finite part by its theta-image."""
        p = list(d.finite)
        if k < len(p):
            p[k - 1], p[k] = p[k], p[k - 1]
        elif k == len(p):
            p[-1] = self.theta(p[-1])
        else:
            raise QuiverError(f"no generator s_{k} for length {len(p)}")
        return IsotropicVectorComposition(tuple(p), d.inf)

    def theta_refines(self, fine: IsotropicVectorComposition, coarse: IsotropicVectorComposition):
        """Return beta with coarse == theta_wedge(fine, beta), or None."""
        if len(coarse) > len(fine):
            return None
        n = fine.nverts
        for tail in range(len(fine) - len(coarse) + 1):
            head = fine.finite[:len(fine) - tail]
            if coarse.finite:
                beta = _find_beta(head, coarse.finite, n)
            else:
                beta = () if not head else None
            if beta is None:
                continue
            cand = beta + (tail + 1,)
            if self.theta_wedge(fine, cand) == coarse:
                return cand
        return None

    def is_finitely_refining(self, fine, coarse) -> bool:
        """fine >_f coarse: same infinity part."""
        beta = self.theta_refines(fine, coarse)
        return beta is not None and beta[-1] == 1


def _tag(items: Sequence[str], m: dict) -> dict:
    tags = {}
    for x in items:
        y = m[x]
        if x == y:
            tags[x] = "0"
        elif x not in tags:
            tags[x], tags[y] = "+", "-"
    return tags


def validate_duality(q: Quiver, inv: InvolutionData) -> list:
    """Return the list of violated conditions (empty when valid)."""
    if inv.quiver != q:
        raise QuiverError("involution data belongs to another quiver")
    report = []
    vm, am = inv.vertex_map, inv.arrow_map
    for v in q.vertices:
        if vm[vm[v]] != v:
            report.append(f"vertex map is not an involution at {v}")
    for a in q.arrows:
        if am[am[a.name]] != a.name:
            report.append(f"arrow map is not an involution at {a.name}")
        b = q.arrow(am[a.name])
        if b.src != vm[a.tgt] or b.tgt != vm[a.src]:
            report.append(f"condition (a) fails for arrow {a.name}")
        if a.tgt == vm[a.src] and am[a.name] != a.name:
            report.append(f"condition (b) fails for arrow {a.name}")
        if inv.varsigma[a.name] * inv.varsigma[b.name] != inv.sigma[a.src] * inv.sigma[a.tgt]:
            report.append(f"varsigma compatibility fails for arrow {a.name}")
    for v in q.vertices:
        if inv.sigma[vm[v]] != inv.sigma[v]:
            report.append(f"sigma compatibility fails at vertex {v}")
    return report


# ----------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------

def quiver_from_json(data) -> tuple:
    """Return (Quiver, InvolutionData or None) from a parsed JSON object."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        q = Quiver.build(data["vertices"], [(a["name"], a["src"], a["tgt"]) for a in data.get("arrows", [])])
    except (KeyError, TypeError) as exc:
        raise QuiverError(f"malformed quiver JSON: {exc}") from None
    inv = None
    if "involution" in data:
        spec = data["involution"]
        inv = InvolutionData.build(
            q,
            spec.get("vertices"),
            spec.get("arrows"),
            data.get("sigma", 1),
            data.get("varsigma", 1),
        )
    return q, inv


def load_quiver(path) -> tuple:
    with open(path) as fh:
        return quiver_from_json(json.load(fh))


# ----------------------------------------------------------------------
# standard examples
# ----------------------------------------------------------------------

def a1_quiver() -> Quiver:
    return Quiver.build(["1"])


def jordan_quiver() -> Quiver:
    return Quiver.build(["1"], [("a", "1", "1")])


def a2_quiver() -> Quiver:
    return Quiver.build(["1", "2"], [("a", "1", "2")])


def a3_quiver() -> Quiver:
    return Quiver.build(["i1", "i2", "i3"], [("a1", "i1", "i2"), ("a2", "i2", "i3")])


def swap_a2_involution(sigma=1, varsigma=1) -> InvolutionData:
    """A_2 with theta exchanging the two vertices and fixing the arrow."""
    return InvolutionData.build(a2_quiver(), {"1": "2", "2": "1"}, {"a": "a"}, sigma, varsigma)


def a3_involution(sigma=1, varsigma=-1) -> InvolutionData:
    """A_3 with theta(i_k) = i_{4-k} and theta(a_l) = a_{3-l}."""
    return InvolutionData.build(a3_quiver(), {"i1": "i3", "i2": "i2", "i3": "i1"},
                                {"a1": "a2", "a2": "a1"}, sigma, varsigma)


STANDARD_QUIVERS = {"a1": a1_quiver, "a2": a2_quiver, "a3": a3_quiver, "jordan": jordan_quiver}


def standard_quiver(name: str) -> Quiver:
    try:
        return STANDARD_QUIVERS[name]()
    except KeyError:
        raise QuiverError(f"unknown standard quiver {name!r}") from None


def dims_up_to(q: Quiver, total: int) -> list:
    """Nonzero dimension vectors of q with |c| <= total, by total then entries."""
    out = []
    for entries in itertools.product(range(total + 1), repeat=q.n):
        if 0 < sum(entries) <= total:
            out.append(DimVector(tuple(entries)))
    return sorted(out, key=lambda c: (c.total, c.entries))
