"""Projective covers, syzygies, Ext^1 spaces and middle terms, tilting test.

Ext^1(X, Y) is realized on a minimal presentation 0 -> OX -> P -> X -> 0 as
Hom(OX, Y) modulo homs that extend to P; a class builds its middle term as
the pushout of P <- OX -> Y.  A faster block construction of the same
extension (cached section data per X) backs the closure searches and is
cross-checked against the pushout in the property suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .errors import AlgebraMismatch, BudgetExceeded
from .linalg import Matrix
from .rep import (
    Hom,
    Representation,
    decompose,
    direct_sum,
    hom_space,
    quotient_rep,
    sub_rep,
    zero_rep,
)

EXT_ENUM_BUDGET = 2 ** 20


@dataclass
class ProjectivePresentation:
    module: Representation
    cover: Representation
    slots: tuple  # vertex index per projective summand P(v)
    epi: Hom
    kernel: Representation  # the syzygy
    inclusion: Hom  # kernel -> cover


def projective_cover(m: Representation) -> ProjectivePresentation:
    algebra = m.algebra
    cached = algebra._cover_cache.get(m.key())
    if cached is not None:
        return cached
    q = algebra.quiver
    p = algebra.p

    # radical spans and top projections with explicit lifts
    spans = []
    for v in range(q.n_vertices):
        into = [m.action[ai] for ai in range(len(q.arrows)) if q.arrow_target(ai) == v]
        spans.append(linalg.hstack(into) if into else Matrix.zero(p, m.dim[v], 0))
    projs, lifts = [], []
    for v in range(q.n_vertices):
        pr, lf = linalg.quotient_maps(spans[v])
        projs.append(pr)
        lifts.append(lf)

    slots = []
    gens = []  # (vertex, generator column vector in M_v)
    for v in range(q.n_vertices):
        for i in range(projs[v].nrows):
            slots.append(v)
            gens.append((v, lifts[v].col(i)))
    if not slots:
        zero = zero_rep(algebra)
        pres = ProjectivePresentation(
            m, zero, (), Hom(zero, m, tuple(Matrix.zero(p, d, 0) for d in m.dim)),
            zero, Hom(zero, zero, tuple(Matrix.zero(p, 0, 0) for _ in m.dim)),
        )
        algebra._cover_cache[m.key()] = pres
        return pres

    cover = direct_sum([algebra.projective(v) for v in slots])

    # epi columns: slot basis path q (v -> w) maps to action(q) applied to the generator
    epi_cols = [[] for _ in range(q.n_vertices)]
    for v, gen in gens:
        paths = [[] for _ in range(q.n_vertices)]
        for (s, arrows, t) in ((s, a, t) for (s, a, t) in algebra.basis if s == v):
            paths[t].append(arrows)
        gen_mat = Matrix.from_columns(p, [gen], m.dim[v])
        for w in range(q.n_vertices):
            for arrows in paths[w]:
                col = m.path_action(v, arrows).mul(gen_mat)
                epi_cols[w].append(col.col(0))
    epi_mats = tuple(
        Matrix.from_columns(p, epi_cols[w], m.dim[w]) if epi_cols[w] else Matrix.zero(p, m.dim[w], 0)
        for w in range(q.n_vertices)
    )
    epi = Hom(cover, m, epi_mats)
    for w in range(q.n_vertices):
        if epi_mats[w].rank() != m.dim[w]:
            raise AssertionError("projective cover is not surjective")

    kspans = []
    for w in range(q.n_vertices):
        ker = linalg.kernel_basis(epi_mats[w])
        kspans.append(Matrix.from_columns(p, ker, cover.dim[w]) if ker else Matrix.zero(p, cover.dim[w], 0))
    kernel, incl = sub_rep(cover, kspans)

    # minimality: kernel must avoid the trivial-path coordinates of the cover
    trivial_slots = {w: [] for w in range(q.n_vertices)}
    run = [0] * q.n_vertices
    for v in slots:
        counts = [0] * q.n_vertices
        for (s, arrows, t) in algebra.basis:
            if s == v:
                if not arrows:
                    trivial_slots[t].append(run[t] + counts[t])
                counts[t] += 1
        for w in range(q.n_vertices):
            run[w] += counts[w]
    for w in range(q.n_vertices):
        for j in trivial_slots[w]:
            for c in range(incl.mats[w].ncols):
                if incl.mats[w].entry(j, c):
                    raise AssertionError("cover kernel escapes the radical")

    pres = ProjectivePresentation(m, cover, tuple(slots), epi, kernel, incl)
    algebra._cover_cache[m.key()] = pres
    return pres


def is_projective(m: Representation) -> bool:
    if m.total_dim == 0:
        return True
    return projective_cover(m).kernel.total_dim == 0


def syzygy(m: Representation, n: int = 1) -> Representation:
    cur = m
    for _ in range(n):
        if cur.total_dim == 0:
            return cur
        cur = projective_cover(cur).kernel
    return cur


def duality(m: Representation) -> Representation:
    """Exact contravariant duality: transpose matrices, module over A^op."""
    opp = m.algebra.opposite()
    action = tuple(mat.transpose() for mat in m.action)
    return Representation(opp, m.dim, action)


def cosyzygy(m: Representation, n: int = 1) -> Representation:
    return duality(syzygy(duality(m), n))


def pd_bounded(m: Representation, bound: int):
    """Least n <= bound with syzygy(m, n) projective, else None."""
    cur = m
    for n in range(bound + 1):
        if is_projective(cur):
            return n
        cur = syzygy(cur, 1)
    return None


def gldim_bounded(algebra, bound: int = None):
    if bound is None:
        bound = 2 * max(algebra.dim, 1)
    worst = 0
    for v in range(algebra.n_vertices):
        pd = pd_bounded(algebra.simple(v), bound)
        if pd is None:
            return None
        worst = max(worst, pd)
    return worst


@dataclass
class ExtClass:
    X: Representation
    Y: Representation
    cocycle: Hom  # OX -> Y
    presentation: ProjectivePresentation


@dataclass
class Ext1Space:
    X: Representation
    Y: Representation
    presentation: ProjectivePresentation
    dimension: int
    basis: tuple  # ExtClass per basis element
    _image: Matrix = None  # restriction image in Hom(OX, Y) coordinates
    _h1: object = None

    def class_from_coords(self, coords) -> ExtClass:
        p = self.X.algebra.p
        mats = None
        for c, cls in zip(coords, self.basis):
            if not c:
                continue
            scaled = [mm.scale(c) for mm in cls.cocycle.mats]
            mats = scaled if mats is None else [a.add(b) for a, b in zip(mats, scaled)]
        if mats is None:
            omega = self.presentation.kernel
            mats = [Matrix.zero(p, self.Y.dim[v], omega.dim[v]) for v in range(len(self.Y.dim))]
        return ExtClass(self.X, self.Y, Hom(self.presentation.kernel, self.Y, tuple(mats)), self.presentation)

    def same_class(self, c1: ExtClass, c2: ExtClass) -> bool:
        """Cocycles are identified iff their difference extends along the cover."""
        diff = tuple(a.sub(b) for a, b in zip(c1.cocycle.mats, c2.cocycle.mats))
        vec = _flatten_mats(diff)
        if self._h1 is None:
            return all(x == 0 for x in vec)
        coords = linalg.solve(self._h1, vec)
        if coords is None:
            return False
        if self._image.ncols == 0:
            return all(x == 0 for x in coords)
        return linalg.solve(self._image, coords) is not None


def _flatten_mats(mats) -> tuple:
    out = []
    for m in mats:
        for i in range(m.nrows):
            out.extend(m.row(i))
    return tuple(out)


def ext1_space(x: Representation, y: Representation) -> Ext1Space:
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("ext over different algebras")
    algebra = x.algebra
    p = algebra.p
    pres = projective_cover(x)
    omega = pres.kernel
    h1 = hom_space(omega, y)
    if h1.dimension == 0:
        return Ext1Space(x, y, pres, 0, ())
    h0 = hom_space(pres.cover, y)
    basis_cols = [_flatten_mats(h.mats) for h in h1.basis]
    n = len(basis_cols[0])
    h1_mat = Matrix.from_columns(p, basis_cols, n)
    image_cols = []
    for h in h0.basis:
        restricted = pres.inclusion.then(h)
        vec = _flatten_mats(restricted.mats)
        coords = linalg.solve(h1_mat, vec)
        image_cols.append(coords)
    image = (
        Matrix.from_columns(p, image_cols, h1.dimension)
        if image_cols
        else Matrix.zero(p, h1.dimension, 0)
    )
    red, rank = linalg.rref(image.transpose())
    pivot = set()
    for r in range(rank):
        for j in range(h1.dimension):
            if red.entry(r, j):
                pivot.add(j)
                break
    complement = [j for j in range(h1.dimension) if j not in pivot]
    classes = tuple(ExtClass(x, y, h1.basis[j], pres) for j in complement)
    return Ext1Space(x, y, pres, len(complement), classes, image, h1_mat)


def enumerate_ext_classes(x, y, budget: int = EXT_ENUM_BUDGET) -> list:
    space = ext1_space(x, y)
    p = x.algebra.p
    if p ** space.dimension > budget:
        raise BudgetExceeded(
            "%d^%d extension classes exceed budget %d" % (p, space.dimension, budget)
        )
    out = []
    for coords in itertools.product(range(p), repeat=space.dimension):
        out.append(space.class_from_coords(coords))
    return out


def extension_middle(cls: ExtClass):
    """Pushout middle term; returns (E, mono Y->E, epi E->X), rank-verified."""
    algebra = cls.X.algebra
    p = algebra.p
    q = algebra.quiver
    pres = cls.presentation
    x, y = cls.X, cls.Y
    omega = pres.kernel
    theta = cls.cocycle
    projs, lifts = [], []
    for v in range(q.n_vertices):
        span = linalg.vstack([theta.mats[v], pres.inclusion.mats[v].neg()])
        pr, lf = linalg.quotient_maps(span)
        projs.append(pr)
        lifts.append(lf)
    dims = tuple(pr.nrows for pr in projs)
    for v in range(q.n_vertices):
        if dims[v] != y.dim[v] + x.dim[v]:
            raise AssertionError("pushout dimension mismatch")
    action = []
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        big = linalg.block_diag(p, [y.action[ai], pres.cover.action[ai]])
        action.append(projs[w].mul(big).mul(lifts[u]))
    middle = Representation(algebra, dims, tuple(action))
    mono_mats, epi_mats = [], []
    for v in range(q.n_vertices):
        inc_y = linalg.vstack([Matrix.identity(p, y.dim[v]), Matrix.zero(p, pres.cover.dim[v], y.dim[v])])
        mono_mats.append(projs[v].mul(inc_y))
        bottom = Matrix.from_rows(
            p, [lifts[v].row(i) for i in range(y.dim[v], y.dim[v] + pres.cover.dim[v])]
        ) if pres.cover.dim[v] else Matrix.zero(p, 0, dims[v])
        epi_mats.append(pres.epi.mats[v].mul(bottom))
    mono = Hom(y, middle, tuple(mono_mats))
    epi = Hom(middle, x, tuple(epi_mats))
    for v in range(q.n_vertices):
        if mono_mats[v].rank() != y.dim[v] or epi_mats[v].rank() != x.dim[v]:
            raise AssertionError("middle term maps are not exact")
        if not epi_mats[v].mul(mono_mats[v]).is_zero():
            raise AssertionError("middle term composition is nonzero")
    return middle, mono, epi


@dataclass
class SectionData:
    """Comparison data turning cocycles into arrow-level extension blocks."""

    x: Representation
    presentation: ProjectivePresentation
    d_arrows: tuple  # per arrow a: X_{s(a)} -> OmegaX_{t(a)}


def section_data(x: Representation) -> SectionData:
    algebra = x.algebra
    key = ("section", x.key())
    got = algebra._cover_cache.get(key)
    if got is not None:
        return got
    q = algebra.quiver
    p = algebra.p
    pres = projective_cover(x)
    sections = []
    for v in range(q.n_vertices):
        s = linalg.solve_matrix(pres.epi.mats[v], Matrix.identity(p, x.dim[v]))
        if s is None:
            raise AssertionError("cover epi admits no section")
        sections.append(s)
    d_arrows = []
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        delta = pres.cover.action[ai].mul(sections[u]).sub(sections[w].mul(x.action[ai]))
        d = linalg.solve_matrix(pres.inclusion.mats[w], delta)
        if d is None:
            raise AssertionError("section defect not in the kernel")
        d_arrows.append(d)
    data = SectionData(x, pres, tuple(d_arrows))
    algebra._cover_cache[key] = data
    return data


def middle_from_blocks(x, y, theta_mats, data: SectionData = None) -> Representation:
    """Extension of x by y with cocycle theta, built as block matrices.

    Same iso class as extension_middle on the corresponding class; Y
    coordinates come first at every vertex.
    """
    algebra = x.algebra
    p = algebra.p
    q = algebra.quiver
    if data is None:
        data = section_data(x)
    dims = tuple(a + b for a, b in zip(y.dim, x.dim))
    action = []
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        c = theta_mats[w].mul(data.d_arrows[ai])
        top = linalg.hstack([y.action[ai], c])
        bottom = linalg.hstack([Matrix.zero(p, x.dim[w], y.dim[u]), x.action[ai]])
        action.append(linalg.vstack([top, bottom]))
    return Representation(algebra, dims, tuple(action))


@dataclass
class TiltingVerdict:
    is_tilting: bool
    pd: object
    failures: list = field(default_factory=list)
    coresolution: list = field(default_factory=list)  # dim vectors of the add(T) terms


def in_add(m: Representation, t_factors) -> bool:
    """Every indecomposable factor of m is iso to a factor of T."""
    if m.total_dim == 0:
        return True
    for f, _ in decompose(m).factors:
        if not any(is_iso_cached(f, g) for g, _ in t_factors):
            return False
    return True


def is_iso_cached(a, b):
    from .rep import is_iso

    return is_iso(a, b) is True


def tilting_check(t: Representation, bound: int = None) -> TiltingVerdict:
    """Conditions: finite pd, no self-extensions, add(T)-coresolution of A."""
    algebra = t.algebra
    if bound is None:
        bound = 2 * max(algebra.dim, 1)
    failures = []
    pd = pd_bounded(t, bound)
    if pd is None:
        return TiltingVerdict(False, None, ["pd exceeds bound %d" % bound])
    for i in range(1, pd + 1):
        dim_ext = ext1_space(syzygy(t, i - 1), t).dimension
        if dim_ext:
            failures.append("Ext^%d(T,T) has dimension %d" % (i, dim_ext))
    t_factors = decompose(t).factors
    cores = []
    current = algebra.regular_module()
    step = 0
    while True:
        if in_add(current, t_factors):
            cores.append(current.dim)
            break
        if step >= pd:
            failures.append("no add(T)-coresolution of A within %d steps" % pd)
            break
        # canonical left add(T)-approximation into distinct indecomposable summands
        pieces = []
        stacks = [[] for _ in range(algebra.n_vertices)]
        for ti, _ in t_factors:
            hb = hom_space(current, ti)
            for h in hb.basis:
                pieces.append(ti)
                for v in range(algebra.n_vertices):
                    stacks[v].append(h.mats[v])
        if not pieces:
            failures.append("regular module does not embed in add(T)")
            break
        umats = [linalg.vstack(stacks[v]) for v in range(algebra.n_vertices)]
        if any(umats[v].rank() != current.dim[v] for v in range(algebra.n_vertices)):
            failures.append(
                "coresolution stalls at step %d: current module does not embed in add(T)" % step
            )
            break
        target = direct_sum(pieces)
        cores.append(target.dim)
        current, _ = quotient_rep(target, umats)
        step += 1
    return TiltingVerdict(not failures, pd, failures, cores)
