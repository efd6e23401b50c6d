"""Finite-dimensional left modules as quiver representations.

A representation stores one matrix per arrow, of shape
dim[target] x dim[source]; a path acts by composing its arrow matrices in
traversal order.  Hom spaces come from the intertwining linear system,
isomorphism testing searches the hom space for an invertible element, and
decomposition peels direct summands with Fitting's lemma.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg
from .errors import AlgebraMismatch
from .linalg import Matrix

ISO_SEARCH_BUDGET = 2 ** 16
ISO_RANDOM_CAP = 20_000
ISO_RANDOM_FIRST = 24
SPLIT_ENUM_BUDGET = 256
SPLIT_RANDOM_CAP = 64

_DEFAULT_SEED = 0


def set_default_seed(seed: int) -> None:
    """Seed for the randomized fallbacks (iso search, split probes)."""
    global _DEFAULT_SEED
    _DEFAULT_SEED = seed


class Representation:
    __slots__ = ("algebra", "dim", "action", "_key")

    def __init__(self, algebra, dim, action, check=False):
        self.algebra = algebra
        self.dim = tuple(dim)
        self.action = tuple(action)
        self._key = None
        if check:
            bad = validate(algebra, self.dim, self.action)
            if bad:
                raise ValueError("invalid representation: %s" % "; ".join(bad))

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def key(self) -> bytes:
        if self._key is None:
            out = bytearray()
            out.extend(x % 256 for x in self.dim)
            for m in self.action:
                out.extend(m.key())
            self._key = bytes(out)
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra is other.algebra
            and self.dim == other.dim
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash((id(self.algebra), self.key()))

    def __repr__(self):
        return "Rep(dim=%s)" % (self.dim,)

    def dim_map(self) -> dict:
        return {self.algebra.vertex_label(v): d for v, d in enumerate(self.dim)}

    def path_action(self, source: int, arrows: tuple) -> Matrix:
        m = Matrix.identity(self.algebra.p, self.dim[source])
        q = self.algebra.quiver
        for k in arrows:
            m = self.action[k].mul(m)
        return m

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def validate(self) -> list:
        return validate(self.algebra, self.dim, self.action)


@dataclass
class Hom:
    source: Representation
    target: Representation
    mats: tuple  # one Matrix per vertex

    def then(self, other: "Hom") -> "Hom":
        """self followed by other."""
        return Hom(self.source, other.target, tuple(g.mul(f) for f, g in zip(self.mats, other.mats)))

    def is_invertible(self) -> bool:
        return all(
            m.nrows == m.ncols and m.rank() == m.nrows for m in self.mats
        )

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)


@dataclass
class HomBasis:
    source: Representation
    target: Representation
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass
class Decomposition:
    factors: list  # [(Representation, multiplicity)]
    warnings: list = field(default_factory=list)

    @property
    def total_dim(self):
        return sum(r.total_dim * m for r, m in self.factors)


def validate(algebra, dim, action) -> list:
    """All shape and relation violations for a candidate representation."""
    q = algebra.quiver
    bad = []
    if len(dim) != q.n_vertices:
        return ["dimension vector has %d entries, expected %d" % (len(dim), q.n_vertices)]
    if len(action) != len(q.arrows):
        return ["action has %d matrices, expected %d" % (len(action), len(q.arrows))]
    for i, a in enumerate(q.arrows):
        m = action[i]
        want = (dim[q.arrow_target(i)], dim[q.arrow_source(i)])
        if (m.nrows, m.ncols) != want:
            bad.append("arrow %r matrix is %dx%d, expected %dx%d" % (a.name, m.nrows, m.ncols, *want))
        if m.p != algebra.p:
            bad.append("arrow %r matrix over GF(%d), expected GF(%d)" % (a.name, m.p, algebra.p))
    if bad:
        return bad
    for ridx, rel in enumerate(algebra.relations):
        acc = Matrix.zero(algebra.p, dim[rel.target], dim[rel.source])
        probe = Representation(algebra, dim, action)
        for coeff, path in rel.terms:
            acc = acc.add(probe.path_action(rel.source, path).scale(coeff))
        if not acc.is_zero():
            pretty = " + ".join(
                "%d*%s" % (c, ".".join(q.arrows[k].name for k in path)) for c, path in rel.terms
            )
            bad.append("relation %d (%s) does not vanish" % (ridx, pretty))
    return bad


def zero_rep(algebra) -> Representation:
    q = algebra.quiver
    dim = (0,) * q.n_vertices
    action = tuple(Matrix.zero(algebra.p, 0, 0) for _ in q.arrows)
    return Representation(algebra, dim, action)


def simple_rep(algebra, v: int) -> Representation:
    q = algebra.quiver
    dim = tuple(1 if w == v else 0 for w in range(q.n_vertices))
    action = tuple(
        Matrix.zero(algebra.p, dim[q.arrow_target(i)], dim[q.arrow_source(i)])
        for i in range(len(q.arrows))
    )
    return Representation(algebra, dim, action)


def projective_rep(algebra, v: int) -> Representation:
    """Left module on the residue paths starting at v; arrows append."""
    q = algebra.quiver
    slots = [[] for _ in range(q.n_vertices)]
    pos = {}
    for idx, (s, arrows, t) in enumerate(algebra.basis):
        if s == v:
            pos[idx] = len(slots[t])
            slots[t].append((idx, arrows))
    dim = tuple(len(sl) for sl in slots)
    action = []
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        rows = [[0] * dim[u] for _ in range(dim[w])]
        for col, (_, arrows) in enumerate(slots[u]):
            for gidx, coeff in algebra.reduce_path(v, arrows + (ai,)).items():
                rows[pos[gidx]][col] = coeff
        action.append(Matrix.from_rows(algebra.p, rows) if dim[w] and dim[u] else Matrix.zero(algebra.p, dim[w], dim[u]))
    return Representation(algebra, dim, tuple(action))


def direct_sum(reps) -> Representation:
    reps = list(reps)
    if not reps:
        raise ValueError("empty direct sum needs an algebra; use zero_rep")
    algebra = reps[0].algebra
    if any(r.algebra is not algebra for r in reps):
        raise AlgebraMismatch("direct sum over mixed algebras")
    q = algebra.quiver
    dim = tuple(sum(r.dim[v] for r in reps) for v in range(q.n_vertices))
    action = tuple(
        linalg.block_diag(algebra.p, [r.action[i] for r in reps]) for i in range(len(q.arrows))
    )
    return Representation(algebra, dim, action)


def hom_space(m: Representation, n: Representation) -> HomBasis:
    """Basis of Hom_A(m, n): solutions of f_w M_a = N_a f_u per arrow a:u->w."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("hom between modules over different algebras")
    algebra = m.algebra
    cache = algebra._hom_cache
    ck = (m.key(), n.key())
    got = cache.get(ck)
    if got is not None:
        return got
    q = algebra.quiver
    p = algebra.p
    off = []
    total = 0
    for v in range(q.n_vertices):
        off.append(total)
        total += m.dim[v] * n.dim[v]

    def unknown(v, i, j):
        # entry f_v[i][j], i < n.dim[v], j < m.dim[v]
        return off[v] + i * m.dim[v] + j

    if p == 2:
        masks = []
        for ai in range(len(q.arrows)):
            u, w = q.arrow_source(ai), q.arrow_target(ai)
            Ma, Na = m.action[ai], n.action[ai]
            dmu, dmw, dnu, dnw = m.dim[u], m.dim[w], n.dim[u], n.dim[w]
            # column bitmask of Ma per source index j
            ma_cols = [0] * dmu
            for k in range(dmw):
                rk = Ma.rows[k]
                while rk:
                    low = rk & -rk
                    ma_cols[low.bit_length() - 1] |= 1 << k
                    rk ^= low
            for i in range(dnw):
                base_w = off[w] + i * dmw
                na_row = Na.rows[i] if dnw else 0
                for j in range(dmu):
                    row = 0
                    cm = ma_cols[j]
                    while cm:
                        low = cm & -cm
                        row ^= 1 << (base_w + low.bit_length() - 1)
                        cm ^= low
                    rl = na_row
                    while rl:
                        low = rl & -rl
                        row ^= 1 << (off[u] + (low.bit_length() - 1) * dmu + j)
                        rl ^= low
                    if row:
                        masks.append(row)
        if masks:
            system = Matrix(2, len(masks), total, tuple(masks))
            kernel = linalg.kernel_basis(system)
        else:
            kernel = [tuple(1 if i == k else 0 for i in range(total)) for k in range(total)]
    else:
        rows = []
        for ai in range(len(q.arrows)):
            u, w = q.arrow_source(ai), q.arrow_target(ai)
            Ma, Na = m.action[ai], n.action[ai]
            for i in range(n.dim[w]):
                for j in range(m.dim[u]):
                    row = [0] * total
                    for k in range(m.dim[w]):
                        c = Ma.entry(k, j)
                        if c:
                            row[unknown(w, i, k)] = (row[unknown(w, i, k)] + c) % p
                    for l in range(n.dim[u]):
                        c = Na.entry(i, l)
                        if c:
                            row[unknown(u, l, j)] = (row[unknown(u, l, j)] - c) % p
                    if any(row):
                        rows.append(row)
        if rows:
            system = Matrix.from_rows(p, rows)
            kernel = linalg.kernel_basis(system)
        else:
            kernel = [tuple(1 if i == k else 0 for i in range(total)) for k in range(total)]
    basis = []
    for vec in kernel:
        mats = []
        for v in range(q.n_vertices):
            rowsv = [
                [vec[unknown(v, i, j)] for j in range(m.dim[v])] for i in range(n.dim[v])
            ]
            mats.append(Matrix.from_rows(p, rowsv) if rowsv and m.dim[v] else Matrix.zero(p, n.dim[v], m.dim[v]))
        basis.append(Hom(m, n, tuple(mats)))
    result = HomBasis(m, n, tuple(basis))
    cache[ck] = result
    return result


def dim_hom(m, n) -> int:
    return hom_space(m, n).dimension


def _combo_iter(p, k):
    """Mixed-radix odometer over GF(p)^k minus zero; yields changed index per step."""
    coeffs = [0] * k
    while True:
        i = 0
        while i < k:
            coeffs[i] = (coeffs[i] + 1) % p
            yield i, tuple(coeffs)
            if coeffs[i] != 0:
                break
            i += 1
        if i == k:
            return


def is_iso(m: Representation, n: Representation, budget: int = ISO_SEARCH_BUDGET, seed: int = None):
    """True / False / None (= unknown above the search budget)."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("iso test over different algebras")
    if m.dim != n.dim:
        return False
    if m.total_dim == 0:
        return True
    if m.key() == n.key():
        return True
    hb = hom_space(m, n)
    k = hb.dimension
    if k == 0:
        return False
    if hom_space(n, m).dimension != k:
        return False
    p = m.algebra.p

    def invertible(mats):
        return all(mat.nrows == mat.ncols and mat.rank() == mat.nrows for mat in mats)

    rng = random.Random(_DEFAULT_SEED if seed is None else seed)

    def random_search(tries):
        for _ in range(tries):
            coeffs = [rng.randrange(p) for _ in range(k)]
            if not any(coeffs):
                continue
            mats = None
            for c, h in zip(coeffs, hb.basis):
                if not c:
                    continue
                scaled = [mm.scale(c) for mm in h.mats]
                mats = scaled if mats is None else [a.add(b) for a, b in zip(mats, scaled)]
            if invertible(mats):
                return True
        return False

    # isomorphisms, when they exist, are dense in the hom space
    if random_search(ISO_RANDOM_FIRST):
        return True
    if p ** k <= budget:
        if p == 2:
            # binary-reflected Gray code: each nonzero combination exactly once
            current = [Matrix.zero(p, n.dim[v], m.dim[v]) for v in range(len(m.dim))]
            for step in range(1, 2 ** k):
                flip = (step & -step).bit_length() - 1
                bas = hb.basis[flip].mats
                current = [c.add(b) for c, b in zip(current, bas)]
                if invertible(current):
                    return True
            return False
        current = [Matrix.zero(p, n.dim[v], m.dim[v]) for v in range(len(m.dim))]
        for idx, _ in _combo_iter(p, k):
            bas = hb.basis[idx].mats
            current = [c.add(b) for c, b in zip(current, bas)]
            if invertible(current):
                return True
        return False
    if random_search(ISO_RANDOM_CAP):
        return True
    return None


def sub_rep(m: Representation, spans) -> tuple:
    """Subrepresentation on given per-vertex column spans (must be invariant).

    Returns (rep, inclusion hom); the basis is canonical per vertex.
    """
    algebra = m.algebra
    q = algebra.quiver
    p = algebra.p
    bases = [linalg.column_space_basis(s) for s in spans]
    dim = tuple(b.ncols for b in bases)
    action = []
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        image = m.action[ai].mul(bases[u])
        sol = linalg.solve_matrix(bases[w], image)
        if sol is None:
            raise ValueError("spans are not arrow-invariant")
        action.append(sol)
    rep = Representation(algebra, dim, tuple(action))
    incl = Hom(rep, m, tuple(bases))
    return rep, incl


def quotient_rep(m: Representation, spans) -> tuple:
    """Quotient by the subrepresentation spanned per vertex; returns (rep, projection)."""
    algebra = m.algebra
    q = algebra.quiver
    projs = []
    lifts = []
    for v in range(q.n_vertices):
        pr, lf = linalg.quotient_maps(spans[v])
        projs.append(pr)
        lifts.append(lf)
    dim = tuple(pr.nrows for pr in projs)
    action = []
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        action.append(projs[w].mul(m.action[ai]).mul(lifts[u]))
    rep = Representation(algebra, dim, tuple(action))
    return rep, Hom(m, rep, tuple(projs))


def top_and_radical(m: Representation) -> tuple:
    """(top, rad, projection M->top, inclusion rad->M); rad = sum of arrow images."""
    algebra = m.algebra
    q = algebra.quiver
    p = algebra.p
    spans = []
    for v in range(q.n_vertices):
        into = [m.action[ai] for ai in range(len(q.arrows)) if q.arrow_target(ai) == v]
        spans.append(linalg.hstack(into) if into else Matrix.zero(p, m.dim[v], 0))
    rad, incl = sub_rep(m, spans)
    top, proj = quotient_rep(m, spans)
    return top, rad, proj, incl


def _stable_power(hom: Hom, max_dim: int) -> Hom:
    f = hom
    prev = [mt.rank() for mt in f.mats]
    for _ in range(max_dim + 1):
        f2 = f.then(f)
        ranks = [mt.rank() for mt in f2.mats]
        if ranks == prev:
            return f2
        prev = ranks
        f = f2
    return f


def _split_with(m: Representation, e: Hom):
    """Fitting split along a stable endomorphism; None if it gives no splitting."""
    f = _stable_power(e, m.total_dim)
    total_rank = sum(mt.rank() for mt in f.mats)
    if total_rank == 0 or total_rank == m.total_dim:
        return None
    p = m.algebra.p
    im_spans = [mt for mt in f.mats]
    ker_spans = []
    for v, mt in enumerate(f.mats):
        ker = linalg.kernel_basis(mt)
        ker_spans.append(Matrix.from_columns(p, ker, m.dim[v]) if ker else Matrix.zero(p, m.dim[v], 0))
    im_rep, _ = sub_rep(m, im_spans)
    ker_rep, _ = sub_rep(m, ker_spans)
    if im_rep.total_dim + ker_rep.total_dim != m.total_dim:
        return None
    return im_rep, ker_rep


def _split_candidates(end: HomBasis, p: int):
    k = end.dimension
    basis = end.basis
    for h in basis:
        yield h
    for i in range(k):
        for j in range(i + 1, k):
            yield Hom(end.source, end.target, tuple(a.add(b) for a, b in zip(basis[i].mats, basis[j].mats)))
    if p ** k <= SPLIT_ENUM_BUDGET:
        current = [Matrix.zero(p, d, d) for d in end.source.dim]
        for idx, _ in _combo_iter(p, k):
            current = [c.add(b) for c, b in zip(current, basis[idx].mats)]
            yield Hom(end.source, end.target, tuple(current))
    else:
        rng = random.Random(1)
        for _ in range(SPLIT_RANDOM_CAP):
            coeffs = [rng.randrange(p) for _ in range(k)]
            if not any(coeffs):
                continue
            mats = None
            for c, h in zip(coeffs, basis):
                if not c:
                    continue
                scaled = [mm.scale(c) for mm in h.mats]
                mats = scaled if mats is None else [a.add(b) for a, b in zip(mats, scaled)]
            yield Hom(end.source, end.target, tuple(mats))


def _indec_factors(m: Representation) -> list:
    """All indecomposable factors of m (with repeats), by Fitting peeling."""
    if m.total_dim == 0:
        return []
    algebra = m.algebra
    cached = algebra._decomp_cache.get(m.key())
    if cached is not None:
        return list(cached)
    end = hom_space(m, m)
    result = None
    for cand in _split_candidates(end, algebra.p):
        if cand.is_zero():
            continue
        split = _split_with(m, cand)
        if split is not None:
            a, b = split
            result = _indec_factors(a) + _indec_factors(b)
            break
    if result is None:
        result = [m]
    algebra._decomp_cache[m.key()] = tuple(result)
    return result


def decompose(m: Representation) -> Decomposition:
    """Indecomposable factors with multiplicities, canonically ordered."""
    factors = _indec_factors(m)
    groups = []
    warnings = []
    for f in factors:
        placed = False
        for g in groups:
            if f.key() == g[0].key():
                g[1] += 1
                placed = True
                break
        if not placed:
            for g in groups:
                if f.dim == g[0].dim:
                    verdict = is_iso(f, g[0])
                    if verdict is True:
                        g[1] += 1
                        placed = True
                        break
                    if verdict is None:
                        warnings.append("iso test exhausted budget; factors treated as distinct")
            if not placed:
                groups.append([f, 1])
    groups.sort(key=lambda g: (g[0].total_dim, g[0].dim, g[0].key()))
    return Decomposition([(g[0], g[1]) for g in groups], warnings)


def parse_module_doc(doc: dict, algebra) -> Representation:
    """Build a representation from the ModuleSpec JSON structure."""
    q = algebra.quiver
    dim = [0] * q.n_vertices
    for label, d in doc.get("dim", {}).items():
        if label not in q.vindex:
            raise ValueError("unknown vertex %r" % label)
        dim[q.vindex[label]] = int(d)
    action = []
    acts = doc.get("action", {})
    for ai, a in enumerate(q.arrows):
        want = (dim[q.arrow_target(ai)], dim[q.arrow_source(ai)])
        if a.name in acts:
            mat = Matrix.from_rows(algebra.p, acts[a.name]) if acts[a.name] else Matrix.zero(algebra.p, *want)
        else:
            mat = Matrix.zero(algebra.p, *want)
        action.append(mat)
    rep = Representation(algebra, tuple(dim), tuple(action))
    return rep


def module_doc(rep: Representation, algebra_name: str) -> dict:
    q = rep.algebra.quiver
    return {
        "algebra": algebra_name,
        "dim": {q.vertices[v]: rep.dim[v] for v in range(q.n_vertices) if rep.dim[v]},
        "action": {
            q.arrows[ai].name: [list(rep.action[ai].row(i)) for i in range(rep.action[ai].nrows)]
            for ai in range(len(q.arrows))
            if not rep.action[ai].is_zero()
        },
    }
