"""Closure universes, the bullet operation, [T]_n layers, syzygy categories,
representation-type certificates, and the extension-dimension bound engine.

A Universe is a finite, iso-deduplicated window onto A-mod: a worklist
closure of seed modules under summands, syzygies, cosyzygies and extension
middle terms, bounded by total dimension.  The bullet of two member sets
enumerates extension classes between bounded direct sums, realizes every
middle term through cached arrow-level cocycle blocks, and collects the
indecomposable summands.  The interval engine propagates certified lower
and upper bounds for ed of the syzygy categories with full provenance.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import linalg
from .errors import BudgetExceeded, ContradictoryFacts
from .homology import ext1_space, gldim_bounded, section_data, syzygy
from .linalg import Matrix
from .rep import Representation, decompose, hom_space, is_iso

HEURISTIC_INFINITE_THRESHOLD = 20
ALL_RULES = ("summands", "syzygy", "cosyzygy", "ext")


@dataclass
class UniverseParams:
    dim_bound: int
    mult_bound: int = 2
    parts_cap: int = 2
    rules: tuple = ALL_RULES
    member_cap: int = 5000
    ext_budget: int = 2 ** 20
    middle_cap: int = None  # max middle-term dimension during closure; 2*dim_bound

    def resolved_middle_cap(self) -> int:
        return self.middle_cap if self.middle_cap is not None else 2 * self.dim_bound


class IndecClass:
    """Interned isomorphism class; identity is object identity."""

    __slots__ = ("rep", "key", "fingerprint")

    def __init__(self, rep, fingerprint):
        self.rep = rep
        self.key = rep.key()
        self.fingerprint = fingerprint

    @property
    def dim(self):
        return self.rep.dim

    @property
    def total_dim(self):
        return self.rep.total_dim

    def sort_key(self):
        return (self.total_dim, self.dim, self.key)

    def __repr__(self):
        return "Indec(dim=%s)" % (self.dim,)


def _fingerprint(rep: Representation) -> tuple:
    ranks = tuple(m.rank() for m in rep.action)
    return (rep.dim, ranks, hom_space(rep, rep).dimension)


class ClassRegistry:
    def __init__(self):
        self.by_fp = {}
        self.by_key = {}
        self.warnings = []

    def intern(self, rep: Representation):
        """(class, is_new).

        The representative is the first form found; generation is
        deterministic, so representatives and their sort order are stable.
        """
        key = rep.key()
        got = self.by_key.get(key)
        if got is not None:
            return got, False
        fp = _fingerprint(rep)
        bucket = self.by_fp.setdefault(fp, [])
        for cls in bucket:
            verdict = is_iso(rep, cls.rep)
            if verdict is True:
                self.by_key[key] = cls
                return cls, False
            if verdict is None:
                self.warnings.append(
                    "iso search exhausted budget on dim %s; classes kept distinct" % (rep.dim,)
                )
        cls = IndecClass(rep, fp)
        bucket.append(cls)
        self.by_key[key] = cls
        return cls, True


class Universe:
    def __init__(self, algebra, params):
        self.algebra = algebra
        self.params = params
        self.registry = ClassRegistry()
        self.members = []
        self.member_set = set()
        self.closure_log = []
        self.clipped = []
        self.saturated = {rule: False for rule in params.rules}
        self.warnings = []
        self._atom_cache = {}
        self._atom_options = {}
        self._bullet_cache = {}
        self._layer_cache = {}
        self._middle_buckets = {}
        self._middle_by_key = {}

    @property
    def dim_bound(self):
        return self.params.dim_bound

    @property
    def is_clipped(self):
        return bool(self.clipped)

    @property
    def is_saturated(self):
        return all(self.saturated.values())

    def sorted_members(self):
        return sorted(self.members, key=lambda c: c.sort_key())

    def member_named(self, name: str) -> IndecClass:
        """Resolve S<v>, P<v>, I<v> against the members (interning if absent)."""
        algebra = self.algebra
        kind, label = name[:1], name[1:]
        if label not in algebra.quiver.vindex:
            raise KeyError("unknown vertex label %r in member name %r" % (label, name))
        v = algebra.quiver.vindex[label]
        if kind == "S":
            rep = algebra.simple(v)
        elif kind == "P":
            rep = algebra.projective(v)
        elif kind == "I":
            rep = algebra.injective(v)
        else:
            raise KeyError("member names start with S, P or I: %r" % name)
        cls, _ = self.registry.intern(rep)
        return cls

    # -- extension atoms and middles ---------------------------------

    def _atom(self, quot: IndecClass, sub: IndecClass):
        """Arrow-level cocycle blocks for Ext^1(quot, sub)."""
        key = (id(quot), id(sub))
        got = self._atom_cache.get(key)
        if got is not None:
            return got
        algebra = self.algebra
        space = ext1_space(quot.rep, sub.rep)
        blocks = []
        if space.dimension:
            data = section_data(quot.rep)
            q = algebra.quiver
            for cls in space.basis:
                per_arrow = []
                for ai in range(len(q.arrows)):
                    w = q.arrow_target(ai)
                    per_arrow.append(cls.cocycle.mats[w].mul(data.d_arrows[ai]))
                blocks.append(tuple(per_arrow))
        atom = (space.dimension, tuple(blocks))
        self._atom_cache[key] = atom
        return atom

    def _middle_summands(self, rep: Representation):
        """Indecomposable summands of a middle term, deduplicated by iso class."""
        key = rep.key()
        got = self._middle_by_key.get(key)
        if got is not None:
            return got
        fp = (rep.dim, tuple(m.rank() for m in rep.action), hom_space(rep, rep).dimension)
        bucket = self._middle_buckets.setdefault(fp, [])
        for seen_rep, summands in bucket:
            if is_iso(rep, seen_rep) is True:
                self._middle_by_key[key] = summands
                return summands
        dec = decompose(rep)
        self.warnings.extend(dec.warnings)
        out = []
        for f, mult in dec.factors:
            cls, _ = self.registry.intern(f)
            out.append((cls, mult))
        out = tuple(out)
        bucket.append((rep, out))
        self._middle_by_key[key] = out
        return out


def _multisets(classes, max_parts, max_mult, max_dim):
    """All multisets from sorted classes: ((cls, mult), ...) with bounds."""
    classes = sorted(classes, key=lambda c: c.sort_key())
    out = []

    def rec(start, picked, dim_left, parts_left):
        if picked:
            out.append(tuple(picked))
        if parts_left == 0:
            return
        for idx in range(start, len(classes)):
            cls = classes[idx]
            d = cls.total_dim
            if d == 0 or d > dim_left:
                continue
            for mult in range(1, max_mult + 1):
                if mult * d > dim_left:
                    break
                picked.append((cls, mult))
                rec(idx + 1, picked, dim_left - mult * d, parts_left - 1)
                picked.pop()

    rec(0, [], max_dim, max_parts)
    return out


def generate_universe(algebra, dim_bound, params: UniverseParams = None, seeds=None) -> Universe:
    """Worklist closure of seed modules under the configured rules."""
    if params is None:
        params = UniverseParams(dim_bound)
    else:
        params = replace(params, dim_bound=dim_bound)
    if dim_bound < 1:
        raise ValueError("dim bound must cover the simple modules")
    uni = Universe(algebra, params)
    if seeds is None:
        seeds = []
        for v in range(algebra.n_vertices):
            seeds.append(algebra.simple(v))
            seeds.append(algebra.projective(v))
            seeds.append(algebra.injective(v))

    heap = []
    seq = itertools.count()
    noted = set()

    def add(rep, rule, source=""):
        if rep.total_dim == 0:
            return None
        if rep.total_dim > params.dim_bound:
            mark = (rule, rep.dim)
            if mark not in noted:
                noted.add(mark)
                uni.clipped.append({"rule": rule, "dim": rep.dim_map(), "source": source})
            return None
        cls, new = uni.registry.intern(rep)
        if new or cls not in uni.member_set:
            if len(uni.members) >= params.member_cap:
                raise BudgetExceeded("universe member cap %d reached" % params.member_cap)
            uni.members.append(cls)
            uni.member_set.add(cls)
            uni.closure_log.append({"rule": rule, "dim": cls.rep.dim_map(), "source": source})
            heapq.heappush(heap, (cls.sort_key(), next(seq), cls))
        return cls

    for rep in seeds:
        if rep.total_dim == 0:
            continue
        dec = decompose(rep)
        uni.warnings.extend(dec.warnings)
        for f, _ in dec.factors:
            add(f, "seed")

    processed = []
    while heap:
        _, _, cls = heapq.heappop(heap)
        if "syzygy" in params.rules:
            om = syzygy(cls.rep, 1)
            if om.total_dim:
                for f, _ in decompose(om).factors:
                    add(f, "syzygy", source=str(cls.dim))
        if "cosyzygy" in params.rules:
            from .homology import cosyzygy

            co = cosyzygy(cls.rep, 1)
            if co.total_dim:
                for f, _ in decompose(co).factors:
                    add(f, "cosyzygy", source=str(cls.dim))
        if "ext" in params.rules:
            mid_cap = params.resolved_middle_cap()
            partners = processed + [cls]
            for other in partners:
                for sub, quot in ((cls, other), (other, cls)):
                    for j in range(1, params.mult_bound + 1):
                        if sub.total_dim * j + quot.total_dim > mid_cap:
                            # truncated extension window is honest clipping
                            if uni._atom(quot, sub)[0]:
                                mark = ("ext-window", sub.dim, quot.dim)
                                if mark not in noted:
                                    noted.add(mark)
                                    uni.clipped.append(
                                        {
                                            "rule": "ext-window",
                                            "dim": {"sub": str(sub.dim), "quot": str(quot.dim)},
                                            "source": "middle above cap %d not expanded" % mid_cap,
                                        }
                                    )
                            break
                        for summand_cls, _ in _pair_middles(uni, ((sub, j),), ((quot, 1),), params):
                            add(summand_cls.rep, "ext", source="%s by %s^%d" % (quot.dim, sub.dim, j))
        processed.append(cls)
    for rule in params.rules:
        uni.saturated[rule] = True
    uni.warnings.extend(uni.registry.warnings)
    return uni


class _AtomOptions:
    """GF(p)-combinations of the cocycle blocks for one Ext^1 atom.

    Blocks are combined on demand and memoized per index, so only the
    representatives actually enumerated are ever materialized.
    """

    __slots__ = ("p", "dim", "blocks", "zero", "cache")

    def __init__(self, p, dim, blocks, zero):
        self.p = p
        self.dim = dim
        self.blocks = blocks
        self.zero = zero
        self.cache = {0: zero}

    def __len__(self):
        return self.p ** self.dim

    def get(self, idx: int):
        got = self.cache.get(idx)
        if got is not None:
            return got
        acc = None
        rem = idx
        for t in range(self.dim - 1, -1, -1):
            rem, c = divmod(rem, self.p)
            if not c:
                continue
            scaled = tuple(b.scale(c) for b in self.blocks[t])
            acc = scaled if acc is None else tuple(a.add(b) for a, b in zip(acc, scaled))
        got = self.zero if acc is None else acc
        self.cache[idx] = got
        return got


def _atom_option_blocks(uni: Universe, x: IndecClass, y: IndecClass) -> _AtomOptions:
    key = (id(x), id(y))
    got = uni._atom_options.get(key)
    if got is not None:
        return got
    algebra = uni.algebra
    p = algebra.p
    q = algebra.quiver
    dim, blocks = uni._atom(x, y)
    zero = tuple(
        Matrix.zero(p, y.dim[q.arrow_target(ai)], x.dim[q.arrow_source(ai)])
        for ai in range(len(q.arrows))
    )
    out = _AtomOptions(p, dim, blocks, zero)
    uni._atom_options[key] = out
    return out


def _local_blocks(uni: Universe, sub_ms, quot_ms, params):
    """Per (sub slot, quot slot): list of all local cocycle-block choices."""
    ylist = []
    for cls, mult in sub_ms:
        ylist.extend([cls] * mult)
    xlist = []
    for cls, mult in quot_ms:
        xlist.extend([cls] * mult)
    slot_options = []
    total_exp = 0
    for y in ylist:
        row_options = []
        for x in xlist:
            options = _atom_option_blocks(uni, x, y)
            total_exp += options.dim
            row_options.append(options)
        slot_options.append(row_options)
    return ylist, xlist, slot_options, total_exp


def _assemble_middle(algebra, ylist, xlist, slot_options, choice):
    """Block-triangular extension for one choice of local cocycle blocks."""
    p = algebra.p
    q = algebra.quiver
    n_arrows = len(q.arrows)
    dims = tuple(
        sum(y.dim[v] for y in ylist) + sum(x.dim[v] for x in xlist)
        for v in range(q.n_vertices)
    )
    action = []
    for ai in range(n_arrows):
        yblk = linalg.block_diag(p, [y.rep.action[ai] for y in ylist]) if ylist else Matrix.zero(p, 0, 0)
        xblk = linalg.block_diag(p, [x.rep.action[ai] for x in xlist]) if xlist else Matrix.zero(p, 0, 0)
        crows = []
        for yi in range(len(ylist)):
            crow = [slot_options[yi][xi].get(choice[yi][xi])[ai] for xi in range(len(xlist))]
            crows.append(linalg.hstack(crow) if crow else Matrix.zero(p, ylist[yi].dim[q.arrow_target(ai)], 0))
        c = linalg.vstack(crows) if crows else Matrix.zero(p, 0, xblk.ncols)
        top = linalg.hstack([yblk, c])
        bottom = linalg.hstack([Matrix.zero(p, xblk.nrows, yblk.ncols), xblk])
        action.append(linalg.vstack([top, bottom]))
    return Representation(algebra, dims, tuple(action))


def _gaussian_count(p: int, n: int, k: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    return num // den


def _rref_rows(p: int, nrows: int, ncols: int):
    """All full-rank reduced row echelon forms, as tuples of coefficient rows."""
    if nrows > ncols:
        return
    for pivots in itertools.combinations(range(ncols), nrows):
        pivot_set = set(pivots)
        slots = [
            (i, c)
            for i in range(nrows)
            for c in range(pivots[i] + 1, ncols)
            if c not in pivot_set
        ]
        for vals in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * ncols for _ in range(nrows)]
            for i in range(nrows):
                rows[i][pivots[i]] = 1
            for (i, c), v in zip(slots, vals):
                rows[i][c] = v
            yield tuple(tuple(r) for r in rows)


def _coeffs_to_option(coeffs, p: int) -> int:
    """Index into the itertools.product(range(p), repeat=dim) option list."""
    idx = 0
    for c in coeffs:
        idx = idx * p + c
    return idx


def _pair_ext_dim(uni, sub_ms, quot_ms) -> int:
    total = 0
    for ycls, jm in sub_ms:
        for xcls, km in quot_ms:
            total += jm * km * uni._atom(xcls, ycls)[0]
    return total


def _orbit_plan(uni, sub_ms, quot_ms):
    """Representative plan for cocycle matrices modulo copy automorphisms.

    Row operations inside one block of identical sub copies and column
    operations inside one block of identical quotient copies change the
    middle term by an isomorphism, and a block of deficient rank splits off
    a copy already covered by a smaller multiset.  It therefore suffices to
    enumerate, on the cheaper side, full-rank RREF coefficient matrices per
    block.  Returns (mode, blocks, count): mode "rows"/"cols", blocks a list
    of (mult, space_dim, chunk_dims), count the representative total.
    """
    p = uni.algebra.p
    row_blocks = []
    rows_count = 1
    for ycls, jmult in sub_ms:
        chunks = []
        for xcls, kmult in quot_ms:
            m = uni._atom(xcls, ycls)[0]
            chunks.extend([m] * kmult)
        space = sum(chunks)
        rows_count *= _gaussian_count(p, space, jmult)
        row_blocks.append((jmult, space, tuple(chunks)))
    col_blocks = []
    cols_count = 1
    for xcls, kmult in quot_ms:
        chunks = []
        for ycls, jmult in sub_ms:
            m = uni._atom(xcls, ycls)[0]
            chunks.extend([m] * jmult)
        space = sum(chunks)
        cols_count *= _gaussian_count(p, space, kmult)
        col_blocks.append((kmult, space, tuple(chunks)))
    if rows_count <= cols_count:
        return "rows", row_blocks, rows_count
    return "cols", col_blocks, cols_count


def _block_matrices(p, blocks):
    """Product of per-block full-rank RREFs; yields flat row lists."""
    pools = []
    for mult, space, _ in blocks:
        pools.append(list(_rref_rows(p, mult, space)))
        if not pools[-1]:
            return
    for combo in itertools.product(*pools):
        flat = []
        for block_rows in combo:
            flat.extend(block_rows)
        yield flat


def _choice_matrices(uni, sub_ms, quot_ms, params):
    """Yield choice matrices (rows per sub slot, cols per quot slot)."""
    p = uni.algebra.p
    j = sum(m for _, m in sub_ms)
    k = sum(m for _, m in quot_ms)
    mode, blocks, _ = _orbit_plan(uni, sub_ms, quot_ms)
    if mode == "rows":
        for flat in _block_matrices(p, blocks):
            choice = []
            row_at = 0
            for (mult, _, chunks) in blocks:
                for _ in range(mult):
                    row = flat[row_at]
                    row_at += 1
                    opts = []
                    pos = 0
                    for m in chunks:
                        opts.append(_coeffs_to_option(row[pos:pos + m], p))
                        pos += m
                    choice.append(tuple(opts))
            yield tuple(choice)
    else:
        for flat in _block_matrices(p, blocks):
            grid = [[0] * k for _ in range(j)]
            col_at = 0
            for (mult, _, chunks) in blocks:
                for _ in range(mult):
                    col = flat[col_at]
                    pos = 0
                    for yi, m in enumerate(chunks):
                        grid[yi][col_at] = _coeffs_to_option(col[pos:pos + m], p)
                        pos += m
                    col_at += 1
            yield tuple(tuple(r) for r in grid)


def _pair_middles(uni: Universe, sub_ms, quot_ms, params):
    """All indecomposable summands of middles for one (sub, quot) multiset pair."""
    algebra = uni.algebra
    ylist, xlist, slot_options, total_exp = _local_blocks(uni, sub_ms, quot_ms, params)
    if total_exp == 0:
        return []
    _, _, effective = _orbit_plan(uni, sub_ms, quot_ms)
    if effective > params.ext_budget:
        raise BudgetExceeded(
            "%d extension-class representatives for one pair exceed budget %d"
            % (effective, params.ext_budget)
        )
    out = {}
    for choice in _choice_matrices(uni, sub_ms, quot_ms, params):
        middle = _assemble_middle(algebra, ylist, xlist, slot_options, choice)
        for cls, mult in uni._middle_summands(middle):
            out.setdefault(id(cls), (cls, mult))
    return list(out.values())


def bullet(uni: Universe, left, right, mult_bound=None, parts_cap=None) -> frozenset:
    """Indecomposables of the bullet of add(left) with add(right).

    Sequences run 0 -> L -> E -> R -> 0 with the sub L a bounded sum from
    `left` and the quotient R a bounded sum from `right`; the zero class
    keeps left | right inside the result.
    """
    params = uni.params
    mb = params.mult_bound if mult_bound is None else mult_bound
    pc = params.parts_cap if parts_cap is None else parts_cap
    left = frozenset(left)
    right = frozenset(right)
    cache_key = (left, right, mb, pc)
    got = uni._bullet_cache.get(cache_key)
    if got is not None:
        return got
    result = set(left | right)
    if left and right:
        d = params.dim_bound
        sub_sums = _multisets(left, pc, mb, d - 1)
        quot_sums = sorted(
            _multisets(right, pc, max(d, mb), d - 1),
            key=lambda ms: sum(c.total_dim * m for c, m in ms),
        )
        quot_dims = [sum(c.total_dim * m for c, m in ms) for ms in quot_sums]
        for sub_ms in sub_sums:
            sub_dim = sum(c.total_dim * m for c, m in sub_ms)
            for quot_ms, quot_dim in zip(quot_sums, quot_dims):
                if sub_dim + quot_dim > d:
                    break
                if _pair_ext_dim(uni, sub_ms, quot_ms) == 0:
                    continue
                for cls, _ in _pair_middles(uni, sub_ms, quot_ms, params):
                    if cls.total_dim <= d:
                        result.add(cls)
                    else:
                        uni.clipped.append(
                            {"rule": "bullet", "dim": cls.rep.dim_map(), "source": "middle summand"}
                        )
    out = frozenset(result)
    uni._bullet_cache[cache_key] = out
    return out


def layer(uni: Universe, gens, n: int, mult_bound=None, parts_cap=None) -> frozenset:
    """[T]_n inside the universe window: layer 1 is add(T), then bullet with T."""
    gens = frozenset(gens)
    if n < 0:
        raise ValueError("layer index must be nonnegative")
    if n == 0 or not gens:
        return frozenset()
    mb = uni.params.mult_bound if mult_bound is None else mult_bound
    pc = uni.params.parts_cap if parts_cap is None else parts_cap
    key = (gens, n, mb, pc)
    got = uni._layer_cache.get(key)
    if got is not None:
        return got
    if n == 1:
        out = gens
    else:
        out = bullet(uni, gens, layer(uni, gens, n - 1, mb, pc), mb, pc)
    uni._layer_cache[key] = out
    return out


def bounded_containment(uni: Universe, members, gens, n: int):
    """None if members lie in layer n of gens; else the first missing class."""
    lay = layer(uni, gens, n)
    for cls in sorted(members, key=lambda c: c.sort_key()):
        if cls not in lay:
            return cls
    return None


@dataclass
class SyzygyCategory:
    n: int
    members: tuple  # IndecClass, sorted
    universe: Universe
    oversized: tuple = ()  # syzygy summands beyond the window bound


def syzygy_category(algebra, n: int, dim_bound: int, params: UniverseParams = None, universe=None) -> SyzygyCategory:
    """Indecomposables of the n-th syzygy category seen through the window."""
    if universe is None:
        universe = generate_universe(algebra, dim_bound, params)
    if n == 0:
        return SyzygyCategory(0, tuple(universe.sorted_members()), universe)
    found = {}
    oversized = []
    for cls in universe.sorted_members():
        om = syzygy(cls.rep, n)
        if om.total_dim == 0:
            continue
        for f, _ in decompose(om).factors:
            c, _ = universe.registry.intern(f)
            if c.total_dim > universe.dim_bound:
                oversized.append(c)
            found[id(c)] = c
    for v in range(algebra.n_vertices):
        c, _ = universe.registry.intern(algebra.projective(v))
        found[id(c)] = c
    members = tuple(sorted(found.values(), key=lambda c: c.sort_key()))
    return SyzygyCategory(n, members, universe, tuple(oversized))


@dataclass
class SyzygyFinitenessProbe:
    n: int
    dim_bound: int
    certified: bool
    tier: str
    members: tuple = ()
    details: str = ""


def _omega_closure(universe: Universe, base_members):
    """Close a member list under syzygies and summands; (members, clipped)."""
    algebra = universe.algebra
    work = list(base_members)
    seen = {id(c): c for c in work}
    clipped = False
    idx = 0
    while idx < len(work):
        cls = work[idx]
        idx += 1
        if cls.total_dim >= universe.dim_bound:
            clipped = True
        om = syzygy(cls.rep, 1)
        if om.total_dim == 0:
            continue
        for f, _ in decompose(om).factors:
            c, _ = universe.registry.intern(f)
            if id(c) not in seen:
                seen[id(c)] = c
                work.append(c)
                if len(work) > universe.params.member_cap:
                    raise BudgetExceeded("syzygy closure exceeded member cap")
    return sorted(seen.values(), key=lambda c: c.sort_key()), clipped


def syzygy_finiteness_probe(algebra, n: int, dim_bound: int, params: UniverseParams = None) -> SyzygyFinitenessProbe:
    """Certificate hunt for "the n-th syzygy category is representation-finite".

    Tier 1: the whole window saturates unclipped (representation-finite
    algebra).  Tier 2: the window's n-th syzygies close under further
    syzygies strictly inside the bound, and the closed list is unchanged
    when the window grows by one.
    """
    cat = syzygy_category(algebra, n, dim_bound, params)
    uni = cat.universe
    if uni.is_saturated and not uni.is_clipped and all(
        c.total_dim < dim_bound for c in uni.members
    ):
        return SyzygyFinitenessProbe(
            n, dim_bound, True, "rep-finite-window", cat.members,
            "universe saturated strictly below the bound",
        )
    closed, clipped = _omega_closure(uni, cat.members)
    if clipped or cat.oversized:
        return SyzygyFinitenessProbe(
            n, dim_bound, False, "window", tuple(closed), "syzygy closure touches the window bound"
        )
    bigger = syzygy_category(algebra, n, dim_bound + 1, params)
    closed2, clipped2 = _omega_closure(bigger.universe, bigger.members)
    stable = len(closed) == len(closed2) and all(
        any(a.dim == b.dim and is_iso(a.rep, b.rep) is True for b in closed2) for a in closed
    )
    if stable and not clipped2:
        return SyzygyFinitenessProbe(
            n, dim_bound, True, "window-stable", tuple(closed),
            "syzygy closure identical at dim bounds %d and %d" % (dim_bound, dim_bound + 1),
        )
    return SyzygyFinitenessProbe(
        n, dim_bound, False, "window", tuple(closed), "closure changed under window growth"
    )


# -- representation type ------------------------------------------------


@dataclass
class RepTypeCertificate:
    verdict: str  # "finite" | "infinite" | "unknown"
    method: str  # "tits_form" | "enumeration" | "heuristic_count" | "none"
    certified: bool
    members: tuple = ()
    witness: str = ""


def tits_classification(algebra) -> str:
    """Dynkin / Euclidean / wild-indefinite via the symmetrized Euler form."""
    if not algebra.is_hereditary():
        return "not-hereditary"
    n = algebra.n_vertices
    gram = [[0] * n for _ in range(n)]
    for v in range(n):
        gram[v][v] = 2
    q = algebra.quiver
    for ai in range(len(q.arrows)):
        u, w = q.arrow_source(ai), q.arrow_target(ai)
        if u == w:
            gram[u][u] -= 2
        else:
            gram[u][w] -= 1
            gram[w][u] -= 1
    a = [[Fraction(x) for x in row] for row in gram]
    definite = True
    for i in range(n):
        if a[i][i] < 0:
            return "wild-indefinite"
        if a[i][i] == 0:
            if any(a[i][j] != 0 for j in range(i + 1, n)):
                return "wild-indefinite"
            definite = False
            continue
        for r in range(i + 1, n):
            if a[r][i]:
                f = a[r][i] / a[i][i]
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
    return "Dynkin" if definite else "Euclidean"


def rep_type_certificate(algebra, dim_bound: int, params: UniverseParams = None, universe: Universe = None) -> RepTypeCertificate:
    tits = tits_classification(algebra)
    if tits in ("Euclidean", "wild-indefinite"):
        return RepTypeCertificate(
            "infinite", "tits_form", True,
            witness="underlying graph is %s (Euler form not positive definite)" % tits,
        )
    if universe is None:
        universe = generate_universe(algebra, dim_bound, params)
    strict = all(c.total_dim < dim_bound for c in universe.members)
    if universe.is_saturated and not universe.is_clipped and strict:
        method = "tits_form" if tits == "Dynkin" else "enumeration"
        return RepTypeCertificate(
            "finite", method, True, tuple(universe.sorted_members()),
            witness="closure saturated strictly below dim bound %d" % dim_bound,
        )
    by_dim = {}
    for cls in universe.members:
        by_dim.setdefault(cls.dim, []).append(cls)
    for dim, bucket in sorted(by_dim.items()):
        if len(bucket) >= HEURISTIC_INFINITE_THRESHOLD:
            return RepTypeCertificate(
                "infinite", "heuristic_count", False,
                witness="%d pairwise non-isomorphic indecomposables share dim %s" % (len(bucket), (dim,)),
            )
    return RepTypeCertificate("unknown", "none", False)


# -- extension-dimension engine ------------------------------------------


@dataclass(frozen=True)
class EdFact:
    i: int
    kind: str  # "lower" | "upper"
    value: int
    rule: str
    detail: str
    premises: tuple = ()

    def describe(self) -> str:
        base = "%s %d at i=%d [%s] %s" % (self.kind, self.value, self.i, self.rule, self.detail)
        if self.premises:
            base += " <= " + "; ".join(p.describe() for p in self.premises)
        return base


@dataclass
class EdInterval:
    algebra_id: str
    i: int
    lower: int
    upper: int
    lower_fact: EdFact
    upper_fact: EdFact
    notes: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra_id,
            "i": self.i,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "lower_provenance": self.lower_fact.describe(),
            "upper_provenance": self.upper_fact.describe(),
            "notes": list(self.notes),
        }


@dataclass
class EdReportOptions:
    dim_bound: int = 6
    rep_probe: bool = True
    syzygy_probes: tuple = ()
    gldim_cap: int = None
    params: UniverseParams = None


def ed_report(algebra, indices, external_facts=(), options: EdReportOptions = None, algebra_id="algebra") -> list:
    """Certified [lower, upper] intervals for ed of the i-th syzygy categories.

    Bound rules, each tagged in the provenance chain:
      R1  representation type at i=0 (finite => exact 0; certified infinite => lower 1)
      R2  upper ll(A)-1 at i=0
      R3  upper gldim(A) at i=0
      R4  upper ll(A)-2 at every i>=1, A nonsemisimple
      R5  nesting: ed at i+1 <= ed at i
      R6  syzygy shift: bounds move by one per index step
      R7  gldim g finite => exact 0 at i=g
      R8  certified syzygy-finiteness probe => exact 0 at i=n
    External facts enter as axioms with their citation.
    """
    if options is None:
        options = EdReportOptions()
    indices = sorted(set(indices))
    if any(i < 0 for i in indices):
        raise ValueError("syzygy indices are nonnegative")
    ll = algebra.loewy_length()
    semisimple = algebra.is_semisimple()
    gcap = options.gldim_cap if options.gldim_cap is not None else 2 * max(algebra.dim, 1)
    gdim = gldim_bounded(algebra, gcap)
    notes = []

    universe = None
    rep_cert = None
    if options.rep_probe:
        universe = generate_universe(algebra, options.dim_bound, options.params)
        rep_cert = rep_type_certificate(algebra, options.dim_bound, options.params, universe)
    else:
        rep_cert = rep_type_certificate(algebra, options.dim_bound, options.params, None) \
            if tits_classification(algebra) in ("Euclidean", "wild-indefinite") else None

    probes = {}
    for n in options.syzygy_probes:
        probes[n] = syzygy_finiteness_probe(algebra, n, options.dim_bound, options.params)

    external_facts = list(external_facts)
    imax = max(
        indices
        + [gdim if gdim is not None else 0]
        + list(probes)
        + [f["i"] for f in external_facts]
        + [0]
    )
    lower = {}
    upper = {}

    def push(fact: EdFact):
        table = lower if fact.kind == "lower" else upper
        cur = table.get(fact.i)
        if fact.kind == "lower":
            if cur is None or fact.value > cur.value:
                table[fact.i] = fact
                return True
        else:
            if cur is None or fact.value < cur.value:
                table[fact.i] = fact
                return True
        return False

    for i in range(imax + 1):
        push(EdFact(i, "lower", 0, "axiom", "extension dimension is nonnegative"))
    if gdim is not None:
        push(EdFact(0, "upper", gdim, "R3", "ed <= gldim = %d" % gdim))
        push(EdFact(gdim, "upper", 0, "R7", "gldim = %d: syzygy category %d is projective, hence finite" % (gdim, gdim)))
    push(EdFact(0, "upper", ll - 1, "R2", "ed <= loewy_length - 1 = %d" % (ll - 1)))
    if not semisimple:
        for i in range(1, imax + 1):
            push(EdFact(i, "upper", ll - 2, "R4", "nonsemisimple: ed of syzygy categories <= loewy_length - 2"))
    if rep_cert is not None:
        if rep_cert.verdict == "finite" and rep_cert.certified:
            push(EdFact(0, "upper", 0, "R1", "representation-finite (%s): ed = 0" % rep_cert.method))
        elif rep_cert.verdict == "infinite" and rep_cert.certified:
            push(EdFact(0, "lower", 1, "R1", "representation-infinite (%s)" % rep_cert.witness))
        elif rep_cert.verdict == "infinite" and not rep_cert.certified:
            notes.append(
                "heuristic only (not certified, not propagated): %s suggests ed >= 1 at i=0"
                % rep_cert.witness
            )
    for n, probe in probes.items():
        if probe.certified:
            push(EdFact(n, "upper", 0, "R8", "syzygy category %d certified finite (%s)" % (n, probe.tier)))
        else:
            notes.append("syzygy-finiteness probe at i=%d not certified: %s" % (n, probe.details))
    for fact in external_facts:
        i = fact["i"]
        cite = "external: %s" % fact.get("citation", "unsourced")
        kind = fact["kind"]
        value = fact["value"]
        if kind in ("lower", "exact"):
            push(EdFact(i, "lower", value, "external", cite))
        if kind in ("upper", "exact"):
            push(EdFact(i, "upper", value, "external", cite))

    changed = True
    while changed:
        changed = False
        for i in range(imax + 1):
            up = upper.get(i)
            if up is not None:
                if i + 1 <= imax:
                    f = EdFact(i + 1, "upper", up.value, "R5", "nested syzygy categories", (up,))
                    changed |= push(f)
                if i - 1 >= 0:
                    f = EdFact(i - 1, "upper", up.value + 1, "R6", "ed at i-1 <= ed at i + 1", (up,))
                    changed |= push(f)
            lo = lower.get(i)
            if lo is not None:
                if i - 1 >= 0:
                    f = EdFact(i - 1, "lower", lo.value, "R5", "nested syzygy categories", (lo,))
                    changed |= push(f)
                if i + 1 <= imax and lo.value - 1 >= 0:
                    f = EdFact(i + 1, "lower", lo.value - 1, "R6", "ed at i+1 >= ed at i - 1", (lo,))
                    changed |= push(f)

    out = []
    for i in indices:
        lo, up = lower[i], upper[i]
        if lo.value > up.value:
            raise ContradictoryFacts(
                "at i=%d lower %d exceeds upper %d\n  lower: %s\n  upper: %s"
                % (i, lo.value, up.value, lo.describe(), up.describe()),
                lo, up,
            )
        interval = EdInterval(algebra_id, i, lo.value, up.value, lo, up, list(notes))
        out.append(interval)
    return out
