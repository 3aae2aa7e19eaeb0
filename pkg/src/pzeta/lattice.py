"""Subgroup lattices of finite permutation groups.

Enumeration strategy: grow the set of conjugacy-class representatives
by extending each known subgroup K with one extra generator, where the
extra generator ranges over one representative per K-conjugation orbit
of the cyclic subgroups of prime-power order.  This is exhaustive:
every subgroup H has a maximal subgroup K, and H is generated by K
together with some element of prime-power order (H is generated by its
prime-power elements).  Each new class is immediately expanded into
its full conjugacy orbit, so the final node list contains every
subgroup exactly once.

The same machinery, seeded with a Sylow 2-subgroup instead of the
trivial subgroup, enumerates exactly the subgroups of odd index (up to
listing every conjugate), which is what the minimal-odd-index
computations need; groups of order a few thousand stay tractable that
way even when their full lattice would not be.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, NotNormal, OrderBoundExceeded
from .numtheory import prime_factors
from .permgroup import PermGroup, Permutation, _Engine


@dataclass(frozen=True)
class Budget:
    """Resource limits for lattice-scale computations.

    ``max_order`` bounds the order of any group whose lattice (or
    odd-index sublattice) may be enumerated; ``max_subgroups`` bounds
    the number of subgroups stored; ``time_hint_s`` is a soft wall-clock
    limit checked between extension steps.
    """

    max_order: int = 10_000
    max_subgroups: int = 20_000
    time_hint_s: float | None = None


DEFAULT_BUDGET = Budget()


class _Tracker:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.start = time.monotonic()
        self.subgroups = 0
        self.classes = 0

    def stats(self) -> dict:
        return {
            "subgroups": self.subgroups,
            "classes": self.classes,
            "elapsed_s": round(time.monotonic() - self.start, 3),
        }

    def check(self):
        if self.subgroups > self.budget.max_subgroups:
            raise BudgetExceeded(
                f"more than {self.budget.max_subgroups} subgroups", self.stats()
            )
        hint = self.budget.time_hint_s
        if hint is not None and time.monotonic() - self.start > hint:
            raise BudgetExceeded(f"time hint {hint}s exceeded", self.stats())


def _reduce_gens(engine: _Engine, gens: tuple[int, ...], elements: np.ndarray) -> tuple[int, ...]:
    """Try to replace a long generating tuple by one or two elements."""
    gens = tuple(dict.fromkeys(g for g in gens if g != engine.id_idx))
    target = len(elements)
    if target <= 2 or len(gens) <= 2:
        return gens
    orders = engine.element_orders()
    cand = sorted(
        (int(x) for x in elements if x != engine.id_idx),
        key=lambda i: (-int(orders[i]), i),
    )[:10]
    for x in cand:
        if int(orders[x]) == target:
            return (x,)
    tries = 0
    for x, y in combinations(cand, 2):
        tries += 1
        if tries > 36:
            break
        res = engine.closure((x, y))
        if res is not None and len(res) == target:
            return (x, y)
    return gens


def _enumerate(
    engine: _Engine,
    budget: Budget,
    seed: Sequence[int] | None = None,
    seed_gens: Sequence[int] = (),
):
    """Core enumeration.  Returns canonical, parallel lists:
    nodes (sorted element-index tuples), node_gens, node_class, classes.

    With ``seed=None`` every subgroup of the group is listed.  With a
    seed subgroup, every conjugate of every overgroup of the seed is
    listed (the seed's class first grows upward, orbits fill sideways).
    """
    order = engine.order
    tracker = _Tracker(budget)

    nodes: list[tuple[int, ...]] = []
    node_gens: list[tuple[int, ...]] = []
    node_class: list[int] = []
    node_ids: dict[frozenset, int] = {}
    classes: list[list[int]] = []
    class_gens: list[tuple[int, ...]] = []

    g_gens = engine.gen_indices

    def register(rep: tuple[int, ...], gens: tuple[int, ...]) -> int:
        cid = len(classes)
        members: list[int] = []
        pending = [(rep, gens)]
        seen = {frozenset(rep)}
        while pending:
            cur, cur_gens = pending.pop()
            tracker.subgroups += 1
            tracker.check()
            nid = len(nodes)
            nodes.append(cur)
            node_gens.append(cur_gens)
            node_class.append(cid)
            node_ids[frozenset(cur)] = nid
            members.append(nid)
            arr = np.asarray(cur, dtype=np.int64)
            for g in g_gens:
                conj = tuple(sorted(engine.conj_set(arr, g)))
                fs = frozenset(conj)
                if fs not in seen:
                    seen.add(fs)
                    cgens = tuple(engine.conj_elem(x, g) for x in cur_gens)
                    pending.append((conj, cgens))
        classes.append(members)
        class_gens.append(gens)
        tracker.classes = len(classes)
        return cid

    heap: list[tuple[int, int]] = []
    if seed is None:
        cid = register((engine.id_idx,), ())
    else:
        base = tuple(sorted(int(x) for x in seed))
        cid = register(base, tuple(seed_gens))
    heapq.heappush(heap, (len(nodes[classes[cid][0]]), cid))

    top = tuple(range(order))
    if frozenset(top) not in node_ids:
        register(top, tuple(g_gens))

    candidates = engine.pp_cyclic_generator_reps()

    while heap:
        size, cid = heapq.heappop(heap)
        if size == order:
            continue
        rep = nodes[classes[cid][0]]
        kgens = class_gens[cid]
        covered = set(rep)
        for e in candidates:
            if e in covered:
                continue
            # one representative per K-conjugation orbit: <K, e^k> == <K, e>
            orbit = [e]
            covered.add(e)
            qi = 0
            while qi < len(orbit):
                x = orbit[qi]
                qi += 1
                for kg in kgens:
                    y = engine.conj_elem(x, kg)
                    if y not in covered:
                        covered.add(y)
                        orbit.append(y)
            tracker.check()
            res = engine.closure(kgens + (e,), bail_half=True)
            if res is None:
                continue  # generated the whole group; top is preseeded
            fs = frozenset(int(x) for x in res)
            if fs in node_ids:
                continue
            new_rep = tuple(int(x) for x in res)
            new_gens = _reduce_gens(engine, kgens + (e,), res)
            ncid = register(new_rep, new_gens)
            heapq.heappush(heap, (len(new_rep), ncid))

    # canonical ordering: by subgroup order, then by element tuple
    perm = sorted(range(len(nodes)), key=lambda i: (len(nodes[i]), nodes[i]))
    inv = {old: new for new, old in enumerate(perm)}
    nodes2 = [nodes[i] for i in perm]
    gens2 = [node_gens[i] for i in perm]
    cls_members: dict[int, list[int]] = {}
    for old, cid in enumerate(node_class):
        cls_members.setdefault(cid, []).append(inv[old])
    ordered_classes = sorted((sorted(m) for m in cls_members.values()), key=min)
    class_of = [0] * len(nodes2)
    for ci, members in enumerate(ordered_classes):
        for nid in members:
            class_of[nid] = ci
    return nodes2, gens2, class_of, [tuple(m) for m in ordered_classes], tracker.stats()


class SubgroupLattice:
    """Every subgroup of a finite permutation group, with inclusion
    order, conjugacy classes and the Moebius function mu(H) defined by
    mu(G) = 1 and mu(H) = -sum_{H < K <= G} mu(K)."""

    def __init__(self, group: PermGroup, budget: Budget):
        self.group = group
        self.engine = group.engine
        if self.engine.order > budget.max_order:
            raise OrderBoundExceeded(
                f"order {self.engine.order} exceeds lattice budget {budget.max_order}"
            )
        nodes, gens, class_of, classes, stats = _enumerate(self.engine, budget)
        self._nodes = nodes
        self._gens = gens
        self._class_of = class_of
        self._classes = classes
        self.stats = stats
        self._fs = [frozenset(n) for n in nodes]
        self._ids = {fs: i for i, fs in enumerate(self._fs)}
        self.trivial_id = 0
        self.top_id = len(nodes) - 1
        assert len(self._nodes[self.top_id]) == self.engine.order
        self._overgroups: list[list[int]] | None = None
        self._subgroups_strict: list[list[int]] | None = None
        self._mu = self._compute_moebius()

    # -- basic queries ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def class_count(self) -> int:
        return len(self._classes)

    def node_elements(self, i: int) -> tuple[int, ...]:
        return self._nodes[i]

    def node_order(self, i: int) -> int:
        return len(self._nodes[i])

    def node_index(self, i: int) -> int:
        return self.engine.order // len(self._nodes[i])

    def node_generators(self, i: int) -> tuple[int, ...]:
        return self._gens[i]

    def node_permutations(self, i: int) -> list[Permutation]:
        return [self.engine.permutation(x) for x in self._nodes[i]]

    def node_id_of(self, elements: Iterable[int]) -> int:
        fs = frozenset(int(x) for x in elements)
        if fs not in self._ids:
            raise KeyError("no such subgroup in the lattice")
        return self._ids[fs]

    def contains(self, i: int, j: int) -> bool:
        """True when node i is a subgroup of node j."""
        return self._fs[i] <= self._fs[j]

    @property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        return list(self._classes)

    def class_of(self, i: int) -> int:
        return self._class_of[i]

    def is_normal(self, i: int) -> bool:
        return len(self._classes[self._class_of[i]]) == 1

    def normal_node_ids(self) -> list[int]:
        return [i for i in range(self.node_count) if self.is_normal(i)]

    # -- Moebius -----------------------------------------------------------

    def _compute_moebius(self) -> list[int]:
        n = self.node_count
        mu = [0] * n
        mu[self.top_id] = 1
        sizes = [len(x) for x in self._nodes]
        ids_desc = sorted(range(n), key=lambda i: -sizes[i])
        reps_done: dict[int, int] = {self._class_of[self.top_id]: 1}
        for i in ids_desc:
            cid = self._class_of[i]
            if cid in reps_done:
                mu[i] = reps_done[cid]
                continue
            acc = 0
            fs_i, sz_i = self._fs[i], sizes[i]
            for j in ids_desc:
                sz_j = sizes[j]
                if sz_j <= sz_i:
                    break
                if sz_j % sz_i == 0 and fs_i <= self._fs[j]:
                    acc += mu[j]
            mu[i] = -acc
            reps_done[cid] = mu[i]
        return mu

    def moebius(self, i: int) -> int:
        return self._mu[i]

    @property
    def moebius_values(self) -> list[int]:
        return list(self._mu)

    # -- containment-derived structure -------------------------------------

    def _containment(self) -> list[list[int]]:
        if self._overgroups is None:
            n = self.node_count
            sizes = [len(x) for x in self._nodes]
            over: list[list[int]] = [[] for _ in range(n)]
            by_size = sorted(range(n), key=lambda i: sizes[i])
            for ai, i in enumerate(by_size):
                fs_i, sz_i = self._fs[i], sizes[i]
                for j in by_size[ai + 1 :]:
                    if sizes[j] > sz_i and sizes[j] % sz_i == 0 and fs_i <= self._fs[j]:
                        over[i].append(j)
            self._overgroups = over
        return self._overgroups

    def strict_overgroups(self, i: int) -> list[int]:
        return list(self._containment()[i])

    def strict_subgroups(self, i: int) -> list[int]:
        if self._subgroups_strict is None:
            subs: list[list[int]] = [[] for _ in range(self.node_count)]
            for lo, ups in enumerate(self._containment()):
                for hi in ups:
                    subs[hi].append(lo)
            self._subgroups_strict = subs
        return list(self._subgroups_strict[i])

    def maximal_node_ids(self) -> list[int]:
        return [
            i
            for i in range(self.node_count)
            if i != self.top_id and self._containment()[i] == [self.top_id]
        ]

    def frattini_node_id(self) -> int:
        """Intersection of all maximal subgroups (the whole group if
        there are none, which only happens for the trivial group)."""
        maxima = self.maximal_node_ids()
        if not maxima:
            return self.top_id
        acc = self._fs[maxima[0]]
        for i in maxima[1:]:
            acc = acc & self._fs[i]
        return self._ids[acc]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs (i, j): i < j with nothing strictly between."""
        edges = []
        for i in range(self.node_count):
            ups = sorted(self._containment()[i], key=lambda j: len(self._nodes[j]))
            covers: list[int] = []
            for j in ups:
                if not any(self._fs[k] < self._fs[j] for k in covers):
                    covers.append(j)
                    edges.append((i, j))
        return edges

    # -- derived groups ------------------------------------------------------

    def subgroup_group(self, i: int) -> PermGroup:
        gens = [self.engine.permutation(x) for x in self._gens[i]]
        return PermGroup(
            self.group.degree, gens, name=f"{self.group.name}.node{i}"
        )

    def quotient_group(self, i: int) -> PermGroup:
        """G / N for a normal node N, as the faithful coset action."""
        grp, _ = self.quotient_with_hom(i)
        return grp

    def quotient_with_hom(self, i: int):
        """Quotient group plus the projection, as a function from parent
        element index to the image Permutation."""
        if not self.is_normal(i):
            raise NotNormal(f"node {i} is not normal in {self.group.name}")
        degree, gen_rows, image_of = self.engine.quotient_action(self._nodes[i])
        quotient = PermGroup(
            degree,
            [Permutation(r) for r in gen_rows],
            name=f"{self.group.name}/node{i}",
        )

        def hom(idx: int) -> Permutation:
            return Permutation(image_of(idx))

        return quotient, hom

    # -- export ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.name,
            "degree": self.group.degree,
            "order": self.engine.order,
            "nodes": [list(n) for n in self._nodes],
            "hasse_edges": [list(e) for e in self.hasse_edges()],
            "conjugacy_classes": [list(c) for c in self._classes],
            "moebius": list(self._mu),
        }

    def __repr__(self) -> str:
        return (
            f"SubgroupLattice({self.group.name!r}, nodes={self.node_count}, "
            f"classes={self.class_count})"
        )


def subgroup_lattice(group: PermGroup, budget: Budget | None = None) -> SubgroupLattice:
    return SubgroupLattice(group, budget or DEFAULT_BUDGET)


# ---------------------------------------------------------------------------
# odd-index families (overgroups of a Sylow 2-subgroup)
# ---------------------------------------------------------------------------


@dataclass
class OvergroupFamily:
    """All overgroups of a seed subgroup, closed under conjugacy.

    ``literal_ids`` are the nodes that actually contain the seed; the
    node list additionally carries every conjugate of each of them, so
    poset queries among the literal nodes see every intermediate
    subgroup they could meet."""

    nodes: list[tuple[int, ...]]
    class_of: list[int]
    classes: list[tuple[int, ...]]
    literal_ids: list[int]
    seed: tuple[int, ...]
    stats: dict


def overgroups_of_seed(
    engine: _Engine,
    seed: Sequence[int],
    seed_gens: Sequence[int],
    budget: Budget | None = None,
) -> OvergroupFamily:
    budget = budget or DEFAULT_BUDGET
    if engine.order > budget.max_order:
        raise OrderBoundExceeded(
            f"order {engine.order} exceeds lattice budget {budget.max_order}"
        )
    nodes, _gens, class_of, classes, stats = _enumerate(
        engine, budget, seed=seed, seed_gens=seed_gens
    )
    seed_fs = frozenset(int(x) for x in seed)
    literal = [i for i, n in enumerate(nodes) if seed_fs <= frozenset(n)]
    return OvergroupFamily(nodes, class_of, classes, literal, tuple(sorted(seed)), stats)


# ---------------------------------------------------------------------------
# chief series
# ---------------------------------------------------------------------------

SIMPLE_ORDER_LABELS = {
    60: "A5",
    168: "PSL(2,7)",
    360: "A6",
    504: "PSL(2,8)",
    660: "PSL(2,11)",
    1092: "PSL(2,13)",
    2448: "PSL(2,17)",
    2520: "A7",
    3420: "PSL(2,19)",
    6072: "PSL(2,23)",
    7920: "M11",
    9828: "PSL(2,27)",
    12180: "PSL(2,29)",
}


@dataclass(frozen=True)
class ChiefStep:
    """One step N_i > N_{i+1} of a chief series, with the factor
    identified as (simple group)^multiplicity."""

    upper: int
    lower: int
    label: str
    simple_order: int
    multiplicity: int
    factor_order: int
    abelian: bool


def chief_series_ids(lat: SubgroupLattice) -> list[int]:
    """A maximal chain in the normal-subgroup poset, top to bottom.

    Deterministic: each step takes the largest-order normal subgroup
    strictly inside the current one (ties broken by element tuple).
    Largest order guarantees nothing normal sits strictly between, so
    every factor is a chief factor.
    """
    normals = sorted(
        lat.normal_node_ids(), key=lambda i: (-lat.node_order(i), lat.node_elements(i))
    )
    chain = [lat.top_id]
    while chain[-1] != lat.trivial_id:
        cur = chain[-1]
        nxt = next(
            i
            for i in normals
            if lat.node_order(i) < lat.node_order(cur) and lat.contains(i, cur)
        )
        chain.append(nxt)
    return chain


def all_chief_series_ids(lat: SubgroupLattice, limit: int = 512) -> list[list[int]]:
    """Every maximal chain in the normal-subgroup poset (small groups)."""
    normals = lat.normal_node_ids()
    below: dict[int, list[int]] = {}
    for cur in normals:
        strictly_in = [
            i for i in normals if lat.node_order(i) < lat.node_order(cur) and lat.contains(i, cur)
        ]
        maximal_in = [
            i
            for i in strictly_in
            if not any(
                lat.contains(i, j) and i != j
                for j in strictly_in
            )
        ]
        below[cur] = sorted(maximal_in)
    chains: list[list[int]] = []

    def walk(chain: list[int]):
        if len(chains) >= limit:
            raise BudgetExceeded(f"more than {limit} chief series", {})
        cur = chain[-1]
        if cur == lat.trivial_id:
            chains.append(list(chain))
            return
        for nxt in below[cur]:
            walk(chain + [nxt])

    walk([lat.top_id])
    return chains


def factor_group(lat: SubgroupLattice, upper: int, lower: int) -> PermGroup:
    """The section N_upper / N_lower as an abstract permutation group."""
    if not lat.contains(lower, upper):
        raise ValueError("lower node is not contained in upper node")
    sub = lat.subgroup_group(upper)
    eng = lat.engine
    lower_in_sub = [sub.index_of(eng.permutation(x)) for x in lat.node_elements(lower)]
    degree, gen_rows, _ = sub.engine.quotient_action(lower_in_sub)
    return PermGroup(
        degree,
        [Permutation(r) for r in gen_rows],
        name=f"{lat.group.name}.sec({upper},{lower})",
    )


def identify_characteristically_simple(group: PermGroup) -> tuple[str, int, int]:
    """Recognize S^r for a simple group S: returns (label, |S|, r).

    Abelian case: checks the group is elementary abelian p^r.
    Nonabelian case: the smallest normal closure of an element is one
    simple factor; its order determines S up to the scale handled here
    (labels come from an order table, which is enough for labeling).
    """
    n = group.order
    if n == 1:
        raise ValueError("trivial group is not characteristically simple")
    eng = group.engine
    if group.is_abelian:
        fac = prime_factors(n)
        if len(fac) != 1:
            raise ValueError(f"abelian factor of order {n} is not a p-group")
        p = fac[0]
        orders = eng.element_orders()
        if any(int(o) not in (1, p) for o in orders):
            raise ValueError(f"abelian factor of order {n} is not elementary")
        r = 0
        m = n
        while m > 1:
            m //= p
            r += 1
        return f"C{p}", p, r
    best = n
    for i in range(eng.order):
        if i == eng.id_idx:
            continue
        size = len(eng.normal_closure([i]))
        if size < best:
            best = size
    r, m = 0, 1
    while m < n:
        m *= best
        r += 1
    if m != n:
        raise ValueError(f"order {n} is not a power of minimal normal order {best}")
    label = SIMPLE_ORDER_LABELS.get(best, f"simple<{best}>")
    return label, best, r


def chief_steps(lat: SubgroupLattice, chain: list[int] | None = None) -> list[ChiefStep]:
    chain = chain or chief_series_ids(lat)
    steps = []
    for upper, lower in zip(chain, chain[1:]):
        fgrp = factor_group(lat, upper, lower)
        label, simple_order, mult = identify_characteristically_simple(fgrp)
        steps.append(
            ChiefStep(
                upper=upper,
                lower=lower,
                label=label,
                simple_order=simple_order,
                multiplicity=mult,
                factor_order=fgrp.order,
                abelian=fgrp.is_abelian,
            )
        )
    return steps


def centralizer_quotient(lat: SubgroupLattice, upper: int, lower: int) -> PermGroup:
    """G / C_G(N_upper / N_lower): the monolithic primitive group
    attached to a chief factor.  The centralizer consists of the
    elements whose commutator with every generator of N_upper lands in
    N_lower."""
    if not (lat.is_normal(upper) and lat.is_normal(lower)):
        raise NotNormal("chief factor bounds must be normal nodes")
    eng = lat.engine
    lower_set = frozenset(lat.node_elements(lower))
    mask = np.ones(eng.order, dtype=bool)
    idx = eng.index
    inv_rows = eng.rows[eng.inv]
    for ngen in lat.node_generators(upper):
        n_row = eng.rows[ngen]
        inv_n = eng.rows[eng.inv[ngen]]
        # rows of [n, x] = n^-1 * (x^-1 n x), batched over all x
        c1 = n_row[inv_rows]                                # x^-1 then n
        c2 = np.take_along_axis(eng.rows, c1.astype(np.intp), axis=1)  # then x
        rows = c2[:, inv_n]                                 # n^-1 first
        ok = np.fromiter(
            (idx[r.tobytes()] in lower_set for r in np.ascontiguousarray(rows)),
            dtype=bool,
            count=eng.order,
        )
        mask &= ok
    cent = [int(x) for x in np.flatnonzero(mask)]
    degree, gen_rows, _ = eng.quotient_action(cent)
    return PermGroup(
        degree,
        [Permutation(r) for r in gen_rows],
        name=f"{lat.group.name}.L({upper},{lower})",
    )
