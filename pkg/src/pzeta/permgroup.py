"""Finite permutation groups on points ``{0, ..., degree-1}``.

The public surface is :class:`Permutation`, :class:`PermGroup`,
:class:`AlmostSimpleSpec` and the builtin constructors.  Internally a
:class:`PermGroup` materializes (lazily, and only below a hard order
bound) an indexed element table: a ``(order, degree)`` array of image
rows sorted lexicographically, plus a bytes -> index dictionary.  All
heavy group operations (closure, conjugation, coset actions) are then
batched gathers on that table, which is what makes subgroup-lattice
work for groups with a few thousand elements practical in Python.

Composition convention: ``(p * q)(x) == q(p(x))``, i.e. products act
left to right (apply p first).
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameter, NotNormal, OrderBoundExceeded
from .numtheory import is_prime, is_prime_power, prime_factors

DEFAULT_MAX_GROUP_ORDER = 1_000_000


class Permutation:
    """An immutable bijection of ``{0, ..., degree-1}``."""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs}")
        self._images = imgs

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [int(x) for x in cyc]
            for x in pts:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside degree {degree}")
                if x in seen:
                    raise ValueError(f"point {x} repeated across cycles")
                seen.add(x)
            for i, x in enumerate(pts):
                images[x] = pts[(i + 1) % len(pts)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse disjoint-cycle notation over 0-based points, e.g.
        ``(0 1 2 3 4)(5 6)``.  ``()`` is the identity."""
        stripped = re.sub(r"\s+", " ", text).strip()
        if not re.fullmatch(r"(\s*\(([^()]*)\)\s*)*", stripped):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", stripped):
            pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
            if len(pts) >= 2:
                cycles.append(pts)
        return cls.from_cycles(degree, cycles)

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other._images[y] for y in self._images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self._images):
            inv[y] = x
        return Permutation(inv)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        out = []
        seen: set[int] = set()
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self._images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self._images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        o = 1
        for cyc in self.cycles():
            o = o * len(cyc) // gcd(o, len(cyc))
        return o

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation.parse({self.cycle_string()!r}, {self.degree})"


def _dtype_for(degree: int):
    if degree <= 0xFF:
        return np.uint8
    if degree <= 0xFFFF:
        return np.uint16
    return np.uint32


class _Engine:
    """Indexed element table of a finite permutation group.

    Elements are rows of ``self.rows`` (lexicographically sorted, so
    element indexing is deterministic across runs); ``self.index`` maps
    ``row.tobytes()`` back to the index.
    """

    def __init__(self, degree: int, gen_images: Sequence[Sequence[int]], max_order: int):
        self.degree = degree
        dt = _dtype_for(degree)
        ident = np.arange(degree, dtype=dt)
        rows = [ident]
        index = {ident.tobytes(): 0}
        gens = [np.asarray(g, dtype=dt) for g in gen_images]
        frontier = [0]
        while frontier:
            batch = np.stack([rows[i] for i in frontier])
            new: list[int] = []
            for g in gens:
                prod = g[batch]
                for row in prod:
                    key = row.tobytes()
                    if key not in index:
                        if len(rows) >= max_order:
                            raise OrderBoundExceeded(
                                f"group order exceeds bound {max_order}"
                            )
                        index[key] = len(rows)
                        rows.append(row.copy())
                        new.append(len(rows) - 1)
            frontier = new
        table = np.stack(rows)
        order = np.lexsort(table.T[::-1])
        self.rows = np.ascontiguousarray(table[order])
        self.index = {r.tobytes(): i for i, r in enumerate(self.rows)}
        self.order = len(self.rows)
        self.id_idx = self.index[ident.tobytes()]
        inv_rows = np.argsort(self.rows, axis=1).astype(dt)
        self.inv = np.fromiter(
            (self.index[r.tobytes()] for r in np.ascontiguousarray(inv_rows)),
            dtype=np.int64,
            count=self.order,
        )
        self.gen_indices = tuple(
            dict.fromkeys(
                self.index[np.asarray(g, dtype=dt).tobytes()]
                for g in gen_images
                if self.index[np.asarray(g, dtype=dt).tobytes()] != self.id_idx
            )
        )
        self._orders: np.ndarray | None = None
        self._pp_reps: tuple[int, ...] | None = None

    # -- single element ops -------------------------------------------

    def mul(self, i: int, j: int) -> int:
        """Index of "apply i, then j"."""
        row = self.rows[j][self.rows[i]]
        return self.index[row.tobytes()]

    def conj_elem(self, x: int, g: int) -> int:
        """Index of g^-1 * x * g."""
        row = self.rows[g][self.rows[x][self.rows[self.inv[g]]]]
        return self.index[row.tobytes()]

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))

    def permutation(self, i: int) -> Permutation:
        return Permutation(self.rows[i].tolist())

    # -- batched ops ----------------------------------------------------

    def _indices_of(self, prod: np.ndarray) -> list[int]:
        index = self.index
        return [index[row.tobytes()] for row in np.ascontiguousarray(prod)]

    def mul_batch(self, ids: np.ndarray, g: int) -> list[int]:
        return self._indices_of(self.rows[g][self.rows[ids]])

    def conj_set(self, ids: np.ndarray, g: int) -> list[int]:
        inner = self.rows[ids][:, self.rows[self.inv[g]]]
        return self._indices_of(self.rows[g][inner])

    def closure(self, gen_idx: Iterable[int], bail_half: bool = False):
        """Sorted element indices of the subgroup generated by gen_idx.

        With ``bail_half=True`` returns None as soon as the subgroup is
        known to be the whole group (more than half the elements seen),
        which is the common case during lattice extension.
        """
        gens = [int(g) for g in dict.fromkeys(gen_idx) if g != self.id_idx]
        member = np.zeros(self.order, dtype=bool)
        member[self.id_idx] = True
        if not gens:
            return np.asarray([self.id_idx], dtype=np.int64)
        count = 1
        half = self.order // 2
        frontier = [self.id_idx]
        while frontier:
            farr = np.asarray(frontier, dtype=np.int64)
            frows = self.rows[farr]
            new: list[int] = []
            for g in gens:
                for ix in self._indices_of(self.rows[g][frows]):
                    if not member[ix]:
                        member[ix] = True
                        count += 1
                        new.append(ix)
                if bail_half and count > half:
                    return None
            frontier = new
        return np.flatnonzero(member)

    # -- element statistics ---------------------------------------------

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            out = np.empty(self.order, dtype=np.int64)
            for i in range(self.order):
                row = self.rows[i]
                o = 1
                seen = np.zeros(self.degree, dtype=bool)
                for start in range(self.degree):
                    if seen[start]:
                        continue
                    ln = 1
                    seen[start] = True
                    x = int(row[start])
                    while x != start:
                        seen[x] = True
                        x = int(row[x])
                        ln += 1
                    o = o * ln // gcd(o, ln)
                out[i] = o
            self._orders = out
        return self._orders

    def cyclic_subgroup(self, i: int) -> tuple[int, ...]:
        cur = i
        out = [self.id_idx]
        while cur != self.id_idx:
            out.append(cur)
            cur = self.mul(cur, i)
        return tuple(sorted(out))

    def pp_cyclic_generator_reps(self) -> tuple[int, ...]:
        """One generator per distinct cyclic subgroup of prime-power
        order, in a deterministic order.  These are exactly the
        extension candidates needed to reach every subgroup: any finite
        group is generated by a maximal subgroup together with one
        element of prime-power order."""
        if self._pp_reps is None:
            orders = self.element_orders()
            reps: list[int] = []
            claimed: set[int] = set()
            for i in range(self.order):
                if i == self.id_idx or i in claimed:
                    continue
                o = int(orders[i])
                if not is_prime_power(o):
                    continue
                cyc = self.cyclic_subgroup(i)
                reps.append(i)
                for x in cyc:
                    if int(orders[x]) == o:
                        claimed.add(x)
            self._pp_reps = tuple(reps)
        return self._pp_reps

    # -- structural helpers ----------------------------------------------

    def is_subgroup_normal(self, ids: Sequence[int]) -> bool:
        sset = frozenset(int(x) for x in ids)
        arr = np.asarray(sorted(sset), dtype=np.int64)
        return all(
            frozenset(self.conj_set(arr, g)) == sset for g in self.gen_indices
        )

    def normal_closure(self, seeds: Iterable[int]) -> np.ndarray:
        gens = [int(x) for x in dict.fromkeys(seeds) if x != self.id_idx]
        if not gens:
            return np.asarray([self.id_idx], dtype=np.int64)
        closed = self.closure(gens)
        member = set(int(x) for x in closed)
        while True:
            extra = []
            for g in gens:
                for a in self.gen_indices:
                    y = self.conj_elem(g, a)
                    if y not in member:
                        extra.append(y)
            if not extra:
                return closed
            gens.extend(dict.fromkeys(extra))
            closed = self.closure(gens)
            member = set(int(x) for x in closed)

    def derived_subgroup(self, ids: Sequence[int], gens: Sequence[int]) -> np.ndarray:
        """Derived subgroup of the subgroup with the given elements and
        generating set: normal closure (inside that subgroup) of the
        generator commutators."""
        seeds = [self.commutator(a, b) for a in gens for b in gens if a != b]
        seeds = [s for s in dict.fromkeys(seeds) if s != self.id_idx]
        if not seeds:
            return np.asarray([self.id_idx], dtype=np.int64)
        member = set(int(x) for x in self.closure(seeds))
        work = list(seeds)
        while True:
            extra = []
            for g in work:
                for a in gens:
                    y = self.conj_elem(g, a)
                    if y not in member:
                        extra.append(y)
            if not extra:
                return np.asarray(sorted(member), dtype=np.int64)
            work = list(dict.fromkeys(work + extra))
            member = set(int(x) for x in self.closure(work))

    def sylow2(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """A Sylow 2-subgroup: (sorted element indices, generators).

        Grown by repeatedly adjoining a 2-element that normalizes the
        current 2-subgroup; such an element exists below full Sylow
        order because normalizers grow in 2-groups.
        """
        target = 1
        n = self.order
        while n % 2 == 0:
            target *= 2
            n //= 2
        if target == 1:
            return (self.id_idx,), ()
        orders = self.element_orders()
        two_elems = [
            i
            for i in range(self.order)
            if i != self.id_idx and (int(orders[i]) & (int(orders[i]) - 1)) == 0
        ]
        best = max(int(orders[i]) for i in two_elems)
        seed = next(i for i in two_elems if int(orders[i]) == best)
        gens = [seed]
        current = set(int(x) for x in self.closure(gens))
        while len(current) < target:
            arr = np.asarray(sorted(current), dtype=np.int64)
            for g in two_elems:
                if g in current:
                    continue
                if frozenset(self.conj_set(arr, g)) == frozenset(current):
                    gens.append(g)
                    grown = self.closure(gens)
                    current = set(int(x) for x in grown)
                    break
            else:
                raise RuntimeError("Sylow 2-subgroup growth stalled")
        assert len(current) == target
        return tuple(sorted(current)), tuple(gens)

    def quotient_action(self, normal_ids: Sequence[int]):
        """Coset action of the group on the right cosets of a normal
        subgroup.  Returns ``(degree, gen_rows, image_of)`` where
        ``image_of(i)`` is the induced permutation row of element i."""
        if not self.is_subgroup_normal(normal_ids):
            raise NotNormal("quotient by a non-normal subgroup")
        narr = np.asarray(sorted(int(x) for x in normal_ids), dtype=np.int64)
        coset = np.full(self.order, -1, dtype=np.int64)
        reps: list[int] = []
        for x in range(self.order):
            if coset[x] >= 0:
                continue
            cid = len(reps)
            reps.append(x)
            for ix in self.mul_batch(narr, x):
                coset[ix] = cid
        degree = len(reps)
        reps_arr = np.asarray(reps, dtype=np.int64)

        def image_of(e: int) -> list[int]:
            return [int(coset[i]) for i in self.mul_batch(reps_arr, e)]

        gen_rows = [image_of(g) for g in self.gen_indices]
        if not gen_rows:
            gen_rows = []
        return degree, gen_rows, image_of


class PermGroup:
    """A finite permutation group given by generators.

    The full element set is materialized lazily, and only if the order
    stays below ``max_order`` (default one million elements).
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation | Sequence[int]] = (),
        name: str | None = None,
        max_order: int = DEFAULT_MAX_GROUP_ORDER,
    ):
        if not isinstance(degree, int) or degree < 1:
            raise ValueError("degree must be an int >= 1")
        gens = []
        for g in generators:
            perm = g if isinstance(g, Permutation) else Permutation(g)
            if perm.degree != degree:
                raise ValueError(
                    f"generator degree {perm.degree} does not match group degree {degree}"
                )
            gens.append(perm)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name or f"G<{degree}>"
        self.max_order = max_order
        self._eng: _Engine | None = None
        self._lattice = None

    # -- element access --------------------------------------------------

    @property
    def engine(self) -> _Engine:
        if self._eng is None:
            self._eng = _Engine(
                self.degree, [g.images for g in self.generators], self.max_order
            )
        return self._eng

    @property
    def order(self) -> int:
        return self.engine.order

    def elements(self) -> list[Permutation]:
        eng = self.engine
        return [eng.permutation(i) for i in range(eng.order)]

    def permutation(self, index: int) -> Permutation:
        return self.engine.permutation(index)

    def index_of(self, perm: Permutation) -> int:
        eng = self.engine
        key = np.asarray(perm.images, dtype=eng.rows.dtype).tobytes()
        if key not in eng.index:
            raise KeyError(f"{perm!r} is not an element of {self.name}")
        return eng.index[key]

    def __contains__(self, perm: Permutation) -> bool:
        if not isinstance(perm, Permutation) or perm.degree != self.degree:
            return False
        eng = self.engine
        return np.asarray(perm.images, dtype=eng.rows.dtype).tobytes() in eng.index

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # -- structure -----------------------------------------------------

    @property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])

    @property
    def is_trivial(self) -> bool:
        return all(g.is_identity for g in self.generators)

    def subgroup_lattice(self, budget=None):
        """Complete subgroup lattice (see :mod:`pzeta.lattice`).

        The first successful computation is cached; the lattice itself
        does not depend on the budget used to obtain it.
        """
        if self._lattice is None:
            from .lattice import subgroup_lattice

            self._lattice = subgroup_lattice(self, budget)
        return self._lattice

    def __repr__(self) -> str:
        return f"PermGroup({self.name!r}, degree={self.degree}, gens={len(self.generators)})"


class AlmostSimpleSpec:
    """A group X together with a designated socle S: S normal in X,
    nonabelian and perfect, with trivial centralizer in X.

    For the builtin projective constructions S is the PSL(2,q) subgroup
    of X; user-supplied pairs are validated on construction.
    """

    def __init__(self, group: PermGroup, socle: PermGroup, name: str | None = None):
        self.group = group
        self.socle = socle
        self.name = name or group.name
        eng = group.engine
        try:
            socle_gen_ids = [group.index_of(g) for g in socle.generators]
        except KeyError as exc:
            raise InvalidParameter(f"socle generators not inside {group.name}") from exc
        closed = eng.closure(socle_gen_ids)
        self._socle_ids = frozenset(int(x) for x in closed)
        if len(self._socle_ids) != socle.order:
            raise InvalidParameter("socle closure does not match socle order")
        if not eng.is_subgroup_normal(sorted(self._socle_ids)):
            raise InvalidParameter("socle is not normal in the group")
        if socle.is_abelian:
            raise InvalidParameter("socle must be nonabelian")
        derived = eng.derived_subgroup(sorted(self._socle_ids), socle_gen_ids)
        if frozenset(int(x) for x in derived) != self._socle_ids:
            raise InvalidParameter("socle is not perfect")
        if self._centralizer_size(eng, socle_gen_ids) != 1:
            raise InvalidParameter("socle has nontrivial centralizer")

    @staticmethod
    def _centralizer_size(eng: _Engine, socle_gen_ids: Sequence[int]) -> int:
        mask = np.ones(eng.order, dtype=bool)
        for s in socle_gen_ids:
            srow = eng.rows[s]
            left = srow[eng.rows]          # x then s
            right = eng.rows[:, srow]      # s then x
            mask &= (left == right).all(axis=1)
        return int(mask.sum())

    @property
    def socle_indices(self) -> frozenset[int]:
        """Socle element indices inside the group's element table."""
        return self._socle_ids

    @property
    def socle_is_whole_group(self) -> bool:
        return len(self._socle_ids) == self.group.order

    def __repr__(self) -> str:
        return f"AlmostSimpleSpec({self.name!r}, socle_order={self.socle.order})"


# ---------------------------------------------------------------------------
# builtin constructors
# ---------------------------------------------------------------------------


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    if n == 1:
        return PermGroup(1, [], name="C1")
    images = [(i + 1) % n for i in range(n)]
    return PermGroup(n, [Permutation(images)], name=f"C{n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group degree must be >= 1")
    if n == 1:
        return PermGroup(1, [], name="S1")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(max(n, 1), [], name=f"A{n}")
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        long_cycle = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
        gens.append(Permutation.from_cycles(n, [long_cycle]))
    return PermGroup(n, gens, name=f"A{n}")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order 2n (n >= 3), acting on n points."""
    if order < 6 or order % 2 != 0:
        raise ValueError("dihedral constructor takes an even order >= 6")
    n = order // 2
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(n - i) % n for i in range(n)])
    return PermGroup(n, [rot, ref], name=f"D{order}")


def klein_four() -> PermGroup:
    a = Permutation.from_cycles(4, [(0, 1)])
    b = Permutation.from_cycles(4, [(2, 3)])
    return PermGroup(4, [a, b], name="C2xC2")


def quaternion8() -> PermGroup:
    # left regular action on [1, -1, i, -i, j, -j, k, -k]
    pi = Permutation([2, 3, 1, 0, 6, 7, 5, 4])
    pj = Permutation([4, 5, 7, 6, 1, 0, 2, 3])
    return PermGroup(8, [pi, pj], name="Q8")


def direct_product(a: PermGroup, b: PermGroup, name: str | None = None) -> PermGroup:
    degree = a.degree + b.degree
    gens: list[Permutation] = []
    for g in a.generators:
        gens.append(Permutation(list(g.images) + list(range(a.degree, degree))))
    for g in b.generators:
        gens.append(Permutation(list(range(a.degree)) + [a.degree + y for y in g.images]))
    return PermGroup(degree, gens, name=name or f"{a.name}x{b.name}")


def _primitive_root(q: int) -> int:
    fac = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in fac):
            return g
    raise RuntimeError(f"no primitive root mod {q}")


def _moebius_transform_perm(q: int, a: int, b: int, c: int, d: int) -> Permutation:
    """Permutation of the projective line (points 0..q-1 and q=infinity)
    induced by x -> (a x + b) / (c x + d) over the q-element field."""
    inf = q
    images = []
    for x in range(q):
        den = (c * x + d) % q
        if den == 0:
            images.append(inf)
        else:
            images.append(((a * x + b) * pow(den, -1, q)) % q)
    images.append(inf if c % q == 0 else (a * pow(c, -1, q)) % q)
    return Permutation(images)


def make_psl2(q: int, variant: str = "psl") -> AlmostSimpleSpec:
    """PSL(2,q) or PGL(2,q) acting on the q+1 points of the projective
    line, packaged with its PSL socle.

    PSL is generated by the two elementary transvections together with
    a diagonal square; PGL adds a diagonal of non-square determinant.
    Only odd primes q >= 5 are supported.
    """
    if not isinstance(q, int) or q < 5 or q % 2 == 0 or not is_prime(q):
        raise InvalidParameter(f"q must be an odd prime >= 5, got {q!r}")
    v = variant.lower()
    if v not in ("psl", "pgl"):
        raise InvalidParameter(f"variant must be 'psl' or 'pgl', got {variant!r}")
    g = _primitive_root(q)
    transvection_upper = _moebius_transform_perm(q, 1, 1, 0, 1)
    transvection_lower = _moebius_transform_perm(q, 1, 0, 1, 1)
    diag_square = _moebius_transform_perm(q, g, 0, 0, pow(g, -1, q))
    psl_gens = [transvection_upper, transvection_lower, diag_square]
    socle = PermGroup(q + 1, psl_gens, name=f"PSL(2,{q})")
    expected_psl = q * (q * q - 1) // 2
    if socle.order != expected_psl:
        raise RuntimeError(f"PSL(2,{q}) closure has order {socle.order}, want {expected_psl}")
    if v == "psl":
        return AlmostSimpleSpec(socle, socle, name=f"PSL(2,{q})")
    diag_nonsquare = _moebius_transform_perm(q, g, 0, 0, 1)
    group = PermGroup(q + 1, psl_gens + [diag_nonsquare], name=f"PGL(2,{q})")
    if group.order != 2 * expected_psl:
        raise RuntimeError(f"PGL(2,{q}) closure has order {group.order}, want {2 * expected_psl}")
    return AlmostSimpleSpec(group, socle, name=f"PGL(2,{q})")


_PSL_RE = re.compile(r"^(PSL|PGL)\(2,\s*(\d+)\)$|^(PSL|PGL)2[_-](\d+)$", re.IGNORECASE)


def builtin_group(name: str, p: int | None = None) -> PermGroup:
    """Resolve a builtin group name: ``S4``, ``A5``, ``C7``, ``D8``
    (dihedral, by group order), ``Q8``, ``C2xC2``, ``PSL(2,7)`` /
    ``PSL2_7``, direct products like ``A5xC2``, and ``Cp`` with an
    explicit prime parameter."""
    s = name.strip()
    if s in ("Cp", "Cn"):
        if p is None:
            raise ValueError(f"builtin {s} needs the order parameter p")
        return cyclic(p)
    m = _PSL_RE.match(s)
    if m:
        kind = (m.group(1) or m.group(3)).lower()
        q = int(m.group(2) or m.group(4))
        return make_psl2(q, kind).group
    if "x" in s:
        parts = s.split("x")
        grp = builtin_group(parts[0], p)
        for part in parts[1:]:
            grp = direct_product(grp, builtin_group(part, p))
        return grp
    m = re.fullmatch(r"S(\d+)", s)
    if m:
        return symmetric(int(m.group(1)))
    m = re.fullmatch(r"A(\d+)", s)
    if m:
        return alternating(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", s)
    if m:
        return cyclic(int(m.group(1)))
    if s == "Q8":
        return quaternion8()
    m = re.fullmatch(r"D(\d+)", s)
    if m:
        order = int(m.group(1))
        return klein_four() if order == 4 else dihedral(order)
    raise ValueError(f"unknown builtin group {name!r}")


# ---------------------------------------------------------------------------
# group file format
# ---------------------------------------------------------------------------


def parse_group_file(text: str) -> PermGroup:
    """Parse the text group format: a ``degree <d>`` line followed by
    one generator per line in disjoint-cycle notation over 0-based
    points.  Lines starting with ``#`` are comments."""
    degree = None
    gens: list[Permutation] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise ValueError(f"line {ln}: expected 'degree <d>', got {line!r}")
            degree = int(m.group(1))
            if degree < 1:
                raise ValueError(f"line {ln}: degree must be >= 1")
            continue
        gens.append(Permutation.parse(line, degree))
    if degree is None:
        raise ValueError("group file has no 'degree <d>' line")
    return PermGroup(degree, gens, name="file-group")


def format_group_file(group: PermGroup, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree {group.degree}")
    for g in group.generators:
        lines.append(g.cycle_string())
    return "\n".join(lines) + "\n"
