"""Probabilistic zeta functions of finite groups.

For a finite group G the coefficients ``a_n = sum mu_G(H)`` over the
subgroups of index n assemble into the Dirichlet polynomial
``P_G(s) = sum a_n / n^s``.  Evaluating at a positive integer k gives
the exact probability that k uniform random elements generate G, which
this module exploits both as an oracle (via an independent counting
argument) and in tests.

On top of that sit the quantities specific to almost simple groups X
with socle S: the supplement zeta function ``P_{X,S}`` summing only
over subgroups H with ``H S = X``, the set of odd supplement indices
whose supplements are all maximal, and the table of minima w(X) for
X = PSL(2,q) or PGL(2,q) compared against the classical closed form
derived from Dickson's subgroup list.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .dirichlet import DirichletPolynomial, divide_exact, power_shift, prime_projection
from .errors import BudgetExceeded, InvalidParameter, OrderBoundExceeded
from .lattice import (
    DEFAULT_BUDGET,
    Budget,
    SubgroupLattice,
    all_chief_series_ids,
    chief_series_ids,
    chief_steps,
    overgroups_of_seed,
)
from .numtheory import prime_factors
from .permgroup import AlmostSimpleSpec, PermGroup, make_psl2


# ---------------------------------------------------------------------------
# P_G(s)
# ---------------------------------------------------------------------------


def zeta_from_lattice(lat: SubgroupLattice) -> DirichletPolynomial:
    """``sum_H mu(H) / |G:H|^s`` aggregated over all subgroups."""
    order = lat.engine.order
    acc: dict[int, int] = {}
    for i in range(lat.node_count):
        mu = lat.moebius(i)
        if mu:
            n = order // lat.node_order(i)
            acc[n] = acc.get(n, 0) + mu
    return DirichletPolynomial(acc)


def probabilistic_zeta(group: PermGroup, budget: Budget | None = None) -> DirichletPolynomial:
    return zeta_from_lattice(group.subgroup_lattice(budget))


@dataclass
class ZetaReport:
    group: str
    order: int
    degree: int
    zeta: DirichletPolynomial
    subgroup_count: int
    class_count: int
    elapsed_s: float

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "degree": self.degree,
            "zeta": self.zeta.to_json_dict(),
            "subgroups": self.subgroup_count,
            "conjugacy_classes": self.class_count,
            "elapsed_s": self.elapsed_s,
        }


def zeta_report(group: PermGroup, budget: Budget | None = None) -> ZetaReport:
    t0 = time.monotonic()
    lat = group.subgroup_lattice(budget)
    poly = zeta_from_lattice(lat)
    assert poly.coefficient(1) == 1, "zeta polynomial must have constant term 1"
    return ZetaReport(
        group=group.name,
        order=group.order,
        degree=group.degree,
        zeta=poly,
        subgroup_count=lat.node_count,
        class_count=lat.class_count,
        elapsed_s=round(time.monotonic() - t0, 4),
    )


# ---------------------------------------------------------------------------
# generation probability oracle (independent of the Moebius function)
# ---------------------------------------------------------------------------


def generation_counts(lat: SubgroupLattice, k: int) -> list[int]:
    """For every node H, the number of k-tuples generating exactly H.

    Bottom-up inclusion-exclusion over the lattice only: a k-tuple
    inside H generates exactly one subgroup of H, so
    ``t(H) = |H|^k - sum_{K < H} t(K)``.  Does not look at mu.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be an int >= 1")
    order_asc = sorted(range(lat.node_count), key=lat.node_order)
    t = [0] * lat.node_count
    for i in order_asc:
        t[i] = lat.node_order(i) ** k - sum(t[j] for j in lat.strict_subgroups(i))
    return t


def generating_probability(
    group: PermGroup, k: int, budget: Budget | None = None
) -> Fraction:
    """Exact probability that k independent uniform elements generate
    the group; equals the zeta polynomial evaluated at s = k."""
    lat = group.subgroup_lattice(budget)
    counts = generation_counts(lat, k)
    return Fraction(counts[lat.top_id], group.order**k)


def generating_probability_bruteforce(group: PermGroup, k: int) -> Fraction:
    """Direct tuple enumeration; only for very small groups."""
    eng = group.engine
    if eng.order**k > 300_000:
        raise ValueError("brute-force enumeration only supported for tiny groups")
    hits = 0
    for tup in iter_product(range(eng.order), repeat=k):
        closed = eng.closure(tup)
        if closed is not None and len(closed) == eng.order:
            hits += 1
    return Fraction(hits, eng.order**k)


# ---------------------------------------------------------------------------
# P_{X,S}(s): supplements of the socle
# ---------------------------------------------------------------------------


def supplement_zeta(spec: AlmostSimpleSpec, budget: Budget | None = None) -> DirichletPolynomial:
    """``sum mu_X(H) / |X:H|^s`` over the subgroups H with H*socle = X."""
    lat = spec.group.subgroup_lattice(budget)
    order = lat.engine.order
    socle = spec.socle_indices
    s_order = len(socle)
    acc: dict[int, int] = {}
    for members in lat.conjugacy_classes:
        rep = members[0]
        mu = lat.moebius(rep)
        if not mu:
            continue
        h = frozenset(lat.node_elements(rep))
        if len(h) * s_order != order * len(h & socle):
            continue  # not a supplement: |H S| < |X|
        n = order // len(h)
        acc[n] = acc.get(n, 0) + mu * len(members)
    return DirichletPolynomial(acc)


# ---------------------------------------------------------------------------
# odd supplement indices and w(X)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OddIndexDetail:
    index: int
    supplement_classes: int  # conjugacy classes of supplements at this index
    all_maximal: bool

    def to_json_dict(self) -> dict:
        return {
            "m": self.index,
            "supplement_classes": self.supplement_classes,
            "all_maximal": self.all_maximal,
        }


@dataclass
class OddSupplementReport:
    group: str
    socle_order: int
    indices: tuple[int, ...]
    minimum: int | None
    details: tuple[OddIndexDetail, ...]
    include_even: bool

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "socle_order": self.socle_order,
            "indices": list(self.indices),
            "w": self.minimum,
            "details": [d.to_json_dict() for d in self.details],
            "include_even": self.include_even,
        }


def odd_supplement_indices(
    spec: AlmostSimpleSpec,
    budget: Budget | None = None,
    include_even: bool = False,
) -> OddSupplementReport:
    """Indices m such that X has a supplement of the socle of index m
    and every such supplement is maximal; ``minimum`` is w(X).

    Default mode restricts to odd m.  A subgroup has odd index exactly
    when it contains a Sylow 2-subgroup, and all three defining
    conditions are conjugation-invariant, so it suffices to inspect the
    overgroups of one fixed Sylow 2-subgroup; that keeps groups with a
    few thousand elements cheap.  ``include_even=True`` is a non-table
    extension that walks the full lattice instead.
    """
    budget = budget or DEFAULT_BUDGET
    if include_even:
        return _supplement_indices_full(spec, budget)
    eng = spec.group.engine
    if eng.order > budget.max_order:
        raise OrderBoundExceeded(
            f"order {eng.order} exceeds lattice budget {budget.max_order}"
        )
    seed, seed_gens = eng.sylow2()
    fam = overgroups_of_seed(eng, seed, seed_gens, budget)
    order = eng.order
    socle = spec.socle_indices
    s_order = len(socle)
    literal = fam.literal_ids
    fs = {i: frozenset(fam.nodes[i]) for i in literal}
    sizes = {i: len(fam.nodes[i]) for i in literal}

    def is_maximal(i: int) -> bool:
        if sizes[i] == order:
            return False
        return not any(
            sizes[j] > sizes[i]
            and sizes[j] < order
            and sizes[j] % sizes[i] == 0
            and fs[i] < fs[j]
            for j in literal
        )

    by_index: dict[int, list[int]] = {}
    for i in literal:
        if sizes[i] * s_order == order * len(fs[i] & socle):
            by_index.setdefault(order // sizes[i], []).append(i)
    details = []
    omega = []
    for m in sorted(by_index):
        assert m % 2 == 1, "overgroups of a Sylow 2-subgroup have odd index"
        ok = all(is_maximal(i) for i in by_index[m])
        classes = len({fam.class_of[i] for i in by_index[m]})
        details.append(OddIndexDetail(m, classes, ok))
        if ok:
            omega.append(m)
    return OddSupplementReport(
        group=spec.name,
        socle_order=s_order,
        indices=tuple(omega),
        minimum=omega[0] if omega else None,
        details=tuple(details),
        include_even=False,
    )


def _supplement_indices_full(spec: AlmostSimpleSpec, budget: Budget) -> OddSupplementReport:
    lat = spec.group.subgroup_lattice(budget)
    order = lat.engine.order
    socle = spec.socle_indices
    s_order = len(socle)
    maximal = set(lat.maximal_node_ids())
    by_index: dict[int, list[int]] = {}
    for i in range(lat.node_count):
        h = frozenset(lat.node_elements(i))
        if len(h) * s_order == order * len(h & socle):
            by_index.setdefault(lat.node_index(i), []).append(i)
    details = []
    omega = []
    for m in sorted(by_index):
        ok = all(i in maximal for i in by_index[m])
        classes = len({lat.class_of(i) for i in by_index[m]})
        details.append(OddIndexDetail(m, classes, ok))
        if ok:
            omega.append(m)
    return OddSupplementReport(
        group=spec.name,
        socle_order=s_order,
        indices=tuple(omega),
        minimum=omega[0] if omega else None,
        details=tuple(details),
        include_even=True,
    )


# ---------------------------------------------------------------------------
# the w(X) table for X = PSL(2,q), PGL(2,q)
# ---------------------------------------------------------------------------


def predicted_minimal_odd_index(q: int, variant: str = "psl") -> int:
    """Closed-form w(X) from the classical subgroup classification:
    q(q-1)/2 or q(q+1)/2 according to q mod 4, with the handful of
    small exceptional q treated separately."""
    v = variant.lower()
    if v not in ("psl", "pgl"):
        raise InvalidParameter(f"variant must be 'psl' or 'pgl', got {variant!r}")
    exceptional = {
        (5, "psl"): 5,
        (5, "pgl"): 5,
        (7, "psl"): 7,
        (7, "pgl"): 21,
        (11, "psl"): 11,
        (11, "pgl"): 55,
        (19, "psl"): 57,
        (19, "pgl"): 171,
        (29, "psl"): 203,
        (29, "pgl"): 435,
    }
    if (q, v) in exceptional:
        return exceptional[(q, v)]
    return q * (q - 1) // 2 if q % 4 == 3 else q * (q + 1) // 2


@dataclass(frozen=True)
class WTableRow:
    q: int
    variant: str
    computed: int | None
    predicted: int
    status: str  # MATCH | MISMATCH | SKIPPED
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "variant": self.variant,
            "computed": self.computed,
            "predicted": self.predicted,
            "status": self.status,
            "note": self.note,
        }


def minimal_odd_index_table(
    q_values,
    variants=("psl", "pgl"),
    budget: Budget | None = None,
) -> list[WTableRow]:
    """Brute-force w(X) against the closed form, one row per (q, variant).

    Rows whose group does not fit the budget come back SKIPPED rather
    than failing the whole table.
    """
    budget = budget or DEFAULT_BUDGET
    rows = []
    for q in q_values:
        for variant in variants:
            v = variant.lower()
            predicted = predicted_minimal_odd_index(q, v)
            order = q * (q * q - 1) // (2 if v == "psl" else 1)
            if order > budget.max_order:
                rows.append(
                    WTableRow(q, v, None, predicted, "SKIPPED",
                              f"order {order} exceeds budget {budget.max_order}")
                )
                continue
            try:
                spec = make_psl2(q, v)
                rep = odd_supplement_indices(spec, budget)
            except (BudgetExceeded, OrderBoundExceeded) as exc:
                rows.append(WTableRow(q, v, None, predicted, "SKIPPED", str(exc)))
                continue
            status = "MATCH" if rep.minimum == predicted else "MISMATCH"
            rows.append(WTableRow(q, v, rep.minimum, predicted, status))
    return rows


# ---------------------------------------------------------------------------
# chief factorization of P_G(s)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChiefFactorRecord:
    label: str
    simple_order: int
    multiplicity: int
    factor_order: int
    frattini: bool
    polynomial: DirichletPolynomial
    complement_count: int | None
    abelian_identity_ok: bool | None

    def to_json_dict(self) -> dict:
        return {
            "simple": self.label,
            "multiplicity": self.multiplicity,
            "factor_order": self.factor_order,
            "frattini": self.frattini,
            "polynomial": self.polynomial.to_json_dict(),
            "complements": self.complement_count,
            "abelian_identity_ok": self.abelian_identity_ok,
        }


@dataclass
class ChiefFactorization:
    group: str
    zeta: DirichletPolynomial
    factors: tuple[ChiefFactorRecord, ...]
    product_ok: bool
    chain: tuple[int, ...]

    def factor_polynomials(self) -> list[DirichletPolynomial]:
        return [f.polynomial for f in self.factors]

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "zeta": self.zeta.to_json_dict(),
            "product_ok": self.product_ok,
            "factors": [f.to_json_dict() for f in self.factors],
        }


def _complement_count(qgroup: PermGroup, normal_ids: frozenset[int], budget: Budget) -> int:
    """Number of complements of the normal subgroup (given by element
    indices of ``qgroup``) inside ``qgroup``."""
    qlat = qgroup.subgroup_lattice(budget)
    target = qgroup.order // len(normal_ids)
    count = 0
    for i in range(qlat.node_count):
        if qlat.node_order(i) != target:
            continue
        if len(frozenset(qlat.node_elements(i)) & normal_ids) == 1:
            count += 1
    return count


def chief_factorization(
    group: PermGroup,
    budget: Budget | None = None,
    chain: list[int] | None = None,
) -> ChiefFactorization:
    """Factor P_G(s) along a chief series: for consecutive quotients the
    polynomial of the step is the exact quotient
    ``P_{G/N_{i+1}} / P_{G/N_i}`` in the polynomial ring.

    Frattini steps are flagged and must contribute the factor 1; for
    abelian factors the polynomial is cross-checked against
    ``1 - c / (p^r)^s`` with c the independently counted number of
    complements.
    """
    budget = budget or DEFAULT_BUDGET
    lat = group.subgroup_lattice(budget)
    chain = list(chain) if chain is not None else chief_series_ids(lat)
    steps = chief_steps(lat, chain)
    quotients = [lat.quotient_with_hom(nid) for nid in chain]
    qzetas = [probabilistic_zeta(q, budget) for q, _ in quotients]

    records = []
    for i, step in enumerate(steps):
        poly = divide_exact(qzetas[i + 1], qzetas[i])
        qgroup, hom = quotients[i + 1]
        img_gen_ids = [
            qgroup.index_of(hom(x)) for x in lat.node_generators(step.upper)
        ]
        image = qgroup.engine.closure(img_gen_ids)
        image_fs = frozenset(int(x) for x in image)
        qlat = qgroup.subgroup_lattice(budget)
        frat_fs = frozenset(qlat.node_elements(qlat.frattini_node_id()))
        frattini = image_fs <= frat_fs
        if frattini and not poly.is_one():
            raise RuntimeError(
                f"Frattini chief factor produced a nontrivial polynomial: {poly}"
            )
        complement_count = None
        abelian_ok = None
        if step.abelian:
            complement_count = _complement_count(qgroup, image_fs, budget)
            expected = DirichletPolynomial(
                {1: 1, step.factor_order: -complement_count}
            )
            abelian_ok = poly == expected
        records.append(
            ChiefFactorRecord(
                label=step.label,
                simple_order=step.simple_order,
                multiplicity=step.multiplicity,
                factor_order=step.factor_order,
                frattini=frattini,
                polynomial=poly,
                complement_count=complement_count,
                abelian_identity_ok=abelian_ok,
            )
        )
    total = DirichletPolynomial.one()
    for rec in records:
        total = total * rec.polynomial
    return ChiefFactorization(
        group=group.name,
        zeta=qzetas[-1],
        factors=tuple(records),
        product_ok=total == qzetas[-1],
        chain=tuple(chain),
    )


def chief_factor_multiset(group: PermGroup, budget: Budget | None = None):
    """Multiset of step polynomials over every chief series; a correct
    factorization must make this independent of the chosen series."""
    budget = budget or DEFAULT_BUDGET
    lat = group.subgroup_lattice(budget)
    out = []
    for chain in all_chief_series_ids(lat):
        fac = chief_factorization(group, budget, chain=chain)
        out.append(sorted(tuple(p.items()) for p in fac.factor_polynomials()))
    return out


# ---------------------------------------------------------------------------
# shift-coefficient consistency
# ---------------------------------------------------------------------------


def verify_shift_coefficients(
    spec: AlmostSimpleSpec,
    r: int,
    primes,
    budget: Budget | None = None,
) -> bool:
    """Check that projecting away ``primes`` commutes with the power
    substitution on the supplement zeta function: each surviving term
    c_m / m^s must land at index m^r with coefficient c_m * m^(r-1)."""
    if not isinstance(r, int) or r < 1:
        raise ValueError("r must be an int >= 1")
    socle_primes = set(prime_factors(spec.socle.order))
    ps = frozenset(primes)
    if not ps & socle_primes:
        raise ValueError("prime set must contain a divisor of the socle order")
    pxs = supplement_zeta(spec, budget)
    base = prime_projection(pxs, ps)
    shifted = prime_projection(power_shift(pxs, r), ps)
    expected = DirichletPolynomial({m**r: c * m ** (r - 1) for m, c in base.items()})
    return shifted == expected
