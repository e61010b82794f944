"""Structural subgroup machinery: solubility, Sylow/Hall subgroups, cores,
separability, quotients, normal subgroups, and isomorphism testing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import (HallSearchExhausted, IsoCapExceeded, LatticeCapExceeded,
                     NotASubgroup, NotNormal, OrderCapExceeded,
                     PreconditionViolated)
from .numtheory import is_pi_number, is_prime, p_part, pi_part, prime_factors
from .perm import (Group, Permutation, bulk_conjugate, center, class_elements,
                   conjugacy_classes, conjugation_maps, element_order_map,
                   make_group, mulclose, p_part_element, subgroup_from_elements)

ISO_CAP = 1024
LATTICE_CAP = 10000


@dataclass(frozen=True)
class HallSearchConfig:
    """Knobs for the randomized-restart subgroup searches."""

    restarts: int = 200
    seed: int = 0xC1A55
    greedy_order: str = "by_descending_element_order"  # or "random"

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass(frozen=True)
class SeriesCertificate:
    """A witness series: derived series or an alternating core series.

    For a positive certificate the terms strictly descend from G to the
    trivial group.  ``step_labels`` tags each factor of a core series as a
    p-group or p'-group; it is empty for derived series.
    """

    kind: str  # "derived_series" | "core_series"
    terms: tuple[Group, ...]
    step_labels: tuple[str, ...] = ()


class Quotient(NamedTuple):
    group: Group
    projection: dict[Permutation, Permutation]


# ---------------------------------------------------------------------------
# derived series and solubility

def normal_closure(G: Group, seeds: Iterable[Permutation], name: str, *,
                   cap: int | None = None) -> Group:
    """Smallest normal subgroup of G containing the seed elements.

    Conjugates outside the current closure are adjoined one at a time, so
    the number of re-closures is bounded by the subgroup chain length.
    With ``cap`` set, growth past that many elements raises OrderCapExceeded.
    """
    gens = [g for g in seeds if not g.is_identity()]
    if not gens:
        return make_group([], name, degree=G.degree)
    maps = conjugation_maps(G.generators)
    elems = mulclose(gens, cap=cap)
    if cap is not None and len(elems) > cap:
        raise OrderCapExceeded(name, cap)
    growing = True
    while growing:
        growing = False
        for x in list(elems):
            for m in maps:
                y = bulk_conjugate(x, m)
                if y not in elems:
                    gens.append(y)
                    elems = mulclose(gens, cap=cap)
                    if cap is not None and len(elems) > cap:
                        raise OrderCapExceeded(name, cap)
                    growing = True
                    break
            if growing:
                break
    return subgroup_from_elements(elems, name)


def derived_subgroup(G: Group) -> Group:
    def build():
        comms = [(~a * ~b) * (a * b) for a in G.generators for b in G.generators]
        return normal_closure(G, comms, f"[{G.name},{G.name}]")
    return G._memo("derived", build)


def is_soluble(G: Group) -> tuple[bool, SeriesCertificate]:
    """Derived-series test; the certificate carries the (possibly stalled) series."""
    def build():
        terms = [G]
        cur = G
        while cur.order > 1:
            nxt = derived_subgroup(cur)
            if nxt.order == cur.order:
                return False, SeriesCertificate("derived_series", tuple(terms))
            terms.append(nxt)
            cur = nxt
        return True, SeriesCertificate("derived_series", tuple(terms))
    return G._memo("soluble", build)


# ---------------------------------------------------------------------------
# Sylow subgroups and cores

def sylow(G: Group, p: int) -> Group:
    """A Sylow p-subgroup, grown by ascent through normalizers.

    Starting from the trivial subgroup, repeatedly adjoin the p-part of an
    element of the normalizer; the extension stays a p-group because the
    current subgroup is normal in it, and it strictly grows until the full
    p-part of the group order is reached.
    """
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")

    def build():
        target = p_part(G.order, p)
        cur: set[Permutation] = {G.identity}
        cur_gens: list[Permutation] = []
        while len(cur) < target:
            grown = False
            for y in G.elements:
                if y in cur:
                    continue
                # y must normalize the current subgroup
                if not all(g.conjugate(y) in cur for g in cur_gens):
                    continue
                if y.order() % p != 0:
                    continue
                yp = p_part_element(y, p)
                if yp in cur:
                    continue
                trial = mulclose(cur_gens + [yp], cap=target)
                if len(trial) <= target and len(trial) == p_part(len(trial), p):
                    cur = trial
                    cur_gens.append(yp)
                    grown = True
                    break
            if not grown:  # cannot happen for p dividing |G|; defensive
                raise PreconditionViolated(
                    f"Sylow ascent stalled in {G.name!r} at order {len(cur)}")
        return subgroup_from_elements(cur, f"Syl_{p}({G.name})")
    return G._memo(("sylow", p), build)


def p_core(G: Group, p: int) -> Group:
    """O_p(G): the intersection of the conjugates of one Sylow p-subgroup."""
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")

    def build():
        P = sylow(G, p)
        core = set(P.element_set())
        maps = conjugation_maps(G.generators)
        conjugates = {P.element_set()}
        frontier = [P.element_set()]
        while frontier:
            new = []
            for S in frontier:
                for m in maps:
                    T = frozenset(bulk_conjugate(x, m) for x in S)
                    if T not in conjugates:
                        conjugates.add(T)
                        new.append(T)
                        core &= T
            frontier = new
        return subgroup_from_elements(core, f"O_{p}({G.name})")
    return G._memo(("p_core", p), build)


def pi_core(G: Group, primes: frozenset[int], name: str | None = None) -> Group:
    """O_pi(G): generated by the classes of pi-elements with pi-number normal closure."""
    def build():
        cap = pi_part(G.order, primes)
        gens: list[Permutation] = []
        for cls in conjugacy_classes(G):
            if not is_pi_number(cls.element_order, primes):
                continue
            if cls.representative.is_identity():
                continue
            try:
                nc = normal_closure(G, [cls.representative], "nc", cap=cap)
            except OrderCapExceeded:
                continue
            if is_pi_number(nc.order, primes):
                gens.append(cls.representative)
        if not gens:
            return make_group([], name or f"O_pi({G.name})", degree=G.degree)
        return normal_closure(G, gens, name or f"O_pi({G.name})", cap=cap)
    return G._memo(("pi_core", primes), build)


def p_prime_core(G: Group, p: int) -> Group:
    """O_{p'}(G): the largest normal p'-subgroup."""
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    primes = frozenset(q for q in prime_factors(G.order) if q != p)
    return pi_core(G, primes, name=f"O_{p}'({G.name})")


# ---------------------------------------------------------------------------
# quotients

def quotient(G: Group, N: Group) -> Quotient:
    """The action of G on the right cosets of a normal subgroup N.

    Returns the quotient as a permutation group of degree |G:N| together
    with the projection map from every element of G to its coset action.
    """
    if N.degree != G.degree or not N.element_set() <= G.element_set():
        raise NotASubgroup(f"{N.name!r} is not a subgroup of {G.name!r}")
    for n in N.generators:
        for g in G.generators:
            if n.conjugate(g) not in N:
                raise NotNormal(f"{N.name!r} is not normal in {G.name!r}")

    n_elems = N.elements
    coset_rep: dict[Permutation, Permutation] = {}
    for g in G.elements:
        if g in coset_rep:
            continue
        coset = [n * g for n in n_elems]
        rep = min(coset)
        for e in coset:
            coset_rep[e] = rep
    reps = sorted(set(coset_rep.values()))
    rep_index = {r: i for i, r in enumerate(reps)}
    nq = len(reps)

    def act(x: Permutation) -> Permutation:
        return Permutation._raw(tuple(rep_index[coset_rep[r * x]] for r in reps))

    # the coset action is a homomorphism, so extend it from the generators
    # along a breadth-first walk instead of acting with every element
    proj_gens = {g: act(g) for g in G.generators}
    projection = {G.identity: Permutation.identity(nq)}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            px = projection[x]
            for g, pg in proj_gens.items():
                y = x * g
                if y not in projection:
                    projection[y] = px * pg
                    new.append(y)
        frontier = new
    qgens = [proj_gens[g] for g in G.generators]
    Q = (make_group(qgens, f"{G.name}/{N.name}", degree=nq, max_order=nq)
         if qgens else make_group([], f"{G.name}/{N.name}", degree=nq))
    assert Q.order == G.order // N.order
    return Quotient(Q, projection)


def preimage(G: Group, proj: dict[Permutation, Permutation],
             sub: Group, name: str) -> Group:
    """The preimage in G of a subgroup of a quotient of G."""
    elems = [g for g in G.elements if proj[g] in sub]
    return subgroup_from_elements(elems, name)


# ---------------------------------------------------------------------------
# p-separability

def is_p_separable(G: Group, p: int) -> tuple[bool, SeriesCertificate]:
    """Alternating-core recursion: peel O_p / O_{p'} until stuck or trivial.

    The certificate lists the descending preimage series in G with each
    factor tagged; a stalled series (not ending at the trivial group)
    witnesses a negative answer.
    """
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")

    def build():
        ascending = [make_group([], "1", degree=G.degree)]
        labels: list[str] = []
        while ascending[-1].order < G.order:
            N = ascending[-1]
            Q, proj = quotient(G, N)
            core = p_core(Q, p)
            label = "p-group"
            if core.is_trivial():
                core = p_prime_core(Q, p)
                label = "p'-group"
            if core.is_trivial():
                terms = tuple([G] + list(reversed(ascending)))
                return False, SeriesCertificate("core_series", terms,
                                                tuple(reversed(labels)))
            lifted = preimage(G, proj, core, f"{G.name}.step{len(labels)}")
            ascending.append(lifted)
            labels.append(label)
        terms = tuple(reversed(ascending))
        return True, SeriesCertificate("core_series", terms,
                                       tuple(reversed(labels)))
    return G._memo(("p_separable", p), build)


# ---------------------------------------------------------------------------
# randomized-greedy subgroup searches (Hall subgroups, complements)

def _search_subgroup(G: Group, target_order: int,
                     candidates: Sequence[Permutation],
                     order_ok: Callable[[int], bool],
                     cfg: HallSearchConfig,
                     name: str,
                     exc: type[Exception]) -> Group:
    """Greedy growth with seeded random restarts.

    Adjoins a candidate whenever the closure stays within target size and
    satisfies ``order_ok``.  The first pass is deterministic; later passes
    shuffle the candidate order with a seeded generator.
    """
    if target_order == 1:
        return make_group([], name, degree=G.degree)
    rng = random.Random(cfg.seed)
    if cfg.greedy_order == "by_descending_element_order":
        base = sorted(candidates, key=lambda g: (-g.order(), g.images))
    else:
        base = sorted(candidates)
        rng.shuffle(base)
    for attempt in range(cfg.restarts):
        order = list(base)
        if attempt > 0:
            rng.shuffle(order)
        cur: set[Permutation] = {G.identity}
        gens: list[Permutation] = []
        for x in order:
            if len(cur) == target_order:
                break
            if x in cur:
                continue
            trial = mulclose(gens + [x], cap=target_order)
            if len(trial) <= target_order and order_ok(len(trial)):
                cur = trial
                gens.append(x)
        if len(cur) == target_order:
            return subgroup_from_elements(cur, name)
    raise exc(f"search for {name!r} of order {target_order} in {G.name!r} "
              f"exhausted {cfg.restarts} restarts")


def hall_subgroup(G: Group, primes: frozenset[int],
                  cfg: HallSearchConfig = HallSearchConfig(),
                  name: str | None = None) -> Group:
    """A Hall pi-subgroup: order = the full pi-part of |G|."""
    target = pi_part(G.order, primes)
    orders = element_order_map(G)
    cands = [g for g in G.elements if is_pi_number(orders[g], primes)]
    return _search_subgroup(
        G, target, cands, lambda n: is_pi_number(n, primes), cfg,
        name or f"Hall_{{{','.join(map(str, sorted(primes)))}}}({G.name})",
        HallSearchExhausted)


def p_complement(G: Group, p: int,
                 cfg: HallSearchConfig = HallSearchConfig()) -> Group:
    """A Hall p'-subgroup.  Exists whenever G is p-separable."""
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")

    def build():
        target = G.order // p_part(G.order, p)
        orders = element_order_map(G)
        cands = [g for g in G.elements if orders[g] % p != 0]
        return _search_subgroup(G, target, cands, lambda n: n % p != 0, cfg,
                                f"Hall_{p}'({G.name})", HallSearchExhausted)
    if cfg == HallSearchConfig():
        return G._memo(("p_complement", p), build)
    return build()


# ---------------------------------------------------------------------------
# normal subgroups

def normal_subgroups(G: Group) -> tuple[Group, ...]:
    """All normal subgroups: class closures, closed under joins.

    Every normal subgroup is generated by the conjugacy classes it
    contains, so the join-closure of the single-class normal closures
    exhausts the lattice.
    """
    def build():
        seeds: dict[frozenset, Group] = {}
        triv = make_group([], f"1<{G.name}", degree=G.degree)
        seeds[triv.element_set()] = triv
        for cls in conjugacy_classes(G):
            if cls.representative.is_identity():
                continue
            N = normal_closure(G, [cls.representative],
                               f"ncl{len(seeds)}<{G.name}")
            seeds.setdefault(N.element_set(), N)
        lattice = dict(seeds)
        frontier = list(seeds.values())
        while frontier:
            new = []
            for A in frontier:
                for B in list(lattice.values()):
                    if (A.element_set() <= B.element_set()
                            or B.element_set() <= A.element_set()):
                        continue
                    join_gens = list(A.generators) + list(B.generators)
                    J = subgroup_from_elements(mulclose(join_gens),
                                               f"join{len(lattice)}<{G.name}")
                    if J.element_set() not in lattice:
                        lattice[J.element_set()] = J
                        new.append(J)
                    if len(lattice) > LATTICE_CAP:
                        raise LatticeCapExceeded(
                            f"more than {LATTICE_CAP} normal subgroups in {G.name!r}")
            frontier = new
        return tuple(sorted(lattice.values(),
                            key=lambda N: (N.order, [g.images for g in N.elements])))
    return G._memo("normals", build)


# ---------------------------------------------------------------------------
# isomorphism testing

def _fingerprint(G: Group) -> tuple:
    def build():
        orders = sorted(element_order_map(G).values())
        sizes = sorted(c.size for c in conjugacy_classes(G))
        return (G.order, tuple(orders), tuple(sizes), center(G).order,
                derived_subgroup(G).order)
    return G._memo("fingerprint", build)


def _element_invariant(G: Group) -> dict[Permutation, tuple[int, int]]:
    def build():
        inv = {}
        for cls in conjugacy_classes(G):
            for g in class_elements(G, cls):
                inv[g] = (cls.element_order, cls.size)
        return inv
    return G._memo("elem_invariant", build)


def _minimal_generating_sequence(G: Group) -> list[Permutation]:
    """A short generating sequence, greedily maximizing closure growth."""
    if G.order == 1:
        return []
    gens: list[Permutation] = []
    cur: set[Permutation] = {G.identity}
    by_order = sorted(G.elements, key=lambda g: (-g.order(), g.images))
    while len(cur) < G.order:
        best = None
        best_size = len(cur)
        for x in by_order:
            if x in cur:
                continue
            trial = mulclose(gens + [x])
            if len(trial) > best_size:
                best, best_size = x, len(trial)
            if best_size == G.order:
                break
        gens.append(best)
        cur = mulclose(gens)
    return gens


def _hom_consistent(gens_a: Sequence[Permutation],
                    imgs_b: Sequence[Permutation],
                    sub_order_cap: int) -> tuple[bool, int]:
    """Extend gens->images over the closure of the generators; detect conflicts.

    Returns (consistent, image subgroup size).  The walk enumerates the
    subgroup generated so far, so a full-group call also proves bijectivity
    when the image size matches.
    """
    ident_a = Permutation.identity(gens_a[0].degree)
    ident_b = Permutation.identity(imgs_b[0].degree)
    hom = {ident_a: ident_b}
    frontier = [ident_a]
    while frontier:
        new = []
        for x in frontier:
            hx = hom[x]
            for g, hg in zip(gens_a, imgs_b):
                y = x * g
                hy = hx * hg
                if y in hom:
                    if hom[y] != hy:
                        return False, 0
                else:
                    hom[y] = hy
                    new.append(y)
                    if len(hom) > sub_order_cap:
                        return False, 0
        frontier = new
    return True, len(set(hom.values()))


def is_isomorphic(A: Group, B: Group, *, cap: int = ISO_CAP) -> bool:
    """Backtracking isomorphism test behind an invariant prefilter.

    A generating sequence of A is mapped onto invariant-compatible elements
    of B; each partial assignment must already be a consistent injective
    homomorphism on the subgroup it generates.
    """
    if A.order > cap or B.order > cap:
        raise IsoCapExceeded(f"orders {A.order}, {B.order} exceed cap {cap}")
    if A.order != B.order:
        return False
    if _fingerprint(A) != _fingerprint(B):
        return False
    if A.order == 1:
        return True
    gens = _minimal_generating_sequence(A)
    inv_a = _element_invariant(A)
    inv_b = _element_invariant(B)
    pools: list[list[Permutation]] = []
    for g in gens:
        pool = sorted(x for x, v in inv_b.items() if v == inv_a[g])
        if not pool:
            return False
        pools.append(pool)

    # pairwise word invariants for a cheap precheck
    def word_inv(x, y, inv):
        return (inv[x * y], inv[y * x])

    target_pair = [[word_inv(gens[i], gens[j], inv_a) for j in range(i)]
                   for i in range(len(gens))]

    assignment: list[Permutation] = []

    def backtrack(i: int) -> bool:
        if i == len(gens):
            ok, image_size = _hom_consistent(gens, assignment, A.order)
            return ok and image_size == A.order
        sub_order = len(mulclose(gens[: i + 1]))
        for cand in pools[i]:
            if any(word_inv(assignment[j], cand, inv_b) != target_pair[i][j]
                   for j in range(i)):
                continue
            assignment.append(cand)
            ok, image_size = _hom_consistent(gens[: i + 1], assignment, sub_order)
            if ok and image_size == sub_order and backtrack(i + 1):
                return True
            assignment.pop()
        return False

    return backtrack(0)
