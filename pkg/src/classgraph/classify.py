"""Structural predicates: Frobenius and quasi-Frobenius detection, prime-power
structure of CP-groups, class-size criteria, and the triangle-free case match."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import construct
from .errors import (ComplementSearchExhausted, NoCaseMatches,
                     PreconditionViolated)
from .graph import build_graph, is_triangle_free
from .numtheory import (is_pi_number, is_prime, is_prime_power, p_part,
                        prime_factors)
from .perm import (Group, center, conjugacy_classes, element_order_map,
                   subgroup_from_elements)
from .structure import (HallSearchConfig, _search_subgroup, hall_subgroup,
                        is_isomorphic, is_p_separable, is_soluble, normal_subgroups,
                        p_complement, p_core, pi_core, quotient, sylow)


@dataclass(frozen=True)
class FrobeniusWitness:
    """Kernel/complement pair witnessing a Frobenius decomposition."""

    kernel: Group
    complement: Group
    kernel_abelian: bool
    complement_abelian: bool


@dataclass(frozen=True)
class QuasiFrobeniusWitness:
    """Frobenius data of G/Z(G) plus the preimages of kernel and complement."""

    quotient_witness: FrobeniusWitness
    kernel: Group          # preimage in G
    complement: Group      # preimage in G
    kernel_abelian: bool
    complement_abelian: bool


def _verify_frobenius(G: Group, kernel: Group, complement: Group) -> None:
    """Re-verify the witness invariants by direct enumeration."""
    assert 1 < kernel.order < G.order
    assert complement.order > 1
    assert kernel.order * complement.order == G.order
    assert kernel.element_set() & complement.element_set() == {G.identity}
    for n in kernel.generators:
        for g in G.generators:
            assert n.conjugate(g) in kernel, "kernel is not normal"
    for k in kernel.elements:
        if k.is_identity():
            continue
        for g in G.elements:
            if g.commutes_with(k):
                assert g in kernel, "centralizer escapes the kernel"


def is_frobenius(G: Group,
                 cfg: HallSearchConfig = HallSearchConfig()) -> Optional[FrobeniusWitness]:
    """Search the normal subgroups for a Frobenius kernel, then a complement.

    A kernel is a proper nontrivial normal subgroup containing the
    centralizer of each of its nontrivial elements; a complement is then a
    Hall subgroup for the primes of the index (kernel and index are coprime).
    """
    def build():
        if center(G).order > 1:
            return None  # Frobenius groups have trivial center
        for N in normal_subgroups(G):
            if N.is_trivial() or N.order == G.order:
                continue
            ok = True
            for k in N.elements:
                if k.is_identity():
                    continue
                cnt = sum(1 for g in G.elements if g.commutes_with(k))
                inside = sum(1 for g in N.elements if g.commutes_with(k))
                if cnt != inside:
                    ok = False
                    break
            if not ok:
                continue
            index = G.order // N.order
            primes = frozenset(prime_factors(index))
            orders = element_order_map(G)
            cands = [g for g in G.elements if is_pi_number(orders[g], primes)]
            comp = _search_subgroup(G, index, cands,
                                    lambda n: is_pi_number(n, primes), cfg,
                                    f"FrobC({G.name})", ComplementSearchExhausted)
            _verify_frobenius(G, N, comp)
            return FrobeniusWitness(
                kernel=N, complement=comp,
                kernel_abelian=N.is_abelian(),
                complement_abelian=comp.is_abelian())
        return None
    return G._memo("frobenius", build)


def is_quasi_frobenius(G: Group,
                       cfg: HallSearchConfig = HallSearchConfig()
                       ) -> Optional[QuasiFrobeniusWitness]:
    """Apply the Frobenius test to G/Z(G) and pull the witness back to G."""
    def build():
        Z = center(G)
        if Z.order == G.order:
            return None
        Q, proj = quotient(G, Z)
        w = is_frobenius(Q, cfg)
        if w is None:
            return None
        kern_pre = subgroup_from_elements(
            [g for g in G.elements if proj[g] in w.kernel], f"K<{G.name}")
        comp_pre = subgroup_from_elements(
            [g for g in G.elements if proj[g] in w.complement], f"H<{G.name}")
        return QuasiFrobeniusWitness(
            quotient_witness=w, kernel=kern_pre, complement=comp_pre,
            kernel_abelian=kern_pre.is_abelian(),
            complement_abelian=comp_pre.is_abelian())
    return G._memo("quasi_frobenius", build)


@dataclass(frozen=True)
class PrimePowerStructureReport:
    """Outcome of the prime-power-order structure check for soluble groups
    in which every element has prime power order."""

    t: int | None                  # the prime with a nontrivial normal t-subgroup
    core_order: int
    quotient_case: str             # "whole-group" | "cyclic" | "generalized_quaternion"
    #                              | "two-prime-cyclic-sylow" | "unrecognized"
    quotient_order: int
    detail: str


def higman_structure_check(H: Group) -> PrimePowerStructureReport:
    """Classify H/O_t(H) for a soluble group with all elements of prime power order.

    Possible shapes: trivial quotient, cyclic of prime power order (prime
    different from t), generalized quaternion with t odd, or order t^a*s^b
    with cyclic Sylow subgroups and s = k*t^a + 1.
    """
    orders = element_order_map(H)
    for g, n in orders.items():
        if n > 1 and not is_prime_power(n):
            raise PreconditionViolated(
                f"element of composite order {n} in {H.name!r}")
    if not is_soluble(H)[0]:
        raise PreconditionViolated(f"{H.name!r} is not soluble")
    if H.order == 1:
        return PrimePowerStructureReport(None, 1, "whole-group", 1, "trivial group")

    assert len(prime_factors(H.order)) <= 2, "more than two primes"
    t = None
    for q in prime_factors(H.order):
        if p_core(H, q).order > 1:
            t = q
            break
    assert t is not None, "no nontrivial prime core in a soluble group"
    M = p_core(H, t)
    if M.order == H.order:
        return PrimePowerStructureReport(t, M.order, "whole-group", 1,
                                         "the group equals its core")
    Q, _ = quotient(H, M)
    qorder = Q.order
    # cyclic of prime power order, the prime differing from t
    if is_prime_power(qorder) and prime_factors(qorder)[0] != t:
        if any(orders_q == qorder for orders_q in element_order_map(Q).values()):
            return PrimePowerStructureReport(
                t, M.order, "cyclic", qorder, f"cyclic of order {qorder}")
    if qorder >= 8 and qorder & (qorder - 1) == 0 and t % 2 == 1:
        if is_isomorphic(Q, construct.generalized_quaternion(qorder)):
            return PrimePowerStructureReport(
                t, M.order, "generalized_quaternion", qorder,
                f"generalized quaternion of order {qorder}")
    qprimes = prime_factors(qorder)
    if len(qprimes) == 2 and t in qprimes:
        s = next(q for q in qprimes if q != t)
        ta = p_part(qorder, t)
        cyclic_sylows = all(
            any(element_order_map(Q)[g] == p_part(qorder, q)
                for g in Q.elements)
            for q in qprimes)
        if cyclic_sylows and (s - 1) % ta == 0:
            return PrimePowerStructureReport(
                t, M.order, "two-prime-cyclic-sylow", qorder,
                f"order {t}^a*{s}^b with cyclic Sylow subgroups")
    return PrimePowerStructureReport(t, M.order, "unrecognized", qorder,
                                     "no structure case matched")


def count_p_regular_classes(G: Group, p: int) -> int:
    """Number of classes with representative order coprime to p, central included."""
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    return sum(1 for c in conjugacy_classes(G) if c.element_order % p != 0)


def pi_class_size_criterion(G: Group, pi: frozenset[int] | set[int], mode: str,
                            cfg: HallSearchConfig = HallSearchConfig()
                            ) -> tuple[bool, bool]:
    """Both sides of the class-size criteria for pi-elements.

    mode "pi_number": every pi-element has class size a pi-number iff
    G = O_pi(G) x O_pi'(G).  mode "pi_prime_number": every pi-element has
    class size a pi'-number iff the Hall pi-subgroups are abelian.  Returns
    (lhs, rhs) so callers can assert the biconditional.
    """
    pi = frozenset(pi)
    if len(pi) == 1:
        (p,) = pi
        if not is_p_separable(G, p)[0]:
            raise PreconditionViolated(f"{G.name!r} is not {p}-separable")
    elif not is_soluble(G)[0]:
        raise PreconditionViolated(f"{G.name!r} is not soluble")

    pi_classes = [c for c in conjugacy_classes(G)
                  if is_pi_number(c.element_order, pi)]
    if mode == "pi_number":
        lhs = all(is_pi_number(c.size, pi) for c in pi_classes)
        o_pi = pi_core(G, pi)
        others = frozenset(q for q in prime_factors(G.order) if q not in pi)
        o_pi_prime = pi_core(G, others)
        rhs = o_pi.order * o_pi_prime.order == G.order
        return lhs, rhs
    if mode == "pi_prime_number":
        lhs = all(not any(q in pi for q in c.prime_support) for c in pi_classes)
        if len(pi) == 1:
            hall = sylow(G, next(iter(pi)))
        else:
            hall = hall_subgroup(G, pi, cfg)
        rhs = hall.is_abelian()
        return lhs, rhs
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ComplementCase:
    """The matched structural case for a triangle-free p-regular class graph."""

    case: str   # "i" | "ii" | "iii"
    shape: str  # "a".."f"
    details: dict


_CASE_SHAPES = {"i": {"d", "e"}, "ii": {"a", "b", "c", "e"}, "iii": {"f"}}


@lru_cache(maxsize=1)
def _case_iii_target() -> Group:
    return construct.atlas_group("(C5xC5):Q8")


def intersection_subgroup(A: Group, B: Group, name: str) -> Group:
    return subgroup_from_elements(A.element_set() & B.element_set(), name)


def complement_case(G: Group, p: int,
                    cfg: HallSearchConfig = HallSearchConfig()) -> ComplementCase:
    """Match a (group, prime) pair against the three structural cases.

    Requires G p-separable with a triangle-free p-regular class graph and a
    non-central p-complement H.  Exactly one of the following must hold:
    (i) H is a q-group for a prime q != p; (ii) H is quasi-Frobenius on two
    primes with abelian kernel and complements and Z(H) = H n Z(G) of order
    at most 2; (iii) H is isomorphic to the order-200 group (C5xC5):Q8.
    The graph shape must pair with the case, and G must be soluble.
    """
    if not is_p_separable(G, p)[0]:
        raise PreconditionViolated(f"{G.name!r} is not {p}-separable")
    graph = build_graph(G, p)
    if not is_triangle_free(graph):
        raise PreconditionViolated(f"graph of {G.name!r} at p={p} has a triangle")
    if not graph.vertices:
        raise PreconditionViolated(
            f"p-complement of {G.name!r} is central at p={p}")

    H = p_complement(G, p, cfg)
    matches: list[ComplementCase] = []

    if H.order == _case_iii_target().order and is_isomorphic(H, _case_iii_target()):
        matches.append(ComplementCase("iii", graph.shape,
                                      {"target": _case_iii_target().name}))

    if is_prime_power(H.order):
        q = prime_factors(H.order)[0]
        matches.append(ComplementCase("i", graph.shape, {"q": q}))

    qf = is_quasi_frobenius(H, cfg)
    if qf is not None and qf.kernel_abelian and qf.complement_abelian:
        h_primes = prime_factors(H.order)
        zh = center(H)
        h_meet_zg = intersection_subgroup(H, center(G), "HnZ(G)")
        if (len(h_primes) == 2
                and zh.element_set() == h_meet_zg.element_set()
                and zh.order <= 2):
            q, r = h_primes
            matches.append(ComplementCase("ii", graph.shape, {
                "q": q, "r": r, "center_order": zh.order,
                "kernel_order": qf.kernel.order,
                "complement_order": qf.complement.order}))

    if not matches:
        raise NoCaseMatches(
            f"({G.name}, p={p}): no structural case matches (|H|={H.order})")
    if len(matches) > 1:
        raise NoCaseMatches(
            f"({G.name}, p={p}): ambiguous case match "
            f"{[m.case for m in matches]}")
    result = matches[0]
    if result.shape not in _CASE_SHAPES[result.case]:
        raise NoCaseMatches(
            f"({G.name}, p={p}): case {result.case} paired with shape "
            f"{result.shape!r}")
    if not is_soluble(G)[0]:
        raise NoCaseMatches(f"({G.name}, p={p}): group is not soluble")
    return result


def is_elementary_abelian(G: Group) -> bool:
    if G.order == 1:
        return True
    if not G.is_abelian():
        return False
    primes = prime_factors(G.order)
    return len(primes) == 1 and all(
        g.order() == primes[0] for g in G.elements if not g.is_identity())
