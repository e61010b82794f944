"""Permutations on finite point sets and groups given by exhaustive closure.

Points are 0-based internally and 1-based in all textual I/O.  Products
compose left-to-right: ``(a * b)(x) == b(a(x))``, i.e. apply ``a`` first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import BadCycle, DegreeMismatch, NotAMember, OrderCapExceeded
from .numtheory import p_part, prime_factors

DEFAULT_MAX_ORDER = 20000


class Permutation:
    """An immutable bijection of {0, ..., degree-1}, stored as an image tuple."""

    __slots__ = ("images", "_hash", "_order")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)
        self._order = None

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        # internal fast path: caller guarantees images is a valid bijection
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        p._order = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls._raw(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a = self.images
        b = other.images
        if len(a) != len(b):
            raise DegreeMismatch(f"degree {len(a)} vs {len(b)}")
        return Permutation._raw(tuple(map(b.__getitem__, a)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, im in enumerate(self.images):
            inv[im] = i
        return Permutation._raw(tuple(inv))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Permutation":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = Permutation.identity(self.degree)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        gi = g.images
        xi = self.images
        if len(gi) != len(xi):
            raise DegreeMismatch(f"degree {len(xi)} vs {len(gi)}")
        return Permutation._raw(_conj_images(xi, gi, g.inverse().images))

    def commutes_with(self, other: "Permutation") -> bool:
        a = self.images
        b = other.images
        return all(b[a[i]] == a[b[i]] for i in range(len(a)))

    def is_identity(self) -> bool:
        return all(i == im for i, im in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        if self._order is None:
            img = self.images
            seen = [False] * len(img)
            out = 1
            for start in range(len(img)):
                if seen[start]:
                    continue
                length = 1
                seen[start] = True
                nxt = img[start]
                while nxt != start:
                    seen[nxt] = True
                    nxt = img[nxt]
                    length += 1
                out = math.lcm(out, length)
            self._order = out
        return self._order

    def cycle_string(self) -> str:
        """1-based cycle notation; '()' for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(pt + 1) for pt in c) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}/{self.degree}]"

    def __reduce__(self):
        return (_unpickle_perm, (self.images,))


def _unpickle_perm(images: tuple[int, ...]) -> Permutation:
    return Permutation._raw(images)


def _conj_images(x_img: tuple[int, ...], g_img: tuple[int, ...],
                 ginv_img: tuple[int, ...]) -> tuple[int, ...]:
    """Images of g^-1 * x * g, composed with C-level map calls."""
    return tuple(map(g_img.__getitem__, map(x_img.__getitem__, ginv_img)))


def conjugation_maps(gens: Sequence[Permutation]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Precompute (images, inverse images) pairs for bulk conjugation."""
    return [(g.images, g.inverse().images) for g in gens]


def bulk_conjugate(x: Permutation,
                   maps: tuple[tuple[int, ...], tuple[int, ...]]) -> Permutation:
    g_img, ginv_img = maps
    return Permutation._raw(_conj_images(x.images, g_img, ginv_img))


def parse_cycle_string(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation like "(1,2,3)(4,5)"; "()" is the identity."""
    images = list(range(degree))
    used: set[int] = set()
    s = text.replace(" ", "")
    pos = 0
    if not s:
        raise BadCycle("empty cycle string")
    while pos < len(s):
        if s[pos] != "(":
            raise BadCycle(f"expected '(' at position {pos} in {text!r}")
        end = s.find(")", pos)
        if end < 0:
            raise BadCycle(f"unclosed cycle in {text!r}")
        body = s[pos + 1 : end]
        pos = end + 1
        if not body:
            continue
        try:
            pts = [int(t) for t in body.split(",")]
        except ValueError:
            raise BadCycle(f"non-integer point in {text!r}") from None
        for pt in pts:
            if not 1 <= pt <= degree:
                raise BadCycle(f"point {pt} out of range 1..{degree} in {text!r}")
            if pt - 1 in used:
                raise BadCycle(f"repeated point {pt} in {text!r}")
            used.add(pt - 1)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return Permutation(images)


def element_order(g: Permutation) -> int:
    """Least k >= 1 with g^k = identity; the lcm of the cycle lengths."""
    return g.order()


def p_part_element(g: Permutation, p: int) -> Permutation:
    """The p-part of g: the power of g whose order is the p-part of o(g)."""
    n = g.order()
    pk = p_part(n, p)
    m = n // pk
    if pk == 1:
        return Permutation.identity(g.degree)
    return g ** (m * pow(m, -1, pk))


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class: representative, size, and arithmetic flags."""

    representative: Permutation
    size: int
    element_order: int
    is_central: bool
    prime_support: frozenset[int]


class Group:
    """A finite permutation group with its fully enumerated element set.

    Immutable after construction.  ``elements`` is in deterministic
    breadth-first order over generator multiplication with lexicographic
    tie-breaks inside each layer; all derived data is cached lazily.
    """

    __slots__ = ("name", "degree", "generators", "elements", "order",
                 "_element_set", "_cache")

    def __init__(self, name: str, degree: int, generators: tuple[Permutation, ...],
                 elements: tuple[Permutation, ...]):
        self.name = name
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.order = len(elements)
        self._element_set = frozenset(elements)
        self._cache: dict = {}

    def __contains__(self, g: Permutation) -> bool:
        return g in self._element_set

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def element_set(self) -> frozenset[Permutation]:
        return self._element_set

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        return self._memo("abelian", lambda: all(
            a.commutes_with(b) for a in self.generators for b in self.generators))

    def is_subgroup_of(self, other: "Group") -> bool:
        return self.degree == other.degree and self._element_set <= other._element_set

    def same_group(self, other: "Group") -> bool:
        return self.degree == other.degree and self._element_set == other._element_set

    def _memo(self, key: str, fn: Callable):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order}, degree={self.degree})"

    def __reduce__(self):
        return (Group, (self.name, self.degree, self.generators, self.elements))


def make_group(generators: Iterable[Permutation], name: str, *,
               degree: int | None = None,
               max_order: int | None = None) -> Group:
    """Close a generating set under multiplication into a Group.

    Enumeration order is breadth-first over right multiplication by the
    generators, sorting each new layer lexicographically, so the element
    tuple is a pure function of the generating set.
    """
    gens = []
    for g in generators:
        if g not in gens:
            gens.append(g)
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if gens:
        deg = gens[0].degree
        for g in gens:
            if g.degree != deg:
                raise DegreeMismatch(
                    f"generators of {name!r} mix degrees {deg} and {g.degree}")
        if degree is not None and degree != deg:
            raise DegreeMismatch(
                f"stated degree {degree} but generators have degree {deg}")
    else:
        if degree is None:
            raise ValueError("degree is required for an empty generating set")
        deg = degree
    if deg < 1:
        raise ValueError("degree must be >= 1")

    ident = Permutation.identity(deg)
    seen = {ident}
    elements = [ident]
    frontier = [ident]
    while frontier:
        layer = set()
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    layer.add(y)
        if len(seen) + len(layer) > cap:
            raise OrderCapExceeded(name, cap)
        frontier = sorted(layer)
        seen.update(layer)
        elements.extend(frontier)
    return Group(name, deg, tuple(gens), tuple(elements))


def mulclose(gens: Sequence[Permutation], *, cap: int | None = None) -> set[Permutation]:
    """Plain closure of a generating set; returns the element set."""
    if not gens:
        return set()
    ident = Permutation.identity(gens[0].degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    new.append(y)
                    if cap is not None and len(seen) > cap:
                        return seen
        frontier = new
    return seen


def generating_set(elements: Iterable[Permutation]) -> list[Permutation]:
    """A small generating set for a known subgroup, chosen deterministically.

    Scans elements by descending order then lexicographically, adjoining
    any element not yet generated.
    """
    elems = sorted(set(elements), key=lambda g: (-g.order(), g.images))
    gens: list[Permutation] = []
    cur: set[Permutation] = set()
    for x in elems:
        if x.is_identity():
            continue
        if x not in cur:
            gens.append(x)
            cur = mulclose(gens)
    return gens


def subgroup_from_elements(elements: Iterable[Permutation], name: str) -> Group:
    """Build a Group from a set already closed under the operations."""
    elems = set(elements)
    gens = generating_set(elems)
    if not gens:
        deg = next(iter(elems)).degree if elems else 1
        return make_group([], name, degree=deg, max_order=len(elems) + 1)
    G = make_group(gens, name, max_order=len(elems))
    if G.order != len(elems):
        raise ValueError(f"{name!r}: element set of size {len(elems)} is not closed")
    return G


def centralizer(G: Group, x: Permutation) -> Group:
    """The subgroup of G commuting with x, by linear scan."""
    if x not in G:
        raise NotAMember(f"element is not in {G.name!r}")
    elems = [g for g in G.elements if g.commutes_with(x)]
    return subgroup_from_elements(elems, f"C_{G.name}({x.cycle_string()})")


def centralizer_order(G: Group, x: Permutation) -> int:
    """|centralizer(G, x)| without building the subgroup."""
    if x not in G:
        raise NotAMember(f"element is not in {G.name!r}")
    return sum(1 for g in G.elements if g.commutes_with(x))


def center(G: Group) -> Group:
    """Elements commuting with every generator (hence with all of G)."""
    def build():
        gens = G.generators
        elems = [g for g in G.elements if all(g.commutes_with(h) for h in gens)]
        return subgroup_from_elements(elems, f"Z({G.name})")
    return G._memo("center", build)


def _class_orbits(G: Group) -> list[frozenset[Permutation]]:
    def build():
        maps = conjugation_maps(G.generators or (G.identity,))
        unseen = set(G.elements)
        orbits = []
        for x in G.elements:
            if x not in unseen:
                continue
            orbit = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for m in maps:
                    z = bulk_conjugate(y, m)
                    if z not in orbit:
                        orbit.add(z)
                        stack.append(z)
            unseen -= orbit
            orbits.append(frozenset(orbit))
        return orbits
    return G._memo("class_orbits", build)


def conjugacy_classes(G: Group) -> tuple[ConjClass, ...]:
    """All conjugacy classes, sorted by (size, element order, representative)."""
    def build():
        classes = []
        for orbit in _class_orbits(G):
            rep = min(orbit)
            size = len(orbit)
            classes.append(ConjClass(
                representative=rep,
                size=size,
                element_order=rep.order(),
                is_central=(size == 1),
                prime_support=frozenset(prime_factors(size)) if size > 1 else frozenset(),
            ))
        classes.sort(key=lambda c: (c.size, c.element_order, c.representative.images))
        return tuple(classes)
    return G._memo("classes", build)


def class_elements(G: Group, cls: ConjClass) -> frozenset[Permutation]:
    """The full element set of a conjugacy class of G."""
    for orbit in _class_orbits(G):
        if cls.representative in orbit:
            return orbit
    raise NotAMember("representative is not in any class of this group")


def class_of(G: Group, x: Permutation) -> ConjClass:
    """The conjugacy class of x in G."""
    idx = G._memo("class_index", lambda: {
        g: cls for cls in conjugacy_classes(G) for g in class_elements(G, cls)})
    if x not in idx:
        raise NotAMember(f"element is not in {G.name!r}")
    return idx[x]


def element_order_map(G: Group) -> dict[Permutation, int]:
    """Cached map from each element to its order."""
    return G._memo("order_map", lambda: {g: g.order() for g in G.elements})
