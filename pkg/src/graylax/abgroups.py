"""Finite abelian groups as products of cyclic factors, with the
multicategory of arbitrary functions (tight = additive in the first
variable) and its closedness data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .report import SizeOverflow
from .util import FrozenTable


@dataclass(frozen=True)
class AbGroup:
    factors: tuple  # cyclic orders, elements are tuples mod factors

    @property
    def size(self):
        return prod(self.factors) if self.factors else 1

    def __repr__(self):
        if not self.factors:
            return "0"
        return "x".join(f"Z{m}" for m in self.factors)

    def elements(self):
        return itertools.product(*(range(m) for m in self.factors))

    def zero(self):
        return tuple(0 for _ in self.factors)

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.factors))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.factors))

    def scale(self, k, x):
        return tuple((k * a) % m for a, m in zip(x, self.factors))

    def generators(self):
        for i in range(len(self.factors)):
            yield tuple(1 if j == i else 0 for j in range(len(self.factors)))

    def gen_orders(self):
        return self.factors


def cyclic(n) -> AbGroup:
    return AbGroup((n,))


def product(*groups) -> AbGroup:
    return AbGroup(tuple(f for g in groups for f in g.factors))


def direct_power(g: AbGroup, index) -> AbGroup:
    """⊕ over a finite index list; component order follows the list."""
    return AbGroup(tuple(f for _ in index for f in g.factors))


def inject(g: AbGroup, index, pos, x):
    """The injection of x ∈ g into the ``pos``-th component of g^index."""
    k = len(g.factors)
    out = [0] * (k * len(index))
    i = index.index(pos)
    out[i * k : (i + 1) * k] = list(x)
    return tuple(out)


@dataclass(frozen=True)
class AbHom:
    """A homomorphism described by generator images."""

    dom: AbGroup
    cod: AbGroup
    gen_images: tuple  # image of each standard generator of dom

    def __call__(self, x):
        out = self.cod.zero()
        for coeff, img in zip(x, self.gen_images):
            out = self.cod.add(out, self.cod.scale(coeff, img))
        return out

    def is_valid(self):
        for img, m in zip(self.gen_images, self.dom.gen_orders()):
            if self.cod.scale(m, img) != self.cod.zero():
                return False
        return True

    def compose(self, other: "AbHom") -> "AbHom":
        return AbHom(
            other.dom, self.cod,
            tuple(self(other(g)) for g in other.dom.generators()),
        )

    def is_invertible(self):
        if self.dom.size != self.cod.size:
            return False
        if self.dom.size > 4096:
            raise SizeOverflow("invertibility check beyond budget")
        seen = set()
        for x in self.dom.elements():
            seen.add(self(x))
        return len(seen) == self.dom.size


def identity_hom(g: AbGroup) -> AbHom:
    return AbHom(g, g, tuple(g.generators()))


def hom_equal(f: AbHom, g: AbHom) -> bool:
    return (
        f.dom == g.dom and f.cod == g.cod and f.gen_images == g.gen_images
    )


@dataclass(frozen=True)
class AbMultimap:
    """A loose n-ary multimap: an arbitrary function on element tuples.

    Stored extensionally; only usable when the domain product is within
    the enumeration budget.
    """

    doms: tuple
    cod: AbGroup
    table: FrozenTable  # tuple of elements -> element

    @property
    def arity(self):
        return len(self.doms)

    def __call__(self, *args):
        return self.table[tuple(args)]

    def is_tight(self):
        if not self.doms:
            return False
        a = self.doms[0]
        rest = [list(g.elements()) for g in self.doms[1:]]
        for tail in itertools.product(*rest):
            for x in a.elements():
                for y in a.elements():
                    lhs = self.table[(a.add(x, y),) + tail]
                    rhs = self.cod.add(
                        self.table[(x,) + tail], self.table[(y,) + tail]
                    )
                    if lhs != rhs:
                        return False
        return True


def tabulate(doms, cod, fn, budget=200000) -> AbMultimap:
    total = prod(g.size for g in doms) if doms else 1
    if total > budget:
        raise SizeOverflow(f"domain of size {total} exceeds budget {budget}")
    table = {}
    for args in itertools.product(*(g.elements() for g in doms)):
        table[args] = fn(*args)
    return AbMultimap(tuple(doms), cod, FrozenTable(table))


def ab_identity(g: AbGroup) -> AbMultimap:
    return tabulate((g,), g, lambda x: x)


def ab_substitute(g: AbMultimap, i, f) -> AbMultimap:
    """g ∘_i f with f a multimap (or a nullary map = plain element)."""
    if isinstance(f, AbMultimap):
        doms = g.doms[: i - 1] + f.doms + g.doms[i:]

        def fn(*args):
            pre = args[: i - 1]
            mid = args[i - 1 : i - 1 + len(f.doms)]
            post = args[i - 1 + len(f.doms) :]
            return g(*pre, f(*mid), *post)

        return tabulate(doms, g.cod, fn)
    doms = g.doms[: i - 1] + g.doms[i:]

    def fn(*args):
        return g(*args[: i - 1], f, *args[i - 1 :])

    return tabulate(doms, g.cod, fn)


def enumerate_multimaps(doms, cod, budget=2 * 10**6):
    """All loose multimaps; |cod|^(∏|doms|) of them."""
    total_dom = prod(g.size for g in doms) if doms else 1
    count = cod.size**total_dom
    if count > budget:
        raise SizeOverflow(f"{count} multimaps exceed budget {budget}")
    keys = list(itertools.product(*(g.elements() for g in doms)))
    for images in itertools.product(cod.elements(), repeat=len(keys)):
        yield AbMultimap(tuple(doms), cod, FrozenTable(dict(zip(keys, images))))


def internal_hom(b: AbGroup, c: AbGroup) -> AbGroup:
    """[b,c]: the abelian group of functions b → c, pointwise structure."""
    return direct_power(c, sorted(b.elements()))


def hom_elt_as_function(b: AbGroup, c: AbGroup, elt):
    """Decode an element of [b,c] into the function it represents."""
    index = sorted(b.elements())
    k = len(c.factors)

    def fn(x):
        i = index.index(x)
        return tuple(elt[i * k : (i + 1) * k])

    return fn


def function_as_hom_elt(b: AbGroup, c: AbGroup, fn):
    index = sorted(b.elements())
    out = []
    for x in index:
        out.extend(fn(x))
    return tuple(out)


def ab_ev(b: AbGroup, c: AbGroup) -> AbMultimap:
    """The evaluation binary map [b,c], b → c."""
    h = internal_hom(b, c)

    def fn(e, x):
        return hom_elt_as_function(b, c, e)(x)

    return tabulate((h, b), c, fn)


def tensor(a: AbGroup, b: AbGroup) -> AbGroup:
    """The tight binary map classifier a ⊗ b = a^(underlying set of b)."""
    return direct_power(a, sorted(b.elements()))


class LazyBinary:
    """A binary map given by a rule instead of a table (for classifiers
    whose domains are too large to tabulate)."""

    def __init__(self, doms, cod, fn):
        self.doms = tuple(doms)
        self.cod = cod
        self._fn = fn
        self.arity = 2

    def __call__(self, x, y):
        return self._fn(x, y)

    def tabulated(self, budget=200000) -> AbMultimap:
        return tabulate(self.doms, self.cod, self._fn, budget)


def tensor_theta(a: AbGroup, b: AbGroup) -> LazyBinary:
    """θ_{a,b}: a, b → a⊗b, (x, β) ↦ injection of x at component β."""
    ab_ = tensor(a, b)
    index = sorted(b.elements())
    lookup = {beta: i for i, beta in enumerate(index)}
    k = len(a.factors)

    def fn(x, beta):
        out = [0] * (k * len(index))
        i = lookup[beta]
        out[i * k : (i + 1) * k] = list(x)
        return tuple(out)

    return LazyBinary((a, b), ab_, fn)
