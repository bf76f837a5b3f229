"""Brute-force enumeration oracles over finite fixtures.

Everything here enumerates complete, axiom-filtered sets of structures in
a deterministic (lexicographic over interned identifiers) order, guarded
by a candidate budget.
"""

from __future__ import annotations

import itertools

from .pseudomaps import Pseudomap, _cocycle_pairs, validate_pseudomap
from .report import BudgetExceeded
from .transforms import (
    AdjointEquivalence,
    LaxTransformation,
    Modification,
    Perturbation,
    PseudoTransformation,
    validate_adjoint_equivalence,
    validate_lax_transformation,
    validate_modification,
    validate_perturbation,
    validate_pseudo_transformation,
)
from .util import FrozenTable

DEFAULT_BUDGET = 10**6


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0
        self.found = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(
                f"enumeration exceeded budget {self.limit}", partial_count=self.found
            )


def _sorted1(cat, x=None, y=None):
    return sorted(cat.onecells(x=x, y=y))


def _two_between(cat, u, v):
    return sorted(
        p for p in cat.twocells() if cat.src1(p) == u and cat.tgt1(p) == v
    )


def _three_between(cat, p, q):
    return sorted(
        t for t in cat.threecells() if cat.src2(t) == p and cat.tgt2(t) == q
    )


def _inv_two_between(cat, u, v):
    return [p for p in _two_between(cat, u, v) if cat.has_inv2(p)]


def _inv_three_between(cat, p, q):
    return [t for t in _three_between(cat, p, q) if cat.has_inv3(t)]


def enumerate_pseudomaps(dom, cod, budget=DEFAULT_BUDGET):
    """All pseudomaps dom → cod, deterministically ordered."""
    bud = _Budget(budget)
    out = []
    objs = sorted(dom.objects)
    ones = [f for f in sorted(dom.onecells()) if f != dom.id_1(dom.src0(f))]
    twos = [p for p in sorted(dom.twocells()) if not dom.is_id2(p)]
    threes = [t for t in sorted(dom.threecells()) if not dom.is_id3(t)]

    for m0_vals in itertools.product(sorted(cod.objects), repeat=len(objs)):
        bud.spend()
        m0 = dict(zip(objs, m0_vals))
        one_choices = []
        for f in ones:
            x, y = dom.one_loc[f]
            cands = _sorted1(cod, x=m0[x], y=m0[y])
            one_choices.append(cands)
        for picks in itertools.product(*one_choices):
            bud.spend()
            m1 = dict(zip(ones, picks))
            for x in objs:
                m1[dom.id_1(x)] = cod.id_1(m0[x])
            coc_keys = [
                (f2, f1)
                for f2, f1 in _cocycle_pairs(dom)
                if not (
                    f1 == dom.id_1(dom.src0(f1)) or f2 == dom.id_1(dom.src0(f2))
                )
            ]
            coc_choices = []
            for f2, f1 in coc_keys:
                u = cod.comp1(m1[f2], m1[f1])
                v = m1[dom.comp1(f2, f1)]
                coc_choices.append(_inv_two_between(cod, u, v))
            two_choices = []
            for p in twos:
                u, v = m1[dom.src1(p)], m1[dom.tgt1(p)]
                two_choices.append(_two_between(cod, u, v))
            for coc_picks in itertools.product(*coc_choices):
                for two_picks in itertools.product(*two_choices):
                    bud.spend()
                    m2 = dict(zip(twos, two_picks))
                    for f in m1:
                        m2[dom.id_2(f)] = cod.id_2(m1[f])
                    coc = dict(zip(coc_keys, coc_picks))
                    for f2, f1 in _cocycle_pairs(dom):
                        if (f2, f1) not in coc:
                            coc[(f2, f1)] = cod.id_2(m1[dom.comp1(f2, f1)])
                    three_choices = []
                    for t in threes:
                        u, v = m2[dom.src2(t)], m2[dom.tgt2(t)]
                        three_choices.append(_three_between(cod, u, v))
                    for three_picks in itertools.product(*three_choices):
                        bud.spend()
                        m3 = dict(zip(threes, three_picks))
                        for p in m2:
                            m3[dom.id_3(p)] = cod.id_3(m2[p])
                        cand = Pseudomap(
                            dom=dom,
                            cod=cod,
                            m0=FrozenTable(m0),
                            m1=FrozenTable(m1),
                            m2=FrozenTable(m2),
                            m3=FrozenTable(m3),
                            coc=FrozenTable(coc),
                        )
                        if validate_pseudomap(cand).passed:
                            out.append(cand)
                            bud.found += 1
    return out


def enumerate_lax_transformations(F: Pseudomap, G: Pseudomap, budget=DEFAULT_BUDGET):
    """Complete set of lax transformations F → G on finite fixtures."""
    bud = _Budget(budget)
    dom, cod = F.dom, F.cod
    out = []
    objs = sorted(dom.objects)
    ones = [f for f in sorted(dom.onecells()) if f != dom.id_1(dom.src0(f))]
    twos = [p for p in sorted(dom.twocells()) if not dom.is_id2(p)]

    comp0_choices = [
        _sorted1(cod, x=F.on0(x), y=G.on0(x)) for x in objs
    ]
    for c0 in itertools.product(*comp0_choices):
        bud.spend()
        comp0 = dict(zip(objs, c0))
        comp1_choices = []
        for f in ones:
            x, y = dom.one_loc[f]
            u = cod.comp1(G.on1(f), comp0[x])
            v = cod.comp1(comp0[y], F.on1(f))
            comp1_choices.append(_two_between(cod, u, v))
        for c1 in itertools.product(*comp1_choices):
            bud.spend()
            comp1 = dict(zip(ones, c1))
            for x in objs:
                comp1[dom.id_1(x)] = cod.id_2(comp0[x])
            coc_keys = [
                (f2, f1)
                for f2, f1 in _cocycle_pairs(dom)
                if not (
                    f1 == dom.id_1(dom.src0(f1)) or f2 == dom.id_1(dom.src0(f2))
                )
            ]
            coc_choices = []
            for f2, f1 in coc_keys:
                x = dom.src0(f1)
                z = dom.tgt0(f2)
                f21 = dom.comp1(f2, f1)
                src = cod.vcomp2(
                    cod.lw2(comp0[z], F.cocycle(f2, f1)),
                    cod.vcomp2(
                        cod.rw2(comp1[f2], F.on1(f1)),
                        cod.lw2(G.on1(f2), comp1[f1]),
                    ),
                )
                tgt = cod.vcomp2(
                    comp1[f21], cod.rw2(G.cocycle(f2, f1), comp0[x])
                )
                coc_choices.append(_inv_three_between(cod, src, tgt))
            two_choices = []
            for phi in twos:
                f, f2 = dom.src1(phi), dom.tgt1(phi)
                x, y = dom.two_loc[phi]
                src = cod.vcomp2(cod.lw2(comp0[y], F.on2(phi)), comp1[f])
                tgt = cod.vcomp2(comp1[f2], cod.rw2(G.on2(phi), comp0[x]))
                two_choices.append(_three_between(cod, src, tgt))
            for cocp in itertools.product(*coc_choices):
                for c2 in itertools.product(*two_choices):
                    bud.spend()
                    comp2 = dict(zip(twos, c2))
                    for f in comp1:
                        comp2[dom.id_2(f)] = cod.id_3(comp1[f])
                    coc = dict(zip(coc_keys, cocp))
                    for f2, f1 in _cocycle_pairs(dom):
                        if (f2, f1) not in coc:
                            if f1 == dom.id_1(dom.src0(f1)):
                                coc[(f2, f1)] = cod.id_3(comp1[f2])
                            else:
                                coc[(f2, f1)] = cod.id_3(comp1[f1])
                    cand = LaxTransformation(
                        F, G,
                        FrozenTable(comp0), FrozenTable(comp1),
                        FrozenTable(comp2), FrozenTable(coc),
                    )
                    if validate_lax_transformation(cand).passed:
                        out.append(cand)
                        bud.found += 1
    return out


def enumerate_modifications(a: LaxTransformation, b: LaxTransformation,
                            budget=DEFAULT_BUDGET):
    bud = _Budget(budget)
    dom, cod = a.src.dom, a.src.cod
    F, G = a.src, a.tgt
    out = []
    objs = sorted(dom.objects)
    ones = [f for f in sorted(dom.onecells()) if f != dom.id_1(dom.src0(f))]
    comp0_choices = [_two_between(cod, a.at0(x), b.at0(x)) for x in objs]
    for c0 in itertools.product(*comp0_choices):
        bud.spend()
        comp0 = dict(zip(objs, c0))
        comp1_choices = []
        for f in ones:
            x, y = dom.one_loc[f]
            src = cod.vcomp2(b.at1(f), cod.lw2(G.on1(f), comp0[x]))
            tgt = cod.vcomp2(cod.rw2(comp0[y], F.on1(f)), a.at1(f))
            comp1_choices.append(_three_between(cod, src, tgt))
        for c1 in itertools.product(*comp1_choices):
            bud.spend()
            comp1 = dict(zip(ones, c1))
            for x in objs:
                comp1[dom.id_1(x)] = cod.id_3(comp0[x])
            cand = Modification(a, b, FrozenTable(comp0), FrozenTable(comp1))
            if validate_modification(cand).passed:
                out.append(cand)
                bud.found += 1
    return out


def enumerate_perturbations(m1: Modification, m2: Modification,
                            budget=DEFAULT_BUDGET):
    bud = _Budget(budget)
    dom, cod = m1.src.src.dom, m1.src.src.cod
    out = []
    objs = sorted(dom.objects)
    choices = [_three_between(cod, m1.at0(x), m2.at0(x)) for x in objs]
    for c0 in itertools.product(*choices):
        bud.spend()
        cand = Perturbation(m1, m2, FrozenTable(dict(zip(objs, c0))))
        if validate_perturbation(cand).passed:
            out.append(cand)
            bud.found += 1
    return out


def enumerate_adjoint_equivalences(cat, right, budget=DEFAULT_BUDGET):
    """All adjoint equivalences with the given right adjoint."""
    bud = _Budget(budget)
    out = []
    u, v = cat.src1(right), cat.tgt1(right)
    for left in _two_between(cat, v, u):
        for unit in _inv_three_between(
            cat, cat.id_2(v), cat.vcomp2(right, left)
        ):
            for counit in _inv_three_between(
                cat, cat.vcomp2(left, right), cat.id_2(u)
            ):
                bud.spend()
                cand = AdjointEquivalence(cat, left, right, unit, counit)
                if validate_adjoint_equivalence(cand).passed:
                    out.append(cand)
                    bud.found += 1
    return out


def enumerate_pseudo_transformations(F: Pseudomap, G: Pseudomap,
                                     budget=DEFAULT_BUDGET):
    bud = _Budget(budget)
    dom, cod = F.dom, F.cod
    out = []
    for base in enumerate_lax_transformations(F, G, budget):
        ok = all(cod.has_inv3(base.at2(phi)) for phi in dom.twocells())
        if not ok:
            continue
        ones = sorted(dom.onecells())
        adj_choices = []
        for f in ones:
            if f == dom.id_1(dom.src0(f)):
                adj_choices.append(
                    [
                        _identity_ae(cod, cod.src1(base.at1(f)))
                    ]
                )
            else:
                adj_choices.append(
                    enumerate_adjoint_equivalences(cod, base.at1(f), budget)
                )
        for picks in itertools.product(*adj_choices):
            bud.spend()
            cand = PseudoTransformation(base, FrozenTable(dict(zip(ones, picks))))
            if validate_pseudo_transformation(cand).passed:
                out.append(cand)
                bud.found += 1
    return out


def _identity_ae(cat, onecell):
    i = cat.id_2(onecell)
    return AdjointEquivalence(cat, i, i, cat.id_3(i), cat.id_3(i))
