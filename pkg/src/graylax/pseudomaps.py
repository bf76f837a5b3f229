"""Pseudomaps between Gray-categories: cell-wise 3-graph maps with an
invertible cocycle over composable 1-cell pairs.

The codomain only needs to expose the Gray operations, so the same
validator runs against a table-backed category or against a virtual
mapping space (see :mod:`graylax.homops`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .report import DomainMismatch, MalformedPresentation, ValidationReport
from .util import FrozenTable


@dataclass(frozen=True)
class Pseudomap:
    dom: object
    cod: object
    m0: FrozenTable  # objects
    m1: FrozenTable  # 1-cells
    m2: FrozenTable  # 2-cells
    m3: FrozenTable  # 3-cells
    coc: FrozenTable  # (f2, f1) -> invertible 2-cell  F f2 ∘ F f1 -> F(f2 f1)

    def __repr__(self):
        kind = "strict" if self.is_strict() else "pseudo"
        return f"<{kind} map {id(self):#x}>"

    def on0(self, x):
        return self.m0[x]

    def on1(self, f):
        return self.m1[f]

    def on2(self, phi):
        return self.m2[phi]

    def on3(self, lam):
        return self.m3[lam]

    def cocycle(self, f2, f1):
        return self.coc[(f2, f1)]

    def is_strict(self) -> bool:
        cod = self.cod
        return all(cod.is_id2(v) for v in self.coc.values())


def _cocycle_pairs(dom):
    for f2 in dom.onecells():
        for f1 in dom.onecells(y=dom.src0(f2)):
            yield f2, f1


def make_pseudomap(dom, cod, m0, m1, m2=None, m3=None, coc=None) -> Pseudomap:
    """Assemble a pseudomap, filling identity values and identity cocycles.

    ``m2``/``m3``/``coc`` only need entries for non-identity cells; anything
    else is derived (identities to identities, missing cocycles to identity
    2-cells).
    """
    m0 = dict(m0)
    m1 = dict(m1)
    m2 = dict(m2 or {})
    m3 = dict(m3 or {})
    coc = dict(coc or {})
    for x in dom.objects:
        m1.setdefault(dom.id_1(x), cod.id_1(m0[x]))
    for f in dom.onecells():
        if f not in m1:
            raise MalformedPresentation(f"no image for 1-cell {f!r}")
        m2.setdefault(dom.id_2(f), cod.id_2(m1[f]))
    for phi in dom.twocells():
        if phi not in m2:
            raise MalformedPresentation(f"no image for 2-cell {phi!r}")
        m3.setdefault(dom.id_3(phi), cod.id_3(m2[phi]))
    for lam in dom.threecells():
        if lam not in m3:
            raise MalformedPresentation(f"no image for 3-cell {lam!r}")
    for f2, f1 in _cocycle_pairs(dom):
        if (f2, f1) not in coc:
            comp = cod.comp1(m1[f2], m1[f1])
            whole = m1[dom.comp1(f2, f1)]
            if comp != whole:
                raise MalformedPresentation(
                    f"missing cocycle at ({f2!r},{f1!r}) with F{f2}∘F{f1} ≠ F({f2}∘{f1})"
                )
            coc[(f2, f1)] = cod.id_2(comp)
    return Pseudomap(
        dom=dom,
        cod=cod,
        m0=FrozenTable(m0),
        m1=FrozenTable(m1),
        m2=FrozenTable(m2),
        m3=FrozenTable(m3),
        coc=FrozenTable(coc),
    )


def identity_pseudomap(g) -> Pseudomap:
    return make_pseudomap(
        g,
        g,
        {x: x for x in g.objects},
        {f: f for f in g.onecells()},
        {p: p for p in g.twocells()},
        {t: t for t in g.threecells()},
    )


def strict_pseudomap(dom, cod, m0, m1, m2=None, m3=None) -> Pseudomap:
    return make_pseudomap(dom, cod, m0, m1, m2, m3, coc=None)


# ---------------------------------------------------------------------------


def validate_pseudomap(F: Pseudomap) -> ValidationReport:
    """Check the nine pseudomap axioms, each with its own label."""
    rep = ValidationReport()
    dom, cod = F.dom, F.cod

    ok_boundaries = _check_graph_map(F, rep)
    if not ok_boundaries:
        return rep

    # (i) preservation of identity 1-cells
    for x in dom.objects:
        rep.check("pmap/i-id1", (x,), F.on1(dom.id_1(x)) == cod.id_1(F.on0(x)))

    # (ii) locally a 2-functor
    for f in dom.onecells():
        rep.check("pmap/ii-id2", (f,), F.on2(dom.id_2(f)) == cod.id_2(F.on1(f)))
    for phi in dom.twocells():
        rep.check(
            "pmap/ii-id3", (phi,), F.on3(dom.id_3(phi)) == cod.id_3(F.on2(phi))
        )
    for psi in dom.twocells():
        for phi in dom.twocells():
            if dom.two_loc[psi] == dom.two_loc[phi] and dom.src1(psi) == dom.tgt1(phi):
                _g(rep, "pmap/ii-vcomp2", (psi, phi),
                   lambda: F.on2(dom.vcomp2(psi, phi)),
                   lambda: cod.vcomp2(F.on2(psi), F.on2(phi)))
    for t in dom.threecells():
        for s in dom.threecells():
            if dom.three_loc[t] == dom.three_loc[s] and dom.src2(t) == dom.tgt2(s):
                _g(rep, "pmap/ii-vcomp3", (t, s),
                   lambda: F.on3(dom.vcomp3(t, s)),
                   lambda: cod.vcomp3(F.on3(t), F.on3(s)))
    for psi in dom.twocells():
        for lam in dom.threecells():
            if dom.two_loc[psi] != dom.two_loc[dom.src2(lam)]:
                continue
            if dom.src1(psi) == dom.tgt1(dom.src2(lam)):
                _g(rep, "pmap/ii-hwl", (psi, lam),
                   lambda: F.on3(dom.hwl(psi, lam)),
                   lambda: cod.hwl(F.on2(psi), F.on3(lam)))
            if dom.tgt1(psi) == dom.src1(dom.src2(lam)):
                _g(rep, "pmap/ii-hwr", (lam, psi),
                   lambda: F.on3(dom.hwr(lam, psi)),
                   lambda: cod.hwr(F.on3(lam), F.on2(psi)))

    # cocycle boundaries and invertibility
    for f2, f1 in _cocycle_pairs(dom):
        c = F.coc.get((f2, f1))
        if c is None:
            rep.fail("pmap/cocycle-total", (f2, f1))
            continue
        try:
            ok = (
                cod.src1(c) == cod.comp1(F.on1(f2), F.on1(f1))
                and cod.tgt1(c) == F.on1(dom.comp1(f2, f1))
            )
        except (KeyError, MalformedPresentation):
            ok = False
        rep.check("pmap/cocycle-boundary", (f2, f1), ok)
        if ok:
            rep.check("pmap/cocycle-invertible", (f2, f1), cod.has_inv2(c))

    # (iii) compatibility of the cocycle with composition of 1-cells
    for f3 in dom.onecells():
        for f2 in dom.onecells(y=dom.src0(f3)):
            for f1 in dom.onecells(y=dom.src0(f2)):
                _g(rep, "pmap/iii-cocycle-comp", (f3, f2, f1),
                   lambda: cod.vcomp2(
                       F.cocycle(f3, dom.comp1(f2, f1)),
                       cod.lw2(F.on1(f3), F.cocycle(f2, f1)),
                   ),
                   lambda: cod.vcomp2(
                       F.cocycle(dom.comp1(f3, f2), f1),
                       cod.rw2(F.cocycle(f3, f2), F.on1(f1)),
                   ))

    # (iv) degeneracy of the cocycle
    for f in dom.onecells():
        x, y = dom.one_loc[f]
        rep.check("pmap/iv-cocycle-degeneracy", (f,),
                  F.cocycle(dom.id_1(y), f) == cod.id_2(F.on1(f))
                  and F.cocycle(f, dom.id_1(x)) == cod.id_2(F.on1(f)))

    # (v) compatibility of the cocycle with whiskering of 2-cells
    for psi in dom.twocells():
        f2, f2p = dom.src1(psi), dom.tgt1(psi)
        for f1 in dom.onecells(y=dom.two_loc[psi][0]):
            _g(rep, "pmap/v-whisk2-L", (psi, f1),
               lambda: cod.vcomp2(F.on2(dom.rw2(psi, f1)), F.cocycle(f2, f1)),
               lambda: cod.vcomp2(
                   F.cocycle(f2p, f1), cod.rw2(F.on2(psi), F.on1(f1))
               ))
    for phi in dom.twocells():
        f1, f1p = dom.src1(phi), dom.tgt1(phi)
        for f2 in dom.onecells(x=dom.two_loc[phi][1]):
            _g(rep, "pmap/v-whisk2-R", (f2, phi),
               lambda: cod.vcomp2(F.on2(dom.lw2(f2, phi)), F.cocycle(f2, f1)),
               lambda: cod.vcomp2(
                   F.cocycle(f2, f1p), cod.lw2(F.on1(f2), F.on2(phi))
               ))

    # (vi) compatibility of the cocycle with whiskering of 3-cells
    for lam in dom.threecells():
        psi, psip = dom.src2(lam), dom.tgt2(lam)
        f2, f2p = dom.src1(psi), dom.tgt1(psi)
        for f1 in dom.onecells(y=dom.two_loc[psi][0]):
            _g(rep, "pmap/vi-whisk3-L", (lam, f1),
               lambda: cod.hwr(F.on3(dom.rw3(lam, f1)), F.cocycle(f2, f1)),
               lambda: cod.hwl(
                   F.cocycle(f2p, f1), cod.rw3(F.on3(lam), F.on1(f1))
               ))
        for f3 in dom.onecells(x=dom.two_loc[psi][1]):
            _g(rep, "pmap/vi-whisk3-R", (f3, lam),
               lambda: cod.hwr(F.on3(dom.lw3(f3, lam)), F.cocycle(f3, f2)),
               lambda: cod.hwl(
                   F.cocycle(f3, f2p), cod.lw3(F.on1(f3), F.on3(lam))
               ))

    # (vii) compatibility of F with the interchange
    for psi, phi in dom.horizontally_adjacent():
        f1, f1p = dom.src1(phi), dom.tgt1(phi)
        f2, f2p = dom.src1(psi), dom.tgt1(psi)
        _g(rep, "pmap/vii-interchange", (psi, phi),
           lambda: cod.hwr(F.on3(dom.interchange(psi, phi)), F.cocycle(f2, f1)),
           lambda: cod.hwl(
               F.cocycle(f2p, f1p), cod.interchange(F.on2(psi), F.on2(phi))
           ))

    # (viii) interchange of two cocycle cells is an identity 3-cell
    def _is_identity_interchange(psi, phi):
        c = cod.interchange(psi, phi)
        return c == cod.id_3(cod.src2(c))

    for f2, f1 in _cocycle_pairs(dom):
        for f4 in dom.onecells():
            for f3 in dom.onecells(x=dom.tgt0(f2), y=dom.src0(f4)):
                _g(rep, "pmap/viii-cocycle-interchange", (f4, f3, f2, f1),
                   lambda: _is_identity_interchange(
                       F.cocycle(f4, f3), F.cocycle(f2, f1)),
                   lambda: True)

    # (ix) interchange of a cocycle cell with the image of a 2-cell
    for phi in dom.twocells():
        px, py = dom.two_loc[phi]
        for f3 in dom.onecells(x=py):
            for f2 in dom.onecells(x=dom.tgt0(f3)):
                _g(rep, "pmap/ix-cocycle-2cell", (f2, f3, phi),
                   lambda: _is_identity_interchange(
                       F.cocycle(f2, f3), F.on2(phi)),
                   lambda: True)
        for f1 in dom.onecells(y=px):
            for f0 in dom.onecells(y=dom.src0(f1)):
                _g(rep, "pmap/ix-2cell-cocycle", (phi, f1, f0),
                   lambda: _is_identity_interchange(
                       F.on2(phi), F.cocycle(f1, f0)),
                   lambda: True)
    return rep


def _g(rep, axiom, wit, lhs_fn, rhs_fn):
    try:
        lhs = lhs_fn()
        rhs = rhs_fn()
    except (KeyError, MalformedPresentation):
        rep.check(axiom, wit, False)
        return
    rep.check(axiom, wit, lhs == rhs and lhs is not None)


def _check_graph_map(F: Pseudomap, rep: ValidationReport) -> bool:
    dom, cod = F.dom, F.cod
    ok = True
    for x in dom.objects:
        if x not in F.m0:
            rep.fail("pmap/graph-total-0", (x,))
            ok = False
    for f in dom.onecells():
        v = F.m1.get(f)
        if v is None:
            rep.fail("pmap/graph-total-1", (f,))
            ok = False
            continue
        x, y = dom.one_loc[f]
        try:
            good = cod.src0(v) == F.on0(x) and cod.tgt0(v) == F.on0(y)
        except KeyError:
            good = False
        rep.check("pmap/graph-boundary-1", (f,), good)
        ok = ok and good
    for phi in dom.twocells():
        v = F.m2.get(phi)
        if v is None:
            rep.fail("pmap/graph-total-2", (phi,))
            ok = False
            continue
        try:
            good = cod.src1(v) == F.on1(dom.src1(phi)) and cod.tgt1(v) == F.on1(
                dom.tgt1(phi)
            )
        except KeyError:
            good = False
        rep.check("pmap/graph-boundary-2", (phi,), good)
        ok = ok and good
    for lam in dom.threecells():
        v = F.m3.get(lam)
        if v is None:
            rep.fail("pmap/graph-total-3", (lam,))
            ok = False
            continue
        try:
            good = cod.src2(v) == F.on2(dom.src2(lam)) and cod.tgt2(v) == F.on2(
                dom.tgt2(lam)
            )
        except KeyError:
            good = False
        rep.check("pmap/graph-boundary-3", (lam,), good)
        ok = ok and good
    return ok


# ---------------------------------------------------------------------------


def compose_pseudomaps(G: Pseudomap, F: Pseudomap) -> Pseudomap:
    """G∘F with composite cocycle  G²_{Ff₂,Ff₁} then G(F²_{f₂,f₁})."""
    if F.cod is not G.dom and F.cod != G.dom:
        raise DomainMismatch("cod(F) must be dom(G)")
    dom, cod = F.dom, G.cod
    coc = {}
    for f2, f1 in _cocycle_pairs(dom):
        coc[(f2, f1)] = cod.vcomp2(
            G.on2(F.cocycle(f2, f1)),
            G.cocycle(F.on1(f2), F.on1(f1)),
        )
    return Pseudomap(
        dom=dom,
        cod=cod,
        m0=FrozenTable({x: G.on0(v) for x, v in F.m0.items()}),
        m1=FrozenTable({f: G.on1(v) for f, v in F.m1.items()}),
        m2=FrozenTable({p: G.on2(v) for p, v in F.m2.items()}),
        m3=FrozenTable({t: G.on3(v) for t, v in F.m3.items()}),
        coc=FrozenTable(coc),
    )


def co_dual_pseudomap(F: Pseudomap, co_dom, co_cod) -> Pseudomap:
    """The same cell action between the co-duals; cocycle inverted."""
    coc = {}
    for key, c in F.coc.items():
        coc[key] = F.cod.inv2(c)
    return Pseudomap(
        dom=co_dom,
        cod=co_cod,
        m0=F.m0,
        m1=F.m1,
        m2=F.m2,
        m3=F.m3,
        coc=FrozenTable(coc),
    )
