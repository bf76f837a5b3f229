"""Lax, oplax and pseudo transformations, modifications, perturbations and
adjoint equivalences: validators, dualities and enumeration oracles.

All validators are written against the Gray operations of the codomain, so
they run unchanged over finite tables and over virtual mapping spaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .pasting import Paster
from .pseudomaps import Pseudomap, _cocycle_pairs
from .report import (
    BudgetExceeded,
    DomainMismatch,
    MalformedPresentation,
    NonInvertible,
    ValidationReport,
)
from .util import FrozenTable


@dataclass(frozen=True)
class LaxTransformation:
    src: Pseudomap
    tgt: Pseudomap
    comp0: FrozenTable  # x -> 1-cell  α_x : Fx -> Gx
    comp1: FrozenTable  # f -> 2-cell  α_f : Gf∘α_x -> α_y∘Ff
    comp2: FrozenTable  # phi -> 3-cell α_phi
    coc: FrozenTable  # (f2, f1) -> invertible 3-cell α²_{f2,f1}

    def __repr__(self):
        return f"<laxtr {hex(abs(hash(self)) % 16**6)}>"

    def at0(self, x):
        return self.comp0[x]

    def at1(self, f):
        return self.comp1[f]

    def at2(self, phi):
        return self.comp2[phi]

    def cocycle(self, f2, f1):
        return self.coc[(f2, f1)]


@dataclass(frozen=True)
class Modification:
    src: LaxTransformation
    tgt: LaxTransformation
    comp0: FrozenTable  # x -> 2-cell Λ_x
    comp1: FrozenTable  # f -> 3-cell Λ_f

    def __repr__(self):
        return f"<mod {hex(abs(hash(self)) % 16**6)}>"

    def at0(self, x):
        return self.comp0[x]

    def at1(self, f):
        return self.comp1[f]


@dataclass(frozen=True)
class Perturbation:
    src: Modification
    tgt: Modification
    comp0: FrozenTable  # x -> 3-cell θ_x

    def __repr__(self):
        return f"<pert {hex(abs(hash(self)) % 16**6)}>"

    def at0(self, x):
        return self.comp0[x]


@dataclass(frozen=True)
class AdjointEquivalence:
    """An adjoint equivalence (counit, left ⊣ right, unit) inside one hom.

    ``right : u -> v`` and ``left : v -> u`` are 2-cells of ``cat``; the
    unit is a 3-cell  1_v -> right·left  and the counit a 3-cell
    left·right -> 1_u... with the conventions of the validator below.
    """

    cat: object
    left: object
    right: object
    unit: object
    counit: object

    def __repr__(self):
        return f"<adjeq {hex(abs(hash(self)) % 16**6)}>"


@dataclass(frozen=True)
class PseudoTransformation:
    base: LaxTransformation
    adjoints: FrozenTable  # f -> AdjointEquivalence with right = α_f

    def __repr__(self):
        return f"<psdtr {hex(abs(hash(self)) % 16**6)}>"


# ---------------------------------------------------------------------------
# constructors


def make_lax_transformation(src, tgt, comp0, comp1=None, comp2=None, coc=None):
    """Assemble a lax transformation, filling the forced identity components."""
    if src.dom != tgt.dom or src.cod != tgt.cod:
        raise DomainMismatch("parallel pseudomaps required")
    dom, cod = src.dom, src.cod
    comp0 = dict(comp0)
    comp1 = dict(comp1 or {})
    comp2 = dict(comp2 or {})
    coc = dict(coc or {})
    for x in dom.objects:
        comp1.setdefault(dom.id_1(x), cod.id_2(comp0[x]))
    for f in dom.onecells():
        if f not in comp1:
            raise MalformedPresentation(f"no component at 1-cell {f!r}")
        comp2.setdefault(dom.id_2(f), cod.id_3(comp1[f]))
    for phi in dom.twocells():
        if phi not in comp2:
            raise MalformedPresentation(f"no component at 2-cell {phi!r}")
    for f2, f1 in _cocycle_pairs(dom):
        if (f2, f1) in coc:
            continue
        if f1 == dom.id_1(dom.src0(f1)):
            coc[(f2, f1)] = cod.id_3(comp1[f2])
        elif f2 == dom.id_1(dom.src0(f2)):
            coc[(f2, f1)] = cod.id_3(comp1[f1])
        else:
            raise MalformedPresentation(f"no cocycle at ({f2!r},{f1!r})")
    return LaxTransformation(
        src=src,
        tgt=tgt,
        comp0=FrozenTable(comp0),
        comp1=FrozenTable(comp1),
        comp2=FrozenTable(comp2),
        coc=FrozenTable(coc),
    )


def identity_transformation(F: Pseudomap) -> LaxTransformation:
    dom, cod = F.dom, F.cod
    return LaxTransformation(
        F,
        F,
        FrozenTable({x: cod.id_1(F.on0(x)) for x in dom.objects}),
        FrozenTable({f: cod.id_2(F.on1(f)) for f in dom.onecells()}),
        FrozenTable({p: cod.id_3(F.on2(p)) for p in dom.twocells()}),
        FrozenTable(
            {(f2, f1): cod.id_3(F.cocycle(f2, f1)) for f2, f1 in _cocycle_pairs(dom)}
        ),
    )


def make_modification(src: LaxTransformation, tgt: LaxTransformation, comp0, comp1=None):
    if src.src != tgt.src or src.tgt != tgt.tgt:
        raise DomainMismatch("parallel lax transformations required")
    dom, cod = src.src.dom, src.src.cod
    comp0 = dict(comp0)
    comp1 = dict(comp1 or {})
    for x in dom.objects:
        if x not in comp0:
            raise MalformedPresentation(f"no component at object {x!r}")
        f = dom.id_1(x)
        if f not in comp1:
            # degenerate square: Λ_{1_x} is the identity 3-cell on Λ_x
            # whiskered into the square (source and target 2-cells agree).
            comp1[f] = cod.id_3(comp0[x])
    for f in dom.onecells():
        if f not in comp1:
            raise MalformedPresentation(f"no component at 1-cell {f!r}")
    return Modification(src, tgt, FrozenTable(comp0), FrozenTable(comp1))


def identity_modification(a: LaxTransformation) -> Modification:
    dom, cod = a.src.dom, a.src.cod
    return Modification(
        a,
        a,
        FrozenTable({x: cod.id_2(a.at0(x)) for x in dom.objects}),
        FrozenTable({f: cod.id_3(a.at1(f)) for f in dom.onecells()}),
    )


def make_perturbation(src: Modification, tgt: Modification, comp0):
    if src.src != tgt.src or src.tgt != tgt.tgt:
        raise DomainMismatch("parallel modifications required")
    return Perturbation(src, tgt, FrozenTable(dict(comp0)))


def identity_perturbation(m: Modification) -> Perturbation:
    dom, cod = m.src.src.dom, m.src.src.cod
    return Perturbation(
        m, m, FrozenTable({x: cod.id_3(m.at0(x)) for x in dom.objects})
    )


# ---------------------------------------------------------------------------
# validators


def _g(rep, axiom, wit, lhs_fn, rhs_fn):
    try:
        lhs = lhs_fn()
        rhs = rhs_fn()
    except (KeyError, MalformedPresentation, NonInvertible):
        rep.check(axiom, wit, False)
        return
    rep.check(axiom, wit, lhs == rhs and lhs is not None)


def lax_source_path(a: LaxTransformation, f2, f1) -> Paster:
    """The common source 2-cell path of the α² diagrams: the word
    (α_x, Gf1, Gf2) rewritten by 1∘α_{f1}, α_{f2}∘1, 1∘F²_{f2,f1}."""
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    x = dom.src0(f1)
    z = dom.tgt0(f2)
    p = Paster(cod, (a.at0(x), G.on1(f1), G.on1(f2)))
    p.push(a.at1(f1), 0, 2, (F.on1(f1), a.at0(dom.tgt0(f1))))
    p.push(a.at1(f2), 1, 2, (F.on1(f2), a.at0(z)))
    p.push(F.cocycle(f2, f1), 0, 2, (F.on1(dom.comp1(f2, f1)),))
    return p


def validate_lax_transformation(a: LaxTransformation) -> ValidationReport:
    """Boundary checks plus the seven lax-transformation axioms."""
    rep = ValidationReport()
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod

    for x in dom.objects:
        v = a.comp0.get(x)
        try:
            ok = v is not None and cod.src0(v) == F.on0(x) and cod.tgt0(v) == G.on0(x)
        except KeyError:
            ok = False
        rep.check("laxtr/boundary-0", (x,), ok)
        if not ok:
            return rep
    for f in dom.onecells():
        x, y = dom.one_loc[f]
        v = a.comp1.get(f)
        try:
            ok = (
                v is not None
                and cod.src1(v) == cod.comp1(G.on1(f), a.at0(x))
                and cod.tgt1(v) == cod.comp1(a.at0(y), F.on1(f))
            )
        except KeyError:
            ok = False
        rep.check("laxtr/boundary-1", (f,), ok)
        if not ok:
            return rep
    for phi in dom.twocells():
        f, f2 = dom.src1(phi), dom.tgt1(phi)
        x, y = dom.two_loc[phi]
        v = a.comp2.get(phi)
        try:
            ok = (
                v is not None
                and cod.src2(v)
                == cod.vcomp2(cod.lw2(a.at0(y), F.on2(phi)), a.at1(f))
                and cod.tgt2(v)
                == cod.vcomp2(a.at1(f2), cod.rw2(G.on2(phi), a.at0(x)))
            )
        except KeyError:
            ok = False
        rep.check("laxtr/boundary-2", (phi,), ok)
        if not ok:
            return rep
    for f2, f1 in _cocycle_pairs(dom):
        v = a.coc.get((f2, f1))
        x = dom.src0(f1)
        f21 = dom.comp1(f2, f1)
        try:
            source = lax_source_path(a, f2, f1).source2()
            target = cod.vcomp2(a.at1(f21), cod.rw2(G.cocycle(f2, f1), a.at0(x)))
            ok = v is not None and cod.src2(v) == source and cod.tgt2(v) == target
        except (KeyError, MalformedPresentation):
            ok = False
        rep.check("laxtr/boundary-coc", (f2, f1), ok)
        if not ok:
            return rep
        rep.check("laxtr/coc-invertible", (f2, f1), cod.has_inv3(v))

    # (i) degeneracy for the 2-cell component
    for x in dom.objects:
        rep.check(
            "laxtr/i-deg-2cell", (x,), a.at1(dom.id_1(x)) == cod.id_2(a.at0(x))
        )

    # (ii) compatibility with 3-cells
    for lam in dom.threecells():
        phi, phi2 = dom.src2(lam), dom.tgt2(lam)
        f, f2 = dom.src1(phi), dom.tgt1(phi)
        x, y = dom.two_loc[phi]
        _g(rep, "laxtr/ii-3cells", (lam,),
           lambda: cod.vcomp3(
               cod.hwl(a.at1(f2), cod.rw3(G.on3(lam), a.at0(x))),
               a.at2(phi),
           ),
           lambda: cod.vcomp3(
               a.at2(phi2),
               cod.hwr(cod.lw3(a.at0(y), F.on3(lam)), a.at1(f)),
           ))

    # (iii) compatibility with vertical composition of 2-cells
    for phi2 in dom.twocells():
        for phi1 in dom.twocells():
            if dom.two_loc[phi2] != dom.two_loc[phi1]:
                continue
            if dom.src1(phi2) != dom.tgt1(phi1):
                continue
            x, y = dom.two_loc[phi1]
            _g(rep, "laxtr/iii-vcomp2", (phi2, phi1),
               lambda: a.at2(dom.vcomp2(phi2, phi1)),
               lambda: cod.vcomp3(
                   cod.hwr(a.at2(phi2), cod.rw2(G.on2(phi1), a.at0(x))),
                   cod.hwl(cod.lw2(a.at0(y), F.on2(phi2)), a.at2(phi1)),
               ))

    # (iv) degeneracy for the 3-cell component
    for f in dom.onecells():
        rep.check(
            "laxtr/iv-deg-3cell", (f,), a.at2(dom.id_2(f)) == cod.id_3(a.at1(f))
        )

    # (v) compatibility with composition of 1-cells
    for f3 in dom.onecells():
        for f2 in dom.onecells(y=dom.src0(f3)):
            for f1 in dom.onecells(y=dom.src0(f2)):
                _g(rep, "laxtr/v-comp1", (f3, f2, f1),
                   lambda: _laxtr_v_lhs(a, f3, f2, f1),
                   lambda: _laxtr_v_rhs(a, f3, f2, f1))

    # (vi) degeneracy for the cocycle
    for f in dom.onecells():
        x, y = dom.one_loc[f]
        rep.check(
            "laxtr/vi-deg-coc", (f,),
            a.cocycle(dom.id_1(y), f) == cod.id_3(a.at1(f))
            and a.cocycle(f, dom.id_1(x)) == cod.id_3(a.at1(f)),
        )

    # (vii) compatibility of the cocycle with whiskering of 2-cells
    for psi in dom.twocells():
        for f1 in dom.onecells(y=dom.two_loc[psi][0]):
            _g(rep, "laxtr/vii-whisk-L", (psi, f1),
               lambda: _laxtr_vii_L(a, psi, f1, lhs=True),
               lambda: _laxtr_vii_L(a, psi, f1, lhs=False))
    for phi in dom.twocells():
        for f2 in dom.onecells(x=dom.two_loc[phi][1]):
            _g(rep, "laxtr/vii-whisk-R", (f2, phi),
               lambda: _laxtr_vii_R(a, f2, phi, lhs=True),
               lambda: _laxtr_vii_R(a, f2, phi, lhs=False))
    return rep


def _laxtr_v_lhs(a: LaxTransformation, f3, f2, f1):
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    w = dom.src0(f1)
    x, y, z = dom.tgt0(f1), dom.tgt0(f2), dom.tgt0(f3)
    f21 = dom.comp1(f2, f1)
    p = Paster(cod, (a.at0(w), G.on1(f1), G.on1(f2), G.on1(f3)))
    p.push(a.at1(f1), 0, 2, (F.on1(f1), a.at0(x)))
    p.push(a.at1(f2), 1, 2, (F.on1(f2), a.at0(y)))
    p.push(a.at1(f3), 2, 2, (F.on1(f3), a.at0(z)))
    p.push(F.cocycle(f2, f1), 0, 2, (F.on1(f21),))
    p.push(F.cocycle(f3, f21), 0, 2, (F.on1(dom.comp1(f3, f21)),))
    p.swap(2)  # move 1∘F²_{f2,f1} below α_{f3}∘1
    p.rewrite(
        0, 3, a.cocycle(f2, f1), 0, 3,
        [
            (G.cocycle(f2, f1), 1, 2, (G.on1(f21),)),
            (a.at1(f21), 0, 2, (F.on1(f21), a.at0(y))),
        ],
    )
    p.rewrite(
        1, 4, a.cocycle(f3, f21), 0, 3,
        [
            (G.cocycle(f3, f21), 1, 2, (G.on1(dom.comp1(f3, f21)),)),
            (a.at1(dom.comp1(f3, f21)), 0, 2,
             (F.on1(dom.comp1(f3, f21)), a.at0(z))),
        ],
    )
    return p.result()


def _laxtr_v_rhs(a: LaxTransformation, f3, f2, f1):
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    w = dom.src0(f1)
    x, y, z = dom.tgt0(f1), dom.tgt0(f2), dom.tgt0(f3)
    f32 = dom.comp1(f3, f2)
    p = Paster(cod, (a.at0(w), G.on1(f1), G.on1(f2), G.on1(f3)))
    p.push(a.at1(f1), 0, 2, (F.on1(f1), a.at0(x)))
    p.push(a.at1(f2), 1, 2, (F.on1(f2), a.at0(y)))
    p.push(a.at1(f3), 2, 2, (F.on1(f3), a.at0(z)))
    p.push(F.cocycle(f3, f2), 1, 2, (F.on1(f32),))
    p.push(F.cocycle(f32, f1), 0, 2, (F.on1(dom.comp1(f32, f1)),))
    p.rewrite(
        1, 4, a.cocycle(f3, f2), 1, 4,
        [
            (G.cocycle(f3, f2), 2, 2, (G.on1(f32),)),
            (a.at1(f32), 1, 2, (F.on1(f32), a.at0(z))),
        ],
    )
    p.swap(0)  # move G²_{f3,f2}∘1 below 1∘α_{f1}
    p.rewrite(
        1, 4, a.cocycle(f32, f1), 0, 3,
        [
            (G.cocycle(f32, f1), 1, 2, (G.on1(dom.comp1(f32, f1)),)),
            (a.at1(dom.comp1(f32, f1)), 0, 2,
             (F.on1(dom.comp1(f32, f1)), a.at0(z))),
        ],
    )
    return p.result()


def _laxtr_vii_L(a: LaxTransformation, psi, f1, lhs: bool):
    """Axiom (vii), left case: whiskering ψ: f2 → f2' by f1 on the right."""
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    f2, f2p = dom.src1(psi), dom.tgt1(psi)
    x = dom.src0(f1)
    y = dom.tgt0(f1)
    z = dom.tgt0(f2)
    f2pf1 = dom.comp1(f2p, f1)
    p = Paster(cod, (a.at0(x), G.on1(f1), G.on1(f2)))
    p.push(a.at1(f1), 0, 2, (F.on1(f1), a.at0(y)))
    p.push(a.at1(f2), 1, 2, (F.on1(f2), a.at0(z)))
    if lhs:
        p.push(F.on2(psi), 1, 1, (F.on1(f2p),))
        p.push(F.cocycle(f2p, f1), 0, 2, (F.on1(f2pf1),))
        # α_ψ ∘ 1 : rewrite (α_{f2}∘1, 1∘Fψ∘1) into (Gψ∘1, α_{f2'}∘1)
        p.rewrite(
            1, 3, a.at2(psi), 1, 3,
            [
                (G.on2(psi), 2, 1, (G.on1(f2p),)),
                (a.at1(f2p), 1, 2, (F.on1(f2p), a.at0(z))),
            ],
        )
        p.swap(0)  # Gψ∘1 below 1∘α_{f1}
        p.rewrite(
            1, 4, a.cocycle(f2p, f1), 0, 3,
            [
                (G.cocycle(f2p, f1), 1, 2, (G.on1(f2pf1),)),
                (a.at1(f2pf1), 0, 2, (F.on1(f2pf1), a.at0(z))),
            ],
        )
        return p.result()
    f21 = dom.comp1(f2, f1)
    psi_f1 = dom.rw2(psi, f1)
    p.push(F.cocycle(f2, f1), 0, 2, (F.on1(f21),))
    p.push(F.on2(psi_f1), 0, 1, (F.on1(f2pf1),))
    p.rewrite(
        0, 3, a.cocycle(f2, f1), 0, 3,
        [
            (G.cocycle(f2, f1), 1, 2, (G.on1(f21),)),
            (a.at1(f21), 0, 2, (F.on1(f21), a.at0(z))),
        ],
    )
    p.rewrite(
        1, 3, a.at2(psi_f1), 0, 2,
        [
            (G.on2(psi_f1), 1, 1, (G.on1(f2pf1),)),
            (a.at1(f2pf1), 0, 2, (F.on1(f2pf1), a.at0(z))),
        ],
    )
    return p.result()


def _laxtr_vii_R(a: LaxTransformation, f2, phi, lhs: bool):
    """Axiom (vii), right case: whiskering φ: f1 → f1' by f2 on the left."""
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    f1, f1p = dom.src1(phi), dom.tgt1(phi)
    x = dom.src0(f1)
    y = dom.tgt0(f1)
    z = dom.tgt0(f2)
    f2f1p = dom.comp1(f2, f1p)
    p = Paster(cod, (a.at0(x), G.on1(f1), G.on1(f2)))
    p.push(a.at1(f1), 0, 2, (F.on1(f1), a.at0(y)))
    p.push(a.at1(f2), 1, 2, (F.on1(f2), a.at0(z)))
    if lhs:
        p.push(F.on2(phi), 0, 1, (F.on1(f1p),))
        p.push(F.cocycle(f2, f1p), 0, 2, (F.on1(f2f1p),))
        p.swap(1)  # Fφ below α_{f2}∘1
        p.rewrite(
            0, 2, a.at2(phi), 0, 2,
            [
                (G.on2(phi), 1, 1, (G.on1(f1p),)),
                (a.at1(f1p), 0, 2, (F.on1(f1p), a.at0(y))),
            ],
        )
        p.rewrite(
            1, 4, a.cocycle(f2, f1p), 0, 3,
            [
                (G.cocycle(f2, f1p), 1, 2, (G.on1(f2f1p),)),
                (a.at1(f2f1p), 0, 2, (F.on1(f2f1p), a.at0(z))),
            ],
        )
        return p.result()
    f21 = dom.comp1(f2, f1)
    f2_phi = dom.lw2(f2, phi)
    p.push(F.cocycle(f2, f1), 0, 2, (F.on1(f21),))
    p.push(F.on2(f2_phi), 0, 1, (F.on1(f2f1p),))
    p.rewrite(
        0, 3, a.cocycle(f2, f1), 0, 3,
        [
            (G.cocycle(f2, f1), 1, 2, (G.on1(f21),)),
            (a.at1(f21), 0, 2, (F.on1(f21), a.at0(z))),
        ],
    )
    p.rewrite(
        1, 3, a.at2(f2_phi), 0, 2,
        [
            (G.on2(f2_phi), 1, 1, (G.on1(f2f1p),)),
            (a.at1(f2f1p), 0, 2, (F.on1(f2f1p), a.at0(z))),
        ],
    )
    return p.result()


def validate_modification(m: Modification) -> ValidationReport:
    """The three modification axioms over the codomain operations."""
    rep = ValidationReport()
    a, b = m.src, m.tgt
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod

    for x in dom.objects:
        v = m.comp0.get(x)
        try:
            ok = v is not None and cod.src1(v) == a.at0(x) and cod.tgt1(v) == b.at0(x)
        except KeyError:
            ok = False
        rep.check("mod/boundary-0", (x,), ok)
        if not ok:
            return rep
    for f in dom.onecells():
        x, y = dom.one_loc[f]
        v = m.comp1.get(f)
        try:
            source = cod.vcomp2(b.at1(f), cod.lw2(G.on1(f), m.at0(x)))
            target = cod.vcomp2(cod.rw2(m.at0(y), F.on1(f)), a.at1(f))
            ok = v is not None and cod.src2(v) == source and cod.tgt2(v) == target
        except KeyError:
            ok = False
        rep.check("mod/boundary-1", (f,), ok)
        if not ok:
            return rep

    # (i) degeneracy for the 3-cell component
    for x in dom.objects:
        rep.check(
            "mod/i-deg-3cell", (x,), m.at1(dom.id_1(x)) == cod.id_3(m.at0(x))
        )

    # (ii) compatibility with composition of 1-cells
    for f2 in dom.onecells():
        for f1 in dom.onecells(y=dom.src0(f2)):
            _g(rep, "mod/ii-comp1", (f2, f1),
               lambda: _mod_ii_lhs(m, f2, f1),
               lambda: _mod_ii_rhs(m, f2, f1))

    # (iii) compatibility with 2-cells
    for phi in dom.twocells():
        _g(rep, "mod/iii-2cells", (phi,),
           lambda: _mod_iii_lhs(m, phi),
           lambda: _mod_iii_rhs(m, phi))
    return rep


def _mod_ii_lhs(m: Modification, f2, f1):
    a, b = m.src, m.tgt
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    x = dom.src0(f1)
    y, z = dom.tgt0(f1), dom.tgt0(f2)
    f21 = dom.comp1(f2, f1)
    # source word carries α_x; the first move replaces it by β_x via Λ_x.
    p = Paster(cod, (a.at0(x), G.on1(f1), G.on1(f2)))
    p.push(m.at0(x), 0, 1, (b.at0(x),))
    p.push(b.at1(f1), 0, 2, (F.on1(f1), b.at0(y)))
    p.push(b.at1(f2), 1, 2, (F.on1(f2), b.at0(z)))
    p.push(F.cocycle(f2, f1), 0, 2, (F.on1(f21),))
    # Λ_{f1} rewrites (1∘Λ_x, β_{f1}) -> (α_{f1}, Λ_y∘1)
    p.rewrite(
        0, 2, m.at1(f1), 0, 2,
        [
            (a.at1(f1), 0, 2, (F.on1(f1), a.at0(y))),
            (m.at0(y), 1, 1, (b.at0(y),)),
        ],
    )
    # Λ_{f2} rewrites (1∘Λ_y∘1, β_{f2}∘1) -> (α_{f2}∘1, Λ_z∘1)
    p.rewrite(
        1, 3, m.at1(f2), 1, 3,
        [
            (a.at1(f2), 1, 2, (F.on1(f2), a.at0(z))),
            (m.at0(z), 2, 1, (b.at0(z),)),
        ],
    )
    # swap Λ_z∘1 past 1∘F²_{f2,f1}
    p.swap(2)
    # α²_{f2,f1}
    p.rewrite(
        0, 3, a.cocycle(f2, f1), 0, 3,
        [
            (G.cocycle(f2, f1), 1, 2, (G.on1(f21),)),
            (a.at1(f21), 0, 2, (F.on1(f21), a.at0(z))),
        ],
    )
    return p.result()


def _mod_ii_rhs(m: Modification, f2, f1):
    a, b = m.src, m.tgt
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    x = dom.src0(f1)
    y, z = dom.tgt0(f1), dom.tgt0(f2)
    f21 = dom.comp1(f2, f1)
    p = Paster(cod, (a.at0(x), G.on1(f1), G.on1(f2)))
    p.push(m.at0(x), 0, 1, (b.at0(x),))
    p.push(b.at1(f1), 0, 2, (F.on1(f1), b.at0(y)))
    p.push(b.at1(f2), 1, 2, (F.on1(f2), b.at0(z)))
    p.push(F.cocycle(f2, f1), 0, 2, (F.on1(f21),))
    # β² rewrites (β_{f1}, β_{f2}, 1∘F²) -> (G²∘1, β_{f2f1})
    p.rewrite(
        1, 4, b.cocycle(f2, f1), 0, 3,
        [
            (G.cocycle(f2, f1), 1, 2, (G.on1(f21),)),
            (b.at1(f21), 0, 2, (F.on1(f21), b.at0(z))),
        ],
    )
    # swap 1∘Λ_x past 1∘G²_{f2,f1}∘1
    p.swap(0)
    # Λ_{f2f1} rewrites (1∘Λ_x, β_{f2f1}) -> (α_{f2f1}, Λ_z∘1)
    p.rewrite(
        1, 3, m.at1(f21), 0, 2,
        [
            (a.at1(f21), 0, 2, (F.on1(f21), a.at0(z))),
            (m.at0(z), 1, 1, (b.at0(z),)),
        ],
    )
    return p.result()


def _mod_iii_lhs(m: Modification, phi):
    a, b = m.src, m.tgt
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    f, f2 = dom.src1(phi), dom.tgt1(phi)
    x, y = dom.two_loc[phi]
    p = Paster(cod, (a.at0(x), G.on1(f)))
    p.push(m.at0(x), 0, 1, (b.at0(x),))
    p.push(b.at1(f), 0, 2, (F.on1(f), b.at0(y)))
    p.push(F.on2(phi), 0, 1, (F.on1(f2),))
    # Λ_f
    p.rewrite(
        0, 2, m.at1(f), 0, 2,
        [
            (a.at1(f), 0, 2, (F.on1(f), a.at0(y))),
            (m.at0(y), 1, 1, (b.at0(y),)),
        ],
    )
    # swap Λ_y∘1 past 1∘Fφ
    p.swap(1)
    # α_φ
    p.rewrite(
        0, 2, a.at2(phi), 0, 2,
        [
            (G.on2(phi), 1, 1, (G.on1(f2),)),
            (a.at1(f2), 0, 2, (F.on1(f2), a.at0(y))),
        ],
    )
    return p.result()


def _mod_iii_rhs(m: Modification, phi):
    a, b = m.src, m.tgt
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    f, f2 = dom.src1(phi), dom.tgt1(phi)
    x, y = dom.two_loc[phi]
    p = Paster(cod, (a.at0(x), G.on1(f)))
    p.push(m.at0(x), 0, 1, (b.at0(x),))
    p.push(b.at1(f), 0, 2, (F.on1(f), b.at0(y)))
    p.push(F.on2(phi), 0, 1, (F.on1(f2),))
    # β_φ rewrites (β_f, 1∘Fφ) -> (Gφ∘1, β_{f2})
    p.rewrite(
        1, 3, b.at2(phi), 0, 2,
        [
            (G.on2(phi), 1, 1, (G.on1(f2),)),
            (b.at1(f2), 0, 2, (F.on1(f2), b.at0(y))),
        ],
    )
    # swap 1∘Λ_x past Gφ∘1
    p.swap(0)
    # Λ_{f2}
    p.rewrite(
        1, 3, m.at1(f2), 0, 2,
        [
            (a.at1(f2), 0, 2, (F.on1(f2), a.at0(y))),
            (m.at0(y), 1, 1, (b.at0(y),)),
        ],
    )
    return p.result()


def validate_perturbation(t: Perturbation) -> ValidationReport:
    """Boundary checks plus the single perturbation axiom."""
    rep = ValidationReport()
    ml, mr = t.src, t.tgt
    a, b = ml.src, ml.tgt
    F, G = a.src, a.tgt
    dom, cod = F.dom, F.cod
    for x in dom.objects:
        v = t.comp0.get(x)
        try:
            ok = (
                v is not None
                and cod.src2(v) == ml.at0(x)
                and cod.tgt2(v) == mr.at0(x)
            )
        except KeyError:
            ok = False
        rep.check("pert/boundary-0", (x,), ok)
        if not ok:
            return rep
    for f in dom.onecells():
        x, y = dom.one_loc[f]
        _g(rep, "pert/axiom", (f,),
           lambda: cod.vcomp3(
               cod.hwr(cod.rw3(t.at0(y), F.on1(f)), a.at1(f)),
               ml.at1(f),
           ),
           lambda: cod.vcomp3(
               mr.at1(f),
               cod.hwl(b.at1(f), cod.lw3(G.on1(f), t.at0(x))),
           ))
    return rep


# ---------------------------------------------------------------------------
# adjoint equivalences


def make_adjoint_equivalence(cat, left, right, unit, counit) -> AdjointEquivalence:
    return AdjointEquivalence(cat, left, right, unit, counit)


def identity_adjoint_equivalence(cat, onecell) -> AdjointEquivalence:
    i = cat.id_2(onecell)
    return AdjointEquivalence(cat, i, i, cat.id_3(i), cat.id_3(i))


def iso_adjoint_equivalence(cat, right) -> AdjointEquivalence:
    """An invertible 2-cell viewed as an adjoint equivalence with identity
    unit and counit."""
    left = cat.inv2(right)
    return AdjointEquivalence(
        cat,
        left,
        right,
        cat.id_3(cat.vcomp2(right, left)),
        cat.id_3(cat.vcomp2(left, right)),
    )


def validate_adjoint_equivalence(e: AdjointEquivalence) -> ValidationReport:
    rep = ValidationReport()
    cat = e.cat
    try:
        u, v = cat.src1(e.right), cat.tgt1(e.right)
        ok = cat.src1(e.left) == v and cat.tgt1(e.left) == u
    except KeyError:
        ok = False
    rep.check("adjeq/parallel", (), ok)
    if not ok:
        return rep
    _g(rep, "adjeq/unit-boundary", (),
       lambda: (cat.src2(e.unit), cat.tgt2(e.unit)),
       lambda: (cat.id_2(v), cat.vcomp2(e.right, e.left)))
    _g(rep, "adjeq/counit-boundary", (),
       lambda: (cat.src2(e.counit), cat.tgt2(e.counit)),
       lambda: (cat.vcomp2(e.left, e.right), cat.id_2(u)))
    rep.check("adjeq/unit-invertible", (), cat.has_inv3(e.unit))
    rep.check("adjeq/counit-invertible", (), cat.has_inv3(e.counit))
    # triangle identities
    _g(rep, "adjeq/triangle-left", (),
       lambda: cat.vcomp3(
           cat.hwr(e.counit, e.left), cat.hwl(e.left, e.unit)
       ),
       lambda: cat.id_3(e.left))
    _g(rep, "adjeq/triangle-right", (),
       lambda: cat.vcomp3(
           cat.hwl(e.right, e.counit), cat.hwr(e.unit, e.right)
       ),
       lambda: cat.id_3(e.right))
    return rep


def compose_adjoint_equivalences(e2: AdjointEquivalence, e1: AdjointEquivalence):
    """Composite (ε·fε'g, ff' ⊣ g'g, g'ηf'·η') of e2 after e1."""
    cat = e1.cat
    if cat is not e2.cat and cat != e2.cat:
        raise DomainMismatch("adjoint equivalences in different homs")
    if cat.tgt1(e1.right) != cat.src1(e2.right):
        raise DomainMismatch("not composable")
    right = cat.vcomp2(e2.right, e1.right)
    left = cat.vcomp2(e1.left, e2.left)
    counit = cat.vcomp3(
        e1.counit, cat.hwl(e1.left, cat.hwr(e2.counit, e1.right))
    )
    unit = cat.vcomp3(
        cat.hwl(e2.right, cat.hwr(e1.unit, e2.left)), e2.unit
    )
    return AdjointEquivalence(cat, left, right, unit, counit)


def whisker_adjoint_equivalence(e: AdjointEquivalence, lw=None, rw=None):
    """Image of an adjoint equivalence under a whiskering 2-functor."""
    cat = e.cat

    def w2(c):
        out = c
        if rw is not None:
            out = cat.rw2(out, rw)
        if lw is not None:
            out = cat.lw2(lw, out)
        return out

    def w3(c):
        out = c
        if rw is not None:
            out = cat.rw3(out, rw)
        if lw is not None:
            out = cat.lw3(lw, out)
        return out

    return AdjointEquivalence(cat, w2(e.left), w2(e.right), w3(e.unit), w3(e.counit))


# ---------------------------------------------------------------------------
# pseudo-transformations


def make_pseudo_transformation(base: LaxTransformation, adjoints) -> PseudoTransformation:
    return PseudoTransformation(base, FrozenTable(dict(adjoints)))


def identity_pseudo_transformation(F: Pseudomap) -> PseudoTransformation:
    base = identity_transformation(F)
    dom, cod = F.dom, F.cod
    adj = {
        f: identity_adjoint_equivalence(cod, cod.comp1(F.on1(f), base.at0(dom.src0(f))))
        for f in dom.onecells()
    }
    return PseudoTransformation(base, FrozenTable(adj))


def validate_pseudo_transformation(t: PseudoTransformation) -> ValidationReport:
    rep = ValidationReport()
    a = t.base
    dom, cod = a.src.dom, a.src.cod
    rep.merge(validate_lax_transformation(a), prefix="base/")
    for f in dom.onecells():
        e = t.adjoints.get(f)
        if e is None:
            rep.fail("psdtr/adjoint-total", (f,))
            continue
        rep.check("psdtr/adjoint-right", (f,), e.right == a.at1(f))
        sub = validate_adjoint_equivalence(e)
        rep.merge(sub, prefix=f"psdtr[{f}]/")
    # (a) identity adjoint equivalences at identity 1-cells
    for x in dom.objects:
        f = dom.id_1(x)
        e = t.adjoints.get(f)
        ide = identity_adjoint_equivalence(cod, cod.src1(a.at1(f)))
        rep.check("psdtr/a-identity-adjoints", (x,), e == ide)
    # (b) every 3-cell component is invertible
    for phi in dom.twocells():
        rep.check("psdtr/b-invertible-3cell", (phi,), cod.has_inv3(a.at2(phi)))
    return rep


def compose_pseudo_transformations(q, p, composed_base):
    """Attach the composite adjoint equivalences of §6.2 to a composite of
    the underlying lax transformations."""
    beta, alpha = q.base, p.base
    dom, cod = alpha.src.dom, alpha.src.cod
    adj = {}
    for f in dom.onecells():
        x, y = dom.one_loc[f]
        e_beta = whisker_adjoint_equivalence(q.adjoints[f], rw=alpha.at0(x))
        e_alpha = whisker_adjoint_equivalence(p.adjoints[f], lw=beta.at0(y))
        adj[f] = compose_adjoint_equivalences(e_alpha, e_beta)
    return PseudoTransformation(composed_base, FrozenTable(adj))


# ---------------------------------------------------------------------------
# oplax transformations via the (−)⁺ duality


@dataclass(frozen=True)
class OplaxTransformation:
    """Oplax data stored in lax form over the co-duals (the (−)⁺ image).

    ``plus`` is a lax transformation  F^co -> G^co; the oplax presentation
    (α_x, α_f, α_φ, α₂) is recovered through the accessors.
    """

    plus: LaxTransformation

    def __repr__(self):
        return f"<oplaxtr {hex(abs(hash(self)) % 16**6)}>"

    def at0(self, x):
        return self.plus.at0(x)

    def at1(self, f):
        return self.plus.at1(f)

    def at2(self, phi):
        return self.plus.at2(phi)


def plus_dual(oplax_data, co_src: Pseudomap, co_tgt: Pseudomap) -> LaxTransformation:
    """Repackage oplax component data as the lax transformation α⁺ between
    the co-dual pseudomaps.

    ``oplax_data`` is (comp0, comp1, comp2, coc) with the §3.5 boundaries;
    the cocycle entries are converted through the (α²)♯ composite.
    """
    comp0, comp1, comp2, coc = oplax_data
    cod = co_src.cod  # already the co-dual category
    dom = co_src.dom
    sharp = {}
    for (f2, f1), cell in dict(coc).items():
        sharp[(f2, f1)] = _alpha2_sharp(
            cod, co_src, co_tgt, comp0, comp1, f2, f1, cell, dom
        )
    return make_lax_transformation(co_src, co_tgt, comp0, comp1, comp2, sharp)


def _alpha2_sharp(cod, F, G, comp0, comp1, f2, f1, cell, dom):
    """(α₂)♯: conjugate the inverse of the oplax cocycle by the inverted
    pseudomap cocycles (computed inside the co-dual category)."""
    x = dom.src0(f1)
    z = dom.tgt0(f2)
    f21 = dom.comp1(f2, f1)
    inv = cod.inv3(cell)
    pre = cod.rw2(G.cocycle(f2, f1), comp0[x])
    post = cod.lw2(comp0[z], F.cocycle(f2, f1))
    return cod.hwl(post, cod.hwr(inv, pre))


def minus_dual(t: LaxTransformation):
    """Recover the §3.5 oplax component data from a lax transformation of
    co-duals: the inverse of :func:`plus_dual`."""
    F, G = t.src, t.tgt
    dom, cod = F.dom, F.cod
    coc = {}
    for (f2, f1), sharp in dict(t.coc).items():
        x = dom.src0(f1)
        z = dom.tgt0(f2)
        pre = cod.inv2(cod.rw2(G.cocycle(f2, f1), t.at0(x)))
        post = cod.inv2(cod.lw2(t.at0(z), F.cocycle(f2, f1)))
        coc[(f2, f1)] = cod.inv3(cod.hwl(post, cod.hwr(sharp, pre)))
    return (dict(t.comp0), dict(t.comp1), dict(t.comp2), coc)


def alpha2_flat(t: LaxTransformation, f2, f1):
    """(α²)♭: conjugate the inverse of α² by the inverted cocycles."""
    F, G = t.src, t.tgt
    dom, cod = F.dom, F.cod
    x = dom.src0(f1)
    z = dom.tgt0(f2)
    inv = cod.inv3(t.cocycle(f2, f1))
    pre = cod.rw2(cod.inv2(G.cocycle(f2, f1)), t.at0(x))
    post = cod.lw2(t.at0(z), cod.inv2(F.cocycle(f2, f1)))
    return cod.hwl(post, cod.hwr(inv, pre))


def alpha2_unflat(t: LaxTransformation, f2, f1, flat):
    """Recover α²_{f2,f1} from its ♭-form (the inverse bijection)."""
    F, G = t.src, t.tgt
    dom, cod = F.dom, F.cod
    x = dom.src0(f1)
    z = dom.tgt0(f2)
    pre = cod.inv2(cod.rw2(cod.inv2(G.cocycle(f2, f1)), t.at0(x)))
    post = cod.inv2(cod.lw2(t.at0(z), cod.inv2(F.cocycle(f2, f1))))
    return cod.inv3(cod.hwl(post, cod.hwr(flat, pre)))
