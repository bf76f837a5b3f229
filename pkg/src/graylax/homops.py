"""The mapping space of two Gray-categories as a *virtual* Gray-category.

Cells are transformation data (pseudomaps, lax transformations,
modifications, perturbations); the composition, whiskering and interchange
operations are computed pointwise from the mapping-space structure
formulas.  The object exposes exactly the same operation names as
:class:`~graylax.graycat.FiniteGrayCategory`, so every validator and the
pasting engine run over it unchanged — this is the shared evaluator used
by the multimap checkers, and the basis for materializing hom-spaces.
"""

from __future__ import annotations

from .pasting import Paster
from .pseudomaps import Pseudomap, _cocycle_pairs, compose_pseudomaps, identity_pseudomap
from .report import MalformedPresentation, NonInvertible
from .transforms import (
    LaxTransformation,
    Modification,
    Perturbation,
    identity_modification,
    identity_perturbation,
    identity_transformation,
    make_lax_transformation,
    make_modification,
)
from .util import FrozenTable


_VLH_REGISTRY = {}


def virtual_hom(dom, base) -> "VirtualLaxHom":
    """Shared VirtualLaxHom instances, so operation caches accumulate."""
    key = (id(dom), id(base))
    if key not in _VLH_REGISTRY:
        _VLH_REGISTRY[key] = VirtualLaxHom(dom, base)
    return _VLH_REGISTRY[key]


class VirtualLaxHom:
    """Lax(A, B) as an operations object over transformation data.

    ``base`` (B) may itself be a VirtualLaxHom, which is what makes the
    closedness bijections checkable without materializing anything.
    """

    def __init__(self, dom, base):
        self.dom = dom
        self.base = base
        self.name = f"Lax({getattr(dom, 'name', '?')},{getattr(base, 'name', '?')})"
        self._memo = {}

    def _cached(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def __eq__(self, other):
        return (
            isinstance(other, VirtualLaxHom)
            and self.dom == other.dom
            and self.base == other.base
        )

    def __hash__(self):
        return hash(("VirtualLaxHom", id(self.dom), id(self.base)))

    # -- boundaries ------------------------------------------------------
    def src0(self, a: LaxTransformation):
        return a.src

    def tgt0(self, a: LaxTransformation):
        return a.tgt

    def src1(self, m: Modification):
        return m.src

    def tgt1(self, m: Modification):
        return m.tgt

    def src2(self, t: Perturbation):
        return t.src

    def tgt2(self, t: Perturbation):
        return t.tgt

    # -- identities --------------------------------------------------------
    def id_1(self, F: Pseudomap):
        return identity_transformation(F)

    def id_2(self, a: LaxTransformation):
        return identity_modification(a)

    def id_3(self, m: Modification):
        return identity_perturbation(m)

    # -- composition of 1-cells (B.1) ---------------------------------------
    def comp1(self, b: LaxTransformation, a: LaxTransformation):
        return self._cached(("comp1", b, a), lambda: self._comp1(b, a))

    def _comp1(self, b: LaxTransformation, a: LaxTransformation):
        if a.tgt != b.src:
            raise MalformedPresentation("lax transformations not composable")
        dom, cod = a.src.dom, a.src.cod
        F, H = a.src, b.tgt
        comp0 = {x: cod.comp1(b.at0(x), a.at0(x)) for x in dom.objects}
        comp1 = {}
        for f in dom.onecells():
            x, y = dom.one_loc[f]
            comp1[f] = cod.vcomp2(
                cod.lw2(b.at0(y), a.at1(f)), cod.rw2(b.at1(f), a.at0(x))
            )
        comp2 = {}
        for phi in dom.twocells():
            comp2[phi] = self._comp_at2(b, a, phi)
        coc = {}
        for f2, f1 in _cocycle_pairs(dom):
            coc[(f2, f1)] = self._comp_coc(b, a, f2, f1)
        return LaxTransformation(
            F, H, FrozenTable(comp0), FrozenTable(comp1),
            FrozenTable(comp2), FrozenTable(coc),
        )

    @staticmethod
    def _comp_at2(b, a, phi):
        """(β·α)_φ, Equation (comp-lax-2-cell-part)."""
        F, G = a.src, a.tgt
        H = b.tgt
        dom, cod = F.dom, F.cod
        f, f2 = dom.src1(phi), dom.tgt1(phi)
        x, y = dom.two_loc[phi]
        p = Paster(cod, (a.at0(x), b.at0(x), H.on1(f)))
        p.push(b.at1(f), 1, 2, (G.on1(f), b.at0(y)))
        p.push(a.at1(f), 0, 2, (F.on1(f), a.at0(y)))
        p.push(F.on2(phi), 0, 1, (F.on1(f2),))
        # 1∘α_φ over the first factor pair
        p.rewrite(
            1, 3, a.at2(phi), 0, 2,
            [
                (G.on2(phi), 1, 1, (G.on1(f2),)),
                (a.at1(f2), 0, 2, (F.on1(f2), a.at0(y))),
            ],
        )
        # β_φ∘1 on the outer pair
        p.rewrite(
            0, 2, b.at2(phi), 1, 3,
            [
                (H.on2(phi), 2, 1, (H.on1(f2),)),
                (b.at1(f2), 1, 2, (G.on1(f2), b.at0(y))),
            ],
        )
        return p.result()

    @staticmethod
    def _comp_coc(b, a, f2, f1):
        """(β·α)²_{f2,f1}: interchange, then 1∘α², then β²∘1."""
        F, G = a.src, a.tgt
        H = b.tgt
        dom, cod = F.dom, F.cod
        x = dom.src0(f1)
        y, z = dom.tgt0(f1), dom.tgt0(f2)
        f21 = dom.comp1(f2, f1)
        p = Paster(cod, (a.at0(x), b.at0(x), H.on1(f1), H.on1(f2)))
        p.push(b.at1(f1), 1, 2, (G.on1(f1), b.at0(y)))
        p.push(a.at1(f1), 0, 2, (F.on1(f1), a.at0(y)))
        p.push(b.at1(f2), 2, 2, (G.on1(f2), b.at0(z)))
        p.push(a.at1(f2), 1, 2, (F.on1(f2), a.at0(z)))
        p.push(F.cocycle(f2, f1), 0, 2, (F.on1(f21),))
        # swap 1∘α_{f1} with β_{f2}∘1
        p.swap(1)
        # 1∘α² over factors 0..3 of the stage word (α_x, Gf1, Gf2, ...)
        p.rewrite(
            2, 5, a.cocycle(f2, f1), 0, 3,
            [
                (G.cocycle(f2, f1), 1, 2, (G.on1(f21),)),
                (a.at1(f21), 0, 2, (F.on1(f21), a.at0(z))),
            ],
        )
        # β²∘1 over the remaining factors
        p.rewrite(
            0, 3, b.cocycle(f2, f1), 1, 4,
            [
                (H.cocycle(f2, f1), 2, 2, (H.on1(f21),)),
                (b.at1(f21), 1, 2, (G.on1(f21), b.at0(z))),
            ],
        )
        return p.result()

    # -- vertical composition of 2-cells (B.2.1) ----------------------------
    def vcomp2(self, m2: Modification, m1: Modification):
        return self._cached(("vcomp2", m2, m1), lambda: self._vcomp2(m2, m1))

    def _vcomp2(self, m2: Modification, m1: Modification):
        if m1.tgt != m2.src:
            raise MalformedPresentation("modifications not composable")
        a, c = m1.src, m2.tgt
        dom, cod = a.src.dom, a.src.cod
        comp0 = {x: cod.vcomp2(m2.at0(x), m1.at0(x)) for x in dom.objects}
        comp1 = {}
        F, G = a.src, a.tgt
        for f in dom.onecells():
            x, y = dom.one_loc[f]
            p = Paster(cod, (a.at0(x), G.on1(f)))
            p.push(m1.at0(x), 0, 1, (m1.tgt.at0(x),))
            p.push(m2.at0(x), 0, 1, (c.at0(x),))
            p.push(c.at1(f), 0, 2, (F.on1(f), c.at0(y)))
            p.rewrite(
                1, 3, m2.at1(f), 0, 2,
                [
                    (m1.tgt.at1(f), 0, 2, (F.on1(f), m1.tgt.at0(y))),
                    (m2.at0(y), 1, 1, (c.at0(y),)),
                ],
            )
            p.rewrite(
                0, 2, m1.at1(f), 0, 2,
                [
                    (a.at1(f), 0, 2, (F.on1(f), a.at0(y))),
                    (m1.at0(y), 1, 1, (m1.tgt.at0(y),)),
                ],
            )
            comp1[f] = p.result()
        return Modification(a, c, FrozenTable(comp0), FrozenTable(comp1))

    # -- vertical composition of 3-cells (B.2.2) -----------------------------
    def vcomp3(self, t2: Perturbation, t1: Perturbation):
        if t1.tgt != t2.src:
            raise MalformedPresentation("perturbations not composable")
        cod = t1.src.src.src.cod
        dom = t1.src.src.src.dom
        comp0 = {x: cod.vcomp3(t2.at0(x), t1.at0(x)) for x in dom.objects}
        return Perturbation(t1.src, t2.tgt, FrozenTable(comp0))

    # -- hom-level whiskering of perturbations by modifications (B.2.3) ------
    def hwl(self, m: Modification, t: Perturbation):
        if t.src.tgt != m.src:
            raise MalformedPresentation("whisker boundary mismatch")
        cod = m.src.src.cod
        dom = m.src.src.dom
        comp0 = {x: cod.hwl(m.at0(x), t.at0(x)) for x in dom.objects}
        return Perturbation(
            self.vcomp2(m, t.src), self.vcomp2(m, t.tgt), FrozenTable(comp0)
        )

    def hwr(self, t: Perturbation, m: Modification):
        if m.tgt != t.src.src:
            raise MalformedPresentation("whisker boundary mismatch")
        cod = m.src.src.cod
        dom = m.src.src.dom
        comp0 = {x: cod.hwr(t.at0(x), m.at0(x)) for x in dom.objects}
        return Perturbation(
            self.vcomp2(t.src, m), self.vcomp2(t.tgt, m), FrozenTable(comp0)
        )

    # -- whiskering by lax transformations (B.3) -----------------------------
    def lw2(self, b: LaxTransformation, m: Modification):
        return self._cached(("lw2", b, m), lambda: self._lw2(b, m))

    def _lw2(self, b: LaxTransformation, m: Modification):
        """β·Λ for Λ: α → α' and β following: the right diagram of B.3.1."""
        a, a2 = m.src, m.tgt
        if a.tgt != b.src:
            raise MalformedPresentation("whisker boundary mismatch")
        dom, cod = a.src.dom, a.src.cod
        F = a.src
        G = a.tgt
        comp0 = {x: cod.lw2(b.at0(x), m.at0(x)) for x in dom.objects}
        comp1 = {}
        for f in dom.onecells():
            x, y = dom.one_loc[f]
            H = b.tgt
            p = Paster(cod, (a.at0(x), b.at0(x), H.on1(f)))
            p.push(m.at0(x), 0, 1, (a2.at0(x),))
            p.push(b.at1(f), 1, 2, (G.on1(f), b.at0(y)))
            p.push(a2.at1(f), 0, 2, (F.on1(f), a2.at0(y)))
            p.swap(0)
            p.rewrite(
                1, 3, m.at1(f), 0, 2,
                [
                    (a.at1(f), 0, 2, (F.on1(f), a.at0(y))),
                    (m.at0(y), 1, 1, (a2.at0(y),)),
                ],
            )
            comp1[f] = p.result()
        return Modification(
            self.comp1(b, a), self.comp1(b, a2), FrozenTable(comp0), FrozenTable(comp1)
        )

    def rw2(self, m: Modification, a: LaxTransformation):
        return self._cached(("rw2", m, a), lambda: self._rw2(m, a))

    def _rw2(self, m: Modification, a: LaxTransformation):
        """Γ·α for Γ: β → β' and α preceding: the left diagram of B.3.1."""
        b, b2 = m.src, m.tgt
        if a.tgt != b.src:
            raise MalformedPresentation("whisker boundary mismatch")
        dom, cod = a.src.dom, a.src.cod
        F, G = a.src, a.tgt
        H = b.tgt
        comp0 = {x: cod.rw2(m.at0(x), a.at0(x)) for x in dom.objects}
        comp1 = {}
        for f in dom.onecells():
            x, y = dom.one_loc[f]
            p = Paster(cod, (a.at0(x), b.at0(x), H.on1(f)))
            p.push(m.at0(x), 1, 1, (b2.at0(x),))
            p.push(b2.at1(f), 1, 2, (G.on1(f), b2.at0(y)))
            p.push(a.at1(f), 0, 2, (F.on1(f), a.at0(y)))
            p.rewrite(
                0, 2, m.at1(f), 1, 3,
                [
                    (b.at1(f), 1, 2, (G.on1(f), b.at0(y))),
                    (m.at0(y), 2, 1, (b2.at0(y),)),
                ],
            )
            p.swap(1)
            comp1[f] = p.result()
        return Modification(
            self.comp1(b, a), self.comp1(b2, a), FrozenTable(comp0), FrozenTable(comp1)
        )

    def lw3(self, b: LaxTransformation, t: Perturbation):
        cod = b.src.cod
        dom = b.src.dom
        m = t.src
        comp0 = {x: cod.lw3(b.at0(x), t.at0(x)) for x in dom.objects}
        return Perturbation(
            self.lw2(b, t.src), self.lw2(b, t.tgt), FrozenTable(comp0)
        )

    def rw3(self, t: Perturbation, a: LaxTransformation):
        cod = a.src.cod
        dom = a.src.dom
        comp0 = {x: cod.rw3(t.at0(x), a.at0(x)) for x in dom.objects}
        return Perturbation(
            self.rw2(t.src, a), self.rw2(t.tgt, a), FrozenTable(comp0)
        )

    # -- interchange (B.4) ---------------------------------------------------
    def interchange(self, m2: Modification, m1: Modification):
        return self._cached(("intch", m2, m1), lambda: self._interchange(m2, m1))

    def _interchange(self, m2: Modification, m1: Modification):
        cod = m1.src.src.cod
        dom = m1.src.src.dom
        comp0 = {x: cod.interchange(m2.at0(x), m1.at0(x)) for x in dom.objects}
        src = self.vcomp2(self.rw2(m2, m1.tgt), self.lw2(m2.src, m1))
        tgt = self.vcomp2(self.lw2(m2.tgt, m1), self.rw2(m2, m1.src))
        return Perturbation(src, tgt, FrozenTable(comp0))

    def interchange_inv(self, m2, m1):
        return self.inv3(self.interchange(m2, m1))

    # -- inverses and identity tests ----------------------------------------
    def is_id2(self, m: Modification):
        return m == identity_modification(m.src)

    def is_id3(self, t: Perturbation):
        return t == identity_perturbation(t.src)

    def inv3(self, t: Perturbation):
        cod = t.src.src.src.cod
        dom = t.src.src.src.dom
        comp0 = {x: cod.inv3(t.at0(x)) for x in dom.objects}
        return Perturbation(t.tgt, t.src, FrozenTable(comp0))

    def has_inv3(self, t: Perturbation):
        cod = t.src.src.src.cod
        try:
            self.inv3(t)
            return True
        except NonInvertible:
            return False

    def inv2(self, m: Modification):
        """Componentwise inverse of an invertible modification."""
        a, b = m.src, m.tgt
        dom, cod = a.src.dom, a.src.cod
        F, G = a.src, a.tgt
        comp0 = {x: cod.inv2(m.at0(x)) for x in dom.objects}
        comp1 = {}
        for f in dom.onecells():
            x, y = dom.one_loc[f]
            inv_f = cod.inv3(m.at1(f))
            step = cod.hwr(inv_f, cod.lw2(G.on1(f), comp0[x]))
            comp1[f] = cod.hwl(cod.rw2(comp0[y], F.on1(f)), step)
        return Modification(b, a, FrozenTable(comp0), FrozenTable(comp1))

    def has_inv2(self, m: Modification):
        cod = m.src.src.cod
        dom = m.src.src.dom
        try:
            for x in dom.objects:
                cod.inv2(m.at0(x))
            for f in dom.onecells():
                cod.inv3(m.at1(f))
            return True
        except NonInvertible:
            return False

    # The virtual hom never enumerates its own cells; materialization in
    # homspaces.py handles that with an explicit budget.
