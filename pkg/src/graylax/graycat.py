"""Finitely presented Gray-categories as total lookup tables.

Cells are interned string identifiers.  The hom between two objects is a
:class:`~graylax.twocat.Finite2Category` whose objects are the ambient
1-cells; whiskering by 1-cells and the interchange 3-cells live at the
Gray level.  Every axiom is a finite conjunction over table entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .report import MalformedPresentation, NonInvertible, ValidationReport
from .twocat import Finite2Category, validate_two_category


@dataclass(eq=False)
class FiniteGrayCategory:
    name: str
    objects: list
    hom: dict  # (x, y) -> Finite2Category
    compose1: dict  # (g, f) -> gf
    id1: dict  # x -> identity 1-cell
    lwhisker2: dict  # (g, phi) -> g∘phi
    rwhisker2: dict  # (phi, f) -> phi∘f
    lwhisker3: dict  # (g, L) -> g∘L
    rwhisker3: dict  # (L, f) -> L∘f
    interchange_table: dict  # (psi, phi) -> invertible 3-cell psi:phi
    one_loc: dict = field(default_factory=dict)  # 1-cell -> (x, y)
    two_loc: dict = field(default_factory=dict)  # 2-cell -> (x, y)
    three_loc: dict = field(default_factory=dict)  # 3-cell -> (x, y)

    def __post_init__(self):
        if not self.one_loc:
            for (x, y), h in self.hom.items():
                for f in h.objects:
                    self.one_loc[f] = (x, y)
                for m in h.mor_src:
                    self.two_loc[m] = (x, y)
                for cc in h.cell_src:
                    self.three_loc[cc] = (x, y)

    # -- boundaries ------------------------------------------------------
    def hom_of1(self, f) -> Finite2Category:
        return self.hom[self.one_loc[f]]

    def hom_of2(self, phi) -> Finite2Category:
        return self.hom[self.two_loc[phi]]

    def hom_of3(self, lam) -> Finite2Category:
        return self.hom[self.three_loc[lam]]

    def src0(self, f):
        return self.one_loc[f][0]

    def tgt0(self, f):
        return self.one_loc[f][1]

    def src1(self, phi):
        return self.hom_of2(phi).mor_src[phi]

    def tgt1(self, phi):
        return self.hom_of2(phi).mor_tgt[phi]

    def src2(self, lam):
        return self.hom_of3(lam).cell_src[lam]

    def tgt2(self, lam):
        return self.hom_of3(lam).cell_tgt[lam]

    def onecells(self, x=None, y=None):
        for f, (s, t) in self.one_loc.items():
            if (x is None or s == x) and (y is None or t == y):
                yield f

    def twocells(self):
        yield from self.two_loc

    def threecells(self):
        yield from self.three_loc

    # -- operations --------------------------------------------------------
    def id_1(self, x):
        return self.id1[x]

    def id_2(self, f):
        return self.hom_of1(f).id_mor[f]

    def id_3(self, phi):
        return self.hom_of2(phi).id_cell[phi]

    def comp1(self, g, f):
        return self.compose1[(g, f)]

    def vcomp2(self, psi, phi):
        return self.hom_of2(phi).comp_mor[(psi, phi)]

    def vcomp3(self, t, s):
        return self.hom_of3(s).comp_cell[(t, s)]

    def hwl(self, psi, lam):
        """Whisker the 3-cell ``lam`` by the 2-cell ``psi`` on the left."""
        return self.hom_of3(lam).whisk_l[(psi, lam)]

    def hwr(self, lam, phi):
        return self.hom_of3(lam).whisk_r[(lam, phi)]

    def lw2(self, g, phi):
        return self.lwhisker2[(g, phi)]

    def rw2(self, phi, f):
        return self.rwhisker2[(phi, f)]

    def lw3(self, g, lam):
        return self.lwhisker3[(g, lam)]

    def rw3(self, lam, f):
        return self.rwhisker3[(lam, f)]

    def interchange(self, psi, phi):
        return self.interchange_table[(psi, phi)]

    def interchange_inv(self, psi, phi):
        return self.inv3(self.interchange_table[(psi, phi)])

    def is_id2(self, phi):
        return self.hom_of2(phi).is_id_mor(phi)

    def is_id3(self, lam):
        return self.hom_of3(lam).is_id_cell(lam)

    def inv2(self, phi):
        return self.hom_of2(phi).inverse_mor(phi)

    def inv3(self, lam):
        return self.hom_of3(lam).inverse_cell(lam)

    def has_inv2(self, phi):
        return self.hom_of2(phi).has_inverse_mor(phi)

    def has_inv3(self, lam):
        return self.hom_of3(lam).has_inverse_cell(lam)

    def compose_word(self, cells):
        """Composite of a list of 1-cells, first-applied first."""
        if not cells:
            raise ValueError("empty word has no composite without a base object")
        out = cells[0]
        for f in cells[1:]:
            out = self.comp1(f, out)
        return out

    def horizontally_adjacent(self):
        """Pairs (psi, phi) of 2-cells with phi feeding into psi."""
        for psi in self.two_loc:
            for phi in self.two_loc:
                if self.two_loc[phi][1] == self.two_loc[psi][0]:
                    yield psi, phi


# ---------------------------------------------------------------------------


class GrayBuilder:
    """Incremental construction of a FiniteGrayCategory.

    Only essentially non-trivial table entries need to be supplied; every
    entry forced by an identity cell is filled in by :meth:`finish`.
    """

    def __init__(self, name):
        self.name = name
        self.objects = []
        self.one = {}  # f -> (x, y)
        self.two = {}  # phi -> (f, g)
        self.three = {}  # L -> (phi, psi)
        self.comp1 = {}
        self.vcomp2 = {}
        self.vcomp3 = {}
        self.lw2 = {}
        self.rw2 = {}
        self.lw3 = {}
        self.rw3 = {}
        self.hwl = {}
        self.hwr = {}
        self.intch = {}
        self.inv2 = {}
        self.inv3 = {}

    def obj(self, *names):
        for n in names:
            if n in self.objects:
                raise MalformedPresentation(f"duplicate object {n!r}")
            self.objects.append(n)
            self._register_one(f"1[{n}]", n, n)
        return names[0] if len(names) == 1 else names

    def _register_one(self, name, x, y):
        self.one[name] = (x, y)
        self.two[f"1[{name}]"] = (name, name)
        self.three[f"1[1[{name}]]"] = (f"1[{name}]", f"1[{name}]")

    def one_cell(self, name, x, y):
        if name in self.one:
            raise MalformedPresentation(f"duplicate 1-cell {name!r}")
        if name.startswith("1[") and name.endswith("]"):
            raise MalformedPresentation(f"reserved identity name {name!r}")
        self._register_one(name, x, y)
        return name

    def two_cell(self, name, f, g):
        if name in self.two:
            raise MalformedPresentation(f"duplicate 2-cell {name!r}")
        if name.startswith("1[") and name.endswith("]"):
            raise MalformedPresentation(f"reserved identity name {name!r}")
        if self.one.get(f) != self.one.get(g) or f not in self.one:
            raise MalformedPresentation(f"2-cell {name!r} between non-parallel 1-cells")
        self.two[name] = (f, g)
        self.three[f"1[{name}]"] = (name, name)
        return name

    def three_cell(self, name, phi, psi):
        if name in self.three:
            raise MalformedPresentation(f"duplicate 3-cell {name!r}")
        if name.startswith("1[") and name.endswith("]"):
            raise MalformedPresentation(f"reserved identity name {name!r}")
        if phi not in self.two or psi not in self.two or self.two[phi] != self.two[psi]:
            raise MalformedPresentation(f"3-cell {name!r} between non-parallel 2-cells")
        self.three[name] = (phi, psi)
        return name

    def set_comp1(self, g, f, gf):
        self.comp1[(g, f)] = gf

    def set_vcomp2(self, psi, phi, out):
        self.vcomp2[(psi, phi)] = out

    def set_vcomp3(self, t, s, out):
        self.vcomp3[(t, s)] = out

    def set_lw2(self, g, phi, out):
        self.lw2[(g, phi)] = out

    def set_rw2(self, phi, f, out):
        self.rw2[(phi, f)] = out

    def set_lw3(self, g, lam, out):
        self.lw3[(g, lam)] = out

    def set_rw3(self, lam, f, out):
        self.rw3[(lam, f)] = out

    def set_hwl(self, psi, lam, out):
        self.hwl[(psi, lam)] = out

    def set_hwr(self, lam, phi, out):
        self.hwr[(lam, phi)] = out

    def set_interchange(self, psi, phi, cell, inverse):
        self.intch[(psi, phi)] = cell
        self.inv3.setdefault(cell, inverse)
        self.inv3.setdefault(inverse, cell)

    def set_inv2(self, phi, inverse):
        self.inv2[phi] = inverse
        self.inv2.setdefault(inverse, phi)

    # -- assembly ----------------------------------------------------------
    def finish(self) -> FiniteGrayCategory:
        id1 = {x: f"1[{x}]" for x in self.objects}
        one = dict(self.one)
        id2 = {f: f"1[{f}]" for f in one}
        two = dict(self.two)
        id3 = {p: f"1[{p}]" for p in two}
        three = dict(self.three)
        for p, i in id3.items():
            three.setdefault(i, (p, p))

        comp1 = dict(self.comp1)
        for f, (x, y) in one.items():
            comp1[(id1[y], f)] = f
            comp1[(f, id1[x])] = f
        # Totality of comp1 on non-identity pairs must have been supplied.
        for g, (gx, gy) in one.items():
            for f, (fx, fy) in one.items():
                if fy == gx and (g, f) not in comp1:
                    raise MalformedPresentation(f"missing composite {g!r}∘{f!r}")

        def one_of2(p):
            return two[p][0]

        def obj_of2(p):
            return one[one_of2(p)]

        vcomp2 = dict(self.vcomp2)
        for p, (f, g) in two.items():
            vcomp2[(id2[g], p)] = p
            vcomp2[(p, id2[f])] = p
        for q, (qf, qg) in two.items():
            for p, (pf, pg) in two.items():
                if pg == qf and (q, p) not in vcomp2:
                    raise MalformedPresentation(f"missing vertical composite {q!r}·{p!r}")

        vcomp3 = dict(self.vcomp3)
        for L, (p, q) in three.items():
            vcomp3[(id3[q], L)] = L
            vcomp3[(L, id3[p])] = L
        for T, (tp, tq) in three.items():
            for S, (sp, sq) in three.items():
                if sq == tp and (T, S) not in vcomp3:
                    raise MalformedPresentation(f"missing 3-composite {T!r}∗{S!r}")

        lw2 = dict(self.lw2)
        rw2 = dict(self.rw2)
        for p, (f, g) in two.items():
            x, y = one[f]
            lw2[(id1[y], p)] = p
            rw2[(p, id1[x])] = p
        for g, (gx, gy) in one.items():
            for p, (pf, pg) in two.items():
                if one[pf][1] == gx and (g, p) not in lw2:
                    if p in id2.values():
                        lw2[(g, p)] = id2[comp1[(g, one_of2(p))]]
                    else:
                        raise MalformedPresentation(f"missing whisker {g!r}∘{p!r}")
                if one[pf][0] == gy and (p, g) not in rw2:
                    if p in id2.values():
                        rw2[(p, g)] = id2[comp1[(one_of2(p), g)]]
                    else:
                        raise MalformedPresentation(f"missing whisker {p!r}∘{g!r}")

        lw3 = dict(self.lw3)
        rw3 = dict(self.rw3)
        for L, (p, q) in three.items():
            f = one_of2(p)
            x, y = one[f]
            lw3[(id1[y], L)] = L
            rw3[(L, id1[x])] = L
        for g, (gx, gy) in one.items():
            for L, (p, q) in three.items():
                f = one_of2(p)
                if one[f][1] == gx and (g, L) not in lw3:
                    if L in id3.values():
                        lw3[(g, L)] = id3[lw2[(g, p)]]
                    else:
                        raise MalformedPresentation(f"missing whisker {g!r}∘{L!r}")
                if one[f][0] == gy and (L, g) not in rw3:
                    if L in id3.values():
                        rw3[(L, g)] = id3[rw2[(p, g)]]
                    else:
                        raise MalformedPresentation(f"missing whisker {L!r}∘{g!r}")

        hwl = dict(self.hwl)
        hwr = dict(self.hwr)
        for q, (qf, qg) in two.items():
            for L, (p, p2) in three.items():
                if two[p][1] == qf and (q, L) not in hwl:
                    if L in id3.values():
                        hwl[(q, L)] = id3[vcomp2[(q, p)]]
                    elif q in id2.values():
                        hwl[(q, L)] = L
                    else:
                        raise MalformedPresentation(f"missing hom-whisker {q!r}·{L!r}")
                if two[p][0] == qg and (L, q) not in hwr:
                    if L in id3.values():
                        hwr[(L, q)] = id3[vcomp2[(p, q)]]
                    elif q in id2.values():
                        hwr[(L, q)] = L
                    else:
                        raise MalformedPresentation(f"missing hom-whisker {L!r}·{q!r}")

        intch = dict(self.intch)
        inv3 = dict(self.inv3)
        for L, (p, q) in three.items():
            if L in id3.values():
                inv3.setdefault(L, L)
        for psi, (pf, pg) in two.items():
            for phi, (qf, qg) in two.items():
                if one[qf][1] != one[pf][0]:
                    continue
                if (psi, phi) in intch:
                    continue
                if psi in id2.values() or phi in id2.values():
                    # interchange with an identity 2-cell is an identity 3-cell
                    left = vcomp2[(rw2[(psi, qg)], lw2[(pf, phi)])]
                    intch[(psi, phi)] = id3[left]
                else:
                    raise MalformedPresentation(
                        f"missing interchange {psi!r}:{phi!r}"
                    )

        homs = {}
        for x in self.objects:
            for y in self.objects:
                obs = [f for f, st in one.items() if st == (x, y)]
                mors = {p for p, (f, g) in two.items() if one[f] == (x, y)}
                cels = {L for L, (p, q) in three.items() if two[p][0] in obs}
                homs[(x, y)] = Finite2Category(
                    objects=obs,
                    mor_src={p: two[p][0] for p in mors},
                    mor_tgt={p: two[p][1] for p in mors},
                    cell_src={L: three[L][0] for L in cels},
                    cell_tgt={L: three[L][1] for L in cels},
                    id_mor={f: id2[f] for f in obs},
                    id_cell={p: id3[p] for p in mors},
                    comp_mor={k: v for k, v in vcomp2.items() if k[0] in mors},
                    comp_cell={k: v for k, v in vcomp3.items() if k[0] in cels},
                    whisk_l={k: v for k, v in hwl.items() if k[0] in mors},
                    whisk_r={k: v for k, v in hwr.items() if k[0] in cels},
                    inv_mor={k: v for k, v in self.inv2.items() if k in mors},
                    inv_cell={k: v for k, v in inv3.items() if k in cels},
                )

        return FiniteGrayCategory(
            name=self.name,
            objects=list(self.objects),
            hom=homs,
            compose1=comp1,
            id1=id1,
            lwhisker2=lw2,
            rwhisker2=rw2,
            lwhisker3=lw3,
            rwhisker3=rw3,
            interchange_table=intch,
        )


# ---------------------------------------------------------------------------


def validate_gray_category(g: FiniteGrayCategory) -> ValidationReport:
    """Check the complete Gray-category axiom set, law by law."""
    rep = ValidationReport()

    for key, h in g.hom.items():
        sub = validate_two_category(h)
        rep.merge(sub, prefix=f"hom{key}/")

    # Underlying category of objects and 1-cells.
    for x in g.objects:
        i = g.id1.get(x)
        rep.check("gray/id1-endo", (x,), i is not None and g.one_loc.get(i) == (x, x))
    for gg, f in itertools.product(g.one_loc, g.one_loc):
        if g.one_loc[f][1] == g.one_loc[gg][0]:
            got = g.compose1.get((gg, f))
            ok = got is not None and g.one_loc.get(got) == (
                g.one_loc[f][0],
                g.one_loc[gg][1],
            )
            rep.check("gray/comp1-boundary", (gg, f), ok)
    for f in g.one_loc:
        x, y = g.one_loc[f]
        rep.check("gray/unit1-left", (f,), g.compose1.get((g.id1[y], f)) == f)
        rep.check("gray/unit1-right", (f,), g.compose1.get((f, g.id1[x])) == f)
    for h3 in g.one_loc:
        for g2 in g.onecells(y=g.one_loc[h3][0]):
            for f1 in g.onecells(y=g.one_loc[g2][0]):
                lhs = g.compose1.get((g.compose1[(h3, g2)], f1))
                rhs = g.compose1.get((h3, g.compose1[(g2, f1)]))
                rep.check("gray/assoc1", (h3, g2, f1), lhs == rhs and lhs is not None)

    # Whiskering tables: totality + boundaries.
    def expect2(phi, f_src, f_tgt, axiom, wit):
        ok = (
            phi is not None
            and phi in g.two_loc
            and g.src1(phi) == f_src
            and g.tgt1(phi) == f_tgt
        )
        rep.check(axiom, wit, ok)
        return ok

    for k in g.one_loc:
        kx, ky = g.one_loc[k]
        for phi in g.twocells():
            f, f2 = g.src1(phi), g.tgt1(phi)
            if g.one_loc[f][1] == kx:
                got = g.lwhisker2.get((k, phi))
                expect2(
                    got,
                    g.compose1[(k, f)],
                    g.compose1[(k, f2)],
                    "gray/lw2-boundary",
                    (k, phi),
                )
            if g.one_loc[f][0] == ky:
                got = g.rwhisker2.get((phi, k))
                expect2(
                    got,
                    g.compose1[(f, k)],
                    g.compose1[(f2, k)],
                    "gray/rw2-boundary",
                    (phi, k),
                )
        for lam in g.threecells():
            p, q = g.src2(lam), g.tgt2(lam)
            f = g.src1(p)
            if g.one_loc[f][1] == kx:
                got = g.lwhisker3.get((k, lam))
                ok = (
                    got is not None
                    and g.src2(got) == g.lwhisker2[(k, p)]
                    and g.tgt2(got) == g.lwhisker2[(k, q)]
                )
                rep.check("gray/lw3-boundary", (k, lam), ok)
            if g.one_loc[f][0] == ky:
                got = g.rwhisker3.get((lam, k))
                ok = (
                    got is not None
                    and g.src2(got) == g.rwhisker2[(p, k)]
                    and g.tgt2(got) == g.rwhisker2[(q, k)]
                )
                rep.check("gray/rw3-boundary", (lam, k), ok)

    # Whisker maps are 2-functors (preserve identities, ·, ∗, hom-whiskers).
    for k in g.one_loc:
        kx, ky = g.one_loc[k]
        for f in g.onecells(y=kx):
            rep.check(
                "gray/lw2-id",
                (k, f),
                g.lwhisker2.get((k, g.id_2(f))) == g.id_2(g.compose1[(k, f)]),
            )
        for f in g.onecells(x=ky):
            rep.check(
                "gray/rw2-id",
                (f, k),
                g.rwhisker2.get((g.id_2(f), k)) == g.id_2(g.compose1[(f, k)]),
            )
        for psi in g.twocells():
            for phi in g.twocells():
                if (
                    g.two_loc[psi] == g.two_loc[phi]
                    and g.src1(psi) == g.tgt1(phi)
                ):
                    if g.two_loc[phi][1] == kx:
                        _guard(
                            rep,
                            "gray/lw2-vcomp",
                            (k, psi, phi),
                            lambda: g.lwhisker2.get((k, g.vcomp2(psi, phi))),
                            lambda: g.vcomp2(g.lw2(k, psi), g.lw2(k, phi)),
                        )
                    if g.two_loc[phi][0] == ky:
                        _guard(
                            rep,
                            "gray/rw2-vcomp",
                            (psi, phi, k),
                            lambda: g.rwhisker2.get((g.vcomp2(psi, phi), k)),
                            lambda: g.vcomp2(g.rw2(psi, k), g.rw2(phi, k)),
                        )
        for lam in g.threecells():
            loc = g.two_loc[g.src2(lam)]
            p = g.src2(lam)
            if loc[1] == kx:
                _guard(
                    rep,
                    "gray/lw3-id3",
                    (k, p),
                    lambda: g.lwhisker3.get((k, g.id_3(p))),
                    lambda: g.id_3(g.lw2(k, p)),
                )
            if loc[0] == ky:
                _guard(
                    rep,
                    "gray/rw3-id3",
                    (p, k),
                    lambda: g.rwhisker3.get((g.id_3(p), k)),
                    lambda: g.id_3(g.rw2(p, k)),
                )
        for t in g.threecells():
            for s in g.threecells():
                if g.two_loc[g.src2(t)] != g.two_loc[g.src2(s)]:
                    continue
                if g.src2(t) != g.tgt2(s):
                    continue
                loc = g.two_loc[g.src2(s)]
                if loc[1] == kx:
                    _guard(
                        rep,
                        "gray/lw3-vcomp3",
                        (k, t, s),
                        lambda: g.lwhisker3.get((k, g.vcomp3(t, s))),
                        lambda: g.vcomp3(g.lw3(k, t), g.lw3(k, s)),
                    )
                if loc[0] == ky:
                    _guard(
                        rep,
                        "gray/rw3-vcomp3",
                        (t, s, k),
                        lambda: g.rwhisker3.get((g.vcomp3(t, s), k)),
                        lambda: g.vcomp3(g.rw3(t, k), g.rw3(s, k)),
                    )
        # preservation of hom-level whiskering
        for psi in g.twocells():
            for lam in g.threecells():
                if g.two_loc[psi] != g.two_loc[g.src2(lam)]:
                    continue
                loc = g.two_loc[psi]
                if g.src1(psi) == g.tgt1(g.src2(lam)):
                    if loc[1] == kx:
                        _guard(
                            rep,
                            "gray/lw3-hwl",
                            (k, psi, lam),
                            lambda: g.lwhisker3.get((k, g.hwl(psi, lam))),
                            lambda: g.hwl(g.lw2(k, psi), g.lw3(k, lam)),
                        )
                    if loc[0] == ky:
                        _guard(
                            rep,
                            "gray/rw3-hwl",
                            (psi, lam, k),
                            lambda: g.rwhisker3.get((g.hwl(psi, lam), k)),
                            lambda: g.hwl(g.rw2(psi, k), g.rw3(lam, k)),
                        )
                if g.tgt1(psi) == g.src1(g.src2(lam)):
                    if loc[1] == kx:
                        _guard(
                            rep,
                            "gray/lw3-hwr",
                            (k, lam, psi),
                            lambda: g.lwhisker3.get((k, g.hwr(lam, psi))),
                            lambda: g.hwr(g.lw3(k, lam), g.lw2(k, psi)),
                        )
                    if loc[0] == ky:
                        _guard(
                            rep,
                            "gray/rw3-hwr",
                            (lam, psi, k),
                            lambda: g.rwhisker3.get((g.hwr(lam, psi), k)),
                            lambda: g.hwr(g.rw3(lam, k), g.rw2(psi, k)),
                        )

    # Functoriality of whiskering in the 1-cell argument + lw/rw compatibility.
    for phi in g.twocells():
        x, y = g.two_loc[phi]
        rep.check("gray/lw2-unit1", (phi,), g.lwhisker2.get((g.id1[y], phi)) == phi)
        rep.check("gray/rw2-unit1", (phi,), g.rwhisker2.get((phi, g.id1[x])) == phi)
        for k2, k1 in itertools.product(g.one_loc, g.one_loc):
            if g.one_loc[k1][1] == g.one_loc[k2][0] and g.one_loc[k1][0] == y:
                _guard(
                    rep,
                    "gray/lw2-comp1",
                    (k2, k1, phi),
                    lambda: g.lwhisker2.get((g.compose1[(k2, k1)], phi)),
                    lambda: g.lwhisker2.get((k2, g.lw2(k1, phi))),
                )
            if g.one_loc[k1][1] == g.one_loc[k2][0] and g.one_loc[k2][1] == x:
                _guard(
                    rep,
                    "gray/rw2-comp1",
                    (phi, k2, k1),
                    lambda: g.rwhisker2.get((phi, g.compose1[(k2, k1)])),
                    lambda: g.rwhisker2.get((g.rw2(phi, k2), k1)),
                )
        for k in g.onecells(x=y):
            for m in g.onecells(y=x):
                _guard(
                    rep,
                    "gray/lw-rw-compat",
                    (k, phi, m),
                    lambda: g.lwhisker2.get((k, g.rw2(phi, m))),
                    lambda: g.rwhisker2.get((g.lw2(k, phi), m)),
                )
    for lam in g.threecells():
        x, y = g.two_loc[g.src2(lam)]
        rep.check("gray/lw3-unit1", (lam,), g.lwhisker3.get((g.id1[y], lam)) == lam)
        rep.check("gray/rw3-unit1", (lam,), g.rwhisker3.get((lam, g.id1[x])) == lam)
        for k2, k1 in itertools.product(g.one_loc, g.one_loc):
            if g.one_loc[k1][1] == g.one_loc[k2][0] and g.one_loc[k1][0] == y:
                _guard(
                    rep,
                    "gray/lw3-comp1",
                    (k2, k1, lam),
                    lambda: g.lwhisker3.get((g.compose1[(k2, k1)], lam)),
                    lambda: g.lwhisker3.get((k2, g.lw3(k1, lam))),
                )
            if g.one_loc[k1][1] == g.one_loc[k2][0] and g.one_loc[k2][1] == x:
                _guard(
                    rep,
                    "gray/rw3-comp1",
                    (lam, k2, k1),
                    lambda: g.rwhisker3.get((lam, g.compose1[(k2, k1)])),
                    lambda: g.rwhisker3.get((g.rw3(lam, k2), k1)),
                )
        for k in g.onecells(x=y):
            for m in g.onecells(y=x):
                _guard(
                    rep,
                    "gray/lw3-rw3-compat",
                    (k, lam, m),
                    lambda: g.lwhisker3.get((k, g.rw3(lam, m))),
                    lambda: g.rwhisker3.get((g.lw3(k, lam), m)),
                )

    _validate_interchange(g, rep)
    return rep


_MISSING = object()


def _guard(rep, axiom, witness, lhs_fn, rhs_fn):
    """Evaluate both sides, reporting a failure on any lookup error."""
    try:
        lhs = lhs_fn()
        rhs = rhs_fn()
    except (KeyError, MalformedPresentation, NonInvertible):
        rep.check(axiom, witness, False)
        return
    rep.check(axiom, witness, lhs == rhs and lhs is not None)


def _validate_interchange(g: FiniteGrayCategory, rep: ValidationReport):
    """The standard Gray interchange laws, each individually reportable."""
    for psi, phi in g.horizontally_adjacent():
        c = g.interchange_table.get((psi, phi))
        f, f2 = g.src1(phi), g.tgt1(phi)
        k, k2 = g.src1(psi), g.tgt1(psi)
        try:
            src = g.vcomp2(g.rw2(psi, f2), g.lw2(k, phi))
            tgt = g.vcomp2(g.lw2(k2, phi), g.rw2(psi, f))
            ok = c is not None and g.src2(c) == src and g.tgt2(c) == tgt
        except (KeyError, MalformedPresentation):
            ok = False
        rep.check("gray/intch-boundary", (psi, phi), ok)
        if not ok:
            continue
        # invertibility with a stored (or unique) inverse
        rep.check("gray/intch-invertible", (psi, phi), g.has_inv3(c))
        # identity degeneracy
        if g.is_id2(psi) or g.is_id2(phi):
            rep.check("gray/intch-identity", (psi, phi), g.is_id3(c))

    # naturality in the left argument against 3-cells
    for theta in g.threecells():
        psi, psi2 = g.src2(theta), g.tgt2(theta)
        for phi in g.twocells():
            if g.two_loc[phi][1] != g.two_loc[psi][0]:
                continue
            f, f2 = g.src1(phi), g.tgt1(phi)
            k = g.src1(psi)
            k2 = g.tgt1(psi)
            _guard(
                rep,
                "gray/intch-natural-left",
                (theta, phi),
                lambda: g.vcomp3(
                    g.interchange(psi2, phi),
                    g.hwr(g.rw3(theta, f2), g.lw2(k, phi)),
                ),
                lambda: g.vcomp3(
                    g.hwl(g.lw2(k2, phi), g.rw3(theta, f)),
                    g.interchange(psi, phi),
                ),
            )

    # naturality in the right argument against 3-cells
    for lam in g.threecells():
        phi, phi2 = g.src2(lam), g.tgt2(lam)
        for psi in g.twocells():
            if g.two_loc[psi][0] != g.two_loc[phi][1]:
                continue
            f, f2 = g.src1(phi), g.tgt1(phi)
            k, k2 = g.src1(psi), g.tgt1(psi)
            _guard(
                rep,
                "gray/intch-natural-right",
                (lam, psi),
                lambda: g.vcomp3(
                    g.interchange(psi, phi2),
                    g.hwl(g.rw2(psi, f2), g.lw3(k, lam)),
                ),
                lambda: g.vcomp3(
                    g.hwr(g.lw3(k2, lam), g.rw2(psi, f)),
                    g.interchange(psi, phi),
                ),
            )

    # compatibility with vertical composition in either argument
    for psi, phi in g.horizontally_adjacent():
        k, k2 = g.src1(psi), g.tgt1(psi)
        for phi1 in g.twocells():
            if g.two_loc[phi1] != g.two_loc[phi] or g.tgt1(phi1) != g.src1(phi):
                continue
            _guard(
                rep,
                "gray/intch-vcomp-right",
                (psi, phi, phi1),
                lambda: g.interchange(psi, g.vcomp2(phi, phi1)),
                lambda: g.vcomp3(
                    g.hwl(g.lw2(k2, phi), g.interchange(psi, phi1)),
                    g.hwr(g.interchange(psi, phi), g.lw2(k, phi1)),
                ),
            )
        for psi1 in g.twocells():
            if g.two_loc[psi1] != g.two_loc[psi] or g.tgt1(psi1) != g.src1(psi):
                continue
            f, f2 = g.src1(phi), g.tgt1(phi)
            _guard(
                rep,
                "gray/intch-vcomp-left",
                (psi, psi1, phi),
                lambda: g.interchange(g.vcomp2(psi, psi1), phi),
                lambda: g.vcomp3(
                    g.hwr(g.interchange(psi, phi), g.rw2(psi1, f)),
                    g.hwl(g.rw2(psi, f2), g.interchange(psi1, phi)),
                ),
            )

    # compatibility with composition of 1-cells (three positions)
    for psi, phi in g.horizontally_adjacent():
        xm = g.two_loc[phi][0]
        ym = g.two_loc[psi][1]
        for e in g.onecells(y=xm):
            _guard(
                rep,
                "gray/intch-whisk-outer-r",
                (psi, phi, e),
                lambda: g.interchange_table.get((psi, g.rw2(phi, e))),
                lambda: g.rw3(g.interchange(psi, phi), e),
            )
        for h in g.onecells(x=ym):
            _guard(
                rep,
                "gray/intch-whisk-outer-l",
                (h, psi, phi),
                lambda: g.interchange_table.get((g.lw2(h, psi), phi)),
                lambda: g.lw3(h, g.interchange(psi, phi)),
            )
    for psi in g.twocells():
        for phi in g.twocells():
            sm = g.two_loc[phi][1]
            tm = g.two_loc[psi][0]
            for m in g.onecells(x=sm, y=tm):
                _guard(
                    rep,
                    "gray/intch-whisk-middle",
                    (psi, m, phi),
                    lambda: g.interchange_table.get((psi, g.lw2(m, phi))),
                    lambda: g.interchange_table.get((g.rw2(psi, m), phi)),
                )


# ---------------------------------------------------------------------------


def co_dual_category(g: FiniteGrayCategory) -> FiniteGrayCategory:
    """Reverse every 2-cell; 0/1/3-cells keep their orientation.

    Cell identifiers are preserved, so the construction is a strict
    involution.  The interchange cell for reversed arguments is the stored
    inverse of the original one.
    """
    homs = {}
    for key, h in g.hom.items():
        homs[key] = Finite2Category(
            objects=list(h.objects),
            mor_src=dict(h.mor_tgt),
            mor_tgt=dict(h.mor_src),
            cell_src=dict(h.cell_src),
            cell_tgt=dict(h.cell_tgt),
            id_mor=dict(h.id_mor),
            id_cell=dict(h.id_cell),
            comp_mor={(p, q): v for (q, p), v in h.comp_mor.items()},
            comp_cell=dict(h.comp_cell),
            whisk_l={(q, s): v for (s, q), v in h.whisk_r.items()},
            whisk_r={(s, q): v for (q, s), v in h.whisk_l.items()},
            inv_mor=dict(h.inv_mor),
            inv_cell=dict(h.inv_cell),
        )
    intch = {}
    for (psi, phi), c in g.interchange_table.items():
        intch[(psi, phi)] = g.inv3(c)
    return FiniteGrayCategory(
        name=f"co[{g.name}]" if not g.name.startswith("co[") else g.name[3:-1],
        objects=list(g.objects),
        hom=homs,
        compose1=dict(g.compose1),
        id1=dict(g.id1),
        lwhisker2=dict(g.lwhisker2),
        rwhisker2=dict(g.rwhisker2),
        lwhisker3=dict(g.lwhisker3),
        rwhisker3=dict(g.rwhisker3),
        interchange_table=intch,
    )
