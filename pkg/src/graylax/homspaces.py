"""Materialized mapping spaces: Lax(A,B), Oplax(A,B), Psd(A,B), their
strict cores, whiskering actions, evaluation maps and the path space.

A materialized hom is a finite Gray-category plus dictionaries between
interned cell names and the transformation data they denote, so failures
downstream can always cite component tables rather than bare identifiers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graycat import FiniteGrayCategory, GrayBuilder, co_dual_category
from .homops import VirtualLaxHom, virtual_hom
from .enumerate import (
    DEFAULT_BUDGET,
    enumerate_lax_transformations,
    enumerate_modifications,
    enumerate_perturbations,
    enumerate_pseudo_transformations,
    enumerate_pseudomaps,
)
from .pseudomaps import (
    Pseudomap,
    _cocycle_pairs,
    co_dual_pseudomap,
    compose_pseudomaps,
    identity_pseudomap,
    make_pseudomap,
    strict_pseudomap,
)
from .report import BudgetExceeded, MalformedPresentation
from .transforms import (
    LaxTransformation,
    Modification,
    Perturbation,
    PseudoTransformation,
    compose_pseudo_transformations,
    identity_modification,
    identity_perturbation,
    identity_pseudo_transformation,
    identity_transformation,
    make_lax_transformation,
    make_modification,
)
from .util import FrozenTable


@dataclass(eq=False)
class MaterializedHom:
    cat: FiniteGrayCategory
    ops: VirtualLaxHom
    decode0: dict = field(default_factory=dict)  # object id -> Pseudomap
    decode1: dict = field(default_factory=dict)
    decode2: dict = field(default_factory=dict)
    decode3: dict = field(default_factory=dict)
    encode0: dict = field(default_factory=dict)
    encode1: dict = field(default_factory=dict)
    encode2: dict = field(default_factory=dict)
    encode3: dict = field(default_factory=dict)

    def encode_cell(self, level, data):
        enc = getattr(self, f"encode{level}")
        if data not in enc:
            raise MalformedPresentation(
                f"cell of level {level} not present in materialized hom"
            )
        return enc[data]

    def decode_pseudomap_into(self, F: Pseudomap) -> Pseudomap:
        """Convert a pseudomap into this materialized hom into a pseudomap
        into the virtual hom (dictionaries applied to all values)."""
        return Pseudomap(
            dom=F.dom,
            cod=self.ops,
            m0=FrozenTable({k: self.decode0[v] for k, v in F.m0.items()}),
            m1=FrozenTable({k: self.decode1[v] for k, v in F.m1.items()}),
            m2=FrozenTable({k: self.decode2[v] for k, v in F.m2.items()}),
            m3=FrozenTable({k: self.decode3[v] for k, v in F.m3.items()}),
            coc=FrozenTable({k: self.decode2[v] for k, v in F.coc.items()}),
        )

    def encode_pseudomap_from(self, F: Pseudomap) -> Pseudomap:
        """Inverse of :meth:`decode_pseudomap_into`."""
        return Pseudomap(
            dom=F.dom,
            cod=self.cat,
            m0=FrozenTable({k: self.encode0[v] for k, v in F.m0.items()}),
            m1=FrozenTable({k: self.encode1[v] for k, v in F.m1.items()}),
            m2=FrozenTable({k: self.encode2[v] for k, v in F.m2.items()}),
            m3=FrozenTable({k: self.encode3[v] for k, v in F.m3.items()}),
            coc=FrozenTable({k: self.encode2[v] for k, v in F.coc.items()}),
        )


def _materialize(name, ops, objects, ones, twos, threes) -> MaterializedHom:
    """Intern cell data and tabulate the virtual operations."""
    b = GrayBuilder(name)
    enc0, enc1, enc2, enc3 = {}, {}, {}, {}

    for i, F in enumerate(objects):
        b.obj(f"F{i}")
        enc0[F] = f"F{i}"
    for F in objects:
        enc1[ops.id_1(F)] = f"1[{enc0[F]}]"
    k = 0
    for t in ones:
        if t in enc1:
            continue
        nm = f"t{k}"
        k += 1
        b.one_cell(nm, enc0[t.src], enc0[t.tgt])
        enc1[t] = nm
    for t in ones:
        enc2.setdefault(ops.id_2(t), f"1[{enc1[t]}]")
    k = 0
    for m in twos:
        if m in enc2:
            continue
        nm = f"m{k}"
        k += 1
        b.two_cell(nm, enc1[m.src], enc1[m.tgt])
        enc2[m] = nm
    for m in twos:
        enc3.setdefault(ops.id_3(m), f"1[{enc2[m]}]")
    k = 0
    for p in threes:
        if p in enc3:
            continue
        nm = f"p{k}"
        k += 1
        b.three_cell(nm, enc2[p.src], enc2[p.tgt])
        enc3[p] = nm

    ones_all = list(enc1)
    twos_all = list(enc2)
    threes_all = list(enc3)

    def is_id1(t):
        return t == ops.id_1(t.src)

    def is_id2(m):
        return m == ops.id_2(m.src)

    def is_id3(p):
        return p == ops.id_3(p.src)

    for t2 in ones_all:
        for t1 in ones_all:
            if t1.tgt != t2.src:
                continue
            if is_id1(t1) or is_id1(t2):
                continue
            b.set_comp1(enc1[t2], enc1[t1], enc1[ops.comp1(t2, t1)])
    for m2 in twos_all:
        for m1 in twos_all:
            if m1.tgt != m2.src:
                continue
            if is_id2(m1) or is_id2(m2):
                continue
            b.set_vcomp2(enc2[m2], enc2[m1], enc2[ops.vcomp2(m2, m1)])
    for p2 in threes_all:
        for p1 in threes_all:
            if p1.tgt != p2.src:
                continue
            if is_id3(p1) or is_id3(p2):
                continue
            b.set_vcomp3(enc3[p2], enc3[p1], enc3[ops.vcomp3(p2, p1)])
    for m in twos_all:
        for p in threes_all:
            if is_id2(m) or is_id3(p):
                continue
            if p.src.tgt == m.src:
                b.set_hwl(enc2[m], enc3[p], enc3[ops.hwl(m, p)])
            if m.tgt == p.src.src:
                b.set_hwr(enc3[p], enc2[m], enc3[ops.hwr(p, m)])
    for t in ones_all:
        if is_id1(t):
            continue
        for m in twos_all:
            if is_id2(m):
                continue
            if m.src.tgt == t.src:
                b.set_lw2(enc1[t], enc2[m], enc2[ops.lw2(t, m)])
            if t.tgt == m.src.src:
                b.set_rw2(enc2[m], enc1[t], enc2[ops.rw2(m, t)])
        for p in threes_all:
            if is_id3(p):
                continue
            if p.src.src.tgt == t.src:
                b.set_lw3(enc1[t], enc3[p], enc3[ops.lw3(t, p)])
            if t.tgt == p.src.src.src:
                b.set_rw3(enc3[p], enc1[t], enc3[ops.rw3(p, t)])
    for m2 in twos_all:
        for m1 in twos_all:
            if m1.src.tgt != m2.src.src:
                continue
            if is_id2(m1) or is_id2(m2):
                continue
            c = ops.interchange(m2, m1)
            b.set_interchange(enc2[m2], enc2[m1], enc3[c], enc3[ops.inv3(c)])

    cat = b.finish()
    mat = MaterializedHom(cat=cat, ops=ops)
    mat.encode0, mat.encode1, mat.encode2, mat.encode3 = enc0, enc1, enc2, enc3
    mat.decode0 = {v: k for k, v in enc0.items()}
    mat.decode1 = {v: k for k, v in enc1.items()}
    mat.decode2 = {v: k for k, v in enc2.items()}
    mat.decode3 = {v: k for k, v in enc3.items()}
    return mat


def lax_hom(a, bcat, budget=DEFAULT_BUDGET) -> MaterializedHom:
    """Materialize Lax(a, b) by complete enumeration within the budget."""
    ops = virtual_hom(a, bcat)
    objects = enumerate_pseudomaps(a, bcat, budget)
    ones, twos, threes = [], [], []
    for F in objects:
        for G in objects:
            ts = enumerate_lax_transformations(F, G, budget)
            ones.extend(ts)
    for t1 in ones:
        for t2 in ones:
            if (t1.src, t1.tgt) != (t2.src, t2.tgt):
                continue
            twos.extend(enumerate_modifications(t1, t2, budget))
    for m1 in twos:
        for m2 in twos:
            if (m1.src, m1.tgt) != (m2.src, m2.tgt):
                continue
            threes.extend(enumerate_perturbations(m1, m2, budget))
    return _materialize(
        f"Lax({a.name},{bcat.name})", ops, objects, ones, twos, threes
    )


def oplax_hom(a, bcat, budget=DEFAULT_BUDGET):
    """Oplax(a,b) computed as co_dual(Lax(a^co, b^co)); returns the
    category together with the lax-side hom it was transported from."""
    aco = co_dual_category(a)
    bco = co_dual_category(bcat)
    inner = lax_hom(aco, bco, budget)
    return co_dual_category(inner.cat), inner


@dataclass(eq=False)
class MaterializedPsdHom:
    cat: FiniteGrayCategory
    lax: MaterializedHom
    forgetful: Pseudomap  # strict map U: Psd(a,b) -> Lax(a,b)
    decode1: dict = field(default_factory=dict)  # id -> PseudoTransformation
    encode1: dict = field(default_factory=dict)


def psd_hom(a, bcat, budget=DEFAULT_BUDGET) -> MaterializedPsdHom:
    """Materialize Psd(a,b) plus the strict forgetful map into Lax(a,b)."""
    lax = lax_hom(a, bcat, budget)
    ops = lax.ops
    objects = list(lax.decode0.values())
    ptrs = []
    for F in objects:
        for G in objects:
            ptrs.extend(enumerate_pseudo_transformations(F, G, budget))
    by_base = {}
    for pt in ptrs:
        by_base.setdefault(pt.base, []).append(pt)

    def is_pseudo_mod(m: Modification):
        cod = m.src.src.cod
        dom = m.src.src.dom
        return all(cod.has_inv3(m.at1(f)) for f in dom.onecells())

    b = GrayBuilder(f"Psd({a.name},{bcat.name})")
    enc0, enc1, enc2, enc3 = {}, {}, {}, {}
    u0, u1, u2, u3 = {}, {}, {}, {}
    for F in objects:
        nm = lax.encode0[F]
        b.obj(nm)
        enc0[F] = nm
        u0[nm] = nm
        idpt = identity_pseudo_transformation(F)
        enc1[idpt] = f"1[{nm}]"
        u1[f"1[{nm}]"] = f"1[{nm}]"
    k = 0
    for pt in ptrs:
        if pt in enc1:
            continue
        nm = f"s{k}"
        k += 1
        b.one_cell(nm, enc0[pt.base.src], enc0[pt.base.tgt])
        enc1[pt] = nm
        u1[nm] = lax.encode1[pt.base]
    # 2-cells: pseudo-modifications between underlying bases of 1-cells
    pmods = []
    for pt1 in enc1:
        for pt2 in enc1:
            if (pt1.base.src, pt1.base.tgt) != (pt2.base.src, pt2.base.tgt):
                continue
            for m in lax.decode2.values():
                if m.src == pt1.base and m.tgt == pt2.base and is_pseudo_mod(m):
                    pmods.append((pt1, pt2, m))
    for pt in enc1:
        key = (pt, pt, ops.id_2(pt.base))
        enc2[key] = f"1[{enc1[pt]}]"
        u2[f"1[{enc1[pt]}]"] = lax.encode2[ops.id_2(pt.base)]
    k = 0
    for key in pmods:
        if key in enc2:
            continue
        pt1, pt2, m = key
        nm = f"n{k}"
        k += 1
        b.two_cell(nm, enc1[pt1], enc1[pt2])
        enc2[key] = nm
        u2[nm] = lax.encode2[m]
    # 3-cells: perturbations between the modifications
    for key in enc2:
        pt1, pt2, m = key
        enc3[(key, key, ops.id_3(m))] = f"1[{enc2[key]}]"
        u3[f"1[{enc2[key]}]"] = lax.encode3[ops.id_3(m)]
    k = 0
    for key1 in list(enc2):
        for key2 in list(enc2):
            if key1[:2] != key2[:2]:
                continue
            m1, m2 = key1[2], key2[2]
            for t in lax.decode3.values():
                if t.src == m1 and t.tgt == m2:
                    tkey = (key1, key2, t)
                    if tkey in enc3:
                        continue
                    nm = f"q{k}"
                    k += 1
                    b.three_cell(nm, enc2[key1], enc2[key2])
                    enc3[tkey] = nm
                    u3[nm] = lax.encode3[t]

    def ptkey(pt):
        return pt

    def find_pt(base, adjoints):
        cand = PseudoTransformation(base, adjoints)
        if cand in enc1:
            return cand
        raise MalformedPresentation("composite pseudo-transformation missing")

    ones_all = list(enc1)
    for q2 in ones_all:
        for q1 in ones_all:
            if q1.base.tgt != q2.base.src:
                continue
            if q1.base == ops.id_1(q1.base.src) and _is_idpt(q1):
                continue
            if q2.base == ops.id_1(q2.base.src) and _is_idpt(q2):
                continue
            comp_base = ops.comp1(q2.base, q1.base)
            comp = compose_pseudo_transformations(q2, q1, comp_base)
            b.set_comp1(enc1[q2], enc1[q1], enc1[find_pt(comp.base, comp.adjoints)])
    # 2/3-dimensional structure is inherited from the lax hom
    twos_all = list(enc2)
    threes_all = list(enc3)

    def m_of(key):
        return key[2]

    for k2 in twos_all:
        for k1 in twos_all:
            if k1[1] != k2[0]:
                continue
            if _is_id_mod(ops, k1) or _is_id_mod(ops, k2):
                continue
            m = ops.vcomp2(m_of(k2), m_of(k1))
            b.set_vcomp2(enc2[k2], enc2[k1], enc2[(k1[0], k2[1], m)])
    for t2 in threes_all:
        for t1 in threes_all:
            if t1[1] != t2[0]:
                continue
            if _is_id_pert(ops, t1) or _is_id_pert(ops, t2):
                continue
            t = ops.vcomp3(t2[2], t1[2])
            b.set_vcomp3(enc3[t2], enc3[t1], enc3[(t1[0], t2[1], t)])
    for mk in twos_all:
        for tk in threes_all:
            if _is_id_mod(ops, mk) or _is_id_pert(ops, tk):
                continue
            if tk[1] == mk[0]:
                t = ops.hwl(m_of(mk), tk[2])
                b.set_hwl(enc2[mk], enc3[tk], enc3[(tk[0], mk[1], t)])
            if mk[1] == tk[0]:
                t = ops.hwr(tk[2], m_of(mk))
                b.set_hwr(enc3[tk], enc2[mk], enc3[(mk[0], tk[1], t)])
    for q in ones_all:
        if _is_idpt(q):
            continue
        for mk in twos_all:
            if _is_id_mod(ops, mk):
                continue
            if mk[1].base.tgt == q.base.src:
                m = ops.lw2(q.base, m_of(mk))
                kk = (_compose_key(ops, q, mk[0]), _compose_key(ops, q, mk[1]), m)
                b.set_lw2(enc1[q], enc2[mk], enc2[kk])
            if q.base.tgt == mk[0].base.src:
                m = ops.rw2(m_of(mk), q.base)
                kk = (_compose_key(ops, mk[0], q), _compose_key(ops, mk[1], q), m)
                b.set_rw2(enc2[mk], enc1[q], enc2[kk])
        for tk in threes_all:
            if _is_id_pert(ops, tk):
                continue
            mk1, mk2, t = tk
            if mk1[0].base.tgt == q.base.src:
                tt = ops.lw3(q.base, t)
                kk1 = (
                    _compose_key(ops, q, mk1[0]),
                    _compose_key(ops, q, mk1[1]),
                    ops.lw2(q.base, mk1[2]),
                )
                kk2 = (
                    _compose_key(ops, q, mk2[0]),
                    _compose_key(ops, q, mk2[1]),
                    ops.lw2(q.base, mk2[2]),
                )
                b.set_lw3(enc1[q], enc3[tk], enc3[(kk1, kk2, tt)])
            if q.base.tgt == mk1[0].base.src:
                tt = ops.rw3(t, q.base)
                kk1 = (
                    _compose_key(ops, mk1[0], q),
                    _compose_key(ops, mk1[1], q),
                    ops.rw2(mk1[2], q.base),
                )
                kk2 = (
                    _compose_key(ops, mk2[0], q),
                    _compose_key(ops, mk2[1], q),
                    ops.rw2(mk2[2], q.base),
                )
                b.set_rw3(enc3[tk], enc1[q], enc3[(kk1, kk2, tt)])
    for k2 in twos_all:
        for k1 in twos_all:
            if k1[0].base.tgt != k2[0].base.src:
                continue
            if _is_id_mod(ops, k1) or _is_id_mod(ops, k2):
                continue
            c = ops.interchange(m_of(k2), m_of(k1))
            skey = (
                _compose_key(ops, k2[0], k1[1]),
                _compose_key(ops, k2[1], k1[0]),
                c,
            )
            cinv = ops.inv3(c)
            ikey = (skey[1], skey[0], cinv)
            b.set_interchange(enc2[k2], enc2[k1], enc3[skey], enc3[ikey])

    cat = b.finish()
    decode1 = {v: k for k, v in enc1.items()}
    # forgetful strict map
    U = strict_pseudomap(
        cat,
        lax.cat,
        {o: u0[o] for o in cat.objects},
        {f: u1[f] for f in cat.onecells()},
        {m: u2[m] for m in cat.twocells()},
        {t: u3[t] for t in cat.threecells()},
    )
    out = MaterializedPsdHom(cat=cat, lax=lax, forgetful=U)
    out.decode1 = decode1
    out.encode1 = {k: v for k, v in enc1.items()}
    return out


def _is_idpt(pt: PseudoTransformation):
    base = pt.base
    return pt == identity_pseudo_transformation(base.src) and base.src == base.tgt


def _is_id_mod(ops, key):
    return key[2] == ops.id_2(key[2].src)


def _is_id_pert(ops, key):
    return key[2] == ops.id_3(key[2].src)


def _compose_key(ops, q2, q1):
    """Key of the composite pseudo-transformation for whisker bookkeeping."""
    comp_base = ops.comp1(q2.base, q1.base)
    return compose_pseudo_transformations(q2, q1, comp_base)


def strict_core_hom(mat: MaterializedHom) -> FiniteGrayCategory:
    """Full sub-Gray-category on the strict pseudomaps."""
    keep = {
        name for name, F in mat.decode0.items() if F.is_strict()
    }
    return _full_subcategory(mat.cat, keep, f"{mat.cat.name}_s")


def _full_subcategory(cat: FiniteGrayCategory, keep, name):
    b = GrayBuilder(name)
    for x in cat.objects:
        if x in keep:
            b.obj(x)

    def kept1(f):
        return cat.one_loc[f][0] in keep and cat.one_loc[f][1] in keep

    for f in cat.onecells():
        if kept1(f) and not f.startswith("1["):
            b.one_cell(f, *cat.one_loc[f])
    for p in cat.twocells():
        if cat.two_loc[p][0] in keep and not p.startswith("1["):
            b.two_cell(p, cat.src1(p), cat.tgt1(p))
    for t in cat.threecells():
        if cat.three_loc[t][0] in keep and not t.startswith("1["):
            b.three_cell(t, cat.src2(t), cat.tgt2(t))
    for (g, f), v in cat.compose1.items():
        if g in b.one and f in b.one and not (g.startswith("1[") or f.startswith("1[")):
            b.set_comp1(g, f, v)
    for key, h in cat.hom.items():
        if key[0] not in keep or key[1] not in keep:
            continue
        for (q, p), v in h.comp_mor.items():
            if not (q.startswith("1[") or p.startswith("1[")):
                b.set_vcomp2(q, p, v)
        for (t, s), v in h.comp_cell.items():
            if not (t.startswith("1[") or s.startswith("1[")):
                b.set_vcomp3(t, s, v)
        for (q, s), v in h.whisk_l.items():
            if not (q.startswith("1[") or s.startswith("1[")):
                b.set_hwl(q, s, v)
        for (s, q), v in h.whisk_r.items():
            if not (q.startswith("1[") or s.startswith("1[")):
                b.set_hwr(s, q, v)
    for (g, p), v in cat.lwhisker2.items():
        if g in b.one and p in b.two and not (g.startswith("1[") or p.startswith("1[")):
            b.set_lw2(g, p, v)
    for (p, g), v in cat.rwhisker2.items():
        if g in b.one and p in b.two and not (g.startswith("1[") or p.startswith("1[")):
            b.set_rw2(p, g, v)
    for (g, t), v in cat.lwhisker3.items():
        if g in b.one and t in b.three and not (g.startswith("1[") or t.startswith("1[")):
            b.set_lw3(g, t, v)
    for (t, g), v in cat.rwhisker3.items():
        if g in b.one and t in b.three and not (t.startswith("1[") or g.startswith("1[")):
            b.set_rw3(t, g, v)
    for (psi, phi), v in cat.interchange_table.items():
        if psi in b.two and phi in b.two and not (
            psi.startswith("1[") or phi.startswith("1[")
        ):
            b.set_interchange(psi, phi, v, cat.inv3(v))
    return b.finish()


# ---------------------------------------------------------------------------
# whiskering actions and evaluation


def whisker_pre(f: Pseudomap, mat: MaterializedHom, target: MaterializedHom):
    """Lax(f, B): the strict map Lax(A',B) → Lax(A,B) by left whiskering.

    ``mat`` materializes Lax(A',B), ``target`` Lax(A,B), with dom(f) = A and
    cod(f) = A'.
    """
    m0, m1, m2, m3 = {}, {}, {}, {}
    for name, G in mat.decode0.items():
        m0[name] = target.encode0[compose_pseudomaps(G, f)]
    for name, t in mat.decode1.items():
        m1[name] = target.encode1[whisker_transformation_pre(t, f)]
    for name, m in mat.decode2.items():
        m2[name] = target.encode2[whisker_modification_pre(m, f)]
    for name, t in mat.decode3.items():
        m3[name] = target.encode3[whisker_perturbation_pre(t, f)]
    return strict_pseudomap(mat.cat, target.cat, m0, m1, m2, m3)


def whisker_transformation_pre(beta: LaxTransformation, f: Pseudomap):
    """βF per Appendix C.1.1 (precomposition by a pseudomap)."""
    from .pasting import Paster

    G, G2 = beta.src, beta.tgt
    a = f.dom
    cod = beta.src.cod
    src = compose_pseudomaps(G, f)
    tgt = compose_pseudomaps(G2, f)
    comp0 = {x: beta.at0(f.on0(x)) for x in a.objects}
    comp1 = {g: beta.at1(f.on1(g)) for g in a.onecells()}
    comp2 = {phi: beta.at2(f.on2(phi)) for phi in a.twocells()}
    coc = {}
    for g2, g1 in _cocycle_pairs(a):
        x, y, z = a.src0(g1), a.tgt0(g1), a.tgt0(g2)
        u1, u2 = f.on1(g1), f.on1(g2)
        u21 = f.on1(a.comp1(g2, g1))
        fcoc = f.cocycle(g2, g1)
        p = Paster(cod, (beta.at0(f.on0(x)), G2.on1(u1), G2.on1(u2)))
        p.push(beta.at1(u1), 0, 2, (G.on1(u1), beta.at0(f.on0(y))))
        p.push(beta.at1(u2), 1, 2, (G.on1(u2), beta.at0(f.on0(z))))
        p.push(G.cocycle(u2, u1), 0, 2, (G.on1(f.cod.comp1(u2, u1)),))
        p.push(G.on2(fcoc), 0, 1, (G.on1(u21),))
        p.rewrite(
            0, 3, beta.cocycle(u2, u1), 0, 3,
            [
                (G2.cocycle(u2, u1), 1, 2, (G2.on1(f.cod.comp1(u2, u1)),)),
                (beta.at1(f.cod.comp1(u2, u1)), 0, 2,
                 (G.on1(f.cod.comp1(u2, u1)), beta.at0(f.on0(z)))),
            ],
        )
        p.rewrite(
            1, 3, beta.at2(fcoc), 0, 2,
            [
                (G2.on2(fcoc), 1, 1, (G2.on1(u21),)),
                (beta.at1(u21), 0, 2, (G.on1(u21), beta.at0(f.on0(z)))),
            ],
        )
        coc[(g2, g1)] = p.result()
    return LaxTransformation(
        src, tgt, FrozenTable(comp0), FrozenTable(comp1),
        FrozenTable(comp2), FrozenTable(coc),
    )


def whisker_modification_pre(m: Modification, f: Pseudomap):
    a = f.dom
    t_src = whisker_transformation_pre(m.src, f)
    t_tgt = whisker_transformation_pre(m.tgt, f)
    comp0 = {x: m.at0(f.on0(x)) for x in a.objects}
    comp1 = {g: m.at1(f.on1(g)) for g in a.onecells()}
    return Modification(t_src, t_tgt, FrozenTable(comp0), FrozenTable(comp1))


def whisker_perturbation_pre(t: Perturbation, f: Pseudomap):
    a = f.dom
    m_src = whisker_modification_pre(t.src, f)
    m_tgt = whisker_modification_pre(t.tgt, f)
    comp0 = {x: t.at0(f.on0(x)) for x in a.objects}
    return Perturbation(m_src, m_tgt, FrozenTable(comp0))


# -- right whiskering (Appendix C.2) ------------------------------------------


def whisker_transformation_post(g: Pseudomap, alpha: LaxTransformation):
    """Gα per Appendix C.2: conjugation by the cocycle of g."""
    F, F2 = alpha.src, alpha.tgt
    a = F.dom
    bc = g.dom  # = F.cod
    bp = g.cod
    src = compose_pseudomaps(g, F)
    tgt = compose_pseudomaps(g, F2)
    comp0 = {x: g.on1(alpha.at0(x)) for x in a.objects}
    comp1 = {}
    for f in a.onecells():
        x, y = a.one_loc[f]
        comp1[f] = bp.vcomp2(
            bp.inv2(g.cocycle(alpha.at0(y), F.on1(f))),
            bp.vcomp2(
                g.on2(alpha.at1(f)),
                g.cocycle(F2.on1(f), alpha.at0(x)),
            ),
        )
    comp2 = {}
    for phi in a.twocells():
        f, f2 = a.src1(phi), a.tgt1(phi)
        x, y = a.two_loc[phi]
        comp2[phi] = bp.hwl(
            bp.inv2(g.cocycle(alpha.at0(y), F.on1(f2))),
            bp.hwr(g.on3(alpha.at2(phi)), g.cocycle(F2.on1(f), alpha.at0(x))),
        )
    coc = {}
    for f2, f1 in _cocycle_pairs(a):
        x = a.src0(f1)
        z = a.tgt0(f2)
        f21 = a.comp1(f2, f1)
        q1 = bp.vcomp2(
            g.cocycle(bc.comp1(F2.on1(f2), F2.on1(f1)), alpha.at0(x)),
            bp.rw2(g.cocycle(F2.on1(f2), F2.on1(f1)), g.on1(alpha.at0(x))),
        )
        q2 = bp.vcomp2(
            bp.lw2(g.on1(alpha.at0(z)), g.on2(F.cocycle(f2, f1))),
            bp.inv2(g.cocycle(alpha.at0(z), bc.comp1(F.on1(f2), F.on1(f1)))),
        )
        coc[(f2, f1)] = bp.hwl(q2, bp.hwr(g.on3(alpha.cocycle(f2, f1)), q1))
    return LaxTransformation(
        src, tgt, FrozenTable(comp0), FrozenTable(comp1),
        FrozenTable(comp2), FrozenTable(coc),
    )


def whisker_modification_post(g: Pseudomap, m: Modification):
    alpha, alpha2 = m.src, m.tgt
    F, F2 = alpha.src, alpha.tgt
    a = F.dom
    bp = g.cod
    t_src = whisker_transformation_post(g, alpha)
    t_tgt = whisker_transformation_post(g, alpha2)
    comp0 = {x: g.on2(m.at0(x)) for x in a.objects}
    comp1 = {}
    for f in a.onecells():
        x, y = a.one_loc[f]
        comp1[f] = bp.hwl(
            bp.inv2(g.cocycle(alpha2.at0(y), F.on1(f))),
            bp.hwr(g.on3(m.at1(f)), g.cocycle(F2.on1(f), alpha.at0(x))),
        )
    return Modification(t_src, t_tgt, FrozenTable(comp0), FrozenTable(comp1))


def whisker_perturbation_post(g: Pseudomap, t: Perturbation):
    a = t.src.src.src.dom
    m_src = whisker_modification_post(g, t.src)
    m_tgt = whisker_modification_post(g, t.tgt)
    comp0 = {x: g.on3(t.at0(x)) for x in a.objects}
    return Perturbation(m_src, m_tgt, FrozenTable(comp0))


def whisker_post(mat: MaterializedHom, g: Pseudomap, target: MaterializedHom):
    """Lax(A, g): pseudomap Lax(A,B) → Lax(A,B'); strict when g is.

    The cocycle modification has object component g²_{α'_x,α_x} and
    identity 1-cell components (C.2.5).
    """
    m0, m1, m2, m3 = {}, {}, {}, {}
    for name, F in mat.decode0.items():
        m0[name] = target.encode0[compose_pseudomaps(g, F)]
    for name, t in mat.decode1.items():
        m1[name] = target.encode1[whisker_transformation_post(g, t)]
    for name, m in mat.decode2.items():
        m2[name] = target.encode2[whisker_modification_post(g, m)]
    for name, t in mat.decode3.items():
        m3[name] = target.encode3[whisker_perturbation_post(g, t)]
    coc = {}
    bp = g.cod
    a = next(iter(mat.decode0.values())).dom
    for n2 in mat.cat.onecells():
        for n1 in mat.cat.onecells(y=mat.cat.src0(n2)):
            a2 = mat.decode1[n2]
            a1 = mat.decode1[n1]
            g_a2 = whisker_transformation_post(g, a2)
            g_a1 = whisker_transformation_post(g, a1)
            composite = mat.ops.comp1(a2, a1)
            g_comp = whisker_transformation_post(g, composite)
            tops = target.ops
            pair = tops.comp1(g_a2, g_a1)
            comp0 = {
                x: g.cocycle(a2.at0(x), a1.at0(x)) for x in a.objects
            }
            comp1 = {}
            for f in a.onecells():
                val = bp.vcomp2(g_comp.at1(f), bp.lw2(
                    g_comp.tgt.on1(f), comp0[a.src0(f)]))
                comp1[f] = bp.id_3(val)
            modif = Modification(pair, g_comp, FrozenTable(comp0), FrozenTable(comp1))
            coc[(n2, n1)] = target.encode2[modif]
    return make_pseudomap(mat.cat, target.cat, m0, m1, m2, m3, coc)


def evaluation_map(mat: MaterializedHom, x) -> Pseudomap:
    """ev_x: Lax(A,B) → B, a strict Gray-functor."""
    bcat = mat.ops.base
    m0 = {name: F.on0(x) for name, F in mat.decode0.items()}
    m1 = {name: t.at0(x) for name, t in mat.decode1.items()}
    m2 = {name: m.at0(x) for name, m in mat.decode2.items()}
    m3 = {name: t.at0(x) for name, t in mat.decode3.items()}
    return strict_pseudomap(mat.cat, bcat, m0, m1, m2, m3)


def path_space(bcat, budget=DEFAULT_BUDGET):
    """P(b) = Lax(2, b) with source/target/reflexivity strict maps."""
    from .builtins import builtin_category

    wa = builtin_category("walking_arrow")
    mat = lax_hom(wa, bcat, budget)
    s = evaluation_map(mat, "x")
    t = evaluation_map(mat, "y")
    m0, m1, m2, m3 = {}, {}, {}, {}
    for ob in bcat.objects:
        const = make_pseudomap(
            wa, bcat,
            {"x": ob, "y": ob},
            {"f": bcat.id_1(ob)},
        )
        m0[ob] = mat.encode0[const]
    for f in bcat.onecells():
        x, y = bcat.one_loc[f]
        tr = make_lax_transformation(
            mat.decode0[m0[x]], mat.decode0[m0[y]],
            {"x": f, "y": f},
            {"f": bcat.id_2(f)},
        )
        m1[f] = mat.encode1[tr]
    for phi in bcat.twocells():
        f, f2 = bcat.src1(phi), bcat.tgt1(phi)
        mo = make_modification(
            mat.decode1[m1[f]], mat.decode1[m1[f2]],
            {"x": phi, "y": phi},
            {"f": bcat.id_3(phi)},
        )
        m2[phi] = mat.encode2[mo]
    for lam in bcat.threecells():
        p1, p2 = bcat.src2(lam), bcat.tgt2(lam)
        pe = Perturbation(
            mat.decode2[m2[p1]], mat.decode2[m2[p2]],
            FrozenTable({"x": lam, "y": lam}),
        )
        m3[lam] = mat.encode3[pe]
    i = strict_pseudomap(bcat, mat.cat, m0, m1, m2, m3)
    return mat, s, t, i
