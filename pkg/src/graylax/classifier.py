"""The pseudomap classifier comonad Q, truncated at a word-length bound,
with its universal maps, factorization, and algebraic surjections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graycat import FiniteGrayCategory, GrayBuilder
from .pseudomaps import Pseudomap, identity_pseudomap, make_pseudomap, strict_pseudomap
from .report import LiftFailure, MalformedPresentation, TruncationOverflow, ValidationReport
from .util import FrozenTable


def _word_name(word):
    return "w[" + ",".join(word) + "]"


def _q2(wsrc, wtgt, phi):
    return f"q2[{_word_name(wsrc)};{_word_name(wtgt)};{phi}]"


def _q3(wsrc, wtgt, lam):
    return f"q3[{_word_name(wsrc)};{_word_name(wtgt)};{lam}]"


def classifier_Q(a: FiniteGrayCategory, max_word_len: int = 3):
    """Build (QA, q: A → QA, p: QA → A) truncated at ``max_word_len``.

    1-cells of QA are identities plus words of composable non-identity
    1-cells of A; hom 2-categories are pulled back along the composite map,
    so p is fully faithful on 2- and 3-cells.  Raises TruncationOverflow
    when the words of A do not close up under composition within the bound.
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")

    nonid = [f for f in a.onecells() if f != a.id_1(a.src0(f))]
    words = []
    frontier = [(f,) for f in nonid]
    while frontier:
        words.extend(frontier)
        nxt = []
        for w in frontier:
            if len(w) == max_word_len:
                continue
            for f in nonid:
                if a.src0(f) == a.tgt0(w[-1]):
                    nxt.append(w + (f,))
        frontier = nxt

    # closure check: concatenations of retained words must stay within bound
    offending = [
        (w2, w1)
        for w1, w2 in itertools.product(words, words)
        if a.src0(w2[0]) == a.tgt0(w1[-1]) and len(w1) + len(w2) > max_word_len
    ]
    if offending:
        raise TruncationOverflow(
            f"{len(offending)} word composite(s) exceed bound {max_word_len}",
            offending=offending,
        )

    def eps(word):
        return a.compose_word(list(word))

    b = GrayBuilder(f"Q[{a.name}]@{max_word_len}")
    for x in a.objects:
        b.obj(x)
    wname = {}
    for w in words:
        wname[w] = _word_name(w)
        b.one_cell(wname[w], a.src0(w[0]), a.tgt0(w[-1]))
    for w1, w2 in itertools.product(words, words):
        if a.src0(w2[0]) == a.tgt0(w1[-1]):
            b.set_comp1(wname[w2], wname[w1], wname[w1 + w2])

    # 1-cells of QA and their composites in A (identities included).
    qcells = {wname[w]: eps(w) for w in words}
    for x in a.objects:
        qcells[f"1[{x}]"] = a.id_1(x)

    def parallel_pairs():
        for u, v in itertools.product(qcells, qcells):
            # boundary bookkeeping through the builder's tables
            yield u, v

    loc = {wname[w]: (a.src0(w[0]), a.tgt0(w[-1])) for w in words}
    for x in a.objects:
        loc[f"1[{x}]"] = (x, x)

    two_of = {}
    for u, v in itertools.product(qcells, qcells):
        if loc[u] != loc[v]:
            continue
        for phi in a.twocells():
            if a.src1(phi) == qcells[u] and a.tgt1(phi) == qcells[v]:
                if u == v and a.is_id2(phi):
                    continue  # becomes the identity 2-cell of u
                name = _q2(_split(u), _split(v), phi)
                b.two_cell(name, u, v)
                two_of[name] = (u, v, phi)

    def q2name(u, v, phi):
        if u == v and a.is_id2(phi):
            return f"1[{u}]"
        return _q2(_split(u), _split(v), phi)

    def bcomp(g, f):
        if f.startswith("1["):
            return g
        if g.startswith("1["):
            return f
        return b.comp1[(g, f)]

    three_of = {}
    for u, v in itertools.product(qcells, qcells):
        if loc[u] != loc[v]:
            continue
        for phi in a.twocells():
            if not (a.src1(phi) == qcells[u] and a.tgt1(phi) == qcells[v]):
                continue
            for psi in a.twocells():
                if not (a.src1(psi) == qcells[u] and a.tgt1(psi) == qcells[v]):
                    continue
                for lam in a.threecells():
                    if a.src2(lam) == phi and a.tgt2(lam) == psi:
                        if phi == psi and a.is_id3(lam):
                            continue
                        name = _q3(_split(u), _split(v), lam)
                        if name in three_of:
                            continue
                        b.three_cell(name, q2name(u, v, phi), q2name(u, v, psi))
                        three_of[name] = (u, v, lam)

    def q3name(u, v, lam):
        if a.src2(lam) == a.tgt2(lam) and a.is_id3(lam):
            return f"1[{q2name(u, v, a.src2(lam))}]"
        return _q3(_split(u), _split(v), lam)

    # vertical composition of 2-cells
    for n2, (u2, v2, psi) in two_of.items():
        for n1, (u1, v1, phi) in two_of.items():
            if v1 == u2:
                out = a.vcomp2(psi, phi)
                b.set_vcomp2(n2, n1, q2name(u1, v2, out))
    # vertical composition of 3-cells
    for n2, (u2, v2, t) in three_of.items():
        for n1, (u1, v1, s) in three_of.items():
            if (u1, v1) == (u2, v2) and a.tgt2(s) == a.src2(t):
                b.set_vcomp3(n2, n1, q3name(u1, v1, a.vcomp3(t, s)))
    # hom-level whiskering of 3-cells by 2-cells
    for n2, (u2, v2, psi) in two_of.items():
        for n1, (u1, v1, lam) in three_of.items():
            if v1 == u2:
                b.set_hwl(n2, n1, q3name(u1, v2, a.hwl(psi, lam)))
            if v2 == u1:
                b.set_hwr(n1, n2, q3name(u2, v1, a.hwr(lam, psi)))
    # Gray-level whiskering by word 1-cells
    for w in words:
        k = wname[w]
        kx, ky = loc[k]
        for n1, (u, v, phi) in two_of.items():
            if loc[u][1] == kx:
                b.set_lw2(k, n1, q2name(
                    bcomp(k, u), bcomp(k, v), a.lw2(eps(w), phi)))
            if loc[u][0] == ky:
                b.set_rw2(n1, k, q2name(
                    bcomp(u, k), bcomp(v, k), a.rw2(phi, eps(w))))
        for n1, (u, v, lam) in three_of.items():
            if loc[u][1] == kx:
                b.set_lw3(k, n1, q3name(
                    bcomp(k, u), bcomp(k, v), a.lw3(eps(w), lam)))
            if loc[u][0] == ky:
                b.set_rw3(n1, k, q3name(
                    bcomp(u, k), bcomp(v, k), a.rw3(lam, eps(w))))
    # interchange
    for n2, (u2, v2, psi) in two_of.items():
        for n1, (u1, v1, phi) in two_of.items():
            if loc[u1][1] == loc[u2][0]:
                c = a.interchange(psi, phi)
                cinv = a.inv3(c)
                src_u = bcomp(u2, u1)
                tgt_v = bcomp(v2, v1)
                b.set_interchange(
                    n2, n1,
                    q3name(src_u, tgt_v, c),
                    q3name(src_u, tgt_v, cinv),
                )
    for n1, (u, v, phi) in two_of.items():
        if a.has_inv2(phi):
            b.set_inv2(n1, q2name(v, u, a.inv2(phi)))

    qa = b.finish()

    # q : A -> QA  (universal pseudomap, cocycle 1_{gf})
    m1 = {}
    for f in a.onecells():
        x, y = a.one_loc[f]
        m1[f] = f"1[{x}]" if f == a.id_1(x) else wname[(f,)]
    m2 = {}
    for phi in a.twocells():
        m2[phi] = q2name(m1[a.src1(phi)], m1[a.tgt1(phi)], phi)
    m3 = {}
    for lam in a.threecells():
        u, v = m1[a.src1(a.src2(lam))], m1[a.tgt1(a.src2(lam))]
        m3[lam] = q3name(u, v, lam)
    coc = {}
    for f2 in a.onecells():
        for f1 in a.onecells(y=a.src0(f2)):
            u = qa.comp1(m1[f2], m1[f1])
            v = m1[a.comp1(f2, f1)]
            coc[(f2, f1)] = q2name(u, v, a.id_2(a.comp1(f2, f1)))
    q = make_pseudomap(a, qa, {x: x for x in a.objects}, m1, m2, m3, coc)

    # p : QA -> A  (strict counit)
    pm1 = {c: qcells[c] for c in qcells}
    pm2 = {n: phi for n, (_, _, phi) in two_of.items()}
    pm3 = {n: lam for n, (_, _, lam) in three_of.items()}
    p = strict_pseudomap(qa, a, {x: x for x in a.objects}, pm1, pm2, pm3)
    return qa, q, p


def _split(u):
    """Letters of a word name, respecting nested brackets."""
    if not u.startswith("w["):
        return (u,)
    s = u[2:-1]
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        cur.append(ch)
    parts.append("".join(cur))
    return tuple(parts)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicSurjection:
    """A strict map surjective on 0-cells, full on 1-cells, fully faithful
    on 2- and 3-cells, equipped with normalized lifting tables."""

    carrier: Pseudomap
    lift0: FrozenTable  # object of cod -> object of dom
    lift1: FrozenTable  # (x, f, y) with x,y in dom, f: Fx -> Fy -> 1-cell x -> y


def surjection_from_counit(qa, p: Pseudomap) -> AlgebraicSurjection:
    """The counit p: QA → A with its canonical lifting structure."""
    a = p.cod
    lift0 = {x: x for x in a.objects}
    lift1 = {}
    for x in qa.objects:
        for y in qa.objects:
            for f in a.onecells(x=p.on0(x), y=p.on0(y)):
                if f == a.id_1(p.on0(x)) and x == y:
                    lift1[(x, f, y)] = qa.id_1(x)
                else:
                    lift1[(x, f, y)] = _word_name((f,))
    return AlgebraicSurjection(p, FrozenTable(lift0), FrozenTable(lift1))


def validate_algebraic_surjection(s: AlgebraicSurjection) -> ValidationReport:
    rep = ValidationReport()
    F = s.carrier
    dom, cod = F.dom, F.cod
    rep.check("surj/strict", (), F.is_strict())
    for x in cod.objects:
        got = s.lift0.get(x)
        rep.check("surj/lift0", (x,), got is not None and F.on0(got) == x)
    for x in dom.objects:
        for y in dom.objects:
            for f in cod.onecells(x=F.on0(x), y=F.on0(y)):
                got = s.lift1.get((x, f, y))
                ok = got is not None and F.on1(got) == f and dom.one_loc[got] == (x, y)
                rep.check("surj/lift1", (x, f, y), ok)
            rep.check(
                "surj/lift1-normal",
                (x,),
                s.lift1.get((x, cod.id_1(F.on0(x)), x)) == dom.id_1(x),
            )
    # fully faithful on 2-cells and 3-cells
    for u in dom.onecells():
        for v in dom.onecells():
            if dom.one_loc[u] != dom.one_loc[v]:
                continue
            fibers = {}
            for phi in dom.twocells():
                if dom.src1(phi) == u and dom.tgt1(phi) == v:
                    fibers.setdefault(F.on2(phi), []).append(phi)
            for psi in cod.twocells():
                if cod.src1(psi) == F.on1(u) and cod.tgt1(psi) == F.on1(v):
                    rep.check(
                        "surj/ff-2", (u, v, psi), len(fibers.get(psi, [])) == 1
                    )
    for p2 in dom.twocells():
        for q2 in dom.twocells():
            if dom.two_loc[p2] != dom.two_loc[q2]:
                continue
            if dom.src1(p2) != dom.src1(q2) or dom.tgt1(p2) != dom.tgt1(q2):
                continue
            fibers = {}
            for lam in dom.threecells():
                if dom.src2(lam) == p2 and dom.tgt2(lam) == q2:
                    fibers.setdefault(F.on3(lam), []).append(lam)
            for mu in cod.threecells():
                if cod.src2(mu) == F.on2(p2) and cod.tgt2(mu) == F.on2(q2):
                    rep.check(
                        "surj/ff-3", (p2, q2, mu), len(fibers.get(mu, [])) == 1
                    )
    return rep


def canonical_section(s: AlgebraicSurjection) -> Pseudomap:
    """The canonical pseudomap section F_φ of an algebraic surjection."""
    F = s.carrier
    dom, cod = F.dom, F.cod

    m0 = {x: s.lift0[x] for x in cod.objects}
    m1 = {}
    for f in cod.onecells():
        x, y = cod.one_loc[f]
        key = (m0[x], f, m0[y])
        if key not in s.lift1:
            raise LiftFailure(f"no 1-cell lift for {f!r}")
        m1[f] = s.lift1[key]

    def lift2(target_src, target_tgt, psi):
        found = None
        for phi in dom.twocells():
            if (
                dom.src1(phi) == target_src
                and dom.tgt1(phi) == target_tgt
                and F.on2(phi) == psi
            ):
                if found is not None:
                    raise LiftFailure(f"2-cell lift of {psi!r} not unique")
                found = phi
        if found is None:
            raise LiftFailure(f"no 2-cell lift of {psi!r}")
        return found

    def lift3(target_src, target_tgt, mu):
        found = None
        for lam in dom.threecells():
            if (
                dom.src2(lam) == target_src
                and dom.tgt2(lam) == target_tgt
                and F.on3(lam) == mu
            ):
                if found is not None:
                    raise LiftFailure(f"3-cell lift of {mu!r} not unique")
                found = lam
        if found is None:
            raise LiftFailure(f"no 3-cell lift of {mu!r}")
        return found

    m2 = {}
    for psi in cod.twocells():
        m2[psi] = lift2(m1[cod.src1(psi)], m1[cod.tgt1(psi)], psi)
    m3 = {}
    for mu in cod.threecells():
        m3[mu] = lift3(m2[cod.src2(mu)], m2[cod.tgt2(mu)], mu)
    coc = {}
    for g in cod.onecells():
        for f in cod.onecells(y=cod.src0(g)):
            src = dom.comp1(m1[g], m1[f])
            tgt = m1[cod.comp1(g, f)]
            coc[(g, f)] = lift2(src, tgt, cod.id_2(cod.comp1(g, f)))
    return Pseudomap(
        dom=cod,
        cod=dom,
        m0=FrozenTable(m0),
        m1=FrozenTable(m1),
        m2=FrozenTable(m2),
        m3=FrozenTable(m3),
        coc=FrozenTable(coc),
    )


def factor_pseudomap(f: Pseudomap, qa, q: Pseudomap, p: Pseudomap) -> Pseudomap:
    """The unique strict F′: QA → B with F′∘q = f."""
    a, bcat = f.dom, f.cod
    if q.dom is not a and q.dom != a:
        raise MalformedPresentation("q is not a universal map for dom(f)")

    def kappa(word):
        """Invertible 2-cell  Ff_n ∘ … ∘ Ff_1  →  F(f_n…f_1)."""
        if len(word) == 1:
            return bcat.id_2(f.on1(word[0]))
        prefix = word[:-1]
        last = word[-1]
        comp_prefix = a.compose_word(list(prefix))
        inner = kappa(prefix)
        step = f.cocycle(last, comp_prefix)
        return bcat.vcomp2(step, bcat.lw2(f.on1(last), inner))

    m0 = {x: f.on0(x) for x in qa.objects}
    m1 = {}
    kap = {}
    for u in qa.onecells():
        if u.startswith("w["):
            word = _split(u)
            m1[u] = bcat.compose_word([f.on1(c) for c in word])
            kap[u] = kappa(word)
        else:
            x = qa.src0(u)
            m1[u] = bcat.id_1(f.on0(x))
            kap[u] = bcat.id_2(m1[u])
    m2 = {}
    for n in qa.twocells():
        if qa.is_id2(n):
            m2[n] = bcat.id_2(m1[qa.src1(n)])
            continue
        usrc, utgt = qa.src1(n), qa.tgt1(n)
        phi = p.on2(n)
        m2[n] = bcat.vcomp2(
            bcat.inv2(kap[utgt]), bcat.vcomp2(f.on2(phi), kap[usrc])
        )
    m3 = {}
    for n in qa.threecells():
        if qa.is_id3(n):
            m3[n] = bcat.id_3(m2[qa.src2(n)])
            continue
        usrc = qa.src1(qa.src2(n))
        utgt = qa.tgt1(qa.src2(n))
        lam = p.on3(n)
        m3[n] = bcat.hwl(
            bcat.inv2(kap[utgt]), bcat.hwr(f.on3(lam), kap[usrc])
        )
    return strict_pseudomap(qa, bcat, m0, m1, m2, m3)
