"""Finite strict 2-categories as total composition tables.

A ``Finite2Category`` is stored in its own terms: objects, morphisms
(``mor``) with vertical composition ``·``, and cells (2-morphisms) with
vertical composition ``∗`` plus whiskering by morphisms on either side.
Inside a Gray-category the objects of a hom are the ambient 1-cells, its
morphisms the ambient 2-cells and its cells the ambient 3-cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .report import MalformedPresentation, NonInvertible, ValidationReport


def _freeze(d):
    return dict(d)


@dataclass(eq=False)
class Finite2Category:
    objects: list
    mor_src: dict
    mor_tgt: dict
    cell_src: dict
    cell_tgt: dict
    id_mor: dict  # object -> identity morphism
    id_cell: dict  # morphism -> identity cell
    comp_mor: dict  # (q, p) -> q·p
    comp_cell: dict  # (T, S) -> T∗S (vertical)
    whisk_l: dict  # (q, S) -> q·S   (whisker cell S by morphism q on the left)
    whisk_r: dict  # (S, p) -> S·p
    inv_mor: dict = field(default_factory=dict)  # declared inverses of morphisms
    inv_cell: dict = field(default_factory=dict)  # declared inverses of cells

    # -- basic accessors -------------------------------------------------
    def morphisms(self, x=None, y=None):
        for m, s in self.mor_src.items():
            if x is not None and s != x:
                continue
            if y is not None and self.mor_tgt[m] != y:
                continue
            yield m

    def cells(self, p=None, q=None):
        for c, s in self.cell_src.items():
            if p is not None and s != p:
                continue
            if q is not None and self.cell_tgt[c] != q:
                continue
            yield c

    def vcomp2(self, q, p):
        return self.comp_mor[(q, p)]

    def vcomp3(self, t, s):
        return self.comp_cell[(t, s)]

    def hwl(self, q, s):
        return self.whisk_l[(q, s)]

    def hwr(self, s, p):
        return self.whisk_r[(s, p)]

    def is_id_mor(self, m):
        return m == self.id_mor.get(self.mor_src[m])

    def is_id_cell(self, c):
        return c == self.id_cell.get(self.cell_src[c])

    def inverse_mor(self, m):
        if m in self.inv_mor:
            return self.inv_mor[m]
        src, tgt = self.mor_src[m], self.mor_tgt[m]
        for n in self.morphisms(tgt, src):
            if (
                self.comp_mor.get((n, m)) == self.id_mor[src]
                and self.comp_mor.get((m, n)) == self.id_mor[tgt]
            ):
                self.inv_mor[m] = n
                return n
        raise NonInvertible(f"morphism {m!r} has no inverse")

    def has_inverse_mor(self, m):
        try:
            self.inverse_mor(m)
            return True
        except NonInvertible:
            return False

    def inverse_cell(self, c):
        if c in self.inv_cell:
            return self.inv_cell[c]
        src, tgt = self.cell_src[c], self.cell_tgt[c]
        for d in self.cells(tgt, src):
            if (
                self.comp_cell.get((d, c)) == self.id_cell[src]
                and self.comp_cell.get((c, d)) == self.id_cell[tgt]
            ):
                self.inv_cell[c] = d
                return d
        raise NonInvertible(f"cell {c!r} has no inverse")

    def has_inverse_cell(self, c):
        try:
            self.inverse_cell(c)
            return True
        except NonInvertible:
            return False

    def composable_mor_pairs(self):
        for q, p in itertools.product(self.mor_src, self.mor_src):
            if self.mor_src[q] == self.mor_tgt[p]:
                yield q, p

    def composable_cell_pairs(self):
        for t, s in itertools.product(self.cell_src, self.cell_src):
            if self.cell_src[t] == self.cell_tgt[s]:
                yield t, s


def validate_two_category(c: Finite2Category) -> ValidationReport:
    """Check every strict 2-category law table-wise, with witnesses."""
    rep = ValidationReport()
    objs = set(c.objects)

    # Well-formedness of the boundary maps.
    for m, s in c.mor_src.items():
        if s not in objs or c.mor_tgt[m] not in objs:
            raise MalformedPresentation(f"morphism {m!r} has unknown endpoints")
    for cell, s in c.cell_src.items():
        if s not in c.mor_src or c.cell_tgt[cell] not in c.mor_src:
            raise MalformedPresentation(f"cell {cell!r} has unknown boundary")
        if c.mor_src[s] != c.mor_src[c.cell_tgt[cell]] or c.mor_tgt[s] != c.mor_tgt[
            c.cell_tgt[cell]
        ]:
            rep.fail("2cat/cell-parallel", (cell,))
    for x in objs:
        if x not in c.id_mor or c.id_mor[x] not in c.mor_src:
            raise MalformedPresentation(f"missing identity morphism at {x!r}")
        i = c.id_mor[x]
        rep.check("2cat/id-mor-endo", (x,), c.mor_src[i] == x and c.mor_tgt[i] == x)
    for m in c.mor_src:
        if m not in c.id_cell or c.id_cell[m] not in c.cell_src:
            raise MalformedPresentation(f"missing identity cell at {m!r}")
        i = c.id_cell[m]
        rep.check("2cat/id-cell-endo", (m,), c.cell_src[i] == m and c.cell_tgt[i] == m)

    # Totality and boundary-respect of composition of morphisms.
    for q, p in c.composable_mor_pairs():
        if (q, p) not in c.comp_mor:
            rep.fail("2cat/comp-mor-total", (q, p))
            continue
        qp = c.comp_mor[(q, p)]
        ok = (
            qp in c.mor_src
            and c.mor_src[qp] == c.mor_src[p]
            and c.mor_tgt[qp] == c.mor_tgt[q]
        )
        rep.check("2cat/comp-mor-boundary", (q, p), ok)
    for (q, p) in c.comp_mor:
        if c.mor_src.get(q) is None or c.mor_src.get(p) is None:
            raise MalformedPresentation(f"comp_mor entry on unknown pair {(q, p)!r}")
        if c.mor_src[q] != c.mor_tgt[p]:
            rep.fail("2cat/comp-mor-spurious", (q, p))

    # Category laws for morphisms.
    for m in c.mor_src:
        rep.check(
            "2cat/unit-mor-left",
            (m,),
            c.comp_mor.get((c.id_mor[c.mor_tgt[m]], m)) == m,
        )
        rep.check(
            "2cat/unit-mor-right",
            (m,),
            c.comp_mor.get((m, c.id_mor[c.mor_src[m]])) == m,
        )
    for r in c.mor_src:
        for q in c.morphisms(y=c.mor_src[r]):
            for p in c.morphisms(y=c.mor_src[q]):
                lhs = c.comp_mor.get((c.comp_mor[(r, q)], p))
                rhs = c.comp_mor.get((r, c.comp_mor[(q, p)]))
                rep.check("2cat/assoc-mor", (r, q, p), lhs == rhs and lhs is not None)

    # Vertical composition of cells.
    for t, s in c.composable_cell_pairs():
        if (t, s) not in c.comp_cell:
            rep.fail("2cat/comp-cell-total", (t, s))
            continue
        ts = c.comp_cell[(t, s)]
        ok = (
            ts in c.cell_src
            and c.cell_src[ts] == c.cell_src[s]
            and c.cell_tgt[ts] == c.cell_tgt[t]
        )
        rep.check("2cat/comp-cell-boundary", (t, s), ok)
    for s in c.cell_src:
        rep.check(
            "2cat/unit-cell-left",
            (s,),
            c.comp_cell.get((c.id_cell[c.cell_tgt[s]], s)) == s,
        )
        rep.check(
            "2cat/unit-cell-right",
            (s,),
            c.comp_cell.get((s, c.id_cell[c.cell_src[s]])) == s,
        )
    for u in c.cell_src:
        for t in c.cells(q=c.cell_src[u]):
            for s in c.cells(q=c.cell_src[t]):
                lhs = c.comp_cell.get((c.comp_cell[(u, t)], s))
                rhs = c.comp_cell.get((u, c.comp_cell[(t, s)]))
                rep.check("2cat/assoc-cell", (u, t, s), lhs == rhs and lhs is not None)

    # Whiskering: totality, boundaries, functoriality, interchange.
    for q in c.mor_src:
        for s in c.cell_src:
            if c.mor_src[q] == c.mor_tgt[c.cell_src[s]]:
                if (q, s) not in c.whisk_l:
                    rep.fail("2cat/whisk-l-total", (q, s))
                    continue
                qs = c.whisk_l[(q, s)]
                ok = (
                    c.cell_src.get(qs) == c.comp_mor[(q, c.cell_src[s])]
                    and c.cell_tgt.get(qs) == c.comp_mor[(q, c.cell_tgt[s])]
                )
                rep.check("2cat/whisk-l-boundary", (q, s), ok)
            if c.mor_tgt[q] == c.mor_src[c.cell_src[s]]:
                if (s, q) not in c.whisk_r:
                    rep.fail("2cat/whisk-r-total", (s, q))
                    continue
                sq = c.whisk_r[(s, q)]
                ok = (
                    c.cell_src.get(sq) == c.comp_mor[(c.cell_src[s], q)]
                    and c.cell_tgt.get(sq) == c.comp_mor[(c.cell_tgt[s], q)]
                )
                rep.check("2cat/whisk-r-boundary", (s, q), ok)

    for q in c.mor_src:
        x = c.mor_src[q]
        # preservation of identities and vertical composites (whisker 2-functors)
        for m in c.morphisms(y=x):
            rep.check(
                "2cat/whisk-l-id-cell",
                (q, m),
                c.whisk_l.get((q, c.id_cell[m])) == c.id_cell[c.comp_mor[(q, m)]],
            )
        for t, s in c.composable_cell_pairs():
            if c.mor_tgt[c.cell_src[s]] == x:
                lhs = c.whisk_l.get((q, c.comp_cell[(t, s)]))
                rhs = c.comp_cell.get((c.whisk_l[(q, t)], c.whisk_l[(q, s)]))
                rep.check("2cat/whisk-l-functorial", (q, t, s), lhs == rhs)
        y = c.mor_tgt[q]
        for m in c.morphisms(x=y):
            rep.check(
                "2cat/whisk-r-id-cell",
                (m, q),
                c.whisk_r.get((c.id_cell[m], q)) == c.id_cell[c.comp_mor[(m, q)]],
            )
        for t, s in c.composable_cell_pairs():
            if c.mor_src[c.cell_src[s]] == y:
                lhs = c.whisk_r.get((c.comp_cell[(t, s)], q))
                rhs = c.comp_cell.get((c.whisk_r[(t, q)], c.whisk_r[(s, q)]))
                rep.check("2cat/whisk-r-functorial", (t, s, q), lhs == rhs)

    # Whiskering by identities and by composites.
    for s in c.cell_src:
        m = c.cell_src[s]
        rep.check(
            "2cat/whisk-l-id-mor",
            (s,),
            c.whisk_l.get((c.id_mor[c.mor_tgt[m]], s)) == s,
        )
        rep.check(
            "2cat/whisk-r-id-mor",
            (s,),
            c.whisk_r.get((s, c.id_mor[c.mor_src[m]])) == s,
        )
        for q2, q1 in c.composable_mor_pairs():
            if c.mor_src[q1] == c.mor_tgt[m]:
                lhs = c.whisk_l.get((c.comp_mor[(q2, q1)], s))
                rhs = c.whisk_l.get((q2, c.whisk_l[(q1, s)]))
                rep.check("2cat/whisk-l-compose", (q2, q1, s), lhs == rhs)
            if c.mor_tgt[q2] == c.mor_src[m]:
                lhs = c.whisk_r.get((s, c.comp_mor[(q2, q1)]))
                rhs = c.whisk_r.get((c.whisk_r[(s, q2)], q1))
                rep.check("2cat/whisk-r-compose", (s, q2, q1), lhs == rhs)
        for q in c.morphisms(x=c.mor_tgt[m]):
            for p in c.morphisms(y=c.mor_src[m]):
                lhs = c.whisk_l.get((q, c.whisk_r[(s, p)]))
                rhs = c.whisk_r.get((c.whisk_l[(q, s)], p))
                rep.check("2cat/whisk-lr-compat", (q, s, p), lhs == rhs)

    # Middle interchange: for s: p -> p' and t: q -> q' with q after p,
    # (t·p') ∗ (q·s)  =  (q'·s) ∗ (t·p).
    for t in c.cell_src:
        for s in c.cell_src:
            if c.mor_src[c.cell_src[t]] != c.mor_tgt[c.cell_src[s]]:
                continue
            p, p2 = c.cell_src[s], c.cell_tgt[s]
            q, q2 = c.cell_src[t], c.cell_tgt[t]
            lhs = c.comp_cell.get((c.whisk_r[(t, p2)], c.whisk_l[(q, s)]))
            rhs = c.comp_cell.get((c.whisk_l[(q2, s)], c.whisk_r[(t, p)]))
            rep.check("2cat/middle-interchange", (t, s), lhs == rhs)

    # Declared inverses really are inverses.
    for m, n in list(c.inv_mor.items()):
        ok = (
            c.comp_mor.get((n, m)) == c.id_mor.get(c.mor_src[m])
            and c.comp_mor.get((m, n)) == c.id_mor.get(c.mor_tgt[m])
        )
        rep.check("2cat/declared-inverse-mor", (m,), ok)
    for s, t in list(c.inv_cell.items()):
        ok = (
            c.comp_cell.get((t, s)) == c.id_cell.get(c.cell_src[s])
            and c.comp_cell.get((s, t)) == c.id_cell.get(c.cell_tgt[s])
        )
        rep.check("2cat/declared-inverse-cell", (s,), ok)

    return rep
