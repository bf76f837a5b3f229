"""A pasting evaluator over the Gray operations.

Composites in hom-2-categories are presented as *paths*: a word of
composable 1-cells plus a sequence of elementary moves, each applying a
2-cell to a contiguous segment of the word.  A :class:`Paster` evaluates
3-dimensional pastings by rewriting runs of moves along named 3-cells and
swapping independent moves along interchange cells, accumulating the
vertical composite.  Every step asserts its boundaries against the tables,
so a transcription slip fails loudly instead of producing a wrong cell.
"""

from __future__ import annotations

from dataclasses import dataclass

from .report import MalformedPresentation


@dataclass(frozen=True)
class Move:
    pos: int
    src_seg: tuple
    tgt_seg: tuple
    cell: object


def word_comp(cat, word):
    out = word[0]
    for f in word[1:]:
        out = cat.comp1(f, out)
    return out


class Paster:
    def __init__(self, cat, word):
        self.cat = cat
        if not word:
            raise MalformedPresentation("pasting words must be non-empty")
        self.words = [tuple(word)]
        self.moves: list[Move] = []
        self.acc = None  # accumulated 3-cell

    # -- path construction -------------------------------------------------
    def push(self, cell, pos, src_len, tgt_seg):
        cat = self.cat
        w = self.words[-1]
        seg = w[pos : pos + src_len]
        if len(seg) != src_len:
            raise MalformedPresentation(f"move at {pos} overruns word {w}")
        tgt_seg = tuple(tgt_seg)
        if cat.src1(cell) != word_comp(cat, seg):
            raise MalformedPresentation(
                f"move source mismatch: {cell!r} vs segment {seg}"
            )
        if cat.tgt1(cell) != word_comp(cat, tgt_seg):
            raise MalformedPresentation(
                f"move target mismatch: {cell!r} vs segment {tgt_seg}"
            )
        self.moves.append(Move(pos, seg, tgt_seg, cell))
        self.words.append(w[:pos] + tgt_seg + w[pos + src_len :])
        return self

    # -- evaluation ---------------------------------------------------------
    def _eval_move(self, k):
        cat = self.cat
        w = self.words[k]
        m = self.moves[k]
        c = m.cell
        pre = w[: m.pos]
        post = w[m.pos + len(m.src_seg) :]
        if pre:
            c = cat.rw2(c, word_comp(cat, pre))
        if post:
            c = cat.lw2(word_comp(cat, post), c)
        return c

    def eval_range(self, i, j):
        cat = self.cat
        out = None
        for k in range(i, j):
            c = self._eval_move(k)
            out = c if out is None else cat.vcomp2(c, out)
        return out

    def source2(self):
        return self.eval_range(0, len(self.moves))

    def target2(self):
        return self.eval_range(0, len(self.moves))  # after all rewrites

    def final_word(self):
        return self.words[-1]

    # -- 3-dimensional steps -------------------------------------------------
    def _accumulate(self, i, j, eff):
        cat = self.cat
        if i > 0:
            eff = cat.hwr(eff, self.eval_range(0, i))
        if j < len(self.moves):
            eff = cat.hwl(self.eval_range(j, len(self.moves)), eff)
        self.acc = eff if self.acc is None else cat.vcomp3(eff, self.acc)

    def rewrite(self, i, j, core3, core_lo, core_hi, new_moves):
        """Rewrite moves [i:j] along ``core3`` whiskered by the word context
        outside positions [core_lo:core_hi] of the stage-``i`` word.

        ``new_moves`` is a list of (cell, pos, src_len, tgt_seg) specs which
        must reproduce the stage-``j`` word.
        """
        cat = self.cat
        w = self.words[i]
        eff = core3
        pre = w[:core_lo]
        post = w[core_hi:]
        if pre:
            eff = cat.rw3(eff, word_comp(cat, pre))
        if post:
            eff = cat.lw3(word_comp(cat, post), eff)
        old = self.eval_range(i, j)
        if cat.src2(eff) != old:
            raise MalformedPresentation(
                f"rewrite source mismatch at moves [{i}:{j}]"
            )
        # simulate the replacement run
        sim = Paster(cat, w)
        for (cell, pos, src_len, tgt_seg) in new_moves:
            sim.push(cell, pos, src_len, tgt_seg)
        if sim.final_word() != self.words[j]:
            raise MalformedPresentation("rewrite does not preserve the boundary word")
        new2 = sim.eval_range(0, len(sim.moves))
        if new2 is None:
            raise MalformedPresentation("rewrite target run must be non-empty")
        if cat.tgt2(eff) != new2:
            raise MalformedPresentation(
                f"rewrite target mismatch at moves [{i}:{j}]"
            )
        self._accumulate(i, j, eff)
        tail_words = self.words[j + 1 :]
        self.moves[i:j] = sim.moves
        self.words[i + 1 : j + 1] = sim.words[1:]
        # sanity: later stage words unchanged
        assert self.words[i + 1 + len(sim.moves) :] == tail_words

    def swap(self, i):
        """Exchange independent adjacent moves i and i+1 along interchange."""
        cat = self.cat
        m1 = self.moves[i]
        m2 = self.moves[i + 1]
        w = self.words[i]
        delta = len(m1.tgt_seg) - len(m1.src_seg)
        if m2.pos >= m1.pos + len(m1.tgt_seg):
            # m1 lower, m2 upper; currently lower-then-upper (= interchange source)
            lo = m1
            hi = Move(m2.pos - delta, m2.src_seg, m2.tgt_seg, m2.cell)
            forward = True
        elif m2.pos + len(m2.src_seg) <= m1.pos:
            lo = m2
            hi = m1
            forward = False
        else:
            raise MalformedPresentation(f"moves {i},{i+1} overlap; cannot swap")

        A = w[: lo.pos]
        M = w[lo.pos + len(lo.src_seg) : hi.pos]
        B = w[hi.pos + len(hi.src_seg) :]
        phi = lo.cell
        if A:
            phi = cat.rw2(phi, word_comp(cat, A))
        psi = hi.cell
        if M:
            psi = cat.rw2(psi, word_comp(cat, M))
        if B:
            psi = cat.lw2(word_comp(cat, B), psi)
        ic = cat.interchange(psi, phi) if forward else cat.interchange_inv(psi, phi)

        old = self.eval_range(i, i + 2)
        if cat.src2(ic) != old:
            raise MalformedPresentation(f"swap source mismatch at move {i}")
        if forward:
            first = Move(hi.pos, hi.src_seg, hi.tgt_seg, hi.cell)
            dd = len(hi.tgt_seg) - len(hi.src_seg)
            second = Move(lo.pos, lo.src_seg, lo.tgt_seg, lo.cell)
            new_moves = [first, second]
        else:
            dd = len(lo.tgt_seg) - len(lo.src_seg)
            first = Move(lo.pos, lo.src_seg, lo.tgt_seg, lo.cell)
            second = Move(hi.pos + dd, hi.src_seg, hi.tgt_seg, hi.cell)
            new_moves = [first, second]
        mid_word = w[: new_moves[0].pos] + new_moves[0].tgt_seg + w[
            new_moves[0].pos + len(new_moves[0].src_seg) :
        ]
        self._accumulate(i, i + 2, ic)
        self.moves[i : i + 2] = new_moves
        self.words[i + 1] = mid_word
        new2 = self.eval_range(i, i + 2)
        if cat.tgt2(ic) != new2:
            raise MalformedPresentation(f"swap target mismatch at move {i}")

    def result(self):
        """The accumulated 3-cell (identity if no step was applied)."""
        if self.acc is None:
            return self.cat.id_3(self.source2())
        return self.acc
