"""Built-in example Gray-categories, validated once at construction."""

from __future__ import annotations

from functools import lru_cache

from .graycat import FiniteGrayCategory, GrayBuilder, validate_gray_category
from .report import UnknownBuiltin

BUILTIN_NAMES = (
    "terminal",
    "walking_arrow",
    "walking_composable_pair",
    "free_cell_0",
    "free_cell_1",
    "free_cell_2",
    "free_cell_3",
    "free_lax_square",
    "free_invertible_2cell",
    "interchange_cube",
    "abelian_demo_2",
    "abelian_demo_3",
    "abelian_demo_3cell_2",
)


def _terminal():
    b = GrayBuilder("terminal")
    b.obj("*")
    return b.finish()


def _walking_arrow():
    b = GrayBuilder("walking_arrow")
    b.obj("x", "y")
    b.one_cell("f", "x", "y")
    return b.finish()


def _walking_composable_pair():
    b = GrayBuilder("walking_composable_pair")
    b.obj("x", "y", "z")
    b.one_cell("f", "x", "y")
    b.one_cell("g", "y", "z")
    b.one_cell("gf", "x", "z")
    b.set_comp1("g", "f", "gf")
    return b.finish()


def _free_cell_2():
    b = GrayBuilder("free_cell_2")
    b.obj("x", "y")
    b.one_cell("f", "x", "y")
    b.one_cell("f'", "x", "y")
    b.two_cell("phi", "f", "f'")
    return b.finish()


def _free_cell_3():
    b = GrayBuilder("free_cell_3")
    b.obj("x", "y")
    b.one_cell("f", "x", "y")
    b.one_cell("f'", "x", "y")
    b.two_cell("phi", "f", "f'")
    b.two_cell("psi", "f", "f'")
    b.three_cell("Lam", "phi", "psi")
    return b.finish()


def _free_lax_square():
    # Objects 0..3 with a 2-cell from the (top, right) composite to the
    # (left, bottom) composite; this is the category classifying the
    # 1-cells of the path space.
    b = GrayBuilder("free_lax_square")
    b.obj("0", "1", "2", "3")
    b.one_cell("t", "0", "1")
    b.one_cell("r", "1", "3")
    b.one_cell("l", "0", "2")
    b.one_cell("b", "2", "3")
    b.one_cell("rt", "0", "3")
    b.one_cell("bl", "0", "3")
    b.set_comp1("r", "t", "rt")
    b.set_comp1("b", "l", "bl")
    b.two_cell("eta", "rt", "bl")
    return b.finish()


def _free_invertible_2cell():
    b = GrayBuilder("free_invertible_2cell")
    b.obj("x", "y")
    b.one_cell("f", "x", "y")
    b.one_cell("f'", "x", "y")
    b.two_cell("phi", "f", "f'")
    b.two_cell("phi_inv", "f'", "f")
    b.set_vcomp2("phi_inv", "phi", "1[f]")
    b.set_vcomp2("phi", "phi_inv", "1[f']")
    b.set_inv2("phi", "phi_inv")
    return b.finish()


def _interchange_cube():
    # Two horizontally adjacent non-identity 2-cells whose two pasting
    # orders differ, mediated by an invertible interchange 3-cell.
    b = GrayBuilder("interchange_cube")
    b.obj("x", "y", "z")
    b.one_cell("f", "x", "y")
    b.one_cell("f'", "x", "y")
    b.one_cell("g", "y", "z")
    b.one_cell("g'", "y", "z")
    for gg in ("g", "g'"):
        for ff in ("f", "f'"):
            b.one_cell(f"{gg}{ff}", "x", "z")
    for gg in ("g", "g'"):
        for ff in ("f", "f'"):
            b.set_comp1(gg, ff, f"{gg}{ff}")
    b.two_cell("phi", "f", "f'")
    b.two_cell("psi", "g", "g'")
    # Whiskers of phi and psi.
    b.two_cell("g.phi", "gf", "gf'")
    b.two_cell("g'.phi", "g'f", "g'f'")
    b.two_cell("psi.f", "gf", "g'f")
    b.two_cell("psi.f'", "gf'", "g'f'")
    b.set_lw2("g", "phi", "g.phi")
    b.set_lw2("g'", "phi", "g'.phi")
    b.set_rw2("psi", "f", "psi.f")
    b.set_rw2("psi", "f'", "psi.f'")
    # The two pasting orders and the invertible interchange between them.
    b.two_cell("u", "gf", "g'f'")  # (psi∘f')·(g∘phi)
    b.two_cell("v", "gf", "g'f'")  # (g'∘phi)·(psi∘f)
    b.set_vcomp2("psi.f'", "g.phi", "u")
    b.set_vcomp2("g'.phi", "psi.f", "v")
    b.three_cell("Xi", "u", "v")
    b.three_cell("Xi_inv", "v", "u")
    b.set_vcomp3("Xi_inv", "Xi", "1[u]")
    b.set_vcomp3("Xi", "Xi_inv", "1[v]")
    b.set_interchange("psi", "phi", "Xi", "Xi_inv")
    return b.finish()


def _abelian_demo(n: int):
    # One object, one 1-cell; 2-cells form the cyclic group Z_n under both
    # vertical composition and (degenerate) horizontal composition, so the
    # interchange cells are identities.  Needs commutativity to be valid.
    b = GrayBuilder(f"abelian_demo_{n}")
    b.obj("*")
    names = {k: f"e{k}" for k in range(1, n)}

    def cell(k):
        k %= n
        return "1[1[*]]" if k == 0 else names[k]

    for k in range(1, n):
        b.two_cell(names[k], "1[*]", "1[*]")
    for i in range(n):
        for j in range(n):
            if i and j:
                b.set_vcomp2(cell(i), cell(j), cell(i + j))
    for i in range(1, n):
        b.set_inv2(cell(i), cell(n - i))
        b.set_lw2("1[*]", cell(i), cell(i))
        b.set_rw2(cell(i), "1[*]", cell(i))
    for i in range(1, n):
        for j in range(1, n):
            # both pasting orders evaluate to e_{i+j}; interchange is identity
            b.set_interchange(cell(i), cell(j), f"1[{cell(i + j)}]", f"1[{cell(i + j)}]")
    g = b.finish()
    # identity names depend on the generated composite; builder emits 1[e_k]
    return g


def _abelian_demo_3cell(n: int):
    # Z_n one dimension up: a single 2-cell with Z_n worth of 3-cells.
    b = GrayBuilder(f"abelian_demo_3cell_{n}")
    b.obj("*")
    names = {k: f"t{k}" for k in range(1, n)}

    def cell(k):
        k %= n
        return "1[1[1[*]]]" if k == 0 else names[k]

    for k in range(1, n):
        b.three_cell(names[k], "1[1[*]]", "1[1[*]]")
    for i in range(n):
        for j in range(n):
            if i and j:
                b.set_vcomp3(cell(i), cell(j), cell(i + j))
    for i in range(1, n):
        b.set_lw3("1[*]", cell(i), cell(i))
        b.set_rw3(cell(i), "1[*]", cell(i))
        b.set_hwl("1[1[*]]", cell(i), cell(i))
        b.set_hwr(cell(i), "1[1[*]]", cell(i))
    return b.finish()


_FACTORIES = {
    "terminal": _terminal,
    "walking_arrow": _walking_arrow,
    "walking_composable_pair": _walking_composable_pair,
    "free_cell_0": _terminal,
    "free_cell_1": _walking_arrow,
    "free_cell_2": _free_cell_2,
    "free_cell_3": _free_cell_3,
    "free_lax_square": _free_lax_square,
    "free_invertible_2cell": _free_invertible_2cell,
    "interchange_cube": _interchange_cube,
    "abelian_demo_2": lambda: _abelian_demo(2),
    "abelian_demo_3": lambda: _abelian_demo(3),
    "abelian_demo_3cell_2": lambda: _abelian_demo_3cell(2),
}


@lru_cache(maxsize=None)
def builtin_category(name: str) -> FiniteGrayCategory:
    if name not in _FACTORIES:
        raise UnknownBuiltin(f"no builtin named {name!r}; know {sorted(_FACTORIES)}")
    g = _FACTORIES[name]()
    rep = validate_gray_category(g)
    if not rep.passed:
        raise AssertionError(f"builtin {name} failed validation:\n{rep.summary()}")
    return g
