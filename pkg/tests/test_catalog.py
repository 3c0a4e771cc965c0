"""Catalog name resolution, parameter constraints, and spot validation of
rows beyond the main quantitative table against full recomputation."""

import pytest

from singchi.catalog import (
    ACCEPTANCE_ROWS,
    ALTERNATE_MODULI,
    DEFAULT_MODULI,
    QUAD_CHI_NOTE,
    P4_ONE_NOTE,
    catalog_names,
    resolve_row,
)
from singchi.errors import BadParamsError, UnknownEntryError
from singchi.euler import image_chi_report
from singchi.milnor import icis_milnor, point_count
from singchi.multiple_points import (
    invariant_tuple,
    multiple_point_ideal,
    partition_restricted_ideal,
)


# ------------------------------------------------------------- name parsing


def test_instance_spelling_fixes_parameters():
    row = resolve_row("A_3")
    assert row.name == "A_3"
    assert row.mu_image == 3
    assert row.minus_chi == 7
    assert "y^4*z" in str(row.germ.components[-1])


def test_template_spelling_reads_params_mapping():
    inst = resolve_row("A_3")
    tmpl = resolve_row("A_k", params={"k": 3})
    assert tmpl.name == inst.name
    assert tmpl.mu_image == inst.mu_image
    assert tmpl.minus_chi == inst.minus_chi
    assert [str(c) for c in tmpl.germ.components] == [
        str(c) for c in inst.germ.components
    ]


def test_template_spelling_without_params_fails():
    with pytest.raises(BadParamsError):
        resolve_row("A_k")
    with pytest.raises(BadParamsError):
        resolve_row("S_{j,k}", params={"j": 1})


@pytest.mark.parametrize(
    "text,mu,chi",
    [
        ("P_3^2", 4, 14),
        ("P_4^1", 5, 18),
        ("S_{1,2}", 4, 14),
        ("S_{2,3}", 6, 20),
        ("P_5", 7, 25),
        ("P_11", 26, 88),
        ("B_4", 4, 7),
        ("R_4", 5, 14),
    ],
)
def test_instance_spellings_resolve(text, mu, chi):
    row = resolve_row(text)
    assert row.name == text
    assert row.mu_image == mu
    assert row.minus_chi == chi


def test_unknown_names_raise():
    for text in ("Z_9", "A3", "S_{1;2}", "garbage", ""):
        with pytest.raises(UnknownEntryError):
            resolve_row(text)


@pytest.mark.parametrize(
    "text,params",
    [
        ("A_0", None),
        ("D_3", None),
        ("B_1", None),
        ("C_2", None),
        ("Q_1", None),
        ("R_2", None),
        ("P_3", None),  # P_k excludes multiples of three
        ("P_6", None),
        ("P_3^1", None),
        ("S_{0,2}", None),
        ("S_{1,1}", None),
        ("A_k", {"k": 0}),
    ],
)
def test_constraint_violations_raise(text, params):
    with pytest.raises(BadParamsError):
        resolve_row(text, params=params)


# ------------------------------------------------------------ moduli echoes


def test_moduli_echo_is_trimmed_to_what_the_row_uses():
    assert resolve_row("A_2").moduli == ()
    assert resolve_row("V").moduli == (2,)
    assert resolve_row("I").moduli == (2, 3)
    assert resolve_row("II").moduli == (2, 3, 5)
    assert resolve_row("V", moduli=(7, 11, 13)).moduli == (7,)


def test_too_few_moduli_raise():
    with pytest.raises(BadParamsError):
        resolve_row("V", moduli=(2, 3))


def test_notes_mark_the_special_entries():
    assert resolve_row("P_4^1").note == P4_ONE_NOTE
    for name in ("I", "II", "III", "IV", "VIII"):
        assert resolve_row(name).note == QUAD_CHI_NOTE
    assert resolve_row("A_1").note == ""


def test_acceptance_rows_all_resolve_cleanly():
    assert len(ACCEPTANCE_ROWS) == 17
    for text in ACCEPTANCE_ROWS:
        row = resolve_row(text)
        assert row.note == ""
        assert row.mu_image >= 1


def test_catalog_names_cover_the_templates():
    names = catalog_names()
    for expected in ("A_k", "E_8", "P_k", "S_{j,k}", "I", "VIII"):
        assert expected in names


# --------------------------------------------------- recomputed spot checks

# Rows outside the main quantitative table that still compute in well under
# a second each. Together with the acceptance rows this covers every
# catalog template and all corank-one normal form shapes.
FAST_ROWS = ("E_7", "E_8", "P_4", "P_5", "P_3^2", "P_4^1", "V", "VI", "VII")


@pytest.mark.parametrize("text", FAST_ROWS)
def test_fast_rows_match_their_closed_forms(text):
    row = resolve_row(text)
    rep = image_chi_report(invariant_tuple(row.germ))
    assert rep.consistent
    assert rep.mu_image == row.mu_image
    assert -rep.chi_mf == row.minus_chi


@pytest.mark.parametrize("text", ("V", "VI", "VII"))
def test_modal_rows_do_not_depend_on_the_moduli(text):
    t_default = invariant_tuple(resolve_row(text).germ)
    t_other = invariant_tuple(resolve_row(text, moduli=ALTERNATE_MODULI).germ)
    assert t_default == t_other
    assert DEFAULT_MODULI != ALTERNATE_MODULI


# The five germs with a quadruple point. Their tabulated minus-chi
# omits the quadruple point term of the closed form (see QUAD_CHI_NOTE),
# so the recomputed value must land above the printed one by exactly 4.
QUAD_ROWS = ("I", "II", "III", "IV", "VIII")


@pytest.mark.parametrize("text", QUAD_ROWS)
def test_quadruple_rows_sit_above_the_tabulated_chi(text):
    row = resolve_row(text)
    tup = invariant_tuple(row.germ)
    rep = image_chi_report(tup)
    assert tup.quad_points == 1
    assert rep.consistent
    assert rep.mu_image == row.mu_image
    assert -rep.chi_mf == row.minus_chi + 4


# Granular kernel checks on row III, the cheapest quadruple point entry:
# the quadruple scheme is a single orbit of 24 ordered points, the double
# point curve is smooth, and the diagonal slice of the triple point space
# has Milnor number 5.
def test_row_three_fast_invariants():
    germ = resolve_row("III").germ
    assert point_count(multiple_point_ideal(germ, 4)) == 24
    assert icis_milnor(multiple_point_ideal(germ, 2)).mu == 0
    assert icis_milnor(partition_restricted_ideal(germ, 3, (1, 2))).mu == 5
