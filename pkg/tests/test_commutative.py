from fractions import Fraction

import pytest

from peakalg.algebra import AlgElem
from peakalg.commutative import (
    a_descent_number,
    beta_x_number_formula,
    beta_y_number_formula,
    check_beta_number_forms,
    check_builder_relations,
    check_graded_dimensions,
    check_ker_beta2_on_sol,
    check_phi_number_forms,
    check_pi_number_forms,
    check_solhat_closure,
    check_type_d_numbers,
    check_whp_closure,
    chi_x0_number_coords,
    descent_number_coordinates,
    graded_builder,
    i0_number_coordinates,
    interior_peak_number,
    interior_number_coordinates,
    loday_witness,
    peak_number,
    peak_number_coordinates,
    phi_y_number_formula,
    pi_peak_number_formula,
    solhat_table,
    whp_table,
    x0_number,
    x_number,
    y0_number,
    y_number,
)
from peakalg.maps import beta_map, chi, phi, pi_map
from peakalg.perms import group_elements, identity


def test_builder_examples():
    # the zero-peak class is the identity alone, by enumeration
    for n in (2, 3, 4):
        support = {u for u in group_elements("S", n) if _peak_count(u) == 0}
        assert support == {identity(n)}
        assert peak_number(n, 0) == AlgElem.monomial("S", n, identity(n))
    assert x_number(3, 3) == x0_number(3, 3)


def _peak_count(u):
    from peakalg.perms import peak_mask

    return bin(peak_mask(u)).count("1")


def test_builder_index_ranges():
    with pytest.raises(ValueError):
        y_number(3, 4)
    with pytest.raises(ValueError):
        y0_number(3, 0)
    with pytest.raises(ValueError):
        peak_number(4, 3)
    with pytest.raises(ValueError):
        graded_builder("nope", 3, 1)


def test_builder_relations():
    for n in (2, 3, 4, 5):
        check_builder_relations(n)


def test_phi_restriction_formulas():
    for n in (2, 3, 4, 5):
        check_phi_number_forms(n)
    # explicit smallest case: phi(y_0) = p_0
    assert phi(y_number(3, 0)) == peak_number(3, 0)
    assert phi_y_number_formula(3, 0) == peak_number(3, 0)


def test_beta_restriction_formulas():
    for n in (2, 3, 4, 5):
        check_beta_number_forms(n)
    assert beta_map(x_number(3, 0)) == x_number(2, 0)
    assert beta_x_number_formula(3, 3) == AlgElem.zero("B", 2)
    assert beta_y_number_formula(3, 3) == -y_number(2, 2)


def test_pi_restriction_formulas():
    for n in (2, 3, 4, 5, 6):
        check_pi_number_forms(n)
    # top case: the projection negates and lowers the extreme index
    for n in (4, 5, 6):
        half = n // 2
        assert pi_map(peak_number(n, half)) == -peak_number(n - 2, half - 1)
    # boundary j=1 follows from the projection itself
    assert pi_map(peak_number(6, 1)) == peak_number(4, 1) - peak_number(4, 0)
    assert pi_peak_number_formula(6, 1) == peak_number(4, 1) - peak_number(4, 0)


def test_ker_beta2():
    for n in (2, 3, 4, 5):
        check_ker_beta2_on_sol(n)


def test_dimensions():
    for n in (2, 3, 4, 5, 6):
        check_graded_dimensions(n)


def test_number_coordinates():
    a = y_number(3, 1).scale(2) + y_number(3, 3)
    assert descent_number_coordinates(a) == [0, 2, 0, 1]
    assert descent_number_coordinates(y0_number(3, 2)) is None
    assert i0_number_coordinates(y0_number(3, 2)) == [0, 1, 0]
    assert peak_number_coordinates(peak_number(4, 1)) == [0, 1, 0]
    assert interior_number_coordinates(interior_peak_number(4, 2)) == [0, 1]
    assert interior_number_coordinates(peak_number(4, 1)) is None


def test_whp_tables_match_frozen_values():
    t2 = whp_table(2)
    assert t2.labels == ["p_0", "p_1", "p0_1"]
    assert t2.cell(2, 2) == (0, 0, 2)
    t3 = whp_table(3)
    assert t3.cell(1, 1) == (5, 4, 0, 0)
    assert t3.cell(1, 2) == (0, 0, 3, 4)
    t4 = whp_table(4)
    assert t4.cell(4, 4) == (0, 0, 0, 12, 10)
    assert t4.cell(1, 1) == (15, 13, 15, 0, 0)


def test_whp_closure_and_generation():
    for n in (2, 3, 4, 5):
        check_whp_closure(n)


def test_solhat_closure_and_generation():
    for n in (2, 3, 4):
        check_solhat_closure(n)


@pytest.mark.deep
def test_solhat_closure_rank_5():
    check_solhat_closure(5)


def test_solhat_table_blocks():
    t = solhat_table(3)
    assert t.labels == ["y_0", "y_1", "y_2", "y_3", "y0_1", "y0_2", "y0_3"]
    # unit row
    assert t.cell(0, 1) == (0, 1, 0, 0, 0, 0, 0)
    # ideal block rows have support only on the ideal side
    for j in range(4, 7):
        for i in range(7):
            assert all(c == 0 for c in t.cell(j, i)[:4])


def test_type_d_images():
    for n in (2, 3, 4, 5):
        check_type_d_numbers(n)
    # explicit rank-3 values
    assert chi_x0_number_coords(3, 1) == {0b1: 1, 0b10: 1}
    assert chi(x_number(3, 3)) == chi(x0_number(3, 3))


def test_type_d_second_relation_witness():
    # the fold is not injective on the joint graded span: explicit kernel
    for n in (3, 4, 5):
        v = (
            chi(x_number(n, n - 1))
            - chi(x0_number(n, n - 1))
            - chi(x_number(n, n)).scale(Fraction(1, 2))
        )
        assert not v


def test_loday_witnesses_frozen():
    assert loday_witness("p") == (4, "p_1")
    assert loday_witness("pint") == (3, "p0_1")
    # the witnesses really escape: rank grows when they join the span
    from peakalg.algebra import span_rank

    basis3 = [a_descent_number(3, j) for j in range(3)]
    assert span_rank(basis3 + [interior_peak_number(3, 1)]) == 4
    basis4 = [a_descent_number(4, j) for j in range(4)]
    assert span_rank(basis4 + [peak_number(4, 1)]) == 5
