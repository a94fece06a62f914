import random

import pytest

from chromalg import (
    ONE,
    Q_MINUS_1,
    QV,
    ZERO,
    AlgebraElement,
    GeneratorExpression,
    GeneratorSymbol,
    Partition,
    RationalFunctionQ,
    alpha,
    basis_element,
    c_coeff,
    decompose_basis,
    decompose_element,
    elem_add,
    elem_scale,
    enumerate_basis,
    evaluate,
    expression_from_json,
    expression_to_json,
    generator_diagram,
    generators,
    identity_element,
    identity_partition,
    normalize,
    symbol_element,
    symbol_partition,
)

from helpers import WordSpan, eval_words

E12 = GeneratorSymbol(1, 2, 2)


def rq(k):
    return RationalFunctionQ.from_rational(k)


def test_generator_counts():
    assert generators(1) == []
    assert len(generators(3)) == 3
    assert len(generators(11)) == 55
    for n in range(1, 12):
        syms = generators(n)
        assert len(syms) == n * (n - 1) // 2
        assert len(set(syms)) == len(syms)
        assert syms == sorted(syms, key=lambda s: (s.i, s.j))


def test_symbol_validation():
    with pytest.raises(ValueError):
        GeneratorSymbol(2, 2, 3)
    with pytest.raises(ValueError):
        GeneratorSymbol(1, 4, 3)
    with pytest.raises(ValueError):
        GeneratorSymbol(0, 1, 3)


def test_symbol_partition_matches_diagram():
    for n in range(2, 6):
        for sym in generators(n):
            assert symbol_partition(sym) == alpha(generator_diagram(sym.i, sym.j, n))
    assert symbol_partition(E12) == Partition(2, [(1, 2, 3, 4)])
    assert symbol_partition(GeneratorSymbol(1, 3, 3)) == Partition(
        3, [(1, 2, 3, 4, 5, 6)]
    )
    assert symbol_partition(GeneratorSymbol(2, 3, 4)) == Partition(
        4, [(1, 8), (2, 3, 6, 7), (4, 5)]
    )


def test_expression_construction():
    x = GeneratorExpression(2, [(ONE, (E12,)), (ONE, (E12,)), (ZERO, ())])
    assert x.terms == ((rq(2), (E12,)),)
    assert GeneratorExpression(2, [(ONE, ()), (rq(-1), ())]).is_zero()
    with pytest.raises(ValueError):
        GeneratorExpression(3, [(ONE, (E12,))])
    with pytest.raises(TypeError):
        GeneratorExpression(2, [(ONE, ("e12",))])


def test_evaluate_examples():
    assert evaluate(GeneratorExpression(2, [])).is_zero()
    assert evaluate(GeneratorExpression(2, [(ONE, ())])) == identity_element(2)
    assert evaluate(GeneratorExpression(2, [(ONE, (E12,))])) == basis_element(
        Partition(2, [(1, 2, 3, 4)])
    )
    # e^2 - (Q-2) e = a
    a = GeneratorExpression(2, [(ONE, (E12, E12)), (rq(2) - QV, (E12,))])
    assert evaluate(a) == basis_element(Partition(2, [(1, 2), (3, 4)]))


def test_c_coeff_values():
    assert c_coeff(0) == ZERO
    assert c_coeff(1) == ONE
    assert c_coeff(2) == QV - rq(2)
    for k in range(1, 7):
        assert c_coeff(k) + c_coeff(k - 1) == Q_MINUS_1 ** (k - 1)
    with pytest.raises(ValueError):
        c_coeff(-1)


def test_c_coeff_matches_engine():
    # the engine's k-fold bundle resolves to c_k * contracted + (-1)^k * deleted
    from test_rewrite import two_vertex_gadget

    contracted = basis_element(Partition(2, [(1, 2, 3, 4)]))
    deleted = basis_element(identity_partition(2))
    for k in range(6):
        sign = rq(1) if k % 2 == 0 else rq(-1)
        want = elem_add(elem_scale(c_coeff(k), contracted), elem_scale(sign, deleted))
        assert normalize(two_vertex_gadget(k)) == want


def test_decompose_golden_cases():
    for n in (1, 2, 3):
        assert decompose_basis(identity_partition(n)).terms == ((ONE, ()),)
    assert decompose_basis(Partition(2, [(1, 2, 3, 4)])).terms == ((ONE, (E12,)),)
    got = decompose_basis(Partition(2, [(1, 2), (3, 4)]))
    assert got.terms == ((rq(2) - QV, (E12,)), (ONE, (E12, E12)))


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_round_trip(n):
    for p in enumerate_basis(n):
        expr = decompose_basis(p)
        assert expr.n == n
        assert all(s.n == n for _, w in expr.terms for s in w)
        assert evaluate(expr) == basis_element(p)


def test_round_trip_spot_check_n5():
    rng = random.Random(3)
    basis = enumerate_basis(5)
    for p in rng.sample(basis, 25):
        assert evaluate(decompose_basis(p)) == basis_element(p)


def test_integer_polynomial_coefficients():
    for n in (2, 3, 4):
        for p in enumerate_basis(n):
            for c, _ in decompose_basis(p).terms:
                assert c.is_polynomial()
                assert all(f.denominator == 1 for _, f in c.num.terms)


def test_la_oracle_agreement():
    for n in (2, 3):
        span = WordSpan(n)
        for p in enumerate_basis(n):
            combo = span.solve(p)
            assert combo is not None
            target = basis_element(p)
            assert eval_words(n, combo) == target
            assert evaluate(decompose_basis(p)) == target


def test_decompose_element_linearity():
    e = Partition(2, [(1, 2, 3, 4)])
    x = elem_add(
        elem_scale(Q_MINUS_1, basis_element(e)),
        elem_scale(rq(-1) * Q_MINUS_1, identity_element(2)),
    )
    expr = decompose_element(x)
    assert evaluate(expr) == x
    words = dict((w, c) for c, w in expr.terms)
    assert words[(E12,)] == Q_MINUS_1
    assert words[()] == ZERO - Q_MINUS_1

    assert decompose_element(AlgebraElement(3, {})).is_zero()
    assert decompose_element(identity_element(3)).terms == ((ONE, ()),)


def test_expression_json_round_trip():
    for p in enumerate_basis(3):
        expr = decompose_basis(p)
        data = expression_to_json(expr)
        assert expression_from_json(data) == expr
    data = expression_to_json(decompose_basis(Partition(2, [(1, 2), (3, 4)])))
    assert data["terms"][1]["word"] == [[1, 2], [1, 2]]


def test_symbol_element_matches_partition():
    for sym in generators(4):
        assert symbol_element(sym) == basis_element(symbol_partition(sym))
