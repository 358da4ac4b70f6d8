import pytest

from qfranklin.dsl import (
    IDENTITY_SCRIPTS,
    Add,
    Div,
    DivergenceError,
    DSLSyntaxError,
    ExponentError,
    DSLEvalError,
    Inf,
    IntLit,
    Mul,
    Neg,
    NonUnitDivisionError,
    Poch,
    Pow,
    Sub,
    Sum,
    Var,
    VarQ,
    VarX,
    eval_expr,
    parse,
    run_verify,
    to_text,
)
from qfranklin.series import QSeries, XQSeries, lambert_series, pentagonal_series

from oracles import divisor_count

CORPUS = [
    "0", "1", "42", "q", "x", "-q", "--q", "-q^2", "-(q^2)", "q^3",
    "1 - q", "1 - q*x^2", "1 - q - q^2", "(1 - q)*(1 + q)", "q*x + x*q",
    "2^3^2", "2^(3^2)", "1 - (q - x)", "1 - q - x", "(1 - q) - x",
    "q/(1 - q)", "1/(1 - q)*(1 - q)", "1/((1 - q)*(1 - q))", "x^2*q^3 - 4*x*q",
    "3*q - 2*x + 7", "(q + x)^4", "-(q + x)^2", "-(1 - q)",
    "poch(q, 2)", "poch(q, inf)", "poch(x*q, 3)", "poch(x, 4)", "poch(x*q^2, inf)",
    "poch(-q, 5)", "poch(q, 0)", "1 - poch(q, inf)",
    "sum(k, 1, inf, q^k/(1 - q^k))", "sum(k, 0, 5, q^k)", "sum(k, 0, inf, x^k)",
    "sum(n, 0, inf, poch(q, inf) - poch(q, n))",
    "sum(r, 0, inf, poch(x, r + 1)*x^r)",
    "sum(m, 0, inf, poch(x*q, m)*x^m)*(1 - x)",
    "sum(r, 1, 3, (-1)^r*q^(r*(3*r - 1)/2))",
    "sum(r, 1, inf, (-1)^r*(q^(r*(3*r - 1)/2) + q^(r*(3*r + 1)/2)))",
    "sum(j, 0, 4, sum(k, 0, j, q^(j + k)))",
    "sum(k, 2, 2, k*q^k)", "sum(k, 0, inf, (k + 1)*q^k)",
    "sum(k, 0, inf, q^(k^2))", "sum(k, 0, inf, q^(2*k)*x^k)",
    "poch(q, inf)*sum(k, 1, inf, q^k/(1 - q^k))",
    "(1 + x)^3*(1 - q)^2", "q^0", "x^0*q", "5 - -3", "1 + 2*3 - 4/(-1)",
    "(q)", "((((x))))", "poch(x*q, 2)^2", "sum(k, 0, inf, (-q)^k)",
    "1/(1 + q)", "1/(-1 + q^2)",
]


class TestParse:
    def test_poch(self):
        assert parse("poch(q,2)") == Poch(VarQ(), IntLit(2))

    def test_precedence(self):
        assert parse("1 - q*x^2") == Sub(IntLit(1), Mul(VarQ(), Pow(VarX(), IntLit(2))))

    def test_lambert_syntax(self):
        e = parse("sum(k,1,inf, q^k / (1 - q^k))")
        assert e == Sum("k", IntLit(1), Inf(),
                        Div(Pow(VarQ(), Var("k")), Sub(IntLit(1), Pow(VarQ(), Var("k")))))

    def test_unary_minus_binds_tighter_than_power(self):
        assert parse("-q^2") == Pow(Neg(VarQ()), IntLit(2))

    def test_left_associative(self):
        assert parse("1 - 2 - 3") == Sub(Sub(IntLit(1), IntLit(2)), IntLit(3))
        assert parse("2^3^2") == Pow(Pow(IntLit(2), IntLit(3)), IntLit(2))
        assert parse("q/x/q") == Div(Div(VarQ(), VarX()), VarQ())

    def test_add_sub_same_level(self):
        assert parse("1 + q - x") == Sub(Add(IntLit(1), VarQ()), VarX())

    def test_corpus_size(self):
        assert len(CORPUS) >= 50

    @pytest.mark.parametrize("text", CORPUS)
    def test_print_idempotent(self, text):
        e = parse(text)
        assert parse(to_text(e)) == e
        assert to_text(parse(to_text(e))) == to_text(e)


class TestSyntaxErrors:
    @pytest.mark.parametrize("text, line, col", [
        ("1 +", 1, 4),
        ("poch(q,", 1, 8),
        ("(q", 1, 3),
        ("q $ 2", 1, 3),
        ("y + 1", 1, 1),
        ("1 + inf", 1, 5),
        ("sum(q, 0, 1, q)", 1, 5),
        ("sum(k, 0, 3, sum(k, 0, 1, 1))", 1, 18),
        ("q\n  + )", 2, 5),
        ("q q", 1, 3),
        ("k + sum(k, 0, 1, k)", 1, 1),
    ])
    def test_positions(self, text, line, col):
        with pytest.raises(DSLSyntaxError) as info:
            parse(text)
        assert (info.value.line, info.value.column) == (line, col)

    def test_message_names_token(self):
        with pytest.raises(DSLSyntaxError, match=r"1:3: .*'\$'"):
            parse("q $ 2")


class TestEval:
    def test_euler_product(self):
        assert eval_expr("poch(q,inf)", 7).to_qseries() == pentagonal_series(7)

    def test_lambert(self):
        assert [divisor_count(n) for n in range(1, 5)] == [1, 2, 2, 3]
        assert eval_expr("sum(k,1,inf, q^k/(1-q^k))", 4).to_qseries() == lambert_series(4)

    def test_unit_inverse(self):
        assert eval_expr("1/(1-q) * (1-q)", 10) == XQSeries.one(10, 0)

    def test_geometric(self):
        assert eval_expr("1/(1-q)", 5).to_qseries() == QSeries([1] * 6)
        assert eval_expr("1/(-1+q)", 3).to_qseries() == QSeries([-1] * 4)

    def test_bivariate(self):
        s = eval_expr("poch(x*q, 2)", 3, 2)
        assert s == XQSeries.from_terms([(0, 0, 1), (1, 1, -1), (1, 2, -1), (2, 3, 1)], 3, 2)

    def test_finite_sum(self):
        assert eval_expr("sum(k, 0, 3, k*q^k)", 5).to_qseries() == QSeries([0, 1, 2, 3, 0, 0])

    def test_nested_sum(self):
        # sum_{j<=2} sum_{k<=j} q^(j+k) = 1 + q + 2q^2 + q^3 + q^4
        s = eval_expr("sum(j, 0, 2, sum(k, 0, j, q^(j+k)))", 5).to_qseries()
        assert s == QSeries([1, 1, 2, 1, 1, 0])

    def test_bound_var_in_poch_count(self):
        s = eval_expr("sum(n, 0, 2, poch(q, n))", 3).to_qseries()
        assert s == QSeries([3, -2, -1, 1])

    def test_poch_with_unit_base(self):
        assert eval_expr("poch(1, inf)", 4).is_zero()
        assert eval_expr("poch(1, 0)", 4) == XQSeries.one(4, 0)

    def test_exponent_past_window(self):
        assert eval_expr("q^1000000", 5).is_zero()

    def test_non_unit_division(self):
        with pytest.raises(NonUnitDivisionError):
            eval_expr("1/(2 - q)", 5)
        with pytest.raises(NonUnitDivisionError):
            eval_expr("1/q", 5)

    def test_divergence_guard(self):
        with pytest.raises(DivergenceError):
            eval_expr("sum(k, 0, inf, 1)", 5)
        with pytest.raises(DivergenceError):
            eval_expr("sum(k, 0, inf, q + q^k)", 5, guard_window=3)

    def test_guard_window_respected(self):
        # valuation stalls for 6 terms, then the term vanishes
        text = "sum(k, 0, inf, q*(6 - k))"
        with pytest.raises(DivergenceError):
            eval_expr(text, 3, guard_window=5)
        assert eval_expr(text, 3, guard_window=8).to_qseries() == QSeries([0, 21, 0, 0])

    def test_exponent_errors(self):
        with pytest.raises(ExponentError):
            eval_expr("q^(1/2)", 4)
        with pytest.raises(ExponentError):
            eval_expr("q^(0 - 1)", 4)
        with pytest.raises(ExponentError):
            eval_expr("q^q", 4)
        with pytest.raises(ExponentError):
            eval_expr("poch(q, 0 - 2)", 4)

    def test_poch_base_must_be_monomial(self):
        with pytest.raises(DSLEvalError):
            eval_expr("poch(1 + q, 2)", 4)

    @pytest.mark.parametrize("text", CORPUS)
    def test_truncation_monotone(self, text):
        high = eval_expr(text, 14, 6)
        for Q, X in [(9, 6), (14, 2), (5, 0)]:
            assert eval_expr(text, Q, X) == high.truncate(Q, X)


class TestVerify:
    def test_pentagonal_at_100(self):
        lhs, rhs = IDENTITY_SCRIPTS["pentagonal"]
        assert run_verify(lhs, rhs, 100).equal

    def test_mismatch(self):
        rep = run_verify("poch(q,inf)", "1 - q", 2)
        assert rep.status == "mismatch"
        assert rep.first_mismatch == (0, 2, -1, 0)

    @pytest.mark.parametrize("order", [0, 3, 17])
    def test_reflexive(self, order):
        for text in ("poch(q, inf)", "sum(r, 0, inf, poch(x, r + 1)*x^r)"):
            rep = run_verify(text, text, order, 4)
            assert rep.equal and rep.first_mismatch is None

    @pytest.mark.parametrize("name", sorted(IDENTITY_SCRIPTS))
    def test_shipped_scripts(self, name):
        lhs, rhs = IDENTITY_SCRIPTS[name]
        assert run_verify(lhs, rhs, 60, 25).equal
