import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grsurf import jet
from grsurf.dsl import BinOp, Call, Neg, Num, Var, compile_jet, evaluate, parse_meridian, to_source
from grsurf.errors import DomainError, ParseError
from grsurf.jet import Jet2
from grsurf.meridian import Interval, closed_form, fd_oracle


def jets_at(src, u):
    return evaluate(parse_meridian(src), u)


# -- frozen oracle values (hand differentiation) ------------------------------------


@pytest.mark.parametrize(
    "src, u, expected",
    [
        ("sin(u)", 0.0, (0.0, 1.0, 0.0)),
        ("sqrt(u^2+1)", 0.0, (1.0, 0.0, 1.0)),
        ("2+0.3*sin(u)", 0.0, (2.0, 0.3, 0.0)),
        ("u^2", 1.7, (2.89, 3.4, 2.0)),
        ("exp(2*u)", 0.0, (1.0, 2.0, 4.0)),
        ("ln(u)", 2.0, (math.log(2), 0.5, -0.25)),
        ("1/u", 2.0, (0.5, -0.25, 0.25)),
        ("atan(u)", 1.0, (math.pi / 4, 0.5, -0.5)),
        ("cosh(u)", 0.0, (1.0, 0.0, 1.0)),
        ("abs(u)", -3.0, (3.0, -1.0, 0.0)),
        ("2^u", 1.0, (2.0, 2 * math.log(2), 2 * math.log(2) ** 2)),
    ],
)
def test_hand_derivatives(src, u, expected):
    j = jets_at(src, u)
    assert tuple(j) == pytest.approx(expected, rel=1e-14, abs=1e-14)


def test_quadratic_d2_exact():
    for u in (-3.0, 0.1, 7.5):
        assert jets_at("u^2", u).d2 == pytest.approx(2.0, abs=1e-6)


def test_jet_arithmetic_rules():
    x = Jet2.var(0.7)
    y = jet.sin(x) * jet.exp(x)
    s, c, e = math.sin(0.7), math.cos(0.7), math.exp(0.7)
    assert y.val == pytest.approx(s * e)
    assert y.d1 == pytest.approx((c + s) * e)
    assert y.d2 == pytest.approx(2 * c * e)
    q = Jet2.const(1.0) / x
    assert tuple(q) == pytest.approx((1 / 0.7, -1 / 0.49, 2 / 0.343))


# -- precedence and associativity --------------------------------------------------------


def test_precedence():
    assert parse_meridian("-u^2") == Neg(BinOp("^", Var(), Num(2.0)))
    assert parse_meridian("2^3^2") == BinOp("^", Num(2.0), BinOp("^", Num(3.0), Num(2.0)))
    assert parse_meridian("1-2-3") == BinOp("-", BinOp("-", Num(1.0), Num(2.0)), Num(3.0))
    assert parse_meridian("1+2*u") == BinOp("+", Num(1.0), BinOp("*", Num(2.0), Var()))
    assert parse_meridian("2^-u") == BinOp("^", Num(2.0), Neg(Var()))
    assert jets_at("-2^2", 0.0).val == -4.0
    assert jets_at("2^3^2", 0.0).val == 512.0
    assert jets_at("8/2/2", 0.0).val == 2.0


@pytest.mark.parametrize(
    "src, pos",
    [("sin(u", 5), ("u+", 2), ("foo(u)", 0), ("2**u", 2), ("u)", 1), ("", 0), ("3 $ u", 2)],
)
def test_parse_errors_carry_position(src, pos):
    with pytest.raises(ParseError) as ei:
        parse_meridian(src)
    assert ei.value.pos == pos
    assert f"position {pos}" in str(ei.value)


@pytest.mark.parametrize("src, u", [("sqrt(u)", -1.0), ("ln(u)", 0.0), ("asin(u)", 1.5), ("1/u", 0.0), ("exp(u)", 1e4)])
def test_domain_errors(src, u):
    with pytest.raises(DomainError):
        jets_at(src, u)


def test_meridian_domain_enforced():
    m = closed_form("u", "u", Interval(0.0, 1.0))
    with pytest.raises(DomainError):
        m.jets(1.5)


# -- AD against the finite-difference oracle: O(h^2) -----------------------------------------


PRIMITIVES = [
    "sin(u)", "cos(u)", "tan(u)", "asin(u)", "atan(u)", "sinh(u)", "cosh(u)",
    "ln(u+2)", "exp(u)", "sqrt(u+2)", "abs(u)^2.5", "u^3.5", "2^u", "u^u", "1/(u+1)",
]


@pytest.mark.parametrize("src", PRIMITIVES)
def test_ad_matches_fd_at_second_order(src):
    m = closed_form(src, "u", Interval(0.05, 0.6))
    u = 0.3
    fj, _ = m.jets(u)
    errs = []
    for h in (1e-2, 5e-3, 2.5e-3):
        fd, _ = fd_oracle(m, u, h)
        errs.append((abs(fj.d1 - fd.d1), abs(fj.d2 - fd.d2)))
    for k in range(2):
        for i in range(2):
            ratio = errs[i][k] / errs[i + 1][k]
            assert 3.5 <= ratio <= 4.5, (src, k, ratio)


def test_fd_oracle_examples():
    m = closed_form("sin(u)", "u")
    fd, gd = fd_oracle(m, 0.0, 1e-4)
    assert abs(fd.d1 - 1.0) < 1e-8
    assert tuple(gd)[:2] == pytest.approx((0.0, 1.0))
    c, _ = fd_oracle(closed_form("3.25", "u"), 0.4, 1e-3)
    assert c.d1 == 0.0 and c.d2 == 0.0


# -- round trip -----------------------------------------------------------------------------------


FUNCS = ["sin", "cos", "tan", "asin", "atan", "sinh", "cosh", "ln", "exp", "sqrt", "abs"]

numbers = st.floats(min_value=0, max_value=1e6, allow_nan=False, allow_infinity=False)

exprs = st.recursive(
    st.one_of(st.just(Var()), numbers.map(Num)),
    lambda sub: st.one_of(
        sub.map(Neg),
        st.tuples(st.sampled_from("+-*/^"), sub, sub).map(lambda t: BinOp(*t)),
        st.tuples(st.sampled_from(FUNCS), sub).map(lambda t: Call(*t)),
    ),
    max_leaves=12,
)


@settings(max_examples=300, deadline=None)
@given(exprs)
def test_pretty_print_round_trip(node):
    src = to_source(node)
    again = parse_meridian(src)
    assert again == node
    assert to_source(again) == src


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=-3, max_value=3))
def test_compiled_matches_direct(u):
    node = parse_meridian("sin(u)*exp(-u^2/2)+0.5*cosh(u)")
    f = compile_jet(node)
    j = f(Jet2.var(u))
    assert j.val == pytest.approx(math.sin(u) * math.exp(-u * u / 2) + 0.5 * math.cosh(u))
