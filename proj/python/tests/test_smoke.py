import pytest

import freefrac


def test_rank_and_expand():
    s = freefrac.Session("x,y,z")
    assert s.rank("x*y*z") == 4
    assert s.build("(1 - x)^-1").expand(2) == "1 + x + x*x"


def test_hua_identity():
    s = freefrac.Session()
    assert s.equal("x - (x^-1 + (y^-1 - x)^-1)^-1", "x*y*x") == "equal-certified"
    assert [d for _, d in s.steps()][-1] == 4


def test_factor():
    s = freefrac.Session()
    factors, certified = s.factor("x - x*y*x")
    assert factors == ["x", "1 - y*x"]
    assert certified


def test_json_round_trip():
    s = freefrac.Session()
    f = s.build("(x*y - z)^-1")
    g = freefrac.from_json(f.to_json())
    assert g.letters == ["x", "y", "z"]
    assert s.equal(f, g) == "equal-certified"


def test_minimize_and_bind():
    s = freefrac.Session()
    s.bind("p", "x*y + 1")
    g, certified = freefrac.minimize(s.build("p*p^-1"))
    assert certified and g.dim == 1


def test_errors():
    s = freefrac.Session()
    with pytest.raises(freefrac.UserError, match="offset 4"):
        s.build("x*(y")
    with pytest.raises(ValueError, match="division by zero"):
        s.build("(x - x)^-1")
    assert s.run("rank w")[0] == 1
