"""Smoke test for the compiled `homfly` extension module."""

import json

import homfly


def main():
    trefoil = homfly.Braid("B2: 1 1 1")
    assert trefoil.strands == 2 and trefoil.letters == [1, 1, 1]

    p = homfly.eval(trefoil)
    assert p == homfly.Homfly("-2*l^2 + l^2*m^2 - l^4"), p
    assert str(p.specialize("alexander")) == "s^-2 - 1 + s^2"

    conway = homfly.eval("B3: 1 2 1 2", spec="alexander")
    assert str(conway) == "s^-2 - 1 + s^2", conway
    assert homfly.Poly.from_json(conway.to_json()) == conway

    ev = homfly.Evaluator("jones")
    v = ev.eval("B3: 1 -2 1 -2")
    assert v == v.bar(), "figure-eight is amphichiral"

    d = homfly.eval("B2: 1 1 1", spec="degenerate")
    assert d.terms() == [(2, "2"), (4, "-1")], d.terms()

    assert homfly.is_simple("B13: 1 2 3 5 6 8 10") == [4, 3, 2, 2]
    assert homfly.is_simple("B3: 1 2 1 2") is None
    assert homfly.classify(9) == [(1, -1, 0), (1, 3, 2), (1, 1, 1)]

    num, den = homfly.genfun("B2: 1", spec="degenerate")
    assert den == "(1 + (-2*s)*t1 + (s^2)*t1^2)", den

    try:
        homfly.Evaluator("jones", oracle=False, budget=1).eval("B4: 1 2 3 1 2 3 1 2 3")
    except homfly.IndeterminateError:
        pass
    else:
        raise AssertionError("expected IndeterminateError")

    try:
        homfly.Braid("B2: 5")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    manifest = {"version": "v1", "entries": [{"id": "ekt", "check": "ekt-coefficients"}]}
    report = json.loads(homfly.verify(json.dumps(manifest)))
    assert report["passed"], report

    print("smoke test passed")


if __name__ == "__main__":
    main()
