"""Smoke test for the ulip_py extension (build with `maturin develop`)."""

import ulip_py as u


def main():
    assert "CKCEMID" in u.logics()

    ec = "[](~q & r), [](p & q) => []false"
    proof = u.prove("EC", ec)
    assert proof is not None and proof.check("EC")
    assert u.Proof.from_json(proof.to_json(), "EC").check("EC")
    assert not u.provable("CKCEM", "=> (p > r) | (q > ~r)")

    e = u.exists("K", "p", "[](p & q)")
    assert u.provable("K", f"{e} => []q") and u.provable("K", f"[]q => {e}")
    report = u.verify("K", "p", "=> [](p & q) -> r", u.forall("K", "p", "[](p & q) -> r"))
    assert report["violations"] == [], report

    try:
        u.forall("CKCEM", "p", "p > q", pol="pos")
    except ValueError as err:
        assert "plain" in str(err)
    else:
        raise AssertionError("Lyndon mode accepted for CKCEM")
    assert "p" not in u.forall("CKCEM", "p", "p > q", pol="plain").vars()

    assert u.craig("EC", "[](~q & r)", "[](p & q) -> []false", ["q"], 4) is None
    assert u.craig("K", "[](~q & r)", "[](p & q) -> []false", ["q"], 4) is not None

    theta = u.lyndon_interpolant("K", "[](p & q)", "([]q -> r) -> r")
    assert set(theta.vars()) <= {"q", "r"}

    f = u.Formula("[](p & q)")
    assert str(u.translate_s(u.translate_t(f))) == str(f)
    print("ok")


if __name__ == "__main__":
    main()
