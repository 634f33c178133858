import fo3ra


def test_translate_simplify():
    t = fo3ra.translate("~(forall x. forall y. ~A(x,x) | ~A(y,y))")
    assert t.simplified == "top ; ((A & id) ; top)"
    assert "1. Original Expression: " in t.render()


def test_simplify_uses_default_rules():
    out, steps = fo3ra.simplify("(a | b) & b")
    assert out == "b"
    assert steps


def test_check_equiv():
    assert fo3ra.check_equiv_ra("a | a", "a").valid
    v = fo3ra.check_equiv_ra("a", "b")
    assert not v.valid
    assert v.counterexample


def test_backtranslate_round_trip():
    closed = fo3ra.backtranslate("a ; b")
    assert fo3ra.check_equiv_fo3(closed, closed).valid


def test_typecheck():
    sig = "sort P\nsort Q\npred a : P -> Q\n"
    bad = fo3ra.typecheck("a[Q,P]", sig=sig, mode="het", ra=True)
    assert bad and bad[0][0] == 1


def test_fuzz_small():
    passed, failed = fo3ra.fuzz(count=10, size=8, seed=3)
    assert (passed, failed) == (10, 0)
