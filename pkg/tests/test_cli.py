import json

from wittcurve.cli import main
from wittcurve.curve import WittClass, enumerate_classes
from wittcurve.fields import SquareClass, make_field
from wittcurve.forms import DiagonalForm, GramForm, witt_invariants
from wittcurve.groupring import GroupRingElement
from wittcurve.pic2 import Pic2Group
from wittcurve.verify import CheckResult
from wittcurve.wittk import WittK


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_field_info_prime(capsys):
    code, out, _ = run(capsys, "field-info", "--q", "7")
    assert code == 0
    assert "q = 7 = 7^1" in out
    assert "canonical nonsquare: 3" in out
    assert "q mod 4 = 3" in out


def test_field_info_json_extension(capsys):
    code, data, _ = run_json(capsys, "field-info", "--q", "27")
    assert code == 0
    assert data["p"] == 3 and data["e"] == 3 and data["q"] == 27
    assert data["modulus"] == [1, 2, 0, 1]
    assert data["q_mod_4"] == 3


def test_field_info_rejects_even_and_garbage(capsys):
    for bad in ("8", "2^5", "6", "x", "0"):
        code, _, err = run(capsys, "field-info", "--q", bad)
        assert code == 2
        assert err.startswith("error:") and err.count("\n") == 1


def test_wittk_table_text(capsys):
    code, out, _ = run(capsys, "wittk-table", "--q", "5")
    assert code == 0
    assert out.count("PASS") == 4
    assert "<s> | <s> |   E |   0 | <1>" in out


def test_wittk_table_json_matches_arithmetic(capsys):
    for q in ("5", "7", "9"):
        code, data, _ = run_json(capsys, "wittk-table", "--q", q)
        assert code == 0
        context = data["context"]
        elems = WittK.elements(context)
        assert data["classes"] == [str(a) for a in elems]
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                assert data["add"][i][j] == str(a + b)
                assert data["mul"][i][j] == str(a * b)


def test_form_diag_antidiagonal(capsys):
    code, data, _ = run_json(capsys, "form-diag", "--q", "7", "--gram", "0,1;1,0")
    assert code == 0
    assert data["entries"] == [2, 3]
    field = make_field(7)
    t = data["transform"]
    g = GramForm(field, ((field.zero, field.one), (field.one, field.zero)))
    for i in range(2):
        for j in range(2):
            acc = field.zero
            for a in range(2):
                for b in range(2):
                    acc = acc + field.element(t[a][i]) * g.matrix[a][b] * field.element(t[b][j])
            expect = field.element(data["entries"][i]) if i == j else field.zero
            assert acc == expect


def test_form_diag_extension_entries(capsys):
    code, data, _ = run_json(
        capsys, "form-diag", "--q", "3^2", "--gram", "(1,0),(0,1);(0,1),(1,0)"
    )
    assert code == 0
    assert len(data["entries"]) == 2


def test_form_diag_degenerate_and_malformed(capsys):
    code, _, err = run(capsys, "form-diag", "--q", "5", "--gram", "0,0;0,0")
    assert code == 2 and "radical" in err
    code, _, err = run(capsys, "form-diag", "--q", "5", "--gram", "0,1;1")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "form-diag", "--q", "5", "--gram", "0,1;1,0;1,1")
    assert code == 2 and err.startswith("error:")


def test_form_witt_hyperbolic(capsys):
    # det <1,2,3,4> = 24 = 4, a square mod 5; rank 4 gives an even sign
    # exponent, so the signed discriminant is trivial and the class is zero
    code, data, _ = run_json(capsys, "form-witt", "--q", "5", "--diag", "1,2,3,4")
    assert code == 0
    assert data["hyperbolic_count"] == 2
    assert data["anisotropic_kernel"] == []
    assert data["signed_discriminant"] == "1"
    assert data["witt_class"] == "0"


def test_form_witt_gram_input(capsys):
    code, data, _ = run_json(capsys, "form-witt", "--q", "7", "--gram", "0,1;1,0")
    assert code == 0
    assert data["hyperbolic_count"] == 1 and data["witt_class"] == "0"
    code, _, err = run(capsys, "form-witt", "--q", "7")
    assert code == 2 and "--diag or --gram" in err


def test_form_witt_invariants_agree_with_library(capsys):
    field = make_field(11)
    entries = (1, 5, 7, 2)
    code, data, _ = run_json(capsys, "form-witt", "--q", "11", "--diag", "1,5,7,2")
    assert code == 0
    form = DiagonalForm(field, tuple(field.element(a) for a in entries))
    inv = witt_invariants(form)
    assert data["rank_parity"] == inv.rank_parity
    assert data["signed_discriminant"] == str(inv.signed_disc)


def test_curve_table_consistent(capsys):
    code, data, _ = run_json(capsys, "curve-table", "--q", "7", "--r", "1")
    assert code == 0
    group = Pic2Group(1)
    classes = [WittClass.from_json(c, data["context"], group) for c in data["classes"]]
    assert classes == enumerate_classes(data["context"], group)
    assert len(set(data["labels"])) == 8
    for i, a in enumerate(classes):
        for j, b in enumerate(classes):
            assert classes[data["add"][i][j]] == a + b
            assert classes[data["mul"][i][j]] == a * b


def test_curve_table_rank_bound(capsys):
    code, _, err = run(capsys, "curve-table", "--q", "7", "--r", "5")
    assert code == 2 and "r <= 4" in err


def test_curve_eval_fold(capsys):
    code, data, _ = run_json(
        capsys, "curve-eval", "--q", "13", "--r", "2", "--word", "(1,01);(s,11)"
    )
    assert code == 0
    group = Pic2Group(2)
    cls = WittClass.from_json(data["class"], 1, group)
    # q = 1 mod 4: <L> + <sM> is the even class with twist s on LM = 10
    assert cls == WittClass.even(SquareClass.NONSQUARE, group.element("10"), 1)
    assert data["rank_parity"] == 0
    assert data["signed_discriminant"] == {"u": "s", "L": "10"}


def test_curve_eval_empty_word_rank_zero(capsys):
    code, data, _ = run_json(capsys, "curve-eval", "--q", "7", "--r", "0", "--word", "(1,);(1,)")
    assert code == 0
    assert data["label"] == "<1,-s>"  # <1,1> has signed discriminant -1 = s mod 7


def test_curve_eval_bad_word(capsys):
    code, _, err = run(capsys, "curve-eval", "--q", "7", "--r", "2", "--word", "(1,0)")
    assert code == 2 and "length" in err
    code, _, err = run(capsys, "curve-eval", "--q", "7", "--r", "2", "--word", "(2,01)")
    assert code == 2 and err.startswith("error:")


def test_curve_normal_form_ideal_element(capsys):
    word = "(1,0);(s,0);(1,1);(s,1)"
    code, data, _ = run_json(capsys, "curve-normal-form", "--q", "13", "--r", "1", "--word", word)
    assert code == 0
    assert data["in_relation_ideal"] is True
    assert data["label"] == "0"
    elem = GroupRingElement.from_json(data["element"], data["context"], Pic2Group(1))
    assert elem.support_size() == 2


def test_curve_normal_form_nonideal(capsys):
    code, data, _ = run_json(
        capsys, "curve-normal-form", "--q", "13", "--r", "1", "--word", "(1,0);(s,0)"
    )
    assert code == 0
    assert data["in_relation_ideal"] is False
    assert data["label"] == "<1,-s>"


def test_verify_reporting(monkeypatch, capsys):
    import wittcurve.cli as cli

    fake = [
        CheckResult("alpha", True, "fine"),
        CheckResult("beta", False, "counterexample: x"),
    ]
    monkeypatch.setattr(cli, "run_all", lambda: fake)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "PASS  alpha" in out and "FAIL  beta" in out
    assert "1/2 checks passed" in out
    assert "counterexample: beta" in out

    monkeypatch.setattr(cli, "run_all", lambda: fake[:1])
    code, data, _ = run_json(capsys, "verify")
    assert code == 0
    assert data["passed"] == 1 and data["total"] == 1
    assert data["results"][0]["name"] == "alpha"


def test_max_search_flag(capsys):
    code, _, err = run(
        capsys, "form-witt", "--q", "11", "--diag", "1,5,7,2,3,1,1,9", "--max-search", "10"
    )
    assert code == 2 and "search" in err.lower()
