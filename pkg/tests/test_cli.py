import json

import pytest

from partial_brauer.cli import run

EX_ALPHA = "2;[[1],[2],[-1,-2]]"
EX_BETA = "2;[[1,2],[-1,-2]]"


def out_of(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr()


def test_mu(capsys):
    code, cap = out_of(capsys, ["mu", "--n", "3", "--k", "1", "--r", "1", "--q", "1"])
    assert code == 0 and cap.out.strip() == "4"


def test_enumerate_count(capsys):
    code, cap = out_of(capsys, ["enumerate", "--n", "2", "--count-only"])
    assert code == 0 and cap.out.strip() == "10"
    _, cap = out_of(capsys, ["enumerate", "--n", "2", "--rank", "0", "--format", "csv"])
    lines = cap.out.splitlines()
    assert lines[0] == "partition,rank,ker_singletons,coker_singletons" and len(lines) == 5


def test_classify_example(capsys):
    code, cap = out_of(capsys, ["classify", "--alpha", EX_ALPHA, "--beta", EX_BETA, "--oracle"])
    assert code == 0 and cap.out.splitlines()[0] == "not_isomorphic"
    _, cap = out_of(capsys, ["classify", "--alpha", EX_ALPHA, "--beta", EX_BETA, "--format", "json"])
    rec = json.loads(cap.out)
    assert rec["verdict"] == "conjectural" and rec["detail"] == "distinct_invariants"


def test_classify_sweep(capsys):
    code, cap = out_of(capsys, ["classify", "--all-pairs", "--n", "2", "--rank", "1", "--oracle",
                                "--format", "json", "--jobs", "2"])
    recs = [json.loads(line) for line in cap.out.splitlines()]
    assert code == 0 and len(recs) == 21
    assert all(r["verdict"] == r["oracle"] for r in recs)


def test_json_lines(capsys):
    code, cap = out_of(capsys, ["mu-table", "--n", "2", "--oracle", "--format", "json"])
    recs = [json.loads(line) for line in cap.out.splitlines()]
    assert code == 0 and all(r["match"] for r in recs)
    assert set(recs[0]) == {"n", "k", "r", "q", "mu", "bruteforce", "match"}


def test_product_and_stats(capsys):
    _, cap = out_of(capsys, ["product", "--alpha", EX_ALPHA, "--beta", EX_BETA, "--format", "json"])
    assert json.loads(cap.out) == {"product": "2;[[1],[2],[-1,-2]]", "rank": 0}
    _, cap = out_of(capsys, ["stats", "--alpha", EX_ALPHA, "--format", "json"])
    rec = json.loads(cap.out)
    assert (rec["rank"], rec["ker_singletons"], rec["coker_singletons"]) == (0, 2, 0)


def test_join(capsys):
    _, cap = out_of(capsys, ["join", "--left", "13; eq=[[8,9],[10,11],[12,13]]; X=[1,2,3,4]",
                             "--right", "13; eq=[[3,8]]; X=[1,2,9]", "--format", "json"])
    rec = json.loads(cap.out)
    assert rec["rank"] == 3 and [3, 8, 9] in rec["paths"]


def test_green_psets_table_iso(capsys):
    code, cap = out_of(capsys, ["green", "--alpha", EX_ALPHA, "--oracle", "--format", "json"])
    assert code == 0 and all(json.loads(l)["table_agrees"] for l in cap.out.splitlines())
    _, cap = out_of(capsys, ["green", "--alpha", EX_ALPHA, "--class-of", EX_BETA, "--kind", "H"])
    assert "members" in cap.out
    _, cap = out_of(capsys, ["psets", "--alpha", EX_ALPHA, "--format", "json"])
    sizes = {json.loads(l)["set"]: json.loads(l)["size"] for l in cap.out.splitlines()}
    assert sizes["P"] == 4
    _, cap = out_of(capsys, ["table", "--alpha", EX_ALPHA])
    assert len(cap.out.splitlines()) == 11
    _, cap = out_of(capsys, ["iso", "--alpha", "2;[[1,-2],[2,-1]]", "--beta", "2;[[1,-1],[2,-2]]"])
    assert cap.out.strip() == "isomorphic"


def test_verify(capsys):
    code, cap = out_of(capsys, ["verify", "--only", "cardinality", "rank-zero-example", "--format", "csv"])
    assert code == 0
    assert cap.out.splitlines()[1].startswith("cardinality,PASS")


def test_usage_errors_name_the_token(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2 and "frobnicate" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        run(["stats", "--alpha", "2;[[1,7]]"])
    assert "2;[[1,7]]" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        run(["verify", "--only", "bogus"])
    assert "bogus" in capsys.readouterr().err


def test_bound_guidance(capsys):
    code, cap = out_of(capsys, ["enumerate", "--n", "5", "--count-only"])
    assert code == 3 and "raise --max-n" in cap.err
    code, cap = out_of(capsys, ["enumerate", "--n", "5", "--count-only", "--max-n", "5"])
    assert code == 0 and cap.out.strip() == "9496"


def test_deterministic(capsys):
    _, first = out_of(capsys, ["enumerate", "--n", "2"])
    _, second = out_of(capsys, ["enumerate", "--n", "2"])
    assert first.out == second.out
