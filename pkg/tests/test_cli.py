import json

import pytest

from fibarrays.cli import main, random_case


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


class TestArray:
    def test_odd_pascal(self, capsys):
        code, out = run(capsys, "array", "--seed", "0:1,1:1", "--alpha", "1", "--beta", "2", "--n-max", "2")
        assert code == 0
        assert out == "1\t1\n1\t3\t3\t1\n1\t5\t10\t10\t5\t1\n"

    def test_trinomial_preset(self, capsys):
        _, out = run(capsys, "array", "--preset", "trinomial", "--n-max", "2")
        assert out == "1\n1\t1\t1\n1\t2\t3\t2\t1\n"

    def test_zero_seed(self, capsys):
        _, out = run(capsys, "array", "--seed", "", "--n-max", "2")
        assert out == "\n\n\n"

    def test_json_matches_tsv(self, capsys):
        args = ["array", "--preset", "catalan", "--n-max", "40"]
        _, tsv = run(capsys, *args)
        _, js = run(capsys, *args, "--format", "json")
        rows = json.loads(js)["rows"]
        assert [[c["value"] for c in r] for r in rows] == [line.split("\t") for line in tsv.splitlines()]
        # big values survive as strings
        assert any(len(c["value"]) > 20 for c in rows[-1])
        assert rows[0] == [{"k": -1, "value": "-1"}, {"k": 0, "value": "0"}, {"k": 1, "value": "1"}]

    def test_rational_parameters(self, capsys):
        _, out = run(capsys, "array", "--alpha", "1/2", "--beta=-1/3", "--n-max", "1")
        assert out.splitlines()[1] == "1/2\t-1/3\t1/2"

    @pytest.mark.parametrize("bad", [["--alpha", "0.5"], ["--seed", "1"], ["--beta", "1/0"]])
    def test_parse_errors(self, capsys, bad):
        assert run_usage(capsys, "array", *bad) == 2


class TestVerify:
    def test_all(self, capsys):
        code, out = run(capsys, "verify", "--ids", "all", "--n-max", "200")
        assert code == 0
        assert len(out.splitlines()) == 12
        assert all(line.split("\t")[2] == "pass" for line in out.splitlines())

    def test_single(self, capsys):
        code, out = run(capsys, "verify", "--ids", "eq3", "--n-max", "50")
        assert code == 0 and out == "eq3\t0..50\tpass\n"

    def test_unknown(self, capsys):
        assert run_usage(capsys, "verify", "--ids", "unknown-id") == 2

    def test_counterexample_exit(self, capsys, monkeypatch):
        from fibarrays import identities
        orig = identities.REGISTRY["eq5"]
        broken = identities.IdentityDef("eq5", orig.fib_index, lambda n: orig.rhs(n) - (n == 4), 0)
        monkeypatch.setitem(identities.REGISTRY, "eq5", broken)
        code, out = run(capsys, "verify", "--ids", "eq5", "--n-max", "10", "--format", "json")
        assert code == 1
        ce = json.loads(out)["reports"][0]["counterexample"]
        assert ce == {"n": 4, "lhs": "55", "rhs": "54"}

    def test_json_deterministic(self, capsys):
        _, a = run(capsys, "verify", "--format", "json", "--n-max", "60")
        _, b = run(capsys, "verify", "--format", "json", "--n-max", "60")
        assert a == b
        ids = [r["id"] for r in json.loads(a)["reports"]]
        assert len(ids) == 12 and ids == sorted(ids)


class TestFuzz:
    def test_passes_and_is_reproducible(self, capsys):
        code, a = run(capsys, "fuzz", "--trials", "60", "--n-max", "15", "--rng-seed", "7", "--format", "json")
        _, b = run(capsys, "fuzz", "--trials", "60", "--n-max", "15", "--rng-seed", "7", "--format", "json")
        assert code == 0 and a == b
        assert json.loads(a)["failed"] == 0

    def test_different_seeds_differ(self):
        import random
        cases_a = [random_case(random.Random(1)) for _ in range(3)]
        cases_b = [random_case(random.Random(2)) for _ in range(3)]
        assert cases_a != cases_b

    def test_random_case_bounds(self):
        import random
        rng = random.Random(3)
        saw_zero = False
        for _ in range(400):
            spec, s = random_case(rng)
            assert len(spec.seed.values) <= 9
            for q in (spec.alpha, spec.beta, *spec.seed.values):
                assert abs(q.numerator) <= 9 and q.denominator <= 9
            assert 1 <= s.k1 < 5 and s.period == 5
            saw_zero |= spec.seed.is_zero
        assert saw_zero

    def test_period_guard(self, capsys):
        assert run_usage(capsys, "fuzz", "--trials", "1", "--period", "7") == 2

    def test_trials_guard(self, capsys):
        assert run_usage(capsys, "fuzz", "--trials", "0") == 2


class TestMinrec:
    def test_odd_pascal(self, capsys):
        _, out = run(capsys, "minrec", "--preset", "pascal-odd", "--k0", "0", "--k1", "1")
        assert out.strip() == "order 2: d[n] = 3 d[n-1] - 1 d[n-2]"

    def test_trinomial(self, capsys):
        _, out = run(capsys, "minrec", "--preset", "trinomial")
        assert out.strip() == "order 2: d[n] = 1 d[n-1] + 1 d[n-2]"

    def test_zero_seed(self, capsys):
        _, out = run(capsys, "minrec", "--seed", "")
        assert out.strip() == "order 0"

    def test_empirical_label(self, capsys):
        _, out = run(capsys, "minrec", "--preset", "pascal-odd", "--period", "7", "--format", "json")
        data = json.loads(out)
        assert data["empirical"] is True

    def test_insufficient_data(self, capsys):
        assert run_usage(capsys, "minrec", "--preset", "trinomial", "--n-max", "2", "--max-order", "4") == 2


def test_dseries(capsys):
    _, out = run(capsys, "dseries", "--preset", "pascal-odd", "--n-max", "4")
    assert out == "0\t1\n1\t2\n2\t5\n3\t13\n4\t34\n"
    _, out = run(capsys, "dseries", "--preset", "catalan", "--k0", "1", "--k1", "2", "--n-max", "3")
    assert [line.split("\t")[0] for line in out.splitlines()] == ["1", "2", "3"]


def test_oracle_catalan(capsys):
    code, out = run(capsys, "oracle-catalan", "--n-max", "5")
    assert code == 0
    assert len(out.splitlines()) == 15
    assert run_usage(capsys, "oracle-catalan", "--n-max", "13") == 2
