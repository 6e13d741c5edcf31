import json

from dysonct.cli import RunConfig, main, run


class TestVerifyCommand:
    def test_small_grid_passes(self, capsys):
        code = main(["verify", "q-dyson", "--n", "2", "--a-max", "2"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 9  # {0,1,2}^2
        assert all(line.startswith("PASS q-dyson") for line in lines)

    def test_unknown_identity_exits_2(self, capsys):
        code = main(["verify", "no-such-identity"])
        err = capsys.readouterr().err
        assert code == 2
        assert "q-dyson" in err  # the list of known identities is printed

    def test_json_schema(self, capsys):
        code = main(["verify", "q-dyson", "--n", "2", "--a-max", "1",
                     "--format", "json"])
        out = capsys.readouterr().out
        assert code == 0
        for line in out.strip().splitlines():
            record = json.loads(line)
            assert set(record) == {"identity", "params", "lhs", "rhs",
                                   "equal", "millis"}
            assert record["equal"] is True

    def test_kadell_grid_contains_zero_cases(self, capsys):
        code = main(["verify", "kadell", "--n", "2", "--m-max", "2",
                     "--a-max", "2"])
        out = capsys.readouterr().out
        assert code == 0
        # compositions with v+ != (m) are part of the grid
        assert "v=[1, 1]" in out

    def test_sum_max_filter(self):
        code, records = run(RunConfig("q-dyson", n=3, a_max=2, sum_max=2))
        assert code == 0
        assert all(sum(r["params"]["a"]) <= 2 for r in records)

    def test_lexicographic_order(self):
        _, records = run(RunConfig("q-dyson", n=2, a_max=2))
        seen = [tuple(r["params"]["a"]) for r in records]
        assert seen == sorted(seen)


class TestParallelism:
    def test_results_independent_of_jobs(self):
        code1, seq = run(RunConfig("q-dyson", n=2, a_max=2, jobs=1))
        code4, par = run(RunConfig("q-dyson", n=2, a_max=2, jobs=4))
        assert code1 == code4 == 0
        strip = lambda r: {k: v for k, v in r.items() if k != "millis"}
        assert [strip(r) for r in seq] == [strip(r) for r in par]

    def test_budget_timeout_status(self):
        code, records = run(RunConfig("poincare", n=3, a_max=1, budget_ms=1))
        assert code == 0  # timeouts are not mismatches
        assert all(r["status"] == "timeout" for r in records)

    def test_budget_large_enough_completes(self):
        code, records = run(RunConfig("q-dyson", n=2, a_max=1,
                                      budget_ms=60000))
        assert code == 0
        assert all(r["status"] == "ok" for r in records)


class TestCtCommand:
    def test_dyson_constant_term(self, capsys):
        code = main(["ct", "dyson", "--a", "1,1", "--v", "0,0"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "1 + q"

    def test_out_of_support(self, capsys):
        code = main(["ct", "dyson", "--a", "1,1", "--v", "5,-5"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_tkernel_symbolic(self, capsys):
        code = main(["ct", "tkernel", "--a", "1,1", "--v", "0,0"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "1 + t[1,2]"

    def test_tkernel_qa_matches_dyson(self, capsys):
        main(["ct", "tkernel", "--a", "2,1", "--v", "0,0", "--t-mode", "qa"])
        got = capsys.readouterr().out.strip()
        main(["ct", "dyson", "--a", "2,1", "--v", "0,0"])
        assert capsys.readouterr().out.strip() == got

    def test_bad_vector_length(self, capsys):
        code = main(["ct", "dyson", "--a", "1,1", "--v", "0,0,0"])
        assert code == 2

    def test_tournament_requires_edges(self, capsys):
        code = main(["ct", "tournament", "--a", "1,1", "--v", "0,0"])
        assert code == 2

    def test_tournament_cycle_gives_zero(self, capsys):
        code = main(["ct", "tournament", "--a", "1,1,1", "--v", "0,0,0",
                     "--edges", "1>2 2>3 3>1"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "0"


class TestJobsEnvironment:
    def test_env_default_and_flag_override(self, monkeypatch, capsys):
        calls = []
        import dysonct.cli as cli

        def spy(config):
            calls.append(config.jobs)
            return 0, []

        monkeypatch.setattr(cli, "run", spy)
        monkeypatch.setenv(cli.JOBS_ENV, "3")
        main(["verify", "q-dyson", "--n", "2", "--a-max", "0"])
        main(["verify", "q-dyson", "--n", "2", "--a-max", "0", "--jobs", "2"])
        assert calls == [3, 2]


class TestListCommand:
    def test_lists_identities(self, capsys):
        assert main(["list"]) == 0
        out = capsys.readouterr().out
        for name in ("q-dyson", "poincare", "kadell", "sills", "usum"):
            assert name in out
