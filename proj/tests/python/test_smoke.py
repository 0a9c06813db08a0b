import ztower


def test_snf_divisors():
    assert ztower.snf_divisors([[2, 4], [6, 8]]) == [2, 4]
    assert ztower.snf_divisors([[0, 0], [0, 0]]) == []


def test_kernel_rank():
    assert ztower.kernel_rank([[1, 1], [1, 1]]) == 1


def test_closed_form():
    assert ztower.cyclotomic_chi_closed_form(3, 2, 1, 2) == -3
    assert ztower.cyclotomic_chi_closed_form(2, 2, 1, 0) == 1


def worked_spec():
    return {
        "p": "2",
        "n": "2",
        "multiplicities": ["1", "0", "1"],
        "finite_specs": [],
        "conjugator_seed": "0",
        "conjugator_bound": "1",
    }


def test_worked_example():
    spec = worked_spec()
    assert ztower.rank_sequence(spec) == [1, 0, 1]
    assert ztower.tate_orders(spec, 0)[2] == 1
    assert ztower.tate_orders(spec, 1)[2] == -1
    assert ztower.dual_euler_char(spec, 0) == -1
    assert ztower.oracle_cross_check(spec)

    record = ztower.analyze(spec)
    assert record["tower"]["lambda"] == ["1", "1", "3"]
    assert all(r["pass"] for r in record["identities"])


def test_generate_and_analyze():
    spec = ztower.generate_spec(7, 3, 2, max_rank=10)
    assert spec["p"] == "3"
    assert len(spec["multiplicities"]) == 3
    record = ztower.analyze(spec)
    assert record["error"] == ""
    assert all(r["pass"] for r in record["identities"])


def test_generate_deterministic():
    a = ztower.generate_spec(11, 2, 3)
    b = ztower.generate_spec(11, 2, 3)
    assert a == b
