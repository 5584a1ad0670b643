import pytest

import privword as pw


def test_words():
    assert pw.prefix("tm", 16) == "0110100110010110"
    assert pw.fixed_point_prefix("0->0010,1->1", "0", 8) == "00100010"
    assert pw.prefix("kappa", 16) == "0010110000101100"
    assert "h-mu" in pw.builtin_words()


def test_finite_word_predicates():
    assert pw.is_privileged("00101100")
    assert not pw.is_privileged("00101100110100")
    assert pw.is_palindrome("0110")
    assert pw.borders("0010110100") == ["", "0", "00"]
    assert pw.defect("00101100")["defect"] == 1
    assert pw.exchange("0110") == "1001"
    assert not pw.is_primitive("010010")


def test_index_queries():
    idx = pw.FactorIndex("tm", 64)
    assert idx.certified_length == 64
    assert "0110" in idx and "000" not in idx
    assert idx.privileged_set(8, "starts-0") == ["00101100", "00110100", "01011010", "01100110"]
    assert sorted(idx.complete_first_returns("00")) == sorted(["00101100", "00110100", "001100", "0010110100"])
    assert idx.oracle_complexity(6, "B") == 4
    assert idx.interpretations("01100", "0->01,1->10") == [("010", 0, 1)]
    assert pw.apply_reduction("f1", "00", idx) == "00101100"
    assert pw.invert_reduction("theta", "01100110", idx) == "00"


def test_recurrences():
    assert pw.A(128) == 24
    assert pw.B(22) == 4
    assert pw.P(8) == 4
    assert pw.series("A_00", 2) == 1
    assert pw.table("A", 4) == [(0, 1), (1, 2), (2, 2), (3, 2), (4, 2)]
    assert pw.gap_interval(2) == (49, 65)
    assert pw.a_seq(3) == 190 and pw.b_seq(4) == 342
    assert pw.A_pow2(9) == pw.A(512) == 48
    assert all(pw.A(n) == v for n, v in pw.published_A_table())


def test_verify_and_cli():
    report = pw.verify("tm", "all", 48)
    assert report["pass"] and report["mismatches"] == []
    code, out, _ = pw.run_cli(["word", "tm", "--len", "8"])
    assert code == 0 and out == "01101001\n"
    code, _, err = pw.run_cli(["verify", "A", "--max", "10", "--word", "kappa"])
    assert code == 4 and "no recurrence defined" in err


def test_errors():
    with pytest.raises(pw.PrivwordError) as info:
        pw.A_pow2(3)
    assert info.value.code == "IndexTooSmall"
    with pytest.raises(ValueError):
        pw.prefix("nope", 3)
    with pytest.raises(pw.PrivwordError):
        pw.apply_reduction("f2", "010", pw.FactorIndex("tm", 16))
