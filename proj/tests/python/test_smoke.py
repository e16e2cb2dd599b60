import os

import pytest

import vlbal

DATA = os.environ.get("VLBAL_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_scheme_a_round_trip():
    codeword, prefix, index = vlbal.encode_a("11100000", 2)
    assert (codeword, prefix) == ("10011111", "00001")
    assert vlbal.decode_a(codeword, prefix, 8, 2) == "11100000"


def test_scheme_b_round_trip():
    codeword, prefix, _ = vlbal.encode_b("0000000", 0)
    assert (codeword, prefix) == ("11100001", "11")
    assert vlbal.decode_b(codeword, prefix, 8, 0) == "0000000"


def test_cyclic_codec_and_stream():
    code = vlbal.CyclicCode.load(os.path.join(DATA, "simplex.code"))
    assert (code.length, code.dimension) == (7, 3)
    assert vlbal.encode_c(code, "0111001")[:2] == ("10101100", "10")
    assert vlbal.decode_c(code, "10101100", "10") == "0111001"
    blob = vlbal.stream_encode(code, "0001011")
    assert vlbal.stream_decode(code, blob) == "0001011"
    assert vlbal.trellis_gamma(code) == {1: 2, 2: 1, 4: 1}
    assert vlbal.rho_c(code) == pytest.approx(2.25)


def test_counts_are_python_ints():
    assert vlbal.gamma_b(8, 0)[1:] == [28, 28, 12, 2]
    assert vlbal.count_bad_a(8, 2) == 32
    big = vlbal.count_banded(0, 0, 300, 300, -5, 5)
    assert isinstance(big, int) and big > 2**64
    assert vlbal.rho_b(8) == pytest.approx(2.0083, abs=1e-4)


def test_errors():
    with pytest.raises(ValueError):
        vlbal.encode_a("0101010", 0)
    with pytest.raises(vlbal.DecodeError):
        vlbal.decode_a("10011111", "1", 8, 2)
    with pytest.raises(vlbal.DomainError):
        vlbal.CyclicCode.from_generator(7, "1,1,1")
