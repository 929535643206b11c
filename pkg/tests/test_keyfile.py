import random

import pytest
from hypothesis import given, strategies as st

from toyrsa.keyfile import KeyDocument, KeyFileError, load_key, read_key, save_key, write_key
from toyrsa.rsa import PrivateKey, PublicKey

EX1_PUBLIC = b"rsa-toy v1\nkind: public\nn: 760812959\ne: 11723299\n"

documents = st.builds(
    KeyDocument,
    kind=st.sampled_from(["public", "private"]),
    exponent=st.integers(1, 2**64 - 1),
    modulus=st.integers(6, 2**64 - 1),
)


def test_write_public():
    assert write_key(KeyDocument("public", 11723299, 760812959)) == EX1_PUBLIC


def test_write_minimal_private():
    assert write_key(KeyDocument("private", 1, 6)) == b"rsa-toy v1\nkind: private\nn: 6\nd: 1\n"


def test_read_public():
    assert read_key(EX1_PUBLIC) == KeyDocument("public", 11723299, 760812959)
    assert read_key(EX1_PUBLIC.replace(b"\n", b"\r\n")) == KeyDocument("public", 11723299, 760812959)


@given(documents)
def test_round_trip(doc):
    data = write_key(doc)
    assert read_key(data) == doc
    assert write_key(read_key(data)) == data
    assert data.count(b"\n") == 4 and b" \n" not in data


@pytest.mark.parametrize(
    "data, message",
    [
        (b"", "unrecognized format"),
        (b"rsa-toy v2\nkind: public\nn: 6\ne: 1\n", "unrecognized format"),
        (b"-----BEGIN RSA PUBLIC KEY-----\n", "unrecognized format"),
        (b"rsa-toy v1\nkind: public\nn: 760812959\nd: 11723299\n", "inconsistent key"),
        (b"rsa-toy v1\nkind: private\nn: 760812959\ne: 11723299\n", "inconsistent key"),
        (b"rsa-toy v1\nkind: public\nn: 0760812959\ne: 3\n", "line 3"),
        (b"rsa-toy v1\nkind: public\nn: 76x\ne: 3\n", "line 3"),
        (b"rsa-toy v1\nkind: public\nn: 99\ne: 18446744073709551616\n", "line 4"),
        (b"rsa-toy v1\nkind: public\nn: 99\ne: +3\n", "line 4"),
        (b"rsa-toy v1\nkind: public\nn: 99\ne: 3 \n", "line 4"),
        (b"rsa-toy v1\nkind: secret\nn: 99\ne: 3\n", "line 2"),
        (b"rsa-toy v1\nkind: public\nn: 99\ne: 3", "line 4: missing line terminator"),
        (b"rsa-toy v1\nkind: public\nn: 99\ne: 3\n\n", "expected 4 lines"),
        (b"rsa-toy v1\nkind: public\nn: 5\ne: 3\n", "modulus"),
        (b"rsa-toy v1\nkind: public\nn: 99\ne: 0\n", "exponent"),
    ],
)
def test_rejects(data, message):
    with pytest.raises(KeyFileError, match=message):
        read_key(data)


@given(st.binary(max_size=80))
def test_arbitrary_bytes_never_crash(data):
    try:
        read_key(data)
    except KeyFileError:
        pass


def test_save_and_load(tmp_path):
    for key in (PublicKey(e=11723299, n=760812959), PrivateKey(d=288096259, n=760812959)):
        path = tmp_path / "k"
        save_key(path, key)
        assert load_key(path) == key
    assert (tmp_path / "k").read_bytes().endswith(b"d: 288096259\n")
