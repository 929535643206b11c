"""Plain-text key files.

A key file is four ASCII lines::

    rsa-toy v1
    kind: public
    n: 760812959
    e: 11723299

Private keys use ``kind: private`` and a ``d:`` line. Files are written
with LF endings; CRLF is accepted on read.
"""

import re
from dataclasses import dataclass

from toyrsa.rsa import PrivateKey, PublicKey

MAGIC = "rsa-toy v1"
UINT64_MAX = 2**64 - 1

_LABELS = {"public": "e", "private": "d"}
_DECIMAL = re.compile(r"0|[1-9][0-9]*")


class KeyFileError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class KeyDocument:
    kind: str
    exponent: int
    modulus: int

    def __post_init__(self):
        if self.kind not in _LABELS:
            raise ValueError(f"unknown key kind {self.kind!r}")
        if not 1 <= self.exponent <= UINT64_MAX:
            raise ValueError(f"exponent {self.exponent} outside [1, 2**64)")
        if not 6 <= self.modulus <= UINT64_MAX:
            raise ValueError(f"modulus {self.modulus} outside [6, 2**64)")

    @classmethod
    def from_key(cls, key):
        if isinstance(key, PublicKey):
            return cls("public", key.e, key.n)
        if isinstance(key, PrivateKey):
            return cls("private", key.d, key.n)
        raise TypeError(f"not an RSA key: {key!r}")

    def to_key(self):
        if self.kind == "public":
            return PublicKey(e=self.exponent, n=self.modulus)
        return PrivateKey(d=self.exponent, n=self.modulus)


def write_key(doc):
    label = _LABELS[doc.kind]
    text = f"{MAGIC}\nkind: {doc.kind}\nn: {doc.modulus}\n{label}: {doc.exponent}\n"
    return text.encode("ascii")


def _split_lines(data):
    lines = []
    start = 0
    while start < len(data):
        end = data.find(b"\n", start)
        if end < 0:
            if lines:
                raise KeyFileError("missing line terminator", len(lines) + 1)
            break
        line = data[start:end]
        if line.endswith(b"\r"):
            line = line[:-1]
        lines.append(line)
        start = end + 1
    return lines


def _field(line, lineno, label):
    prefix = label.encode("ascii") + b": "
    if not line.startswith(prefix):
        raise KeyFileError(f"expected '{label}: ...'", lineno)
    return line[len(prefix) :]


def _number(raw, lineno):
    text = raw.decode("ascii", errors="replace")
    if not _DECIMAL.fullmatch(text):
        raise KeyFileError(f"not a decimal integer: {text!r}", lineno)
    value = int(text)
    if value > UINT64_MAX:
        raise KeyFileError(f"integer overflows uint64: {text}", lineno)
    return value


def read_key(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    lines = _split_lines(data)
    if not lines or lines[0] != MAGIC.encode("ascii"):
        raise KeyFileError("unrecognized format")
    if len(lines) != 4:
        raise KeyFileError(f"expected 4 lines, found {len(lines)}")

    kind = _field(lines[1], 2, "kind").decode("ascii", errors="replace")
    if kind not in _LABELS:
        raise KeyFileError(f"unknown key kind {kind!r}", 2)
    modulus = _number(_field(lines[2], 3, "n"), 3)

    label = lines[3].split(b":", 1)[0]
    if label in (b"e", b"d") and label.decode() != _LABELS[kind]:
        raise KeyFileError("inconsistent key", 4)
    exponent = _number(_field(lines[3], 4, _LABELS[kind]), 4)

    try:
        return KeyDocument(kind, exponent, modulus)
    except ValueError as exc:
        raise KeyFileError(str(exc)) from None


def save_key(path, key):
    with open(path, "wb") as f:
        f.write(write_key(KeyDocument.from_key(key)))


def load_key(path):
    with open(path, "rb") as f:
        return read_key(f.read()).to_key()
