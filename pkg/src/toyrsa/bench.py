"""Timing harness: naive decryption loop vs square-and-multiply.

Each trial generates a key pair, encrypts a fixed message and times the
decryption with every requested method. Keys are restricted to moduli the
naive loop can handle, and naive trials whose predicted runtime exceeds a
budget are recorded as skipped instead of run.
"""

import csv
import io
import logging
import random
import time
from dataclasses import dataclass
from typing import Optional

from toyrsa.modarith import NAIVE_MODULUS_LIMIT, ExpMethod, modexp_naive
from toyrsa.rsa import KeyGenParams, decrypt, encrypt, generate_keypair

log = logging.getLogger(__name__)

DEFAULT_MESSAGE = 25_000
DEFAULT_BUDGET_SECONDS = 120.0
CSV_HEADER = ("phi", "d", "method", "elapsed_seconds", "message")

_CALIBRATION_MULTS = 2_000_000


@dataclass(frozen=True)
class BenchRecord:
    phi: int
    d: int
    method: ExpMethod
    # None when the trial was skipped for exceeding the time budget
    elapsed_seconds: Optional[float]
    message: int

    @property
    def skipped(self):
        return self.elapsed_seconds is None


def naive_safe_keypair(rng, params=None):
    """Draw key pairs from child seeds of ``rng`` until n fits the naive path."""
    params = params or KeyGenParams()
    while True:
        seed = rng.getrandbits(64)
        kp = generate_keypair(KeyGenParams(seed, params.index_min, params.index_max,
                                           params.fermat_iters, params.mr_iters))
        if kp.n < NAIVE_MODULUS_LIMIT:
            return kp


def time_decrypt(key, cipher, method):
    """Return (plaintext, elapsed seconds) for one decryption."""
    start = time.perf_counter_ns()
    plain = decrypt(key, cipher, method)
    elapsed_ns = time.perf_counter_ns() - start
    return plain, elapsed_ns / 1e9


def warm_up():
    """Compile the naive loop and return its cost in seconds per multiplication."""
    modexp_naive(3, 10, 1009)
    start = time.perf_counter_ns()
    modexp_naive(5321, _CALIBRATION_MULTS, NAIVE_MODULUS_LIMIT - 2)
    return (time.perf_counter_ns() - start) / 1e9 / _CALIBRATION_MULTS


def run_bench(
    seed=0,
    trials=7,
    methods=(ExpMethod.NAIVE, ExpMethod.SQUARE_MULTIPLY),
    message=DEFAULT_MESSAGE,
    budget_seconds=DEFAULT_BUDGET_SECONDS,
    params=None,
):
    methods = list(dict.fromkeys(methods))
    if not methods:
        raise ValueError("no exponentiation methods requested")
    if trials < 1:
        raise ValueError("trials must be >= 1")

    seconds_per_mult = warm_up()
    rng = random.Random(seed)
    records = []
    for trial in range(trials):
        kp = naive_safe_keypair(rng, params)
        cipher = encrypt(kp.public, message)
        for method in methods:
            if method is ExpMethod.NAIVE and kp.d * seconds_per_mult > budget_seconds:
                log.warning(
                    "trial %d: skipping naive decrypt, d=%d predicts %.1f s > budget %.1f s",
                    trial, kp.d, kp.d * seconds_per_mult, budget_seconds,
                )
                records.append(BenchRecord(kp.phi, kp.d, method, None, message))
                continue
            plain, elapsed = time_decrypt(kp.private, cipher, method)
            if plain != message:
                raise RuntimeError(f"{method.value} decrypt returned {plain}, expected {message}")
            records.append(BenchRecord(kp.phi, kp.d, method, elapsed, message))
    return records


def write_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        elapsed = "" if r.elapsed_seconds is None else f"{r.elapsed_seconds:.9f}"
        writer.writerow((r.phi, r.d, r.method.value, elapsed, r.message))
    return buf.getvalue().encode("ascii")


def read_csv(data):
    reader = csv.reader(io.StringIO(data.decode("ascii")))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    records = []
    for phi, d, method, elapsed, message in reader:
        records.append(BenchRecord(
            phi=int(phi),
            d=int(d),
            method=ExpMethod(method),
            elapsed_seconds=float(elapsed) if elapsed else None,
            message=int(message),
        ))
    return records
