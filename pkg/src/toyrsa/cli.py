"""Command-line interface: keygen, encrypt, decrypt, check-prime, bench."""

import argparse
import logging
import random
import sys

from toyrsa import bench, keyfile
from toyrsa.modarith import ExpMethod
from toyrsa.primality import DEFAULT_FERMAT_ITERS, DEFAULT_MR_ITERS, is_probable_prime
from toyrsa.rsa import KeyGenParams, decrypt, encrypt, generate_keypair

_METHODS = {
    "naive": (ExpMethod.NAIVE,),
    "fast": (ExpMethod.SQUARE_MULTIPLY,),
    "both": (ExpMethod.NAIVE, ExpMethod.SQUARE_MULTIPLY),
}


def uint64(text):
    if not text.isdigit() or not text.isascii():
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    value = int(text)
    if value > 2**64 - 1:
        raise argparse.ArgumentTypeError(f"does not fit in 64 bits: {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="toyrsa", description="Textbook RSA on 64-bit integers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair and write PREFIX.pub / PREFIX.priv")
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--seed", type=uint64, default=None,
                   help="RNG seed (default: random)")
    p.add_argument("--index-min", type=uint64, default=1000)
    p.add_argument("--index-max", type=uint64, default=9999)
    p.add_argument("--fermat-iters", type=uint64, default=DEFAULT_FERMAT_ITERS)
    p.add_argument("--mr-iters", type=uint64, default=DEFAULT_MR_ITERS)

    p = sub.add_parser("encrypt", help="encrypt an integer message with a public key")
    p.add_argument("--key", required=True)
    p.add_argument("--message", type=uint64, required=True)

    p = sub.add_parser("decrypt", help="decrypt an integer cipher with a private key")
    p.add_argument("--key", required=True)
    p.add_argument("--cipher", type=uint64, required=True)

    p = sub.add_parser("check-prime", help="Fermat + Miller-Rabin primality check")
    p.add_argument("n", type=uint64)
    p.add_argument("--mr-iters", type=uint64, default=DEFAULT_MR_ITERS)
    p.add_argument("--seed", type=uint64, default=0)

    p = sub.add_parser("bench", help="time naive vs square-and-multiply decryption")
    p.add_argument("--seed", type=uint64, default=0)
    p.add_argument("--trials", type=uint64, default=7)
    p.add_argument("--method", choices=sorted(_METHODS), default="both")
    p.add_argument("--message", type=uint64, default=bench.DEFAULT_MESSAGE)
    p.add_argument("--budget", type=float, default=bench.DEFAULT_BUDGET_SECONDS,
                   help="skip naive trials predicted to take longer (seconds)")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    return parser


def _keygen(args):
    seed = args.seed if args.seed is not None else random.getrandbits(64)
    params = KeyGenParams(seed, args.index_min, args.index_max, args.fermat_iters, args.mr_iters)
    kp = generate_keypair(params)
    keyfile.save_key(f"{args.out_prefix}.pub", kp.public)
    keyfile.save_key(f"{args.out_prefix}.priv", kp.private)
    print(f"p: {kp.p}")
    print(f"q: {kp.q}")
    print(f"phi: {kp.phi}")
    print(f"public key: {{{kp.e},{kp.n}}}")
    print(f"private key: {{{kp.d},{kp.n}}}")
    return 0


def _load(path, kind):
    with open(path, "rb") as f:
        doc = keyfile.read_key(f.read())
    if doc.kind != kind:
        raise ValueError(f"{path} holds a {doc.kind} key, expected {kind}")
    return doc.to_key()


def _encrypt(args):
    print(encrypt(_load(args.key, "public"), args.message))
    return 0


def _decrypt(args):
    print(decrypt(_load(args.key, "private"), args.cipher))
    return 0


def _check_prime(args):
    verdict = is_probable_prime(args.n, DEFAULT_FERMAT_ITERS, args.mr_iters, random.Random(args.seed))
    print(verdict)
    return 0 if verdict.is_probable_prime else 1


def _bench(args):
    records = bench.run_bench(
        seed=args.seed,
        trials=args.trials,
        methods=_METHODS[args.method],
        message=args.message,
        budget_seconds=args.budget,
    )
    data = bench.write_csv(records)
    if args.out:
        with open(args.out, "wb") as f:
            f.write(data)
        for r in records:
            shown = "skipped" if r.skipped else f"{r.elapsed_seconds:.6f} s"
            print(f"phi={r.phi} d={r.d} {r.method.value}: {shown}")
    else:
        sys.stdout.write(data.decode("ascii"))
    return 0


_HANDLERS = {
    "keygen": _keygen,
    "encrypt": _encrypt,
    "decrypt": _decrypt,
    "check-prime": _check_prime,
    "bench": _bench,
}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError, OverflowError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
