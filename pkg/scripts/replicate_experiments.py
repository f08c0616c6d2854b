#!/usr/bin/env python3
"""Replicate the confusion/diffusion experiments on the three demo messages.

Seals each message under the session parameters, prints compression and
plain/cipher statistics per seed variant, and writes contrast CSVs suitable
for plotting (index, plain byte, cipher value).

Usage: python3 scripts/replicate_experiments.py [--out-dir DIR] [--seeds N]
"""

import argparse
import pathlib
import sys

from gchw import envelope
from gchw.analysis import analyze_message, contrast_csv, seed_variant, unpaired_t, cipher_series
from gchw.keyschedule import CipherKey
from gchw.recurrence import RecurrenceKind

# The original experiment's session key "5, 2" is read as matrix power n = 5
# with 2 wavelet levels; the opposite pairing (n = 2, level = 5) would blow
# the block order up to 32 for a 54-byte message, which contradicts the
# reported setup.
SESSION_KEY = CipherKey(
    kind=RecurrenceKind.FIBONACCI,
    n=5,
    p=1,
    level=2,
    seed=bytes.fromhex("9d" * 32),
    mac_key=bytes.fromhex("4e" * 32),
)

MESSAGES = {
    "M": b"Cryptographist is the science of overt secret writing",
    "M1": b"mmmmmmomm",
    "M2": b"meet me after party",
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="experiment-out")
    parser.add_argument("--seeds", type=int, default=3)
    args = parser.parse_args(argv)

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for name, message in MESSAGES.items():
        env = envelope.seal(message, SESSION_KEY)
        ratio = env.compressed_bit_count / (8 * len(message))
        print(f"== {name}: {message.decode()!r}")
        print(
            f"   {len(message)} bytes -> {env.compressed_bit_count} compressed bits "
            f"({ratio:.2f} of raw), Z = {env.z}, {len(env.blocks)} blocks"
        )
        reports = analyze_message(message, SESSION_KEY, seeds=args.seeds)
        print("   seed  correlation  paired_p    unpaired_p(vs seed 0)")
        for index, r in enumerate(reports):
            print(
                f"   {index:4d}  {r.correlation:+.6f}  {r.paired_p:<10.4g}"
                f"  {r.unpaired_p:.4g}"
            )
        # pairwise unpaired t between all seed variants, Table-style
        if args.seeds > 1:
            series = [
                cipher_series(envelope.seal(message, seed_variant(SESSION_KEY, i)))
                for i in range(args.seeds)
            ]
            cells = []
            for i in range(args.seeds):
                for j in range(i + 1, args.seeds):
                    _, p = unpaired_t(series[i], series[j])
                    cells.append(f"({i},{j})={p:.3g}")
            print("   pairwise unpaired p:", " ".join(cells))
        csv_path = out_dir / f"contrast_{name}.csv"
        csv_path.write_text(contrast_csv(message, env, char="e"))
        print(f"   contrast CSV -> {csv_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
