"""Command-line driver.

    lieembed verify-closure --p 0 --q 3 --sign plus --out report.json

Exit status: 0 when every check passes, 1 when any check fails or errors,
2 on configuration errors.
"""

import argparse
import sys
from fractions import Fraction

from .algebra import TermLimitError
from .presets import ConfigurationError
from .suites import SuiteConfig, run_suite

COMMANDS = {
    "verify-closure": "closure",
    "verify-theorem41": "theorem41",
    "verify-quartic": "quartic",
    "verify-lemma31": "lemma31-numeric",
    "verify-qdeform": "qdeform-roundtrip",
    "verify-fundamental": "fundamental",
    "spectra": "spectra",
}

# config-file keys mapped to (SuiteConfig attribute, converter)
_SIGN = {"plus": 1, "+": 1, "1": 1, "+1": 1, "minus": -1, "-": -1, "-1": -1}


def _bool(text):
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigurationError(f"not a boolean: {text!r}")


def _sign(text):
    try:
        return _SIGN[text.strip().lower()]
    except KeyError:
        raise ConfigurationError(f"sign must be plus or minus, got {text!r}") from None


def _list(text):
    return [x.strip() for x in text.split(",") if x.strip()]


FILE_KEYS = {
    "p": ("p", int), "q": ("q", int), "sign": ("sign", _sign), "window": ("window", int),
    "jet-order": ("jet_order", int), "q-value": ("q_values", _list), "seed": ("seed", int),
    "max-terms": ("max_terms", int), "convention": ("convention", str),
    "primes": ("primes", str), "y-value": ("y_value", str), "tests": ("tests", int),
    "mode": ("mode", str), "candidate": ("candidate", str), "policy": ("policy", str),
    "point": ("points", _list), "numeric": ("numeric", _bool), "kernel": ("kernel", str),
    "cache-dir": ("cache_dir", str), "timings": ("timings", _bool), "out": ("out", str),
}


def read_config_file(path):
    """Flat 'key = value' lines; '#' starts a comment. Keys mirror the long flags."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigurationError(f"{path}:{lineno}: expected key = value")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.replace("_", "-")
            if key not in FILE_KEYS:
                raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
            attr, conv = FILE_KEYS[key]
            try:
                values[attr] = conv(value)
            except ValueError as exc:
                raise ConfigurationError(f"{path}:{lineno}: {exc}") from exc
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lieembed",
        description="Exact verification suites for deformations of Poincare algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", help="flat key = value file; flags override it")
        sp.add_argument("--p", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--sign", choices=["plus", "minus"])
        sp.add_argument("--window", type=int, help="mode window M for the q-deformation")
        sp.add_argument("--jet-order", type=int, dest="jet_order")
        sp.add_argument("--q-value", action="append", dest="q_values",
                        help="numeric q (repeatable); formal t is always included")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--max-terms", type=int, dest="max_terms")
        sp.add_argument("--convention", help="auto or eps=+1,q4=root,branch=+1")
        sp.add_argument("--primes", choices=["standard", "sign-corrected"])
        sp.add_argument("--y-value", dest="y_value", help="positive rational Y")
        sp.add_argument("--tests", type=int, help="number of seeded test jets")
        sp.add_argument("--mode", choices=["exact", "float"])
        sp.add_argument("--candidate", help="Casimir candidate for the Y^2 relation")
        sp.add_argument("--policy", choices=["exclude", "error", "limit"],
                        help="handling of weight-zero modes")
        sp.add_argument("--point", action="append", dest="points",
                        help="spectral point such as 2i or discrete:1 (repeatable)")
        sp.add_argument("--numeric", action="store_true", default=None,
                        help="also run the shell cross-check")
        sp.add_argument("--kernel", choices=["auto", "python", "compiled"])
        sp.add_argument("--cache-dir", dest="cache_dir")
        sp.add_argument("--timings", action="store_true", default=None)
    return parser


def config_from_args(args):
    values = {}
    if args.config:
        values.update(read_config_file(args.config))
    for key in ("p", "q", "window", "jet_order", "q_values", "seed", "out", "max_terms",
                "convention", "primes", "y_value", "tests", "mode", "candidate", "policy",
                "points", "numeric", "kernel", "cache_dir", "timings"):
        v = getattr(args, key)
        if v is not None:
            values[key] = v
    if args.sign is not None:
        values["sign"] = _sign(args.sign)
    if "q_values" in values:
        try:
            values["q_values"] = [str(Fraction(x)) for x in values["q_values"]]
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigurationError(f"bad --q-value: {exc}") from exc
    return SuiteConfig(suite=COMMANDS[args.command], **values)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        report = run_suite(cfg)
    except (ConfigurationError, ValueError, OSError) as exc:
        print(f"lieembed: configuration error: {exc}", file=sys.stderr)
        return 2
    except TermLimitError as exc:
        print(f"lieembed: {exc}", file=sys.stderr)
        return 1
    text = report.to_text(timings=cfg.timings)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for line in report.summary_lines():
        if not line.startswith("PASS"):
            print(line, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
