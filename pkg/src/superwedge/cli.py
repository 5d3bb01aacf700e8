"""Command-line front end.  Every subcommand is a thin adapter over the library.

Input objects (``--input``) are JSON given inline, as a file path, ``-`` for
stdin, or the word ``kappa`` for the vacuum pattern at ``--level``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import cato, fock, indexset
from .cato import IntegralWeight, VermaVector
from .fock import FockVector
from .indexset import Pattern, Shape
from .superdual import DualityContext, verify_superduality
from .verify import FAMILIES, build_tasks, run_tasks

DEFAULT_SHAPE = Shape((1,), (0,), 0)


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class SessionConfig:
    shape: Shape
    default_level: int
    q_mode: str = "quantum"

    def __post_init__(self):
        if self.default_level < self.shape.r0:
            raise UsageError(f"level {self.default_level} is below max n_i = {self.shape.r0}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_json(text: str):
    if text == "-":
        return json.load(sys.stdin)
    if os.path.isfile(text):
        with open(text) as fh:
            return json.load(fh)
    return json.loads(text)


def _config(args) -> SessionConfig:
    shape = DEFAULT_SHAPE if args.shape is None else Shape.from_json(_load_json(args.shape))
    level = shape.r0 if args.level is None else args.level
    return SessionConfig(shape, level, args.q)


def _pattern(data, cfg: SessionConfig) -> Pattern:
    if not isinstance(data, dict) or "rows" not in data:
        raise UsageError("expected a pattern object with 'rows'")
    shape = Shape.from_json(data["shape"]) if "shape" in data else cfg.shape
    return indexset.make_pattern(shape, int(data.get("level", cfg.default_level)), data["rows"])


def _input(args, cfg: SessionConfig):
    if args.input is None:
        raise UsageError("--input is required")
    if args.input == "kappa":
        return indexset.kappa(cfg.shape, cfg.default_level)
    return _load_json(args.input)


def _fock_vector(args, cfg) -> FockVector:
    data = _input(args, cfg)
    if isinstance(data, Pattern):
        return FockVector.basis(data)
    if isinstance(data, dict):
        return FockVector.basis(_pattern(data, cfg))
    return FockVector.from_json([{"pattern": _pattern(t["pattern"], cfg).to_json(), "coeff": t["coeff"]}
                                 for t in data])


def _verma_vector(args, cfg) -> VermaVector:
    data = _input(args, cfg)
    if isinstance(data, Pattern):
        return VermaVector({data: 1})
    if isinstance(data, dict) and "delta" in data:
        return VermaVector.of(IntegralWeight.from_json(data, cfg.shape))
    if isinstance(data, dict):
        return VermaVector({_pattern(data, cfg): 1})
    return VermaVector.from_json([{"pattern": _pattern(t["pattern"], cfg).to_json(), "coeff": t["coeff"]}
                                  for t in data])


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# -- subcommands ----------------------------------------------------------------------------


def cmd_enumerate(args, cfg):
    block = None
    if args.input is not None:
        block = indexset.block_key(_pattern(_load_json(args.input), cfg))
    return [p.to_json() for p in indexset.enumerate_patterns(cfg.shape, cfg.default_level, block)], 0


def cmd_kappa(args, cfg):
    return indexset.kappa(cfg.shape, cfg.default_level).to_json(), 0


def cmd_act(args, cfg):
    gen = _need(args.gen, "--gen")
    j = _need(args.j, "--j")
    v = _fock_vector(args, cfg)
    level = args.level
    if gen == "k":
        out = fock.k_act(j, v, level=level)
    elif args.p is not None:
        out = fock.divided_power(gen, j, args.p, v, level)
    else:
        out = (fock.f_act if gen == "f" else fock.e_act)(j, v, level=level)
    if cfg.q_mode == "classical":
        return VermaVector(fock.specialize_q1(out)).to_json(), 0
    return out.to_json(), 0


def cmd_verma_act(args, cfg):
    gen = _need(args.gen, "--gen")
    if gen == "k":
        raise UsageError("verma-act supports --gen e or f")
    j = _need(args.j, "--j")
    v = _verma_vector(args, cfg)
    op = cato.F_class if gen == "f" else cato.E_class
    return op(j, v, level=args.level).to_json(), 0


def cmd_dict(args, cfg):
    data = _input(args, cfg)
    if isinstance(data, dict) and "delta" in data:
        return cato.to_pattern(IntegralWeight.from_json(data, cfg.shape)).to_json(), 0
    p = data if isinstance(data, Pattern) else _pattern(data, cfg)
    return cato.from_pattern(p, args.level).to_json(), 0


def cmd_truncate(args, cfg):
    return cato.truncate_class(_verma_vector(args, cfg), cfg.default_level).to_json(), 0


def _single_pattern(args, cfg) -> Pattern:
    data = _input(args, cfg)
    return data if isinstance(data, Pattern) else _pattern(data, cfg)


def cmd_defect(args, cfg):
    p = _single_pattern(args, cfg)
    return {"defect": indexset.defect(p, args.level)}, 0


def cmd_block(args, cfg):
    p = _single_pattern(args, cfg)
    out = {"block": indexset.block_key(p).to_json()}
    if args.level is not None:
        out["weight"] = indexset.weight_at_level(p, args.level).to_json()
    return out, 0


def cmd_path(args, cfg):
    path = fock.vacuum_reduction_path(cfg.shape, cfg.default_level)
    return {"level": cfg.default_level, "path": [list(t) for t in path]}, 0


def cmd_verify(args, cfg):
    families = [f for f in FAMILIES if getattr(args, f)]
    if args.all or not families:
        families = list(FAMILIES)
    window = None
    if args.j_min is not None or args.j_max is not None:
        window = (_need(args.j_min, "--j-min"), _need(args.j_max, "--j-max"))
    result = run_tasks(build_tasks(cfg.shape, cfg.default_level, families, window), args.workers)
    return result, 0 if result["pass"] else 1


def cmd_superdual(args, cfg):
    if args.action != "verify":
        raise UsageError("superdual supports only 'verify'")
    depth = args.depth if args.depth is not None else cfg.default_level
    lo = args.j_min if args.j_min is not None else -depth
    hi = args.j_max if args.j_max is not None else depth
    rep = verify_superduality(DualityContext.of(cfg.shape), depth, range(lo, hi + 1))
    return rep.to_json(), 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--shape", help="shape as a JSON object or a file holding one")
    common.add_argument("--level", type=int)
    common.add_argument("--q", choices=("quantum", "classical"), default="quantum")
    common.add_argument("--j", type=int)
    common.add_argument("--gen", choices=("e", "f", "k"))
    common.add_argument("--p", type=int, help="divided power")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--input")

    parser = _Parser(prog="superwedge")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    table = {
        "enumerate": cmd_enumerate, "act": cmd_act, "verma-act": cmd_verma_act, "dict": cmd_dict,
        "truncate": cmd_truncate, "defect": cmd_defect, "block": cmd_block, "kappa": cmd_kappa,
        "path": cmd_path, "verify": cmd_verify, "superdual": cmd_superdual,
    }
    for name, fn in table.items():
        sp = sub.add_parser(name, parents=[common])
        sp.set_defaults(handler=fn)
        if name == "verify":
            sp.add_argument("--all", action="store_true")
            for fam in FAMILIES:
                sp.add_argument(f"--{fam}", action="store_true")
        if name in ("verify", "superdual"):
            sp.add_argument("--j-min", type=int)
            sp.add_argument("--j-max", type=int)
        if name == "superdual":
            sp.add_argument("action")
            sp.add_argument("--depth", type=int)
    return parser


def run(argv: Optional[List[str]] = None):
    """Return (exit status, JSON text)."""
    try:
        args = build_parser().parse_args(argv)
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        cfg = _config(args)
        payload, status = args.handler(args, cfg)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        return 2, dumps({"error": str(exc) or type(exc).__name__})
    return status, dumps(payload)


def main(argv: Optional[List[str]] = None) -> int:
    status, text = run(argv)
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
