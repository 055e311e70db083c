"""Command-line driver: computations and theorem-verification sweeps.

Output is deterministic for a fixed configuration and cache state; the
--jobs flag only affects wall-clock time.  Exit codes: 0 success, 1 a
verification sweep found a counterexample, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .affine import from_word
from .kcode import rd, ri, sh
from .orderlab import signed_fiber_table, z_sets
from .partitions import KBoundedPartition
from .shapes import (
    WeakStrip,
    bounded_to_core,
    bounded_to_perm,
    perm_to_bounded,
    reading_word,
    setvalued_strips,
    weak_strips,
)
from .symfunc import (
    CACHE_ENV_VAR,
    SymElt,
    gtilde_pieri,
    gtilde_pieri_ie,
    h_mult,
    pieri_kschur,
)
from .verify import (
    verify_factorization,
    verify_fibers,
    verify_order_props,
    verify_pieri_sum,
)

MAX_K = 8
MAX_SIZE = 12


class ConfigError(ValueError):
    """Invalid run configuration; reported with exit status 2."""


@dataclass
class RunConfig:
    k: int
    max_size: int | None = None
    r: int | None = None
    t: int | None = None
    fmt: str = "text"
    jobs: int = 1
    table_cache: str | None = None

    def __post_init__(self):
        if not 1 <= self.k <= MAX_K:
            raise ConfigError(f"need 1 <= k <= {MAX_K}, got k={self.k}")
        if self.max_size is not None and not 0 <= self.max_size <= MAX_SIZE:
            raise ConfigError(f"need 0 <= max-size <= {MAX_SIZE}, got {self.max_size}")
        if self.r is not None and not 0 <= self.r <= self.k:
            raise ConfigError(f"need 0 <= r <= k, got r={self.r}")
        if self.t is not None and not 1 <= self.t <= self.k:
            raise ConfigError(f"need 1 <= t <= k, got t={self.t}")
        if self.jobs < 1:
            raise ConfigError(f"need jobs >= 1, got {self.jobs}")


def parse_partition(k: int, text: str | None) -> KBoundedPartition:
    """Comma-separated parts; empty partition spelled '0' or omitted."""
    if text is None or text.strip() in ("", "0"):
        return KBoundedPartition(k, ())
    try:
        parts = tuple(int(p) for p in text.split(","))
        return KBoundedPartition(k, parts)
    except ValueError as err:
        raise ConfigError(f"bad partition {text!r}: {err}") from None


def parse_word(k: int, text: str) -> tuple[int, ...]:
    try:
        return tuple(int(a) for a in text.split(",")) if text.strip() else ()
    except ValueError as err:
        raise ConfigError(f"bad word {text!r}: {err}") from None


def _emit(cfg: RunConfig, payload: dict, rows: list[dict]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif cfg.fmt == "csv":
        if rows:
            fields = list(dict.fromkeys(key for row in rows for key in row))
            writer = csv.DictWriter(sys.stdout, fieldnames=fields, restval="")
            writer.writeheader()
            writer.writerows(rows)
    else:
        for row in rows:
            print("  ".join(f"{key}={value}" for key, value in row.items()))


def _fmt_parts(parts) -> str:
    return ",".join(map(str, parts)) if parts else "-"


def _fmt_set(members) -> str:
    return "{" + ",".join(map(str, sorted(members))) + "}"


def cmd_bij(cfg: RunConfig, args) -> int:
    lam = parse_partition(cfg.k, args.lam)
    w = bounded_to_perm(lam)
    core = bounded_to_core(lam)
    word = list(reading_word(lam))
    code_d = rd(w)
    code_i = ri(w)
    rows = [
        {
            "bounded": _fmt_parts(lam.parts),
            "core": _fmt_parts(core.parts),
            "word": "".join(map(str, word)) or "-",
            "window": " ".join(map(str, w.window)),
            "rd": ",".join(map(str, code_d.values)),
            "ri": ",".join(map(str, code_i.values)),
            "sh_rd": _fmt_parts(sh(code_d).parts),
            "sh_ri": _fmt_parts(sh(code_i).parts),
        }
    ]
    payload = {
        "bounded": lam.as_dict(),
        "core": core.as_dict(),
        "perm": w.as_dict(),
        "word": word,
        "rd": code_d.as_dict(),
        "ri": code_i.as_dict(),
        "sh_rd": sh(code_d).as_dict(),
        "sh_ri": sh(code_i).as_dict(),
    }
    _emit(cfg, payload, rows)
    return 0


def cmd_strips(cfg: RunConfig, args) -> int:
    lam = parse_partition(cfg.k, args.lam)
    r = cfg.r if cfg.r is not None else 1
    weak = [WeakStrip.build(lam, A) for A in weak_strips(lam, r)]
    rows = [
        {"kind": "weak", "A": _fmt_set(s.indices.members), "top": _fmt_parts(s.top.parts)}
        for s in weak
    ]
    sv_payload = []
    if r >= 1:
        for A, v in setvalued_strips(bounded_to_perm(lam), r):
            mu = perm_to_bounded(v)
            sign = (-1) ** (r + lam.size - v.length)
            rows.append(
                {
                    "kind": "set-valued",
                    "A": _fmt_set(A.members),
                    "top": _fmt_parts(mu.parts),
                    "sign": f"{sign:+d}",
                }
            )
            sv_payload.append(
                {"A": list(A.sorted()), "top": mu.as_dict(), "sign": sign}
            )
    payload = {
        "base": lam.as_dict(),
        "r": r,
        "weak": [s.as_dict() for s in weak],
        "set_valued": sv_payload,
    }
    _emit(cfg, payload, rows)
    return 0


def cmd_pieri(cfg: RunConfig, args) -> int:
    lam = parse_partition(cfg.k, args.lam)
    r = cfg.r if cfg.r is not None else 1
    if args.basis == "ks":
        elt = pieri_kschur(lam, r)
    else:
        elt = h_mult(SymElt.single(cfg.k, "g", lam.parts), r)
    rows = [
        {"basis": elt.basis, "parts": _fmt_parts(p), "coeff": str(c)}
        for p, c in elt.coeffs
    ]
    _emit(cfg, {"base": lam.as_dict(), "r": r, "result": elt.as_dict()}, rows)
    return 0


def cmd_gtilde(cfg: RunConfig, args) -> int:
    lam = parse_partition(cfg.k, args.lam)
    r = cfg.r if cfg.r is not None else 1
    closed = gtilde_pieri(lam, r)
    ie = gtilde_pieri_ie(lam, r)
    rows = [
        {"form": "interval-union", "parts": _fmt_parts(p), "coeff": str(c)}
        for p, c in closed.coeffs
    ]
    rows += [
        {"form": "inclusion-exclusion", "parts": _fmt_parts(p), "coeff": str(c)}
        for p, c in ie.items()
    ]
    payload = {
        "base": lam.as_dict(),
        "r": r,
        "interval_union": closed.as_dict(),
        "inclusion_exclusion": [
            {"parts": list(p), "coeff": str(c)} for p, c in ie.items()
        ],
    }
    _emit(cfg, payload, rows)
    return 0


def cmd_table1(cfg: RunConfig, args) -> int:
    if args.word is not None:
        u = from_word(cfg.k, parse_word(cfg.k, args.word))
    else:
        u = bounded_to_perm(parse_partition(cfg.k, args.lam))
    if not u.is_grassmannian():
        raise ConfigError(f"element {u.window} is not affine Grassmannian")
    w = None
    if args.below is not None:
        w = bounded_to_perm(parse_partition(cfg.k, args.below))
    table = signed_fiber_table(u, w)
    rows = [
        {
            "v_window": " ".join(map(str, v.window)),
            "v_shape": _fmt_parts(perm_to_bounded(v).parts),
            "A": _fmt_set(A.members),
            "sign": f"{sign:+d}",
        }
        for v, A, sign in table
    ]
    payload = {
        "u": u.as_dict(),
        "below": None if w is None else w.as_dict(),
        "rows": [
            {"v": v.as_dict(), "A": list(A.sorted()), "sign": sign}
            for v, A, sign in table
        ],
    }
    _emit(cfg, payload, rows)
    return 0


def cmd_zsets(cfg: RunConfig, args) -> int:
    if args.word is not None:
        u = from_word(cfg.k, parse_word(cfg.k, args.word))
    else:
        u = bounded_to_perm(parse_partition(cfg.k, args.lam))
    zs = z_sets(u)
    rows = []
    for which in ("plus", "minus", "plus_grassmannian"):
        fam = getattr(zs, which)
        if fam is None:
            continue
        for A in sorted(fam, key=lambda a: (len(a), sorted(a))):
            rows.append({"family": which, "A": _fmt_set(A)})
    _emit(cfg, zs.as_dict(), rows)
    return 0


_VERIFY_SUITES = {
    "pieri-sum": lambda cfg: verify_pieri_sum(
        cfg.k, cfg.max_size if cfg.max_size is not None else 4, jobs=cfg.jobs
    ),
    "factorization": lambda cfg: verify_factorization(
        cfg.k, cfg.max_size if cfg.max_size is not None else 4, jobs=cfg.jobs
    ),
    "order-props": lambda cfg: verify_order_props(
        cfg.k, cfg.max_size if cfg.max_size is not None else 4
    ),
    "fibers": lambda cfg: verify_fibers(
        cfg.k, cfg.max_size if cfg.max_size is not None else 4
    ),
}


def cmd_verify(cfg: RunConfig, args) -> int:
    results = _VERIFY_SUITES[args.suite](cfg)
    rows = [
        {
            "check": r.name,
            "instances": str(r.instances),
            "status": "ok" if r.ok else "FAIL",
        }
        for r in results
    ]
    payload = {
        "suite": args.suite,
        "k": cfg.k,
        "max_size": cfg.max_size,
        "results": [r.as_dict() for r in results],
    }
    _emit(cfg, payload, rows)
    bad = [r for r in results if not r.ok]
    if bad and cfg.fmt != "json":
        for r in bad:
            for witness in r.failures:
                print(
                    f"counterexample [{r.name}]: "
                    + json.dumps(witness, sort_keys=True),
                    file=sys.stderr,
                )
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affineschur",
        description="Exact affine Schubert combinatorics at desk scale.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--jobs", type=int, default=1, help="parallelism hint")
    parser.add_argument(
        "--table-cache",
        default=None,
        help=f"directory for transition tables (env {CACHE_ENV_VAR} overrides)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_lambda=True, need_r=False):
        p.add_argument("--k", type=int, required=True)
        if need_lambda:
            p.add_argument("--lambda", dest="lam", default=None,
                           help="comma-separated parts; empty as '0' or omitted")
        if need_r:
            p.add_argument("--r", type=int, default=None)

    p = sub.add_parser("bij", help="round trips: bounded / core / word / codes")
    common(p)
    p.set_defaults(handler=cmd_bij)

    p = sub.add_parser("strips", help="weak and set-valued strips over a shape")
    common(p, need_r=True)
    p.set_defaults(handler=cmd_strips)

    p = sub.add_parser("pieri", help="one Pieri product in a chosen basis")
    common(p, need_r=True)
    p.add_argument("--basis", choices=("ks", "g"), default="g")
    p.set_defaults(handler=cmd_pieri)

    p = sub.add_parser("gtilde", help="ideal-sum Pieri product, both closed forms")
    common(p, need_r=True)
    p.set_defaults(handler=cmd_gtilde)

    p = sub.add_parser("table1", help="signed fiber table of a Grassmannian element")
    common(p)
    p.add_argument("--word", default=None, help="letters of u, comma separated")
    p.add_argument("--below", default=None, help="filter rows by v <= w_mu")
    p.set_defaults(handler=cmd_table1)

    p = sub.add_parser("zsets", help="weak-strip index-set families of an element")
    common(p)
    p.add_argument("--word", default=None, help="letters of u, comma separated")
    p.set_defaults(handler=cmd_zsets)

    p = sub.add_parser("verify", help="exhaustive verification sweeps")
    p.add_argument("suite", choices=sorted(_VERIFY_SUITES))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-size", type=int, default=None,
                   help="degree cap (symmetric functions) or ball radius (orders)")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            k=args.k,
            max_size=getattr(args, "max_size", None),
            r=getattr(args, "r", None),
            t=getattr(args, "t", None),
            fmt=args.format,
            jobs=args.jobs,
            table_cache=args.table_cache,
        )
        if cfg.table_cache and not os.environ.get(CACHE_ENV_VAR):
            os.environ[CACHE_ENV_VAR] = cfg.table_cache
        return args.handler(cfg, args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
