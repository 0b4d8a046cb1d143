"""Command-line front end: ``taqlab <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 internal
invariant failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import __version__
from .bar import verify_rule
from .cache import ResultCache, cache_key, default_cache_dir
from .core import InvariantError, check_prime, hilbert_series
from .serialize import FORMATS, Result, serialize
from .steenrod import HZHomologyTable, SteenrodVariant, hz_base_table
from .taq import Target, lie_dims, taq_dims
from .tor import TowerFamily, TowerSpec, build_tower, tower_stages
from .words import Context, enumerate_stable_words, word_to_sequence

COMMANDS = ("thh", "em", "taq", "steenrod", "words", "lie", "verify")
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class QueryConfig:
    command: str
    p: int
    max_degree: int = 40
    format: str = "json"
    params: dict[str, Any] = field(default_factory=dict)
    cache_dir: str | None = None
    no_cache: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.max_degree < 0:
            raise UsageError(f"--max-degree must be >= 0, got {self.max_degree}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        try:
            check_prime(self.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would sys.exit(2)
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--max-degree", type=int, default=40)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--no-cache", action="store_true")

    parser = _Parser(prog="taqlab", description="Higher THH towers, TAQ bases and Steenrod tables over F_p.")
    parser.add_argument("--version", action="version", version=f"taqlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    thh = sub.add_parser("thh", parents=[common], help="generators of THH^[n] of HF_p, HZ or HZ/p^m")
    thh.add_argument("--target", choices=[t.value for t in Target], default="fp")
    thh.add_argument("--order", type=int, default=2)

    em = sub.add_parser("em", parents=[common], help="generators of H_*(K(Z/p, n); F_p)")
    em.add_argument("--order", type=int, default=1)

    taq = sub.add_parser("taq", parents=[common], help="TAQ_*(R, S; HF_p) with basis")
    taq.add_argument("--target", choices=[t.value for t in Target], default="fp")

    st = sub.add_parser("steenrod", parents=[common], help="dual Steenrod algebra and HZ-based tables")
    st.add_argument("--variant", choices=[v.value for v in SteenrodVariant], default="dual")
    st.add_argument("--n", type=int, default=1)

    words = sub.add_parser("words", parents=[common], help="stable admissible words of a given length")
    words.add_argument("--n", type=int, required=True, help="word length")
    words.add_argument("--family", choices=[c.value for c in Context], default="thh")

    lie = sub.add_parser("lie", parents=[common], help="free spectral partition Lie algebra on a sphere")
    lie.add_argument("--ell", type=int, default=-3)

    ver = sub.add_parser("verify", parents=[common], help="bar-complex oracle against the Tor rules")
    ver.add_argument("--stages", type=int, default=4)
    ver.add_argument(
        "--family",
        choices=[f.value for f in (TowerFamily.THH_FP, TowerFamily.EM_SPACE, TowerFamily.HH_ZPM)],
        default="thh_fp",
    )
    return parser


_OPTION_KEYS = {
    "thh": ("target", "order"),
    "em": ("order",),
    "taq": ("target",),
    "steenrod": ("variant", "n"),
    "words": ("n", "family"),
    "lie": ("ell",),
    "verify": ("stages", "family"),
}


def parse_config(argv: Sequence[str]) -> QueryConfig:
    ns = build_parser().parse_args(list(argv))
    params = {k: getattr(ns, k) for k in _OPTION_KEYS[ns.command]}
    return QueryConfig(ns.command, ns.p, ns.max_degree, ns.format, params, ns.cache_dir, ns.no_cache)


def _generator_rows(alg) -> list[dict]:
    rows = [{"degree": g.degree, "word": g.name, "kind": g.kind.value} for g in alg.generators]
    return sorted(rows, key=lambda r: (r["degree"], r["word"]))


def _tower_result(cfg: QueryConfig, spec: TowerSpec) -> Result:
    alg = build_tower(spec, cfg.max_degree)
    return Result(
        cfg.command, cfg.p, cfg.params, cfg.max_degree,
        hilbert_series(alg, cfg.max_degree).dims, _generator_rows(alg),
        ("dims are the Hilbert series of the free algebra; basis lists its generators",),
    )


def _thh(cfg: QueryConfig) -> Result:
    fam = {"fp": TowerFamily.THH_FP, "z": TowerFamily.THH_HZ, "zpm": TowerFamily.THH_ZPM}[cfg.params["target"]]
    return _tower_result(cfg, TowerSpec(fam, cfg.p, cfg.params["order"]))


def _em(cfg: QueryConfig) -> Result:
    return _tower_result(cfg, TowerSpec(TowerFamily.EM_SPACE, cfg.p, cfg.params["order"]))


def _taq(cfg: QueryConfig) -> Result:
    t = taq_dims(cfg.params["target"], cfg.p, cfg.max_degree)
    return Result(cfg.command, cfg.p, cfg.params, cfg.max_degree, t.table.dims, [b.row() for b in t.basis], t.notes)


def _steenrod(cfg: QueryConfig) -> Result:
    variant = SteenrodVariant(cfg.params["variant"])
    table = hz_base_table(variant, cfg.p, cfg.max_degree, cfg.params["n"])
    notes: list[str] = []
    if isinstance(table, HZHomologyTable):
        notes.append("dims are torsion ranks; the free Z in degree 0 is listed in basis")
        return Result(cfg.command, cfg.p, cfg.params, cfg.max_degree, table.torsion.dims, table.rows(), notes)
    if variant is SteenrodVariant.TAQ_ZPN_OVER_Z:
        notes.append("the class from the unit is placed in degree 1 instead of 2")
    if variant is SteenrodVariant.AQ_ZPN_OVER_Z:
        notes.append("rank of the cyclic module Z/p^n")
    return Result(cfg.command, cfg.p, cfg.params, cfg.max_degree, table.dims, (), notes)


def _words(cfg: QueryConfig) -> Result:
    rows, dims = [], {}
    for w, deg, kind in enumerate_stable_words(cfg.p, cfg.params["n"], cfg.max_degree, cfg.params["family"]):
        seq = word_to_sequence(w, cfg.p)
        rows.append({"degree": deg, "sequence": list(seq.entries), "word": w.render(), "kind": kind.value})
        dims[deg] = dims.get(deg, 0) + 1
    return Result(cfg.command, cfg.p, cfg.params, cfg.max_degree, dims, rows)


def _lie(cfg: QueryConfig) -> Result:
    table = lie_dims(cfg.p, cfg.params["ell"], cfg.max_degree)
    return Result(cfg.command, cfg.p, cfg.params, cfg.max_degree, table.dims)


def _verify(cfg: QueryConfig) -> Result:
    stages = cfg.params["stages"]
    if stages < 1:
        raise UsageError("--stages must be >= 1")
    reports = []
    for n, alg in tower_stages(TowerFamily(cfg.params["family"]), cfg.p, stages, cfg.max_degree):
        rep = verify_rule(alg, cfg.max_degree)
        reports.append({"stage": n, "algebra": rep.name, "mismatches": [list(m) for m in rep.mismatches]})
    bad = [r for r in reports if r["mismatches"]]
    return Result(
        cfg.command, cfg.p, cfg.params, cfg.max_degree, {}, (),
        ("each stage's bar-complex Tor is compared with the Hilbert series of the next stage",),
        {"reports": reports, "ok": not bad},
    )


DISPATCH: dict[str, Callable[[QueryConfig], Result]] = {
    "thh": _thh, "em": _em, "taq": _taq, "steenrod": _steenrod,
    "words": _words, "lie": _lie, "verify": _verify,
}


def compute(cfg: QueryConfig) -> Result:
    return DISPATCH[cfg.command](cfg)


def render(cfg: QueryConfig) -> tuple[bytes, bool]:
    """Serialized output for ``cfg`` and whether it passed (only verify can fail)."""
    cache = None
    key = cache_key(__version__, cfg.command, {"p": cfg.p, "max_degree": cfg.max_degree, "format": cfg.format, **cfg.params})
    if not cfg.no_cache:
        cache = ResultCache(cfg.cache_dir or default_cache_dir(), __version__)
        hit = cache.get(key)
        if hit is not None:
            return hit.payload, True  # only passing results are ever stored
    result = compute(cfg)
    payload = serialize(result, cfg.format)
    ok = result.extra.get("ok", True)
    # failed verifications are not cached so a rerun always recomputes them
    if cache is not None and ok:
        try:
            cache.put(key, payload)
        except OSError:
            pass
    return payload, ok


def _write(stream, data: bytes) -> None:
    buf = getattr(stream, "buffer", None)
    if buf is not None:
        stream.flush()
        buf.write(data)
        buf.flush()
    else:
        stream.write(data.decode("utf-8"))


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        payload, ok = render(cfg)
    except UsageError as exc:
        stderr.write(f"taqlab: error: {exc}\n")
        return EXIT_USAGE
    except InvariantError as exc:
        stderr.write(f"taqlab: invariant failure: {exc}\n")
        return EXIT_INVARIANT
    except ValueError as exc:
        stderr.write(f"taqlab: error: {exc}\n")
        return EXIT_USAGE
    _write(stdout, payload)
    if not ok:
        stderr.write("taqlab: verification found mismatches\n")
        return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run())
