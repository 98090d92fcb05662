"""Command-line interface: ``gammalab <command> ...``.

Exit codes:
  0  success
  2  usage error (bad arguments or field descriptor)
  3  a configured cap was exceeded
  4  a verification produced a counterexample
  5  the cache is corrupt and could not be repaired
"""

from __future__ import annotations

import argparse
import dataclasses
import datetime as _dt
import hashlib
import json
import logging
import os
import re
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import __version__
from . import abelian as ab
from .abelian import AbelianField, NotSubfieldError, abelian_disc
from .arith import FactoredReal
from .corpus import CHECKS, run_check
from .errors import CapError
from .gamma import build_cf_tower, gamma_M_F, gamma_of, gamma_prime, liminf_scan
from .heights import HeightBound, enumerate_bounded, min_height_probe, rows_to_csv
from .numfield import NumberField, build_field, compositum
from .polyz import IntPolynomial

log = logging.getLogger("gammalab")

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_COUNTEREXAMPLE, EXIT_CACHE = 0, 2, 3, 4, 5
ENGINE_TAG = f"gammalab-{__version__}"
ENV_PREFIX = "GAMMALAB_"

REFS = {
    "gamma": "gamma_M(F) through the absolute discriminants of F and MF",
    "gamma-prime": "supremum of gamma_M(F) over intermediate fields K <= F <= M",
    "tower build": "cyclic prime-degree stages with |disc|^(1/p^2) <= 3",
    "tower scan": "gamma' over all sub-composita of the tower, compared exactly with 3",
    "heights": "Weil height as log Mahler measure over degree",
    "field info": "maximal order and conductor-discriminant formula",
    "verify": "seeded property suites",
    "cache audit": "recompute cached field data and compare",
}


class UsageError(ValueError):
    pass


class CacheError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# configuration


@dataclass
class RunConfig:
    degree_cap: int = 24
    subgroup_cap: int = 4096
    subset_cap: int = 12
    screen_size: int = 50
    tolerance: str = "1e-10"
    cache_dir: str = ""
    output: str = "text"
    seed: int = 0
    threads: int = 0
    work_cap: int = 2_000_000

    def __post_init__(self):
        for name in ("degree_cap", "subgroup_cap", "subset_cap", "screen_size", "work_cap"):
            if getattr(self, name) <= 0:
                raise UsageError(f"{name} must be positive")
        if self.subset_cap > 12:
            raise UsageError("subset_cap is at most 12")
        if self.output not in ("json", "csv", "text"):
            raise UsageError(f"unknown output format {self.output!r}")
        if self.tol <= 0:
            raise UsageError("tolerance must be positive")

    @property
    def tol(self) -> Fraction:
        return Fraction(self.tolerance)

    @property
    def workers(self) -> int:
        return self.threads or os.cpu_count() or 1

    def digest(self) -> str:
        data = dataclasses.asdict(self)
        data.pop("cache_dir")
        data.pop("threads")
        return hashlib.sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()[:16]


FIELDS = {f.name: f for f in dataclasses.fields(RunConfig)}


def _coerce(name: str, value: Any) -> Any:
    kind = FIELDS[name].type
    if kind == "int":
        return int(value)
    return str(value)


def load_config(flags: dict[str, Any], path: str | None = None, env: dict[str, str] | None = None) -> RunConfig:
    """Defaults, then ``GAMMALAB_*`` environment, then the TOML file, then flags."""
    env = os.environ if env is None else env
    values: dict[str, Any] = {}
    for name in FIELDS:
        key = ENV_PREFIX + name.upper()
        if key in env:
            values[name] = _coerce(name, env[key])
    if path:
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise UsageError(f"cannot read config file {path}: {exc}") from exc
        data = data.get("gammalab", data)
        for name, value in data.items():
            if name not in FIELDS:
                raise UsageError(f"unknown config key {name!r}")
            values[name] = _coerce(name, value)
    for name, value in flags.items():
        if value is not None:
            values[name] = _coerce(name, value)
    try:
        return RunConfig(**values)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# field descriptors


def parse_field(text: str, cfg: RunConfig) -> AbelianField | NumberField:
    """``Q``, ``sqrt<d>``, ``zeta<m>``, ``cyclic<q>_<p>``, ``m=..;H=..`` or ``poly=c0,c1,...``."""
    s = text.strip()
    try:
        if s in ("Q", "QQ", "1"):
            return ab.QQ
        m = re.fullmatch(r"sqrt(m|-)?(\d+)", s)
        if m:
            d = int(m.group(2)) * (-1 if m.group(1) else 1)
            return AbelianField.quadratic(d)
        m = re.fullmatch(r"zeta(\d+)", s)
        if m:
            return AbelianField.cyclotomic(int(m.group(1)))
        m = re.fullmatch(r"cyclic(\d+)_(\d+)", s)
        if m:
            return ab.cyclic_subfield(int(m.group(1)), int(m.group(2)))
        if s.startswith("m="):
            return AbelianField.parse(s)
        if s.startswith("poly="):
            coeffs = [int(c) for c in s[5:].split(",")]
            return build_field(IntPolynomial(coeffs), degree_cap=cfg.degree_cap)
    except CapError:
        raise
    except ValueError as exc:
        raise UsageError(f"bad field descriptor {text!r}: {exc}") from exc
    raise UsageError(f"unknown field descriptor {text!r}")


def _need_abelian(F, what: str) -> AbelianField:
    if not isinstance(F, AbelianField):
        raise UsageError(f"{what} must be an abelian field descriptor")
    return F


def _descriptor(F) -> str:
    return F.descriptor()


# ---------------------------------------------------------------------------
# cache


class FieldCache:
    """One JSON document per field descriptor, written by atomic rename."""

    def __init__(self, directory: str | os.PathLike | None, enabled: bool = True):
        self.enabled = enabled and bool(directory)
        self.dir = Path(directory) if directory else None
        if self.enabled:
            self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.dir / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def load(self, key: str) -> dict | None:
        if not self.enabled:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text())
            if entry.get("key") != key or entry.get("engine") != ENGINE_TAG:
                raise ValueError("stale or foreign entry")
            for name in ("degree", "disc", "basis_denominators"):
                entry[name]
            return entry
        except (ValueError, KeyError, TypeError, AttributeError):
            log.warning("cache entry %s is corrupt; recomputing", path.name)
            self._remove(path)
            return None

    def _remove(self, path: Path) -> None:
        try:
            path.unlink()
        except FileNotFoundError:
            pass
        except OSError as exc:
            raise CacheError(f"cannot remove corrupt cache entry {path}: {exc}") from exc

    def store(self, entry: dict) -> None:
        if not self.enabled:
            return
        path = self._path(entry["key"])
        try:
            fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError as exc:
            raise CacheError(f"cannot write cache entry {path}: {exc}") from exc

    def entries(self) -> list[Path]:
        return sorted(self.dir.glob("*.json")) if self.enabled else []


def compute_entry(key: str, cfg: RunConfig) -> dict:
    F = parse_field(key, cfg)
    if isinstance(F, AbelianField):
        disc = abelian_disc(F)
        sign = 1
        dens: list[int] = []
        if 1 < F.degree <= cfg.degree_cap:
            K = build_field(ab.generator_polynomial(F, degree_cap=cfg.degree_cap), degree_cap=cfg.degree_cap)
            sign = 1 if K.abs_disc > 0 else -1
            dens = K.basis_denominators()
        value = sign * disc.to_int()
    else:
        value, dens = F.abs_disc, F.basis_denominators()
    return {"key": key, "degree": F.degree, "disc": str(value), "basis_denominators": dens, "engine": ENGINE_TAG}


def field_entry(key: str, cfg: RunConfig, cache: FieldCache) -> dict:
    entry = cache.load(key)
    if entry is None:
        entry = compute_entry(key, cfg)
        cache.store(entry)
    return entry


def _number_field_disc(F: NumberField, cfg: RunConfig, cache: FieldCache) -> FactoredReal:
    entry = field_entry(F.descriptor(), cfg, cache)
    return FactoredReal.from_int(abs(int(entry["disc"])))


# ---------------------------------------------------------------------------
# commands


def cmd_field_info(args, cfg, cache):
    F = parse_field(args.descriptor, cfg)
    key = F.descriptor()
    entry = field_entry(key, cfg, cache)
    res = {
        "descriptor": key,
        "degree": entry["degree"],
        "disc": entry["disc"],
        "abs_disc_factored": str(FactoredReal.from_int(abs(int(entry["disc"])))) if int(entry["disc"]) else "0",
        "basis_denominators": entry["basis_denominators"],
    }
    if isinstance(F, AbelianField):
        res["conductor"] = F.conductor
        if 1 <= F.degree <= cfg.degree_cap:
            res["generator"] = ",".join(map(str, ab.generator_polynomial(F, degree_cap=cfg.degree_cap).coeffs))
    else:
        res["min_poly"] = str(F.min_poly)
        res["index"] = F.index
    return res, []


def _gamma_value(M, F, cfg, cache) -> FactoredReal:
    if isinstance(M, AbelianField) and isinstance(F, AbelianField):
        return gamma_of(M, F)
    if isinstance(M, AbelianField):
        M = build_field(ab.generator_polynomial(M, degree_cap=cfg.degree_cap), degree_cap=cfg.degree_cap)
    if isinstance(F, AbelianField):
        F = build_field(ab.generator_polynomial(F, degree_cap=cfg.degree_cap), degree_cap=cfg.degree_cap)
    MF = compositum(M, F, degree_cap=cfg.degree_cap)
    return gamma_M_F(
        _number_field_disc(M, cfg, cache), _number_field_disc(F, cfg, cache), _number_field_disc(MF, cfg, cache), MF.degree, F.degree
    )


def cmd_gamma(args, cfg, cache):
    M, F = parse_field(args.M, cfg), parse_field(args.F, cfg)
    g = _gamma_value(M, F, cfg, cache)
    return {"M": _descriptor(M), "F": _descriptor(F), "gamma": str(g), "exponents": g.to_json(), "decimal": g.decimal(9)}, []


def cmd_gamma_prime(args, cfg, cache):
    M = _need_abelian(parse_field(args.M, cfg), "--M")
    K = _need_abelian(parse_field(args.K, cfg), "--K")
    return gamma_prime(M, K, cap=cfg.subgroup_cap).to_json(), []


def cmd_tower_build(args, cfg, cache):
    tower = build_cf_tower(args.stages)
    rows = []
    for st in tower.stages:
        row = st.to_json()
        row["abs_disc"] = st.abs_disc.to_int()
        row["q_mod_p"] = st.q % st.p
        rows.append(row)
    failures = [r for r in rows if not r["le_3"] or r["q_mod_p"] != 1]
    return {"stages": rows, "all_le_3": not failures}, failures


def cmd_tower_scan(args, cfg, cache):
    if args.stages > cfg.subset_cap:
        raise CapError(f"{args.stages} stages exceed the subset cap {cfg.subset_cap}")
    tower = build_cf_tower(args.stages)
    K = _need_abelian(parse_field(args.base, cfg), "--base")
    rep = liminf_scan(tower, K, subset_cap=cfg.subset_cap, cap=cfg.subgroup_cap, workers=cfg.workers)
    out = rep.to_json()
    failures = list(rep.failures)
    if not rep.verdict:
        failures.append({"max": str(rep.max_value), "reason": "gamma' exceeds 3"})
    return out, failures


def cmd_verify(args, cfg, cache):
    seed = cfg.seed if args.seed is None else args.seed
    res = run_check(args.target, args.trials, seed)
    out = res.to_json()
    out["seed"] = seed
    return out, [] if res.ok else [res.counterexample]


def cmd_heights_enumerate(args, cfg, cache):
    B = HeightBound.parse(args.bound)
    census = enumerate_bounded(args.degree, B, work_cap=cfg.work_cap, tol=cfg.tol)
    rows = [a.to_row() for a in census.numbers]
    return {
        "degree": args.degree,
        "bound": str(B),
        "box": list(census.box),
        "polynomials": census.polynomials,
        "roots": census.roots,
        "boundary_ambiguous": [",".join(map(str, f.coeffs)) for f in census.ambiguous],
        "rows": rows,
    }, []


def cmd_heights_probe(args, cfg, cache):
    L = _need_abelian(parse_field(args.field, cfg), "--field")
    rep = min_height_probe(L, HeightBound.parse(args.bound), screen_size=cfg.screen_size, work_cap=cfg.work_cap)
    out = rep.to_json()
    out["rows"] = out.pop("candidates")
    return out, []


def cmd_cache_audit(args, cfg, cache):
    if not cache.enabled:
        raise UsageError("cache audit needs a cache directory")
    checked, mismatches = 0, []
    for path in cache.entries():
        try:
            entry = json.loads(path.read_text())
            key = entry["key"]
        except (ValueError, KeyError, TypeError):
            log.warning("cache entry %s is unreadable; removing", path.name)
            cache._remove(path)
            mismatches.append({"file": path.name, "reason": "unreadable"})
            continue
        fresh = compute_entry(key, cfg)
        checked += 1
        if entry != fresh:
            mismatches.append({"key": key, "cached": entry, "recomputed": fresh})
            cache.store(fresh)
    return {"checked": checked, "mismatches": len(mismatches), "repaired": mismatches}, []


# ---------------------------------------------------------------------------
# rendering


def _render_text(command: str, results: dict, failures: list) -> str:
    lines = []
    if command == "gamma":
        lines.append(f"{results['gamma']} ≈ {results['decimal']}")
    elif command == "tower build":
        lines.append(f"{'p':>3} {'q':>5} {'|disc|':>24}  value")
        for r in results["stages"]:
            verdict = "yes" if r["le_3"] else "no"
            lines.append(f"{r['p']:>3} {r['q']:>5} {r['abs_disc']:>24}  {r['value']} ≈ {r['decimal']}  ≤ 3: {verdict}")
    elif command == "tower scan":
        lines.append(f"sub-composita scanned: {results['subcomposita']}")
        lines.append(f"max gamma': {results['max']} ≈ {results['max_decimal']} (M = {results['max_field']})")
        lines.append(f"coprime compositum bound: {results['compositum_bound']} ≈ {results['compositum_bound_decimal']}")
        lines.append(f"closed-form pairs checked: {results['closed_form_pairs']}")
        lines.append(f"max ≤ 3: {'yes' if results['max_le_3'] else 'no'}")
    elif command == "gamma-prime":
        for e in results["entries"]:
            lines.append(f"F = {e['F']:<30} gamma = {e['gamma']} ≈ {e['decimal']}")
        lines.append(f"sup = {results['sup']} ≈ {results['sup_decimal']}  witness {results['sup_witness']}")
    elif command in ("heights enumerate", "heights probe"):
        for r in results["rows"]:
            lines.append(f"{r['min_poly']:<24} [{r['height_lo']}, {r['height_hi']}]  {r['field_id']}")
        if command == "heights enumerate":
            lines.append(f"{results['polynomials']} polynomials, {results['roots']} algebraic numbers")
        else:
            mh = results["min_height"]
            lines.append("min height: " + (mh if isinstance(mh, str) else f"[{mh['lo']}, {mh['hi']}]"))
    elif command == "verify":
        lines.append(f"{results['check']}: {results['passed']}/{results['trials']} passed (seed {results['seed']})")
    else:
        for k, v in results.items():
            lines.append(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True)}")
    for f in failures:
        lines.append("FAILURE: " + json.dumps(f, sort_keys=True, default=str))
    return "\n".join(lines) + "\n"


def render(command: str, cfg: RunConfig, results: dict, failures: list, deterministic: bool) -> str:
    if cfg.output == "csv":
        if "rows" not in results:
            raise UsageError(f"csv output is not available for {command}")
        return rows_to_csv(results["rows"])
    if cfg.output == "json":
        doc = {
            "schema": 1,
            "command": command,
            "config_digest": cfg.digest(),
            "refs": {command: REFS.get(command, REFS.get(command.split()[0], ""))},
            "results": results,
            "failures": failures,
        }
        if not deterministic:
            doc["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
        return json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    text = _render_text(command, results, failures)
    if not deterministic:
        text = f"# {command} generated {_dt.datetime.now(_dt.timezone.utc).isoformat()}\n" + text
    return text


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("configuration")
    g.add_argument("--config", help="TOML file with configuration keys")
    g.add_argument("--degree-cap", type=int, dest="degree_cap")
    g.add_argument("--subgroup-cap", type=int, dest="subgroup_cap")
    g.add_argument("--subset-cap", type=int, dest="subset_cap")
    g.add_argument("--screen-size", type=int, dest="screen_size")
    g.add_argument("--tolerance")
    g.add_argument("--cache-dir", dest="cache_dir")
    g.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    g.add_argument("--format", choices=("json", "csv", "text"), dest="output")
    g.add_argument("--threads", type=int)
    g.add_argument("--work-cap", type=int, dest="work_cap")
    g.add_argument("--deterministic", action="store_true", help="omit the timestamp header")
    g.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="gammalab",
        description="Exact discriminant-growth invariants, cyclic towers and Weil heights.",
        epilog="exit codes: 0 ok, 2 usage, 3 cap exceeded, 4 verification counterexample, 5 cache corruption",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--version", action="version", version=ENGINE_TAG)
    sub = p.add_subparsers(dest="command", required=True)

    fld = sub.add_parser("field", help="field data").add_subparsers(dest="action", required=True)
    q = fld.add_parser("info", parents=[common], help="degree, discriminant, generator")
    q.add_argument("descriptor")
    q.set_defaults(func=cmd_field_info, name="field info")

    q = sub.add_parser("gamma", parents=[common], help="gamma_M(F)")
    q.add_argument("--M", required=True)
    q.add_argument("--F", required=True)
    q.set_defaults(func=cmd_gamma, name="gamma")

    q = sub.add_parser("gamma-prime", parents=[common], help="gamma'(M/K) with all intermediate fields")
    q.add_argument("--M", required=True)
    q.add_argument("--K", default="Q")
    q.set_defaults(func=cmd_gamma_prime, name="gamma-prime")

    tw = sub.add_parser("tower", help="the cyclic tower").add_subparsers(dest="action", required=True)
    q = tw.add_parser("build", parents=[common])
    q.add_argument("--stages", type=int, required=True)
    q.set_defaults(func=cmd_tower_build, name="tower build")
    q = tw.add_parser("scan", parents=[common])
    q.add_argument("--stages", type=int, required=True)
    q.add_argument("--base", default="Q")
    q.set_defaults(func=cmd_tower_scan, name="tower scan")

    q = sub.add_parser("verify", parents=[common], help="seeded property suites")
    q.add_argument("target", choices=CHECKS)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int)
    q.set_defaults(func=cmd_verify, name="verify")

    hg = sub.add_parser("heights", help="Weil heights").add_subparsers(dest="action", required=True)
    q = hg.add_parser("enumerate", parents=[common])
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--bound", required=True, help="rational number or log(c)")
    q.set_defaults(func=cmd_heights_enumerate, name="heights enumerate")
    q = hg.add_parser("probe", parents=[common])
    q.add_argument("--field", required=True)
    q.add_argument("--bound", required=True)
    q.set_defaults(func=cmd_heights_probe, name="heights probe")

    ch = sub.add_parser("cache", help="cache maintenance").add_subparsers(dest="action", required=True)
    q = ch.add_parser("audit", parents=[common], help="recompute every entry and compare")
    q.set_defaults(func=cmd_cache_audit, name="cache audit")
    return p


def _default_cache_dir() -> str:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "gammalab")


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    flags = {name: getattr(args, name, None) for name in FIELDS}
    if getattr(args, "seed", None) is not None:
        flags["seed"] = args.seed
    try:
        cfg = load_config(flags, args.config)
        if args.command == "verify" and args.trials < 1:
            raise UsageError("--trials must be positive")
        cache = FieldCache(cfg.cache_dir or _default_cache_dir(), enabled=not args.no_cache)
        results, failures = args.func(args, cfg, cache)
        stdout.write(render(args.name, cfg, results, failures, args.deterministic))
    except UsageError as exc:
        print(f"gammalab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotSubfieldError as exc:
        print(f"gammalab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapError as exc:
        print(f"gammalab: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CacheError as exc:
        print(f"gammalab: cache: {exc}", file=sys.stderr)
        return EXIT_CACHE
    return EXIT_COUNTEREXAMPLE if failures else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
