"""Command-line surface: image, spectrum, scan, closure, probe, pack, catalog, report.

Exit codes: 0 for any completed run (an Unknown verdict is a successful,
honest answer), 1 for computation failures, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields

from . import __version__
from .catalog import CATALOG, get_entry
from .closure import classify, form_signature
from .coset import DEFAULT_COSET_CAP
from .finite_image import (
    DEFAULT_ELEMENT_CAP,
    contains_mod,
    enumerate_image,
    is_prime,
    is_surjective,
    sl_order,
)
from .intmat import IntMatrix
from .packing import PackingError, orbit_circles
from .probes import ProbeConfig, thinness_verdict
from .reports import emit_report, scan_csv, to_jsonable
from .spectral import (
    EigensolverError,
    SCAN_DENSE_CUTOFF,
    lambda1,
    laplacian_spectrum_dense,
    lambda1_iterative,
    spectral_scan,
)
from .cayley import build_cayley
from .words import GeneratorSet


@dataclass
class RunConfig:
    element_cap: int = DEFAULT_ELEMENT_CAP
    coset_cap: int = DEFAULT_COSET_CAP
    tol: float = 1e-8
    psl: str = "off"
    depth: int = 6
    labels: bool = False
    timestamp: bool = True

    def validate(self) -> None:
        if self.element_cap < 1 or self.coset_cap < 1 or self.depth < 0:
            raise ValueError("caps and depth must be positive")
        if not (0.0 < self.tol < 1.0):
            raise ValueError(f"tolerance must be in (0, 1), got {self.tol}")
        if self.psl not in ("off", "on", "auto"):
            raise ValueError("psl must be off|on|auto")


def _parse_config_file(path: str) -> dict:
    """Flat key = value lines; '#' starts a comment."""
    known = {f.name for f in fields(RunConfig)}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def _coerce(key: str, value: str):
    target = RunConfig.__dataclass_fields__[key].type
    if target == "int":
        return int(value)
    if target == "float":
        return float(value)
    if target == "bool":
        return value.lower() in ("1", "true", "yes", "on")
    return value


def make_config(args) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        for key, value in _parse_config_file(args.config).items():
            setattr(cfg, key, _coerce(key, value))
    for key in ("element_cap", "coset_cap", "tol", "psl", "depth"):
        cli_val = getattr(args, key, None)
        if cli_val is not None:
            setattr(cfg, key, cli_val)
    if getattr(args, "labels", False):
        cfg.labels = True
    if getattr(args, "no_timestamp", False):
        cfg.timestamp = False
    cfg.validate()
    return cfg


def load_gens(spec: str) -> GeneratorSet:
    """A catalog id (ex1..ex11, gl2-demo) or a path to a JSON generator file."""
    if spec in CATALOG:
        return get_entry(spec).gens
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return GeneratorSet.from_json(json.load(fh))
    raise ValueError(
        f"{spec!r} is neither a catalog id ({', '.join(CATALOG)}) nor a readable file"
    )


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_primes(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return [p for p in range(int(lo), int(hi) + 1) if is_prime(p)]
    primes = [int(x) for x in spec.split(",") if x.strip()]
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        raise ValueError(f"not prime: {bad}")
    return primes


def cmd_catalog(args) -> int:
    if args.json:
        payload = {"entries": [entry.to_json() for entry in CATALOG.values()]}
        _write(emit_report(payload, "catalog"), args.out)
        return 0
    lines = []
    for entry in CATALOG.values():
        status = {True: "thin", False: "not thin", None: "unknown"}[entry.thin]
        lines.append(
            f"{entry.id:<9} n={entry.n}  gens={len(entry.gens)}  [{status:>8}]  "
            f"{entry.description}"
        )
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_image(args) -> int:
    cfg = make_config(args)
    gens = load_gens(args.gens)
    image = enumerate_image(gens, args.mod, cfg.element_cap)
    payload = {
        "gens": gens.name,
        "mod": args.mod,
        "order": image.order,
        "complete": image.complete,
        "surjective": None,
        "reason": None,
    }
    if is_prime(args.mod) and all(d == 1 for d in gens.dets()):
        verdict = is_surjective(gens, args.mod, cfg.element_cap)
        payload["surjective"] = verdict.surjective
        payload["reason"] = verdict.reason
        payload["target_order"] = verdict.target_order
    _write(emit_report(payload, "image"), args.out)
    return 0


def _spectrum_one(gens: GeneratorSet, prime: int, psl: bool, cfg: RunConfig) -> dict:
    image = enumerate_image(gens, prime, cfg.element_cap)
    if not image.complete:
        return {"psl": psl, "error": "element cap exceeded"}
    graph = build_cayley(image, psl=psl)
    if graph.num_vertices <= SCAN_DENSE_CUTOFF:
        report = laplacian_spectrum_dense(graph)
    else:
        report = lambda1_iterative(graph, tol=cfg.tol)
    report.prime = prime
    return report.to_json()


def cmd_spectrum(args) -> int:
    cfg = make_config(args)
    gens = load_gens(args.gens)
    if cfg.psl == "auto":
        payload = {
            "gens": gens.name,
            "prime": args.prime,
            "psl_off": _spectrum_one(gens, args.prime, False, cfg),
            "psl_on": _spectrum_one(gens, args.prime, True, cfg),
        }
    else:
        payload = {
            "gens": gens.name,
            "prime": args.prime,
            "report": _spectrum_one(gens, args.prime, cfg.psl == "on", cfg),
        }
    _write(emit_report(payload, "spectrum"), args.out)
    return 0


def cmd_scan(args) -> int:
    cfg = make_config(args)
    gens = load_gens(args.gens)
    primes = _parse_primes(args.primes)
    rows = spectral_scan(
        gens, primes, psl=cfg.psl == "on", tol=cfg.tol, cap=cfg.element_cap
    )
    _write(scan_csv(rows), args.out)
    if args.svg:
        from .svgout import scan_scatter_svg

        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(scan_scatter_svg(rows, timestamp=cfg.timestamp))
    return 0


def cmd_closure(args) -> int:
    cfg = make_config(args)
    gens = load_gens(args.gens)
    cert = classify(gens, cap=cfg.element_cap)
    payload = {"gens": gens.name, "certificate": cert.to_json()}
    _write(emit_report(payload, "closure"), args.report or args.out)
    return 0


def cmd_probe(args) -> int:
    cfg = make_config(args)
    gens = load_gens(args.gens)
    verdict = thinness_verdict(
        gens,
        ProbeConfig(coset_cap=cfg.coset_cap, element_cap=cfg.element_cap),
    )
    _write(emit_report({"verdict": verdict.to_json()}, "probe"), args.out)
    return 0


def cmd_pack(args) -> int:
    from .closure import invariant_forms
    from .svgout import render_svg

    cfg = make_config(args)
    gens = load_gens(args.gens)
    forms = invariant_forms(gens, "symmetric")
    q = _signature31_form(forms)
    orbit = orbit_circles(gens, q, cfg.depth, seeds=args.seeds)
    svg = render_svg(orbit, labels=cfg.labels, timestamp=cfg.timestamp)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    circles_path = args.circles or "circles.json"
    payload = {
        "gens": gens.name,
        "form": [list(row) for row in q],
        "signature": list(form_signature(q)),
        "depth": cfg.depth,
        "seed_mode": orbit.seed_mode,
        "orbit_size": orbit.size,
        "global_scale": orbit.scale,
        "all_curvatures_integral": orbit.all_curvatures_integral(),
        "svg": args.svg,
        "circles_json": circles_path,
        "circles": [
            {
                "vec": list(oc.vec),
                "depth": oc.depth,
                "word": oc.word.spell(gens.gen_names),
                "inversive": oc.circle.to_json(),
            }
            for oc in orbit.circles
        ],
        "mirrors": [oc.circle.to_json() for oc in orbit.mirrors],
    }
    doc = emit_report(payload, "pack")
    with open(circles_path, "w", encoding="utf-8") as fh:
        fh.write(doc)
    summary = {k: payload[k] for k in (
        "gens", "signature", "depth", "seed_mode", "orbit_size",
        "global_scale", "all_curvatures_integral", "svg", "circles_json",
    )}
    _write(emit_report(summary, "pack-summary"), args.out)
    return 0


def _signature31_form(forms):
    """Pick the (3,1) representative from a symmetric form space (up to sign)."""
    for q in forms.basis:
        sig = form_signature(q)
        if sig == (3, 1, 0):
            return q
        if sig == (1, 3, 0):
            return tuple(tuple(-x for x in row) for row in q)
    raise PackingError(
        f"no signature-(3,1) invariant form found (space dimension {forms.dimension})"
    )


def cmd_report(args) -> int:
    cfg = make_config(args)
    gens = load_gens(args.gens)
    from .catalog import match_catalog

    entry = match_catalog(gens)
    cert = classify(gens, cap=cfg.element_cap)
    verdict = thinness_verdict(
        gens, ProbeConfig(coset_cap=cfg.coset_cap, element_cap=cfg.element_cap)
    )
    images = []
    for m in (2, 3, 4, 5):
        image = enumerate_image(gens, m, cfg.element_cap)
        row = {"mod": m, "order": image.order, "complete": image.complete}
        if is_prime(m) and all(d == 1 for d in gens.dets()):
            iv = is_surjective(gens, m, cfg.element_cap)
            row["surjective"] = iv.surjective
            row["reason"] = iv.reason
        images.append(row)
    payload = {
        "gens": gens.name,
        "catalog": entry.to_json() if entry else None,
        "images": images,
        "closure": cert.to_json(),
        "verdict": verdict.to_json(),
    }
    if gens.n == 2 and all(d == 1 for d in gens.dets()):
        try:
            payload["spectrum_p3"] = _spectrum_one(gens, 3, cfg.psl == "on", cfg)
        except (ValueError, EigensolverError) as exc:
            payload["spectrum_p3"] = {"error": str(exc)}
    _write(emit_report(payload, "report"), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thinlab",
        description=(
            "laboratory for finitely generated integer matrix groups: congruence "
            "images, spectral gaps, closure heuristics, thinness probes, packings"
        ),
    )
    parser.add_argument("--version", action="version", version=f"thinlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, gens=True):
        if gens:
            p.add_argument("--gens", required=True,
                           help="catalog id (ex1..ex11, gl2-demo) or JSON file")
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--cap", dest="element_cap", type=int,
                       help=f"element budget (default {DEFAULT_ELEMENT_CAP})")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("catalog", help="list the built-in generator sets")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("image", help="enumerate the image mod m")
    common(p)
    p.add_argument("--mod", type=int, required=True)
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("spectrum", help="Laplacian spectrum / gap at one prime")
    common(p)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--psl", choices=["off", "on", "auto"], default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("scan", help="lambda_1 across a range of primes (CSV)")
    common(p)
    p.add_argument("--primes", required=True, help="range like 3..50 or list 3,5,7")
    p.add_argument("--psl", choices=["off", "on"], default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--svg", help="also write a lambda_1 scatter plot")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("closure", help="Zariski-closure certificate")
    common(p)
    p.add_argument("--report", help="output path (same as --out)")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("probe", help="thinness verdict with evidence")
    common(p)
    p.add_argument("--coset-cap", dest="coset_cap", type=int, default=None)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("pack", help="circle-packing orbit and SVG")
    common(p)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--svg", help="write the packing SVG here")
    p.add_argument("--labels", action="store_true", help="curvature labels")
    p.add_argument("--circles", help="path for circles.json (exact coordinates)")
    p.add_argument("--seeds", choices=["cluster", "mirrors"], default="cluster")
    p.add_argument("--no-timestamp", action="store_true", dest="no_timestamp")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("report", help="full pipeline, one consolidated JSON")
    common(p)
    p.add_argument("--coset-cap", dest="coset_cap", type=int, default=None)
    p.add_argument("--psl", choices=["off", "on"], default=None)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, PackingError, EigensolverError, OSError) as exc:
        print(f"thinlab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
