"""Command-line interface.

All subcommands print a single JSON document to standard output; errors
go to standard error.  Exit codes: 0 success, 2 malformed input, 3 limit
exceeded, 4 counterexample found by a campaign.  ``-`` as a file
argument reads standard input, and poset arguments also accept library
names (``M3``, ``2^3``, ``chain4``, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import breadth as breadth_mod
from . import filters as filters_mod
from . import morphisms as morph
from . import topology as topo
from .campaigns import CAMPAIGN_NAMES, DEFAULT_SIZE_LIMITS, CampaignSpec, run_campaign
from .catalog import named_poset, poset_names
from .errors import LimitExceededError, MalformedInputError
from .limits import default_limits
from .order_core import (
    Poset,
    boolean_power,
    certify_lattice,
    poset_from_dict,
    poset_to_dict,
    product,
    variant_distributive_identity_holds,
)

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_LIMIT = 3
EXIT_COUNTEREXAMPLE = 4


def _emit(doc: object) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _read_json(path: str) -> object:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON in {path}: {exc}") from exc


def _load_poset(path: str) -> Poset:
    return poset_from_dict(_read_json(path))


def _resolve_poset(ref: object) -> Poset:
    """Inline object, library name, or file path."""
    if isinstance(ref, dict):
        return poset_from_dict(ref)
    if isinstance(ref, str):
        if ref in poset_names():
            return named_poset(ref)
        return _load_poset(ref)
    raise MalformedInputError(f"cannot interpret poset reference {ref!r}")


def _label(p: Poset, x: Optional[int]) -> Optional[str]:
    return None if x is None else p.labels[x]


def _cmd_check(args) -> int:
    p = _resolve_poset(args.poset)
    cert = certify_lattice(p)
    doc = {
        "carrier": p.n,
        "is_lattice": cert.is_lattice,
        "is_complete": cert.is_complete,
        "is_distributive": cert.is_distributive,
        "variant_distributive_identity": (
            variant_distributive_identity_holds(p) if cert.is_lattice else None
        ),
        "bottom": _label(p, cert.bottom),
        "top": _label(p, cert.top),
    }
    _emit(doc)
    return EXIT_OK


def _cmd_breadth(args) -> int:
    p = _resolve_poset(args.poset)
    report = breadth_mod.compute_breadth(p)
    _emit({"breadth": report.breadth, "witness": list(report.witness.member_labels)})
    return EXIT_OK


_TOPOLOGY_KINDS = {
    "interval": topo.interval_topology,
    "lower": topo.lower_topology,
    "upper": topo.upper_topology,
}


def _cmd_topology(args) -> int:
    p = _resolve_poset(args.poset)
    t = _TOPOLOGY_KINDS[args.kind](p)
    _emit(topo.topology_to_dict(t))
    return EXIT_OK


def _cmd_hausdorff(args) -> int:
    p = _resolve_poset(args.poset)
    t = _TOPOLOGY_KINDS[args.kind](p)
    _emit(
        {
            "kind": args.kind,
            "hausdorff": topo.is_hausdorff(t),
            "t1": topo.is_t1(t),
            "discrete": topo.is_discrete(t),
        }
    )
    return EXIT_OK


def _cmd_product(args) -> int:
    factors = [_resolve_poset(path) for path in args.posets]
    _emit(poset_to_dict(product(factors)))
    return EXIT_OK


def _cmd_boolean(args) -> int:
    _emit(poset_to_dict(boolean_power(args.n)))
    return EXIT_OK


def _scan_doc(scan: morph.PreimageScan, cod: Poset) -> dict:
    doc = {
        "all_interval_or_empty": scan.all_interval_or_empty,
        "intervals_checked": scan.intervals_checked,
    }
    if scan.failure is not None:
        x, y = scan.failure_interval
        doc["failure"] = {
            "interval": [cod.labels[x], cod.labels[y]],
            "preimage": list(scan.failure.preimage.member_labels),
        }
    return doc


def _cmd_hom(args) -> int:
    hom = morph.hom_from_dict(_read_json(args.hom), _resolve_poset)
    continuity = {}
    for kind, make in _TOPOLOGY_KINDS.items():
        continuity[kind] = morph.is_continuous(hom, make(hom.domain), make(hom.codomain))
    doc = {
        "classification": hom.classification.render(),
        "interval_preimages": _scan_doc(morph.preimage_scan(hom), hom.codomain),
        "principal_preimages": _scan_doc(
            morph.preimage_scan(hom, principal_only=True), hom.codomain
        ),
        "continuous": continuity,
    }
    _emit(doc)
    return EXIT_OK


def _cmd_converge(args) -> int:
    p = _resolve_poset(args.poset)
    labels = [s for s in args.generator.split(",") if s]
    if not labels:
        raise MalformedInputError("empty generator")
    f = filters_mod.filter_from_labels(p, labels)
    if not certify_lattice(p).is_complete:
        sys.stderr.write(
            "warning: poset is not a complete lattice; convergence is false wherever a bound is missing\n"
        )
    doc: dict = {"mode": args.mode, "generator": list(f.generator_set.member_labels)}
    if args.mode == "order":
        doc["limits"] = [p.labels[x] for x in filters_mod.convergence_points(f)]
    else:
        doc["limits"] = [p.labels[x] for x in range(p.n) if filters_mod.star_converges(f, x)]
        doc["limits_literal_tail"] = [
            p.labels[x] for x in range(p.n) if filters_mod.star_converges(f, x, literal_tail=True)
        ]
    _emit(doc)
    return EXIT_OK


def _cmd_campaign(args) -> int:
    spec = CampaignSpec(
        name=args.name,
        size_limit=args.limit if args.limit is not None else DEFAULT_SIZE_LIMITS[args.name],
        trials=args.trials,
        seed=args.seed,
    )
    result = run_campaign(spec)
    _emit(result.to_dict())
    if result.status != "pass":
        sys.stderr.write(f"campaign {spec.name}: counterexample found\n")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordlab",
        description="Finite order-theory laboratory: certificates, topologies, convergence, breadth, campaigns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="lattice certificate for a poset")
    p_check.add_argument("poset")
    p_check.set_defaults(func=_cmd_check)

    p_breadth = sub.add_parser("breadth", help="breadth and an irredundant witness")
    p_breadth.add_argument("poset")
    p_breadth.set_defaults(func=_cmd_breadth)

    p_topology = sub.add_parser("topology", help="dump a generated topology")
    p_topology.add_argument("poset")
    p_topology.add_argument("--kind", choices=sorted(_TOPOLOGY_KINDS), default="interval")
    p_topology.set_defaults(func=_cmd_topology)

    p_hausdorff = sub.add_parser("hausdorff", help="separation properties of a generated topology")
    p_hausdorff.add_argument("poset")
    p_hausdorff.add_argument("--kind", choices=sorted(_TOPOLOGY_KINDS), default="interval")
    p_hausdorff.set_defaults(func=_cmd_hausdorff)

    p_product = sub.add_parser("product", help="pointwise-ordered product of posets")
    p_product.add_argument("posets", nargs="+")
    p_product.set_defaults(func=_cmd_product)

    p_boolean = sub.add_parser("boolean", help="the lattice of n-bit vectors")
    p_boolean.add_argument("n", type=int)
    p_boolean.set_defaults(func=_cmd_boolean)

    p_hom = sub.add_parser("hom", help="classify a map and analyze preimages/continuity")
    p_hom.add_argument("hom")
    p_hom.set_defaults(func=_cmd_hom)

    p_converge = sub.add_parser("converge", help="order/star convergence points of a filter")
    p_converge.add_argument("poset")
    p_converge.add_argument("--generator", required=True, help="comma-separated labels")
    p_converge.add_argument("--mode", choices=("order", "star"), default="order")
    p_converge.set_defaults(func=_cmd_converge)

    p_campaign = sub.add_parser("campaign", help="run a verification campaign")
    p_campaign.add_argument("name", choices=CAMPAIGN_NAMES)
    p_campaign.add_argument("--limit", type=int, default=None)
    p_campaign.add_argument("--trials", type=int, default=0)
    p_campaign.add_argument("--seed", type=int, default=0)
    p_campaign.set_defaults(func=_cmd_campaign)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        default_limits()  # validate the environment override early
        return args.func(args)
    except MalformedInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except LimitExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
