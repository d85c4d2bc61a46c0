"""Command-line front end.

Exit codes: 0 success, 1 refutation or invariant failure (or an I/O error),
2 usage error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import battery, classify as C
from .corpus import DEFAULT_MAX_ORDER, fingerprint
from .errors import ResourceCapError, RingError, SpecParseError
from .ideals import (enumerate_ideals, generate_ideal, is_idempotent, is_maximal, is_primary,
                     is_prime, is_radical_ideal, prime_witness, primary_decomposition, radical)
from .pid import FamilySpec, parse_domain, parse_family, pid_a2_check, pid_star_check
from .rings import localize_at_prime, parse_ring_spec, validate_axioms
from .star import DEFAULT_STAR_CAP, star_check_finite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class Command:
    verb: str
    ring: str | None = None
    ideal: list[int] | None = None
    domain: str | None = None
    family: str | None = None
    element: str | None = None
    rings: list[str] = field(default_factory=list)
    format: str = "text"
    max_order: int = DEFAULT_MAX_ORDER
    star_cap: int = DEFAULT_STAR_CAP
    out: str | None = None
    jobs: int = 1


def _generators(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"ideal generators must be integers: {text!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the report to PATH")

    parser = argparse.ArgumentParser(prog="ringstar",
                                     description="Radical/star-property checks on finite rings.")
    sub = parser.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def ring_verb(name, help_text, ideal=False, ideal_required=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("ring", help='ring spec, e.g. "Z/4 x F2[x]/(x^2)"')
        if ideal:
            p.add_argument("--ideal", type=_generators, required=ideal_required,
                           metavar="GENS", help="comma-separated generator indices")
        return p

    ring_verb("info", "order, fingerprint and axiom check")
    ring_verb("ideals", "list the ideal lattice")
    ring_verb("radical", "radical of an ideal", ideal=True, ideal_required=True)
    ring_verb("classify", "ring-level predicates")
    p = ring_verb("star-check", "decide the star property")
    p.add_argument("--star-cap", type=_positive, default=DEFAULT_STAR_CAP)
    ring_verb("decompose", "primary decomposition of an ideal", ideal=True)
    ring_verb("localize", "localization at a prime ideal", ideal=True, ideal_required=True)

    for name, help_text in (("pid-star", "star check on a symbolic PID family"),
                            ("pid-a2", "uniform A2 exponent on a symbolic PID family")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--domain", default="Z", help='"Z" or "Fp[x]"')
        p.add_argument("--family", required=True,
                       help='"finite:2,3,5" | "all-primes" | "prime-powers:2"')
        if name == "pid-a2":
            p.add_argument("--element", required=True, help="the element a")

    p = sub.add_parser("suite", parents=[common], help="run the theorem battery over the corpus")
    p.add_argument("--max-order", type=_positive, default=DEFAULT_MAX_ORDER)
    p.add_argument("--star-cap", type=_positive, default=DEFAULT_STAR_CAP)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--ring", action="append", default=[], dest="rings", metavar="SPEC",
                   help="run on these rings instead of the generated corpus (repeatable)")
    return parser


def parse_command(argv: Sequence[str]) -> Command:
    """Parse ``argv``; usage errors exit with status 2 and name the bad token."""
    ns = build_parser().parse_args(list(argv))
    return Command(**{k: v for k, v in vars(ns).items() if v is not None or k in ("out",)})


# ---------------------------------------------------------------------------


def _ideal_row(I) -> dict[str, Any]:
    return {"members": I.to_list(), "generators": list(I.generators()), "size": len(I),
            "prime": is_prime(I), "maximal": is_maximal(I), "primary": is_primary(I),
            "radical": is_radical_ideal(I), "idempotent": is_idempotent(I)}


def _ideal_of(cmd: Command, R):
    return generate_ideal(R, cmd.ideal or [])


def run_info(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    ax = validate_axioms(R)
    fp = fingerprint(R)
    return {"label": R.label, "order": R.order, "zero": R.zero, "one": R.one,
            "degenerate": R.order == 1, "axioms": ax.describe(),
            "fingerprint": {"order": fp.order, "characteristic": fp.characteristic,
                            "units": fp.units, "ideals": fp.ideals, "primes": fp.primes,
                            "nilradical": fp.nilradical},
            "units": list(R.units)}, EXIT_OK if ax else EXIT_FAIL


def run_ideals(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    return {"label": R.label, "ideals": [_ideal_row(I) for I in enumerate_ideals(R)]}, EXIT_OK


def run_radical(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    I = _ideal_of(cmd, R)
    return {"label": R.label, "ideal": I.to_list(), "radical": radical(I).to_list()}, EXIT_OK


def run_classify(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    rep = C.classify(R).to_dict()
    vnr = C.vnr_equivalence_report(R)
    rep["vnr_equivalence"] = {"conditions": vnr.conditions, "agree": vnr.agree}
    return rep, EXIT_OK if vnr.agree else EXIT_FAIL


def run_star(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    res = star_check_finite(R, cmd.star_cap)
    lat = enumerate_ideals(R)
    out = {"label": R.label, "ideals": len(lat), **res.to_dict(),
           "witness_ideals": [lat[i].to_list() for i in res.witness_subset]}
    return out, EXIT_OK if res.satisfied else EXIT_FAIL


def run_decompose(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    I = _ideal_of(cmd, R)
    dec = primary_decomposition(I)
    return {"label": R.label, "ideal": I.to_list(),
            "components": [Q.to_list() for Q in dec.components],
            "component_radicals": [radical(Q).to_list() for Q in dec.components],
            "irredundant": dec.verify(),
            "note": "irredundant; the number of components is not minimized"}, \
        EXIT_OK if dec.verify() else EXIT_FAIL


def run_localize(cmd: Command) -> tuple[dict, int]:
    R = parse_ring_spec(cmd.ring)
    P = _ideal_of(cmd, R)
    if not is_prime(P):
        raise RingError(f"ideal {P.to_list()} is not prime (witness {prime_witness(P)})")
    RP, h = localize_at_prime(R, P)
    return {"label": RP.label, "prime": P.to_list(), "order": RP.order,
            "kernel": list(R.members_of(h.kernel_mask())), "map": list(h.map),
            "is_field": C.is_field(RP)}, EXIT_OK


def _family(cmd: Command) -> FamilySpec:
    return parse_family(cmd.family, parse_domain(cmd.domain))


def run_pid_star(cmd: Command) -> tuple[dict, int]:
    spec = _family(cmd)
    res = pid_star_check(spec)
    return {"domain": spec.domain.tag, "family": spec.describe(), **res.to_dict()}, EXIT_OK


def run_pid_a2(cmd: Command) -> tuple[dict, int]:
    spec = _family(cmd)
    a = spec.domain.parse(cmd.element)
    res = pid_a2_check(spec, a)
    return {"domain": spec.domain.tag, "family": spec.describe(), "element": cmd.element,
            "holds": res.holds, "uniform_exponent": res.uniform_exponent,
            "certificate": res.certificate}, EXIT_OK


def _text(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- " + (_scalar(x) if isinstance(x, list) else _text(x, indent + 1).lstrip())
                         for x in obj)
    return pad + _scalar(obj)


def _scalar(v: Any) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "-" if v is None else str(v)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def run_suite_command(cmd: Command) -> int:
    rings = [parse_ring_spec(s) for s in cmd.rings] if cmd.rings else None
    report = battery.run_suite(rings, cmd.max_order, cmd.star_cap, cmd.jobs)
    js, tx = battery.report_json(report), battery.report_text(report)
    if cmd.out:
        base = cmd.out[:-5] if cmd.out.endswith(".json") else cmd.out
        Path(base + ".json").write_text(js)
        Path(base + ".txt").write_text(tx)
        sys.stdout.write(tx if cmd.format == "text" else js)
    else:
        sys.stdout.write(tx if cmd.format == "text" else js)
    if not report["summary"]["ok"]:
        sys.stderr.write(f"ringstar: {battery.first_failure(report)}\n")
        return EXIT_FAIL
    return EXIT_OK


HANDLERS = {
    "info": run_info, "ideals": run_ideals, "radical": run_radical, "classify": run_classify,
    "star-check": run_star, "decompose": run_decompose, "localize": run_localize,
    "pid-star": run_pid_star, "pid-a2": run_pid_a2,
}


def execute(cmd: Command) -> int:
    try:
        if cmd.verb == "suite":
            return run_suite_command(cmd)
        result, code = HANDLERS[cmd.verb](cmd)
        text = json.dumps(result, indent=2) + "\n" if cmd.format == "json" else _text(result) + "\n"
        _emit(text, cmd.out)
        return code
    except SpecParseError as e:
        sys.stderr.write(f"ringstar: {e} (offending token: {e.token!r})\n")
        return EXIT_USAGE
    except RingError as e:
        sys.stderr.write(f"ringstar: {e}\n")
        return EXIT_USAGE
    except ResourceCapError as e:
        sys.stderr.write(f"ringstar: resource cap: {e}\n")
        return EXIT_CAP
    except OSError as e:
        sys.stderr.write(f"ringstar: cannot write {e.filename or cmd.out}: {e.strerror or e}\n")
        return EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    cmd = parse_command(sys.argv[1:] if argv is None else argv)
    return execute(cmd)


if __name__ == "__main__":
    sys.exit(main())
