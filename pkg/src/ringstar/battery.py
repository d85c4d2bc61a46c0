"""Per-ring theorem battery and the corpus-wide report.

Each statement is evaluated as an implication (or an equivalence) whose
sides are computed independently. A statement is ``refuted`` on a ring only
when the antecedent holds and the consequent fails; every refutation carries
the data needed to re-check it.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Iterable

from . import classify as C
from .corpus import DEFAULT_MAX_ORDER, build_corpus, fingerprint
from .ideals import (DecompositionError, enumerate_ideals, is_maximal,
                     maximal_ideals, prime_ideals, primary_decomposition, radical_mask, zero_ideal)
from .pid import (FamilySpec, IntegerDomain, PolyDomain, pid_a2_check, pid_star_check,
                  pid_theorem8_witnesses)
from .rings import (MAX_ORDER, FiniteRing, extend_ideal, localize_at_prime, make_residue_ring, product_ring,
                    quotient_ring, validate_axioms)
from .star import (DEFAULT_STAR_CAP, IdealFamily, a2_equiv_radical_identity, a2_minimal_exponent,
                   family_report, prime_family_condition, star_check_finite, zero_dim_equivalence)

SCHEMA_ID = "ringstar/theorem-report"
SCHEMA_VERSION = 1

STATEMENTS = [
    ("Def1", "every finite ring has the star property"),
    ("Thm1", "d.c.c. on radical ideals implies star"),
    ("Cor1", "Artinian implies star"),
    ("Thm2", "a domain with star is a field"),
    ("Lem1", "homomorphic images of a star ring are star"),
    ("Cor2", "quotients of a star ring are star"),
    ("Prop1", "products of star rings are star"),
    ("Thm3", "embeddable in a zero-dimensional ring iff a primary family with A1 and A2 exists"),
    ("Thm4", "A2 iff the radical/meet identity on every subfamily"),
    ("Thm5", "zero-dimensional iff A2 for all ideals iff A2 for all primary ideals"),
    ("Prop2", "every family of ideals of a star ring satisfies A2"),
    ("Cor3", "star implies zero-dimensional"),
    ("Thm6", "VNR five-way equivalence"),
    ("Cor4", "reduced with star implies VNR"),
    ("Lem2", "star with VNR or radical-injectivity implies Artinian"),
    ("Thm7", "Laskerian: star iff the prime-family condition"),
    ("Cor5", "Laskerian with star: localizations are star"),
    ("Thm8", "Noetherian: star, zero-dimensional, Artinian, pi-regular, prime-family condition agree"),
]
STATEMENT_IDS = [sid for sid, _ in STATEMENTS]

PRODUCT_PARTNERS = (2, 3)  # Z/2 and Z/3, sampled for the product statement
DECOMPOSE_IDEAL_LIMIT = 64


def implication(antecedent: bool, consequent: bool, witness: Any = None, **detail) -> dict:
    rec = {"kind": "implication", "antecedent": antecedent, "consequent": consequent,
           "verdict": "refuted" if antecedent and not consequent else "consistent",
           "vacuous": not antecedent}
    rec.update(detail)
    if witness is not None and rec["verdict"] == "refuted":
        rec["witness"] = witness
    return rec


def equivalence(eq: C.Equivalence, premise: bool = True, **detail) -> dict:
    rec = {"kind": "equivalence", "conditions": dict(eq.conditions),
           "verdict": "refuted" if premise and not eq.agree else "consistent",
           "vacuous": not premise}
    rec.update(detail)
    if rec["verdict"] == "refuted":
        rec["witness"] = {"disagreeing": list(eq.first_disagreement), **eq.witnesses}
    return rec


def _star_ok(R: FiniteRing, cap: int) -> bool:
    return star_check_finite(R, cap).satisfied


def theorem_battery(R: FiniteRing, star_cap: int = DEFAULT_STAR_CAP) -> dict:
    """Evaluate every statement and every internal invariant on ``R``."""
    inv: dict[str, dict] = {}

    axioms = validate_axioms(R)
    inv["axioms"] = {"held": axioms.passed} if axioms else \
        {"held": False, "witness": {"axiom": axioms.axiom, "at": list(axioms.witness or ())}}
    if not axioms:
        # nothing downstream is meaningful on a broken table
        return {"label": R.label, "order": R.order, "degenerate": R.order == 1,
                "statements": {}, "invariants": inv}

    lat = enumerate_ideals(R)
    star = star_check_finite(R, star_cap)
    st = star.satisfied
    if star.method == "exhaustive":
        cert = star_check_finite(R, star_cap, method="certified")
        inv["star_methods_agree"] = {"held": cert.satisfied == st}

    # radical calculus over all pairs
    rad_fail = None
    masks = lat.masks
    for a in masks:
        ra = radical_mask(R, a)
        if radical_mask(R, ra) != ra or a & ~ra:
            rad_fail = {"ideal": list(R.members_of(a))}
            break
        for b in masks:
            if radical_mask(R, a & b) != ra & radical_mask(R, b):
                rad_fail = {"I": list(R.members_of(a)), "J": list(R.members_of(b))}
                break
            if a & ~b == 0 and ra & ~radical_mask(R, b):
                rad_fail = {"monotone": [list(R.members_of(a)), list(R.members_of(b))]}
                break
        if rad_fail:
            break
    inv["radical_calculus"] = {"held": rad_fail is None, **({"witness": rad_fail} if rad_fail else {})}

    is_domain, is_field, reduced = C.is_domain(R), C.is_field(R), C.is_reduced(R)
    vnr, radinj = C.is_vnr(R), C.radical_injective(R)
    pi_reg = C.is_pi_regular(R)
    dim = C.krull_dimension(R)
    dcc = C.dcc_radical_ideals(R)
    artinian = C.is_artinian(R).holds
    inv["finite_domain_is_field"] = {"held": is_field == (is_domain and R.order > 1)}
    inv["krull_dimension_zero"] = {"held": dim == 0}

    # Laskerian: every proper ideal decomposes (verified irredundant)
    laskerian, decomposed, dec_fail = True, 0, None
    if len(lat) <= DECOMPOSE_IDEAL_LIMIT:
        for I in lat:
            if I.is_unit:
                continue
            try:
                dec = primary_decomposition(I)
            except DecompositionError:
                laskerian, dec_fail = False, {"ideal": I.to_list()}
                break
            if not dec.verify():
                laskerian, dec_fail = False, {"ideal": I.to_list(),
                                              "components": [Q.to_list() for Q in dec.components]}
                break
            decomposed += 1
        inv["primary_decompositions"] = {"held": dec_fail is None, "decomposed": decomposed,
                                         **({"witness": dec_fail} if dec_fail else {})}

    s: dict[str, dict] = {}
    s["Def1"] = implication(True, st, star.counterexample, method=star.method,
                            families_checked=star.families_checked)
    s["Thm1"] = implication(dcc.holds, st, star.counterexample)
    s["Cor1"] = implication(artinian, st, star.counterexample)
    s["Thm2"] = implication(is_domain and st, is_field, {"non_unit": C.non_unit_witness(R)})

    # homomorphic images as quotient projections
    images_ok, quot_ok, bad_img, bad_quot = True, True, None, None
    for I in lat:
        Q, h = quotient_ring(R, I)
        if not h.is_surjective() or h.first_violation() is not None:
            images_ok, bad_img = False, {"ideal": I.to_list(), "violation": h.first_violation()}
        if not star_check_finite(Q, 0, method="certified").satisfied:
            quot_ok = False
            bad_quot = bad_quot or {"ideal": I.to_list(), "quotient": Q.label}
    s["Lem1"] = implication(st, images_ok and quot_ok, bad_img or bad_quot, images=len(lat))
    s["Cor2"] = implication(st, quot_ok, bad_quot, quotients=len(lat))

    prod_ok, bad_prod, tested = True, None, []
    for n in PRODUCT_PARTNERS:
        if R.order * n > MAX_ORDER:
            continue
        S = make_residue_ring(n)
        P = product_ring(R, S)
        tested.append(P.label)
        if _star_ok(S, star_cap) and not star_check_finite(P, 0, method="certified").satisfied:
            prod_ok, bad_prod = False, {"product": P.label}
    s["Prop1"] = implication(st, prod_ok, bad_prod, products=tested)

    # A1/A2 family for the identity embedding R -> R (R is zero-dimensional)
    if R.order == 1:
        a1a2 = True
        fam_detail = {"family": [], "note": "zero ring: the empty family meets in R = (0)"}
    else:
        comps = primary_decomposition(zero_ideal(R)).components
        rep = family_report(IdealFamily.of(R, comps, "decomposition of (0)"))
        a1a2 = rep["a1_meet_is_zero"] and rep["all_primary"] and rep["a2_holds"]
        fam_detail = {"family": rep["family"], "a2_uniform_exponent": rep["a2_uniform_exponent"]}
    s["Thm3"] = implication(dim == 0, a1a2, fam_detail, **fam_detail)

    fams = [IdealFamily.all_ideals(R), IdealFamily.all_primary(R), IdealFamily.all_primes(R)]
    thm4 = []
    exps_ok = True
    for fam in fams:
        eq = a2_equiv_radical_identity(fam, star_cap)
        a2 = a2_minimal_exponent(fam)
        exps_ok &= a2.uniform <= max(R.order, 1)
        thm4.append((fam.label, eq))
    bad4 = next(((lbl, eq) for lbl, eq in thm4 if not eq.agree), None)
    s["Thm4"] = equivalence(bad4[1] if bad4 else thm4[0][1], families=[lbl for lbl, _ in thm4])
    inv["a2_exponent_bounded"] = {"held": exps_ok}

    zd = zero_dim_equivalence(R)
    s["Thm5"] = equivalence(zd, krull_dimension=dim)
    all_a2 = a2_minimal_exponent(fams[0])
    s["Prop2"] = implication(st, all_a2.holds, None, uniform_exponent=all_a2.uniform)
    s["Cor3"] = implication(st, dim == 0, {"krull_dimension": dim})

    vnr_eq = C.vnr_equivalence_report(R)
    s["Thm6"] = equivalence(vnr_eq)
    s["Cor4"] = implication(reduced and st, vnr, {"x": C.vnr_witness(R)})
    inv["vnr_implies_radical_injective"] = {"held": (not vnr) or radinj}
    s["Lem2"] = implication(st and (vnr or radinj), artinian, None, vnr=vnr, radical_injective=radinj)

    pf = prime_family_condition(R)
    inv["gamma_is_minimal_primes"] = {"held": pf.gamma_is_minimal_primes or R.order == 1}
    s["Thm7"] = equivalence(C.Equivalence({"star": st, "prime_family_condition": pf.holds,
                                           "prime_family_every_subfamily": pf.every_subfamily}),
                            premise=laskerian, gamma=pf.to_dict()["gamma"])

    loc_ok, bad_loc, loc_local = True, None, True
    for P in prime_ideals(R):
        RP, h = localize_at_prime(R, P)
        if len(maximal_ideals(RP)) != 1:
            loc_local = False
        ext = extend_ideal(h, P)
        if not is_maximal(ext):
            loc_local = False
        if not star_check_finite(RP, 0, method="certified").satisfied:
            loc_ok, bad_loc = False, {"prime": P.to_list(), "localization": RP.label}
    inv["localizations_local"] = {"held": loc_local}
    s["Cor5"] = implication(laskerian and st, loc_ok, bad_loc, primes=len(prime_ideals(R)))

    s["Thm8"] = equivalence(C.Equivalence({
        "star": st, "zero_dimensional": dim == 0, "artinian": artinian,
        "pi_regular": pi_reg, "prime_family_condition": pf.holds}))

    return {
        "label": R.label,
        "order": R.order,
        "degenerate": R.order == 1,
        "fingerprint": list(fingerprint(R).as_tuple()),
        "star_method": star.method,
        "statements": s,
        "invariants": inv,
    }


def _battery_job(args):
    R, cap = args
    return theorem_battery(R, cap)


def pid_section() -> dict:
    out = {}
    for D in (IntegerDomain(), PolyDomain(2)):
        w = pid_theorem8_witnesses(D)
        base = w["conditions"]["artinian"]["witness"]["descending_chain"][0]
        a = D.parse(base.strip("()"))
        powers = pid_a2_check(FamilySpec(D, "prime-powers", base=a), a)
        allp = pid_star_check(FamilySpec(D, "all-primes"))
        out[D.tag] = {
            "star_all_primes": allp.to_dict(),
            "a2_prime_powers": {"refused": not powers.holds, "certificate": powers.certificate},
            "theorem8": w,
            "consistent": (not allp.satisfied and not powers.holds and w["all_equal"]
                           and w["certificates_checked"]),
        }
    return out


def run_battery(rings: Iterable[FiniteRing], star_cap: int = DEFAULT_STAR_CAP, jobs: int = 1) -> list[dict]:
    work = [(R, star_cap) for R in rings]
    if jobs <= 1 or len(work) < 2:
        return [_battery_job(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_battery_job, work, chunksize=max(1, len(work) // (4 * jobs))))


def assemble_report(results: list[dict], pid: dict | None, max_order: int | None,
                    star_cap: int) -> dict:
    statements = []
    for sid, text in STATEMENTS:
        recs = [(r["label"], r["statements"][sid]) for r in results if sid in r["statements"]]
        refs = [{"ring": lbl, "witness": rec.get("witness")} for lbl, rec in recs
                if rec["verdict"] == "refuted"]
        entry = {
            "id": sid,
            "statement": text,
            "verdict": "refuted" if refs else "consistent",
            "rings_tested": len(recs),
            "non_vacuous": sum(1 for _, rec in recs if not rec["vacuous"]),
            "degenerate": sum(1 for r in results if r["degenerate"] and sid in r["statements"]),
            "refutations": refs,
        }
        statements.append(entry)
    if pid is not None:
        by_id = {e["id"]: e for e in statements}
        for tag, sec in pid.items():
            # Z and F_p[x]: star fails on the family of all primes, Thm2 holds vacuously,
            # Thm8's five conditions agree (all false)
            for sid in ("Def1", "Thm2", "Thm8"):
                by_id[sid].setdefault("infinite_domains", []).append(
                    {"domain": tag, "consistent": sec["consistent"]})
                if not sec["consistent"]:
                    by_id[sid]["verdict"] = "refuted"
                    by_id[sid]["refutations"].append({"ring": tag, "witness": sec["theorem8"]})

    inv_names = sorted({k for r in results for k in r["invariants"]})
    invariants = []
    for name in inv_names:
        recs = [(r["label"], r["invariants"][name]) for r in results if name in r["invariants"]]
        fails = [{"ring": lbl, **({"witness": v["witness"]} if "witness" in v else {})}
                 for lbl, v in recs if not v["held"]]
        invariants.append({"name": name, "held": not fails, "rings_checked": len(recs),
                           "failures": fails})

    refuted = sum(1 for e in statements if e["verdict"] == "refuted")
    inv_fail = sum(1 for e in invariants if not e["held"])
    rings = [{"label": r["label"], "order": r["order"], "degenerate": r["degenerate"],
              "fingerprint": r.get("fingerprint"), "star_method": r.get("star_method"),
              "verdicts": {sid: ("vacuous" if rec["vacuous"] and rec["verdict"] == "consistent"
                                 else rec["verdict"]) for sid, rec in r["statements"].items()}}
             for r in results]
    return {
        "schema": SCHEMA_ID,
        "schema_version": SCHEMA_VERSION,
        "config": {"max_order": max_order, "star_cap": star_cap, "ring_count": len(results)},
        "statements": statements,
        "invariants": invariants,
        "rings": rings,
        "infinite_domains": pid,
        "summary": {"refuted_statements": refuted, "failed_invariants": inv_fail,
                    "ok": refuted == 0 and inv_fail == 0},
    }


def run_suite(rings: list[FiniteRing] | None = None, max_order: int = DEFAULT_MAX_ORDER,
              star_cap: int = DEFAULT_STAR_CAP, jobs: int = 1, include_pid: bool = True) -> dict:
    if rings is None:
        rings = build_corpus(max_order)
    else:
        max_order = None
    results = run_battery(rings, star_cap, jobs)
    return assemble_report(results, pid_section() if include_pid else None, max_order, star_cap)


def first_failure(report: dict) -> str | None:
    for e in report["invariants"]:
        if not e["held"]:
            f = e["failures"][0]
            return f"invariant {e['name']} failed on {f['ring']}: {json.dumps(f.get('witness'))}"
    for e in report["statements"]:
        if e["verdict"] == "refuted":
            f = e["refutations"][0]
            return f"{e['id']} refuted on {f['ring']}: {json.dumps(f.get('witness'))}"
    return None


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_text(report: dict) -> str:
    lines = [f"{SCHEMA_ID} v{SCHEMA_VERSION}"]
    cfg = report["config"]
    lines.append(f"rings: {cfg['ring_count']}  max_order: {cfg['max_order']}  star_cap: {cfg['star_cap']}")
    lines.append("")
    for e in report["statements"]:
        extra = f"  degenerate={e['degenerate']}" if e["degenerate"] else ""
        pid = ""
        if "infinite_domains" in e:
            pid = "  " + " ".join(f"{d['domain']}:{'ok' if d['consistent'] else 'FAIL'}"
                                 for d in e["infinite_domains"])
        lines.append(f"{e['id']:<6} {e['verdict']:<10} rings={e['rings_tested']:<4} "
                     f"non-vacuous={e['non_vacuous']:<4}{extra}{pid}")
    lines.append("")
    for e in report["invariants"]:
        lines.append(f"invariant {e['name']:<32} {'held' if e['held'] else 'FAILED'} "
                     f"({e['rings_checked']} rings)")
    if report["infinite_domains"]:
        lines.append("")
        for tag, sec in report["infinite_domains"].items():
            chain = " > ".join(sec["theorem8"]["dcc_radical_failure_chain"])
            wit = sec["star_all_primes"]["counterexample"]
            lines.append(f"{tag}: star fails (meet of radicals over {', '.join(wit['witness_subfamily'])}"
                         f" = {wit['meet_of_radicals']} != (0)); d.c.c. fails: {chain} > ...")
    lines.append("")
    fail = first_failure(report)
    lines.append("OK" if report["summary"]["ok"] else f"FAILED: {fail}")
    return "\n".join(lines) + "\n"


def load_schema(name: str = "theorem_report") -> dict:
    from importlib.resources import files

    return json.loads(files("ringstar").joinpath(f"schemas/{name}.schema.json").read_text())
