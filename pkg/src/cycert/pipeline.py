"""The certificate pipeline: each stage returns a JSON-ready dict.

Stages record what they computed and a list of checks.  A check is a dict
with ``name``, ``ok`` and, for values known at the reference point, ``expected``; warnings
carry ``ok: null`` and never fail the run.
"""

from __future__ import annotations

import json
import logging
from importlib import resources

from . import lie
from .charvar import characteristic_ideal, characteristic_invariants, segre_ideal
from .ideal import hilbert_polynomial_str
from .jacobian import (HODGE_TARGET, Arrangement, commutators_vanish, general_position_check,
                       pairing_matrix, primitive_hodge_numbers)
from .linalg import fraction_str
from .plethysm import (block_partition, hodge_vector_factorizations, hodge_vector_str, iterated_images,
                       operators_commute, respects_grading, sym2_operators)

log = logging.getLogger(__name__)


def expected_x0() -> dict:
    text = resources.files("cycert").joinpath("data/expected_x0.json").read_text()
    return json.loads(text)


def check(name: str, ok, expected=None, got=None) -> dict:
    out = {"name": name, "ok": ok}
    if expected is not None:
        out["expected"] = expected
        out["got"] = got
    return out


def arrangement_echo(arr: Arrangement) -> dict:
    ok, witness = general_position_check(arr.matrix)
    out = {"matrix": arr.matrix.to_strings(), "general_position": ok, "reference_point": arr.is_reference()}
    if arr.lambdas is not None:
        out["vandermonde"] = [fraction_str(v) for v in arr.lambdas]
    out["order"] = [arr.ring.names[i] for i in arr.ring.order.precedence]
    return out


def stage_bases(arr: Arrangement, exp: dict | None, default_order: bool) -> dict:
    ring = arr.ring
    tables = {str(p): [ring.format_monomial(m) for m in arr.basis(p)] for p in range(4)}
    checks = [check("cardinalities", [len(arr.basis(p)) for p in range(4)] == list(HODGE_TARGET),
                    list(HODGE_TARGET), [len(arr.basis(p)) for p in range(4)])]
    if exp is not None:
        same = tables == exp["bases"]
        # representatives depend on the order; only the default order is compared strictly
        checks.append(check("tables", same if default_order else (None if not same else True),
                            exp["bases"], tables))
    return {"module": "hodge_jacobian", "hodge_numbers": primitive_hodge_numbers(3),
            "bases": tables, "checks": checks}


def stage_higgs(arr: Arrangement) -> dict:
    C = arr.multiplication_matrix(1)
    P = pairing_matrix(arr)
    det = P.det()
    ops = arr.operators
    return {
        "module": "hodge_jacobian",
        "sym2_to_R2": {"shape": list(C.matrix.shape), "sha256": C.matrix.fingerprint()},
        "pairing_R1_R2": {"determinant": fraction_str(det), "sha256": P.fingerprint()},
        "operators_sha256": [C_k.fingerprint() for C_k in ops],
        "checks": [
            check("C_shape_45x9", C.matrix.shape == (45, 9)),
            check("pairing_nondegenerate", det != 0),
            check("operators_commute", commutators_vanish(ops)),
        ],
    }


def stage_char_variety(arr: Arrangement, exp: dict | None, k: int = 1) -> dict:
    ci = characteristic_ideal(arr, k)
    hd = characteristic_invariants(ci)
    out = {
        "module": "char_variety",
        "k": k,
        "generators": [str(g) for g in ci.generators],
        "dimension": hd.dimension,
        "arithmetic_genus": int(hd.arithmetic_genus) if hd.dimension >= 0 else None,
        "hilbert_polynomial": hilbert_polynomial_str(hd),
        "hilbert_polynomial_coefficients": [fraction_str(c) for c in hd.polynomial],
        "h_vector": hd.h_vector,
        "checks": [],
    }
    if k == 1:
        seg = characteristic_invariants(segre_ideal())
        out["segre_control"] = {"dimension": seg.dimension, "arithmetic_genus": int(seg.arithmetic_genus),
                                "hilbert_polynomial": hilbert_polynomial_str(seg)}
        out["checks"].append(check("segre_control", (seg.dimension, seg.arithmetic_genus) == (4, 0)))
        out["verdicts"] = {"dimension_differs_from_modular": hd.dimension != seg.dimension,
                           "genus_differs_from_modular": hd.arithmetic_genus != seg.arithmetic_genus}
        if exp is not None:
            e = exp["char_variety"]
            out["checks"].append(check("dimension", hd.dimension == e["dimension"], e["dimension"], hd.dimension))
            out["checks"].append(check("arithmetic_genus", hd.arithmetic_genus == e["arithmetic_genus"],
                                       e["arithmetic_genus"], int(hd.arithmetic_genus)))
    return out


def stage_plethysm(arr: Arrangement, exp: dict | None) -> dict:
    ops = sym2_operators(arr)
    chain = iterated_images(ops)
    blocks = block_partition(arr.level_of)
    dims = chain.dims
    checks = [
        check("grading", all(respects_grading(S, arr.level_of) for S in ops)),
        check("commutation", operators_commute(ops)),
        check("monotone_and_bounded", all(d <= b for d, b in zip(dims, blocks))
              and all(a <= b for a, b in zip(dims, dims[1:]))),
    ]
    out = {"module": "higgs_plethysm", "chain": dims, "blocks": blocks[:4],
           "image_sha256": chain.fingerprint, "cumulative": sum(dims)}
    if exp is not None:
        e = exp["plethysm"]
        checks.append(check("chain", dims == e["chain"], e["chain"], dims))
        out["verdicts"] = {
            "exceeds_modular_bound": dims[3] > e["modular_bound"],
            "modular_bound": e["modular_bound"],
            "exceeds_cumulative_bound": sum(dims) > e["cumulative_bound"],
            "cumulative_bound": e["cumulative_bound"],
        }
    out["checks"] = checks
    return out


def _names(alg, dec) -> list[str]:
    return sorted(lie.format_weight(alg, w) for w, m in dec for _ in range(m))


def canonical(alg, weight) -> str:
    """Name with the factors sorted, so products compare up to permutation."""
    parts = sorted(zip(alg, lie.split(alg, weight)))
    return "+".join(f"{t}:[{','.join(map(str, w))}]" for t, w in parts)


def classification_report(dim: int = 20, proper: bool = True) -> dict:
    found = lie.classify_semisimple_irreps(dim, symplectic=True, proper=proper)
    hodge = [1, 9, 9, 1]
    facs = hodge_vector_factorizations(hodge)
    split_dims = sorted({tuple(sorted((sum(a), sum(b)))) for a, b in facs})
    entries = []
    for alg, w in found:
        dims = sorted(lie.weyl_dim((t,), u) for t, u in zip(alg, lie.split(alg, w)))
        compatible = len(alg) == 1 or (len(alg) == 2 and tuple(dims) in split_dims)
        entries.append({"rep": canonical(alg, w), "factor_dims": dims, "hodge_split_possible": compatible})
    return {"entries": entries, "hodge_factorizations": [[hodge_vector_str(a), hodge_vector_str(b)] for a, b in facs]}


def stage_reps(exp: dict) -> dict:
    e = exp["reps"]
    checks = []
    dims = {}
    for name, want in e["dims"].items():
        alg, w = lie.parse_weight(name)
        dims[name] = lie.weyl_dim(alg, w)
        checks.append(check(f"dim {name}", dims[name] == want, want, dims[name]))
    decomps = {}
    for kind, fn in (("sym2", lie.sym2_character), ("wedge2", lie.wedge2_character)):
        for name, want in e[kind].items():
            alg, w = lie.parse_weight(name)
            got = _names(alg, lie.decompose_character(alg, fn(lie.weight_system(alg, w))))
            decomps[f"{kind} {name}"] = got
            checks.append(check(f"{kind} {name}", got == sorted(want), sorted(want), got))
    A5 = (lie.SimpleType("A", 5),)
    center = {}
    for name, want in e["center"].items():
        alg, w = lie.parse_weight(name)
        got = lie.cocharacter_weights(A5, w, (1, 2, 3, 2, 1))
        center[name] = {str(k): v for k, v in got.items()}
        checks.append(check(f"center {name}", list(got.values()) == want, want, list(got.values())))
    sym2_dims = {}
    for name, want in e["sym2_dims"].items():
        alg, w = lie.parse_weight(name)
        dec = lie.decompose_character(alg, lie.sym2_character(lie.weight_system(alg, w)))
        got = sorted(lie.weyl_dim(alg, u) for u, m in dec for _ in range(m))
        sym2_dims[name] = got
        checks.append(check(f"sym2 dims {name}", got == want, want, got))
    cls = classification_report(20)
    got = sorted(x["rep"] for x in cls["entries"])
    want = sorted(canonical(*lie.parse_weight(n)) for n in e["classification_dim20"])
    extra = sorted(set(got) - set(want))
    missing = sorted(set(want) - set(got))
    checks.append(check("classification contains the listed entries", not missing, want, got))
    # extra entries are a genuine disagreement with the listed seven; surfaced, not failed
    checks.append({"name": "classification equals the listed entries", "ok": None if not missing else False,
                   "extra": extra, "missing": missing})
    rejected = {}
    for name, want in e["rejected"].items():
        alg, w = lie.parse_weight(name)
        rep = lie.wedge2_report(alg, w)
        names = sorted(lie.format_weight(alg, u) for u, m, _ in rep)
        trivial = any(not any(u) for u, _, _ in rep)
        rejected[name] = {"wedge2": names, "trivial_summand": trivial}
        checks.append(check(f"rejected {name}", names == sorted(want) and not trivial, sorted(want), names))
    return {"module": "lie_reps", "dims": dims, "decompositions": decomps, "center": center,
            "sym2_dims": sym2_dims, "classification": cls, "rejected": rejected, "checks": checks,
            "external_input": "real forms of Hodge type are taken from the literature and not computed here"}


def failed(stage: dict) -> list[str]:
    return [c["name"] for c in stage.get("checks", []) if c["ok"] is False]


def run_verify(arr: Arrangement, default_order: bool = True) -> tuple[dict, list[str]]:
    """Full certificate and the names of failing checks, prefixed by stage."""
    exp = expected_x0() if arr.is_reference() else None
    cert = {"arrangement": arrangement_echo(arr)}
    stages = [
        ("bases", lambda: stage_bases(arr, exp, default_order)),
        ("higgs", lambda: stage_higgs(arr)),
        ("char_variety", lambda: stage_char_variety(arr, exp)),
        ("plethysm", lambda: stage_plethysm(arr, exp)),
        ("reps", lambda: stage_reps(expected_x0())),
    ]
    failures = []
    for name, fn in stages:
        log.info("stage %s", name)
        cert[name] = fn()
        failures += [f"{name}: {c}" for c in failed(cert[name])]
    cert["verdict"] = {"all_checks_passed": not failures, "failures": failures}
    return cert, failures
