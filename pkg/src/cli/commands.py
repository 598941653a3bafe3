"""
Subcommand implementations. Each takes plain arguments, returns a Report
and leaves printing and exit codes to `main`.
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Sequence

import numpy as np

from src.cli.report import Report
from src.combinatorics.counting import bell, d_count, d_count_reduced, d_count_table, stirling2
from src.combinatorics.partitions import enumerate_d_njk, is_non_singleton, partitions_of
from src.complex.faces import PartialPartition
from src.complex.simplicial import (
    SimplicialComplex,
    build_dn,
    complex_to_json,
    connected_components,
    d_n_star,
    f_vector,
    reduced_euler_characteristic,
)
from src.cycles.crosspolytope import (
    RepresentativeChoice,
    all_choices,
    canonical_choice,
    cycle_report,
    ho_closure,
    random_choice,
    sigma_chain,
    sigma_support_in_star,
    verify_basis,
    verify_choice_independence,
    verify_crosspolytope_iso,
)
from src.homology.reduced import (
    betti_minus_one,
    boundary_squares_vanish,
    homology_report,
    is_acyclic,
    reduced_betti,
    torsion_coefficients,
)
from src.shelling.gamma import gamma_matches_d_njk, gamma_table, h_counts
from src.shelling.order import TIEBREAKS, default_shelling_order, random_perturbation
from src.shelling.verify import ShellingVerdict, restrictions, verify_shelling_definition, verify_shelling_lemma
from src.utils.config import check_ceiling, get_settings
from src.utils.errors import PreconditionError
from src.utils.io import write_json
from src.utils.log import log, progress

BETTI_METHODS = ("formula", "snf", "both")
SHELLING_CHECKS = ("definition", "lemma", "both")
EXPORTS = ("complex", "report")
FAULTS = ("boundary",)

BRUTE_FORCE_MAX_N = 8
EXHAUSTIVE_CHOICES_MAX_N = 5
PERTURBED_MAX_N = 5
PERTURBED_ORDERS = 20


def _choose(value: str, allowed: Sequence[str], what: str) -> str:
    if value not in allowed:
        raise PreconditionError(f"Unknown {what} {value!r}; choose from {tuple(allowed)}")
    return value


def _rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(get_settings().seed if seed is None else seed)


def _pairs(table: dict[tuple[int, int], int]) -> dict[str, int]:
    return {f"{j},{k}": v for (j, k), v in sorted(table.items())}


def _verdict(v: ShellingVerdict) -> dict:
    return {"ok": v.ok, "failingPosition": v.failing_position, "detail": v.detail}


def cmd_formula(n: int, j: int, k: int) -> Report:
    """D(n, j, k) by the closed form, cross-checked by enumeration for small n."""
    check_ceiling("formula", n)
    report = Report("formula", {"n": n, "j": j, "k": k})
    value = d_count(n, j, k)
    reduced = d_count_reduced(n, j, k)
    report.results["value"] = value
    report.results["reduced"] = reduced
    report.check("reductionAgrees", reduced == value)
    if n <= BRUTE_FORCE_MAX_N:
        brute = len(enumerate_d_njk(n, j, k))
        report.results["bruteForce"] = brute
        report.check("match", brute == value)
    return report


def cmd_betti(n: int, method: str = "both") -> Report:
    """Reduced Betti numbers of D_n from the formula, from integer reduction, or both."""
    _choose(method, BETTI_METHODS, "method")
    check_ceiling("betti", n)
    report = Report("betti", {"n": n, "method": method})
    formula = [d_count(n, j, j) for j in range(1, n + 1)]
    if method in ("formula", "both"):
        report.results["formula"] = formula
    if method in ("snf", "both"):
        check_ceiling("betti (snf)", n, get_settings().max_n_homology)
        c = build_dn(n)
        log(f"D_{n}: {len(c)} faces, dimension {c.dim}")
        hom = homology_report(c, torsion=True, method="snf")
        snf = hom["betti"]
        report.results["snf"] = snf
        report.results["bettiMinusOne"] = hom["bettiMinusOne"]
        report.results["eulerReduced"] = hom["eulerReduced"]
        report.check("torsionFree", not any(hom["torsion"].values()))
        alternating = -hom["bettiMinusOne"] + sum(b if d % 2 == 0 else -b for d, b in enumerate(snf))
        report.check("eulerCharacteristic", alternating == hom["eulerReduced"])
        if method == "both":
            report.results["equal"] = [a == b for a, b in zip(formula, snf)]
            report.check("bettiIdentity", formula == snf)
    return report


def cmd_shelling(n: int, check: str = "both", tiebreak: str = "lex") -> Report:
    """Verify the decreasing-size facet order and the Γ table of D_n."""
    _choose(check, SHELLING_CHECKS, "check")
    _choose(tiebreak, TIEBREAKS, "tiebreak")
    check_ceiling("shelling", n)
    if check in ("lemma", "both"):
        check_ceiling("shelling (lemma)", n, get_settings().max_n_lemma)
    report = Report("shelling", {"n": n, "check": check, "tiebreak": tiebreak})
    c = build_dn(n)
    order = default_shelling_order(n, tiebreak)
    report.results["order"] = order.to_json()
    report.results["facets"] = len(order)
    report.check("sizeDecreasing", order.is_size_decreasing())
    verdicts = []
    if check in ("definition", "both"):
        verdict = verify_shelling_definition(c, order)
        report.results["definition"] = _verdict(verdict)
        report.check("definition", verdict.ok)
        verdicts.append(verdict)
    if check in ("lemma", "both"):
        verdict = verify_shelling_lemma(c, order)
        report.results["lemma"] = _verdict(verdict)
        report.check("lemma", verdict.ok)
        verdicts.append(verdict)
    report.results["shellable"] = all(v.ok for v in verdicts)
    report.results["restrictions"] = [rs.to_json() for rs in restrictions(c, order)]
    table = gamma_table(c, order)
    report.results["gamma"] = table.to_json()
    report.results["gammaCounts"] = _pairs(h_counts(table))
    report.results["dCount"] = _pairs({key: v for key, v in d_count_table(n).items() if v})
    report.check("gammaEqualsDnjk", gamma_matches_d_njk(table, n))
    other = TIEBREAKS[1 - TIEBREAKS.index(tiebreak)]
    report.check(
        "gammaTiebreakInvariant",
        gamma_table(c, default_shelling_order(n, other)).entries == table.entries,
    )
    return report


def _cycle_checks(n: int, face: PartialPartition, choice: RepresentativeChoice, fragment: dict) -> dict:
    chain = sigma_chain(face, choice)
    partitions = [f for f in chain.support() if f.is_partition_of(n) and is_non_singleton(f)]
    return {
        "j": len(face),
        "F": str(face),
        "isCycle": fragment["isCycle"],
        "crossPolytopeIso": fragment["crossPolytopeIso"],
        "support": len(chain),
        "unitCoefficients": all(abs(v) == 1 for v in chain.terms.values()),
        "nonSingletonFaces": len(partitions),
        "closureFaces": len(ho_closure(face, choice)),
    }


def _cycle_row_ok(row: dict, j: int) -> bool:
    return (
        row["isCycle"]
        and row["crossPolytopeIso"]
        and row["unitCoefficients"]
        and row["support"] == 2**j
        and row["nonSingletonFaces"] == 1
        and row["closureFaces"] == 3**j
    )


def _sample_face(faces: Sequence[PartialPartition], rng: np.random.Generator) -> PartialPartition:
    return faces[int(rng.integers(len(faces)))]


def _iso_cases(
    faces: Sequence[PartialPartition], n: int, samples: int, rng: np.random.Generator
) -> list[tuple[PartialPartition, RepresentativeChoice]]:
    """All (F, choice) pairs for small n, otherwise `samples` random ones."""
    if n <= EXHAUSTIVE_CHOICES_MAX_N:
        return [(f, ch) for f in faces for ch in all_choices(f)]
    out = []
    for _ in range(samples):
        face = _sample_face(faces, rng)
        out.append((face, random_choice(face, rng)))
    return out


def _choice_pairs(
    faces: Sequence[PartialPartition], n: int, samples: int, rng: np.random.Generator
) -> list[tuple[PartialPartition, RepresentativeChoice, RepresentativeChoice]]:
    """All pairs of distinct choices for small n, otherwise `samples` random pairs."""
    if n <= EXHAUSTIVE_CHOICES_MAX_N:
        return [(f, a, b) for f in faces for a, b in combinations(list(all_choices(f)), 2)]
    out = []
    for _ in range(samples):
        face = _sample_face(faces, rng)
        a = random_choice(face, rng)
        b = random_choice(face, rng)
        while b == a:
            b = random_choice(face, rng)
        out.append((face, a, b))
    return out


def _basis_degree(
    report: Report, n: int, j: int, verify_iso: bool, samples: int, rng: np.random.Generator
) -> None:
    verdict = verify_basis(n, j)
    report.results["basis"].append(verdict.to_json())
    report.check("basis", verdict.ok)
    faces = enumerate_d_njk(n, j, j)
    for face in progress(faces, f"cycles j={j}"):
        choice = canonical_choice(face)
        fragment = cycle_report(face, choice)
        row = _cycle_checks(n, face, choice, fragment)
        report.results["cycles"].append(fragment)
        report.results["cycleChecks"].append(row)
        report.check("cycles", _cycle_row_ok(row, j))
    if not faces:
        return
    if verify_iso:
        cases = _iso_cases(faces, n, samples, rng)
        passed = sum(verify_crosspolytope_iso(f, ch) for f, ch in progress(cases, f"iso j={j}"))
        report.results["crossPolytope"].append({"j": j, "checked": len(cases), "passed": passed})
        report.check("crossPolytope", passed == len(cases))
    pairs = _choice_pairs(faces, n, samples, rng)
    bounded = in_star = 0
    for face, a, b in progress(pairs, f"choices j={j}"):
        bounded += verify_choice_independence(face, a, b)
        in_star += sigma_support_in_star(face, a, b)
    report.results["choiceIndependence"].append(
        {"j": j, "checked": len(pairs), "boundaries": bounded, "inStar": in_star}
    )
    report.check("choiceIndependence", bounded == in_star == len(pairs))


def cmd_basis(
    n: int,
    j: int | None = None,
    verify_iso: bool = True,
    samples: int | None = None,
    seed: int | None = None,
) -> Report:
    """Cross-polytope cycles σ_F for F in D_{n,j,j} and their basis checks."""
    settings = get_settings()
    check_ceiling("basis", n, settings.max_n_basis)
    if j is not None and not 1 <= j <= n:
        raise PreconditionError(f"Need 1 <= j <= n, got n={n}, j={j}")
    samples = settings.samples if samples is None else samples
    seed = settings.seed if seed is None else seed
    report = Report(
        "basis",
        {"n": n, "j": j, "verifyIso": verify_iso, "samples": samples, "seed": seed},
    )
    report.results.update(basis=[], cycles=[], cycleChecks=[], crossPolytope=[], choiceIndependence=[])
    rng = _rng(seed)
    for degree in range(1, n + 1) if j is None else (j,):
        _basis_degree(report, n, degree, verify_iso, samples, rng)
    if n >= 1:
        report.check("starAcyclic", is_acyclic(d_n_star(n)))
    return report


def cmd_export(n: int, what: str, path: Path) -> Report:
    """Write the complex (or a full homology report) of D_n as JSON."""
    _choose(what, EXPORTS, "export")
    if what == "report":
        check_ceiling("export (report)", n, get_settings().max_n_homology)
    c = build_dn(n)
    if what == "complex":
        payload = complex_to_json(c)
    else:
        payload = {
            "complex": complex_to_json(c),
            "components": len(connected_components(c)),
            "dCount": _pairs(d_count_table(n)),
            "homology": homology_report(c),
        }
    written = write_json(payload, Path(path))
    report = Report("export", {"n": n, "what": what, "path": str(path)})
    report.results["written"] = str(written)
    report.results["fvector"] = f_vector(c)
    return report


def _selftest_counting(report: Report, n: int) -> None:
    table = d_count_table(n)
    for (j, k), value in table.items():
        report.check("formulaOracle", value == len(enumerate_d_njk(n, j, k)))
        report.check("formulaReduction", value == d_count_reduced(n, j, k))
    report.check("bellSum", sum(table.values()) == bell(n))
    for j in range(n + 1):
        report.check("stirlingSum", sum(table[(j, k)] for k in range(j + 1)) == stirling2(n, j))


def _selftest_structure(report: Report, c: SimplicialComplex, n: int, fault: str | None) -> list[int]:
    report.check("boundarySquaresVanish", boundary_squares_vanish(c, flip_sign=fault == "boundary"))
    report.check("faceCount", len(c) == bell(n + 1))
    report.check("facetsArePartitions", set(c.facets) == set(partitions_of(n)))
    components = len(connected_components(c))
    report.check("components", components == (2 if n >= 2 else n))
    betti = reduced_betti(c, "snf")
    report.check("bettiIdentity", betti == [d_count(n, j, j) for j in range(1, n + 1)])
    report.check("torsionFree", not any(torsion_coefficients(c, d) for d in range(c.dim + 1)))
    alternating = sum(b if d % 2 == 0 else -b for d, b in enumerate(betti)) - betti_minus_one(c)
    report.check("eulerCharacteristic", alternating == reduced_euler_characteristic(c))
    return betti


def _selftest_shelling(report: Report, c: SimplicialComplex, n: int, rng: np.random.Generator) -> int:
    order = default_shelling_order(n)
    report.check("shellingDefinition", verify_shelling_definition(c, order).ok)
    report.check("shellingLemma", verify_shelling_lemma(c, order).ok)
    table = gamma_table(c, order)
    report.check("gammaEqualsDnjk", gamma_matches_d_njk(table, n))
    report.check(
        "gammaTiebreakInvariant",
        gamma_table(c, default_shelling_order(n, "revlex")).entries == table.entries,
    )
    broken = 0
    if n <= PERTURBED_MAX_N and len(order) >= 2:
        for _ in range(PERTURBED_ORDERS):
            perturbed = random_perturbation(order, int(rng.integers(1, 4)), rng)
            by_definition = verify_shelling_definition(c, perturbed).ok
            report.check("verifiersAgree", by_definition == verify_shelling_lemma(c, perturbed).ok)
            broken += not by_definition
    return broken


def cmd_selftest(
    n_max: int = 5,
    inject_fault: str | None = None,
    samples: int | None = None,
    seed: int | None = None,
) -> Report:
    """Run every verification for n = 0..n_max."""
    if inject_fault is not None:
        _choose(inject_fault, FAULTS, "fault")
    settings = get_settings()
    check_ceiling("selftest", n_max, min(settings.max_n_basis, settings.max_n_lemma, settings.max_n_homology))
    samples = settings.samples if samples is None else samples
    seed = settings.seed if seed is None else seed
    report = Report(
        "selftest",
        {"nMax": n_max, "injectFault": inject_fault, "samples": samples, "seed": seed},
    )
    rng = _rng(seed)
    summary = []
    for n in progress(range(n_max + 1), "selftest", total=n_max + 1):
        log(f"selftest n={n}")
        c = build_dn(n)
        _selftest_counting(report, n)
        betti = _selftest_structure(report, c, n, inject_fault)
        broken = _selftest_shelling(report, c, n, rng)
        cycles = Report("basis", {})
        cycles.results.update(basis=[], cycles=[], cycleChecks=[], crossPolytope=[], choiceIndependence=[])
        for j in range(1, n + 1):
            _basis_degree(cycles, n, j, True, samples, rng)
        for name, ok in cycles.checks.items():
            report.check(name, ok)
        if n >= 1:
            report.check("starAcyclic", is_acyclic(d_n_star(n)))
        summary.append(
            {
                "n": n,
                "faces": len(c),
                "fvector": f_vector(c),
                "betti": betti,
                "brokenOrders": broken,
                "cycles": len(cycles.results["cycles"]),
            }
        )
    report.results["summary"] = summary
    return report
