"""Randomized cross-validation campaigns (the ``proptest`` verb).

Each case draws a fresh deterministic generator from the campaign seed,
builds an input in one of three families, and checks every applicable
identity: closed forms against the general algorithms, the two general
Drazin routes against each other, defining equations, index and
minimal-polynomial predictions, and the product identities.  A failure
becomes a report row; an empty failure list is the pass signal.

The report deliberately contains no timing, so byte-identical reruns with
the same seed stay byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closedform import (
    DoubleStarCaseTag,
    classify_double_star,
    d_linked_drazin,
    d_linked_group,
    d_linked_mp,
    double_star_drazin,
    double_star_group,
    double_star_mp,
    minimal_polynomial_prediction,
)
from .field import QI_CONJ, QI_IDENT, QQ
from .geninv import (
    cline_product_drazin,
    drazin_equations,
    drazin_inverse,
    drazin_via_core_nilpotent,
    group_inverse,
    moore_penrose,
    penrose_equations,
)
from .graphs import build_d_linked, build_double_star
from .jsonio import d_linked_to_json, double_star_to_json, matrix_to_json
from .matrix import characteristic_polynomial
from .polynomial import Polynomial
from .randgen import case_rng, random_d_linked, random_double_star, random_matrix

FAMILIES = ("double-star", "d-linked", "general")

_FIELDS = (QQ, QI_CONJ, QI_IDENT)

_STAR_TAGS = (
    DoubleStarCaseTag.GROUP_INVERTIBLE,
    DoubleStarCaseTag.BOTH_ZERO,
    DoubleStarCaseTag.FIRST_NONZERO_SECOND_ZERO,
    DoubleStarCaseTag.NILPOTENT_CASE,
    DoubleStarCaseTag.MIRRORED,
)

_DLINKED_MODES = ("group", "zero_links", "mp", "mixed")


@dataclass
class CampaignResult:
    """Outcome of a campaign run; ``failures`` is empty on success."""

    cases_run: int
    seed: int
    families: tuple[str, ...]
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "cases_run": self.cases_run,
            "seed": self.seed,
            "families": list(self.families),
            "failures": self.failures,
        }


class _Recorder:
    def __init__(self, failures: list[dict], case_index: int, family: str, seed_str: str):
        self.failures = failures
        self.case_index = case_index
        self.family = family
        self.seed_str = seed_str
        self.spec_json: dict | None = None

    def check(self, name: str, expected: object, got: object) -> bool:
        if expected == got:
            return True
        self.failures.append(
            {
                "case": self.case_index,
                "family": self.family,
                "seed": self.seed_str,
                "spec": self.spec_json,
                "check": name,
                "expected": repr(expected),
                "got": repr(got),
            }
        )
        return False

    def ensure(self, name: str, condition: bool, detail: str = "") -> bool:
        if condition:
            return True
        self.failures.append(
            {
                "case": self.case_index,
                "family": self.family,
                "seed": self.seed_str,
                "spec": self.spec_json,
                "check": name,
                "expected": "true",
                "got": detail or "false",
            }
        )
        return False


def _drazin_triple(result) -> tuple:
    return (result.inverse, result.index, result.min_poly)


def _check_double_star(rng, rec: _Recorder) -> None:
    cfg = _FIELDS[rng.randrange(len(_FIELDS))]
    target = _STAR_TAGS[rng.randrange(len(_STAR_TAGS))]
    spec = random_double_star(rng, cfg, target, m_range=(1, 5), n_range=(1, 5))
    rec.spec_json = double_star_to_json(spec)

    case = classify_double_star(spec)
    rec.check("classification", target.value, case.tag.value)

    m = build_double_star(spec)
    closed = double_star_drazin(spec)
    gen = drazin_inverse(m)
    cn = drazin_via_core_nilpotent(m)
    rec.check("drazin_closed_vs_minpoly_route", _drazin_triple(closed), _drazin_triple(gen))
    rec.check("drazin_closed_vs_core_nilpotent", _drazin_triple(closed), _drazin_triple(cn))
    eqs = drazin_equations(m, closed.inverse, closed.index)
    rec.ensure("drazin_equations", all(eqs.values()), repr(eqs))

    if case.tag is not DoubleStarCaseTag.GROUP_INVERTIBLE:
        rec.check("min_poly_prediction", minimal_polynomial_prediction(spec), gen.min_poly)
    if case.tag is DoubleStarCaseTag.NILPOTENT_CASE:
        rec.ensure("nilpotent_m4_nonzero", not (m**4).is_zero(), "M^4 == 0")
        rec.ensure("nilpotent_m5_zero", (m**5).is_zero(), "M^5 != 0")

    group_closed = double_star_group(spec)
    group_gen = group_inverse(m)
    rec.check("group_existence", group_closed.exists, group_gen.exists)
    if group_closed.exists and group_gen.exists:
        rec.check("group_matrix", group_closed.matrix, group_gen.matrix)

    mp_closed, _ = double_star_mp(spec)
    mp_gen = moore_penrose(m)
    rec.check("mp_existence", mp_closed.exists, mp_gen.exists)
    if mp_closed.exists and mp_gen.exists:
        rec.check("mp_matrix", mp_closed.matrix, mp_gen.matrix)
        peqs = penrose_equations(m, mp_closed.matrix)
        rec.ensure("penrose_equations", all(peqs.values()), repr(peqs))


def _check_d_linked(rng, rec: _Recorder) -> None:
    cfg = _FIELDS[rng.randrange(len(_FIELDS))]
    mode = _DLINKED_MODES[rng.randrange(len(_DLINKED_MODES))]

    if mode == "zero_links":
        spec = random_d_linked(
            rng, cfg, "zero_links", base_nil_index=rng.randint(0, 3)
        )
    elif mode == "mp":
        spec = random_d_linked(rng, cfg, "free")
    else:
        spec = random_d_linked(rng, cfg, mode)
    rec.spec_json = d_linked_to_json(spec)

    m, _, _ = build_d_linked(spec)
    products = spec.link_products()

    if mode == "zero_links":
        result, predicted = d_linked_drazin(spec)
        rec.check("index_prediction", predicted, result.index)
        cn = drazin_via_core_nilpotent(m)
        rec.check("drazin_routes", _drazin_triple(result), _drazin_triple(cn))
    else:
        closed = d_linked_group(spec)
        gen = group_inverse(m)
        rec.check("group_existence", closed.exists, gen.exists)
        expected_exists = all(bool(p) for p in products)
        rec.check("group_existence_criterion", expected_exists, closed.exists)
        if closed.exists and gen.exists:
            rec.check("group_matrix", closed.matrix, gen.matrix)
            eqs = drazin_equations(m, closed.matrix, 1)
            rec.ensure("group_equations", all(eqs.values()), repr(eqs))
        elif closed.offending_stars is not None:
            expected_dead = tuple(i + 1 for i, p in enumerate(products) if not p)
            rec.check("offending_stars", expected_dead, closed.offending_stars)

    mp_closed = d_linked_mp(spec)
    mp_gen = moore_penrose(m)
    rec.check("mp_existence", mp_closed.exists, mp_gen.exists)
    if mp_closed.exists and mp_gen.exists:
        rec.check("mp_matrix", mp_closed.matrix, mp_gen.matrix)
        peqs = penrose_equations(m, mp_closed.matrix)
        rec.ensure("penrose_equations", all(peqs.values()), repr(peqs))


def _min_poly_ratio_ok(p: Polynomial, q: Polynomial) -> bool:
    return p == q or p == q.shifted(1) or q == p.shifted(1)


def _check_general(rng, rec: _Recorder) -> None:
    cfg = _FIELDS[rng.randrange(len(_FIELDS))]
    size = rng.randint(1, 5)
    a = random_matrix(rng, cfg, size)
    rec.spec_json = matrix_to_json(a)

    d1 = drazin_inverse(a)
    d2 = drazin_via_core_nilpotent(a)
    rec.check("drazin_routes", _drazin_triple(d1), _drazin_triple(d2))
    eqs = drazin_equations(a, d1.inverse, d1.index)
    rec.ensure("drazin_equations", all(eqs.values()), repr(eqs))

    grp = group_inverse(a)
    rec.check("group_exists_iff_small_index", d1.index <= 1, grp.exists)
    if grp.exists:
        rec.check("group_equals_drazin", d1.inverse, grp.matrix)

    mp = moore_penrose(a)
    if mp.exists:
        peqs = penrose_equations(a, mp.matrix)
        rec.ensure("penrose_equations", all(peqs.values()), repr(peqs))
    else:
        rec.ensure("mp_reason_present", bool(mp.reason), "missing reason")

    psi = d1.min_poly
    rec.ensure("min_poly_annihilates", psi.eval_matrix(a).is_zero(), "psi(A) != 0")
    delta = characteristic_polynomial(a)
    rec.ensure("min_poly_divides_char_poly", psi.divides(delta), f"{psi!r} | {delta!r}")

    b = random_matrix(rng, cfg, size)
    ab = a * b
    ba = b * a
    dab = drazin_inverse(ab)
    dba = drazin_inverse(ba)
    rec.ensure(
        "product_index_gap",
        abs(dab.index - dba.index) <= 1,
        f"i(AB)={dab.index}, i(BA)={dba.index}",
    )
    rec.ensure(
        "product_min_poly_ratio",
        _min_poly_ratio_ok(dab.min_poly, dba.min_poly),
        f"{dab.min_poly!r} vs {dba.min_poly!r}",
    )
    rec.check("cline_product", dab.inverse, cline_product_drazin(a, b))

    k = d1.index
    if k >= 1:
        rec.ensure(
            "power_group_exists_at_index",
            group_inverse(a**k).exists,
            f"(A^{k})# missing",
        )
        for j in range(1, k):
            rec.ensure(
                "power_group_missing_below_index",
                not group_inverse(a**j).exists,
                f"(A^{j})# exists but i(A)={k}",
            )


_CHECKERS = {
    "double-star": _check_double_star,
    "d-linked": _check_d_linked,
    "general": _check_general,
}


def run_campaign(cases: int, seed: int, family: str | None = None) -> CampaignResult:
    """Run ``cases`` checks; families interleave unless one is pinned."""
    if cases < 0:
        raise ValueError("cases must be nonnegative")
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    families = (family,) if family else FAMILIES
    result = CampaignResult(cases_run=cases, seed=seed, families=families)
    for i in range(cases):
        fam = family if family else FAMILIES[i % len(FAMILIES)]
        seed_str = f"{seed}:{fam}:{i}"
        rng = case_rng(seed, fam, i)
        rec = _Recorder(result.failures, i, fam, seed_str)
        _CHECKERS[fam](rng, rec)
    return result
