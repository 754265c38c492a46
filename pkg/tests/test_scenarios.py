import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmacheck.coeffs import ZZ
from gmacheck.modules import ModuleMap, compose_maps
from gmacheck.rings import WeightedRing
from gmacheck.scenarios import (
    Claim,
    Scenario,
    ScenarioError,
    TracePresentation,
    UnknownScenarioError,
    UnsupportedCoefficientError,
    catalog,
    list_scenarios,
    run_scenario,
)

CHEAP = [
    "ss-presentation",
    "gps-ring",
    "gps-irreducibles",
    "ng1-presentation",
    "ng1-c-basis",
    "ng1-e-complex",
    "ng2-matrix-factorization",
    "ng2-resolution-q",
    "ng2-ext-qq",
    "ng2-hom-modules",
    "ng2-ring-structure",
    "ng2-q-dual",
    "ng2-simple-1",
    "ng2-simple-2",
    "ng2-simple-3",
]


def test_catalog_shape():
    cat = catalog()
    assert list(cat.keys()) == [
        "ss-presentation",
        "gps-ring",
        "gps-irreducibles",
        "ng1-presentation",
        "ng1-c-basis",
        "ng1-e-complex",
        "ng1-acyclicity",
        "ng1-support",
        "ng2-matrix-factorization",
        "ng2-resolution-q",
        "ng2-ext-qq",
        "ng2-hom-modules",
        "ng2-ring-structure",
        "ng2-q-dual",
        "ng2-simple-1",
        "ng2-simple-2",
        "ng2-simple-3",
    ]
    counts = {sid: sc.claim_count for sid, sc in cat.items()}
    assert counts == {
        "ss-presentation": 3,
        "gps-ring": 6,
        "gps-irreducibles": 2,
        "ng1-presentation": 5,
        "ng1-c-basis": 1,
        "ng1-e-complex": 1,
        "ng1-acyclicity": 4,
        "ng1-support": 1,
        "ng2-matrix-factorization": 3,
        "ng2-resolution-q": 3,
        "ng2-ext-qq": 5,
        "ng2-hom-modules": 13,
        "ng2-ring-structure": 14,
        "ng2-q-dual": 3,
        "ng2-simple-1": 3,
        "ng2-simple-2": 3,
        "ng2-simple-3": 4,
    }
    assert sum(counts.values()) == 74
    for sc in cat.values():
        assert sc.paper_ref
        ids = [c.id for c in sc.claims]
        assert len(ids) == len(set(ids))
        for c in sc.claims:
            assert c.paper_ref


def test_list_scenarios_matches_catalog():
    rows = list_scenarios()
    cat = catalog()
    assert [r[0] for r in rows] == list(cat.keys())
    for sid, ref, n in rows:
        assert ref == cat[sid].paper_ref
        assert n == cat[sid].claim_count


def test_claim_kind_must_be_known():
    with pytest.raises(ScenarioError):
        Claim("x", "prove-everything", {}, "ref")


def test_undeclared_name_rejected():
    decl = {
        "ring": ("R", "zz", ["x"], [0], []),
        "frees": [("F", [0])],
        "maps": [("idF", "F", "F", [["1"]])],
        "complexes": [],
    }
    bad = Claim("c", "composition_identity",
                {"compose": ["idF", "ghost"], "equals": {"identity_times": "1"}}, "ref")
    with pytest.raises(ScenarioError):
        Scenario("s", "ref", decl, [bad])


def _ng1_env():
    return catalog()["ng1-presentation"].build("zz")


def test_trace_presentation_accepts_catalog_data():
    env = _ng1_env()
    tp = TracePresentation(env["__ring__"], env["jgamma"].entries, env["jdelta"].entries)
    w = [[str(e) for e in row] for row in tp.w]
    assert w == [
        ["-c2*d1 + c1*d2", "-b1*c1 + b2*c1 + a1*d1 - a2*d1"],
        ["b1*c2 - b2*c2 - a1*d2 + a2*d2", "c2*d1 - c1*d2"],
    ]


def test_trace_presentation_rejects_bad_determinant():
    env = _ng1_env()
    gamma = [[str(e) for e in row] for row in env["jgamma"].entries]
    gamma[0][0] = "2 + a1"
    with pytest.raises(ScenarioError):
        TracePresentation(env["__ring__"], gamma, env["jdelta"].entries)


def test_trace_presentation_rejects_bad_trace():
    ring = WeightedRing(["t1", "t2"], None, ZZ)
    gamma = [["1 + t1", "0"], ["0", "1 - t1"]]  # det != 1, trace = 2
    with pytest.raises(ScenarioError):
        TracePresentation(ring, gamma, gamma)


@pytest.mark.parametrize("sid", CHEAP)
def test_cheap_scenarios_pass(sid):
    reports = run_scenario(sid)
    assert [r.status for r in reports] == ["pass"] * len(reports)
    for r in reports:
        assert r.scenario == sid
        assert r.witness is None  # not requested on pass
        assert r.paper_ref
        assert r.elapsed_ms >= 0


def test_displayed_square_variant_is_refuted():
    # The shifted image u satisfies u^2 = (2t1 + t1^2) I; the variant with
    # the opposite quadratic sign that appears in print is exactly false.
    env = _ng1_env()
    ju = env["ju"]
    sq = compose_maps(ju, ju)
    good = ModuleMap.identity(ju.source).scale("2*t1 + t1^2")
    bad = ModuleMap.identity(ju.source).scale("2*t1 - t1^2")
    assert sq.equals_mod_relations(good)
    assert not sq.equals_mod_relations(bad)
    jv = env["jv"]
    sqv = compose_maps(jv, jv)
    assert sqv.equals_mod_relations(ModuleMap.identity(jv.source).scale("2*t2 + t2^2"))
    assert not sqv.equals_mod_relations(ModuleMap.identity(jv.source).scale("2*t2 - t2^2"))


def test_anticommutator_identity_as_displayed():
    env = _ng1_env()
    ju, jv = env["ju"], env["jv"]
    anti = compose_maps(ju, jv) + compose_maps(jv, ju)
    want = ModuleMap.identity(ju.source).scale("2*t3 - 2*t1 - 2*t2 - 2*t1*t2")
    assert anti.equals_mod_relations(want)


def test_hom_into_negative_twist_generator_degrees():
    reports = run_scenario("ng2-hom-modules", witnesses=True)
    by_id = {r.claim: r for r in reports}
    found = by_id["hom-q-lm1"].witness["found"]
    assert sorted(deg for _, deg in found) == [2, 2]
    found0 = by_id["hom-q-l1"].witness["found"]
    assert sorted(deg for _, deg in found0) == [0, 0]


def test_even_obstruction_reports():
    reports = run_scenario("ng2-ext-qq", witnesses=True)
    by_id = {r.claim: r for r in reports}
    assert by_id["odd-internal-ext-vanishes"].status == "pass"
    neg = by_id["even-obstruction-negative"]
    assert neg.status == "pass"
    assert neg.witness["generator"] is not None
    ann = neg.witness["annihilator"]["claimed"]
    assert ann == ["a0", "a1p", "b0", "b1"]


def test_override_falls_back_to_pin():
    reports = run_scenario("ng2-hom-modules", coeff="fp:5")
    by_id = {r.claim: r for r in reports}
    assert by_id["iota-cokernel"].coeff == "zz"  # integral-only claim keeps its pin
    assert by_id["end-l1-free"].coeff == "fp:5"
    assert all(r.status == "pass" for r in reports)


def test_qq_override():
    reports = run_scenario("gps-ring", coeff="qq")
    assert {r.coeff for r in reports} == {"qq"}
    assert all(r.status == "pass" for r in reports)


def test_unknown_scenario_raises():
    with pytest.raises(UnknownScenarioError):
        run_scenario("does-not-exist")


def test_small_prime_rejected():
    with pytest.raises(UnsupportedCoefficientError, match="p >= 5"):
        run_scenario("gps-ring", coeff="fp:3")
    # 2 never makes it past the coefficient layer (odd primes only)
    from gmacheck.coeffs import DomainError

    with pytest.raises(DomainError):
        run_scenario("gps-ring", coeff="fp:2")


def test_reports_deterministic_modulo_timing():
    runs = []
    for _ in range(2):
        dicts = [r.as_dict() for r in run_scenario("gps-ring", witnesses=True)]
        for d in dicts:
            d.pop("elapsed_ms")
        runs.append(dicts)
    assert runs[0] == runs[1]


def test_report_dict_shape():
    (r,) = run_scenario("ng1-c-basis")
    d = r.as_dict()
    assert set(d) == {"id", "kind", "status", "coeff", "elapsed_ms", "paper_ref"}
    assert d["id"] == "rank-four-basis"
    assert d["kind"] == "basis_of_quotient"
    assert d["status"] == "pass"
    assert d["coeff"] == "zz"


@settings(max_examples=4, deadline=None)
@given(st.sampled_from(["fp:5", "fp:7", "fp:11", "fp:13"]))
def test_cross_multiplication_any_odd_prime(coeff):
    reports = run_scenario("gps-ring", coeff=coeff)
    assert all(r.status == "pass" for r in reports)
    assert {r.coeff for r in reports} == {coeff}
