"""Catalog of machine-checked computations in weighted graded quotient rings.

Each scenario bundles one ring presentation, named free modules and matrices
over it, and a list of claims.  A claim is a small, fixed kind of check
(matrix factorization, complex property, homology vanishing, cyclic-quotient
matching, span equality, Hom-module generation, composition identities,
annihilators, quotient bases, 2x2 matrix identities) whose parameters refer
to the named objects.  ``run_scenario`` re-derives every claim from scratch
with exact arithmetic and returns one report per claim.

The matrices and expected values embedded below are transcriptions; nothing
in this module trusts them -- every claim recomputes its own verdict.
"""

import time

from .coeffs import ZZ, parse_domain
from .groebner import groebner_basis, normal_form, submodule_equal, syzygy_generators
from .modules import (
    ChainComplex,
    FPModule,
    FreeModule,
    InfinitePieceError,
    ModuleError,
    ModuleMap,
    adjoin_inverse,
    annihilator,
    compose_maps,
    hom_generators,
    homology_is_zero,
    homology_presentation,
    match_cyclic_quotient,
    syzygy_basis,
    verify_matrix_factorization,
)
from .rings import Polynomial, WeightedRing

__all__ = [
    "CLAIM_KINDS",
    "CheckReport",
    "Claim",
    "Scenario",
    "ScenarioError",
    "TracePresentation",
    "UnknownScenarioError",
    "UnsupportedCoefficientError",
    "catalog",
    "list_scenarios",
    "run_scenario",
]

CLAIM_KINDS = frozenset(
    {
        "matrix_factorization",
        "complex_is_complex",
        "homology_zero_at",
        "homology_matches_cyclic",
        "submodule_equality",
        "hom_generators_match",
        "composition_identity",
        "annihilator_equals",
        "basis_of_quotient",
        "identity_in_matrix_ring",
    }
)


class ScenarioError(ValueError):
    pass


class UnknownScenarioError(ScenarioError):
    pass


class UnsupportedCoefficientError(ScenarioError):
    pass


def _plain(x):
    """Tuples down to lists, recursively, so declarations compare by value."""
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    return x


# ---------------------------------------------------------------------------
# claim / report containers


class Claim:
    """One checkable statement inside a scenario.

    ``domains`` lists the coefficient kinds ("zz", "qq", "fp") under which
    the check is mathematically meaningful; ``pin`` names the concrete
    domain to fall back to when the requested override is not supported
    (catalog claims always carry a pin, so a full run under any coefficient
    choice never errors out).
    """

    def __init__(self, cid, kind, args, paper_ref, domains=("zz", "qq", "fp"), pin=None):
        if kind not in CLAIM_KINDS:
            raise ScenarioError("unknown claim kind %r" % (kind,))
        self.id = str(cid)
        self.kind = kind
        self.args = dict(args)
        self.paper_ref = paper_ref
        self.domains = tuple(domains)
        self.pin = pin

    def __repr__(self):
        return "<Claim %s:%s>" % (self.id, self.kind)

    def _key(self):
        return (self.id, self.kind, _plain(self.args), self.paper_ref,
                _plain(self.domains), self.pin)

    def __eq__(self, other):
        return isinstance(other, Claim) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)


class CheckReport:
    """Outcome of one claim: status pass/fail/error plus a witness payload."""

    def __init__(self, scenario, claim, kind, status, coeff, elapsed_ms, witness=None, paper_ref="", message=None):
        self.scenario = scenario
        self.claim = claim
        self.kind = kind
        self.status = status
        self.coeff = coeff
        self.elapsed_ms = elapsed_ms
        self.witness = witness
        self.paper_ref = paper_ref
        self.message = message

    def as_dict(self):
        out = {
            "id": self.claim,
            "kind": self.kind,
            "status": self.status,
            "coeff": self.coeff,
            "elapsed_ms": self.elapsed_ms,
            "paper_ref": self.paper_ref,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.message is not None:
            out["message"] = self.message
        return out

    def __repr__(self):
        return "<CheckReport %s/%s %s>" % (self.scenario, self.claim, self.status)


def _jsonable(x):
    if isinstance(x, Polynomial):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool, float)) or x is None:
        return x
    return repr(x)


# ---------------------------------------------------------------------------
# the trace presentation (two matrix images over the deformation quotient)


def _grid_parse(ring, grid):
    return [[ring.parse(e) if isinstance(e, str) else e for e in row] for row in grid]


def _raw_matmul(A, B):
    """Plain matrix product without normal-form reduction."""
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for t in range(1, k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


class TracePresentation:
    """Validated container for a rank-2 trace presentation.

    Holds the quotient ring, the two 2x2 matrix images gamma and delta, the
    shifted matrices u = gamma - (1+t1)I and v = delta - (1+t2)I, and the
    commutator matrix w = uv - vu computed without reduction.  Construction
    checks det = 1 and trace = 2 + 2*t_i for both images modulo the relation
    ideal, so an inconsistent transcription refuses to load.
    """

    def __init__(self, ring, gamma, delta, quotient=None):
        self.ring = ring
        self.gamma = _grid_parse(ring, gamma)
        self.delta = _grid_parse(ring, delta)
        for mat in (self.gamma, self.delta):
            if len(mat) != 2 or any(len(r) != 2 for r in mat):
                raise ScenarioError("matrix images must be 2x2")
        one = ring.one()
        self._check(self.gamma, ring.var("t1"), "gamma")
        self._check(self.delta, ring.var("t2"), "delta")
        self.u = self._shift(self.gamma, one + ring.var("t1"))
        self.v = self._shift(self.delta, one + ring.var("t2"))
        uv = _raw_matmul(self.u, self.v)
        vu = _raw_matmul(self.v, self.u)
        self.w = [[uv[i][j] - vu[i][j] for j in range(2)] for i in range(2)]
        self.quotient = quotient

    def _shift(self, mat, scalar):
        z = self.ring.zero()
        return [[mat[i][j] - (scalar if i == j else z) for j in range(2)] for i in range(2)]

    def _check(self, mat, t, label):
        ring = self.ring
        det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
        if not ring.nf(det - ring.one()).is_zero():
            raise ScenarioError("%s: determinant is not 1 modulo the relations" % label)
        tr = mat[0][0] + mat[1][1]
        want = ring.const(2) + t + t
        if not ring.nf(tr - want).is_zero():
            raise ScenarioError("%s: trace is not 2 + 2*t modulo the relations" % label)


# ---------------------------------------------------------------------------
# scenario container


_NAME_KEYS = {
    "maps",
    "complex",
    "transpose_of_maps",
    "presentations",
    "coker_of",
    "columns",
    "syzygies",
    "coker",
    "free",
    "modulo_image",
    "presenter",
    "resolution",
    "modulo",
    "square_of",
    "det_of",
    "trace_of",
    "anticommutator",
    "trace_of_product",
    "commutator",
    "equals_matrix",
    "compose",
    "zero_compositions",
    "triples",
    "products",
    "gamma",
    "delta",
    "map",
}


def _collect_names(node, key=None, out=None):
    if out is None:
        out = []
    if isinstance(node, dict):
        for k, v in node.items():
            if k == "scale_map" and isinstance(v, list) and v:
                _collect_names(v[0], k, out)
            else:
                _collect_names(v, k, out)
    elif isinstance(node, (list, tuple)):
        for v in node:
            _collect_names(v, key, out)
    elif isinstance(node, str) and key in _NAME_KEYS:
        out.append(node)
    return out


class Scenario:
    """A ring presentation, named objects over it, and claims about them.

    ``decl`` is plain data: ring = (name, coeff, vars, weights, relations),
    frees = [(name, twists)], maps = [(name, src, tgt, grid-of-strings)]
    where a grid may instead be ("transpose-of", other), and complexes =
    [(name, [map names])].  ``build`` realizes the declarations over a
    coefficient domain and memoizes the environment.
    """

    def __init__(self, sid, paper_ref, decl, claims):
        self.id = sid
        self.paper_ref = paper_ref
        self.decl = decl
        self.claims = list(claims)
        self._envs = {}
        names = {decl["ring"][0]}
        names.update(n for n, _ in decl.get("frees", ()))
        names.update(n for n, _, _, _ in decl.get("maps", ()))
        names.update(n for n, _ in decl.get("complexes", ()))
        self._names = names
        for claim in self.claims:
            for ref in _collect_names(claim.args):
                if ref not in names:
                    raise ScenarioError(
                        "claim %s/%s refers to undeclared name %r" % (sid, claim.id, ref)
                    )
        pins = []
        for claim in self.claims:
            if claim.pin and claim.pin not in pins:
                pins.append(claim.pin)
        self.default_coeffs = tuple(pins) or ("zz",)

    @property
    def claim_count(self):
        return len(self.claims)

    def build(self, coeff_text):
        if coeff_text in self._envs:
            return self._envs[coeff_text]
        rname, _, vnames, weights, relations = self.decl["ring"]
        ring = WeightedRing(vnames, weights, parse_domain(coeff_text), relations=relations)
        env = {"__ring__": ring, rname: ring}
        for name, twists in self.decl.get("frees", ()):
            env[name] = FreeModule.twists(ring, twists)
        for name, src, tgt, grid in self.decl.get("maps", ()):
            if isinstance(grid, tuple) and grid and grid[0] == "transpose-of":
                env[name] = env[grid[1]].transpose()
            else:
                env[name] = ModuleMap(env[src], env[tgt], grid)
        for name, map_names in self.decl.get("complexes", ()):
            env[name] = ChainComplex([env[m] for m in map_names])
        self._envs[coeff_text] = env
        return env

    def __repr__(self):
        return "<Scenario %s (%d claims)>" % (self.id, len(self.claims))

    def __eq__(self, other):
        return (
            isinstance(other, Scenario)
            and self.id == other.id
            and self.paper_ref == other.paper_ref
            and _plain(self.decl) == _plain(other.decl)
            and self.claims == other.claims
        )

    def __ne__(self, other):
        return not self.__eq__(other)


# ---------------------------------------------------------------------------
# shared evaluator helpers


def _zero_free(ring):
    return FreeModule(ring, [])


def _complex_data(env, args):
    """(maps, presentations) for the complex described by the claim args."""
    if "transpose_of_maps" in args:
        base = [env[m] for m in args["transpose_of_maps"]]
        maps = [d.transpose() for d in reversed(base)]
        return maps, [None] * (len(maps) + 1)
    if "hom_into_coker" in args:
        return _hom_into_coker(env, args["hom_into_coker"])
    maps = [env[m] for m in args["maps"]]
    pres = args.get("presentations")
    if pres is None:
        pres = [None] * (len(maps) + 1)
    else:
        pres = [env[p] if p else None for p in pres]
    return maps, pres


def _hom_into_coker(env, spec):
    """Apply Hom(-, coker(presenter)) to a free resolution.

    Term k becomes the stacked ambient with one presenter-target block per
    generator of the resolution term (coordinate (i, a) in degree
    qdeg_a - fdeg_i), presented blockwise by the presenter matrix; the
    differential against d_k is d_k-transpose tensor identity.  The returned
    chain is reversed so that homological position p corresponds to
    cohomological degree (number of maps) - p.
    """
    res = [env[m] for m in spec["resolution"]]
    presenter = env[spec["presenter"]]
    ring = presenter.ring
    qdeg = presenter.target.generator_degrees
    qsrc = presenter.source.generator_degrees
    g = len(qdeg)
    terms = [res[0].target] + [d.source for d in res]
    ambients, pres_maps = [], []
    for T in terms:
        fdeg = T.generator_degrees
        amb = FreeModule(ring, [qa - fi for fi in fdeg for qa in qdeg])
        src = FreeModule(ring, [qs - fi for fi in fdeg for qs in qsrc])
        z = ring.zero()
        grid = [[z] * src.rank for _ in range(amb.rank)]
        for i in range(len(fdeg)):
            for a in range(g):
                for s in range(len(qsrc)):
                    grid[i * g + a][i * len(qsrc) + s] = presenter.entries[a][s]
        ambients.append(amb)
        pres_maps.append(ModuleMap(src, amb, grid))
    maps_rev = []
    n = len(res)
    for k in range(n, 0, -1):
        d = res[k - 1]
        src_T, tgt_T = ambients[k - 1], ambients[k]
        z = ring.zero()
        grid = [[z] * src_T.rank for _ in range(tgt_T.rank)]
        for j in range(d.source.rank):
            for i in range(d.target.rank):
                for a in range(g):
                    grid[j * g + a][i * g + a] = d.entries[i][j]
        maps_rev.append(ModuleMap(src_T, tgt_T, grid))
    return maps_rev, list(reversed(pres_maps))


def _padded(maps, pres, positions):
    """Pad a chain with rank-0 ends so every requested position is interior."""
    ring = maps[0].ring
    left = 0 in positions
    right = len(maps) in positions
    if left:
        maps = [ModuleMap.zero(maps[0].target, _zero_free(ring))] + list(maps)
        pres = [None] + list(pres)
    if right:
        maps = list(maps) + [ModuleMap.zero(_zero_free(ring), maps[-1].source)]
        pres = list(pres) + [None]
    use_pres = pres if any(p is not None for p in pres) else None
    C = ChainComplex(maps, presentations=use_pres)
    return C, (1 if left else 0)


def _vectors_from(env, spec, ring):
    if "columns" in spec:
        return env[spec["columns"]].columns()
    if "syzygies" in spec:
        return syzygy_basis(env[spec["syzygies"]]).columns()
    if "vectors" in spec:
        return [tuple(ring.parse(e) for e in v) for v in spec["vectors"]]
    if "union" in spec:
        out = []
        for sub in spec["union"]:
            out.extend(_vectors_from(env, sub, ring))
        return out
    if "colon_by_scalar" in spec:
        inner = spec["colon_by_scalar"]
        vecs = _vectors_from(env, inner["of"], ring)
        rank = len(vecs[0])
        return _colon_by_scalar(ring, vecs, inner["scalar"], rank)
    raise ScenarioError("bad submodule description %r" % (sorted(spec),))


def _colon_by_scalar(ring, vecs, scalar, rank):
    """Generators of (span(vecs) : scalar) inside the rank-`rank` free module.

    Projects the syzygies of [scalar*e_1 .. scalar*e_rank | vecs | rel*e_i]
    onto their first block; the span of those projections together with the
    original generators is the colon module.
    """
    s = ring.parse(scalar) if isinstance(scalar, str) else scalar
    inputs = []
    for i in range(rank):
        e = [ring.zero()] * rank
        e[i] = s
        inputs.append(tuple(e))
    inputs.extend(tuple(v) for v in vecs)
    for rel in ring.relations:
        for i in range(rank):
            e = [ring.zero()] * rank
            e[i] = rel
            inputs.append(tuple(e))
    out = list(vecs)
    for row in syzygy_generators(inputs, ring=ring, rank=rank):
        head = tuple(row[:rank])
        if any(not p.is_zero() for p in head):
            out.append(head)
    return out


def _module_from(env, spec):
    if "free" in spec:
        return FPModule.free(env[spec["free"]])
    if "coker" in spec:
        return FPModule.coker(env[spec["coker"]])
    if "class_of" in spec:
        d = env[spec["modulo"]]
        amb = d.target
        vec = amb.element(spec["class_of"])
        deg = amb.element_degree(vec)
        return FPModule.subquotient(amb, [(vec, deg)], d.columns())
    raise ScenarioError("bad module description %r" % (sorted(spec),))


def _grid_strings(maps):
    return [[str(e.ring.nf(e)) for e in row] for row in maps.entries]


# ---------------------------------------------------------------------------
# claim evaluators: each returns (ok, witness_dict)


def _eval_matrix_factorization(env, args, ctx):
    left, right = env[args["left"]], env[args["right"]]
    ring = left.ring
    f = ring.parse(args["scalar"])
    ok = verify_matrix_factorization(left, right, f)
    return ok, {"scalar": args["scalar"], "shape": [left.target.rank, left.source.rank]}


def _eval_complex_is_complex(env, args, ctx):
    maps, pres = _complex_data(env, args)
    try:
        use_pres = pres if any(p is not None for p in pres) else None
        C = ChainComplex(maps, presentations=use_pres)
    except ModuleError as e:
        return False, {"error": str(e)}
    return True, {"ranks": [t.rank for t in C.ambients]}


def _eval_homology_zero_at(env, args, ctx):
    if "cross_domains" in args:
        verdicts = {}
        for dom in args["cross_domains"]:
            env_d = ctx["scenario"].build(dom)
            ok_d, wit_d = _homology_zero_core(env_d, args)
            verdicts[dom] = ok_d
            if not ok_d:
                return False, {"domains": verdicts, "witness": wit_d}
        return True, {"domains": verdicts}
    return _homology_zero_core(env, args)


def _homology_zero_core(env, args):
    maps, pres = _complex_data(env, args)
    positions = list(args["positions"])
    C, shift = _padded(maps, pres, positions)
    for p in positions:
        cert = homology_is_zero(C, p + shift)
        if not cert.ok:
            return False, {"position": p, "witness": _jsonable(cert.witness)}
    return True, {"positions": positions}


def _eval_homology_matches_cyclic(env, args, ctx):
    if "coker_of" in args:
        maps = [env[args["coker_of"]]]
        pres = [None, None]
        position = 0
    else:
        maps, pres = _complex_data(env, args)
        position = args["position"]
    C, shift = _padded(maps, pres, [position])
    H = homology_presentation(C, position + shift)
    D = ctx.get("max_degree") or 15
    ok, report = match_cyclic_quotient(H, args["ideal"], args["gen_degree"], D=D)
    return ok, _jsonable(report)


def _eval_submodule_equality(env, args, ctx):
    ring = env["__ring__"]
    ambient = env[args["module"]]
    left = _vectors_from(env, args["left"], ring)
    right = _vectors_from(env, args["right"], ring)
    ok, bad = submodule_equal(left, right, ring=ring, rank=ambient.rank)
    wit = {"rank": ambient.rank, "left_size": len(left), "right_size": len(right)}
    if not ok:
        wit["unmatched"] = _jsonable(bad)
    return ok, wit


def _stacked_zero_maps(M, N):
    """Vectors that are zero as maps: each target relation in each block."""
    F0 = M.ambient
    out = []
    rels = [list(v) for v in N.rels]
    g = N.ambient.rank
    z = N.ring.zero()
    for i in range(F0.rank):
        for col in rels:
            vec = [z] * (F0.rank * g)
            vec[i * g : (i + 1) * g] = col
            out.append(tuple(vec))
    return out


def _eval_hom_generators_match(env, args, ctx):
    ring = env["__ring__"]
    M = _module_from(env, args["source"])
    N = _module_from(env, args["target"])
    homs = hom_generators(M, N)
    wit = {"found": [(_jsonable(vec), deg) for vec, deg in homs]}
    if "count" in args and len(homs) != args["count"]:
        wit["expected_count"] = args["count"]
        return False, wit
    if "degrees" in args:
        if sorted(d for _, d in homs) != sorted(args["degrees"]):
            wit["expected_degrees"] = args["degrees"]
            return False, wit
    if "span" in args:
        expected = [tuple(ring.parse(e) for e in v) for v in args["span"]["vectors"]]
        computed = [list(vec) for vec, _ in homs]
        extra = _stacked_zero_maps(M, N) if args.get("modulo_target_presentation") else []
        ok, bad = submodule_equal(
            computed + extra, list(expected) + extra, ring=ring, rank=len(expected[0])
        )
        if not ok:
            wit["unmatched"] = _jsonable(bad)
            return False, wit
    if "piece_factors" in args:
        ok, detail = _piece_factors_ok(ring, args["piece_factors"])
        wit["piece"] = detail
        if not ok:
            return False, wit
    return True, wit


def _piece_factors_ok(ring, spec):
    """Check that every monomial of the given weight is (factor)*(weight 0).

    Valid when the listed factors are exactly the variables whose weight has
    the same sign as the target weight and each factor's weight equals it:
    any monomial of that weight must contain one of them, with a weight-0
    cofactor.
    """
    w = spec["weight"]
    factors = list(spec["factors"])
    same_sign = [n for n, wt in zip(ring.names, ring.weights) if wt and (wt > 0) == (w > 0)]
    detail = {"weight": w, "factors": factors, "same_sign_vars": same_sign}
    if w == 0 or sorted(same_sign) != sorted(factors):
        return False, detail
    for n in factors:
        if ring.weights[ring.names.index(n)] != w:
            return False, detail
    return True, detail


def _compose_chain(env, names):
    maps = [env[n] for n in names]
    acc = maps[0]
    for nxt in maps[1:]:
        acc = compose_maps(acc, nxt)
    return acc


def _identity_times(module, poly):
    return ModuleMap.identity(module).scale(poly)


def _eval_composition_identity(env, args, ctx):
    if "triples" in args:
        for names in args["triples"]:
            a, b, c = (env[n] for n in names)
            lhs = compose_maps(compose_maps(a, b), c)
            rhs = compose_maps(a, compose_maps(b, c))
            if lhs.entries != rhs.entries:
                return False, {"triple": names, "left": _grid_strings(lhs), "right": _grid_strings(rhs)}
        return True, {"triples": len(args["triples"])}
    if "zero_compositions" in args:
        for names in args["zero_compositions"]:
            got = _compose_chain(env, names)
            if not got.is_zero_mod_relations():
                return False, {"composition": names, "value": _grid_strings(got)}
        return True, {"checked": len(args["zero_compositions"])}
    cases = args.get("cases") or [args]
    for idx, case in enumerate(cases):
        lhs = _compose_chain(env, case["compose"])
        eq = case["equals"]
        if "map" in eq:
            rhs = env[eq["map"]]
        elif "scale_map" in eq:
            rhs = env[eq["scale_map"][0]].scale(eq["scale_map"][1])
        elif "identity_times" in eq:
            rhs = _identity_times(lhs.source, eq["identity_times"])
        elif eq.get("zero"):
            rhs = ModuleMap.zero(lhs.source, lhs.target)
        else:
            raise ScenarioError("bad equals description %r" % (sorted(eq),))
        if "modulo_image" in case:
            target = FPModule.coker(env[case["modulo_image"]])
            diff = lhs - rhs
            ok = all(target.contains_zero_class(col) for col in diff.columns())
        else:
            ok = lhs.equals_mod_relations(rhs)
        if not ok:
            return False, {"case": idx, "compose": case["compose"], "difference": _grid_strings(lhs - rhs)}
    return True, {"cases": len(cases)}


def _eval_annihilator_equals(env, args, ctx):
    ring = env["__ring__"]
    work = ring
    for s in args.get("invert", ()):
        work = adjoin_inverse(work, work.parse(s))
    spec = args["module"]
    if "coker" in spec and work is not ring:
        M = FPModule.coker(env[spec["coker"]].convert(work))
    else:
        M = _module_from(env, spec)
        if work is not ring:
            M = M.convert(work)
    expected = []
    if "ideal" in args:
        expected.extend(work.parse(s) for s in args["ideal"])
    if "ideal_from" in args:
        src = args["ideal_from"]
        for a, b in src.get("products", ()):
            prod = _raw_matmul(env[a].entries, env[b].entries)
            for row in prod:
                for e in row:
                    expected.append(ring.convert(e, work) if work is not ring else e)
        expected.extend(work.parse(s) for s in src.get("plus", ()))
    ann = annihilator(M)
    ok, bad = submodule_equal(list(ann), expected, ring=work, rank=1)
    wit = {"annihilator": [_jsonable(p) for p in ann]}
    if not ok:
        wit["unmatched"] = _jsonable(bad)
    return ok, wit


def _eval_basis_of_quotient(env, args, ctx):
    ring = env["__ring__"]
    if args.get("positive_pieces_vanish"):
        gens = [ring.parse(s) for s in args["ideal"]] + list(ring.relations)
        G = groebner_basis(gens, ring=ring)
        positive = [n for n, w in zip(ring.names, ring.weights) if w > 0]
        wit = {"positive_vars": positive, "gen_degree": args["gen_degree"]}
        if args["gen_degree"] >= 0:
            return False, wit
        killed = [n for n in positive if normal_form(ring.var(n), G).is_zero()]
        wit["killed"] = killed
        return sorted(killed) == sorted(positive), wit
    gens = list(ring.relations) if args.get("relations_only") else [ring.parse(s) for s in args["ideal"]]
    G = groebner_basis(gens, ring=ring)
    wit = {}
    for lead in args["lead_terms"]:
        p = ring.parse(lead)
        if normal_form(p, G) == p:
            wit["irreducible_lead"] = lead
            return False, wit
    basis = [ring.parse(b) for b in args["basis"]]
    reduced = [normal_form(b, G) for b in basis]
    if any(r != b for r, b in zip(reduced, basis)):
        wit["reducible_basis_element"] = next(
            args["basis"][i] for i in range(len(basis)) if reduced[i] != basis[i]
        )
        return False, wit
    module_vars = args["module_vars"]
    basis_strs = set(args["basis"])
    for v in module_vars:
        for i, b in enumerate(basis):
            prod = normal_form(ring.var(v) * b, G)
            for mono, _ in prod.terms.items():
                core = [0] * ring.nvars
                for vi, name in enumerate(ring.names):
                    if name in module_vars:
                        core[vi] = mono[vi]
                core_poly = ring.from_terms({tuple(core): 1})
                if str(core_poly) not in basis_strs:
                    wit["escapes"] = "%s * %s" % (v, args["basis"][i])
                    return False, wit
    return True, {"basis": args["basis"], "lead_terms": args["lead_terms"]}


def _eval_identity_in_matrix_ring(env, args, ctx):
    ring = env["__ring__"]
    if "presentation" in args:
        spec = args["presentation"]
        tp = TracePresentation(ring, env[spec["gamma"]].entries, env[spec["delta"]].entries)
        if "commutator_matrix" in spec:
            stored = env[spec["commutator_matrix"]].entries
            for i in range(2):
                for j in range(2):
                    if tp.w[i][j] != stored[i][j]:
                        return False, {"entry": [i, j], "computed": _jsonable(tp.w[i][j])}
        return True, {"trace_gamma": _jsonable(ring.nf(tp.gamma[0][0] + tp.gamma[1][1]))}
    if "det_of" in args:
        m = env[args["det_of"]].entries
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        diff = ring.nf(det - ring.parse(args["equals"]))
        return diff.is_zero(), {"det": _jsonable(ring.nf(det))}
    if "trace_of_product" in args:
        a, b = (env[n] for n in args["trace_of_product"])
        prod = compose_maps(a, b)
        tr = ring.nf(prod.entries[0][0] + prod.entries[1][1])
        diff = ring.nf(tr - ring.parse(args["equals"]))
        return diff.is_zero(), {"trace": _jsonable(tr)}
    if "square_of" in args:
        m = env[args["square_of"]]
        got = compose_maps(m, m)
    elif "anticommutator" in args:
        a, b = (env[n] for n in args["anticommutator"])
        got = compose_maps(a, b) + compose_maps(b, a)
    else:
        raise ScenarioError("bad matrix-ring identity %r" % (sorted(args),))
    want = _identity_times(got.source, args["equals"])
    ok = got.equals_mod_relations(want)
    wit = {"value": _grid_strings(got)}
    if ok and "refutes" in args:
        refuted = _identity_times(got.source, args["refutes"])
        if got.equals_mod_relations(refuted):
            return False, {"refuted_variant_also_holds": args["refutes"]}
        wit["refuted"] = args["refutes"]
    return ok, wit


_EVALUATORS = {
    "matrix_factorization": _eval_matrix_factorization,
    "complex_is_complex": _eval_complex_is_complex,
    "homology_zero_at": _eval_homology_zero_at,
    "homology_matches_cyclic": _eval_homology_matches_cyclic,
    "submodule_equality": _eval_submodule_equality,
    "hom_generators_match": _eval_hom_generators_match,
    "composition_identity": _eval_composition_identity,
    "annihilator_equals": _eval_annihilator_equals,
    "basis_of_quotient": _eval_basis_of_quotient,
    "identity_in_matrix_ring": _eval_identity_in_matrix_ring,
}


# ---------------------------------------------------------------------------
# running


def _claim_domain(claim, requested):
    if requested is None:
        return claim.pin or "zz"
    kind = requested.split(":", 1)[0]
    if kind in claim.domains:
        return requested
    if claim.pin is not None:
        return claim.pin
    raise UnsupportedCoefficientError(
        "claim %r does not support coefficients %r (supported kinds: %s)"
        % (claim.id, requested, ", ".join(claim.domains))
    )


def run_scenario(scenario_id, coeff=None, max_degree=None, witnesses=False):
    """Evaluate every claim of one scenario; one CheckReport per claim.

    ``coeff`` overrides the coefficient domain ("zz", "qq", "fp:<p>"); claims
    that do not support the override fall back to their pinned domain.  The
    catalog carries a standing assumption p >= 5 for prime fields.
    """
    sc = catalog().get(scenario_id)
    if sc is None:
        raise UnknownScenarioError("unknown scenario %r" % (scenario_id,))
    if coeff is not None:
        dom = parse_domain(coeff)
        if getattr(dom, "p", None) is not None and dom.p < 5:
            raise UnsupportedCoefficientError(
                "prime fields need p >= 5 here (got fp:%d)" % dom.p
            )
    reports = []
    for claim in sc.claims:
        domain_text = _claim_domain(claim, coeff)
        t0 = time.perf_counter()
        try:
            env = sc.build(domain_text)
            ctx = {"scenario": sc, "coeff": domain_text, "max_degree": max_degree}
            ok, wit = _EVALUATORS[claim.kind](env, claim.args, ctx)
            status = "pass" if ok else "fail"
            message = None
        except (ModuleError, InfinitePieceError, ScenarioError) as e:
            status, wit, message = "error", None, str(e)
        elapsed = int((time.perf_counter() - t0) * 1000)
        if status == "pass" and not witnesses:
            wit = None
        reports.append(
            CheckReport(
                sc.id, claim.id, claim.kind, status, domain_text, elapsed,
                witness=wit, paper_ref=claim.paper_ref, message=message,
            )
        )
    return reports


def list_scenarios():
    """The fixed catalog as (id, paper_ref, claim count) triples."""
    return [(sc.id, sc.paper_ref, sc.claim_count) for sc in catalog().values()]


# ---------------------------------------------------------------------------
# the catalog
#
# Shared matrix data for the non-generic-II hypersurface model: the lift
# matrices form a matrix factorization of f = a1p*b0 + a0*b1, and the same
# two shapes tile the periodic resolution at shifted twists.

_NG2_VARS = ["a0", "a1p", "b0", "b1", "c"]
_NG2_WEIGHTS = [0, 0, 2, 2, -2]
_NG2_F = "a1p*b0 + a0*b1"
_M_GRID = [["b0", "b1"], ["-a0", "a1p"]]
_N_GRID = [["a1p", "-b1"], ["a0", "b0"]]
_MT_GRID = [["b0", "-a0"], ["b1", "a1p"]]
_NT_GRID = [["a1p", "a0"], ["-b1", "b0"]]


def _ng2_ring_decl(name="S"):
    return (name, "zz", list(_NG2_VARS), list(_NG2_WEIGHTS), [_NG2_F])


def _sc_ss_presentation():
    decl = {
        "ring": ("P", "zz", ["X1", "X2", "X3"], [0, 0, 0], []),
        "frees": [("U", [0])],
        "maps": [
            ("idU", "U", "U", [["1"]]),
            ("zU", "U", "U", [["0"]]),
        ],
        "complexes": [],
    }
    claims = [
        Claim(
            "end-free-rank-1",
            "hom_generators_match",
            {"source": {"free": "U"}, "target": {"free": "U"}, "count": 1,
             "degrees": [0], "span": {"vectors": [["1"]]}},
            'supersingular block: endomorphisms of the unit object are scalars',
            pin="zz",
        ),
        Claim(
            "end-annihilator-zero",
            "annihilator_equals",
            {"module": {"free": "U"}, "ideal": []},
            'supersingular block: the unit object is faithful over three unweighted variables',
            pin="zz",
        ),
        Claim(
            "self-ext-vanishes",
            "homology_zero_at",
            {"maps": ["idU", "zU"], "positions": [1]},
            'supersingular block: no self-extensions of the projective generator',
            pin="zz",
        ),
    ]
    return Scenario(
        "ss-presentation",
        'supersingular case: formal power series on three variables, single simple object',
        decl,
        claims,
    )


def _sc_gps_ring():
    decl = {
        "ring": ("S", "zz", ["a0", "a1", "b", "c"], [0, 0, 2, -2], []),
        "frees": [("V1", [1]), ("V2", [-1])],
        "maps": [
            ("mb", "V2", "V1", [["b"]]),
            ("mc", "V1", "V2", [["c"]]),
        ],
        "complexes": [],
    }
    hom = lambda s, t, degs, piece=None: dict(
        {"source": {"free": s}, "target": {"free": t}, "count": 1,
         "degrees": degs, "span": {"vectors": [["1"]]}},
        **({"piece_factors": piece} if piece else {})
    )
    claims = [
        Claim("corner-11", "hom_generators_match", hom("V1", "V1", [0]),
              'generic principal series: diagonal entry is the weight-0 subring', pin="zz"),
        Claim("corner-22", "hom_generators_match", hom("V2", "V2", [0]),
              'generic principal series: diagonal entry is the weight-0 subring', pin="zz"),
        Claim("corner-12", "hom_generators_match",
              hom("V2", "V1", [-2], {"weight": 2, "factors": ["b"]}),
              'generic principal series: off-diagonal entry is b times the weight-0 subring', pin="zz"),
        Claim("corner-21", "hom_generators_match",
              hom("V1", "V2", [2], {"weight": -2, "factors": ["c"]}),
              'generic principal series: off-diagonal entry is c times the weight-0 subring', pin="zz"),
        Claim("cross-mult-down", "composition_identity",
              {"compose": ["mb", "mc"], "equals": {"identity_times": "b*c"}},
              'generic principal series: cross multiplication lands on b*c', pin="zz"),
        Claim("cross-mult-up", "composition_identity",
              {"compose": ["mc", "mb"], "equals": {"identity_times": "b*c"}},
              'generic principal series: cross multiplication lands on b*c', pin="zz"),
    ]
    return Scenario(
        "gps-ring",
        'generic principal series: graded matrix algebra with entries (R, Rb; Rc, R)',
        decl,
        claims,
    )


def _sc_gps_irreducibles():
    decl = {
        "ring": ("S", "zz", ["a0", "a1", "b", "c"], [0, 0, 2, -2], []),
        "frees": [
            ("Vst", [-1, 1]),
            ("W1", [-1, -1, 1, 1, 1]),
            ("W2", [1, -1, -1, -1, 1]),
        ],
        "maps": [
            ("N1", "W1", "Vst",
             [["1", "0", "0", "0", "0"], ["0", "b", "a0", "a1", "b*c"]]),
            ("N2", "W2", "Vst",
             [["0", "a0", "a1", "b*c", "c"], ["1", "0", "0", "0", "0"]]),
        ],
        "complexes": [],
    }
    claims = [
        Claim("principal-image", "homology_matches_cyclic",
              {"coker_of": "N1", "ideal": ["a0", "a1", "b"], "gen_degree": -1},
              'dual standard lattice modulo the first corner ideal: cyclic on the degree -1 vector',
              pin="fp:5"),
        Claim("special-image", "homology_matches_cyclic",
              {"coker_of": "N2", "ideal": ["a0", "a1", "c"], "gen_degree": 1},
              'dual standard lattice modulo the second corner ideal: cyclic on the degree 1 vector',
              pin="fp:5"),
    ]
    return Scenario(
        "gps-irreducibles",
        'generic principal series over the residue field: images of the two irreducibles',
        decl,
        claims,
    )


_NG1_VARS = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "t1", "t2", "t3"]
_NG1_RELS = [
    "a1 + a2 - 2*t1",
    "b1 + b2 - 2*t2",
    "a1 + a2 + a1*a2 - c1*c2",
    "b1 + b2 + b1*b2 - d1*d2",
    "a1 + a2 + b1 + b2 + a1*b1 + a2*b2 + c1*d2 + c2*d1 - 2*t3",
]

_ng1_grids_cache = None


def _ng1_grids():
    """String grids for the trace-presentation matrices and the 8-row chain.

    The free-module chain realizes right multiplication by a 2x2 matrix B on
    a 2x2 coordinate block as the 4x4 operator diag(B^T, B^T); the three
    chain matrices are horizontal/vertical assemblies of such blocks over
    products of the shifted images u and v.
    """
    global _ng1_grids_cache
    if _ng1_grids_cache is not None:
        return _ng1_grids_cache
    ring = WeightedRing(_NG1_VARS, None, ZZ)
    P = ring.parse
    ju = [[P("a1 - t1"), P("c1")], [P("c2"), P("a2 - t1")]]
    jv = [[P("b1 - t2"), P("d1")], [P("d2"), P("b2 - t2")]]
    gm1 = [[P("a1"), P("c1")], [P("c2"), P("a2")]]
    dm1 = [[P("b1"), P("d1")], [P("d2"), P("b2")]]

    def neg(A):
        return [[-e for e in row] for row in A]

    def op(B):
        # right multiplication on row-major 2x2 coordinates: diag(B^T, B^T)
        z = ring.zero()
        G = [[z] * 4 for _ in range(4)]
        for i in range(2):
            for k in range(2):
                for j in range(2):
                    G[2 * i + k][2 * i + j] = B[j][k]
        return G

    def hcat(*blocks):
        return [sum((blk[r] for blk in blocks), []) for r in range(len(blocks[0]))]

    def vcat(*blocks):
        return [row for blk in blocks for row in blk]

    juu = _raw_matmul(ju, ju)
    jvv = _raw_matmul(jv, jv)
    juv = _raw_matmul(ju, jv)
    jvu = _raw_matmul(jv, ju)
    D1 = hcat(op(ju), op(jv))
    D2 = vcat(hcat(op(jvu), op(neg(jvv))), hcat(op(neg(juu)), op(juv)))
    D3 = vcat(op(jv), op(ju))
    D1p = hcat(ju, jv)
    gd = _raw_matmul(gm1, dm1)
    dg = _raw_matmul(dm1, gm1)
    S = str
    strs = lambda G: [[S(e) for e in row] for row in G]
    _ng1_grids_cache = {
        "ju": strs(ju),
        "jv": strs(jv),
        "jw": strs([[juv[i][j] - jvu[i][j] for j in range(2)] for i in range(2)]),
        "gm1": strs(gm1),
        "dm1": strs(dm1),
        "D1": strs(D1),
        "D2": strs(D2),
        "D3": strs(D3),
        "D1p": strs(D1p),
        "support": [S(e) for row in gd for e in row] + [S(e) for row in dg for e in row]
        + ["t1", "t2", "t3"],
    }
    return _ng1_grids_cache


def _ng1_ring_decl():
    return ("A", "zz", list(_NG1_VARS), [0] * len(_NG1_VARS), list(_NG1_RELS))


def _sc_ng1_presentation():
    g = _ng1_grids()
    decl = {
        "ring": _ng1_ring_decl(),
        "frees": [("F2", [0, 0])],
        "maps": [
            ("jgamma", "F2", "F2", [["1 + a1", "c1"], ["c2", "1 + a2"]]),
            ("jdelta", "F2", "F2", [["1 + b1", "d1"], ["d2", "1 + b2"]]),
            ("ju", "F2", "F2", g["ju"]),
            ("jv", "F2", "F2", g["jv"]),
            ("jw", "F2", "F2", g["jw"]),
        ],
        "complexes": [],
    }
    claims = [
        Claim("data-validates", "identity_in_matrix_ring",
              {"presentation": {"gamma": "jgamma", "delta": "jdelta",
                                "commutator_matrix": "jw"}},
              'trace presentation: "five relations"; determinant one and trace 2 + 2t',
              pin="zz"),
        Claim("u-square", "identity_in_matrix_ring",
              {"square_of": "ju", "equals": "2*t1 + t1^2", "refutes": "2*t1 - t1^2"},
              'square of the shifted image: scalar, sign fixed against the displayed variant',
              pin="zz"),
        Claim("v-square", "identity_in_matrix_ring",
              {"square_of": "jv", "equals": "2*t2 + t2^2", "refutes": "2*t2 - t2^2"},
              'square of the second shifted image: scalar, sign fixed against the displayed variant',
              pin="zz"),
        Claim("anticommutator", "identity_in_matrix_ring",
              {"anticommutator": ["ju", "jv"],
               "equals": "2*t3 - 2*t1 - 2*t2 - 2*t1*t2"},
              'anticommutator of the shifted images: "uv + vu = 2(t3 - t1 - t2 - t1t2)"',
              pin="zz"),
        Claim("product-trace", "identity_in_matrix_ring",
              {"trace_of_product": ["jgamma", "jdelta"], "equals": "2 + 2*t3"},
              'trace of the product of the two images is 2 + 2t3',
              pin="zz"),
    ]
    return Scenario(
        "ng1-presentation",
        'non-generic case I: trace presentation with eleven variables and five relations',
        decl,
        claims,
    )


def _sc_ng1_c_basis():
    decl = {
        "ring": ("C", "zz", ["a1", "b1", "t1", "t2", "t3"], [0, 0, 0, 0, 0],
                 ["a1^2 - 2*t1*a1 - 2*t1", "b1^2 - 2*t2*b1 - 2*t2"]),
        "frees": [],
        "maps": [],
        "complexes": [],
    }
    claims = [
        Claim("rank-four-basis", "basis_of_quotient",
              {"relations_only": True, "lead_terms": ["a1^2", "b1^2"],
               "module_vars": ["a1", "b1"],
               "basis": ["1", "a1", "b1", "a1*b1"]},
              'quadratic quotient: "free module of rank 4, with basis" 1, a1, b1, a1b1',
              pin="zz"),
    ]
    return Scenario(
        "ng1-c-basis",
        'non-generic case I: the quadratic trace quotient is free of rank four',
        decl,
        claims,
    )


def _ng1_chain_decl():
    g = _ng1_grids()
    return {
        "ring": _ng1_ring_decl(),
        "frees": [("F4", [0, 0, 0, 0]), ("F8", [0] * 8), ("V2", [0, 0])],
        "maps": [
            ("D1", "F8", "F4", g["D1"]),
            ("D2", "F8", "F8", g["D2"]),
            ("D3", "F4", "F8", g["D3"]),
            ("D1p", "F4", "V2", g["D1p"]),
        ],
        "complexes": [],
    }


def _sc_ng1_e_complex():
    claims = [
        Claim("blocks-compose-to-zero", "complex_is_complex",
              {"maps": ["D1", "D2", "D3"]},
              'periodic resolution: the three block matrices compose to zero modulo the relations',
              pin="zz"),
    ]
    return Scenario(
        "ng1-e-complex",
        'non-generic case I: block-matrix image of the periodic resolution is a complex',
        _ng1_chain_decl(),
        claims,
    )


def _sc_ng1_acyclicity():
    claims = [
        Claim("homology-vanishes-integrally", "homology_zero_at",
              {"maps": ["D1", "D2", "D3"], "positions": [1, 2, 3]},
              'induced chain over the integers: homology vanishes in degrees 1, 2, 3',
              domains=("zz",), pin="zz"),
        Claim("homology-vanishes-mod-5", "homology_zero_at",
              {"maps": ["D1", "D2", "D3"], "positions": [1, 2, 3]},
              'induced chain over the prime field: homology vanishes in degrees 1, 2, 3',
              domains=("fp",), pin="fp:5"),
        Claim("coefficient-consistency", "homology_zero_at",
              {"maps": ["D1", "D2", "D3"], "positions": [1, 2, 3],
               "cross_domains": ["zz", "fp:5"]},
              'vanishing over the integers and over the prime field agree',
              domains=("zz",), pin="zz"),
        Claim("no-5-torsion", "submodule_equality",
              {"module": "V2",
               "left": {"colon_by_scalar": {"of": {"columns": "D1p"}, "scalar": "5"}},
               "right": {"columns": "D1p"}},
              'the degree-0 cokernel has no 5-torsion: colon by 5 returns the image',
              domains=("zz",), pin="zz"),
    ]
    return Scenario(
        "ng1-acyclicity",
        'non-generic case I: acyclicity of the induced chain, checked by computer algebra',
        _ng1_chain_decl(),
        claims,
    )


def _sc_ng1_support():
    g = _ng1_grids()
    decl = _ng1_chain_decl()
    decl["maps"] = decl["maps"] + [
        ("gm1", "F2s", "F2s", g["gm1"]),
        ("dm1", "F2s", "F2s", g["dm1"]),
    ]
    decl["frees"] = decl["frees"] + [("F2s", [0, 0])]
    claims = [
        Claim("support-equations", "annihilator_equals",
              {"module": {"coker": "D1p"},
               "invert": ["2", "t1 + 2", "t2 + 2", "t3 + 2"],
               "ideal_from": {"products": [["gm1", "dm1"], ["dm1", "gm1"]],
                              "plus": ["t1", "t2", "t3"]}},
              'after inverting 2 and t_i + 2: the cokernel is cut out by the entries of '
              '(gamma-1)(delta-1), (delta-1)(gamma-1) and t1, t2, t3',
              domains=("zz",), pin="zz"),
    ]
    return Scenario(
        "ng1-support",
        'non-generic case I: support of the degree-0 homology on the localized trace space',
        decl,
        claims,
    )


def _sc_ng2_matrix_factorization():
    decl = {
        "ring": ("S", "zz", list(_NG2_VARS), list(_NG2_WEIGHTS), []),
        "frees": [("F0", [1, -1]), ("F1", [-1, -1]), ("F2", [-1, -3])],
        "maps": [
            ("Mlift", "F1", "F0", [row[:] for row in _M_GRID]),
            ("Nlift", "F2", "F1", [row[:] for row in _N_GRID]),
        ],
        "complexes": [],
    }
    claims = [
        Claim("both-orders", "matrix_factorization",
              {"left": "Mlift", "right": "Nlift", "scalar": _NG2_F},
              'matrix factorization: both products equal (a1\'b0 + a0b1) times the identity',
              pin="zz"),
        Claim("det-left", "identity_in_matrix_ring",
              {"det_of": "Mlift", "equals": _NG2_F},
              'determinant of the first factor is the hypersurface equation', pin="zz"),
        Claim("det-right", "identity_in_matrix_ring",
              {"det_of": "Nlift", "equals": _NG2_F},
              'determinant of the second factor is the hypersurface equation', pin="zz"),
    ]
    return Scenario(
        "ng2-matrix-factorization",
        'non-generic case II: the two lift matrices form a matrix factorization',
        decl,
        claims,
    )


def _ng2_resolution_decl():
    return {
        "ring": _ng2_ring_decl(),
        "frees": [
            ("C0", [1, -1]), ("C1", [-1, -1]), ("C2", [-1, -3]),
            ("C3", [-3, -3]), ("C4", [-3, -5]), ("C5", [-5, -5]),
        ],
        "maps": [
            ("d1", "C1", "C0", [row[:] for row in _M_GRID]),
            ("d2", "C2", "C1", [row[:] for row in _N_GRID]),
            ("d3", "C3", "C2", [row[:] for row in _M_GRID]),
            ("d4", "C4", "C3", [row[:] for row in _N_GRID]),
            ("d5", "C5", "C4", [row[:] for row in _M_GRID]),
        ],
        "complexes": [("resQ", ["d1", "d2", "d3", "d4", "d5"])],
    }


def _sc_ng2_resolution_q():
    claims = [
        Claim("is-complex", "complex_is_complex",
              {"maps": ["d1", "d2", "d3", "d4", "d5"]},
              'periodic resolution: consecutive products vanish on the hypersurface', pin="zz"),
        Claim("interior-exact", "homology_zero_at",
              {"maps": ["d1", "d2", "d3", "d4", "d5"], "positions": [1, 2, 3, 4]},
              'periodic resolution: exact at every interior position', pin="zz"),
        Claim("dual-exact", "homology_zero_at",
              {"transpose_of_maps": ["d1", "d2", "d3", "d4", "d5"],
               "positions": [1, 2, 3, 4]},
              'transposed resolution exact: no extensions against the free module',
              pin="zz"),
    ]
    return Scenario(
        "ng2-resolution-q",
        'non-generic case II: twisted periodic resolution of the rank-one reflexive module',
        _ng2_resolution_decl(),
        claims,
    )


def _sc_ng2_ext_qq():
    # Graded self-extension vanishing follows the original argument: hom
    # into the negative twist is exact, the quotient by the inclusion of
    # that twist lives in negative degrees only, and the surviving internal
    # homology of hom-into-the-cokernel (the identity class of the matrix
    # factorization, at the even spots) is itself concentrated in negative
    # degrees.  Full internal exactness at the even positions is false and
    # the even-obstruction claims pin down the obstruction exactly.
    decl = _ng2_resolution_decl()
    decl["frees"] = decl["frees"] + [
        ("QE0", [-2, 0]), ("QE1", [0, 0]), ("QE2", [0, 2]),
        ("QE3", [2, 2]), ("QE4", [2, 4]), ("QE5", [4, 4]),
    ]
    decl["maps"] = decl["maps"] + [
        ("e5", "QE4", "QE5", [row[:] for row in _MT_GRID]),
        ("e4", "QE3", "QE4", [row[:] for row in _NT_GRID]),
        ("e3", "QE2", "QE3", [row[:] for row in _MT_GRID]),
        ("e2", "QE1", "QE2", [row[:] for row in _NT_GRID]),
        ("e1", "QE0", "QE1", [row[:] for row in _MT_GRID]),
    ]
    hom_q = {"resolution": ["d1", "d2", "d3", "d4", "d5"], "presenter": "d1"}
    claims = [
        Claim("ext-into-twist-vanishes", "homology_zero_at",
              {"maps": ["e5", "e4", "e3", "e2", "e1"], "positions": [1, 2, 3, 4]},
              'hom of the resolution into the negative twist is exact: extensions against '
              'the twist vanish, feeding the long exact sequence',
              pin="zz"),
        Claim("quotient-pieces-vanish", "basis_of_quotient",
              {"ideal": ["b0", "b1"], "positive_pieces_vanish": True, "gen_degree": -1},
              'the quotient by the canonical inclusion vanishes in degrees >= 0, so hom '
              'from every non-positive twist into it has no degree-0 part',
              pin="zz"),
        Claim("odd-internal-ext-vanishes", "homology_zero_at",
              dict(hom_into_coker=hom_q, positions=[2, 4]),
              'hom of the resolution into the cokernel: odd-degree self-extensions vanish '
              'outright', pin="zz"),
        Claim("even-obstruction-negative", "homology_matches_cyclic",
              dict(hom_into_coker=hom_q, position=3,
                   ideal=["a0", "a1p", "b0", "b1"], gen_degree=-2),
              'even internal self-extensions: cyclic on the identity class of the '
              'factorization, annihilated by all weight-positive data, degree -2 and below',
              pin="fp:5"),
        Claim("even-obstruction-periodic", "homology_matches_cyclic",
              dict(hom_into_coker=hom_q, position=1,
                   ideal=["a0", "a1p", "b0", "b1"], gen_degree=-4),
              'two steps up the periodic resolution the same obstruction recurs, shifted '
              'by the period twist', pin="fp:5"),
    ]
    return Scenario(
        "ng2-ext-qq",
        'non-generic case II: graded self-extensions of the reflexive module vanish',
        decl,
        claims,
    )


def _ng2_hom_decl():
    return {
        "ring": _ng2_ring_decl(),
        "frees": [
            ("L1f", [1]), ("Lm1f", [-1]), ("Qa", [1, -1]),
            ("C1h", [-1, -1]), ("Wk", [-1, -1, -1]),
        ],
        "maps": [
            ("d1", "C1h", "Qa", [row[:] for row in _M_GRID]),
            ("iota", "Lm1f", "Qa", [["0"], ["1"]]),
            ("Kmap", "Wk", "Qa", [["b0", "b1", "0"], ["-a0", "a1p", "1"]]),
        ],
        "complexes": [],
    }


def _sc_ng2_hom_modules():
    free_hom = lambda s, t, degs, piece=None: dict(
        {"source": {"free": s}, "target": {"free": t}, "count": 1,
         "degrees": degs, "span": {"vectors": [["1"]]}},
        **({"piece_factors": piece} if piece else {})
    )
    claims = [
        Claim("end-l1-free", "hom_generators_match", free_hom("L1f", "L1f", [0]),
              'endomorphisms of the positive generator: free of rank one', pin="zz"),
        Claim("end-lm1-free", "hom_generators_match", free_hom("Lm1f", "Lm1f", [0]),
              'endomorphisms of the negative generator: free of rank one', pin="zz"),
        Claim("hom-l1-lm1", "hom_generators_match",
              free_hom("L1f", "Lm1f", [2], {"weight": -2, "factors": ["c"]}),
              'maps from positive to negative twist: c times the weight-0 subring', pin="zz"),
        Claim("hom-lm1-l1", "hom_generators_match",
              free_hom("Lm1f", "L1f", [-2], {"weight": 2, "factors": ["b0", "b1"]}),
              'maps from negative to positive twist: spanned by b0 and b1 over weight 0', pin="zz"),
        Claim("hom-q-l1", "hom_generators_match",
              {"source": {"coker": "d1"}, "target": {"free": "L1f"}, "count": 2,
               "degrees": [0, 0],
               "span": {"vectors": [["a0", "b0"], ["-a1p", "b1"]]}},
              'maps from the cokernel to the positive twist: two generators in degree 0',
              pin="zz"),
        Claim("hom-q-lm1", "hom_generators_match",
              {"source": {"coker": "d1"}, "target": {"free": "Lm1f"}, "count": 2,
               "degrees": [2, 2],
               "span": {"vectors": [["a0", "b0"], ["-a1p", "b1"]]},
               "piece_factors": {"weight": -2, "factors": ["c"]}},
              'maps from the cokernel to the negative twist: c times the previous generators '
              'in the degree-0 part',
              pin="zz"),
        Claim("hom-lm1-q", "hom_generators_match",
              {"source": {"free": "Lm1f"}, "target": {"coker": "d1"}, "count": 2,
               "degrees": [-2, 0], "span": {"vectors": [["1", "0"], ["0", "1"]]},
               "modulo_target_presentation": True},
              'maps from the negative twist into the cokernel: generated in degrees -2 and 0',
              pin="zz"),
        Claim("hom-lm1-q-zero-classes", "submodule_equality",
              {"module": "Qa",
               "left": {"union": [{"columns": "d1"},
                                  {"vectors": [["b0", "-a0"], ["b1", "a1p"]]}]},
               "right": {"columns": "d1"}},
              'the two presentation columns are the zero map into the cokernel', pin="zz"),
        Claim("hom-l1-q", "hom_generators_match",
              {"source": {"free": "L1f"}, "target": {"coker": "d1"}, "count": 2,
               "degrees": [0, 2], "span": {"vectors": [["1", "0"], ["0", "1"]]},
               "modulo_target_presentation": True},
              'maps from the positive twist into the cokernel: generated in degrees 0 and 2',
              pin="zz"),
        Claim("hom-l1-q-relations", "submodule_equality",
              {"module": "Qa",
               "left": {"union": [{"columns": "d1"},
                                  {"vectors": [["b0*c", "-a0*c"], ["b1*c", "a1p*c"]]}]},
               "right": {"columns": "d1"}},
              'relations b0c*(first) = a0*(second) and b1c*(first) = -a1\'*(second) hold in the cokernel',
              pin="zz"),
        Claim("iota-injective", "annihilator_equals",
              {"module": {"class_of": ["0", "1"], "modulo": "d1"}, "ideal": []},
              'the canonical inclusion of the negative twist is injective', pin="zz"),
        Claim("iota-cokernel", "homology_matches_cyclic",
              {"coker_of": "Kmap", "ideal": ["b0", "b1"], "gen_degree": -1},
              'cokernel of the inclusion: positive twist modulo (b0, b1)',
              domains=("zz",), pin="zz"),
        Claim("coker-positive-pieces-vanish", "basis_of_quotient",
              {"ideal": ["b0", "b1"], "positive_pieces_vanish": True, "gen_degree": -1},
              'the quotient by (b0, b1) vanishes in all non-negative graded pieces', pin="zz"),
    ]
    return Scenario(
        "ng2-hom-modules",
        'non-generic case II: the three-by-three table of graded Hom modules',
        _ng2_hom_decl(),
        claims,
    )


def _sc_ng2_ring_structure():
    decl = _ng2_hom_decl()
    decl["maps"] = decl["maps"] + [
        ("phi12", "L1f", "Lm1f", [["c"]]),
        ("phi21_0", "Lm1f", "L1f", [["b0"]]),
        ("phi21_1", "Lm1f", "L1f", [["b1"]]),
        ("phi13_0", "Qa", "Lm1f", [["a0*c", "b0*c"]]),
        ("phi13_1", "Qa", "Lm1f", [["-a1p*c", "b1*c"]]),
        ("phi23_0", "Qa", "L1f", [["a0", "b0"]]),
        ("phi23_1", "Qa", "L1f", [["-a1p", "b1"]]),
        ("phi31", "Lm1f", "Qa", [["0"], ["1"]]),
        ("beta", "L1f", "Qa", [["1"], ["0"]]),
        ("phi32", "L1f", "Qa", [["0"], ["c"]]),
    ]

    def cases(*entries):
        return {"cases": [dict(e) for e in entries]}

    rs = 'composition table of the graded matrix algebra'
    claims = [
        Claim("lifts-well-defined", "composition_identity",
              {"zero_compositions": [["phi13_0", "d1"], ["phi13_1", "d1"],
                                     ["phi23_0", "d1"], ["phi23_1", "d1"]]},
              'maps out of the cokernel kill the presentation columns', pin="zz"),
        Claim("relation-1", "composition_identity",
              cases({"compose": ["phi12", "phi21_0"], "equals": {"identity_times": "b0*c"}},
                    {"compose": ["phi12", "phi21_1"], "equals": {"identity_times": "b1*c"}}),
              rs + ': phi12 phi21_i = b_i c', pin="zz"),
        Claim("relation-2", "composition_identity",
              cases({"compose": ["phi12", "phi23_0"], "equals": {"map": "phi13_0"}},
                    {"compose": ["phi12", "phi23_1"], "equals": {"map": "phi13_1"}}),
              rs + ': phi12 phi23_i = phi13_i', pin="zz"),
        Claim("relation-3", "composition_identity",
              cases({"compose": ["phi13_0", "phi31"], "equals": {"identity_times": "b0*c"}},
                    {"compose": ["phi13_1", "phi31"], "equals": {"identity_times": "b1*c"}}),
              rs + ': phi13_i phi31 = b_i c', pin="zz"),
        Claim("relation-4", "composition_identity",
              cases({"compose": ["phi21_0", "phi12"], "equals": {"identity_times": "b0*c"}},
                    {"compose": ["phi21_1", "phi12"], "equals": {"identity_times": "b1*c"}}),
              rs + ': phi21_i phi12 = b_i c', pin="zz"),
        Claim("relation-5", "composition_identity",
              cases({"compose": ["phi21_0", "phi13_0"], "equals": {"scale_map": ["phi23_0", "b0*c"]}},
                    {"compose": ["phi21_0", "phi13_1"], "equals": {"scale_map": ["phi23_1", "b0*c"]}},
                    {"compose": ["phi21_1", "phi13_0"], "equals": {"scale_map": ["phi23_0", "b1*c"]}},
                    {"compose": ["phi21_1", "phi13_1"], "equals": {"scale_map": ["phi23_1", "b1*c"]}}),
              rs + ': phi21_i phi13_j = b_i c phi23_j', pin="zz"),
        Claim("relation-6", "composition_identity",
              cases({"compose": ["phi23_0", "phi31"], "equals": {"map": "phi21_0"}},
                    {"compose": ["phi23_1", "phi31"], "equals": {"map": "phi21_1"}}),
              rs + ': phi23_i phi31 = phi21_i', pin="zz"),
        Claim("relation-7", "composition_identity",
              cases({"compose": ["phi31", "phi12"], "equals": {"map": "phi32"}}),
              rs + ': phi31 phi12 = phi32', pin="zz"),
        Claim("relation-8", "composition_identity",
              cases({"compose": ["phi31", "phi13_0"],
                     "equals": {"identity_times": "b0*c"}, "modulo_image": "d1"},
                    {"compose": ["phi31", "phi13_1"],
                     "equals": {"identity_times": "b1*c"}, "modulo_image": "d1"}),
              rs + ': phi31 phi13_i = b_i c on the cokernel', pin="zz"),
        Claim("relation-9", "composition_identity",
              cases({"compose": ["phi13_0", "phi32"], "equals": {"scale_map": ["phi12", "b0*c"]}},
                    {"compose": ["phi13_1", "phi32"], "equals": {"scale_map": ["phi12", "b1*c"]}},
                    {"compose": ["phi13_0", "beta"], "equals": {"scale_map": ["phi12", "a0"]}},
                    {"compose": ["phi13_1", "beta"], "equals": {"scale_map": ["phi12", "-a1p"]}}),
              rs + ': phi13_i phi32 = b_i c phi12 and phi13_i beta = (a0, -a1\') phi12', pin="zz"),
        Claim("relation-10", "composition_identity",
              cases({"compose": ["phi23_0", "phi32"], "equals": {"identity_times": "b0*c"}},
                    {"compose": ["phi23_1", "phi32"], "equals": {"identity_times": "b1*c"}},
                    {"compose": ["phi23_0", "beta"], "equals": {"identity_times": "a0"}},
                    {"compose": ["phi23_1", "beta"], "equals": {"identity_times": "-a1p"}}),
              rs + ': phi23_i phi32 = b_i c and phi23_i beta = (a0, -a1\')', pin="zz"),
        Claim("relation-11", "composition_identity",
              cases({"compose": ["phi32", "phi21_0"],
                     "equals": {"scale_map": ["phi31", "b0*c"]}, "modulo_image": "d1"},
                    {"compose": ["phi32", "phi21_1"],
                     "equals": {"scale_map": ["phi31", "b1*c"]}, "modulo_image": "d1"},
                    {"compose": ["beta", "phi21_0"],
                     "equals": {"scale_map": ["phi31", "a0"]}, "modulo_image": "d1"},
                    {"compose": ["beta", "phi21_1"],
                     "equals": {"scale_map": ["phi31", "-a1p"]}, "modulo_image": "d1"}),
              rs + ': phi32 phi21_i = b_i c phi31 and beta phi21_i = (a0, -a1\') phi31 on the cokernel',
              pin="zz"),
        Claim("relation-12", "composition_identity",
              cases({"compose": ["phi32", "phi23_0"],
                     "equals": {"identity_times": "b0*c"}, "modulo_image": "d1"},
                    {"compose": ["phi32", "phi23_1"],
                     "equals": {"identity_times": "b1*c"}, "modulo_image": "d1"},
                    {"compose": ["beta", "phi23_0"],
                     "equals": {"identity_times": "a0"}, "modulo_image": "d1"},
                    {"compose": ["beta", "phi23_1"],
                     "equals": {"identity_times": "-a1p"}, "modulo_image": "d1"}),
              rs + ': phi32 phi23_i = b_i c and beta phi23_i = (a0, -a1\') on the cokernel',
              pin="zz"),
        Claim("associativity-cross-check", "composition_identity",
              {"triples": [["phi12", "phi23_0", "phi31"],
                           ["phi12", "phi23_1", "phi31"],
                           ["phi23_0", "phi31", "phi12"],
                           ["phi31", "phi12", "phi21_0"],
                           ["phi21_0", "phi12", "phi21_1"],
                           ["phi13_0", "phi31", "phi13_1"]]},
              'both bracketings of triple composites give identical reduced matrices', pin="zz"),
    ]
    return Scenario(
        "ng2-ring-structure",
        'non-generic case II: the twelve composition relations of the endomorphism algebra',
        decl,
        claims,
    )


def _sc_ng2_q_dual():
    decl = {
        "ring": _ng2_ring_decl(),
        "frees": [("T0", [1, 1]), ("T1", [-1, 1]), ("T2", [-1, -1]), ("T3", [-3, -1])],
        "maps": [
            ("Mta", "T1", "T0", [row[:] for row in _MT_GRID]),
            ("Nta", "T2", "T1", [row[:] for row in _NT_GRID]),
            ("Mtb", "T3", "T2", [row[:] for row in _MT_GRID]),
        ],
        "complexes": [],
    }
    claims = [
        Claim("dual-chain-is-complex", "complex_is_complex",
              {"maps": ["Mta", "Nta", "Mtb"]},
              'transposed factorization tiles a complex at the dual twists', pin="zz"),
        Claim("kernel-generators", "submodule_equality",
              {"module": "T1", "left": {"syzygies": "Mta"}, "right": {"columns": "Nta"}},
              'kernel of the transpose is the image of the complementary transpose', pin="zz"),
        Claim("presentation-syzygies", "submodule_equality",
              {"module": "T2", "left": {"syzygies": "Nta"}, "right": {"columns": "Mtb"}},
              'syzygies of the kernel generators: the dual is presented by the transpose',
              pin="zz"),
    ]
    return Scenario(
        "ng2-q-dual",
        'non-generic case II: the dual of the reflexive module is the cokernel of the transpose',
        decl,
        claims,
    )


def _sc_ng2_simple_1():
    decl = {
        "ring": _ng2_ring_decl(),
        "frees": [
            ("E0", [1]),
            ("E1", [1, 1, -1, -1]),
            ("E2", [1, -1, -1, -1, -1]),
            ("E3", [-1, -1]),
            ("P1s", [-3, -1]),
            ("P2s", [-3, -1, -3, -1]),
            ("P3s", [-3, -1]),
        ],
        "maps": [
            ("m1", "E1", "E0", [["a0", "a1p", "-b1", "b0"]]),
            ("m2", "E2", "E1",
             [["-a1p", "-b1", "b0", "0", "0"],
              ["a0", "0", "0", "-b1", "b0"],
              ["0", "-a0", "0", "-a1p", "0"],
              ["0", "0", "-a0", "0", "-a1p"]]),
            ("m3", "E3", "E2",
             [["-b1", "b0"], ["a1p", "0"], ["0", "a1p"], ["-a0", "0"], ["0", "-a0"]]),
            ("p1", "P1s", "E1",
             [["0", "0"], ["0", "0"], ["b0", "-a0"], ["b1", "a1p"]]),
            ("p2", "P2s", "E2",
             [["0", "0", "0", "0"],
              ["b0", "-a0", "0", "0"],
              ["b1", "a1p", "0", "0"],
              ["0", "0", "b0", "-a0"],
              ["0", "0", "b1", "a1p"]]),
            ("p3", "P3s", "E3", [["b0", "-a0"], ["b1", "a1p"]]),
        ],
        "complexes": [],
    }
    chain = {"maps": ["m1", "m2", "m3"], "presentations": [None, "p1", "p2", "p3"]}
    claims = [
        Claim("translated-is-complex", "complex_is_complex", dict(chain),
              'translated resolution of the first simple object is a complex', pin="zz"),
        Claim("h0-matches", "homology_matches_cyclic",
              dict(chain, position=0, ideal=["a0", "a1p", "b0", "b1"], gen_degree=-1),
              'degree-0 homology: polynomial ring on c, generator in degree -1',
              pin="fp:5"),
        Claim("higher-vanishes", "homology_zero_at",
              dict(chain, positions=[1, 2]),
              'higher homology of the translated resolution vanishes', pin="zz"),
    ]
    return Scenario(
        "ng2-simple-1",
        'non-generic case II: translated projective resolution of the first simple object',
        decl,
        claims,
    )


def _sc_ng2_simple_2():
    decl = {
        "ring": _ng2_ring_decl(),
        "frees": [
            ("G0", [-1]),
            ("G1", [1, -1, -1]),
            ("G2", [1, 1]),
            ("G3", [-1, 1]),
            ("G4", [-1, -1]),
            ("Q1s", [-3, -1]),
            ("Q4s", [-3, -1]),
        ],
        "maps": [
            ("n1", "G1", "G0", [["c", "-a1p", "-a0"]]),
            ("n2", "G2", "G1", [["a1p", "a0"], ["c", "0"], ["0", "c"]]),
            ("n3", "G3", "G2", [["b0", "-a0"], ["b1", "a1p"]]),
            ("n4", "G4", "G3", [["a1p", "a0"], ["-b1", "b0"]]),
            ("q1", "Q1s", "G1", [["0", "0"], ["b0", "-a0"], ["b1", "a1p"]]),
            ("q4", "Q4s", "G4", [["b0", "-a0"], ["b1", "a1p"]]),
        ],
        "complexes": [],
    }
    chain = {"maps": ["n1", "n2", "n3", "n4"],
             "presentations": [None, "q1", None, None, "q4"]}
    claims = [
        Claim("translated-is-complex", "complex_is_complex", dict(chain),
              'translated resolution of the second simple object is a complex', pin="zz"),
        Claim("h0-matches", "homology_matches_cyclic",
              dict(chain, position=0, ideal=["a0", "a1p", "c"], gen_degree=1),
              'degree-0 homology: polynomial ring on b0, b1, generator in degree 1',
              pin="fp:5"),
        Claim("higher-vanishes", "homology_zero_at",
              dict(chain, positions=[1, 2, 3]),
              'higher homology of the translated resolution vanishes', pin="zz"),
    ]
    return Scenario(
        "ng2-simple-2",
        'non-generic case II: translated projective resolution of the second simple object',
        decl,
        claims,
    )


def _sc_ng2_simple_3():
    decl = {
        "ring": _ng2_ring_decl(),
        "frees": [
            ("H0", [-1, -1]),
            ("H1", [-1, -1]),
            ("H2", [-1, -1]),
            ("H3", [-1, -1, -1, -1]),
            ("H4", [-1, -1]),
            ("R0s", [-3, -1]),
            ("R3s", [-3, -1]),
        ],
        "maps": [
            ("k1", "H1", "H0", [["1", "0"], ["0", "1"]]),
            ("k2", "H2", "H1", [["b0*c", "-a0"], ["b1*c", "a1p"]]),
            ("k3", "H3", "H2",
             [["a1p", "a0", "a1p", "a0"],
              ["-b1*c", "b0*c", "-b1*c", "b0*c"]]),
            ("k4", "H4", "H3",
             [["1", "0"], ["0", "1"], ["-1", "0"], ["0", "-1"]]),
            ("r0", "R0s", "H0", [["b0", "-a0"], ["b1", "a1p"]]),
            ("r3", "R3s", "H3",
             [["0", "0"], ["0", "0"], ["b0", "-a0"], ["b1", "a1p"]]),
        ],
        "complexes": [],
    }
    chain = {"maps": ["k1", "k2", "k3", "k4"],
             "presentations": ["r0", None, None, "r3", None]}
    claims = [
        Claim("translated-is-complex", "complex_is_complex", dict(chain),
              'translated resolution of the third simple object is a complex', pin="zz"),
        Claim("h0-vanishes", "homology_zero_at", dict(chain, positions=[0]),
              'degree-0 homology of the third translated resolution vanishes',
              domains=("zz",), pin="zz"),
        Claim("h1-matches", "homology_matches_cyclic",
              dict(chain, position=1, ideal=["a0", "a1p", "c"], gen_degree=3),
              'degree-1 homology: cyclic with generator in degree 3 and annihilator (a0, a1\', c)',
              pin="fp:5"),
        Claim("h2-h3-vanish-integrally", "homology_zero_at",
              dict(chain, positions=[2, 3]),
              'degrees 2 and 3 vanish over the integers, checked by computer algebra',
              domains=("zz",), pin="zz"),
    ]
    return Scenario(
        "ng2-simple-3",
        'non-generic case II: translated projective resolution of the third simple object',
        decl,
        claims,
    )


_catalog_cache = None


def catalog():
    """The fixed scenario catalog, keyed by id, in presentation order."""
    global _catalog_cache
    if _catalog_cache is None:
        builders = [
            _sc_ss_presentation,
            _sc_gps_ring,
            _sc_gps_irreducibles,
            _sc_ng1_presentation,
            _sc_ng1_c_basis,
            _sc_ng1_e_complex,
            _sc_ng1_acyclicity,
            _sc_ng1_support,
            _sc_ng2_matrix_factorization,
            _sc_ng2_resolution_q,
            _sc_ng2_ext_qq,
            _sc_ng2_hom_modules,
            _sc_ng2_ring_structure,
            _sc_ng2_q_dual,
            _sc_ng2_simple_1,
            _sc_ng2_simple_2,
            _sc_ng2_simple_3,
        ]
        out = {}
        for build in builders:
            sc = build()
            if sc.id in out:
                raise ScenarioError("duplicate scenario id %r" % (sc.id,))
            out[sc.id] = sc
        _catalog_cache = out
    return _catalog_cache
