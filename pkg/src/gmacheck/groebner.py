"""Groebner engine for ideals and submodules of graded free modules.

One engine covers all four coefficient/field configurations:

* over a field: Buchberger's algorithm with sugar pair selection, the
  coprime-lead (product) criterion restricted to pure single-position
  inputs (where it is valid), and a conservative chain criterion that only
  cites pairs whose S-elements were actually reduced;
* over the integers: strong Groebner bases in the Adams--Loustaunau style,
  completing with both S-polynomials (lcm of lead coefficients) and
  G-polynomials (Bezout gcd of lead coefficients), with floor-mod strong
  reduction (residues in [0, lc)).  No S-pair pruning is applied over ZZ.

Module elements are dictionaries (position, monomial) -> coefficient under
a position-over-term order with ascending position priority: a term in a
lower position is greater.  Ideals are the rank-1 case.

The engine tracks representation vectors (cofactors over the input
generators) through completion and inter-reduction, which yields:

* membership certificates that re-multiply exactly;
* syzygies: every pair whose S/G-element reduces to zero contributes a
  syzygy of the basis, mapped back to input coordinates through the
  representation matrix; input redundancies contribute the rows of
  I - Q.R where Q divides the inputs by the final basis and R expresses
  the basis over the inputs.  In syzygy mode every pair is processed
  (criteria are disabled) so the recorded reductions generate the whole
  syzygy module.
"""

import heapq
from collections import namedtuple

from . import cache as _cache
from .coeffs import xgcd
from .rings import (
    Polynomial,
    RingError,
    mono_degree,
    mono_div,
    mono_lcm,
    mono_mul,
)

ModuleOrder = namedtuple("ModuleOrder", ["base", "position_rule"])

POSITION_RULE = "position-over-term, ascending index priority"


class GroebnerError(RingError):
    pass


# ---------------------------------------------------------------------------
# vecdict helpers: module element = dict[(pos, mono)] -> coefficient


def _vec_from_polys(polys):
    vec = {}
    for pos, p in enumerate(polys):
        if p is None:
            continue
        for m, c in p.terms.items():
            vec[(pos, m)] = c
    return vec


def _vec_to_polys(ring, rank, vec):
    rows = [{} for _ in range(rank)]
    for (pos, m), c in vec.items():
        rows[pos][m] = c
    return tuple(Polynomial(ring, r) for r in rows)


def _vec_scale(dom, vec, c):
    out = {}
    for k, v in vec.items():
        nv = dom.mul(v, c)
        if nv != 0:
            out[k] = nv
    return out


def _vec_axpy(dom, target, c, shift, src):
    """target += c * x^shift * src (in place)."""
    for (p, m), v in src.items():
        key = (p, mono_mul(shift, m))
        nv = dom.add(target.get(key, 0), dom.mul(c, v))
        if nv == 0:
            target.pop(key, None)
        else:
            target[key] = nv


class _Rev:
    """Max-heap adapter for heapq."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return self.key > other.key


# ---------------------------------------------------------------------------


class _Engine:
    def __init__(self, ring, rank, want_syzygies):
        self.ring = ring
        self.rank = rank
        self.dom = ring.domain
        self.field = ring.domain.is_field
        self.syz_mode = want_syzygies
        self.basis = []         # vecdicts
        self.reps = []          # vecdicts over input coords (idx, mono) -> coeff
        self.leads = []         # (pos, mono, coeff)
        self.sugars = []
        self.single_pos = []    # element supported on a single position?
        self.by_pos = {}        # pos -> list of basis indices (live reducers)
        self.pairs = []         # heap
        self.treated = set()    # reduced pairs (for the chain criterion)
        self.pair_syzygies = []  # G-coordinate syzygy dicts

    def term_key(self, term):
        pos, m = term
        return (-pos, self.ring.mono_key(m))

    # -- reduction ----------------------------------------------------------

    def _find_reducer(self, pos, mono, coeff, skip=None):
        for k in self.by_pos.get(pos, ()):
            if k == skip:
                continue
            gpos, gmono, gc = self.leads[k]
            if mono_div(mono, gmono) is None:
                continue
            if self.field:
                return k
            q = coeff // gc
            if q != 0:
                return k
        return None

    def reduce_vec(self, vec, skip=None):
        """Full (strong) normal form; returns (remainder, cofactors).

        cofactors maps (k, shift-monomial) -> coefficient q meaning
        input = remainder + sum q * x^shift * basis[k].
        """
        dom = self.dom
        vec = dict(vec)
        cof = {}
        heap = [_Rev((self.term_key(t), t)) for t in vec]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, t = heapq.heappop(heap).key
            if t not in vec:
                continue
            pos, mono = t
            c = vec[t]
            while True:
                k = self._find_reducer(pos, mono, c, skip=skip)
                if k is None:
                    break
                gpos, gmono, gc = self.leads[k]
                shift = mono_div(mono, gmono)
                if self.field:
                    q = dom.mul(c, dom.inv(gc))
                else:
                    q = c // gc
                before = set(vec)
                _vec_axpy(dom, vec, dom.neg(q), shift, self.basis[k])
                key = (k, shift)
                nq = dom.add(cof.get(key, 0), q)
                if nq == 0:
                    cof.pop(key, None)
                else:
                    cof[key] = nq
                for nt in vec:
                    if nt not in before and nt != t:
                        heapq.heappush(heap, _Rev((self.term_key(nt), nt)))
                c = vec.get(t, 0)
                if c == 0:
                    break
            if c != 0:
                out[t] = c
                del vec[t]
        return out, cof

    # -- normalization --------------------------------------------------------

    def _normalize(self, vec, rep):
        """Monic lead (fields) / positive lead (ZZ); scales rep identically."""
        dom = self.dom
        lead = max(vec, key=self.term_key)
        c = vec[lead]
        if self.field:
            if c != dom.from_int(1):
                inv = dom.inv(c)
                vec = _vec_scale(dom, vec, inv)
                rep = _vec_scale(dom, rep, inv) if rep is not None else None
        else:
            if c < 0:
                vec = _vec_scale(dom, vec, -1)
                rep = _vec_scale(dom, rep, -1) if rep is not None else None
        lead = max(vec, key=self.term_key)
        return vec, rep, (lead[0], lead[1], vec[lead])

    # -- pair management ------------------------------------------------------

    def _push_pairs(self, t):
        pt, mt, ct = self.leads[t]
        for k in range(t):
            pk, mk, ck = self.leads[k]
            if pk != pt:
                continue
            L = mono_lcm(mk, mt)
            sugar = max(
                self.sugars[k] + mono_degree(L) - mono_degree(mk),
                self.sugars[t] + mono_degree(L) - mono_degree(mt),
            )
            entry = (sugar, mono_degree(L), self.ring.mono_key(L), -pt)
            heapq.heappush(self.pairs, (entry, 0, k, t))
            if not self.field:
                # G-pair; skipped when one lead coefficient divides the
                # other (the G-element is then a reducible multiple), but
                # only outside syzygy mode.
                if self.syz_mode or (ck % ct != 0 and ct % ck != 0):
                    heapq.heappush(self.pairs, (entry, 1, k, t))

    def _spair(self, i, j):
        """S-element of basis i, j plus its G-coordinate combination."""
        dom = self.dom
        pi, mi, ci = self.leads[i]
        pj, mj, cj = self.leads[j]
        L = mono_lcm(mi, mj)
        si, sj = mono_div(L, mi), mono_div(L, mj)
        if self.field:
            a, b = dom.from_int(1), dom.from_int(1)  # monic basis
        else:
            g, _, _ = xgcd(ci, cj)
            a, b = cj // g, ci // g
        vec = {}
        _vec_axpy(dom, vec, a, si, self.basis[i])
        _vec_axpy(dom, vec, dom.neg(b), sj, self.basis[j])
        z = {}
        _vec_axpy(dom, z, a, si, {(i, (0,) * self.ring.nvars): dom.from_int(1)})
        _vec_axpy(dom, z, dom.neg(b), sj, {(j, (0,) * self.ring.nvars): dom.from_int(1)})
        return vec, z

    def _gpair(self, i, j):
        dom = self.dom
        pi, mi, ci = self.leads[i]
        pj, mj, cj = self.leads[j]
        L = mono_lcm(mi, mj)
        si, sj = mono_div(L, mi), mono_div(L, mj)
        g, x, y = xgcd(ci, cj)
        vec = {}
        _vec_axpy(dom, vec, x, si, self.basis[i])
        _vec_axpy(dom, vec, y, sj, self.basis[j])
        z = {}
        if x != 0:
            z[(i, si)] = x
        if y != 0:
            z[(j, sj)] = dom.add(z.get((j, sj), 0), y) if (j, sj) in z else y
        return vec, z

    def _add_element(self, vec, rep):
        vec, rep, lead = self._normalize(vec, rep)
        t = len(self.basis)
        self.basis.append(vec)
        self.reps.append(rep)
        self.leads.append(lead)
        self.sugars.append(max(mono_degree(m) for (_, m) in vec))
        self.single_pos.append(len({p for (p, _) in vec}) == 1)
        self.by_pos.setdefault(lead[0], []).append(t)
        self._push_pairs(t)

    # -- criteria -------------------------------------------------------------

    def _product_criterion(self, i, j):
        if not self.field:
            return False
        if not (self.single_pos[i] and self.single_pos[j]):
            return False
        _, mi, _ = self.leads[i]
        _, mj, _ = self.leads[j]
        return all(a == 0 or b == 0 for a, b in zip(mi, mj))

    def _chain_criterion(self, i, j):
        if not self.field:
            return False
        pi, mi, _ = self.leads[i]
        _, mj, _ = self.leads[j]
        L = mono_lcm(mi, mj)
        for k in self.by_pos.get(pi, ()):
            if k == i or k == j:
                continue
            _, mk, _ = self.leads[k]
            if mono_div(L, mk) is None:
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in self.treated and b in self.treated:
                return True
        return False

    # -- main loop ------------------------------------------------------------

    def run(self, inputs):
        dom = self.dom
        one = (0,) * self.ring.nvars
        zero_inputs = []
        for idx, vec in enumerate(inputs):
            if not vec:
                zero_inputs.append(idx)
                continue
            rep = {(idx, one): dom.from_int(1)}
            red, cof = self.reduce_vec(vec)
            for (k, shift), q in cof.items():
                _vec_axpy(dom, rep, dom.neg(q), shift, self.reps[k])
            if red:
                self._add_element(red, rep)
            # an input reducing to zero is a combination of earlier elements;
            # its syzygy is recovered by the division pass at the end

        while self.pairs:
            _, tag, i, j = heapq.heappop(self.pairs)
            if tag == 0 and not self.syz_mode:
                if self._product_criterion(i, j) or self._chain_criterion(i, j):
                    continue
            vec, z = self._spair(i, j) if tag == 0 else self._gpair(i, j)
            red, cof = self.reduce_vec(vec)
            self.treated.add((i, j))
            if red:
                rep = {}
                for (k, shift), c in z.items():
                    _vec_axpy(dom, rep, c, shift, self.reps[k])
                for (k, shift), q in cof.items():
                    _vec_axpy(dom, rep, dom.neg(q), shift, self.reps[k])
                self._add_element(red, rep)
            elif self.syz_mode:
                syz = dict(z)
                for (k, shift), q in cof.items():
                    key = (k, shift)
                    nv = dom.sub(syz.get(key, 0), q)
                    if nv == 0:
                        syz.pop(key, None)
                    else:
                        syz[key] = nv
                if syz:
                    self.pair_syzygies.append(syz)
        return zero_inputs

    # -- canonicalization ------------------------------------------------------

    def minimalize(self):
        keep = []
        # ties on the lead term are broken by ascending coefficient so that,
        # over the integers, a dividing coefficient is kept before its multiples
        order = sorted(
            range(len(self.basis)),
            key=lambda k: (self.term_key(self.leads[k][:2]), self.leads[k][2]),
        )
        kept_leads = []
        for k in order:
            pos, mono, coeff = self.leads[k]
            redundant = False
            for (p2, m2, c2) in kept_leads:
                if p2 != pos or mono_div(mono, m2) is None:
                    continue
                if self.field or coeff % c2 == 0:
                    redundant = True
                    break
            if not redundant:
                keep.append(k)
                kept_leads.append(self.leads[k])
        self.basis = [self.basis[k] for k in keep]
        self.reps = [self.reps[k] for k in keep]
        self.leads = [self.leads[k] for k in keep]
        self.by_pos = {}
        for t, (pos, _, _) in enumerate(self.leads):
            self.by_pos.setdefault(pos, []).append(t)

    def interreduce(self):
        dom = self.dom
        for _round in range(10000):
            changed = False
            for k in range(len(self.basis)):
                red, cof = self.reduce_vec(self.basis[k], skip=k)
                if red == self.basis[k]:
                    continue
                changed = True
                if not red:
                    raise GroebnerError("minimal basis element reduced to zero")
                rep = dict(self.reps[k]) if self.reps[k] is not None else None
                if rep is not None:
                    for (t, shift), q in cof.items():
                        _vec_axpy(dom, rep, dom.neg(q), shift, self.reps[t])
                vec, rep, lead = self._normalize(red, rep)
                if lead[:2] != self.leads[k][:2] or (not self.field and lead[2] != self.leads[k][2]):
                    raise GroebnerError("lead changed during inter-reduction")
                self.basis[k] = vec
                self.reps[k] = rep
            if not changed:
                return
        raise GroebnerError("inter-reduction failed to stabilize")

    def sort_canonical(self):
        order = sorted(range(len(self.basis)), key=lambda k: self.term_key(self.leads[k][:2]))
        self.basis = [self.basis[k] for k in order]
        self.reps = [self.reps[k] for k in order]
        self.leads = [self.leads[k] for k in order]
        self.by_pos = {}
        for t, (pos, _, _) in enumerate(self.leads):
            self.by_pos.setdefault(pos, []).append(t)


# ---------------------------------------------------------------------------
# public basis object


class GroebnerBasis:
    """Canonical Groebner basis of a submodule of ring^rank.

    Fields: ring, rank, order (ModuleOrder), inputs (the generators the
    basis was computed from), elements (canonical basis, tuples of
    Polynomials), reps (certificates: elements = reps . inputs), and
    optionally input-coordinate syzygies.
    """

    def __init__(self, ring, rank, inputs, elements, reps, syzygies=None, scalar=False):
        self.ring = ring
        self.rank = rank
        self.order = ModuleOrder(ring.order, POSITION_RULE)
        self.inputs = tuple(inputs)
        self.elements = tuple(tuple(e) for e in elements)
        self.reps = tuple(reps) if reps is not None else None
        self.syzygies = tuple(syzygies) if syzygies is not None else None
        self.scalar = scalar
        self._engine = None

    def _as_engine(self):
        if self._engine is None:
            eng = _Engine(self.ring, self.rank, False)
            dom = self.ring.domain
            for vec in self.elements:
                v = _vec_from_polys(vec)
                lead = max(v, key=eng.term_key)
                t = len(eng.basis)
                eng.basis.append(v)
                eng.reps.append(None)
                eng.leads.append((lead[0], lead[1], v[lead]))
                eng.sugars.append(0)
                eng.single_pos.append(len({p for (p, _) in v}) == 1)
                eng.by_pos.setdefault(lead[0], []).append(t)
            self._engine = eng
        return self._engine

    def _shape_in(self, f):
        if isinstance(f, Polynomial):
            if self.rank != 1:
                raise GroebnerError("scalar element against a rank-%d basis" % self.rank)
            return _vec_from_polys([f])
        vec = list(f)
        if len(vec) != self.rank:
            raise GroebnerError("element rank %d does not match basis rank %d" % (len(vec), self.rank))
        return _vec_from_polys(vec)

    def _shape_out(self, vec, scalar_request):
        polys = _vec_to_polys(self.ring, max(self.rank, 1), vec)
        if scalar_request:
            return polys[0]
        return polys

    def reduce(self, f):
        """(normal form, cofactors over basis elements)."""
        scalar_request = isinstance(f, Polynomial)
        eng = self._as_engine()
        vec = self._shape_in(f)
        red, cof = eng.reduce_vec(vec)
        cofactors = [self.ring.zero() for _ in self.elements]
        for (k, shift), q in cof.items():
            cofactors[k] = cofactors[k] + Polynomial(self.ring, {shift: q})
        return self._shape_out(red, scalar_request), cofactors

    def normal_form(self, f):
        return self.reduce(f)[0]

    def contains(self, f):
        nf = self.normal_form(f)
        if isinstance(nf, Polynomial):
            return nf.is_zero()
        return all(p.is_zero() for p in nf)

    def certificate(self, f):
        """Cofactors over the INPUT generators with f = sum cof_l * input_l,
        or None when f is not in the submodule."""
        nf, cof_elements = self.reduce(f)
        zero = nf.is_zero() if isinstance(nf, Polynomial) else all(p.is_zero() for p in nf)
        if not zero:
            return None
        dom = self.ring.domain
        acc = {}
        for k, c in enumerate(cof_elements):
            if c.is_zero() or self.reps[k] is None:
                continue
            rep_vec = _vec_from_polys(self.reps[k])
            for m, q in c.terms.items():
                _vec_axpy(dom, acc, q, m, rep_vec)
        out = _vec_to_polys(self.ring, len(self.inputs), acc)
        return list(out)

    def lead_terms(self):
        out = []
        for vec in self.elements:
            v = _vec_from_polys(vec)
            eng = self._as_engine()
            lead = max(v, key=eng.term_key)
            out.append((lead[0], lead[1], v[lead]))
        return out

    def scalar_elements(self):
        if self.rank != 1:
            raise GroebnerError("not a rank-1 basis")
        return [vec[0] for vec in self.elements]

    def __len__(self):
        return len(self.elements)

    # -- serialization for the cache ------------------------------------------

    def to_payload(self):
        def ser_polyvec(polys):
            return [
                sorted(
                    [[list(m), self.ring.domain.str_coeff(c)] for m, c in p.terms.items()]
                )
                for p in polys
            ]

        return {
            "rank": self.rank,
            "elements": [ser_polyvec(e) for e in self.elements],
            "reps": [None if r is None else ser_polyvec(r) for r in self.reps],
            "syzygies": None
            if self.syzygies is None
            else [ser_polyvec(s) for s in self.syzygies],
        }

    @classmethod
    def from_payload(cls, ring, rank, inputs, payload, scalar):
        def de_polyvec(rows):
            return tuple(
                Polynomial(
                    ring,
                    {tuple(m): ring.domain.parse_coeff(ctext) for m, ctext in row},
                )
                for row in rows
            )

        return cls(
            ring,
            payload["rank"],
            inputs,
            [de_polyvec(e) for e in payload["elements"]],
            [None if r is None else de_polyvec(r) for r in payload["reps"]],
            None
            if payload["syzygies"] is None
            else [de_polyvec(s) for s in payload["syzygies"]],
            scalar=scalar,
        )


# ---------------------------------------------------------------------------
# input shaping


def _shape_inputs(gens, ring, rank):
    """Normalize generators to (ring, rank, list-of-vecdicts, scalar?)."""
    gens = list(gens)
    scalar = None
    vecs = []
    for g in gens:
        if isinstance(g, Polynomial):
            if scalar is False:
                raise GroebnerError("mixed scalar and module generators")
            scalar = True
            if ring is None:
                ring = g.ring
        else:
            if scalar is True:
                raise GroebnerError("mixed scalar and module generators")
            scalar = False
            seq = list(g)
            if rank is None:
                rank = len(seq)
            elif rank != len(seq):
                raise GroebnerError("generators of differing rank")
            for p in seq:
                if isinstance(p, Polynomial) and ring is None:
                    ring = p.ring
    if scalar is None:
        scalar = rank is None or rank == 1
    if scalar:
        rank = 1
    if ring is None:
        raise GroebnerError("empty generator list needs an explicit ring")
    if rank is None:
        raise GroebnerError("empty generator list needs an explicit rank")
    for g in gens:
        if isinstance(g, Polynomial):
            if g.ring != ring:
                raise GroebnerError("ring mismatch among generators")
            vecs.append(_vec_from_polys([g]))
        else:
            seq = list(g)
            for p in seq:
                if p.ring != ring:
                    raise GroebnerError("ring mismatch among generators")
            vecs.append(_vec_from_polys(seq))
    return ring, rank, vecs, scalar


def _serialize_vec(ring, vec):
    items = sorted(vec.items(), key=lambda kv: (kv[0][0], ring.mono_key(kv[0][1])))
    return ";".join(
        "%d:%s:%s" % (pos, ",".join(map(str, m)), ring.domain.str_coeff(c))
        for (pos, m), c in items
    )


def _compute_basis(ring, rank, vecs, want_syzygies, input_degrees=None):
    eng = _Engine(ring, rank, want_syzygies)
    zero_inputs = eng.run(vecs)

    input_syzygies = None
    if want_syzygies:
        dom = ring.domain
        raw = []
        # pair syzygies, mapped through the (pre-interreduction) reps
        for z in eng.pair_syzygies:
            acc = {}
            for (k, shift), c in z.items():
                _vec_axpy(dom, acc, c, shift, eng.reps[k])
            raw.append(acc)
        eng.minimalize()
        eng.interreduce()
        eng.sort_canonical()
        # division syzygies: e_l - Q_l . R
        one = (0,) * ring.nvars
        for idx, vec in enumerate(vecs):
            if idx in zero_inputs:
                raw.append({(idx, one): dom.from_int(1)})
                continue
            red, cof = eng.reduce_vec(vec)
            if red:
                raise GroebnerError("input does not reduce to zero against its own basis")
            acc = {(idx, one): dom.from_int(1)}
            for (k, shift), q in cof.items():
                _vec_axpy(dom, acc, dom.neg(q), shift, eng.reps[k])
            if acc:
                raw.append(acc)
        input_syzygies = _assemble_syzygies(ring, vecs, raw, input_degrees)
    else:
        eng.minimalize()
        eng.interreduce()
        eng.sort_canonical()

    elements = [_vec_to_polys(ring, rank, v) for v in eng.basis]
    reps = [
        None if r is None else _vec_to_polys(ring, len(vecs), r) for r in eng.reps
    ]
    return elements, reps, input_syzygies


def _assemble_syzygies(ring, vecs, raw, input_degrees):
    """Input-coordinate syzygies: verify, weight-split, normalize, dedupe."""
    dom = ring.domain
    n = len(vecs)

    def apply(syz):
        acc = {}
        for (l, m), c in syz.items():
            _vec_axpy(dom, acc, c, m, vecs[l])
        return acc

    split = []
    for syz in raw:
        if not syz:
            continue
        if apply(syz):
            raise GroebnerError("unsound syzygy emitted")
        if input_degrees is None:
            split.append(syz)
            continue
        by_weight = {}
        for (l, m), c in syz.items():
            w = ring.mono_weight(m) + input_degrees[l]
            by_weight.setdefault(w, {})[(l, m)] = c
        for w in sorted(by_weight):
            piece = by_weight[w]
            if apply(piece):
                raise GroebnerError("inhomogeneous syzygy piece is not a syzygy")
            split.append(piece)

    # normalize: positive/monic "lead" (largest input-coordinate term),
    # integer content cleared over ZZ
    def norm(syz):
        items = sorted(
            syz.items(), key=lambda kv: (-kv[0][0], ring.mono_key(kv[0][1]))
        )
        lead_c = items[-1][1]
        if dom.is_field:
            inv = dom.inv(lead_c)
            return {k: dom.mul(v, inv) for k, v in syz.items()}
        from math import gcd

        g = 0
        for v in syz.values():
            g = gcd(g, abs(v))
        if g > 1:
            syz = {k: v // g for k, v in syz.items()}
            lead_c = lead_c // g
        if lead_c < 0:
            syz = {k: -v for k, v in syz.items()}
        return syz

    seen = set()
    out = []
    for syz in split:
        syz = norm(syz)
        polys = _vec_to_polys(ring, n, syz)
        key = tuple(str(p) for p in polys)
        if key in seen:
            continue
        seen.add(key)
        out.append(polys)
    out.sort(key=lambda polys: tuple(str(p) for p in polys))
    return out


def groebner_basis(gens, ring=None, rank=None, syzygies=False, input_degrees=None, use_cache=True):
    """Canonical Groebner basis of the submodule generated by `gens`.

    gens: Polynomials (ideal case) or same-length sequences of Polynomials
    (module case).  With syzygies=True all pairs are processed and the
    returned basis carries input-coordinate syzygy generators.
    """
    ring, rank, vecs, scalar = _shape_inputs(gens, ring, rank)

    key = _cache.cache_key(
        {
            "kind": "groebner",
            "ring": ring.serialize(),
            "rank": rank,
            "gens": sorted(_serialize_vec(ring, v) for v in vecs),
            "gens_order": [_serialize_vec(ring, v) for v in vecs],
            "syzygies": bool(syzygies),
            "degrees": list(input_degrees) if input_degrees is not None else None,
        }
    )

    def compute():
        elements, reps, input_syz = _compute_basis(
            ring, rank, vecs, syzygies, input_degrees
        )
        return GroebnerBasis(
            ring,
            rank,
            [ _vec_to_polys(ring, rank, v) for v in vecs ],
            elements,
            reps,
            input_syz,
            scalar=scalar,
        )

    if not use_cache:
        return compute()

    return _cache.get_or_compute(
        key,
        compute,
        lambda gb: gb.to_payload(),
        lambda payload: GroebnerBasis.from_payload(
            ring, rank, [_vec_to_polys(ring, rank, v) for v in vecs], payload, scalar
        ),
    )


def normal_form(f, G):
    """Remainder of f on division by the Groebner basis G."""
    if not isinstance(G, GroebnerBasis):
        raise GroebnerError("normal_form expects a GroebnerBasis")
    return G.normal_form(f)


def syzygy_generators(gens, ring=None, rank=None, input_degrees=None):
    """Generators of the syzygy module of `gens` (as tuples of Polynomials)."""
    G = groebner_basis(gens, ring=ring, rank=rank, syzygies=True, input_degrees=input_degrees)
    return list(G.syzygies)


def _relation_vectors(ring, rank):
    out = []
    for rel in ring.relations:
        for pos in range(rank):
            row = [ring.zero()] * rank
            row[pos] = rel
            out.append(tuple(row))
    return out


def submodule_equal(A, B, ring=None, rank=None):
    """span(A) == span(B) modulo the ring relations; (bool, witness).

    The witness (on False) is an element of one side irreducible by the
    other side's basis, returned in the shape it was given in.
    """
    A = list(A)
    B = list(B)
    probe = A + B
    ring_, rank_, _, scalar = _shape_inputs(probe if probe else [], ring, rank)
    rels = _relation_vectors(ring_, rank_)

    def vecify(g):
        return g if not isinstance(g, Polynomial) else (g,)

    GB_B = groebner_basis(
        [vecify(g) for g in B] + rels, ring=ring_, rank=rank_
    )
    for g in A:
        if not GB_B.contains(vecify(g)):
            return False, g
    GB_A = groebner_basis(
        [vecify(g) for g in A] + rels, ring=ring_, rank=rank_
    )
    for g in B:
        if not GB_A.contains(vecify(g)):
            return False, g
    return True, None
