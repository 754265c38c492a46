"""Twisted graded free modules, homogeneous maps, chain complexes with
certified homology, graded Hom modules, annihilators, localization and
Hilbert values.

Conventions
-----------
* The twist L_m = S(m) has (L_m)_k = S_{m+k}, so its generator carries
  degree -m.  A FreeModule is a list of generator degrees.
* Matrices act on column vectors from the left; column j of a ModuleMap is
  the image of source generator j.  Matrices written for a right action on
  row vectors enter through ModuleMap.from_row_action.
* A ModuleMap is homogeneous of degree 0: a nonzero entry (i, j) must have
  weight sdeg_j - tdeg_i.
* Chain complexes are homological (differentials lower the index).  Terms
  may carry a cokernel presentation; a term without one is free.  All
  composite/zero checks happen modulo the target presentation plus the
  ring relations, which in the free case is exactly reduction modulo the
  ring relations.
* Homology-zero certificates are exact: for every kernel generator the
  certificate stores a combination over the incoming differential, the
  presentation columns and the ring-relation columns that reproduces the
  generator termwise in the free ring, and the checker re-multiplies it.
"""

from collections import namedtuple

from .coeffs import ZZ
from .groebner import (
    GroebnerError,
    _relation_vectors,
    groebner_basis,
    submodule_equal,
    syzygy_generators,
)
from .rings import Polynomial, RingError, WeightedRing, mono_div


class ModuleError(ValueError):
    pass


# ---------------------------------------------------------------------------


class FreeModule:
    """Graded free module: a ring plus one integer degree per generator."""

    def __init__(self, ring, generator_degrees):
        self.ring = ring
        self.generator_degrees = tuple(int(d) for d in generator_degrees)

    @property
    def rank(self):
        return len(self.generator_degrees)

    @classmethod
    def twist(cls, ring, m):
        """L_m = S(m); the generator sits in degree -m."""
        return cls(ring, [-m])

    @classmethod
    def twists(cls, ring, ms):
        """Direct sum L_{m1} ++ L_{m2} ++ ..."""
        return cls(ring, [-m for m in ms])

    def dual(self):
        return FreeModule(self.ring, [-d for d in self.generator_degrees])

    def shifted(self, k):
        return FreeModule(self.ring, [d + k for d in self.generator_degrees])

    def basis_vector(self, i):
        vec = [self.ring.zero()] * self.rank
        vec[i] = self.ring.one()
        return tuple(vec)

    def element(self, polys):
        polys = tuple(self.ring.parse(p) if isinstance(p, str) else p for p in polys)
        if len(polys) != self.rank:
            raise ModuleError("element of length %d in rank-%d module" % (len(polys), self.rank))
        return polys

    def element_degree(self, vec):
        """Common degree weight(v_i) + deg_i of the nonzero coordinates.

        None for the zero vector; ModuleError when coordinates disagree.
        """
        deg = None
        for p, d in zip(vec, self.generator_degrees):
            if p.is_zero():
                continue
            w = p.weight() + d
            if deg is None:
                deg = w
            elif deg != w:
                raise ModuleError("element is not degree-homogeneous")
        return deg

    def convert(self, ring):
        return FreeModule(ring, self.generator_degrees)

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.generator_degrees == other.generator_degrees
        )

    def __repr__(self):
        return "<FreeModule degrees=%r>" % (list(self.generator_degrees),)


class ModuleMap:
    """Degree-0 homogeneous map between graded free modules.

    entries[i][j] is the (target i, source j) matrix entry; column j is
    the image of source generator j.
    """

    def __init__(self, source, target, entries):
        if source.ring != target.ring:
            raise ModuleError("source and target over different rings")
        self.source = source
        self.target = target
        self.ring = source.ring
        rows = []
        entries = list(entries)
        if len(entries) != target.rank:
            raise ModuleError(
                "matrix has %d rows, target has rank %d" % (len(entries), target.rank)
            )
        for i, row in enumerate(entries):
            row = [self.ring.parse(e) if isinstance(e, str) else e for e in row]
            if len(row) != source.rank:
                raise ModuleError(
                    "row %d has %d entries, source has rank %d" % (i, len(row), source.rank)
                )
            rows.append(tuple(row))
        self.entries = tuple(rows)
        self._validate()

    def _validate(self):
        sdeg = self.source.generator_degrees
        tdeg = self.target.generator_degrees
        for i in range(self.target.rank):
            for j in range(self.source.rank):
                e = self.entries[i][j]
                if e.is_zero():
                    continue
                expected = sdeg[j] - tdeg[i]
                w = e.weight()  # raises InhomogeneousError with the terms
                if w != expected:
                    raise ModuleError(
                        "inhomogeneous matrix entry (%d, %d): weight %d, expected %d"
                        % (i, j, w, expected)
                    )

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_row_action(cls, source, target, rows):
        """Adapter for matrices written as a right action on row vectors.

        rows[j][i] is the coefficient of target generator i in the image of
        source generator j; the column-convention matrix is its transpose.
        """
        rows = [list(r) for r in rows]
        entries = [[rows[j][i] for j in range(len(rows))] for i in range(len(rows[0]) if rows else 0)]
        return cls(source, target, entries)

    @classmethod
    def identity(cls, module):
        one, zero = module.ring.one(), module.ring.zero()
        return cls(
            module,
            module,
            [[one if i == j else zero for j in range(module.rank)] for i in range(module.rank)],
        )

    @classmethod
    def zero(cls, source, target):
        z = source.ring.zero()
        return cls(source, target, [[z] * source.rank for _ in range(target.rank)])

    # -- structure ------------------------------------------------------------

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.target.rank))

    def columns(self):
        return [self.column(j) for j in range(self.source.rank)]

    def apply(self, vec):
        if len(vec) != self.source.rank:
            raise ModuleError("vector length %d, source rank %d" % (len(vec), self.source.rank))
        out = []
        for i in range(self.target.rank):
            acc = self.ring.zero()
            for j in range(self.source.rank):
                acc = acc + self.entries[i][j] * vec[j]
            out.append(acc)
        return tuple(out)

    def transpose(self):
        """Hom(-, S) dual: swaps and dualizes endpoints, transposes entries."""
        entries = [
            [self.entries[j][i] for j in range(self.target.rank)]
            for i in range(self.source.rank)
        ]
        return ModuleMap(self.target.dual(), self.source.dual(), entries)

    def scale(self, poly):
        poly = self.ring.parse(poly) if isinstance(poly, str) else poly
        if not poly.is_zero() and poly.weight() != 0:
            raise ModuleError("scaling a map needs a weight-0 polynomial")
        return ModuleMap(
            self.source,
            self.target,
            [[e * poly for e in row] for row in self.entries],
        )

    def __add__(self, other):
        self._same_endpoints(other)
        return ModuleMap(
            self.source,
            self.target,
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.source.rank)]
                for i in range(self.target.rank)
            ],
        )

    def __sub__(self, other):
        self._same_endpoints(other)
        return ModuleMap(
            self.source,
            self.target,
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.source.rank)]
                for i in range(self.target.rank)
            ],
        )

    def _same_endpoints(self, other):
        if self.source != other.source or self.target != other.target:
            raise ModuleError("maps have different endpoints")

    def is_zero_mod_relations(self):
        return all(self.ring.nf(e).is_zero() for row in self.entries for e in row)

    def equals_mod_relations(self, other):
        return (self - other).is_zero_mod_relations()

    def convert(self, ring):
        src = self.source.convert(ring)
        tgt = self.target.convert(ring)
        return ModuleMap(
            src,
            tgt,
            [[self.ring.convert(e, ring) for e in row] for row in self.entries],
        )

    def __repr__(self):
        return "<ModuleMap %d x %d>" % (self.target.rank, self.source.rank)


def compose_maps(f, g):
    """f after g (matrix product, reduced modulo the ring relations)."""
    if g.target != f.source:
        raise ModuleError("endpoint mismatch: target of inner %r != source of outer %r"
                          % (g.target, f.source))
    ring = f.ring
    entries = []
    for i in range(f.target.rank):
        row = []
        for j in range(g.source.rank):
            acc = ring.zero()
            for k in range(f.source.rank):
                acc = acc + f.entries[i][k] * g.entries[k][j]
            row.append(ring.nf(acc))
        entries.append(row)
    return ModuleMap(g.source, f.target, entries)


def _grid(m):
    if isinstance(m, ModuleMap):
        return [list(r) for r in m.entries]
    return [[r if isinstance(r, Polynomial) else None for r in row] for row in m]


def verify_matrix_factorization(M, N, f):
    """MN = NM = f * identity, checked exactly in the ambient (lift) ring.

    M, N may be ModuleMaps or plain square grids of Polynomials.  The
    comparison is exact free-ring arithmetic: no reduction is applied, so
    over a hypersurface lift this is the matrix-factorization identity.
    """
    A, B = _grid(M), _grid(N)
    n = len(A)
    if n == 0 or any(len(r) != n for r in A) or len(B) != n or any(len(r) != n for r in B):
        raise ModuleError("matrix factorization needs two square matrices of equal size")
    ring = f.ring
    for X, Y in ((A, B), (B, A)):
        for i in range(n):
            for j in range(n):
                acc = ring.zero()
                for k in range(n):
                    acc = acc + X[i][k] * Y[k][j]
                want = f if i == j else ring.zero()
                if acc != want:
                    return False
    return True


def syzygy_basis(d):
    """Kernel of a module map, returned as a map onto the source of d.

    The image of the returned map is exactly ker(d) over the (possibly
    quotient) ring: syzygies are computed against the columns of d together
    with the ring relations placed in every target coordinate, then
    projected back to source coordinates.  Output columns are
    weight-homogeneous; columns lying in the relation span (zero elements
    of the quotient) are dropped.
    """
    ring = d.ring
    tgt_rank = d.target.rank
    inputs = []
    degrees = []
    for j, col in enumerate(d.columns()):
        inputs.append(col)
        degrees.append(d.source.generator_degrees[j])
    for rel in ring.relations:
        w = rel.weight()
        for pos in range(tgt_rank):
            row = [ring.zero()] * tgt_rank
            row[pos] = rel
            inputs.append(tuple(row))
            degrees.append(w + d.target.generator_degrees[pos])
    n_cols = d.source.rank
    syz = syzygy_generators(inputs, ring=ring, rank=tgt_rank, input_degrees=degrees)
    noise = None
    if ring.relations and d.source.rank:
        noise = groebner_basis(
            _relation_vectors(ring, d.source.rank), ring=ring, rank=d.source.rank
        )
    kernel = []
    seen = set()
    for s in syz:
        x = tuple(s[:n_cols])
        if all(p.is_zero() for p in x):
            continue
        if noise is not None and noise.contains(x):
            continue
        key = tuple(str(p) for p in x)
        if key in seen:
            continue
        seen.add(key)
        kernel.append((x, d.source.element_degree(x)))
    kernel.sort(key=lambda t: (t[1], tuple(str(p) for p in t[0])))
    source = FreeModule(ring, [deg for _, deg in kernel])
    entries = [[x[i] for x, _ in kernel] for i in range(d.source.rank)]
    return ModuleMap(source, d.source, entries)


# ---------------------------------------------------------------------------
# chain complexes


class ChainComplex:
    """Homological chain complex; maps[i] : terms[i+1] -> terms[i].

    presentations, when given, is one ModuleMap-or-None per term; term k is
    then coker(presentations[k]) inside its ambient free module.  Construction
    verifies d.d = 0 and that every differential descends to the cokernels,
    modulo presentation columns plus ring relations.
    """

    def __init__(self, maps, presentations=None):
        maps = list(maps)
        if not maps:
            raise ModuleError("a chain complex needs at least one map")
        self.maps = maps
        self.ring = maps[0].ring
        self.ambients = [maps[0].target] + [d.source for d in maps]
        for i in range(len(maps) - 1):
            if maps[i].source != maps[i + 1].target:
                raise ModuleError("maps %d and %d do not compose" % (i, i + 1))
        if presentations is None:
            presentations = [None] * len(self.ambients)
        presentations = list(presentations)
        if len(presentations) != len(self.ambients):
            raise ModuleError("need one presentation slot per term")
        for k, p in enumerate(presentations):
            if p is not None and p.target != self.ambients[k]:
                raise ModuleError("presentation %d does not land in its term" % k)
        self.presentations = presentations
        self._membership_cache = {}
        self._check_complex()

    # positions: terms[i]; interior positions have maps on both sides
    @property
    def n_terms(self):
        return len(self.ambients)

    def interior_positions(self):
        return range(1, len(self.maps))

    def _zero_target_span(self, k):
        """Vectors spanning 'zero' in term k: presentation columns + relations."""
        vecs = []
        p = self.presentations[k]
        if p is not None:
            vecs.extend(p.columns())
        vecs.extend(_relation_vectors(self.ring, self.ambients[k].rank))
        return vecs

    def _zero_basis(self, k):
        if k not in self._membership_cache:
            self._membership_cache[k] = groebner_basis(
                self._zero_target_span(k), ring=self.ring, rank=self.ambients[k].rank
            )
        return self._membership_cache[k]

    def _is_zero_in_term(self, k, vec):
        if self.ambients[k].rank == 0:
            return True
        return self._zero_basis(k).contains(vec)

    def _check_complex(self):
        for i in range(len(self.maps) - 1):
            comp = compose_maps(self.maps[i], self.maps[i + 1])
            for j, col in enumerate(comp.columns()):
                if not self._is_zero_in_term(i, col):
                    raise ModuleError(
                        "not a complex: d_%d . d_%d is nonzero on generator %d" % (i + 1, i + 2, j)
                    )
        for i, d in enumerate(self.maps):
            p = self.presentations[i + 1]
            if p is None:
                continue
            for j in range(p.source.rank):
                img = d.apply(p.column(j))
                if not self._is_zero_in_term(i, img):
                    raise ModuleError(
                        "differential %d does not descend to the cokernel presentation" % (i + 1)
                    )


Certificate = namedtuple("Certificate", ["ok", "position", "lifts", "witness"])
"""Result of homology_is_zero: on ok, `lifts` holds one entry per kernel
generator with an exact combination reproducing it; on failure `witness`
is a kernel generator irreducible modulo the incoming image."""


def _kernel_generators(C, i):
    """Generators of {x in ambient_i : d_i(x) = 0 in term_{i-1}}, with degrees."""
    ring = C.ring
    d = C.maps[i - 1]
    tgt_rank = C.ambients[i - 1].rank
    inputs = []
    degrees = []
    for j, col in enumerate(d.columns()):
        inputs.append(col)
        degrees.append(d.source.generator_degrees[j])
    p = C.presentations[i - 1]
    if p is not None:
        for j, col in enumerate(p.columns()):
            inputs.append(col)
            degrees.append(p.source.generator_degrees[j])
    rel_inputs = []
    for rel in ring.relations:
        w = rel.weight()
        for pos in range(tgt_rank):
            row = [ring.zero()] * tgt_rank
            row[pos] = rel
            rel_inputs.append(tuple(row))
            degrees.append(w + C.ambients[i - 1].generator_degrees[pos])
    inputs.extend(rel_inputs)
    n_cols = d.source.rank
    syz = syzygy_generators(inputs, ring=ring, rank=tgt_rank, input_degrees=degrees)
    out = []
    if C.ambients[i].rank:
        noise = groebner_basis(
            _relation_vectors(ring, C.ambients[i].rank), ring=ring, rank=C.ambients[i].rank
        )
    else:
        noise = None
    seen = set()
    for s in syz:
        x = tuple(s[:n_cols])
        if all(p_.is_zero() for p_ in x):
            continue
        if noise is not None and noise.contains(x):
            continue
        key = tuple(str(p_) for p_ in x)
        if key in seen:
            continue
        seen.add(key)
        deg = C.ambients[i].element_degree(x)
        out.append((x, deg))
    return out


def _incoming_inputs(C, i):
    """Labelled spanning set of im(d_{i+1}) + presentation_i + relations."""
    ring = C.ring
    rank = C.ambients[i].rank
    inputs, labels = [], []
    if i < len(C.maps):
        d = C.maps[i]
        for j, col in enumerate(d.columns()):
            inputs.append(col)
            labels.append(("d", j))
    p = C.presentations[i]
    if p is not None:
        for j, col in enumerate(p.columns()):
            inputs.append(col)
            labels.append(("p", j))
    for r_idx, rel in enumerate(ring.relations):
        for pos in range(rank):
            row = [ring.zero()] * rank
            row[pos] = rel
            inputs.append(tuple(row))
            labels.append(("rel", (r_idx, pos)))
    return inputs, labels


def _exact_combination_check(ring, rank, inputs, cofactors, expected):
    acc = [ring.zero()] * rank
    for cof, vec in zip(cofactors, inputs):
        if cof.is_zero():
            continue
        for a in range(rank):
            acc[a] = acc[a] + cof * vec[a]
    return all((acc[a] - expected[a]).is_zero() for a in range(rank))


def homology_is_zero(C, i):
    """Certified vanishing of H_i(C) (i an interior position).

    On pass, every kernel generator carries an exact lift combination; on
    fail, the witness is a kernel generator irreducible modulo the incoming
    image (plus presentation and relations).
    """
    if i not in C.interior_positions():
        raise ModuleError("position %d is not interior (valid: %s)" % (i, list(C.interior_positions())))
    ring = C.ring
    rank = C.ambients[i].rank
    kernel = _kernel_generators(C, i)
    inputs, labels = _incoming_inputs(C, i)
    basis = groebner_basis(inputs, ring=ring, rank=rank) if inputs else None
    lifts = []
    for x, deg in kernel:
        cert = basis.certificate(x) if basis is not None else None
        if cert is None:
            return Certificate(False, i, None, x)
        if not _exact_combination_check(ring, rank, inputs, cert, x):
            raise ModuleError("membership certificate failed exact re-multiplication")
        entry = {
            "kernel": x,
            "degree": deg,
            "combination": [
                (labels[k], cert[k]) for k in range(len(inputs)) if not cert[k].is_zero()
            ],
        }
        lifts.append(entry)
    return Certificate(True, i, lifts, None)


def homology_presentation(C, i):
    """H_i(C) = ker(d_i)/im(d_{i+1}) as a subquotient FPModule."""
    if i not in C.interior_positions():
        raise ModuleError("position %d is not interior (valid: %s)" % (i, list(C.interior_positions())))
    kernel = _kernel_generators(C, i)
    rel_vecs = []
    if i < len(C.maps):
        rel_vecs.extend(C.maps[i].columns())
    p = C.presentations[i]
    if p is not None:
        rel_vecs.extend(p.columns())
    return FPModule.subquotient(C.ambients[i], kernel, rel_vecs)


# ---------------------------------------------------------------------------
# finitely presented modules


class FPModule:
    """Coker(map), a free module, or a certified subquotient.

    Internally: an ambient free module, an optional generator list (None
    means 'the ambient basis', i.e. a cokernel presentation) and a list of
    ambient vectors spanning the zero submodule (ring relations excluded;
    they are re-added by every Groebner computation).
    """

    def __init__(self, ambient, gens, rels, form):
        self.ambient = ambient
        self.ring = ambient.ring
        self.gens = gens
        self.rels = list(rels)
        self.form = form
        self._zero_gb = None

    @classmethod
    def coker(cls, phi):
        return cls(phi.target, None, phi.columns(), "coker")

    @classmethod
    def free(cls, module):
        return cls(module, None, [], "free")

    @classmethod
    def cyclic(cls, ring, ideal_gens, gdeg=0):
        """S(-gdeg)/(ideal): rank-1 ambient with generator degree gdeg."""
        amb = FreeModule(ring, [gdeg])
        gens_list = [ring.parse(g) if isinstance(g, str) else g for g in ideal_gens]
        return cls(amb, None, [(g,) for g in gens_list], "coker")

    @classmethod
    def subquotient(cls, ambient, gens_with_degrees, rel_vectors):
        return cls(ambient, list(gens_with_degrees), list(rel_vectors), "subquotient")

    def _zero_basis(self):
        if self._zero_gb is None:
            vecs = list(self.rels) + _relation_vectors(self.ring, self.ambient.rank)
            self._zero_gb = groebner_basis(vecs, ring=self.ring, rank=self.ambient.rank)
        return self._zero_gb

    def generators(self):
        """[(ambient vector, degree)] spanning the module, zero classes dropped."""
        if self.gens is not None:
            out = []
            for g, deg in self.gens:
                if self.ambient.rank and self._zero_basis().contains(g):
                    continue
                out.append((g, deg))
            return out
        out = []
        for i in range(self.ambient.rank):
            e = self.ambient.basis_vector(i)
            if self._zero_basis().contains(e):
                continue
            out.append((e, self.ambient.generator_degrees[i]))
        return out

    def is_zero(self):
        return not self.generators()

    def contains_zero_class(self, vec):
        return self._zero_basis().contains(vec)

    def convert(self, ring):
        amb = self.ambient.convert(ring)
        conv = lambda v: tuple(self.ring.convert(p, ring) for p in v)
        gens = None if self.gens is None else [(conv(g), d) for g, d in self.gens]
        return FPModule(amb, gens, [conv(v) for v in self.rels], self.form)

    def __repr__(self):
        return "<FPModule %s ambient rank %d>" % (self.form, self.ambient.rank)


# ---------------------------------------------------------------------------
# Hom, annihilator, intersections


def hom_generators(M, N):
    """Generators of the internal Hom module Homi(M, N), with degrees.

    M must be free or in cokernel form, M = coker(phi: F1 -> F0); N may be
    an FPModule or a FreeModule.  Hom(F0, N) is realized inside the stacked
    free module  +_i G0  (one G0 block per generator of F0, coordinate
    (i, a) carrying degree gdeg_a - fdeg_i), and the returned generators
    span ker(Hom(F0, N) -> Hom(F1, N)).  Generators that are zero as maps
    (all blocks in im(psi) + relations) are dropped.
    """
    if isinstance(N, FreeModule):
        N = FPModule.free(N)
    if isinstance(M, FreeModule):
        M = FPModule.free(M)
    if M.gens is not None:
        raise ModuleError("hom_generators needs the source in cokernel (or free) form")
    ring = M.ring
    if ring != N.ring:
        raise ModuleError("modules over different rings")
    F0 = M.ambient
    G0 = N.ambient
    phi_cols = M.rels  # columns of phi in F0 coordinates
    r, g = F0.rank, G0.rank
    stacked_rank = r * g
    coord_deg = [
        G0.generator_degrees[a] - F0.generator_degrees[i]
        for i in range(r)
        for a in range(g)
    ]
    # the condition map E : +_i G0 -> +_j G0 (one block per phi column);
    # E is degree-0 for the block gradings, and the zero-target span below
    # is generated by homogeneous vectors, so the solution module is graded
    # and splitting the projected generators by degree afterwards is sound
    n_cond = len(phi_cols)
    cond_rank = n_cond * g
    inputs = []
    for i in range(r):
        for a in range(g):
            col = [ring.zero()] * cond_rank
            for j, pc in enumerate(phi_cols):
                e = pc[i]
                if not e.is_zero():
                    col[j * g + a] = e
            inputs.append(tuple(col))
    # zero targets: im(psi) inside every condition block, ring relations everywhere
    for j in range(n_cond):
        for v in N.rels:
            col = [ring.zero()] * cond_rank
            for a in range(g):
                col[j * g + a] = v[a]
            inputs.append(tuple(col))
    inputs.extend(_relation_vectors(ring, cond_rank))
    syz = syzygy_generators(inputs, ring=ring, rank=cond_rank)
    # project onto the hom coordinates and split by degree manually
    zero_in_n = groebner_basis(
        list(N.rels) + _relation_vectors(ring, g), ring=ring, rank=g
    ) if g else None
    out = []
    seen = set()
    for s in syz:
        h = tuple(s[:stacked_rank])
        if all(p.is_zero() for p in h):
            continue
        pieces = _split_by_degree(ring, h, coord_deg)
        for deg, piece in pieces:
            blocks = [piece[i * g : (i + 1) * g] for i in range(r)]
            if zero_in_n is not None and all(
                zero_in_n.contains(tuple(b)) for b in blocks
            ):
                continue
            key = tuple(str(p) for p in piece)
            if key in seen:
                continue
            seen.add(key)
            out.append((piece, deg))
    out.sort(key=lambda t: (t[1], tuple(str(p) for p in t[0])))
    return out


def _split_by_degree(ring, vec, coord_degrees):
    """Split an ambient vector into degree-homogeneous pieces."""
    by_deg = {}
    for idx, p in enumerate(vec):
        for m, c in p.terms.items():
            d = ring.mono_weight(m) + coord_degrees[idx]
            row = by_deg.setdefault(d, [dict() for _ in vec])
            row[idx][m] = c
    out = []
    for d in sorted(by_deg):
        out.append((d, tuple(Polynomial(ring, t) for t in by_deg[d])))
    return out


def annihilator(M):
    """Generators of Ann(M), returned as a canonical ideal Groebner basis.

    Computed as one stacked colon: s lies in Ann(M) iff s * (g_1 + ... + g_s)
    lies in the block sum of the zero submodule, which equals the
    intersection of the per-generator colon ideals.
    """
    ring = M.ring
    gens = M.generators()
    if not gens:
        return [g for g in groebner_basis([ring.one()], ring=ring).scalar_elements()]
    r = M.ambient.rank
    s = len(gens)
    stacked_rank = r * s
    stacked = [ring.zero()] * stacked_rank
    for i, (g, _deg) in enumerate(gens):
        for a in range(r):
            stacked[i * r + a] = g[a]
    inputs = [tuple(stacked)]
    zero_vecs = list(M.rels) + _relation_vectors(ring, r)
    for i in range(s):
        for v in zero_vecs:
            col = [ring.zero()] * stacked_rank
            for a in range(r):
                col[i * r + a] = v[a]
            inputs.append(tuple(col))
    syz = syzygy_generators(inputs, ring=ring, rank=stacked_rank)
    raw = [s_[0] for s_ in syz if not s_[0].is_zero()]
    by_weight = []
    for p in raw:
        for piece in _homogeneous_pieces(p):
            by_weight.append(piece)
    if not by_weight:
        return []
    gb = groebner_basis(by_weight, ring=ring)
    return gb.scalar_elements()


def _homogeneous_pieces(p):
    ring = p.ring
    by_w = {}
    for m, c in p.terms.items():
        by_w.setdefault(ring.mono_weight(m), {})[m] = c
    return [Polynomial(ring, t) for _, t in sorted(by_w.items())]


def ideal_colon(ring, ideal_gens, g):
    """(ideal : g) for scalars: {s : s*g in (ideal) + relations}."""
    gens = [ring.parse(f) if isinstance(f, str) else f for f in ideal_gens]
    g = ring.parse(g) if isinstance(g, str) else g
    zero_vecs = [(f,) for f in gens] + _relation_vectors(ring, 1)
    return _colon_of_vector(ring, zero_vecs, (g,), 1)


def intersect_ideals(ring, I, J):
    """I intersect J via the diagonal colon in rank 2."""
    one = ring.one()
    zero = ring.zero()
    inputs = [(one, one)]
    degrees = None
    for f in list(I) + list(ring.relations):
        f = ring.parse(f) if isinstance(f, str) else f
        inputs.append((f, zero))
    for g_ in list(J) + list(ring.relations):
        g_ = ring.parse(g_) if isinstance(g_, str) else g_
        inputs.append((zero, g_))
    syz = syzygy_generators(inputs, ring=ring, rank=2)
    raw = []
    for s in syz:
        p = s[0]
        if p.is_zero():
            continue
        raw.extend(_homogeneous_pieces(p))
    if not raw:
        return []
    return groebner_basis(raw, ring=ring).scalar_elements()


# ---------------------------------------------------------------------------
# localization (Rabinowitsch)


def adjoin_inverse(ring, f):
    """Extend the ring by z with relation z*f - 1 (weight-0 f only)."""
    f = ring.parse(f) if isinstance(f, str) else f
    if f.is_zero():
        raise ModuleError("cannot invert 0")
    if f.weight() != 0:
        raise ModuleError("can only invert weight-0 elements, got weight %d" % f.weight())
    base = "zinv"
    idx = 1
    existing = set(ring.names)
    while "%s%d" % (base, idx) in existing:
        idx += 1
    name = "%s%d" % (base, idx)
    ext = ring.extended([name], [0])
    z = ext.var(name)
    rel = z * ring.convert(f, ext) - ext.one()
    return WeightedRing(ext.names, ext.weights, ext.domain, ext.order,
                        list(ext.relations) + [rel])


# ---------------------------------------------------------------------------
# Hilbert values


def hilbert_value(M, d):
    """dim_k M_d for a cokernel-form FPModule over field coefficients.

    Counts standard monomials per ambient position.  Guards: in every
    position, each weight-0 variable must be nilpotent modulo the lead
    terms, and the non-nilpotent weighted variables must all have weights
    of one sign -- otherwise the graded piece can be infinite and a
    distinguished error is raised.
    """
    ring = M.ring
    if not ring.domain.is_field:
        raise ModuleError("hilbert_value needs field coefficients")
    if M.gens is not None:
        raise ModuleError("hilbert_value needs a cokernel (or free) presentation")
    rank = M.ambient.rank
    if rank == 0:
        return 0
    gb = M._zero_basis()
    leads = gb.lead_terms()
    total = 0
    for pos in range(rank):
        pos_leads = [m for (p, m, c) in leads if p == pos]
        total += _count_standard_monomials(
            ring, pos_leads, d - M.ambient.generator_degrees[pos]
        )
    return total


class InfinitePieceError(ModuleError):
    pass


def _count_standard_monomials(ring, lead_monos, target_weight):
    n = ring.nvars
    if any(all(e == 0 for e in m) for m in lead_monos):
        return 0  # the position is dead: 1 is a lead
    # nilpotency bounds from pure-power leads
    bounds = [None] * n
    for m in lead_monos:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            i = nz[0]
            b = m[i]
            if bounds[i] is None or b < bounds[i]:
                bounds[i] = b
    signs = set()
    for i, w in enumerate(ring.weights):
        if bounds[i] is not None:
            continue
        if w == 0:
            raise InfinitePieceError(
                "weight-0 variable %s is not nilpotent in this position" % ring.names[i]
            )
        signs.add(1 if w > 0 else -1)
    if len(signs) > 1:
        raise InfinitePieceError(
            "non-nilpotent variables of both weight signs; graded pieces may be infinite"
        )
    weights = list(ring.weights)
    t = target_weight
    if signs == {-1}:
        weights = [-w for w in weights]
        t = -t
    # DFS over exponents; suffix minima let us prune
    min_suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo = 0
        if bounds[i] is not None:
            contrib = [weights[i] * e for e in range(bounds[i])]
            lo = min(contrib)
        min_suffix[i] = min_suffix[i + 1] + lo
    count = 0
    expo = [0] * n

    def dfs(i, remaining):
        nonlocal count
        if i == n:
            if remaining == 0:
                m = tuple(expo)
                if not any(mono_div(m, lm) is not None for lm in lead_monos):
                    count += 1
            return
        w = weights[i]
        if bounds[i] is not None:
            rng = range(bounds[i])
        else:
            # w > 0 here (guards above); exponent bounded by the weight budget
            hi = (remaining - min_suffix[i + 1]) // w
            if hi < 0:
                return
            rng = range(hi + 1)
        for e in rng:
            rest = remaining - w * e
            # the suffix must still be able to reach `rest` exactly
            if rest < min_suffix[i + 1]:
                if w >= 0:
                    break  # rest only shrinks with larger e
                continue
            expo[i] = e
            dfs(i + 1, rest)
        expo[i] = 0

    dfs(0, t)
    return count


# ---------------------------------------------------------------------------
# cyclic matching


def match_cyclic_quotient(M, J, gdeg, D=15):
    """Certify M = S(-gdeg)/(J): cyclicity + annihilator + Hilbert values.

    Returns (ok, report).  Over non-field coefficients the Hilbert leg is
    skipped (annihilator + cyclicity only).
    """
    ring = M.ring
    J = [ring.parse(j) if isinstance(j, str) else j for j in J]
    gens = M.generators()
    report = {"generator": None, "annihilator": None, "hilbert": None}
    candidates = [(g, deg) for (g, deg) in gens if deg == gdeg]
    if not candidates:
        report["generator"] = "no generator of degree %d (degrees: %r)" % (
            gdeg,
            sorted(d for _, d in gens),
        )
        return False, report
    zero_vecs = list(M.rels) + _relation_vectors(ring, M.ambient.rank)
    chosen = None
    for g, deg in candidates:
        span = groebner_basis([g] + zero_vecs, ring=ring, rank=M.ambient.rank)
        if all(span.contains(h) for h, _ in gens):
            chosen = g
            break
    if chosen is None:
        report["generator"] = "no single degree-%d generator spans the module" % gdeg
        return False, report
    report["generator"] = [str(p) for p in chosen]
    # annihilator of the class of `chosen` equals (J)?
    ann = _colon_of_vector(ring, zero_vecs, chosen, M.ambient.rank)
    ok, witness = submodule_equal(
        [(p,) for p in ann], [(p,) for p in J], ring=ring, rank=1
    )
    report["annihilator"] = {
        "computed": [str(p) for p in ann],
        "claimed": [str(p) for p in J],
        "witness": None if ok else str(witness[0] if isinstance(witness, tuple) else witness),
    }
    if not ok:
        return False, report
    if not ring.domain.is_field:
        return True, report
    mine = FPModule.cyclic(ring, ann, gdeg)
    model = FPModule.cyclic(ring, J, gdeg)
    values = {}
    for d in range(-D, D + 1):
        va = hilbert_value(mine, d)
        vb = hilbert_value(model, d)
        values[d] = (va, vb)
        if va != vb:
            report["hilbert"] = {"degree": d, "module": va, "model": vb}
            return False, report
    report["hilbert"] = {d: v[0] for d, v in sorted(values.items()) if v[0]}
    return True, report


def _colon_of_vector(ring, zero_vecs, g, rank):
    """{s : s*g in span(zero_vecs)} as homogeneous ideal generators."""
    inputs = [g] + list(zero_vecs)
    syz = syzygy_generators(inputs, ring=ring, rank=rank)
    out = []
    for s in syz:
        p = s[0]
        if p.is_zero():
            continue
        out.extend(_homogeneous_pieces(p))
    if not out:
        return []
    return groebner_basis(out, ring=ring).scalar_elements()
