"""Cochain complexes of strata with lattice coefficients, over Q, Z, and F_p.

A GLattice is an integer representation of the group on Z^r.  For a locally
closed stratum S the complex restricts the full simplicial coboundary to the
simplices of S; its cohomology is the compactly supported cohomology of the
open union of S.  All arithmetic is exact: Fractions over Q, Smith normal
form over Z, modular arithmetic over F_p.

Traces of group elements on cohomology come from an explicit splitting of
ker(d) into im(d) plus a complement, computed once per degree and reused for
every element.  The chain-level alternating trace (a signed count of fixed
simplices) is exposed separately so callers can confront the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    QQ,
    Mat,
    PrimeField,
    column_space_basis,
    extend_basis,
    from_columns,
    int_det,
    left_inverse,
    mat_mul,
    nullspace,
    rank,
    smith_normal_form,
)
from .characters import VirtualCharacter
from .complexes import Stratum
from .groups import Group, Subgroup, element_classes


def _int_matmul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    n, m, k = len(a), len(b[0]), len(b)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
    return out


def _int_det(rows) -> int:
    return int_det(Mat.from_rows([list(r) for r in rows], len(rows)))


class GLattice:
    """A finite group acting on Z^r by invertible integer matrices."""

    __slots__ = ("group", "rank", "matrices", "_cache")

    def __init__(self, group: Group, rank_: int, matrices):
        self.group = group
        self.rank = rank_
        self.matrices = tuple(
            tuple(tuple(row) for row in m) for m in matrices
        )
        self._cache: dict = {}
        if len(self.matrices) != group.order:
            raise ValueError("need one matrix per group element")
        ident = tuple(
            tuple(1 if i == j else 0 for j in range(rank_)) for i in range(rank_)
        )
        if self.matrices[0] != ident:
            raise ValueError("identity element must act by the identity matrix")
        for e, m in enumerate(self.matrices):
            if len(m) != rank_ or any(len(row) != rank_ for row in m):
                raise ValueError(f"matrix for element {e} has the wrong shape")
            if abs(_int_det(m)) != 1:
                raise ValueError(f"matrix for element {e} is not invertible over Z")

    @classmethod
    def from_generator_matrices(cls, group: Group, rank_: int, generator_matrices):
        """Extend generator matrices along the group's words; checks relations."""
        gens = [tuple(tuple(int(v) for v in row) for row in m) for m in generator_matrices]
        expected = len(group.generator_permutations or ()) if group.order > 1 else 0
        if group.order > 1 and group.words is None:
            raise ValueError("group was not built from generators")
        if len(gens) != expected:
            raise ValueError(f"need one matrix per generator ({expected} expected)")
        ident = [[1 if i == j else 0 for j in range(rank_)] for i in range(rank_)]
        mats = []
        for word in group.words if group.words is not None else [()]:
            m = ident
            for j in word:
                m = _int_matmul(m, [list(r) for r in gens[j]])
            mats.append(m)
        for j, ge in enumerate(group.generator_elements or ()):
            gm = [list(r) for r in gens[j]]
            for e in range(group.order):
                prod = group.mul[ge][e]
                if _int_matmul(gm, mats[e]) != mats[prod]:
                    raise ValueError(
                        f"matrices violate the relation gen[{j}] * element[{e}]"
                    )
        return cls(group, rank_, mats)

    @classmethod
    def trivial(cls, group: Group) -> "GLattice":
        return cls(group, 1, [((1,),)] * group.order)

    @classmethod
    def sign(cls, group: Group, generator_signs) -> "GLattice":
        """Rank-one lattice where generator j acts by the given unit."""
        for s in generator_signs:
            if s not in (1, -1):
                raise ValueError("generator signs must be 1 or -1")
        return cls.from_generator_matrices(
            group, 1, [((s,),) for s in generator_signs]
        )

    @classmethod
    def regular(cls, group: Group) -> "GLattice":
        """Z[G] with the left translation action."""
        n = group.order
        mats = []
        for g in range(n):
            m = [[0] * n for _ in range(n)]
            for x in range(n):
                m[group.mul[g][x]][x] = 1
            mats.append(m)
        return cls(group, n, mats)

    def matrix(self, e: int):
        return self.matrices[e]

    def trace(self, e: int) -> int:
        m = self.matrices[e]
        return sum(m[i][i] for i in range(self.rank))

    def character(self) -> VirtualCharacter:
        """Trace function as a virtual character of the acting group."""
        if "char" not in self._cache:
            classes = element_classes(self.group)
            self._cache["char"] = VirtualCharacter(
                self.group,
                tuple(Fraction(self.trace(c.representative)) for c in classes),
            )
        return self._cache["char"]

    def __repr__(self):
        return f"GLattice(|G|={self.group.order}, rank={self.rank})"


class CochainComplex:
    """Simplicial cochains of a stratum with values in a lattice.

    Basis of degree k: one copy of the lattice basis per open k-simplex of
    the stratum, simplex-major.  The differential is the coboundary summed
    over faces that stay inside the stratum.
    """

    __slots__ = ("stratum", "lattice", "bases", "dims", "diffs", "_cache")

    def __init__(self, stratum: Stratum, lattice: GLattice):
        if stratum.parent.group is not lattice.group:
            raise ValueError("stratum and lattice belong to different groups")
        if not stratum.is_locally_closed():
            raise ValueError(f"stratum {stratum.label} is not locally closed")
        self.stratum = stratum
        self.lattice = lattice
        self.bases = tuple(stratum.simplices)
        r = lattice.rank
        self.dims = tuple(r * len(level) for level in self.bases)
        self._cache = {}
        self.diffs = self._build_differentials()
        self._check_dd_zero()

    # -- construction --------------------------------------------------------

    def _build_differentials(self):
        r = self.lattice.rank
        diffs = []
        top = len(self.bases) - 1
        for k in range(top):
            index_k = {s: i for i, s in enumerate(self.bases[k])}
            rows = [[0] * self.dims[k] for _ in range(self.dims[k + 1])]
            for t_i, tau in enumerate(self.bases[k + 1]):
                for drop in range(len(tau)):
                    face = tau[:drop] + tau[drop + 1:]
                    s_i = index_k.get(face)
                    if s_i is None:
                        continue
                    sign = -1 if drop % 2 else 1
                    for c in range(r):
                        rows[t_i * r + c][s_i * r + c] += sign
            diffs.append(rows)
        return tuple(diffs)

    def _check_dd_zero(self):
        for k in range(len(self.diffs) - 1):
            prod = _int_matmul(self.diffs[k + 1], self.diffs[k])
            if any(any(v for v in row) for row in prod):
                raise ArithmeticError("differential does not square to zero")

    def _diff(self, k):
        """d_k as integer rows, or None when source or target is empty."""
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return None

    def top_degree(self) -> int:
        return len(self.bases) - 1

    # -- group action ---------------------------------------------------------

    def _simplex_index(self, k):
        key = ("index", k)
        if key not in self._cache:
            self._cache[key] = {s: i for i, s in enumerate(self.bases[k])}
        return self._cache[key]

    def apply_action(self, e: int, k: int, columns):
        """Images of the given coordinate columns under the element's action.

        The action sends the basis cochain at simplex s to the signed lattice
        image at the simplex e*s; the stratum must be invariant under e.
        """
        x = self.stratum.parent
        r = self.lattice.rank
        rho = self.lattice.matrix(e)
        index = self._simplex_index(k)
        n = self.dims[k]
        out = []
        moves = self._cache.get(("moves", e, k))
        if moves is None:
            moves = []
            for s_i, s in enumerate(self.bases[k]):
                image, sign = x.act_simplex_signed(e, s)
                t_i = index.get(image)
                if t_i is None:
                    raise ValueError(
                        f"stratum {self.stratum.label} is not invariant under element {e}"
                    )
                moves.append((t_i, sign))
            self._cache[("moves", e, k)] = moves
        for col in columns:
            img = [0] * n
            for s_i, (t_i, sign) in enumerate(moves):
                base = s_i * r
                tbase = t_i * r
                for i in range(r):
                    acc = 0
                    row = rho[i]
                    for j in range(r):
                        v = col[base + j]
                        if v:
                            acc += row[j] * v
                    if acc:
                        img[tbase + i] += sign * acc
            out.append(img)
        return out

    def action_matrix(self, e: int, k: int):
        """Dense integer matrix of the element's action in degree k."""
        key = ("action", e, k)
        if key not in self._cache:
            n = self.dims[k]
            ident = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
            cols = self.apply_action(e, k, ident)
            self._cache[key] = [
                [cols[j][i] for j in range(n)] for i in range(n)
            ]
        return self._cache[key]

    def chain_trace(self, e: int, k: int) -> int:
        """Trace of the element on degree-k cochains (no cohomology needed)."""
        x = self.stratum.parent
        tr_rho = self.lattice.trace(e)
        total = 0
        for s in self.bases[k]:
            image, sign = x.act_simplex_signed(e, s)
            if image == s:
                total += sign * tr_rho
        return total

    def hopf_trace(self, e: int) -> int:
        """Alternating chain-level trace; equals the alternating cohomology trace."""
        return sum(
            (-1) ** k * self.chain_trace(e, k) for k in range(len(self.bases))
        )

    # -- cohomology over Q ----------------------------------------------------

    def _qq_diff(self, k) -> Mat | None:
        key = ("qdiff", k)
        if key not in self._cache:
            d = self._diff(k)
            if d is None:
                self._cache[key] = None
            else:
                self._cache[key] = Mat.from_rows(
                    [[Fraction(v) for v in row] for row in d], self.dims[k]
                )
        return self._cache[key]

    def _solver(self, k):
        """Splitting data for degree k: (Q_mat, P_Q) with h columns, or None.

        Q_mat: columns spanning a complement of im(d_{k-1}) inside ker(d_k).
        P_Q: reads off complement coordinates of any vector in ker(d_k).
        """
        key = ("solver", k)
        if key in self._cache:
            return self._cache[key]
        n = self.dims[k]
        dk = self._qq_diff(k)
        if dk is None:
            kernel = [
                [Fraction(1) if i == j else Fraction(0) for i in range(n)]
                for j in range(n)
            ]
        else:
            kernel = nullspace(dk, QQ)
        dprev = self._qq_diff(k - 1)
        image = column_space_basis(dprev, QQ) if dprev is not None else []
        kept = extend_basis(image, kernel, QQ)
        q_cols = [kernel[i] for i in kept]
        h = len(q_cols)
        if h == 0:
            self._cache[key] = None
            return None
        full = from_columns(q_cols + image, n)
        inv = left_inverse(full, QQ)
        p_q = Mat.from_rows([list(inv.rows[i]) for i in range(h)], n)
        q_mat = from_columns(q_cols, n)
        self._cache[key] = (q_mat, p_q)
        return self._cache[key]

    def rational_dims(self) -> tuple[int, ...]:
        """dim_Q H^k for k = 0..top; checked against Euler-Poincare."""
        if "qdims" not in self._cache:
            dims = []
            for k in range(len(self.bases)):
                solver = self._solver(k)
                dims.append(solver[0].n if solver else 0)
            dims = tuple(dims)
            lhs = sum((-1) ** k * d for k, d in enumerate(self.dims))
            rhs = sum((-1) ** k * d for k, d in enumerate(dims))
            if lhs != rhs:
                raise ArithmeticError(
                    f"Euler-Poincare mismatch over Q: cells {lhs}, cohomology {rhs}"
                )
            self._cache["qdims"] = dims
        return self._cache["qdims"]

    def trace_on_cohomology(self, e: int, k: int) -> Fraction:
        """Trace of the element on H^k over Q (an exact rational)."""
        solver = self._solver(k)
        if solver is None:
            return Fraction(0)
        q_mat, p_q = solver
        cols = [[q_mat.rows[i][j] for i in range(q_mat.m)] for j in range(q_mat.n)]
        moved = self.apply_action(e, k, cols)
        aq = from_columns([[Fraction(v) for v in col] for col in moved], q_mat.m)
        small = mat_mul(p_q, aq, QQ)
        return sum((small.rows[i][i] for i in range(small.m)), Fraction(0))

    def lefschetz_number(self, e: int) -> Fraction:
        """Alternating trace on cohomology; always an integer, checked."""
        total = sum(
            ((-1) ** k * self.trace_on_cohomology(e, k)
             for k in range(len(self.bases))),
            Fraction(0),
        )
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral alternating trace {total}")
        return total

    def equivariant_euler_characteristic(self, acting: Subgroup) -> VirtualCharacter:
        """The virtual character h |-> alternating trace of h, on the acting group."""
        inner = acting.as_group()
        values = []
        for cls in element_classes(inner):
            parent_elem = acting.to_parent(cls.representative)
            values.append(self.lefschetz_number(parent_elem))
        return VirtualCharacter(inner, tuple(values))

    # -- cohomology over Z and F_p ---------------------------------------------

    def integral_cohomology(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        """(betti numbers, torsion coefficients per degree), from Smith form."""
        if "integral" not in self._cache:
            betti = self.rational_dims()
            torsion = []
            for k in range(len(self.bases)):
                d = self._diff(k - 1)
                if d is None or not d or not d[0]:
                    torsion.append(())
                    continue
                divisors = smith_normal_form(
                    Mat.from_rows([list(r) for r in d], self.dims[k - 1])
                )
                torsion.append(tuple(v for v in divisors if v > 1))
            self._cache["integral"] = (betti, tuple(torsion))
        return self._cache["integral"]

    def modp_dims(self, p: int) -> tuple[int, ...]:
        """dim_{F_p} H^k for k = 0..top; checked against Euler-Poincare."""
        key = ("modp", p)
        if key not in self._cache:
            field = PrimeField(p)
            ranks = []
            for k in range(len(self.diffs)):
                d = self.diffs[k]
                m = Mat.from_rows([[v % p for v in row] for row in d], self.dims[k])
                ranks.append(rank(m, field))
            dims = []
            for k in range(len(self.bases)):
                r_k = ranks[k] if k < len(ranks) else 0
                r_prev = ranks[k - 1] if k >= 1 else 0
                dims.append(self.dims[k] - r_k - r_prev)
            dims = tuple(dims)
            lhs = sum((-1) ** k * d for k, d in enumerate(self.dims))
            rhs = sum((-1) ** k * d for k, d in enumerate(dims))
            if lhs != rhs:
                raise ArithmeticError(
                    f"Euler-Poincare mismatch mod {p}: cells {lhs}, cohomology {rhs}"
                )
            self._cache[key] = dims
        return self._cache[key]

    # -- invariants -------------------------------------------------------------

    def invariant_dims(self, acting: Subgroup) -> tuple[int, ...]:
        """dim_Q of the cohomology of the subcomplex of acting-invariant cochains."""
        key = ("invariant", acting.member_set)
        if key in self._cache:
            return self._cache[key]
        members = acting.member_set
        size = Fraction(1, len(members))
        bases_cols = []
        lifts = []
        for k in range(len(self.bases)):
            n = self.dims[k]
            ident = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
            acc = [[0] * n for _ in range(n)]
            for e in members:
                cols = self.apply_action(e, k, ident)
                for j in range(n):
                    cj = cols[j]
                    aj = acc[j]
                    for i in range(n):
                        aj[i] += cj[i]
            proj = Mat.from_rows(
                [[size * acc[j][i] for j in range(n)] for i in range(n)], n
            )
            cols_b = column_space_basis(proj, QQ)
            b_mat = from_columns(cols_b, n)
            bases_cols.append(b_mat)
            lifts.append(left_inverse(b_mat, QQ) if b_mat.n else None)
        restricted = []
        for k in range(len(self.diffs)):
            b_k = bases_cols[k]
            lift = lifts[k + 1]
            if b_k.n == 0 or lift is None:
                restricted.append(Mat.zero(bases_cols[k + 1].n, b_k.n, QQ))
                continue
            dk = self._qq_diff(k)
            restricted.append(mat_mul(lift, mat_mul(dk, b_k, QQ), QQ))
        ranks = [rank(m, QQ) for m in restricted]
        dims = []
        for k in range(len(self.bases)):
            r_k = ranks[k] if k < len(ranks) else 0
            r_prev = ranks[k - 1] if k >= 1 else 0
            dims.append(bases_cols[k].n - r_k - r_prev)
        self._cache[key] = tuple(dims)
        return self._cache[key]

    def __repr__(self):
        return (
            f"CochainComplex({self.stratum.label}, rank={self.lattice.rank}, "
            f"dims={self.dims})"
        )


def cochain_complex(stratum: Stratum, lattice: GLattice) -> CochainComplex:
    """Cached cochain complex of a stratum with the given coefficients."""
    cache = stratum._cache.setdefault("cochains", {})
    if lattice not in cache:
        cache[lattice] = CochainComplex(stratum, lattice)
    return cache[lattice]


def _as_stratum(space) -> Stratum:
    return space.as_stratum() if not isinstance(space, Stratum) else space


@dataclass(frozen=True)
class CohomologySummary:
    """Dimensions over Q, Betti numbers and torsion over Z, optional traces."""

    dims_q: tuple[int, ...]
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    traces: tuple[Fraction, ...] | None


def cohomology(c: CochainComplex, aut: int | None = None) -> CohomologySummary:
    """Dimension and torsion data, with per-degree traces of an automorphism."""
    betti, torsion = c.integral_cohomology()
    traces = None
    if aut is not None:
        traces = tuple(
            c.trace_on_cohomology(aut, k) for k in range(len(c.bases))
        )
    return CohomologySummary(
        dims_q=c.rational_dims(), betti=betti, torsion=torsion, traces=traces
    )


def lefschetz_number(space, g: int, lattice: GLattice) -> Fraction:
    """Alternating trace of g on the cohomology of a complex or stratum."""
    return cochain_complex(_as_stratum(space), lattice).lefschetz_number(g)


def hopf_trace(space, g: int, lattice: GLattice) -> int:
    """Chain-level alternating trace; equals lefschetz_number."""
    return cochain_complex(_as_stratum(space), lattice).hopf_trace(g)


def invariant_cohomology(space, lattice: GLattice) -> tuple[int, ...]:
    """Per-degree rational dimensions of the invariant subcomplex's cohomology."""
    stratum = _as_stratum(space)
    group = stratum.parent.group
    return cochain_complex(stratum, lattice).invariant_dims(group.whole_subgroup())


def modp_euler_characteristic(space, lattice: GLattice, p: int) -> int:
    """Euler characteristic over F_p; always equals the rational one."""
    dims = cochain_complex(_as_stratum(space), lattice).modp_dims(p)
    return sum((-1) ** k * d for k, d in enumerate(dims))
