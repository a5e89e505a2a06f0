"""Dimension seven: Clifford algebra, the canonical G2-structure and spinors.

The spin representation is frozen below as left multiplication by the
imaginary unit octonions ``e_1 .. e_7`` on ``O = R(1) + R(e_1..e_7)``.  The
octonion structure constants are read off the G2 form of the standard adapted
frame, which makes ``omega`` act with eigenvalue ``-7`` exactly on the real
unit ``1`` and keeps the canonical spinor a rational vector.

The last part treats the Cartan-Schouten parallelization of the 7-sphere,
``e_i(x) = kappa_i x``, pointwise at exact rational points of the sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .acms import (
    CYCLIC,
    A3CStructure,
    a_tensors,
    horizontal_4form,
    horizontal_forms,
    match_three_alpha_delta,
    nijenhuis,
    reeb_commutator,
    standard_phi,
)
from .errors import (
    NonUnitPoint,
    NotGeneralizedKilling,
    NotSasakiFamily,
    SpectrumMismatch,
    WrongDimension,
)
from .frame_alg import FrameSpace, KForm, form_inner, hodge_star, volume, wedge
from .liegeom import Connection, LieFrameGeometry, PointwiseBrackets, levi_civita
from .report import Check, Report, bool_check, residual_check
from .scalar import ONE, ZERO, Expr, as_expr, rational_sqrt

SPINOR_DIM = 8

# kappa_i as rows; column b is kappa_i applied to the b-th basis spinor
KAPPA = (
    ((0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0), (0, 0, 0, -1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 0, -1, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0, -1, 0)),
    ((0, 0, -1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0), (0, -1, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 0, 0, -1), (0, 0, 0, 0, -1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0)),
    ((0, 0, 0, -1, 0, 0, 0, 0), (0, 0, -1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, -1, 0, 0, 0)),
    ((0, 0, 0, 0, -1, 0, 0, 0), (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, 0, 0, -1, 0), (0, 0, 0, 0, 0, 0, 0, -1),
     (1, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0, -1, 0),
     (0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0, 0, -1, 0), (0, 0, 0, 0, 0, 0, 0, -1), (0, 0, 0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, -1, 0, 0, 0, 0, 0), (0, 0, 0, -1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0)),
    ((0, 0, 0, 0, 0, 0, 0, -1), (0, 0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, 0, 0),
     (0, 0, 0, -1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0), (0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0)),
)


# small exact matrix kit; matrices are tuples of rows

def mat_mul(A, B):
    n, m = len(A), len(B[0])
    inner = range(len(B))
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in inner if A[i][k] and B[k][j]), 0)
                       for j in range(m)) for i in range(n))


def mat_add(A, B, scale=1):
    return tuple(tuple(a + b * scale for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, s):
    return tuple(tuple(a * s for a in row) for row in A)


def identity(n: int = SPINOR_DIM):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int = SPINOR_DIM):
    return tuple(tuple(0 for _ in range(n)) for _ in range(n))


def transpose(A):
    return tuple(zip(*A))


def mat_is_zero(A) -> bool:
    return all(as_expr(x).is_zero for row in A for x in row)


def trace(A):
    return sum((A[i][i] for i in range(len(A))), 0)


@dataclass(frozen=True)
class CliffordRep:
    """Seven anticommuting skew 8x8 matrices squaring to ``-Id``."""

    kappa: tuple
    volume_sign: int

    def __getitem__(self, a: int):
        return self.kappa[a]

    def word(self, indices) -> tuple:
        out = identity()
        for a in indices:
            out = mat_mul(out, self.kappa[a])
        return out

    def flipped(self) -> "CliffordRep":
        """The inequivalent representation ``-kappa``; reverses the volume sign."""
        return CliffordRep(tuple(mat_scale(k, -1) for k in self.kappa), -self.volume_sign)


def clifford_violations(kappa) -> list:
    """Every failed relation as ``(kind, indices)``."""
    bad = []
    eye = identity()
    for a, k in enumerate(kappa):
        if transpose(k) != mat_scale(k, -1):
            bad.append(("antisymmetric", (a,)))
    for a, b in product(range(len(kappa)), repeat=2):
        if a > b:
            continue
        anti = mat_add(mat_mul(kappa[a], kappa[b]), mat_mul(kappa[b], kappa[a]))
        want = mat_scale(eye, -2) if a == b else zeros()
        if anti != want:
            bad.append(("anticommute", (a, b)))
    return bad


def volume_sign(kappa) -> int:
    """``s`` with ``kappa_1 ... kappa_7 = s Id``; 0 if the product is not scalar."""
    prod = identity()
    for k in kappa:
        prod = mat_mul(prod, k)
    for s in (1, -1):
        if prod == mat_scale(identity(), s):
            return s
    return 0


@lru_cache(maxsize=None)
def build_clifford() -> CliffordRep:
    bad = clifford_violations(KAPPA)
    sign = volume_sign(KAPPA)
    if bad or not sign:
        raise RuntimeError(f"frozen Clifford matrices are corrupt: {bad[:1]}, volume {sign}")
    return CliffordRep(KAPPA, sign)


# spinors

class Spinor(tuple):
    """Eight exact components in the basis of the frozen representation."""

    def __new__(cls, comps):
        comps = tuple(as_expr(x) for x in comps)
        if len(comps) != SPINOR_DIM:
            raise ValueError(f"a spinor has {SPINOR_DIM} components, got {len(comps)}")
        return super().__new__(cls, comps)

    @classmethod
    def basis(cls, i: int) -> "Spinor":
        return cls(ONE if j == i else ZERO for j in range(SPINOR_DIM))

    def __add__(self, other):
        return Spinor(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Spinor(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Spinor(-a for a in self)

    def __mul__(self, s):
        return Spinor(a * s for a in self)

    __rmul__ = __mul__

    def dot(self, other) -> Expr:
        return sum((a * b for a, b in zip(self, other)), ZERO)

    def norm_squared(self) -> Expr:
        return self.dot(self)

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self)

    def __eq__(self, other):
        return isinstance(other, tuple) and len(other) == len(self) and all(
            as_expr(a) == as_expr(b) for a, b in zip(self, other))

    __hash__ = tuple.__hash__

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self) + ")"


def apply(A, psi) -> Spinor:
    return Spinor(sum((row[j] * psi[j] for j in range(SPINOR_DIM) if row[j]), ZERO) for row in A)


def form_action(form: KForm, rep: CliffordRep | None = None):
    """Clifford action of a form: each sorted monomial acts as the ordered product of its kappas."""
    rep = rep or build_clifford()
    if form.dim != 7:
        raise WrongDimension(f"Clifford action needs dimension 7, got {form.dim}")
    total = zeros()
    for I, c in form.items():
        total = mat_add(total, rep.word(I), c)
    return tuple(tuple(as_expr(x) for x in row) for row in total)


def vector_action(v: dict, rep: CliffordRep | None = None):
    rep = rep or build_clifford()
    total = zeros()
    for a, c in v.items():
        total = mat_add(total, rep[a], c)
    return tuple(tuple(as_expr(x) for x in row) for row in total)


def clifford_mul(v, psi, rep: CliffordRep | None = None) -> Spinor:
    """``v . psi`` for a frame index, a sparse vector or a form."""
    rep = rep or build_clifford()
    if isinstance(v, int):
        return apply(rep[v], psi)
    if isinstance(v, KForm):
        return apply(form_action(v, rep), psi)
    return apply(vector_action(v, rep), psi)


# the canonical G2-structure

@dataclass(frozen=True)
class G2Form:
    omega: KForm
    omega1: KForm
    omega2: KForm


def _require_seven(S: A3CStructure):
    if S.dim != 7:
        raise WrongDimension(f"G2 structures live in dimension 7, got {S.dim}")


def _sasaki_pair(S: A3CStructure):
    match = match_three_alpha_delta(S)
    if match is None or match[0] is None:
        raise NotSasakiFamily("the G2 suite needs a 3-(alpha, delta)-Sasaki structure")
    return match


def g2_form(S: A3CStructure) -> G2Form:
    _require_seven(S)
    _sasaki_pair(S)
    PhiH = horizontal_forms(S)
    omega1 = wedge(S.eta(0), PhiH[0]) + wedge(S.eta(1), PhiH[1]) + wedge(S.eta(2), PhiH[2])
    omega2 = S.eta123()
    return G2Form(omega1 + omega2, omega1, omega2)


def _monomials(dim: int, terms) -> KForm:
    out = KForm(dim, len(terms[0][1]), {})
    for c, idx in terms:
        out = out + KForm.monomial(dim, *(i - 1 for i in idx), coeff=c)
    return out


# the adapted-frame expansions, 1-based
OMEGA_TERMS = ((-1, (1, 4, 5)), (-1, (1, 6, 7)), (-1, (2, 4, 6)), (1, (2, 5, 7)),
               (-1, (3, 4, 7)), (-1, (3, 5, 6)), (1, (1, 2, 3)))
STAR_OMEGA1_TERMS = ((-1, (2, 3, 6, 7)), (-1, (2, 3, 4, 5)), (-1, (1, 3, 5, 7)), (1, (1, 3, 4, 6)),
                     (-1, (1, 2, 5, 6)), (-1, (1, 2, 4, 7)))


def cocalibration(S: A3CStructure) -> KForm:
    """``d * omega``; zero exactly when the G2-structure is cocalibrated."""
    return S.d(hodge_star(g2_form(S).omega))


def g2_inner(S: A3CStructure) -> Expr:
    """``<d omega, * omega>``."""
    omega = g2_form(S).omega
    return form_inner(S.d(omega), hodge_star(omega))


def g2_characteristic_torsion(S: A3CStructure) -> KForm:
    """``-* d omega + (1/6) <d omega, * omega> omega``."""
    omega = g2_form(S).omega
    d_omega = S.d(omega)
    return -hodge_star(d_omega) + omega * (form_inner(d_omega, hodge_star(omega)) / 6)


def g2_form_checks(S: A3CStructure, canonical_torsion: KForm | None = None) -> Report:
    alpha, delta = _sasaki_pair(S)
    G = g2_form(S)
    PhiH = horizontal_forms(S)
    dim = S.dim
    rep = Report()
    rep.add(residual_check("g2.omega_expansion", "omega in the adapted frame",
                           G.omega - _monomials(dim, OMEGA_TERMS)))
    star1 = hodge_star(G.omega1)
    cyc = sum((wedge(PhiH[i], S.eta_pair(j, k)) for i, j, k in CYCLIC[1:]),
              wedge(PhiH[0], S.eta_pair(1, 2)))
    rep.add(residual_check("g2.star_omega1", "*omega_1 monomial expansion",
                           star1 - _monomials(dim, STAR_OMEGA1_TERMS)))
    rep.add(residual_check("g2.star_omega1_cyclic", "*omega_1 = cyclic sum Phi_i^H ^ eta_jk", star1 - cyc))
    star2 = hodge_star(G.omega2)
    rep.add(residual_check("g2.star_omega2", "*omega_2 = eta_4567", star2 - KForm.monomial(dim, 3, 4, 5, 6)))
    rep.add(residual_check("g2.star_omega2_psi", "*omega_2 = Psi^H / 6", star2 - horizontal_4form(S) * Fraction(1, 6)))
    rep.add(residual_check("g2.normalization", "omega ^ *omega = 7 vol",
                           wedge(G.omega, hodge_star(G.omega)) - volume(dim) * 7))
    rep.add(residual_check("g2.cocalibrated", "d * omega = 0", cocalibration(S)))
    rep.add(residual_check("g2.star_d_omega2", "*d omega_2 = 2 alpha omega_1",
                           hodge_star(S.d(G.omega2)) - G.omega1 * (alpha * 2)))
    rep.add(residual_check("g2.star_d_omega1", "*d omega_1 = 2 delta omega_1 + 12 alpha omega_2",
                           hodge_star(S.d(G.omega1)) - G.omega1 * (delta * 2) - G.omega2 * (alpha * 12)))
    rep.add(residual_check("g2.inner", "<d omega, *omega> = 24 alpha + 12 delta",
                           g2_inner(S) - alpha * 24 - delta * 12))
    T = g2_characteristic_torsion(S)
    rep.add(residual_check("g2.torsion_closed_form", "T = 2 alpha omega_1 + 2(delta - 4 alpha) omega_2",
                           T - G.omega1 * (alpha * 2) - G.omega2 * ((delta - alpha * 4) * 2)))
    if canonical_torsion is not None:
        rep.add(residual_check("g2.torsion_canonical", "characteristic G2 torsion equals canonical torsion",
                               T - canonical_torsion))
    return rep


# the canonical spinor

def _nullspace_vector(A):
    """One nonzero kernel vector of a square matrix of Exprs (exact elimination), or None."""
    n = len(A)
    rows = [[as_expr(x) for x in row] for row in A]
    pivots = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, n) if not rows[i][col].is_zero), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = ONE / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and not rows[i][col].is_zero:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [ZERO] * n
    v[f] = ONE
    for i, c in enumerate(pivots):
        v[c] = -rows[i][f]
    return v


def omega_spectrum_ok(M) -> bool:
    """``(M + 7)(M - 1) = 0`` with trace 0: eigenvalue -7 once and +1 seven times."""
    eye = identity()
    prod = mat_mul(mat_add(M, eye, 7), mat_add(M, eye, -1))
    return mat_is_zero(prod) and as_expr(trace(M)).is_zero


def _spectrum_flipped(M) -> bool:
    eye = identity()
    prod = mat_mul(mat_add(M, eye, -7), mat_add(M, eye, 1))
    return mat_is_zero(prod) and as_expr(trace(M)).is_zero


def canonical_spinor(S: A3CStructure, rep: CliffordRep | None = None) -> Spinor:
    """The -7 eigenspinor of omega, unit when its norm is rational; first nonzero entry positive."""
    rep = rep or build_clifford()
    M = form_action(g2_form(S).omega, rep)
    if not omega_spectrum_ok(M):
        if _spectrum_flipped(M):
            raise SpectrumMismatch("omega acts with spectrum (+7, -1^7): orientation is reversed")
        raise SpectrumMismatch("omega does not act with spectrum (-7, +1^7)")
    v = _nullspace_vector(mat_add(M, identity(), 7))
    lead = next(x for x in v if not x.is_zero)
    v = [x / lead for x in v]
    psi = Spinor(v)
    root = rational_sqrt(psi.norm_squared())
    return psi * (ONE / Expr(root)) if root is not None else psi


def torsion_action(S: A3CStructure, T: KForm, psi: Spinor, rep: CliffordRep | None = None) -> Spinor:
    return clifford_mul(T, psi, rep)


# spinorial derivatives

def spin_derivative(conn: Connection, a: int, psi: Spinor, rep: CliffordRep | None = None) -> Spinor:
    """``nabla_{e_a} psi = 1/2 sum_{b<c} g(nabla_{e_a} e_b, e_c) e_b . e_c . psi`` for constant psi."""
    rep = rep or build_clifford()
    out = Spinor([ZERO] * SPINOR_DIM)
    for b, c in combinations(range(conn.dim), 2):
        g = conn.coeff(a, b, c)
        if not g.is_zero:
            out = out + apply(rep.word((b, c)), psi) * (g / 2)
    return out


@dataclass(frozen=True)
class KillingNumbers:
    numbers: tuple  # one exact scalar per frame direction

    def __getitem__(self, a):
        return self.numbers[a]


def killing_numbers(conn: Connection, psi: Spinor, rep: CliffordRep | None = None) -> KillingNumbers:
    """``mu_a`` with ``nabla_{e_a} psi = mu_a e_a . psi``; NotGeneralizedKilling names the first bad direction."""
    rep = rep or build_clifford()
    out = []
    for a in range(conn.dim):
        d = spin_derivative(conn, a, psi, rep)
        k = apply(rep[a], psi)
        mu = d.dot(k) / k.norm_squared()
        if d != k * mu:
            raise NotGeneralizedKilling(f"direction e_{a + 1}: derivative is not a multiple of e_{a + 1} . psi")
        out.append(mu)
    return KillingNumbers(tuple(out))


def generalized_killing_check(S: A3CStructure, psi: Spinor, rep: CliffordRep | None = None) -> KillingNumbers:
    return killing_numbers(levi_civita(S.geometry), psi, rep)


def expected_killing_numbers(S: A3CStructure, which: int | None) -> tuple:
    """Closed-form numbers: ``which=None`` for psi_0, ``i`` for ``psi_i = xi_i . psi_0``."""
    alpha, delta = _sasaki_pair(S)
    if which is None:
        return tuple((alpha * 2 - delta) / 2 if a < 3 else alpha * Fraction(-3, 2) for a in range(S.dim))
    out = []
    for a in range(S.dim):
        if a == which:
            out.append((alpha * 2 - delta) / 2)
        elif a < 3:
            out.append((delta * 3 - alpha * 2) / 2)
        else:
            out.append(alpha / 2)
    return tuple(out)


def phi_clifford_sign(S: A3CStructure, psi0: Spinor, i: int, x: int, rep: CliffordRep | None = None) -> int | None:
    """``s`` with ``phi_i^H(e_x) . psi_0 = s e_x . xi_i . psi_0``, or None."""
    lhs = clifford_mul(S.phi[i].column(x), psi0, rep)
    rhs = clifford_mul(x, clifford_mul(i, psi0, rep), rep)
    for s in (1, -1):
        if lhs == rhs * s:
            return s
    return None


def spinor_checks(S: A3CStructure, canonical: Connection | None = None, canonical_torsion: KForm | None = None,
                  rep: CliffordRep | None = None) -> Report:
    """Spectrum, torsion action, Clifford identities and generalized Killing numbers."""
    rep_ = rep or build_clifford()
    alpha, delta = _sasaki_pair(S)
    out = Report()
    M = form_action(g2_form(S).omega, rep_)
    out.add(bool_check("spinor.spectrum", "omega acts with eigenvalues -7 (once) and +1 (seven times)",
                       omega_spectrum_ok(M)))
    psi0 = canonical_spinor(S, rep_)
    out.add(residual_check("spinor.eigen", "omega . psi_0 = -7 psi_0", list(apply(M, psi0) + psi0 * 7)))
    out.add(residual_check("spinor.unit", "|psi_0| = 1", psi0.norm_squared() - 1))
    T = canonical_torsion if canonical_torsion is not None else g2_characteristic_torsion(S)
    out.add(residual_check("spinor.torsion", "T . psi_0 = -(4 alpha + 2 delta) psi_0",
                           list(clifford_mul(T, psi0, rep_) + psi0 * (alpha * 4 + delta * 2))))
    if canonical is not None:
        bad = [list(spin_derivative(canonical, a, psi0, rep_)) for a in range(S.dim)]
        out.add(residual_check("spinor.parallel", "canonical connection parallelizes psi_0", bad))
    signs = {phi_clifford_sign(S, psi0, i, x, rep_) for i in range(3) for x in S.horizontal}
    out.add(bool_check("spinor.phi_identity", "phi_i^H(X) . psi_0 = X . xi_i . psi_0 on H", signs == {1},
                       f"sign pattern found: {sorted(map(str, signs))}"))
    xi_bad = []
    for i, j, k in CYCLIC:
        lhs = clifford_mul(i, clifford_mul(j, psi0, rep_), rep_)
        xi_bad.append(list(lhs - clifford_mul(k, psi0, rep_)))
    out.add(residual_check("spinor.xi_identity", "xi_i . xi_j . psi_0 = xi_k . psi_0", xi_bad))
    lc = levi_civita(S.geometry)
    for label, which, psi in [("psi0", None, psi0)] + [(f"psi{i + 1}", i, clifford_mul(i, psi0, rep_))
                                                        for i in range(3)]:
        want = expected_killing_numbers(S, which)
        try:
            got = killing_numbers(lc, psi, rep_).numbers
        except NotGeneralizedKilling as exc:
            out.add(Check(f"spinor.killing_{label}", "generalized Killing numbers", "fail", str(exc)))
            continue
        diff = [g - w for g, w in zip(got, want)]
        detail = ", ".join(str(g) for g in got)
        c = residual_check(f"spinor.killing_{label}", "generalized Killing numbers match closed form", diff)
        if not c.passed:
            c.residual = f"found ({detail})"
        out.add(c)
    return out


def killing_number_identities() -> Report:
    """Parameter-level statements about when Killing numbers coincide."""
    from .scalar import param

    alpha, delta = param("alpha"), param("delta")
    rep = Report()
    mu_h, mu_v = alpha * Fraction(-3, 2), (alpha * 2 - delta) / 2
    rep.add(residual_check("spinor.nearly_parallel", "mu_H = mu_V exactly at delta = 5 alpha",
                           (mu_v - mu_h) - (alpha * 5 - delta) / 2))
    # psi_i numbers (2a - d)/2, (3d - 2a)/2, a/2 at d = a
    at_alpha = ((alpha * 2 - alpha) / 2, (alpha * 3 - alpha * 2) / 2, alpha / 2)
    rep.add(bool_check("spinor.three_sasaki", "at delta = alpha the psi_i numbers all equal alpha/2",
                       all(x == alpha / 2 for x in at_alpha)))
    return rep


# S^7 pointwise

def alpha_ijk(x, i: int, j: int, k: int, rep: CliffordRep | None = None) -> Expr:
    """``-g(kappa_i kappa_j kappa_k x, x)``."""
    rep = rep or build_clifford()
    x = Spinor(x)
    return -apply(rep.word((i, j, k)), x).dot(x)


def _require_unit(x) -> Spinor:
    x = Spinor(x)
    if x.norm_squared() != 1:
        raise NonUnitPoint(f"point {x} has squared norm {x.norm_squared()}")
    return x


def s7_geometry(rep: CliffordRep | None = None) -> LieFrameGeometry:
    """Pointwise frame ``e_i(x) = kappa_i x`` with ``[e_i, e_j] = 2 sum_k alpha_ijk(x) e_k``."""
    rep = rep or build_clifford()

    def oracle(x, a, b):
        x = _require_unit(x)
        if a == b:
            return {}
        return {k: alpha_ijk(x, a, b, k, rep) * 2 for k in range(7)}

    names = tuple(f"e{i}" for i in range(1, 8))
    return LieFrameGeometry(FrameSpace(names), PointwiseBrackets(7, oracle))


def s7_structure(rep: CliffordRep | None = None) -> A3CStructure:
    return A3CStructure(s7_geometry(rep), standard_phi(1), "s7_cartan_schouten")


_Q = Fraction
# rational unit points off the loci where all three N_phi_i vanish
SAMPLE_POINTS = (
    (_Q(3, 5), _Q(4, 5), 0, 0, 0, 0, 0, 0),
    (_Q(1, 2), _Q(1, 2), _Q(1, 2), _Q(1, 2), 0, 0, 0, 0),
    (_Q(2, 3), _Q(2, 3), _Q(1, 3), 0, 0, 0, 0, 0),
    (_Q(2, 7), _Q(3, 7), _Q(6, 7), 0, 0, 0, 0, 0),
    (_Q(1, 4),) * 7 + (_Q(3, 4),),
    (0, _Q(2, 3), 0, _Q(1, 3), 0, _Q(2, 3), 0, 0),
    (_Q(1, 2), 0, _Q(1, 2), 0, _Q(1, 2), 0, _Q(1, 2), 0),
    (0, 0, _Q(3, 5), 0, 0, 0, _Q(4, 5), 0),
)


def default_points(count: int = 3) -> list[Spinor]:
    """The first ``count`` sample points.

    Basis spinors are avoided on purpose: at several of them every N_phi_i
    vanishes although the tensors are nonzero as fields.
    """
    if not 1 <= count <= len(SAMPLE_POINTS):
        raise ValueError(f"between 1 and {len(SAMPLE_POINTS)} sample points are available")
    return [Spinor(v) for v in SAMPLE_POINTS[:count]]


def s7_point_report(x, rep: CliffordRep | None = None, S: A3CStructure | None = None) -> Report:
    rep = rep or build_clifford()
    x = _require_unit(x)
    S = (S or s7_structure(rep)).at(x)
    G = S.geometry
    tag = "s7[" + ",".join(str(c) for c in x) + "]"
    out = Report()
    # bracket oracle against the ambient commutator 2 kappa_i kappa_j x
    bad = []
    for i, j in combinations(range(7), 2):
        lhs = apply(rep.word((i, j)), x) * 2
        rhs = Spinor([ZERO] * 8)
        for k, c in G.bracket(i, j).items():
            rhs = rhs + apply(rep[k], x) * c
        if lhs != rhs:
            bad.append(((i, j), list(lhs - rhs)))
    out.add(residual_check(f"{tag}.bracket_oracle", "[e_i, e_j] = 2 kappa_i kappa_j x = 2 sum alpha_ijk e_k", bad))
    table = {t: alpha_ijk(x, *t, rep) for t in product(range(7), repeat=3)}
    skew_bad = []
    for (i, j, k), v in table.items():
        if table[(j, i, k)] != -v or table[(i, k, j)] != -v:
            skew_bad.append(((i, j, k), v))
    out.add(residual_check(f"{tag}.alpha_skew", "alpha_ijk totally skew", skew_bad))
    delta = reeb_commutator(S)
    out.add(bool_check(f"{tag}.delta", "delta(x) = alpha_123(x)",
                       delta is not None and delta == table[(0, 1, 2)],
                       f"delta = {delta}, alpha_123 = {table[(0, 1, 2)]}"))
    N = [nijenhuis(S, i) for i in range(3)]
    skew = [n.skew_violation() for n in N]
    out.add(bool_check(f"{tag}.nijenhuis_skew", "every N_phi_i totally skew", all(w is None for w in skew),
                       f"first violation {skew}"))
    out.add(bool_check(f"{tag}.non_hypernormal", "some N_phi_i is nonzero", any(not n.is_zero for n in N)))
    A = a_tensors(S)
    out.add(residual_check(f"{tag}.A_zero", "A_ij = 0 on horizontal pairs", [A[k] for k in sorted(A)]))
    flat = Connection(G, {}).torsion_tensor()
    minus_bracket = [flat(a, b, c) + G.constant(a, b, c) for a, b, c in product(range(7), repeat=3)]
    out.add(residual_check(f"{tag}.flat_torsion", "flat connection torsion T(e_i,e_j,e_k) = -g([e_i,e_j],e_k)",
                           minus_bracket))
    out.add(bool_check(f"{tag}.flat_torsion_skew", "flat connection torsion totally skew", flat.is_skew()))
    return out


def s7_pointwise_suite(points=None, rep: CliffordRep | None = None) -> Report:
    rep = rep or build_clifford()
    points = default_points(3) if points is None else points
    S = s7_structure(rep)
    out = Report()
    for x in points:
        out.extend(s7_point_report(x, rep, S).checks)
    return out


def clifford_checks(rep: CliffordRep | None = None) -> Report:
    rep = rep or build_clifford()
    out = Report()
    bad = clifford_violations(rep.kappa)
    out.add(bool_check("clifford.relations", "kappa_i skew, kappa_i kappa_j + kappa_j kappa_i = -2 delta_ij",
                       not bad, f"{bad[:1]}"))
    out.add(bool_check("clifford.volume", "kappa_1 ... kappa_7 = +-Id", volume_sign(rep.kappa) == rep.volume_sign))
    eta_sq = all(mat_mul(form_action(KForm.monomial(7, i), rep), form_action(KForm.monomial(7, i), rep))
                 == mat_scale(identity(), -1) for i in range(7))
    out.add(bool_check("clifford.eta_square", "(eta_i action)^2 = -Id", eta_sq))
    return out
