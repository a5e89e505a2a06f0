"""Almost 3-contact metric structures on a Lie frame.

The Reeb vectors are always the first three frame vectors and the eta_i their
duals; horizontal indices are ``3 .. dim-1``.  Everything is evaluated on
frame vectors, so every check is an exact finite computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import InvalidStructure, NonUnitParam, UndeterminedAtNZero
from .frame_alg import (
    Bilinear,
    Endo,
    KForm,
    Trilinear,
    basis_vector,
    vadd,
    wedge,
)
from .liegeom import (
    LieFrameGeometry,
    ce_differential,
    covariant_derivative,
    lie_derivative_endo,
    lie_derivative_metric,
    levi_civita,
)
from .scalar import ONE, ZERO, Expr

CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
VERTICAL = (0, 1, 2)


def levi_civita_symbol(i: int, j: int, k: int) -> int:
    if len({i, j, k}) < 3:
        return 0
    return 1 if (i, j, k) in CYCLIC else -1


def complete(i: int, j: int) -> int:
    """The third index of ``{0, 1, 2}``."""
    return 3 - i - j


@dataclass
class A3CStructure:
    """Three endomorphisms over a frame geometry; xi_i = e_i, eta_i = e^i (i < 3)."""

    geometry: LieFrameGeometry
    phi: tuple
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.phi = tuple(self.phi)
        if len(self.phi) != 3:
            raise InvalidStructure("need exactly three endomorphisms")
        if (self.dim - 3) % 4:
            raise InvalidStructure(f"dimension {self.dim} is not of the form 4n+3")

    @property
    def dim(self) -> int:
        return self.geometry.dim

    @property
    def n(self) -> int:
        return (self.dim - 3) // 4

    @property
    def horizontal(self) -> range:
        return range(3, self.dim)

    def xi(self, i: int) -> dict:
        return basis_vector(i)

    def eta(self, i: int) -> KForm:
        return KForm.monomial(self.dim, i)

    def eta_pair(self, i: int, j: int) -> KForm:
        return KForm.monomial(self.dim, i, j)

    def eta123(self) -> KForm:
        return KForm.monomial(self.dim, 0, 1, 2)

    def at(self, point) -> "A3CStructure":
        """Freeze a pointwise geometry at ``point``."""
        if not self.geometry.is_pointwise:
            return self
        return A3CStructure(self.geometry.at(point), self.phi, self.name)

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def d(self, form: KForm) -> KForm:
        return ce_differential(self.geometry, form)

    def d_eta(self, i: int) -> KForm:
        return self.cached(("deta", i), lambda: self.d(self.eta(i)))


def standard_phi(n: int) -> tuple[Endo, Endo, Endo]:
    """The standard quaternionic endomorphisms on (xi_1..3, tau_1..4n).

    ``phi_i = eta_j (x) xi_k - eta_k (x) xi_j + sum_r [theta_r (x) tau_{in+r}
    - theta_{in+r} (x) tau_r + theta_{jn+r} (x) tau_{kn+r} - theta_{kn+r} (x) tau_{jn+r}]``.
    """
    dim = 4 * n + 3

    def tau(m):  # 0-based horizontal block position -> frame index
        return 3 + m

    out = []
    for i, j, k in CYCLIC:
        cols: dict[int, dict] = {}

        def put(src, dst, sign):
            cols.setdefault(src, {})[dst] = Expr(sign)

        put(j, k, 1)
        put(k, j, -1)
        bi, bj, bk = (i + 1) * n, (j + 1) * n, (k + 1) * n
        for r in range(n):
            put(tau(r), tau(bi + r), 1)
            put(tau(bi + r), tau(r), -1)
            put(tau(bj + r), tau(bk + r), 1)
            put(tau(bk + r), tau(bj + r), -1)
        out.append(Endo(dim, cols))
    return tuple(out)


# validation

@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def validate_structure(S: A3CStructure) -> ValidationResult:
    """Check every defining identity of an almost 3-contact metric structure."""
    n = S.dim
    ident = Endo.identity(n)
    for i in range(3):
        phi = S.phi[i]
        target = -ident + Endo.outer(S.eta(i), S.xi(i))
        w = (phi @ phi).first_difference(target)
        if w is not None:
            return ValidationResult(False, f"phi_{i + 1}^2 = -Id + eta_{i + 1} (x) xi_{i + 1}", w)
        if phi.column(i):
            return ValidationResult(False, f"phi_{i + 1} xi_{i + 1} = 0", (i,))
        compat = phi.transpose() @ phi
        w = compat.first_difference(ident - Endo.outer(S.eta(i), S.xi(i)))
        if w is not None:
            return ValidationResult(False, f"g(phi_{i + 1} X, phi_{i + 1} Y) = g(X, Y) - eta_{i + 1}(X) eta_{i + 1}(Y)", w)
    for i, j, k in CYCLIC:
        pi, pj, pk = S.phi[i], S.phi[j], S.phi[k]
        w = pk.first_difference(pi @ pj - Endo.outer(S.eta(j), S.xi(i)))
        if w is not None:
            return ValidationResult(False, f"phi_{k + 1} = phi_{i + 1} phi_{j + 1} - eta_{j + 1} (x) xi_{i + 1}", w)
        w = pk.first_difference(-(pj @ pi) + Endo.outer(S.eta(i), S.xi(j)))
        if w is not None:
            return ValidationResult(False, f"phi_{k + 1} = -phi_{j + 1} phi_{i + 1} + eta_{i + 1} (x) xi_{j + 1}", w)
        if vadd(pi.apply(S.xi(j)), S.xi(k), -1):
            return ValidationResult(False, f"xi_{k + 1} = phi_{i + 1} xi_{j + 1}", (i, j))
        if vadd(pj.apply(S.xi(i)), S.xi(k)):
            return ValidationResult(False, f"xi_{k + 1} = -phi_{j + 1} xi_{i + 1}", (j, i))
        for a in range(n):
            lhs = pj.column(a).get(i, ZERO)  # eta_i(phi_j e_a)
            rhs = ONE if a == k else ZERO
            if lhs != rhs:
                return ValidationResult(False, f"eta_{k + 1} = eta_{i + 1} o phi_{j + 1}", (a,))
    return ValidationResult(True)


def require_valid(S: A3CStructure):
    res = validate_structure(S)
    if not res.ok:
        raise InvalidStructure(f"{res.axiom} fails at {res.witness}")


# fundamental forms

def fundamental_form(phi: Endo) -> KForm:
    """``Phi(X, Y) = g(X, phi Y)``."""
    n = phi.dim
    coeffs = {}
    for a, b in combinations(range(n), 2):
        v = phi.entry(a, b)
        if not v.is_zero:
            coeffs[(a, b)] = v
    return KForm(n, 2, coeffs)


def fundamental_forms(S: A3CStructure) -> tuple[KForm, KForm, KForm]:
    return S.cached("Phi", lambda: tuple(fundamental_form(p) for p in S.phi))


def horizontal_split(S: A3CStructure, i: int) -> tuple[KForm, KForm]:
    """``(Phi_i^H, Phi_i - Phi_i^H)``; the second part equals ``-eta_jk``."""
    Phi = fundamental_forms(S)[i]
    horiz = Phi.restrict(S.horizontal)
    return horiz, Phi - horiz


def horizontal_forms(S: A3CStructure) -> tuple[KForm, KForm, KForm]:
    return S.cached("PhiH", lambda: tuple(horizontal_split(S, i)[0] for i in range(3)))


def fundamental_4form(S: A3CStructure) -> KForm:
    Phi = fundamental_forms(S)
    return wedge(Phi[0], Phi[0]) + wedge(Phi[1], Phi[1]) + wedge(Phi[2], Phi[2])


def horizontal_4form(S: A3CStructure) -> KForm:
    H = horizontal_forms(S)
    return wedge(H[0], H[0]) + wedge(H[1], H[1]) + wedge(H[2], H[2])


def d_Phi(S: A3CStructure, i: int) -> KForm:
    return S.cached(("dPhi", i), lambda: S.d(fundamental_forms(S)[i]))


# single almost contact metric structures

@dataclass
class ContactTriple:
    """One almost contact metric structure ``(phi, xi, eta)`` on the frame."""

    phi: Endo
    xi: dict
    eta: KForm

    @property
    def Phi(self) -> KForm:
        return fundamental_form(self.phi)


def contact_triple(S: A3CStructure, i: int) -> ContactTriple:
    return ContactTriple(S.phi[i], S.xi(i), S.eta(i))


@dataclass(frozen=True)
class SphereParam:
    a1: Fraction
    a2: Fraction
    a3: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2 != 1:
            raise NonUnitParam(f"({self.a1}, {self.a2}, {self.a3}) is not a unit vector")

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    @classmethod
    def from_pythagorean(cls, p: int, q: int, r: int, s: int) -> "SphereParam":
        """Rational unit vector from the quaternion-norm parametrization of S^2."""
        den = p * p + q * q + r * r + s * s
        return cls(Fraction(p * p + q * q - r * r - s * s, den),
                   Fraction(2 * (q * r + p * s), den),
                   Fraction(2 * (q * s - p * r), den))


def sphere_structure(S: A3CStructure, a) -> ContactTriple:
    """``(phi_a, xi_a, eta_a) = sum_i a_i (phi_i, xi_i, eta_i)`` for a unit ``a``."""
    a = a if isinstance(a, SphereParam) else SphereParam(*a)
    coeffs = [Expr(x) for x in a]
    phi = Endo.zero(S.dim)
    eta = KForm(S.dim, 1, {})
    xi: dict = {}
    for i in range(3):
        phi = phi + S.phi[i] * coeffs[i]
        eta = eta + S.eta(i) * coeffs[i]
        xi = vadd(xi, S.xi(i), coeffs[i])
    return ContactTriple(phi, xi, eta)


# Nijenhuis tensors

def nijenhuis_of(G: LieFrameGeometry, t: ContactTriple) -> Trilinear:
    """``N(X,Y) = [phiX,phiY] + phi^2[X,Y] - phi[phiX,Y] - phi[X,phiY] + d eta(X,Y) xi``, lowered."""
    phi = t.phi
    deta = ce_differential(G, t.eta)
    n = G.dim
    table = {}
    for a, b in combinations(range(n), 2):
        ea, eb = basis_vector(a), basis_vector(b)
        pa, pb = phi.column(a), phi.column(b)
        v = G.bracket_vectors(pa, pb)
        v = vadd(v, phi.apply(phi.apply(G.bracket(a, b))))
        v = vadd(v, phi.apply(G.bracket_vectors(pa, eb)), -1)
        v = vadd(v, phi.apply(G.bracket_vectors(ea, pb)), -1)
        c = deta.coeff((a, b))
        if not c.is_zero:
            v = vadd(v, t.xi, c)
        for x, val in v.items():
            table[(a, b, x)] = val
    return Trilinear(n, table)


def nijenhuis(S: A3CStructure, i: int) -> Trilinear:
    return S.cached(("N", i), lambda: nijenhuis_of(S.geometry, contact_triple(S, i)))


def nijenhuis_pair(S: A3CStructure, i: int, j: int) -> Trilinear:
    """``N_{i,j} = [phi_i, phi_j] + d eta_i (x) xi_j + d eta_j (x) xi_i``, lowered."""
    G = S.geometry
    pi, pj = S.phi[i], S.phi[j]
    sym = pi @ pj + pj @ pi
    di, dj = S.d_eta(i), S.d_eta(j)
    n = S.dim
    table = {}
    for a, b in combinations(range(n), 2):
        ea, eb = basis_vector(a), basis_vector(b)
        v = G.bracket_vectors(pi.column(a), pj.column(b))
        v = vadd(v, pi.apply(G.bracket_vectors(pj.column(a), eb)), -1)
        v = vadd(v, pj.apply(G.bracket_vectors(ea, pi.column(b))), -1)
        v = vadd(v, G.bracket_vectors(pj.column(a), pi.column(b)))
        v = vadd(v, pj.apply(G.bracket_vectors(pi.column(a), eb)), -1)
        v = vadd(v, pi.apply(G.bracket_vectors(ea, pj.column(b))), -1)
        v = vadd(v, sym.apply(G.bracket(a, b)))
        v = vadd(v, S.xi(j), di.coeff((a, b)))
        v = vadd(v, S.xi(i), dj.coeff((a, b)))
        for x, val in v.items():
            table[(a, b, x)] = val
    return Trilinear(n, table)


def sphere_nijenhuis(S: A3CStructure, a) -> Trilinear:
    return nijenhuis_of(S.geometry, sphere_structure(S, a))


def sphere_identity_residual(S: A3CStructure, a, weighted: bool = True) -> Trilinear:
    """``N_{phi_a} - sum_i w_i N_{phi_i} - sum_{i<j} a_i a_j N_{i,j}``.

    With ``weighted`` the weights are ``w_i = a_i^2``, which is what bilinearity of
    ``phi -> N_phi`` together with ``N_{i,i} = 2 N_{phi_i}`` forces.  With
    ``weighted=False`` all ``w_i = 1``, the unweighted variant sometimes quoted.
    """
    a = a if isinstance(a, SphereParam) else SphereParam(*a)
    coeffs = [Expr(x) for x in a]
    res = sphere_nijenhuis(S, a)
    for i in range(3):
        w = coeffs[i] * coeffs[i] if weighted else ONE
        res = res - nijenhuis(S, i) * w
    for i, j in combinations(range(3), 2):
        res = res - nijenhuis_pair(S, i, j) * (coeffs[i] * coeffs[j])
    return res


def lemma_n_rhs(S: A3CStructure, i: int) -> Trilinear:
    """Expression of ``N_{phi_i}`` through ``d Phi_j``, ``d Phi_k``, ``d eta_j``, ``d eta_k``."""
    j, k = (i + 1) % 3, (i + 2) % 3
    pi, pj = S.phi[i], S.phi[j]
    dPj, dPk = d_Phi(S, j), d_Phi(S, k)
    dej, dek = S.d_eta(j), S.d_eta(k)
    n = S.dim

    def f(a, b, c):
        X, Y = basis_vector(a), basis_vector(b)
        iX, iY, jZ = pi.column(a), pi.column(b), pj.column(c)
        v = -dPj.evaluate(X, Y, jZ) + dPj.evaluate(iX, iY, jZ)
        v = v + dPk.evaluate(X, iY, jZ) + dPk.evaluate(iX, Y, jZ)
        if a == i:
            v = v - (dej.evaluate(iY, jZ) + dek.evaluate(Y, jZ))
        if b == i:
            v = v + dej.evaluate(iX, jZ) + dek.evaluate(X, jZ)
        if c == j:
            v = v + dej.evaluate(X, Y) - dej.evaluate(iX, iY)
            v = v - (dek.evaluate(X, iY) + dek.evaluate(iX, Y))
        return v

    return Trilinear.from_function(n, f)


def lemma_n_residual(S: A3CStructure, i: int) -> Trilinear:
    return nijenhuis(S, i) - lemma_n_rhs(S, i)


def skew_on_horizontal(N: Trilinear, S: A3CStructure) -> bool:
    return N.is_skew(S.horizontal)


# Reeb data

def a_tensors(S: A3CStructure) -> dict[tuple[int, int], Bilinear]:
    """``A_ij(X,Y) = g((L_{xi_j} phi_i)X, Y) + d eta_j(X, phi_i Y) + d eta_j(phi_i X, Y)`` on H."""

    def build():
        H = list(S.horizontal)
        out = {}
        for i, j in product(range(3), repeat=2):
            L = lie_derivative_endo(S.geometry, S.xi(j), S.phi[i])
            de = S.d_eta(j)
            pi = S.phi[i]
            coeffs = {}
            for a in H:
                for b in H:
                    v = L.entry(b, a)
                    v = v + de.evaluate(basis_vector(a), pi.column(b)) + de.evaluate(pi.column(a), basis_vector(b))
                    if not v.is_zero:
                        coeffs[(a, b)] = v
            out[(i, j)] = Bilinear(S.dim, coeffs)
        return out

    return S.cached("A", build)


def reeb_commutator(S: A3CStructure) -> Expr | None:
    """``delta`` with ``eta_k([xi_i, xi_j]) = 2 delta eps_ijk``, or None."""
    delta = S.geometry.bracket(0, 1).get(2, ZERO) / 2
    for i, j, k in product(range(3), repeat=3):
        val = S.geometry.bracket(i, j).get(k, ZERO)
        if val != 2 * delta * levi_civita_symbol(i, j, k):
            return None
    return delta


@dataclass(frozen=True)
class ReebKillingAnalysis:
    beta: Expr | None
    witness: str | None = None


def reeb_killing_analysis(S: A3CStructure) -> ReebKillingAnalysis:
    """Extract beta from ``A_i = 0`` and ``A_ij = -A_ji = beta Phi_k``, or say what fails."""
    if S.n == 0:
        raise UndeterminedAtNZero("the horizontal distribution is trivial")
    A = a_tensors(S)
    PhiH = horizontal_forms(S)
    for i in range(3):
        if not A[(i, i)].is_zero:
            (a, b), v = min(A[(i, i)].items())
            return ReebKillingAnalysis(None, f"A_{i + 1}(e_{a + 1}, e_{b + 1}) = {v}, expected 0")
    # solve beta on the first pair where Phi_3 is nonzero, then verify everything
    (a, b), phi_val = min(PhiH[2].items())
    beta = A[(0, 1)](a, b) / phi_val
    H = list(S.horizontal)
    for i, j, k in CYCLIC:
        for x in H:
            for y in H:
                target = beta * PhiH[k](x, y)
                if A[(i, j)](x, y) != target:
                    return ReebKillingAnalysis(
                        None, f"A_{i + 1}{j + 1}(e_{x + 1}, e_{y + 1}) = {A[(i, j)](x, y)}, "
                              f"expected beta*Phi_{k + 1} = {target} with beta = {beta}")
                if A[(j, i)](x, y) != -target:
                    return ReebKillingAnalysis(
                        None, f"A_{j + 1}{i + 1}(e_{x + 1}, e_{y + 1}) = {A[(j, i)](x, y)}, "
                              f"expected -beta*Phi_{k + 1} = {-target} with beta = {beta}")
    return ReebKillingAnalysis(beta)


def reeb_killing(S: A3CStructure) -> Expr | None:
    return reeb_killing_analysis(S).beta


def reeb_is_killing(S: A3CStructure, i: int) -> bool:
    return lie_derivative_metric(S.geometry, S.xi(i)).is_zero


def canonical_condition_three(S: A3CStructure) -> tuple | None:
    """First horizontal triple where ``N_{phi_i} - dPhi_i(phi_i., phi_i., phi_i.)`` depends on i."""
    H = list(S.horizontal)
    vals = []
    for i in range(3):
        N = nijenhuis(S, i)
        dP = d_Phi(S, i)
        p = S.phi[i]
        vals.append(lambda a, b, c, N=N, dP=dP, p=p:
                    N(a, b, c) - dP.evaluate(p.column(a), p.column(b), p.column(c)))
    for a, b, c in product(H, repeat=3):
        if a == b:
            continue
        v0 = vals[0](a, b, c)
        for i in (1, 2):
            if vals[i](a, b, c) != v0:
                return (i, (a, b, c))
    return None


# Sasaki-type pattern matching

def match_three_alpha_delta(S: A3CStructure) -> tuple[Expr | None, Expr] | None:
    """Return ``(alpha, delta)`` if ``d eta_i = 2 alpha Phi_i + 2(alpha - delta) eta_jk``.

    For ``n = 0`` alpha is undetermined and returned as None.
    """
    Phi = fundamental_forms(S)
    PhiH = horizontal_forms(S)
    delta = -S.d_eta(0).coeff((1, 2)) / 2
    if S.n == 0:
        for i, j, k in CYCLIC:
            if S.d_eta(i) != S.eta_pair(j, k) * (-2 * delta):
                return None
        return (None, delta)
    (a, b), v = min(PhiH[0].items())
    alpha = S.d_eta(0)(a, b) / (2 * v)
    if alpha.is_zero:
        return None
    for i, j, k in CYCLIC:
        if S.d_eta(i) != Phi[i] * (2 * alpha) + S.eta_pair(j, k) * (2 * (alpha - delta)):
            return None
    return (alpha, delta)


def match_three_delta_cosymplectic(S: A3CStructure) -> Expr | None:
    delta = -S.d_eta(0).coeff((1, 2)) / 2
    for i, j, k in CYCLIC:
        if S.d_eta(i) != S.eta_pair(j, k) * (-2 * delta):
            return None
        if not d_Phi(S, i).is_zero:
            return None
    return delta


# classification

@dataclass
class ClassificationReport:
    valid_a3c: bool
    validation_failure: str | None = None
    reeb_killing_all: bool = False
    nijenhuis_skew_on_H: tuple = (False, False, False)
    hypernormal: bool = False
    reeb_commutator_delta: Expr | None = None
    reeb_killing_beta: Expr | None = None
    reeb_killing_witness: str | None = None
    beta_undetermined: bool = False
    condition_three: bool = False
    canonical: bool = False
    parallel: bool = False
    three_delta_cosymplectic: Expr | None = None
    three_alpha_delta_sasaki: tuple | None = None
    alpha_undetermined: bool = False
    degenerate: bool = False
    phi_compatible_exists: tuple = (False, False, False)

    @property
    def is_three_alpha_delta_sasaki(self) -> bool:
        return self.three_alpha_delta_sasaki is not None

    def to_json(self) -> dict:
        def s(x):
            return None if x is None else str(x)

        sasaki = None
        if self.three_alpha_delta_sasaki is not None:
            alpha, delta = self.three_alpha_delta_sasaki
            sasaki = {"alpha": s(alpha), "delta": s(delta)}
        return {
            "valid_a3c": self.valid_a3c,
            "validation_failure": self.validation_failure,
            "reeb_killing_all": self.reeb_killing_all,
            "nijenhuis_skew_on_H": list(self.nijenhuis_skew_on_H),
            "hypernormal": self.hypernormal,
            "reeb_commutator_delta": s(self.reeb_commutator_delta),
            "reeb_killing_beta": s(self.reeb_killing_beta),
            "reeb_killing_witness": self.reeb_killing_witness,
            "beta_undetermined": self.beta_undetermined,
            "condition_three": self.condition_three,
            "canonical": self.canonical,
            "parallel": self.parallel,
            "three_delta_cosymplectic": s(self.three_delta_cosymplectic),
            "three_alpha_delta_sasaki": sasaki,
            "alpha_undetermined": self.alpha_undetermined,
            "degenerate": self.degenerate,
            "phi_compatible_exists": list(self.phi_compatible_exists),
        }


def classify(S: A3CStructure) -> ClassificationReport:
    """Fill every classification field by exact pattern matching."""
    from .connections import phi_compatible_exists  # local: connections imports acms

    val = validate_structure(S)
    if not val.ok:
        return ClassificationReport(False, f"{val.axiom} at {val.witness}")
    rep = ClassificationReport(True)
    rep.reeb_killing_all = all(reeb_is_killing(S, i) for i in range(3))
    rep.nijenhuis_skew_on_H = tuple(skew_on_horizontal(nijenhuis(S, i), S) for i in range(3))
    rep.hypernormal = all(nijenhuis(S, i).is_zero for i in range(3))
    rep.reeb_commutator_delta = reeb_commutator(S)
    if S.n == 0:
        rep.beta_undetermined = True
    else:
        analysis = reeb_killing_analysis(S)
        rep.reeb_killing_beta = analysis.beta
        rep.reeb_killing_witness = analysis.witness
    rep.condition_three = canonical_condition_three(S) is None
    rep.canonical = (all(rep.nijenhuis_skew_on_H) and rep.reeb_killing_all and rep.condition_three
                     and rep.reeb_killing_beta is not None)
    rep.parallel = rep.canonical and rep.reeb_killing_beta.is_zero
    rep.three_delta_cosymplectic = match_three_delta_cosymplectic(S)
    sasaki = match_three_alpha_delta(S)
    if sasaki is not None:
        rep.three_alpha_delta_sasaki = sasaki
        rep.alpha_undetermined = sasaki[0] is None
        rep.degenerate = sasaki[1].is_zero
    rep.phi_compatible_exists = tuple(phi_compatible_exists(S, e).ok for e in
                                      ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    return rep


# Levi-Civita comparisons used by property checks

def levi_civita_phi(S: A3CStructure, i: int) -> list[Endo]:
    """``[nabla^g_{e_a} phi_i for a in frame]``."""
    return covariant_derivative(levi_civita(S.geometry), S.phi[i])


def skew_lemma_conditions(S: A3CStructure, t: ContactTriple) -> tuple[bool, bool, bool, bool]:
    """The four equivalent skew-symmetry conditions on H for one structure ``t``.

    Quadratic conditions are tested on ``e_a`` and ``e_a + e_b``, which determine a
    quadratic form completely.
    """
    G = S.geometry
    lc = levi_civita(G)
    phi = t.phi
    dphi = covariant_derivative(lc, phi)
    H = list(S.horizontal)

    def nabla_phi(x: dict) -> Endo:
        out = Endo.zero(S.dim)
        for a, c in x.items():
            out = out + dphi[a] * c
        return out

    def g(u, v):
        from .frame_alg import vdot
        return vdot(u, v)

    c1 = nijenhuis_of(G, t).is_skew(H)

    probes = [basis_vector(a) for a in H] + [vadd(basis_vector(a), basis_vector(b)) for a, b in combinations(H, 2)]
    c2 = True
    for X in probes:
        pX = phi.apply(X)
        lhs_vec = nabla_phi(X).apply(X)
        rhs_vec = nabla_phi(pX).apply(pX)
        if any(g(lhs_vec, basis_vector(y)) != g(rhs_vec, basis_vector(y)) for y in H):
            c2 = False
            break

    c3 = True
    for a, b in product(H, repeat=2):
        X, Y = basis_vector(a), basis_vector(b)
        pX, pY = phi.apply(X), phi.apply(Y)
        lhs = vadd(nabla_phi(X).apply(Y), nabla_phi(Y).apply(X))
        rhs = vadd(nabla_phi(pX).apply(pY), nabla_phi(pY).apply(pX))
        if any(g(lhs, basis_vector(z)) != g(rhs, basis_vector(z)) for z in H):
            c3 = False
            break

    c4 = True
    for Z in probes:
        pZ = phi.apply(Z)
        v = vadd(nabla_phi(pZ).apply(Z), nabla_phi(Z).apply(pZ))
        if any(not g(v, basis_vector(y)).is_zero for y in H):
            c4 = False
            break
    return c1, c2, c3, c4
