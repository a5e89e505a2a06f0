"""Metric connections with skew torsion adapted to an almost 3-contact metric structure.

Three families are built here: the one-parameter family of connections
compatible with a single structure of the associated sphere, the
characteristic connection of each ``(phi_i, xi_i, eta_i)``, and the canonical
connection.  Every construction is followed by exact post-checks that callers
can run through the ``*_checks`` helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .acms import (
    CYCLIC,
    A3CStructure,
    ContactTriple,
    classify,
    contact_triple,
    d_Phi,
    fundamental_forms,
    horizontal_forms,
    match_three_alpha_delta,
    nijenhuis,
    nijenhuis_of,
    reeb_commutator,
    reeb_is_killing,
    sphere_structure,
)
from .errors import (
    ExistenceFailed,
    NonNegativeBeta,
    NotCanonical,
    NotKilling,
    NotSasakiFamily,
    NotSkew,
)
from .frame_alg import (
    Endo,
    KForm,
    SymBilinear,
    basis_vector,
    contract,
    phi_twist,
    vadd,
    wedge,
)
from .liegeom import (
    Connection,
    ce_differential,
    connection_from_torsion,
    covariant_derivative,
    levi_civita,
    lie_derivative_endo,
    lie_derivative_metric,
    ricci,
)
from .report import Check, Report, bool_check, residual_check
from .scalar import ZERO, Expr, as_expr, definite_sign, param

POLES = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


# existence of phi-compatible connections

@dataclass(frozen=True)
class CompatibilityResult:
    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def phi_compatible_exists(S: A3CStructure, a=(1, 0, 0)) -> CompatibilityResult:
    """The three conditions for a phi_a-compatible connection, first failure reported."""
    H = list(S.horizontal)
    t = sphere_structure(S, a)
    N = nijenhuis_of(S.geometry, t)
    w = N.skew_violation(H)
    if w is not None:
        return CompatibilityResult(False, "(i) N_phi skew on H", w)
    for i in range(3):
        L = lie_derivative_metric(S.geometry, S.xi(i))
        for x, y in product(H, repeat=2):
            if not L(x, y).is_zero:
                return CompatibilityResult(False, f"(ii) L_xi{i + 1} g = 0 on H", (i, x, y))
    for x in H:
        L = lie_derivative_metric(S.geometry, basis_vector(x))
        for i, j in product(range(3), repeat=2):
            if not L(i, j).is_zero:
                return CompatibilityResult(False, "(iii) L_X g(xi_i, xi_j) = 0", (x, i, j))
    return CompatibilityResult(True)


def _compatible_torsion_of(S: A3CStructure, t: ContactTriple, gamma) -> KForm:
    G = S.geometry
    n = S.dim
    H = list(S.horizontal)
    N = nijenhuis_of(G, t)
    dPhi = ce_differential(G, t.Phi)
    phi = t.phi
    coeffs = {}
    for x, y, z in combinations(H, 3):
        v = N(x, y, z) + dPhi.evaluate(phi.column(x), phi.column(y), phi.column(z)) * -1
        if not v.is_zero:
            coeffs[(x, y, z)] = v
    for i in range(3):
        de = S.d_eta(i)
        for x, y in combinations(H, 2):
            v = de(x, y)
            if not v.is_zero:
                coeffs[(i, x, y)] = v
    for i, j in combinations(range(3), 2):
        br = G.bracket(i, j)
        for x in H:
            v = br.get(x)
            if v is not None and not v.is_zero:
                coeffs[(i, j, x)] = -v
    g = as_expr(gamma)
    if not g.is_zero:
        coeffs[(0, 1, 2)] = g
    return KForm(n, 3, coeffs)


def phi_compatible_torsion(S: A3CStructure, gamma, a=(1, 0, 0)) -> KForm:
    """Torsion of the phi_a-compatible connection with ``T(xi_1, xi_2, xi_3) = gamma``."""
    res = phi_compatible_exists(S, a)
    if not res.ok:
        raise ExistenceFailed(f"{res.condition} fails at {res.witness}")
    return _compatible_torsion_of(S, sphere_structure(S, a), gamma)


def phi_compatible_connection(S: A3CStructure, gamma, a=(1, 0, 0)) -> Connection:
    return connection_from_torsion(S.geometry, phi_compatible_torsion(S, gamma, a))


def preserves_splitting(conn: Connection, S: A3CStructure) -> bool:
    V = set(range(3))
    for (a, b), v in conn.items():
        inside = V if b in V else set(S.horizontal)
        if any(c not in inside for c in v):
            return False
    return True


def compatibility_residual(conn: Connection, S: A3CStructure, phi: Endo) -> list:
    """``g((nabla_X phi) Y, Z)`` on horizontal triples, nonzero entries only."""
    H = list(S.horizontal)
    dphi = covariant_derivative(conn, phi)
    bad = []
    for x in H:
        for y in H:
            col = dphi[x].column(y)
            for z, v in col.items():
                if z >= 3 and not v.is_zero:
                    bad.append(((x, y, z), v))
    return bad


def nt_identity_residual(S: A3CStructure, t: ContactTriple, T: KForm) -> list:
    """``N_phi(X,Y,Z) - [T(X,Y,Z) - T(phiX,phiY,Z) - T(phiX,Y,phiZ) - T(X,phiY,phiZ)]`` on H."""
    N = nijenhuis_of(S.geometry, t)
    H = list(S.horizontal)
    phi = t.phi
    bad = []
    for x, y, z in product(H, repeat=3):
        X, Y, Z = basis_vector(x), basis_vector(y), basis_vector(z)
        pX, pY, pZ = phi.column(x), phi.column(y), phi.column(z)
        rhs = T.evaluate(X, Y, Z) - T.evaluate(pX, pY, Z) - T.evaluate(pX, Y, pZ) - T.evaluate(X, pY, pZ)
        v = N(x, y, z) - rhs
        if not v.is_zero:
            bad.append(((x, y, z), v))
    return bad


def nabla_xi_residual(S: A3CStructure, conn: Connection, gamma, delta) -> list:
    """``nabla_X xi_i - c (eta_k(X) xi_j - eta_j(X) xi_k)`` with ``c = (2 delta + gamma)/2``."""
    c = (as_expr(delta) * 2 + as_expr(gamma)) / 2
    return _nabla_xi_pattern(S, conn, c)


def _nabla_xi_pattern(S: A3CStructure, conn: Connection, c) -> list:
    bad = []
    for i, j, k in CYCLIC:
        for x in range(S.dim):
            got = conn.nabla(x, i)
            want = {}
            if x == k:
                want = vadd(want, basis_vector(j), c)
            if x == j:
                want = vadd(want, basis_vector(k), -c)
            diff = vadd(got, want, -1)
            if diff:
                bad.append(((x, i), diff))
    return bad


def nabla_xi_phi_residual(S: A3CStructure, conn: Connection, a=(1, 0, 0)) -> list:
    """``g((nabla_xi_i phi)X, Y) - g((L_xi_i phi)X, Y) - d eta_i(phi X, Y) - d eta_i(X, phi Y)`` on H."""
    t = sphere_structure(S, a)
    phi = t.phi
    dphi = covariant_derivative(conn, phi)
    H = list(S.horizontal)
    bad = []
    for i in range(3):
        L = lie_derivative_endo(S.geometry, S.xi(i), phi)
        de = S.d_eta(i)
        for x, y in product(H, repeat=2):
            lhs = dphi[i].entry(y, x)
            rhs = L.entry(y, x) + de.evaluate(phi.column(x), basis_vector(y)) + de.evaluate(basis_vector(x), phi.column(y))
            if lhs != rhs:
                bad.append(((i, x, y), lhs - rhs))
    return bad


# characteristic connections

def characteristic_torsion(S: A3CStructure, i: int) -> KForm:
    """``eta ^ d eta + N + d^phi Phi - eta ^ (xi _| N)`` for the i-th structure."""
    t = contact_triple(S, i)
    N = nijenhuis(S, i)
    w = N.skew_violation()
    if w is not None:
        raise NotSkew(f"N_phi{i + 1} is not totally skew at {tuple(x + 1 for x in w)}")
    if not reeb_is_killing(S, i):
        L = lie_derivative_metric(S.geometry, S.xi(i))
        (a, b), v = min(L.items())
        raise NotKilling(f"xi_{i + 1} is not Killing: (L g)({a + 1},{b + 1}) = {v}")
    Nf = N.to_form()
    eta = t.eta
    return (wedge(eta, S.d_eta(i)) + Nf + phi_twist(d_Phi(S, i), t.phi)
            - wedge(eta, contract(t.xi, Nf)))


def characteristic_connection(S: A3CStructure, i: int) -> Connection:
    return connection_from_torsion(S.geometry, characteristic_torsion(S, i))


def characteristic_checks(S: A3CStructure, i: int, conn: Connection | None = None) -> Report:
    conn = conn if conn is not None else characteristic_connection(S, i)
    rep = Report()
    rep.add(residual_check(f"char{i + 1}.nabla_phi", "characteristic connection parallelizes phi",
                           covariant_derivative(conn, S.phi[i])))
    rep.add(residual_check(f"char{i + 1}.nabla_eta", "characteristic connection parallelizes eta",
                           covariant_derivative(conn, S.eta(i))))
    rep.add(bool_check(f"char{i + 1}.metric", "metric connection", conn.is_metric()))
    return rep


# canonical connection

@dataclass
class CanonicalConnection:
    connection: Connection
    torsion: KForm
    beta: Expr
    delta: Expr
    gamma: Expr


def canonical_connection(S: A3CStructure, report=None) -> CanonicalConnection:
    """The connection with ``nabla phi_i = beta (eta_k phi_j - eta_j phi_k)``."""
    rep = report if report is not None else classify(S)
    if not rep.canonical:
        why = rep.reeb_killing_witness or "canonical conditions not met"
        if S.n == 0:
            why = "beta is undetermined without horizontal directions"
        raise NotCanonical(why)
    beta = rep.reeb_killing_beta
    delta = rep.reeb_commutator_delta
    gamma = (beta - delta) * 2
    T = phi_compatible_torsion(S, gamma, (1, 0, 0))
    return CanonicalConnection(connection_from_torsion(S.geometry, T), T, beta, delta, gamma)


def canonical_checks(S: A3CStructure, cc: CanonicalConnection | None = None) -> Report:
    """Derivatives of every structure tensor, plus ``nabla Psi = 0`` and ``nabla eta_123 = 0``."""
    from .acms import fundamental_4form

    cc = cc if cc is not None else canonical_connection(S)
    conn, beta = cc.connection, cc.beta
    n = S.dim
    rep = Report()
    phi_bad, eta_bad = [], []
    for i, j, k in CYCLIC:
        dphi = covariant_derivative(conn, S.phi[i])
        deta = covariant_derivative(conn, S.eta(i))
        for x in range(n):
            want = Endo.zero(n)
            want_eta = KForm(n, 1, {})
            if x == k:
                want = want + S.phi[j] * beta
                want_eta = want_eta + S.eta(j) * beta
            if x == j:
                want = want - S.phi[k] * beta
                want_eta = want_eta - S.eta(k) * beta
            phi_bad.append(dphi[x] - want)
            eta_bad.append(deta[x] - want_eta)
    rep.add(residual_check("canonical.nabla_phi", "nabla phi_i = beta(eta_k phi_j - eta_j phi_k)", phi_bad))
    rep.add(residual_check("canonical.nabla_xi", "nabla xi_i = beta(eta_k xi_j - eta_j xi_k)",
                           _nabla_xi_pattern(S, conn, beta)))
    rep.add(residual_check("canonical.nabla_eta", "nabla eta_i = beta(eta_k eta_j - eta_j eta_k)", eta_bad))
    rep.add(residual_check("canonical.nabla_Psi", "fundamental 4-form is parallel",
                           covariant_derivative(conn, fundamental_4form(S))))
    rep.add(residual_check("canonical.nabla_eta123", "vertical volume is parallel",
                           covariant_derivative(conn, S.eta123())))
    rep.add(bool_check("canonical.metric", "metric connection", conn.is_metric()))
    rep.add(bool_check("canonical.splitting", "H and V preserved", preserves_splitting(conn, S)))
    return rep


def _eta_phi(S: A3CStructure, i: int) -> KForm:
    return wedge(S.eta(i), fundamental_forms(S)[i])


def torsion_relation_check(S: A3CStructure, cc: CanonicalConnection | None = None) -> dict:
    """Residuals ``T - T_i + beta(eta_j^Phi_j + eta_k^Phi_k)`` and the averaged relation."""
    cc = cc if cc is not None else canonical_connection(S)
    T, beta = cc.torsion, cc.beta
    Ti = [characteristic_torsion(S, i) for i in range(3)]
    out = {}
    for i, j, k in CYCLIC:
        out[f"T-T{i + 1}"] = T - Ti[i] + (_eta_phi(S, j) + _eta_phi(S, k)) * beta
    total = _eta_phi(S, 0) + _eta_phi(S, 1) + _eta_phi(S, 2)
    out["3T"] = T * 3 - (Ti[0] + Ti[1] + Ti[2]) + total * (beta * 2)
    return out


# 3-(alpha, delta)-Sasaki closed forms

def _sasaki_parameters(S: A3CStructure) -> tuple[Expr, Expr]:
    match = match_three_alpha_delta(S)
    if match is None:
        raise NotSasakiFamily("d eta_i does not follow 2 alpha Phi_i + 2(alpha - delta) eta_jk")
    alpha, delta = match
    if alpha is None:
        raise NotSasakiFamily("alpha is undetermined without horizontal directions")
    return alpha, delta


def _cyclic_sum(fn) -> KForm:
    return sum((fn(i, j, k) for i, j, k in CYCLIC[1:]), fn(*CYCLIC[0]))


def sasaki_closed_forms(S: A3CStructure, cc: CanonicalConnection | None = None) -> Report:
    alpha, delta = _sasaki_parameters(S)
    cc = cc if cc is not None else canonical_connection(S)
    T = cc.torsion
    Phi = fundamental_forms(S)
    PhiH = horizontal_forms(S)
    e123 = S.eta123()
    d = S.d
    rep = Report()

    eta_deta = _cyclic_sum(lambda i, j, k: wedge(S.eta(i), S.d_eta(i)))
    rep.add(residual_check("sasaki.T_eta_deta", "T = sum eta_i^d eta_i + 8(delta-alpha) eta_123",
                           T - eta_deta - e123 * ((delta - alpha) * 8)))
    eta_phiH = _cyclic_sum(lambda i, j, k: wedge(S.eta(i), PhiH[i]))
    rep.add(residual_check("sasaki.T_horizontal", "T = 2 alpha sum eta_i^Phi_i^H + 2(delta-4alpha) eta_123",
                           T - eta_phiH * (alpha * 2) - e123 * ((delta - alpha * 4) * 2)))
    rep.add(residual_check("sasaki.nabla_T", "canonical torsion is parallel",
                           covariant_derivative(cc.connection, T)))
    dT = d(T)
    phi_sq = _cyclic_sum(lambda i, j, k: wedge(Phi[i], Phi[i]))
    phi_eta = _cyclic_sum(lambda i, j, k: wedge(Phi[i], S.eta_pair(j, k)))
    rep.add(residual_check("sasaki.dT_full", "dT = 4 alpha^2 sum Phi_i^Phi_i + 8 alpha(delta-alpha) cyc Phi_i^eta_jk",
                           dT - phi_sq * (alpha * alpha * 4) - phi_eta * (alpha * (delta - alpha) * 8)))
    psiH = _cyclic_sum(lambda i, j, k: wedge(PhiH[i], PhiH[i]))
    phiH_eta = _cyclic_sum(lambda i, j, k: wedge(PhiH[i], S.eta_pair(j, k)))
    rep.add(residual_check("sasaki.dT_horizontal",
                           "dT = 4 alpha^2 Psi^H + 8 alpha(delta-2alpha) cyc Phi_i^H^eta_jk",
                           dT - psiH * (alpha * alpha * 4) - phiH_eta * (alpha * (delta - alpha * 2) * 8)))
    items = []
    items2 = []
    for i, j, k in CYCLIC:
        dPH = d(PhiH[i])
        items.append(dPH - (wedge(PhiH[j], S.eta(k)) - wedge(PhiH[k], S.eta(j))) * (delta * 2))
        items2.append(dPH * alpha - d(S.eta_pair(j, k)) * delta)
    rep.add(residual_check("sasaki.dPhiH", "d Phi_i^H = 2 delta(Phi_j^H^eta_k - Phi_k^H^eta_j)", items))
    rep.add(residual_check("sasaki.dPhiH_eta", "alpha d Phi_i^H = delta d eta_jk", items2))
    rep.add(residual_check("sasaki.dPsiH", "d Psi^H = 0", d(psiH)))
    rep.add(residual_check("sasaki.d_eta_PhiH", "d sum eta_i^Phi_i^H = 2 alpha Psi^H + 2 delta cyc Phi_i^H^eta_jk",
                           d(eta_phiH) - psiH * (alpha * 2) - phiH_eta * (delta * 2)))
    rep.add(residual_check("sasaki.d_eta123", "d eta_123 = 2 alpha cyc Phi_i^H^eta_jk",
                           d(e123) - phiH_eta * (alpha * 2)))
    return rep


def ricci_closed_forms(S: A3CStructure, cc: CanonicalConnection | None = None) -> Report:
    """Brute-force Ricci tensors of the canonical and Levi-Civita connections versus closed forms."""
    if S.geometry.is_pointwise:
        from .errors import PointwiseUnsupported
        raise PointwiseUnsupported("curvature needs constant brackets")
    alpha, delta = _sasaki_parameters(S)
    cc = cc if cc is not None else canonical_connection(S)
    n = Expr(S.n)
    dim = S.dim
    h_can = alpha * 4 * (delta * (n + 2) - alpha * 3)
    v_can = alpha * 16 * (delta - alpha * 2)
    g_coef = alpha * 2 * (delta * 2 * (n + 2) - alpha * 3)
    v_extra = (alpha - delta) * 2 * ((n * 2 + 3) * alpha - delta)
    can_form = SymBilinear(dim, {(a, a): (v_can if a < 3 else h_can) for a in range(dim)})
    lc_form = SymBilinear(dim, {(a, a): (g_coef + v_extra if a < 3 else g_coef) for a in range(dim)})
    rep = Report()
    ric = ricci(cc.connection)
    ric_g = ricci(levi_civita(S.geometry))
    rep.add(residual_check("ricci.canonical", "Ric = 4 alpha(delta(n+2)-3alpha) Id_H + 16 alpha(delta-2alpha) Id_V",
                           ric - can_form))
    rep.add(residual_check("ricci.levi_civita",
                           "Ric^g = 2 alpha(2 delta(n+2)-3 alpha) g + 2(alpha-delta)((2n+3)alpha-delta) sum eta_i^2",
                           ric_g - lc_form))
    # the canonical Ricci tensor from its alternative expression with sum eta_i (x) eta_i
    alt = SymBilinear(dim, {(a, a): h_can + (alpha * 4 * (delta * (2 - n) - alpha * 5) if a < 3 else ZERO)
                            for a in range(dim)})
    rep.add(residual_check("ricci.canonical_alt", "two expressions of Ric agree", alt - can_form))
    nabla_einstein = (delta * (2 - n)) == alpha * 5
    rep.add(Check("ricci.nabla_einstein", "nabla-Einstein iff delta(2-n) = 5 alpha",
                  "holds" if nabla_einstein else "does-not-hold", str(delta * (2 - n) - alpha * 5)))
    computed_einstein = (v_can == h_can)
    rep.add(bool_check("ricci.nabla_einstein_agrees", "nabla-Einstein predicate matches computed Ricci",
                       computed_einstein == nabla_einstein))
    both = dim == 7 and delta == alpha * 5
    rep.add(Check("ricci.double_einstein", "Einstein and nabla-Einstein iff dim 7 and delta = 5 alpha",
                  "holds" if both else "does-not-hold"))
    return rep


def einstein_factorization() -> Expr:
    """Residual of ``Ric^g_V - Ric^g_H = 2(alpha-delta)((2n+3)alpha-delta)`` as polynomials."""
    alpha, delta, n = param("alpha"), param("delta"), param("n")
    lhs = (alpha - delta) * 2 * ((n * 2 + 3) * alpha - delta)
    expanded = (alpha * alpha * (n * 4 + 6) - alpha * delta * (n * 4 + 8) + delta * delta * 2)
    return lhs - expanded


# cone

@dataclass
class ConeData:
    a: Expr
    rho: Expr
    J: tuple
    S_forms: tuple
    T_prime: KForm


def cone_endomorphisms(S: A3CStructure, rho, literal: bool = False) -> tuple[Endo, Endo, Endo]:
    """``J_1, J_2, J_3`` on the frame ``(d_r, e_1, ..., e_m)`` with ``rho = a r``.

    ``J_i(rho d_r) = s_i xi_i``, ``J_i xi_i = -s_i rho d_r`` with ``s = (1, 1, -1)``, and
    ``J_i V = e_i phi_i V`` on the remaining vectors.  The default ``e = (-1, -1, 1)`` is
    the only sign choice compatible with ``s`` and ``J_1 J_2 = J_3``; ``literal=True``
    uses ``e = (-1, -1, -1)``, for which that relation fails on H.
    """
    rho = as_expr(rho)
    m = S.dim
    dim = m + 1
    signs = (1, 1, -1)
    twist = (-1, -1, -1) if literal else (-1, -1, 1)
    out = []
    for i in range(3):
        cols = {}
        s = signs[i]
        cols[0] = {i + 1: s / rho}
        cols[i + 1] = {0: -s * rho}
        for b in range(m):
            if b == i:
                continue
            v = S.phi[i].column(b)
            if v:
                cols[b + 1] = {x + 1: c * twist[i] for x, c in v.items()}
        out.append(Endo(dim, cols))
    return tuple(out)


def cone_checks(S: A3CStructure, cc: CanonicalConnection | None = None, rho=None,
                literal: bool = False) -> Report:
    """Cone identities; needs ``beta < 0`` (decided with the positivity of parameters)."""
    cc = cc if cc is not None else canonical_connection(S)
    sign = definite_sign(cc.beta)
    if sign is None:
        raise NonNegativeBeta(f"cannot establish beta = {cc.beta} < 0 from parameter positivity")
    if sign >= 0:
        raise NonNegativeBeta(f"beta = {cc.beta} is not negative")
    return _cone_report(S, cc, rho, literal)


def _cone_report(S: A3CStructure, cc: CanonicalConnection, rho, literal: bool) -> Report:
    beta = cc.beta
    a = -beta / 2
    Ti = [characteristic_torsion(S, i) for i in range(3)]
    Si = [Ti[i] - _eta_phi(S, i) * (a * 2) for i in range(3)]
    total = _eta_phi(S, 0) + _eta_phi(S, 1) + _eta_phi(S, 2)
    T_prime = cc.torsion + total * beta
    rep = Report()
    rep.add(residual_check("cone.S_equal", "S_1 = S_2 = S_3 = T'", [s - T_prime for s in Si]))
    rho = param("rho", positive=True) if rho is None else as_expr(rho)
    J1, J2, J3 = cone_endomorphisms(S, rho, literal)
    ident = Endo.identity(S.dim + 1)
    rep.add(residual_check("cone.J1J2", "J_1 J_2 = J_3", J1 @ J2 - J3))
    rep.add(residual_check("cone.J2J1", "J_2 J_1 = -J_3", J2 @ J1 + J3))
    rep.add(residual_check("cone.J_square", "J_i^2 = -Id", [J @ J + ident for J in (J1, J2, J3)]))
    return rep


# one-parameter family checks

def compatible_family_checks(S: A3CStructure, a=(1, 0, 0), gamma=None) -> Report:
    """Post-conditions of the phi_a-compatible connection for a symbolic parameter."""
    gamma = param("gamma") if gamma is None else as_expr(gamma)
    t = sphere_structure(S, a)
    T = phi_compatible_torsion(S, gamma, a)
    conn = connection_from_torsion(S.geometry, T)
    rep = Report()
    rep.add(bool_check("compatible.metric", "metric connection", conn.is_metric()))
    rep.add(bool_check("compatible.splitting", "H and V preserved", preserves_splitting(conn, S)))
    rep.add(residual_check("compatible.nabla_phi_H", "(nabla_X phi) Y has no H part on H",
                           compatibility_residual(conn, S, t.phi)))
    rep.add(residual_check("compatible.gamma", "T(xi_1, xi_2, xi_3) = gamma", T(0, 1, 2) - gamma))
    rep.add(residual_check("compatible.NT", "N_phi through T on H", nt_identity_residual(S, t, T)))
    rep.add(residual_check("compatible.torsion", "torsion of the built connection", conn.torsion_tensor()
                           - _trilinear(T)))
    delta = reeb_commutator(S)
    if delta is not None and all(reeb_is_killing(S, i) for i in range(3)):
        rep.add(residual_check("compatible.nabla_xi",
                               "nabla_X xi_i = ((2 delta + gamma)/2)(eta_k(X) xi_j - eta_j(X) xi_k)",
                               nabla_xi_residual(S, conn, gamma, delta)))
    return rep


def _trilinear(T: KForm):
    from .frame_alg import Trilinear
    return Trilinear.from_function(T.dim, lambda a, b, c: T(a, b, c))
