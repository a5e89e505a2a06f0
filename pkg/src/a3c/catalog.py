"""Builders for the example structures.

All Lie-group examples use the frame ``(xi_1, xi_2, xi_3, tau_1, ..., tau_4n)``
and the standard endomorphisms of :func:`a3c.acms.standard_phi`.  Bracket
tables are written with 1-based ``tau`` indices, as in ``tau_{in+r}``.
"""

from __future__ import annotations

from .acms import A3CStructure, fundamental_form, require_valid, standard_phi
from .errors import InvalidN
from .frame_alg import FrameSpace
from .liegeom import ConstantBrackets, LieFrameGeometry
from .scalar import as_expr, param

EXAMPLES = (
    "heisenberg",
    "so3_flat",
    "nilpotent_three_family",
    "real_heisenberg_product",
    "complex_heisenberg_product",
    "su2_edge",
    "s7_cartan_schouten",
)


def frame_names(n: int) -> tuple[str, ...]:
    return ("xi1", "xi2", "xi3") + tuple(f"tau{m}" for m in range(1, 4 * n + 1))


def _check_n(n: int, minimum: int = 1):
    if not isinstance(n, int) or n < minimum:
        raise InvalidN(f"n must be an integer >= {minimum}, got {n!r}")


def _tau(m: int) -> int:
    """Frame index of ``tau_m`` (1-based)."""
    return 2 + m


def from_brackets(n: int, entries, name: str) -> A3CStructure:
    """Structure from ``[(a, b, c, coeff)]`` meaning ``[e_a, e_b] += coeff e_c``."""
    dim = 4 * n + 3
    table: dict = {}
    for a, b, c, x in entries:
        key, sign = ((a, b), 1) if a < b else ((b, a), -1)
        slot = table.setdefault(key, {})
        slot[c] = slot.get(c, 0) + as_expr(x) * sign
    G = LieFrameGeometry(FrameSpace(frame_names(n)), ConstantBrackets(dim, table))
    S = A3CStructure(G, standard_phi(n), name)
    require_valid(S)
    return S


def heisenberg(n: int = 1, lam=None) -> A3CStructure:
    """Quaternionic Heisenberg algebra with bracket scale ``lambda``."""
    _check_n(n)
    lam = param("lambda", positive=True) if lam is None else as_expr(lam)
    e = []
    for r in range(1, n + 1):
        t0, t1, t2, t3 = (_tau(q * n + r) for q in range(4))
        e += [(t0, t1, 0, lam), (t0, t2, 1, lam), (t0, t3, 2, lam),
              (t2, t3, 0, lam), (t3, t1, 1, lam), (t1, t2, 2, lam)]
    return from_brackets(n, e, f"heisenberg_n{n}")


def so3_flat(n: int = 1, delta=None) -> A3CStructure:
    """``so(3) + R^4n`` with ``[xi_i, xi_j] = 2 delta xi_k``."""
    _check_n(n)
    delta = param("delta") if delta is None else as_expr(delta)
    e = [(0, 1, 2, delta * 2), (1, 2, 0, delta * 2), (2, 0, 1, delta * 2)]
    return from_brackets(n, e, f"so3_flat_n{n}")


def nilpotent_three_family(n: int = 1) -> A3CStructure:
    """``[tau_r, tau_{in+r}] = xi_i``: canonical with beta = -1, not 3-(alpha, delta)-Sasaki."""
    _check_n(n)
    e = []
    for r in range(1, n + 1):
        for i in range(3):
            e.append((_tau(r), _tau((i + 1) * n + r), i, 1))
    return from_brackets(n, e, f"nilpotent_three_family_n{n}")


def _real_heisenberg_entries(n: int) -> list:
    e = []
    for r in range(1, n + 1):
        t0, t1, t2, t3 = (_tau(q * n + r) for q in range(4))
        e += [(t0, t1, 0, 1), (t2, t3, 0, 1)]
    return e


def real_heisenberg_product(n: int = 1) -> A3CStructure:
    """Real Heisenberg group times R^2."""
    _check_n(n)
    return from_brackets(n, _real_heisenberg_entries(n), f"real_heisenberg_product_n{n}")


def complex_heisenberg_product(n: int = 1) -> A3CStructure:
    """Complex Heisenberg group times R."""
    _check_n(n)
    e = _real_heisenberg_entries(n)
    for r in range(1, n + 1):
        t0, t1, t2, t3 = (_tau(q * n + r) for q in range(4))
        e += [(t0, t2, 1, 1), (t3, t1, 1, 1)]
    return from_brackets(n, e, f"complex_heisenberg_product_n{n}")


def su2_edge() -> A3CStructure:
    """``su(2)`` with no horizontal part: beta and alpha are undetermined."""
    e = [(0, 1, 2, 2), (1, 2, 0, 2), (2, 0, 1, 2)]
    return from_brackets(0, e, "su2_edge")


def first_order_sasaki_model(alpha=None, delta=None) -> A3CStructure:
    """Frame data of a 7-dimensional 3-(alpha, delta)-Sasaki structure with symbolic parameters.

    ``[tau_a, tau_b] = -2 alpha sum_i Phi_i(tau_a, tau_b) xi_i``, ``[xi_i, xi_j] = 2 delta xi_k``
    and ``[xi_i, X] = delta phi_i X`` on H.  The Jacobi identity fails by a multiple of
    ``alpha delta``, so this is not a Lie algebra unless ``delta = 0``; it is only meant for
    identities that involve brackets to first order (d, Levi-Civita, torsion, spinor
    derivatives), never for curvature.
    """
    alpha = param("alpha") if alpha is None else as_expr(alpha)
    delta = param("delta") if delta is None else as_expr(delta)
    phi = standard_phi(1)
    Phi = [fundamental_form(p) for p in phi]
    e = []
    for a in range(3, 7):
        for b in range(a + 1, 7):
            e += [(a, b, i, -2 * alpha * Phi[i](a, b)) for i in range(3) if not Phi[i](a, b).is_zero]
    e += [(0, 1, 2, delta * 2), (1, 2, 0, delta * 2), (2, 0, 1, delta * 2)]
    for i in range(3):
        for a in range(3, 7):
            e += [(i, a, x, delta * v) for x, v in phi[i].column(a).items()]
    return from_brackets(1, e, "first_order_sasaki_model")


def s7_cartan_schouten() -> A3CStructure:
    from .spin7 import s7_structure

    return s7_structure()


def build(example: str, n: int = 1, **params) -> A3CStructure:
    """Build an example by name; ``params`` passes ``lam`` or ``delta`` through."""
    if example == "heisenberg":
        return heisenberg(n, params.get("lam"))
    if example == "so3_flat":
        return so3_flat(n, params.get("delta"))
    if example == "nilpotent_three_family":
        return nilpotent_three_family(n)
    if example == "real_heisenberg_product":
        return real_heisenberg_product(n)
    if example == "complex_heisenberg_product":
        return complex_heisenberg_product(n)
    if example == "su2_edge":
        return su2_edge()
    if example == "s7_cartan_schouten":
        return s7_cartan_schouten()
    raise KeyError(f"unknown example {example!r}; known: {', '.join(EXAMPLES)}")


def lie_group_examples(n: int = 1) -> dict[str, A3CStructure]:
    """Every constant-bracket example with ``n >= 1``."""
    return {name: build(name, n) for name in EXAMPLES[:5]}
