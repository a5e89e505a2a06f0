"""Named check suites and the report they assemble.

Each suite takes a structure and returns a :class:`~a3c.report.Report`.  A
suite never raises for a property the input lacks: the check is recorded as
``skipped`` with the reason, so a batch always completes.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .acms import (
    A3CStructure,
    SphereParam,
    classify,
    contact_triple,
    lemma_n_residual,
    nijenhuis,
    skew_lemma_conditions,
    sphere_identity_residual,
    validate_structure,
)
from .connections import (
    POLES,
    canonical_checks,
    canonical_connection,
    characteristic_checks,
    compatible_family_checks,
    cone_checks,
    einstein_factorization,
    phi_compatible_exists,
    ricci_closed_forms,
    sasaki_closed_forms,
    torsion_relation_check,
)
from .deform import (
    DeformParams,
    deform_parameters,
    h_deform,
    three_sasaki_family_row,
    to_3_alpha_sasaki,
    to_neg_pair,
)
from .errors import A3CError, NotCanonical, NotKilling, NotSkew
from .frame_alg import Endo
from .liegeom import ConstantBrackets, LieFrameGeometry, jacobi_check
from .report import Check, Report, bool_check, residual_check, skipped
from .scalar import Assignment, substitute

SUITES = ("classify", "connection", "curvature", "deform", "g2", "s7")
# s7 checks a built-in model rather than the input, so "all" leaves it out
ALL = SUITES[:-1]

# (p, q, r, s) seeds of rational points on S^2
SPHERE_SEEDS = ((1, 1, 0, 0), (1, 2, 0, 0), (1, 1, 1, 0), (1, 2, 3, 0), (2, 1, 1, 1),
                (1, 2, 3, 4), (3, 1, 4, 1), (2, 7, 1, 8), (5, 3, 2, 0), (1, 0, 2, 3))

# (s, c) pairs; c < 0 included on purpose
DEFORM_SAMPLES = ((1, 2), (2, 3), (1, -1), (Fraction(3, 2), Fraction(1, 2)), (2, Fraction(5, 2)))


def sphere_points() -> list[SphereParam]:
    return [SphereParam.from_pythagorean(*seed) for seed in SPHERE_SEEDS]


def _constant(S: A3CStructure) -> bool:
    return not S.geometry.is_pointwise


def _sasaki(info):
    """``(alpha, delta)`` when both are determined, else None."""
    pair = info.three_alpha_delta_sasaki
    if pair is None or pair[0] is None:
        return None
    return pair


# suites

def classify_suite(S: A3CStructure, info=None) -> Report:
    rep = Report()
    if not _constant(S):
        rep.add(skipped("classify", "classification", "pointwise brackets: use the s7 suite"))
        return rep
    info = info or classify(S)
    val = validate_structure(S)
    rep.add(bool_check("classify.valid", "almost 3-contact metric axioms", val.ok, f"{val.axiom} at {val.witness}"))
    jac = jacobi_check(S.geometry.brackets)
    rep.add(bool_check("classify.jacobi", "Jacobi identity", jac.ok, f"triple {jac.triple}"))
    for i in range(3):
        rep.add(residual_check(f"classify.lemma_n{i + 1}", "N_phi_i through d Phi_j, d Phi_k, d eta_j, d eta_k",
                               lemma_n_residual(S, i)))
    bad = {}
    for a in sphere_points():
        r = sphere_identity_residual(S, a)
        if not r.is_zero:
            bad[str(tuple(map(str, a)))] = r
    rep.add(residual_check("classify.sphere_identity",
                           "N_phi_a = sum a_i^2 N_phi_i + sum_{i<j} a_i a_j N_ij at 10 sphere points", bad))
    if S.n > 0:
        for i in range(3):
            conds = skew_lemma_conditions(S, contact_triple(S, i))
            rep.add(bool_check(f"classify.skew_lemma{i + 1}", "the four skew-symmetry conditions agree on H",
                               len(set(conds)) == 1, f"conditions {conds}"))
    if info.is_three_alpha_delta_sasaki:
        rep.add(residual_check("classify.kashiwada", "3-(alpha, delta)-Sasaki implies hypernormal",
                               [nijenhuis(S, i) for i in range(3)]))
    else:
        rep.add(skipped("classify.kashiwada", "3-(alpha, delta)-Sasaki implies hypernormal",
                        "not 3-(alpha, delta)-Sasaki"))
    return rep


def connection_suite(S: A3CStructure, info=None) -> Report:
    rep = Report()
    if not _constant(S):
        rep.add(skipped("connection", "connections", "pointwise brackets: use the s7 suite"))
        return rep
    info = info or classify(S)
    for pole in POLES:
        label = "".join(map(str, pole))
        exists = phi_compatible_exists(S, pole)
        if exists.ok:
            for c in compatible_family_checks(S, pole):
                c.id = c.id.replace("compatible.", f"compatible[{label}].")
                rep.add(c)
        else:
            rep.add(skipped(f"compatible[{label}]", "phi-compatible connection",
                            f"{exists.condition} fails at {exists.witness}"))
    for i in range(3):
        try:
            rep.extend(characteristic_checks(S, i).checks)
        except (NotSkew, NotKilling) as exc:
            rep.add(skipped(f"char{i + 1}", "characteristic connection", str(exc)))
    try:
        cc = canonical_connection(S, info)
    except NotCanonical as exc:
        rep.add(skipped("canonical", "canonical connection", f"NotCanonical: {exc}"))
        return rep
    rep.add(Check("canonical.beta", "Reeb Killing function", "pass", "0", {"beta": cc.beta}))
    rep.extend(canonical_checks(S, cc).checks)
    rel = torsion_relation_check(S, cc)
    for key, value in rel.items():
        rep.add(residual_check(f"torsion_relation.{key}", "T - T_i = -beta(eta_j^Phi_j + eta_k^Phi_k)", value))
    if _sasaki(info):
        rep.extend(sasaki_closed_forms(S, cc).checks)
    else:
        rep.add(skipped("sasaki", "3-(alpha, delta)-Sasaki closed forms", "not 3-(alpha, delta)-Sasaki"))
    try:
        rep.extend(cone_checks(S, cc).checks)
    except A3CError as exc:
        rep.add(skipped("cone", "cone identities", str(exc)))
    return rep


def curvature_suite(S: A3CStructure, info=None) -> Report:
    rep = Report()
    rep.add(residual_check("ricci.einstein_factorization",
                           "Ric^g_V - Ric^g_H = 2(alpha-delta)((2n+3)alpha-delta)", einstein_factorization()))
    if not _constant(S):
        rep.add(skipped("ricci", "Ricci closed forms", "curvature needs constant brackets"))
        return rep
    info = info or classify(S)
    if not _sasaki(info):
        rep.add(skipped("ricci", "Ricci closed forms", "not 3-(alpha, delta)-Sasaki"))
        return rep
    rep.extend(ricci_closed_forms(S).checks)
    return rep


def deform_suite(S: A3CStructure, info=None, samples=DEFORM_SAMPLES) -> Report:
    rep = Report()
    if _constant(S):
        info = info or classify(S)
        pair = _sasaki(info)
        for s, c in samples:
            p = DeformParams(s, c)
            tag = f"deform[s={p.s},c={p.c}]"
            D = h_deform(S, p)
            dinfo = classify(D)
            rep.add(bool_check(f"{tag}.valid", "deformed structure is almost 3-contact metric", dinfo.valid_a3c,
                               str(dinfo.validation_failure)))
            same = (dinfo.hypernormal, dinfo.canonical, dinfo.reeb_killing_all) == \
                (info.hypernormal, info.canonical, info.reeb_killing_all)
            rep.add(bool_check(f"{tag}.flags", "hypernormal, canonical and Killing flags survive", same))
            if pair:
                want = deform_parameters(*pair, p)
                got = _sasaki(dinfo)
                if got is None:
                    rep.add(bool_check(f"{tag}.alpha_delta", "alpha' = alpha c / a, delta' = delta / c", False,
                                       "deformed structure is not 3-(alpha, delta)-Sasaki"))
                else:
                    rep.add(residual_check(f"{tag}.alpha_delta", "alpha' = alpha c / a, delta' = delta / c",
                                           [got[0] - want[0], got[1] - want[1]]))
        if pair and pair[0].is_constant and pair[1].is_constant:
            rep.extend(_realization_checks(S, *pair).checks)
    rep.extend(family_table_checks().checks)
    return rep


def _realization_checks(S: A3CStructure, alpha, delta) -> Report:
    rep = Report()
    a, d = alpha.as_fraction(), delta.as_fraction()
    for label, fn, want_sign in (("to_3_alpha", to_3_alpha_sasaki, 1), ("to_neg_pair", to_neg_pair, -1)):
        try:
            p = fn(a, d)
        except A3CError as exc:
            rep.add(skipped(f"deform.{label}", "deformation to a special pair", str(exc)))
            continue
        got = _sasaki(classify(h_deform(S, p)))
        ok = got is not None and got[0] * want_sign == got[1]
        rep.add(bool_check(f"deform.{label}", "deformation to a special pair", ok, f"got {got}"))
    return rep


def family_table_checks() -> Report:
    """The deformed 7-dimensional 3-Sasaki family at a = 1, 2, 5."""
    rep = Report()
    expected = {
        1: dict(three_sasaki=True, parallel=False, einstein=True, nabla_einstein=False),
        2: dict(three_sasaki=False, parallel=True, einstein=False, nabla_einstein=False),
        5: dict(three_sasaki=False, parallel=False, einstein=True, nabla_einstein=True),
    }
    for a, want in expected.items():
        row = three_sasaki_family_row(a)
        got = {k: getattr(row, k) for k in want}
        rep.add(bool_check(f"family[a={a}]", "deformed 3-Sasaki family predicates", got == want, f"got {got}"))
    return rep


def g2_suite(S: A3CStructure, info=None) -> Report:
    from .spin7 import clifford_checks, g2_form_checks, killing_number_identities, spinor_checks

    rep = Report()
    rep.extend(clifford_checks().checks)
    rep.extend(killing_number_identities().checks)
    if S.dim != 7 or not _constant(S):
        rep.add(skipped("g2", "G2 structure", "needs a constant-bracket structure of dimension 7"))
        return rep
    info = info or classify(S)
    if not _sasaki(info):
        rep.add(skipped("g2", "G2 structure", "not 3-(alpha, delta)-Sasaki"))
        return rep
    cc = canonical_connection(S, info)
    rep.extend(g2_form_checks(S, cc.torsion).checks)
    rep.extend(spinor_checks(S, cc.connection, cc.torsion).checks)
    return rep


def s7_suite(S: A3CStructure | None = None, info=None, points: int = 3) -> Report:
    from .spin7 import default_points, s7_pointwise_suite

    return s7_pointwise_suite(default_points(points))


RUNNERS = {
    "classify": classify_suite,
    "connection": connection_suite,
    "curvature": curvature_suite,
    "deform": deform_suite,
    "g2": g2_suite,
    "s7": s7_suite,
}


# substitution and the full report

def substitute_structure(S: A3CStructure, values) -> A3CStructure:
    """Replace parameters by rationals in the brackets and the endomorphisms."""
    sigma = values if isinstance(values, Assignment) else Assignment(values)
    if not _constant(S):
        raise ValueError("substitution needs constant brackets")
    mapping = dict(sigma)

    def sub(x):
        return substitute(x, mapping)

    table = {key: {c: sub(x) for c, x in v.items()} for key, v in S.geometry.brackets.items()}
    G = LieFrameGeometry(S.geometry.frame, ConstantBrackets(S.dim, table))
    phi = tuple(Endo.from_matrix([[sub(x) for x in row] for row in p.matrix()]) for p in S.phi)
    return A3CStructure(G, phi, S.name)


def select(selection) -> tuple:
    names = [selection] if isinstance(selection, str) else list(selection)
    out = []
    for name in names:
        if name == "all":
            out.extend(ALL)
        elif name in RUNNERS:
            out.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}, all")
    return tuple(dict.fromkeys(out))


@dataclass
class RunResult:
    classification: dict | None
    report: Report
    timing_ms: dict = field(default_factory=dict)
    input_sha256: str = ""

    @property
    def ok(self) -> bool:
        return self.report.ok

    def payload(self) -> dict:
        """The deterministic part of the report."""
        return {
            "version": __version__,
            "input_sha256": self.input_sha256,
            "classification": self.classification,
            "checks": [c.to_json() for c in self.report],
        }

    def to_json(self) -> dict:
        out = self.payload()
        out["timing_ms"] = self.timing_ms
        return out

    def digest(self) -> str:
        text = json.dumps(self.payload(), sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()


def run_checks(S: A3CStructure, selection="all", assignments=None, input_sha256: str = "") -> RunResult:
    """Run the selected suites one after another, then again with ``assignments`` substituted."""
    names = select(selection)
    timing = {}
    info = classify(S) if _constant(S) else None
    report = Report()
    for name in names:
        t0 = time.perf_counter()
        report.extend(_guarded(name, S, info).checks)
        timing[name] = round((time.perf_counter() - t0) * 1000, 3)
    if assignments:
        sigma = assignments if isinstance(assignments, Assignment) else Assignment(assignments)
        tag = ",".join(f"{k}={v}" for k, v in sigma.items())
        T = substitute_structure(S, sigma)
        tinfo = classify(T)
        for name in names:
            t0 = time.perf_counter()
            for c in _guarded(name, T, tinfo):
                c.id = f"eval[{tag}].{c.id}"
                c.substitutions = dict(sigma)
                report.add(c)
            timing[f"eval.{name}"] = round((time.perf_counter() - t0) * 1000, 3)
    classification = info.to_json() if info is not None else None
    return RunResult(classification, report, timing, input_sha256)


def _guarded(name: str, S: A3CStructure, info) -> Report:
    """A suite whose unexpected engine error becomes one failed check."""
    try:
        return RUNNERS[name](S, info)
    except A3CError as exc:
        rep = Report()
        rep.add(Check(f"{name}.error", name, "fail", f"{type(exc).__name__}: {exc}"))
        return rep
