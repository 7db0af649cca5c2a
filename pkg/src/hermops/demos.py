"""Packaged reproductions of the worked examples, with frozen reference data.

Each demo recomputes a published worked example from scratch and compares
against reference values stored here.  Two reference entries are known
errata in the source material: the demos assert the definitionally computed
values and attach labeled notes for the divergences instead of reproducing
the misprints.
"""

from fractions import Fraction

from .classify import (
    HermiteBasis,
    coefficient_reality_table,
    falsify_sequence,
    is_classical_ms,
    ratio_limit_check,
)
from .diffop import (
    build_operator,
    coefficient_polynomial,
    interpolation_poly,
    solve_operator_from_action,
)
from .jensen import GammaSeq, finite_difference, ratio_sequence, turan_quantity
from .laguerre import LaguerreParam, check_eigen_action, counterexample_demo
from .ratpoly import RatPoly, count_real_roots, is_real_rooted, rat_str
from .reporting import CheckReport
from .sequences import example311_spec, make_sequence

# Reference ratio table for the example311 sequence, entries k = 1..7.
RATIO_TABLE_REFERENCE = (
    Fraction(3, 2),
    Fraction(1, 6),
    Fraction(-13, 2),
    Fraction(-33, 26),
    Fraction(-61, 66),
    Fraction(-97, 122),
    Fraction(-141, 194),
)

# Finite differences of the besselJ0 sequence, k = 0..7.
BESSEL_DIFFERENCES_REFERENCE = (
    Fraction(1),
    Fraction(0),
    Fraction(-1, 2),
    Fraction(2, 3),
    Fraction(-5, 8),
    Fraction(7, 15),
    Fraction(-37, 144),
    Fraction(17, 420),
)

# Turan-type necessity values for besselJ0, k = 1..5, as computed from the
# definition.  The source material prints 1 at k = 2; the definitional value
# is 1/4 (see the attached note emitted by the demo).
BESSEL_TURAN_REFERENCE = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(-2, 9),
    Fraction(-85, 192),
    Fraction(-329, 900),
)

TURAN_ERRATUM_NOTE = (
    "NOTE (documented erratum): the source table prints 1 for the k=2 "
    "necessity value; the definition gives 1/4, which is asserted here."
)

Q3_ERRATUM_NOTE = (
    "NOTE (documented erratum): the source prints the third coefficient "
    "polynomial as x*(x^2 + 6*alpha)/18; both computation routes give "
    "x*(2*x^2 + 3*alpha)/18, which is asserted here."
)

GEOM_REGION_NOTE = (
    "NOTE (documented divergence): for gamma_k = r^k/k! the computed second "
    "coefficient is Q_2 = ((r^2 - 4r + 2)/4) x^2 + (alpha/4)(2 - r^2), so on "
    "0 <= r <= 1 it is non-real-rooted exactly when r^2 - 4r + 2 > 0, i.e. "
    "r < 2 - sqrt(2) ~ 0.5857864; the printed constant term ((r^2/3 - 1) "
    "factor) and the printed region tokens do not match this computation, "
    "so computed regions are emitted and the printed ones are not asserted."
)


def table1_demo() -> CheckReport:
    """Reproduce the seven published ratio-table entries for example311."""
    seq = make_sequence("example311")
    rows = ratio_sequence(seq, 7)
    failures = []
    for (k, value), expected in zip(rows, RATIO_TABLE_REFERENCE):
        if value != expected:
            failures.append(f"ratio at k={k}: computed {value}, reference {expected}")
    limit_report = ratio_limit_check(example311_spec(), window=20, tol=Fraction(1, 100))
    data = {
        "ratios": [(k, v) for k, v in rows],
        "limit": limit_report.data,
    }
    notes = []
    if limit_report.passed:
        k0 = limit_report.data["k0"]
        notes.append(
            f"difference ratios confirmed within 1/100 of -1/2 on the window "
            f"[{k0}, {k0 + 20}] (first such window start: {k0})"
        )
    else:
        failures.append("ratio limit check did not locate a converged window")
    return CheckReport("table1", len(rows) + 1, tuple(failures), tuple(notes), data)


def bessel_demo() -> CheckReport:
    """Worked values for the besselJ0 sequence, including both errata notes."""
    seq = make_sequence("besselJ0")
    failures = []
    checked = 0

    for k, expected in enumerate(BESSEL_DIFFERENCES_REFERENCE):
        checked += 1
        got = finite_difference(seq, k)
        if got != expected:
            failures.append(f"difference d_{k}: computed {got}, reference {expected}")

    for k, expected in enumerate(BESSEL_TURAN_REFERENCE, start=1):
        checked += 1
        got = turan_quantity(seq, k)
        if got != expected:
            failures.append(f"necessity value at k={k}: computed {got}, reference {expected}")

    for alpha in (Fraction(1, 2), Fraction(1), Fraction(2)):
        checked += 1
        q3 = coefficient_polynomial(alpha, seq, 3)
        expected_q3 = RatPoly([0, alpha / 6, 0, Fraction(1, 9)])
        oracle_q3 = solve_operator_from_action(alpha, seq, 3).qpolys[3]
        if q3 != expected_q3:
            failures.append(f"Q_3 at alpha={alpha}: computed {q3.to_text()}")
        elif q3 != oracle_q3:
            failures.append(f"Q_3 at alpha={alpha}: formula and oracle disagree")
        elif count_real_roots(q3) != 1 or is_real_rooted(q3):
            failures.append(f"Q_3 at alpha={alpha}: expected exactly one real root")

    table = coefficient_reality_table(1, seq, 4)
    checked += 1
    if table.rows[3].real_rooted:
        failures.append("reality table should mark k=3 as not real-rooted")

    return CheckReport(
        "bessel",
        checked,
        tuple(failures),
        (TURAN_ERRATUM_NOTE, Q3_ERRATUM_NOTE),
        {"differences": list(BESSEL_DIFFERENCES_REFERENCE)},
    )


def linear_operator_demo(a: int = 3) -> CheckReport:
    """The operator of the linear family gamma_k = k + a.

    Its coefficient list is (a, x, -alpha, 0, 0, ...) for every alpha > 0,
    the eigenvalues interpolate to the polynomial x + a, and for a < 0 the
    falsifier produces a concrete witness on the Hermite basis.
    """
    failures = []
    checked = 0
    seq = GammaSeq.linear(a)
    for alpha in (Fraction(1, 2), Fraction(1), Fraction(2)):
        op = build_operator(alpha, seq, 5)
        expected = (
            RatPoly([a]),
            RatPoly([0, 1]),
            RatPoly([-alpha]),
            RatPoly(),
            RatPoly(),
            RatPoly(),
        )
        checked += 1
        if op.qpolys != expected:
            failures.append(f"operator coefficients at alpha={alpha} differ from (a, x, -alpha, 0...)")
        checked += 1
        if interpolation_poly(op) != RatPoly([a, 1]):
            failures.append(f"eigenvalue interpolation at alpha={alpha} is not x + {a}")

    checked += 1
    verdict = is_classical_ms(seq)
    if verdict.status != "is_hms":
        failures.append(f"linear({a}) with a >= 0 should classify affirmatively")

    checked += 1
    bad = falsify_sequence(GammaSeq.linear(-1), HermiteBasis(Fraction(1)), 4)
    if bad.status != "falsified":
        failures.append("linear(-1) on hermite(1) should be falsified by degree 4")
    witness_data = bad.witness.to_json_dict() if bad.witness else None

    return CheckReport(
        f"linear-operator[a={a}]",
        checked,
        tuple(failures),
        data={"falsified_witness": witness_data},
    )


def geom_family_demo() -> CheckReport:
    """Reality of Q_2 and Q_4 across the family gamma_k = r^k/k!.

    For every sampled r in [0, 1] at least one of the two coefficients is
    non-real-rooted, so no member of the family acts as a multiplier
    sequence on the Hermite basis.  Reality here is alpha-independent
    (verified on an alpha grid): the coefficients are parity-even with
    alpha-homogeneous lower terms.
    """
    failures = []
    checked = 0
    grid = (
        Fraction(0),
        Fraction(1, 2),
        Fraction(4, 7),
        Fraction(3, 5),
        Fraction(9, 10),
        Fraction(1),
    )
    rows = []
    for r in grid:
        seq = GammaSeq.geometric_factorial(r)
        per_alpha = []
        for alpha in (Fraction(1, 2), Fraction(1), Fraction(2)):
            q2 = coefficient_polynomial(alpha, seq, 2)
            q4 = coefficient_polynomial(alpha, seq, 4)
            per_alpha.append((is_real_rooted(q2), is_real_rooted(q4)))
        checked += 1
        if len(set(per_alpha)) != 1:
            failures.append(f"reality at r={r} depends on alpha; expected alpha-invariance")
        q2_real, q4_real = per_alpha[0]
        checked += 1
        if q2_real and q4_real:
            failures.append(f"r={r}: both Q_2 and Q_4 real-rooted; expected a non-real witness")
        rows.append({"r": rat_str(r), "q2_real_rooted": q2_real, "q4_real_rooted": q4_real})
    return CheckReport(
        "geom-factorial-family",
        checked,
        tuple(failures),
        (GEOM_REGION_NOTE,),
        {"rows": rows},
    )


def laguerre_demo() -> CheckReport:
    """Eigen structure and the membership boundary on the Laguerre basis."""
    failures = []
    checked = 0
    alpha = Fraction(1)
    for a in (Fraction(-1), Fraction(0), Fraction(3)):
        checked += 1
        report = check_eigen_action(LaguerreParam(alpha, a), 10)
        if not report.passed:
            failures.append(report.failures[0])

    entries = counterexample_demo(alpha, (-1, 0, 1, 2, 3), deg_max=6)
    for entry in entries:
        a = Fraction(entry["a"])
        inside = 0 <= a <= alpha + 1
        checked += 1
        if not entry["coefficients_real_rooted"]:
            failures.append(f"operator coefficients at a={a} must be real-rooted")
        checked += 1
        if inside and entry["status"] != "inconclusive":
            failures.append(f"a={a} lies in [0, alpha+1] but was {entry['status']}")
        if not inside and entry["status"] != "falsified":
            failures.append(f"a={a} lies outside [0, alpha+1] but was {entry['status']}")
    return CheckReport("laguerre-boundary", checked, tuple(failures), data={"entries": entries})


DEMO_IDS = ("table1", "bessel", "linear-op", "geom-family", "laguerre")


def run_demo(demo_id: str) -> CheckReport:
    if demo_id == "table1":
        return table1_demo()
    if demo_id == "bessel":
        return bessel_demo()
    if demo_id == "linear-op":
        return linear_operator_demo()
    if demo_id == "geom-family":
        return geom_family_demo()
    if demo_id == "laguerre":
        return laguerre_demo()
    raise ValueError(f"unknown demo id {demo_id!r}; known: {', '.join(DEMO_IDS)}")
