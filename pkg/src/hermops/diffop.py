"""Hermite-diagonal differential operators and their coefficient polynomials.

For a parameter alpha >= 0 and an eigenvalue sequence (gamma_n), the operator
T = sum_k Q_k(x) D^k acts diagonally on the Hermite basis, T[H_n] =
gamma_n * H_n.  The coefficients admit the closed form

    Q_k(x) = sum_{j=0}^{floor(k/2)} (-alpha)^j / (j! (k-2j)!)
             * d_{k-j} * H_{k-2j}(x),

where d_i is the i-th finite difference of the sequence (taken at offset p
for the shifted variant).  `coefficient_polynomial` implements that formula;
`solve_operator_from_action` recovers the same coefficients with no formula
at all, by forward substitution from the diagonal action itself, and serves
as an independent oracle.  At alpha = 0 the basis degenerates to x^n and the
coefficients collapse to `standard_coefficient`.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .hermite import hermite_polys, validate_alpha
from .jensen import GammaSeq, finite_difference
from .ratpoly import ONE, RatLike, RatPoly, interpolate, parse_rat, rat, rat_str
from .reporting import CheckReport


class TruncationError(ValueError):
    """Raised when an operator is applied to a polynomial of higher degree

    than the operator's stored order; derivatives beyond the truncation
    would be silently dropped, so this is a hard error."""


@dataclass(frozen=True)
class HermiteDiffOp:
    """A truncated diagonal operator: alpha, offset p, and [Q_0, ..., Q_K]."""

    alpha: Fraction
    p_shift: int
    qpolys: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", validate_alpha(self.alpha))
        object.__setattr__(self, "qpolys", tuple(self.qpolys))
        if self.p_shift < 0:
            raise ValueError("p_shift must be nonnegative")
        if not self.qpolys:
            raise ValueError("an operator needs at least the order-zero coefficient")

    @property
    def order(self) -> int:
        return len(self.qpolys) - 1

    def to_json_dict(self) -> dict:
        return {
            "alpha": rat_str(self.alpha),
            "p_shift": self.p_shift,
            "Q": [q.to_json_dict() for q in self.qpolys],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HermiteDiffOp":
        return cls(
            parse_rat(data["alpha"]),
            int(data["p_shift"]),
            tuple(RatPoly.from_json_dict(q) for q in data["Q"]),
        )


def coefficient_polynomial(alpha: RatLike, seq: GammaSeq, k: int, p: int = 0) -> RatPoly:
    """The k-th coefficient polynomial Q_k for the (p-shifted) sequence."""
    a = validate_alpha(alpha)
    if k < 0 or p < 0:
        raise ValueError("k and p must be nonnegative")
    polys = hermite_polys(k, a)
    total = RatPoly()
    for j in range(k // 2 + 1):
        scale = (
            (-a) ** j
            * Fraction(1, math.factorial(j) * math.factorial(k - 2 * j))
            * finite_difference(seq, k - j, p)
        )
        if scale:
            total = total + scale * polys[k - 2 * j]
    return total


def standard_coefficient(seq: GammaSeq, k: int) -> RatPoly:
    """Coefficient of the operator diagonal on the monomial basis:
    T[x^n] = gamma_n x^n forces Q_k = d_k / k! * x^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = finite_difference(seq, k)
    if d == 0:
        return RatPoly()
    return RatPoly([Fraction(0)] * k + [d / math.factorial(k)])


def build_operator(alpha: RatLike, seq: GammaSeq, order: int, p: int = 0) -> HermiteDiffOp:
    """Materialize the operator truncated at the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    qs = tuple(coefficient_polynomial(alpha, seq, k, p) for k in range(order + 1))
    return HermiteDiffOp(rat(alpha), p, qs)


def apply_operator(op: HermiteDiffOp, f: RatPoly) -> RatPoly:
    """sum_k Q_k * f^(k); exact only when the truncation covers deg f."""
    if f.degree > op.order:
        raise TruncationError(
            f"operator of order {op.order} applied to degree {f.degree}; "
            f"higher derivatives would be dropped"
        )
    total = RatPoly()
    for k, q in enumerate(op.qpolys):
        if k > f.degree and k > 0:
            break
        if not q.is_zero:
            total = total + q * f.derivative(k)
    return total


def solve_operator_from_action(alpha: RatLike, seq: GammaSeq, order: int) -> HermiteDiffOp:
    """Recover [Q_0..Q_order] from the diagonal action alone.

    Imposing T[H_n] = gamma_n H_n for n = 0..order and using
    D^k H_n = n!/(n-k)! * H_{n-k} gives a triangular system: the D^n term
    contributes Q_n * n!, so each Q_n is determined by forward substitution
    from the lower coefficients.  No finite-difference formula is involved,
    which makes this an independent oracle for `coefficient_polynomial`.
    """
    a = validate_alpha(alpha)
    if order < 0:
        raise ValueError("order must be nonnegative")
    polys = hermite_polys(order, a)
    qs = []
    for n in range(order + 1):
        rhs = seq[n] * polys[n]
        for k in range(n):
            falling = Fraction(math.factorial(n), math.factorial(n - k))
            rhs = rhs - falling * (qs[k] * polys[n - k])
        qs.append(rhs / math.factorial(n))
    return HermiteDiffOp(a, 0, tuple(qs))


def check_diagonal_action(alpha: RatLike, seq: GammaSeq, n_max: int) -> CheckReport:
    """Verify T[H_n] = gamma_n * H_n exactly for every n <= n_max."""
    a = validate_alpha(alpha)
    polys = hermite_polys(n_max, a)
    failures = []
    for n in range(n_max + 1):
        op = build_operator(a, seq, n)
        lhs = apply_operator(op, polys[n])
        rhs = seq[n] * polys[n]
        if lhs != rhs:
            failures.append(
                f"diagonal action fails at n={n}, alpha={a}: residual {(lhs - rhs).to_text()}"
            )
    return CheckReport(f"diagonal-action[{seq.name},alpha={a}]", n_max + 1, tuple(failures))


def check_operator_equivalence(alpha: RatLike, seq: GammaSeq, order: int, p: int = 0) -> CheckReport:
    """Formula route vs. solved-from-action route, coefficient by coefficient.

    The shifted variant is covered by solving against the p-shifted sequence,
    since the offset-p coefficients are exactly the offset-0 coefficients of
    that sequence.
    """
    formula = build_operator(alpha, seq, order, p)
    solved = solve_operator_from_action(alpha, seq.shifted(p), order)
    failures = []
    for k in range(order + 1):
        if formula.qpolys[k] != solved.qpolys[k]:
            failures.append(
                f"routes disagree at k={k}, p={p}: formula {formula.qpolys[k].to_text()} "
                f"vs solved {solved.qpolys[k].to_text()}"
            )
    return CheckReport(f"operator-equivalence[{seq.name},alpha={rat(alpha)},p={p}]", order + 1, tuple(failures))


def check_standard_basis_limit(seq: GammaSeq, k_max: int) -> CheckReport:
    """Degeneration to the monomial basis as alpha -> 0.

    Two assertions per k: (i) the coefficient at alpha = 0 equals the
    monomial-basis coefficient exactly; (ii) each x^i-coefficient of Q_k,
    viewed as a function of alpha, interpolates to a polynomial in alpha of
    degree at most floor(k/2).  The nodes are 0 together with dyadic samples
    1, 1/2, 1/4, ...; at least floor(k/2) + 2 nodes are used, so the degree
    bound is a genuine consistency check, not a fit.
    """
    failures = []
    checked = 0
    for k in range(k_max + 1):
        checked += 1
        at_zero = coefficient_polynomial(0, seq, k)
        if at_zero != standard_coefficient(seq, k):
            failures.append(f"alpha=0 coefficient mismatch at k={k}")
            continue
        node_count = max(5, k // 2 + 2)
        nodes = [Fraction(0)] + [Fraction(1, 2**j) for j in range(node_count - 1)]
        samples = [coefficient_polynomial(node, seq, k) for node in nodes]
        top_degree = max(s.degree for s in samples)
        for i in range(top_degree + 1):
            checked += 1
            alpha_poly = interpolate([(node, s.coeff(i)) for node, s in zip(nodes, samples)])
            if alpha_poly.degree > k // 2:
                failures.append(
                    f"coefficient of x^{i} in Q_{k} has alpha-degree "
                    f"{alpha_poly.degree} > {k // 2}"
                )
    return CheckReport(f"standard-basis-limit[{seq.name}]", checked, tuple(failures))


def binomial_poly(k: int) -> RatPoly:
    """The binomial coefficient polynomial x(x-1)...(x-k+1)/k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = ONE
    for i in range(k):
        num = num * RatPoly([-i, 1])
    return num / math.factorial(k)


def interpolation_poly(op: HermiteDiffOp) -> RatPoly:
    """The polynomial p with p(n) = eigenvalue_n for finite-order operators.

    When every Q_k has degree at most k (so Q_k^(k) is a constant), the
    eigenvalues satisfy gamma_n = p(n) for the polynomial
    p(x) = sum_k C(x,k) * Q_k^(k); such operators have polynomial
    eigenvalue sequences and conversely.
    """
    total = RatPoly()
    for k, q in enumerate(op.qpolys):
        dk = q.derivative(k)
        if dk.degree > 0:
            raise ValueError(
                f"Q_{k} has degree {q.degree} > {k}; the eigenvalue sequence "
                f"is not polynomial and no interpolation exists"
            )
        if not dk.is_zero:
            total = total + dk.coeff(0) * binomial_poly(k)
    return total
