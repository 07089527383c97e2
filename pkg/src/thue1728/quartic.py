"""Binary quartic forms: invariants, Hessian, covariants, resolvent forms.

F(x,y) = a0*x^4 + a1*x^3*y + a2*x^2*y^2 + a3*x*y^3 + a4*y^4 with integer
coefficients.  Invariants

    I = a2^2 - 3*a1*a3 + 12*a0*a4
    J = 2*a2^3 - 9*a1*a2*a3 + 27*a1^2*a4 - 72*a0*a2*a4 + 27*a0*a3^2

satisfy 27*Delta = 4*I^3 - J^2.  Forms arriving from the reduction pipeline
have J = 0, I > 0 and four real roots; for those the Hessian
H = F_xx*F_yy - F_xy^2 is negative definite, m = sqrt(-H/9) is a positive
definite quadratic covariant, and there are conjugate linear forms xi, eta
with xi^4 - eta^4 = 8*sqrt(3*I*|A4|)*F (A4 = y^4 coefficient of H).

"Conjugate" needs care: if eta were the plain coefficient-conjugate of xi,
xi^4 - eta^4 would be purely imaginary on real points.  The identity holds
with eta = zeta * conj(xi), zeta^4 = -1, which gives xi^4 - eta^4 =
2*Re(xi^4) and |eta| = |xi| pointwise -- exactly what the downstream
|1 - z| = 1 invariant requires.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

Coeffs = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class QuarticForm:
    a0: int
    a1: int
    a2: int
    a3: int
    a4: int

    @property
    def coeffs(self) -> Coeffs:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)

    def __call__(self, x: int, y: int):
        a0, a1, a2, a3, a4 = self.coeffs
        return (((a0 * x + a1 * y) * x + a2 * y * y) * x + a3 * y**3) * x + a4 * y**4

    @staticmethod
    def from_coeffs(c) -> "QuarticForm":
        a0, a1, a2, a3, a4 = (int(v) for v in c)
        return QuarticForm(a0, a1, a2, a3, a4)


@dataclass(frozen=True)
class InvariantSet:
    I: int
    J: int
    Delta: Fraction  # (4*I^3 - J^2)/27, exact


def invariants(F: QuarticForm) -> InvariantSet:
    a0, a1, a2, a3, a4 = F.coeffs
    I = a2 * a2 - 3 * a1 * a3 + 12 * a0 * a4
    J = (
        2 * a2**3
        - 9 * a1 * a2 * a3
        + 27 * a1 * a1 * a4
        - 72 * a0 * a2 * a4
        + 27 * a0 * a3 * a3
    )
    return InvariantSet(I=I, J=J, Delta=Fraction(4 * I**3 - J * J, 27))


def hessian(F: QuarticForm) -> QuarticForm:
    """H = F_xx*F_yy - F_xy^2, expanded to closed-form coefficients."""
    a0, a1, a2, a3, a4 = F.coeffs
    return QuarticForm(
        3 * (8 * a0 * a2 - 3 * a1 * a1),
        12 * (6 * a0 * a3 - a1 * a2),
        6 * (3 * a1 * a3 + 24 * a0 * a4 - 2 * a2 * a2),
        12 * (6 * a1 * a4 - a2 * a3),
        3 * (8 * a2 * a4 - 3 * a3 * a3),
    )


def gl2_transform(F: QuarticForm, M: tuple[int, int, int, int]) -> QuarticForm:
    """Substitute (x, y) -> (alpha*x + beta*y, gamma*x + delta*y); det must be +-1."""
    al, be, ga, de = M
    if al * de - be * ga not in (1, -1):
        raise ValueError(f"matrix {M} is not unimodular")
    # powers of the two linear forms as coefficient vectors
    def lin_pow(a, b, n):
        out = [1]
        for _ in range(n):
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i] += c * a
                nxt[i + 1] += c * b
            out = nxt
        return out

    acc = [0] * 5
    for i, coef in enumerate(F.coeffs):
        px = lin_pow(al, be, 4 - i)
        py = lin_pow(ga, de, i)
        conv = [0] * 5
        for ix, cx in enumerate(px):
            for iy, cy in enumerate(py):
                conv[ix + iy] += cx * cy
        for j in range(5):
            acc[j] += coef * conv[j]
    return QuarticForm.from_coeffs(acc)


def real_roots(F: QuarticForm, prec: int = 256) -> list:
    """Real roots of F(z, 1), ascending, multiplicity-aware; [] if degree < 1."""
    coeffs = [c for c in F.coeffs]
    # strip leading zeros: lower-degree dehomogenization
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return []
    with mpmath.workprec(prec + 64):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in coeffs], maxsteps=200, extraprec=prec)
        eps = mpmath.ldexp(1, -(prec // 2))
        out = []
        for r in roots:
            scale = 1 + abs(mpmath.re(r))
            if abs(mpmath.im(r)) <= eps * scale:
                out.append(mpmath.re(r))
        out.sort()
    return out


def _second_phi(I: int, J: int, a0: int, prec: int):
    """Middle root of X^3 - 3*I*X + J under the 4*a0*phi ordering."""
    with mpmath.workprec(prec + 64):
        rts = mpmath.polyroots([mpmath.mpf(1), 0, -3 * mpmath.mpf(I), mpmath.mpf(J)], maxsteps=200)
        reals = sorted(mpmath.re(r) for r in rts)
        ordered = sorted(reals, key=lambda t: 4 * a0 * t, reverse=True)
        return ordered[1]


@dataclass
class QuadraticCovariant:
    """m(x,y) = A*x^2 + B*x*y + C*y^2 with m^2 = -H/9 + (4/3)*phi*F."""

    A: object
    B: object
    C: object
    phi: object
    residual: object
    positive_definite: bool

    def __call__(self, x, y):
        return self.A * x * x + self.B * x * y + self.C * y * y


def covariant_m(F: QuarticForm, prec: int = 256) -> QuadraticCovariant:
    inv = invariants(F)
    if inv.J != 0:
        raise ValueError(f"covariant extraction implemented for J = 0 forms only (J = {inv.J})")
    if inv.I <= 0:
        raise ValueError(f"requires I > 0, got {inv.I}")
    if len(real_roots(F, prec)) != 4:
        raise ValueError("requires four real roots")
    H = hessian(F)
    with mpmath.workprec(prec):
        # J = 0: middle root of X^3 - 3IX is 0 for either sign of a0
        phi = mpmath.mpf(0)
        h = [-mpmath.mpf(c) / 9 for c in H.coeffs]
        if h[0] <= 0:
            raise ValueError("Hessian not negative definite at x^4")
        A = mpmath.sqrt(h[0])
        B = h[1] / (2 * A)
        C = (h[2] - B * B) / (2 * A)
        resid = max(abs(2 * B * C - h[3]), abs(C * C - h[4]))
        scale = max(abs(v) for v in h) + 1
        pd = bool(A > 0 and 4 * A * C - B * B > 0)
        return QuadraticCovariant(A=A, B=B, C=C, phi=phi, residual=resid / scale, positive_definite=pd)


def is_reduced(m: QuadraticCovariant) -> bool:
    """|B| <= A <= C, the classical reduction region for definite forms."""
    return bool(abs(m.B) <= m.A and m.A <= m.C)


def is_irreducible(F: QuarticForm) -> bool:
    """Irreducibility over Q of the degree-4 form, by exact search.

    Linear factors via rational-root divisor pairs, quadratic splittings via
    divisor enumeration on the outer coefficients plus an exact linear solve.
    """
    a0, a1, a2, a3, a4 = F.coeffs
    if a0 == 0 or a4 == 0:
        return False  # x or y divides the form
    from .arith import divisors

    # linear factor q*x - p*y  <=>  F(p, q) = 0 with p | a4, q | a0
    for p in divisors(a4):
        for q in divisors(a0):
            for sp in (p, -p):
                if F(sp, q) == 0:
                    return False
    # quadratic splitting (al*x^2 + b*x*y + g*y^2)(al2*x^2 + b2*x*y + g2*y^2)
    for al in divisors(a0):
        for sal in (al, -al):
            al2, rem = divmod(a0, sal)
            if rem:
                continue
            for g in divisors(a4):
                for sg in (g, -g):
                    g2, rem = divmod(a4, sg)
                    if rem:
                        continue
                    det = al2 * sg - sal * g2
                    pi = a2 - sal * g2 - al2 * sg
                    if det != 0:
                        num_b = a1 * sg - a3 * sal
                        num_b2 = al2 * a3 - g2 * a1
                        if num_b % det or num_b2 % det:
                            continue
                        b, b2 = num_b // det, num_b2 // det
                        if b * b2 == pi:
                            return False
                    else:
                        # degenerate system: enumerate b*b2 = pi exactly
                        cands = []
                        if pi == 0:
                            if a1 % sal == 0:
                                cands.append((0, a1 // sal))
                            if a1 % al2 == 0:
                                cands.append((a1 // al2, 0))
                        else:
                            for d in divisors(pi):
                                for sd in (d, -d):
                                    if pi % sd == 0:
                                        cands.append((sd, pi // sd))
                        for b, b2 in cands:
                            if al2 * b + sal * b2 == a1 and b * g2 + b2 * sg == a3 and b * b2 == pi:
                                return False
    return True


@dataclass
class ResolventPair:
    """xi = p*x + q*y and eta = zeta*conj(xi), zeta = exp(i*pi/4), with

        xi^4 - eta^4 = scale * F,    scale = 8*sqrt(3*I*|A4|).

    |eta(x,y)| = |xi(x,y)| for real (x,y), so z = 1 - (eta/xi)^4 always has
    |1 - z| = 1.
    """

    form: QuarticForm
    p: object
    q: object
    scale: object
    pairing: tuple
    residual: object
    prec: int

    def xi(self, x, y):
        return self.p * x + self.q * y

    def eta(self, x, y):
        with mpmath.workprec(self.prec):
            zeta = mpmath.expjpi(mpmath.mpf(1) / 4)
            return zeta * (mpmath.conj(self.p) * x + mpmath.conj(self.q) * y)


def resolvent_pair(F: QuarticForm, prec: int = 256, tol: float = 1e-9) -> ResolventPair:
    """Construct (xi, eta) for a J = 0, I > 0 form with four real roots.

    The four roots split into two pairs giving real quadratics A*B = F/a0;
    the correct pairing is the one whose mixed discriminant-bilinear form
    vanishes, and then xi^2 = (s*e^{-i pi/4}*A + t*e^{+i pi/4}*B)/2 with
    s/t = +-sqrt(disc B/disc A) and s*t = scale*a0.  All three pairings are
    tried, ordered by |bilinear|; the identity residual arbitrates.
    """
    inv = invariants(F)
    if inv.J != 0:
        raise ValueError(f"resolvent construction requires J = 0, got J = {inv.J}")
    if inv.I <= 0:
        raise ValueError(f"requires I > 0, got I = {inv.I}")
    A4 = hessian(F).a4
    if A4 == 0:
        raise ValueError("Hessian y^4 coefficient is zero; apply a unimodular shift first")
    roots = real_roots(F, prec)
    if len(roots) != 4:
        raise ValueError(f"requires four real roots, found {len(roots)}")
    a0 = F.a0
    with mpmath.workprec(prec):
        scale = 8 * mpmath.sqrt(3 * mpmath.mpf(inv.I) * abs(A4))
        fnorm = max(abs(mpmath.mpf(c)) for c in F.coeffs)

        def quad(i, j):
            return (mpmath.mpf(1), -(roots[i] + roots[j]), roots[i] * roots[j])

        def bil(P, Q):
            return P[1] * Q[1] - 2 * P[0] * Q[2] - 2 * P[2] * Q[0]

        pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
        scored = []
        for pr in pairings:
            A = quad(*pr[0])
            B = quad(*pr[1])
            scored.append((abs(bil(A, B)), pr, A, B))
        scored.sort(key=lambda e: e[0])

        best = None
        for _, pr, A, B in scored:
            dA = A[1] * A[1] - 4 * A[0] * A[2]
            dB = B[1] * B[1] - 4 * B[0] * B[2]
            if dA <= 0 or dB <= 0:
                continue
            for order in ((A, B, pr), (B, A, (pr[1], pr[0]))):
                P, Q, tag = order
                dP = P[1] * P[1] - 4 * P[0] * P[2]
                dQ = Q[1] * Q[1] - 4 * Q[0] * Q[2]
                rho = mpmath.sign(a0) * mpmath.sqrt(dQ / dP)
                t2 = scale * a0 / rho
                if t2 <= 0:
                    continue
                t = mpmath.sqrt(t2)
                s = rho * t
                w_minus = s * mpmath.expjpi(mpmath.mpf(-1) / 4)
                w_plus = t * mpmath.expjpi(mpmath.mpf(1) / 4)
                G = [(w_minus * P[i] + w_plus * Q[i]) / 2 for i in range(3)]
                p = mpmath.sqrt(G[0])
                if p == 0:
                    continue
                q = G[1] / (2 * p)
                xi4 = (p**4, 4 * p**3 * q, 6 * p * p * q * q, 4 * p * q**3, q**4)
                resid = mpmath.mpf(0)
                for c_xi, c_f in zip(xi4, F.coeffs):
                    # imaginary parts cancel identically in xi^4 - eta^4
                    resid = max(resid, abs(2 * mpmath.re(c_xi) - scale * c_f))
                if best is None or resid < best[0]:
                    best = (resid, p, q, tag)
                if resid < tol * fnorm:
                    return ResolventPair(form=F, p=p, q=q, scale=scale, pairing=tag, residual=resid, prec=prec)
        if best is None:
            raise ValueError("no admissible root pairing found")
        resid, p, q, tag = best
        raise ValueError(f"resolvent identity residual {mpmath.nstr(resid, 8)} exceeds tolerance")
