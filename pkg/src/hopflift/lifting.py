"""Deformation lifting from F_q to GR(p^n, m), one p-digit at a time.

Each level digit-lifts the current structure, measures the failure of the
bialgebra axioms (an exact degree-2 cochain after division by p^k), kills it
with a coboundary solve over the residue field, then recovers unit, counit
and antipode by Hensel-solving linear systems whose reductions mod p are
invertible.  Reconciliation builds the isomorphism between two lifts of the
same base digit by digit from degree-1 coboundary solves; morphisms and
R-matrices lift the same way (R-matrices through their theta morphism).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _arrays as ra
from . import cohomology as coh
from . import hopfcore as hc
from . import tensorcalc as tc
from .coeffring import RingDescriptor, exact_div_p_array, hensel_solve_array
from .errors import (
    CoboundaryUnsolvable,
    CocycleUnsolvable,
    DescriptorMismatch,
    DifferentBaseOrPrecision,
    InternalAxiomFailure,
    NotACocycle,
    NotDivisible,
    NotSemisimpleOrCosemisimple,
    PostAxiomFailure,
    RightAntipodeFailure,
    TriangularityLost,
    UnitCompatibilityFailure,
)
from .hopfcore import HopfMorphism, HopfPresentation
from .tensorcalc import MultiMap


def ring_at_precision(base_ring: RingDescriptor, k: int) -> RingDescriptor:
    """GR(p^k, m) with the base field's modulus representatives."""
    if k == base_ring.n:
        return base_ring
    return RingDescriptor(base_ring.p, k, base_ring.m, base_ring.modulus)


@dataclass
class LiftState:
    base: HopfPresentation
    precision: int
    current: HopfPresentation
    transcript: list = field(default_factory=list)

    def at_precision(self, k: int) -> HopfPresentation:
        if k == self.precision:
            return self.current
        return hc.reduce_presentation(self.current, ring_at_precision(self.base.ring, k))


@dataclass
class ObstructionReport:
    c: coh.TotalCochain
    _cocycle_ok: bool | None = None

    @property
    def cocycle_ok(self) -> bool:
        """d_total(c) = 0; evaluated lazily (the pipeline certifies exactness
        through the coboundary solver's residual check instead)."""
        if self._cocycle_ok is None:
            self._cocycle_ok = coh.is_cocycle(self.c)
        return self._cocycle_ok

    @property
    def is_zero(self) -> bool:
        return self.c.is_zero

    @property
    def support(self) -> int:
        return sum(f.coeffs.any(axis=-1).sum() for f in self.c.components.values())


def parse_strategy(strategy):
    """'canonical' or 'perturbed:SEED' / ('perturbed', seed)."""
    if strategy == "canonical":
        return ("canonical", None)
    if isinstance(strategy, tuple) and strategy[0] == "perturbed":
        return ("perturbed", int(strategy[1]))
    if isinstance(strategy, str) and strategy.startswith("perturbed"):
        seed = strategy.split(":", 1)[1] if ":" in strategy else "0"
        return ("perturbed", int(seed))
    raise ValueError(f"unknown strategy {strategy!r}")


def _admit_base(base: HopfPresentation):
    if not base.verified or not base.ring.is_field:
        raise NotSemisimpleOrCosemisimple("base must be a VERIFIED presentation over F_q")
    if not hc.is_semisimple(base) or not hc.is_cosemisimple(base):
        raise NotSemisimpleOrCosemisimple(
            "vanishing of the obstruction cohomology needs a semisimple and cosemisimple base"
        )


def _raw_extension(current: HopfPresentation, strategy, level: int):
    """Digit-lift (m, Delta) to precision level+1; perturbed adds p^level noise at level 1."""
    target = ring_at_precision(current.ring, level + 1)
    mul = tc.map_digit_lift(current.mul, target)
    comul = tc.map_digit_lift(current.comul, target)
    kind, seed = parse_strategy(strategy)
    if kind == "perturbed" and level == 1:
        n = current.dim
        rng = np.random.default_rng([seed, level, 0xC0C])
        p = target.p
        noise_m = np.asarray(rng.integers(0, p, size=mul.coeffs.shape), dtype=np.int64)
        noise_d = np.asarray(rng.integers(0, p, size=comul.coeffs.shape), dtype=np.int64)
        mul = MultiMap(target, 2, 1, n, n, (mul.coeffs + p**level * noise_m) % target.q)
        comul = MultiMap(target, 1, 2, n, n, (comul.coeffs + p**level * noise_d) % target.q)
    return mul, comul


def initial_lift(base: HopfPresentation, strategy="canonical"):
    """Raw (m', Delta') over GR(p^2, m) extending the base structure."""
    _admit_base(base)
    return _raw_extension(base, strategy, 1)


def obstruction(mul: MultiMap, comul: MultiMap, base: HopfPresentation) -> ObstructionReport:
    """The degree-2 cochain c = a(m', Delta')/p^n mod p, with its cocycle check.

    Components: (2,0) associativity defect, (1,1) compatibility defect
    Delta'm' - (m' (x) m')(1 3 2 4)(Delta' (x) Delta'), (0,2) coassociativity defect.
    """
    desc = mul.ring
    n = desc.n - 1
    N = mul.dim_out
    m_legs = mul.coeffs.reshape(N, N, N, desc.m)
    d_legs = comul.coeffs.reshape(N, N, N, desc.m)

    left = ra.tensordot(desc, m_legs, m_legs, ([1], [0]))  # m(m(x,y),z): [a,z,x,y]
    left = ra.transpose(left, (0, 2, 3, 1))
    right = ra.tensordot(desc, m_legs, m_legs, ([2], [0]))  # m(x,m(y,z)): [a,x,y,z]
    a1 = ra.sub(desc, right, left)  # m'(I (x) m') - m'(m' (x) I)

    a2_lhs = ra.tensordot(desc, d_legs, m_legs, ([2], [0]))  # [u,v,x,y]
    a2_rhs = hc._delta_mult_rhs(desc, m_legs, d_legs)
    a2 = ra.sub(desc, a2_lhs, a2_rhs)

    cl = ra.tensordot(desc, d_legs, d_legs, ([0], [2]))  # (Delta (x) I)Delta: [w,x,u,v]
    cl = ra.transpose(cl, (2, 3, 0, 1))  # [u,v,w,x]
    cr = ra.tensordot(desc, d_legs, d_legs, ([1], [2]))  # (I (x) Delta)Delta: [u,x,v,w]
    cr = ra.transpose(cr, (0, 2, 3, 1))
    a3 = ra.sub(desc, cr, cl)  # (I (x) Delta')Delta' - (Delta' (x) I)Delta'

    ctx = coh.make_context(base)
    comps = {}
    for (p, q), arr, ai, ao in (
        ((2, 0), a1.reshape(N, N**3, desc.m), 3, 1),
        ((1, 1), a2.reshape(N**2, N**2, desc.m), 2, 2),
        ((0, 2), a3.reshape(N**3, N, desc.m), 1, 3),
    ):
        if n > 0:
            _, divided = exact_div_p_array(desc, arr, n)
        else:
            divided = arr
        comps[(p, q)] = MultiMap(base.ring, ai, ao, N, N, divided % base.ring.p)
    return ObstructionReport(coh.TotalCochain(ctx, 2, comps))


def correct(mul: MultiMap, comul: MultiMap, report: ObstructionReport, base: HopfPresentation):
    """Kill the obstruction with a coboundary solve, then recover unit and counit.

    Returns (mul'', comul'', unit'', counit''); all bialgebra axioms are exact
    at the new precision (asserted, PostAxiomFailure otherwise).
    """
    desc = mul.ring
    n = desc.n - 1
    N = mul.dim_out
    if report.is_zero:
        mul2, comul2 = mul, comul
    else:
        # the solver's residual check certifies d(x) = c exactly, which subsumes
        # the cocycle condition; it is only diagnosed separately on failure
        x = coh.solve_coboundary(report.c, _cocycle_checked=True)
        if x is None:
            if not report.cocycle_ok:
                raise NotACocycle("obstruction cochain is not closed")
            raise CoboundaryUnsolvable("obstruction is not a coboundary; H^2(A) = 0 is violated")
        mu = x.components[(1, 0)]
        delta = x.components[(0, 1)]
        pn = desc.p**n
        mul2 = MultiMap(desc, 2, 1, N, N, (mul.coeffs - pn * mu.coeffs) % desc.q)
        comul2 = MultiMap(desc, 1, 2, N, N, (comul.coeffs - pn * delta.coeffs) % desc.q)
        check = obstruction(mul2, comul2, base)
        if not check.is_zero:
            raise PostAxiomFailure("corrected pair still violates the bialgebra axioms")

    m_legs = mul2.coeffs.reshape(N, N, N, desc.m)
    d_legs = comul2.coeffs.reshape(N, N, N, desc.m)
    eye = ra.eye(desc, N)

    # unit: solve the square subsystem m''(u (x) u0) = u0, then assert
    # two-sidedness; u0 is any lift of the base unit (only its reduction matters)
    u0 = tc.map_digit_lift(base.unit, desc).coeffs.reshape(N, desc.m)
    t_u = ra.tensordot(desc, m_legs, u0, ([2], [0]))  # [a, b]
    unit2 = hensel_solve_array(desc, t_u, u0)
    lu = ra.tensordot(desc, m_legs, unit2, ([1], [0]))
    ru = ra.tensordot(desc, m_legs, unit2, ([2], [0]))
    if np.any(ra.sub(desc, lu, eye)) or np.any(ra.sub(desc, ru, eye)):
        raise PostAxiomFailure("recovered element is not a two-sided unit")

    # counit: solve (eps'' (x) eps0) Delta'' = eps0, then assert both counit axioms
    e0 = tc.map_digit_lift(base.counit, desc).coeffs.reshape(N, desc.m)
    t_e = ra.tensordot(desc, d_legs, e0, ([1], [0]))  # [u, x] -> matrix [x, u]
    t_e = ra.transpose(t_e, (1, 0))
    counit2 = hensel_solve_array(desc, t_e, e0)
    lc = ra.tensordot(desc, counit2, d_legs, ([0], [0]))  # [v, x]
    rc = ra.tensordot(desc, d_legs, counit2, ([1], [0]))  # [u, x]
    if np.any(ra.sub(desc, lc, eye)) or np.any(ra.sub(desc, rc, eye)):
        raise PostAxiomFailure("recovered functional is not a two-sided counit")
    # bialgebra compatibilities of unit and counit
    d1 = ra.tensordot(desc, d_legs, unit2, ([2], [0]))
    if np.any(ra.sub(desc, d1, ra.elem_mul(desc, unit2[:, None, :], unit2[None, :, :]))):
        raise PostAxiomFailure("Delta(1) != 1 (x) 1 after correction")
    em = ra.tensordot(desc, counit2, m_legs, ([0], [0]))
    if np.any(ra.sub(desc, em, ra.elem_mul(desc, counit2[:, None, :], counit2[None, :, :]))):
        raise PostAxiomFailure("counit is not multiplicative after correction")
    e1 = ra.tensordot(desc, counit2, unit2, ([0], [0]))
    if not np.array_equal(e1, ra.one_scalar(desc)):
        raise PostAxiomFailure("eps(1) != 1 after correction")

    unit_map = MultiMap(desc, 0, 1, N, N, unit2.reshape(N, 1, desc.m))
    counit_map = MultiMap(desc, 1, 0, N, N, counit2.reshape(1, N, desc.m))
    return mul2, comul2, unit_map, counit_map


def solve_antipode(mul: MultiMap, comul: MultiMap, unit: MultiMap, counit: MultiMap) -> MultiMap:
    """Solve T(S) = m(S (x) I)Delta = unit o counit by Hensel lifting.

    T is invertible mod p because convolution by the identity is invertible
    in any Hopf algebra (its inverse is convolution by the base antipode).
    """
    desc = mul.ring
    N = mul.dim_out
    m_legs = mul.coeffs.reshape(N, N, N, desc.m)
    d_legs = comul.coeffs.reshape(N, N, N, desc.m)
    t = ra.tensordot(desc, d_legs, m_legs, ([1], [2]))  # D[u,v,x] M[a,w,v] -> [u,x,a,w]
    t = ra.transpose(t, (2, 1, 3, 0)).reshape(N * N, N * N, desc.m)  # [(a,x),(w,u)]
    u_vec = unit.coeffs.reshape(N, desc.m)
    e_vec = counit.coeffs.reshape(N, desc.m)
    rhs = ra.elem_mul(desc, u_vec[:, None, :], e_vec[None, :, :]).reshape(N * N, desc.m)
    s_vec = hensel_solve_array(desc, t, rhs)
    s_map = MultiMap(desc, 1, 1, N, N, s_vec.reshape(N, N, desc.m))
    # right antipode identity
    t2 = ra.tensordot(desc, s_map.coeffs, d_legs, ([1], [1]))  # S[w,v] D[u,v,x] -> [w,u,x]
    rhs2 = ra.tensordot(desc, m_legs, t2, ([1, 2], [1, 0]))  # [a,x]
    target = ra.elem_mul(desc, u_vec[:, None, :], e_vec[None, :, :])
    if np.any(ra.sub(desc, rhs2, target)):
        raise RightAntipodeFailure("left antipode does not satisfy the right identity")
    return s_map


def lift(base: HopfPresentation, n: int, strategy="canonical") -> LiftState:
    """Iterate raw-extension / obstruction / correct / solve_antipode up to p^n."""
    _admit_base(base)
    if n < 1:
        raise ValueError("precision must be >= 1")
    current = base
    transcript = []
    for level in range(1, n):
        t0 = time.perf_counter()
        mul, comul = _raw_extension(current, strategy, level)
        report = obstruction(mul, comul, base)
        mul2, comul2, unit2, counit2 = correct(mul, comul, report, base)
        s_map = solve_antipode(mul2, comul2, unit2, counit2)
        target = mul2.ring
        current = hc.make_presentation(target, mul2, unit2, comul2, counit2, s_map)
        if hc.reduce_presentation(current, base.ring) != base:
            raise InternalAxiomFailure("lift does not reduce to its base mod p")
        solver_rank = None
        if not report.is_zero:
            solver_rank = coh._solver_for(coh.make_context(base), 1).rank
        transcript.append(
            {
                "level": level,
                "precision": level + 1,
                "obstruction_support": int(report.support),
                "correction_applied": not report.is_zero,
                "solver_rank": solver_rank,
                "seconds": round(time.perf_counter() - t0, 6),
            }
        )
    return LiftState(base, n, current, transcript)


# ---------------------------------------------------------------------------
# uniqueness: reconciling two lifts


def _pushforward(desc, eta, eta_inv, pres: HopfPresentation):
    """Transport a presentation along the module isomorphism eta."""
    N = pres.dim
    m_legs = pres.mul.coeffs.reshape(N, N, N, desc.m)
    d_legs = pres.comul.coeffs.reshape(N, N, N, desc.m)
    t = ra.tensordot(desc, eta, m_legs, ([1], [0]))  # [a,x',y']
    t = ra.tensordot(desc, t, eta_inv, ([1], [0]))  # [a,y',x]
    mhat = ra.tensordot(desc, t, eta_inv, ([1], [0]))  # [a,x,y]
    t = ra.tensordot(desc, d_legs, eta_inv, ([2], [0]))  # [u,v,x]
    t = ra.tensordot(desc, eta, t, ([1], [0]))  # [u',v,x]
    dhat = ra.tensordot(desc, eta, t, ([1], [1]))  # [v',u',x]
    dhat = ra.transpose(dhat, (1, 0, 2))
    return mhat, dhat


def reconcile(s1: LiftState, s2: LiftState) -> MultiMap:
    """Exact Hopf isomorphism eta: s1.current -> s2.current with eta = id mod p."""
    if s1.base != s2.base or s1.precision != s2.precision:
        raise DifferentBaseOrPrecision("reconcile needs the same base and precision")
    base = s1.base
    desc = s1.current.ring
    N, n = base.dim, s1.precision
    ctx = coh.make_context(base)
    eta = ra.eye(desc, N)
    m2_legs = s2.current.mul.coeffs.reshape(N, N, N, desc.m)
    d2_legs = s2.current.comul.coeffs.reshape(N, N, N, desc.m)
    for k in range(1, n):
        eta_inv = hensel_solve_array(desc, eta, ra.eye(desc, N))
        mhat, dhat = _pushforward(desc, eta, eta_inv, s1.current)
        diff_m = ra.sub(desc, mhat, m2_legs)
        diff_d = ra.sub(desc, dhat, d2_legs)
        if not (np.any(diff_m) or np.any(diff_d)):
            break
        pk = desc.p**k
        if np.any(diff_m % pk) or np.any(diff_d % pk):
            raise InternalAxiomFailure(f"lift difference not divisible by p^{k}")
        mu = (diff_m // pk) % desc.p
        delta = (diff_d // pk) % desc.p
        z = coh.TotalCochain(
            ctx,
            1,
            {
                (1, 0): MultiMap(base.ring, 2, 1, N, N, mu.reshape(N, N * N, base.ring.m)),
                (0, 1): MultiMap(base.ring, 1, 2, N, N, delta.reshape(N * N, N, base.ring.m)),
            },
        )
        if not coh.is_cocycle(z):
            raise NotACocycle("difference of exact lifts is not a 1-cocycle")
        gamma = coh.solve_coboundary(z, _cocycle_checked=True)
        if gamma is None:
            raise CocycleUnsolvable("1-cocycle is not a coboundary; H^1(A) = 0 is violated")
        g = gamma.components[(0, 0)].coeffs
        step = (ra.eye(desc, N) - pk * g) % desc.q
        eta = ra.tensordot(desc, step, eta, ([1], [0]))
    _assert_intertwines(desc, eta, s1.current, s2.current)
    return MultiMap(desc, 1, 1, N, N, eta)


def _assert_intertwines(desc, eta, h1: HopfPresentation, h2: HopfPresentation):
    N = h1.dim
    eta_inv = hensel_solve_array(desc, eta, ra.eye(desc, N))
    mhat, dhat = _pushforward(desc, eta, eta_inv, h1)
    if np.any(ra.sub(desc, mhat, h2.mul.coeffs.reshape(N, N, N, desc.m))):
        raise InternalAxiomFailure("eta fails to intertwine the products")
    if np.any(ra.sub(desc, dhat, h2.comul.coeffs.reshape(N, N, N, desc.m))):
        raise InternalAxiomFailure("eta fails to intertwine the coproducts")
    u2 = ra.tensordot(desc, eta, h1.unit.coeffs.reshape(N, desc.m), ([1], [0]))
    if np.any(ra.sub(desc, u2, h2.unit.coeffs.reshape(N, desc.m))):
        raise InternalAxiomFailure("eta fails on the units")
    e1 = ra.tensordot(desc, h2.counit.coeffs.reshape(N, desc.m), eta, ([0], [0]))
    if np.any(ra.sub(desc, e1, h1.counit.coeffs.reshape(N, desc.m))):
        raise InternalAxiomFailure("eta fails on the counits")
    s_l = ra.tensordot(desc, eta, h1.antipode.coeffs, ([1], [0]))
    s_r = ra.tensordot(desc, h2.antipode.coeffs, eta, ([1], [0]))
    if np.any(ra.sub(desc, s_l, s_r)):
        raise InternalAxiomFailure("eta fails to intertwine the antipodes")
    if np.any((eta - ra.eye(desc, N)) % desc.p):
        raise InternalAxiomFailure("eta is not the identity mod p")


# ---------------------------------------------------------------------------
# morphism and R-matrix lifting


def lift_morphism(phi: HopfMorphism, lift_a: LiftState, lift_b: LiftState) -> HopfMorphism:
    """The unique Hopf morphism between the lifts reducing to phi mod p."""
    if not phi.verified:
        raise InternalAxiomFailure("phi must be VERIFIED")
    if phi.source != lift_a.base or phi.target != lift_b.base:
        raise DifferentBaseOrPrecision("phi must connect the two lift bases")
    if lift_a.precision != lift_b.precision:
        raise DifferentBaseOrPrecision("lift states must share the precision")
    for state in (lift_a, lift_b):
        _admit_base(state.base)
    n = lift_a.precision
    na, nb = phi.source.dim, phi.target.dim
    ctx = coh.make_context(phi.source, phi.target, phi)
    fmap = phi.map.coeffs
    for k in range(1, n):
        desc = ring_at_precision(lift_a.base.ring, k + 1)
        a_pres = lift_a.at_precision(k + 1)
        b_pres = lift_b.at_precision(k + 1)
        ma = a_pres.mul.coeffs.reshape(na, na, na, desc.m)
        da = a_pres.comul.coeffs.reshape(na, na, na, desc.m)
        mb = b_pres.mul.coeffs.reshape(nb, nb, nb, desc.m)
        db = b_pres.comul.coeffs.reshape(nb, nb, nb, desc.m)
        f = fmap % desc.q  # digit lift
        lhs = ra.tensordot(desc, f, ma, ([1], [0]))  # [b, i, j]
        t = ra.tensordot(desc, mb, f, ([1], [0]))
        rhs = ra.tensordot(desc, t, f, ([1], [0]))
        defect_m = ra.sub(desc, lhs, rhs)  # phi(xy) - phi(x)phi(y)
        t = ra.tensordot(desc, f, da, ([1], [0]))  # [u, b, i]
        lhs2 = ra.tensordot(desc, f, t, ([1], [1]))  # [v, u, i]
        lhs2 = ra.transpose(lhs2, (1, 0, 2))
        rhs2 = ra.tensordot(desc, db, f, ([2], [0]))
        defect_d = ra.sub(desc, lhs2, rhs2)  # (phi (x) phi)Delta - Delta phi
        pk = desc.p**k
        if np.any(defect_m % pk) or np.any(defect_d % pk):
            raise NotDivisible(f"morphism defect not divisible by p^{k}")
        psi = (defect_m // pk) % desc.p
        eta = (defect_d // pk) % desc.p
        fring = lift_a.base.ring
        z = coh.TotalCochain(
            ctx,
            1,
            {
                (1, 0): MultiMap(fring, 2, 1, na, nb, psi.reshape(nb, na * na, fring.m)),
                (0, 1): MultiMap(fring, 1, 2, na, nb, eta.reshape(nb * nb, na, fring.m)),
            },
        )
        if not coh.is_cocycle(z):
            raise NotACocycle("morphism defect pair is not a 1-cocycle")
        chi = coh.solve_coboundary(z, _cocycle_checked=True)
        if chi is None:
            raise CocycleUnsolvable("defect cocycle is not a coboundary; H^1(A,B,phi) = 0 is violated")
        fmap = (f - pk * chi.components[(0, 0)].coeffs) % desc.q
        # exactness of the corrected map at this precision
        lhs = ra.tensordot(desc, fmap, ma, ([1], [0]))
        t = ra.tensordot(desc, mb, fmap, ([1], [0]))
        rhs = ra.tensordot(desc, t, fmap, ([1], [0]))
        if np.any(ra.sub(desc, lhs, rhs)):
            raise PostAxiomFailure("corrected morphism is not multiplicative")
        t = ra.tensordot(desc, fmap, da, ([1], [0]))
        lhs2 = ra.transpose(ra.tensordot(desc, fmap, t, ([1], [1])), (1, 0, 2))
        rhs2 = ra.tensordot(desc, db, fmap, ([2], [0]))
        if np.any(ra.sub(desc, lhs2, rhs2)):
            raise PostAxiomFailure("corrected morphism is not comultiplicative")
    desc = ring_at_precision(lift_a.base.ring, n)
    a_pres, b_pres = lift_a.current, lift_b.current
    out = MultiMap(desc, 1, 1, na, nb, fmap % desc.q)
    # unit/counit compatibility is asserted, never silently repaired
    ub = b_pres.unit.coeffs.reshape(nb, desc.m)
    ua = a_pres.unit.coeffs.reshape(na, desc.m)
    if np.any(ra.sub(desc, ra.tensordot(desc, out.coeffs, ua, ([1], [0])), ub)):
        raise UnitCompatibilityFailure("lifted morphism does not preserve the unit")
    ea = a_pres.counit.coeffs.reshape(na, desc.m)
    eb = b_pres.counit.coeffs.reshape(nb, desc.m)
    if np.any(ra.sub(desc, ra.tensordot(desc, eb, out.coeffs, ([0], [0])), ea)):
        raise UnitCompatibilityFailure("lifted morphism does not preserve the counit")
    if np.any(ra.sub(lift_a.base.ring, out.coeffs % lift_a.base.ring.p, phi.map.coeffs)):
        raise InternalAxiomFailure("lifted morphism does not reduce to phi")
    result = HopfMorphism(a_pres, b_pres, out)
    fails = hc.morphism_failures(result)
    if fails:
        raise PostAxiomFailure(f"lifted morphism fails {fails}")
    return HopfMorphism(a_pres, b_pres, out, verified=True)


def dualcop_state(state: LiftState) -> LiftState:
    """The dual-co-opposite lift: dualcop commutes with reduction mod p^k."""
    base = hc.dual_coopposite(state.base)
    current = hc.dual_coopposite(state.current)
    return LiftState(base, state.precision, current, [])


def lift_rmatrix(H: HopfPresentation, rmat, lift_a: LiftState) -> hc.RMatrix:
    """Lift a quasitriangular structure through its theta morphism (Thm 2.2 route)."""
    R = rmat.R if isinstance(rmat, hc.RMatrix) else rmat
    if H != lift_a.base:
        raise DifferentBaseOrPrecision("R-matrix host must be the lift base")
    checked = rmat if isinstance(rmat, hc.RMatrix) and rmat.quasitriangular else hc.verify_qt(H, R)
    if not checked.quasitriangular:
        raise InternalAxiomFailure("input R-matrix is not quasitriangular")
    th = hc.theta(H, R)
    dstate = dualcop_state(lift_a)
    if th.source != dstate.base:
        raise InternalAxiomFailure("theta source does not match the dual-co-opposite base")
    th_bar = lift_morphism(th, dstate, lift_a)
    r_bar = hc.theta_to_rmatrix(th_bar)
    out = hc.verify_qt(lift_a.current, r_bar)
    if not out.quasitriangular:
        raise InternalAxiomFailure("lifted R-matrix fails quasitriangularity")
    if np.any(ra.sub(H.ring, r_bar.coeffs % H.ring.p, R.coeffs)):
        raise InternalAxiomFailure("lifted R-matrix does not reduce to R")
    if checked.triangular and not out.triangular:
        raise TriangularityLost("triangularity was not preserved by the lift")
    return out
