"""Canonical JSON (de)serialization for rings, presentations, maps and lifts.

Key order and coefficient order are fixed, so serialize(deserialize(s)) == s
byte-for-byte on canonical input.  Every RingElement appears as the list
[c_0, .., c_{m-1}]; structure constants use the documented index conventions:
m[i][j][k] is the e_k coefficient of e_i * e_j, delta[i][j][k] the
e_j (x) e_k coefficient of Delta(e_i), S[i][j] the e_j coefficient of S(e_i).
"""

from __future__ import annotations

import json

import numpy as np

from . import hopfcore as hc
from . import lifting as lf
from .coeffring import RingDescriptor, make_ring
from .errors import SchemaViolation
from .hopfcore import HopfMorphism, HopfPresentation
from .tensorcalc import MultiMap


def _expect(cond, path, message):
    if not cond:
        raise SchemaViolation(path, message)


def _expect_key(obj, key, path):
    _expect(isinstance(obj, dict), path, "expected an object")
    if key not in obj:
        raise SchemaViolation(f"{path}.{key}", "missing field")
    return obj[key]


def _elem_to_json(vec) -> list:
    return [int(c) for c in vec]


def _elem_from_json(val, ring: RingDescriptor, path) -> list:
    _expect(isinstance(val, list) and len(val) == ring.m, path, f"expected a list of {ring.m} integers")
    out = []
    for t, c in enumerate(val):
        _expect(isinstance(c, int) and not isinstance(c, bool), f"{path}[{t}]", "expected an integer")
        _expect(0 <= c < ring.q, f"{path}[{t}]", f"coefficient {c} outside [0, {ring.q})")
        out.append(c)
    return out


def ring_to_json(ring: RingDescriptor) -> dict:
    out = {"p": ring.p, "n": ring.n, "m": ring.m}
    if ring.m > 1:
        out["modulus"] = [int(c) for c in ring.modulus]
    return out


def ring_from_json(obj, path=".ring") -> RingDescriptor:
    p = _expect_key(obj, "p", path)
    n = _expect_key(obj, "n", path)
    m = _expect_key(obj, "m", path)
    for k, v in (("p", p), ("n", n), ("m", m)):
        _expect(isinstance(v, int) and v >= 1, f"{path}.{k}", "expected a positive integer")
    modulus = obj.get("modulus")
    if m > 1:
        _expect(modulus is not None, f"{path}.modulus", "required when m > 1")
    try:
        return make_ring(p, n, m, modulus)
    except Exception as exc:
        raise SchemaViolation(path, str(exc)) from exc


def presentation_to_json(H: HopfPresentation) -> dict:
    n = H.dim
    mul = H.mul.coeffs
    comul = H.comul.coeffs
    return {
        "ring": ring_to_json(H.ring),
        "dim": n,
        "m": [[[_elem_to_json(mul[k, i * n + j]) for k in range(n)] for j in range(n)] for i in range(n)],
        "unit": [_elem_to_json(H.unit.coeffs[i, 0]) for i in range(n)],
        "delta": [[[_elem_to_json(comul[j * n + k, i]) for k in range(n)] for j in range(n)] for i in range(n)],
        "counit": [_elem_to_json(H.counit.coeffs[0, i]) for i in range(n)],
        "S": [[_elem_to_json(H.antipode.coeffs[j, i]) for j in range(n)] for i in range(n)],
    }


def _nested(obj, path, dims, ring):
    """Validate and read a nested coefficient table with given dimensions."""
    if not dims:
        return _elem_from_json(obj, ring, path)
    _expect(isinstance(obj, list) and len(obj) == dims[0], path, f"expected a list of length {dims[0]}")
    return [_nested(v, f"{path}[{i}]", dims[1:], ring) for i, v in enumerate(obj)]


def presentation_from_json(obj, path="", verify=True) -> HopfPresentation:
    ring = ring_from_json(_expect_key(obj, "ring", path), f"{path}.ring")
    n = _expect_key(obj, "dim", path)
    _expect(isinstance(n, int) and n >= 1, f"{path}.dim", "expected a positive integer")
    m_tab = _nested(_expect_key(obj, "m", path), f"{path}.m", (n, n, n), ring)
    unit_tab = _nested(_expect_key(obj, "unit", path), f"{path}.unit", (n,), ring)
    delta_tab = _nested(_expect_key(obj, "delta", path), f"{path}.delta", (n, n, n), ring)
    counit_tab = _nested(_expect_key(obj, "counit", path), f"{path}.counit", (n,), ring)
    s_tab = _nested(_expect_key(obj, "S", path), f"{path}.S", (n, n), ring)

    mul = np.zeros((n, n * n, ring.m), dtype=np.int64)
    comul = np.zeros((n * n, n, ring.m), dtype=np.int64)
    unit = np.zeros((n, 1, ring.m), dtype=np.int64)
    counit = np.zeros((1, n, ring.m), dtype=np.int64)
    anti = np.zeros((n, n, ring.m), dtype=np.int64)
    for i in range(n):
        unit[i, 0] = unit_tab[i]
        counit[0, i] = counit_tab[i]
        for j in range(n):
            anti[j, i] = s_tab[i][j]
            for k in range(n):
                mul[k, i * n + j] = m_tab[i][j][k]
                comul[j * n + k, i] = delta_tab[i][j][k]
    pres = HopfPresentation(
        ring,
        n,
        MultiMap(ring, 2, 1, n, n, mul),
        MultiMap(ring, 0, 1, n, n, unit),
        MultiMap(ring, 1, 2, n, n, comul),
        MultiMap(ring, 1, 0, n, n, counit),
        MultiMap(ring, 1, 1, n, n, anti),
    )
    if verify:
        report = hc.verify_hopf(pres)
        if report.all_pass:
            pres = hc.HopfPresentation(ring, n, *pres.tensors(), verified=True)
    return pres


def multimap_to_json(mm: MultiMap) -> dict:
    return {
        "in": mm.arity_in,
        "out": mm.arity_out,
        "coeffs": [_elem_to_json(v) for v in mm.coeffs.reshape(-1, mm.ring.m)],
    }


def multimap_from_json(obj, ring, dim_in, dim_out, path=".map") -> MultiMap:
    ai = _expect_key(obj, "in", path)
    ao = _expect_key(obj, "out", path)
    coeffs = _expect_key(obj, "coeffs", path)
    rows, cols = dim_out**ao, dim_in**ai
    _expect(isinstance(coeffs, list) and len(coeffs) == rows * cols, f"{path}.coeffs", f"expected {rows * cols} entries")
    arr = np.zeros((rows * cols, ring.m), dtype=np.int64)
    for t, v in enumerate(coeffs):
        arr[t] = _elem_from_json(v, ring, f"{path}.coeffs[{t}]")
    return MultiMap(ring, ai, ao, dim_in, dim_out, arr.reshape(rows, cols, ring.m))


def rmatrix_to_json(H: HopfPresentation, R: MultiMap) -> dict:
    return {"ring": ring_to_json(H.ring), "dim": H.dim, "R": multimap_to_json(R)}


def rmatrix_from_json(obj) -> MultiMap:
    ring = ring_from_json(_expect_key(obj, "ring", ""), ".ring")
    dim = _expect_key(obj, "dim", "")
    return multimap_from_json(_expect_key(obj, "R", ""), ring, dim, dim, ".R")


def morphism_to_json(phi: HopfMorphism) -> dict:
    ns, nt = phi.source.dim, phi.target.dim
    return {
        "source": presentation_to_json(phi.source),
        "target": presentation_to_json(phi.target),
        "map": [[_elem_to_json(phi.map.coeffs[j, i]) for j in range(nt)] for i in range(ns)],
    }


def morphism_from_json(obj, verify=True) -> HopfMorphism:
    src = presentation_from_json(_expect_key(obj, "source", ""), ".source", verify=verify)
    tgt = presentation_from_json(_expect_key(obj, "target", ""), ".target", verify=verify)
    tab = _nested(_expect_key(obj, "map", ""), ".map", (src.dim, tgt.dim), src.ring)
    arr = np.zeros((tgt.dim, src.dim, src.ring.m), dtype=np.int64)
    for i in range(src.dim):
        for j in range(tgt.dim):
            arr[j, i] = tab[i][j]
    return hc.make_morphism(src, tgt, MultiMap(src.ring, 1, 1, src.dim, tgt.dim, arr), verify=verify)


def liftstate_to_json(state: lf.LiftState) -> dict:
    return {
        "base": presentation_to_json(state.base),
        "precision": state.precision,
        "current": presentation_to_json(state.current),
        "transcript": state.transcript,
    }


def liftstate_from_json(obj) -> lf.LiftState:
    base = presentation_from_json(_expect_key(obj, "base", ""), ".base")
    precision = _expect_key(obj, "precision", "")
    current = presentation_from_json(_expect_key(obj, "current", ""), ".current")
    transcript = obj.get("transcript", [])
    _expect(current.ring.n == precision, ".precision", "precision disagrees with the current ring")
    return lf.LiftState(base, precision, current, transcript)


def cochain_to_json(z) -> dict:
    comps = []
    for (p, q) in sorted(z.components, key=lambda pq: -pq[0]):
        comps.append({"p": p, "q": q, "map": multimap_to_json(z.components[(p, q)])})
    return {"degree": z.degree, "components": comps}


def cochain_from_json(obj, ctx):
    from . import cohomology as coh

    degree = _expect_key(obj, "degree", "")
    comps = {}
    items = _expect_key(obj, "components", "")
    _expect(isinstance(items, list), ".components", "expected a list")
    for t, entry in enumerate(items):
        p = _expect_key(entry, "p", f".components[{t}]")
        q = _expect_key(entry, "q", f".components[{t}]")
        mm = multimap_from_json(
            _expect_key(entry, "map", f".components[{t}]"),
            ctx.ring,
            ctx.A.dim,
            ctx.B.dim,
            f".components[{t}].map",
        )
        comps[(p, q)] = mm
    try:
        return coh.TotalCochain(ctx, degree, comps)
    except Exception as exc:
        raise SchemaViolation(".components", str(exc)) from exc


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(".", f"invalid JSON: {exc}") from exc
