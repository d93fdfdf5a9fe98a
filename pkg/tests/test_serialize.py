import numpy as np
import pytest

from hopflift import hopfcore as hc
from hopflift import lifting as lf
from hopflift import serialize as ser
from hopflift import tensorcalc as tc
from hopflift.coeffring import make_ring
from hopflift.errors import SchemaViolation

F5 = make_ring(5)
C2 = hc.generate("C2", F5)


def test_presentation_roundtrip_bytes():
    text = ser.dumps(ser.presentation_to_json(C2))
    again = ser.dumps(ser.presentation_to_json(ser.presentation_from_json(ser.loads(text))))
    assert text == again


def test_roundtrip_preserves_verification_and_tensors():
    H = ser.presentation_from_json(ser.loads(ser.dumps(ser.presentation_to_json(C2))))
    assert H.verified and H == C2


def test_index_conventions():
    obj = ser.presentation_to_json(C2)
    # m[g][g][1] = 1: g*g = 1
    assert obj["m"][1][1][0] == [1] and obj["m"][1][1][1] == [0]
    # delta[g][g][g] = 1
    assert obj["delta"][1][1][1] == [1]
    # S[g][g] = 1
    assert obj["S"][1][1] == [1]
    assert obj["unit"] == [[1], [0]]
    assert obj["counit"] == [[1], [1]]


def test_galois_ring_and_extension_roundtrip():
    F4 = make_ring(2, 1, 2)
    H = hc.generate("C3", F4)
    text = ser.dumps(ser.presentation_to_json(H))
    back = ser.presentation_from_json(ser.loads(text))
    assert back == H
    assert ser.loads(text)["ring"]["modulus"] == [1, 1, 1]

    Z25 = make_ring(5, 2)
    H2 = hc.generate("C2", Z25)
    assert ser.presentation_from_json(ser.loads(ser.dumps(ser.presentation_to_json(H2)))) == H2


def test_missing_field_path():
    obj = ser.loads(ser.dumps(ser.presentation_to_json(C2)))
    del obj["S"]
    with pytest.raises(SchemaViolation) as err:
        ser.presentation_from_json(obj)
    assert err.value.path == ".S"


def test_coefficient_out_of_range_path():
    obj = ser.loads(ser.dumps(ser.presentation_to_json(C2)))
    obj["m"][1][0][1] = [7]
    with pytest.raises(SchemaViolation) as err:
        ser.presentation_from_json(obj)
    assert err.value.path == ".m[1][0][1][0]"
    assert "outside" in err.value.message


def test_wrong_shape_path():
    obj = ser.loads(ser.dumps(ser.presentation_to_json(C2)))
    obj["delta"][0] = obj["delta"][0][:1]
    with pytest.raises(SchemaViolation) as err:
        ser.presentation_from_json(obj)
    assert err.value.path.startswith(".delta[0]")


def test_morphism_roundtrip():
    C4 = hc.generate("C4", F5)
    inc = np.zeros((4, 2, 1), dtype=np.int64)
    inc[0, 0, 0] = 1
    inc[2, 1, 0] = 1
    phi = hc.make_morphism(C2, C4, tc.MultiMap(F5, 1, 1, 2, 4, inc))
    back = ser.morphism_from_json(ser.loads(ser.dumps(ser.morphism_to_json(phi))))
    assert back.map == phi.map and back.verified


def test_liftstate_roundtrip():
    st = lf.lift(C2, 3, "perturbed:7")
    back = ser.liftstate_from_json(ser.loads(ser.dumps(ser.liftstate_to_json(st))))
    assert back.base == st.base and back.current == st.current and back.precision == 3
    assert back.transcript == st.transcript


def test_rmatrix_roundtrip():
    R1 = tc.MultiMap(F5, 0, 2, 2, 2, np.array([3, 3, 3, 2], dtype=np.int64).reshape(4, 1)[:, :, None])
    back = ser.rmatrix_from_json(ser.loads(ser.dumps(ser.rmatrix_to_json(C2, R1))))
    assert back == R1


def test_cochain_roundtrip_and_cocycle_check():
    from hopflift import cohomology as coh

    ctx = coh.make_context(C2)
    z = coh.d_total(coh.random_cochain(ctx, 1, 4))
    back = ser.cochain_from_json(ser.loads(ser.dumps(ser.cochain_to_json(z))), ctx)
    assert back == z and coh.is_cocycle(back)
