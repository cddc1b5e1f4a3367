import math

import pytest

import radial_yamabe as ry


def test_constants_are_exact():
    c = ry.derive_constants(2, 2)
    assert c["N"] == 4
    assert c["p"] == "4"
    assert c["a"] == "6"


def test_constant_profile_value_at_half():
    g = ry.product_config(2, 2, 0.5)
    assert g["lambda"] == pytest.approx(1.0, rel=1e-15)
    assert g["second_variation_coefficient"] == pytest.approx(0.0, abs=1e-12)
    assert g["yamabe_constant_profile"] == pytest.approx(12 * math.sqrt(2) * math.pi, rel=1e-12)


def test_polynomial_mode_m2_n2():
    mode = ry.polynomial_mode(2, 2, samples=5)
    assert mode["coefficients"] == ["-1/2", "0", "3/2"]
    assert mode["zero_count"] == 2
    w = mode["profile"]["w"]
    assert w[0] == pytest.approx(1.0)
    assert w[2] == pytest.approx(-0.5)


def test_numerical_mode_matches_cosine():
    mode = ry.numerical_mode(2.0, 2, samples=11)
    for t, w in zip(mode["profile"]["t"], mode["profile"]["w"]):
        assert w == pytest.approx(math.cos(t), abs=1e-9)


def test_bands_and_prediction():
    assert ry.band_index(4.0, 2) == 0
    assert ry.band_index(8.0, 2) == 1
    assert ry.band_index(24.0, 2) == 2
    assert ry.band_index(-1.0, 2) is None
    assert [ry.predicted_minimum(A, 2) for A in (4.0, 8.0, 24.0)] == [2, 4, 6]


def test_extrema_and_sturm():
    assert ry.count_extrema_linear(8.0, 2)["count"] == 1
    cert = ry.sturm_certify(3.0, 17.0, 2)
    assert cert["passed"] and cert["interlacing"]


def test_miss_constant_and_small_alpha():
    assert ry.miss(1.0, 4.0, 4.0, 2)["value"] == 0.0
    assert ry.miss(1e-3, 4.0, 4.0, 2)["value"] > 0.0


def test_monotone_below_constant():
    mono = ry.find_monotone(4.0, 4.0, 2)
    assert mono["kind"] == "monotone_decreasing"
    assert mono["matching_residual"] < 1e-8
    census = ry.run_census_problem(2, 4.0, 4.0)
    const = next(r for r in census["records"] if r["kind"] == "constant")
    assert mono["yamabe_value"] < const["yamabe_value"]


def test_census_delta_tenth():
    c = ry.run_census(2, 2, 0.1)
    assert c["band"] == 1
    assert c["found"] >= 4
    assert c["status"] == "ok"


def test_s2xs2_and_sweep():
    rows = ry.s2xs2_table([1.0, 0.5])
    assert [r["delta"] for r in rows] == [0.5, 1.0]
    assert rows[0]["near_threshold"]
    rep = ry.sweep_lambda(2, 4.0, 2.0, 2.0, 1)
    assert rep["rows"][0]["predicted_min"] == 2
    assert ry.sweep_lambda(2, 4.0, 3.0, 1.0, 4)["rows"] == []


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        ry.derive_constants(1, 2)
    with pytest.raises(ValueError):
        ry.find_monotone(0.5, 4.0, 2)
