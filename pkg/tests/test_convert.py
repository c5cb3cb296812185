"""Conversions between presentations and the three-route equality check."""
from math import comb

import pytest

from quadlie import (CocycleCoeffs, Mat, QuadraticFamily, ValidationError,
                     all_roads, chain_to_coeffs, coeffs_to_chain,
                     coeffs_to_family, count_parameters, family_to_coeffs,
                     parse_coeffs, tstar_extend)
from quadlie.randgen import random_coeffs


def test_family_round_trip():
    for text in ("123", "123+145", "125+136+147+234", "2/3*[1,2,3]-145"):
        c = parse_coeffs(text, cls=CocycleCoeffs)
        assert family_to_coeffs(coeffs_to_family(c)) == c


def test_chain_round_trip():
    for text in ("123", "124+135+236", "123+147+257+367+456"):
        c = parse_coeffs(text, cls=CocycleCoeffs)
        assert chain_to_coeffs(coeffs_to_chain(c)) == c


def test_family_to_coeffs_rejects_inconsistent():
    good = coeffs_to_family(parse_coeffs("123", cls=CocycleCoeffs))
    # scaling one matrix breaks cross-matrix compatibility, caught by the
    # family laws before the alternating re-check
    fam = QuadraticFamily(3, (good.mats[0].scale(2), good.mats[1],
                              good.mats[2]))
    with pytest.raises(ValidationError) as e:
        family_to_coeffs(fam)
    assert e.value.law == "family"


def test_all_roads_equal_on_clean_input():
    for text in ("123", "123+145", "124+135+236"):
        rep = all_roads(parse_coeffs(text, cls=CocycleCoeffs))
        assert rep.equal
        assert rep.mismatches == ()
        assert rep.n == parse_coeffs(text).n
        assert rep.algebra.alg == tstar_extend(
            parse_coeffs(text, cls=CocycleCoeffs)).alg


def test_all_roads_seeded():
    for seed in range(40):
        c = random_coeffs(3 + seed % 5, seed=seed, nonzero=True)
        rep = all_roads(c)
        assert rep.equal, rep.mismatches


def test_all_roads_rejects_degenerate_input():
    with pytest.raises(ValidationError) as e:
        all_roads(CocycleCoeffs(4))
    assert e.value.law == "nonzero"
    with pytest.raises(ValidationError) as e:
        all_roads(CocycleCoeffs(2))
    assert e.value.law == "dimension"


def test_count_parameters():
    assert count_parameters(5) == comb(5, 3) == 10
    assert [count_parameters(n) for n in range(3, 8)] == [1, 4, 10, 20, 35]
