import math

import pytest
import scipy.special
from hypothesis import given
from hypothesis import strategies as st

from graphnorm.sequences import SeqVector, Tail, seq_inner_product, seq_norm_sq
from graphnorm.storage import NotSquareIntegrableError, SeriesBoundError

ZETA_2 = 1.6449340668482264
ZETA_4 = 1.0823232337111382


def test_finitely_supported_sum_is_exact():
    result = seq_inner_product(SeqVector.basis(3), SeqVector.basis(3))
    assert result.value == 1
    assert result.truncation_index == 4
    assert seq_inner_product(SeqVector.basis(3), SeqVector.power_tail(1.0, 2.0)).value == pytest.approx(1 / 9)


@pytest.mark.parametrize(
    "vector, expected",
    [
        (SeqVector.power_tail(1.0, 2.0), ZETA_4),
        (SeqVector.power_tail(1.0, 1.0), ZETA_2),
        (SeqVector.power_tail(1.0, 2.0, start=3), ZETA_4 - 1 - 1 / 16),
        (SeqVector.geometric_tail(1.0, 0.5), 1 / 3),
        (SeqVector.geometric_tail(1.0, -1.0, 2.5), float(scipy.special.zeta(5.0))),
    ],
)
def test_norms_against_closed_forms(vector, expected):
    result = seq_norm_sq(vector)
    assert result.error_bound <= 1e-10
    assert result.value.real == pytest.approx(expected, abs=1e-9)


def test_alternating_cross_term():
    # sum (-1)^n n^-4.5 is minus the Dirichlet eta function at 4.5
    eta = (1 - 2.0**-3.5) * float(scipy.special.zeta(4.5))
    result = seq_inner_product(SeqVector.power_tail(1.0, 2.0), SeqVector.geometric_tail(1.0, -1.0, 2.5))
    assert result.value.real == pytest.approx(-eta, abs=1e-9)


def test_rejects_vectors_outside_l2():
    with pytest.raises(NotSquareIntegrableError):
        seq_norm_sq(SeqVector.power_tail(1.0, 0.5))


def test_slowly_decaying_oscillation_exhausts_the_index_budget():
    f = SeqVector.geometric_tail(1.0, 1j, 0.6)
    g = SeqVector.power_tail(1.0, 0.6)
    with pytest.raises(SeriesBoundError) as excinfo:
        seq_inner_product(f, g, eps=1e-10, max_index=1000)
    assert excinfo.value.last_index == 1000
    assert excinfo.value.achieved_bound > 1e-10


def test_rational_weights_are_certified():
    # 1 / (n^2 (n + i)) has a rational weight with no closed form
    f = SeqVector.from_parts(tails=[Tail(1.0, 2.0, den=(1j, 1.0))])
    result = seq_norm_sq(f)
    direct = math.fsum(1 / (n**4 * (n * n + 1)) for n in range(1, 200_000))
    assert result.error_bound <= 1e-10
    assert result.value.real == pytest.approx(direct, abs=1e-9)


# ===== Properties =====

tails = st.lists(
    st.tuples(
        st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False),
        st.sampled_from([0.75, 1.0, 1.5, 2.0, 3.0]),
        st.sampled_from([1.0, -1.0, 0.5]),
    ),
    max_size=3,
)
finite = st.dictionaries(
    st.integers(min_value=1, max_value=8),
    st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False),
    max_size=4,
)


def build(parts, entries) -> SeqVector:
    return SeqVector.from_parts(parts, [Tail(complex(c), s, complex(r)) for c, s, r in entries])


@given(finite, tails, finite, tails)
def test_inner_product_is_hermitian_within_its_bounds(fa, ta, fb, tb):
    f, g = build(fa, ta), build(fb, tb)
    forward = seq_inner_product(f, g)
    backward = seq_inner_product(g, f)
    assert abs(forward.value - backward.value.conjugate()) <= forward.error_bound + backward.error_bound + 1e-12


@given(finite, tails)
def test_tighter_eps_stays_within_the_first_bound(fa, ta):
    f = build(fa, ta)
    coarse = seq_norm_sq(f, eps=1e-8)
    fine = seq_norm_sq(f, eps=1e-9)
    assert abs(coarse.value - fine.value) <= coarse.error_bound + fine.error_bound
    assert coarse.value.real >= -coarse.error_bound
