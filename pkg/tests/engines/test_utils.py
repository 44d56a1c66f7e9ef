import pytest

from graphnorm.engines import LcgStream, parallel_map


def test_stream_is_deterministic():
    a, b = LcgStream(42), LcgStream(42)
    assert [a.next_raw() for _ in range(5)] == [b.next_raw() for _ in range(5)]
    assert LcgStream(1).uniform() != LcgStream(2).uniform()


def test_stream_ranges():
    rng = LcgStream(7)
    values = [rng.uniform() for _ in range(500)]
    assert all(-1.0 <= v < 1.0 for v in values)
    assert min(values) < -0.5 < 0.5 < max(values)
    assert all(0 <= rng.choice(3) < 3 for _ in range(50))
    assert len(rng.coefficients(4)) == 4


def test_choice_needs_items():
    with pytest.raises(ValueError):
        LcgStream(0).choice(0)


@pytest.mark.parametrize("workers", [1, 4])
def test_parallel_map_keeps_order(workers):
    assert parallel_map(lambda x: x * x, range(20), workers) == [x * x for x in range(20)]
