import pytest

from graphnorm.models import DiagonalSequence, ModelRegistry, MomentumLine
from graphnorm.sequences import DiagonalSymbol


def test_bundled_models_are_registered():
    assert set(ModelRegistry.ids()) >= {"diag", "momentum"}
    assert ModelRegistry.get("momentum") is MomentumLine
    assert ModelRegistry.get("nope") is None


def test_create_passes_options():
    model = ModelRegistry.create("diag", symbol=DiagonalSymbol((1, 0, 1)), eps=1e-8, max_index=None)
    assert isinstance(model, DiagonalSequence)
    assert model.symbol == DiagonalSymbol((1, 0, 1))
    assert model.eps == 1e-8
    assert isinstance(ModelRegistry.create("momentum", symbol=None, eps=None), MomentumLine)


def test_create_unknown_model():
    with pytest.raises(ValueError, match="Unknown model"):
        ModelRegistry.create("nope")


def test_register_rejects_duplicates_and_missing_ids():
    with pytest.raises(ValueError, match="already registered"):
        ModelRegistry.register(MomentumLine)

    class Nameless(MomentumLine):
        id = ""

    with pytest.raises(ValueError, match="no id"):
        ModelRegistry.register(Nameless)
