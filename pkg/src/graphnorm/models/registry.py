"""
Registry for operator models.
Models self-register on module import so `--model` can resolve them by id.
"""

from .base import HilbertModel


class ModelRegistry:
    """
    Global registry of bundled HilbertModel classes.
    """

    _models: dict[str, type[HilbertModel]] = {}

    @classmethod
    def register(cls, model_cls: type[HilbertModel]) -> None:
        """
        Register a model class under its id.

        Args:
            model_cls: HilbertModel subclass with a non-empty id

        Raises:
            ValueError: If the id is empty or already registered
        """
        if not model_cls.id:
            raise ValueError(f"Model class {model_cls.__name__} has no id")
        if model_cls.id in cls._models:
            raise ValueError(f"Model with id '{model_cls.id}' is already registered")

        cls._models[model_cls.id] = model_cls

    @classmethod
    def ids(cls) -> list[str]:
        """
        Get the ids of all registered models.

        Returns:
            Registered ids in registration order
        """
        return list(cls._models)

    @classmethod
    def get(cls, model_id: str) -> type[HilbertModel] | None:
        """
        Get a model class by id.

        Args:
            model_id: The model id to look up

        Returns:
            The HilbertModel subclass if found, None otherwise
        """
        return cls._models.get(model_id)

    @classmethod
    def create(cls, model_id: str, **options) -> HilbertModel:
        """
        Instantiate a registered model.

        Args:
            model_id: The model id
            **options: Model options (symbol, eps, max_index); unknown ones are ignored

        Returns:
            A fresh model instance

        Raises:
            ValueError: If no model is registered under model_id
        """
        model_cls = cls.get(model_id)
        if model_cls is None:
            raise ValueError(f"Unknown model '{model_id}' (available: {', '.join(cls.ids())})")
        return model_cls.from_options(**options)
