"""Pydantic validation with errors keyed by dotted field path (``params.theta``)."""

from typing import Any, Dict, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

M = TypeVar("M", bound=BaseModel)


def validate_with_model(
    data: Dict[str, Any], model_class: Type[M]
) -> Tuple[Optional[M], Dict[str, str]]:
    """
    Attempt to instantiate and validate a Pydantic model.

    Returns:
        (model_instance, {}) on success.
        (None, {dotted.field: error_message}) on validation failure, in the
        order pydantic reports them.
    """
    try:
        return model_class.model_validate(data), {}
    except ValidationError as e:
        errors: Dict[str, str] = {}
        for err in e.errors():
            # 'loc' is a tuple like ('params', 'theta'); list positions are ints
            loc = err.get("loc", ())
            field_name = ".".join(str(part) for part in loc) or "__all__"

            msg = err.get("msg", "Invalid value")
            # Remove Pydantic's "Value error, " prefix if present
            if msg.startswith("Value error, "):
                msg = msg[len("Value error, ") :]

            errors.setdefault(field_name, msg)
        return None, errors
