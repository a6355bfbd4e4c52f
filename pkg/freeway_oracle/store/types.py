"""
Column types for storing pydantic models
"""

from typing import Any, Dict, Optional, Type, TypeVar, cast

import sqlalchemy as sa
from pydantic import BaseModel
from sqlalchemy import Dialect
from sqlalchemy.dialects.postgresql import JSONB
from sqlalchemy.sql.type_api import TypeEngine

_T = TypeVar("_T", bound=BaseModel)


# pylint: disable=abstract-method,too-many-ancestors
class PydanticModel(sa.types.TypeDecorator, TypeEngine[_T]):
    """
    A custom SQLAlchemy column type for declaring a field as a pydantic model, stored as JSON.

    See https://docs.sqlalchemy.org/en/20/core/custom_types.html#marshal-json-strings
    """

    impl = sa.types.JSON
    cache_ok = True

    def __init__(self, model: Type[_T]):
        self.model = model

        super().__init__()

    def load_dialect_impl(self, dialect: Dialect) -> TypeEngine[Any]:
        # Use JSONB for PostgreSQL and JSON for other databases.
        if dialect.name == "postgresql":
            return dialect.type_descriptor(JSONB(none_as_null=True))  # type: ignore
        return dialect.type_descriptor(sa.JSON(none_as_null=True))

    def process_bind_param(self, value: Optional[BaseModel], dialect: Dialect) -> Optional[Dict[str, Any]]:
        if value is None:
            return None
        return value.model_dump(mode="json")

    def process_result_value(self, value: Optional[Any], dialect: Dialect) -> Optional[_T]:
        return cast(_T, self.model.model_validate(value)) if value is not None else None

    def __repr__(self) -> str:
        return f"PydanticModel({self.model.__name__})"
