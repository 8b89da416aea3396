"""Сервисы, связывающие CLI с алгебраическим ядром."""

from src.services import algebra_service

__all__ = ["algebra_service"]
