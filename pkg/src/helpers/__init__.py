from src.helpers.enum import EnumHelper

__all__ = ["EnumHelper"]
