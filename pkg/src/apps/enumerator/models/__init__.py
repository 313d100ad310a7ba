from src.apps.enumerator.models.formats import OutputFormat


__all__ = ["OutputFormat"]
