from src.apps.analysis.models.identities import IdentityKind


__all__ = ["IdentityKind"]
