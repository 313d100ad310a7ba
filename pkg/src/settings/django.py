"""Django settings for the egyptian-kn project.

Django hosts the app registry, settings and the management-command CLI; there is no web surface
and no database.
"""

from pathlib import Path
from typing import Literal

from src.settings.environment import env


# ========================== BASE SETTINGS ==============================

BASE_DIR = Path(__file__).resolve().parent.parent

ENVIRONMENT: Literal["local", "prod"] = env("EGYPTIAN_ENVIRONMENT")  # type: ignore

SECRET_KEY = env.str("EGYPTIAN_SECRET_KEY", default="egyptian-kn-local-only")  # type: ignore

DEBUG = env.bool("EGYPTIAN_DEBUG", default=False)  # type: ignore

# =========================== APPLICATIONS definition ==============================
_THIRD_PARTY_APPS: list[str] = []

# Add local environments dependencies
if ENVIRONMENT == "local" and DEBUG:
    _THIRD_PARTY_APPS.append("django_extensions")

_CUSTOM_APPS = [
    "src.apps.shared",
    "src.apps.core",
    "src.apps.automaton",
    "src.apps.enumerator",
    "src.apps.recurrence",
    "src.apps.families",
    "src.apps.oracle",
    "src.apps.analysis",
    "src.apps.cli",
]

INSTALLED_APPS = [
    *_THIRD_PARTY_APPS,
    *_CUSTOM_APPS,
]

# ========================== INTERNATIONALIZATION ==============================
LANGUAGE_CODE = "en-us"

TIME_ZONE = env.str("EGYPTIAN_TIMEZONE", default="UTC")  # type: ignore

USE_I18N = False

USE_TZ = True
