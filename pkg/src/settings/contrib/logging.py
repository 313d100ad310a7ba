"""Logging configuration."""

from src.settings.environment import env


LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "[%(asctime)s] %(levelname)s [%(name)s.%(funcName)s:%(lineno)d] %(message)s",
        }
    },
    "handlers": {
        # stderr only: command output on stdout must stay byte-stable
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": False,
        },
        # Main app
        "src": {
            "handlers": ["console"],
            "level": env.str("EGYPTIAN_LOG_LEVEL"),
            "propagate": False,
        },
    },
}
