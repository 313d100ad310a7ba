from src.settings.contrib.logging import *  # noqa: F403, I001
from src.settings.contrib.search import *  # noqa: F403
