from src.settings.django import *  # noqa: F403, I001
from src.settings.contrib import *  # noqa: F403
