"""Search limits and budgets for the counting, enumeration and oracle services."""

from src.settings.environment import env


EGYPTIAN_SEARCH = {
    # Largest n accepted by automaton counting (memo tables grow with n).
    "COUNT_LIMIT": env.int("EGYPTIAN_COUNT_LIMIT"),
    # Largest n accepted by explicit enumeration.
    "ENUMERATION_LIMIT": env.int("EGYPTIAN_ENUMERATION_LIMIT"),
    # DFS nodes allowed per oracle run before aborting with a resource error.
    "ORACLE_NODE_BUDGET": env.int("EGYPTIAN_ORACLE_NODE_BUDGET"),
    "GENERAL_ENUMERATION_MAX_N": env.int("EGYPTIAN_GENERAL_ENUMERATION_MAX_N"),
    # Default worker count for parallel counting and enumeration.
    "THREADS": env.int("EGYPTIAN_THREADS"),
}
