from django.conf import settings


def candidate_limit() -> int:
    return getattr(settings, 'SPLICEKIT_CANDIDATE_LIMIT', 10_000_000)


def default_threads() -> int:
    return max(1, getattr(settings, 'SPLICEKIT_THREADS', 1))


def associativity_limit() -> int:
    return getattr(settings, 'SPLICEKIT_ASSOCIATIVITY_LIMIT', 64)


def associativity_samples() -> int:
    return getattr(settings, 'SPLICEKIT_ASSOCIATIVITY_SAMPLES', 4096)
