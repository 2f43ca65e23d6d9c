from django.conf import settings


def ham_setting(key, default):
    """
    Read one entry of ``settings.HAM_SETTINGS``.

    The numeric apps are importable without a configured project (plain
    library use), in which case the coded default is returned.
    """
    if not settings.configured:
        return default
    return getattr(settings, 'HAM_SETTINGS', {}).get(key, default)
