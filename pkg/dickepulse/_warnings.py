##########################################################################################
# dickepulse/_warnings.py
##########################################################################################
"""Definition of classes DickeRWAWarning and DickeNormalizationWarning
"""
##########################################################################################

import warnings


class DickeRWAWarning(UserWarning):
    pass


class DickeNormalizationWarning(UserWarning):
    pass


_WARNING_MESSAGES = set()


def _warn(message, category=DickeRWAWarning):
    """Raise this warning message, but only once."""

    global _WARNING_MESSAGES

    if message in _WARNING_MESSAGES:
        return

    warnings.warn(message, category=category, stacklevel=3)
    _WARNING_MESSAGES.add(message)


def _reset_warnings():
    """Forget which messages have been issued; used by the tests."""

    _WARNING_MESSAGES.clear()

##########################################################################################
