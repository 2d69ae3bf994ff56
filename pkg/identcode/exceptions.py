# -*- coding: utf-8 -*-
"""
    exceptions

    Keyed user errors shared by every module of the package.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""

__all__ = [
    'ERROR_MESSAGES', 'register_error_messages', 'raise_user_error',
    'UserError', 'InputError', 'DegenerateInstanceError', 'InfeasibleError',
    'TwinsError', 'CapExceededError', 'SolverError',
]

#: key -> %-format template, filled by each module at import time
ERROR_MESSAGES = {}


class UserError(Exception):
    """
    Base class of every error raised through :func:`raise_user_error`.

    :param key: registry key of the message
    :param message: the formatted message
    :param error_args: the values used to format the message
    """
    exit_code = 2

    def __init__(self, key, message, error_args=()):
        super(UserError, self).__init__(message)
        self.key = key
        self.message = message
        self.error_args = tuple(error_args)

    def __str__(self):
        return self.message


class InputError(UserError):
    "Malformed input or violated precondition"
    exit_code = 2


class DegenerateInstanceError(InputError):
    "Set cover instance the reductions refuse to transform"


class InfeasibleError(UserError):
    "No solution exists"
    exit_code = 1


class TwinsError(InfeasibleError):
    "Two vertices share their closed neighbourhood"

    @property
    def pair(self):
        return self.error_args[:2]


class CapExceededError(UserError):
    "Instance is larger than the configured limit"
    exit_code = 3


class SolverError(UserError):
    "An internal post-condition failed"
    exit_code = 1


def register_error_messages(messages):
    """
    Register the error messages of a module.

    Keys must be unique across the package; registering the same key twice
    with a different template is a programming error.
    """
    for key, template in messages.items():
        existing = ERROR_MESSAGES.get(key)
        if existing is not None and existing != template:
            raise ValueError('Error message %r registered twice' % key)
        ERROR_MESSAGES[key] = template


def raise_user_error(key, error_args=(), exception=InputError):
    """
    Raise ``exception`` with the registered message for ``key``.

    :param key: registry key
    :param error_args: tuple used to %-format the template
    :param exception: subclass of :class:`UserError` to raise
    """
    if not isinstance(error_args, tuple):
        error_args = (error_args,)
    template = ERROR_MESSAGES[key]
    message = template % error_args if error_args else template
    raise exception(key, message, error_args)
