# -*- coding: utf-8 -*-
"""
    configuration.py

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import configparser
import logging
import os

from .exceptions import raise_user_error, register_error_messages

__all__ = ['Configuration', 'get_limit', 'CONFIG_ENV']

logger = logging.getLogger(__name__)

CONFIG_ENV = 'IDENTCODE_CONFIG'
PACKAGE_CONFIG = os.path.join(os.path.dirname(__file__), 'identcode.cfg')

register_error_messages({
    'invalid_limit': 'Limit "%s" must be a positive integer, got "%s".',
    'unknown_limit': 'Unknown limit "%s".',
    'config_not_found': 'Configuration file "%s" does not exist.',
})


class Configuration(object):
    """
    Limits and search settings of the package.

    There is a single instance per process: the packaged ``identcode.cfg``,
    overridden by the file named in ``$IDENTCODE_CONFIG`` when set.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            instance = super(Configuration, cls).__new__(cls)
            instance._parser = cls._load()
            cls._instance = instance
        return cls._instance

    @classmethod
    def _load(cls):
        parser = configparser.ConfigParser()
        with open(PACKAGE_CONFIG) as handle:
            parser.read_file(handle)
        override = os.environ.get(CONFIG_ENV)
        if override:
            if not os.path.isfile(override):
                raise_user_error('config_not_found', (override,))
            parser.read(override)
            logger.info('Configuration overridden from %s', override)
        return parser

    @classmethod
    def reset(cls):
        "Forget the loaded configuration so the next access reloads it"
        cls._instance = None

    @property
    def version(self):
        return self._parser.get('identcode', 'version')

    def get_limits(self):
        """Validate and return every configured limit.

        :returns: dict of limit name to positive integer
        """
        limits = {}
        for name, raw in self._parser.items('limits'):
            try:
                value = int(raw)
            except ValueError:
                value = None
            if value is None or value <= 0:
                raise_user_error('invalid_limit', (name, raw))
            limits[name] = value
        return limits

    def get_search(self):
        "Witness search settings as integers"
        return dict(
            (name, int(value))
            for name, value in self._parser.items('search')
        )


def get_limit(name, override=None):
    """
    Return ``override`` when given, else the configured limit ``name``.
    """
    if override is not None:
        return override
    limits = Configuration().get_limits()
    if name not in limits:
        raise_user_error('unknown_limit', (name,))
    return limits[name]
