# SPDX-License-Identifier: GPL-3.0-or-later
"""
This module contains code for reading the command line defaults from INI
files. The packaged defaults.ini is always read first.
"""

import os.path
from configparser import ConfigParser, Error as ConfigError

import logging
msg = logging.getLogger(__name__)
import toeplitz_involution
from toeplitz_involution.util import _

DEFAULTS_INI = os.path.join(toeplitz_involution.__path__[0], "defaults.ini")

_integer_keys = {
    ("limits", "max_n"),
    ("limits", "leibniz_max_size"),
}
_string_keys = {
    ("defaults", "ring"),
    ("defaults", "format"),
}


class Settings(object):
    """
    Values used by the command line when no flag overrides them.
    """

    def __init__(self):
        self.max_n = 24
        self.leibniz_max_size = 8
        self.ring = "z"
        self.format = "text"

    def read_ini(self, filename):
        """
        Merge the settings of an INI file. Malformed files and invalid values
        are reported and ignored; the previous values are kept.
        """
        cp = ConfigParser()
        try:
            found = cp.read(filename, encoding="utf-8")
        except ConfigError as e:
            msg.error(_("%s: parse error, ignoring it (%s)"), filename, e)
            return False
        if not found:
            msg.warning(_("%s: cannot read configuration file"), filename)
            return False
        for section in cp.sections():
            for key in cp.options(section):
                if (section, key) in _integer_keys:
                    try:
                        value = cp.getint(section, key)
                    except ValueError:
                        msg.warning(_("%s: ignoring %s.%s (not an integer)"), filename, section, key)
                        continue
                    if value < 1:
                        msg.warning(_("%s: ignoring %s.%s (must be positive)"), filename, section, key)
                        continue
                    setattr(self, key, value)
                elif (section, key) in _string_keys:
                    setattr(self, key, cp.get(section, key).strip())
                else:
                    msg.debug(_("%s: unknown setting %s.%s"), filename, section, key)
        return True


def load_settings(extra=None):
    settings = Settings()
    settings.read_ini(DEFAULTS_INI)
    if extra is not None:
        settings.read_ini(extra)
    return settings
